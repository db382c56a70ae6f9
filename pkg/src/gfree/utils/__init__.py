"""
工具函數模組
"""

from .file_utils import FileUtils
from .batch_processor import BatchProcessor

__all__ = ["FileUtils", "BatchProcessor"]
