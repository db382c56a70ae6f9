"""
命令列介面模組
"""

from .main import cli, create_parser, main, setup_logging

__all__ = ["cli", "create_parser", "main", "setup_logging"]
