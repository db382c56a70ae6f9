#!/usr/bin/env python
"""
gfree - 命令列執行腳本

Usage:
    python gfree.py gb <problem.txt>
    python gfree.py witness <problem.txt> [--refine]
    python gfree.py fibers <problem.txt> --points 3,5,7 --bound 4
    python gfree.py det --m 2 --n 3 --t 2 [--ring ZZ] [--coeffs coeffs.yaml]
    python gfree.py info
"""

import sys
from pathlib import Path

# 添加 src 目錄到路徑
src_path = Path(__file__).parent / 'src'
sys.path.insert(0, str(src_path))

from gfree.cli import main

if __name__ == '__main__':
    main()
