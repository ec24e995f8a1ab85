"""
Main entry point.
Same surface as `python -m arcfact`, e.g. `python main.py repro "dihedral-*"`.
"""

import sys

from arcfact.cli import main

if __name__ == "__main__":
    sys.exit(main())
