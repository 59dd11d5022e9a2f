"""
ToT-Privacy - punto de entrada del proceso
"""

import sys

from core.cli import main

if __name__ == "__main__":
    sys.exit(main())
