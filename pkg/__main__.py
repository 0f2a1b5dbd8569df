"""Allow running the toolkit as a module: python -m src / python __main__.py"""

import sys

from src.main import main

if __name__ == "__main__":
    sys.exit(main())
