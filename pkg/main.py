"""
Entry point: `python3 main.py <command> ...` is the same as `python -m cli`.

config is imported first so a local .env is loaded before anything reads it.
"""

import sys

import config  # noqa: F401
from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
