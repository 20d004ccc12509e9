# src/lapco/__main__.py
"""
Entry point for running lapco as a module.
Example: python -m lapco coeffs graph.g --oracle
"""
import sys

from .core import cli

if __name__ == "__main__":
    sys.exit(cli.main())
