"""
Entry point for the wpgap command-line tool.

Usage:
    python main.py enumerate --genus 5 --sorted
    python main.py verify theorem --gamma 3 --genus-range 16:40
    python main.py table thresholds --gamma-range 3:6
"""

import sys

from wpgap.cli import main

if __name__ == "__main__":
    sys.exit(main())
