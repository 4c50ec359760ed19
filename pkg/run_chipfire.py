#!/usr/bin/env python3
"""
Script to run chipfire commands.
"""

import sys

from chipfire.cli import main

if __name__ == '__main__':
    sys.exit(main())
