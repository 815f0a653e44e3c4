#!/usr/bin/env python3
"""Simple script to run the sge-elliptic command line."""

from sge_elliptic.main import run

if __name__ == "__main__":
    run()
