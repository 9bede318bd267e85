# coding: utf-8

"""
Entry point for ``python -m jpegqf``.
"""

from jpegqf.cli import main


main()
