"""Allow running qsr-lab as: python -m qsrlab"""
import sys

from qsrlab.cli import main

sys.exit(main())
