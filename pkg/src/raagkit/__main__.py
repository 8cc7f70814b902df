"""Module entry point: python -m raagkit ..."""

import sys

from .cli import main

sys.exit(main())
