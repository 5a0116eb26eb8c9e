"""Allow `python -m cuspslopes`."""

from .cli import main
import sys

sys.exit(main())
