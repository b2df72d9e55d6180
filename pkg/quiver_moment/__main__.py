"""Allow running the command line with ``python -m quiver_moment``."""

import sys

from .cli import main

sys.exit(main())
