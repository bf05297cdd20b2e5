"""Allow ``python -m gsqgpatch``."""
import sys

from gsqgpatch.cli import main

sys.exit(main())
