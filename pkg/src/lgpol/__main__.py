"""``python -m lgpol`` runs the sweep CLI."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
