import sys

from chromatic_bounds.cli import main

sys.exit(main())
