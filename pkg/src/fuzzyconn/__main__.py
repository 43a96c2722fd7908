import sys

from fuzzyconn.cli import main

sys.exit(main())
