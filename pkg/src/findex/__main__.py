import sys

from findex.cli import main

sys.exit(main())
