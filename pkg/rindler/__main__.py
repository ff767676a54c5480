import sys

from rindler.cli import main

sys.exit(main())
