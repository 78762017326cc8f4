import sys

from mobiuslab.cli import main

sys.exit(main())
