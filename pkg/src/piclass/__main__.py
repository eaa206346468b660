import sys

from piclass.cli import main

sys.exit(main())
