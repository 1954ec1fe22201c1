import sys

from ncmod.cli import main

sys.exit(main())
