import sys

from arcfact.cli import main

sys.exit(main())
