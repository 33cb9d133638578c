import sys

from charp.cli import main

sys.exit(main())
