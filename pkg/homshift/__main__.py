import sys

from homshift.cli import main

sys.exit(main())
