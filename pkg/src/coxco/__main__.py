import sys

from coxco.cli import main

sys.exit(main())
