import sys

from coxfact.cli import main

sys.exit(main())
