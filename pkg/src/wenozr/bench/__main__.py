import sys

from wenozr.bench.cli import main

sys.exit(main())
