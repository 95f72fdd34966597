import sys

from rotsign.cli import main

sys.exit(main())
