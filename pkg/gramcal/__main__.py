import sys

from gramcal.cli.main import main

sys.exit(main())
