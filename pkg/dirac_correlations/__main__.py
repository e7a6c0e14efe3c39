import sys

from dirac_correlations.cli import main

sys.exit(main())
