import sys
from psi4opt.cli import main

sys.exit(main())
