import sys

from spacing.main import main

sys.exit(main())
