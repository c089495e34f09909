# (C) 2026 kdyck contributors
import sys

from kdyck.cli import main

sys.exit(main())
