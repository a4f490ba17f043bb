import sys

from webbasis.main import main

sys.exit(main())
