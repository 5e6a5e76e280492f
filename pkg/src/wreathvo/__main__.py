import sys

from wreathvo.cli import main

sys.exit(main())
