"""Compare the compiled kernel backend against the pure numpy fallback.

Thin wrapper over `jordanalg bench`; accepts the same flags.
"""

import sys

from jordanalg.cli import main

if __name__ == "__main__":
    sys.exit(main(["bench"] + sys.argv[1:]))
