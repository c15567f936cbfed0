import sys
from pathlib import Path

# Prefer the repo copy of the package over any installed one.
SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))
