from __future__ import annotations

import sys
from pathlib import Path


# Ensure project root is on sys.path so `import src...` works, and the tests
# directory so the shared hypothesis strategies can be imported.
ROOT_DIR = Path(__file__).resolve().parents[1]
TESTS_DIR = Path(__file__).resolve().parent
for path in (ROOT_DIR, TESTS_DIR):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))
