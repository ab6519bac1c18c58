import os
from pathlib import Path

# Keep sieve/cache artifacts inside the repo so test runs are hermetic and
# the (one-time) sieve build is reused across sessions.
_CACHE = Path(__file__).resolve().parent.parent / ".cache"
os.environ.setdefault("MDS_CACHE_DIR", str(_CACHE))
