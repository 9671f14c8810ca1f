"""Persistent JSON cache under the directory named by HYPEROCT_CACHE.

Unset variable means caching is disabled.  Writes go to a temporary file
followed by an atomic rename, so concurrent runs never observe torn files.
Corrupt entries are discarded (and rebuilt by the caller); an unwritable
cache directory degrades to a warning on stderr.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile

ENV_VAR = "HYPEROCT_CACHE"


def cache_dir() -> str | None:
    return os.environ.get(ENV_VAR) or None


def load(key: str):
    """Parsed JSON for ``key``, or None if disabled, missing, or corrupt."""
    root = cache_dir()
    if root is None:
        return None
    path = os.path.join(root, key + ".json")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError):
        return None


def store(key: str, obj) -> bool:
    """Serialize ``obj`` under ``key``; returns False if caching is unavailable."""
    root = cache_dir()
    if root is None:
        return False
    path = os.path.join(root, key + ".json")
    try:
        os.makedirs(root, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(obj, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return True
    except OSError as exc:
        print(f"hyperoct: cache unavailable ({exc}); proceeding uncached", file=sys.stderr)
        return False
