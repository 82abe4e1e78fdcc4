"""On-disk memo of expensive results (Groebner dimensions, point counts).

Entries are small JSON files named by a SHA-256 of the request: what was
computed, over which field and order, under which budgets, and the package
version.  A cache hit returns exactly what a cold run would have produced.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from . import __version__

CACHE_ENV = "COMMVAR_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "commvar"


def cache_key(**parts) -> str:
    payload = json.dumps({**parts, "version": __version__}, sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: str | os.PathLike | None = None, enabled: bool = True):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled
        self.hits = 0

    def _path(self, key: str) -> Path:
        return self.directory / key[:2] / f"{key}.json"

    def get(self, key: str):
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            with open(path) as fh:
                value = json.load(fh)["value"]
        except (OSError, ValueError, KeyError):
            return None
        self.hits += 1
        return value

    def put(self, key: str, value) -> None:
        if not self.enabled:
            return
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            json.dump({"value": value}, fh)
        os.replace(tmp, path)

    def memo(self, key: str, compute):
        value = self.get(key)
        if value is None:
            value = compute()
            self.put(key, value)
        return value


NO_CACHE = ResultCache(enabled=False)
