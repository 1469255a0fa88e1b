"""On-disk cache of moment tables.

One JSON file per ``r_max`` holding raw moments column by column as exact
``"p/q"`` strings; central and normalized moments are rebuilt from them on
load.  Files written by another package version are ignored.  A lock file
serialises concurrent processes sharing the directory.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from filelock import FileLock

from . import __version__
from .exact import rat_str
from .moments import MomentTable, moment_table_range

CACHE_FORMAT = "matchmoments-moment-cache"
CACHE_VERSION = 1


class MomentCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path(self, r_max: int) -> Path:
        return self.directory / f"moments-r{r_max}.json"

    def _lock(self) -> FileLock:
        return FileLock(str(self.directory / ".lock"))

    def _load(self, r_max: int) -> dict[int, list[Fraction]]:
        path = self.path(r_max)
        if not path.exists():
            return {}
        try:
            doc = json.loads(path.read_text())
        except (OSError, ValueError):
            return {}
        if (doc.get("format") != CACHE_FORMAT or doc.get("version") != CACHE_VERSION
                or doc.get("artifact_version") != __version__ or doc.get("r_max") != r_max):
            return {}
        cols = doc["columns"]
        rows = {}
        for i, n in enumerate(cols["n"]):
            rows[int(n)] = [Fraction(cols[f"m{r}"][i]) for r in range(r_max + 1)]
        return rows

    def _store(self, r_max: int, rows: dict[int, list[Fraction]]) -> None:
        ns = sorted(rows)
        columns = {"n": ns}
        for r in range(r_max + 1):
            columns[f"m{r}"] = [rat_str(rows[n][r]) for n in ns]
        doc = {
            "format": CACHE_FORMAT,
            "version": CACHE_VERSION,
            "artifact_version": __version__,
            "r_max": r_max,
            "columns": columns,
        }
        path = self.path(r_max)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc))
        os.replace(tmp, path)

    def tables(self, n_min: int, n_max: int, r_max: int, workers: int = 1) -> list[MomentTable]:
        """Moment tables for ``n_min..n_max``, computing and storing whatever is missing."""
        if not 1 <= n_min <= n_max:
            raise ValueError(f"invalid n range {n_min}..{n_max}")
        self.directory.mkdir(parents=True, exist_ok=True)
        with self._lock():
            rows = self._load(r_max)
            missing = [n for n in range(n_min, n_max + 1) if n not in rows]
            if missing:
                # contiguous recompute keeps the worker pool simple
                fresh = moment_table_range(min(missing), max(missing), r_max, workers)
                for t in fresh:
                    rows.setdefault(t.n, list(t.raw))
                self._store(r_max, rows)
        return [MomentTable.from_raw(n, rows[n]) for n in range(n_min, n_max + 1)]
