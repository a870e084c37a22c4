"""Append-only JSONL store of oracle records.

Each line is either a RexRecord row (``"kind": "rex"``) or a free-form
finding (``"kind": "finding"``), e.g. a small-n disagreement between a
closed form and the brute force.  The last matching row wins on lookup.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Iterator, Optional, Union

from .rex import RexRecord

ENV_VAR = "REXLAB_CACHE"


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "rexlab" / "rex.jsonl"


def record_line(record: RexRecord) -> str:
    return json.dumps(record.to_json(), sort_keys=True)


class RexCache:
    def __init__(self, path: Union[str, Path, None] = None):
        self.path = Path(path) if path is not None else default_cache_path()

    def rows(self) -> Iterator[dict]:
        if not self.path.exists():
            return
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield json.loads(line)

    def lookup(self, key: tuple) -> Optional[RexRecord]:
        """Latest exhaustive record with this key, if any."""
        hit = None
        for row in self.rows():
            if row.get("kind") != "rex":
                continue
            rec = RexRecord.from_json(row["record"])
            if rec.key() == key and rec.exhaustive:
                hit = rec
        return hit

    def _append(self, row: dict) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(row, sort_keys=True) + "\n")

    def store(self, record: RexRecord) -> None:
        self._append({"kind": "rex", "record": record.to_json()})

    def log_finding(self, finding: dict) -> None:
        self._append({"kind": "finding", **finding})

    def clear(self) -> None:
        if self.path.exists():
            self.path.unlink()
