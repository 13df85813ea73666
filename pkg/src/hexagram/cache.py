"""On-disk trial cache: one JSON record per line, one line per
(triple, prime, seed) computation, append-only and replay-stable.

Field order is fixed so records diff cleanly:
{triple, prime, seed, lines, count, zero_dim, retries, millis}.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .errors import CacheError
from .pipeline import TrialRecord

FIELDS = ("triple", "prime", "seed", "lines", "count", "zero_dim",
          "retries", "millis")


def record_to_json(rec: TrialRecord) -> str:
    payload = {
        "triple": rec.triple,
        "prime": rec.prime,
        "seed": rec.seed,
        "lines": [list(ln) for ln in rec.lines],
        "count": rec.count,
        "zero_dim": rec.zero_dim,
        "retries": rec.retries,
        "millis": rec.millis,
    }
    return json.dumps(payload, separators=(", ", ": "))


def record_from_json(text: str) -> TrialRecord:
    try:
        obj = json.loads(text)
        if tuple(obj.keys()) != FIELDS:
            raise ValueError(f"unexpected fields {tuple(obj.keys())}")
        return TrialRecord(
            triple=obj["triple"],
            prime=int(obj["prime"]),
            seed=None if obj["seed"] is None else int(obj["seed"]),
            lines=tuple(tuple(int(c) for c in ln) for ln in obj["lines"]),
            count=int(obj["count"]),
            zero_dim=bool(obj["zero_dim"]),
            retries=int(obj["retries"]),
            millis=int(obj["millis"]),
        )
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise CacheError(f"corrupt cache line: {exc}: {text[:120]!r}") from exc


def load_cache(path: str | Path) -> dict[tuple, TrialRecord]:
    """All cached records keyed by (triple, prime, seed); a corrupt line
    raises CacheError rather than being skipped."""
    path = Path(path)
    out: dict[tuple, TrialRecord] = {}
    if not path.exists():
        return out
    with path.open() as fh:
        for n, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = record_from_json(line)
            except CacheError as exc:
                raise CacheError(f"{path}:{n}: {exc}") from exc
            out[rec.key()] = rec
    return out


class CacheWriter:
    """Append-only single-writer handle; safe to reopen across runs."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def append(self, rec: TrialRecord) -> None:
        with self.path.open("a") as fh:
            fh.write(record_to_json(rec) + os.linesep)
