"""Table reproduction: run (or resume) the 77 orbit representatives,
compare against the published values, and render the report."""

from __future__ import annotations

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cache import CacheWriter, load_cache
from .labels import enumerate_orbits, sort_triple, triple_str
from .pipeline import (RunConfig, TrialRecord, intersection_number,
                       run_trial, trial_seed)
from .table_data import known_colour, known_value

log = logging.getLogger(__name__)


@dataclass
class ReportRow:
    index: int                     # 1..77
    triple: str
    stabilizer: str                # trivial | Z2 | Z2xZ2 | order n
    colour: str                    # red | blue | brown | plain
    count: int | None
    expected: int
    agrees: bool
    disagreement: bool
    trials: list[TrialRecord]


def _run_one(args):
    triple_text, prime, seed, retry_limit, path = args
    from .labels import parse_triple
    return run_trial(parse_triple(triple_text), prime, seed, retry_limit, path=path)


def table_report(config: RunConfig, cache_path=None, only=None,
                 progress=None) -> list[ReportRow]:
    """Compute (or load from cache) consensus counts for the orbit
    representatives and compare with the published table.

    `only` restricts to the given triples; trials already in the cache
    are not recomputed, so interrupted runs resume for free.
    """
    cached = load_cache(cache_path) if cache_path else {}
    writer = CacheWriter(cache_path) if cache_path else None
    orbits = enumerate_orbits()
    wanted = None if only is None else {sort_triple(t) for t in only}
    jobs = []
    for orb in orbits:
        if wanted is not None and orb.representative not in wanted:
            continue
        text = triple_str(orb.representative)
        for i in range(config.trials):
            prime = config.primes[i % len(config.primes)]
            seed = trial_seed(config, orb.representative, prime, i)
            if (text, prime, seed) not in cached:
                jobs.append((text, prime, seed, config.retry_limit, config.path))
    if jobs:
        log.info("running %d trials (%d workers)", len(jobs), config.workers)
        if config.workers > 1:
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                for rec in pool.map(_run_one, jobs):
                    cached[rec.key()] = rec
                    if writer:
                        writer.append(rec)
                    if progress:
                        progress(rec)
        else:
            for job in jobs:
                rec = _run_one(job)
                cached[rec.key()] = rec
                if writer:
                    writer.append(rec)
                if progress:
                    progress(rec)
    rows: list[ReportRow] = []
    for idx, orb in enumerate(orbits, 1):
        if wanted is not None and orb.representative not in wanted:
            continue
        result = intersection_number(orb.representative, config, cached=cached,
                                     sink=writer.append if writer else None)
        expected = known_value(orb.representative)
        rows.append(ReportRow(
            index=idx,
            triple=triple_str(orb.representative),
            stabilizer=orb.stabilizer_class,
            colour=known_colour(orb.representative),
            count=result.consensus,
            expected=expected,
            agrees=result.consensus == expected,
            disagreement=result.disagreement,
            trials=result.trials,
        ))
    return rows


def render_rows(rows: list[ReportRow], stream=None) -> None:
    stream = stream or sys.stdout
    width = max(len(r.triple) for r in rows) + 2
    print(f"{'#':>3} {'triple':<{width}} {'stab':<8} {'IN':>4} "
          f"{'published':>9}  status", file=stream)
    for r in rows:
        status = ("DISAGREEMENT" if r.disagreement
                  else "ok" if r.agrees else "MISMATCH")
        shown = "?" if r.count is None else str(r.count)
        print(f"{r.index:>3} {r.triple:<{width}} {r.stabilizer:<8} "
              f"{shown:>4} {r.expected:>9}  {status}", file=stream)
    bad = [r for r in rows if not r.agrees]
    print(f"{len(rows) - len(bad)} / {len(rows)} entries match the published table",
          file=stream)
    for r in bad:
        for t in r.trials:
            print(f"  evidence {r.triple}: p={t.prime} seed={t.seed} "
                  f"count={t.count} retries={t.retries} {t.millis}ms", file=stream)


def render_records(rows: list[ReportRow], stream=None) -> None:
    from .cache import record_to_json
    stream = stream or sys.stdout
    for r in rows:
        for t in r.trials:
            print(record_to_json(t), file=stream)


def orbit_listing(stream=None) -> None:
    stream = stream or sys.stdout
    for idx, orb in enumerate(enumerate_orbits(), 1):
        print(f"{idx:>3}  {triple_str(orb.representative):<32} "
              f"size {orb.size:>5}  stabiliser {orb.stabilizer_class}",
              file=stream)
    print("77 orbits; sizes sum to 34220", file=stream)
