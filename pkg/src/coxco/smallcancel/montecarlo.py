"""Monte Carlo lab for the few-relator random presentation model.

Every trial owns a seed derived from ``(seed, l, trial)`` by SplitMix64
mixing, so a table does not depend on trial order or on how trials are
spread across worker processes.
"""

from __future__ import annotations

import csv
import io
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from coxco.smallcancel.pieces import (
    Presentation,
    incoherence_certificate,
    piece_report,
    symmetrize,
)
from coxco.smallcancel.sampling import sample_cyclically_reduced
from coxco.smallcancel.words import is_proper_power

MASK64 = (1 << 64) - 1
CSV_COLUMNS = ("l", "trials", "c16_rate", "no_pp_rate", "certified_rate", "wilson_lo", "wilson_hi")


class InvalidParameters(ValueError):
    pass


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(seed: int, l: int, trial: int) -> int:
    return splitmix64(splitmix64(splitmix64(seed & MASK64) ^ l) ^ trial)


def wilson_interval(successes: int, trials: int, z: float = 1.959963984540054) -> tuple[float, float]:
    if trials == 0:
        return 0.0, 1.0
    p = successes / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    # the bounds are exactly 0 and 1 at the extremes; rounding would miss them
    lo = 0.0 if successes == 0 else max(0.0, centre - half)
    hi = 1.0 if successes == trials else min(1.0, centre + half)
    return lo, hi


@dataclass(frozen=True)
class RateRow:
    l: int
    trials: int
    c16: int
    no_proper_power: int
    certified: int
    collisions: int

    @property
    def c16_rate(self) -> float:
        return self.c16 / self.trials

    @property
    def no_pp_rate(self) -> float:
        return self.no_proper_power / self.trials

    @property
    def certified_rate(self) -> float:
        return self.certified / self.trials

    def wilson(self, field: str = "certified") -> tuple[float, float]:
        return wilson_interval(getattr(self, field), self.trials)


@dataclass(frozen=True)
class RateTable:
    m: int
    n: int
    seed: int
    rows: tuple[RateRow, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            lo, hi = r.wilson()
            w.writerow([r.l, r.trials, f"{r.c16_rate:.6f}", f"{r.no_pp_rate:.6f}",
                        f"{r.certified_rate:.6f}", f"{lo:.6f}", f"{hi:.6f}"])
        return buf.getvalue()


def random_presentation(m: int, n: int, l: int, rng: random.Random) -> Presentation:
    return Presentation(m, tuple(sample_cyclically_reduced(m, l, rng) for _ in range(n)))


def run_trial(m: int, n: int, l: int, seed: int, trial: int) -> tuple[bool, bool, bool, bool]:
    """``(c16, no proper powers, certified, relator collision)`` for one sample."""
    p = random_presentation(m, n, l, random.Random(trial_seed(seed, l, trial)))
    sym = symmetrize(p)
    pieces = piece_report(p, sym)
    no_pp = all(is_proper_power(r) is None for r in p.relators)
    collision = any(len(prov) > 1 and len({x[0] for x in prov}) > 1 for prov in sym.provenance)
    cert = incoherence_certificate(p, sym, pieces).certified
    return pieces.c_prime_sixth, no_pp, cert, collision


def _run_block(args) -> tuple[int, int, int, int]:
    m, n, l, seed, start, stop = args
    counts = [0, 0, 0, 0]
    for t in range(start, stop):
        for k, flag in enumerate(run_trial(m, n, l, seed, t)):
            counts[k] += flag
    return tuple(counts)


def resolve_workers(workers: int | None = None) -> int:
    if workers is None:
        workers = int(os.environ.get("COXCO_THREADS", "1") or 1)
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def monte_carlo(m: int, n: int, lengths: Sequence[int], trials: int, seed: int,
                workers: int | None = None) -> RateTable:
    if m < 1 or n < 0 or trials < 1 or not lengths or any(l < 1 for l in lengths):
        raise InvalidParameters("need m >= 1, n >= 0, trials >= 1 and lengths >= 1")
    workers = resolve_workers(workers)
    blocks = []
    for l in lengths:
        step = max(1, -(-trials // (workers * 4)))
        blocks.append([(m, n, l, seed, s, min(s + step, trials)) for s in range(0, trials, step)])

    flat = [b for bl in blocks for b in bl]
    if workers == 1:
        results = [_run_block(b) for b in flat]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_block, flat))

    rows, pos = [], 0
    for l, bl in zip(lengths, blocks):
        totals = [0, 0, 0, 0]
        for counts in results[pos:pos + len(bl)]:
            for k in range(4):
                totals[k] += counts[k]
        pos += len(bl)
        rows.append(RateRow(l, trials, *totals))
    return RateTable(m, n, seed, tuple(rows))
