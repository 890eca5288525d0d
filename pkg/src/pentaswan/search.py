"""Exhaustive survey of equally gapped pentanomials over (n, s) ranges.

The pipeline is: enumerate shapes in deterministic (n, s) order, classify
each one (closed-form certificate, square short-circuit, small-factor
prefilter, then the full irreducibility test for survivors), and aggregate
statistics.  Classification of distinct shapes is embarrassingly parallel;
work is sharded by n so that each worker owns whole n-columns and the
merged output order never depends on the worker count.
"""

from __future__ import annotations

import csv
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

from . import gf2poly, swan
from .gf2poly import PentShape
from .zpoly import ConsistencyError

__all__ = [
    "ARBITRARY_POLY_BASELINE",
    "CSV_HEADER",
    "OUTCOMES",
    "SearchRecord",
    "SurveyStats",
    "classify_shape",
    "enumerate_shapes",
    "read_csv",
    "read_jsonl",
    "stats",
    "survey",
    "write_csv",
    "write_jsonl",
]

# outcome tokens, as they appear in the CSV/JSONL output
IRREDUCIBLE = "irr"
REDUCIBLE_THM1 = "red_thm1"
REDUCIBLE_SQUARE = "red_square"
REDUCIBLE_SMALL_FACTOR = "red_smallfac"
REDUCIBLE_FULL_TEST = "red_full"
ERROR = "error"

OUTCOMES = (
    IRREDUCIBLE,
    REDUCIBLE_THM1,
    REDUCIBLE_SQUARE,
    REDUCIBLE_SMALL_FACTOR,
    REDUCIBLE_FULL_TEST,
    ERROR,
)

CSV_HEADER = ("n", "s", "outcome", "elapsed_us")

# reported irreducibility frequency among arbitrary binary polynomials of
# comparable degree (excluding those with roots in GF(2)); comparison
# constant only, not recomputed here
ARBITRARY_POLY_BASELINE = 0.0013

DEFAULT_PREFILTER_DEPTH = 13


@dataclass(frozen=True)
class SearchRecord:
    """One classified (n, s) shape.  ``factor_bound`` is the degree at
    which the small-factor prefilter hit, for red_smallfac outcomes."""

    n: int
    s: int
    outcome: str
    elapsed_us: int = 0
    factor_bound: int | None = None

    @property
    def key(self) -> tuple[int, int, str]:
        return (self.n, self.s, self.outcome)


def enumerate_shapes(
    n_lo: int, n_hi: int, s_parity: str = "even", n_parity: str = "odd"
) -> Iterator[PentShape]:
    """All valid shapes with n_lo <= n < n_hi, ascending in (n, s).

    ``s_parity`` selects even or odd gap; ``n_parity`` is "odd" to restrict
    to odd degrees or "all".  An empty range yields nothing.
    """
    if s_parity not in ("even", "odd"):
        raise ValueError("s_parity must be 'even' or 'odd'")
    if n_parity not in ("odd", "all"):
        raise ValueError("n_parity must be 'odd' or 'all'")
    if n_lo < 7:
        raise ValueError("n_lo must be at least 7")
    s_start = 2 if s_parity == "even" else 1
    for n in range(n_lo, n_hi):
        if n_parity == "odd" and n % 2 == 0:
            continue
        for s in range(s_start, (n - 1) // 3 + 1, 2):
            yield PentShape(n, s)


def classify_shape(
    shape: PentShape,
    prune: bool = True,
    prefilter_depth: int = DEFAULT_PREFILTER_DEPTH,
) -> tuple[str, int | None]:
    """Classify one shape; returns (outcome, prefilter factor bound)."""
    n, s = shape.n, shape.s
    if prune and s % 2 == 0 and swan.thm1_reducible(shape):
        return REDUCIBLE_THM1, None
    if n % 2 == 0 and s % 2 == 0:
        # every exponent even: the polynomial is a perfect square
        return REDUCIBLE_SQUARE, None
    p = gf2poly.pent_poly(shape)
    if prefilter_depth > 0:
        bound = gf2poly._smallest_factor_degree_le(p.bits, min(prefilter_depth, n - 1))
        if bound is not None:
            return REDUCIBLE_SMALL_FACTOR, bound
    if gf2poly.is_irreducible(p):
        if s % 2 == 0 and n % 8 not in (1, 7):
            # the even-s closed form forbids this residue; finding one
            # irreducible here would mean the theory or the test is broken
            raise ConsistencyError(
                f"irreducible (n={n}, s={s}) with n = {n % 8} (mod 8)"
            )
        return IRREDUCIBLE, None
    return REDUCIBLE_FULL_TEST, None


def _classify_timed(ns: tuple[int, int], prune: bool, depth: int):
    t0 = time.perf_counter_ns()
    try:
        outcome, bound = classify_shape(PentShape(ns[0], ns[1]), prune, depth)
    except Exception:  # anomalies become records, never abort the run
        outcome, bound = ERROR, None
    return ns[0], ns[1], outcome, (time.perf_counter_ns() - t0) // 1000, bound


def _classify_chunk(args):
    chunk, prune, depth = args
    return [_classify_timed(ns, prune, depth) for ns in chunk]


def _chunks_by_n(shapes: Iterable[PentShape], prune, depth):
    chunk: list[tuple[int, int]] = []
    for sh in shapes:
        if chunk and chunk[-1][0] != sh.n:
            yield chunk, prune, depth
            chunk = []
        chunk.append((sh.n, sh.s))
    if chunk:
        yield chunk, prune, depth


def survey(
    shapes: Iterable[PentShape],
    prune: bool = True,
    prefilter_depth: int = DEFAULT_PREFILTER_DEPTH,
    jobs: int | None = 1,
) -> Iterator[SearchRecord]:
    """Classify every shape, yielding records in input order.

    ``jobs`` > 1 classifies n-columns in a process pool; the output order
    and contents are independent of the worker count (only elapsed_us
    varies).  ``jobs=None`` uses all cores.
    """
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1:
        for sh in shapes:
            yield SearchRecord(*_classify_timed((sh.n, sh.s), prune, prefilter_depth))
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk_args = _chunks_by_n(shapes, prune, prefilter_depth)
        for rows in pool.map(_classify_chunk, chunk_args):
            for row in rows:
                yield SearchRecord(*row)


@dataclass
class SurveyStats:
    """Aggregates of a survey run; histograms cover irreducible records."""

    total_checked: int = 0
    total_irreducible: int = 0
    n_mod8: dict[int, int] | None = None
    s_mod8: dict[int, int] | None = None
    distinct_n_with_irr: int = 0

    @property
    def frequency(self) -> float:
        return self.total_irreducible / self.total_checked if self.total_checked else 0.0

    def to_json_dict(self) -> dict:
        return {
            "total_checked": self.total_checked,
            "total_irreducible": self.total_irreducible,
            "n_mod8": {str(r): self.n_mod8[r] for r in range(8)},
            "s_mod8": {str(r): self.s_mod8[r] for r in range(8)},
            "distinct_n_with_irr": self.distinct_n_with_irr,
            "frequency": self.frequency,
            "arbitrary_poly_baseline": ARBITRARY_POLY_BASELINE,
        }


def stats(records: Iterable[SearchRecord]) -> SurveyStats:
    """Totals, mod-8 histograms over the irreducible records, and the
    irreducibility frequency among everything checked."""
    n_hist = {r: 0 for r in range(8)}
    s_hist = {r: 0 for r in range(8)}
    total = 0
    irr = 0
    irr_ns: set[int] = set()
    for rec in records:
        total += 1
        if rec.outcome == IRREDUCIBLE:
            irr += 1
            n_hist[rec.n % 8] += 1
            s_hist[rec.s % 8] += 1
            irr_ns.add(rec.n)
    return SurveyStats(total, irr, n_hist, s_hist, len(irr_ns))


# ---------------------------------------------------------------------------
# flat-file round trips
# ---------------------------------------------------------------------------

def write_csv(records: Iterable[SearchRecord], out: TextIO) -> int:
    """Write the survey CSV (header n,s,outcome,elapsed_us); returns rows."""
    w = csv.writer(out)
    w.writerow(CSV_HEADER)
    count = 0
    for rec in records:
        w.writerow((rec.n, rec.s, rec.outcome, rec.elapsed_us))
        count += 1
    return count


def read_csv(src: TextIO) -> list[SearchRecord]:
    r = csv.reader(src)
    header = next(r, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"expected CSV header {','.join(CSV_HEADER)}")
    return [
        SearchRecord(int(n), int(s), outcome, int(elapsed))
        for n, s, outcome, elapsed in r
    ]


def write_jsonl(records: Iterable[SearchRecord], out: TextIO) -> int:
    count = 0
    for rec in records:
        out.write(
            json.dumps(
                {"n": rec.n, "s": rec.s, "outcome": rec.outcome, "elapsed_us": rec.elapsed_us}
            )
        )
        out.write("\n")
        count += 1
    return count


def read_jsonl(src: TextIO) -> list[SearchRecord]:
    out = []
    for line in src:
        if line.strip():
            d = json.loads(line)
            out.append(SearchRecord(d["n"], d["s"], d["outcome"], d["elapsed_us"]))
    return out


def checkpoint_restart_n(records: Sequence[SearchRecord]) -> int | None:
    """Where to restart an interrupted append-ordered run: the largest n in
    the file, whose records may be incomplete and must be redone."""
    return max((rec.n for rec in records), default=None)
