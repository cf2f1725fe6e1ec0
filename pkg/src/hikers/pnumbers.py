"""Exhaustive decision of the finite statements P_r(N, n, k) and exact p(k, r, n).

P_r(N, n, k): every coloring of the (r+1)-subsets of {0, ..., N-1} with n
colors admits an end-homogeneous sequence of length k. Two readings are
supported: ``sequence`` (any increasing sequence) and ``track`` (the point
sequence of some hiker's track).

Colorings are enumerated as an odometer over the colex-ordered color vector,
first subset most significant, so coloring index i is the i-th tuple of
``itertools.product(range(n), repeat=C(N, r+1))``. Whole subtrees of the
odometer are settled at once when a shared prefix already has a witness.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable, Sequence

from .coloring import Coloring, write_krt
from .combinatorics import binomial
from .homogeneity import search_sequence
from .track import track_points

log = logging.getLogger(__name__)

VARIANTS = ("sequence", "track")
DEFAULT_BUDGET = 10**8
# below this many colorings a process pool costs more than it saves
_PARALLEL_THRESHOLD = 20_000


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int, lower_bound: int | None = None):
        self.required = required
        self.budget = budget
        self.lower_bound = lower_bound
        msg = f"search needs {required} colorings, budget is {budget}"
        if lower_bound is not None:
            msg += f"; p > {lower_bound}"
        super().__init__(msg)


class BoundViolation(AssertionError):
    """An exact value is not strictly below its upper bound."""


@dataclass(frozen=True)
class StatementSpec:
    ground_size: int
    arity: int
    num_colors: int
    target_length: int
    variant: str = "track"

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.arity < 0 or self.num_colors < 1 or self.target_length < 1:
            raise ValueError(f"invalid statement parameters {self}")
        if self.ground_size < self.arity + 1:
            raise ValueError(f"ground size {self.ground_size} below tuple size {self.arity + 1}")

    @property
    def tuple_size(self) -> int:
        return self.arity + 1

    @property
    def space_size(self) -> int:
        return self.num_colors ** binomial(self.ground_size, self.tuple_size)


@dataclass(frozen=True)
class StatementResult:
    holds: bool
    colorings_checked: int
    counterexample: Coloring | None = None
    searches: int = 0

    def __bool__(self) -> bool:
        return self.holds


def _has_new_witness(colors: Sequence[int], t: int, M: int, k: int, variant: str) -> bool:
    """Witness within the first M points that uses point M - 1.

    Callers only ask after M - 1 points were found witness-free, so no other
    kind of witness can exist.
    """
    if variant == "sequence":
        return search_sequence(colors, t, M, k, end_at_last=True) is not None
    return len(track_points(colors, t, M - 1)) >= k


def _has_witness(colors: Sequence[int], t: int, N: int, k: int, variant: str) -> bool:
    if variant == "sequence":
        return search_sequence(colors, t, N, k) is not None
    return any(len(track_points(colors, t, x)) >= k for x in range(k - 1, N))


def _first_failure_plain(t: int, N: int, n: int, k: int, variant: str, prefix: tuple[int, ...]):
    """Unpruned odometer: one full witness search per coloring."""
    searches = 0
    for rest in product(range(n), repeat=comb(N, t) - len(prefix)):
        colors = prefix + rest
        searches += 1
        if not _has_witness(colors, t, N, k, variant):
            return colors, searches
    return None, searches


def _first_failure(t: int, N: int, n: int, k: int, variant: str, prefix: tuple[int, ...]):
    """Smallest coloring extending ``prefix`` without a witness, or None; plus the search count.

    Walks the odometer point by point. The colors of subsets inside the first
    M points form the restricted coloring on M points (colex order), and a
    witness there is a witness of every extension, so such subtrees are
    skipped whole.
    """
    sizes = [comb(M, t) for M in range(N + 1)]
    colors = list(prefix)
    searches = 0

    def rec(M: int) -> bool:
        nonlocal searches
        if M >= max(k, t):
            searches += 1
            if _has_new_witness(colors, t, M, k, variant):
                return False
        if M == N:
            return True
        lo = max(len(colors), sizes[M])
        for block in product(range(n), repeat=max(0, sizes[M + 1] - lo)):
            colors[lo:] = block
            if rec(M + 1):
                return True
        del colors[lo:]
        return False

    found = rec(t - 1)
    return (tuple(colors) if found else None), searches


def statement_holds(
    spec: StatementSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = 1,
    prune: bool = True,
) -> StatementResult:
    """Decide the statement over every coloring.

    The result carries the smallest-index counterexample when the statement
    fails. ``colorings_checked`` counts colorings decided up to and including
    that counterexample (all of them when it holds), independent of
    ``workers``; ``searches`` counts witness searches actually run.
    ``prune=False`` runs one full search per coloring instead.
    """
    total = spec.space_size
    if total > budget:
        raise BudgetExceeded(total, budget)
    t, N, n, k = spec.tuple_size, spec.ground_size, spec.num_colors, spec.target_length
    m = binomial(N, t)
    scan = _first_failure if prune else _first_failure_plain
    workers = workers or os.cpu_count() or 1
    if workers == 1 or total < _PARALLEL_THRESHOLD:
        fail, searches = scan(t, N, n, k, spec.variant, ())
    else:
        depth = 1
        while n**depth < 4 * workers and depth < m:
            depth += 1
        fail, searches = None, 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(scan, t, N, n, k, spec.variant, p) for p in product(range(n), repeat=depth)]
            for i, fut in enumerate(futures):
                fail, count = fut.result()
                searches += count
                if fail is not None:
                    for later in futures[i + 1:]:
                        later.cancel()
                    break
    if fail is None:
        return StatementResult(True, total, searches=searches)
    index = 0
    for d in fail:
        index = index * n + d
    return StatementResult(False, index + 1, Coloring(N, t, n, fail), searches)


def theorem9_bound(k: int, r: int, n: int) -> int:
    """Exclusive upper bound r + 1 + sum_{i=0}^{k-2} n^C(r+i, r) on p(k, r, n).

    Defined for positive r, n, k; for k = 1 the sum is empty and r + 1 is returned.
    """
    if r < 1:
        raise ValueError("the bound needs r >= 1")
    if n < 1 or k < 1:
        raise ValueError(f"k and n must be positive, got k={k} n={n}")
    return r + 1 + sum(n ** binomial(r + i, r) for i in range(k - 1))


@dataclass
class PNumberReport:
    k: int
    r: int
    n: int
    variant: str
    p: int
    bound: int | None
    counterexample: Coloring | None
    colorings_checked: int
    elapsed: float

    @property
    def ok(self) -> bool | None:
        """p < bound; None when the bound does not apply (r = 0)."""
        return None if self.bound is None else self.p < self.bound

    def to_row(self, timing: bool = True) -> dict:
        row = {
            "k": self.k,
            "r": self.r,
            "n": self.n,
            "variant": self.variant,
            "p": self.p,
            "bound": str(self.bound) if self.bound is not None else "n/a (r=0)",
            "ok": self.ok,
            "counterexample_krt": write_krt(self.counterexample) if self.counterexample else None,
            "colorings_checked": self.colorings_checked,
        }
        if timing:
            row["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return row


def exact_p(
    k: int,
    r: int,
    n: int,
    variant: str = "track",
    budget: int = DEFAULT_BUDGET,
    workers: int | None = 1,
    prune: bool = True,
) -> PNumberReport:
    """Least N for which every n-coloring of (r+1)-subsets of N points has a length-k witness.

    Scans N upward from max(k, r+1). Raises BudgetExceeded carrying the
    lower bound established so far when an N is too large to enumerate.
    """
    if r < 0 or n < 1 or k < 1:
        raise ValueError(f"need r >= 0, n >= 1, k >= 1, got k={k} r={r} n={n}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    start = time.perf_counter()
    bound = theorem9_bound(k, r, n) if r >= 1 else None
    N = max(k, r + 1)
    checked = 0
    counterexample = None
    # k <= r + 1 leaves no index tuple to check: every length-k sequence is a witness
    while k > r + 1:
        spec = StatementSpec(N, r, n, k, variant)
        try:
            res = statement_holds(spec, budget, workers, prune)
        except BudgetExceeded as exc:
            raise BudgetExceeded(exc.required, budget, lower_bound=N - 1) from None
        checked += res.colorings_checked
        if res.holds:
            break
        log.debug("P_%d(%d, %d, %d) fails", r, N, n, k)
        counterexample = res.counterexample
        N += 1
    report = PNumberReport(k, r, n, variant, N, bound, counterexample, checked, time.perf_counter() - start)
    # with k = 1 the bound degenerates to r + 1 = p; only k >= 2 is a real claim
    if bound is not None and k >= 2 and not report.ok:
        raise BoundViolation(f"p({k},{r},{n}) = {N} is not below {bound}")
    return report


def verify_bound_grid(
    grid: Iterable[tuple[int, int, int]],
    variant: str = "track",
    budget: int = DEFAULT_BUDGET,
    workers: int | None = 1,
) -> list[dict]:
    """One row per (k, r, n) cell; cells over budget get an ``error`` row instead."""
    rows = []
    for k, r, n in grid:
        try:
            rows.append(exact_p(k, r, n, variant, budget, workers).to_row())
        except BudgetExceeded as exc:
            rows.append({
                "k": k, "r": r, "n": n, "variant": variant,
                "error": str(exc), "lower_bound": exc.lower_bound,
            })
    return rows


def rows_to_jsonl(rows: Iterable[dict]) -> str:
    return "".join(json.dumps(row, sort_keys=True) + "\n" for row in rows)
