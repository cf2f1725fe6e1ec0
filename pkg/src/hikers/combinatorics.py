"""Exact subset combinatorics: binomials and colex ranking of fixed-size subsets.

Colex order compares subsets by their largest differing element. The rank of
a t-subset of {0, ..., N-1} does not depend on N, so a coloring of a larger
ground set restricts to a smaller one by taking an array prefix.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k) in exact integer arithmetic; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be non-negative, got ({n}, {k})")
    return comb(n, k)


def _check_increasing(s: Sequence[int]) -> None:
    for i, v in enumerate(s):
        if v < 0:
            raise ValueError(f"subset members must be non-negative, got {v}")
        if i and s[i - 1] >= v:
            raise ValueError(f"subset must be strictly increasing, got {list(s)}")


def colex_rank(s: Sequence[int]) -> int:
    """Rank of the strictly increasing subset ``s`` among subsets of size len(s)."""
    if not s:
        raise ValueError("colex_rank needs a non-empty subset")
    _check_increasing(s)
    return sum(comb(v, i + 1) for i, v in enumerate(s))


def colex_unrank(rank: int, t: int) -> tuple[int, ...]:
    """Inverse of :func:`colex_rank` for t-subsets."""
    if rank < 0 or t < 1:
        raise ValueError(f"need rank >= 0 and t >= 1, got ({rank}, {t})")
    out = []
    for i in range(t, 0, -1):
        # largest c with C(c, i) <= rank
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        out.append(c)
        rank -= comb(c, i)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def colex_subsets(N: int, t: int) -> tuple[tuple[int, ...], ...]:
    """All t-subsets of range(N), listed in colex order (index == rank)."""
    return tuple(sorted(combinations(range(N), t), key=lambda s: s[::-1]))


@lru_cache(maxsize=None)
def binomial_table(rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    """``table[v][j] == C(v, j)`` for v < rows, j < cols. Used by the hot loops."""
    return tuple(tuple(comb(v, j) for j in range(cols)) for v in range(rows))
