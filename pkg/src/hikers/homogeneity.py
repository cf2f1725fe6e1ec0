"""End-homogeneous witnesses, monochromatic extraction and the track trie.

A sequence a_0 < a_1 < ... is end-homogeneous for a coloring of
(n+1)-subsets when the color of {a_i0, ..., a_i(n-1), a_j} never depends on
the choice of the last index j > i(n-1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from .coloring import Coloring
from .combinatorics import colex_subsets
from .track import all_hiker_maps, build_track, track_points


@dataclass(frozen=True)
class WitnessSequence:
    points: tuple[int, ...]
    arity: int
    verified: bool = False


@dataclass(frozen=True)
class MonochromaticWitness:
    color: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class HomogeneityCheck:
    ok: bool
    violation: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class MonochromeCheck:
    """Outcome of :func:`is_monochromatic`.

    ``vacuous`` marks sets too small to contain any colored subset; ``color``
    is then None even though ``monochromatic`` is True.
    """

    monochromatic: bool
    color: int | None = None
    vacuous: bool = False
    violation: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.monochromatic


def _rank(members: Sequence[int]) -> int:
    return sum(comb(v, i + 1) for i, v in enumerate(members))


def _check_points(c: Coloring, w: Sequence[int]) -> None:
    for i, v in enumerate(w):
        if not 0 <= v < c.ground_size:
            raise ValueError(f"point {v} out of range for ground size {c.ground_size}")
        if i and w[i - 1] >= v:
            raise ValueError(f"sequence must be strictly increasing, got {list(w)}")


def is_end_homogeneous(c: Coloring, w: Sequence[int]) -> HomogeneityCheck:
    """Check every index tuple i_0 < ... < i_n < i_(n+1) of ``w``.

    On failure ``violation`` is the lexicographically first offending tuple.
    """
    _check_points(c, w)
    n = c.arity
    for idx in combinations(range(len(w)), n + 2):
        head = [w[i] for i in idx[:n]]
        if c.colors[_rank(head + [w[idx[n]]])] != c.colors[_rank(head + [w[idx[n + 1]]])]:
            return HomogeneityCheck(False, idx)
    return HomogeneityCheck(True)


def longest_track_sequence(c: Coloring) -> WitnessSequence:
    """Points of a longest hiker's track; smallest destination on ties."""
    best: list[int] = []
    for x in range(c.ground_size):
        pts = track_points(c.colors, c.tuple_size, x)
        if len(pts) > len(best):
            best = pts
    return WitnessSequence(tuple(best), c.arity, verified=bool(is_end_homogeneous(c, best)))


def search_sequence(colors: Sequence[int], t: int, N: int, k: int, end_at_last: bool = False) -> list[int] | None:
    """Lexicographically least end-homogeneous sequence of length ``k``, or None.

    Depth-first over increasing sequences. Each n-subset of positions is fixed
    to the color it takes with the next position, and every later point must
    reproduce that color. With ``end_at_last`` only sequences ending at N - 1
    are considered.
    """
    n = t - 1
    if k > N:
        return None
    seq: list[int] = []

    def dfs(partial: list[list[int]], fixed: list[tuple[int, int]], pending: list[int]) -> bool:
        m = len(seq)
        if m == k:
            return True
        start = seq[-1] + 1 if seq else 0
        if end_at_last and m == k - 1:
            start = max(start, N - 1)
        for y in range(start, N - (k - m) + 1):
            cy = comb(y, t)
            ok = True
            for b, tg in fixed:
                if colors[b + cy] != tg:
                    ok = False
                    break
            if not ok:
                continue
            new_fixed = fixed + [(b, colors[b + cy]) for b in pending]
            if n:
                new_pending = [p + comb(y, n) for p in partial[n - 1]]
                new_partial = [partial[0]] + [
                    partial[j] + [p + comb(y, j) for p in partial[j - 1]] for j in range(1, n)
                ]
            else:
                new_pending, new_partial = [], partial
            seq.append(y)
            if dfs(new_partial, new_fixed, new_pending):
                return True
            seq.pop()
        return False

    init_partial = [[0]] + [[] for _ in range(n - 1)] if n else []
    init_pending = [] if n else [0]
    return list(seq) if dfs(init_partial, [], init_pending) else None


def find_end_homogeneous(c: Coloring, k: int) -> WitnessSequence | None:
    if k < 1:
        raise ValueError(f"target length must be positive, got {k}")
    found = search_sequence(c.colors, c.tuple_size, c.ground_size, k)
    if found is None:
        return None
    return WitnessSequence(tuple(found), c.arity, verified=bool(is_end_homogeneous(c, found)))


def pigeonhole_extract(values: Sequence[int], r: int) -> tuple[int, tuple[int, ...]]:
    """Largest color class of ``values``; smallest color wins ties."""
    if not values:
        raise ValueError("pigeonhole_extract needs at least one value")
    for v in values:
        if not 0 <= v < r:
            raise ValueError(f"value {v} outside 0..{r - 1}")
    counts = Counter(values)
    color = min(counts, key=lambda v: (-counts[v], v))
    return color, tuple(i for i, v in enumerate(values) if v == color)


def extract_monochromatic(c: Coloring) -> MonochromaticWitness:
    """Monochromatic set by recursion on arity.

    At arity 0 take the largest color class of the points. Otherwise take a
    longest track a_0 < ... < a_delta, color each n-subset s of range(delta)
    by f(a_s + {a_(max s + 1)}), solve that smaller problem, and map the
    resulting index set back through the track. When that index set is all
    of range(delta), the whole track is monochromatic and a_delta joins it.
    """
    if c.ground_size < c.tuple_size:
        raise ValueError("ground set smaller than tuple size")
    if c.tuple_size == 1:
        color, members = pigeonhole_extract(c.colors, c.num_colors)
        return MonochromaticWitness(color, members)
    n = c.arity
    a = longest_track_sequence(c).points
    delta = len(a) - 1
    induced = []
    for s in colex_subsets(delta, n):
        induced.append(c.colors[_rank([a[i] for i in s] + [a[s[-1] + 1]])])
    inner = extract_monochromatic(Coloring(delta, n, c.num_colors, tuple(induced)))
    idx = inner.members
    if len(idx) == delta:
        idx = idx + (delta,)
    return MonochromaticWitness(inner.color, tuple(a[i] for i in idx))


def is_monochromatic(c: Coloring, Z: Sequence[int]) -> MonochromeCheck:
    pts = sorted(set(Z))
    for v in pts:
        if not 0 <= v < c.ground_size:
            raise ValueError(f"point {v} out of range for ground size {c.ground_size}")
    subsets = combinations(pts, c.tuple_size)
    first = next(subsets, None)
    if first is None:
        return MonochromeCheck(True, None, vacuous=True)
    color = c.colors[_rank(first)]
    for s in subsets:
        if c.colors[_rank(s)] != color:
            return MonochromeCheck(False, violation=(first, s))
    return MonochromeCheck(True, color)


@dataclass
class TrieStats:
    depth: int
    node_count: int
    distinct_maps_per_level: list[int]
    trie: dict = field(default_factory=dict, repr=False)


def build_track_trie(c: Coloring) -> TrieStats:
    """Prefix tree of all hiker's tracks of ``c``.

    Raises RuntimeError if a point shows up at two different trie positions,
    which would contradict the prefix property of tracks.
    """
    root: dict = {}
    where: dict[int, tuple[int, ...]] = {}
    depth = 0
    for x in range(c.ground_size):
        pts = build_track(c, x).points
        node = root
        for i, p in enumerate(pts):
            prefix = pts[: i + 1]
            if where.setdefault(p, prefix) != prefix:
                raise RuntimeError(f"point {p} reached along {where[p]} and {prefix}")
            node = node.setdefault(p, {})
        depth = max(depth, len(pts) - 1)
    maps = all_hiker_maps(c)
    per_level = [len({fx for fx in maps if fx.delta == d}) for d in range(depth + 1)]
    return TrieStats(depth, len(where), per_level, root)
