"""Hiker's tracks and hiker's maps.

For a coloring of (n+1)-subsets and a destination point x, the track starts
with the points 0, ..., n-1. Each further point is the least y such that for
every n-subset s of the points chosen so far, the set s + {y} has the same
color as s + {x}. The track ends when it reaches x. The hiker's map of x
colors each n-subset of track indices below delta(x) by the color it takes
together with x.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .coloring import Coloring
from .combinatorics import colex_subsets


@dataclass(frozen=True)
class Track:
    destination: int
    points: tuple[int, ...]
    arity: int

    @property
    def delta(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class HikerMap:
    """Hiker's map; ``entries`` lists colors of the n-subsets of range(delta) in colex order.

    ``delta`` is part of equality, so maps with empty domains of different
    sizes stay distinct.
    """

    delta: int
    arity: int
    entries: tuple[int, ...]


def track_points(colors: Sequence[int], t: int, dest: int) -> list[int]:
    """Greedy track toward ``dest`` on a raw colex color vector of tuple size ``t``.

    Works for any t >= 1; with t == 1 the only constraint is f({y}) == f({dest}).
    """
    n = t - 1
    if dest < n:
        return list(range(dest + 1))
    points = list(range(n))
    # partial[j]: colex partial ranks sum(C(p_i, i+1)) of all j-subsets of points, j < n
    partial = [[0]] + [[] for _ in range(n - 1)] if n else []
    if n:
        for y in points:
            for j in range(n - 1, 0, -1):
                partial[j] += [p + comb(y, j) for p in partial[j - 1]]
        bases = [sum(comb(p, i + 1) for i, p in enumerate(points))]
    else:
        bases = [0]
    top = comb(dest, t)
    targets = [colors[b + top] for b in bases]
    y = points[-1] + 1 if points else 0
    while True:
        cy = comb(y, t)
        ok = True
        for b, tg in zip(bases, targets):
            if colors[b + cy] != tg:
                ok = False
                break
        if ok:
            points.append(y)
            if y == dest:
                return points
            if n:
                new = [p + comb(y, n) for p in partial[n - 1]]
                bases += new
                targets += [colors[b + top] for b in new]
                for j in range(n - 1, 0, -1):
                    partial[j] += [p + comb(y, j) for p in partial[j - 1]]
        y += 1


def build_track(c: Coloring, dest: int, arity: int | None = None) -> Track:
    """The hiker's track of ``c`` toward ``dest``.

    ``arity`` defaults to ``c.tuple_size - 1`` and is rejected if it disagrees.
    """
    if arity is not None and arity != c.arity:
        raise ValueError(f"arity mismatch: requested {arity}, coloring has tuple size {c.tuple_size}")
    if not 0 <= dest < c.ground_size:
        raise ValueError(f"destination {dest} out of range for ground size {c.ground_size}")
    pts = track_points(c.colors, c.tuple_size, dest)
    return Track(dest, tuple(pts), c.arity)


def hiker_map(c: Coloring, tr: Track) -> HikerMap:
    n = tr.arity
    if n != c.arity:
        raise ValueError(f"arity mismatch: track arity {n}, coloring tuple size {c.tuple_size}")
    if tr.points[-1] != tr.destination or tr.destination >= c.ground_size:
        raise ValueError("track does not belong to this coloring")
    x = tr.destination
    entries = []
    if tr.delta >= n:
        for s in colex_subsets(tr.delta, n):
            members = [tr.points[i] for i in s] + [x]
            entries.append(c.colors[sum(comb(v, i + 1) for i, v in enumerate(members))])
    return HikerMap(tr.delta, n, tuple(entries))


def all_hiker_maps(c: Coloring) -> list[HikerMap]:
    """Hiker's map of every destination, indexed by destination."""
    return [hiker_map(c, build_track(c, x)) for x in range(c.ground_size)]


@dataclass(frozen=True)
class InjectivityCheck:
    injective: bool
    collision: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.injective


def check_injectivity(c: Coloring) -> InjectivityCheck:
    """Check that distinct destinations have distinct hiker's maps.

    Always true for a correct track construction; a collision is reported
    as the first pair of destinations found to share a map.
    """
    seen: dict[HikerMap, int] = {}
    for x, fx in enumerate(all_hiker_maps(c)):
        if fx in seen:
            return InjectivityCheck(False, (seen[fx], x))
        seen[fx] = x
    return InjectivityCheck(True)


def count_distinct_maps(c: Coloring, d: int) -> int:
    """Number of distinct hiker's maps whose domain is the n-subsets of range(d)."""
    return len({fx for fx in all_hiker_maps(c) if fx.delta == d})
