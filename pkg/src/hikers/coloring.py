"""Finite colorings f: [N]^t -> {0, ..., r-1}, stored densely in colex order.

KRT v1 is the on-disk fixture format::

    krt 1 N=<N> t=<t> r=<r>
    <C(N, t) space-separated colors in colex order>

Lines starting with ``#`` before the header are comments.
"""

from __future__ import annotations

import hashlib
import random
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .combinatorics import binomial, colex_rank, colex_subsets


class KrtFormatError(ValueError):
    """Raised when a KRT document cannot be parsed."""


@dataclass(frozen=True)
class Coloring:
    ground_size: int
    tuple_size: int
    num_colors: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        N, t, r = self.ground_size, self.tuple_size, self.num_colors
        if N < 1 or t < 1 or r < 1:
            raise ValueError(f"N, t, r must be positive, got N={N} t={t} r={r}")
        if t > N:
            raise ValueError(f"tuple size {t} exceeds ground size {N}")
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) != binomial(N, t):
            raise ValueError(f"expected {binomial(N, t)} colors, found {len(self.colors)}")
        for v in self.colors:
            if not 0 <= v < r:
                raise ValueError(f"color value {v} outside 0..{r - 1}")

    @property
    def arity(self) -> int:
        """Size of the index subsets a hiker's map colors (tuple size minus one)."""
        return self.tuple_size - 1

    def color_of(self, s: Sequence[int]) -> int:
        return color_of(self, s)

    def restrict(self, N: int) -> "Coloring":
        """The coloring induced on {0, ..., N-1}; a colex prefix of ``colors``."""
        if not self.tuple_size <= N <= self.ground_size:
            raise ValueError(f"cannot restrict ground size {self.ground_size} to {N}")
        m = binomial(N, self.tuple_size)
        return Coloring(N, self.tuple_size, self.num_colors, self.colors[:m])


def color_of(c: Coloring, s: Sequence[int]) -> int:
    """Color of the subset ``s`` (any order, no repeats)."""
    if len(s) != c.tuple_size:
        raise ValueError(f"arity mismatch: subset of size {len(s)}, coloring has tuple size {c.tuple_size}")
    s = sorted(s)
    if s[0] < 0 or s[-1] >= c.ground_size:
        raise ValueError(f"subset {s} out of range for ground size {c.ground_size}")
    return c.colors[colex_rank(s)]


class ColoringOracle:
    """A coloring of all finite t-subsets of the naturals, queried on demand.

    ``rule`` must be a deterministic function of the sorted subset. Oracles
    hold no mutable state and are safe to query concurrently.
    """

    def __init__(self, tuple_size: int, num_colors: int, rule: Callable[[tuple[int, ...]], int]):
        if tuple_size < 1 or num_colors < 1:
            raise ValueError("tuple_size and num_colors must be positive")
        self.tuple_size = tuple_size
        self.num_colors = num_colors
        self._rule = rule

    def query(self, s: Iterable[int]) -> int:
        s = tuple(sorted(s))
        if len(s) != self.tuple_size:
            raise ValueError(f"arity mismatch: subset of size {len(s)}, oracle has tuple size {self.tuple_size}")
        v = self._rule(s)
        if not 0 <= v < self.num_colors:
            raise ValueError(f"oracle returned color {v} outside 0..{self.num_colors - 1}")
        return v

    @classmethod
    def constant(cls, tuple_size: int, num_colors: int, value: int = 0) -> "ColoringOracle":
        if not 0 <= value < num_colors:
            raise ValueError(f"constant color {value} outside 0..{num_colors - 1}")
        return cls(tuple_size, num_colors, lambda s: value)

    @classmethod
    def parity(cls, tuple_size: int, num_colors: int = 2) -> "ColoringOracle":
        if num_colors < 2:
            raise ValueError("parity coloring needs at least 2 colors")
        return cls(tuple_size, num_colors, lambda s: sum(s) % 2)

    @classmethod
    def hashed(cls, tuple_size: int, num_colors: int, seed: int) -> "ColoringOracle":
        """Pseudo-random oracle: blake2b of ``"<seed>:<members>"`` reduced mod r."""
        def rule(s: tuple[int, ...]) -> int:
            key = f"{seed}:{','.join(map(str, s))}".encode()
            return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big") % num_colors
        return cls(tuple_size, num_colors, rule)


def truncate(o: ColoringOracle, N: int) -> Coloring:
    """Materialize the oracle on {0, ..., N-1}."""
    if N < o.tuple_size:
        raise ValueError(f"ground size {N} smaller than tuple size {o.tuple_size}")
    colors = [o.query(s) for s in colex_subsets(N, o.tuple_size)]
    return Coloring(N, o.tuple_size, o.num_colors, tuple(colors))


def gen_coloring(
    kind: str,
    N: int,
    t: int,
    r: int,
    *,
    value: int = 0,
    colors: Sequence[int] | None = None,
    seed: int | None = None,
) -> Coloring:
    """Build a coloring of one of the kinds ``constant``, ``parity``, ``explicit``, ``random``.

    ``random`` draws ``floor(r * u)`` for successive ``u = random.Random(seed).random()``
    values, one per subset in colex order. The Mersenne Twister ``random()``
    stream for a given integer seed is stable across Python releases.
    """
    if t < 1 or N < t or r < 1:
        raise ValueError(f"invalid coloring parameters N={N} t={t} r={r}")
    m = binomial(N, t)
    if kind == "constant":
        if not 0 <= value < r:
            raise ValueError(f"constant color {value} outside 0..{r - 1}")
        return Coloring(N, t, r, (value,) * m)
    if kind == "parity":
        if r < 2:
            raise ValueError("parity coloring needs at least 2 colors")
        return Coloring(N, t, r, tuple(sum(s) % 2 for s in colex_subsets(N, t)))
    if kind == "explicit":
        if colors is None:
            raise ValueError("explicit coloring needs a color list")
        return Coloring(N, t, r, tuple(colors))
    if kind == "random":
        if seed is None or not 0 <= seed < 2**64:
            raise ValueError("random coloring needs a 64-bit non-negative seed")
        rng = random.Random(seed)
        return Coloring(N, t, r, tuple(int(rng.random() * r) for _ in range(m)))
    raise ValueError(f"unknown coloring kind {kind!r}")


_HEADER = re.compile(r"krt 1 N=(\d+) t=(\d+) r=(\d+)")


def write_krt(c: Coloring) -> str:
    header = f"krt 1 N={c.ground_size} t={c.tuple_size} r={c.num_colors}\n"
    return header + " ".join(map(str, c.colors)) + "\n"


def parse_krt(text: str) -> Coloring:
    lines = text.split("\n")
    i = 0
    while i < len(lines) and lines[i].startswith("#"):
        i += 1
    if i >= len(lines):
        raise KrtFormatError("missing header")
    m = _HEADER.fullmatch(lines[i])
    if m is None:
        raise KrtFormatError(f"malformed header: {lines[i]!r}")
    N, t, r = map(int, m.groups())
    if t < 1 or N < t or r < 1:
        raise KrtFormatError(f"invalid header parameters N={N} t={t} r={r}")
    body = lines[i + 1] if i + 1 < len(lines) else ""
    rest = [ln for ln in lines[i + 2:] if ln]
    if rest:
        raise KrtFormatError("unexpected content after the color line")
    try:
        colors = [int(tok) for tok in body.split()]
    except ValueError as exc:
        raise KrtFormatError(f"non-integer color value: {exc}") from None
    expected = binomial(N, t)
    if len(colors) != expected:
        raise KrtFormatError(f"expected {expected} colors, found {len(colors)}")
    for v in colors:
        if not 0 <= v < r:
            raise KrtFormatError(f"color value {v} is not below r={r}")
    return Coloring(N, t, r, tuple(colors))
