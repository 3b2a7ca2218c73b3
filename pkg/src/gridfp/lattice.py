"""Integer lattice primitives shared by every layer of the package.

Points of ``[1:n]^d`` are plain tuples of ints (1-based coordinates).
Directions are signed unit steps stored as ``(axis, sign)`` pairs, not as
expanded vectors; expansion only happens at serialization or when a vector
is genuinely needed.  Everything here is immutable and thread-safe.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

Point = tuple[int, ...]

# Coordinates stay small (reduction grids grow by constant factors only),
# but guard the representable range so silent wraparound in downstream
# arithmetic is impossible even for absurd inputs.
COORD_LIMIT = 2**62


class Direction(NamedTuple):
    """A signed principal unit vector: ``sign * e_axis`` with axis in [1, d]."""

    axis: int
    sign: int

    def __neg__(self) -> "Direction":
        return Direction(self.axis, -self.sign)

    def vector(self, d: int) -> Point:
        v = [0] * d
        v[self.axis - 1] = self.sign
        return tuple(v)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}e{self.axis}"


class GridSpec(NamedTuple):
    """A ``d``-dimensional grid ``[1:n]^d``."""

    d: int
    n: int

    def contains(self, p: Point) -> bool:
        return len(p) == self.d and all(1 <= c <= self.n for c in p)

    @property
    def cells(self) -> int:
        return self.n**self.d


def directions(d: int) -> list[Direction]:
    """All 2d signed unit directions, axis-major with - before +."""
    return [Direction(axis, sign) for axis in range(1, d + 1) for sign in (-1, 1)]


def lex_cmp(a: Point, b: Point) -> int:
    """Lexicographic comparison: -1, 0 or +1 with the first coordinate most
    significant."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def linf_dist(a: Point, b: Point) -> int:
    """Chebyshev distance ``max_i |a_i - b_i|``."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return max(abs(x - y) for x, y in zip(a, b))


def step(p: Point, s: Direction) -> Point:
    """``p + s``.  No bounds check; callers test against their GridSpec."""
    i = s.axis - 1
    c = p[i] + s.sign
    if not -COORD_LIMIT < c < COORD_LIMIT:
        raise OverflowError("coordinate out of representable range")
    return p[:i] + (c,) + p[i + 1 :]


def add(p: Point, q: Point) -> Point:
    return tuple(x + y for x, y in zip(p, q))


def sub(p: Point, q: Point) -> Point:
    return tuple(x - y for x, y in zip(p, q))


def scale(k: int, p: Point) -> Point:
    return tuple(k * x for x in p)


def unit_delta(frm: Point, to: Point) -> Direction:
    """The Direction carrying ``frm`` to ``to``; they must be grid neighbors."""
    diffs = [(i + 1, to[i] - frm[i]) for i in range(len(frm)) if to[i] != frm[i]]
    if len(diffs) != 1 or abs(diffs[0][1]) != 1:
        raise ValueError(f"{frm} -> {to} is not a unit lattice step")
    return Direction(diffs[0][0], diffs[0][1])


def format_point(p: Point) -> str:
    """Render as ``(1,2,3)``."""
    return "(" + ",".join(str(c) for c in p) + ")"


def parse_point(text: str) -> Point:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"not a point literal: {text!r}")
    return tuple(int(tok) for tok in body[1:-1].split(",") if tok.strip())


def format_direction(s: Direction) -> str:
    return str(s)


def parse_direction(text: str) -> Direction:
    body = text.strip()
    if len(body) < 3 or body[0] not in "+-" or body[1] != "e":
        raise ValueError(f"not a direction literal: {text!r}")
    return Direction(int(body[2:]), 1 if body[0] == "+" else -1)


def iter_grid(spec: GridSpec) -> Iterable[Point]:
    """All points of the grid in lexicographic order."""
    d, n = spec.d, spec.n
    p = [1] * d
    while True:
        yield tuple(p)
        i = d - 1
        while i >= 0 and p[i] == n:
            p[i] = 1
            i -= 1
        if i < 0:
            return
        p[i] += 1
