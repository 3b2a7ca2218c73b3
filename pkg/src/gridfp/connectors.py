"""Connectors: permutation-encoded chains over the alphabet ``[2:2n+2]``.

A permutation ``perm`` of ``[1:n]`` yields the string
``2, 2*perm[0]+1, 2*perm[0]+2, ..., 2*perm[-1]+1, 2*perm[-1]+2``: the lone
block ``(2,)`` followed by the odd/even blocks in permuted order.  Adjacent
symbols from *different* blocks form the neighbor pairs the tree machinery
keys on; the last symbol is the chain's exit.

A PartialConnector is knowledge of such a chain: a set of block segments,
each a contiguous substring, merged pairwise as neighbor relations are
learned.
"""
from __future__ import annotations

from dataclasses import dataclass, field

Perm = tuple[int, ...]
Segment = tuple[int, ...]


def block_symbols(k: int) -> Segment:
    """The symbols of block k: ``(2,)`` for k=0, ``(2k+1, 2k+2)`` otherwise."""
    return (2,) if k == 0 else (2 * k + 1, 2 * k + 2)


@dataclass(frozen=True)
class Connector:
    """A full connector over ``[2:2n+2]``, derived from a block permutation."""

    perm: Perm

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [1:{n}]: {self.perm}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def symbols(self) -> tuple[int, ...]:
        out = [2]
        for k in self.perm:
            out.extend((2 * k + 1, 2 * k + 2))
        return tuple(out)

    @property
    def exit(self) -> int:
        """The last symbol, ``2*perm[-1] + 2``."""
        return 2 * self.perm[-1] + 2

    def pairs(self) -> list[tuple[int, int]]:
        """Cross-block neighbor pairs in chain order.

        These sit at odd 1-based positions: (2, o1), (f1, o2), ...; the
        within-block adjacency (2k+1, 2k+2) is never a pair.
        """
        s = self.symbols
        return [(s[i], s[i + 1]) for i in range(0, len(s) - 1, 2)]

    def mate(self, symbol: int) -> int | None:
        """The pair partner of ``symbol``; None for the exit symbol."""
        for a, b in self.pairs():
            if symbol == a:
                return b
            if symbol == b:
                return a
        if symbol == self.exit:
            return None
        raise ValueError(f"symbol {symbol} not in connector over [2:{2*self.n+2}]")

    def lead_of(self, symbol: int) -> int | None:
        """If ``symbol`` is the second element of its pair, return the first;
        None when it leads its pair or is the exit."""
        for a, b in self.pairs():
            if symbol == b:
                return a
            if symbol == a:
                return None
        if symbol == self.exit:
            return None
        raise ValueError(f"symbol {symbol} not in connector over [2:{2*self.n+2}]")


def move_block_last(perm: Perm, k: int) -> Perm:
    """Reorder ``perm`` so block k comes last, preserving the rest.

    Applied to a uniform permutation this yields a uniform permutation among
    those ending with k (each target has exactly n preimages).
    """
    if k not in perm:
        raise ValueError(f"block {k} not in permutation {perm}")
    return tuple(x for x in perm if x != k) + (k,)


def connector_with_exit(perm: Perm, exit_symbol: int) -> Connector:
    """The connector of ``perm`` adjusted so its exit is ``exit_symbol``."""
    if exit_symbol % 2 != 0 or exit_symbol < 4:
        raise ValueError(f"exit symbol must be even and >= 4: {exit_symbol}")
    return Connector(move_block_last(perm, (exit_symbol - 2) // 2))


@dataclass
class PartialConnector:
    """Partial knowledge of a connector: block segments, each known contiguous.

    Invariants: every alphabet symbol lies in exactly one segment; the
    segment containing 2 starts with 2; segments start odd (or 2) and end
    even (or are the bare ``(2,)``).
    """

    n: int
    segments: list[Segment] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.segments:
            self.segments = [block_symbols(k) for k in range(self.n + 1)]

    @classmethod
    def empty(cls, n: int) -> "PartialConnector":
        return cls(n)

    @classmethod
    def complete(cls, connector: Connector) -> "PartialConnector":
        return cls(connector.n, [connector.symbols])

    def copy(self) -> "PartialConnector":
        return PartialConnector(self.n, list(self.segments))

    @property
    def anchor_segment(self) -> Segment:
        for seg in self.segments:
            if seg[0] == 2:
                return seg
        raise AssertionError("no segment starts with 2")

    @property
    def exit(self) -> int:
        """Last symbol of the segment containing 2."""
        return self.anchor_segment[-1]

    @property
    def open_starts(self) -> set[int]:
        """First symbols of the non-anchor segments (odd symbols whose left
        neighbor is unknown)."""
        return {seg[0] for seg in self.segments if seg[0] != 2}

    @property
    def open_ends(self) -> set[int]:
        """Last symbols of the non-anchor segments (even symbols whose right
        neighbor is unknown)."""
        return {seg[-1] for seg in self.segments if seg[0] != 2}

    @property
    def is_complete(self) -> bool:
        return len(self.segments) == 1

    def frontier(self) -> set[int]:
        """Symbols whose neighbor relation is still informative:
        open starts, open ends, and the current exit."""
        return self.open_starts | self.open_ends | {self.exit}

    def merge(self, end_symbol: int, start_symbol: int) -> None:
        """Join the segment ending with ``end_symbol`` to the one starting
        with ``start_symbol`` (a learned neighbor relation)."""
        left = next((s for s in self.segments if s[-1] == end_symbol), None)
        right = next((s for s in self.segments if s[0] == start_symbol), None)
        if left is None or right is None:
            raise ValueError(
                f"no segments with end {end_symbol} / start {start_symbol}"
            )
        if left is right:
            raise ValueError("merge would close a cycle; corrupt knowledge state")
        self.segments.remove(left)
        self.segments.remove(right)
        self.segments.append(left + right)

    def learned_pairs(self) -> list[tuple[int, int]]:
        """Cross-block adjacencies already fixed by this partial connector.

        Within-block adjacencies (odd, odd+1) are structural, not learned;
        an adjacency is cross-block exactly when its left symbol is even or 2.
        """
        out = []
        for seg in self.segments:
            for a, b in zip(seg, seg[1:]):
                if a == 2 or a % 2 == 0:
                    out.append((a, b))
        return out

    def is_consistent_with(self, connector: Connector) -> bool:
        """True when every segment is a contiguous run of the full connector."""
        pos = {sym: i for i, sym in enumerate(connector.symbols)}
        for seg in self.segments:
            first = pos[seg[0]]
            if any(pos[sym] != first + j for j, sym in enumerate(seg)):
                return False
        return True

    def consistent_connectors(self) -> list[Connector]:
        """All full connectors consistent with this partial knowledge."""
        import itertools

        anchor = self.anchor_segment
        others = [s for s in self.segments if s[0] != 2]
        out = []
        for order in itertools.permutations(others):
            symbols = anchor + tuple(x for seg in order for x in seg)
            out.append(_connector_from_symbols(symbols))
        return out

    def segment_count(self) -> int:
        return len(self.segments)


def _connector_from_symbols(symbols: Segment) -> Connector:
    if symbols[0] != 2 or len(symbols) % 2 == 0:
        raise ValueError(f"not a connector chain: {symbols}")
    perm = []
    for i in range(1, len(symbols), 2):
        o, f = symbols[i], symbols[i + 1]
        if f != o + 1 or o % 2 == 0:
            raise ValueError(f"not a connector chain: {symbols}")
        perm.append((f - 2) // 2)
    return Connector(tuple(perm))
