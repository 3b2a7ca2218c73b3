"""Non-repeating strings over ``[1:n]`` and their neighbor oracle.

A string is *d-non-repeating* when (1) every length-d window occurs at most
once, (2) the symbol at 1-based position i is odd exactly when i is a
multiple of d, and (3) the length is a multiple of d.  Such a string can be
read as a sequence of points in ``[1:n]^d``; the oracle reports, for a
window, the symbols flanking its unique occurrence.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Window = tuple[int, ...]
# (left, right) flanking symbols; None encodes the "no" answer.
StringAnswer = tuple[int | None, int | None]

NO_ANSWER: StringAnswer = (None, None)


def is_d_non_repeating(symbols: Sequence[int], d: int) -> bool:
    """Check the three defining conditions; returns False rather than raising."""
    if d < 1:
        raise ValueError("d must be >= 1")
    m = len(symbols)
    if m % d != 0:
        return False
    for i, a in enumerate(symbols, start=1):
        if (a % 2 == 1) != (i % d == 0):
            return False
    seen = set()
    for k in range(m - d + 1):
        w = tuple(symbols[k : k + d])
        if w in seen:
            return False
        seen.add(w)
    return True


def end_d(symbols: Sequence[int], d: int) -> Window:
    """The last d symbols."""
    if not is_d_non_repeating(symbols, d):
        raise ValueError("string is not d-non-repeating")
    return tuple(symbols[-d:])


@dataclass(frozen=True)
class SymbolString:
    """A string over the alphabet ``[1:alphabet_n]`` tagged with its window size."""

    symbols: tuple[int, ...]
    alphabet_n: int
    d: int

    def __post_init__(self) -> None:
        if any(not 1 <= a <= self.alphabet_n for a in self.symbols):
            raise ValueError("symbol outside [1, alphabet_n]")

    @property
    def points(self) -> list[Window]:
        """The string split into aligned d-blocks."""
        s, d = self.symbols, self.d
        return [s[i : i + d] for i in range(0, len(s), d)]

    def serialize(self) -> str:
        header = f"d={self.d} n={self.alphabet_n}"
        return header + "\n" + " ".join(str(a) for a in self.symbols) + "\n"

    @classmethod
    def parse(cls, text: str) -> "SymbolString":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        fields = dict(tok.split("=") for tok in lines[0].split())
        symbols = tuple(int(tok) for tok in " ".join(lines[1:]).split())
        return cls(symbols, alphabet_n=int(fields["n"]), d=int(fields["d"]))


class StringOracle:
    """Window-neighbor oracle for one d-non-repeating string.

    All length-d windows are indexed up front; non-repetition makes the
    index a bijection, so each query is a single dict probe.
    """

    def __init__(self, string: SymbolString):
        if not is_d_non_repeating(string.symbols, string.d):
            raise ValueError("oracle requires a d-non-repeating string")
        self.string = string
        self.d = string.d
        self.alphabet_n = string.alphabet_n
        s = string.symbols
        self._index: dict[Window, int] = {
            tuple(s[k : k + string.d]): k for k in range(len(s) - string.d + 1)
        }

    def answer(self, window: Sequence[int]) -> StringAnswer:
        w = tuple(window)
        if len(w) != self.d:
            raise ValueError(f"query length {len(w)} != d={self.d}")
        k = self._index.get(w)
        if k is None:
            return NO_ANSWER
        s = self.string.symbols
        left = s[k - 1] if k > 0 else None
        right = s[k + self.d] if k + self.d < len(s) else None
        return (left, right)

    @property
    def first_point(self) -> Window:
        return tuple(self.string.symbols[: self.d])

    @property
    def last_point(self) -> Window:
        return tuple(self.string.symbols[-self.d :])
