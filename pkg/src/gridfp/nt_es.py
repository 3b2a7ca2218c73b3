"""Answering string-window queries out of one tree-oracle probe.

The forward/reverse strings of a connector tree are huge, but their window
oracles can be simulated by at most one query to the tree oracle:

* a window with any number of odd entries other than one occurs in neither
  string (membership pre-filter);
* a window with an entry in {1, 2} touches the marker scaffolding, whose
  neighborhood is the same in every valid tree, so the identity tree's
  materialized strings answer it (no tree query);
* otherwise the window is a rotation of an embedded leaf name; one tree
  query plus a bookkeeping recursion yields both string answers.

The recursion reconstructs, level by level, the answers for the whole
rotation family of the queried name, splicing the block symbol of each
level into the sub-level answers.
"""
from __future__ import annotations

from typing import Sequence

from .strings import NO_ANSWER, StringAnswer, StringOracle, SymbolString
from .tree import ConnectorTree, Name, TreeAnswer, nt_embed

_identity_oracles: dict[tuple[int, int], tuple[StringOracle, StringOracle]] = {}


def _identity_pair(n: int, d: int) -> tuple[StringOracle, StringOracle]:
    key = (n, d)
    if key not in _identity_oracles:
        tree = ConnectorTree.from_identity(n, d)
        _identity_oracles[key] = (
            StringOracle(tree.forward_string()),
            StringOracle(tree.reverse_string()),
        )
    return _identity_oracles[key]


def _rotations(window: tuple[int, ...]) -> list[tuple[int, ...]]:
    """window rotated right by 0, 1, ... positions (index i-1 <-> i-th)."""
    d = len(window)
    return [window[d - i :] + window[: d - i] for i in range(d)]


class _WindowFamilies:
    """Answers for every right-rotation of one embedded name, in both strings."""

    __slots__ = ("fwd", "rev")

    def __init__(self, fwd: list[StringAnswer], rev: list[StringAnswer]):
        self.fwd = fwd
        self.rev = rev


def _materialized_families(tree: ConnectorTree, root: Name,
                           q: tuple[int, ...]) -> _WindowFamilies:
    """Direct window lookups on a fully known subtree's strings."""
    fwd_sym, rev_sym = tree._strings_of(root)
    delta = tree.d - len(root)
    n = tree.n
    fwd = StringOracle(SymbolString(fwd_sym, 4 * n + 4, delta))
    rev = StringOracle(SymbolString(rev_sym, 4 * n + 4, delta))
    rots = _rotations(nt_embed(q))
    return _WindowFamilies([fwd.answer(w) for w in rots],
                           [rev.answer(w) for w in rots])


def _splice_edges(inner: StringAnswer, t: int,
                  partner: int | None) -> tuple[StringAnswer, StringAnswer]:
    """Answers for the two windows wrapping the splice symbol t around an
    aligned inner window: (t . inner) and (inner . t).

    When the inner window ends (starts) its sub-string, the chain continues
    into the paired block and ``partner`` (twice the pair mate) supplies the
    missing flank; the wrap on the other side does not occur at all.
    """
    left, right = inner
    if left is None and right is None:
        return NO_ANSWER, NO_ANSWER
    if left is not None and right is not None:
        return (left, t), (t, right)
    if right is None:  # inner window ends its sub-string
        assert partner is not None
        return (left, partner), NO_ANSWER
    assert partner is not None  # inner window starts its sub-string
    return NO_ANSWER, (partner, right)


def _families(tree: ConnectorTree, root: Name, q: tuple[int, ...],
              ans: TreeAnswer) -> _WindowFamilies:
    """Rotation-family answers for the subtree at ``root`` under query ``q``."""
    delta = tree.d - len(root)
    q1 = q[0]
    if delta == 1:
        return _base_families(tree, root, q1, ans)
    if ans.height == delta - 1:
        # the merge sits at this node; the child subtree is fully granted
        down = _materialized_families(tree, root + (q1,), q[1:])
        mate = ans.mate
    else:
        assert ans.height < delta - 1
        down = _families(tree, root + (q1,), q[1:], ans)
        mate = None
    t = 2 * q1
    partner = None if mate is None else 2 * mate
    if q1 % 2 == 0:
        # even label: forward block carries the child's forward string
        f1, f_last = _splice_edges(down.fwd[0], t, partner)
        r1, r_last = _splice_edges(down.rev[0], t, partner)
        fwd = [f1] + down.fwd[1:] + [f_last]
        rev = [r1] + down.rev[1:] + [r_last]
    else:
        # odd label: the child's strings swap orientation inside this block
        f1, f_last = _splice_edges(down.rev[0], t, partner)
        r1, r_last = _splice_edges(down.fwd[0], t, partner)
        fwd = [f1] + down.rev[1:] + [f_last]
        rev = [r1] + down.fwd[1:] + [r_last]
    return _WindowFamilies(fwd, rev)


def _base_families(tree: ConnectorTree, root: Name, q1: int,
                   ans: TreeAnswer) -> _WindowFamilies:
    """Height-1 subtree: the chain neighbors read off the connector."""
    assert ans.height == 0 and ans.mate is not None
    mate = ans.mate
    if q1 == 2:
        fwd: StringAnswer = (1, 2 * mate - 1)
        rev: StringAnswer = (2 * mate - 1, 1)
    elif q1 % 2 == 1:
        fwd = (2 * mate - 1, 2 * q1 + 1)
        rev = (2 * q1 + 1, 2 * mate - 1)
    else:
        fwd = (2 * q1 - 3, 2 * mate - 1)
        rev = (2 * mate - 1, 2 * q1 - 3)
    return _WindowFamilies([fwd], [rev])


def string_answers(tree: ConnectorTree,
                   window: Sequence[int]) -> tuple[StringAnswer, StringAnswer]:
    """Answers of the forward- and reverse-string oracles for ``window``.

    Performs at most one ``tree.answer`` call; the two filter branches
    perform none.
    """
    u = tuple(window)
    d = tree.d
    if len(u) != d:
        raise ValueError(f"window length {len(u)} != d={d}")
    if any(not 1 <= x <= 4 * tree.n + 4 for x in u):
        raise ValueError(f"window symbols outside [1, {4 * tree.n + 4}]: {u}")
    odd_positions = [i for i, x in enumerate(u) if x % 2 == 1]
    if len(odd_positions) != 1:
        return NO_ANSWER, NO_ANSWER
    if any(x in (1, 2) for x in u):
        fwd, rev = _identity_pair(tree.n, d)
        return fwd.answer(u), rev.answer(u)
    p = odd_positions[0]
    rot = 0 if p == d - 1 else p + 1  # right-rotations from the aligned window
    aligned = u[rot:] + u[:rot]
    q = tuple(x // 2 for x in aligned[:-1]) + ((aligned[-1] + 1) // 2,)
    ans = tree.answer(q)
    if ans.whole:
        fwd_sym = tree.forward_string()
        rev_sym = tree.reverse_string()
        return StringOracle(fwd_sym).answer(u), StringOracle(rev_sym).answer(u)
    fams = _families(tree, (), q, ans)
    return fams.fwd[rot], fams.rev[rot]
