"""Trees of connectors: the hierarchical hard-instance family.

A tree of height d over alphabet ``[2:2n+2]`` carries a connector at every
internal node.  Node names are label tuples (root = ``()``); the *tail* of a
node is the leaf reached by repeatedly following exit labels, and the whole
tree's answer object is the name of its tail.

Validity couples siblings: whenever two labels are paired in a node's
connector, the two successor subtrees must have equal tail names.  Random
trees are drawn uniformly over valid trees by a lazy scheme: every node gets
an independent pseudorandom permutation keyed by (seed, name), and the
second member of each pair has its exit chain re-pointed to the tail of the
first member.  Re-pointing moves one block of a uniform permutation to the
end, which preserves uniformity conditional on the forced exit, so the
induced distribution is exactly uniform over valid trees.

The tree also encodes itself as a pair of mutually-reversed non-repeating
strings (forward_string / reverse_string); these feed the geometric
reduction layers.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .connectors import Connector, Perm, move_block_last
from .strings import SymbolString

Name = tuple[int, ...]


def start_marker(d: int) -> tuple[int, ...]:
    """The d-symbol block every forward string starts with: (2,...,2,1)."""
    return (2,) * (d - 1) + (1,)


def nt_embed(p: Sequence[int]) -> tuple[int, ...]:
    """Map a leaf name into string space: double every label, minus one on
    the last.  Injective, with evens everywhere except an odd final symbol."""
    q = [2 * x for x in p]
    q[-1] -= 1
    return tuple(q)


def nt_embed_invert(w: Sequence[int]) -> Name:
    if any(x % 2 for x in w[:-1]) or w[-1] % 2 == 0:
        raise ValueError(f"not an embedded leaf name: {w}")
    return tuple(x // 2 for x in w[:-1]) + ((w[-1] + 1) // 2,)


def insert_d(symbols: Sequence[int], d: int, t: int) -> tuple[int, ...]:
    """Interleave ``t`` between consecutive d-blocks of ``symbols``."""
    s = tuple(symbols)
    if len(s) % d != 0:
        raise ValueError(f"length {len(s)} not divisible by block size {d}")
    out: list[int] = []
    for i in range(0, len(s), d):
        if i:
            out.append(t)
        out.extend(s[i : i + d])
    return tuple(out)


def concat_d(s1: Sequence[int], s2: Sequence[int], d: int) -> tuple[int, ...]:
    """Overlap-merge: the last d symbols of s1 must equal the first d of s2."""
    a, b = tuple(s1), tuple(s2)
    if a[-d:] != b[:d]:
        raise ValueError(f"overlap mismatch: {a[-d:]} vs {b[:d]}")
    return a + b[d:]


@dataclass(frozen=True)
class TreeAnswer:
    """Reply of the tree oracle.

    Either the whole tree (the query named the global tail), or a quadruple:
    the height of the queried leaf's head, the pair partner of the branch
    label at the head's parent, and the two subtrees involved, passed as
    root names into the shared tree.
    """

    whole: bool
    height: int = 0
    mate: int | None = None
    t1_root: Name = ()
    t2_root: Name = ()


class ConnectorTree:
    """A valid tree of connectors, lazily materialized and immutable."""

    def __init__(self, n: int, d: int, *, seed: int | None = None,
                 table: Mapping[Name, Connector] | None = None,
                 identity: bool = False):
        if n < 1 or d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        self.n = n
        self.d = d
        self.seed = seed
        self.identity = identity
        self._table = dict(table) if table is not None else None
        if self._table is None and seed is None and not identity:
            raise ValueError("need a seed, an explicit table, or identity=True")
        self._connectors: dict[Name, Connector] = {}
        self._tails: dict[Name, Name] = {}

    # -- constructors -------------------------------------------------

    @classmethod
    def random(cls, n: int, d: int, seed: int) -> "ConnectorTree":
        return cls(n, d, seed=seed)

    @classmethod
    def from_identity(cls, n: int, d: int) -> "ConnectorTree":
        return cls(n, d, identity=True)

    @classmethod
    def explicit(cls, n: int, d: int, table: Mapping[Name, Connector]) -> "ConnectorTree":
        return cls(n, d, table=table)

    @classmethod
    def from_raw_assignment(cls, n: int, d: int,
                            raw: Mapping[Name, Perm]) -> "ConnectorTree":
        """Build the valid tree induced by one raw permutation per node.

        The assignment is taken as the generator's raw draw; pair-second
        subtrees get their exit chains re-pointed exactly as in random
        generation, so every assignment yields a valid tree.
        """
        tree = cls(n, d, seed=0)
        tree._raw_override = dict(raw)  # type: ignore[attr-defined]
        return tree

    # -- node structure -----------------------------------------------

    @property
    def alphabet(self) -> range:
        return range(2, 2 * self.n + 3)

    def height(self, name: Name) -> int:
        return self.d - len(name)

    def internal_names(self) -> Iterator[Name]:
        """All internal node names, top-down."""
        frontier: list[Name] = [()]
        for _ in range(self.d):
            next_frontier = []
            for name in frontier:
                yield name
                next_frontier.extend(name + (s,) for s in self.alphabet)
            frontier = next_frontier

    def _raw_perm(self, name: Name) -> Perm:
        override = getattr(self, "_raw_override", None)
        if override is not None:
            return override[name]
        if self.identity:
            return tuple(range(1, self.n + 1))
        key = f"{self.seed}|" + ".".join(str(x) for x in name)
        digest = hashlib.sha256(key.encode()).digest()
        rng = random.Random(int.from_bytes(digest[:16], "big"))
        perm = list(range(1, self.n + 1))
        rng.shuffle(perm)
        return tuple(perm)

    def _forced_exit(self, name: Name) -> int | None:
        """First symbol of the tail this node is forced to have, if any."""
        p = self._prescription(name)
        return p[0] if p else None

    def _prescription(self, name: Name) -> Name | None:
        """The full within-subtree tail name this node is forced to realize.

        Forcing arises two ways: the node continues a forced exit chain of
        its parent, or it is the second member of a connector pair and must
        copy the tail of the pair's first member.
        """
        if not name:
            return None
        parent, label = name[:-1], name[-1]
        parent_conn = self.connector(parent)
        if label == parent_conn.exit:
            pt = self._prescription(parent)
            return pt[1:] if pt else None
        lead = parent_conn.lead_of(label)
        if lead is not None:
            return self.tail_name(parent + (lead,))
        return None

    def connector(self, name: Name) -> Connector:
        if name in self._connectors:
            return self._connectors[name]
        if len(name) >= self.d:
            raise ValueError(f"{name} is a leaf; leaves carry no connector")
        if any(s not in self.alphabet for s in name):
            raise ValueError(f"invalid node name {name}")
        if self._table is not None:
            conn = self._table[name]
        else:
            perm = self._raw_perm(name)
            forced = self._forced_exit(name)
            if forced is not None:
                perm = move_block_last(perm, (forced - 2) // 2)
            conn = Connector(perm)
        self._connectors[name] = conn
        return conn

    def tail_name(self, name: Name) -> Name:
        """The within-subtree name of the tail leaf below ``name``."""
        if name in self._tails:
            return self._tails[name]
        if len(name) > self.d:
            raise ValueError(f"invalid node name {name}")
        if len(name) == self.d:
            return ()
        if self._table is None:
            p = self._prescription(name)
            if p is not None:
                self._tails[name] = p
                return p
        e = self.connector(name).exit
        tail = (e,) + self.tail_name(name + (e,))
        self._tails[name] = tail
        return tail

    @property
    def global_tail(self) -> Name:
        return self.tail_name(())

    # -- validity -----------------------------------------------------

    def check_valid(self) -> None:
        """Verify the pairing/tail coupling at every internal node."""
        for name in self.internal_names():
            conn = self.connector(name)
            for s, t in conn.pairs():
                ts = self.tail_name(name + (s,))
                tt = self.tail_name(name + (t,))
                if ts != tt:
                    raise ValueError(
                        f"pair ({s},{t}) at node {name} has tails {ts} != {tt}"
                    )

    def spot_check_valid(self, rng: random.Random, samples: int = 32) -> None:
        """Validity probe for trees too large to sweep."""
        for _ in range(samples):
            depth = rng.randrange(self.d)
            name = tuple(rng.choice(list(self.alphabet)) for _ in range(depth))
            conn = self.connector(name)
            s, t = rng.choice(conn.pairs())
            if self.tail_name(name + (s,)) != self.tail_name(name + (t,)):
                raise ValueError(f"pair ({s},{t}) at {name} breaks tail coupling")

    # -- oracle (plain and relaxed) -------------------------------------

    def answer(self, q: Sequence[int]) -> TreeAnswer:
        """Oracle reply for a query naming a node (length <= d).

        Short queries are redirected to the tail of the named node before
        the reply is computed; the reply's height is then at least the
        node's height.
        """
        q = tuple(q)
        if not q or len(q) > self.d:
            raise ValueError(f"query length must be in [1, {self.d}]")
        if any(s not in self.alphabet for s in q):
            raise ValueError(f"query symbols outside [2, {2*self.n+2}]: {q}")
        if len(q) < self.d:
            q = q + self.tail_name(q)
        d = self.d
        h = 0
        while h < d and q[d - 1 - h] == self.connector(q[: d - 1 - h]).exit:
            h += 1
        if h == d:
            return TreeAnswer(whole=True)
        v = q[: d - h - 1]
        mate = self.connector(v).mate(q[d - h - 1])
        assert mate is not None  # streak maximality: the label is not the exit
        return TreeAnswer(whole=False, height=h, mate=mate,
                          t1_root=q[: d - h], t2_root=v + (mate,))

    def subtree_connectors(self, root: Name) -> dict[Name, Connector]:
        """Materialized connectors of the subtree rooted at ``root``
        (keys relative to the subtree)."""
        out: dict[Name, Connector] = {}
        h = self.height(root)
        frontier: list[Name] = [()]
        for _ in range(h):
            nxt = []
            for rel in frontier:
                out[rel] = self.connector(root + rel)
                nxt.extend(rel + (s,) for s in self.alphabet)
            frontier = nxt
        return out

    # -- string encodings -----------------------------------------------

    def _strings_of(self, name: Name) -> tuple[tuple[int, ...], tuple[int, ...]]:
        cache = self.__dict__.setdefault("_string_cache", {})
        if name in cache:
            return cache[name]
        result = self._build_strings(name)
        cache[name] = result
        return result

    def _build_strings(self, name: Name) -> tuple[tuple[int, ...], tuple[int, ...]]:
        h = self.height(name)
        conn = self.connector(name)
        if h == 1:
            b = tuple(2 * a - 1 for a in conn.symbols)
            return (1,) + b, b[::-1] + (1,)
        fwd_parts: list[tuple[int, ...]] = []
        rev_parts: list[tuple[int, ...]] = []
        for i, a in enumerate(conn.symbols, start=1):
            sub_f, sub_r = self._strings_of(name + (a,))
            if i % 2 == 1:
                fwd_parts.append(insert_d(sub_f, h - 1, 2 * a))
                rev_parts.append(insert_d(sub_r, h - 1, 2 * a))
            else:
                fwd_parts.append(insert_d(sub_r, h - 1, 2 * a))
                rev_parts.append(insert_d(sub_f, h - 1, 2 * a))
        fwd = start_marker(h)
        for part in fwd_parts:
            fwd = concat_d(fwd, part, h - 1)
        rev: tuple[int, ...] = (2 * conn.symbols[-1],) + rev_parts[-1]
        for part in reversed(rev_parts[:-1]):
            rev = concat_d(rev, part, h - 1)
        rev = rev + start_marker(h)
        return fwd, rev

    def forward_string(self) -> SymbolString:
        """The non-repeating string that starts at the marker block and ends
        at the embedded tail name."""
        fwd, _ = self._strings_of(())
        return SymbolString(fwd, alphabet_n=4 * self.n + 4, d=self.d)

    def reverse_string(self) -> SymbolString:
        """The companion string running from the embedded tail name back to
        the marker block."""
        _, rev = self._strings_of(())
        return SymbolString(rev, alphabet_n=4 * self.n + 4, d=self.d)

    # -- serialization ----------------------------------------------------

    def to_json(self, *, include_table: bool = False) -> str:
        doc: dict = {"n": self.n, "d": self.d}
        if self.identity:
            doc["identity"] = True
        if self.seed is not None:
            doc["seed"] = self.seed
        if self._table is not None or include_table:
            table = self._table
            if table is None:
                table = {name: self.connector(name) for name in self.internal_names()}
            doc["connectors"] = {
                ".".join(str(x) for x in name): list(conn.perm)
                for name, conn in table.items()
            }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ConnectorTree":
        doc = json.loads(text)
        if "connectors" in doc:
            table = {
                tuple(int(x) for x in key.split(".") if x): Connector(tuple(perm))
                for key, perm in doc["connectors"].items()
            }
            return cls.explicit(doc["n"], doc["d"], table)
        if doc.get("identity"):
            return cls.from_identity(doc["n"], doc["d"])
        return cls.random(doc["n"], doc["d"], doc["seed"])

    def connector_table(self) -> dict[Name, Connector]:
        return {name: self.connector(name) for name in self.internal_names()}


def raw_assignments(n: int, d: int) -> Iterator[dict[Name, Perm]]:
    """Every assignment of one permutation to each internal node name.

    This is the generator's raw parameter space, of size (n!)^(#internal);
    each element induces a valid tree via ``from_raw_assignment``.
    """
    names = list(ConnectorTree(n, d, seed=0).internal_names())
    perms = list(itertools.permutations(range(1, n + 1)))
    for combo in itertools.product(perms, repeat=len(names)):
        yield dict(zip(names, combo))
