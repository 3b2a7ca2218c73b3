"""gridfp: discrete Brouwer fixed points on integer lattices.

Library layout:

- ``lattice``     points, directions, lexicographic order, norms
- ``strings``     non-repeating strings and the window-neighbor oracle
- ``connectors``  permutation chains and partial-knowledge segments
- ``tree``        hierarchical instances (trees of connectors) + encodings
- ``nt_es``       answering string queries from one tree query
- ``knowledge``   prober knowledge state, enumeration, tail-count bounds
- ``embedding``   string -> grid path graph -> untangled unit-degree graph
- ``canonical``   step-pair discipline, local path gadgets, canonicalization
- ``brouwer``     canonical graph -> direction-preserving function with one zero
- ``pipeline``    composed reduction stacks with per-layer query counters
- ``generators``  seeded random instances at every layer
- ``solvers``     zero scan, path following, random sampling
- ``verify``      exhaustive audits (bounded, direction-preserving, degrees)
- ``bench``       benchmark tables
- ``cli``         command-line front end
"""

from .lattice import Direction, GridSpec, lex_cmp, linf_dist, step

__all__ = ["Direction", "GridSpec", "lex_cmp", "linf_dist", "step"]
__version__ = "0.1.0"
