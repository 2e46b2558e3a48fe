"""Built-in voltage digraphs and small example digraphs."""

from __future__ import annotations

from typing import Sequence

from .digraph import Digraph, VertexPartition
from .group import FiniteGroup, cyclic, product
from .voltage import VoltageDigraph

__all__ = [
    "alegre",
    "cayley",
    "generalized_petersen",
    "hoffman_singleton",
    "monomials",
    "p_family",
    "six_vertex_example",
]


def alegre() -> VoltageDigraph:
    """Base digraph on 5 vertices over Z_5 whose lift is the Alegre digraph."""
    arcs = [
        (0, 1, 0), (0, 2, 0), (3, 0, 0), (3, 4, 0),
        (2, 3, 1), (4, 0, 1), (4, 4, 1),
        (1, 1, 4), (1, 2, 4), (2, 3, 4),
    ]  # fmt: skip
    return VoltageDigraph.build([str(i) for i in range(5)], cyclic(5), arcs)


# 0->1 voltages (w, z) = (i^2, i) mod 5: a pentagon/pentagram joining.
_HS_CROSS = [(0, 0), (1, 1), (4, 2), (4, 3), (1, 4)]


def hoffman_singleton() -> VoltageDigraph:
    """Two-vertex voltage graph over Z_5 x Z_5 lifting to Hoffman-Singleton.

    First coordinate is w, second is z.  Undirected edges are arc pairs
    with inverse voltages, so the lift is a symmetric digraph.
    """
    grp = product((5, 5))
    arcs = [
        (0, 0, (1, 0)), (0, 0, (4, 0)),
        (1, 1, (2, 0)), (1, 1, (3, 0)),
    ]  # fmt: skip
    for w, z in _HS_CROSS:
        arcs.append((0, 1, (w, z)))
    for w, z in _HS_CROSS:
        arcs.append((1, 0, (-w, -z)))
    return VoltageDigraph.build(["0", "1"], grp, arcs)


def _loops(vertex: int, coeffs: Sequence[int]) -> list[tuple]:
    return [(vertex, vertex, i) for i, c in enumerate(coeffs) for _ in range(int(c))]


def p_family(n: int, p1: Sequence[int], p2: Sequence[int]) -> VoltageDigraph:
    """Lift base for polynomial matrix [[p1(z), 1], [1, p2(z)]] over Z_n.

    ``p1``/``p2`` are coefficient lists (index = exponent), length <= n;
    coefficient c at exponent i gives c loops of voltage i.
    """
    if len(p1) > n or len(p2) > n:
        raise ValueError(f"coefficient lists must have length <= {n}")
    if any(c < 0 for c in list(p1) + list(p2)):
        raise ValueError("coefficients count arcs and must be nonnegative")
    arcs = _loops(0, p1) + [(0, 1, 0), (1, 0, 0)] + _loops(1, p2)
    return VoltageDigraph.build(["u", "v"], cyclic(n), arcs)


def monomials(n: int, *exponents: int) -> list[int]:
    """Coefficient list of z^a + z^b + ... reduced mod n."""
    coeffs = [0] * n
    for e in exponents:
        coeffs[e % n] += 1
    return coeffs


def generalized_petersen(n: int, k: int) -> VoltageDigraph:
    """P(n, k) as P(n, z + z^-1, z^k + z^-k); needs 1 <= k < n/2."""
    if not (n >= 3 and 1 <= k and 2 * k < n):
        raise ValueError(f"generalized Petersen P({n},{k}) needs n >= 3, 1 <= k < n/2")
    return p_family(n, monomials(n, 1, -1), monomials(n, k, -k))


def cayley(group: FiniteGroup, generators: Sequence) -> VoltageDigraph:
    """One vertex with a loop per generator; the lift is Cay(G, generators)."""
    return VoltageDigraph.build(["0"], group, [(0, 0, g) for g in generators])


def six_vertex_example() -> tuple[Digraph, VertexPartition]:
    """Six-vertex digraph with its regular partition U_i = {i, i+3}."""
    adjacency = [
        [1, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0, 1],
        [1, 1, 0, 0, 0, 0],
    ]
    d = Digraph.from_adjacency(adjacency)
    return d, VertexPartition([[i, i + 3] for i in range(3)], 6)
