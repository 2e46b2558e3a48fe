"""Voltage digraphs, their lifts and the block G-circulant structure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .digraph import Digraph, DigraphError, VertexPartition
from .group import FiniteGroup

__all__ = [
    "Lift",
    "VoltageDigraph",
    "block_circulant_adjacency",
    "fiber_partition",
    "fiber_quotient",
    "layer_matrices",
    "lift",
]


@dataclass(frozen=True, eq=False)
class VoltageDigraph:
    """A base digraph with one group element (by index) per arc instance."""

    base: Digraph
    group: FiniteGroup
    voltages: tuple[int, ...]

    def __post_init__(self):
        volts = tuple(int(g) for g in self.voltages)
        if len(volts) != len(self.base.arcs):
            raise DigraphError(f"{len(self.base.arcs)} arcs but {len(volts)} voltages")
        if any(not 0 <= g < self.group.order for g in volts):
            raise DigraphError("voltage outside the group")
        object.__setattr__(self, "voltages", volts)

    @classmethod
    def build(
        cls,
        labels: Sequence[str],
        group: FiniteGroup,
        arcs: Iterable[tuple],
    ) -> "VoltageDigraph":
        """Build from ``(u, v, element)`` triples; elements as ints or tuples."""
        arcs = list(arcs)
        base = Digraph(labels, [(u, v) for u, v, _ in arcs])
        return cls(base, group, tuple(group.index(g) for _, _, g in arcs))

    @property
    def r(self) -> int:
        return self.base.n

    def arc_voltages(self):
        """Iterate ``(u, v, g)`` over arc instances."""
        for (u, v), g in zip(self.base.arcs, self.voltages):
            yield u, v, g

    def coefficient_tensor(self) -> np.ndarray:
        """C[u, v, i] = number of arcs u->v with voltage g_i."""
        c = np.zeros((self.r, self.r, self.group.order), dtype=np.int64)
        for u, v, g in self.arc_voltages():
            c[u, v, g] += 1
        return c

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VoltageDigraph)
            and self.base.labels == other.base.labels
            and self.group == other.group
            and np.array_equal(self.coefficient_tensor(), other.coefficient_tensor())
        )

    def __repr__(self) -> str:
        return (
            f"VoltageDigraph(r={self.r}, arcs={len(self.voltages)}, "
            f"group={self.group.describe()!r})"
        )


@dataclass(frozen=True)
class Lift:
    """The lifted digraph plus, per lift arc, its base arc index and fiber g."""

    digraph: Digraph
    provenance: tuple[tuple[int, int], ...]


def lift(vd: VoltageDigraph) -> Lift:
    """Vertex (u, g) sits at index g*r + u (fiber copy g major)."""
    r, grp = vd.r, vd.group
    labels = [
        f"{vd.base.labels[u]}@{grp.format_element(g)}" for g in range(grp.order) for u in range(r)
    ]
    arcs = []
    provenance = []
    for g in range(grp.order):
        for e, (u, v, a) in enumerate(vd.arc_voltages()):
            h = grp.mul(g, a)
            arcs.append((g * r + u, h * r + v))
            provenance.append((e, g))
    return Lift(Digraph(labels, arcs), tuple(provenance))


def layer_matrices(vd: VoltageDigraph) -> np.ndarray:
    """Stack of r x r matrices A_i; A_i counts arcs carrying voltage g_i."""
    return np.moveaxis(vd.coefficient_tensor(), 2, 0)


def block_circulant_adjacency(vd: VoltageDigraph) -> np.ndarray:
    """Block (g, h) is A_{g^-1 h}; this is the lift adjacency in lift order."""
    layers = layer_matrices(vd)
    grp = vd.group
    m, r = grp.order, vd.r
    out = np.zeros((m * r, m * r), dtype=np.int64)
    for g in range(m):
        ginv = grp.inverse(g)
        for h in range(m):
            out[g * r : (g + 1) * r, h * r : (h + 1) * r] = layers[grp.mul(ginv, h)]
    return out


def fiber_partition(vd: VoltageDigraph) -> VertexPartition:
    """Blocks U_u = {(u, g) : g in G}, in base vertex order."""
    r, m = vd.r, vd.group.order
    return VertexPartition([[g * r + u for g in range(m)] for u in range(r)], r * m)


def fiber_quotient(vd: VoltageDigraph) -> np.ndarray:
    return layer_matrices(vd).sum(axis=0)
