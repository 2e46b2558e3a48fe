"""Directed multigraphs with loops, partitions and quotient matrices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Digraph",
    "DigraphError",
    "NotStronglyConnectedError",
    "VertexPartition",
    "bfs_distances",
    "diameter",
    "eccentricities",
    "format_coordinate",
    "is_regular_partition",
    "is_strongly_connected",
    "quotient_counts",
    "quotient_matrix",
]


class DigraphError(ValueError):
    pass


class NotStronglyConnectedError(DigraphError):
    def __init__(self):
        super().__init__("digraph is not strongly connected (eccentricity is infinite)")


class Digraph:
    """A digraph on labelled vertices; loops and parallel arcs allowed.

    Arcs are kept as an ordered multiset of ``(u, v)`` index pairs so that
    parallel arcs stay distinguishable (voltage assignments attach to arc
    instances).  Instances are treated as immutable: ``add_arc`` returns a
    new digraph.
    """

    def __init__(self, labels: Sequence[str], arcs: Iterable = ()):
        self.labels: tuple[str, ...] = tuple(str(x) for x in labels)
        if len(set(self.labels)) != len(self.labels):
            raise DigraphError("vertex labels must be distinct")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self.arcs: tuple[tuple[int, int], ...] = tuple(
            (self.vertex(u), self.vertex(v)) for u, v in arcs
        )
        n = len(self.labels)
        adj = np.zeros((n, n), dtype=np.int64)
        for u, v in self.arcs:
            adj[u, v] += 1
        adj.setflags(write=False)
        self._adjacency = adj

    @classmethod
    def from_adjacency(cls, matrix, labels: Sequence[str] | None = None) -> "Digraph":
        a = np.asarray(matrix, dtype=np.int64)
        n = a.shape[0]
        if labels is None:
            labels = [str(i) for i in range(n)]
        arcs = []
        for u, v in zip(*np.nonzero(a)):
            arcs.extend([(int(u), int(v))] * int(a[u, v]))
        return cls(labels, arcs)

    def vertex(self, key) -> int:
        """Resolve a vertex label (or an in-range integer index) to its index."""
        if isinstance(key, str):
            try:
                return self._index[key]
            except KeyError:
                raise DigraphError(f"unknown vertex {key!r}") from None
        if isinstance(key, (int, np.integer)) and 0 <= key < self.n:
            return int(key)
        raise DigraphError(f"unknown vertex {key!r}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def add_arc(self, u, v, multiplicity: int = 1) -> "Digraph":
        arc = (self.vertex(u), self.vertex(v))
        return Digraph(self.labels, self.arcs + (arc,) * multiplicity)

    def adjacency(self) -> np.ndarray:
        return self._adjacency

    def out_degrees(self) -> np.ndarray:
        return self._adjacency.sum(axis=1)

    def in_degrees(self) -> np.ndarray:
        return self._adjacency.sum(axis=0)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self._adjacency, self._adjacency.T))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.labels == other.labels
            and np.array_equal(self._adjacency, other._adjacency)
        )

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def format_coordinate(matrix) -> str:
    """Coordinate text: header ``n n nnz`` then ``u v value`` per nonzero."""
    a = np.asarray(matrix)
    rows, cols = np.nonzero(a)
    lines = [f"{a.shape[0]} {a.shape[1]} {len(rows)}"]
    lines += [f"{u} {v} {a[u, v]}" for u, v in zip(rows, cols)]
    return "\n".join(lines) + "\n"


def _reach(adj: np.ndarray, start: int) -> np.ndarray:
    seen = np.zeros(adj.shape[0], dtype=bool)
    seen[start] = True
    frontier = [start]
    while frontier:
        nxt = np.nonzero(adj[frontier].any(axis=0) & ~seen)[0]
        seen[nxt] = True
        frontier = list(nxt)
    return seen


def is_strongly_connected(d: Digraph) -> bool:
    if d.n == 0:
        raise DigraphError("digraph has no vertices")
    adj = d.adjacency() > 0
    return bool(_reach(adj, 0).all() and _reach(adj.T, 0).all())


def eccentricities(d: Digraph) -> np.ndarray:
    """Per-vertex eccentricity from partial sums I + A + ... + A^l.

    Works on the boolean pattern of the running sum so the counts never
    overflow; row u becomes fully positive exactly at ecc(u).
    """
    if not is_strongly_connected(d):
        raise NotStronglyConnectedError()
    n = d.n
    step = (d.adjacency() > 0).astype(np.int64)
    covered = np.eye(n, dtype=bool)
    ecc = np.where(covered.all(axis=1), 0, -1)
    ell = 0
    while (ecc < 0).any():
        ell += 1
        covered = covered | ((covered.astype(np.int64) @ step) > 0)
        ecc[(ecc < 0) & covered.all(axis=1)] = ell
    return ecc


def diameter(d: Digraph) -> int:
    return int(eccentricities(d).max())


def bfs_distances(d: Digraph, source: int) -> np.ndarray:
    """Directed distances from ``source`` (-1 where unreachable)."""
    adj = d.adjacency()
    out = [np.nonzero(row)[0] for row in adj]
    dist = np.full(d.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in out[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class VertexPartition:
    """Ordered blocks U_1..U_m of vertex indices covering 0..n-1 exactly."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __init__(self, blocks: Sequence[Iterable[int]], n: int):
        blocks = tuple(tuple(int(v) for v in b) for b in blocks)
        if any(len(b) == 0 for b in blocks):
            raise DigraphError("partition blocks must be nonempty")
        flat = sorted(v for b in blocks for v in b)
        if flat != list(range(n)):
            raise DigraphError("blocks do not partition the vertex set")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "n", int(n))

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls([[v] for v in range(n)], n)

    def block_of(self) -> np.ndarray:
        owner = np.empty(self.n, dtype=np.int64)
        for i, b in enumerate(self.blocks):
            owner[list(b)] = i
        return owner

    def indicator(self) -> np.ndarray:
        """n x m 0-1 matrix whose column i marks block i."""
        s = np.zeros((self.n, len(self.blocks)), dtype=np.int64)
        s[np.arange(self.n), self.block_of()] = 1
        return s

    def characteristic_matrix(self) -> np.ndarray:
        """S with normalised indicator columns, so that S^T S = I."""
        s = self.indicator().astype(float)
        return s / np.sqrt(s.sum(axis=0))


def _check_partition(d: Digraph, p: VertexPartition) -> None:
    if p.n != d.n:
        raise DigraphError(f"partition covers {p.n} vertices, digraph has {d.n}")


def quotient_matrix(d: Digraph, p: VertexPartition) -> np.ndarray:
    """B = S^T A S with the normalised characteristic matrix S."""
    _check_partition(d, p)
    s = p.characteristic_matrix()
    return s.T @ d.adjacency() @ s


def _block_counts(d: Digraph, p: VertexPartition) -> np.ndarray:
    # counts[u, j] = number of arcs from vertex u into block j
    return d.adjacency() @ p.indicator()


def is_regular_partition(d: Digraph, p: VertexPartition) -> bool:
    _check_partition(d, p)
    counts = _block_counts(d, p)
    return all((counts[list(b)] == counts[b[0]]).all() for b in p.blocks)


def quotient_counts(d: Digraph, p: VertexPartition) -> np.ndarray:
    """Integer matrix c_ij of a regular partition."""
    if not is_regular_partition(d, p):
        raise DigraphError("partition is not regular")
    counts = _block_counts(d, p)
    return np.array([counts[b[0]] for b in p.blocks])
