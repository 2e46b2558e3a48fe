"""Finite groups with a fixed element ordering.

Elements are always referred to by their index ``0..order-1`` in the
group's ordering, and index 0 is the identity.  Cyclic and product groups
are Abelian by construction and expose their characters; groups given by a
Cayley table are validated exhaustively at construction.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "AbelianRequiredError",
    "CharacterPoint",
    "FiniteGroup",
    "GVector",
    "GroupError",
    "cyclic",
    "evaluation_points",
    "from_cayley_table",
    "g_convolve",
    "product",
]

MAX_ASSOCIATIVITY_CHECK = 64


class GroupError(ValueError):
    """Invalid group data (bad table, unknown element, mismatched groups)."""


class AbelianRequiredError(GroupError):
    def __init__(self, msg: str = "spectrum evaluation requires Abelian voltages"):
        super().__init__(msg)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group together with an ordering of its elements.

    ``kind`` is ``"cyclic"``, ``"product"`` or ``"table"``.  For the first
    two, ``factors`` holds the cyclic orders and element ``i`` is the
    ``i``-th exponent tuple in lexicographic order.
    """

    kind: str
    factors: tuple[int, ...]
    table: np.ndarray = field(repr=False)
    inverses: np.ndarray = field(repr=False)
    is_abelian: bool

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inverses[a])

    def elements(self) -> list:
        """Element labels in group order: ints, or tuples for products."""
        if self.kind == "product":
            return [self.element(i) for i in range(self.order)]
        return list(range(self.order))

    def element(self, index: int):
        if self.kind == "product":
            return tuple(int(x) for x in np.unravel_index(index, self.factors))
        return int(index)

    def index(self, element) -> int:
        """Index of an element given as int (cyclic/table) or tuple (product)."""
        if self.kind == "product":
            if isinstance(element, (int, np.integer)):
                element = (element,)
            element = tuple(element)
            if len(element) != len(self.factors):
                raise GroupError(f"element {element} needs {len(self.factors)} components")
            reduced = tuple(int(x) % k for x, k in zip(element, self.factors))
            return int(np.ravel_multi_index(reduced, self.factors))
        if isinstance(element, tuple):
            if len(element) != 1:
                raise GroupError(f"element {element} is not a scalar")
            element = element[0]
        if self.kind == "cyclic":
            return int(element) % self.order
        e = int(element)
        if not 0 <= e < self.order:
            raise GroupError(f"element index {e} out of range 0..{self.order - 1}")
        return e

    def parse_element(self, text: str) -> int:
        """Parse ``"3"`` or ``"4,2"`` into an element index."""
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise GroupError(f"malformed group element {text!r}") from None
        if self.kind == "product":
            return self.index(parts)
        if len(parts) != 1:
            raise GroupError(f"malformed group element {text!r}")
        return self.index(parts[0])

    def format_element(self, index: int) -> str:
        if self.kind == "product":
            return ",".join(str(x) for x in self.element(index))
        return str(int(index))

    def describe(self) -> str:
        """Group declaration line body, e.g. ``cyclic 5`` or ``product 5 5``."""
        if self.kind == "table":
            return f"table {self.order}"
        return self.kind + " " + " ".join(str(k) for k in self.factors)

    def same_as(self, other: "FiniteGroup") -> bool:
        return self is other or (
            self.kind == other.kind
            and self.factors == other.factors
            and np.array_equal(self.table, other.table)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.same_as(other)

    def __hash__(self) -> int:
        return hash((self.kind, self.factors, self.table.tobytes()))

    # Characters (Abelian kinds only)

    def require_abelian_kind(self) -> None:
        if self.kind == "table":
            raise AbelianRequiredError()

    def character_values(self, point: "CharacterPoint") -> np.ndarray:
        """Values chi(g_i) of the character at ``point`` for every element."""
        self.require_abelian_kind()
        phase = np.zeros(self.order)
        grids = np.indices(self.factors).reshape(len(self.factors), -1)
        for j, k, g in zip(point.exponents, self.factors, grids):
            phase = phase + j * g / k
        return np.exp(2j * np.pi * phase)

    def character_exponents(self, point: "CharacterPoint") -> tuple[int, np.ndarray]:
        """Return ``(e, c)`` with chi(g_i) = zeta_e ** c[i], e the character order."""
        self.require_abelian_kind()
        e = point.order
        grids = np.indices(self.factors).reshape(len(self.factors), -1)
        c = np.zeros(self.order, dtype=np.int64)
        for j, k, g in zip(point.exponents, self.factors, grids):
            # j*e/k is an integer because k/gcd(k,j) divides e
            c += (j * e // k) * g
        return e, c % e


def _inverses(table: np.ndarray) -> np.ndarray:
    m = table.shape[0]
    inv = np.empty(m, dtype=np.int64)
    for a in range(m):
        (hits,) = np.nonzero(table[a] == 0)
        inv[a] = hits[0]
    return inv


def _product_table(factors: tuple[int, ...]) -> np.ndarray:
    m = math.prod(factors)
    tuples = np.indices(factors).reshape(len(factors), -1)
    k = np.array(factors).reshape(-1, 1, 1)
    summed = (tuples[:, :, None] + tuples[:, None, :]) % k
    return np.ravel_multi_index(tuple(summed), factors).reshape(m, m).astype(np.int64)


def cyclic(k: int) -> FiniteGroup:
    """The cyclic group Z_k with elements 0..k-1 and addition mod k."""
    if int(k) < 1:
        raise GroupError(f"cyclic group order must be positive, got {k}")
    k = int(k)
    idx = np.arange(k)
    table = (idx[:, None] + idx[None, :]) % k
    return FiniteGroup("cyclic", (k,), table, (-idx) % k, True)


def product(factors: Sequence[int]) -> FiniteGroup:
    """Direct product Z_k1 x ... x Z_kn, elements in lexicographic order."""
    factors = tuple(int(k) for k in factors)
    if not factors:
        raise GroupError("product group needs at least one factor")
    if any(k < 1 for k in factors):
        raise GroupError(f"product factors must be positive, got {factors}")
    table = _product_table(factors)
    return FiniteGroup("product", factors, table, _inverses(table), True)


def from_cayley_table(table) -> FiniteGroup:
    """Build a group from an m x m multiplication table of element indices.

    Raises GroupError naming the first violated axiom.  Associativity is
    checked exhaustively for m <= 64.
    """
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise GroupError("Cayley table must be a nonempty square matrix")
    m = t.shape[0]
    if t.min() < 0 or t.max() >= m:
        raise GroupError(f"Cayley table entries must lie in 0..{m - 1}")
    idx = np.arange(m)
    if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
        raise GroupError("identity not at index 0")
    full = np.arange(m)
    for i in range(m):
        if not np.array_equal(np.sort(t[i]), full) or not np.array_equal(np.sort(t[:, i]), full):
            raise GroupError("not a Latin square")
    if m <= MAX_ASSOCIATIVITY_CHECK:
        # (ab)c == a(bc) for all triples, vectorised over b, c
        for a in range(m):
            left = t[t[a]]  # left[b, c] = (a*b)*c
            right = t[a][t]  # right[b, c] = a*(b*c)
            bad = np.argwhere(left != right)
            if bad.size:
                b, c = bad[0]
                raise GroupError(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
    abelian = bool(np.array_equal(t, t.T))
    return FiniteGroup("table", (m,), t, _inverses(t), abelian)


@dataclass(frozen=True, eq=False)
class GVector:
    """Coefficient vector indexed by the elements of a group."""

    group: FiniteGroup
    coeffs: np.ndarray

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise GroupError(
                f"GVector has {len(self.coeffs)} coefficients, group order is {self.group.order}"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GVector)
            and self.group == other.group
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        return f"GVector({list(self.coeffs)})"

    def tolist(self) -> list:
        return [c.item() if hasattr(c, "item") else c for c in self.coeffs]


def g_convolve(a: GVector, b: GVector) -> GVector:
    """(a *_G b)_i = sum over g_j g_k = g_i of a_j b_k."""
    if not a.group.same_as(b.group):
        raise GroupError("cannot convolve vectors over different groups")
    g = a.group
    dtype = np.result_type(a.coeffs, b.coeffs)
    out = np.zeros(g.order, dtype=dtype)
    for j in np.nonzero(a.coeffs)[0]:
        out[g.table[j]] += a.coeffs[j] * b.coeffs
    return GVector(g, out)


@dataclass(frozen=True)
class CharacterPoint:
    """A point (w_1**j_1, ..., w_n**j_n) with w_t = exp(2 pi i / k_t)."""

    exponents: tuple[int, ...]
    moduli: tuple[int, ...]

    @property
    def values(self) -> tuple[complex, ...]:
        return tuple(cmath.exp(2j * math.pi * j / k) for j, k in zip(self.exponents, self.moduli))

    @property
    def order(self) -> int:
        """Multiplicative order of the character (lcm of component orders)."""
        return math.lcm(*(k // math.gcd(k, j) for j, k in zip(self.exponents, self.moduli)))

    def power(self, a: int) -> "CharacterPoint":
        return CharacterPoint(
            tuple((a * j) % k for j, k in zip(self.exponents, self.moduli)), self.moduli
        )

    def is_trivial(self) -> bool:
        return all(j == 0 for j in self.exponents)

    def __str__(self) -> str:
        parts = [f"w{k}^{j}" if j else "1" for j, k in zip(self.exponents, self.moduli)]
        return "(" + ", ".join(parts) + ")"


def evaluation_points(group: FiniteGroup) -> list[CharacterPoint]:
    """All character points of an Abelian-kind group, exponents in lex order."""
    group.require_abelian_kind()
    return [
        CharacterPoint(tuple(js), group.factors)
        for js in itertools.product(*(range(k) for k in group.factors))
    ]
