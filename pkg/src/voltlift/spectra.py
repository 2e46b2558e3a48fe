"""Spectra of matrices, of lifts (via character points) and multiset tools.

Two eigenvalue routes are provided:

* ``eigenvalues`` - floating point (LAPACK Hessenberg reduction + shifted
  QR), certified by the first two power-sum moments.
* ``integer_spectrum`` - exact characteristic polynomial of an integer
  matrix and certified root isolation, which recovers multiplicities
  exactly even for defective eigenvalues.

``lift_spectrum`` evaluates the polynomial matrix at the character points.
In exact mode the points are grouped into Galois orbits; an orbit of
characters of order e is handled by the integer matrix
``sum_g A_g (x) C_e^c(g)`` (``C_e`` the companion matrix of the e-th
cyclotomic polynomial), whose characteristic polynomial is the product of
``det(lambda I - B(omega))`` over the orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import flint
import numpy as np

from .group import CharacterPoint, evaluation_points
from .polymat import evaluate_all, from_voltage
from .voltage import VoltageDigraph, lift

__all__ = [
    "DEFAULT_CLUSTER_TOL",
    "DEFAULT_COMPARE_TOL",
    "EigenvalueConvergenceError",
    "SizeGuardError",
    "SpectrumMultiset",
    "closed_form_p_family",
    "direct_spectrum",
    "eigenvalues",
    "integer_spectrum",
    "lift_spectrum",
    "min_cluster_separation",
    "multiset_distance",
    "multiset_equal",
    "multiset_subset",
    "orbit_blocks",
    "per_point_spectra",
]

DEFAULT_CLUSTER_TOL = 1e-7
DEFAULT_COMPARE_TOL = 1e-8
MOMENT_TOL = 1e-8
DIRECT_MAX_ORDER = 2000


class EigenvalueConvergenceError(ArithmeticError):
    pass


class SizeGuardError(ValueError):
    pass


def _sort_key(z: complex):
    return (z.real, z.imag)


@dataclass(frozen=True, eq=False)
class SpectrumMultiset:
    """Eigenvalues with repetition, stored sorted by (real, imag)."""

    values: np.ndarray

    def __init__(self, values: Iterable[complex]):
        vals = sorted((complex(v) for v in values), key=_sort_key)
        object.__setattr__(self, "values", np.array(vals, dtype=complex))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[complex, int]]) -> "SpectrumMultiset":
        return cls([v for v, mult in pairs for _ in range(mult)])

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other: "SpectrumMultiset") -> "SpectrumMultiset":
        return SpectrumMultiset(np.concatenate([self.values, other.values]))

    def clustered(self, tol: float = DEFAULT_CLUSTER_TOL) -> list[tuple[complex, int]]:
        """Single-linkage clusters at ``tol``; (mean, multiplicity) pairs.

        Ordered by real part descending, then imaginary part descending.
        """
        vals = self.values
        n = len(vals)
        if n == 0:
            return []
        parent = np.arange(n)

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        close = np.abs(vals[:, None] - vals[None, :]) <= tol
        for i, j in zip(*np.nonzero(np.triu(close, 1))):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[rj] = ri
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        pairs = [(complex(vals[g].mean()), len(g)) for g in groups.values()]
        pairs.sort(key=lambda p: (-p[0].real, -p[0].imag))
        return pairs

    def __repr__(self) -> str:
        body = ", ".join(f"{_short(v)}^({k})" if k > 1 else _short(v) for v, k in self.clustered())
        return "{" + body + "}"


def _short(z: complex) -> str:
    if abs(z.imag) <= 1e-12:
        return f"{z.real:.6g}"
    return f"{z:.6g}"


def _certify_moments(a: np.ndarray, vals: np.ndarray) -> None:
    tr1 = np.trace(a)
    tr2 = np.trace(a @ a)
    s1 = vals.sum()
    s2 = (vals * vals).sum()
    if abs(s1 - tr1) > MOMENT_TOL * max(1.0, abs(tr1)) or abs(s2 - tr2) > MOMENT_TOL * max(
        1.0, abs(tr2)
    ):
        raise EigenvalueConvergenceError(
            "eigenvalues fail the trace moment check "
            f"(sum {s1:.6g} vs tr {tr1:.6g}; sum sq {s2:.6g} vs tr sq {tr2:.6g}) for\n"
            + np.array2string(a)
        )


def eigenvalues(matrix, certify: bool = True) -> SpectrumMultiset:
    """Floating point eigenvalues of a square matrix, with multiplicity."""
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        return SpectrumMultiset([])
    a = a.astype(complex if np.iscomplexobj(a) else float)
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    try:
        vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise EigenvalueConvergenceError(
            f"eigenvalue iteration did not converge ({exc}) for\n" + np.array2string(a)
        ) from exc
    if certify:
        _certify_moments(a, vals)
    return SpectrumMultiset(vals)


def _charpoly_roots(poly: flint.fmpz_poly) -> list[complex]:
    out = []
    for root, mult in poly.complex_roots():
        z = complex(float(root.real.mid()), float(root.imag.mid()))
        out.extend([z] * mult)
    return out


def integer_spectrum(matrix) -> SpectrumMultiset:
    """Exact-multiplicity spectrum of an integer matrix.

    Roots of the exact characteristic polynomial are isolated with
    certified error bounds and rounded to double precision.
    """
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.dtype.kind not in "iuO":
        raise ValueError("integer_spectrum needs an integer matrix")
    if a.shape[0] == 0:
        return SpectrumMultiset([])
    poly = flint.fmpz_mat([[int(x) for x in row] for row in a]).charpoly()
    return SpectrumMultiset(_charpoly_roots(poly))


@lru_cache(maxsize=None)
def _cyclotomic_companion_powers(e: int) -> tuple[np.ndarray, ...]:
    """C_e^t for t = 0..e-1, C_e the companion matrix of Phi_e."""
    coeffs = [int(c) for c in flint.fmpz_poly.cyclotomic(e).coeffs()]
    d = len(coeffs) - 1
    comp = np.zeros((d, d), dtype=object)
    for i in range(1, d):
        comp[i, i - 1] = 1
    for i in range(d):
        comp[i, d - 1] = -coeffs[i]
    powers = [np.eye(d, dtype=np.int64).astype(object)]
    for _ in range(1, e):
        powers.append(powers[-1].dot(comp))
    return tuple(powers)


def orbit_blocks(vd: VoltageDigraph):
    """Yield ``(orbit, block)`` for each Galois orbit of character points.

    ``orbit`` lists the points (the first is the lexicographically least);
    ``block`` is an integer matrix whose eigenvalues are exactly those of
    B(omega) for all omega in the orbit.
    """
    grp = vd.group
    grp.require_abelian_kind()
    coeffs = vd.coefficient_tensor().astype(object)
    seen: set[tuple[int, ...]] = set()
    for point in evaluation_points(grp):
        if point.exponents in seen:
            continue
        e, c = grp.character_exponents(point)
        orbit = [point.power(a) for a in range(1, e + 1) if math.gcd(a, e) == 1]
        seen.update(p.exponents for p in orbit)
        powers = _cyclotomic_companion_powers(e)
        d = powers[0].shape[0]
        block = np.zeros((vd.r * d, vd.r * d), dtype=object)
        for g in range(grp.order):
            layer = coeffs[:, :, g]
            if layer.any():
                block += np.kron(layer, powers[int(c[g])])
        yield orbit, block


def per_point_spectra(vd: VoltageDigraph) -> list[tuple[CharacterPoint, SpectrumMultiset]]:
    """Floating point spectrum of B(omega) at every character point."""
    vals = evaluate_all(from_voltage(vd))
    return [(point, eigenvalues(vals[i])) for i, point in enumerate(evaluation_points(vd.group))]


def lift_spectrum(vd: VoltageDigraph, method: str = "exact") -> SpectrumMultiset:
    """Spectrum of the lift from the base polynomial matrix (Abelian voltages).

    ``method="numeric"`` is the plain union of floating point spectra of
    B(omega); ``"exact"`` uses the orbit blocks and exact root isolation.
    """
    vd.group.require_abelian_kind()
    if method == "numeric":
        out: list[complex] = []
        for _, spec in per_point_spectra(vd):
            out.extend(spec.values)
        return SpectrumMultiset(out)
    if method == "exact":
        out = []
        for _, block in orbit_blocks(vd):
            out.extend(integer_spectrum(block).values)
        return SpectrumMultiset(out)
    raise ValueError(f"unknown method {method!r}")


def direct_spectrum(
    vd: VoltageDigraph, method: str = "exact", max_order: int = DIRECT_MAX_ORDER
) -> SpectrumMultiset:
    """Spectrum of the explicitly constructed lift adjacency matrix."""
    n = vd.r * vd.group.order
    if n > max_order:
        raise SizeGuardError(f"lift has {n} vertices, above the limit of {max_order}")
    adj = lift(vd).digraph.adjacency()
    if method == "exact":
        return integer_spectrum(adj)
    if method == "numeric":
        return eigenvalues(adj)
    raise ValueError(f"unknown method {method!r}")


def _values(x) -> np.ndarray:
    if isinstance(x, SpectrumMultiset):
        return x.values
    return SpectrumMultiset(x).values


def _greedy_match(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance from each element of a to its greedily matched element of b.

    a is walked in (real, imag) order; each takes the nearest unused b.
    """
    free = np.ones(len(b), dtype=bool)
    dists = np.empty(len(a))
    for i, z in enumerate(a):
        d = np.where(free, np.abs(b - z), np.inf)
        k = int(np.argmin(d))
        dists[i] = d[k]
        free[k] = False
    return dists


def multiset_distance(a, b) -> float:
    """Largest matched distance; infinite when cardinalities differ."""
    av, bv = _values(a), _values(b)
    if len(av) != len(bv):
        return math.inf
    if len(av) == 0:
        return 0.0
    return float(_greedy_match(av, bv).max())


def multiset_subset(a, b, tol: float = DEFAULT_COMPARE_TOL) -> bool:
    av, bv = _values(a), _values(b)
    if len(av) > len(bv):
        return False
    if len(av) == 0:
        return True
    return bool((_greedy_match(av, bv) <= tol).all())


def multiset_equal(a, b, tol: float = DEFAULT_COMPARE_TOL) -> bool:
    return len(_values(a)) == len(_values(b)) and multiset_subset(a, b, tol)


def min_cluster_separation(spec: SpectrumMultiset, tol: float = DEFAULT_CLUSTER_TOL) -> float:
    """Smallest distance between distinct cluster representatives."""
    reps = np.array([v for v, _ in spec.clustered(tol)])
    if len(reps) < 2:
        return math.inf
    d = np.abs(reps[:, None] - reps[None, :])
    return float(d[np.triu_indices(len(reps), 1)].min())


def _eval_poly(coeffs, omega: complex) -> complex:
    return sum(complex(c) * omega**i for i, c in enumerate(coeffs))


def closed_form_p_family(n: int, p1, p2) -> SpectrumMultiset:
    """Eigenvalues of [[p1(w), 1], [1, p2(w)]] over the n-th roots of unity w.

    lambda = (p1 + p2 +- sqrt((p1 - p2)^2 + 4)) / 2 at each root.
    """
    if len(p1) > n or len(p2) > n:
        raise ValueError("coefficient vectors longer than the group order")
    out = []
    for j in range(n):
        w = complex(math.cos(2 * math.pi * j / n), math.sin(2 * math.pi * j / n))
        a, d = _eval_poly(p1, w), _eval_poly(p2, w)
        root = np.sqrt(complex((a - d) ** 2 + 4))
        out.append((a + d + root) / 2)
        out.append((a + d - root) / 2)
    return SpectrumMultiset(out)
