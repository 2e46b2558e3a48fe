"""Base-size polynomial matrices representing lifts.

A :class:`PolyMatrix` stores an ``r x r`` matrix whose entries are
coefficient vectors over the group elements, as an ``(r, r, m)`` array.
For ``cyclic(k)`` the vector is the coefficient list of a polynomial in
``z`` with exponents reduced mod ``k``; for product groups it is a
multi-indexed coefficient array flattened in lexicographic order.  Entry
products are G-convolutions, so powers count walks in the lift.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import CharacterPoint, FiniteGroup, GVector, GroupError
from .voltage import VoltageDigraph

__all__ = [
    "EvaluatedMatrix",
    "NumericalResidualError",
    "PolyMatrix",
    "ROUNDING_TOL",
    "eccentricities",
    "evaluate",
    "evaluate_all",
    "from_voltage",
    "inverse_transform",
    "multiply",
    "power",
    "power_via_dft",
    "render",
    "render_entry",
    "walk_counts",
]

ROUNDING_TOL = 1e-6
_INT64_SAFE = 2**62


class NumericalResidualError(ArithmeticError):
    """Inverse transform produced values too far from integers."""


@dataclass(frozen=True, eq=False)
class PolyMatrix:
    group: FiniteGroup
    coeffs: np.ndarray

    def __post_init__(self):
        c = self.coeffs
        if c.ndim != 3 or c.shape[0] != c.shape[1] or c.shape[2] != self.group.order:
            raise GroupError(
                f"coefficient array of shape {c.shape} does not fit an r x r "
                f"matrix over a group of order {self.group.order}"
            )

    @property
    def r(self) -> int:
        return self.coeffs.shape[0]

    @classmethod
    def identity(cls, group: FiniteGroup, r: int) -> "PolyMatrix":
        c = np.zeros((r, r, group.order), dtype=np.int64)
        c[np.arange(r), np.arange(r), group.identity] = 1
        return cls(group, c)

    @classmethod
    def zeros(cls, group: FiniteGroup, r: int) -> "PolyMatrix":
        return cls(group, np.zeros((r, r, group.order), dtype=np.int64))

    def entry(self, u: int, v: int) -> GVector:
        return GVector(self.group, self.coeffs[u, v].copy())

    def at_identity_point(self) -> np.ndarray:
        """B(1): sum of coefficients of every entry."""
        return self.coeffs.sum(axis=2)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return multiply(self, other)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        _check_compatible(self, other)
        return PolyMatrix(self.group, self.coeffs + other.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.group == other.group
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        return f"PolyMatrix(r={self.r}, group={self.group.describe()!r})"


@dataclass(frozen=True)
class EvaluatedMatrix:
    point: CharacterPoint
    values: np.ndarray


def from_voltage(vd: VoltageDigraph) -> PolyMatrix:
    return PolyMatrix(vd.group, vd.coefficient_tensor())


def _check_compatible(x: PolyMatrix, y: PolyMatrix) -> None:
    if not x.group.same_as(y.group):
        raise GroupError("polynomial matrices are over different groups")
    if x.r != y.r:
        raise GroupError(f"size mismatch: {x.r} vs {y.r}")


def _product_dtype(x: np.ndarray, y: np.ndarray, terms: int):
    dtype = np.result_type(x, y)
    if dtype.kind not in "iu":
        return dtype
    bound = int(np.abs(x).max(initial=0)) * int(np.abs(y).max(initial=0)) * terms
    return np.dtype(np.int64) if bound < _INT64_SAFE else np.dtype(object)


def multiply(x: PolyMatrix, y: PolyMatrix) -> PolyMatrix:
    """Matrix product with G-convolution as the scalar product (exact)."""
    _check_compatible(x, y)
    r, m = x.r, x.group.order
    dtype = _product_dtype(x.coeffs, y.coeffs, r * m)
    xc = x.coeffs.astype(dtype)
    yc = y.coeffs.astype(dtype)
    out = np.zeros((r, r, m), dtype=dtype)
    table = x.group.table
    for j in range(m):
        xj = xc[:, :, j]
        if not xj.any():
            continue
        # prod[u, v, k] = sum_w x[u, w, j] * y[w, v, k] lands on g_j g_k
        out[:, :, table[j]] += np.tensordot(xj, yc, axes=(1, 0))
    return PolyMatrix(x.group, out)


def power(x: PolyMatrix, ell: int) -> PolyMatrix:
    if ell < 0:
        raise ValueError("power must be nonnegative")
    result = PolyMatrix.identity(x.group, x.r)
    base = x
    while ell:
        if ell & 1:
            result = multiply(result, base)
        ell >>= 1
        if ell:
            base = multiply(base, base)
    return result


def walk_counts(x: PolyMatrix, ell: int, u: int, v: int) -> GVector:
    """Coefficient i counts walks of length ell from (u, h) to (v, h g_i)."""
    return power(x, ell).entry(u, v)


def evaluate(x: PolyMatrix, point: CharacterPoint) -> EvaluatedMatrix:
    chi = x.group.character_values(point)
    return EvaluatedMatrix(point, x.coeffs.astype(complex) @ chi)


def evaluate_all(x: PolyMatrix) -> np.ndarray:
    """B(omega) at every character point, stacked as (m, r, r) in point order.

    This is the unnormalised DFT of each entry's coefficient array.
    """
    x.group.require_abelian_kind()
    factors = x.group.factors
    r, m = x.r, x.group.order
    grid = x.coeffs.astype(complex).reshape((r, r) + factors)
    axes = tuple(range(2, 2 + len(factors)))
    # sum_g c_g exp(+2 pi i j.g/k) is m * ifftn
    vals = np.fft.ifftn(grid, axes=axes) * m
    return np.moveaxis(vals.reshape(r, r, m), 2, 0)


def inverse_transform(values: np.ndarray, group: FiniteGroup) -> np.ndarray:
    """Coefficients (r, r, m) from point values (m, r, r); inverse of evaluate_all."""
    group.require_abelian_kind()
    factors = group.factors
    m, r, _ = values.shape
    grid = np.moveaxis(values, 0, 2).reshape((r, r) + factors)
    axes = tuple(range(2, 2 + len(factors)))
    return (np.fft.fftn(grid, axes=axes) / m).reshape(r, r, m)


def power_via_dft(x: PolyMatrix, ell: int, tol: float = ROUNDING_TOL) -> PolyMatrix:
    """power(x, ell) computed pointwise in the Fourier domain, then rounded."""
    if ell < 0:
        raise ValueError("power must be nonnegative")
    vals = np.linalg.matrix_power(evaluate_all(x), ell)
    coeffs = inverse_transform(vals, x.group)
    rounded = np.rint(coeffs.real)
    residual = float(np.abs(coeffs - rounded).max(initial=0.0))
    if residual >= tol:
        raise NumericalResidualError(f"inverse transform residual {residual:.3g} exceeds {tol:g}")
    # large magnitudes make floats integral, hiding the error in the residual
    scale = float(np.abs(vals).max(initial=0.0))
    bound = np.finfo(float).eps * scale * (x.group.order + x.r)
    if bound >= tol:
        raise NumericalResidualError(
            f"coefficients too large for exact rounding (error bound {bound:.3g})"
        )
    return PolyMatrix(x.group, rounded.astype(np.int64))


def eccentricities(x: PolyMatrix, max_len: int | None = None) -> np.ndarray:
    """Eccentricity of each (u, g0) read off I + B + ... + B^l.

    Returns -1 for vertices that do not reach the whole lift within
    ``max_len`` (default r*m, enough for any strongly connected lift).
    """
    r, m = x.r, x.group.order
    if max_len is None:
        max_len = r * m
    step = PolyMatrix(x.group, (x.coeffs > 0).astype(np.int64))
    walk = PolyMatrix.identity(x.group, r)
    covered = walk.coeffs > 0
    ecc = np.where(covered.all(axis=(1, 2)), 0, -1)
    for ell in range(1, max_len + 1):
        if (ecc >= 0).all():
            break
        walk = multiply(walk, step)
        # only existence matters; clip to keep entries small
        walk = PolyMatrix(x.group, np.minimum(walk.coeffs, 1))
        covered |= walk.coeffs > 0
        ecc[(ecc < 0) & covered.all(axis=(1, 2))] = ell
    return ecc


def _monomial(exps: tuple[int, ...], multivariate: bool) -> str:
    parts = []
    for t, e in enumerate(exps):
        if e == 0:
            continue
        name = f"z{t + 1}" if multivariate else "z"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _fmt_coeff(c) -> str:
    if isinstance(c, (float, np.floating)):
        return f"{c:.12g}"
    if isinstance(c, (complex, np.complexfloating)):
        return f"({c.real:.12g}{c.imag:+.12g}i)"
    return str(c)


def render_entry(x: PolyMatrix, u: int, v: int) -> str:
    """Polynomial text such as ``2 + z^2 + z^3`` or ``1 + z1*z2``.

    Entries over table groups render as a coefficient vector.
    """
    coeffs = x.coeffs[u, v]
    grp = x.group
    if grp.kind == "table":
        return "(" + ", ".join(_fmt_coeff(c) for c in coeffs) + ")"
    multivariate = grp.kind == "product"
    terms: list[str] = []
    for i in np.nonzero(coeffs)[0]:
        c = coeffs[i]
        exps = tuple(int(e) for e in np.unravel_index(i, grp.factors))
        mono = _monomial(exps, multivariate)
        neg = not isinstance(c, complex) and c < 0
        mag = -c if neg else c
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = _fmt_coeff(mag) + mono
        if not terms:
            terms.append(("-" if neg else "") + body)
        else:
            terms.append(("- " if neg else "+ ") + body)
    return " ".join(terms) if terms else "0"


def render(x: PolyMatrix, labels=None) -> str:
    """One line per entry: ``<row> <col> <polynomial>``."""
    if labels is None:
        labels = [str(i) for i in range(x.r)]
    lines = [
        f"{labels[u]} {labels[v]} {render_entry(x, u, v)}" for u in range(x.r) for v in range(x.r)
    ]
    return "\n".join(lines) + "\n"
