"""Eigenvalues, energy and the characteristic polynomial by two routes.

The numeric route diagonalizes the dense Hermitian matrix; the exact route
expands the characteristic polynomial coefficient by coefficient over
elementary subgraphs of the mixed graph:

    (-1)**k a_k  =  sum over order-k elementary subgraphs X' of
                    (-1)**(r + l_neg + l_semi_neg) * 2**(l_neg + l_pos) * Q(X')

with a_0 = 1, r = order - components, the l counters classifying cycle
components by gain, and Q the product of reciprocal host degrees over the
covered vertices.  k = n specializes to an exact rational determinant.  The
two routes are kept independent so each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .enumeration import enumerate_elementary_subgraphs
from .graphs import MixedGraph
from .matrices import is_hermitian, randic_matrix

#: Eigenvalues within this of zero count as zero (negative-eigenvalue count,
#: minimal modulus and singularity decisions all use it).
TOL_ZERO = 1e-9

#: Largest n the elementary-subgraph expansion will attempt.
DEFAULT_COMBINATORIAL_CAP = 10


@dataclass(frozen=True)
class Spectrum:
    """Sorted real eigenvalues of a Hermitian matrix plus derived scalars."""

    eigenvalues: np.ndarray
    tol_zero: float = TOL_ZERO

    def __post_init__(self) -> None:
        vals = np.asarray(self.eigenvalues, dtype=float)
        object.__setattr__(self, "eigenvalues", np.sort(vals))

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def energy(self) -> float:
        """Sum of absolute values of the eigenvalues."""
        return float(np.sum(np.abs(self.eigenvalues)))

    @property
    def rho(self) -> float:
        """Spectral radius: the largest |eigenvalue|."""
        return float(np.max(np.abs(self.eigenvalues)))

    @property
    def sigma(self) -> float:
        """The smallest |eigenvalue|."""
        return float(np.min(np.abs(self.eigenvalues)))

    @property
    def negative_count(self) -> int:
        """Number of eigenvalues below -tol_zero."""
        return int(np.sum(self.eigenvalues < -self.tol_zero))

    @property
    def determinant(self) -> float:
        """Product of the eigenvalues."""
        return float(np.prod(self.eigenvalues))

    @property
    def is_singular(self) -> bool:
        return self.sigma <= self.tol_zero

    def multiplicity(self, value: float, tol: float = 1e-8) -> int:
        return int(np.sum(np.abs(self.eigenvalues - value) <= tol))

    def contains(self, value: float, tol: float = 1e-8) -> bool:
        return self.multiplicity(value, tol) > 0


def eigendecompose(mat: np.ndarray, vectors: bool = False):
    """Spectrum of a Hermitian matrix, optionally with orthonormal eigenvectors.

    Rejects non-Hermitian input instead of silently symmetrizing.
    """
    mat = np.asarray(mat, dtype=complex)
    if not is_hermitian(mat):
        raise ValueError("matrix is not Hermitian")
    if vectors:
        vals, vecs = np.linalg.eigh(mat)
        return Spectrum(vals), vecs
    return Spectrum(np.linalg.eigvalsh(mat))


def randic_spectrum(g: MixedGraph) -> Spectrum:
    """Spectrum of the Randic matrix of a mixed graph."""
    return eigendecompose(randic_matrix(g))


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial x**n + a_1 x**(n-1) + ... + a_n.

    ``coefficients`` lists a_0 = 1 through a_n, ascending index; entries are
    Fractions on the exact route and floats on the numeric one.
    """

    coefficients: tuple
    exact: bool = field(default=False)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coefficients)

    def __call__(self, x: float) -> float:
        out = 0.0
        for c in self.as_floats():
            out = out * x + float(c)
        return out

    def max_difference(self, other: "CharPoly") -> float:
        if self.degree != other.degree:
            raise ValueError("polynomials of different degree")
        return max(
            abs(a - b) for a, b in zip(self.as_floats(), other.as_floats())
        )


def char_poly_numeric(mat: np.ndarray) -> CharPoly:
    """Characteristic polynomial expanded from the eigenvalues."""
    spectrum = eigendecompose(mat)
    coeffs = np.array([1.0])
    for lam in spectrum.eigenvalues:
        coeffs = np.convolve(coeffs, np.array([1.0, -lam]))
    return CharPoly(tuple(float(c) for c in coeffs), exact=False)


def char_poly_combinatorial(
    g: MixedGraph, cap: int = DEFAULT_COMBINATORIAL_CAP
) -> CharPoly:
    """Exact rational characteristic polynomial of the Randic matrix.

    Sums the signed elementary-subgraph weights order by order.  Needs every
    degree >= 1 and n <= cap; beyond the cap use char_poly_numeric.
    """
    if g.n > cap:
        raise ValueError(
            f"n = {g.n} above combinatorial cap {cap}; use the numeric route"
        )
    if min(g.degrees()) == 0:
        raise ValueError("isolated vertex: Randic matrix undefined")
    coeffs = []
    for k in range(g.n + 1):
        total = sum(
            (sub.signed_weight() for sub in enumerate_elementary_subgraphs(g, k)),
            Fraction(0),
        )
        sign = -1 if k % 2 else 1
        coeffs.append(sign * total)
    return CharPoly(tuple(coeffs), exact=True)


def determinant_combinatorial(g: MixedGraph) -> Fraction:
    """Exact determinant of the Randic matrix via spanning elementary subgraphs."""
    if min(g.degrees()) == 0:
        raise ValueError("isolated vertex: Randic matrix undefined")
    return sum(
        (sub.signed_weight() for sub in enumerate_elementary_subgraphs(g, g.n)),
        Fraction(0),
    )


def eigenvalue_residuals(mat: np.ndarray) -> float:
    """max over eigenpairs of the infinity norm of H v - lambda v."""
    spectrum, vecs = eigendecompose(mat, vectors=True)
    residual = mat @ vecs - vecs * spectrum.eigenvalues[np.newaxis, :]
    return float(np.max(np.abs(residual)))
