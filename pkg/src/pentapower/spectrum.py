"""Eigenvalues and diagonalising transforms for the two-band Toeplitz family.

The matrices treated here have a single constant band at offset +2 (value a)
and one at offset -2 (value b); everything else, including the main
diagonal, is zero. Entries at odd and even index positions never mix, so
each matrix splits into two interleaved "lanes" and every spectral object
below is assembled lane by lane.

All eigenvalues have the form 2*sqrt(ab)*cos(angle) where the angles are
fixed rational multiples of pi. The normalised nodes cos(angle) are real
regardless of a and b; the complex character of the problem lives entirely
in sqrt(ab) and in powers of sqrt(b/a).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .chebyshev import chebyshev_u, chebyshev_u_sequence

__all__ = [
    "MatrixSpec",
    "DerivedScalars",
    "SpectralDecomposition",
    "eigenvalues_even",
    "eigenvalues_odd",
    "transform_even",
    "transform_odd",
    "tridiag_charpoly",
    "char_function",
]


@dataclass(frozen=True)
class MatrixSpec:
    """Order n plus the two band values: a at offset +2, b at offset -2."""

    n: int
    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        if self.n < 3:
            raise ValueError(f"matrix order must be >= 3, got {self.n}")
        for name in ("a", "b"):
            value = complex(getattr(self, name))
            object.__setattr__(self, name, value)
            if not cmath.isfinite(value):
                raise ValueError(f"band value {name} must be finite, got {value!r}")
            if value == 0:
                raise ValueError(f"band value {name} must be nonzero")

    @property
    def is_even(self) -> bool:
        return self.n % 2 == 0


def _principal_sqrt(z: complex) -> complex:
    """Square root with Re >= 0, and Im >= 0 when the real part vanishes."""
    root = cmath.sqrt(z)
    if root.real < 0 or (root.real == 0 and root.imag < 0):
        root = -root
    return root


@dataclass(frozen=True)
class DerivedScalars:
    """The square roots every formula shares.

    sqrt_alpha is tied to sqrt_ab by sqrt_alpha = sqrt_ab / a rather than
    taken as an independent principal root: the lane recurrences need
    a * sqrt_alpha == sqrt_ab exactly, otherwise transform columns pair
    with the negated eigenvalue for some complex (a, b). Negating both
    roots together (branch_flip) is the only other coherent choice.
    """

    sqrt_ab: complex
    alpha: complex
    sqrt_alpha: complex

    @classmethod
    def from_spec(cls, spec: MatrixSpec, branch_flip: bool = False) -> "DerivedScalars":
        sqrt_ab = _principal_sqrt(spec.a * spec.b)
        alpha = spec.b / spec.a
        sqrt_alpha = sqrt_ab / spec.a
        if branch_flip:
            sqrt_ab = -sqrt_ab
            sqrt_alpha = -sqrt_alpha
        return cls(sqrt_ab=sqrt_ab, alpha=alpha, sqrt_alpha=sqrt_alpha)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (with multiplicity, in construction order) and the
    transform pair satisfying A @ transform == transform @ diag(eigenvalues).
    """

    eigenvalues: np.ndarray
    transform: np.ndarray
    inverse_transform: np.ndarray
    parity: str

    def __post_init__(self):
        for array in (self.eigenvalues, self.transform, self.inverse_transform):
            array.setflags(write=False)


def _even_nodes(n: int) -> np.ndarray:
    # cos(2*k*pi/(n+2)) for k = 1..n/2; shared by both lanes of an even-order matrix
    k = np.arange(1, n // 2 + 1)
    return np.cos(2.0 * k * np.pi / (n + 2))


def _odd_nodes(n: int) -> np.ndarray:
    # index m = 1..n; odd m belongs to the odd lane (denominator n+3),
    # even m to the even lane (denominator n+1)
    m = np.arange(1, n + 1)
    return np.where(
        m % 2 == 1,
        np.cos((m + 1) * np.pi / (n + 3)),
        np.cos(m * np.pi / (n + 1)),
    )


def _require_even(spec: MatrixSpec) -> None:
    if spec.n % 2 != 0:
        raise ValueError(f"matrix order must be even, got {spec.n}")


def _require_odd(spec: MatrixSpec) -> None:
    if spec.n % 2 != 1:
        raise ValueError(f"matrix order must be odd, got {spec.n}")


def eigenvalues_even(spec: MatrixSpec) -> np.ndarray:
    """The n/2 distinct eigenvalues of an even-order matrix, each of multiplicity two."""
    _require_even(spec)
    derived = DerivedScalars.from_spec(spec)
    return 2.0 * derived.sqrt_ab * _even_nodes(spec.n)


def eigenvalues_odd(spec: MatrixSpec) -> np.ndarray:
    """All n simple eigenvalues of an odd-order matrix, in index order."""
    _require_odd(spec)
    derived = DerivedScalars.from_spec(spec)
    return 2.0 * derived.sqrt_ab * _odd_nodes(spec.n)


def _int_powers(base: complex, count: int) -> np.ndarray:
    """[base**0, base**1, ..., base**(count-1)] by repeated multiplication."""
    out = np.empty(count, dtype=complex)
    acc = 1 + 0j
    for idx in range(count):
        out[idx] = acc
        acc *= base
    return out


def _lane_tables(nodes: np.ndarray, size: int, derived: DerivedScalars):
    """Chebyshev value table and the scaled lane factors for one lane.

    Returns (columns, inverse_rows): columns[p, k] is the transform lane,
    inverse_rows[k, q] the inverse lane before the per-node weight.
    """
    cheb = np.array(
        [chebyshev_u_sequence(size - 1, complex(x)) for x in nodes], dtype=complex
    ).T
    up = _int_powers(derived.sqrt_alpha, size)
    down = _int_powers(1 / derived.sqrt_alpha, size)
    columns = up[:, None] * cheb
    inverse_rows = down[None, :] * cheb.T
    return columns, inverse_rows


def transform_even(spec: MatrixSpec, *, branch_flip: bool = False) -> SpectralDecomposition:
    """Diagonalising pair for even order.

    Column 2k-1 carries the odd lane and column 2k the even lane for the
    k-th eigenvalue, both lanes sharing the same Chebyshev profile. The
    inverse rows carry the weights (4 - 4*node**2)/(n + 2).
    """
    _require_even(spec)
    n = spec.n
    half = n // 2
    derived = DerivedScalars.from_spec(spec, branch_flip=branch_flip)
    nodes = _even_nodes(n)
    weights = 4.0 * (1.0 - nodes**2) / (n + 2)
    columns, inverse_rows = _lane_tables(nodes, half, derived)
    weighted_rows = weights[:, None] * inverse_rows

    transform = np.zeros((n, n), dtype=complex)
    inverse = np.zeros((n, n), dtype=complex)
    transform[0::2, 0::2] = columns
    transform[1::2, 1::2] = columns
    inverse[0::2, 0::2] = weighted_rows
    inverse[1::2, 1::2] = weighted_rows

    eigenvalues = np.repeat(2.0 * derived.sqrt_ab * nodes, 2)
    return SpectralDecomposition(
        eigenvalues=eigenvalues,
        transform=transform,
        inverse_transform=inverse,
        parity="even",
    )


def transform_odd(spec: MatrixSpec, *, branch_flip: bool = False) -> SpectralDecomposition:
    """Diagonalising pair for odd order.

    The odd lane has (n+1)/2 positions and uses the odd-indexed
    eigenvalues; the even lane has (n-1)/2 positions and the even-indexed
    ones. Weights divide by n+3 on the odd lane and n+1 on the even lane.
    """
    _require_odd(spec)
    n = spec.n
    derived = DerivedScalars.from_spec(spec, branch_flip=branch_flip)
    nodes = _odd_nodes(n)

    transform = np.zeros((n, n), dtype=complex)
    inverse = np.zeros((n, n), dtype=complex)
    for lane_slice, lane_nodes, size, denom in (
        (slice(0, None, 2), nodes[0::2], (n + 1) // 2, n + 3),
        (slice(1, None, 2), nodes[1::2], (n - 1) // 2, n + 1),
    ):
        weights = 4.0 * (1.0 - lane_nodes**2) / denom
        columns, inverse_rows = _lane_tables(lane_nodes, size, derived)
        transform[lane_slice, lane_slice] = columns
        inverse[lane_slice, lane_slice] = weights[:, None] * inverse_rows

    eigenvalues = 2.0 * derived.sqrt_ab * nodes
    return SpectralDecomposition(
        eigenvalues=eigenvalues,
        transform=transform,
        inverse_transform=inverse,
        parity="odd",
    )


def tridiag_charpoly(order: int, spec: MatrixSpec, x) -> complex:
    """Determinant of the order-sized tridiagonal matrix with diagonal x and
    off-diagonal product a*b, by the recurrence p_k = x*p_{k-1} - ab*p_{k-2}.
    """
    order = int(order)
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    x = complex(x)
    ab = spec.a * spec.b
    prev = 1 + 0j
    if order == 0:
        return prev
    cur = x
    for _ in range(order - 1):
        prev, cur = cur, x * cur - ab * prev
    return cur


def char_function(spec: MatrixSpec, lam) -> complex:
    """Normalised characteristic function: zero exactly on the spectrum.

    The value differs from det(lam*I - A) by a lam-independent constant
    factor; only the root set and that constancy are contractual.
    """
    derived = DerivedScalars.from_spec(spec)
    z = complex(lam) / (2.0 * derived.sqrt_ab)
    if spec.is_even:
        u = chebyshev_u(spec.n // 2, z)
        return u * u
    return chebyshev_u((spec.n - 1) // 2, z) * chebyshev_u((spec.n + 1) // 2, z)
