"""Small numeric helpers shared across the package.

Centralizes the tolerance conventions: a single global ``eps`` (default
1e-9, overridable per object or via the ``MDK_EPS`` environment variable),
an ``integer_eps`` of 1e-6 for round-then-verify integer extraction, and
continued-fraction caps for rational phase detection (240 for the central
charge, 10080 for twist orders).
"""

from __future__ import annotations

import cmath
import math
import os
from fractions import Fraction

import numpy as np

from .errors import NonIntegralError

DEFAULT_EPS = 1e-9
INTEGER_EPS = 1e-6
CHARGE_DENOMINATOR_CAP = 240
TWIST_ORDER_CAP = 10080


def default_eps() -> float:
    """Global tolerance, honoring the MDK_EPS environment variable."""
    raw = os.environ.get("MDK_EPS")
    if raw is None:
        return DEFAULT_EPS
    value = float(raw)
    if value <= 0:
        raise ValueError(f"MDK_EPS must be positive, got {raw!r}")
    return value


def unit_root(num: int, den: int) -> complex:
    """e^{2 pi i num/den}, exact at quarter turns.

    Emitting exact 1, -1, i, -i keeps twist multisets and the unit twist
    bit-exact, which the validation layer's T_0 == 1 check relies on.
    """
    if den <= 0:
        raise ValueError("denominator must be positive")
    frac = Fraction(num, den) % 1
    quarters = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j,
                Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
    if frac in quarters:
        return quarters[frac]
    return cmath.exp(2j * cmath.pi * frac.numerator / frac.denominator)


def nearest_int(x, eps: float = INTEGER_EPS, what: str = "value", where=None) -> int:
    """Round to the nearest integer, raising if the residual exceeds eps."""
    r = round(float(np.real(x)))
    residual = abs(complex(x) - r)
    if residual > eps:
        raise NonIntegralError(
            f"{what} = {x} is not an integer within {eps:g} (residual {residual:.3g})",
            where=where, residual=residual)
    return int(r)


def as_fraction(x: float, max_den: int, tol: float) -> Fraction | None:
    """Best rational approximation with bounded denominator, or None."""
    frac = Fraction(x).limit_denominator(max_den)
    if abs(float(frac) - x) <= tol:
        return frac
    return None


def phase_fraction(z: complex, max_den: int, tol: float) -> Fraction | None:
    """Write z/|z| as e^{2 pi i t} with t rational, denominator <= max_den.

    Returns t in [0, 1) or None if no bounded rational reproduces the phase
    within tol (measured on the unit circle, not on the angle).
    """
    if z == 0:
        return None
    angle = cmath.phase(z) / (2 * math.pi) % 1.0
    frac = Fraction(angle).limit_denominator(max_den) % 1
    if abs(unit_root(frac.numerator, frac.denominator) - z / abs(z)) <= tol:
        return frac
    return None


def permutation_from_matrix(m: np.ndarray, eps: float) -> list[int] | None:
    """Read a permutation pi with m[i, pi(i)] ~ 1 off a near-0/1 matrix.

    Returns None if m is not within eps of a permutation matrix.
    """
    n = m.shape[0]
    if m.shape != (n, n):
        return None
    rounded = np.round(m.real)
    if np.abs(m - rounded).max() > eps:
        return None
    if not np.array_equal(np.sort(np.unique(rounded)), np.array([0.0, 1.0])) and n > 1:
        return None
    if (rounded.sum(axis=0) != 1).any() or (rounded.sum(axis=1) != 1).any():
        return None
    return [int(np.argmax(rounded[i])) for i in range(n)]


def rref(mat: np.ndarray, tol: float = 1e-10) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form by Gaussian elimination with partial pivoting.

    Returns (R, pivot_columns). Rows of R are scaled so each pivot is 1;
    zero rows are dropped.
    """
    a = np.array(mat, dtype=float)
    nrows, ncols = a.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        pivot = row + int(np.argmax(np.abs(a[row:, col])))
        if abs(a[pivot, col]) <= tol:
            continue
        a[[row, pivot]] = a[[pivot, row]]
        a[row] = a[row] / a[row, col]
        for r in range(nrows):
            if r != row and abs(a[r, col]) > 0:
                a[r] = a[r] - a[r, col] * a[row]
        pivots.append(col)
        row += 1
    return a[:row], pivots


def rationalize_matrix(mat: np.ndarray, max_den: int, tol: float):
    """Entrywise rational approximation; returns nested Fraction lists or None."""
    out = []
    for row in np.atleast_2d(mat):
        frow = []
        for x in row:
            frac = as_fraction(float(x), max_den, tol)
            if frac is None:
                return None
            frow.append(frac)
        out.append(frow)
    return out
