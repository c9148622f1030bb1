"""Commutative-algebra screening and Witt-group operations.

Everything here is necessary-condition screening on modular data: a
passing candidate is compatible with being a commutative (etale) algebra
object, but existence is never asserted, since associativity of the
structure morphisms is not visible at the level of S and T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (DimensionMismatchError, MdkError, NonRationalChargeError,
                     SearchBudgetError)
from .invariants import ModularInvariant
from .modular_data import (ModularData, central_charge, deligne_product,
                           gauss_sum, reverse)

__all__ = [
    "Verdict", "AlgebraCandidate", "screen_algebra", "local_modules_dim",
    "algebra_from_invariant", "WittInvariants", "witt_invariants",
    "witt_product", "witt_inverse", "WittObstruction", "witt_obstruction",
    "AnisotropyReport", "anisotropy_screen",
]


@dataclass(frozen=True)
class Verdict:
    """One named screening outcome; advisory checks have required=False."""

    check: str
    passed: bool
    residual: float
    required: bool = True


@dataclass(frozen=True)
class AlgebraCandidate:
    """A multiplicity vector n_i screened as a commutative-algebra object.

    d(Gamma) = sum n_i d_i; n_0 = 1 always (a violation is a hard error,
    not a verdict).
    """

    host: ModularData
    mult: tuple[int, ...]
    dim_gamma: float
    verdicts: tuple[Verdict, ...]

    @property
    def passes(self) -> bool:
        return all(v.passed for v in self.verdicts if v.required)

    def verdict(self, check: str) -> Verdict:
        for v in self.verdicts:
            if v.check == check:
                return v
        raise KeyError(check)


def _dimension_slack(md: ModularData, eps: float) -> float:
    # float error in d(Gamma)^2 - dim scales with rank and dim
    u = float(np.finfo(float).eps)
    return eps + 16.0 * u * md.rank * max(1.0, md.global_dim)


def _screen_verdicts(host: ModularData, mult: np.ndarray, eps: float,
                     lenient: bool) -> tuple[float, list[Verdict]]:
    d = host.dims
    dim = host.global_dim
    dgamma = float(mult @ d)
    verdicts = [Verdict("unit_multiplicity", True, 0.0)]

    over = dgamma * dgamma - dim
    verdicts.append(Verdict("dimension_bound", over <= _dimension_slack(host, eps),
                            max(0.0, over)))

    support = np.flatnonzero(mult)
    twist_res = float(np.abs(host.T[support] - 1.0).max()) if support.size else 0.0
    verdicts.append(Verdict("trivial_twist_support", twist_res <= eps,
                            twist_res, required=not lenient))

    mult_res = float(np.max(mult - d)) if host.rank else 0.0
    verdicts.append(Verdict("multiplicity_bound", mult_res <= 1e-6,
                            max(0.0, mult_res), required=not lenient))

    quotient = dim / (dgamma * dgamma)
    verdicts.append(Verdict("local_quotient", quotient >= 1.0 - 1e-6,
                            max(0.0, 1.0 - quotient)))
    return dgamma, verdicts


def _as_mult(host: ModularData, mult) -> np.ndarray:
    arr = np.asarray(mult)
    if arr.shape != (host.rank,):
        raise DimensionMismatchError(
            f"multiplicity vector has shape {arr.shape}, host rank {host.rank}")
    rounded = np.round(arr.astype(float)).astype(np.int64)
    if np.abs(arr.astype(float) - rounded).max() > 1e-9:
        raise MdkError("multiplicities must be integers")
    if rounded.min() < 0:
        raise MdkError("multiplicities must be nonnegative")
    if rounded[0] != 1:
        raise MdkError(f"n_0 must be 1 (got {rounded[0]}): the unit appears "
                       f"exactly once in a connected algebra")
    return rounded


def screen_algebra(host: ModularData, mult, eps: float | None = None,
                   lenient: bool = False) -> AlgebraCandidate:
    """Screen a multiplicity vector as a commutative-algebra candidate.

    Five named verdicts: unit_multiplicity (n_0 = 1, also a hard
    precondition), dimension_bound (d(Gamma)^2 <= dim C up to float
    slack), trivial_twist_support (theta_i = 1 wherever n_i > 0),
    multiplicity_bound (n_i <= d_i + 1e-6), local_quotient
    (dim C / d(Gamma)^2 >= 1 - 1e-6).  With lenient=True the twist and
    multiplicity screens become advisory and do not affect `passes`.

    A pass is a necessary condition only; it never asserts that the
    algebra exists.
    """
    host.require_valid()
    eps = host.eps if eps is None else float(eps)
    vec = _as_mult(host, mult)
    dgamma, verdicts = _screen_verdicts(host, vec, eps, lenient)
    return AlgebraCandidate(host, tuple(int(x) for x in vec), dgamma,
                            tuple(verdicts))


def local_modules_dim(c: AlgebraCandidate) -> float:
    """dim C / d(Gamma)^2, the dimension of the local-module category.

    Within 1e-6 of 1 means the local modules are trivial (the maximal,
    Lagrangian case).  Requires a candidate that passes screening.
    """
    if not c.passes:
        raise MdkError("local-module dimension is only defined for "
                       "candidates that pass screening")
    return c.host.global_dim / (c.dim_gamma * c.dim_gamma)


def algebra_from_invariant(left: ModularData, right: ModularData,
                           z: ModularInvariant, eps: float | None = None,
                           lenient: bool = False) -> AlgebraCandidate:
    """The product-category algebra candidate attached to an invariant.

    Lives in deligne_product(left, reverse(right)); the multiplicity of
    the (i, j) product object is Z_{ji}.  Appends a "maximal" verdict:
    |d(Gamma) - sqrt(dim L * dim R)| < 1e-6, the dimension every
    invariant-induced algebra must attain.
    """
    Z = np.asarray(z.Z)
    if Z.shape != (right.rank, left.rank):
        raise DimensionMismatchError(
            f"invariant has shape {Z.shape}, expected "
            f"({right.rank}, {left.rank})")
    tol = max(left.eps, right.eps)
    if Z[0, 0] != 1 or Z.min() < 0:
        raise MdkError("invariant must be nonnegative with Z_00 = 1")
    if (np.abs(Z @ left.S - right.S @ Z).max() > max(tol, 1e-9)
            or np.abs(Z * left.T[None, :] - right.T[:, None] * Z).max() > max(tol, 1e-9)):
        raise MdkError("matrix does not intertwine the given data sets")

    host = deligne_product(left, reverse(right))
    eps = host.eps if eps is None else float(eps)
    vec = _as_mult(host, Z.T.flatten())
    dgamma, verdicts = _screen_verdicts(host, vec, eps, lenient)
    target = math.sqrt(left.global_dim * right.global_dim)
    res = abs(dgamma - target)
    verdicts.append(Verdict("maximal", res < 1e-6, res))
    return AlgebraCandidate(host, tuple(int(x) for x in vec), dgamma,
                            tuple(verdicts))


@dataclass(frozen=True)
class WittInvariants:
    """Witt-class invariants computable from modular data alone.

    is_center_candidate is a necessary-condition verdict: central charge
    0 mod 8 and a bounded search finding a trivial-twist multiplicity
    vector of dimension sqrt(dim).  `reasons` lists the failed tests
    (empty when the candidate verdict is positive).
    """

    global_dim: float
    central_charge: Fraction | None
    gauss_sum: complex
    is_center_candidate: bool
    reasons: tuple[str, ...]


class _Budget(Exception):
    pass


def _lagrangian_search(md: ModularData, eps: float,
                       node_cap: int = 10 ** 6):
    """Find n with n_0=1, n_i <= d_i, trivial-twist support and
    sum n_i d_i = sqrt(dim) within 1e-4.  Returns (vector | None,
    budget_exhausted)."""
    d = md.dims
    target = math.sqrt(md.global_dim)
    idx = [i for i in range(1, md.rank) if abs(md.T[i] - 1.0) <= eps]
    idx.sort(key=lambda i: -d[i])
    bounds = [int(math.floor(d[i] + 1e-6)) for i in idx]
    suffix = np.zeros(len(idx) + 1)
    for k in range(len(idx) - 1, -1, -1):
        suffix[k] = suffix[k + 1] + bounds[k] * d[idx[k]]

    chosen = [0] * len(idx)
    state = {"nodes": 0}

    def dfs(k: int, acc: float):
        state["nodes"] += 1
        if state["nodes"] > node_cap:
            raise _Budget
        if abs(acc - target) < 1e-4:
            return True
        if acc > target + 1e-4 or acc + suffix[k] < target - 1e-4:
            return False
        if k == len(idx):
            return False
        for n in range(bounds[k], -1, -1):
            chosen[k] = n
            if dfs(k + 1, acc + n * d[idx[k]]):
                return True
        chosen[k] = 0
        return False

    try:
        if not dfs(0, 1.0):
            return None, False
    except _Budget:
        return None, True
    vec = [0] * md.rank
    vec[0] = 1
    for k, i in enumerate(idx):
        vec[i] = chosen[k]
    return tuple(vec), False


def witt_invariants(md: ModularData, eps: float | None = None) -> WittInvariants:
    """Global dimension, Gauss sum, rational central charge, and the
    center-candidate verdict with reasons."""
    md.require_valid()
    eps = md.eps if eps is None else float(eps)
    reasons = []
    try:
        charge = central_charge(md)
    except NonRationalChargeError:
        charge = None
        reasons.append("central charge not recognized as a rational number")
    if charge is not None and charge != 0:
        reasons.append(f"central charge {charge} is nonzero mod 8")
    found, exhausted = _lagrangian_search(md, eps)
    if found is None:
        if exhausted:
            reasons.append("no trivial-twist candidate of dimension sqrt(dim) "
                           "found within the search budget (inconclusive)")
        else:
            reasons.append("no trivial-twist multiplicity vector reaches "
                           "dimension sqrt(dim)")
    return WittInvariants(md.global_dim, charge, gauss_sum(md),
                          not reasons, tuple(reasons))


def witt_product(a: ModularData, b: ModularData) -> ModularData:
    """Witt-monoid product: the external (Kronecker) product of the data."""
    return deligne_product(a, b)


def witt_inverse(a: ModularData) -> ModularData:
    """Witt inverse: the braiding-reversed data (conjugated S and T)."""
    return reverse(a)


@dataclass(frozen=True)
class WittObstruction:
    verdict: str  # "incompatible" or "possibly_equivalent"
    reasons: tuple[str, ...]


def witt_obstruction(left: ModularData, right: ModularData) -> WittObstruction:
    """Obstructions to Witt equivalence of two data sets.

    Incompatible when the central charges differ mod 8 or when the
    product with the reversed partner fails the center-candidate search;
    otherwise possibly_equivalent.  Equivalence itself is never claimed.
    """
    left.require_valid()
    right.require_valid()
    reasons = []
    try:
        cl = central_charge(left)
        cr = central_charge(right)
    except NonRationalChargeError:
        cl = cr = None
        reasons.append("central charge comparison unavailable (non-rational)")
    if cl is not None and cl != cr:
        reasons.append(f"central charges differ mod 8: {cl} vs {cr}")
    if not reasons:
        wi = witt_invariants(deligne_product(left, reverse(right)))
        if not wi.is_center_candidate:
            reasons.extend(f"product with reversed partner: {r}"
                           for r in wi.reasons)
    if reasons:
        return WittObstruction("incompatible", tuple(reasons))
    return WittObstruction("possibly_equivalent", ())


@dataclass(frozen=True)
class AnisotropyReport:
    """All multiplicity vectors passing the algebra screens.

    `anisotropic` means no nontrivial candidate survived: necessary
    evidence for complete anisotropy, never a proof.
    """

    rank: int
    candidates: tuple[tuple[int, ...], ...]
    nontrivial: tuple[tuple[int, ...], ...]
    anisotropic: bool


def anisotropy_screen(md: ModularData, eps: float | None = None) -> AnisotropyReport:
    """Exhaustive bounded search for commutative-algebra candidates.

    Enumerates every vector with n_0 = 1, n_i <= floor(d_i + 1e-6) and
    d(Gamma)^2 <= dim C, screening each.  Supports rank <= 24; raises
    SearchBudgetError when the product of the entry bounds exceeds 10^7
    rather than truncating.
    """
    md.require_valid()
    eps = md.eps if eps is None else float(eps)
    if md.rank > 24:
        raise MdkError(f"anisotropy screen supports rank <= 24, got {md.rank}")
    d = md.dims
    bounds = [int(math.floor(d[i] + 1e-6)) for i in range(1, md.rank)]
    budget = 1.0
    for b in bounds:
        budget *= b + 1
    if budget > 1e7:
        raise SearchBudgetError(
            f"{budget:.3g} candidate vectors exceed the 1e7 search budget")

    # only trivial-twist support can pass the screens, so enumerate there
    live = [i for i in range(1, md.rank) if abs(md.T[i] - 1.0) <= eps]
    dim = md.global_dim
    slack = _dimension_slack(md, eps)
    found: list[tuple[int, ...]] = []
    vec = np.zeros(md.rank, dtype=np.int64)
    vec[0] = 1

    def dfs(k: int, acc: float):
        if acc * acc > dim + slack:
            return
        if k == len(live):
            if screen_algebra(md, vec.copy(), eps=eps).passes:
                found.append(tuple(int(x) for x in vec))
            return
        i = live[k]
        for n in range(int(math.floor(d[i] + 1e-6)) + 1):
            vec[i] = n
            dfs(k + 1, acc + n * d[i])
        vec[i] = 0

    dfs(0, 1.0)
    found.sort(key=lambda t: (sum(t), t))
    nontrivial = tuple(t for t in found if sum(t[1:]) > 0)
    return AnisotropyReport(md.rank, tuple(found), nontrivial,
                            not nontrivial)
