"""Modular invariants: commutant bases and integer-matrix enumeration.

A modular invariant between two modular data sets is a nonnegative-integer
matrix Z with Z_{00} = 1 satisfying Z S_L = S_R Z and Z T_L = T_R Z (Z has
shape right_rank x left_rank).  The solver first computes the linear
commutant, then enumerates the integer points it contains by bounded
backtracking.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import IncompleteEnumerationError, MdkError
from .modular_data import ModularData
from .numeric import rationalize_matrix, rref

__all__ = [
    "CommutantBasis", "ModularInvariant", "commutant_basis",
    "enumerate_invariants", "classify_invariant",
]


@dataclass(frozen=True)
class CommutantBasis:
    """Basis of {M : M S_L = S_R M, M T_L = T_R M} over the rationals.

    Attributes
    ----------
    left_rank, right_rank : int
    dimension : int
        Number of basis elements.
    positions : tuple of (int, int)
        Row-major (j, i) entry positions not forced to zero by the
        T-relation; every basis matrix is supported here.
    basis : tuple of matrices
        Shape (right_rank, left_rank) each, in reduced row-echelon order
        of their coefficient vectors.  Entries are `Fraction` (nested
        tuples) when ``rationalized``, else float ndarrays.
    rationalized : bool
        False when continued-fraction reconstruction failed and the raw
        floating-point basis is returned instead.
    """

    left_rank: int
    right_rank: int
    dimension: int
    positions: tuple[tuple[int, int], ...]
    basis: tuple
    rationalized: bool

    def as_float(self) -> np.ndarray:
        """Basis stacked as a float array of shape (dimension, rR, rL)."""
        out = np.zeros((self.dimension, self.right_rank, self.left_rank))
        for k, mat in enumerate(self.basis):
            for j in range(self.right_rank):
                for i in range(self.left_rank):
                    out[k, j, i] = float(mat[j][i])
        return out


@dataclass(frozen=True)
class ModularInvariant:
    """A verified nonnegative-integer intertwiner with Z_{00} = 1."""

    left_rank: int
    right_rank: int
    Z: np.ndarray
    kind: str

    def __post_init__(self):
        self.Z.setflags(write=False)


def _scatter(vec, positions, shape):
    out = np.zeros(shape)
    for val, (j, i) in zip(vec, positions):
        out[j, i] = val
    return out


def commutant_basis(left: ModularData, right: ModularData | None = None,
                    eps: float | None = None) -> CommutantBasis:
    """Solve the linear intertwiner equations.

    The T-relation zeroes every entry (j, i) with theta^L_i != theta^R_j,
    so only the surviving positions enter the S-relation, which is solved
    by SVD (null space at 1e-8 relative threshold).  The null-space basis
    is canonicalized by reduced row echelon form and rationalized entry by
    entry with denominators up to 10^6; if any entry resists, the float
    basis is kept and ``rationalized`` is False.
    """
    if right is None:
        right = left
    left.require_valid()
    right.require_valid()
    tol = max(left.eps, right.eps) if eps is None else float(eps)
    rL, rR = left.rank, right.rank

    positions = tuple((j, i) for j in range(rR) for i in range(rL)
                      if abs(right.T[j] - left.T[i]) < tol)
    P = len(positions)
    if P == 0:
        return CommutantBasis(rL, rR, 0, positions, (), True)

    A = np.zeros((rR * rL, P), dtype=complex)
    cols = np.arange(rL)
    rows = np.arange(rR)
    for k, (j, i) in enumerate(positions):
        A[j * rL + cols, k] += left.S[i, :]
        A[rows * rL + i, k] -= right.S[:, j]

    M = np.vstack([A.real, A.imag])
    u, sv, vt = np.linalg.svd(M, full_matrices=True)
    cut = 1e-8 * max(1.0, sv[0] if sv.size else 0.0)
    rank = int((sv > cut).sum())
    null = vt[rank:]
    m = null.shape[0]
    if m == 0:
        return CommutantBasis(rL, rR, 0, positions, (), True)

    R, _ = rref(null, tol=1e-10)
    if R.shape[0] != m:
        raise MdkError("null-space basis lost rank during canonicalization")

    exact = rationalize_matrix(R, max_den=10 ** 6, tol=1e-7)
    rationalized = exact is not None
    if rationalized:
        # the rationalized rows must still solve the system
        Rq = np.array([[float(x) for x in row] for row in exact])
        if np.abs(M @ Rq.T).max() > 1e-6:
            rationalized = False
    if rationalized:
        mats = []
        for row in exact:
            grid = [[Fraction(0)] * rL for _ in range(rR)]
            for val, (j, i) in zip(row, positions):
                grid[j][i] = val
            mats.append(tuple(tuple(r) for r in grid))
        basis = tuple(mats)
    else:
        basis = tuple(_scatter(row, positions, (rR, rL)) for row in R)
        for b in basis:
            b.setflags(write=False)
    return CommutantBasis(rL, rR, m, positions, basis, rationalized)


class _GramBudget(Exception):
    pass


def _partitions_into_squares(r: int, mx: int):
    """Nonincreasing positive integer tuples with sum of squares r."""
    if r == 0:
        yield ()
        return
    top = min(mx, math.isqrt(r))
    for y in range(top, 0, -1):
        for rest in _partitions_into_squares(r - y * y, y):
            yield (y,) + rest


def _gram_rows(Z: np.ndarray, node_cap: int = 100_000):
    """Find nonnegative-integer C with C^T C = Z, or None.

    Builds Gram vectors column by column; coordinates introduced by each
    new vector are kept nonincreasing so each Gram matrix is produced in
    one canonical coordinate order only.  Returns the columns (one per
    object) or None when no decomposition exists within the node budget.
    """
    n = Z.shape[0]
    vecs: list[tuple[int, ...]] = []
    nodes = 0

    def place(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        used = len(vecs[-1]) if vecs else 0
        targets = [int(Z[i, j]) for j in range(i)]
        x = [0] * used

        def choose(t: int, norm_left: int, partial: list[int]) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > node_cap:
                raise _GramBudget
            if t == used:
                if any(partial[j] != targets[j] for j in range(i)):
                    return False
                for tail in _partitions_into_squares(norm_left, norm_left or 1):
                    vecs.append(tuple(x) + tail)
                    if place(i + 1):
                        return True
                    vecs.pop()
                return False
            hi = math.isqrt(norm_left)
            for v in range(hi + 1):
                ok = True
                new = partial[:]
                for j in range(i):
                    cj = vecs[j][t] if t < len(vecs[j]) else 0
                    new[j] = partial[j] + v * cj
                    if new[j] > targets[j]:
                        ok = False
                        break
                    if t + 1 >= len(vecs[j]) and new[j] != targets[j]:
                        ok = False
                        break
                if not ok:
                    continue
                x[t] = v
                if choose(t + 1, norm_left - v * v, new):
                    return True
            x[t] = 0
            return False

        return choose(0, int(Z[i, i]), [0] * i)

    try:
        found = place(0)
    except _GramBudget:
        return None
    if not found:
        return None
    h = max(len(v) for v in vecs)
    return [[(v[t] if t < len(v) else 0) for v in vecs] for t in range(h)]


def _classify(Z: np.ndarray) -> str:
    rR, rL = Z.shape
    if rR == rL:
        if (Z == np.eye(rR, dtype=np.int64)).all():
            return "diagonal"
        if ((Z >= 0).all() and (Z <= 1).all()
                and (Z.sum(axis=0) == 1).all() and (Z.sum(axis=1) == 1).all()):
            return "permutation"
        if rL <= 12 and (Z == Z.T).all() and Z[0, 0] == 1:
            if _gram_rows(Z) is not None:
                return "block"
    return "other"


def classify_invariant(z: ModularInvariant) -> str:
    """Classification tag: diagonal, permutation, block, or other.

    Block means Z = C^T C for some nonnegative-integer C whose first
    column is a unit vector; the decomposition search runs for ranks up
    to 12, larger matrices fall through to "other".
    """
    return _classify(np.asarray(z.Z))


class _Search:
    """Shared state for the (possibly threaded) backtracking enumeration."""

    def __init__(self, B, order, domains, node_cap):
        self.B = B                      # (m, P) float
        self.m = B.shape[0]
        self.order = order              # position indices, assignment order
        self.domains = domains          # per order slot, tuple of ints
        self.node_cap = node_cap
        self.nodes = 0
        self.lock = threading.Lock()
        self.found: list[np.ndarray] = []

    def tick(self):
        with self.lock:
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise IncompleteEnumerationError(
                    f"search visited {self.nodes} nodes, over the "
                    f"{self.node_cap} cap; no partial answer is returned",
                    nodes=self.nodes, cap=self.node_cap)

    def record(self, vec):
        with self.lock:
            self.found.append(vec)

    def feasible(self, values):
        """Least-squares feasibility of a prefix assignment.

        Returns (ok, saturated, completion): completion is the unique
        full coefficient-space point when the assigned columns already
        have full rank m, else None.
        """
        t = len(values)
        At = self.B[:, self.order[:t]].T
        v = np.array(values, dtype=float)
        c, _, rank, _ = np.linalg.lstsq(At, v, rcond=None)
        if np.abs(At @ c - v).max() > 1e-6:
            return False, False, None
        if rank == self.m:
            return True, True, self.B.T @ c
        return True, False, None

    def close_leaf(self, values, completion):
        """Validate a fully determined point and record it."""
        P = self.B.shape[1]
        full = np.empty(P)
        if completion is None:
            for slot, val in enumerate(values):
                full[self.order[slot]] = val
        else:
            full = completion
        rounded = np.round(full)
        if np.abs(full - rounded).max() > 1e-6 or rounded.min() < 0:
            return
        for slot, val in enumerate(values):
            if rounded[self.order[slot]] != val:
                return
        for slot in range(len(values), len(self.order)):
            if rounded[self.order[slot]] > self.domains[slot][-1]:
                return
        self.record(rounded.astype(np.int64))

    def dfs(self, values):
        depth = len(values)
        if depth == len(self.order):
            self.close_leaf(values, None)
            return
        for val in self.domains[depth]:
            self.tick()
            trial = values + [val]
            ok, saturated, completion = self.feasible(trial)
            if not ok:
                continue
            if saturated:
                self.close_leaf(trial, completion)
            else:
                self.dfs(trial)


def enumerate_invariants(left: ModularData, right: ModularData | None = None,
                         node_cap: int = 10 ** 8, workers: int = 1,
                         eps: float | None = None) -> list[ModularInvariant]:
    """All modular invariants between two data sets, canonically sorted.

    Entrywise backtracking over the T-compatible positions, visiting
    positions in order of increasing entry bound floor(d^L_i d^R_j + 1e-6)
    so that tightly constrained entries are fixed first.  Partial
    assignments are pruned by projection onto the commutant; once the
    assigned positions span the commutant, the unique completion is
    checked directly instead of descending further.

    Parameters
    ----------
    node_cap : int
        Budget on visited search nodes; exceeding it raises
        IncompleteEnumerationError rather than returning a partial list.
    workers : int
        Subtree-parallel search threads.  The result is independent of
        the worker count (final canonical sort).

    Returns
    -------
    list of ModularInvariant
        Sorted by total entry sum, then row-major lexicographic order.
    """
    if right is None:
        right = left
    tol = max(left.eps, right.eps) if eps is None else float(eps)
    cb = commutant_basis(left, right, eps=eps)
    if cb.dimension == 0:
        return []
    workers = max(1, int(workers))

    B = np.zeros((cb.dimension, len(cb.positions)))
    for k, mat in enumerate(cb.basis):
        for p, (j, i) in enumerate(cb.positions):
            B[k, p] = float(mat[j][i]) if cb.rationalized else mat[j, i]

    dL, dR = left.dims, right.dims
    bounds = [int(math.floor(dL[i] * dR[j] + 1e-6)) for (j, i) in cb.positions]
    try:
        root = cb.positions.index((0, 0))
    except ValueError:
        return []
    rest = sorted((k for k in range(len(cb.positions)) if k != root),
                  key=lambda k: (bounds[k], k))
    order = [root] + rest
    domains = [(1,)] + [tuple(range(bounds[k] + 1)) for k in rest]

    search = _Search(B, order, domains, node_cap)
    if workers == 1:
        search.dfs([])
    else:
        prefixes = [[]]
        depth = 0
        while depth < len(order) and 0 < len(prefixes) < 4 * workers:
            grown = []
            for values in prefixes:
                for val in domains[depth]:
                    search.tick()
                    trial = values + [val]
                    ok, saturated, completion = search.feasible(trial)
                    if not ok:
                        continue
                    if saturated:
                        search.close_leaf(trial, completion)
                    else:
                        grown.append(trial)
            prefixes = grown
            depth += 1
        if prefixes:
            if depth == len(order):
                for values in prefixes:
                    search.close_leaf(values, None)
            else:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    list(pool.map(search.dfs, prefixes))

    results = []
    shape = (right.rank, left.rank)
    seen = set()
    for vec in search.found:
        Z = _scatter(vec, cb.positions, shape).astype(np.int64)
        key = Z.tobytes()
        if key in seen:
            continue
        seen.add(key)
        s_res = np.abs(Z @ left.S - right.S @ Z).max()
        t_res = np.abs(Z * left.T[None, :] - right.T[:, None] * Z).max()
        if s_res > max(tol, 1e-9) or t_res > max(tol, 1e-9):
            raise MdkError(
                f"enumeration produced a non-verifying candidate "
                f"(S residual {s_res:.3g}, T residual {t_res:.3g})")
        results.append(Z)

    results.sort(key=lambda Z: (int(Z.sum()), tuple(Z.flatten().tolist())))
    return [ModularInvariant(left.rank, right.rank, Z, _classify(Z))
            for Z in results]
