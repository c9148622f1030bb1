"""Shared fixtures: the corpus of standard data sets and the acceptance
criterion bookkeeping (one PASS/FAIL line per criterion at the end of
the run)."""

import numpy as np
import pytest

from mdkit import evaluate, parse_spec

CORPUS_SPECS = (
    ["preset:trivial", "preset:semion", "preset:ising", "preset:fibonacci",
     "preset:toric_code", "preset:double_semion"]
    + [f"su2:{k}" for k in (1, 2, 4, 6, 10, 16)]
    + [f"double:{g}" for g in ("Z_2", "Z_3", "Z_4", "Z_5", "Z_6",
                               "S3", "D4", "Q8")]
    + [f"tdouble:{n}:{p}" for n in (1, 2, 3, 4) for p in range(n)]
)


@pytest.fixture(scope="session")
def corpus():
    """spec string -> ModularData, for the whole acceptance corpus."""
    return {spec: evaluate(parse_spec(spec)) for spec in CORPUS_SPECS}


def lattice_points(cb, bound_of):
    """Independent integer-point oracle over commutant coordinates.

    Walks the full coefficient box spanned by the pivot entries of the
    reduced-echelon basis (each pivot coordinate of a solution equals the
    matrix entry at that pivot position, so it ranges over 0..bound) and
    keeps every combination that lands on a nonnegative-integer matrix
    with Z_00 = 1.  Deliberately brute force; no backtracking, no
    pruning, no sharing with the solver under test.
    """
    import itertools

    B = cb.as_float()
    m = cb.dimension
    pivots = []
    for k in range(m):
        flat = [B[k][j][i] for (j, i) in cb.positions]
        lead = next(p for p, v in enumerate(flat) if abs(v) > 1e-8)
        pivots.append(cb.positions[lead])
    boxes = [range(0, bound_of(j, i) + 1) for (j, i) in pivots]
    out = []
    for combo in itertools.product(*boxes):
        Z = np.tensordot(np.array(combo, dtype=float), B, axes=1)
        R = np.round(Z)
        if np.abs(Z - R).max() > 1e-6 or R.min() < 0 or R[0, 0] != 1:
            continue
        ok = all(R[j, i] <= bound_of(j, i) + 1e-6
                 for j in range(R.shape[0]) for i in range(R.shape[1]))
        if ok:
            out.append(R.astype(np.int64))
    out.sort(key=lambda Z: (int(Z.sum()), tuple(Z.flatten().tolist())))
    return out


@pytest.fixture
def lattice_oracle():
    return lattice_points


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(n): acceptance criterion this test certifies")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when in ("setup", "call"):
        n = marker.args[0]
        ok = _criteria.get(n, True)
        _criteria[n] = ok and not report.failed and not report.skipped


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        verdict = "PASS" if _criteria[n] else "FAIL"
        terminalreporter.write_line(f"[criterion {n}] {verdict}")
