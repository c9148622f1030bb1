"""Tests for algebra screening, Witt invariants and anisotropy."""

from fractions import Fraction

import numpy as np
import pytest

from mdkit import (MdkError, SearchBudgetError, algebra_from_invariant,
                   anisotropy_screen, cyclic, deligne_product,
                   drinfeld_double, enumerate_invariants, local_modules_dim,
                   preset, reverse, screen_algebra, su2_level, witt_inverse,
                   witt_invariants, witt_obstruction, witt_product)


def test_screen_toric_lagrangians():
    tc = preset("toric_code")
    for mult in ([1, 1, 0, 0], [1, 0, 1, 0]):
        c = screen_algebra(tc, mult)
        assert c.passes
        assert c.dim_gamma == 2.0
        assert abs(local_modules_dim(c) - 1.0) < 1e-9


def test_screen_toric_fermion_fails_twist():
    c = screen_algebra(preset("toric_code"), [1, 0, 0, 1])
    assert not c.passes
    v = c.verdict("trivial_twist_support")
    assert not v.passed and v.required
    # everything else is fine
    assert c.verdict("dimension_bound").passed
    assert c.verdict("multiplicity_bound").passed


def test_screen_dimension_bound():
    c = screen_algebra(preset("toric_code"), [1, 1, 1, 0])
    assert not c.verdict("dimension_bound").passed
    assert not c.verdict("local_quotient").passed
    assert not c.passes


def test_screen_rejects_bad_multiplicities():
    tc = preset("toric_code")
    with pytest.raises(MdkError):
        screen_algebra(tc, [0, 1, 0, 0])
    with pytest.raises(MdkError):
        screen_algebra(tc, [2, 0, 0, 0])
    with pytest.raises(MdkError):
        screen_algebra(tc, [1, -1, 0, 0])
    with pytest.raises(MdkError):
        screen_algebra(tc, [1, 0.5, 0, 0])
    with pytest.raises(MdkError):
        screen_algebra(tc, [1, 0, 0])


def test_screen_lenient_demotes_advisory_checks():
    tc = preset("toric_code")
    c = screen_algebra(tc, [1, 0, 0, 1], lenient=True)
    assert not c.verdict("trivial_twist_support").required
    assert not c.verdict("multiplicity_bound").required
    assert c.passes  # only the advisory twist check fails


def test_local_modules_dim():
    md = su2_level(4)
    c = screen_algebra(md, [1, 0, 0, 0, 1])
    assert c.passes
    assert abs(local_modules_dim(c) - 3.0) < 1e-9
    trivial = screen_algebra(md, [1, 0, 0, 0, 0])
    assert abs(local_modules_dim(trivial) - md.global_dim) < 1e-9
    failing = screen_algebra(md, [1, 1, 0, 0, 0])
    with pytest.raises(MdkError):
        local_modules_dim(failing)


def test_algebra_from_identity_invariant():
    fib = preset("fibonacci")
    z = enumerate_invariants(fib)[0]
    c = algebra_from_invariant(fib, fib, z)
    assert c.host.rank == 4
    assert c.mult == (1, 0, 0, 1)
    assert c.verdict("maximal").passed
    assert c.passes
    assert abs(local_modules_dim(c) - 1.0) < 1e-6


def test_algebra_from_block_invariant():
    md = su2_level(4)
    z = enumerate_invariants(md)[1]
    c = algebra_from_invariant(md, md, z)
    assert c.verdict("maximal").passed
    assert c.passes
    # multiplicities follow the transposed matrix entries
    assert sum(c.mult) == int(np.asarray(z.Z).sum())


def test_algebra_from_invariant_rejects_garbage():
    fib, ising = preset("fibonacci"), preset("ising")
    z = enumerate_invariants(fib)[0]
    with pytest.raises(MdkError):
        algebra_from_invariant(ising, ising, z)  # wrong shape
    bad = type(z)(2, 2, np.array([[1, 0], [0, 0]]), "other")
    with pytest.raises(MdkError, match="intertwine"):
        algebra_from_invariant(fib, fib, bad)


def test_witt_invariants_fibonacci():
    wi = witt_invariants(preset("fibonacci"))
    assert not wi.is_center_candidate
    assert wi.central_charge == Fraction(14, 5)
    assert len(wi.reasons) == 2
    assert any("nonzero" in r for r in wi.reasons)
    assert any("sqrt(dim)" in r for r in wi.reasons)


@pytest.mark.parametrize("build", [
    lambda: preset("trivial"),
    lambda: preset("toric_code"),
    lambda: drinfeld_double(cyclic(3)),
])
def test_witt_center_candidates(build):
    wi = witt_invariants(build())
    assert wi.is_center_candidate
    assert wi.reasons == ()
    assert wi.central_charge == 0


def test_witt_product_and_inverse():
    fib = preset("fibonacci")
    ising = preset("ising")
    p = witt_product(fib, ising)
    assert p.rank == 6
    q = deligne_product(fib, ising)
    assert (p.S == q.S).all() and (p.T == q.T).all()
    # the inverse is an involution, bit for bit
    back = witt_inverse(witt_inverse(fib))
    assert back.S.tobytes() == fib.S.tobytes()
    assert back.T.tobytes() == fib.T.tobytes()


def test_witt_self_product_is_center_candidate():
    fib = preset("fibonacci")
    wi = witt_invariants(witt_product(fib, witt_inverse(fib)))
    assert wi.is_center_candidate


def test_witt_obstruction_verdicts():
    fib, tc = preset("fibonacci"), preset("trivial")
    ob = witt_obstruction(fib, tc)
    assert ob.verdict == "incompatible"
    assert any("differ mod 8" in r for r in ob.reasons)
    ob = witt_obstruction(preset("toric_code"), preset("double_semion"))
    assert ob.verdict == "possibly_equivalent"
    assert ob.reasons == ()
    ob = witt_obstruction(preset("ising"), preset("ising"))
    assert ob.verdict == "possibly_equivalent"


def test_anisotropy_fibonacci():
    rep = anisotropy_screen(preset("fibonacci"))
    assert rep.anisotropic
    assert rep.nontrivial == ()
    assert rep.candidates == ((1, 0),)


def test_anisotropy_toric_code():
    rep = anisotropy_screen(preset("toric_code"))
    assert not rep.anisotropic
    assert set(rep.nontrivial) == {(1, 1, 0, 0), (1, 0, 1, 0)}


def test_anisotropy_trivial():
    rep = anisotropy_screen(preset("trivial"))
    assert rep.anisotropic
    assert rep.candidates == ((1,),)


def test_anisotropy_budget_and_rank_limits():
    with pytest.raises(SearchBudgetError):
        anisotropy_screen(su2_level(16))
    with pytest.raises(MdkError, match="rank"):
        anisotropy_screen(su2_level(24))
