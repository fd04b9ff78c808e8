import pytest
from hypothesis import given

from conftest import SMALL_POLYMATROIDAL, polymatroidal_ideals
from oracles import depth_by_betti, naive_ass
from polystab.fixtures import (
    bipartite_matroid_5,
    gcd_heavy_ideal,
    hq_counterexample,
    squarefree_veronese_4_3,
)
from polystab.ideal import MonomialIdeal, MonomialPrime, multiply, power, principal
from polystab.polymatroid import NotPolymatroidalError
from polystab.stability import (
    Verdict,
    TheoremViolation,
    astab,
    dstab,
    full_report,
    profiles,
    require_no_failures,
    theorem_oracles,
)

TRIANGLE = MonomialIdeal([(1, 1, 0), (1, 0, 1), (0, 1, 1)])


def test_index_examples():
    assert astab(TRIANGLE) == 2
    assert astab(squarefree_veronese_4_3()) == 3
    assert astab(principal((1, 2))) == 1
    assert dstab(hq_counterexample()) == 1
    assert dstab(gcd_heavy_ideal()) == 2
    assert dstab(MonomialIdeal.maximal(3)) == 1


def test_non_polymatroidal_rejected():
    with pytest.raises(NotPolymatroidalError):
        astab(MonomialIdeal([(2, 0), (0, 2)]))


def test_profiles_of_triangle():
    prof = profiles(TRIANGLE, 2)
    edges = frozenset(MonomialPrime(3, p) for p in [(1, 2), (1, 3), (2, 3)])
    assert prof.ass_profile == (edges, edges | {MonomialPrime(3, (1, 2, 3))})
    assert prof.depth_profile == (1, 0)
    assert prof.generator_counts == (3, 6)


def test_profiles_of_principal_ideal_are_constant():
    prof = profiles(principal((1, 1, 0)), 4)
    assert len(set(prof.ass_profile)) == 1 and len(set(prof.depth_profile)) == 1


def test_profiles_without_certificate():
    prof = profiles(MonomialIdeal([(2, 0), (0, 2)]), 2)
    assert prof.depth_profile == (None, None)
    assert prof.ass_profile[0] == {MonomialPrime(2, (1, 2))}


def test_reports_of_fixtures():
    rep = full_report(gcd_heavy_ideal())
    assert (rep.astab, rep.dstab) == (2, 2)
    assert rep.cofactor == (2, 1, 0)
    assert MonomialPrime(3, (1,)) in rep.stable_ass
    rep = full_report(squarefree_veronese_4_3())
    assert (rep.astab, rep.dstab, rep.spread) == (3, 3, 4)
    assert rep.depth_profile == (2, 1, 0)
    rep = full_report(hq_counterexample())
    assert (rep.astab, rep.dstab) == (2, 1) and rep.flags.polymatroidal
    assert rep.consistent


def test_report_of_principal_ideal():
    rep = full_report(principal((0, 2, 1)))
    assert (rep.astab, rep.dstab, rep.spread, rep.limit_depth) == (1, 1, 1, 2)


def test_counterexample_oracles():
    res = theorem_oracles(hq_counterexample())
    assert not res.conjecture_holds
    assert not res.failures
    assert res.claims["four_vars_max_not_stable_equal"] is Verdict.NA
    assert res.claims["strong_exchange_equal"] is Verdict.NA


def test_bipartite_matroid_is_stable_together():
    res = require_no_failures(theorem_oracles(bipartite_matroid_5()))
    assert res.conjecture_holds


def test_require_no_failures_raises_with_dump():
    res = theorem_oracles(TRIANGLE)
    broken = type(res)(res.report, {"made_up": Verdict.FAIL}, True, ())
    with pytest.raises(TheoremViolation, match="made_up"):
        require_no_failures(broken)


@given(polymatroidal_ideals)
def test_report_invariants(I):
    rep = full_report(I)
    assert rep.consistent, rep.checks
    assert rep.astab <= rep.k_max and rep.dstab <= rep.k_max
    assert rep.depth_profile[-1] == rep.limit_depth == I.nvars - rep.spread


@given(polymatroidal_ideals)
def test_all_claims_hold_on_small_corpus(I):
    res = theorem_oracles(I)
    assert not res.failures, res.dump()


@given(polymatroidal_ideals)
def test_ass_methods_give_same_report(I):
    a, b, c = (full_report(I, m) for m in ("localize", "split", "box"))
    assert a.ass_profile == b.ass_profile == c.ass_profile
    assert (a.astab, a.dstab) == (b.astab, b.dstab) == (c.astab, c.dstab)


@given(polymatroidal_ideals)
def test_common_factor_changes_nothing_but_ass_of_factor(I):
    alpha = tuple([1] + [0] * (I.nvars - 1))
    J = multiply(principal(alpha), I)
    a, b = full_report(I), full_report(J)
    assert (a.astab, a.dstab) == (b.astab, b.dstab)
    assert a.depth_profile == b.depth_profile
    assert b.stable_ass == a.stable_ass | {MonomialPrime(I.nvars, (1,))}


@pytest.mark.parametrize("I", [J for J in SMALL_POLYMATROIDAL if J.nvars <= 3], ids=str)
def test_indices_against_brute_force_profiles(I):
    # compute two powers past the horizon with independent oracles
    rep = full_report(I)
    horizon = rep.k_max + 2
    ass = [naive_ass(power(I, k).gens) for k in range(1, horizon + 1)]
    depths = [depth_by_betti(power(I, k).gens) for k in range(1, horizon + 1)]
    assert ass[rep.k_max - 1:] == [ass[-1]] * (horizon - rep.k_max + 1)
    assert min(k for k in range(1, horizon + 1) if ass[k - 1] == ass[-1]) == rep.astab
    assert min(k for k in range(1, horizon + 1) if depths[k - 1] == depths[-1]) == rep.dstab
    assert depths[-1] == rep.limit_depth
