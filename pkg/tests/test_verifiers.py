import json

import pytest

from su2five.fingroups import catalog, normal_subgroups, quotient_type, recognize, IsoType
from su2five.fpgroups import abelianization, todd_coxeter
from su2five.actions import pi1_presentation
from su2five.verifiers import (
    BadRegime,
    NotCoprime,
    VerificationReport,
    noncyclic_presentation,
    residue_orbit_count,
    run_verifier,
    verify_bijection,
    verify_equivalence_counts,
    verify_gauss_bonnet_bound,
    verify_noncyclic_obstruction,
    verify_pi1_formula,
)


def test_report_status_rules():
    assert VerificationReport("x").status == "Fail"  # zero cases
    assert VerificationReport("x", cases=3).status == "Pass"
    assert VerificationReport("x", cases=3, inconclusive=1).status == "Inconclusive"
    assert VerificationReport("x", cases=3, failures=["bad"]).status == "Fail"
    merged = VerificationReport("x", 2).merge(VerificationReport("x", 3, ["bad"]))
    assert merged.cases == 5 and merged.status == "Fail"
    assert set(json.loads(VerificationReport("x", 1).dumps())) == {"lemma", "cases", "failures", "status"}


def test_pi1_single_cases():
    P = pi1_presentation(4, 6, 1, 1, 0)
    assert todd_coxeter(P).order == 1
    P = pi1_presentation(3, 3, 0, 0, 3)
    assert todd_coxeter(P).order == 3
    assert abelianization(P).torsion == (3,)


def test_pi1_small_sweep():
    rep = verify_pi1_formula(4, (-1, 1))
    assert rep.status == "Pass" and rep.cases > 0


def test_pi1_tiny_coset_limit_is_inconclusive():
    rep = verify_pi1_formula(3, (0, 0), max_cosets=2)
    assert rep.status == "Inconclusive"


def test_bijection():
    assert verify_bijection(2, 3, 5).status == "Pass"
    rep = verify_bijection(1, 1, 5)
    assert rep.status == "Pass" and rep.cases == 11
    with pytest.raises(NotCoprime):
        verify_bijection(2, 4, 5)


def test_exceptional_pair_examples():
    T = catalog("BinTet")
    qualifying = [N for N in normal_subgroups(T)
                  if quotient_type(T, N).tag == "Cyclic" and quotient_type(T, N).param >= 3]
    assert [recognize(N) for N in qualifying] == [IsoType.dicyclic(2)]
    O = catalog("BinOct")
    assert all(quotient_type(O, N).tag != "Cyclic" or quotient_type(O, N).param < 3 for N in normal_subgroups(O))
    C = catalog("Cyclic", 12)
    N = next(S for S in normal_subgroups(C) if S.order == 3)
    assert quotient_type(C, N) == IsoType.cyclic(4)


def test_odd_dicyclic_has_cyclic_quotient_of_order_four():
    # the counterexample family behind the exceptional-pair scan
    for m in (3, 5, 7):
        D = catalog("Dicyclic", m)
        N = next(S for S in normal_subgroups(D) if S.order == m)
        assert quotient_type(D, N) == IsoType.cyclic(4)


def test_noncyclic():
    rep = verify_noncyclic_obstruction()
    assert rep.status == "Pass"
    assert abelianization(noncyclic_presentation(1, 2)).torsion == (3,)
    assert abelianization(noncyclic_presentation(None, None)).torsion == (3, 3)


@pytest.mark.parametrize("m, n, count", [(1, 2, 1), (2, 2, 1), (2, 6, 1), (1, 5, 2), (1, 7, 3), (0, 4, 1)])
def test_equivalence_counts(m, n, count):
    assert residue_orbit_count(m, n) == count
    assert verify_equivalence_counts(m, n).status == "Pass"


def test_equivalence_counts_rigid_regime():
    with pytest.raises(BadRegime):
        verify_equivalence_counts(3, 3)


def test_gauss_bonnet():
    assert verify_gauss_bonnet_bound().status == "Pass"


def test_dispatch():
    assert run_verifier("gauss-bonnet").status == "Pass"
    with pytest.raises(KeyError):
        run_verifier("nope")
