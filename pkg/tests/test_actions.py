from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from su2five.actions import (
    ActionParams,
    DisallowedChain,
    InvalidParams,
    NoExceptionalOrbits,
    BadParams,
    UnclassifiedTarget,
    UnknownRow,
    are_equivalent,
    canonical_form,
    catalog_action,
    CATALOG_ACTIONS,
    classify,
    count_uot_actions,
    curvature_verdict,
    diffeo_type,
    enumerate_actions,
    fixed_set_principal,
    isotropy_profile,
    max_isolated_fixed_points,
    pi1_order,
    singular_classification,
    slice_data,
    validate,
)
from su2five.fingroups import IsoType

Z = IsoType.cyclic
CIRCLE = IsoType("Circle")


@st.composite
def valid_params(draw, m_min=0, hi=12):
    m = draw(st.integers(m_min, hi))
    n = draw(st.integers(max(m, 0), hi))
    l = draw(st.integers(0, 40))
    assume(gcd(l, m) == 1 and gcd(l, n) == 1)
    return validate(m, n, l)


def test_validate():
    assert validate(1, 1, 0) == ActionParams(1, 1, 0)
    assert validate(0, 2, 1) == ActionParams(0, 2, 1)
    assert validate(6, -4, -5) == ActionParams(4, 6, 5)
    with pytest.raises(InvalidParams, match="gcd"):
        validate(2, 4, 2)
    with pytest.raises(InvalidParams):
        validate(0, 3, 2)


def test_isotropy_profile_examples():
    p = isotropy_profile((4, 6, 5))
    assert p.effective_group == "SO3"
    assert p.principal == IsoType("Trivial") and p.others == (Z(2), Z(3))
    p = isotropy_profile((0, 0, 1))
    assert (p.effective_group, p.principal, p.others, p.quotient_space) == ("SO3", CIRCLE, (), "Sphere3")
    p = isotropy_profile((0, 3, 1))
    assert (p.effective_group, p.principal, p.others) == ("SU2", Z(3), (CIRCLE,))
    assert isotropy_profile((1, 2, 1)).quotient_space == "Sphere2"


def test_diffeo_type_examples():
    assert diffeo_type((1, 1, 1)).tag == "S3xS2"
    assert diffeo_type((0, 1, 1)).tag == "S3twistS2"
    assert diffeo_type((0, 2, 1)).tag == "S3xS2"


def test_slice_data_examples():
    s = slice_data((4, 6, 5))
    assert (s.d, s.q1, s.q2, s.a1, s.a2, s.b1, s.b2, s.k) == (2, 2, 3, 1, 1, 1, 1, 0)
    s = slice_data((3, 3, 7))
    assert (s.q1, s.q2, s.a1, s.a2, s.b1, s.b2, s.k) == (1, 1, 0, 0, 0, 0, 7)
    s = slice_data((2, 3, 1))
    assert (s.a1, s.a2, s.b1, s.b2, s.k) == (1, 2, 1, 2, -1)
    with pytest.raises(NoExceptionalOrbits):
        slice_data((0, 2, 1))


def test_pi1_order_examples():
    assert pi1_order(4, 6, 1, 1, 0) == 1
    assert pi1_order(3, 3, 0, 0, 3) == 3
    assert pi1_order(6, 10, 1, 2, 1) == 2
    with pytest.raises(BadParams):
        pi1_order(4, 6, 0, 1, 0)
    with pytest.raises(BadParams):
        pi1_order(0, 6, 0, 1, 0)


def test_equivalence_examples():
    assert are_equivalent((1, 1, 3), (1, 1, 7))
    assert not are_equivalent((3, 3, 1), (3, 3, 2))
    assert are_equivalent((1, 2, 1), (1, 2, 3))
    assert not are_equivalent((1, 2, 1), (1, 3, 1))
    assert are_equivalent((0, 4, 1), (0, 4, 1))


def test_canonical_form_examples():
    assert canonical_form((1, 1, 7)).l == 0
    assert canonical_form((3, 3, 2)).l == 2
    assert canonical_form((2, 2, 5)).l == 1


def test_enumerate_examples():
    assert len(enumerate_actions(1, 1, 10)) == 1
    assert [p.l for p in enumerate_actions(3, 3, 10)] == [1, 2, 4, 5, 7, 8, 10]
    assert len(enumerate_actions(2, 3, 12)) == 1
    with pytest.raises(ValueError):
        enumerate_actions(1, 1, -1)


def test_fixed_set_examples():
    fs = fixed_set_principal((3, 3, 4))
    assert (fs.kind, fs.l, fs.weights) == ("TwoLensSpaces", 4, (3, 3))
    assert fixed_set_principal((0, 0, 1)).kind == "TwoSpheres3"
    assert fixed_set_principal((1, 2, 1)).kind == "WholeManifoldOrNone"


def test_curvature_examples():
    v = curvature_verdict((3, 3, 1))
    assert (v.positive, v.reason) == ("Excluded", "FrankelLensPair")
    v = curvature_verdict("SO3-on-1W#0B")
    assert (v.positive, v.reason) == ("Excluded", "ThreeFixedPoints")
    v = curvature_verdict((1, 2, 1))
    assert (v.nonnegative, v.positive) == ("Yes", "Candidate")
    assert curvature_verdict((0, 0, 1)).positive == "Excluded"
    assert curvature_verdict((0, 2, 1)).positive == "Candidate"
    assert curvature_verdict("SO3-on-2W#0B").nonnegative == "No"
    assert curvature_verdict("SO3-on-#2(S3xS2)").nonnegative == "No"
    assert curvature_verdict("S5-SO3-diagonal").positive == "LinearSphere"
    with pytest.raises(UnclassifiedTarget):
        curvature_verdict("CP2xS1")
    with pytest.raises(UnclassifiedTarget):
        curvature_verdict((2, 4, 2))


def test_catalog_fixed_points():
    assert catalog_action("SO3-on-1W#0B").fixed_points == 3
    assert catalog_action("SO3-on-0W#1B").fixed_points == 4
    assert catalog_action("SO3-on-2W#1B").fixed_points == 6


def test_count_uot_examples():
    assert count_uot_actions("SO3", IsoType("Trivial"), 2) == 2
    assert count_uot_actions("SU2", Z(5), 2) is None
    assert count_uot_actions("SO3", IsoType("O2"), 3) == 1
    assert count_uot_actions("SU2", IsoType("BinTet"), 2) == 1
    with pytest.raises(UnknownRow):
        count_uot_actions("SO3", IsoType("Trivial"), 3)
    with pytest.raises(UnknownRow):
        count_uot_actions("SU2", IsoType("Tet"), 2)


def test_singular_classification_examples():
    r = singular_classification("SO3", Z(3), CIRCLE)
    assert [x.action for x in r] == ["N_{0,6}^1"]
    r = singular_classification("SU2", Z(3), CIRCLE)
    assert [x.action for x in r] == ["N_{0,3}^1"]
    r = singular_classification("SO3", IsoType("Trivial"), CIRCLE)
    assert [x.action for x in r] == ["S5-SO3-diagonal", "N_{0,2}^1"]
    r = singular_classification("SU2", IsoType("Trivial"), CIRCLE)
    assert [x.action for x in r] == ["N_{0,1}^1", "Wu-SU2"]
    assert singular_classification("SU2", Z(2), CIRCLE)[0].note
    assert singular_classification("SO3", Z(2), IsoType("O2")) == []
    assert singular_classification("SO3", IsoType.dihedral(3), IsoType("O2")) == []
    r = singular_classification("SO3", CIRCLE, IsoType("SO3"), boundary_spheres=2)
    assert r[0].manifold.tag == "ConnSumS3xS2" and r[0].manifold.k == 0
    with pytest.raises(DisallowedChain):
        singular_classification("SU2", IsoType("KleinFour"), IsoType("O2"))
    r = singular_classification("SO3", IsoType("KleinFour"), IsoType("O2"), top=IsoType("SO3"), max_fixed_points=3)
    assert [x.manifold.tag for x in r] == ["S5", "Wu"]


def test_max_isolated_fixed_points():
    assert max_isolated_fixed_points("Nonnegative") == 3
    assert max_isolated_fixed_points("Positive") == 2


def test_classify_schema():
    rec = classify(4, 6, 5)
    assert set(rec) == {"m", "n", "l", "canonical_l", "effective_group", "diffeo_type", "isotropy",
                        "quotient_space", "slice", "pi1_order", "fixed_set", "curvature"}
    assert rec["effective_group"] == "SO3" and rec["pi1_order"] == 1


@given(valid_params(m_min=1))
def test_slice_reconstruction(p):
    s = slice_data(p)
    assert s.l() == p.l
    for a, b, q in ((s.a1, s.b1, s.q1), (s.a2, s.b2, s.q2)):
        assert (a * b - 1) % q == 0 or q == 1


@given(valid_params(m_min=1))
def test_simply_connected(p):
    s = slice_data(p)
    assert pi1_order(p.m, p.n, s.b1, s.b2, s.k) == gcd(p.m, p.n, p.l)


@given(st.integers(0, 8), st.integers(0, 8))
def test_equivalence_relation(m, n):
    ps = [validate(m, n, l) for l in range(0, 25) if gcd(l, m) == 1 and gcd(l, n) == 1]
    for a in ps:
        assert are_equivalent(a, a)
        assert canonical_form(canonical_form(a)) == canonical_form(a)
        for b in ps:
            assert are_equivalent(a, b) == are_equivalent(b, a)
            assert are_equivalent(a, b) == (canonical_form(a) == canonical_form(b))


@given(valid_params())
def test_diffeo_type_depends_on_parity(p):
    assert diffeo_type(p).tag == ("S3xS2" if (p.m + p.n) % 2 == 0 else "S3twistS2")


@given(valid_params())
def test_curvature_monotone(p):
    v = curvature_verdict(p)
    if v.positive in ("LinearSphere", "Candidate"):
        assert v.nonnegative == "Yes"


def test_catalog_verdicts_monotone():
    for name in CATALOG_ACTIONS:
        v = curvature_verdict(name)
        if v.positive in ("LinearSphere", "Candidate"):
            assert v.nonnegative == "Yes"


def test_fixed_set_for_m_zero():
    assert fixed_set_principal((0, 5, 1)).kind == "TwoSpheres3"
    assert fixed_set_principal((0, 1, 1)).kind == "WholeManifoldOrNone"
    assert fixed_set_principal((0, 2, 1)).kind == "WholeManifoldOrNone"
