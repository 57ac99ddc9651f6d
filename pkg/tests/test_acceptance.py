"""Acceptance criteria, one check per criterion.

Run under pytest (each check prints its PASS/FAIL line to the terminal) or
directly: ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from math import gcd

import pytest

from su2five import actions
from su2five.fingroups import IsoType, catalog, project_so3, recognize
from su2five.verifiers import (
    verify_bijection,
    verify_equivalence_counts,
    verify_exceptional_pairs,
    verify_gauss_bonnet_bound,
    verify_noncyclic_obstruction,
    verify_pi1_formula,
    verify_table1,
)


def check_pi1_formula():
    start = time.perf_counter()
    rep = verify_pi1_formula(10, (-3, 3), max_cosets=100_000)
    elapsed = time.perf_counter() - start
    ok = rep.status == "Pass" and rep.inconclusive == 0 and elapsed < 60
    return ok, f"{rep.cases} cases, {len(rep.failures)} failures, {rep.inconclusive} inconclusive, {elapsed:.1f}s"


def check_bijection():
    cases, bad = 0, []
    for q2 in range(2, 13):
        for q1 in range(1, q2):
            if gcd(q1, q2) != 1:
                continue
            rep = verify_bijection(q1, q2, 5)
            cases += rep.cases
            if rep.status != "Pass":
                bad.append((q1, q2))
    return not bad, f"{cases} admissible l checked, failing pairs {bad}"


def check_exceptional_pairs():
    rep = verify_exceptional_pairs(30)
    shown = "; ".join(rep.failures[:3]) + (" ..." if len(rep.failures) > 3 else "")
    return rep.status == "Pass", f"{rep.cases} (K, N) pairs, {len(rep.failures)} counterexamples {shown}"


def check_catalog():
    problems = []
    for tag, order, so3_order in (("BinTet", 24, 12), ("BinOct", 48, 24), ("BinIco", 120, 60)):
        G = catalog(tag)
        if G.order != order or project_so3(G).order != so3_order:
            problems.append(tag)
    entries = [("Cyclic", k, "SU2") for k in range(1, 31)] + [("Dicyclic", m, "SU2") for m in range(2, 31)]
    entries += [(t, None, "SU2") for t in ("Trivial", "BinTet", "BinOct", "BinIco")]
    entries += [("Cyclic", k, "SO3") for k in range(1, 31)] + [("Dihedral", m, "SO3") for m in range(2, 31)]
    entries += [(t, None, "SO3") for t in ("KleinFour", "Tet", "Oct", "Ico")]
    for tag, param, ambient in entries:
        G = catalog(tag, param, ambient)
        expected = IsoType(tag, param)
        if tag == "Dihedral":
            expected = IsoType.dihedral(param)
        elif tag == "Cyclic":
            expected = IsoType.cyclic(param)
        if recognize(G) != expected or G.order != expected.order:
            problems.append((tag, param, ambient))
        if tag == "Dicyclic" and G.order != 4 * param:
            problems.append((tag, param, "order"))
    return not problems, f"{len(entries)} catalog entries, problems {problems}"


def check_table1():
    rep = verify_table1(range(3, 16))
    data_only = sum(1 for n in rep.notes if n.startswith("DataOnly"))
    return rep.status == "Pass", f"{rep.cases} rows checked ({data_only} containment-only), failures {rep.failures}"


def check_noncyclic():
    rep = verify_noncyclic_obstruction()
    glued = [n for n in rep.notes if n.startswith("(c1, c2)")]
    ok = rep.status == "Pass" and len(glued) == 4 and all(n.endswith(": Z_3") for n in glued)
    return ok, "; ".join(glued)


def check_equivalence_counts():
    bad, pairs = [], 0
    for m in range(0, 9):
        for n in range(m, 9):
            d = gcd(m, n) or 1
            if d > 2:
                continue
            pairs += 1
            if verify_equivalence_counts(m, n).status != "Pass":
                bad.append((m, n))
    ls = [l for l in range(0, 11) if gcd(l, 3) == 1]
    signatures = set()
    for l in ls:
        s = actions.slice_data((3, 3, l))
        fs = actions.fixed_set_principal((3, 3, l))
        signatures.add((s.k, fs.component_pi1_order()))
    rigid = len(signatures) == len(ls) and not any(
        actions.are_equivalent((3, 3, a), (3, 3, b)) for a in ls for b in ls if a != b)
    return not bad and rigid, f"{pairs} (m, n) pairs, mismatches {bad}; (3,3) rigidity over l in {ls}: {rigid}"


def check_gauss_bonnet():
    rep = verify_gauss_bonnet_bound()
    nn, pos = actions.max_isolated_fixed_points("Nonnegative"), actions.max_isolated_fixed_points("Positive")
    return rep.status == "Pass" and (nn, pos) == (3, 2), f"nonnegative {nn}, positive {pos}"


EXPECTED_CATALOG_VERDICTS = {
    "S5-SO3-fixed-circle": ("Yes", "LinearSphere"),
    "S5-SO3-diagonal": ("Yes", "LinearSphere"),
    "S5-SU2-linear": ("Yes", "LinearSphere"),
    "S5-SO3-irreducible": ("Yes", "LinearSphere"),
    "Wu-SU2": ("Yes", "Candidate"),
    "SO3-on-1W#0B": ("Yes", "Excluded", "ThreeFixedPoints"),
    "SO3-on-0W#1B": ("No", "Excluded", "ThreeFixedPoints"),
    "SO3-on-2W#0B": ("No", "Excluded", "ThreeFixedPoints"),
    "SO3-on-#1(S3xS2)": ("Yes", "Excluded", "SoulTwoBoundary"),
    "SO3-on-#2(S3xS2)": ("No", "Excluded", "SoulTwoBoundary"),
}


def check_classification():
    problems = []
    for m in range(1, 7):
        prof, dt = actions.isotropy_profile((0, 2 * m, 1)), actions.diffeo_type((0, 2 * m, 1))
        if (prof.effective_group, dt.tag) != ("SO3", "S3xS2"):
            problems.append(f"N_0,{2 * m}")
        prof, dt = actions.isotropy_profile((0, 2 * m + 1, 1)), actions.diffeo_type((0, 2 * m + 1, 1))
        if (prof.effective_group, dt.tag) != ("SU2", "S3twistS2"):
            problems.append(f"N_0,{2 * m + 1}")
    free = actions.isotropy_profile((2, 2, 1))
    if (free.effective_group, free.principal, free.others) != ("SO3", IsoType("Trivial"), ()):
        problems.append("N_2,2 not free")
    if len(actions.enumerate_actions(1, 1, 20)) != 1:
        problems.append("N_1,1 classes")
    if set(EXPECTED_CATALOG_VERDICTS) != set(actions.CATALOG_ACTIONS):
        problems.append("catalog drift")
    for name, want in EXPECTED_CATALOG_VERDICTS.items():
        v = actions.curvature_verdict(name)
        if (v.nonnegative, v.positive, v.reason)[:len(want)] != want:
            problems.append(name)
    for m in range(1, 13):
        for n in range(m, 13):
            for l in range(0, 21):
                if gcd(l, m) != 1 or gcd(l, n) != 1:
                    continue
                v = actions.curvature_verdict((m, n, l))
                want = ("Excluded", "FrankelLensPair") if gcd(m, n) >= 3 else ("Candidate", "TheoremB")
                if (v.positive, v.reason) != want or v.nonnegative != "Yes":
                    problems.append(f"N_{m},{n}^{l}")
    return not problems, f"problems {problems[:5]}"


CRITERIA = [
    (1, "pi1 formula reproduction", check_pi1_formula),
    (2, "bijection", check_bijection),
    (3, "exceptional-pair scan", check_exceptional_pairs),
    (4, "group catalog", check_catalog),
    (5, "Table 1 finite rows", check_table1),
    (6, "non-cyclic obstruction", check_noncyclic),
    (7, "equivalence counts", check_equivalence_counts),
    (8, "Gauss-Bonnet bound", check_gauss_bonnet),
    (9, "classification spot checks", check_classification),
]


def _line(number, title, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, title, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(number, title, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
