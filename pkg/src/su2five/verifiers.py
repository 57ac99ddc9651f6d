"""Executable cross-checks tying the group engines to the action model.

Each verifier sweeps a finite parameter window and returns a
:class:`VerificationReport`. A case whose coset enumeration hits the limit
is reported as inconclusive rather than skipped.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import actions
from .fingroups import (
    FiniteSubgroup,
    IsoType,
    catalog,
    normal_subgroups,
    normalizer_in,
    project_so3,
    quaternion_group,
    quotient_type,
    recognize,
)
from .fpgroups import (
    DEFAULT_MAX_COSETS,
    Presentation,
    abelianization,
    parse_presentation,
    todd_coxeter,
)
from .quaternions import PinQuat, UnitQuat

__all__ = [
    "VerificationReport",
    "NotCoprime",
    "BadRegime",
    "LEMMA_IDS",
    "verify_pi1_formula",
    "verify_bijection",
    "verify_exceptional_pairs",
    "verify_table1",
    "verify_noncyclic_obstruction",
    "verify_equivalence_counts",
    "verify_gauss_bonnet_bound",
    "tstar_presentation",
    "noncyclic_presentation",
    "run_verifier",
]


class NotCoprime(ValueError):
    pass


class BadRegime(ValueError):
    pass


@dataclass
class VerificationReport:
    lemma: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    inconclusive: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failures or self.cases == 0:
            return "Fail"
        if self.inconclusive:
            return "Inconclusive"
        return "Pass"

    def fail(self, message: str):
        self.failures.append(message)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.lemma,
            self.cases + other.cases,
            self.failures + other.failures,
            self.inconclusive + other.inconclusive,
            self.notes + other.notes,
        )

    def to_json(self) -> dict:
        out = {"lemma": self.lemma, "cases": self.cases, "failures": list(self.failures), "status": self.status}
        if self.inconclusive:
            out["inconclusive"] = self.inconclusive
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _legal_b(q: int) -> list[int]:
    if q == 1:
        return [0]
    return [b for b in range(1, q) if gcd(b, q) == 1]


def verify_pi1_formula(n_max: int = 10, k_range: tuple[int, int] = (-3, 3),
                       max_cosets: int = DEFAULT_MAX_COSETS) -> VerificationReport:
    """Coset enumeration on the van Kampen presentation against gcd(n1, n2, l)."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    k_lo, k_hi = k_range
    rep = VerificationReport("pi1")
    for n1 in range(1, n_max + 1):
        for n2 in range(n1, n_max + 1):
            d = gcd(n1, n2)
            q1, q2 = n1 // d, n2 // d
            for b1 in _legal_b(q1):
                for b2 in _legal_b(q2):
                    for k in range(k_lo, k_hi + 1):
                        rep.cases += 1
                        case = (n1, n2, b1, b2, k)
                        expected = actions.pi1_order(*case)
                        P = actions.pi1_presentation(*case)
                        res = todd_coxeter(P, max_cosets)
                        if not res.completed:
                            rep.inconclusive += 1
                            rep.notes.append(f"{case}: coset limit {max_cosets} reached")
                            continue
                        if res.order != expected:
                            rep.fail(f"{case}: coset order {res.order} != gcd formula {expected}")
                            continue
                        ab = abelianization(P)
                        want = (expected,) if expected > 1 else ()
                        if ab.free_rank or ab.torsion != want:
                            rep.fail(f"{case}: abelianization {ab} is not Z_{expected}")
    return rep


def verify_bijection(q1: int, q2: int, window: int = 5) -> VerificationReport:
    """l(b1, b2, k) = b1 q2 + b2 q1 + k q1 q2 hits each admissible l exactly once.

    Only the interval reached by every (b1, b2) with |k| <= window is checked
    for surjectivity; injectivity and the coprimality filter are checked on
    the whole image.
    """
    if q1 < 1 or q2 < 1 or gcd(q1, q2) != 1:
        raise NotCoprime(f"gcd({q1}, {q2}) must be 1")
    if window < 0:
        raise ValueError("window must be >= 0")
    Q = q1 * q2
    hits = Counter()
    bases = []
    for b1 in _legal_b(q1):
        for b2 in _legal_b(q2):
            base = b1 * q2 + b2 * q1
            bases.append(base)
            for k in range(-window, window + 1):
                hits[base + k * Q] += 1
    lo, hi = max(bases) - window * Q, min(bases) + window * Q
    rep = VerificationReport("bijection", notes=[f"covered interval [{lo}, {hi}]"])
    for l, count in sorted(hits.items()):
        if count > 1:
            rep.fail(f"l={l} hit {count} times")
        if gcd(l, q1) != 1 or gcd(l, q2) != 1:
            rep.fail(f"l={l} hit although gcd(l, q1 q2) != 1")
    for l in range(lo, hi + 1):
        if gcd(l, q1) == 1 and gcd(l, q2) == 1:
            rep.cases += 1
            if hits[l] != 1:
                rep.fail(f"l={l} hit {hits[l]} times")
    return rep


def _ambients(m_max: int):
    for m in range(1, m_max + 1):
        yield catalog("Cyclic", m)
    for m in range(2, m_max + 1):
        yield catalog("Dicyclic", m)
    for tag in ("BinTet", "BinOct", "BinIco"):
        yield catalog(tag)


def _allowed_pair(N: IsoType, K: IsoType, ambient: str) -> bool:
    if N.tag in ("Cyclic", "Trivial") and K.tag in ("Cyclic", "Trivial"):
        return True
    if ambient == "SU2":
        return (N, K) == (IsoType("Dicyclic", 2), IsoType("BinTet"))
    return (N, K) == (IsoType("KleinFour"), IsoType("Tet"))


def verify_exceptional_pairs(m_max: int = 30) -> VerificationReport:
    """Every normal N < K with cyclic quotient of order >= 3 is one of the listed pairs.

    Ambients: Z_m and Dic_m for m <= m_max plus T*, O*, I*, and their images in SO(3).
    """
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    rep = VerificationReport("exceptional-pairs", notes=[f"cyclic and dicyclic families truncated at m <= {m_max}"])
    polyhedral_hits = 0
    for K in _ambients(m_max):
        for G in (K, project_so3(K)):
            kt = recognize(G)
            for N in normal_subgroups(G):
                rep.cases += 1
                qt = quotient_type(G, N)
                if qt.tag != "Cyclic" or qt.param < 3:
                    continue
                nt = recognize(N)
                if kt.tag in ("BinTet", "BinOct", "BinIco") and G.ambient == "SU2":
                    polyhedral_hits += 1
                if not _allowed_pair(nt, kt, G.ambient):
                    rep.fail(f"{G.ambient}: {kt}/{nt} = {qt}")
    if polyhedral_hits != 1:
        rep.fail(f"binary polyhedral ambients give {polyhedral_hits} qualifying pairs, expected 1 (Dic_2 < T*)")
    return rep


def _normalizes(g, H: FiniteSubgroup) -> bool:
    norm = (lambda q: q.projective()) if H.ambient == "SO3" else (lambda q: q)
    members = set(H.elements)
    return all(norm(g * h * g.inverse()) in members for h in H.generators or H.elements)


def _pin_samples(m: int):
    # rotations by multiples of 1/(4m) turns and the same times j
    return [PinQuat(Fraction(a, 4 * m), f) for a in range(4 * m) for f in (0, 1)]


def verify_table1(m_values=range(3, 11)) -> VerificationReport:
    """Finite rows of the normalizer table, plus containment for the continuous ones."""
    rep = VerificationReport("table1")

    def finite_row(label, N, H, expected):
        rep.cases += 1
        if normalizer_in(N, H) != N:
            rep.fail(f"{label}: claimed normalizer does not normalize H")
            return
        got = quotient_type(N, H)
        if got != expected:
            rep.fail(f"{label}: N(H)/H = {got}, table says {expected}")

    Q8 = quaternion_group()
    tstar, ostar, istar = catalog("BinTet"), catalog("BinOct"), catalog("BinIco")
    finite_row("SU2 Dic_2", ostar, ostar.subgroup_from_indices(ostar.indices_of(Q8)), IsoType.dihedral(3))
    finite_row("SU2 T*", ostar, ostar.subgroup_from_indices(ostar.indices_of(tstar)), IsoType.cyclic(2))
    finite_row("SU2 O*", ostar, ostar, IsoType("Trivial"))
    finite_row("SU2 I*", istar, istar, IsoType("Trivial"))
    for m in m_values:
        big = catalog("Dicyclic", 2 * m)
        finite_row(f"SU2 Dic_{m}", big, big.subgroup_from_indices(big.indices_of(catalog("Dicyclic", m))),
                   IsoType.cyclic(2))
        bigp = project_so3(big)
        Dm = project_so3(catalog("Dicyclic", m))
        finite_row(f"SO3 D_{m}", bigp, bigp.subgroup_from_indices(bigp.indices_of(Dm)), IsoType.cyclic(2))
    octa, tet, ico = project_so3(ostar), project_so3(tstar), project_so3(istar)
    finite_row("SO3 D_2", octa, octa.subgroup_from_indices(octa.indices_of(project_so3(Q8))), IsoType.dihedral(3))
    finite_row("SO3 T", octa, octa.subgroup_from_indices(octa.indices_of(tet)), IsoType.cyclic(2))
    finite_row("SO3 O", octa, octa, IsoType("Trivial"))
    finite_row("SO3 I", ico, ico, IsoType("Trivial"))

    # continuous normalizers: containment only
    def data_only(label, samples, H):
        rep.cases += 1
        rep.notes.append(f"DataOnly: {label}")
        if not all(_normalizes(g, H) for g in samples):
            rep.fail(f"{label}: a sampled element of the claimed normalizer does not normalize H")

    center = istar.subgroup_from_indices([i for i, q in enumerate(istar.elements) if q.a * q.a == 1])
    data_only("SU2 Z_2 < SU(2)", list(istar.elements), center)
    for m in m_values:
        data_only(f"SU2 Z_{m} < Pin(2)", _pin_samples(m), catalog("Cyclic", m))
        data_only(f"SO3 Z_{m} < O(2)", [g.projective() for g in _pin_samples(2 * m)], catalog("Cyclic", m, "SO3"))
    data_only("SO3 Z_2 < O(2)", [g.projective() for g in _pin_samples(4)], catalog("Cyclic", 2, "SO3"))
    # the circle and its normalizer Pin(2) / O(2): conjugating a sampled rotation stays a rotation
    for ambient in ("SU2", "SO3"):
        rep.cases += 1
        rep.notes.append(f"DataOnly: {ambient} SO(2) < {'Pin(2)' if ambient == 'SU2' else 'O(2)'}")
        samples = _pin_samples(6)
        for g in samples:
            for h in samples:
                if not h.flip and (g * h * g.inverse()).flip:
                    rep.fail(f"{ambient}: {g} does not normalize the circle")
    return rep


def tstar_presentation(suffix: str = "") -> str:
    """Relators of T* on i, j and w = -(1+i+j+k)/2, with w rotating i -> j -> k."""
    i, j, w = f"i{suffix}", f"j{suffix}", f"w{suffix}"
    return (f"{i}^4, {i}^2 {j}^-2, {j}^-1 {i} {j} {i}, {w}^3, "
            f"{w} {i} {w}^-1 = {j}, {w} {j} {w}^-1 = {i} {j}")


def noncyclic_presentation(c1: int | None, c2: int | None) -> Presentation:
    """Two copies of T* glued along Dic_2 (i1 = i2, j1 = j2) and along w1^c1 = w2^c2.

    ``c1 = c2 = None`` drops the gluing and leaves the free product.
    """
    rels = [tstar_presentation("1"), tstar_presentation("2")]
    if c1 is not None:
        rels.append(f"i1 = i2, j1 = j2, w1^{c1} = w2^{c2}")
    return parse_presentation(f"<i1, j1, w1, i2, j2, w2 | {', '.join(rels)}>")


def _evaluate(P: Presentation, word, images):
    out = UnitQuat.one()
    for g, e in word:
        out = out * images[g] ** e
    return out


def verify_noncyclic_obstruction() -> VerificationReport:
    """Abelianizing the glued T* * T* leaves a Z_3 factor for each c1, c2 in {1, 2}."""
    rep = VerificationReport("noncyclic")

    h = Fraction(1, 2)
    T = parse_presentation(f"<i, j, w | {tstar_presentation()}>")
    images = [UnitQuat(0, 1, 0, 0), UnitQuat(0, 0, 1, 0), UnitQuat(-h, -h, -h, -h)]
    rep.cases += 1
    bad = [T.word_str(r) for r in T.relators if not _evaluate(T, r, images).is_one()]
    if bad:
        rep.fail(f"T* relators not satisfied by i, j, w: {bad}")
    rep.cases += 1
    res = todd_coxeter(T)
    if res.order != 24:
        rep.fail(f"T* presentation has order {res.order}, expected 24")

    rep.cases += 1
    free = abelianization(noncyclic_presentation(None, None))
    if free.torsion != (3, 3) or free.free_rank:
        rep.fail(f"free product abelianizes to {free}, expected Z_3 x Z_3")

    for c1 in (1, 2):
        for c2 in (1, 2):
            rep.cases += 1
            ab = abelianization(noncyclic_presentation(c1, c2))
            if 3 not in ab.torsion:
                rep.fail(f"(c1, c2) = ({c1}, {c2}): abelianization {ab} has no Z_3 factor")
            else:
                rep.notes.append(f"(c1, c2) = ({c1}, {c2}): {ab}")
    return rep


def residue_orbit_count(m: int, n: int) -> int:
    """Residues mod lcm(m, n) coprime to it, counted up to l -> -l (the brute-force oracle)."""
    if m == 0:
        return 1
    M = m * n // gcd(m, n)
    units = {l for l in range(M) if gcd(l, M) == 1}
    orbits = {min(l, (-l) % M) for l in units}
    return len(orbits)


def verify_equivalence_counts(m: int, n: int) -> VerificationReport:
    m, n = sorted((abs(m), abs(n)))
    if m > 0 and gcd(m, n) >= 3:
        raise BadRegime(f"gcd({m}, {n}) >= 3: l itself is an invariant")
    rep = VerificationReport("equiv-counts")
    M = 1 if m == 0 else m * n // gcd(m, n)
    got = len(actions.enumerate_actions(m, n, M))
    want = residue_orbit_count(m, n)
    rep.cases = M
    if got != want:
        rep.fail(f"({m}, {n}): enumerate_actions gives {got} classes, residue oracle {want}")
    return rep


def verify_gauss_bonnet_bound(n_max: int = 12) -> VerificationReport:
    """n * (pi/3) >= (n - 2) * pi exactly when n <= 3, strictly when n <= 2."""
    rep = VerificationReport("gauss-bonnet")
    for n in range(2, n_max + 1):
        rep.cases += 1
        if actions.gauss_bonnet_admits(n, strict=False) != (n <= 3):
            rep.fail(f"n={n}: nonnegative admissibility wrong")
        if actions.gauss_bonnet_admits(n, strict=True) != (n <= 2):
            rep.fail(f"n={n}: positive admissibility wrong")
    rep.cases += 2
    if actions.max_isolated_fixed_points("Nonnegative") != 3:
        rep.fail("nonnegative bound is not 3")
    if actions.max_isolated_fixed_points("Positive") != 2:
        rep.fail("positive bound is not 2")
    return rep


LEMMA_IDS = ("pi1", "bijection", "exceptional-pairs", "table1", "noncyclic", "equiv-counts", "gauss-bonnet")


def run_verifier(lemma: str, **bounds) -> VerificationReport:
    """Dispatch by stable lemma id; ``bounds`` are the verifier's keyword arguments."""
    table = {
        "pi1": verify_pi1_formula,
        "bijection": verify_bijection,
        "exceptional-pairs": verify_exceptional_pairs,
        "table1": verify_table1,
        "noncyclic": verify_noncyclic_obstruction,
        "equiv-counts": verify_equivalence_counts,
        "gauss-bonnet": verify_gauss_bonnet_bound,
    }
    if lemma not in table:
        raise KeyError(f"unknown lemma id {lemma!r}; expected one of {', '.join(LEMMA_IDS)}")
    return table[lemma](**bounds)
