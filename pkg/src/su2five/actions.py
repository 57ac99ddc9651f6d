"""The SU(2)-manifolds N_{m,n}^l and the classification of SO(3)/SU(2) actions
on simply-connected 5-manifolds.

N_{m,n}^l is the quotient of SU(2) x S^3 by the circle acting with weights
(l; m, n); SU(2) acts on the left of the first factor. Everything here is
integer arithmetic on the triple (m, n, l) plus tabulated data for the
actions that are not of this form.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd

from .fingroups import IsoType
from .fpgroups import Presentation

__all__ = [
    "InvalidParams",
    "NoExceptionalOrbits",
    "BadParams",
    "UnclassifiedTarget",
    "UnknownRow",
    "DisallowedChain",
    "ActionParams",
    "SliceData",
    "IsotropyProfile",
    "ManifoldId",
    "FixedSet",
    "CatalogAction",
    "CurvatureVerdict",
    "Realization",
    "validate",
    "isotropy_profile",
    "diffeo_type",
    "slice_data",
    "pi1_order",
    "pi1_presentation",
    "equivalence_modulus",
    "are_equivalent",
    "equivalence_rule",
    "canonical_form",
    "enumerate_actions",
    "fixed_set_principal",
    "curvature_verdict",
    "count_uot_actions",
    "singular_classification",
    "max_isolated_fixed_points",
    "gauss_bonnet_admits",
    "classify",
    "CATALOG_ACTIONS",
    "TABLE1",
    "TABLE2",
]


class InvalidParams(ValueError):
    pass


class NoExceptionalOrbits(ValueError):
    pass


class BadParams(ValueError):
    pass


class UnclassifiedTarget(ValueError):
    pass


class UnknownRow(KeyError):
    pass


class DisallowedChain(ValueError):
    pass


def _gcd(a: int, b: int) -> int:
    # gcd(0, 0) = 1 for isotropy formulas
    return gcd(a, b) or 1


@dataclass(frozen=True, order=True)
class ActionParams:
    m: int
    n: int
    l: int

    @property
    def d(self) -> int:
        return _gcd(self.m, self.n)

    def __str__(self):
        return f"N_{{{self.m},{self.n}}}^{self.l}"


def validate(m: int, n: int, l: int) -> ActionParams:
    """Normalize and check a parameter triple.

    Signs are dropped (N^l and N^-l are equivalent, and likewise for m, n),
    then m <= n is enforced by swapping. Freeness of the circle action needs
    gcd(l, m) = gcd(l, n) = 1 with gcd(l, 0) = l, so m = 0 forces l = 1.
    """
    if not all(isinstance(x, int) for x in (m, n, l)):
        raise InvalidParams("parameters must be integers")
    m, n, l = abs(m), abs(n), abs(l)
    if m > n:
        m, n = n, m
    problems = []
    if gcd(l, m) != 1:
        problems.append(f"gcd(l, m) = gcd({l}, {m}) = {gcd(l, m)} != 1")
    if gcd(l, n) != 1:
        problems.append(f"gcd(l, n) = gcd({l}, {n}) = {gcd(l, n)} != 1")
    if problems:
        raise InvalidParams("; ".join(problems))
    return ActionParams(m, n, l)


def _params(p) -> ActionParams:
    if isinstance(p, ActionParams):
        return validate(p.m, p.n, p.l)
    return validate(*p)


# --------------------------------------------------------------------------
# isotropy, topology, slices


@dataclass(frozen=True)
class IsotropyProfile:
    effective_group: str  # "SU2" or "SO3"
    principal: IsoType
    others: tuple[IsoType, ...]
    quotient_space: str  # "Sphere2", "Sphere3" or "Disk2"

    def to_json(self) -> dict:
        return {"principal": str(self.principal), "others": [str(t) for t in self.others]}


def isotropy_profile(p) -> IsotropyProfile:
    p = _params(p)
    m, n = p.m, p.n
    so3 = m % 2 == 0 and n % 2 == 0
    group = "SO3" if so3 else "SU2"

    def cyc(k):
        return IsoType.cyclic(k // 2 if so3 else k)

    circle = IsoType("Circle")
    if m == 0 and n == 0:
        return IsotropyProfile(group, circle, (), "Sphere3")
    if m == 0:
        # singular orbits make the orbit space a 2-disk with boundary
        return IsotropyProfile(group, cyc(n), (circle,), "Disk2")
    d = gcd(m, n)
    others = []
    for k in (m, n):
        if k != d and cyc(k) not in others:
            others.append(cyc(k))
    return IsotropyProfile(group, cyc(d), tuple(others), "Sphere2")


@dataclass(frozen=True)
class ManifoldId:
    """``S5``, ``S3xS2``, ``S3twistS2``, ``Wu``, ``Brieskorn2333``,
    ``ConnSum`` (k_W copies of Wu # l_B copies of the Brieskorn variety) or
    ``ConnSumS3xS2`` (k extra copies of S3xS2 summed onto one)."""

    tag: str
    k: int | None = None
    l: int | None = None

    def __post_init__(self):
        tags = {"S5", "S3xS2", "S3twistS2", "Wu", "Brieskorn2333", "ConnSum", "ConnSumS3xS2"}
        if self.tag not in tags:
            raise ValueError(f"unknown manifold tag {self.tag!r}")
        if any(x is not None and x < 0 for x in (self.k, self.l)):
            raise ValueError("manifold parameters must be nonnegative")

    @classmethod
    def conn_sum(cls, k_w: int, l_b: int) -> "ManifoldId":
        if (k_w, l_b) == (1, 0):
            return cls("Wu")
        if (k_w, l_b) == (0, 1):
            return cls("Brieskorn2333")
        return cls("ConnSum", k_w, l_b)

    @classmethod
    def conn_sum_s3xs2(cls, k: int) -> "ManifoldId":
        return cls("ConnSumS3xS2", k)

    def __str__(self):
        if self.tag == "ConnSum":
            return f"{self.k} W # {self.l} B"
        if self.tag == "ConnSumS3xS2":
            return f"#{self.k + 1}(S3xS2)"
        return self.tag


def diffeo_type(p) -> ManifoldId:
    p = _params(p)
    return ManifoldId("S3xS2" if (p.m + p.n) % 2 == 0 else "S3twistS2")


@dataclass(frozen=True)
class SliceData:
    d: int
    q1: int
    q2: int
    a1: int
    a2: int
    b1: int
    b2: int
    k: int

    def l(self) -> int:
        return self.b1 * self.q2 + self.b2 * self.q1 + self.k * self.q1 * self.q2


def slice_data(p) -> SliceData:
    """Slice representations and clutching class around the two exceptional orbits.

    The Z_{n_j} slice action has rotation number a_j = q_i * l^-1 (mod q_j);
    b_j is the inverse of a_j mod q_j and k is fixed by l = b1 q2 + b2 q1 + k q1 q2.
    """
    p = _params(p)
    if p.m == 0:
        raise NoExceptionalOrbits(f"{p} has no exceptional orbits (m = 0)")
    d = gcd(p.m, p.n)
    q1, q2 = p.m // d, p.n // d
    a1 = q2 * pow(p.l, -1, q1) % q1 if q1 > 1 else 0
    a2 = q1 * pow(p.l, -1, q2) % q2 if q2 > 1 else 0
    b1 = pow(a1, -1, q1) if q1 > 1 else 0
    b2 = pow(a2, -1, q2) if q2 > 1 else 0
    k, rem = divmod(p.l - b1 * q2 - b2 * q1, q1 * q2)
    assert rem == 0
    return SliceData(d, q1, q2, a1, a2, b1, b2, k)


def _check_pi1_args(n1, n2, b1, b2):
    if n1 < 1 or n2 < 1:
        raise BadParams("n1, n2 must be positive")
    d = gcd(n1, n2)
    q1, q2 = n1 // d, n2 // d
    for b, q in ((b1, q1), (b2, q2)):
        if not 0 <= b < q and not (q == 1 and b == 0):
            raise BadParams(f"b = {b} not in [0, {q})")
        if gcd(b, q) != 1:
            raise BadParams(f"gcd(b, q) = gcd({b}, {q}) != 1")
    return d, q1, q2


def pi1_order(n1: int, n2: int, b1: int, b2: int, k: int) -> int:
    """Order of the (cyclic) fundamental group of M(b1, b2, k): gcd(n1, n2, l)."""
    _, q1, q2 = _check_pi1_args(n1, n2, b1, b2)
    l = b1 * q2 + b2 * q1 + k * q1 * q2
    return gcd(gcd(n1, n2), l)


def pi1_presentation(n1: int, n2: int, b1: int, b2: int, k: int) -> Presentation:
    """Van Kampen presentation <e1, e2 | e1^n1, e2^n2, e1^q1 = e2^q2, e1^b1 = e2^-(b2 + k q2)>."""
    _, q1, q2 = _check_pi1_args(n1, n2, b1, b2)
    return Presentation.build(
        ("e1", "e2"),
        [
            [(0, n1)],
            [(1, n2)],
            [(0, q1), (1, -q2)],
            [(0, b1), (1, b2 + k * q2)],
        ],
    )


# --------------------------------------------------------------------------
# equivalence


def equivalence_modulus(m: int, n: int) -> int | None:
    """mn/gcd(m, n) when gcd(m, n) is 1 or 2; None in the rigid case gcd >= 3 and for m = 0."""
    if m == 0:
        return None
    d = gcd(m, n)
    return m * n // d if d <= 2 else None


def equivalence_rule(p, p2) -> str:
    p, p2 = _params(p), _params(p2)
    if (p.m, p.n) != (p2.m, p2.n):
        return "different (m, n)"
    if p.m == 0:
        return "m = 0 fixes l = 1"
    d = gcd(p.m, p.n)
    if d >= 3:
        return f"d={d} rigid: l is an invariant"
    mod = equivalence_modulus(p.m, p.n)
    return f"d={d} congruence mod mn" if d == 1 else f"d={d} congruence mod mn/2 = {mod}"


def are_equivalent(p, p2) -> bool:
    p, p2 = _params(p), _params(p2)
    if (p.m, p.n) != (p2.m, p2.n):
        return False
    if p.m == 0:
        return True
    mod = equivalence_modulus(p.m, p.n)
    if mod is None:
        return p.l == p2.l
    return (p.l - p2.l) % mod == 0 or (p.l + p2.l) % mod == 0


def canonical_form(p) -> ActionParams:
    """Least l >= 0 in the equivalence class, found by scanning the residues."""
    p = _params(p)
    mod = equivalence_modulus(p.m, p.n)
    if mod is None:
        return p
    for l in range(mod + 1):
        if gcd(l, p.m) == 1 and gcd(l, p.n) == 1 and ((l - p.l) % mod == 0 or (l + p.l) % mod == 0):
            return ActionParams(p.m, p.n, l)
    raise AssertionError("class without a representative below the modulus")


def enumerate_actions(m: int, n: int, l_max: int) -> list[ActionParams]:
    """Pairwise inequivalent canonical forms N_{m,n}^l with l <= l_max."""
    if l_max < 0:
        raise ValueError("l_max must be >= 0")
    seen = set()
    for l in range(l_max + 1):
        try:
            p = validate(m, n, l)
        except InvalidParams:
            continue
        seen.add(canonical_form(p))
    return sorted(seen)


# --------------------------------------------------------------------------
# fixed sets and curvature


@dataclass(frozen=True)
class FixedSet:
    """Fixed point set of the principal isotropy group.

    ``TwoLensSpaces``: two copies of S^3/Z_l with the Z_l action of weights
    (n1, n2). ``TwoSpheres3``: two 3-spheres. ``WholeManifoldOrNone``: the
    principal isotropy acts trivially once the action is made effective.
    """

    kind: str
    l: int | None = None
    weights: tuple[int, int] | None = None

    def components(self) -> int | None:
        return 2 if self.kind in ("TwoLensSpaces", "TwoSpheres3") else None

    def component_pi1_order(self) -> int | None:
        if self.kind == "TwoLensSpaces":
            return self.l
        if self.kind == "TwoSpheres3":
            return 1
        return None

    def __str__(self):
        if self.kind == "TwoLensSpaces":
            return f"2 x S^3/Z_{self.l} (weights {self.weights[0]}, {self.weights[1]})"
        if self.kind == "TwoSpheres3":
            return "2 x S^3"
        return "whole manifold or empty"

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.l is not None:
            out["l"] = self.l
            out["weights"] = list(self.weights)
        return out


def fixed_set_principal(p) -> FixedSet:
    p = _params(p)
    if p.m == 0:
        # for n = 1, 2 the effective principal isotropy is trivial
        return FixedSet("TwoSpheres3") if p.n == 0 or p.n >= 3 else FixedSet("WholeManifoldOrNone")
    if gcd(p.m, p.n) >= 3:
        return FixedSet("TwoLensSpaces", p.l, (p.m, p.n))
    return FixedSet("WholeManifoldOrNone")


@dataclass(frozen=True)
class CatalogAction:
    """A classified action that is not presented as some N_{m,n}^l."""

    name: str
    group: str
    manifold: ManifoldId
    description: str
    fixed_points: int | None = None  # isolated fixed points, when there are any

    def __str__(self):
        return self.name


def _conn_sum_action(k_w: int, l_b: int) -> CatalogAction:
    # summing at a fixed point removes one fixed point from each summand
    count = 3 * k_w + 4 * l_b - 2 * (k_w + l_b - 1)
    return CatalogAction(
        f"SO3-on-{k_w}W#{l_b}B", "SO3", ManifoldId.conn_sum(k_w, l_b),
        "SO(3) with isotropy Z2xZ2, O(2), SO(3) and isolated fixed points", count,
    )


def _conn_sum_s3xs2_action(k: int) -> CatalogAction:
    return CatalogAction(
        f"SO3-on-#{k + 1}(S3xS2)", "SO3", ManifoldId.conn_sum_s3xs2(k),
        f"SO(3) on the first factors; orbit space S^3 minus {k + 2} open 3-disks",
    )


CATALOG_ACTIONS: dict[str, CatalogAction] = {
    a.name: a
    for a in [
        CatalogAction("S5-SO3-fixed-circle", "SO3", ManifoldId("S5"), "A -> diag(A,1,1,1); isotropy SO(2), SO(3)"),
        CatalogAction("S5-SO3-diagonal", "SO3", ManifoldId("S5"), "A -> diag(A,A); isotropy {1}, SO(2)"),
        CatalogAction("S5-SU2-linear", "SU2", ManifoldId("S5"), "B -> diag(B,1) in SU(3); isotropy {1}, SU(2)"),
        CatalogAction("S5-SO3-irreducible", "SO3", ManifoldId("S5"),
                      "conjugation on traceless symmetric matrices; isotropy Z2xZ2, O(2), SO(3)", 2),
        CatalogAction("Wu-SU2", "SU2", ManifoldId("Wu"), "B.[C] = [diag(B,1) C]; isotropy {1}, SO(2)"),
        _conn_sum_action(1, 0),
        _conn_sum_action(0, 1),
        _conn_sum_action(2, 0),
        _conn_sum_s3xs2_action(0),
        _conn_sum_s3xs2_action(1),
    ]
}


def catalog_action(name: str) -> CatalogAction:
    """Look up a catalog entry; ``SO3-on-<k>W#<l>B`` and ``SO3-on-#<k>(S3xS2)`` are generated on demand."""
    if name in CATALOG_ACTIONS:
        return CATALOG_ACTIONS[name]
    import re

    m = re.fullmatch(r"SO3-on-(\d+)W#(\d+)B", name)
    if m and int(m.group(1)) + int(m.group(2)) >= 1:
        return _conn_sum_action(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"SO3-on-#(\d+)\(S3xS2\)", name)
    if m and int(m.group(1)) >= 1:
        return _conn_sum_s3xs2_action(int(m.group(1)) - 1)
    raise UnclassifiedTarget(f"unknown catalog action {name!r}")


@dataclass(frozen=True)
class CurvatureVerdict:
    nonnegative: str  # "Yes" / "No"
    positive: str  # "LinearSphere" / "Candidate" / "Excluded"
    reason: str
    note: str = ""

    def __post_init__(self):
        if self.positive in ("LinearSphere", "Candidate") and self.nonnegative != "Yes":
            raise AssertionError("positive curvature candidate without nonnegative curvature")

    def to_json(self) -> dict:
        return {"nonnegative": self.nonnegative, "positive": self.positive, "reason": self.reason}


def curvature_verdict(target) -> CurvatureVerdict:
    """Nonnegative / positive curvature verdict for a classified action.

    Reason tags: ``ONeill`` (the submersion metric from S^3 x S^3 is
    nonnegatively curved and nothing further is known either way),
    ``TheoremB`` (survives every exclusion; positivity open or linear),
    ``FrankelLensPair`` (two 3-dimensional fixed components in dimension 5),
    ``ThreeFixedPoints`` (isolated fixed point count above the Gauss-Bonnet
    bound), ``SoulTwoBoundary`` (orbit space with boundary spheres incompatible
    with the soul construction).
    """
    if isinstance(target, CatalogAction):
        return _catalog_verdict(target)
    if isinstance(target, str):
        return _catalog_verdict(catalog_action(target))
    try:
        p = _params(target)
    except (TypeError, InvalidParams) as exc:
        raise UnclassifiedTarget(f"cannot classify {target!r}: {exc}") from None
    if p.m == 0:
        if p.n in (1, 2):
            return CurvatureVerdict("Yes", "Candidate", "TheoremB")
        return CurvatureVerdict("Yes", "Excluded", "FrankelLensPair", "fixed set of principal isotropy is two 3-spheres")
    d = gcd(p.m, p.n)
    if d >= 3:
        return CurvatureVerdict("Yes", "Excluded", "FrankelLensPair", f"fixed set is two copies of S^3/Z_{p.l}")
    return CurvatureVerdict("Yes", "Candidate", "TheoremB", "trivial effective principal isotropy")


def _catalog_verdict(a: CatalogAction) -> CurvatureVerdict:
    tag = a.manifold.tag
    if tag == "S5":
        return CurvatureVerdict("Yes", "LinearSphere", "TheoremB", "round metric")
    if tag == "Wu" and a.group == "SU2":
        return CurvatureVerdict("Yes", "Candidate", "TheoremB", "positivity open")
    if a.fixed_points is not None:
        bound_nn = max_isolated_fixed_points("Nonnegative")
        bound_pos = max_isolated_fixed_points("Positive")
        if a.fixed_points > bound_nn:
            return CurvatureVerdict("No", "Excluded", "ThreeFixedPoints", f"{a.fixed_points} isolated fixed points")
        if a.fixed_points > bound_pos:
            return CurvatureVerdict("Yes", "Excluded", "ThreeFixedPoints", f"{a.fixed_points} isolated fixed points")
    if tag == "ConnSumS3xS2":
        if a.manifold.k == 0:
            return CurvatureVerdict("Yes", "Excluded", "SoulTwoBoundary", "soul is a 2-sphere")
        return CurvatureVerdict("No", "Excluded", "SoulTwoBoundary", "orbit space has more than two boundary spheres")
    raise UnclassifiedTarget(f"no verdict for {a}")


def gauss_bonnet_admits(n: int, strict: bool) -> bool:
    """Can a geodesic n-gon with all angles pi/3 have angle sum >= (resp. >) (n-2) pi?

    Angles are compared in units of pi, so the check is exact.
    """
    lhs, rhs = Fraction(n, 3), Fraction(n - 2)
    return lhs > rhs if strict else lhs >= rhs


def max_isolated_fixed_points(curvature: str) -> int:
    if curvature not in ("Nonnegative", "Positive"):
        raise ValueError("curvature must be 'Nonnegative' or 'Positive'")
    strict = curvature == "Positive"
    n = 2
    while gauss_bonnet_admits(n + 1, strict):
        n += 1
    return n


# --------------------------------------------------------------------------
# orbit-type tables


@dataclass(frozen=True)
class Table1Row:
    group: str
    H: str  # row label as printed, e.g. "Z_m"
    normalizer: str
    quotient: str
    pi: str  # "Z", "Z_2" or "1"


TABLE1: tuple[Table1Row, ...] = tuple(
    Table1Row(*row)
    for row in [
        ("SO3", "{1}", "SO(3)", "SO(3)", "Z_2"),
        ("SO3", "Z_2", "O(2)", "SO(2)", "Z"),
        ("SO3", "Z_m", "O(2)", "O(2)", "Z"),
        ("SO3", "D_2", "O", "D_3", "1"),
        ("SO3", "D_m", "D_2m", "Z_2", "1"),
        ("SO3", "T", "O", "Z_2", "1"),
        ("SO3", "I", "I", "{1}", "1"),
        ("SO3", "O", "O", "{1}", "1"),
        ("SO3", "SO(2)", "O(2)", "Z_2", "1"),
        ("SO3", "O(2)", "O(2)", "{1}", "1"),
        ("SU2", "{1}", "SU(2)", "SU(2)", "1"),
        ("SU2", "Z_2", "SU(2)", "SO(3)", "Z_2"),
        ("SU2", "Z_m", "Pin(2)", "Pin(2)", "Z"),
        ("SU2", "Dic_2", "O*", "D_3", "1"),
        ("SU2", "Dic_m", "Dic_2m", "Z_2", "1"),
        ("SU2", "T*", "O*", "Z_2", "1"),
        ("SU2", "I*", "I*", "{1}", "1"),
        ("SU2", "O*", "O*", "{1}", "1"),
        ("SU2", "SO(2)", "Pin(2)", "Z_2", "1"),
        ("SU2", "Pin(2)", "Pin(2)", "{1}", "1"),
    ]
)


def table1_row(group: str, H: IsoType) -> Table1Row:
    """Row of the normalizer table for a principal isotropy type; parameters m >= 3 collapse to ``Z_m``/``D_m``/``Dic_m``."""
    if group not in ("SO3", "SU2"):
        raise UnknownRow(f"group must be SO3 or SU2, not {group!r}")
    label = str(H)
    if H.tag == "Cyclic" and H.param >= 3:
        label = "Z_m"
    elif H.tag == "Dihedral":
        label = "D_m"
    elif H.tag == "Dicyclic" and H.param >= 3:
        label = "Dic_m"
    elif H.tag == "Circle":
        label = "SO(2)"
    for row in TABLE1:
        if row.group == group and row.H == label:
            return row
    raise UnknownRow(f"no row for H = {H} in {group}")


def count_uot_actions(group: str, H: IsoType, cohomogeneity: int) -> int | None:
    """Number of G-manifolds with the single orbit type G/H over a sphere.

    Returns the finite count, or None for countably infinite (pi = Z).
    """
    row = table1_row(group, H)
    if cohomogeneity != 2 + H.dimension:
        raise UnknownRow(f"single orbit type {H} forces cohomogeneity {2 + H.dimension}, not {cohomogeneity}")
    return {"Z": None, "Z_2": 2, "1": 1}[row.pi]


@dataclass(frozen=True)
class Realization:
    manifold: ManifoldId
    action: str
    note: str = ""

    def to_json(self) -> dict:
        out = {"manifold": str(self.manifold), "action": self.action}
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class Table2Row:
    label: str
    H: str
    K: str
    group: str
    pi: str
    pi0: str
    bound: str  # upper bound on the number of actions ("Z" = countable)


TABLE2: tuple[Table2Row, ...] = tuple(
    Table2Row(*row)
    for row in [
        ("a", "{1}", "SO(2)", "SO3", "pi_1(RP^2)", "1", "2"),
        ("b", "{1}", "SO(2)", "SU2", "pi_1(RP^2)", "1", "2"),
        ("c", "{1}", "SU(2)", "SU2", "0", "1", "1"),
        ("d", "Z_2", "SO(2)", "SO3", "0", "1", "1"),
        ("e", "Z_2", "SO(2)", "SU2", "pi_1(RP^2)", "1", "2"),
        ("f", "Z_m", "SO(2)", "SO3", "0", "1", "1"),
        ("g", "Z_m", "SO(2)", "SU2", "0", "1", "1"),
        ("h", "Z_2", "O(2)", "SO3", "pi_1(S^1)", "Z_2", "Z"),
        ("i", "D_m", "O(2)", "SO3", "0", "Z_2", "1"),
        ("j", "SO(2)", "SO(3)", "SO3", "0", "1", "1"),
    ]
)


def _n0(n: int) -> Realization:
    p = ActionParams(0, n, 1)
    return Realization(diffeo_type(p), str(p))


def singular_classification(group: str, H: IsoType, K: IsoType, *, top: IsoType | None = None,
                            boundary_spheres: int | None = None, max_fixed_points: int = 4) -> list[Realization]:
    """Actions with singular orbits and isotropy chain H < K (< top).

    Two orbit types use the chains allowed for simply-connected 5-manifolds;
    ``boundary_spheres`` selects the orbit space (S^3 minus that many disks)
    for the chain SO(2) < SO(3). Three orbit types (SO(3) only, chain
    Z2xZ2 < O(2) < SO(3)) list the manifolds with at most ``max_fixed_points``
    isolated fixed points.
    """
    if group not in ("SO3", "SU2"):
        raise DisallowedChain(f"group must be SO3 or SU2, not {group!r}")
    if top is not None:
        if (group, H.tag, K.tag, top.tag) != ("SO3", "KleinFour", "O2", "SO3"):
            raise DisallowedChain("the only chain with three orbit types is Z2xZ2 < O(2) < SO(3) in SO(3)")
        out = [Realization(ManifoldId("S5"), "S5-SO3-irreducible", "2 fixed points")]
        for n in range(3, max_fixed_points + 1):
            for k_w in range(n):
                l_b, rem = divmod(n - 2 - k_w, 2)
                if rem == 0 and l_b >= 0 and k_w + l_b >= 1:
                    a = _conn_sum_action(k_w, l_b)
                    out.append(Realization(a.manifold, a.name, f"{n} fixed points"))
        return out

    if K.tag == "Circle" and (H.tag in ("Trivial", "Cyclic")):
        m = H.order
        if group == "SO3":
            if m == 1:
                return [Realization(ManifoldId("S5"), "S5-SO3-diagonal"), _n0(2)]
            # effective SO(3) with principal Z_m is N_{0,2m}^1 as an SU(2)-manifold
            return [_n0(2 * m)]
        if m == 1:
            return [_n0(1), Realization(ManifoldId("Wu"), "Wu-SU2")]
        if m == 2:
            r = _n0(2)
            return [Realization(r.manifold, r.action,
                                "table bound is 2; the second class is not exhibited (ineffective SU(2) action)")]
        note = "" if m % 2 else f"ineffective: the SO(3)-action with principal Z_{m // 2}"
        r = _n0(m)
        return [Realization(r.manifold, r.action, note)]
    if group == "SU2" and H.tag == "Trivial" and K.tag == "SU2":
        return [Realization(ManifoldId("S5"), "S5-SU2-linear")]
    if group == "SO3" and K.tag == "O2" and H.tag in ("Cyclic", "KleinFour", "Dihedral") and (
            H.tag != "Cyclic" or H.param == 2):
        return []  # never simply-connected
    if group == "SO3" and H.tag == "Circle" and K.tag == "SO3":
        if boundary_spheres is None:
            raise DisallowedChain("chain SO(2) < SO(3) needs the number of boundary spheres")
        if boundary_spheres < 1:
            raise DisallowedChain("orbit space must have at least one boundary sphere")
        if boundary_spheres == 1:
            return [Realization(ManifoldId("S5"), "S5-SO3-fixed-circle")]
        a = _conn_sum_s3xs2_action(boundary_spheres - 2)
        return [Realization(a.manifold, a.name, f"{boundary_spheres} fixed 2-spheres")]
    raise DisallowedChain(f"({H}, {K}) is not an isotropy chain of a simply-connected {group}-manifold")


# --------------------------------------------------------------------------
# full record


def classify(m: int, n: int, l: int) -> dict:
    """Everything known about N_{m,n}^l, as a JSON-ready record."""
    p = validate(m, n, l)
    prof = isotropy_profile(p)
    record = {
        "m": p.m,
        "n": p.n,
        "l": p.l,
        "canonical_l": canonical_form(p).l,
        "effective_group": prof.effective_group,
        "diffeo_type": str(diffeo_type(p)),
        "isotropy": prof.to_json(),
        "quotient_space": prof.quotient_space,
    }
    if p.m > 0:
        s = slice_data(p)
        record["slice"] = asdict(s)
        record["pi1_order"] = pi1_order(p.m, p.n, s.b1, s.b2, s.k)
    else:
        record["slice"] = None
        record["pi1_order"] = 1
    record["fixed_set"] = fixed_set_principal(p).to_json()
    record["curvature"] = curvature_verdict(p).to_json()
    return record
