"""Finite subgroups of SU(2) and SO(3): construction, recognition, dissection.

Groups are explicit element sets. An SO(3) group stores one canonical
quaternion per pair ``{q, -q}`` (see ``projective``), so both ambients share
the quaternion arithmetic. Subgroup lattices, normalizers and quotients work
on integer indices into a cached Cayley table.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from .exactfield import PHI, SQRT2
from .quaternions import PinQuat, UnitQuat

__all__ = [
    "CapExceeded",
    "UnknownTag",
    "BadParam",
    "UnrecognizedGroup",
    "NotNormal",
    "NotSubgroup",
    "IsoType",
    "parse_isotype",
    "FiniteSubgroup",
    "closure",
    "catalog",
    "recognize",
    "identify",
    "subgroups",
    "normal_subgroups",
    "quotient_type",
    "normalizer_in",
    "project_so3",
    "BINICO_GENERATORS",
    "SUBGROUP_BOUND",
]

SUBGROUP_BOUND = 240


class CapExceeded(RuntimeError):
    pass


class UnknownTag(ValueError):
    pass


class BadParam(ValueError):
    pass


class UnrecognizedGroup(RuntimeError):
    pass


class NotNormal(ValueError):
    pass


class NotSubgroup(ValueError):
    pass


# --------------------------------------------------------------------------
# isomorphism types

_FIXED_ORDERS = {
    "Trivial": 1, "KleinFour": 4, "Tet": 12, "Oct": 24, "Ico": 60,
    "BinTet": 24, "BinOct": 48, "BinIco": 120,
}
_CONTINUOUS = {"Circle": "SO(2)", "O2": "O(2)", "Pin2": "Pin(2)", "SU2": "SU(2)", "SO3": "SO(3)"}
_NAMES = {
    "Trivial": "{1}", "KleinFour": "D_2", "Tet": "T", "Oct": "O", "Ico": "I",
    "BinTet": "T*", "BinOct": "O*", "BinIco": "I*",
}


@dataclass(frozen=True)
class IsoType:
    """Isomorphism type of a closed subgroup of SU(2) or SO(3).

    Finite tags carry an order; ``Circle``, ``O2``, ``Pin2``, ``SU2`` and
    ``SO3`` name the continuous subgroups that appear as isotropy groups and
    in the normalizer tables, and have ``order`` None.
    """

    tag: str
    param: int | None = None

    def __post_init__(self):
        if self.tag in ("Cyclic", "Dicyclic", "Dihedral"):
            if self.param is None or self.param < 1:
                raise BadParam(f"{self.tag} needs a positive parameter")
        elif self.tag in _FIXED_ORDERS or self.tag in _CONTINUOUS:
            if self.param is not None:
                raise BadParam(f"{self.tag} takes no parameter")
        else:
            raise UnknownTag(self.tag)

    @classmethod
    def cyclic(cls, k: int) -> "IsoType":
        return cls("Trivial") if k == 1 else cls("Cyclic", k)

    @classmethod
    def dicyclic(cls, m: int) -> "IsoType":
        return cls.cyclic(4) if m == 1 else cls("Dicyclic", m)

    @classmethod
    def dihedral(cls, m: int) -> "IsoType":
        if m == 1:
            return cls.cyclic(2)
        return cls("KleinFour") if m == 2 else cls("Dihedral", m)

    @property
    def order(self) -> int | None:
        if self.tag == "Cyclic":
            return self.param
        if self.tag == "Dicyclic":
            return 4 * self.param
        if self.tag == "Dihedral":
            return 2 * self.param
        return _FIXED_ORDERS.get(self.tag)

    @property
    def is_finite(self) -> bool:
        return self.tag not in _CONTINUOUS

    @property
    def dimension(self) -> int:
        return {"Circle": 1, "O2": 1, "Pin2": 1, "SU2": 3, "SO3": 3}.get(self.tag, 0)

    def __str__(self):
        if self.tag == "Cyclic":
            return f"Z_{self.param}"
        if self.tag == "Dicyclic":
            return f"Dic_{self.param}"
        if self.tag == "Dihedral":
            return f"D_{self.param}"
        return _NAMES.get(self.tag) or _CONTINUOUS[self.tag]


_ALIASES = {
    "1": "Trivial", "{1}": "Trivial", "trivial": "Trivial",
    "T*": "BinTet", "O*": "BinOct", "I*": "BinIco", "T": "Tet", "O": "Oct", "I": "Ico",
    "V4": "KleinFour", "Z2xZ2": "KleinFour",
    "SO(2)": "Circle", "S1": "Circle", "O(2)": "O2", "Pin(2)": "Pin2", "SU(2)": "SU2", "SO(3)": "SO3",
}


def parse_isotype(text: str) -> IsoType:
    """Accepts ``Z_3``, ``Z3``, ``Dic_2``, ``D_4``, ``T*``, ``SO(2)``, tag names, ..."""
    s = text.strip()
    if s in _ALIASES:
        return IsoType(_ALIASES[s])
    if s in _FIXED_ORDERS or s in _CONTINUOUS:
        return IsoType(s)
    for prefix, build in (("Dic", IsoType.dicyclic), ("Z", IsoType.cyclic), ("D", IsoType.dihedral),
                          ("Cyclic", IsoType.cyclic), ("Dicyclic", IsoType.dicyclic),
                          ("Dihedral", IsoType.dihedral)):
        rest = s[len(prefix):].lstrip("_(").rstrip(")")
        if s.startswith(prefix) and rest.isdigit():
            return build(int(rest))
    raise UnknownTag(f"unknown group type {text!r}")


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _cyclic_orders(n) -> Counter:
    return Counter({d: _phi(d) for d in _divisors(n)})


def expected_order_multiset(t: IsoType) -> Counter:
    if t.tag == "Trivial":
        return Counter({1: 1})
    if t.tag == "Cyclic":
        return _cyclic_orders(t.param)
    if t.tag == "Dicyclic":
        return _cyclic_orders(2 * t.param) + Counter({4: 2 * t.param})
    if t.tag == "Dihedral":
        return _cyclic_orders(t.param) + Counter({2: t.param})
    table = {
        "KleinFour": {1: 1, 2: 3},
        "Tet": {1: 1, 2: 3, 3: 8},
        "Oct": {1: 1, 2: 9, 3: 8, 4: 6},
        "Ico": {1: 1, 2: 15, 3: 20, 5: 24},
        "BinTet": {1: 1, 2: 1, 3: 8, 4: 6, 6: 8},
        "BinOct": {1: 1, 2: 1, 3: 8, 4: 18, 6: 8, 8: 12},
        "BinIco": {1: 1, 2: 1, 3: 20, 4: 30, 5: 24, 6: 20, 10: 24},
    }
    if t.tag not in table:
        raise UnknownTag(f"{t} is not finite")
    return Counter(table[t.tag])


def _candidates(n):
    yield IsoType.cyclic(n)
    if n % 4 == 0 and n >= 8:
        yield IsoType("Dicyclic", n // 4)
    if n % 2 == 0 and n >= 6:
        yield IsoType("Dihedral", n // 2)
    for tag, order in _FIXED_ORDERS.items():
        if order == n and tag != "Trivial":
            yield IsoType(tag)


def identify(order: int, multiset, abelian: bool | None = None) -> IsoType:
    """Match an (order, element-order multiset) profile against every family in scope.

    The families are cyclic, dicyclic, dihedral (with the Klein four-group),
    the three rotation groups and their binary covers. Their profiles are
    pairwise distinct, which is what makes this lookup a recognition.
    """
    multiset = Counter(multiset)
    for cand in _candidates(order):
        if expected_order_multiset(cand) == multiset:
            if abelian is not None and abelian != (cand.tag in ("Trivial", "Cyclic", "KleinFour")):
                continue
            return cand
    raise UnrecognizedGroup(f"no family of order {order} has element orders {dict(sorted(multiset.items()))}")


# --------------------------------------------------------------------------
# finite subgroups


class FiniteSubgroup:
    """A finite group of unit quaternions (``ambient='SU2'``) or of rotations
    represented by canonical quaternions (``ambient='SO3'``)."""

    def __init__(self, elements, generators=(), ambient: str = "SU2", *, _parent=None, _parent_idx=None):
        if ambient not in ("SU2", "SO3"):
            raise ValueError(f"ambient must be SU2 or SO3, not {ambient!r}")
        self.ambient = ambient
        self.elements = tuple(sorted(set(elements), key=lambda q: q.sort_key()))
        self.generators = tuple(generators)
        self._parent = _parent
        self._parent_idx = _parent_idx

    def mul(self, x, y):
        z = x * y
        return z.projective() if self.ambient == "SO3" else z

    def inv(self, x):
        z = x.inverse()
        return z.projective() if self.ambient == "SO3" else z

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, q):
        if self.ambient == "SO3":
            q = q.projective()
        return q in self.index

    def __eq__(self, other):
        if not isinstance(other, FiniteSubgroup):
            return NotImplemented
        return self.ambient == other.ambient and self.elements == other.elements

    def __hash__(self):
        return hash((self.ambient, self.elements))

    def __repr__(self):
        return f"<FiniteSubgroup {self.ambient} order={self.order}>"

    @cached_property
    def index(self) -> dict:
        return {q: i for i, q in enumerate(self.elements)}

    @cached_property
    def identity_index(self) -> int:
        return next(i for i, q in enumerate(self.elements) if q.is_one())

    @cached_property
    def table(self) -> list[list[int]]:
        if self._parent is not None:
            pt = self._parent.table
            pos = {p: i for i, p in enumerate(self._parent_idx)}
            return [[pos[pt[a][b]] for b in self._parent_idx] for a in self._parent_idx]
        idx = self.index
        els = self.elements
        return [[idx[self.mul(x, y)] for y in els] for x in els]

    @cached_property
    def inverse_index(self) -> list[int]:
        e = self.identity_index
        return [row.index(e) for row in self.table]

    @cached_property
    def element_orders(self) -> list[int]:
        t, e = self.table, self.identity_index
        out = []
        for i in range(self.order):
            n, x = 1, i
            while x != e:
                x = t[x][i]
                n += 1
            out.append(n)
        return out

    def order_multiset(self) -> Counter:
        return Counter(self.element_orders)

    def is_abelian(self) -> bool:
        t = self.table
        gens = [self.index[self._norm(g)] for g in self.generators] or range(self.order)
        return all(t[a][b] == t[b][a] for a in gens for b in gens)

    def _norm(self, q):
        return q.projective() if self.ambient == "SO3" else q

    @cached_property
    def iso_type(self) -> IsoType:
        return recognize(self)

    def subgroup_from_indices(self, idx) -> "FiniteSubgroup":
        idx = sorted(idx)
        els = [self.elements[i] for i in idx]
        gens = _greedy_generators(self.table, idx, self.identity_index)
        return FiniteSubgroup(els, [self.elements[i] for i in gens], self.ambient,
                              _parent=self, _parent_idx=idx)

    def indices_of(self, H: "FiniteSubgroup") -> list[int]:
        try:
            return sorted(self.index[self._norm(q)] for q in H.elements)
        except KeyError:
            raise NotSubgroup("not contained in the ambient group") from None

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "order": self.order,
            "iso_type": str(self.iso_type),
            "generators": [str(g) for g in self.generators],
            "element_order_multiset": {str(k): v for k, v in sorted(self.order_multiset().items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _bfs_closure(table, gens, start, limit=None):
    """Index-level closure of ``gens`` starting from index ``start`` (the identity)."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            row = table[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _greedy_generators(table, idx, identity):
    gens, span = [], {identity}
    for i in idx:
        if i not in span:
            gens.append(i)
            span = _bfs_closure(table, gens, identity)
            if len(span) == len(idx):
                break
    return gens


def closure(gens, cap: int = 10_000, ambient: str = "SU2") -> FiniteSubgroup:
    """Smallest multiplicatively closed set containing ``gens`` and 1."""
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator (pass the identity for the trivial group)")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if ambient == "SO3":
        gens = [g.projective() for g in gens]

    def mul(x, y):
        z = x * y
        return z.projective() if ambient == "SO3" else z

    one = type(gens[0]).one()
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"closure exceeds {cap} elements")
        frontier = nxt
    return FiniteSubgroup(seen, gens, ambient)


# --------------------------------------------------------------------------
# catalog

_HALF = Fraction(1, 2)
_I = UnitQuat(0, 1, 0, 0)
_J = UnitQuat(0, 0, 1, 0)
_OMEGA = UnitQuat(-_HALF, -_HALF, -_HALF, -_HALF)
_OCT = UnitQuat(SQRT2 * _HALF, SQRT2 * _HALF, 0, 0)

#: (phi + phi^-1 i + j)/2 has order 10 and w = -(1+i+j+k)/2 has order 3; together they generate I*.
BINICO_GENERATORS = (UnitQuat(PHI * _HALF, (PHI - 1) * _HALF, _HALF, 0), _OMEGA)


@lru_cache(maxsize=None)
def catalog(tag: str, param: int | None = None, ambient: str | None = None) -> FiniteSubgroup:
    """A concrete standard copy of a finite subgroup.

    SU(2): ``Trivial``, ``Cyclic`` k (generated by exp(2 pi i/k)), ``Dicyclic`` m
    (exp(i pi/m) and j), ``BinTet`` (i, j, w), ``BinOct`` (adds (1+i)/sqrt2),
    ``BinIco`` (:data:`BINICO_GENERATORS`). SO(3): ``Cyclic`` with
    ``ambient='SO3'``, ``Dihedral``, ``KleinFour``, ``Tet``, ``Oct``, ``Ico`` as images
    of the SU(2) groups.
    """
    so3_tags = {"Dihedral", "KleinFour", "Tet", "Oct", "Ico"}
    if ambient is None:
        ambient = "SO3" if tag in so3_tags else "SU2"
    if tag in so3_tags and ambient != "SO3":
        raise BadParam(f"{tag} lives in SO(3)")
    needs_param = tag in ("Cyclic", "Dicyclic", "Dihedral")
    if needs_param and (param is None or param < 1):
        raise BadParam(f"{tag} needs a positive integer parameter")
    if not needs_param and param is not None:
        raise BadParam(f"{tag} takes no parameter")
    if tag == "Dicyclic" and param < 2:
        raise BadParam("Dicyclic(m) needs m >= 2")
    if tag == "Dihedral" and param < 2:
        raise BadParam("Dihedral(m) needs m >= 2")

    if ambient == "SO3":
        lift = {
            "Trivial": ("Trivial", None), "Cyclic": ("Cyclic", None if param is None else 2 * param),
            "Dihedral": ("Dicyclic", param), "KleinFour": ("Dicyclic", 2),
            "Tet": ("BinTet", None), "Oct": ("BinOct", None), "Ico": ("BinIco", None),
        }
        if tag not in lift:
            raise UnknownTag(f"{tag} is not an SO(3) catalog family")
        return project_so3(catalog(*lift[tag], ambient="SU2"))

    if tag == "Trivial":
        return closure([PinQuat.one()])
    if tag == "Cyclic":
        return closure([PinQuat(Fraction(1, param))])
    if tag == "Dicyclic":
        return closure([PinQuat(Fraction(1, 2 * param)), PinQuat(0, 1)])
    if tag == "BinTet":
        return closure([_I, _J, _OMEGA])
    if tag == "BinOct":
        return closure([_I, _J, _OMEGA, _OCT])
    if tag == "BinIco":
        return closure(BINICO_GENERATORS)
    raise UnknownTag(f"unknown catalog tag {tag!r}")


def quaternion_group() -> FiniteSubgroup:
    """{+-1, +-i, +-j, +-k} with field coordinates, as a subgroup of O* and I*."""
    return closure([_I, _J])


# --------------------------------------------------------------------------
# recognition and dissection


def recognize(G: FiniteSubgroup) -> IsoType:
    t = identify(G.order, G.order_multiset())
    su2_only = {"Dicyclic", "BinTet", "BinOct", "BinIco"}
    so3_only = {"Dihedral", "KleinFour", "Tet", "Oct", "Ico"}
    if (G.ambient == "SU2" and t.tag in so3_only) or (G.ambient == "SO3" and t.tag in su2_only):
        raise UnrecognizedGroup(f"{t} cannot be a subgroup of {G.ambient}")
    return t


def subgroups(G: FiniteSubgroup, bound: int = SUBGROUP_BOUND) -> list[FiniteSubgroup]:
    """All subgroups, by cyclic extension: start from cyclic subgroups and
    repeatedly join with one more cyclic subgroup until nothing new appears."""
    if G.order > bound:
        raise CapExceeded(f"subgroup enumeration limited to order <= {bound}")
    return [G.subgroup_from_indices(_mask_to_idx(m)) for m in _subgroup_masks(G)]


def _mask_to_idx(mask):
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _to_mask(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _subgroup_masks(G):
    t, e = G.table, G.identity_index
    cyclic = {}
    for g in range(G.order):
        m = _to_mask(_bfs_closure(t, [g], e))
        cyclic.setdefault(m, g)
    gens_of = {m: [g] for m, g in cyclic.items()}
    gens_of[1 << e] = []
    found = set(gens_of)
    frontier = list(found)
    while frontier:
        nxt = []
        for S in frontier:
            for C, g in cyclic.items():
                if C & S == C:
                    continue
                gens = gens_of[S] + [g]
                T = _to_mask(_bfs_closure(t, gens, e))
                if T not in found:
                    found.add(T)
                    gens_of[T] = gens
                    nxt.append(T)
        frontier = nxt
    return sorted(found, key=lambda m: (bin(m).count("1"), m))


def _is_normal_idx(G, idx) -> bool:
    t, inv = G.table, G.inverse_index
    members = set(idx)
    gens = [G.index[G._norm(g)] for g in G.generators] or range(G.order)
    return all(t[t[g][h]][inv[g]] in members for g in gens for h in idx)


def normal_subgroups(G: FiniteSubgroup, bound: int = SUBGROUP_BOUND) -> list[FiniteSubgroup]:
    return [H for H in subgroups(G, bound) if _is_normal_idx(G, G.indices_of(H))]


def is_normal(G: FiniteSubgroup, N: FiniteSubgroup) -> bool:
    return _is_normal_idx(G, G.indices_of(N))


def quotient_type(G: FiniteSubgroup, N: FiniteSubgroup) -> IsoType:
    """Abstract type of G/N from the induced multiplication on cosets."""
    idx = G.indices_of(N)
    if not _is_normal_idx(G, idx):
        raise NotNormal("N is not normal in G")
    t, e = G.table, G.identity_index
    members = set(idx)
    coset_of = {}
    reps = []
    for g in range(G.order):
        if g in coset_of:
            continue
        c = len(reps)
        reps.append(g)
        for n in idx:
            coset_of[t[g][n]] = c
    orders = Counter()
    for r in reps:
        k, x = 1, r
        while x not in members:
            x = t[x][r]
            k += 1
        orders[k] += 1
    abelian = all(coset_of[t[a][b]] == coset_of[t[b][a]] for a in reps for b in reps)
    return identify(len(reps), orders, abelian)


def normalizer_in(ambient: FiniteSubgroup, H: FiniteSubgroup) -> FiniteSubgroup:
    idx = ambient.indices_of(H)
    t, inv = ambient.table, ambient.inverse_index
    members = set(idx)
    hgens = [ambient.index[ambient._norm(g)] for g in H.generators] or idx
    norm = [g for g in range(ambient.order) if all(t[t[g][h]][inv[g]] in members for h in hgens)]
    return ambient.subgroup_from_indices(norm)


def project_so3(G: FiniteSubgroup) -> FiniteSubgroup:
    """Image under the 2-fold cover SU(2) -> SO(3)."""
    if G.ambient != "SU2":
        raise ValueError("project_so3 expects an SU(2) subgroup")
    gens = [g.projective() for g in G.generators]
    return FiniteSubgroup({q.projective() for q in G.elements}, gens, "SO3")
