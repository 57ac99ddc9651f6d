"""Finitely presented groups: parsing, Todd-Coxeter coset enumeration, abelianization.

Presentation grammar::

    <g1, g2, ... | w1, w2, ...>

A word is a product of factors ``x``, ``x^3``, ``x^-2``, ``x^{-2}``, ``(x y)^2``
or ``1``. A relation ``u = v`` becomes the relator ``u v^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple

__all__ = [
    "PresentationSyntaxError",
    "UnknownGenerator",
    "Word",
    "Presentation",
    "free_reduce",
    "parse_presentation",
    "CosetResult",
    "todd_coxeter",
    "smith_normal_form",
    "Abelianization",
    "abelianization",
    "DEFAULT_MAX_COSETS",
]

DEFAULT_MAX_COSETS = 100_000

Word = tuple  # of (generator index, nonzero exponent), freely reduced


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGenerator(PresentationSyntaxError):
    pass


def free_reduce(letters) -> Word:
    """Freely reduce a sequence of (generator, exponent) pairs, merging neighbours."""
    out: list[list[int]] = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


def invert(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            if any(not 0 <= g < n for g, _ in r):
                raise ValueError("relator uses an undeclared generator")

    @classmethod
    def build(cls, generators, relators) -> "Presentation":
        """From raw letter lists; relators are freely reduced and empty ones dropped."""
        rels = tuple(w for w in (free_reduce(r) for r in relators) if w)
        return cls(tuple(generators), rels)

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[g] if e == 1 else f"{self.generators[g]}^{e}" for g, e in word)

    def __str__(self):
        return f"<{', '.join(self.generators)} | {', '.join(self.word_str(r) for r in self.relators)}>"


# --------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[<>|,=^(){}\-]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens: dict[str, int] = {}

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None, kind=None):
        tok = self.toks[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise PresentationSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def presentation(self):
        self.take("<")
        names = []
        if self.peek()[1] not in ("|", ">"):
            names.append(self.take(kind="ident"))
            while self.peek()[1] == ",":
                self.take(",")
                names.append(self.take(kind="ident"))
        for _, name, pos in names:
            if name in self.gens:
                raise PresentationSyntaxError(f"duplicate generator {name!r}", pos)
            self.gens[name] = len(self.gens)
        rels = []
        if self.peek()[1] == "|":
            self.take("|")
            if self.peek()[1] != ">":
                rels.append(self.relation())
                while self.peek()[1] == ",":
                    self.take(",")
                    rels.append(self.relation())
        self.take(">")
        self.take(kind="end")
        return Presentation.build([n for _, n, _ in names], rels)

    def relation(self):
        lhs = self.word()
        if self.peek()[1] == "=":
            self.take("=")
            rhs = self.word()
            return free_reduce(lhs + invert(free_reduce(rhs)))
        return lhs

    def word(self):
        letters = []
        start = self.peek()
        factors = 0
        while self.peek()[0] in ("ident", "int") or self.peek()[1] == "(":
            letters.extend(self.factor())
            factors += 1
        if not factors:
            raise PresentationSyntaxError("expected a word", start[2])
        return free_reduce(letters)

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "ident":
            self.take()
            if value not in self.gens:
                raise UnknownGenerator(f"unknown generator {value!r}", pos)
            base = ((self.gens[value], 1),)
        elif kind == "int":
            if value != "1":
                raise PresentationSyntaxError("only '1' may stand for the identity", pos)
            self.take()
            base = ()
        else:
            self.take("(")
            base = self.word()
            self.take(")")
        if self.peek()[1] == "^":
            self.take("^")
            exp = self.exponent()
            unit = base if exp >= 0 else invert(base)
            return list(unit) * abs(exp)
        return list(base)

    def exponent(self):
        braced = self.peek()[1] == "{"
        if braced:
            self.take("{")
        sign = 1
        if self.peek()[1] == "-":
            self.take("-")
            sign = -1
        value = int(self.take(kind="int")[1])
        if braced:
            self.take("}")
        return sign * value


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


# --------------------------------------------------------------------------
# coset enumeration


@dataclass
class CosetResult:
    """``status`` is ``'completed'`` (then ``order`` is the group order) or ``'exceeded'``."""

    status: str
    order: int | None
    max_cosets_used: int
    table: list[list[int]] | None = None

    @property
    def completed(self) -> bool:
        return self.status == "completed"

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.order is not None:
            out["order"] = self.order
        out["max_cosets_used"] = self.max_cosets_used
        return out


class _Exceeded(Exception):
    pass


def _letters(word: Word) -> list[int]:
    # column 2g is generator g, column 2g+1 its inverse
    out = []
    for g, e in word:
        out.extend([2 * g if e > 0 else 2 * g + 1] * abs(e))
    return out


def todd_coxeter(P: Presentation, max_cosets: int = DEFAULT_MAX_COSETS, subgroup=()) -> CosetResult:
    """HLT coset enumeration of the cosets of ``subgroup`` (default: trivial).

    Cosets are processed in order of definition; for each live coset every
    relator is scanned and filled, then its remaining gaps are defined in
    column order. Coincidences are resolved with a union-find queue.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    ncols = 2 * len(P.generators)
    rels = [_letters(r) for r in P.relators]
    table: list[list[int | None]] = [[None] * ncols]
    parent = [0]

    def find(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(a, x):
        if len(table) >= max_cosets:
            raise _Exceeded
        b = len(table)
        table.append([None] * ncols)
        parent.append(b)
        table[a][x] = b
        table[b][x ^ 1] = a

    def merge(k, l, queue):
        k, l = find(k), find(l)
        if k != l:
            if k > l:
                k, l = l, k
            parent[l] = k
            queue.append(l)

    def coincidence(a, b):
        queue: list[int] = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(ncols):
                d = table[g][x]
                if d is None:
                    continue
                table[d][x ^ 1] = None
                mu, nu = find(g), find(d)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] is not None:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(a, w):
        f, b = a, a
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != a:
                    coincidence(f, a)
                return
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    try:
        for h in subgroup:
            scan_and_fill(0, _letters(h))
        a = 0
        while a < len(table):
            for w in rels:
                if parent[a] != a:
                    break
                scan_and_fill(a, w)
            if parent[a] == a:
                for x in range(ncols):
                    if parent[a] != a:
                        break
                    if table[a][x] is None:
                        define(a, x)
            a += 1
    except _Exceeded:
        return CosetResult("exceeded", None, len(table))

    live = [c for c in range(len(table)) if parent[c] == c]
    renum = {c: i for i, c in enumerate(live)}
    compact = [[renum[find(table[c][x])] for x in range(ncols)] for c in live]
    _check_table(compact, rels)
    return CosetResult("completed", len(live), len(table), compact)


def _check_table(table, rels):
    n = len(table)
    for row in table:
        if any(v is None or not 0 <= v < n for v in row):
            raise AssertionError("coset table not closed")
    for c in range(n):
        for w in rels:
            x = c
            for letter in w:
                x = table[x][letter]
            if x != c:
                raise AssertionError("relator does not act trivially on the coset table")


# --------------------------------------------------------------------------
# Smith normal form and abelianization


def smith_normal_form(matrix) -> tuple[int, ...]:
    """Nonzero invariant factors ``d1 | d2 | ... | dr`` of an integer matrix."""
    A = [[int(x) for x in row] for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            changed = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        changed = True
                        break
            if changed:
                continue
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        changed = True
                        break
            if changed:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
        diag.append(abs(A[t][t]))
        t += 1
    return tuple(diag)


class Abelianization(NamedTuple):
    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self):
        parts = [f"Z_{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "1"


def exponent_matrix(P: Presentation) -> list[list[int]]:
    n = len(P.generators)
    rows = []
    for r in P.relators:
        row = [0] * n
        for g, e in r:
            row[g] += e
        rows.append(row)
    return rows


def abelianization(P: Presentation) -> Abelianization:
    factors = smith_normal_form(exponent_matrix(P)) if P.relators else ()
    torsion = tuple(d for d in factors if d != 1)
    return Abelianization(torsion, len(P.generators) - len(factors))
