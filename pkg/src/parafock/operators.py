"""Ladder operators: closed-form actions, an exact word algebra, compilation.

Two layers live here.

The first is the action of the four generators b±, f± on canonical basis
vectors, as explicit closed formulas with integer coefficients (s below is
the sign (−1)ⁿ):

    b⁻ alpha(m,n) = s·m·alpha(m-1,n) − 2s·n·m·beta(m-1,n)                m even
                  = −s·(2n−m−(p−1))·alpha(m-1,n) − 2s·n·(m−1)·beta(m-1,n) m odd
    b⁻ beta(m,n)  = −s·alpha(m-1,n) + s·(2n−m−p)·beta(m-1,n)             m even
                  = −s·alpha(m-1,n) − s·(m−1)·beta(m-1,n)                m odd
    b⁺ alpha(m,n) = s·alpha(m+1,n) − 2n·s·beta(m+1,n)
    b⁺ beta(m,n)  = −s·beta(m+1,n)
    f⁻ alpha(m,n) = n(p+1−n)·alpha(m,n-1)
    f⁻ beta(m,n)  = alpha(m,n-1) + (n−1)(p−n)·beta(m,n-1)
    f± keep m;  f⁺ raises n by one (zero at n = p), same kind, coefficient 1.

Outputs pass through canonicalization, so boundary labels fold or vanish and
the formulas hold verbatim at every m ≥ 0; the m_max truncation never touches
intermediate arithmetic.  Closed forms for the most useful quadratics are
provided as well (number operators Nb, Nf and the diagonal shift operators
Q± = ½{b∓, f±}), and are deliberately independent of the compilation route
below, which expands the same symbols into generator words and evaluates
those.  Tests pin the two routes against each other.

The second layer is a small free algebra: words in the generator and derived
symbols with exact scalar coefficients, supporting sums, products, brackets,
expansion of derived symbols into generator words, Z₂×Z₂ grading, and
compilation into a sparse matrix on a truncated basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import TruncationOverflow
from .fock import BasisVector, FockParams, Kind, Vector, enumerate_basis, grade_z2z2
from .scalars import GaussianRational


class Generator(enum.Enum):
    BPLUS = "b+"
    BMINUS = "b-"
    FPLUS = "f+"
    FMINUS = "f-"


class DerivedOp(enum.Enum):
    NB = "Nb"
    NF = "Nf"
    NS = "Ns"
    QPLUS = "Q+"
    QMINUS = "Q-"
    RPLUS = "R+"
    RMINUS = "R-"
    BPLUS_SQ = "(b+)^2"
    BMINUS_SQ = "(b-)^2"


Atom = Generator | DerivedOp
Word = tuple  # tuple[Atom, ...]

#: Z₂×Z₂ degree of each symbol: b-ladder (1,0), f-ladder (0,1), diagonal
#: quadratics (0,0), the mixed quadratics Q±, R± shift both levels (1,1).
ATOM_GRADE: dict[Atom, tuple[int, int]] = {
    Generator.BPLUS: (1, 0),
    Generator.BMINUS: (1, 0),
    Generator.FPLUS: (0, 1),
    Generator.FMINUS: (0, 1),
    DerivedOp.NB: (0, 0),
    DerivedOp.NF: (0, 0),
    DerivedOp.NS: (0, 0),
    DerivedOp.QPLUS: (1, 1),
    DerivedOp.QMINUS: (1, 1),
    DerivedOp.RPLUS: (1, 1),
    DerivedOp.RMINUS: (1, 1),
    DerivedOp.BPLUS_SQ: (0, 0),
    DerivedOp.BMINUS_SQ: (0, 0),
}


def theta(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Commutation factor (−1)^(a₁b₁+a₂b₂) between Z₂×Z₂ degrees; ±1 as int."""
    return -1 if (a[0] * b[0] + a[1] * b[1]) % 2 else 1


# ---------------------------------------------------------------------------
# closed-form actions
# ---------------------------------------------------------------------------


def _raw_generator_action(g: Generator, m: int, n: int, kind: Kind, p: int):
    """Uncanonicalized image terms (m, n, kind, int coefficient)."""
    s = -1 if n % 2 else 1
    if g is Generator.BPLUS:
        if kind is Kind.ALPHA:
            return ((m + 1, n, Kind.ALPHA, s), (m + 1, n, Kind.BETA, -2 * n * s))
        return ((m + 1, n, Kind.BETA, -s),)
    if g is Generator.BMINUS:
        if kind is Kind.ALPHA:
            if m % 2 == 0:
                return (
                    (m - 1, n, Kind.ALPHA, s * m),
                    (m - 1, n, Kind.BETA, -2 * s * n * m),
                )
            return (
                (m - 1, n, Kind.ALPHA, -s * (2 * n - m - (p - 1))),
                (m - 1, n, Kind.BETA, -2 * s * n * (m - 1)),
            )
        if m % 2 == 0:
            return (
                (m - 1, n, Kind.ALPHA, -s),
                (m - 1, n, Kind.BETA, s * (2 * n - m - p)),
            )
        return ((m - 1, n, Kind.ALPHA, -s), (m - 1, n, Kind.BETA, -s * (m - 1)))
    if g is Generator.FPLUS:
        if n <= p - 1:
            return ((m, n + 1, kind, 1),)
        return ()
    # FMINUS
    if kind is Kind.ALPHA:
        return ((m, n - 1, Kind.ALPHA, n * (p + 1 - n)),)
    return ((m, n - 1, Kind.ALPHA, 1), (m, n - 1, Kind.BETA, (n - 1) * (p - n)))


def _raw_derived_action(op: DerivedOp, m: int, n: int, kind: Kind, p: int):
    """Closed forms for Nb, Nf, Q± on a canonical basis vector."""
    if op is DerivedOp.NB:
        return ((m, n, kind, m),)
    if op is DerivedOp.NF:
        return ((m, n, kind, n),)
    s = -1 if n % 2 else 1
    if op is DerivedOp.QMINUS:
        if kind is Kind.ALPHA:
            return (
                (m + 1, n - 1, Kind.ALPHA, -s * n),
                (m + 1, n - 1, Kind.BETA, s * n * (n - 1)),
            )
        return ((m + 1, n - 1, Kind.ALPHA, -s), (m + 1, n - 1, Kind.BETA, s * (n - 1)))
    if op is DerivedOp.QPLUS:
        # The floor term vanishes on its own at m = 0 and m = 1, so one
        # formula covers every m; canonicalization disposes of the labels
        # that fall off the grid.
        sm = -1 if (n + m) % 2 else 1
        if kind is Kind.ALPHA:
            return (
                (m - 1, n + 1, Kind.ALPHA, (s - sm) // 2),
                (m - 1, n + 1, Kind.BETA, 2 * s * ((m - 2) // 2 + 1)),
            )
        return ((m - 1, n + 1, Kind.BETA, (-s - sm) // 2),)
    raise ValueError(f"no closed form registered for {op}")


def _canonical_terms(raw, p: int) -> tuple[tuple[BasisVector, Fraction], ...]:
    acc: dict[BasisVector, Fraction] = {}
    for m, n, kind, coeff in raw:
        if not coeff or m < 0 or n < 0 or n > p:
            continue
        if kind is Kind.BETA:
            if m == 0 or n == 0:
                continue
            if n == p:
                bv, q = BasisVector(m, p, Kind.ALPHA), Fraction(coeff, p)
            else:
                bv, q = BasisVector(m, n, Kind.BETA), Fraction(coeff)
        else:
            bv, q = BasisVector(m, n, Kind.ALPHA), Fraction(coeff)
        prev = acc.get(bv)
        acc[bv] = q if prev is None else prev + q
    return tuple((bv, q) for bv, q in acc.items() if q)


_ACTION_CACHE: dict[tuple, tuple] = {}


def _generator_action(g: Generator, bv: BasisVector, p: int):
    key = (p, g, bv)
    hit = _ACTION_CACHE.get(key)
    if hit is None:
        hit = _canonical_terms(_raw_generator_action(g, bv.m, bv.n, bv.kind, p), p)
        _ACTION_CACHE[key] = hit
    return hit


def apply_generator(g: Generator, v: BasisVector, params: FockParams) -> Vector:
    """Act with one generator on one canonical basis vector.

    b⁺ at the truncation edge raises TruncationOverflow; f⁺ at the top
    f-level returns the zero vector (that is algebra, not truncation).
    """
    if g is Generator.BPLUS and v.m >= params.m_max:
        raise TruncationOverflow(
            f"b+ on {v} leaves the truncated space (m_max={params.m_max})"
        )
    return Vector(dict(_generator_action(g, v, params.p)))


def apply_derived_closed_form(op: DerivedOp, v: BasisVector, params: FockParams) -> Vector:
    """Closed-form action of Nb, Nf, Q⁺ or Q⁻ on one canonical basis vector."""
    if op is DerivedOp.QMINUS and v.m >= params.m_max:
        raise TruncationOverflow(
            f"Q- on {v} leaves the truncated space (m_max={params.m_max})"
        )
    return Vector(dict(_canonical_terms(_raw_derived_action(op, v.m, v.n, v.kind, params.p), params.p)))


# ---------------------------------------------------------------------------
# the word algebra
# ---------------------------------------------------------------------------


class OperatorExpr:
    """Finite linear combination of words in the operator symbols.

    The empty word is the identity, so scalars embed.  Immutable by
    convention; arithmetic always builds fresh instances and drops zeros.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Word, GaussianRational] | None = None):
        clean = {}
        if terms:
            for word, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[tuple(word)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "OperatorExpr":
        return cls()

    @classmethod
    def identity(cls) -> "OperatorExpr":
        return cls({(): GaussianRational(1)})

    @classmethod
    def atom(cls, a: Atom) -> "OperatorExpr":
        return cls({(a,): GaussianRational(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            prev = acc.get(w)
            acc[w] = c if prev is None else prev + c
        return OperatorExpr(acc)

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            prev = acc.get(w)
            acc[w] = -c if prev is None else prev - c
        return OperatorExpr(acc)

    def __neg__(self) -> "OperatorExpr":
        return OperatorExpr({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            acc: dict[Word, GaussianRational] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    prev = acc.get(w)
                    acc[w] = c if prev is None else prev + c
            return OperatorExpr(acc)
        return self.scaled(other)

    def __rmul__(self, other):
        # scalars commute with everything, so left scaling is right scaling
        return self.scaled(other)

    def scaled(self, c) -> "OperatorExpr":
        c = GaussianRational.coerce(c)
        if not c:
            return OperatorExpr()
        return OperatorExpr({w: coeff * c for w, coeff in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def atoms(self) -> set:
        return {a for w in self.terms for a in w}

    def expand(self, params: FockParams) -> "OperatorExpr":
        """Rewrite every derived symbol into generator words.

        Uses the defining quadratics: Nb = ½{b⁺,b⁻} − p/2, Nf = ½[f⁺,f⁻] + p/2,
        R± = ½{b±,f±}, Q± = ½{b∓,f±}, (b±)² as literal squares, and
        Ns = (Nf² − (p+1)Nf + f⁺f⁻ + p/2)/p.
        """
        table = _expansion_table(params.p)
        acc = OperatorExpr()
        for word, coeff in self.terms.items():
            part = OperatorExpr({(): coeff})
            for a in word:
                part = part * table[a] if a in table else part * OperatorExpr.atom(a)
            acc = acc + part
        return acc

    def __repr__(self):
        return f"OperatorExpr({format_expr(self)})"


def _word_key(word: Word) -> tuple:
    return (len(word), tuple(a.value for a in word))


def format_expr(expr: OperatorExpr) -> str:
    if not expr.terms:
        return "0"
    parts = []
    for word in sorted(expr.terms, key=_word_key):
        c = expr.terms[word]
        w = " ".join(a.value for a in word) if word else "1"
        parts.append(f"({c})·{w}")
    return " + ".join(parts)


def commutator(x: OperatorExpr, y: OperatorExpr) -> OperatorExpr:
    return x * y - y * x


def anticommutator(x: OperatorExpr, y: OperatorExpr) -> OperatorExpr:
    return x * y + y * x


B_PLUS = OperatorExpr.atom(Generator.BPLUS)
B_MINUS = OperatorExpr.atom(Generator.BMINUS)
F_PLUS = OperatorExpr.atom(Generator.FPLUS)
F_MINUS = OperatorExpr.atom(Generator.FMINUS)
N_B = OperatorExpr.atom(DerivedOp.NB)
N_F = OperatorExpr.atom(DerivedOp.NF)
N_S = OperatorExpr.atom(DerivedOp.NS)
Q_PLUS = OperatorExpr.atom(DerivedOp.QPLUS)
Q_MINUS = OperatorExpr.atom(DerivedOp.QMINUS)
R_PLUS = OperatorExpr.atom(DerivedOp.RPLUS)
R_MINUS = OperatorExpr.atom(DerivedOp.RMINUS)
B_PLUS_SQ = OperatorExpr.atom(DerivedOp.BPLUS_SQ)
B_MINUS_SQ = OperatorExpr.atom(DerivedOp.BMINUS_SQ)

_EXPANSION_CACHE: dict[int, dict] = {}


def _expansion_table(p: int) -> dict:
    table = _EXPANSION_CACHE.get(p)
    if table is None:
        half = Fraction(1, 2)
        one = OperatorExpr.identity()
        nb = half * (B_PLUS * B_MINUS + B_MINUS * B_PLUS) - Fraction(p, 2) * one
        nf = half * (F_PLUS * F_MINUS - F_MINUS * F_PLUS) + Fraction(p, 2) * one
        ns = (
            nf * nf - (p + 1) * nf + F_PLUS * F_MINUS + Fraction(p, 2) * one
        ).scaled(Fraction(1, p))
        table = {
            DerivedOp.NB: nb,
            DerivedOp.NF: nf,
            DerivedOp.NS: ns,
            DerivedOp.QPLUS: half * (B_MINUS * F_PLUS + F_PLUS * B_MINUS),
            DerivedOp.QMINUS: half * (B_PLUS * F_MINUS + F_MINUS * B_PLUS),
            DerivedOp.RPLUS: half * (B_PLUS * F_PLUS + F_PLUS * B_PLUS),
            DerivedOp.RMINUS: half * (B_MINUS * F_MINUS + F_MINUS * B_MINUS),
            DerivedOp.BPLUS_SQ: B_PLUS * B_PLUS,
            DerivedOp.BMINUS_SQ: B_MINUS * B_MINUS,
        }
        _EXPANSION_CACHE[p] = table
    return table


def grade_of_expr(expr: OperatorExpr) -> tuple[int, int] | None:
    """Common Z₂×Z₂ degree of all words, or None if inhomogeneous.

    The zero expression is homogeneous of every degree; (0, 0) is returned.
    """
    grade = None
    for word in expr.terms:
        g0 = g1 = 0
        for a in word:
            a0, a1 = ATOM_GRADE[a]
            g0 += a0
            g1 += a1
        g = (g0 % 2, g1 % 2)
        if grade is None:
            grade = g
        elif grade != g:
            return None
    return grade if grade is not None else (0, 0)


# ---------------------------------------------------------------------------
# evaluation and compilation
# ---------------------------------------------------------------------------


def _apply_word(word: Word, terms: dict, p: int) -> dict:
    """Apply a generator word (rightmost letter first) to sparse terms."""
    cur = terms
    for atom in reversed(word):
        nxt: dict[BasisVector, GaussianRational] = {}
        for bv, c in cur.items():
            for bv2, q in _generator_action(atom, bv, p):
                add = c * q
                prev = nxt.get(bv2)
                nxt[bv2] = add if prev is None else prev + add
        cur = {bv: c for bv, c in nxt.items() if c}
        if not cur:
            break
    return cur


def apply_expr(expr: OperatorExpr, v: Vector, params: FockParams) -> Vector:
    """Exact action of an expression on a vector.

    Valid at every m: the closed-form letter actions never truncate, so this
    is the reference evaluator for relation checking.  Derived symbols are
    expanded through their defining quadratics first.
    """
    expanded = expr.expand(params)
    acc: dict[BasisVector, GaussianRational] = {}
    for word, coeff in expanded.terms.items():
        img = _apply_word(word, v.terms, params.p)
        for bv, c in img.items():
            add = c * coeff
            prev = acc.get(bv)
            acc[bv] = add if prev is None else prev + add
    return Vector(acc)


def word_m_raise(word: Word) -> int:
    """How many b⁺ letters a generator word contains."""
    return sum(1 for a in word if a is Generator.BPLUS)


def word_m_net(word: Word) -> int:
    """Net m shift of a generator word (b⁺ count minus b⁻ count)."""
    up = down = 0
    for a in word:
        if a is Generator.BPLUS:
            up += 1
        elif a is Generator.BMINUS:
            down += 1
    return up - down


def expr_margin(expr: OperatorExpr, params: FockParams) -> int:
    """Worst-case b⁺ count over the fully expanded words."""
    expanded = expr.expand(params)
    return max((word_m_raise(w) for w in expanded.terms), default=0)


@dataclass
class OperatorMatrix:
    """Columns of an expression over a truncated basis.

    Maps the basis at truncation m_max_in into the basis at m_max_out =
    m_max_in + max(raise_degree, 0); every column is exact (no intermediate
    term was dropped).
    """

    params: FockParams
    m_max_out: int
    raise_degree: int
    columns: dict = field(repr=False)

    def domain(self) -> list[BasisVector]:
        return enumerate_basis(self.params)

    def column(self, bv: BasisVector) -> Vector:
        return self.columns[bv]

    def entry(self, row: BasisVector, col: BasisVector) -> GaussianRational:
        return self.columns[col].coefficient(row)

    def apply(self, v: Vector) -> Vector:
        acc = Vector.zero()
        for bv, c in v.terms.items():
            acc = acc + self.columns[bv].scaled(c)
        return acc

    def support_pairs(self):
        """Deterministic (column, row) pairs with nonzero entries."""
        for col in sorted(self.columns):
            for row, _ in self.columns[col].items():
                yield col, row

    def equal_on(self, other: "OperatorMatrix", max_m: int) -> bool:
        """Column-wise equality restricted to domain vectors with m ≤ max_m."""
        for col in self.columns:
            if col.m <= max_m and self.columns[col] != other.columns[col]:
                return False
        return True

    def grade_shift(self) -> tuple[int, int] | None:
        """Common Z₂×Z₂ degree shift of all entries, None if mixed.

        The zero matrix reports (0, 0).
        """
        shift = None
        for col, row in self.support_pairs():
            gc, gr = grade_z2z2(col), grade_z2z2(row)
            s = ((gr[0] - gc[0]) % 2, (gr[1] - gc[1]) % 2)
            if shift is None:
                shift = s
            elif shift != s:
                return None
        return shift if shift is not None else (0, 0)


def compile_expr(expr: OperatorExpr, params: FockParams) -> OperatorMatrix:
    """Evaluate an expression column by column over the truncated basis.

    Derived symbols go through their defining quadratics (never through the
    closed forms, which stay an independent cross-check).  The codomain is
    enlarged by the expression's net raising degree so no column is clipped.
    """
    expanded = expr.expand(params)
    r = max((word_m_net(w) for w in expanded.terms), default=0)
    columns = {}
    for bv in enumerate_basis(params):
        acc: dict[BasisVector, GaussianRational] = {}
        for word, coeff in expanded.terms.items():
            img = _apply_word(word, {bv: GaussianRational(1)}, params.p)
            for out, c in img.items():
                add = c * coeff
                prev = acc.get(out)
                acc[out] = add if prev is None else prev + add
        columns[bv] = Vector(acc)
    return OperatorMatrix(
        params=params,
        m_max_out=params.m_max + max(r, 0),
        raise_degree=r,
        columns=columns,
    )
