"""Truncated carrier space for the mixed para-oscillator ladder algebra.

The algebra has four ladder generators: a paraboson pair b± and a parafermion
pair f±, tied together by trilinear relations and acting on a Fock-type space
built from a vacuum |0⟩ with b⁻|0⟩ = f⁻|0⟩ = 0 and b⁻b⁺|0⟩ = f⁻f⁺|0⟩ = p|0⟩.
The positive integer p is the order of the statistics.

The space decomposes into weight cells V_{m,n} (m ≥ 0 counts the b⁺ level,
0 ≤ n ≤ p the f⁺ level) spanned by at most two vectors:

    alpha(m, n) = (f⁺)ⁿ (b⁺)ᵐ |0⟩
    beta(m, n)  = (f⁺)^(n-1) (b⁺)^(m-1) · ½{b⁺, f⁺} |0⟩

Cells on the boundary collapse: beta vanishes for m = 0 or n = 0, and for
n = p it is proportional to alpha, beta(m, p) = (1/p)·alpha(m, p).  So
dim V_{m,n} is 1 on the boundary (m = 0, n = 0 or n = p), 2 in the interior,
and the canonical basis keeps beta only for m ≥ 1 and 1 ≤ n ≤ p-1.

For computation the infinite tower of m levels is truncated at m_max; n is
finitely bounded by p already.  Everything downstream (operator matrices,
relation checks, decompositions) is relative to such a truncation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import ConfigError
from .scalars import GaussianRational


class Kind(enum.IntEnum):
    """Which of the two cell vectors; ALPHA sorts before BETA."""

    ALPHA = 0
    BETA = 1

    def label(self) -> str:
        return "alpha" if self is Kind.ALPHA else "beta"

    @classmethod
    def from_label(cls, text: str) -> "Kind":
        try:
            return {"alpha": cls.ALPHA, "beta": cls.BETA}[text]
        except KeyError:
            raise ConfigError(f"unknown basis kind {text!r}") from None


class BasisVector(NamedTuple):
    """A canonical basis vector: cell coordinates plus the kind tag."""

    m: int
    n: int
    kind: Kind

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "kind": self.kind.label()}

    @classmethod
    def from_json(cls, obj: dict) -> "BasisVector":
        return cls(int(obj["m"]), int(obj["n"]), Kind.from_label(obj["kind"]))

    def __str__(self):
        return f"{self.kind.label()}({self.m},{self.n})"


@dataclass(frozen=True)
class FockParams:
    """Order p ≥ 1 and truncation level m_max ≥ 0."""

    p: int
    m_max: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ConfigError(f"order p must be a positive integer, got {self.p!r}")
        if not isinstance(self.m_max, int) or self.m_max < 0:
            raise ConfigError(f"truncation m_max must be >= 0, got {self.m_max!r}")

    def with_m_max(self, m_max: int) -> "FockParams":
        return FockParams(self.p, m_max)


def subspace_dimension(params: FockParams, m: int, n: int) -> int:
    """dim V_{m,n} in the untruncated space: 0, 1 or 2."""
    if m < 0 or n < 0 or n > params.p:
        return 0
    if m == 0 or n == 0 or n == params.p:
        return 1
    return 2


def enumerate_basis(params: FockParams) -> list[BasisVector]:
    """All canonical basis vectors with m ≤ m_max, ordered by (m, n, kind)."""
    out = []
    for m in range(params.m_max + 1):
        for n in range(params.p + 1):
            out.append(BasisVector(m, n, Kind.ALPHA))
            if m >= 1 and 1 <= n <= params.p - 1:
                out.append(BasisVector(m, n, Kind.BETA))
    return out


def grade_z2z2(v: BasisVector) -> tuple[int, int]:
    """Z₂×Z₂ grade of a basis vector: (m mod 2, n mod 2), kind-independent."""
    return (v.m % 2, v.n % 2)


class Z2Scheme(enum.Enum):
    """The four ways to collapse the Z₂×Z₂ grading to a single Z₂.

    Rows grade by the b-level m, columns by the f-level n; "even first"
    assigns grade 0 to even levels, "odd first" swaps the two classes.
    """

    ROWS_EVEN_FIRST = "rows-even-first"
    ROWS_ODD_FIRST = "rows-odd-first"
    COLS_EVEN_FIRST = "cols-even-first"
    COLS_ODD_FIRST = "cols-odd-first"


def grade_z2(v: BasisVector, scheme: Z2Scheme) -> int:
    if scheme is Z2Scheme.ROWS_EVEN_FIRST:
        return v.m % 2
    if scheme is Z2Scheme.ROWS_ODD_FIRST:
        return (v.m + 1) % 2
    if scheme is Z2Scheme.COLS_EVEN_FIRST:
        return v.n % 2
    return (v.n + 1) % 2


class Vector:
    """A finite linear combination of canonical basis vectors, exact scalars.

    Immutable-by-convention sparse container; zero coefficients are never
    stored.  Supports +, -, scalar scaling and exact equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[BasisVector, GaussianRational] | None = None):
        clean = {}
        if terms:
            for bv, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[bv] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "Vector":
        return cls()

    @classmethod
    def basis(cls, bv: BasisVector) -> "Vector":
        return cls({bv: GaussianRational(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[tuple[BasisVector, GaussianRational]]:
        """Deterministic iteration in basis order."""
        return iter(sorted(self.terms.items()))

    def coefficient(self, bv: BasisVector) -> GaussianRational:
        return self.terms.get(bv, GaussianRational(0))

    def support(self) -> set[BasisVector]:
        return set(self.terms)

    def max_m(self) -> int:
        """Largest b-level present; -1 for the zero vector."""
        return max((bv.m for bv in self.terms), default=-1)

    def __add__(self, other: "Vector") -> "Vector":
        acc = dict(self.terms)
        for bv, c in other.terms.items():
            s = acc.get(bv)
            acc[bv] = c if s is None else s + c
        return Vector(acc)

    def __sub__(self, other: "Vector") -> "Vector":
        acc = dict(self.terms)
        for bv, c in other.terms.items():
            s = acc.get(bv)
            acc[bv] = -c if s is None else s - c
        return Vector(acc)

    def __neg__(self) -> "Vector":
        return Vector({bv: -c for bv, c in self.terms.items()})

    def scaled(self, c) -> "Vector":
        c = GaussianRational.coerce(c)
        if not c:
            return Vector()
        return Vector({bv: coeff * c for bv, coeff in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "Vector(0)"
        parts = [f"{c}·{bv}" for bv, c in self.items()]
        return "Vector(" + " + ".join(parts) + ")"

    def to_json(self) -> list[dict]:
        out = []
        for bv, c in self.items():
            re_s, im_s = c.as_strings()
            out.append({"basis": bv.to_json(), "re": re_s, "im": im_s})
        return out


def canonicalize(m: int, n: int, kind: Kind, params: FockParams) -> Vector:
    """Rewrite a raw (m, n, kind) label as a canonical Vector.

    Labels outside the carrier space (m < 0, n < 0, n > p) and the vanishing
    beta labels (m = 0 or n = 0) map to zero; beta at the top f-level folds
    into alpha via beta(m, p) = (1/p)·alpha(m, p).  Inputs with n up to p+1
    are routine: raising formulas emit them and rely on this cutoff.
    """
    p = params.p
    if m < 0 or n < 0 or n > p:
        return Vector.zero()
    if kind is Kind.ALPHA:
        return Vector.basis(BasisVector(m, n, Kind.ALPHA))
    if m == 0 or n == 0:
        return Vector.zero()
    if n == p:
        return Vector({BasisVector(m, p, Kind.ALPHA): GaussianRational(Fraction(1, p))})
    return Vector.basis(BasisVector(m, n, Kind.BETA))
