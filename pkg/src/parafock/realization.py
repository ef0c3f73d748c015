"""Lie superalgebras with a 2×2 graded matrix model, carried onto the ladder space.

A finite-dimensional Lie superalgebra is described here by a homogeneous
basis, graded structure constants, and a representation by 2×2 supermatrices
(even elements diagonal, odd elements antidiagonal).  Any such description is
transported to exact operators on the truncated carrier space by the single
rule

    even, matrix diag(A, D)      ↦  A·Nb + D·Nf + (A−D)·(p/2)·1
    odd,  antidiag entries B, C  ↦  B·Q⁻ + C·Q⁺

which sends the supermatrix bracket to the operator bracket on the nose; the
bracket-preservation checker verifies that on the truncated space pair by
pair.  The even image acts diagonally with eigenvalue (m + p/2)A + (n − p/2)D,
which ``act`` uses directly as the closed-form route, independent of the
compiled-word route.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import SpecInvalid, TruncationTooSmall, UnknownElement
from .fock import FockParams, Vector
from .operators import (
    DerivedOp,
    N_B,
    N_F,
    OperatorExpr,
    Q_MINUS,
    Q_PLUS,
    anticommutator,
    apply_derived_closed_form,
    commutator,
    compile_expr,
    expr_margin,
)
from .scalars import GaussianRational


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def from_label(cls, text):
        try:
            return {"even": cls.EVEN, "odd": cls.ODD}[text]
        except (KeyError, TypeError):
            raise SpecInvalid(f"parity must be 'even' or 'odd', got {text!r}") from None


def _coeff_from_json(obj) -> GaussianRational:
    if isinstance(obj, dict):
        return GaussianRational.parse(str(obj.get("re", "0")), str(obj.get("im", "0")))
    if isinstance(obj, (str, int)):
        return GaussianRational.parse(str(obj))
    raise SpecInvalid(f"cannot parse coefficient {obj!r}")


def _coeff_to_json(c: GaussianRational) -> dict:
    re_s, im_s = c.as_strings()
    return {"re": re_s, "im": im_s}


@dataclass(frozen=True)
class SuperMatrix2:
    """2×2 supermatrix; evens are diagonal, odds antidiagonal."""

    parity: Parity
    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational

    def __post_init__(self):
        if self.parity is Parity.EVEN and (self.b or self.c):
            raise SpecInvalid("even supermatrix must have zero antidiagonal")
        if self.parity is Parity.ODD and (self.a or self.d):
            raise SpecInvalid("odd supermatrix must have zero diagonal")

    @classmethod
    def even(cls, a, d) -> "SuperMatrix2":
        zero = GaussianRational(0)
        return cls(Parity.EVEN, GaussianRational.coerce(a), zero, zero, GaussianRational.coerce(d))

    @classmethod
    def odd(cls, b, c) -> "SuperMatrix2":
        zero = GaussianRational(0)
        return cls(Parity.ODD, zero, GaussianRational.coerce(b), GaussianRational.coerce(c), zero)

    def entries(self):
        return ((self.a, self.b), (self.c, self.d))


def _mat_mul(x, y):
    return tuple(
        tuple(sum((x[i][k] * y[k][j] for k in (0, 1)), GaussianRational(0)) for j in (0, 1))
        for i in (0, 1)
    )


def _mat_combine(x, y, sign: int):
    return tuple(
        tuple(x[i][j] + y[i][j] * sign for j in (0, 1)) for i in (0, 1)
    )


@dataclass
class SuperAlgebraSpec:
    """Basis, graded structure constants, and the 2×2 matrix model.

    ``brackets`` stores each supplied ordered pair as given; the reverse
    orientation, when absent, is implied by graded antisymmetry, and pairs
    absent in both orientations have zero bracket.
    """

    name: str
    basis: list[str]
    parity: dict[str, Parity]
    brackets: dict[tuple[str, str], dict[str, GaussianRational]]
    rep2: dict[str, SuperMatrix2]

    def parity_of(self, x: str) -> Parity:
        try:
            return self.parity[x]
        except KeyError:
            raise UnknownElement(f"{x!r} is not a basis element of {self.name}") from None

    def bracket(self, x: str, y: str) -> dict[str, GaussianRational]:
        """⟦x, y⟧ as a sparse combination of basis names."""
        self.parity_of(x), self.parity_of(y)
        if (x, y) in self.brackets:
            return dict(self.brackets[(x, y)])
        if (y, x) in self.brackets:
            both_odd = self.parity[x] is Parity.ODD and self.parity[y] is Parity.ODD
            sign = 1 if both_odd else -1
            return {z: c * sign for z, c in self.brackets[(y, x)].items()}
        return {}

    # -- JSON --------------------------------------------------------------

    @classmethod
    def from_json(cls, obj: dict, name: str = "custom") -> "SuperAlgebraSpec":
        try:
            basis_items = list(obj["basis"])
        except (KeyError, TypeError):
            raise SpecInvalid("spec JSON needs a 'basis' array") from None
        basis, parity = [], {}
        for item in basis_items:
            elem = item.get("name")
            if not isinstance(elem, str) or not elem:
                raise SpecInvalid(f"bad basis entry {item!r}")
            if elem in parity:
                raise SpecInvalid(f"duplicate basis element {elem!r}")
            basis.append(elem)
            parity[elem] = Parity.from_label(item.get("parity"))
        brackets = {}
        for entry in obj.get("brackets", []):
            x, y = entry.get("x"), entry.get("y")
            if x not in parity or y not in parity:
                raise SpecInvalid(f"bracket references unknown element in {entry!r}")
            if (x, y) in brackets:
                raise SpecInvalid(f"duplicate bracket entry for ({x}, {y})")
            terms = {}
            for term in entry.get("terms", []):
                z = term.get("elem")
                if z not in parity:
                    raise SpecInvalid(f"bracket term references unknown element {z!r}")
                c = _coeff_from_json(term.get("coeff", "0"))
                if c:
                    terms[z] = terms.get(z, GaussianRational(0)) + c
            brackets[(x, y)] = {z: c for z, c in terms.items() if c}
        rep2 = {}
        for elem, mat in obj.get("rep2", {}).items():
            if elem not in parity:
                raise SpecInvalid(f"rep2 entry for unknown element {elem!r}")
            a = _coeff_from_json(mat.get("A", "0"))
            b = _coeff_from_json(mat.get("B", "0"))
            c = _coeff_from_json(mat.get("C", "0"))
            d = _coeff_from_json(mat.get("D", "0"))
            try:
                rep2[elem] = SuperMatrix2(parity[elem], a, b, c, d)
            except SpecInvalid as exc:
                raise SpecInvalid(f"rep2[{elem}]: {exc}") from None
        spec = cls(name=name, basis=basis, parity=parity, brackets=brackets, rep2=rep2)
        validate_spec(spec)
        return spec

    @classmethod
    def from_json_file(cls, path, name: str | None = None) -> "SuperAlgebraSpec":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise SpecInvalid(f"spec file is not valid JSON: {exc}") from None
        return cls.from_json(obj, name=name or str(path))

    def to_json(self) -> dict:
        return {
            "basis": [
                {"name": x, "parity": self.parity[x].value} for x in self.basis
            ],
            "brackets": [
                {
                    "x": x,
                    "y": y,
                    "terms": [
                        {"elem": z, "coeff": _coeff_to_json(c)}
                        for z, c in sorted(terms.items())
                    ],
                }
                for (x, y), terms in sorted(self.brackets.items())
            ],
            "rep2": {
                x: {
                    "A": _coeff_to_json(sm.a),
                    "B": _coeff_to_json(sm.b),
                    "C": _coeff_to_json(sm.c),
                    "D": _coeff_to_json(sm.d),
                }
                for x, sm in sorted(self.rep2.items())
            },
        }


@dataclass
class ValidationReport:
    elements: int
    bracket_pairs: int
    jacobi_triples: int
    rep_checks: int


def _sign(a: Parity, b: Parity) -> int:
    return -1 if (a is Parity.ODD and b is Parity.ODD) else 1


def _combo_bracket(spec, x: str, combo: dict) -> dict:
    """⟦x, Σ c_z z⟧ by bilinearity."""
    acc: dict[str, GaussianRational] = {}
    for z, c in combo.items():
        for w, d in spec.bracket(x, z).items():
            prev = acc.get(w)
            add = d * c
            acc[w] = add if prev is None else prev + add
    return {w: c for w, c in acc.items() if c}


def validate_spec(spec: SuperAlgebraSpec) -> ValidationReport:
    """Structural checks; raises SpecInvalid naming the first failure.

    Checks: homogeneous named basis with a complete 2×2 model, bracket
    closure with the right parity, graded antisymmetry (including vanishing
    even self-brackets), graded Jacobi over all basis triples, and that the
    2×2 model satisfies every structure equation.
    """
    if not spec.basis:
        raise SpecInvalid("empty basis")
    for x in spec.basis:
        if x not in spec.rep2:
            raise SpecInvalid(f"rep2 is missing element {x!r}")
        if spec.rep2[x].parity is not spec.parity[x]:
            raise SpecInvalid(f"rep2[{x}] parity disagrees with the basis parity")

    # closure parity and antisymmetry
    for (x, y), terms in spec.brackets.items():
        want = (
            Parity.ODD
            if (spec.parity[x] is Parity.ODD) != (spec.parity[y] is Parity.ODD)
            else Parity.EVEN
        )
        for z in terms:
            if spec.parity[z] is not want:
                raise SpecInvalid(
                    f"bracket ({x},{y}) term {z} has parity {spec.parity[z].value},"
                    f" expected {want.value}"
                )
    pairs = 0
    for x in spec.basis:
        for y in spec.basis:
            pairs += 1
            fwd = spec.bracket(x, y)
            bwd = spec.bracket(y, x)
            sign = _sign(spec.parity[x], spec.parity[y])
            mirrored = {z: c * (-sign) for z, c in bwd.items()}
            if fwd != {z: c for z, c in mirrored.items() if c}:
                raise SpecInvalid(f"graded antisymmetry fails for ({x}, {y})")

    # graded Jacobi
    triples = 0
    for x in spec.basis:
        for y in spec.basis:
            for z in spec.basis:
                triples += 1
                acc: dict[str, GaussianRational] = {}
                for head, tail1, tail2, s in (
                    (x, y, z, _sign(spec.parity[x], spec.parity[z])),
                    (y, z, x, _sign(spec.parity[y], spec.parity[x])),
                    (z, x, y, _sign(spec.parity[z], spec.parity[y])),
                ):
                    inner = spec.bracket(tail1, tail2)
                    for w, c in _combo_bracket(spec, head, inner).items():
                        prev = acc.get(w)
                        add = c * s
                        acc[w] = add if prev is None else prev + add
                if any(c for c in acc.values()):
                    raise SpecInvalid(f"graded Jacobi fails at ({x}, {y}, {z})")

    # the 2×2 model must satisfy the structure equations
    rep_checks = 0
    zero = GaussianRational(0)
    for x in spec.basis:
        for y in spec.basis:
            rep_checks += 1
            mx, my = spec.rep2[x].entries(), spec.rep2[y].entries()
            both_odd = spec.parity[x] is Parity.ODD and spec.parity[y] is Parity.ODD
            got = _mat_combine(_mat_mul(mx, my), _mat_mul(my, mx), 1 if both_odd else -1)
            want = ((zero, zero), (zero, zero))
            for z, c in spec.bracket(x, y).items():
                mz = spec.rep2[z].entries()
                want = tuple(
                    tuple(want[i][j] + mz[i][j] * c for j in (0, 1)) for i in (0, 1)
                )
            if got != want:
                raise SpecInvalid(
                    f"2x2 model violates the bracket of ({x}, {y})"
                )
    return ValidationReport(
        elements=len(spec.basis),
        bracket_pairs=pairs,
        jacobi_triples=triples,
        rep_checks=rep_checks,
    )


# ---------------------------------------------------------------------------
# transport onto the carrier space
# ---------------------------------------------------------------------------


@dataclass
class RealizedElement:
    name: str
    parity: Parity
    expr: OperatorExpr


def realize(spec: SuperAlgebraSpec, name: str, params: FockParams) -> RealizedElement:
    """The operator expression an element maps to at order p."""
    parity = spec.parity_of(name)
    sm = spec.rep2.get(name)
    if sm is None:
        raise UnknownElement(f"{name!r} has no 2x2 matrix in {spec.name}")
    if parity is Parity.EVEN:
        expr = (
            N_B.scaled(sm.a)
            + N_F.scaled(sm.d)
            + OperatorExpr.identity().scaled((sm.a - sm.d) * Fraction(params.p, 2))
        )
    else:
        expr = Q_MINUS.scaled(sm.b) + Q_PLUS.scaled(sm.c)
    return RealizedElement(name=name, parity=parity, expr=expr)


def act(spec: SuperAlgebraSpec, name: str, v: Vector, params: FockParams) -> Vector:
    """Closed-form action of a realized element on a vector.

    Even elements act diagonally with eigenvalue (m + p/2)A + (n − p/2)D;
    odd elements act through the Q± closed forms.  This route never builds
    expression words, so it cross-checks the compiled realizations.
    """
    parity = spec.parity_of(name)
    sm = spec.rep2.get(name)
    if sm is None:
        raise UnknownElement(f"{name!r} has no 2x2 matrix in {spec.name}")
    half_p = Fraction(params.p, 2)
    out = Vector.zero()
    if parity is Parity.EVEN:
        acc = {}
        for bv, c in v.terms.items():
            eig = sm.a * (bv.m + half_p) + sm.d * (bv.n - half_p)
            acc[bv] = c * eig
        return Vector(acc)
    for bv, c in v.terms.items():
        if sm.b:
            out = out + apply_derived_closed_form(DerivedOp.QMINUS, bv, params).scaled(
                sm.b * c
            )
        if sm.c:
            out = out + apply_derived_closed_form(DerivedOp.QPLUS, bv, params).scaled(
                sm.c * c
            )
    return out


@dataclass
class BracketCheck:
    x: str
    y: str
    passed: bool


@dataclass
class BracketPreservationReport:
    spec_name: str
    p: int
    m_max: int
    pairs: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.pairs)

    def to_json(self) -> dict:
        return {
            "spec": self.spec_name,
            "p": self.p,
            "m_max": self.m_max,
            "pass": self.passed,
            "pairs": [
                {"x": c.x, "y": c.y, "pass": c.passed} for c in self.pairs
            ],
        }


def check_bracket_preservation(
    spec: SuperAlgebraSpec, params: FockParams
) -> BracketPreservationReport:
    """Compare ⟦J(x), J(y)⟧ with J(⟦x, y⟧) as compiled matrices.

    Verified on the interior basis (m ≤ m_max − margin) for every unordered
    basis pair; the bracket is the anticommutator when both elements are odd
    and the commutator otherwise.
    """
    if params.m_max < 4:
        raise TruncationTooSmall(
            f"bracket preservation needs m_max >= 4, got {params.m_max}"
        )
    realized = {x: realize(spec, x, params).expr for x in spec.basis}
    report = BracketPreservationReport(spec.name, params.p, params.m_max)
    for i, x in enumerate(spec.basis):
        for y in spec.basis[i:]:
            both_odd = (
                spec.parity[x] is Parity.ODD and spec.parity[y] is Parity.ODD
            )
            combine = anticommutator if both_odd else commutator
            lhs = combine(realized[x], realized[y])
            rhs = OperatorExpr.zero()
            for z, c in spec.bracket(x, y).items():
                rhs = rhs + realized[z].scaled(c)
            margin = max(expr_margin(lhs, params), expr_margin(rhs, params))
            interior = params.m_max - margin
            ok = compile_expr(lhs, params).equal_on(
                compile_expr(rhs, params), interior
            )
            report.pairs.append(BracketCheck(x=x, y=y, passed=ok))
    return report


# ---------------------------------------------------------------------------
# built-in descriptions
# ---------------------------------------------------------------------------


def gl11_spec() -> SuperAlgebraSpec:
    """gl(1/1) with its defining 2×2 representation.

    Basis E11, E22 (even, the diagonal units) and E12, E21 (odd, the
    antidiagonal units); the nonzero brackets are [Eii, Ejk] = ±Ejk and
    {E12, E21} = E11 + E22.
    """
    one = GaussianRational(1)
    obj = {
        "basis": [
            {"name": "E11", "parity": "even"},
            {"name": "E22", "parity": "even"},
            {"name": "E12", "parity": "odd"},
            {"name": "E21", "parity": "odd"},
        ],
        "brackets": [
            {"x": "E11", "y": "E12", "terms": [{"elem": "E12", "coeff": "1"}]},
            {"x": "E11", "y": "E21", "terms": [{"elem": "E21", "coeff": "-1"}]},
            {"x": "E22", "y": "E12", "terms": [{"elem": "E12", "coeff": "-1"}]},
            {"x": "E22", "y": "E21", "terms": [{"elem": "E21", "coeff": "1"}]},
            {
                "x": "E12",
                "y": "E21",
                "terms": [
                    {"elem": "E11", "coeff": "1"},
                    {"elem": "E22", "coeff": "1"},
                ],
            },
        ],
        "rep2": {
            "E11": {"A": "1"},
            "E22": {"D": "1"},
            "E12": {"B": "1"},
            "E21": {"C": "1"},
        },
    }
    return SuperAlgebraSpec.from_json(obj, name="gl11")


def builtin_spec(name: str) -> SuperAlgebraSpec:
    try:
        return {"gl11": gl11_spec}[name]()
    except KeyError:
        raise UnknownElement(f"no built-in superalgebra named {name!r}") from None
