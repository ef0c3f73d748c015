"""The defining relation catalog and its mechanical verification.

The algebra is fixed by trilinear relations among b±, f±.  The catalog built
here contains, for a given order p:

* ``mixed.01`` .. ``mixed.24``: the mixed trilinear relations coupling the
  paraboson to the parafermion pair;
* ``pure.01`` .. ``pure.08``: the single-pair trilinear relations;
* ``rewritten.01`` .. ``rewritten.08``: the mixed relations reorganized around
  the diagonal shift operators Q± = ½{b∓, f±};
* ``lsbracket.<family>.<signs>``: the closed bilinear-bracket table of the
  quadratics, six families instantiated at one mode for all 16 sign
  patterns ξηεφ (written as ``p``/``m`` characters);
* ``gl11.01`` .. ``gl11.10``: the quadratic bracket table that exhibits
  {b⁺b⁻-type, f⁺f⁻-type, mixed} quadratics as a gl(1/1) copy;
* ``nilpotency.qplus/qminus/rplus``: squares of the odd shift operators
  vanish;
* ``fock.*``: the vacuum conditions b⁻|0⟩ = f⁻|0⟩ = 0, b⁻b⁺|0⟩ = f⁻f⁺|0⟩ =
  p|0⟩, b⁻f⁺|0⟩ = f⁻b⁺|0⟩ = 0 (checked on the vacuum only).

Verification is exact: both sides are expanded into generator words and
applied to basis vectors through the closed-form actions, which hold at every
m.  The truncation only selects which vectors get checked; each identity is
checked on the interior m ≤ m_max − margin, where the margin is the worst b⁺
count over the expanded words, so the claim never leans on clipped terms.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigError, TruncationTooSmall
from .fock import BasisVector, FockParams, Kind, Vector, enumerate_basis
from .operators import (
    B_MINUS,
    B_PLUS,
    F_MINUS,
    F_PLUS,
    Generator,
    OperatorExpr,
    Q_MINUS,
    Q_PLUS,
    R_PLUS,
    _apply_word,
    anticommutator as anti,
    commutator as comm,
    compile_expr,
    expr_margin,
)
from .scalars import GaussianRational


@dataclass(frozen=True)
class Relation:
    """One named identity lhs = rhs; vacuum_only restricts the check to |0⟩."""

    name: str
    lhs: OperatorExpr
    rhs: OperatorExpr
    vacuum_only: bool = False


def _b(sign: int) -> OperatorExpr:
    return B_PLUS if sign > 0 else B_MINUS


def _f(sign: int) -> OperatorExpr:
    return F_PLUS if sign > 0 else F_MINUS


def _sign_tag(signs) -> str:
    return "".join("p" if s > 0 else "m" for s in signs)


_ZERO = OperatorExpr.zero()


def _mixed_relations() -> list[Relation]:
    bp, bm, fp, fm = B_PLUS, B_MINUS, F_PLUS, F_MINUS
    table = [
        (comm(anti(bp, bp), fm), _ZERO),
        (comm(comm(fp, fm), bm), _ZERO),
        (comm(anti(bm, bm), fm), _ZERO),
        (comm(anti(bp, bm), fm), _ZERO),
        (comm(anti(fm, bp), bm), -2 * fm),
        (anti(anti(bm, fp), fm), 2 * bm),
        (comm(anti(bm, fm), bp), 2 * fm),
        (anti(anti(fm, bm), fp), 2 * bm),
        (comm(anti(bm, bp), fp), _ZERO),
        (comm(comm(fm, fp), bp), _ZERO),
        (comm(anti(fp, bm), bp), 2 * fp),
        (anti(anti(bp, fm), fp), 2 * bp),
        (comm(anti(bp, fp), bm), -2 * fp),
        (anti(anti(fp, bp), fm), 2 * bp),
        (comm(anti(fm, bm), bm), _ZERO),
        (comm(anti(fm, bp), bp), _ZERO),
        (comm(anti(bp, bp), fp), _ZERO),
        (comm(anti(bm, bm), fp), _ZERO),
        (comm(anti(fp, bp), bp), _ZERO),
        (comm(anti(fp, bm), bm), _ZERO),
        (anti(anti(bm, fm), fm), _ZERO),
        (anti(anti(bm, fp), fp), _ZERO),
        (anti(anti(bp, fp), fp), _ZERO),
        (anti(anti(bp, fm), fm), _ZERO),
    ]
    return [
        Relation(f"mixed.{i:02d}", lhs, rhs)
        for i, (lhs, rhs) in enumerate(table, start=1)
    ]


def _pure_relations() -> list[Relation]:
    bp, bm, fp, fm = B_PLUS, B_MINUS, F_PLUS, F_MINUS
    table = [
        (comm(bm, anti(bp, bm)), 2 * bm),
        (comm(bp, anti(bp, bp)), _ZERO),
        (comm(bm, anti(bm, bm)), _ZERO),
        (comm(bm, anti(bp, bp)), 4 * bp),
        (comm(bp, anti(bm, bm)), -4 * bm),
        (comm(fm, comm(fp, fm)), 2 * fm),
        (comm(bp, anti(bm, bp)), -2 * bp),
        (comm(fp, comm(fm, fp)), 2 * fp),
    ]
    return [
        Relation(f"pure.{i:02d}", lhs, rhs)
        for i, (lhs, rhs) in enumerate(table, start=1)
    ]


def _rewritten_relations() -> list[Relation]:
    bp, bm, fp, fm = B_PLUS, B_MINUS, F_PLUS, F_MINUS
    table = [
        (comm(bm, Q_MINUS), fm),
        (comm(bm, Q_PLUS), _ZERO),
        (anti(fm, Q_PLUS), bm),
        (anti(fm, Q_MINUS), _ZERO),
        (comm(bp, Q_PLUS), -fp),
        (comm(bp, Q_MINUS), _ZERO),
        (anti(fp, Q_MINUS), bp),
        (anti(fp, Q_PLUS), _ZERO),
    ]
    return [
        Relation(f"rewritten.{i:02d}", lhs, rhs)
        for i, (lhs, rhs) in enumerate(table, start=1)
    ]


def _lsbracket_relations() -> list[Relation]:
    """Bilinear brackets of the quadratics at a single mode.

    Sign differences such as (ε−η) below are numeric (−2, 0, or 2): the
    structure constants of the quadratic span.
    """
    half = Fraction(1, 2)
    out = []

    def family(tag, build):
        for signs in itertools.product((1, -1), repeat=4):
            lhs, rhs = build(*signs)
            out.append(Relation(f"lsbracket.{tag}.{_sign_tag(signs)}", lhs, rhs))

    def bb_bb(x, h, e, f):
        lhs = comm(anti(_b(x), _b(h)), anti(_b(e), _b(f)))
        rhs = (
            (e - h) * anti(_b(x), _b(f))
            + (e - x) * anti(_b(h), _b(f))
            + (f - h) * anti(_b(x), _b(e))
            + (f - x) * anti(_b(h), _b(e))
        )
        return lhs, rhs

    def bb_ff(x, h, e, f):
        return comm(anti(_b(x), _b(h)), comm(_f(e), _f(f))), _ZERO

    def bb_fb(x, h, e, f):
        lhs = comm(anti(_b(x), _b(h)), anti(_f(e), _b(f)))
        rhs = (f - h) * anti(_f(e), _b(x)) + (f - x) * anti(_f(e), _b(h))
        return lhs, rhs

    def ff_ff(x, h, e, f):
        lhs = comm(comm(_f(x), _f(h)), comm(_f(e), _f(f)))
        rhs = (
            (half * (f - h) ** 2) * comm(_f(e), _f(x))
            + (half * (f - x) ** 2) * comm(_f(h), _f(e))
            + (half * (e - h) ** 2) * comm(_f(x), _f(f))
            + (half * (e - x) ** 2) * comm(_f(f), _f(h))
        )
        return lhs, rhs

    def ff_fb(x, h, e, f):
        lhs = comm(comm(_f(x), _f(h)), anti(_f(e), _b(f)))
        rhs = (half * (e - h) ** 2) * anti(_f(x), _b(f)) - (
            half * (e - x) ** 2
        ) * anti(_f(h), _b(f))
        return lhs, rhs

    def fb_fb(x, h, e, f):
        lhs = anti(anti(_f(x), _b(h)), anti(_f(e), _b(f)))
        rhs = (f - h) * comm(_f(x), _f(e)) + (half * (e - x) ** 2) * anti(
            _b(h), _b(f)
        )
        return lhs, rhs

    family("bb-bb", bb_bb)
    family("bb-ff", bb_ff)
    family("bb-fb", bb_fb)
    family("ff-ff", ff_ff)
    family("ff-fb", ff_fb)
    family("fb-fb", fb_fb)
    return out


def _gl11_relations() -> list[Relation]:
    bp, bm, fp, fm = B_PLUS, B_MINUS, F_PLUS, F_MINUS
    h_b = anti(bp, bm)   # b-number block, 2Nb + p
    h_f = comm(fp, fm)   # f-number block, 2Nf − p
    e_up = anti(fp, bm)  # 2Q⁺
    e_dn = anti(fm, bp)  # 2Q⁻
    table = [
        (comm(h_b, h_b), _ZERO),
        (comm(h_b, h_f), _ZERO),
        (comm(h_f, h_f), _ZERO),
        (anti(e_up, e_up), _ZERO),
        (anti(e_dn, e_dn), _ZERO),
        (anti(e_up, e_dn), 2 * h_f + 2 * h_b),
        (comm(h_b, e_up), -2 * e_up),
        (comm(h_b, e_dn), 2 * e_dn),
        (comm(h_f, e_up), 2 * e_up),
        (comm(h_f, e_dn), -2 * e_dn),
    ]
    return [
        Relation(f"gl11.{i:02d}", lhs, rhs)
        for i, (lhs, rhs) in enumerate(table, start=1)
    ]


def _nilpotency_relations() -> list[Relation]:
    return [
        Relation("nilpotency.qplus", Q_PLUS * Q_PLUS, _ZERO),
        Relation("nilpotency.qminus", Q_MINUS * Q_MINUS, _ZERO),
        Relation("nilpotency.rplus", R_PLUS * R_PLUS, _ZERO),
    ]


def _fock_relations(p: int) -> list[Relation]:
    scale_p = OperatorExpr.identity().scaled(p)
    return [
        Relation("fock.b-minus-vacuum", B_MINUS, _ZERO, vacuum_only=True),
        Relation("fock.f-minus-vacuum", F_MINUS, _ZERO, vacuum_only=True),
        Relation("fock.b-minus-b-plus", B_MINUS * B_PLUS, scale_p, vacuum_only=True),
        Relation("fock.f-minus-f-plus", F_MINUS * F_PLUS, scale_p, vacuum_only=True),
        Relation("fock.b-minus-f-plus", B_MINUS * F_PLUS, _ZERO, vacuum_only=True),
        Relation("fock.f-minus-b-plus", F_MINUS * B_PLUS, _ZERO, vacuum_only=True),
    ]


_CATALOG_CACHE: dict[int, dict[str, Relation]] = {}


def catalog(p: int) -> dict[str, Relation]:
    """All named relations for order p, in stable catalog order."""
    if p < 1:
        raise ConfigError(f"order p must be >= 1, got {p}")
    got = _CATALOG_CACHE.get(p)
    if got is None:
        rels = (
            _mixed_relations()
            + _pure_relations()
            + _rewritten_relations()
            + _lsbracket_relations()
            + _gl11_relations()
            + _nilpotency_relations()
            + _fock_relations(p)
        )
        got = {r.name: r for r in rels}
        _CATALOG_CACHE[p] = got
    return got


def defining_relation_names() -> list[str]:
    """The 32 defining trilinear relations (mixed + pure)."""
    return [f"mixed.{i:02d}" for i in range(1, 25)] + [
        f"pure.{i:02d}" for i in range(1, 9)
    ]


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class RelationReport:
    """Outcome of checking one relation over the truncated basis."""

    relation: str
    p: int
    m_max: int
    margin: int
    checked: int
    failures: list = field(default_factory=list)  # [(BasisVector, residual Vector)]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "p": self.p,
            "m_max": self.m_max,
            "margin": self.margin,
            "checked": self.checked,
            "pass": self.passed,
            "failures": [
                {"basis": bv.to_json(), "residual": res.to_json()}
                for bv, res in self.failures
            ],
        }


def relation_margin(rel: Relation, params: FockParams) -> int:
    return max(expr_margin(rel.lhs, params), expr_margin(rel.rhs, params))


def verify_relation(
    rel: Relation, params: FockParams, vectors=None
) -> RelationReport:
    """Check lhs·v = rhs·v exactly, vector by vector.

    By default v ranges over the interior basis (m ≤ m_max − margin), or just
    the vacuum for vacuum-only relations.  Passing ``vectors`` (pairs of a
    label BasisVector and a Vector, or bare BasisVectors) overrides the
    sample; labels only name the failure rows in the report.
    """
    margin = relation_margin(rel, params)
    if params.m_max < margin:
        raise TruncationTooSmall(
            f"{rel.name} needs m_max >= {margin}, got {params.m_max}"
        )
    lhs = rel.lhs.expand(params)
    rhs = rel.rhs.expand(params)
    if vectors is None:
        if rel.vacuum_only:
            sample = [BasisVector(0, 0, Kind.ALPHA)]
        else:
            interior = params.m_max - margin
            sample = [bv for bv in enumerate_basis(params) if bv.m <= interior]
        pairs = [(bv, Vector.basis(bv)) for bv in sample]
    else:
        pairs = [
            (v, Vector.basis(v)) if isinstance(v, BasisVector) else v
            for v in vectors
        ]
    failures = []
    p = params.p
    for label, vec in pairs:
        acc: dict[BasisVector, GaussianRational] = {}
        for word, coeff in lhs.terms.items():
            for bv, c in _apply_word(word, vec.terms, p).items():
                add = c * coeff
                prev = acc.get(bv)
                acc[bv] = add if prev is None else prev + add
        for word, coeff in rhs.terms.items():
            for bv, c in _apply_word(word, vec.terms, p).items():
                sub = c * coeff
                prev = acc.get(bv)
                acc[bv] = -sub if prev is None else prev - sub
        residual = Vector(acc)
        if not residual.is_zero():
            failures.append((label, residual))
    return RelationReport(
        relation=rel.name,
        p=params.p,
        m_max=params.m_max,
        margin=margin,
        checked=len(pairs),
        failures=failures,
    )


def _verify_by_name(args) -> RelationReport:
    name, p, m_max = args
    return verify_relation(catalog(p)[name], FockParams(p, m_max))


def verify_suite(
    params: FockParams, names: list[str] | None = None, jobs: int = 1
) -> list[RelationReport]:
    """Verify a subset (default: all) of the catalog, in catalog order.

    jobs > 1 fans the independent relations out over processes; the result
    order (and hence any report built from it) is identical either way.
    """
    cat = catalog(params.p)
    if names is None:
        names = list(cat)
    else:
        unknown = [n for n in names if n not in cat]
        if unknown:
            raise ConfigError(f"unknown relation names: {', '.join(unknown)}")
    if jobs > 1 and len(names) > 1:
        work = [(n, params.p, params.m_max) for n in names]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_by_name, work))
    return [verify_relation(cat[n], params) for n in names]


# ---------------------------------------------------------------------------
# support-graph connectivity
# ---------------------------------------------------------------------------


def support_strongly_connected(params: FockParams, max_m: int | None = None) -> bool:
    """Is the generator support graph strongly connected on m ≤ max_m?

    Vertices are the canonical basis vectors with m ≤ max_m (default
    m_max − 2, keeping one b⁺ step of headroom on either side); there is an
    edge v → w when some generator's matrix has a nonzero (w, v) entry.
    Strong connectivity is the graph-level face of irreducibility: no proper
    nonzero subspace spanned by basis vectors is invariant.
    """
    if max_m is None:
        max_m = params.m_max - 2
    if max_m < 0:
        raise TruncationTooSmall("need m_max >= 2 for the connectivity window")
    verts = [bv for bv in enumerate_basis(params) if bv.m <= max_m]
    if not verts:
        return False
    fwd = {v: set() for v in verts}
    bwd = {v: set() for v in verts}
    for g in Generator:
        mat = compile_expr(OperatorExpr.atom(g), params)
        for col, row in mat.support_pairs():
            if col.m <= max_m and row.m <= max_m and col != row:
                fwd[col].add(row)
                bwd[row].add(col)
    root = verts[0]

    def reaches_all(adj):
        seen = {root}
        stack = [root]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    return reaches_all(fwd) and reaches_all(bwd)
