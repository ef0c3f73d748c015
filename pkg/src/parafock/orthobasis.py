"""Inner products by adjoint transport, Gram data, orthogonal cell bases.

The Fock-type inner product is fixed by ⟨0|0⟩ = 1 together with the
adjointness (b⁺)† = b⁻ and (f⁺)† = f⁻.  Every canonical basis vector is a
creation word applied to the vacuum, so a pairing ⟨u, w⟩ reduces to applying
the reversed, daggered word of u to w and reading off the vacuum coefficient.
All of it is exact; the form is conjugate-linear in the first slot.

Each cell V_{m,n} carries at most a 2×2 Gram matrix.  The orthogonal
directions are alpha and alpha − p·beta, the ±½ eigenvectors of the compiled
spin-like operator Ns; their normalizers are square roots of rationals, so
only squared norms are materialized and vectors stay unnormalized.

``csco_check`` confirms that {Nb, Nf, Ns} is a commuting set whose joint
eigenvalue triple (m, n, ±½) separates the orthogonal directions.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionZero, GramDegenerate, TruncationTooSmall
from .fock import BasisVector, FockParams, Kind, Vector, subspace_dimension
from .operators import (
    Generator,
    N_B,
    N_F,
    N_S,
    OperatorExpr,
    _apply_word,
    commutator,
    compile_expr,
    expr_margin,
)
from .scalars import GaussianRational

_VACUUM = BasisVector(0, 0, Kind.ALPHA)


class InnerProductContext:
    """Shared caches for pair products and Gram matrices at fixed params.

    Pure reads after warm-up; writes go through a lock so one context can be
    shared across threads.
    """

    def __init__(self, params: FockParams):
        self.params = params
        self._pairs: dict[tuple[BasisVector, BasisVector], GaussianRational] = {}
        self._grams: dict[tuple[int, int], tuple] = {}
        self._lock = threading.Lock()


def _transport_words(u: BasisVector):
    """Daggered creation words of u, leftmost letter applied last.

    alpha(m,n) = (f⁺)ⁿ(b⁺)ᵐ|0⟩ transports as (b⁻)ᵐ(f⁻)ⁿ; beta carries the
    symmetrized pair ½(b⁺f⁺ + f⁺b⁺) at the core, hence two words with
    weight ½.
    """
    m, n = u.m, u.n
    bm, fm = Generator.BMINUS, Generator.FMINUS
    if u.kind is Kind.ALPHA:
        return ((Fraction(1), (bm,) * m + (fm,) * n),)
    head_b = (bm,) * (m - 1)
    head_f = (fm,) * (n - 1)
    half = Fraction(1, 2)
    return (
        (half, (fm, bm) + head_b + head_f),
        (half, (bm, fm) + head_b + head_f),
    )


def _pair(ctx: InnerProductContext, u: BasisVector, w: BasisVector) -> GaussianRational:
    key = (u, w)
    got = ctx._pairs.get(key)
    if got is not None:
        return got
    acc = GaussianRational(0)
    for weight, word in _transport_words(u):
        img = _apply_word(word, {w: GaussianRational(1)}, ctx.params.p)
        c = img.get(_VACUUM)
        if c:
            acc = acc + c * weight
    with ctx._lock:
        ctx._pairs[key] = acc
    return acc


def inner_product(v: Vector, w: Vector, ctx: InnerProductContext) -> GaussianRational:
    """⟨v, w⟩, conjugate-linear in v."""
    acc = GaussianRational(0)
    for u1, c1 in v.terms.items():
        c1c = c1.conjugate()
        for u2, c2 in w.terms.items():
            pairing = _pair(ctx, u1, u2)
            if pairing:
                acc = acc + c1c * c2 * pairing
    return acc


def cell_basis(params: FockParams, m: int, n: int) -> list[BasisVector]:
    dim = subspace_dimension(params, m, n)
    if dim == 0:
        raise DimensionZero(f"cell ({m}, {n}) is empty at p={params.p}")
    out = [BasisVector(m, n, Kind.ALPHA)]
    if dim == 2:
        out.append(BasisVector(m, n, Kind.BETA))
    return out


def gram(m: int, n: int, ctx: InnerProductContext) -> tuple:
    """Gram matrix of cell (m, n) over its canonical basis, cached."""
    key = (m, n)
    got = ctx._grams.get(key)
    if got is not None:
        return got
    basis = cell_basis(ctx.params, m, n)
    mat = tuple(
        tuple(_pair(ctx, u, w) for w in basis) for u in basis
    )
    with ctx._lock:
        ctx._grams[key] = mat
    return mat


def gram_is_positive_definite(mat) -> bool:
    """Leading principal minors, exact; entries must be real."""
    for row in mat:
        for c in row:
            if not c.is_real():
                return False
    head = mat[0][0].re
    if head <= 0:
        return False
    if len(mat) == 1:
        return True
    det = mat[0][0].re * mat[1][1].re - mat[0][1].re * mat[1][0].re
    return det > 0


@dataclass
class OrthoVector:
    """An unnormalized orthogonal direction with its exact squared norm."""

    m: int
    n: int
    sign: int  # the Ns eigenvalue is sign·(1/2)
    direction: Vector
    norm_sq: GaussianRational

    def to_json(self) -> dict:
        re_s, im_s = self.norm_sq.as_strings()
        return {
            "m": self.m,
            "n": self.n,
            "sign": self.sign,
            "direction": self.direction.to_json(),
            "norm_sq": {"re": re_s, "im": im_s},
        }


def orthonormal_basis(m: int, n: int, ctx: InnerProductContext) -> list[OrthoVector]:
    """Orthogonal directions of a cell: alpha and (if present) alpha − p·beta.

    Raises GramDegenerate when the Gram matrix is not positive definite or
    the two directions fail to be orthogonal (neither happens on the
    canonical cells; the checks guard corrupted contexts).
    """
    params = ctx.params
    mat = gram(m, n, ctx)
    if not gram_is_positive_definite(mat):
        raise GramDegenerate(f"Gram matrix of cell ({m}, {n}) is not positive definite")
    alpha = BasisVector(m, n, Kind.ALPHA)
    out = [
        OrthoVector(m=m, n=n, sign=+1, direction=Vector.basis(alpha), norm_sq=mat[0][0])
    ]
    if len(mat) == 2:
        p = params.p
        beta = BasisVector(m, n, Kind.BETA)
        minus = Vector({alpha: GaussianRational(1), beta: GaussianRational(-p)})
        cross = mat[0][0] - mat[0][1] * p
        if cross:
            raise GramDegenerate(
                f"directions of cell ({m}, {n}) are not orthogonal"
            )
        norm_sq = mat[0][0] - (mat[0][1] + mat[1][0]) * p + mat[1][1] * p * p
        out.append(OrthoVector(m=m, n=n, sign=-1, direction=minus, norm_sq=norm_sq))
    return out


# ---------------------------------------------------------------------------
# the commuting set {Nb, Nf, Ns}
# ---------------------------------------------------------------------------


@dataclass
class CommutatorCheck:
    pair: str
    margin: int
    passed: bool


@dataclass
class CscoReport:
    p: int
    m_max: int
    commutators: list = field(default_factory=list)
    eigenvalues_ok: bool = True
    labels_unique: bool = True
    cells_checked: int = 0

    @property
    def passed(self) -> bool:
        return (
            all(c.passed for c in self.commutators)
            and self.eigenvalues_ok
            and self.labels_unique
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m_max": self.m_max,
            "pass": self.passed,
            "commutators": [
                {"pair": c.pair, "margin": c.margin, "pass": c.passed}
                for c in self.commutators
            ],
            "eigenvalues_ok": self.eigenvalues_ok,
            "labels_unique": self.labels_unique,
            "cells_checked": self.cells_checked,
        }


def csco_check(ctx: InnerProductContext, m_max: int | None = None) -> CscoReport:
    """Verify the commuting set and its separating joint eigenvalues.

    Compiled commutators [Nb,Nf], [Nb,Ns], [Nf,Ns] must vanish on the
    interior; each orthogonal direction must satisfy Nb = m, Nf = n and
    Ns = ±½; and the (m, n, ±½) labels must be pairwise distinct.
    """
    params = ctx.params if m_max is None else ctx.params.with_m_max(m_max)
    if params.m_max < 3:
        raise TruncationTooSmall(f"csco check needs m_max >= 3, got {params.m_max}")
    report = CscoReport(p=params.p, m_max=params.m_max)
    named = (("nb-nf", N_B, N_F), ("nb-ns", N_B, N_S), ("nf-ns", N_F, N_S))
    for tag, x, y in named:
        expr = commutator(x, y)
        margin = expr_margin(expr, params)
        mat = compile_expr(expr, params)
        ok = all(
            mat.column(bv).is_zero()
            for bv in mat.columns
            if bv.m <= params.m_max - margin
        )
        report.commutators.append(CommutatorCheck(pair=tag, margin=margin, passed=ok))

    half = GaussianRational(Fraction(1, 2))
    mat_nb = compile_expr(N_B, params)
    mat_nf = compile_expr(N_F, params)
    mat_ns = compile_expr(N_S, params)
    labels = []
    local = InnerProductContext(params) if params is not ctx.params else ctx
    for m in range(params.m_max + 1):
        for n in range(params.p + 1):
            for ov in orthonormal_basis(m, n, local):
                report.cells_checked += 1
                want_ns = ov.direction.scaled(half if ov.sign > 0 else -half)
                if (
                    mat_nb.apply(ov.direction) != ov.direction.scaled(m)
                    or mat_nf.apply(ov.direction) != ov.direction.scaled(n)
                    or mat_ns.apply(ov.direction) != want_ns
                ):
                    report.eigenvalues_ok = False
                labels.append((m, n, ov.sign))
    report.labels_unique = len(labels) == len(set(labels))
    return report
