"""Invariant-subspace decompositions of the truncated carrier space.

Given a set of operators, the space splits into the connected components of
their joint support graph: v and w land in one component when some operator
links them.  Components are reported with a completeness flag: a component is
incomplete when one of its vectors is mapped partly above the truncation, so
its component would keep growing in the untruncated space.

Presets name the operator sets of interest:

  gl11    Nb, Nf, Q⁺, Q⁻               (anti-diagonal strings)
  l00l01  gl11 plus (b±)² and R±       (parity halves)
  osp12   Nb, (b±)², b±                (f-level columns)
  sp2     Nb, (b±)²                    (columns split by m parity)
  so3     Nf, f±                       (b-level rows)
  so2     Nf                           (single cells)

Two decompositions are predicted in closed form and cross-checked against the
union-find route: the gl11 anti-diagonal families (``diagonal_decomposition``)
and the l00l01 parity split (``filled_empty_split``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, TruncationTooSmall
from .fock import BasisVector, FockParams, Kind, Vector, enumerate_basis, subspace_dimension
from .operators import (
    B_MINUS,
    B_MINUS_SQ,
    B_PLUS,
    B_PLUS_SQ,
    F_MINUS,
    F_PLUS,
    N_B,
    N_F,
    OperatorExpr,
    Q_MINUS,
    Q_PLUS,
    R_MINUS,
    R_PLUS,
    compile_expr,
)
from .realization import SuperAlgebraSpec, gl11_spec, realize


@dataclass(frozen=True)
class GeneratorSet:
    name: str
    exprs: tuple


PRESETS: dict[str, GeneratorSet] = {
    "gl11": GeneratorSet("gl11", (N_B, N_F, Q_PLUS, Q_MINUS)),
    "l00l01": GeneratorSet(
        "l00l01",
        (N_B, N_F, B_PLUS_SQ, B_MINUS_SQ, Q_PLUS, Q_MINUS, R_PLUS, R_MINUS),
    ),
    "osp12": GeneratorSet("osp12", (N_B, B_PLUS_SQ, B_MINUS_SQ, B_PLUS, B_MINUS)),
    "sp2": GeneratorSet("sp2", (N_B, B_PLUS_SQ, B_MINUS_SQ)),
    "so3": GeneratorSet("so3", (N_F, F_PLUS, F_MINUS)),
    "so2": GeneratorSet("so2", (N_F,)),
}


def preset(name: str) -> GeneratorSet:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}"
        ) from None


def realized_generator_set(spec: SuperAlgebraSpec, params: FockParams) -> GeneratorSet:
    """A generator set carrying every basis element of a superalgebra."""
    exprs = tuple(realize(spec, x, params).expr for x in spec.basis)
    return GeneratorSet(spec.name, exprs)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return
        if self.size[ri] < self.size[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        self.size[ri] += self.size[rj]


@dataclass(frozen=True)
class InvariantComponent:
    basis: tuple
    complete: bool

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self, component_id: int) -> dict:
        return {
            "id": component_id,
            "dimension": self.dimension,
            "complete": self.complete,
            "basis": [bv.to_json() for bv in self.basis],
        }


def decompose(gens: GeneratorSet, params: FockParams) -> list[InvariantComponent]:
    """Connected components of the joint support graph, in basis order.

    Ordering is by smallest member, so the component of the vacuum comes
    first.  A component is complete when none of its members maps above the
    truncation under any of the operators.
    """
    if params.m_max < 2:
        raise TruncationTooSmall(f"decompose needs m_max >= 2, got {params.m_max}")
    basis = enumerate_basis(params)
    index = {bv: i for i, bv in enumerate(basis)}
    uf = UnionFind(len(basis))
    overflows = [False] * len(basis)
    for expr in gens.exprs:
        mat = compile_expr(expr, params)
        for col, row in mat.support_pairs():
            ci = index[col]
            if row.m > params.m_max:
                overflows[ci] = True
            elif row != col:
                uf.union(ci, index[row])
    groups: dict[int, list[BasisVector]] = {}
    for bv, i in index.items():
        groups.setdefault(uf.find(i), []).append(bv)
    comps = []
    for members in groups.values():
        members.sort()
        complete = not any(overflows[index[bv]] for bv in members)
        comps.append(InvariantComponent(basis=tuple(members), complete=complete))
    comps.sort(key=lambda c: c.basis[0])
    return comps


def closure(seeds, gens: GeneratorSet, params: FockParams) -> InvariantComponent:
    """Smallest support-closed set of basis vectors containing the seeds.

    Seeds may be BasisVectors or Vectors; the walk follows operator columns
    forward.  Incomplete means the walk hit the truncation edge.
    """
    todo: list[BasisVector] = []
    for s in seeds:
        todo.extend([s] if isinstance(s, BasisVector) else sorted(s.support()))
    mats = [compile_expr(e, params) for e in gens.exprs]
    seen = set(todo)
    complete = True
    while todo:
        bv = todo.pop()
        for mat in mats:
            for out, _ in mat.column(bv).items():
                if out.m > params.m_max:
                    complete = False
                elif out not in seen:
                    seen.add(out)
                    todo.append(out)
    return InvariantComponent(basis=tuple(sorted(seen)), complete=complete)


# ---------------------------------------------------------------------------
# closed-form decompositions, cross-checked against the union-find route
# ---------------------------------------------------------------------------


@dataclass
class DiagonalFamily:
    kind: str          # "lower" or "upper"
    index: int         # k for lower families, s for upper ones
    basis: tuple
    expected_dimension: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def flagged(self) -> bool:
        return self.dimension != self.expected_dimension

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "index": self.index,
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "flagged": self.flagged,
            "basis": [bv.to_json() for bv in self.basis],
        }


@dataclass
class DiagonalReport:
    p: int
    m_max: int
    families: list
    partition_ok: bool
    invariant: bool
    window_dimension: int
    beyond_window: int

    @property
    def passed(self) -> bool:
        return self.partition_ok and self.invariant

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m_max": self.m_max,
            "pass": self.passed,
            "partition_ok": self.partition_ok,
            "invariant": self.invariant,
            "window_dimension": self.window_dimension,
            "beyond_window": self.beyond_window,
            "families": [f.to_json() for f in self.families],
        }


def _cell_vectors(params: FockParams, m: int, n: int) -> list[BasisVector]:
    dim = subspace_dimension(params, m, n)
    if dim == 0 or m > params.m_max:
        return []
    out = [BasisVector(m, n, Kind.ALPHA)]
    if dim == 2:
        out.append(BasisVector(m, n, Kind.BETA))
    return out


def diagonal_decomposition(
    params: FockParams, spec: SuperAlgebraSpec | None = None
) -> DiagonalReport:
    """The anti-diagonal families m + n = const and their gl(1/1) invariance.

    Families living entirely inside the truncation are enumerated: the upper
    ones (m + n = s < p, dimension 2s, except the vacuum singleton at s = 0,
    which the 2s count misses and which is therefore flagged) and the lower
    ones (m + n = p + k, dimension 2p).  Together they partition the window
    {m + n ≤ m_max}.  Invariance is checked against the compiled images of
    the realized superalgebra (gl(1/1) by default): Q± slide along an
    anti-diagonal, so no family leaks, not even at the truncation edge.
    """
    p = params.p
    if params.m_max < p:
        raise TruncationTooSmall(
            f"diagonal families need m_max >= p, got m_max={params.m_max}, p={p}"
        )
    families = []
    for s in range(0, p):
        cells = [(s - i, i) for i in range(s + 1)]
        members = [bv for (m, n) in cells for bv in _cell_vectors(params, m, n)]
        families.append(
            DiagonalFamily(
                kind="upper",
                index=s,
                basis=tuple(sorted(members)),
                expected_dimension=2 * s,
            )
        )
    for k in range(0, params.m_max - p + 1):
        cells = [(k + p - i, i) for i in range(p + 1)]
        members = [bv for (m, n) in cells for bv in _cell_vectors(params, m, n)]
        families.append(
            DiagonalFamily(
                kind="lower",
                index=k,
                basis=tuple(sorted(members)),
                expected_dimension=2 * p,
            )
        )

    window = {bv for bv in enumerate_basis(params) if bv.m + bv.n <= params.m_max}
    covered: set[BasisVector] = set()
    partition_ok = True
    for fam in families:
        fam_set = set(fam.basis)
        if covered & fam_set:
            partition_ok = False
        covered |= fam_set
    if covered != window:
        partition_ok = False

    if spec is None:
        spec = gl11_spec()
    mats = [compile_expr(realize(spec, x, params).expr, params) for x in spec.basis]
    invariant = True
    for fam in families:
        fam_set = set(fam.basis)
        for mat in mats:
            for bv in fam.basis:
                if not mat.column(bv).support() <= fam_set:
                    invariant = False
    return DiagonalReport(
        p=p,
        m_max=params.m_max,
        families=families,
        partition_ok=partition_ok,
        invariant=invariant,
        window_dimension=len(window),
        beyond_window=len(enumerate_basis(params)) - len(window),
    )


@dataclass
class SplitReport:
    p: int
    m_max: int
    odd_family: InvariantComponent    # cells with m + n odd
    even_family: InvariantComponent   # cells with m + n even, vacuum included
    star_in_even: bool
    matches_connectivity: bool

    @property
    def passed(self) -> bool:
        return self.star_in_even and self.matches_connectivity

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m_max": self.m_max,
            "pass": self.passed,
            "star_in_even": self.star_in_even,
            "matches_connectivity": self.matches_connectivity,
            "odd_family": self.odd_family.to_json(0),
            "even_family": self.even_family.to_json(1),
        }


def filled_empty_split(params: FockParams) -> SplitReport:
    """The two l00l01 halves: cells with m + n odd versus m + n even.

    The even half absorbs the vacuum singleton (R⁺ maps it into the adjacent
    cell).  The predicted split is compared against the union-find
    decomposition, which must come out as exactly these two components.
    """
    basis = enumerate_basis(params)
    odd_pred = tuple(bv for bv in basis if (bv.m + bv.n) % 2 == 1)
    even_pred = tuple(bv for bv in basis if (bv.m + bv.n) % 2 == 0)
    comps = decompose(PRESETS["l00l01"], params)
    matches = len(comps) == 2 and {
        frozenset(c.basis) for c in comps
    } == {frozenset(odd_pred), frozenset(even_pred)}
    star = BasisVector(0, 0, Kind.ALPHA)
    by_pred = {frozenset(c.basis): c for c in comps}
    odd_comp = by_pred.get(
        frozenset(odd_pred), InvariantComponent(odd_pred, False)
    )
    even_comp = by_pred.get(
        frozenset(even_pred), InvariantComponent(even_pred, False)
    )
    return SplitReport(
        p=params.p,
        m_max=params.m_max,
        odd_family=odd_comp,
        even_family=even_comp,
        star_in_even=star in even_comp.basis,
        matches_connectivity=matches,
    )


def column_supports_isomorphic(params: FockParams) -> bool:
    """Do the first (n = 0) and last (n = p) osp12 columns match edge for edge?

    Both columns consist of single alpha vectors, so mapping by the b-level m
    identifies their vertex sets; the labeled support edges of the osp12
    operators must then agree exactly.
    """
    gens = PRESETS["osp12"]

    def edges(n: int) -> set:
        out = set()
        for gi, expr in enumerate(gens.exprs):
            mat = compile_expr(expr, params)
            for col, row in mat.support_pairs():
                if col.n == n and row.n == n:
                    out.add((gi, col.m, row.m))
        return out

    return edges(0) == edges(params.p)
