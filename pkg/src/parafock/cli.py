"""Command line front end: exact checks in, deterministic reports out.

Subcommands
    verify      run (a subset of) the relation catalog over a truncation
    decompose   invariant components for a preset or a custom superalgebra
    realize     validate a superalgebra and check bracket preservation
    gram        Gram matrix and orthogonal directions of one cell
    csco        the commuting set {Nb, Nf, Ns} and its joint eigenvalues
    basis       enumerate the truncated canonical basis

Reports are emitted as JSON (default) or CSV, to stdout or --out.  Output is
byte-deterministic: no timestamps, stable orderings, exact "num/den" scalars.
Exit status: 0 all checks passed, 1 a verification failed, 2 bad
configuration or input (with a machine-readable JSON error on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from .decomposition import (
    decompose,
    preset as preset_generator_set,
    realized_generator_set,
)
from .errors import ConfigError, ParafockError
from .fock import FockParams, enumerate_basis
from .operators import format_expr
from .orthobasis import (
    InnerProductContext,
    csco_check,
    gram,
    gram_is_positive_definite,
    orthonormal_basis,
)
from .realization import (
    SuperAlgebraSpec,
    builtin_spec,
    check_bracket_preservation,
    realize,
    validate_spec,
)
from .relations import verify_suite


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as ConfigError (exit code 2)."""

    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="parafock", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, mmax=True):
        p.add_argument("--p", type=int, required=True, help="statistics order, >= 1")
        if mmax:
            p.add_argument("--mmax", type=int, required=True, help="b-level truncation")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the report here (atomic); default stdout")

    pv = sub.add_parser("verify", help="check relations over the truncated basis")
    common(pv)
    pv.add_argument(
        "--relations",
        help="comma-separated relation names (default: the whole catalog)",
    )
    pv.add_argument("--jobs", type=int, default=1, help="parallel worker processes")

    pd = sub.add_parser("decompose", help="invariant components of an operator set")
    common(pd)
    group = pd.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", help="gl11, l00l01, osp12, sp2, so3 or so2")
    group.add_argument("--spec", help="JSON file with a superalgebra description")

    pr = sub.add_parser("realize", help="validate a superalgebra and its transport")
    common(pr)
    group = pr.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", help="built-in superalgebra (gl11)")
    group.add_argument("--spec", help="JSON file with a superalgebra description")

    pg = sub.add_parser("gram", help="Gram matrix of one weight cell")
    common(pg, mmax=False)
    pg.add_argument("--m", type=int, required=True)
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--mmax", type=int, help="optional truncation; defaults to m")

    pc = sub.add_parser("csco", help="commuting set {Nb, Nf, Ns} checks")
    common(pc)

    pb = sub.add_parser("basis", help="enumerate the truncated canonical basis")
    common(pb)
    return top


# ---------------------------------------------------------------------------
# command handlers: each returns (report dict, csv rows, exit code)
# ---------------------------------------------------------------------------


def _run_verify(args):
    params = FockParams(args.p, args.mmax)
    names = None
    if args.relations:
        names = [s for s in (t.strip() for t in args.relations.split(",")) if s]
        if not names:
            raise ConfigError("--relations was given but names are empty")
    if args.jobs < 1:
        raise ConfigError(f"--jobs must be >= 1, got {args.jobs}")
    reports = verify_suite(params, names=names, jobs=args.jobs)
    failed = [r.relation for r in reports if not r.passed]
    doc = {
        "command": "verify",
        "p": params.p,
        "m_max": params.m_max,
        "checked": len(reports),
        "failed": failed,
        "pass": not failed,
        "relations": [r.to_json() for r in reports],
    }
    rows = [["relation", "p", "m_max", "margin", "checked", "failures", "pass"]]
    for r in reports:
        rows.append(
            [r.relation, r.p, r.m_max, r.margin, r.checked, len(r.failures), r.passed]
        )
    return doc, rows, 0 if not failed else 1


def _load_spec_arg(args) -> SuperAlgebraSpec:
    if args.preset:
        try:
            return builtin_spec(args.preset)
        except ParafockError:
            raise ConfigError(f"unknown built-in superalgebra {args.preset!r}") from None
    if not os.path.exists(args.spec):
        raise ConfigError(f"spec file not found: {args.spec}")
    return SuperAlgebraSpec.from_json_file(args.spec)


def _run_decompose(args):
    params = FockParams(args.p, args.mmax)
    if args.preset:
        gens = preset_generator_set(args.preset)
        source = args.preset
    else:
        gens = realized_generator_set(_load_spec_arg(args), params)
        source = gens.name
    comps = decompose(gens, params)
    doc = {
        "command": "decompose",
        "preset": source,
        "p": params.p,
        "m_max": params.m_max,
        "component_count": len(comps),
        "components": [c.to_json(i) for i, c in enumerate(comps)],
    }
    rows = [["component", "dimension", "complete", "basis"]]
    for i, c in enumerate(comps):
        compact = " ".join(f"{bv.m}:{bv.n}:{bv.kind.label()}" for bv in c.basis)
        rows.append([i, c.dimension, c.complete, compact])
    return doc, rows, 0


def _run_realize(args):
    params = FockParams(args.p, args.mmax)
    spec = _load_spec_arg(args)
    validation = validate_spec(spec)
    elements = [realize(spec, x, params) for x in spec.basis]
    preservation = check_bracket_preservation(spec, params)
    doc = {
        "command": "realize",
        "spec": spec.name,
        "p": params.p,
        "m_max": params.m_max,
        "pass": preservation.passed,
        "validation": {
            "elements": validation.elements,
            "bracket_pairs": validation.bracket_pairs,
            "jacobi_triples": validation.jacobi_triples,
            "rep_checks": validation.rep_checks,
        },
        "elements": [
            {"name": e.name, "parity": e.parity.value, "operator": format_expr(e.expr)}
            for e in elements
        ],
        "bracket_preservation": preservation.to_json(),
    }
    rows = [["x", "y", "pass"]]
    for c in preservation.pairs:
        rows.append([c.x, c.y, c.passed])
    return doc, rows, 0 if preservation.passed else 1


def _run_gram(args):
    if args.m < 0:
        raise ConfigError(f"--m must be >= 0, got {args.m}")
    m_max = args.mmax if args.mmax is not None else args.m
    params = FockParams(args.p, m_max)
    ctx = InnerProductContext(params)
    mat = gram(args.m, args.n, ctx)
    directions = orthonormal_basis(args.m, args.n, ctx)
    doc = {
        "command": "gram",
        "p": params.p,
        "m": args.m,
        "n": args.n,
        "dimension": len(mat),
        "matrix": [[{"re": c.as_strings()[0], "im": c.as_strings()[1]} for c in row] for row in mat],
        "positive_definite": gram_is_positive_definite(mat),
        "orthogonal_directions": [ov.to_json() for ov in directions],
    }
    rows = [["row", "col", "re", "im"]]
    for i, row in enumerate(mat):
        for j, c in enumerate(row):
            re_s, im_s = c.as_strings()
            rows.append([i, j, re_s, im_s])
    return doc, rows, 0


def _run_csco(args):
    params = FockParams(args.p, args.mmax)
    report = csco_check(InnerProductContext(params))
    doc = {"command": "csco", **report.to_json()}
    rows = [["check", "pass"]]
    for c in report.commutators:
        rows.append([f"commutator.{c.pair}", c.passed])
    rows.append(["eigenvalues", report.eigenvalues_ok])
    rows.append(["labels-unique", report.labels_unique])
    return doc, rows, 0 if report.passed else 1


def _run_basis(args):
    params = FockParams(args.p, args.mmax)
    basis = enumerate_basis(params)
    doc = {
        "command": "basis",
        "p": params.p,
        "m_max": params.m_max,
        "count": len(basis),
        "basis": [bv.to_json() for bv in basis],
    }
    rows = [["m", "n", "kind"]]
    for bv in basis:
        rows.append([bv.m, bv.n, bv.kind.label()])
    return doc, rows, 0


_HANDLERS = {
    "verify": _run_verify,
    "decompose": _run_decompose,
    "realize": _run_realize,
    "gram": _run_gram,
    "csco": _run_csco,
    "basis": _run_basis,
}


def _render(doc, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _emit(text: str, out_path: str | None):
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".parafock-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc, rows, code = _HANDLERS[args.command](args)
        _emit(_render(doc, rows, args.format), args.out)
        return code
    except ParafockError as exc:
        err = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stderr.write(json.dumps(err, ensure_ascii=False) + "\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
