"""Command-line front end.

Exit codes: 0 success, 1 findings (the mathematics disagrees with itself),
2 input errors (unreadable file, bad flag, unusable element).
"""

import argparse
import json
import sys
from pathlib import Path

from .errors import (GradedRegError, InternalInconsistencyError, ParseError,
                     SearchExhaustedError)
from .koszul import DEFAULT_TRUNCATION, depth, homology_table, koszul
from .poly import parse_poly
from .regularity import (INCONSISTENT, CorpusConfig, change_of_rings_suite,
                         corpus_summary, regularity_report, run_corpus)
from .resolutions import betti, default_steps, resolve_residue_field
from .ringfile import load_ring
from .rings import SEARCH_SEED, find_nonzerodivisor

SCHEMA = 1
EXIT_OK, EXIT_FINDINGS, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def report_json(command, ring=None, **fields):
    """ReportJSON with a fixed key set and order; unset fields are null."""
    out = {"schema": SCHEMA, "command": command, "ring": ring}
    for key in ("n", "hilbert", "conditions", "betti", "resolution", "koszul", "cor"):
        out[key] = fields.get(key)
    out["findings"] = list(fields.get("findings", []))
    return out


def dump(obj):
    return json.dumps(obj)


# -- commands -----------------------------------------------------------------

def cmd_betti(args, A):
    steps = args.steps if args.steps is not None else default_steps(A)
    table = betti(A, steps)
    text = str(table)
    return report_json("betti", A.name, n=A.dim, betti=table.rows()), text, []


def cmd_resolve(args, A):
    steps = args.steps if args.steps is not None else default_steps(A)
    C = resolve_residue_field(A, steps)
    findings = [f"d_{i} d_{i + 1} != 0" for i in C.composition_defects()]
    findings += [f"unit entry in d_{i} at ({a}, {b})" for i, a, b in C.unit_entries()]
    maps = []
    lines = [f"ranks: {' '.join(map(str, C.ranks()))}" + (" (truncated)" if C.truncated else "")]
    for i in range(1, C.length + 1):
        cols = [[str(f) for f in col] for col in C.d(i)]
        maps.append({"i": i, "source_degrees": C.degrees[i], "columns": cols})
        lines.append(f"d_{i}: degrees {C.degrees[i]} -> {C.degrees[i - 1]}")
        for b, col in enumerate(cols):
            lines.append(f"  [{b}] " + ", ".join(col))
    res = {"ranks": C.ranks(), "truncated": C.truncated, "maps": maps}
    return (report_json("resolve", A.name, n=A.dim, betti=C.betti().rows(), resolution=res,
                        findings=findings), "\n".join(lines), findings)


def cmd_koszul(args, A):
    D = args.maxdeg
    K = koszul(A, A.ring.gens())
    table, _ = homology_table(K, D)
    totals = [sum(table[i]) for i in range(K.length + 1)]
    lines = [f"H_{i}: total {totals[i]}, by degree {table[i]}" for i in range(K.length + 1)]
    data = {"truncation": D, "homology": totals, "by_degree": [table[i] for i in range(K.length + 1)]}
    return report_json("koszul", A.name, n=A.dim, koszul=data), "\n".join(lines), []


def cmd_depth(args, A):
    dep = depth(A, D=args.maxdeg)
    findings = []
    if dep > A.dim:
        findings.append(f"depth {dep} exceeds dim {A.dim}")
    data = {"truncation": args.maxdeg, "depth": dep}
    return report_json("depth", A.name, n=A.dim, koszul=data, findings=findings), f"depth {dep}", findings


def cmd_dim(args, A):
    h = A.hilbert_prefix(args.maxdeg)
    text = f"dim {A.dim}\nhilbert {' '.join(map(str, h))}"
    return report_json("dim", A.name, n=A.dim, hilbert=h), text, []


def cmd_regcheck(args, A):
    rep = regularity_report(A, args.bound, args.maxdeg)
    findings = list(rep.findings) if rep.status == INCONSISTENT else []
    lines = [rep.summary_line(),
             f"  a) pd_A k: {rep.cond_a}",
             f"  b) embdim {rep.embedding_dim} == dim {rep.n}: {rep.cond_b}",
             f"  c) m generated by {rep.n} elements: {rep.cond_c}",
             f"  d) Hilbert series polynomial up to degree {args.maxdeg}: {rep.cond_d}"]
    conds = rep.conditions()
    conds["status"] = rep.status
    table = betti(A, rep.cond_a.bound)
    out = report_json("regcheck", A.name, n=rep.n, hilbert=A.hilbert_prefix(args.maxdeg),
                      conditions=conds, betti=table.rows(), findings=findings)
    return out, "\n".join(lines), findings


def cmd_cor(args, A):
    if args.g is not None:
        try:
            g = parse_poly(args.g, A.ring)
        except ParseError as exc:
            raise InputError(f"--g: {exc}") from None
        if not g.is_homogeneous() or g.degree() != 1:
            raise InputError(f"--g: {args.g!r} is not a linear form")
    else:
        try:
            g = find_nonzerodivisor(A, seed=args.seed).rep
        except SearchExhaustedError as exc:
            raise InputError(str(exc)) from None
    suite = change_of_rings_suite(A, g, args.window, args.maxdeg)
    e2 = suite["e2"]
    cor = {
        "g": suite["g"],
        "window": args.window,
        "tor": suite["tor"],
        "e2": [[p, q, e2.entries[(p, q)]] for (p, q) in sorted(e2.entries)],
        "d2_ranks": [row.d2_rank for row in suite["d2"]],
        "abutment": [[row.n, row.lhs, row.rhs] for row in suite["abutment"]],
    }
    lines = [f"g = {suite['g']}", f"Tor^A_p(A/gA, k): {suite['tor']}", "E^2 (rows q, columns p):"]
    for q in range(args.window + 1):
        lines.append(f"  q={q}: " + " ".join(f"{e2.entries.get((p, q), 0):>3}"
                                             for p in range(args.window + 2 - q)))
    lines.append(f"d^2 ranks: {cor['d2_ranks']}")
    lines.append("abutment: " + ", ".join(f"{r.lhs}={r.rhs}" if r.equal else f"{r.lhs}!={r.rhs}"
                                          for r in suite["abutment"]))
    findings = suite["findings"]
    return report_json("cor", A.name, n=A.dim, cor=cor, findings=findings), "\n".join(lines), findings


def _entry_json(e):
    if e.error:
        return {"ring": e.ring, "path": e.path, "error": e.error}
    rep = e.report
    conds = rep.conditions()
    conds["status"] = rep.status
    out = report_json("corpus", e.ring, n=rep.n, conditions=conds,
                      koszul={"depth": e.depth}, findings=e.findings)
    if e.cor:
        out["cor"] = {"g": e.cor["g"], "tor": e.cor["tor"],
                      "d2_ranks": [r.d2_rank for r in e.cor["d2"]],
                      "abutment": [[r.n, r.lhs, r.rhs] for r in e.cor["abutment"]]}
    return out


def cmd_corpus(args):
    root = Path(args.dir)
    if not root.is_dir():
        raise InputError(f"{root}: not a directory")
    config = CorpusConfig(bound=args.bound, seed=args.seed, window=args.window)
    entries = run_corpus(sorted(root.glob("*.ring")), config)
    summary = corpus_summary(entries)
    lines = []
    for e in entries:
        if e.error:
            lines.append(f"{e.ring}: ERROR {e.error}")
        else:
            lines.append(f"{e.ring}: {e.report.summary_line()}")
            lines.extend(f"    finding: {f}" for f in e.findings)
    lines.append(f"{summary['rings']} rings, {summary['inconsistencies']} inconsistencies, "
                 f"{summary['findings']} findings, {summary['errors']} errors")
    out = {"schema": SCHEMA, "command": "corpus", "summary": summary,
           "rings": [_entry_json(e) for e in entries]}
    if summary["errors"]:
        code = EXIT_INPUT
    elif summary["findings"] or summary["inconsistencies"]:
        code = EXIT_FINDINGS
    else:
        code = EXIT_OK
    return out, "\n".join(lines), code


# -- parser -------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON report on standard output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for the nonzerodivisor search")
    parser = argparse.ArgumentParser(prog="gradedreg", parents=[common],
                                     description="Regularity checks for standard-graded rings over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, func):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        if name != "corpus":
            sp.add_argument("file")
        return sp

    for name, func, text in (("betti", cmd_betti, "Betti table of the residue field"),
                             ("resolve", cmd_resolve, "minimal free resolution of the residue field")):
        add(name, text, func).add_argument("--steps", type=int, default=None)
    add("koszul", "Koszul homology on the variables", cmd_koszul).add_argument(
        "--maxdeg", type=int, default=DEFAULT_TRUNCATION)
    add("depth", "depth via Koszul homology", cmd_depth).add_argument(
        "--maxdeg", type=int, default=DEFAULT_TRUNCATION)
    add("dim", "Krull dimension and Hilbert function", cmd_dim).add_argument(
        "--maxdeg", type=int, default=DEFAULT_TRUNCATION)
    sp = add("regcheck", "evaluate the four regularity conditions", cmd_regcheck)
    sp.add_argument("--bound", type=int, default=None)
    sp.add_argument("--maxdeg", type=int, default=12)
    sp = add("cor", "change-of-rings spectral sequence for A -> A/gA", cmd_cor)
    sp.add_argument("--g", default=None, help="linear form (default: searched)")
    sp.add_argument("--window", type=int, default=4)
    sp.add_argument("--maxdeg", type=int, default=None,
                    help="internal degree bound (default: smallest sufficient)")
    sp = add("corpus", "run every *.ring file in a directory", None)
    sp.add_argument("dir")
    sp.add_argument("--bound", type=int, default=None)
    sp.add_argument("--window", type=int, default=4)
    return parser


def _fail(message):
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", SEARCH_SEED)
    try:
        if args.command == "corpus":
            out, text, code = cmd_corpus(args)
        else:
            try:
                A = load_ring(args.file)
            except ParseError as exc:
                return _fail(f"{args.file}:{exc.line}:{exc.column}: {exc.message}")
            except OSError as exc:
                return _fail(f"{args.file}: {exc.strerror or exc}")
            out, text, findings = args.func(args, A)
            code = EXIT_FINDINGS if findings else EXIT_OK
    except InternalInconsistencyError as exc:
        print(f"finding: {exc}", file=sys.stderr)
        return EXIT_FINDINGS
    except (InputError, GradedRegError, ValueError) as exc:
        return _fail(str(exc))
    print(dump(out) if args.json else text)
    return code
