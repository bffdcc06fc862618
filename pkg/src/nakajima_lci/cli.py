"""Command-line front end.

Exit codes: 0 on success, 1 when the input is well-formed but fails a
domain check (bad structure, inadmissible, failed verification, unknown
example), 2 when the input cannot be parsed or the command line is wrong.
"""

import argparse
import json
import sys

from . import corpus, dual_cone, ideal_builder, nakajima, oracle


class InputError(Exception):
    """The input file is not a well-formed matrix document."""


class DomainError(Exception):
    """Input parsed but the requested computation does not apply."""


def parse_document(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict) or "rows" not in doc:
        raise InputError('expected an object with a "rows" field')
    rows = doc["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError('"rows" must be a list of lists')
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"matrix entries must be integers, got {x!r}")
    d = doc.get("d", len(rows) + 1)
    if isinstance(d, bool) or not isinstance(d, int):
        raise InputError(f'"d" must be an integer, got {d!r}')
    try:
        return nakajima.FreeParamMatrix.from_document({"d": d, "rows": rows})
    except nakajima.StructureError as exc:
        raise DomainError(f"invalid structure: {exc}") from None


def read_matrix(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def require_admissible(m):
    try:
        verdict = nakajima.is_admissible(m)
    except nakajima.StructureError as exc:
        raise DomainError(f"invalid structure: {exc}") from None
    if not verdict:
        raise DomainError(describe_violation(verdict.witness))


def describe_violation(w):
    eps = "".join(str(e) for e in w.eps)
    return f"inadmissible at level {w.level}: <m_{w.level - 1}, v({eps})> = {w.value}"


def emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_validate(args):
    m = read_matrix(args.file)
    try:
        nakajima.validate_structure(m)
    except nakajima.StructureError as exc:
        if args.format == "json":
            emit({"structure": False, "error": str(exc), "admissible": False})
        else:
            print(f"invalid structure: {exc}")
        return 1
    verdict = nakajima.is_admissible(m)
    if args.format == "json":
        doc = {"structure": True, "admissible": verdict.admissible}
        if not verdict:
            w = verdict.witness
            doc["witness"] = {"level": w.level, "eps": list(w.eps), "pairing": w.value}
        emit(doc)
    else:
        print(f"structure: ok (d = {m.d})")
        print("admissible" if verdict else describe_violation(verdict.witness))
    return 0 if verdict else 1


def cmd_equations(args):
    m = read_matrix(args.file)
    require_admissible(m)
    presentation = ideal_builder.binomial_generators(m)
    if args.minimal:
        presentation = ideal_builder.minimal_presentation(m, presentation=presentation)
    if args.format == "json":
        emit(ideal_builder.to_json(presentation))
        return 0
    if not args.minimal:
        print(ideal_builder.render(presentation))
        return 0
    plain = ideal_builder.variable_names(presentation)
    for k, (a, b) in presentation.variable_map.items():
        print(f"eliminated: z{k} = z{a}*z{b}")
    if args.aliases:
        names = ideal_builder.variable_names(presentation, aliases=True)
        pairs = ", ".join(f"{names[k]} = {plain[k]}" for k in presentation.surviving_variables)
        print(f"renamed: {pairs}")
    if presentation.minimal_generators:
        print(ideal_builder.render(presentation, minimal=True, aliases=args.aliases))
    else:
        print(f"smooth: 0 relations, ambient = C^{len(presentation.surviving_variables)}")
    return 0


def cmd_hilbert(args):
    m = read_matrix(args.file)
    require_admissible(m)
    L = dual_cone.dual_generators(m)
    plan = dual_cone.elimination_plan(m)
    if args.format == "json":
        emit({
            "d": m.d,
            "generators": [{"position": k, "covector": list(v)} for k, v in enumerate(L, start=1)],
            "q_set": {str(k): g for k, g in plan.q_set.items()},
            "r_set": {str(l): g for l, g in plan.r_set.items()},
            "hilbert": [{"position": k, "covector": list(v)} for k, v in plan.hilbert],
            "embedding_dimension": len(plan.hilbert),
        })
        return 0
    print("dual cone generators:")
    for k, v in enumerate(L, start=1):
        mark = "" if k in plan.eliminated_positions else "  *"
        print(f"  {k}: {list(v)}{mark}")
    q = ", ".join(f"e{k} = m{g}" for k, g in plan.q_set.items()) or "none"
    r = ", ".join(f"m{l} - e{l + 1} = m{g}" for l, g in plan.r_set.items()) or "none"
    print(f"Q: {q}")
    print(f"R: {r}")
    print(f"hilbert basis: {len(plan.hilbert)} elements (marked *)")
    print(f"embedding dimension: {len(plan.hilbert)}")
    return 0


def cmd_vertices(args):
    m = read_matrix(args.file)
    require_admissible(m)
    family = nakajima.vertex_family(m, m.d)
    verts = family.vertices
    halfspaces = nakajima.h_description(m)
    smooth = nakajima.is_basic_simplex(m)
    if args.format == "json":
        emit({
            "d": m.d,
            "points": [{"eps": list(e), "point": list(p)} for e, p in family.points.items()],
            "vertices": [list(v) for v in verts],
            "inequalities": [str(h) for pair in halfspaces for h in pair],
            "basic_simplex": smooth,
        })
        return 0
    print(f"vertices ({len(verts)}):")
    for v in verts:
        print(f"  {list(v)}")
    print("inequalities (x1 = 1):")
    for lower, upper in halfspaces:
        print(f"  {lower};  {upper}")
    print(f"basic simplex: {'yes' if smooth else 'no'}")
    return 0


def cmd_verify(args):
    m = read_matrix(args.file)
    report = oracle.full_report(m, level=args.level, seed=args.seed)
    if args.format == "text":
        for c in report.checks:
            status = "skipped" if c.skipped else ("pass" if c.passed else "FAIL")
            tail = f"  {json.dumps(c.witness)}" if c.witness is not None and not c.passed else ""
            print(f"{c.name}: {status}{tail}")
    else:
        emit(report.to_json())
    return 0 if report.passed else 1


def cmd_example(args):
    try:
        m = corpus.example(args.name, *args.args)
    except KeyError:
        names = ", ".join(corpus.EXAMPLES)
        print(f"unknown example {args.name!r}; available: {names}", file=sys.stderr)
        return 1
    except (TypeError, ValueError) as exc:
        print(f"bad arguments for {args.name!r}: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(m.to_document(), separators=(",", ":")))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="nakajima-lci",
                                     description="Equations of toric l.c.i. singularities from free-parameter matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_, default_format="text"):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help='JSON document {"d": ..., "rows": [...]}, or - for stdin')
        p.add_argument("--format", choices=("text", "json"), default=default_format)
        return p

    p = with_file("validate", "check structure and admissibility")
    p.set_defaults(func=cmd_validate)

    p = with_file("equations", "print the binomial generators")
    p.add_argument("--minimal", action="store_true", help="eliminate redundant variables")
    p.add_argument("--aliases", action="store_true",
                   help="with --minimal, rename survivors to w (for z1) and t1, t2, ...")
    p.set_defaults(func=cmd_equations)

    p = with_file("hilbert", "dual cone generators, redundant ones and the Hilbert basis")
    p.set_defaults(func=cmd_hilbert)

    p = with_file("vertices", "vertices and inequalities of the polytope")
    p.set_defaults(func=cmd_vertices)

    p = with_file("verify", "run the brute-force checks", default_format="json")
    p.add_argument("--level", choices=("quick", "exhaustive"), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="print a built-in example as a JSON document")
    p.add_argument("name", help="fig2, fig3, triangle, simplex, box, smooth3, kleinian; may be written as simplex(4,2)")
    p.add_argument("args", nargs="*", type=int)
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
