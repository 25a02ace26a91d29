"""Command line front end: ``anosov validate|analyze|surface|realize|glue|render``.

Reports are nested key-value data. The default text view prints one
``dotted.key = value`` line per scalar; ``--format compact`` prints the same
data as one line of JSON. Exit codes: 0 for a positive verdict, 1 for a
negative verdict, 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import folia, geomtype, gluing, symdyn
from .errors import AnosovError, GTypeSyntaxError, InputError
from .render import render_svg
from .surface import QUARTERS, THIRDS, check_realizable_filled, trace_leaf
from .surface.realize import analyze_side

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2
LAYOUTS = {"thirds": THIRDS, "quarters": QUARTERS}


class CliInputError(Exception):
    pass


# ------------------------------------------------------------------ output


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def flatten(data, prefix: str = ""):
    if isinstance(data, dict):
        if not data:
            yield prefix, "{}"
        for k, v in data.items():
            yield from flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(data, list):
        if not data:
            yield prefix, "[]"
        elif all(not isinstance(x, (dict, list)) for x in data):
            yield prefix, "[" + ", ".join(_scalar(x) for x in data) + "]"
        else:
            for a, v in enumerate(data):
                yield from flatten(v, f"{prefix}[{a}]")
    else:
        yield prefix, _scalar(data)


def emit(report: dict, fmt: str) -> None:
    if fmt == "compact":
        sys.stdout.write(json.dumps(report, separators=(",", ":"), ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("".join(f"{k} = {v}\n" for k, v in flatten(report)))


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc.strerror}") from None


def _gtype(path: str) -> geomtype.GeometricType:
    return geomtype.parse(_read(path))


def _word(word) -> str:
    return "".join(f"({i + 1},{j + 1})" for i, j in word)


def _sign(s: int) -> str:
    return "+" if s > 0 else "-"


def _triples(entries) -> list[str]:
    return ["".join(t) for t in entries]


# ----------------------------------------------------------------- reports


def symdyn_report(T: geomtype.GeometricType, max_period: int) -> dict:
    pieces, wandering = symdyn.basic_pieces(T)
    free = {}
    for kind in ("stable", "unstable"):
        free[kind] = [
            {
                "states": [f"{i + 1}:{side}" for i, side in c.states],
                "orbit": c.orbit.label(),
                "sign": _sign(c.orbit.sign),
            }
            for c in symdyn.free_separatrices(T, kind)
        ]
    return {
        "command": "analyze",
        "transitive": symdyn.is_transitive(T),
        "basic_pieces": [
            {"id": p.id + 1, "symbols": [_word([s]) for s in sorted(p.symbols)], "trivial": p.trivial} for p in pieces
        ],
        "wandering": [_word([s]) for s in wandering],
        "periodic_counts": {str(p): symdyn.count_periodic_itineraries(T, p) for p in range(1, max_period + 1)},
        "orbits": [{"word": o.label(), "sign": _sign(o.sign)} for o in symdyn.periodic_orbits(T, max_period)],
        "free_separatrices": free,
        "smale_graph": [f"{a + 1}->{b + 1}" for a, b in sorted(symdyn.smale_graph_of_type(T).edges)],
    }


def ctype_report(entries) -> dict:
    a = folia.analyze(entries)
    out = {
        "command": "analyze",
        "kind": "ctype",
        "valid": a.valid,
        "violations": list(a.violations),
        "marked": list(a.marked),
        "is_morse_smale": a.is_morse_smale,
        "is_elementary": a.is_elementary,
        "is_coherent": a.is_coherent,
        "is_alternating": a.is_alternating,
    }
    if a.valid:
        sigma = folia.CombinatorialType(tuple(entries))
        out["canonical_form"] = _triples(folia.canonical_form(sigma).entries)
        out["canonical_form_unoriented"] = _triples(folia.canonical_form(sigma, unoriented=True).entries)
    return out


def bftype_report(entries) -> dict:
    a = folia.validate_bif(entries)
    return {
        "command": "analyze",
        "kind": "bftype",
        "valid": a.valid,
        "violations": list(a.violations),
        "marked_count": a.marked_count,
    }


def side_report(rep) -> dict:
    ra = rep.analysis
    cx = rep.complex
    leaves = []
    for leaf in ra.leaves:
        tr = trace_leaf(cx, leaf, ra.component_of)
        leaves.append(
            {
                "index": leaf.index,
                "orbit": leaf.orbit.label(),
                "sign": _sign(leaf.orbit.sign),
                "component": tr.component,
                "segments": [f"{i + 1}:{s}@{y}" for i, s, y, _ in tr.steps],
            }
        )
    return {
        "gluing_maps": cx.gluing_maps,
        "edge_pairs": cx.edge_pairs,
        "components": [
            {
                "id": c.id,
                "strips": [f"{i + 1}:{s}" for i, s in c.strips],
                "chi": c.chi,
                "boundary_circles": c.boundary_circles,
                "capped_genus": c.capped_genus,
                "sphere": c.is_sphere,
                "orientable": c.orientable,
                "complex_chi": c.complex_chi,
                "complex_boundary_circles": c.complex_boundary_circles,
                "compact_leaves": list(c.compact_leaves),
                "cap_leaves": list(c.cap_leaves),
            }
            for c in rep.components
        ],
        "leaves": leaves,
        "gaps": [
            {
                "rect": g.rect + 1,
                "side": g.side,
                "gap": g.gap,
                "kind": g.kind,
                "component": g.component,
                "lower": None if g.lower is None else g.lower.label(),
                "lower_compact": None if g.lower is None else g.lower.compact,
                "upper": None if g.upper is None else g.upper.label(),
                "upper_compact": None if g.upper is None else g.upper.compact,
            }
            for g in ra.gap_report()
        ],
    }


def realize_report(verdict) -> dict:
    tori = []
    if verdict.summary is not None:
        tori = [
            {
                "orbit_count": t.orbit_count,
                "orbits": [o.label() for o in t.orbits],
                "signs": [_sign(s) for s in t.signs],
                "entrance_components": list(t.entrance_components),
                "exit_components": list(t.exit_components),
            }
            for t in verdict.summary.tori
        ]
    return {
        "command": "realize",
        "realizable": verdict.realizable,
        "violations": [
            {"kind": v.kind, "side": v.side, "component": v.component, "detail": v.detail} for v in verdict.violations
        ],
        "block_tori": tori,
    }


def glue_report(report: gluing.GlueReport) -> dict:
    graph = None
    if report.graph is not None:
        graph = {
            "vertices": [f"{b}.{p}" for b, p in sorted(report.graph.nodes)],
            "edges": [f"{a[0]}.{a[1]}->{b[0]}.{b[1]}" for a, b in sorted(report.graph.edges)],
        }
    return {
        "command": "glue",
        "gluable": report.gluable,
        "transitive": report.transitive,
        "obstruction": report.obstruction,
        "graph": graph,
    }


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> int:
    path = args.path
    suffix = Path(path).suffix
    text = _read(path)
    report: dict = {"command": "validate", "path": path}
    if suffix == ".ctype":
        a = folia.analyze(folia.parse_ctype_entries(text))
        report.update(kind="ctype", valid=a.valid, violations=list(a.violations))
    elif suffix == ".bftype":
        a = folia.validate_bif(folia.parse_bftype_entries(text))
        report.update(kind="bftype", valid=a.valid, violations=list(a.violations))
    elif suffix == ".summary":
        try:
            gluing.parse_summary(text)
            report.update(kind="summary", valid=True, violations=[])
        except GTypeSyntaxError:
            raise
        except InputError as exc:
            report.update(kind="summary", valid=False, violations=[str(exc)])
    elif suffix == ".glue":
        spec = gluing.parse_gluespec(text, Path(path).parent)
        try:
            gluing.check_pairing(spec.blocks, spec.pairs)
            report.update(kind="gluespec", valid=True, violations=[])
        except InputError as exc:
            report.update(kind="gluespec", valid=False, violations=[str(exc)])
    else:
        try:
            geomtype.parse(text)
            report.update(kind="gtype", valid=True, violations=[])
        except GTypeSyntaxError:
            raise
        except InputError as exc:
            report.update(kind="gtype", valid=False, violations=[f"{type(exc).__name__}: {exc}"])
    emit(report, args.format)
    return EXIT_OK if report["valid"] else EXIT_NO


def cmd_analyze(args) -> int:
    suffix = Path(args.path).suffix
    text = _read(args.path)
    if suffix == ".ctype":
        report = ctype_report(folia.parse_ctype_entries(text))
        emit(report, args.format)
        return EXIT_OK if report["valid"] else EXIT_NO
    if suffix == ".bftype":
        report = bftype_report(folia.parse_bftype_entries(text))
        emit(report, args.format)
        return EXIT_OK if report["valid"] else EXIT_NO
    if args.max_period < 1:
        raise CliInputError("--max-period must be positive")
    emit(symdyn_report(geomtype.parse(text), args.max_period), args.format)
    return EXIT_OK


def _sides(choice: str) -> tuple[str, ...]:
    return ("stable", "unstable") if choice == "both" else (choice,)


def cmd_surface(args) -> int:
    T = _gtype(args.path)
    layout = LAYOUTS[args.layout]
    report: dict = {"command": "surface", "layout": args.layout}
    reps = {}
    for side in _sides(args.side):
        reps[side] = analyze_side(T, side, layout)
        report[side] = side_report(reps[side])
    if args.render:
        side = _sides(args.side)[0]
        _write(args.render, render_svg(reps[side].complex, reps[side].analysis))
        report["svg"] = args.render
    emit(report, args.format)
    return EXIT_OK


def cmd_realize(args) -> int:
    verdict = check_realizable_filled(_gtype(args.path), LAYOUTS[args.layout])
    emit(realize_report(verdict), args.format)
    return EXIT_OK if verdict.realizable else EXIT_NO


def cmd_glue(args) -> int:
    spec = gluing.parse_gluespec(_read(args.path), Path(args.path).parent)
    check = gluing.theorem_h_check if args.theorem_h else gluing.glue
    report = check(spec.blocks, spec.pairs)
    emit(glue_report(report), args.format)
    return EXIT_OK if report.gluable and report.transitive else EXIT_NO


def cmd_render(args) -> int:
    T = _gtype(args.path)
    rep = analyze_side(T, args.side, LAYOUTS[args.layout])
    _write(args.output, render_svg(rep.complex, rep.analysis))
    emit({"command": "render", "side": args.side, "svg": args.output}, args.format)
    return EXIT_OK


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliInputError(f"cannot write {path}: {exc.strerror}") from None


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anosov", description="Geometric types, boundary laminations and block gluing.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "compact"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a .gtype/.ctype/.bftype/.summary/.glue file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", parents=[common], help="symbolic dynamics of a type, or a ctype/bftype analysis")
    p.add_argument("path")
    p.add_argument("--max-period", type=int, default=4)
    p.set_defaults(func=cmd_analyze)

    for name, func, help_ in (
        ("surface", cmd_surface, "boundary surface census and leaves"),
        ("realize", cmd_realize, "decide realizability of the filled model block"),
        ("render", cmd_render, "draw a strip complex as SVG"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("path")
        p.add_argument("--layout", choices=sorted(LAYOUTS), default="thirds")
        if name == "surface":
            p.add_argument("--side", choices=("stable", "unstable", "both"), default="both")
            p.add_argument("--render", metavar="OUT.svg")
        if name == "render":
            p.add_argument("--side", choices=("stable", "unstable"), default="stable")
            p.add_argument("-o", "--output", required=True, metavar="OUT.svg")
        p.set_defaults(func=func)

    p = sub.add_parser("glue", parents=[common], help="glue block summaries and test transitivity")
    p.add_argument("path")
    p.add_argument("--theorem-h", action="store_true", help="require alternating elementary components")
    p.set_defaults(func=cmd_glue)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CliInputError, AnosovError) as exc:
        sys.stderr.write(f"anosov: error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
