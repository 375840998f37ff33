"""Command-line front end.

Exit codes: 0 success, 1 certification found mismatches, 2 parse or arity
error, 3 element cap exceeded, 4 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import geodesic, metric, oracle, plmap, render
from .forest import ArityError, DiagramSyntaxError, ForestDiagram, evaluate_word, from_text, to_text
from .words import WordSyntaxError, format_word, parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_CAP, EXIT_DOMAIN = 0, 1, 2, 3, 4


def _element(n: int, text: str) -> ForestDiagram:
    """A word, or a diagram in text form (``-`` reads standard input)."""
    if text == "-":
        text = sys.stdin.read()
    if text.lstrip().startswith("F("):
        d = from_text(text)
        if d.n != n:
            raise ArityError(f"diagram is over F({d.n}) but -n is {n}")
        return d
    return evaluate_word(n, parse_word(text, n))


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_length(args) -> int:
    d = _element(args.n, args.input)
    l0, l1 = metric.length_parts(d)
    labelling = metric.label_spaces(d)
    payload = {
        "l0": l0,
        "l1": l1,
        "length": l0 + l1,
        "labels": [{"gap": g, "top": str(s.top), "bottom": str(s.bottom), "weight": s.weight} for g, s in sorted(labelling.spaces.items())],
    }
    _emit(args, payload, [f"l0={l0} l1={l1} l={l0 + l1}", *labelling.lines()])
    return EXIT_OK


def cmd_labels(args) -> int:
    d = _element(args.n, args.input)
    labelling = metric.label_spaces(d)
    payload = {"labels": [{"gap": g, "top": str(s.top), "bottom": str(s.bottom), "weight": s.weight} for g, s in sorted(labelling.spaces.items())]}
    _emit(args, payload, labelling.lines())
    return EXIT_OK


def cmd_geodesic(args) -> int:
    d = _element(args.n, args.input)
    word = geodesic.geodesic_word(d)
    text = format_word(word)
    _emit(args, {"word": text, "length": len(word)}, [text])
    return EXIT_OK


def cmd_deadend(args) -> int:
    d = _element(args.n, args.input)
    brute = geodesic.is_dead_end_brute(d)
    structural = geodesic.is_dead_end_structural(d)
    depth = geodesic.dead_end_depth(d) if brute else None
    verdict = f"dead end, depth {depth}" if brute else "not a dead end"
    lines = [verdict]
    if structural != brute:
        lines.append(f"structural conditions say {'dead end' if structural else 'not a dead end'}")
    _emit(args, {"dead_end": brute, "structural": structural, "depth": depth}, lines)
    return EXIT_OK


def cmd_depth(args) -> int:
    d = _element(args.n, args.input)
    depth = geodesic.dead_end_depth(d)
    _emit(args, {"depth": depth}, [str(depth)])
    return EXIT_OK


def cmd_reduce(args) -> int:
    d = _element(args.n, args.input)
    _emit(args, {"diagram": to_text(d), "length": metric.length(d)}, [to_text(d)])
    return EXIT_OK


def cmd_render(args) -> int:
    d = _element(args.n, args.input)
    if args.format == "dot":
        out = render.to_dot(d)
    elif args.format == "pl":
        out = str(plmap.diagram_to_plmap(d))
    else:
        out = render.to_ascii(d)
    _emit(args, {"format": args.format, "output": out}, [out])
    return EXIT_OK


def cmd_certify(args) -> int:
    report = oracle.certify(args.n, args.radius, cap=args.cap, plmap_radius=args.plmap_radius)
    lines = [f"F({args.n}) radius {args.radius}: {report['elements']} elements, spheres {report['sphere_sizes']}"]
    for rep in report["reports"]:
        status = "ok" if rep["passed"] else "FAIL"
        lines.append(f"  {rep['name']}: {rep['checked']} checked, {rep['failures']} mismatches [{status}]")
        for example in rep["examples"][:1]:
            lines.extend("      " + line for line in example.splitlines())
    lines.append(f"{report['mismatches']} mismatches")
    _emit(args, report, lines)
    return EXIT_OK if report["mismatches"] == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fnforest", description="Forest diagrams and word length in F(n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, element=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", type=int, required=True, help="arity (n >= 2)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if element:
            p.add_argument("input", help='a word such as "x1 x0^-2", a diagram text, or - for stdin')
        p.set_defaults(func=func)
        return p

    add("length", cmd_length, "word length and its parts, with the labelled spaces")
    add("labels", cmd_labels, "labelled marked spaces")
    add("geodesic", cmd_geodesic, "a minimum-length word")
    add("deadend", cmd_deadend, "dead-end verdict and depth")
    add("depth", cmd_depth, "depth of a dead end")
    add("reduce", cmd_reduce, "canonical reduced diagram")
    p = add("render", cmd_render, "draw the diagram")
    p.add_argument("--format", choices=("ascii", "dot", "pl"), default="ascii")
    p = add("certify", cmd_certify, "check the formula against the Cayley graph", element=False)
    p.add_argument("-r", "--radius", type=int, required=True)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="maximum ball size")
    p.add_argument("--plmap-radius", type=int, default=None, help="also check the PL realization on this ball")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if args.n < 2:
        print(f"error: invalid arity {args.n}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except (WordSyntaxError, DiagramSyntaxError, ArityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except oracle.BallOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except geodesic.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
