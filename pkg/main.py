#!/usr/bin/env python3
"""
main.py

Tree arithmetic - command-line entry point.

Wherever a tree is expected an integer n may be given instead; it stands
for the set of all trees with n internal vertices.

Usage:
    python main.py enum 3                       # the five trees of degree 3
    python main.py add 1 1                      # 1 + 1 = 2
    python main.py left "((. .) .)" 1           # ⊣ of two trees
    python main.py mul "((. .) .)" "(. (. .))"  # product by substitution
    python main.py interval "((. .) .)" "(. (. .))"
    python main.py poset 4 --dot                # Hasse diagram as Graphviz
    python main.py coords loday 3 --json        # Loday points
    python main.py canopy "(. ((. .) .))"       # -> -+
    python main.py section -+                   # -> (. ((. .) .))
    python main.py word "((. .) (. .))"         # canonical word in 1
    python main.py poly 2                       # x^2 as a polynomial
    python main.py check theorem --max-degree 5

Exit codes: 0 ok, 1 failed check, 2 usage, 3 malformed tree or canopy,
4 degree cap exceeded, 5 other domain error, 6 bad configuration,
130 interrupted.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, str(Path(__file__).resolve().parent))

from src.arithmetic import decompose, embed, multiply, op_left, op_right, render_word, tree_sum
from src.checks import CheckContext, suite_names
from src.config import configure, get_settings
from src.dendriform import poly_of_int
from src.errors import ArborError, CapExceededError, exit_code_for
from src.geometry import Canopy, CoordinateMap, canopy, export_coords, section
from src.runner import CheckRunner, format_report
from src.tamari import hasse, interval, to_dot, to_json
from src.trees import TreeSet, parse, render

OPERATIONS = {
    "add": tree_sum,
    "left": op_left,
    "right": op_right,
    "mul": multiply,
}


def resolve(text: str) -> TreeSet:
    """A tree literal as a singleton, or an integer n as all trees of degree n."""
    stripped = text.strip()
    if stripped.isascii() and stripped.isdigit():
        n = int(stripped)
        cap = get_settings().enum_cap
        if n > cap:
            raise CapExceededError("integer argument", n, cap)
        return embed(n)
    return TreeSet.singleton(parse(text))


def _print_treeset(result: TreeSet, as_json: bool) -> None:
    if as_json:
        print(result.to_json())
    else:
        print(result.render_lines(), end="")


def cmd_enum(args) -> int:
    cap = get_settings().enum_cap
    if args.degree > cap:
        raise CapExceededError("enum", args.degree, cap)
    _print_treeset(TreeSet.full(args.degree), args.json)
    return 0


def cmd_operation(args) -> int:
    s, t = resolve(args.s), resolve(args.t)
    _print_treeset(OPERATIONS[args.command](s, t), args.json)
    return 0


def cmd_interval(args) -> int:
    _print_treeset(interval(parse(args.a), parse(args.b)), args.json)
    return 0


def cmd_poset(args) -> int:
    diagram = hasse(args.degree)
    if args.dot:
        print(to_dot(diagram), end="")
    elif args.json:
        print(to_json(diagram))
    else:
        for lower, upper in diagram.cover_edges:
            print(f"{render(lower)} -> {render(upper)}")
    return 0


def cmd_coords(args) -> int:
    fmt = "json" if args.json else "csv"
    print(export_coords(args.degree, CoordinateMap(args.map), fmt), end="")
    return 0


def cmd_canopy(args) -> int:
    print(canopy(parse(args.tree)))
    return 0


def cmd_section(args) -> int:
    signs = Canopy.from_string(args.signs)
    degree = len(signs) + 1
    cap = get_settings().enum_cap
    if degree > cap:
        raise CapExceededError("section", degree, cap)
    print(render(section(signs)))
    return 0


def cmd_word(args) -> int:
    print(render_word(decompose(parse(args.tree))))
    return 0


def cmd_poly(args) -> int:
    p = poly_of_int(args.n)
    if args.json:
        print(json.dumps(p.to_dict(), indent=2))
    else:
        print(p)
    return 0


def cmd_check(args) -> int:
    context = CheckContext.from_settings(max_degree=args.max_degree)
    settings = get_settings()
    cap = min(settings.enum_cap, settings.hasse_cap)
    if context.max_degree > cap:
        raise CapExceededError("check --max-degree", context.max_degree, cap)
    runner = CheckRunner(context, data_dir=args.data_dir, verbose=args.verbose)
    run = runner.run_suite(args.suite, save=args.save)
    print(format_report(run), end="")
    return 0 if run.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Arithmetic of planar binary trees",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py add 1 1                Both trees of degree 2
  python main.py poset 3 --dot          The pentagon as Graphviz
  python main.py check all              Every invariant suite
        """,
    )
    parser.add_argument("--enum-cap", type=int, default=None, help="Override the enumeration cap")
    parser.add_argument("--hasse-cap", type=int, default=None, help="Override the Hasse diagram cap")

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    enum_parser = subparsers.add_parser("enum", help="All trees of a degree")
    enum_parser.add_argument("degree", type=int)
    enum_parser.add_argument("--json", action="store_true", help="JSON output")
    enum_parser.set_defaults(handler=cmd_enum)

    for name, help_text in [
        ("add", "s + t"),
        ("left", "s ⊣ t"),
        ("right", "s ⊢ t"),
        ("mul", "s × t"),
    ]:
        op_parser = subparsers.add_parser(name, help=help_text)
        op_parser.add_argument("s", help="Tree literal or integer")
        op_parser.add_argument("t", help="Tree literal or integer")
        op_parser.add_argument("--json", action="store_true", help="JSON output")
        op_parser.set_defaults(handler=cmd_operation)

    interval_parser = subparsers.add_parser("interval", help="Trees between a and b in the Tamari order")
    interval_parser.add_argument("a")
    interval_parser.add_argument("b")
    interval_parser.add_argument("--json", action="store_true", help="JSON output")
    interval_parser.set_defaults(handler=cmd_interval)

    poset_parser = subparsers.add_parser("poset", help="Hasse diagram of the Tamari order")
    poset_parser.add_argument("degree", type=int)
    poset_format = poset_parser.add_mutually_exclusive_group()
    poset_format.add_argument("--dot", action="store_true", help="Graphviz DOT output")
    poset_format.add_argument("--json", action="store_true", help="Vertices and edge index pairs")
    poset_parser.set_defaults(handler=cmd_poset)

    coords_parser = subparsers.add_parser("coords", help="Coordinates of all trees of a degree")
    coords_parser.add_argument("map", choices=[m.value for m in CoordinateMap])
    coords_parser.add_argument("degree", type=int)
    coords_format = coords_parser.add_mutually_exclusive_group()
    coords_format.add_argument("--csv", action="store_true", help="CSV output (default)")
    coords_format.add_argument("--json", action="store_true", help="JSON output")
    coords_parser.set_defaults(handler=cmd_coords)

    canopy_parser = subparsers.add_parser("canopy", help="Canopy of a tree")
    canopy_parser.add_argument("tree")
    canopy_parser.set_defaults(handler=cmd_canopy)

    section_parser = subparsers.add_parser("section", help="The tree σ(signs)")
    section_parser.add_argument("signs", help="String over - and +")
    section_parser.set_defaults(handler=cmd_section)

    word_parser = subparsers.add_parser("word", help="Canonical word of a tree in copies of 1")
    word_parser.add_argument("tree")
    word_parser.set_defaults(handler=cmd_word)

    poly_parser = subparsers.add_parser("poly", help="x^n as a sum of monomials")
    poly_parser.add_argument("n", type=int)
    poly_parser.add_argument("--json", action="store_true", help="JSON output")
    poly_parser.set_defaults(handler=cmd_poly)

    check_parser = subparsers.add_parser("check", help="Run an invariant suite")
    check_parser.add_argument("suite", choices=suite_names())
    check_parser.add_argument("--max-degree", type=int, default=None, help="Largest degree checked exhaustively")
    check_parser.add_argument("--verbose", action="store_true", help="Progress on stderr")
    check_parser.add_argument("--save", action="store_true", help="Save the report under data/reports")
    check_parser.add_argument("--data-dir", default="./data", help="Base directory for saved reports")
    check_parser.set_defaults(handler=cmd_check)

    return parser


def _guard_signs(argv: List[str]) -> List[str]:
    """Keep a sign string such as "-+" after `section` from being read as an option."""
    argv = list(argv)
    if "section" in argv:
        i = argv.index("section") + 1
        if i < len(argv) and argv[i] and set(argv[i]) <= {"-", "+"} and argv[i] != "--":
            argv.insert(i, "--")
    return argv


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(_guard_signs(argv))

    if not args.command:
        parser.print_help()
        return 2

    try:
        overrides = {
            name: value
            for name, value in (("enum_cap", args.enum_cap), ("hasse_cap", args.hasse_cap))
            if value is not None
        }
        if overrides:
            configure(**overrides)
        return args.handler(args)
    except ArborError as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)
    except RecursionError:
        print("error: tree is nested too deeply for this command", file=sys.stderr)
        return 5
    except KeyboardInterrupt:
        print("\ninterrupted", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
