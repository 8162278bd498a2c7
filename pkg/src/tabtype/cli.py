"""Command-line interface: ``tabtype <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 output truncated by ``--limit`` or the enumeration budget.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from tabtype import io
from tabtype.bridge import (
    build_s_lambda, embed_in_staircase, nice_partial, partial_fill_count,
    partial_fill_witness, sigma_lambda, verify_bridge,
)
from tabtype.diagrams import Diagram, hook_length_formula, partition
from tabtype.errors import LimitExceeded, TabtypeError
from tabtype.exchange import full_exchange
from tabtype.permutations import count_reduced_words, type_of_permutation, vexillary_data
from tabtype.schur import classical_schur, sst_polynomial
from tabtype.tableaux import (
    balanced_type, count_tableaux, iter_tableaux, standard_type, type_of, type_statistics,
)
from tabtype.verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_TRUNCATED = 0, 1, 2, 3

COMMANDS = ("count", "enum", "type-of", "perm-type", "vexillary", "exchange", "s-lambda",
            "balanced", "standard", "schur", "partial", "stats", "verify")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--perm", help="permutation in one-line notation, e.g. 3,2,1")
    common.add_argument("--shape", help="partition as comma-separated parts, e.g. 3,2")
    common.add_argument("--in", dest="input", metavar="FILE", help="JSON file or inline JSON")
    common.add_argument("--exchange", action="store_true", help="apply the full exchange first")
    common.add_argument("--count", action="store_true", help="print only the number of tableaux")
    common.add_argument("--render", action="store_true", help="ASCII output instead of JSON")
    common.add_argument("--limit", type=int, help="stop after N items (exit 3 if more exist)")
    common.add_argument("--vars", type=int, default=2, metavar="M", help="number of variables")
    common.add_argument("--fixed", default="", help='pinned boxes, e.g. "(1,1);(1,2)"')
    common.add_argument("--suite", help="verification suite name")
    common.add_argument("--max-n", type=int, help="size bound for the suite")
    common.add_argument("--trace", action="store_true", help="log exchange steps to stderr")

    parser = _Parser(prog="tabtype", description="Tableaux of a given type.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _require(args, *names):
    for name in names:
        if getattr(args, name) in (None, ""):
            raise TabtypeError(f"{args.command} needs --{name.replace('_', '-')}")


def _type_from(args):
    """The type selected by --in, --perm or --shape, exchanged if asked."""
    if args.input:
        t = io.type_from_json(io.load_json(args.input))
    elif args.perm:
        t = type_of_permutation(io.parse_permutation(args.perm))
    elif args.shape:
        t = standard_type(Diagram.ferrers(io.parse_partition(args.shape)))
    else:
        raise TabtypeError(f"{args.command} needs --in, --perm or --shape")
    if args.exchange:
        res = full_exchange(t)
        if args.trace:
            for line in res.trace:
                print(line, file=sys.stderr)
        t = res.result
    return t


def _emit_type(t, args, out):
    if args.count:
        out.append(str(count_tableaux(t)))
    elif args.render:
        out.append(io.render_type(t))
    else:
        out.append(io.dumps(io.type_to_json(t)))


def cmd_count(args, out):
    out.append(str(count_tableaux(_type_from(args))))


def cmd_enum(args, out):
    t = _type_from(args)
    limit = args.limit
    tabs, truncated = [], False
    for tab in iter_tableaux(t):
        if limit is not None and len(tabs) >= limit:
            truncated = True
            break
        tabs.append(tab)
    if args.render:
        out.append("\n\n".join(io.render_tableau(x) for x in tabs))
    else:
        out.append(io.dumps({"tableaux": [io.tableau_to_json(x) for x in tabs],
                             "truncated": truncated}))
    return EXIT_TRUNCATED if truncated else EXIT_OK


def cmd_type_of(args, out):
    _require(args, "input")
    data = io.load_json(args.input)
    tabs = data["tableaux"] if isinstance(data, dict) and "tableaux" in data else [data]
    types = [type_of(io.tableau_from_json(x)) for x in tabs]
    for t in types:
        out.append(io.render_type(t) if args.render else io.dumps(io.type_to_json(t)))


def cmd_perm_type(args, out):
    _require(args, "perm")
    t = _type_from(args)
    if args.count:
        out.append(io.dumps({"shape": [[r, c] for r, c in t.shape],
                             "count": count_tableaux(t)}))
    else:
        _emit_type(t, args, out)


def cmd_vexillary(args, out):
    _require(args, "perm")
    data = vexillary_data(io.parse_permutation(args.perm))
    out.append(io.dumps({"vexillary": data.is_vexillary, "code": list(data.d),
                         "mu": list(data.mu), "lambda": list(data.lam)}))


def cmd_exchange(args, out):
    args.exchange = True
    _emit_type(_type_from(args), args, out)


def cmd_s_lambda(args, out):
    if args.input:
        data = io.load_json(args.input)
        lam = partition(data["shape"] if isinstance(data, dict) else data)
    else:
        _require(args, "shape")
        lam = io.parse_partition(args.shape)
    k = embed_in_staircase(lam).k
    shape = build_s_lambda(lam)
    sigma = sigma_lambda(lam)
    ok = verify_bridge(lam)
    if args.render:
        out.append(f"k = {k}\n{io.render_diagram(shape)}\nsigma = {','.join(map(str, sigma))}\n"
                   f"verified = {str(ok).lower()}")
    else:
        out.append(io.dumps({"shape": list(lam), "k": k, "diagram": io.diagram_to_json(shape),
                             "sigma": list(sigma), "verified": ok}))


def _shape_type(args, make, out):
    _require(args, "shape")
    _emit_type(make(Diagram.ferrers(io.parse_partition(args.shape))), args, out)


def cmd_balanced(args, out):
    _shape_type(args, balanced_type, out)


def cmd_standard(args, out):
    _shape_type(args, standard_type, out)


def cmd_schur(args, out):
    if args.vars < 1:
        raise TabtypeError("--vars must be positive")
    if args.shape and not args.input and not args.perm:
        poly = classical_schur(io.parse_partition(args.shape), args.vars)
    else:
        poly = sst_polynomial(_type_from(args), args.vars)
    out.append(str(poly) if args.render else io.dumps(poly.to_json()))


def cmd_partial(args, out):
    _require(args, "perm")
    s = io.parse_permutation(args.perm)
    fixed = io.parse_boxes(args.fixed)
    n_su = partial_fill_count(s, fixed)
    w = partial_fill_witness(s, fixed)
    mu = nice_partial(s, fixed)
    out.append(io.dumps({
        "count": n_su,
        "witness": list(w) if w is not None else None,
        "witness_reduced_words": count_reduced_words(w) if w is not None else 0,
        "nice": list(mu) if mu is not None else None,
        "hook_formula": hook_length_formula(mu) if mu is not None else None,
    }))


def cmd_stats(args, out):
    if args.input:
        shape = io.diagram_from_json(io.load_json(args.input))
    else:
        _require(args, "shape")
        shape = Diagram.ferrers(io.parse_partition(args.shape))
    stats = type_statistics(shape, args.limit)
    out.append(io.dumps({"types": stats.count, "mean": str(stats.mean),
                         "variance": str(stats.variance)}))


def cmd_verify(args, out):
    _require(args, "suite")
    if args.suite not in SUITES:
        raise TabtypeError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    defaults = {"oracle": 5, "balanced": 8, "hook": 7, "expectation": 5, "exchange": 6,
                "swap": 6, "bridge": 8, "equivalence": 5, "schur": 5, "partial": 5}
    res = run_suite(args.suite, args.max_n or defaults[args.suite])
    out.append(res.table())
    return EXIT_OK if res.ok else EXIT_FAIL


HANDLERS = {name: globals()["cmd_" + name.replace("-", "_")] for name in COMMANDS}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out: list[str] = []
    try:
        code = HANDLERS[args.command](args, out) or EXIT_OK
    except LimitExceeded as exc:
        print(f"tabtype: {exc}", file=sys.stderr)
        return EXIT_TRUNCATED
    except (TabtypeError, KeyError, ValueError) as exc:
        print(f"tabtype: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if out:
        print("\n".join(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
