"""Command-line entry point: eval, straighten, poset dump, verify."""

from __future__ import annotations

import argparse
import json
import sys

from .parser import AmbientError, ParseError, eval_expr
from .posets import PosetOrder, hasse_edges
from .straighten import NotInSpan, RankDeficient, expand_in_standard_basis, format_expansion
from .suites import SUITES, ConfigError, SuiteConfig, dump_report, run_suite


def _mn(text):
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n, got {text!r}")
    return m, n


def _all_or_int(text):
    return "all" if text == "all" else int(text)


def _write_json(path, text):
    if path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_eval(args):
    m, n = args.mn if args.mn else (None, None)
    print(eval_expr(args.expr, m, n))
    return 0


def cmd_straighten(args):
    m, n = args.mn
    order = PosetOrder.parse(args.order, m, n)
    p = eval_expr(args.product, m, n)
    terms = expand_in_standard_basis(p, order)
    print(format_expansion(terms))
    if args.json:
        _write_json(args.json, json.dumps({
            "schema": 1, "order": order.label(), "m": m, "n": n, "product": args.product,
            "expansion": [{"coeff": str(c), "monomial": [list(J) for J in mono]} for c, mono in terms],
        }, indent=2, sort_keys=True))
    return 0


def cmd_poset_dump(args):
    m, n = args.mn
    order = PosetOrder.parse(args.order, m, n)
    edges = hasse_edges(order)
    print(json.dumps({
        "schema": 1, "order": order.label(), "m": m, "n": n,
        "elements": [list(x) for x in order.elements()],
        "edges": [[list(a), list(b)] for a, b in edges],
    }, indent=2, sort_keys=True))
    return 0


def cmd_verify(args):
    m, n = args.mn
    order, s = "cyclic", args.s
    if args.order is not None:
        if args.order == "std":
            order = "std"
        elif args.order.startswith("cyclic:"):
            s = _all_or_int(args.order.split(":", 1)[1])
        else:
            raise ConfigError(f"bad --order {args.order!r}")
    cfg = SuiteConfig(args.suite, m, n, s=s, a=args.a, degree=args.degree, t=args.t, order=order)
    report = run_suite(cfg)
    summ = report["summary"]
    for r in report["records"]:
        if not r["passed"] or args.verbose:
            status = "PASS" if r["passed"] else "FAIL"
            print(f"{status} {r['check']} {json.dumps(r['inputs'], sort_keys=True)}"
                  + (f" witness={r['witness']}" if r["witness"] else ""))
    print(f"{cfg.suite}: {summ['passed']}/{summ['total']} passed, "
          f"{summ['failed']} failed ({report['wall_time']}s)")
    if args.json:
        _write_json(args.json, dump_report(report))
    return 1 if summ["failed"] else 0


def build_parser():
    p = argparse.ArgumentParser(prog="qgrass", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="normal form of an expression")
    e.add_argument("expr")
    e.add_argument("--mn", type=_mn)
    e.set_defaults(func=cmd_eval)

    st = sub.add_parser("straighten", help="expand a product in standard monomials")
    st.add_argument("--mn", type=_mn, required=True)
    st.add_argument("--order", default="std")
    st.add_argument("--product", required=True)
    st.add_argument("--json")
    st.set_defaults(func=cmd_straighten)

    po = sub.add_parser("poset", help="poset utilities")
    posub = po.add_subparsers(dest="poset_command", required=True)
    dump = posub.add_parser("dump", help="Hasse diagram as a JSON edge list")
    dump.add_argument("--mn", type=_mn, required=True)
    dump.add_argument("--order", default="std")
    dump.set_defaults(func=cmd_poset_dump)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--mn", type=_mn, default=(2, 4))
    v.add_argument("--order")
    v.add_argument("--s", type=_all_or_int, default="all")
    v.add_argument("--a", type=_all_or_int, default="all")
    v.add_argument("--degree", type=int, default=2)
    v.add_argument("--t", type=int)
    v.add_argument("--json")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, AmbientError, ConfigError, ValueError, NotInSpan, RankDeficient) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
