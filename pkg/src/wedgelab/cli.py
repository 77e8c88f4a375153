"""``wedgelab`` command line: thin wrappers around the library with text or JSON output."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .blocks import build_block_graph, count_blocks_formula, partition_blocks
from .dynamics import classify_2set, phi_poly
from .errors import InvariantViolation
from .field import FieldCtx, parse_field
from .harness import ARTIN_PAIR, cmd_artin, cmd_csv, cmd_dot, cmd_table3
from .polyring import as_irreducible, format_poly, parse_poly
from .quadratic import construct_periodic_sets, counting_formulas, minimal_orders
from .search import PolySet, build_graph, enumerate_stable_2sets, orbit
from .wedge import wedge, wedge_oracle


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _field(args) -> FieldCtx:
    if not args.field:
        raise InputError("--field is required")
    return parse_field(args.field)


def _poly(ctx: FieldCtx, text: Optional[str], name: str):
    if text is None:
        raise InputError(f"--{name} is required")
    return parse_poly(ctx, text)


def _set(ctx: FieldCtx, text: Optional[str]) -> PolySet:
    if not text:
        raise InputError("--set is required")
    return PolySet(parse_poly(ctx, part) for part in text.split(";") if part.strip())


def cmd_wedge(args):
    ctx = _field(args)
    f, g = _poly(ctx, args.f, "f"), as_irreducible(_poly(ctx, args.g, "g"))
    h, r = wedge(f, g)
    data = {"field": ctx.spec(), "f": format_poly(f), "g": format_poly(g), "h": format_poly(h), "r": r}
    if ctx.is_finite:
        data["oracle"] = "agree" if wedge_oracle(f, g) == h else "DISAGREE"
        if data["oracle"] != "agree":
            raise InvariantViolation("matrix wedge and Frobenius oracle disagree")
    text = f"h = {data['h']}\nr = {r}\n" + (f"oracle: {data['oracle']}\n" if "oracle" in data else "")
    return data, text


def cmd_phi(args):
    ctx = _field(args)
    f = _poly(ctx, args.f, "f")
    p = phi_poly(f, args.n)
    return {"field": ctx.spec(), "f": format_poly(f), "n": args.n, "phi": format_poly(p)}, format_poly(p) + "\n"


def cmd_classify(args):
    ctx = _field(args)
    f, g = _poly(ctx, args.f, "f"), _poly(ctx, args.g, "g")
    t = classify_2set(as_irreducible(f), as_irreducible(g))
    sink = format_poly(t.sink) if t.sink is not None else None
    text = t.tag + (f" (sink {sink})" if sink else "") + "\n"
    return {"field": ctx.spec(), "f": format_poly(f), "g": format_poly(g), "type": t.tag, "sink": sink}, text


def cmd_blocks(args):
    ctx = _field(args)
    blocks = partition_blocks(ctx, args.deg)
    data = {
        "field": ctx.spec(),
        "degree": args.deg,
        "blocks": [{"rep": format_poly(b.rep), "size": len(b), "disc": ctx.fmt(b.disc)} for b in blocks],
    }
    try:
        data["formula"] = count_blocks_formula(ctx.q, args.deg)
    except ValueError:
        data["formula"] = None
    lines = [f"{len(blocks)} blocks"]
    lines += [f"  {d['rep']}  size {d['size']}  disc {d['disc']}" for d in data["blocks"]]
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(cmd_dot(build_block_graph(ctx, args.deg)))
    return data, "\n".join(lines) + "\n"


def cmd_stable2(args):
    ctx = _field(args)
    rep = enumerate_stable_2sets(ctx, args.deg)
    c = rep.counts
    lines = [f"I={c['I']} II={c['II']} III={c['III']}"]
    lines += [f"  {format_poly(f)} ; {format_poly(g)}  {t.tag}" for f, g, t in rep.sets]
    return rep.to_json(), "\n".join(lines) + "\n"


def cmd_orbit(args):
    ctx = _field(args)
    info = orbit(_set(ctx, args.set), args.max_steps)
    data = {
        "field": ctx.spec(),
        "transient": info.transient,
        "period": info.period,
        "collapsed": info.collapsed,
        "cycle": [[format_poly(f) for f in s] for s in info.cycle],
    }
    text = f"transient {info.transient}\n" + ("collapsed\n" if info.collapsed else f"period {info.period}\n")
    return data, text


def cmd_graph(args):
    ctx = _field(args)
    g = build_graph(_set(ctx, args.set))
    dot = cmd_dot(g)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    arcs = [
        {"from": format_poly(a), "to": format_poly(b), "omega": sorted(format_poly(f) for f in om)}
        for (a, b), om in g.arcs.items()
    ]
    return {"field": ctx.spec(), "vertices": [format_poly(v) for v in g.vertices], "arcs": arcs}, dot


def cmd_periodic(args):
    ctx = _field(args)
    cycles = construct_periodic_sets(ctx, args.period)
    data = {
        "field": ctx.spec(),
        "period": args.period,
        "orders": minimal_orders(args.period),
        "cycles": [
            {
                "zeta": ctx.fmt(c.zeta),
                "order": c.order,
                "pairs": [[format_poly(f), format_poly(g)] for f, g in c.pairs],
            }
            for c in cycles
        ],
    }
    lines = [f"{len(cycles)} cycle(s) of period {args.period}"]
    for c in data["cycles"]:
        lines.append(f"zeta={c['zeta']} (order {c['order']})")
        lines += [f"  {t}: {f} ; {g}" for t, (f, g) in enumerate(c["pairs"])]
    return data, "\n".join(lines) + "\n"


def cmd_counts(args):
    ctx = _field(args)
    cf = counting_formulas(ctx.q)
    data = {
        "q": cf.q,
        "N_I": cf.N_I,
        "N_II": cf.N_II,
        "N_III": cf.N_III,
        "periodic_upper_bound": cf.periodic_upper_bound,
        "minimal_period_count": {t: cf.minimal_period_count(t) for t in range(1, args.max_period + 1)},
    }
    text = "\n".join(f"{k} = {v}" for k, v in data.items()) + "\n"
    return data, text


def cmd_table3_cli(args):
    rep = cmd_table3(args.max_size)
    data = [{"p": r.p, "n": r.n, "E": r.size, "I": r.I, "II": r.II, "III": r.III} for r in rep.rows]
    return data, rep.format()


def cmd_artin_cli(args):
    f = [int(c) for c in args.f.split(",")] if args.f else ARTIN_PAIR[0]
    g = [int(c) for c in args.g.split(",")] if args.g else ARTIN_PAIR[1]
    rows, dist = cmd_artin(f, g, args.primes, args.csv)
    data = {
        "primes": dist.total,
        "transients": dist.transients,
        "steps": [[str(x), str(j)] for x, j in dist.steps[:20]],
    }
    return data, dist.format() if args.csv else cmd_csv(rows) + dist.format()


def build_parser() -> argparse.ArgumentParser:
    def flags(default):
        # sub-commands use SUPPRESS so a flag given before the command survives
        par = argparse.ArgumentParser(add_help=False)
        par.add_argument("--field", default=default, help='"p", "p^k" or "Q"')
        par.add_argument("--json", action="store_true", default=default if default is not None else False,
                         help="emit JSON")
        par.add_argument("--out", default=default, help="write output to a file instead of stdout")
        return par

    common = flags(argparse.SUPPRESS)
    parser = _Parser(prog="wedgelab", description="Wedge operator workbench", parents=[flags(None)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("wedge", cmd_wedge, "compute f |> g")
    sp.add_argument("--f")
    sp.add_argument("--g")
    sp = add("phi", cmd_phi, "dynatomic polynomial of f")
    sp.add_argument("--f")
    sp.add_argument("--n", type=int, required=True)
    sp = add("classify", cmd_classify, "type of the 2-set {f, g}")
    sp.add_argument("--f")
    sp.add_argument("--g")
    sp = add("blocks", cmd_blocks, "partition E(q^n) into blocks")
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--dot")
    sp = add("stable2", cmd_stable2, "all stable 2-sets of degree n")
    sp.add_argument("--deg", type=int, required=True)
    sp = add("orbit", cmd_orbit, "orbit of a set under the self-image map")
    sp.add_argument("--set")
    sp.add_argument("--max-steps", type=int, default=100_000)
    sp = add("graph", cmd_graph, "graph of a polynomial set in DOT")
    sp.add_argument("--set")
    sp.add_argument("--dot")
    sp = add("periodic", cmd_periodic, "periodic quadratic 2-sets")
    sp.add_argument("--period", type=int, required=True)
    sp = add("counts", cmd_counts, "closed-form counts for odd q")
    sp.add_argument("--max-period", type=int, default=6)
    sp = add("table3", cmd_table3_cli, "stable 2-set table over prime fields")
    sp.add_argument("--max-size", type=int, default=500)
    sp = add("artin", cmd_artin_cli, "normalized periods over admissible primes")
    sp.add_argument("--primes", type=int, default=2000)
    sp.add_argument("--csv", help="CSV output path")
    sp.add_argument("--f", help="ascending integer coefficients, e.g. -1,1,1")
    sp.add_argument("--g", help="ascending integer coefficients")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text = args.func(args)
    except InvariantViolation as exc:
        print(f"wedgelab: invariant violation: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError, ZeroDivisionError) as exc:
        print(f"wedgelab: {exc}", file=sys.stderr)
        return 1
    out = json.dumps(data, indent=2, sort_keys=True) + "\n" if args.json else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
