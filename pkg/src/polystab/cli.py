"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation
(e.g. astab of a non-polymatroidal ideal), 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .decomposition import (
    UnitIdealError,
    associated_primes,
    height,
    irreducible_decomposition,
    minimal_primes,
)
from .depth import ColonNotLinear, linear_quotients
from .ideal import format_monomial, power
from .polymatroid import (
    NotPolymatroidalError,
    analytic_spread,
    has_strong_exchange,
    is_matroidal,
    is_polymatroidal,
    relation_graph,
    transversal,
    veronese_type,
)
from .search import CrossCheckError, PoolTooLarge, SearchSpace, hunt, verify_paper
from .stability import TheoremViolation, full_report
from .textio import (
    ParseError,
    format_primes,
    parse_ideal,
    parse_prime,
    render_report,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_CROSSCHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_ideal(args):
    if args.expr is not None:
        text = args.expr
    elif args.source is None:
        raise UsageError("give an ideal file, '-' for stdin, or -e EXPR")
    elif args.source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    doc = parse_ideal(text, args.vars)
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    notes = []
    if doc.inferred:
        notes.append(f"n = {doc.nvars} inferred from the highest variable index")
    return doc, tuple(notes)


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _power(doc, k):
    if k < 1:
        raise UsageError("--power must be at least 1")
    return power(doc.ideal, k)


def cmd_info(args):
    doc, notes = _read_ideal(args)
    I = doc.ideal
    lines = [f"ideal: {I}", f"vars: {I.nvars}"] + [f"note: {n}" for n in notes]
    lines += [
        f"generators: {len(I)}",
        f"degree: {I.degree if I.degree is not None else 'mixed'}",
        f"support: {', '.join(f'x{i}' for i in sorted(I.support)) or '-'}",
        f"gcd: {format_monomial(I.gcd)}",
        f"squarefree: {I.is_squarefree}",
        f"full_supported: {I.is_full_supported}",
        f"polymatroidal: {is_polymatroidal(I)}",
        f"matroidal: {is_matroidal(I)}",
        f"strong_exchange: {has_strong_exchange(I)}",
    ]
    if not I.is_unit:
        lines.append(f"minimal primes: {format_primes(minimal_primes(I))}")
        lines.append(f"height: {height(I)}")
    _out("\n".join(lines))


def cmd_ass(args):
    doc, _ = _read_ideal(args)
    P = _power(doc, args.power)
    _out(format_primes(associated_primes(P, method=args.method)))


def cmd_decompose(args):
    doc, _ = _read_ideal(args)
    P = _power(doc, args.power)
    comps = sorted(irreducible_decomposition(P), key=lambda c: (len(c.entries), c.entries))
    _out("\n".join(str(c) for c in comps))


def cmd_depth(args):
    doc, notes = _read_ideal(args)
    P = _power(doc, args.power)
    cert = linear_quotients(P)
    depth = P.nvars - cert.q - 1
    for n in notes:
        print(f"note: {n}; depth depends on the ambient ring, pass --vars to fix it", file=sys.stderr)
    _out(f"depth = {depth}\nq = {cert.q}\npd = {cert.q + 1}\norder = {cert.ordering}")


def cmd_astab(args):
    doc, _ = _read_ideal(args)
    _out(f"astab = {full_report(doc.ideal).astab}")


def cmd_dstab(args):
    doc, _ = _read_ideal(args)
    _out(f"dstab = {full_report(doc.ideal).dstab}")


def cmd_report(args):
    doc, notes = _read_ideal(args)
    rep = full_report(doc.ideal)
    sys.stdout.write(render_report(rep, args.format, notes).decode())
    return EXIT_OK if rep.consistent else EXIT_CROSSCHECK


def cmd_graph(args):
    doc, _ = _read_ideal(args)
    g = relation_graph(doc.ideal)
    lines = [
        f"vertices: {' '.join(f'x{v}' for v in sorted(g.vertices)) or '-'}",
        f"edges: {' '.join(f'x{a}-x{b}' for a, b in sorted(g.edges)) or '-'}",
        "components: " + (" | ".join(" ".join(f"x{v}" for v in sorted(c)) for c in g.components) or "-"),
        f"r = {g.r}",
        f"s = {g.s}",
    ]
    if is_polymatroidal(doc.ideal):
        lines.append(f"ℓ = {analytic_spread(doc.ideal)}")
    _out("\n".join(lines))


def cmd_veronese(args):
    caps = [int(c) for c in args.caps.split(",")] if args.caps else [args.degree] * args.vars
    _out(str(veronese_type(args.vars, args.degree, caps)))


def cmd_transversal(args):
    nvars = args.vars
    if nvars is None:
        nvars = max(parse_prime(p).nvars for p in args.primes)
    _out(str(transversal([parse_prime(p, nvars) for p in args.primes])))


def cmd_hunt(args):
    mode = "sampled" if args.samples is not None else "exhaustive"
    space = SearchSpace(args.vars, args.degree, args.cap, mode, args.samples or 0, args.seed)
    hits = hunt(space)
    if args.format == "json":
        data = {
            "space": {"vars": space.nvars, "degree": space.degree, "cap": space.cap,
                      "mode": mode, "samples": space.count, "seed": space.seed},
            "hits": [{"generators": [format_monomial(g) for g in h.ideal.gens],
                      "astab": h.astab, "dstab": h.dstab} for h in hits],
        }
        _out(json.dumps(data, indent=2, sort_keys=True))
    else:
        for h in hits:
            _out(f"astab={h.astab} dstab={h.dstab} {h.ideal}")
        _out(f"{len(hits)} ideal(s) with astab != dstab")


def cmd_verify(args):
    suite = verify_paper(quick=args.quick)
    for item in suite.items:
        first = item.detail.splitlines()[0] if item.detail else ""
        _out(f"{'PASS' if item.passed else 'FAIL'}  {item.name}  {first}")
        if not item.passed:
            _out(item.detail)
    for f in suite.findings:
        _out(f"finding: {f}")
    _out(f"{sum(i.passed for i in suite.items)}/{len(suite.items)} passed")
    return EXIT_OK if suite.passed else EXIT_CROSSCHECK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polystab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"polystab {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_ideal(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("source", nargs="?", help="ideal file, or '-' for stdin")
        sp.add_argument("-e", "--expr", help="ideal given inline, e.g. 'x1*x2, x2*x3'")
        sp.add_argument("--vars", type=int, help="ambient number of variables")
        sp.set_defaults(func=func)
        return sp

    with_ideal("info", cmd_info, "generator statistics and recognizers")
    sp = with_ideal("ass", cmd_ass, "associated primes of a power")
    sp.add_argument("--power", type=int, default=1)
    sp.add_argument("--method", choices=("split", "box", "localize"), default="split")
    sp = with_ideal("decompose", cmd_decompose, "irredundant irreducible decomposition")
    sp.add_argument("--power", type=int, default=1)
    sp = with_ideal("depth", cmd_depth, "depth of R/I^k via linear quotients")
    sp.add_argument("--power", type=int, default=1)
    with_ideal("astab", cmd_astab, "index of Ass stability")
    with_ideal("dstab", cmd_dstab, "index of depth stability")
    sp = with_ideal("report", cmd_report, "full stability report")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    with_ideal("graph", cmd_graph, "linear relation graph")

    sp = sub.add_parser("veronese", help="ideal of Veronese type")
    sp.add_argument("--vars", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--caps", help="comma-separated exponent caps (default: degree)")
    sp.set_defaults(func=cmd_veronese)

    sp = sub.add_parser("transversal", help="product of monomial primes")
    sp.add_argument("primes", nargs="+", help="a prime as 'x1,x2'")
    sp.add_argument("--vars", type=int)
    sp.set_defaults(func=cmd_transversal)

    sp = sub.add_parser("hunt", help="search polymatroidal ideals with astab != dstab")
    sp.add_argument("--vars", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--cap", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_hunt)

    sp = sub.add_parser("verify-paper", help="run the reference fixtures and theorem checks")
    sp.add_argument("--quick", action="store_true", help="smaller corpora")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args) or EXIT_OK
    except (UsageError, ParseError, PoolTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotPolymatroidalError, UnitIdealError, ColonNotLinear) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (CrossCheckError, TheoremViolation) as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
