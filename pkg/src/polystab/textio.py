"""Ideal text format and report rendering.

Grammar (whitespace-insensitive except as a term separator)::

    ideal    := ['('] monomial (',' monomial)* [')']
    monomial := term (('*' | whitespace) term)*  |  '1'
    term     := 'x' INDEX ['^' EXPONENT]

INDEX and EXPONENT are positive decimal integers.  ``#`` starts a comment
running to the end of the line.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from . import __version__
from .ideal import Monomial, MonomialIdeal, MonomialPrime, format_monomial
from .stability import StabilityReport


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class IdealDocument:
    nvars: int
    inferred: bool
    generators: tuple[Monomial, ...]
    ideal: MonomialIdeal
    warnings: tuple[str, ...] = field(default=())


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<comment>#[^\n]*)|(?P<var>x(?P<idx>\d+)(?:\s*\^\s*(?P<exp>\d+))?)"
    r"|(?P<one>1(?![0-9]))|(?P<star>\*)|(?P<comma>,)|(?P<lpar>\()|(?P<rpar>\))"
)


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_ideal(text: str, explicit_vars: int | None = None) -> IdealDocument:
    if not text.strip():
        raise ParseError("empty input", 1, 1)
    monomials: list[list[tuple[int, int, int]]] = [[]]
    units: list[bool] = [False]
    pending_star = False
    opened = closed = False
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", *_position(text, pos))
        kind = m.lastgroup if m.lastgroup not in ("idx", "exp") else "var"
        here = _position(text, pos)
        if closed and kind not in ("ws", "comment"):
            raise ParseError("text after closing parenthesis", *here)
        if kind == "var":
            if units[-1]:
                raise ParseError("'1' must stand alone", *here)
            idx = int(m.group("idx"))
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            if idx == 0:
                raise ParseError("variable indices start at 1", *here)
            if exp == 0:
                raise ParseError("exponent must be positive", *here)
            monomials[-1].append((idx, exp, pos))
            pending_star = False
        elif kind == "one":
            if monomials[-1] or units[-1]:
                raise ParseError("'1' must stand alone", *here)
            units[-1] = True
        elif kind == "star":
            if not monomials[-1] or pending_star:
                raise ParseError("'*' must join two terms", *here)
            pending_star = True
        elif kind == "comma":
            if pending_star or not (monomials[-1] or units[-1]):
                raise ParseError("empty monomial", *here)
            monomials.append([])
            units.append(False)
        elif kind == "lpar":
            if opened or monomials[0] or units[0]:
                raise ParseError("unexpected '('", *here)
            opened = True
        elif kind == "rpar":
            if not opened:
                raise ParseError("unexpected ')'", *here)
            closed = True
        pos = m.end()
    end = _position(text, len(text))
    if pending_star or not (monomials[-1] or units[-1]):
        raise ParseError("incomplete monomial", *end)
    if opened and not closed:
        raise ParseError("missing ')'", *end)

    top = max((idx for mono in monomials for idx, _, _ in mono), default=1)
    if explicit_vars is not None:
        for mono in monomials:
            for idx, _, at in mono:
                if idx > explicit_vars:
                    raise ParseError(
                        f"x{idx} exceeds the declared {explicit_vars} variables", *_position(text, at)
                    )
        n = explicit_vars
    else:
        n = top
    gens = []
    for mono in monomials:
        e = [0] * n
        for idx, exp, _ in mono:
            e[idx - 1] += exp
        gens.append(tuple(e))
    ideal = MonomialIdeal(gens, n)
    warnings = []
    if len(ideal) < len(gens):
        warnings.append(f"reduced {len(gens)} generators to {len(ideal)} minimal ones")
    return IdealDocument(n, explicit_vars is None, tuple(gens), ideal, tuple(warnings))


def format_ideal(I: MonomialIdeal) -> str:
    return str(I)


def format_primes(primes) -> str:
    return ", ".join(str(p) for p in sorted(primes)) or "-"


def _prime_lists(primes) -> list[list[int]]:
    return [list(p.members) for p in sorted(primes)]


def report_tree(report: StabilityReport) -> dict:
    """The structured report as plain JSON-ready data."""
    return {
        "tool": "polystab",
        "version": __version__,
        "vars": report.nvars,
        "generators": [format_monomial(g) for g in report.ideal.gens],
        "core": [format_monomial(g) for g in report.core.gens],
        "cofactor": format_monomial(report.cofactor),
        "spread": report.spread,
        "k_max": report.k_max,
        "generator_counts": list(report.generator_counts),
        "ass_profile": [_prime_lists(a) for a in report.ass_profile],
        "depth_profile": list(report.depth_profile),
        "astab": report.astab,
        "dstab": report.dstab,
        "stable_ass": _prime_lists(report.stable_ass),
        "limit_depth": report.limit_depth,
        "flags": {
            "polymatroidal": report.flags.polymatroidal,
            "matroidal": report.flags.matroidal,
            "strong_exchange": report.flags.strong_exchange,
            "max_in_stable_ass": report.flags.max_in_stable_ass,
            "astab_equals_dstab": report.astab == report.dstab,
        },
        "checks": dict(report.checks),
    }


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def render_report(report: StabilityReport, fmt: str = "text", notes: tuple[str, ...] = ()) -> bytes:
    if fmt in ("json", "structured"):
        tree = report_tree(report)
        if notes:
            tree["notes"] = list(notes)
        return (json.dumps(tree, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    f = report.flags
    lines = [f"ideal: {report.ideal}", f"vars: {report.nvars}"]
    lines += [f"note: {n}" for n in notes]
    if any(report.cofactor):
        lines.append(f"core: {report.core} (cofactor {format_monomial(report.cofactor)})")
    lines.append(f"k_max: {report.k_max}")
    lines.append("")
    lines.append(f"{'k':>3}  {'|G(I^k)|':>9}  {'depth':>5}  Ass(I^k)")
    for k, (a, d, c) in enumerate(
        zip(report.ass_profile, report.depth_profile, report.generator_counts), start=1
    ):
        lines.append(f"{k:>3}  {c:>9}  {d:>5}  {format_primes(a)}")
    lines.append("")
    lines.append(f"stable Ass: {format_primes(report.stable_ass)}")
    lines.append(
        f"flags: polymatroidal={_yes(f.polymatroidal)} matroidal={_yes(f.matroidal)} "
        f"strong_exchange={_yes(f.strong_exchange)} max_in_stable_ass={_yes(f.max_in_stable_ass)}"
    )
    failed = [k for k, ok in report.checks.items() if not ok]
    lines.append("checks: " + ("all passed" if not failed else "FAILED " + ", ".join(failed)))
    lines.append(f"astab = {report.astab}")
    lines.append(f"dstab = {report.dstab}")
    lines.append(f"ℓ = {report.spread}")
    lines.append(f"limit depth = {report.limit_depth}")
    if report.astab != report.dstab:
        lines.append("HERZOG-QURESHI: astab != dstab (counterexample to astab = dstab for polymatroidal ideals)")
    return ("\n".join(lines) + "\n").encode()


def parse_prime(text: str, nvars: int | None = None) -> MonomialPrime:
    """A prime written as 'x1,x3' or '1,3'; ``nvars`` defaults to the top index."""
    members = []
    for part in re.split(r"[\s,]+", text.strip().strip("()")):
        if not part:
            continue
        m = re.fullmatch(r"x?(\d+)", part)
        if m is None or int(m.group(1)) == 0:
            raise ValueError(f"bad variable {part!r} in prime {text!r}")
        members.append(int(m.group(1)))
    if not members:
        raise ValueError(f"empty prime {text!r}")
    return MonomialPrime(max(members) if nvars is None else nvars, tuple(members))
