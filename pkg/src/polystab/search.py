"""Corpus generation, counterexample hunting and the reference-fixture suite.

Sampling is reproducible: ``random.Random(seed)`` (Mersenne Twister) draws a
subset size uniformly from 2..|pool| and then a uniform subset of that size
with ``Random.sample``; candidates failing the exchange test are discarded,
as are repeats, until ``count`` distinct ideals have been emitted or
``count * MAX_TRIES_PER_HIT`` draws were made.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .decomposition import height
from .depth import depth_of_quotient
from .fixtures import (
    bipartite_matroid_5,
    gcd_heavy_ideal,
    hq_family,
    max_ideal_square,
    squarefree_veronese_4_3,
    triangle,
)
from .ideal import Monomial, MonomialIdeal, saturate_var
from .polymatroid import is_polymatroidal
from .stability import Verdict, full_report, theorem_oracles

EXHAUSTIVE_POOL_LIMIT = 24
MAX_TRIES_PER_HIT = 200


class PoolTooLarge(ValueError):
    pass


class CrossCheckError(RuntimeError):
    pass


def monomial_pool(nvars: int, degree: int, cap: int) -> tuple[Monomial, ...]:
    """All degree-``degree`` monomials with every exponent <= cap, descending lex."""
    pool = [
        e for e in itertools.product(range(min(cap, degree) + 1), repeat=nvars)
        if sum(e) == degree
    ]
    return tuple(sorted(pool, reverse=True))


@dataclass(frozen=True)
class SearchSpace:
    nvars: int
    degree: int
    cap: int
    mode: str = "exhaustive"
    count: int = 0
    seed: int = 0

    def __post_init__(self):
        if min(self.nvars, self.degree, self.cap) < 1:
            raise ValueError("nvars, degree and cap must be positive")
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and len(self.pool) > EXHAUSTIVE_POOL_LIMIT:
            raise PoolTooLarge(
                f"pool of {len(self.pool)} monomials exceeds {EXHAUSTIVE_POOL_LIMIT}; use sampled mode"
            )

    @property
    def pool(self) -> tuple[Monomial, ...]:
        return monomial_pool(self.nvars, self.degree, self.cap)


class ExchangeTable:
    """Exchange test for subsets of a fixed equigenerated pool, as bitmasks.

    For generators u, v and a variable i with deg_i(u) > deg_i(v), the
    witnesses x_j (u / x_i) (with deg_j(u) < deg_j(v)) have exponents bounded
    by those of v, so they lie in the pool; the exchange condition for
    (u, v, i) is that the subset meets the mask of these witnesses.
    """

    def __init__(self, pool: tuple[Monomial, ...]):
        self.pool = pool
        index = {m: k for k, m in enumerate(pool)}
        n = len(pool[0]) if pool else 0
        self.requirements: list[list[tuple[int, ...]]] = []
        for u in pool:
            row = []
            for v in pool:
                masks = []
                if u != v:
                    for i in range(n):
                        if u[i] <= v[i]:
                            continue
                        m = 0
                        for j in range(n):
                            if u[j] < v[j]:
                                w = list(u)
                                w[i] -= 1
                                w[j] += 1
                                m |= 1 << index[tuple(w)]
                        masks.append(m)
                row.append(tuple(masks))
            self.requirements.append(row)

    def members(self, mask: int) -> list[int]:
        return [k for k in range(len(self.pool)) if mask >> k & 1]

    def accepts(self, mask: int) -> bool:
        idx = self.members(mask)
        req = self.requirements
        for a in idx:
            ra = req[a]
            for b in idx:
                for m in ra[b]:
                    if not mask & m:
                        return False
        return True

    def ideal(self, mask: int) -> MonomialIdeal:
        n = len(self.pool[0])
        return MonomialIdeal._trusted(n, [self.pool[k] for k in self.members(mask)])


def enumerate_matroidal(nvars: int, degree: int, gcd_one: bool = False) -> Iterator[MonomialIdeal]:
    """Every full-supported matroidal ideal of the given degree in ``nvars`` variables.

    ``gcd_one`` additionally drops ideals with a nontrivial common factor.
    Order is by subset bitmask over the descending-lex squarefree pool.
    """
    if not 1 <= degree <= nvars:
        raise ValueError("degree must lie in 1..nvars")
    pool = monomial_pool(nvars, degree, 1)
    if len(pool) > EXHAUSTIVE_POOL_LIMIT:
        raise PoolTooLarge(f"pool of {len(pool)} squarefree monomials")
    return _matroidal_masks(ExchangeTable(pool), gcd_one)


def _matroidal_masks(table: ExchangeTable, gcd_one: bool) -> Iterator[MonomialIdeal]:
    pool = table.pool
    for mask in range(1, 1 << len(pool)):
        if not table.accepts(mask):
            continue
        I = table.ideal(mask)
        if not I.is_full_supported:
            continue
        if gcd_one and any(I.gcd):
            continue
        yield I


def sample_polymatroidal(space: SearchSpace) -> Iterator[MonomialIdeal]:
    pool = space.pool
    table = ExchangeTable(pool)
    if space.mode == "exhaustive":
        for mask in range(1, 1 << len(pool)):
            if table.accepts(mask):
                yield table.ideal(mask)
        return
    rng = random.Random(space.seed)
    seen: set[int] = set()
    lo = min(2, len(pool))
    for _ in range(space.count * MAX_TRIES_PER_HIT):
        if len(seen) >= space.count:
            return
        size = rng.randint(lo, len(pool))
        mask = sum(1 << k for k in rng.sample(range(len(pool)), size))
        if mask in seen or not table.accepts(mask):
            continue
        seen.add(mask)
        yield table.ideal(mask)


@dataclass(frozen=True)
class HuntHit:
    ideal: MonomialIdeal
    astab: int
    dstab: int


def hunt(
    space: SearchSpace,
    progress: Callable[[int, MonomialIdeal], None] | None = None,
) -> list[HuntHit]:
    """Polymatroidal ideals in ``space`` with astab != dstab.

    Each hit is recomputed with the box oracle in place of the localized
    Ass computation; any disagreement raises CrossCheckError.
    """
    hits = []
    for count, I in enumerate(sample_polymatroidal(space), start=1):
        if progress is not None:
            progress(count, I)
        rep = full_report(I)
        if rep.astab == rep.dstab:
            continue
        again = full_report(I, "box")
        if (again.astab, again.dstab) != (rep.astab, rep.dstab):
            raise CrossCheckError(
                f"{I}: localized ({rep.astab}, {rep.dstab}) vs box ({again.astab}, {again.dstab})"
            )
        hits.append(HuntHit(I, rep.astab, rep.dstab))
    return hits


@dataclass(frozen=True)
class SuiteItem:
    name: str
    passed: bool
    detail: str


@dataclass
class SuiteReport:
    items: list[SuiteItem] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.items.append(SuiteItem(name, bool(passed), detail))


def _indices(I: MonomialIdeal) -> str:
    rep = full_report(I)
    return f"astab={rep.astab} dstab={rep.dstab} spread={rep.spread}"


def _fixture_checks(suite: SuiteReport, max_family: int) -> None:
    I = gcd_heavy_ideal()
    rep = full_report(I)
    suite.add(
        "gcd_heavy_ideal",
        rep.astab == rep.dstab == 2 and height(I) == 1,
        f"{_indices(I)} height={height(I)}",
    )

    I = squarefree_veronese_4_3()
    rep = full_report(I)
    suite.add(
        "squarefree_veronese_4_3",
        rep.astab == rep.dstab == 3 and height(I) == 2 and not any(I.gcd),
        f"{_indices(I)} height={height(I)}",
    )

    I = max_ideal_square()
    depth = depth_of_quotient(I)
    suite.add("max_ideal_square_depth", depth == 0, f"depth={depth}")

    I = triangle()
    sats = [full_report(saturate_var(I, i)).astab for i in range(1, 4)]
    suite.add(
        "triangle_saturations",
        full_report(I).astab == 2 and sats == [1, 1, 1],
        f"{_indices(I)} saturation astabs={sats}",
    )

    for n in range(4, max_family + 1):
        I = hq_family(n)
        rep = full_report(I)
        ok = is_polymatroidal(I) and rep.dstab == 1 and rep.astab == n - 2
        suite.add(f"hq_family_n{n}", ok and rep.astab != rep.dstab, _indices(I))

    I = bipartite_matroid_5()
    rep = full_report(I)
    suite.add("bipartite_matroid_5", rep.astab == rep.dstab, _indices(I))


def _corpus_checks(suite: SuiteReport, max_vars: int) -> None:
    for n in range(2, max_vars + 1):
        for d in range(1, n + 1):
            failures, count = [], 0
            for I in enumerate_matroidal(n, d):
                count += 1
                res = theorem_oracles(I)
                if res.failures:
                    failures.append(res.dump())
                if not res.conjecture_holds:
                    failures.append(f"astab != dstab for matroidal {I}")
                rep = res.report
                if rep.astab > d or rep.dstab > d:
                    suite.findings.append(f"index exceeds degree: {I} {_indices(I)}")
                if res.claims["matroidal_five_vars_degree_three_astab_not_one"] is Verdict.FAIL:
                    suite.findings.append(f"astab = 1 for {I}")
            suite.add(
                f"matroidal_corpus_n{n}_d{d}",
                not failures,
                f"{count} ideals" + ("" if not failures else "\n" + "\n".join(failures)),
            )


def verify_paper(quick: bool = False) -> SuiteReport:
    """Run the bundled fixtures and the theorem oracles over matroidal corpora.

    ``quick`` stops the family at n = 5 and the corpora at n = 4.
    """
    suite = SuiteReport()
    _fixture_checks(suite, 5 if quick else 6)
    _corpus_checks(suite, 4 if quick else 5)
    return suite
