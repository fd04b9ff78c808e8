"""Per-power profiles, astab / dstab, and the theorem-level checks.

For a polymatroidal ideal I with analytic spread l = l(I), both stability
indices are < l (when l >= 2) and the sets Ass(I^k) grow with k, so the
horizon k_max = max(l - 1, 1) already shows the stable set.  Polymatroidal
ideals are normal, hence the limit depth is n - l.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .decomposition import associated_primes
from .depth import ColonNotLinear, linear_quotients
from .ideal import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    power,
    saturate_var,
    strip,
    support,
)
from .polymatroid import (
    NotPolymatroidalError,
    analytic_spread,
    has_strong_exchange,
    is_matroidal,
    is_polymatroidal,
    relation_graph,
    transversal,
)


@dataclass(frozen=True)
class Profiles:
    ass_profile: tuple[frozenset[MonomialPrime], ...]
    depth_profile: tuple[int | None, ...]
    generator_counts: tuple[int, ...]


@dataclass(frozen=True)
class Flags:
    polymatroidal: bool
    matroidal: bool
    strong_exchange: bool
    max_in_stable_ass: bool


@dataclass(frozen=True)
class StabilityReport:
    ideal: MonomialIdeal
    core: MonomialIdeal
    cofactor: Monomial
    spread: int
    k_max: int
    ass_profile: tuple[frozenset[MonomialPrime], ...]
    depth_profile: tuple[int, ...]
    generator_counts: tuple[int, ...]
    astab: int
    dstab: int
    stable_ass: frozenset[MonomialPrime]
    limit_depth: int
    flags: Flags
    checks: Mapping[str, bool] = field(default_factory=dict)

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    @property
    def consistent(self) -> bool:
        return all(self.checks.values())


@lru_cache(maxsize=4096)
def _ass(I: MonomialIdeal, method: str) -> frozenset[MonomialPrime]:
    return associated_primes(I, method=method)


@lru_cache(maxsize=4096)
def _depth(I: MonomialIdeal) -> int | None:
    if I.is_unit:
        return None
    try:
        return I.nvars - linear_quotients(I).q - 1
    except ColonNotLinear:
        return None


def _cofactor_primes(alpha: Monomial) -> frozenset[MonomialPrime]:
    return frozenset(MonomialPrime(len(alpha), (i,)) for i in support(alpha))


def profiles(I: MonomialIdeal, k_max: int, ass_method: str = "localize") -> Profiles:
    """Raw Ass and depth data for I, I^2, ..., I^k_max.

    Works for any proper monomial ideal.  A depth entry is None when that
    power has no linear-quotient certificate.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    ass, depths, counts = [], [], []
    P = I
    for k in range(1, k_max + 1):
        if k > 1:
            P = P * I
        ass.append(_ass(P, ass_method))
        depths.append(_depth(P))
        counts.append(len(P))
    return Profiles(tuple(ass), tuple(depths), tuple(counts))


def _first_index(seq, target) -> int | None:
    for k, v in enumerate(seq, start=1):
        if v == target:
            return k
    return None


def _require_polymatroidal(I: MonomialIdeal) -> None:
    if not is_polymatroidal(I):
        raise NotPolymatroidalError(
            f"{I} is not polymatroidal; stability indices are only certified there"
        )


@lru_cache(maxsize=2048)
def full_report(I: MonomialIdeal, ass_method: str = "localize") -> StabilityReport:
    """Everything about the powers of a polymatroidal ideal I.

    The gcd is stripped first (I = alpha * J); the powers of the core J carry
    all the information: Ass(I^k) = Ass(alpha) u Ass(J^k) and the depths agree.
    """
    _require_polymatroidal(I)
    n = I.nvars
    st = strip(I)
    core, alpha = st.core, st.cofactor
    spread = analytic_spread(core)
    k_max = max(spread - 1, 1)
    extra = _cofactor_primes(alpha)

    if core.is_unit:
        ass = tuple(extra for _ in range(k_max))
        depths = tuple(n - 1 for _ in range(k_max))
        counts = tuple(1 for _ in range(k_max))
    else:
        prof = profiles(core, k_max, ass_method)
        if any(d is None for d in prof.depth_profile):
            raise ColonNotLinear(f"a power of {core} lacks linear quotients")
        ass = tuple(a | extra for a in prof.ass_profile)
        depths = prof.depth_profile
        counts = prof.generator_counts

    stable = ass[-1]
    limit = n - spread
    astab_ = _first_index(ass, stable)
    dstab_ = _first_index(depths, limit)
    if dstab_ is None:
        dstab_ = _first_index(depths, depths[-1])
    maximal = MonomialPrime(n, tuple(range(1, n + 1)))
    m_inf = maximal in stable

    checks = {
        "persistence": all(a <= b for a, b in zip(ass, ass[1:])),
        "depth_nonincreasing": all(a >= b for a, b in zip(depths, depths[1:])),
        "limit_depth_is_n_minus_spread": depths[-1] == limit,
        "depth_zero_iff_max_associated": all((d == 0) == (maximal in a) for a, d in zip(ass, depths)),
        "max_stable_iff_spread_n": m_inf == (spread == n),
        "hq_bound": spread < 2 or (astab_ < spread and dstab_ < spread),
    }
    flags = Flags(
        polymatroidal=True,
        matroidal=I.is_squarefree,
        strong_exchange=has_strong_exchange(I),
        max_in_stable_ass=m_inf,
    )
    return StabilityReport(
        ideal=I,
        core=core,
        cofactor=alpha,
        spread=spread,
        k_max=k_max,
        ass_profile=ass,
        depth_profile=tuple(depths),
        generator_counts=tuple(counts),
        astab=astab_,
        dstab=dstab_,
        stable_ass=stable,
        limit_depth=limit,
        flags=flags,
        checks=checks,
    )


def astab(I: MonomialIdeal, ass_method: str = "localize") -> int:
    return full_report(I, ass_method).astab


def dstab(I: MonomialIdeal, ass_method: str = "localize") -> int:
    return full_report(I, ass_method).dstab


def _astab_or_one(I: MonomialIdeal, ass_method: str) -> int:
    # Ass of the unit ideal is empty at every power
    return 1 if I.is_unit else full_report(I, ass_method).astab


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NA = "n/a"


def _verdict(applies: bool, holds) -> Verdict:
    if not applies:
        return Verdict.NA
    return Verdict.PASS if holds() else Verdict.FAIL


@dataclass(frozen=True)
class OracleResult:
    report: StabilityReport
    claims: Mapping[str, Verdict]
    # the Herzog-Qureshi conjecture astab = dstab; False marks a counterexample
    conjecture_holds: bool
    saturation_astabs: tuple[int, ...]

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.claims.items() if v is Verdict.FAIL]

    def dump(self) -> str:
        r = self.report
        lines = [
            f"ideal {r.ideal} (n={r.nvars})",
            f"astab={r.astab} dstab={r.dstab} spread={r.spread} k_max={r.k_max}",
            f"depths={list(r.depth_profile)} saturation astabs={list(self.saturation_astabs)}",
        ]
        lines += [f"  Ass(I^{k}) = {sorted(a)}" for k, a in enumerate(r.ass_profile, 1)]
        lines += [f"  {k}: {v.value}" for k, v in self.claims.items()]
        return "\n".join(str(x) for x in lines)


class TheoremViolation(AssertionError):
    pass


def theorem_oracles(I: MonomialIdeal, ass_method: str = "localize") -> OracleResult:
    """Evaluate every theorem-level claim whose hypotheses I satisfies."""
    rep = full_report(I, ass_method)
    n, d = I.nvars, I.degree
    a, s_ = rep.astab, rep.dstab
    eq = a == s_
    matroidal = rep.flags.matroidal
    m_inf = rep.flags.max_in_stable_ass
    full = I.is_full_supported
    gcd_one = not any(I.gcd)
    maximal = MonomialPrime(n, tuple(range(1, n + 1)))
    sat = tuple(_astab_or_one(saturate_var(I, i), ass_method) for i in range(1, n + 1))
    graph = relation_graph(I)

    def product_of_primes_criterion() -> bool:
        if graph.s > d or graph.vertices != frozenset(range(1, n + 1)):
            return False
        if (graph.s == d) != (s_ == 1):
            return False
        # every generator lies in each component prime
        if not all(any(g[i - 1] for i in comp) for comp in graph.components for g in I.gens):
            return False
        product = transversal([MonomialPrime(n, tuple(c)) for c in graph.components])
        return (s_ == 1) == (product == I)

    def degree_two_q_bound() -> bool:
        q = linear_quotients(I).q
        if q < n - 2:
            return False
        return maximal in rep.ass_profile[0] or rep.depth_profile[0] == 1

    claims = {
        "degree_two_equal": _verdict(d == 2, lambda: eq),
        "matroidal_degree_two_at_most_two": _verdict(matroidal and d == 2, lambda: eq and a <= 2),
        "matroidal_four_vars_equal": _verdict(matroidal and n == 4, lambda: eq),
        "matroidal_four_vars_index_le_degree": _verdict(matroidal and n == 4, lambda: a <= d and s_ <= d),
        "four_vars_max_not_stable_equal": _verdict(n == 4 and not m_inf, lambda: eq),
        "matroidal_five_vars_equal": _verdict(matroidal and n == 5, lambda: eq),
        "strong_exchange_equal": _verdict(rep.flags.strong_exchange, lambda: eq),
        "three_vars_equal": _verdict(n == 3, lambda: eq),
        "three_vars_max_not_stable_both_one": _verdict(n == 3 and not m_inf, lambda: a == 1 and s_ == 1),
        "max_stable_dstab_le_astab": _verdict(m_inf, lambda: s_ <= a and (a != 1 or s_ == 1)),
        "saturation_astab_le_astab": _verdict(True, lambda: all(x <= a for x in sat)),
        "astab_is_max_of_saturations": _verdict(
            not m_inf or maximal in rep.ass_profile[0], lambda: a == max(sat)
        ),
        "degree_two_full_support_q_bound": _verdict(full and d == 2, degree_two_q_bound),
        "matroidal_depth_is_degree_minus_one": _verdict(matroidal and full, lambda: rep.depth_profile[0] == d - 1),
        "matroidal_product_of_primes_criterion": _verdict(matroidal and full and gcd_one, product_of_primes_criterion),
        "matroidal_five_vars_degree_three_astab_not_one": _verdict(
            matroidal and n == 5 and d == 3 and gcd_one and full, lambda: a != 1
        ),
    }
    claims.update({name: Verdict.PASS if ok else Verdict.FAIL for name, ok in rep.checks.items()})
    return OracleResult(rep, claims, eq, sat)


def require_no_failures(result: OracleResult) -> OracleResult:
    if result.failures:
        raise TheoremViolation("claims failed: " + ", ".join(result.failures) + "\n" + result.dump())
    return result
