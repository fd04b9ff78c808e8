"""Polymatroidal ideals: exchange tests, constructors, relation graph, spread."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .ideal import Monomial, MonomialIdeal, MonomialPrime, multiply


class NotPolymatroidalError(ValueError):
    pass


def _swap(u: Monomial, i: int, j: int) -> Monomial:
    """x_j * (u / x_i), 0-based indices."""
    w = list(u)
    w[i] -= 1
    w[j] += 1
    return tuple(w)


def is_polymatroidal(I: MonomialIdeal) -> bool:
    """Equigenerated with the (symmetric) exchange property.

    For u, v in G(I) and i with deg_i(u) > deg_i(v) there must be j with
    deg_j(u) < deg_j(v) and x_j (u / x_i) in I.  In an equigenerated ideal a
    monomial of the generating degree lies in I iff it is a generator.
    """
    if not I.is_equigenerated:
        return False
    gens = I.genset
    n = I.nvars
    for u, v in itertools.permutations(I.gens, 2):
        ups = [j for j in range(n) if u[j] < v[j]]
        for i in range(n):
            if u[i] > v[i] and not any(_swap(u, i, j) in gens for j in ups):
                return False
    return True


def is_matroidal(I: MonomialIdeal) -> bool:
    return I.is_squarefree and is_polymatroidal(I)


def has_strong_exchange(I: MonomialIdeal) -> bool:
    if not I.is_equigenerated:
        return False
    gens = I.genset
    n = I.nvars
    for u, v in itertools.permutations(I.gens, 2):
        downs = [i for i in range(n) if u[i] > v[i]]
        ups = [j for j in range(n) if u[j] < v[j]]
        if any(_swap(u, i, j) not in gens for i in downs for j in ups):
            return False
    return True


def veronese_type(nvars: int, degree: int, caps: Sequence[int]) -> MonomialIdeal:
    """I(d; a_1..a_n): every degree-d monomial with deg_{x_j} <= a_j."""
    caps = tuple(caps)
    if len(caps) != nvars:
        raise ValueError(f"expected {nvars} caps, got {len(caps)}")
    if degree < 1 or min(caps) < 0:
        raise ValueError("degree must be positive and caps nonnegative")
    if sum(caps) < degree:
        raise ValueError(f"caps {caps} admit no monomial of degree {degree}")
    gens = [
        e for e in itertools.product(*(range(min(a, degree) + 1) for a in caps))
        if sum(e) == degree
    ]
    return MonomialIdeal._trusted(nvars, gens)


def transversal(primes: Sequence[MonomialPrime]) -> MonomialIdeal:
    """Product of monomial primes."""
    if not primes:
        raise ValueError("need at least one prime")
    out = primes[0].as_ideal()
    for p in primes[1:]:
        out = multiply(out, p.as_ideal())
    return out


@dataclass(frozen=True)
class RelationGraph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    components: tuple[frozenset[int], ...]

    @property
    def r(self) -> int:
        return len(self.vertices)

    @property
    def s(self) -> int:
        return len(self.components)


def relation_graph(I: MonomialIdeal) -> RelationGraph:
    """Linear relation graph: {i, j} is an edge iff x_i u = x_j v for u, v in G(I)."""
    edges = set()
    for u, v in itertools.combinations(I.gens, 2):
        diff = [a - b for a, b in zip(u, v)]
        pos = [k for k, d in enumerate(diff) if d > 0]
        neg = [k for k, d in enumerate(diff) if d < 0]
        # x_i u = x_j v  <=>  u - v = e_j - e_i
        if len(pos) == 1 and len(neg) == 1 and diff[pos[0]] == 1 and diff[neg[0]] == -1:
            edges.add((neg[0] + 1, pos[0] + 1) if neg[0] < pos[0] else (pos[0] + 1, neg[0] + 1))
    g = nx.Graph(sorted(edges))
    comps = tuple(
        sorted((frozenset(c) for c in nx.connected_components(g)), key=lambda c: min(c))
    )
    return RelationGraph(frozenset(g.nodes), frozenset(edges), comps)


def analytic_spread(I: MonomialIdeal) -> int:
    """l(I) = r - s + 1 from the relation graph (polymatroidal ideals only)."""
    if not is_polymatroidal(I):
        raise NotPolymatroidalError(f"{I} is not polymatroidal")
    g = relation_graph(I)
    return g.r - g.s + 1
