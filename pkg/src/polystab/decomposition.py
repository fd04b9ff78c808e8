"""Associated and minimal primes of monomial ideals.

Three independent routes to Ass(I):

* ``split``: irredundant irreducible decomposition by splitting
  generators into pure powers; Ass(I) is the set of radicals of its components.
* ``box``: brute force over monomials ``m`` in the exponent box of I,
  collecting every colon ``(I : m)`` that is generated by variables.
* ``localize``: a prime P is associated iff the maximal ideal of K[P] is
  associated to the localization of I at P; each such test is decided by a
  linear-quotient depth certificate when one exists, else by splitting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .depth import ColonNotLinear, linear_quotients
from .ideal import Monomial, MonomialIdeal, MonomialPrime, localize, var

AssSet = frozenset  # frozenset[MonomialPrime]

_BOX_CHUNK_CELLS = 2_000_000


class UnitIdealError(ValueError):
    pass


def _proper(I: MonomialIdeal) -> None:
    if I.is_unit:
        raise UnitIdealError("the unit ideal has no associated primes")


def ordered(primes) -> list[MonomialPrime]:
    """Canonical order: by height, then by member list."""
    return sorted(primes)


@dataclass(frozen=True)
class IrreducibleComponent:
    """The irreducible ideal (x_i^a_i : i in S); entries are (i, a_i), 1-based."""

    nvars: int
    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_vector(cls, v: Monomial) -> "IrreducibleComponent":
        return cls(len(v), tuple((i + 1, a) for i, a in enumerate(v) if a))

    @property
    def vector(self) -> Monomial:
        v = [0] * self.nvars
        for i, a in self.entries:
            v[i - 1] = a
        return tuple(v)

    @property
    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.nvars, tuple(i for i, _ in self.entries))

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._trusted(self.nvars, [var(i, self.nvars, a) for i, a in self.entries])

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in self.entries) + ")"


def _maximal_rows(rows: np.ndarray, against: np.ndarray) -> np.ndarray:
    """Rows of ``rows`` not dominated (componentwise <=) by another row of
    ``rows`` or by any row of ``against``; duplicates collapse."""
    rows = np.unique(rows, axis=0)
    if not len(rows):
        return rows
    pool = np.concatenate([against, rows]) if len(against) else rows
    step = max(1, _BOX_CHUNK_CELLS // (len(pool) * rows.shape[1]))
    keep = np.empty(len(rows), dtype=bool)
    for s in range(0, len(rows), step):
        r = rows[s:s + step]
        le = (r[:, None, :] <= pool[None, :, :]).all(axis=2)
        eq = (r[:, None, :] == pool[None, :, :]).all(axis=2)
        keep[s:s + step] = ~(le & ~eq).any(axis=1)
    return rows[keep]


def _irreducible_vectors(I: MonomialIdeal) -> np.ndarray:
    """Exponent vectors of the irredundant irreducible components.

    Splitting a generator g into its pure powers, C + (g) is the intersection
    of the irreducible ideals C + (x_i^g_i); monomial ideals form a
    distributive lattice, so adding the generators of I one at a time to the
    decomposition of the previous ones yields a decomposition of I.  An
    absent variable is stored as a huge exponent, so that C is contained in
    D exactly when D <= C componentwise; redundant components (those
    containing another) are pruned after every generator.
    """
    n = I.nvars
    inf = np.iinfo(np.int64).max
    gens = sorted(I.gens, key=lambda g: (sum(g), tuple(-a for a in g)))
    comps = np.empty((0, n), dtype=np.int64)
    for g in gens:
        garr = np.array(g, dtype=np.int64)
        if not len(comps):
            fresh = []
            for i in np.flatnonzero(garr):
                row = np.full(n, inf, dtype=np.int64)
                row[i] = garr[i]
                fresh.append(row)
            comps = np.array(fresh)
            continue
        inside = (comps <= garr).any(axis=1)
        kept, hit = comps[inside], comps[~inside]
        if not len(hit):
            continue
        fresh = []
        for i in np.flatnonzero(garr):
            rows = hit.copy()
            rows[:, i] = garr[i]
            fresh.append(rows)
        fresh = _maximal_rows(np.concatenate(fresh), kept)
        comps = np.concatenate([kept, fresh])
    comps[comps == inf] = 0
    return comps


def irreducible_decomposition(I: MonomialIdeal) -> frozenset[IrreducibleComponent]:
    """Irredundant irreducible decomposition of a proper monomial ideal."""
    _proper(I)
    return frozenset(
        IrreducibleComponent.from_vector(tuple(int(a) for a in row))
        for row in _irreducible_vectors(I)
    )


def _split_ass(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    return frozenset(c.radical for c in irreducible_decomposition(I))


def box_oracle_ass(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Collect every prime colon (I : m) over the box 0 <= m <= max exponents."""
    _proper(I)
    G = I.array
    n = I.nvars
    top = G.max(axis=0)
    axes = [np.arange(a + 1) for a in top]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    step = max(1, _BOX_CHUNK_CELLS // (len(G) * n))
    found: set[tuple[int, ...]] = set()
    for s in range(0, len(grid), step):
        M = grid[s:s + step]
        Q = np.maximum(G[None, :, :] - M[:, None, :], 0)
        deg = Q.sum(axis=2)
        outside = (deg > 0).all(axis=1)
        Q, deg = Q[outside], deg[outside]
        lin = ((Q == 1) & (deg == 1)[:, :, None]).any(axis=1)
        covered = ((Q > 0) & lin[:, None, :]).any(axis=2).all(axis=1)
        for row in np.unique(lin[covered], axis=0):
            found.add(tuple(int(i) + 1 for i in np.flatnonzero(row)))
    return frozenset(MonomialPrime(n, m) for m in found)


def _subsets(members: list[int]):
    for r in range(1, len(members) + 1):
        yield from itertools.combinations(members, r)


def max_ideal_associated(I: MonomialIdeal, method: str = "auto") -> bool:
    """Whether the maximal ideal (x_1, ..., x_n) is associated to I.

    ``auto`` uses a linear-quotient certificate (depth 0 iff m is associated)
    and falls back to the decomposition when none exists.
    """
    _proper(I)
    if method == "auto":
        try:
            return linear_quotients(I).q == I.nvars - 1
        except ColonNotLinear:
            method = "split"
    target = MonomialPrime(I.nvars, tuple(range(1, I.nvars + 1)))
    if method == "split":
        return target in _split_ass(I)
    if method == "box":
        return target in box_oracle_ass(I)
    raise ValueError(f"unknown method {method!r}")


def _top_component_present(J: MonomialIdeal, keep: tuple[int, ...]) -> bool:
    """Is (x_i : i in keep) associated to J, an ideal living in those variables?"""
    try:
        return linear_quotients(J).q == len(keep) - 1
    except ColonNotLinear:
        return MonomialPrime(J.nvars, keep) in _split_ass(J)


def localized_ass(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Ass(I) one candidate prime at a time, via localization."""
    _proper(I)
    supp = sorted(I.support)
    found = []
    for keep in _subsets(supp):
        J = localize(I, keep)
        if J.is_unit or J.support != frozenset(keep):
            continue
        if _top_component_present(J, keep):
            found.append(MonomialPrime(I.nvars, keep))
    return frozenset(found)


def associated_primes(I: MonomialIdeal, method: str = "split") -> frozenset[MonomialPrime]:
    """Ass(R/I) in the ambient ring of I; ``method`` is split, box or localize."""
    if method == "split":
        _proper(I)
        return _split_ass(I)
    if method == "box":
        return box_oracle_ass(I)
    if method == "localize":
        return localized_ass(I)
    raise ValueError(f"unknown method {method!r}")


def minimal_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Inclusion-minimal variable sets meeting the support of every generator."""
    _proper(I)
    supports = {frozenset(i + 1 for i, a in enumerate(g) if a) for g in I.gens}
    # drop supports that contain another: they are hit automatically
    edges = [s for s in supports if not any(t < s for t in supports)]
    found: list[frozenset[int]] = []
    for keep in _subsets(sorted(I.support)):
        cand = frozenset(keep)
        if any(f <= cand for f in found):
            continue
        if all(cand & e for e in edges):
            found.append(cand)
    return frozenset(MonomialPrime(I.nvars, tuple(f)) for f in found)


def height(I: MonomialIdeal) -> int:
    return min(p.height for p in minimal_primes(I))
