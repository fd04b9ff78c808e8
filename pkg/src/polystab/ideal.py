"""Exact monomial and monomial-ideal arithmetic.

A monomial is a plain tuple of nonnegative ints (its exponent vector); entry
``i`` is the exponent of ``x_{i+1}``.  Python ints are unbounded, so powers
never overflow.  Variable indices in the public API are 1-based, matching the
``x1 .. xn`` notation; exponent vectors are indexed from 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple[int, ...]

# above this many rows the numpy minimalization path is used
_NUMPY_CUTOFF = 48
# bound on the size of (rows x kept x nvars) temporaries
_CHUNK_CELLS = 4_000_000


def unit(nvars: int) -> Monomial:
    return (0,) * nvars


def var(i: int, nvars: int, exp: int = 1) -> Monomial:
    """The monomial ``x_i^exp`` (``i`` is 1-based)."""
    if not 1 <= i <= nvars:
        raise ValueError(f"variable index {i} outside 1..{nvars}")
    m = [0] * nvars
    m[i - 1] = exp
    return tuple(m)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    """``u / v``; raises if ``v`` does not divide ``u``."""
    out = tuple(a - b for a, b in zip(u, v))
    if min(out, default=0) < 0:
        raise ValueError(f"{format_monomial(v)} does not divide {format_monomial(u)}")
    return out


def mono_gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def colon_mono(u: Monomial, v: Monomial) -> Monomial:
    """``u / gcd(u, v)``, the generator of ``(u) : v``."""
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def support(u: Monomial) -> frozenset[int]:
    """1-based indices of the variables dividing ``u``."""
    return frozenset(i + 1 for i, a in enumerate(u) if a)


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


def _check_monomial(u: Sequence[int], nvars: int) -> Monomial:
    u = tuple(int(a) for a in u)
    if len(u) != nvars:
        raise ValueError(f"monomial {u} has length {len(u)}, expected {nvars}")
    if any(a < 0 for a in u):
        raise ValueError(f"negative exponent in {u}")
    return u


def _minimal_small(gens: Iterable[Monomial]) -> list[Monomial]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=sum):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return kept


def minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Rows of ``arr`` not divisible by a different row (deduplicated)."""
    arr = np.unique(arr, axis=0)
    if len(arr) <= 1:
        return arr
    deg = arr.sum(axis=1)
    kept: list[np.ndarray] = []
    for d in np.unique(deg):
        block = arr[deg == d]
        if kept:
            prev = np.concatenate(kept)
            step = max(1, _CHUNK_CELLS // (len(prev) * arr.shape[1]))
            mask = np.empty(len(block), dtype=bool)
            for s in range(0, len(block), step):
                b = block[s:s + step]
                mask[s:s + step] = ~(prev[None, :, :] <= b[:, None, :]).all(axis=2).any(axis=1)
            block = block[mask]
        if len(block):
            kept.append(block)
    return np.concatenate(kept)


class MonomialIdeal:
    """A monomial ideal, stored as its minimal generating set G(I).

    Generators are kept in descending lexicographic order, which makes the
    representation canonical: two ideals are equal iff their generator tuples
    are.  The zero ideal is not representable.
    """

    __slots__ = ("nvars", "gens", "_array", "_genset")

    def __init__(self, gens: Iterable[Sequence[int]], nvars: int | None = None):
        gens = list(gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        if nvars is None:
            nvars = len(gens[0])
        checked = [_check_monomial(g, nvars) for g in gens]
        if len(checked) > _NUMPY_CUTOFF:
            rows = minimal_rows(np.array(checked, dtype=np.int64))
            minimal = [tuple(int(a) for a in r) for r in rows]
        else:
            minimal = _minimal_small(checked)
        self._set(nvars, minimal)

    def _set(self, nvars: int, minimal: Iterable[Monomial]) -> None:
        self.nvars = nvars
        self.gens = tuple(sorted(minimal, reverse=True))
        self._array = None
        self._genset = None

    @classmethod
    def _trusted(cls, nvars: int, minimal: Iterable[Monomial]) -> "MonomialIdeal":
        """Build from generators already known to be minimal."""
        obj = cls.__new__(cls)
        obj._set(nvars, minimal)
        return obj

    @classmethod
    def from_array(cls, arr: np.ndarray, nvars: int | None = None) -> "MonomialIdeal":
        nvars = arr.shape[1] if nvars is None else nvars
        rows = minimal_rows(np.asarray(arr, dtype=np.int64))
        return cls._trusted(nvars, (tuple(int(a) for a in r) for r in rows))

    @classmethod
    def unit_ideal(cls, nvars: int) -> "MonomialIdeal":
        return cls._trusted(nvars, [unit(nvars)])

    @classmethod
    def maximal(cls, nvars: int) -> "MonomialIdeal":
        return cls._trusted(nvars, [var(i, nvars) for i in range(1, nvars + 1)])

    @property
    def array(self) -> np.ndarray:
        if self._array is None:
            self._array = np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.nvars)
        return self._array

    @property
    def genset(self) -> frozenset[Monomial]:
        if self._genset is None:
            self._genset = frozenset(self.gens)
        return self._genset

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.nvars, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({str(self)}, nvars={self.nvars})"

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __contains__(self, u: Sequence[int]) -> bool:
        return contains(self, tuple(u))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def degree(self) -> int | None:
        """Common total degree of the generators, or None."""
        degs = {sum(g) for g in self.gens}
        return degs.pop() if len(degs) == 1 else None

    @property
    def is_equigenerated(self) -> bool:
        return self.degree is not None

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    @property
    def support(self) -> frozenset[int]:
        return frozenset().union(*(support(g) for g in self.gens))

    @property
    def gcd(self) -> Monomial:
        return tuple(int(a) for a in self.array.min(axis=0))

    @property
    def is_full_supported(self) -> bool:
        return len(self.support) == self.nvars


@total_ordering
@dataclass(frozen=True)
class MonomialPrime:
    """A monomial prime (x_i : i in members); members are 1-based."""

    nvars: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if any(not 1 <= i <= self.nvars for i in members):
            raise ValueError(f"prime members {members} outside 1..{self.nvars}")
        object.__setattr__(self, "members", members)

    @property
    def height(self) -> int:
        return len(self.members)

    @property
    def is_maximal(self) -> bool:
        return len(self.members) == self.nvars

    def as_ideal(self) -> MonomialIdeal:
        if not self.members:
            raise ValueError("the empty prime is not a proper ideal")
        return MonomialIdeal._trusted(self.nvars, [var(i, self.nvars) for i in self.members])

    def sort_key(self) -> tuple:
        return (len(self.members), self.members)

    def __lt__(self, other: "MonomialPrime") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" for i in self.members) + ")"


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise ValueError(f"ambient mismatch: {I.nvars} vs {J.nvars} variables")


def minimalize(gens: Iterable[Sequence[int]], nvars: int) -> MonomialIdeal:
    return MonomialIdeal(gens, nvars)


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != I.nvars:
        raise ValueError(f"monomial length {len(u)} does not match {I.nvars} variables")
    return any(divides(g, u) for g in I.gens)


def principal(u: Sequence[int]) -> MonomialIdeal:
    u = tuple(u)
    return MonomialIdeal._trusted(len(u), [u])


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if len(I) * len(J) <= _NUMPY_CUTOFF:
        return MonomialIdeal([mono_mul(g, h) for g in I.gens for h in J.gens], I.nvars)
    prods = (I.array[:, None, :] + J.array[None, :, :]).reshape(-1, I.nvars)
    return MonomialIdeal.from_array(prods, I.nvars)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^k``; ``I^0`` is the unit ideal by convention."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return MonomialIdeal.unit_ideal(I.nvars)
    out = I
    for _ in range(k - 1):
        out = multiply(out, I)
    return out


def colon_monomial(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    u = _check_monomial(u, I.nvars)
    return MonomialIdeal([colon_mono(g, u) for g in I.gens], I.nvars)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal([mono_lcm(g, h) for g in I.gens for h in J.gens], I.nvars)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    out = None
    for w in J.gens:
        c = colon_monomial(I, w)
        out = c if out is None else intersect(out, c)
    return out


def saturate_var(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """``I[i] = (I : x_i^infinity)``: drop x_i from every generator."""
    if not 1 <= i <= I.nvars:
        raise ValueError(f"variable index {i} outside 1..{I.nvars}")
    arr = I.array.copy()
    arr[:, i - 1] = 0
    return MonomialIdeal.from_array(arr, I.nvars)


def localize(I: MonomialIdeal, keep: Iterable[int]) -> MonomialIdeal:
    """Saturate every variable outside ``keep`` (1-based indices)."""
    keep = set(keep)
    arr = I.array.copy()
    for i in range(1, I.nvars + 1):
        if i not in keep:
            arr[:, i - 1] = 0
    return MonomialIdeal.from_array(arr, I.nvars)


@dataclass(frozen=True)
class IdealStats:
    support: frozenset[int]
    gcd: Monomial
    equigenerated: bool
    degree: int | None
    squarefree: bool
    full_supported: bool


def stats(I: MonomialIdeal) -> IdealStats:
    return IdealStats(
        support=I.support,
        gcd=I.gcd,
        equigenerated=I.is_equigenerated,
        degree=I.degree,
        squarefree=I.is_squarefree,
        full_supported=I.is_full_supported,
    )


@dataclass(frozen=True)
class Stripped:
    core: MonomialIdeal
    cofactor: Monomial


def strip(I: MonomialIdeal) -> Stripped:
    """Write ``I = cofactor * core`` with ``gcd(core) = 1``."""
    g = I.gcd
    if not any(g):
        return Stripped(I, g)
    core = MonomialIdeal._trusted(I.nvars, [mono_div(u, g) for u in I.gens])
    return Stripped(core, g)
