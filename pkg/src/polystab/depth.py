"""Depth and projective dimension of R/I via linear quotients.

For an ordering u_1, ..., u_t of G(I) with non-decreasing degrees, the prefix
colon (u_1, ..., u_{j-1}) : u_j is generated by the monomials
u_i / gcd(u_i, u_j).  When every such colon is generated by variables, the
length of the minimal free resolution of R/I is q(I) + 1, where q(I) is the
largest number of variables in a prefix colon, so depth R/I = n - q(I) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ideal import Monomial, MonomialIdeal


class ColonNotLinear(ValueError):
    """No tried generator ordering gives variable-generated prefix colons."""


@dataclass(frozen=True)
class LinearQuotientCertificate:
    order: tuple[Monomial, ...]
    q_values: tuple[int, ...]
    q: int
    ordering: str


def revlex_key(u: Monomial) -> tuple:
    # ascending sort on this key = degree first, then descending revlex
    # (u > v iff the last nonzero entry of u - v is negative)
    return (sum(u), tuple(reversed(u)))


def lex_key(u: Monomial) -> tuple:
    return (sum(u), tuple(-a for a in u))


_ORDERINGS = (("revlex", revlex_key), ("lex", lex_key))


def _certify(gens: tuple[Monomial, ...], key, name: str) -> LinearQuotientCertificate:
    order = tuple(sorted(gens, key=key))
    G = np.array(order, dtype=np.int32)
    q_values = []
    for j in range(1, len(order)):
        Q = G[:j] - G[j]
        np.maximum(Q, 0, out=Q)
        deg = Q.sum(axis=1)
        lin = Q[deg == 1].any(axis=0)
        if not lin.any() or not Q[:, lin].any(axis=1).all():
            raise ColonNotLinear(f"{name}: colon at step {j + 1} is not generated by variables")
        q_values.append(int(lin.sum()))
    return LinearQuotientCertificate(order, tuple(q_values), max(q_values, default=0), name)


def linear_quotients(I: MonomialIdeal) -> LinearQuotientCertificate:
    """Certificate of linear quotients, trying revlex then lex order.

    Raises ColonNotLinear if neither ordering works.
    """
    if I.is_unit:
        raise ValueError("the unit ideal has no quotient to measure")
    failures = []
    for name, key in _ORDERINGS:
        try:
            return _certify(I.gens, key, name)
        except ColonNotLinear as exc:
            failures.append(str(exc))
    raise ColonNotLinear("; ".join(failures))


def depth_of_quotient(I: MonomialIdeal, nvars: int | None = None) -> int:
    """depth R/I = n - q(I) - 1 over ``nvars`` variables (default: I's ambient)."""
    n = I.nvars if nvars is None else nvars
    return n - linear_quotients(I).q - 1


def projective_dimension(I: MonomialIdeal) -> int:
    """Projective dimension of R/I."""
    return linear_quotients(I).q + 1
