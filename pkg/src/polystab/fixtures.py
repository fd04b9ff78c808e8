"""Reference ideals with known stability data."""

from __future__ import annotations

from .ideal import MonomialIdeal, power
from .polymatroid import veronese_type


def gcd_heavy_ideal() -> MonomialIdeal:
    """(x1^3 x2 x3, x1^2 x2^2 x3, x1^3 x2^2): height 1, astab = dstab = 2."""
    return MonomialIdeal([(3, 1, 1), (2, 2, 1), (3, 2, 0)], 3)


def squarefree_veronese_4_3() -> MonomialIdeal:
    """I(3; 1,1,1,1): gcd 1, height 2, astab = dstab = 3."""
    return veronese_type(4, 3, (1, 1, 1, 1))


def max_ideal_square() -> MonomialIdeal:
    """(x1, x2, x3)^2: degree 2 with depth R/I = 0."""
    return power(MonomialIdeal.maximal(3), 2)


def triangle() -> MonomialIdeal:
    """Edge ideal of a triangle: astab = 2 while every saturation has astab 1."""
    return veronese_type(3, 2, (1, 1, 1))


def hq_counterexample() -> MonomialIdeal:
    """Polymatroidal in 4 variables with dstab = 1 < astab = 2."""
    return hq_family(4)


def hq_family(n: int) -> MonomialIdeal:
    """Polymatroidal ideal of degree n-1 in n >= 4 variables with dstab = 1, astab = n-2.

    Generators: x1 * prod(x_l : l in T) for T an (n-2)-subset of {2..n};
    x_j * prod(x_l : l in T) for such T and j in T; and x2 x3 ... xn.
    For n = 4 this coincides with I(3; 1,1,1,1) + I(3; 0,2,2,2), but the two
    differ from n = 5 on (the Veronese sum is then not polymatroidal).
    """
    if n < 4:
        raise ValueError("the family starts at n = 4")
    rest = range(1, n)
    gens = {tuple([0] + [1] * (n - 1))}
    for omit in rest:
        base = [0] * n
        for l in rest:
            if l != omit:
                base[l] = 1
        gens.add(tuple([1] + base[1:]))
        for j in rest:
            if j != omit:
                g = list(base)
                g[j] += 1
                gens.add(tuple(g))
    return MonomialIdeal(gens, n)


def bipartite_matroid_5() -> MonomialIdeal:
    """(x1,x2)-(x3,x4,x5) matroid ideal with x3 x4 x5 and x1 x2 x_i excluded."""
    gens = [
        (1, 0, 1, 1, 0), (1, 0, 0, 1, 1), (1, 0, 1, 0, 1),
        (0, 1, 1, 1, 0), (0, 1, 0, 1, 1), (0, 1, 1, 0, 1),
    ]
    return MonomialIdeal(gens, 5)
