"""Stability of associated primes and depth for powers of monomial ideals."""

__version__ = "0.1.0"

from .ideal import (  # noqa: E402
    MonomialIdeal,
    MonomialPrime,
    colon_ideal,
    colon_monomial,
    contains,
    intersect,
    minimalize,
    multiply,
    power,
    saturate_var,
    stats,
    strip,
)
from .decomposition import (  # noqa: E402
    associated_primes,
    box_oracle_ass,
    height,
    irreducible_decomposition,
    max_ideal_associated,
    minimal_primes,
)
from .depth import ColonNotLinear, depth_of_quotient, linear_quotients, projective_dimension  # noqa: E402
from .polymatroid import (  # noqa: E402
    analytic_spread,
    has_strong_exchange,
    is_matroidal,
    is_polymatroidal,
    relation_graph,
    transversal,
    veronese_type,
)
from .stability import astab, dstab, full_report, profiles, theorem_oracles  # noqa: E402
