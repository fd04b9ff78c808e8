import itertools

from hypothesis import settings, strategies as st

from polystab import MonomialIdeal
from polystab.search import SearchSpace, enumerate_matroidal, sample_polymatroidal

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def monomials(draw, nvars, max_exp=3):
    return tuple(draw(st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars)))


@st.composite
def ideals(draw, max_vars=4, max_exp=3, max_gens=5, proper=True):
    n = draw(st.integers(1, max_vars))
    gens = draw(st.lists(monomials(n, max_exp), min_size=1, max_size=max_gens))
    if proper:
        gens = [g for g in gens if any(g)] or [tuple([1] + [0] * (n - 1))]
    return MonomialIdeal(gens, n)


@st.composite
def ideal_pairs(draw, max_vars=3, max_exp=3, max_gens=4):
    n = draw(st.integers(1, max_vars))
    pick = st.lists(monomials(n, max_exp), min_size=1, max_size=max_gens)
    return MonomialIdeal(draw(pick), n), MonomialIdeal(draw(pick), n)


def _small_polymatroidal():
    out = []
    for n, d, cap in [(2, 2, 2), (2, 3, 3), (3, 2, 2), (3, 3, 2), (4, 2, 1), (4, 3, 1)]:
        out.extend(sample_polymatroidal(SearchSpace(n, d, cap)))
    return out


SMALL_POLYMATROIDAL = _small_polymatroidal()
SMALL_MATROIDAL = [
    I for n in range(2, 5) for d in range(1, n + 1) for I in enumerate_matroidal(n, d)
]

polymatroidal_ideals = st.sampled_from(SMALL_POLYMATROIDAL)
polymatroidal_pairs = polymatroidal_ideals.flatmap(
    lambda I: st.tuples(
        st.just(I), st.sampled_from([J for J in SMALL_POLYMATROIDAL if J.nvars == I.nvars])
    )
)


def all_monomials(top):
    return itertools.product(*(range(a + 1) for a in top))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
