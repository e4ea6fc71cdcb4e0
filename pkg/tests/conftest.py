import hypothesis
import hypothesis.strategies as st
import pytest

from nmrel import NmRelation, NmSet

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")

STEPS = 2**20

# dyadic values keep 1 - x exact, like the seeded generator
components = st.one_of(
    st.sampled_from([0.0, 0.5, 1.0]),
    st.integers(0, STEPS).map(lambda k: k / STEPS),
)
triples = st.tuples(components, components, components)


@st.composite
def nmsets(draw, universe=("a", "b", "c"), dimension=None):
    p = dimension or draw(st.integers(1, 3))
    return NmSet({x: draw(st.lists(triples, min_size=p, max_size=p)) for x in universe})


@st.composite
def set_tuples(draw, k, universe=("a", "b", "c")):
    """k sets sharing one dimension."""
    p = draw(st.integers(1, 3))
    return tuple(draw(nmsets(universe, dimension=p)) for _ in range(k))


@st.composite
def relations(draw, universe=("a", "b", "c"), dimension=None):
    p = dimension or draw(st.integers(1, 2))
    keys = [(x, y) for x in universe for y in universe]
    present = draw(st.lists(st.sampled_from(keys), unique=True))
    pairs = {k: draw(st.lists(triples, min_size=p, max_size=p)) for k in present}
    return NmRelation(pairs, universe, universe, dimension=p)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
