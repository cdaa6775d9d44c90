import itertools

import pytest
from hypothesis import strategies as st

from srgci.complex import SimplicialComplex, maximal_masks
from srgci.graph import Graph
from srgci.ideals import MonomialIdeal


@st.composite
def complexes(draw, max_n=6, allow_uncovered=False):
    n = draw(st.integers(1, max_n))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6))
    if not allow_uncovered:
        covered = 0
        for m in masks:
            covered |= m
        masks = masks + [1 << v for v in range(n) if not covered >> v & 1]
    return SimplicialComplex.from_masks(n, maximal_masks(masks))


@st.composite
def graphs(draw, max_n=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


@st.composite
def ideals(draw, max_n=4, max_exp=2, max_gens=4):
    n = draw(st.integers(1, max_n))
    vec = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(n, gens)


@pytest.fixture
def delta_a():
    from srgci.complex import new_complex
    return new_complex(4, [[1, 2], [3, 4]])
