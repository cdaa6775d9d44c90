import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from srgci.complex import faces, new_complex
from srgci.errors import NotDegreeTwo, NotSquarefree, UnitIdeal, ZeroIdeal
from srgci.ideals import (
    MonomialIdeal,
    complex_of,
    degree_complex,
    divides,
    edge_graph,
    format_ideal,
    ideal_from_dict,
    is_complete_intersection,
    max_exponents,
    power,
    radical,
    stanley_reisner_ideal,
)

from conftest import complexes, ideals

DELTA_A_GENS = ((0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0))


def sup(n, *supports):
    return MonomialIdeal.from_supports(n, supports)


def brute_degree_complex_faces(ideal, a):
    """Direct evaluation of the face predicate over subsets of [n] minus G_a."""
    neg = {j for j in range(ideal.n) if a[j] < 0}
    free = [j for j in range(ideal.n) if j not in neg]
    out = set()
    for k in range(len(free) + 1):
        for f in itertools.combinations(free, k):
            outside = [j for j in range(ideal.n) if j not in neg and j not in f]
            if all(any(g[j] > a[j] for j in outside) for g in ideal.generators):
                out.add(tuple(j + 1 for j in f))
    return out


def signed_degrees(ideal, lo=-2, extra=2):
    rho = max_exponents(ideal)
    return st.tuples(*[st.integers(lo, r + extra) for r in rho])


class TestConstruction:
    def test_minimalized(self):
        i = MonomialIdeal(2, ((1, 1), (1, 0), (2, 3)))
        assert i.generators == ((1, 0),)

    def test_zero_and_unit(self):
        with pytest.raises(ZeroIdeal):
            MonomialIdeal(2, ())
        with pytest.raises(UnitIdeal):
            MonomialIdeal(2, ((0, 0), (1, 0)))

    def test_bad_vector(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, ((1, 0, 0),))

    def test_format_and_round_trip(self):
        i = MonomialIdeal(2, ((2, 3),))
        assert format_ideal(i) == "(X1^2*X2^3)"
        assert ideal_from_dict(i.to_dict()) == i

    @given(ideals())
    def test_generators_are_minimal(self, i):
        for u, v in itertools.permutations(i.generators, 2):
            assert not divides(u, v)

    @given(ideals(), st.data())
    def test_box_membership(self, i, data):
        b = data.draw(st.tuples(*[st.integers(0, 4)] * i.n))
        assert i.box.contains(b) == any(divides(g, b) for g in i.generators)


class TestStanleyReisner:
    def test_delta_a(self, delta_a):
        assert stanley_reisner_ideal(delta_a).generators == DELTA_A_GENS

    def test_matroid_example(self):
        i = sup(5, (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5))
        assert complex_of(i).facets == ((1, 2, 5), (3, 4))

    def test_round_trip_delta_a(self, delta_a):
        assert complex_of(stanley_reisner_ideal(delta_a)) == delta_a

    def test_simplex_has_zero_ideal(self):
        with pytest.raises(ZeroIdeal):
            stanley_reisner_ideal(new_complex(3, [[1, 2, 3]]))

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefree):
            complex_of(MonomialIdeal(2, ((2, 0),)))

    @given(complexes())
    def test_complex_round_trip(self, cx):
        assume(len(cx.facets) > 1 or len(cx.facets[0]) < cx.n)
        assert complex_of(stanley_reisner_ideal(cx)) == cx

    @given(ideals(max_exp=1))
    def test_ideal_round_trip(self, i):
        assert stanley_reisner_ideal(complex_of(i)) == i


class TestPower:
    def test_principal(self):
        assert power(MonomialIdeal(2, ((1, 1),)), 2).generators == ((2, 2),)

    def test_delta_a_square(self, delta_a):
        sq = power(stanley_reisner_ideal(delta_a), 2)
        assert len(sq.generators) == 9
        assert max_exponents(sq) == (2, 2, 2, 2)

    def test_first_power(self, delta_a):
        i = stanley_reisner_ideal(delta_a)
        assert power(i, 1) == i

    def test_rejects_zero_exponent(self, delta_a):
        with pytest.raises(ValueError):
            power(stanley_reisner_ideal(delta_a), 0)

    @settings(max_examples=40)
    @given(ideals(max_n=3, max_gens=3), st.integers(1, 2), st.integers(1, 2))
    def test_power_of_power(self, i, a, b):
        assert power(power(i, a), b) == power(i, a * b)

    @given(ideals(), st.integers(1, 3))
    def test_radical_of_power(self, i, ell):
        assert radical(power(i, ell)) == radical(i)


class TestRadicalAndGraphs:
    def test_radical_examples(self, delta_a):
        i = stanley_reisner_ideal(delta_a)
        assert radical(power(i, 2)) == i
        assert radical(i) == i
        assert radical(MonomialIdeal(2, ((2, 3),))).generators == ((1, 1),)

    def test_edge_graph_and_ci(self, delta_a):
        i = stanley_reisner_ideal(delta_a)
        assert edge_graph(i).sorted_edges() == [(1, 3), (1, 4), (2, 3), (2, 4)]
        assert not is_complete_intersection(i)
        assert is_complete_intersection(sup(4, (1, 3), (2, 4)))

    def test_not_degree_two(self):
        with pytest.raises(NotDegreeTwo):
            edge_graph(sup(3, (1, 2, 3)))

    def test_max_exponents(self):
        assert max_exponents(MonomialIdeal(2, ((2, 3),))) == (2, 3)


class TestDegreeComplex:
    def test_non_flc_example(self):
        i = sup(3, (1, 3), (2, 3))
        assert degree_complex(i, (0, 0, -1)).is_empty_complex

    def test_zero_degree_is_the_complex(self, delta_a):
        assert degree_complex(stanley_reisner_ideal(delta_a), (0, 0, 0, 0)) == delta_a

    def test_large_degree_excludes_complement_of_g(self, delta_a):
        i = power(stanley_reisner_ideal(delta_a), 2)
        a = (-1, 2, 3, 2)
        assert (2, 3, 4) not in faces(degree_complex(i, a))

    @given(ideals(), st.data())
    def test_matches_direct_predicate(self, i, data):
        a = data.draw(signed_degrees(i))
        cx = degree_complex(i, a)
        assert faces(cx) == brute_degree_complex_faces(i, a)

    @given(ideals(), st.data())
    def test_truncation_stable(self, i, data):
        a = data.draw(signed_degrees(i, lo=-4, extra=3))
        rho = max_exponents(i)
        t = tuple(-1 if x < 0 else min(x, r) for x, r in zip(a, rho))
        assert degree_complex(i, a) == degree_complex(i, t)
