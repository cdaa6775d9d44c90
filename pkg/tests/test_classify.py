import pytest
from hypothesis import given, settings

from srgci.classify import (
    check_gci,
    check_linear_powers,
    check_minimal_multiplicity,
    classify_structure,
    facet_pair_violations,
    is_matroidal,
    matroid_exchange_failure,
)
from srgci.complex import new_complex, one_skeleton_graph, simp_closure
from srgci.enumerate import enumerate_complexes, passes_filters
from srgci.errors import NotEquigenerated, NotPure, NotSquarefree, OutsideCharacterization
from srgci.graph import PathMode, is_chordal
from srgci.ideals import MonomialIdeal, power, stanley_reisner_ideal
from srgci.oracles import has_linear_resolution, is_flc

from conftest import graphs

C4 = new_complex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
C5 = new_complex(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]])
PAIR_PLUS_TRIANGLE = new_complex(7, [[1, 2, 3], [1, 2, 4], [5, 6, 7]])
PATH6 = new_complex(6, [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6]])


def sup(n, *supports):
    return MonomialIdeal.from_supports(n, supports)


def oracle(cx, powers=(1, 2)):
    i = stanley_reisner_ideal(cx)
    top = max(len(f) for f in cx.facets)
    return all(is_flc(power(i, ell), top, first_only=True).verdict for ell in powers)


class TestGci:
    def test_delta_a(self, delta_a):
        rep = check_gci(delta_a)
        assert rep.verdict and rep.short_circuit is None
        assert rep.conditions["cU_exists"].holds and not rep.cU_assignments

    def test_c4_short_circuits(self):
        rep = check_gci(C4)
        assert rep.verdict and rep.short_circuit == "complete_intersection"
        assert rep.precondition_flags == {"core_equals_delta": True, "is_pure": True, "is_CI": True}

    def test_path6_decided_by_path_condition(self):
        rep = check_gci(PATH6)
        assert rep.conditions["pure"].holds and rep.conditions["linked"].holds
        assert rep.verdict == rep.conditions["path4"].holds == oracle(PATH6)

    def test_cone_is_outside(self):
        with pytest.raises(OutsideCharacterization) as exc:
            check_gci(new_complex(5, [[1, 2, 5], [3, 4, 5]]))
        assert "cone vertices [5]" in exc.value.reason

    def test_cu_assignment_found(self):
        # hollow triangle plus an isolated vertex: C({1,2,3}) = {4}
        cx = new_complex(4, [[1, 2], [2, 3], [1, 3], [4]])
        rep = check_gci(cx)
        assert rep.cU_assignments == {(1, 2, 3): (4,)}
        assert rep.to_dict()["cU_assignments"] == [{"U": [1, 2, 3], "C": [4]}]
        assert not rep.verdict and not rep.conditions["pure"].holds

    def test_cu_needs_both_outside_vertices(self):
        cx = new_complex(5, [[1, 2], [2, 3], [1, 3], [4, 5]])
        assert check_gci(cx).cU_assignments == {(1, 2, 3): (4, 5)}

    def test_cu_missing(self):
        cx = new_complex(4, [[1, 2], [2, 3], [1, 3], [1, 4]])
        rep = check_gci(cx)
        assert not rep.verdict and rep.conditions["cU_exists"].witness == (1, 2, 3)
        hollow = new_complex(3, [[1, 2], [2, 3], [1, 3]])
        assert check_gci(hollow).short_circuit == "complete_intersection"


class TestLinearPowers:
    def test_delta_a(self, delta_a):
        assert check_linear_powers(delta_a).verdict

    def test_c5(self):
        rep = check_linear_powers(C5)
        assert not rep.verdict
        assert rep.conditions["chordal_skeleton"].witness == (1, 2, 3, 4, 5)

    def test_pair_plus_triangle(self):
        assert check_linear_powers(PAIR_PLUS_TRIANGLE).verdict

    def test_needs_core(self):
        with pytest.raises(OutsideCharacterization):
            check_linear_powers(new_complex(3, [[1, 2, 3]]))


class TestStructure:
    def test_points(self):
        res = classify_structure(new_complex(5, [[1], [2], [3], [4], [5]]))
        assert res.verdict and res.kind == "Points"

    def test_path(self):
        res = classify_structure(new_complex(4, [[1, 2], [2, 3], [3, 4]]))
        assert res.kind == "PathUnion" and res.decomposition.components == [(1, 2, 3, 4)]

    def test_delta_a(self, delta_a):
        assert classify_structure(delta_a).to_dict() == {
            "verdict": True, "kind": "PathUnion", "components": [[1, 2], [3, 4]],
        }

    def test_facet_pairs(self):
        res = classify_structure(PAIR_PLUS_TRIANGLE)
        assert res.kind == "FacetPairUnion"
        assert res.decomposition.components == [(1, ((1, 2, 3), (1, 2, 4))), (2, ((5, 6, 7),))]

    def test_cycle_fails(self):
        res = classify_structure(C5)
        assert not res.verdict and res.decomposition is None and res.failure_witness

    def test_branching_fails(self):
        star3 = new_complex(5, [[1, 2], [1, 3], [1, 4], [5, 2]])
        assert not classify_structure(star3).verdict

    def test_three_facets_fail(self):
        cx = new_complex(6, [[1, 2, 3], [2, 3, 4], [3, 4, 5], [6, 1, 5]])
        res = classify_structure(cx)
        assert not res.verdict and res.failure_witness["reason"].startswith("component")

    def test_non_pure_fails(self):
        res = classify_structure(new_complex(5, [[1, 2, 5], [3, 4]]))
        assert not res.verdict

    def test_needs_core(self):
        with pytest.raises(OutsideCharacterization):
            classify_structure(new_complex(3, [[1, 2], [2, 3]]))


class TestMatroidal:
    def test_worked_example(self):
        assert is_matroidal(sup(5, (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)))

    def test_delta_a(self, delta_a):
        assert is_matroidal(stanley_reisner_ideal(delta_a))

    def test_disjoint(self):
        i = sup(4, (1, 2), (3, 4))
        assert not is_matroidal(i)
        assert matroid_exchange_failure(i) == ((3, 4), (1, 2), 3)

    def test_preconditions(self):
        with pytest.raises(NotSquarefree):
            is_matroidal(MonomialIdeal(2, ((2, 0),)))
        with pytest.raises(NotEquigenerated):
            is_matroidal(sup(3, (1,), (2, 3)))


class TestMinimalMultiplicity:
    def test_two_triangles(self):
        rep = check_minimal_multiplicity(new_complex(6, [[1, 2, 3], [4, 5, 6]]))
        assert rep.verdict and rep.multiplicity == 2 == rep.goto_bound
        assert rep.routes == {"formula": True, "structure": True, "matroidal": True}

    def test_pair_plus_triangle(self):
        rep = check_minimal_multiplicity(PAIR_PLUS_TRIANGLE)
        assert not rep.verdict and not rep.routes["structure"]

    def test_delta_a(self, delta_a):
        rep = check_minimal_multiplicity(delta_a)
        assert rep.verdict and rep.lengths == [1] and rep.goto_bound == 2

    def test_not_pure(self):
        with pytest.raises(NotPure):
            check_minimal_multiplicity(new_complex(5, [[1, 2, 5], [3, 4]]))

    def test_points_are_outside(self):
        with pytest.raises(OutsideCharacterization):
            check_minimal_multiplicity(new_complex(3, [[1], [2], [3]]))

    def test_not_buchsbaum(self):
        # two triangles glued at a vertex: the link of the vertex is disconnected
        bowtie = new_complex(5, [[1, 2, 3], [3, 4, 5]])
        with pytest.raises(OutsideCharacterization):
            check_minimal_multiplicity(bowtie)


def small_family():
    return list(enumerate_complexes(5, pure=True, core_equals_delta=True, non_ci=True))


class TestEquivalences:
    def test_ladder_on_small_family(self):
        fam = small_family()
        assert len(fam) > 5
        for cx in fam:
            s = classify_structure(cx).verdict
            lp = check_linear_powers(cx).verdict
            g = check_gci(cx).verdict and is_chordal(one_skeleton_graph(cx)).chordal
            assert s == lp == g, cx

    def test_gci_matches_flc_on_small_family(self):
        for cx in small_family():
            assert check_gci(cx).verdict == oracle(cx), cx

    def test_facet_pair_properties(self):
        for cx in small_family():
            if check_linear_powers(cx).verdict:
                assert facet_pair_violations(cx) == []

    def test_minimal_multiplicity_implies_flc_and_linear(self):
        for n in range(2, 7):
            for cx in enumerate_complexes(n, min_n=n, pure=True, core_equals_delta=True):
                try:
                    rep = check_minimal_multiplicity(cx)
                except OutsideCharacterization:
                    continue
                if not rep.verdict:
                    continue
                i = stanley_reisner_ideal(cx)
                for ell in (1, 2):
                    p = power(i, ell)
                    assert is_flc(p, max(map(len, cx.facets)), first_only=True).verdict
                    assert has_linear_resolution(p)[0]

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=6, min_n=2))
    def test_modes_agree_on_gci(self, g):
        cx = simp_closure(g)
        if not passes_filters(cx, core_equals_delta=True):
            return
        assert check_gci(cx, PathMode.SIMPLE).verdict == check_gci(cx, PathMode.WALK).verdict
