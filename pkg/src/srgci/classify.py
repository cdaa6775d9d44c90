"""Combinatorial decision procedures for Stanley-Reisner ideals.

* :func:`check_gci`           -- generalized complete intersection test (four combinatorial conditions)
* :func:`check_linear_powers` -- gCI with all powers linear (degree 2, chordal, linked, path condition)
* :func:`classify_structure`  -- the explicit shape of such complexes
* :func:`is_matroidal`, :func:`check_minimal_multiplicity`
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Any, Optional

from .complex import (
    SimplicialComplex,
    connected_components,
    core,
    dimension,
    face_of,
    is_flag,
    is_pure,
    minimal_nonface_masks,
    one_skeleton_graph,
)
from .errors import (
    InternalDisagreement,
    NotEquigenerated,
    NotPure,
    NotSquarefree,
    OutsideCharacterization,
)
from .graph import Graph, PathMode, all_pairs_linked, is_chordal, path4_condition
from .homology import DEFAULT_FIELD, FieldSpec
from .ideals import MonomialIdeal, stanley_reisner_ideal
from .oracles import goto_bound, is_flc, local_cohomology_lengths, multiplicity


@dataclass
class Condition:
    holds: bool
    witness: Any = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "witness": _jsonable(self.witness)}


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _is_ci(nonfaces: list) -> bool:
    seen = 0
    for m in nonfaces:
        if seen & m:
            return False
        seen |= m
    return True


def _require_core(cx: SimplicialComplex) -> None:
    c = core(cx)
    if not c.equals_complex:
        cone = sorted(set(cx.vertices) - set(c.vertices))
        raise OutsideCharacterization(f"core differs from the complex (cone vertices {cone})")


def edge_graph_of(cx: SimplicialComplex) -> Graph:
    """Graph of the two-element minimal nonfaces (the edge graph when the complex is flag)."""
    edges = [face_of(m) for m in minimal_nonface_masks(cx) if bin(m).count("1") == 2]
    return Graph(cx.n, frozenset(edges))


@dataclass
class GciReport:
    verdict: bool
    precondition_flags: dict
    conditions: dict = dc_field(default_factory=dict)
    cU_assignments: dict = dc_field(default_factory=dict)
    short_circuit: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "short_circuit": self.short_circuit,
            "preconditions": dict(self.precondition_flags),
            "conditions": {k: c.to_dict() for k, c in self.conditions.items()},
            "cU_assignments": [
                {"U": list(u), "C": list(c)} for u, c in sorted(self.cU_assignments.items())
            ],
        }


def _find_cu(u: int, supports: list, edges: set, n: int) -> Optional[int]:
    """Smallest (then lexicographically first) nonempty C(U) satisfying (a)-(c), as a bitmask."""
    u_verts = face_of(u)
    cand = [
        i for i in range(1, n + 1)
        if not u >> (i - 1) & 1 and all(frozenset((i, j)) in edges for j in u_verts)
    ]
    meeting = [t for t in supports if t != u and t & u]
    for size in range(1, len(cand) + 1):
        for combo in itertools.combinations(cand, size):
            c = sum(1 << (i - 1) for i in combo)
            # (b) every other generator meeting U is an edge {i, j}, i in C(U), j in U
            ok = all(
                bin(t).count("1") == 2 and t & c and t & u and not t & ~(c | u)
                for t in meeting
            )
            if not ok:
                continue
            # (c) every k outside C(U) and U is joined to all of C(U)
            outside = [k for k in range(1, n + 1) if not (c | u) >> (k - 1) & 1]
            if all(frozenset((i, k)) in edges for i in combo for k in outside):
                return c
    return None


def check_gci(cx: SimplicialComplex, mode: PathMode = PathMode.SIMPLE) -> GciReport:
    """Decide whether K[cx] is a generalized complete intersection.

    Complete intersections short-circuit to a tagged True; otherwise the core
    must equal the complex.
    """
    nonfaces = minimal_nonface_masks(cx)
    ci = _is_ci(nonfaces)
    c = core(cx)
    flags = {"core_equals_delta": c.equals_complex, "is_pure": is_pure(cx), "is_CI": ci}
    if ci:
        return GciReport(True, flags, short_circuit="complete_intersection")
    _require_core(cx)

    conds = {"pure": Condition(flags["is_pure"])}
    edges = {frozenset(face_of(m)) for m in nonfaces if bin(m).count("1") == 2}
    assignments = {}
    failing_u = None
    for u in sorted(nonfaces):
        if bin(u).count("1") < 3:
            continue
        cu = _find_cu(u, nonfaces, edges, cx.n)
        if cu is None:
            failing_u = face_of(u)
            break
        assignments[face_of(u)] = face_of(cu)
    conds["cU_exists"] = Condition(failing_u is None, failing_u)
    g = Graph(cx.n, frozenset(tuple(sorted(e)) for e in edges))
    linked, pair = all_pairs_linked(g)
    conds["linked"] = Condition(linked, pair)
    p4, path = path4_condition(g, mode)
    conds["path4"] = Condition(p4, path)
    verdict = all(cond.holds for cond in conds.values())
    return GciReport(verdict, flags, conds, assignments)


@dataclass
class LinearPowersReport:
    verdict: bool
    conditions: dict

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "conditions": {k: c.to_dict() for k, c in self.conditions.items()}}


def check_linear_powers(cx: SimplicialComplex, mode: PathMode = PathMode.SIMPLE) -> LinearPowersReport:
    """gCI with every power I^l linear, via the four combinatorial conditions."""
    _require_core(cx)
    pure = is_pure(cx)
    flag = is_flag(cx)
    conds = {"pure_and_degree2": Condition(pure and flag, {"pure": pure, "degree2": flag})}
    ch = is_chordal(one_skeleton_graph(cx))
    conds["chordal_skeleton"] = Condition(ch.chordal, None if ch.chordal else ch.chordless_cycle)
    g = edge_graph_of(cx)
    linked, pair = all_pairs_linked(g)
    conds["linked"] = Condition(linked, pair)
    p4, path = path4_condition(g, mode)
    conds["path4"] = Condition(p4, path)
    return LinearPowersReport(all(c.holds for c in conds.values()), conds)


@dataclass
class Decomposition:
    kind: str  # "Points" | "PathUnion" | "FacetPairUnion"
    components: list

    def to_dict(self) -> list:
        if self.kind != "FacetPairUnion":
            return [list(c) for c in self.components]
        return [{"type": t, "facets": [list(f) for f in fs]} for t, fs in self.components]


@dataclass
class StructureVerdict:
    verdict: bool
    decomposition: Optional[Decomposition] = None
    failure_witness: Optional[dict] = None

    @property
    def kind(self) -> Optional[str]:
        return self.decomposition.kind if self.decomposition else None

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "kind": self.kind}
        if self.decomposition is not None:
            out["components"] = self.decomposition.to_dict()
        if self.failure_witness is not None:
            out["failure_witness"] = _jsonable(self.failure_witness)
        return out


def _as_path(comp: SimplicialComplex) -> Optional[tuple]:
    """Vertex sequence if the 1-dimensional component is a simple path."""
    adj: dict = {}
    for a, b in comp.facets:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if len(comp.facets) != len(adj) - 1 or any(len(v) > 2 for v in adj.values()):
        return None
    start = min(v for v, nb in adj.items() if len(nb) == 1)
    path = [start]
    prev = None
    while True:
        nxt = [u for u in adj[path[-1]] if u != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    return tuple(path)


def classify_structure(cx: SimplicialComplex) -> StructureVerdict:
    """Recognize points, disjoint paths, or disjoint facets and facet pairs."""
    _require_core(cx)
    dim = dimension(cx)
    comps = connected_components(cx)
    if dim == 0:
        return StructureVerdict(True, Decomposition("Points", [f for f in cx.facets]))
    if not is_pure(cx):
        sizes = sorted({len(f) for f in cx.facets})
        return StructureVerdict(False, failure_witness={"reason": "not pure", "facet_sizes": sizes})
    if dim == 1:
        paths = []
        for comp in comps:
            p = _as_path(comp)
            if p is None:
                return StructureVerdict(
                    False, failure_witness={"reason": "component is not a path", "component": comp.facets}
                )
            paths.append(p)
        return StructureVerdict(True, Decomposition("PathUnion", paths))
    parts = []
    for comp in comps:
        fs = comp.facets
        if len(fs) == 1:
            parts.append((2, fs))
            continue
        if len(fs) == 2:
            f, g = (set(x) for x in fs)
            if f & g and len(f - g) == 1 and len(g - f) == 1:
                parts.append((1, fs))
                continue
        return StructureVerdict(
            False, failure_witness={"reason": "component is neither a facet nor a facet pair", "component": fs}
        )
    return StructureVerdict(True, Decomposition("FacetPairUnion", parts))


def matroid_exchange_failure(ideal: MonomialIdeal) -> Optional[tuple]:
    """First (B1, B2, i) violating base exchange, or None when the supports form a matroid."""
    if not ideal.is_squarefree:
        raise NotSquarefree("matroidal test needs a squarefree ideal")
    if not ideal.is_equigenerated:
        raise NotEquigenerated("matroidal test needs an equigenerated ideal")
    bases = [frozenset(s) for s in ideal.supports]
    base_set = set(bases)
    for b1, b2 in itertools.product(bases, repeat=2):
        for i in sorted(b1 - b2):
            if not any((b1 - {i}) | {j} in base_set for j in b2 - b1):
                return tuple(sorted(b1)), tuple(sorted(b2)), i
    return None


def is_matroidal(ideal: MonomialIdeal) -> bool:
    return matroid_exchange_failure(ideal) is None


@dataclass
class MinimalMultiplicityReport:
    verdict: bool
    multiplicity: int
    goto_bound: int
    lengths: list
    routes: dict

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "multiplicity": self.multiplicity,
            "goto_bound": self.goto_bound,
            "lengths": list(self.lengths),
            "routes": dict(self.routes),
        }


def check_minimal_multiplicity(cx: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> MinimalMultiplicityReport:
    """Minimal multiplicity by three routes that must agree.

    formula: e equals 1 + sum C(d-1, i-1) l_i with d the Krull dimension;
    structure: every component is a single facet;
    matroidal: I is generated in degree 2 and matroidal.
    """
    if not is_pure(cx):
        raise NotPure("minimal multiplicity needs a pure complex")
    _require_core(cx)
    if dimension(cx) < 1:
        # with Krull dimension 1 the sum is empty and the formula reads e = 1
        raise OutsideCharacterization("the multiplicity formula needs Krull dimension >= 2")
    ideal = stanley_reisner_ideal(cx)
    if not is_flc(ideal, dimension(cx) + 1, field, first_only=True).verdict:
        raise OutsideCharacterization("K[cx] is not Buchsbaum")
    e = multiplicity(cx)
    lengths = local_cohomology_lengths(cx, field)
    bound = goto_bound(lengths)
    routes = {
        "formula": e == bound,
        "structure": all(len(c.facets) == 1 for c in connected_components(cx)),
        "matroidal": is_flag(cx) and is_matroidal(ideal),
    }
    if len(set(routes.values())) != 1:
        raise InternalDisagreement(f"minimal multiplicity routes disagree: {routes}")
    return MinimalMultiplicityReport(routes["formula"], e, bound, lengths, routes)


def facet_pair_violations(cx: SimplicialComplex) -> list:
    """Intersecting facet pairs that break the unique-edge and |F\\H| = 1 properties.

    Complexes passing :func:`check_linear_powers` must return an empty list.
    """
    edges = edge_graph_of(cx)
    out = []
    for f, h in itertools.combinations(cx.facets, 2):
        fs, hs = set(f), set(h)
        if not fs & hs:
            continue
        crossing = [(a, b) for a in fs - hs for b in hs - fs if edges.has_edge(a, b)]
        if len(crossing) != 1 or len(fs - hs) != 1 or len(hs - fs) != 1:
            out.append({"facets": (f, h), "crossing_edges": crossing})
    return out
