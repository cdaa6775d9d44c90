"""Simplicial complexes on the vertex set [n] = {1, ..., n}.

A complex is stored by its facets. Faces are sorted tuples of 1-based vertex
ids; internally most operations work on bitmasks where vertex ``i`` is bit
``i - 1``.

Two degenerate values are kept apart on purpose: the *void* complex has no
faces at all (``facets == ()``) while the *empty* complex ``{∅}`` has exactly
the empty face (``facets == ((),)``).  Reduced homology tells them apart.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import NotAFace, UncoveredVertex, VertexOutOfRange
from .graph import Graph, maximal_cliques

Face = tuple  # strictly increasing tuple of ints


def mask_of(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << (v - 1)
    return m


def face_of(mask: int) -> Face:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including ``mask`` itself and 0."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of bitmasks."""
    uniq = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets, canonicalized on construction.

    Facets are deduplicated, reduced to the inclusion-maximal ones and sorted,
    so structural equality is equality of complexes.  The constructor does not
    require every vertex of ``[n]`` to be used (links and cores live on a
    subset of the ambient vertices); use :func:`new_complex` for user input.
    """

    n: int
    facets: tuple

    def __post_init__(self):
        masks = []
        for f in self.facets:
            verts = sorted(set(int(v) for v in f))
            for v in verts:
                if not 1 <= v <= self.n:
                    raise VertexOutOfRange(f"vertex {v} not in 1..{self.n}")
            masks.append(mask_of(verts))
        canon = tuple(sorted(face_of(m) for m in maximal_masks(masks)))
        object.__setattr__(self, "facets", canon)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(n, tuple(face_of(m) for m in maximal_masks(masks)))

    @cached_property
    def facet_masks(self) -> tuple:
        return tuple(mask_of(f) for f in self.facets)

    @cached_property
    def face_masks(self) -> frozenset:
        out: set[int] = set()
        for m in self.facet_masks:
            if m not in out:
                out.update(submasks(m))
        return frozenset(out)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facet_masks:
            m |= f
        return m

    @property
    def vertices(self) -> Face:
        return face_of(self.vertex_mask)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == ((),)

    def __contains__(self, face) -> bool:
        return mask_of(face) in self.face_masks

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, <{inner}>)"

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}


def new_complex(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from user input, enforcing that every vertex 1..n is a face."""
    cx = SimplicialComplex(n, tuple(tuple(f) for f in facets))
    missing = [v for v in range(1, n + 1) if not cx.vertex_mask >> (v - 1) & 1]
    if missing:
        raise UncoveredVertex(f"vertices {missing} appear in no facet")
    return cx


def complex_from_dict(data: dict) -> SimplicialComplex:
    return new_complex(int(data["n"]), data["facets"])


def faces(cx: SimplicialComplex, k: Optional[int] = None) -> set:
    """All faces, or only those of dimension ``k`` (so of size ``k + 1``)."""
    if k is None:
        return {face_of(m) for m in cx.face_masks}
    return {face_of(m) for m in cx.face_masks if bin(m).count("1") == k + 1}


def is_pure(cx: SimplicialComplex) -> bool:
    return len({len(f) for f in cx.facets}) <= 1


def dimension(cx: SimplicialComplex) -> int:
    if cx.is_void:
        raise ValueError("the void complex has no dimension")
    return max(len(f) for f in cx.facets) - 1


def _require_face(cx: SimplicialComplex, face) -> int:
    m = mask_of(face)
    if m not in cx.face_masks:
        raise NotAFace(f"{tuple(face)} is not a face of {cx!r}")
    return m


def star(cx: SimplicialComplex, face=()) -> SimplicialComplex:
    m = _require_face(cx, face)
    return SimplicialComplex.from_masks(cx.n, [h for h in cx.facet_masks if h & m == m])


def link(cx: SimplicialComplex, face=()) -> SimplicialComplex:
    m = _require_face(cx, face)
    return SimplicialComplex.from_masks(cx.n, [h & ~m for h in cx.facet_masks if h & m == m])


class Core(NamedTuple):
    vertices: Face
    complex: SimplicialComplex
    equals_complex: bool


def core(cx: SimplicialComplex) -> Core:
    """Core vertices are those whose star is not the whole complex.

    A vertex has full star exactly when it lies in every facet, so the core
    simply drops the cone points.
    """
    cone = cx.vertex_mask
    for h in cx.facet_masks:
        cone &= h
    keep = cx.vertex_mask & ~cone
    restricted = SimplicialComplex.from_masks(cx.n, [h & keep for h in cx.facet_masks])
    return Core(face_of(keep), restricted, restricted == cx)


def connected_components(cx: SimplicialComplex) -> list:
    """Components of the facet/vertex incidence, ordered by smallest vertex."""
    groups: list[list[int]] = []  # [vertex_mask, facet masks...]
    for h in cx.facet_masks:
        if h == 0:
            continue
        merged = [h, h]
        rest = []
        for g in groups:
            if g[0] & merged[0]:
                merged[0] |= g[0]
                merged.extend(g[1:])
            else:
                rest.append(g)
        groups = rest + [merged]
    groups.sort(key=lambda g: g[0] & -g[0])
    return [SimplicialComplex.from_masks(cx.n, g[1:]) for g in groups]


def skeleton(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be >= 0")
    out = []
    for f in cx.facets:
        if len(f) <= k + 1:
            out.append(f)
        else:
            out.extend(itertools.combinations(f, k + 1))
    return SimplicialComplex(cx.n, tuple(out))


def one_skeleton_graph(cx: SimplicialComplex) -> Graph:
    edges = set()
    for f in cx.facets:
        edges.update(itertools.combinations(f, 2))
    return Graph(cx.n, frozenset(edges))


def minimal_nonface_masks(cx: SimplicialComplex) -> list[int]:
    """Minimal nonfaces over the ambient vertex set [n], by increasing size.

    A set is only examined when removing its largest vertex leaves a face, and
    it is kept only when every one of its maximal proper subsets is a face.
    """
    if cx.is_void:
        return [0]
    fm = cx.face_masks
    out = [1 << (v - 1) for v in range(1, cx.n + 1) if (1 << (v - 1)) not in fm]
    layer = [m for m in fm if bin(m).count("1") == 1]
    top = max(len(f) for f in cx.facets)
    size = 2
    while layer and size <= top + 1:
        next_layer = []
        for m in layer:
            hi = m.bit_length()
            for v in range(hi, cx.n):
                s = m | (1 << v)
                if s in fm:
                    next_layer.append(s)
                    continue
                if all((s & ~(1 << (u - 1))) in fm for u in face_of(s)):
                    out.append(s)
        layer = next_layer
        size += 1
    return out


def minimal_nonfaces(cx: SimplicialComplex) -> list:
    return sorted((face_of(m) for m in minimal_nonface_masks(cx)), key=lambda f: (len(f), f))


def simp_closure(g: Graph) -> SimplicialComplex:
    """Clique (flag) complex of a graph."""
    return SimplicialComplex(g.n, tuple(maximal_cliques(g)))


def is_flag(cx: SimplicialComplex) -> bool:
    return all(bin(m).count("1") == 2 for m in minimal_nonface_masks(cx))
