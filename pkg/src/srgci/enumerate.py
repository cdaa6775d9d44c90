"""Exhaustive generation of small graphs and complexes up to relabeling.

Graphs on n vertices are grown from graphs on n - 1 vertices by adding a
vertex with every possible neighbourhood, then deduplicated by a canonical
form: colour refinement gives an isomorphism-invariant ordered partition and
the minimum edge code over all cell-respecting orderings is the certificate.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator, Optional

from .complex import SimplicialComplex, core, dimension, is_pure, minimal_nonface_masks, simp_closure, skeleton
from .graph import Graph

MAX_N = 8


def _pair_index(n: int) -> dict:
    return {p: k for k, p in enumerate(itertools.combinations(range(n), 2))}


def _refine(n: int, adj: list) -> list:
    colors = [bin(a).count("1") for a in adj]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in range(n) if adj[v] >> u & 1)))
            for v in range(n)
        ]
        ranking = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_code(g: Graph) -> int:
    """Isomorphism certificate: equal codes iff the graphs are isomorphic (same n)."""
    n = g.n
    adj = [g.adjacency[v] for v in range(1, n + 1)]
    colors = _refine(n, adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    index = _pair_index(n)
    edges = [(i - 1, j - 1) for i, j in g.edges]
    best = None
    for arrangement in itertools.product(*(itertools.permutations(c) for c in cells)):
        pos = {}
        for v in itertools.chain.from_iterable(arrangement):
            pos[v] = len(pos)
        code = 0
        for i, j in edges:
            p, q = pos[i], pos[j]
            code |= 1 << index[(p, q) if p < q else (q, p)]
        if best is None or code < best:
            best = code
    return best


def graph_from_code(n: int, code: int) -> Graph:
    edges = [
        (i + 1, j + 1)
        for (i, j), k in _pair_index(n).items()
        if code >> k & 1
    ]
    return Graph(n, frozenset(edges))


def canonical_graph(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on 1..n."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if code >> k & 1))


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple:
    """One canonical representative per isomorphism class, sorted by code."""
    if n > MAX_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {MAX_N}")
    if n <= 0:
        return (Graph(0),)
    codes = set()
    for g in nonisomorphic_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            new_edges = set(g.edges)
            new_edges.update((v, n) for v in range(1, n) if nbrs >> (v - 1) & 1)
            codes.add(canonical_code(Graph(n, frozenset(new_edges))))
    return tuple(graph_from_code(n, c) for c in sorted(codes))


def random_graph(rng: random.Random, n: int) -> Graph:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    bits = rng.getrandbits(len(pairs)) if pairs else 0
    return Graph(n, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))


def passes_filters(
    cx: SimplicialComplex,
    pure: Optional[bool] = None,
    core_equals_delta: Optional[bool] = None,
    non_ci: Optional[bool] = None,
) -> bool:
    """``None`` means "do not filter on this property"."""
    if pure is not None and is_pure(cx) != pure:
        return False
    if core_equals_delta is not None and core(cx).equals_complex != core_equals_delta:
        return False
    if non_ci is not None:
        seen, ci = 0, True
        for m in minimal_nonface_masks(cx):
            if seen & m:
                ci = False
                break
            seen |= m
        if (not ci) != non_ci:
            return False
    return True


def enumerate_complexes(
    max_n: int,
    flag_only: bool = True,
    pure: Optional[bool] = None,
    core_equals_delta: Optional[bool] = None,
    non_ci: Optional[bool] = None,
    min_n: int = 1,
) -> Iterator[SimplicialComplex]:
    """Clique complexes of all graphs on min_n..max_n vertices, up to relabeling.

    With ``flag_only=False`` the pure k-skeleta (1 <= k < dim) of those clique
    complexes are added as non-flag controls.
    """
    if max_n > MAX_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {MAX_N}")
    for n in range(min_n, max_n + 1):
        for g in nonisomorphic_graphs(n):
            cx = simp_closure(g)
            candidates = [cx]
            if not flag_only:
                smallest = min(len(f) for f in cx.facets)
                for k in range(1, dimension(cx)):
                    if k + 1 <= smallest:
                        candidates.append(skeleton(cx, k))
            for c in candidates:
                if passes_filters(c, pure, core_equals_delta, non_ci):
                    yield c
