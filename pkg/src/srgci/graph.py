"""Undirected simple graphs on [n], chordality and the path conditions on edge graphs."""
from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from .errors import VertexOutOfRange


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges stored as sorted pairs ``(i, j)``, ``i < j``."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        canon = set()
        for e in self.edges:
            i, j = sorted(int(v) for v in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i < 1 or j > self.n:
                raise VertexOutOfRange(f"edge {(i, j)} outside 1..{self.n}")
            canon.add((i, j))
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def adjacency(self) -> tuple:
        """``adjacency[v]`` is the neighbour bitmask of vertex ``v`` (index 0 unused)."""
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            adj[i] |= 1 << (j - 1)
            adj[j] |= 1 << (i - 1)
        return tuple(adj)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.adjacency[i] >> (j - 1) & 1)

    def neighbors(self, v: int) -> list:
        adj = self.adjacency[v]
        return [u for u in range(1, self.n + 1) if adj >> (u - 1) & 1]

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


def complement(g: Graph) -> Graph:
    pairs = itertools.combinations(range(1, g.n + 1), 2)
    return Graph(g.n, frozenset(p for p in pairs if p not in g.edges))


class Chordality(NamedTuple):
    chordal: bool
    elimination_order: Optional[tuple]  # perfect elimination order when chordal
    chordless_cycle: Optional[tuple]  # induced cycle of length >= 4 otherwise

    def __bool__(self) -> bool:
        return self.chordal

    @property
    def witness(self) -> tuple:
        return self.elimination_order if self.chordal else self.chordless_cycle


def _mcs_order(g: Graph) -> list:
    """Maximum cardinality search; the reverse visit order is a candidate PEO."""
    weight = {v: 0 for v in range(1, g.n + 1)}
    visited = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        visited.append(v)
        for u in g.neighbors(v):
            if u in weight:
                weight[u] += 1
    return visited[::-1]


def is_perfect_elimination_order(g: Graph, order) -> bool:
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        for u in later:
            if u != first and not g.has_edge(first, u):
                return False
    return True


def _canonical_cycle(cycle: list) -> tuple:
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def find_chordless_cycle(g: Graph) -> Optional[tuple]:
    """Some induced cycle of length >= 4, or None when the graph is chordal.

    For a vertex v with non-adjacent neighbours a, b, a shortest a-b path
    avoiding the rest of N[v] closes an induced cycle through v; every induced
    cycle arises this way, so the search is complete.
    """
    for v in range(1, g.n + 1):
        nbrs = g.neighbors(v)
        for a, b in itertools.combinations(nbrs, 2):
            if g.has_edge(a, b):
                continue
            blocked = {v} | (set(nbrs) - {a, b})
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                x = queue.popleft()
                for y in g.neighbors(x):
                    if y not in prev and y not in blocked:
                        prev[y] = x
                        queue.append(y)
            if b in prev:
                path = []
                x = b
                while x is not None:
                    path.append(x)
                    x = prev[x]
                return _canonical_cycle([v] + path[::-1])
    return None


def is_chordal(g: Graph) -> Chordality:
    order = _mcs_order(g)
    if is_perfect_elimination_order(g, order):
        return Chordality(True, tuple(order), None)
    cycle = find_chordless_cycle(g)
    if cycle is None:  # pragma: no cover - MCS is exact on chordal graphs
        raise AssertionError("MCS rejected a graph without chordless cycles")
    return Chordality(False, None, cycle)


def all_pairs_linked(g: Graph) -> tuple:
    """(True, None) if the graph is connected on all of 1..n, else (False, (i, j))."""
    if g.n <= 1:
        return True, None
    seen = {1}
    queue = deque([1])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    for j in range(2, g.n + 1):
        if j not in seen:
            return False, (1, j)
    return True, None


class PathMode(str, enum.Enum):
    SIMPLE = "simple"  # five distinct vertices
    WALK = "walk"  # four distinct edges, endpoints distinct, vertices may repeat


def _length4_paths(g: Graph, mode: PathMode):
    for start in range(1, g.n + 1):
        stack = [(start,)]
        while stack:
            p = stack.pop()
            if len(p) == 5:
                yield p
                continue
            last = p[-1]
            steps = []
            for u in g.neighbors(last):
                if mode is PathMode.SIMPLE:
                    if u in p:
                        continue
                else:
                    e = frozenset((last, u))
                    if any(frozenset(p[k:k + 2]) == e for k in range(len(p) - 1)):
                        continue
                steps.append(p + (u,))
            stack.extend(reversed(steps))


def path4_condition(g: Graph, mode: PathMode = PathMode.SIMPLE) -> tuple:
    """Every length-4 path i1..i5 with i1 != i5 has i1 adjacent to one of i3, i4, i5.

    Returns ``(True, None)`` or ``(False, path)`` with the lexicographically
    first offending path.
    """
    mode = PathMode(mode)
    for p in _length4_paths(g, mode):
        i1, _, i3, i4, i5 = p
        if i1 == i5:
            continue
        if not (g.has_edge(i1, i3) or g.has_edge(i1, i4) or g.has_edge(i1, i5)):
            return False, p
    return True, None


def maximal_cliques(g: Graph) -> list:
    """Bron-Kerbosch with pivoting, on bitmasks. Isolated vertices give singletons."""
    adj = [0] + [g.adjacency[v] for v in range(1, g.n + 1)]
    out = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        pivot = max(_bits(pu), key=lambda u: bin(p & adj[u]).count("1"))
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << (v - 1)
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << g.n) - 1, 0)
    return sorted(tuple(_bits(m)) for m in out)


def _bits(mask: int) -> list:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out
