"""Monomial ideals stored by their minimal generators as exponent vectors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .complex import SimplicialComplex, face_of, mask_of, minimal_nonface_masks, submasks
from .errors import NotDegreeTwo, NotSquarefree, UnitIdeal, ZeroIdeal
from .graph import Graph


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def minimalize(vectors: Iterable[tuple]) -> tuple:
    """Drop every vector that is divisible by another one."""
    kept: list = []
    for v in sorted(set(vectors), key=lambda v: (sum(v), v)):
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper nonzero monomial ideal of K[X_1..X_n].

    ``generators`` is canonicalized to the sorted minimal generating set.
    """

    n: int
    generators: tuple

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(int(e) for e in g)
            if len(g) != self.n or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for n={self.n}")
            gens.append(g)
        if not gens:
            raise ZeroIdeal("the zero ideal is not supported")
        canon = minimalize(gens)
        if canon == ((0,) * self.n,):
            raise UnitIdeal("the unit ideal is not supported")
        object.__setattr__(self, "generators", canon)

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        gens = []
        for s in supports:
            v = [0] * n
            for j in s:
                v[j - 1] = 1
            gens.append(tuple(v))
        return cls(n, tuple(gens))

    @property
    def supports(self) -> list:
        return [tuple(j + 1 for j, e in enumerate(g) if e) for g in self.generators]

    @property
    def degrees(self) -> list:
        return [sum(g) for g in self.generators]

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    @property
    def is_equigenerated(self) -> bool:
        return len(set(self.degrees)) == 1

    @cached_property
    def box(self) -> "ExponentBox":
        return ExponentBox(self)

    def contains(self, b: Sequence[int]) -> bool:
        return any(divides(g, b) for g in self.generators)

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators]}

    def __repr__(self) -> str:
        return f"MonomialIdeal({format_ideal(self)})"


def format_monomial(v: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(v, start=1):
        if e == 1:
            parts.append(f"X{j}")
        elif e > 1:
            parts.append(f"X{j}^{e}")
    return "*".join(parts) or "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    return "(" + ", ".join(format_monomial(g) for g in ideal.generators) + ")"


def ideal_from_dict(data: dict) -> MonomialIdeal:
    return MonomialIdeal(int(data["n"]), tuple(tuple(g) for g in data["generators"]))


class ExponentBox:
    """Membership and divisor-lcm tables over the box prod_j {0..rho_j}.

    Membership of ``x^b`` in ``I`` depends only on ``min(b, rho)``, so one
    table answers every membership query.  Both tables are filled by a single
    pass in index order, where ``b - e_j`` always precedes ``b``.
    """

    def __init__(self, ideal: MonomialIdeal):
        self.n = ideal.n
        self.bounds = max_exponents(ideal)
        strides = []
        s = 1
        for r in self.bounds:
            strides.append(s)
            s *= r + 1
        self.strides = tuple(strides)
        self.size = s
        gens = set(self.index(g) for g in ideal.generators)
        member = [False] * s
        for idx in range(s):
            if idx in gens:
                member[idx] = True
                continue
            for j, st in enumerate(strides):
                if (idx // st) % (self.bounds[j] + 1) and member[idx - st]:
                    member[idx] = True
                    break
        self.member = member
        self._generator_index = gens

    def index(self, b: Sequence[int]) -> int:
        return sum(min(x, r) * st for x, r, st in zip(b, self.bounds, self.strides))

    def point(self, idx: int) -> tuple:
        return tuple((idx // st) % (r + 1) for st, r in zip(self.strides, self.bounds))

    def contains(self, b: Sequence[int]) -> bool:
        return self.member[self.index(b)]

    @cached_property
    def divisor_lcm(self) -> list:
        """``divisor_lcm[idx]``: lcm of the generators dividing the box point (None if none)."""
        out: list = [None] * self.size
        for idx in range(self.size):
            if not self.member[idx]:
                continue
            acc = self.point(idx) if idx in self._generator_index else None
            for j, st in enumerate(self.strides):
                if (idx // st) % (self.bounds[j] + 1):
                    prev = out[idx - st]
                    if prev is not None:
                        acc = prev if acc is None else tuple(map(max, acc, prev))
            out[idx] = acc
        return out


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    masks = minimal_nonface_masks(cx)
    if not masks:
        raise ZeroIdeal("a simplex has zero Stanley-Reisner ideal")
    return MonomialIdeal.from_supports(cx.n, [face_of(m) for m in masks])


def complex_of(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the sets containing no generator support."""
    if not ideal.is_squarefree:
        raise NotSquarefree("complex_of needs a squarefree ideal")
    gens = [mask_of(s) for s in ideal.supports]
    full = (1 << ideal.n) - 1
    faces = [m for m in submasks(full) if not any(g & m == g for g in gens)]
    return SimplicialComplex.from_masks(ideal.n, faces)


def power(ideal: MonomialIdeal, exponent: int) -> MonomialIdeal:
    if exponent < 1:
        raise ValueError("power must be >= 1")
    prods = (
        tuple(map(sum, zip(*combo)))
        for combo in itertools.combinations_with_replacement(ideal.generators, exponent)
    )
    return MonomialIdeal(ideal.n, tuple(prods))


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, tuple(tuple(min(e, 1) for e in g) for g in ideal.generators))


def is_degree2(ideal: MonomialIdeal) -> bool:
    return ideal.is_squarefree and all(d == 2 for d in ideal.degrees)


def edge_graph(ideal: MonomialIdeal) -> Graph:
    if not is_degree2(ideal):
        raise NotDegreeTwo("edge graph needs squarefree quadratic generators")
    return Graph(ideal.n, frozenset(ideal.supports))


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    """Monomial generators form a regular sequence iff their supports are pairwise disjoint."""
    seen = 0
    for s in ideal.supports:
        m = mask_of(s)
        if seen & m:
            return False
        seen |= m
    return True


def max_exponents(ideal: MonomialIdeal) -> tuple:
    return tuple(max(col) for col in zip(*ideal.generators))


def degree_complex_masks(ideal: MonomialIdeal, a: Sequence[int]) -> list:
    """Faces of the degree complex of ``ideal`` at multidegree ``a``, as bitmasks.

    With G = {j : a_j < 0}, a set F disjoint from G is a face iff every
    generator u has some j outside F and G with u_j > a_j; equivalently the
    monomial with exponent rho_j on F and G and a_j elsewhere is not in I.
    """
    box = ideal.box
    rho = box.bounds
    neg = mask_of(j + 1 for j, x in enumerate(a) if x < 0)
    free = ((1 << ideal.n) - 1) & ~neg
    out = []
    for f in submasks(free):
        covered = f | neg
        b = [rho[j] if covered >> j & 1 else min(a[j], rho[j]) for j in range(ideal.n)]
        if not box.contains(b):
            out.append(f)
    return out


def degree_complex(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    if len(a) != ideal.n:
        raise ValueError("degree has wrong length")
    return SimplicialComplex.from_masks(ideal.n, degree_complex_masks(ideal, a))
