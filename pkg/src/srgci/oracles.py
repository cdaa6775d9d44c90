"""Algebraic oracles: multigraded local cohomology, FLC, Betti tables, multiplicity.

Local cohomology of S/I is read off degree complexes: for a in Z^n with
negative part G,

    dim [H^i_m(S/I)]_a = dim H~_{i-|G|-1}(degree_complex(I, a)).

For Stanley-Reisner rings and a <= 0 this is Hochster's formula with the
degree complex equal to the link of G.  Betti numbers come from upper Koszul
simplicial complexes: beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) with
K^b(I) = {F subset supp(b) : x^(b - F) in I}.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterator, Optional, Sequence

from .complex import (
    SimplicialComplex,
    dimension,
    is_pure,
    link,
    mask_of,
    submasks,
)
from .errors import NotEquigenerated, NotPure, PositiveDegree
from .homology import DEFAULT_FIELD, FieldSpec, homology_of_faces, reduced_homology
from .ideals import MonomialIdeal, complex_of, degree_complex_masks, radical


@dataclass(frozen=True)
class LocalCohomologyEntry:
    i: int
    a: tuple
    dim: int

    def to_dict(self) -> dict:
        return {"i": self.i, "a": list(self.a), "dim": self.dim}


@dataclass
class FlcReport:
    verdict: bool
    violations: list = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "violations": [v.to_dict() for v in self.violations]}


def hochster_dim(cx: SimplicialComplex, i: int, a: Sequence[int], field: FieldSpec = DEFAULT_FIELD) -> int:
    """dim [H^i_m(K[cx])]_a for a <= 0."""
    if any(x > 0 for x in a):
        raise PositiveDegree(f"degree {tuple(a)} has a positive entry")
    face = tuple(j + 1 for j, x in enumerate(a) if x < 0)
    if face not in cx:
        return 0
    return reduced_homology(link(cx, face), field)[i - len(face) - 1]


def degree_complex_profile(ideal: MonomialIdeal, a: Sequence[int], field: FieldSpec = DEFAULT_FIELD):
    """Homology of the degree complex at ``a``, keyed by reduced-homology index."""
    return homology_of_faces(degree_complex_masks(ideal, a), field)


def takayama_dim(ideal: MonomialIdeal, i: int, a: Sequence[int], field: FieldSpec = DEFAULT_FIELD) -> int:
    """dim [H^i_m(S/I)]_a for any a in Z^n."""
    neg = sum(1 for x in a if x < 0)
    return degree_complex_profile(ideal, a, field)[i - neg - 1]


def krull_dimension(ideal: MonomialIdeal) -> int:
    """dim S/I, i.e. one more than the dimension of the complex of the radical."""
    return dimension(complex_of(radical(ideal))) + 1


def _scan_degrees(ideal: MonomialIdeal, full_box: bool, negative_only: bool) -> Iterator[tuple]:
    """Multidegrees in prod_j {-1, .., top_j} where top_j is rho_j or rho_j - 1.

    Entries a_j >= rho_j never matter: the variable j then cannot witness
    membership, the degree complex is a cone over j (or void), and the
    cohomology vanishes.  ``full_box`` keeps them anyway.
    """
    rho = ideal.box.bounds
    ranges = [range(-1, r + 1 if full_box else r) for r in rho]
    faces = complex_of(radical(ideal)).face_masks
    for a in itertools.product(*ranges):
        neg = mask_of(j + 1 for j, x in enumerate(a) if x < 0)
        if negative_only and not neg:
            continue
        if neg not in faces:
            continue  # the degree complex is void
        yield a


def local_cohomology(
    ideal: MonomialIdeal,
    top_dim: Optional[int] = None,
    field: FieldSpec = DEFAULT_FIELD,
    negative_only: bool = False,
    full_box: bool = False,
) -> list:
    """All nonzero [H^i_m(S/I)]_a with i < top_dim over the scan box."""
    if top_dim is None:
        top_dim = krull_dimension(ideal)
    out = []
    for a in _scan_degrees(ideal, full_box, negative_only):
        prof = degree_complex_profile(ideal, a, field)
        neg = sum(1 for x in a if x < 0)
        for k, d in prof.items():
            i = k + neg + 1
            if d and 0 <= i < top_dim:
                out.append(LocalCohomologyEntry(i, a, d))
    out.sort(key=lambda e: (e.i, e.a))
    return out


def is_flc(
    ideal: MonomialIdeal,
    top_dim: Optional[int] = None,
    field: FieldSpec = DEFAULT_FIELD,
    first_only: bool = False,
    full_box: bool = False,
) -> FlcReport:
    """Finite length of H^i_m(S/I) for all i < top_dim.

    Finite length holds iff no graded piece in a degree with a negative entry
    is nonzero; the scan covers every such degree up to truncation.
    """
    if top_dim is None:
        top_dim = krull_dimension(ideal)
    violations = []
    for a in _scan_degrees(ideal, full_box, negative_only=True):
        prof = degree_complex_profile(ideal, a, field)
        neg = sum(1 for x in a if x < 0)
        for k, d in sorted(prof.items()):
            i = k + neg + 1
            if d and 0 <= i < top_dim:
                violations.append(LocalCohomologyEntry(i, a, d))
        if violations and first_only:
            break
    violations.sort(key=lambda e: (e.i, e.a))
    return FlcReport(not violations, violations)


@dataclass
class BettiTable:
    """Multigraded Betti numbers of an ideal: ``entries[(i, a)] = beta_{i,a}(I)``."""

    n: int
    entries: dict

    def totals(self) -> dict:
        out: Counter = Counter()
        for (i, a), r in self.entries.items():
            out[(i, sum(a))] += r
        return dict(sorted(out.items()))

    def total_ranks(self) -> list:
        top = max((i for i, _ in self.entries), default=-1)
        return [sum(r for (i, _), r in self.entries.items() if i == k) for k in range(top + 1)]

    def to_dict(self) -> dict:
        rows = [
            {"i": i, "degree": list(a), "rank": r}
            for (i, a), r in sorted(self.entries.items())
        ]
        totals = [{"i": i, "j": j, "rank": r} for (i, j), r in self.totals().items()]
        return {"betti": rows, "totals": totals}


def upper_koszul_masks(ideal: MonomialIdeal, b: Sequence[int]) -> list:
    box = ideal.box
    base = box.index(b)
    support = mask_of(j + 1 for j, x in enumerate(b) if x > 0)
    out = []
    for f in submasks(support):
        idx = base
        rest = f
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            idx -= box.strides[j] if b[j] <= box.bounds[j] else 0
            rest &= rest - 1
        if box.member[idx]:
            out.append(f)
    return out


def graded_betti(ideal: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD, prune: bool = True) -> BettiTable:
    """Multigraded Betti numbers over every b dividing the lcm of the generators.

    With ``prune`` only b equal to the lcm of the generators dividing x^b are
    examined; elsewhere the upper Koszul complex is a cone.
    """
    box = ideal.box
    lcms = box.divisor_lcm if prune else None
    entries = {}
    for idx in range(box.size):
        if not box.member[idx]:
            continue
        b = box.point(idx)
        if prune and lcms[idx] != b:
            continue
        prof = homology_of_faces(upper_koszul_masks(ideal, b), field)
        for k, d in prof.items():
            if d:
                entries[(k + 1, b)] = d
    return BettiTable(ideal.n, entries)


def has_linear_resolution(ideal: MonomialIdeal, field: FieldSpec = DEFAULT_FIELD, table: Optional[BettiTable] = None):
    """(True, None) or (False, (i, j)) for the first nonzero beta_{i,j} with j != delta + i."""
    if not ideal.is_equigenerated:
        raise NotEquigenerated(f"generator degrees {sorted(set(ideal.degrees))}")
    delta = ideal.degrees[0]
    if table is None:
        table = graded_betti(ideal, field)
    for (i, j), r in table.totals().items():
        if r and j != delta + i:
            return False, (i, j)
    return True, None


def hilbert_numerator_coefficient(ideal: MonomialIdeal, a: Sequence[int], member=None) -> int:
    """Coefficient of x^a in the K-polynomial  Hilb(S/I) * prod_j (1 - x_j).

    ``member`` optionally memoizes ``ideal.contains`` by exponent tuple.
    """
    contains = member.__getitem__ if member is not None else ideal.contains
    total = 0
    support = [j for j, x in enumerate(a) if x > 0]
    for r in range(len(support) + 1):
        for drop in itertools.combinations(support, r):
            b = list(a)
            for j in drop:
                b[j] -= 1
            if not contains(tuple(b)):
                total += (-1) ** r
    return total


def taylor_coefficients(ideal: MonomialIdeal) -> dict:
    """K-polynomial of S/I by inclusion-exclusion over lcms of generator subsets."""
    out: Counter = Counter()
    gens = ideal.generators
    for r in range(len(gens) + 1):
        for sub in itertools.combinations(gens, r):
            lcm = tuple(map(max, zip(*sub))) if sub else (0,) * ideal.n
            out[lcm] += (-1) ** r
    return {a: c for a, c in out.items() if c}


def betti_consistency(ideal: MonomialIdeal, table: BettiTable, taylor_limit: int = 14) -> list:
    """Cross-checks of a Betti table; returns a list of problems (empty when sound).

    * beta_0 lists exactly the minimal generators;
    * 1 - sum_i (-1)^i beta_{i,a} matches the Hilbert series numerator at
      every a in the lcm box, and (for few generators) the Taylor lcm
      inclusion-exclusion.
    """
    problems = []
    zeroth = sorted(a for (i, a), r in table.entries.items() if i == 0 for _ in range(r))
    if zeroth != sorted(ideal.generators):
        problems.append("beta_0 does not match the minimal generators")
    by_degree = Counter(ideal.degrees)
    b0 = {j: r for (i, j), r in table.totals().items() if i == 0}
    if b0 != dict(by_degree):
        problems.append(f"beta_0 by degree {b0} != generator degrees {dict(by_degree)}")
    alternating: Counter = Counter()
    for (i, a), r in table.entries.items():
        alternating[a] += (-1) ** i * r
    rho = tuple(map(max, zip(*ideal.generators)))
    points = list(itertools.product(*(range(r + 1) for r in rho)))
    member = {b: ideal.contains(b) for b in points}
    for a in points:
        expected = (1 if not any(a) else 0) - alternating.get(a, 0)
        got = hilbert_numerator_coefficient(ideal, a, member)
        if got != expected:
            problems.append(f"Hilbert numerator at {a}: {got} != {expected}")
    if len(ideal.generators) <= taylor_limit:
        taylor = taylor_coefficients(ideal)
        from_betti = {a: -c for a, c in alternating.items() if c}
        from_betti[(0,) * ideal.n] = 1
        if taylor != {a: c for a, c in from_betti.items() if c}:
            problems.append("Taylor inclusion-exclusion disagrees with the Betti table")
    return problems


def hochster_betti(cx: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> dict:
    """Squarefree Betti numbers of I_cx from induced subcomplexes.

    beta_{i,W}(I) = dim H~_{|W|-i-2}(cx restricted to W).
    """
    out = {}
    full = (1 << cx.n) - 1
    fm = cx.face_masks
    for w in submasks(full):
        if not w:
            continue
        restricted = [f for f in fm if f & w == f]
        size = bin(w).count("1")
        for k, d in homology_of_faces(restricted, field).items():
            i = size - k - 2
            if d and i >= 0:
                vec = tuple(1 if w >> j & 1 else 0 for j in range(cx.n))
                out[(i, vec)] = d
    return out


def multiplicity(cx: SimplicialComplex) -> int:
    """Number of facets of maximal dimension."""
    top = max(len(f) for f in cx.facets)
    return sum(1 for f in cx.facets if len(f) == top)


def local_cohomology_lengths(cx: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> list:
    """[l_1, .., l_{d-1}] with d the Krull dimension, l_i = dim H~_{i-1}(cx).

    This is the length of H^i_m(K[cx]) when K[cx] is Buchsbaum.
    """
    if not is_pure(cx):
        raise NotPure("lengths are only defined here for pure complexes")
    d = dimension(cx) + 1
    h = reduced_homology(cx, field)
    return [h[i - 1] for i in range(1, d)]


def goto_bound(lengths: Sequence[int]) -> int:
    """1 + sum_{i=1}^{d-1} C(d-1, i-1) l_i, the multiplicity lower bound."""
    d = len(lengths) + 1
    return 1 + sum(comb(d - 1, i - 1) * lengths[i - 1] for i in range(1, d))
