"""Exact ranks over Q or GF(p) and reduced simplicial homology."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .complex import SimplicialComplex


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p=None`` means the rationals, otherwise GF(p)."""

    p: Optional[int] = 32003

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = str(text).strip().lower()
        if text in ("q", "qq", "rational", "rationals"):
            return cls(None)
        return cls(int(text))

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "rational" if self.p is None else str(self.p)


RATIONAL = FieldSpec(None)
DEFAULT_FIELD = FieldSpec(32003)


def sparse_rank(rows: Iterable[Mapping[int, int]], field: FieldSpec = DEFAULT_FIELD) -> int:
    """Rank of a matrix given as sparse rows ``{column: entry}``.

    Plain Gaussian elimination; entries are reduced mod p, or promoted to
    Fractions over Q.
    """
    p = field.p
    pivots: dict = {}
    rank = 0
    for row in rows:
        if p is None:
            r = {c: Fraction(v) for c, v in row.items() if v}
        else:
            r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                inv = (1 / r[c]) if p is None else pow(r[c], -1, p)
                if p is None:
                    r = {k: v * inv for k, v in r.items()}
                else:
                    r = {k: v * inv % p for k, v in r.items()}
                pivots[c] = r
                rank += 1
                break
            f = r[c]
            for k, v in pr.items():
                nv = r.get(k, 0) - f * v
                if p is not None:
                    nv %= p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def matrix_rank(matrix: Sequence[Sequence], field: FieldSpec = DEFAULT_FIELD) -> int:
    rows = [{j: v for j, v in enumerate(row) if v} for row in matrix]
    return sparse_rank(rows, field)


class HomologyProfile(dict):
    """Reduced Betti numbers ``{i: dim H~_i}``; missing indices read as zero."""

    def __missing__(self, key):
        return 0

    def nonzero(self) -> dict:
        return {i: d for i, d in sorted(self.items()) if d}


def homology_of_faces(face_masks: Iterable[int], field: FieldSpec = DEFAULT_FIELD) -> HomologyProfile:
    """Reduced homology of the downward-closed family of bitmask faces.

    An empty family is the void complex (all zero); ``{0}`` is ``{∅}``.
    """
    layers: dict = {}
    for m in face_masks:
        layers.setdefault(bin(m).count("1"), []).append(m)
    out = HomologyProfile()
    if not layers:
        return out
    top = max(layers)
    index = {k: {m: j for j, m in enumerate(sorted(layer))} for k, layer in layers.items()}
    # ranks[k] = rank of the boundary from faces of size k to faces of size k - 1
    ranks = {0: 0, top + 1: 0}
    for k in range(1, top + 1):
        lower = index[k - 1]
        rows = []
        for m in layers[k]:
            row = {}
            sign = 1
            rest = m
            while rest:
                low = rest & -rest
                row[lower[m & ~low]] = sign
                sign = -sign
                rest &= rest - 1
            rows.append(row)
        ranks[k] = sparse_rank(rows, field)
    for k in range(0, top + 1):
        d = len(layers[k]) - ranks[k] - ranks[k + 1]
        if d:
            out[k - 1] = d
    return out


def reduced_homology(cx: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> HomologyProfile:
    return homology_of_faces(cx.face_masks, field)


def reduced_euler_characteristic(face_masks: Iterable[int]) -> int:
    """Sum over faces of (-1)^(dim F), the empty face counting -1."""
    return sum((-1) ** (bin(m).count("1") - 1) for m in face_masks)
