"""Representable q-matroids M[G], Desarguesian spreads and the spread rank formula."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadDivisibility, DimensionMismatch, NotCoprime, RankDeficientG, ZeroSpace
from .gf import ExtElem, ExtField, ext_field_build, gamma, gamma_inverse, rank_codes, subfield_rank
from .matroid import QMatroid
from .subspace import Subspace, canonicalize, get_lattice, unpack


@dataclass(frozen=True)
class GeneratorMatrix:
    """A k x n matrix over GF(q^m), entries stored as field codes."""

    field: ExtField
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise DimensionMismatch("ragged generator matrix")
        if self.k and rank_codes(self.field, [list(r) for r in self.rows]) != self.k:
            raise RankDeficientG(f"{self.k} rows but rank {rank_codes(self.field, [list(r) for r in self.rows])}")

    @classmethod
    def from_elems(cls, rows: Sequence[Sequence[ExtElem]]) -> "GeneratorMatrix":
        F = rows[0][0].field
        return cls(F, tuple(tuple(e.code for e in r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> ExtElem:
        return self.field.from_code(self.rows[i][j])

    def image(self, vec: Sequence[int]) -> tuple[int, ...]:
        """G·v for a vector v over GF(q), as field codes."""
        F = self.field
        out = []
        for row in self.rows:
            acc = 0
            for c, a in zip(vec, row):
                if c:
                    acc = F.add_codes(acc, F.scale_code(c, a))
            out.append(acc)
        return tuple(out)

    def to_strings(self) -> list[list[str]]:
        return [[format_elem(self.field, c) for c in r] for r in self.rows]


def format_elem(F: ExtField, code: int) -> str:
    """'0', '1', 'a', 'a7' style alpha-power names."""
    if code == 0:
        return "0"
    k = F.log_code(code)
    return "1" if k == 0 else ("a" if k == 1 else f"a{k}")


def parse_elem(F: ExtField, text: str) -> int:
    """Inverse of :func:`format_elem`; also accepts 'c:0101..' coefficient strings."""
    t = text.strip().lower().replace("^", "").replace("alpha", "a")
    if t.startswith("c:"):
        digits = [int(ch) for ch in t[2:]]
        if len(digits) != F.m:
            raise DimensionMismatch(f"coefficient string needs {F.m} digits")
        return F.to_code(digits)
    if t == "0":
        return 0
    if t == "1":
        return 1 % (F.q**F.m) if F.m > 0 else 1
    if t.startswith("a"):
        k = int(t[1:]) if len(t) > 1 else 1
        return F.alpha_power_code(k)
    raise ValueError(f"cannot parse field element {text!r}")


def matroid_from_matrix(G: GeneratorMatrix, provenance: str | None = None) -> QMatroid:
    """r(A) = rank over GF(q^m) of G·Y, Y a basis matrix of A."""
    F = G.field
    q, n = F.q, G.n
    lat = get_lattice(q, n)
    images = [G.image(unpack(v, q, n)) for v in range(q**n)]
    ranks = np.empty(lat.size, dtype=np.int64)
    for i, S in enumerate(lat.spaces):
        if not S.rows:
            ranks[i] = 0
            continue
        cols = [images[v] for v in S.rows]
        # rank of the k x dim matrix equals rank of its transpose
        ranks[i] = rank_codes(F, [list(c) for c in cols])
    return QMatroid(lat, ranks, provenance or "representable(G)")


@dataclass(frozen=True)
class Spread:
    """Desarguesian spread G_1..G_e of F_q^m; ``elements[i-1]`` is G_i."""

    q: int
    s: int
    m: int
    field: ExtField
    elements: tuple[Subspace, ...]

    @property
    def e(self) -> int:
        return len(self.elements)

    def element(self, i: int) -> Subspace:
        return self.elements[i - 1]


def field_vector(F: ExtField, theta: ExtElem) -> tuple[int, ...]:
    """Coordinates of theta as a vector of F_q^m (position 0 = coefficient of 1)."""
    return gamma(theta)


def build_spread(q: int, s: int, m: int, field: ExtField | None = None) -> Spread:
    if s <= 0 or m <= 0 or m % s:
        raise BadDivisibility(f"s={s} must divide m={m}")
    F = field or ext_field_build(q, m)
    e = (q**m - 1) // (q**s - 1)
    elems = []
    for i in range(1, e + 1):
        gens = [field_vector(F, F.alpha_pow(i + t * e)) for t in range(s)]
        elems.append(canonicalize(gens, q, m))
    return Spread(q, s, m, F, tuple(elems))


def spread_index_of(spread: Spread, x: Subspace) -> int:
    """The unique i with x ⊆ G_i (1-based)."""
    if x.dim == 0:
        raise ZeroSpace("the zero space lies in every spread element")
    hits = [i for i, G in enumerate(spread.elements, start=1) if G.contains(x)]
    if len(hits) != 1:
        raise ValueError(f"{x!r} lies in {len(hits)} spread elements")
    return hits[0]


def spread_matrix(p: int, s: int, q: int, field: ExtField | None = None) -> GeneratorMatrix:
    """p x ps matrix, row j = (alpha^(i q^(js)))_i for j = 0..p-1."""
    if p < 1 or s < 1 or math.gcd(p, s) != 1:
        raise NotCoprime(f"gcd({p}, {s}) != 1")
    m = p * s
    F = field or ext_field_build(q, m)
    if F.m != m:
        raise DimensionMismatch(f"field degree {F.m} != p*s = {m}")
    rows = tuple(
        tuple(F.alpha_power_code(i * q ** (j * s)) for i in range(m)) for j in range(p)
    )
    return GeneratorMatrix(F, rows)


@dataclass(frozen=True)
class SpreadRankInput:
    p: int
    s: int
    q: int
    field: ExtField
    matrix: GeneratorMatrix
    spread: Spread

    @classmethod
    def build(cls, p: int, s: int, q: int, field: ExtField | None = None) -> "SpreadRankInput":
        G = spread_matrix(p, s, q, field)
        return cls(p, s, q, G.field, G, build_spread(q, s, p * s, G.field))

    @property
    def m(self) -> int:
        return self.p * self.s


def spread_indices(inp: SpreadRankInput, basis: Sequence[int]) -> list[int]:
    """Indices j with some basis vector lying in G_j."""
    q, m = inp.q, inp.m
    lines = [canonicalize([unpack(v, q, m)], q, m) for v in basis if v]
    return sorted({spread_index_of(inp.spread, x) for x in lines})


def rank_via_spread_formula(inp: SpreadRankInput, A: Subspace, basis: Sequence[int] | None = None) -> int:
    """r(A) = min(p, mu), mu the GF(q^s)-dimension of <alpha^l : l in S>.

    ``basis`` (packed vectors) defaults to the RREF rows of A.
    """
    if (A.q, A.n) != (inp.q, inp.m):
        raise DimensionMismatch("A must live in F_q^(ps)")
    rows = A.rows if basis is None else tuple(basis)
    S = spread_indices(inp, rows)
    if not S:
        return 0
    F = inp.field
    mu = subfield_rank([F.alpha_pow(l) for l in S], inp.q**inp.s)
    return min(inp.p, mu)


def spread_formula_table(inp: SpreadRankInput) -> np.ndarray:
    lat = get_lattice(inp.q, inp.m)
    return np.array([rank_via_spread_formula(inp, A) for A in lat.spaces], dtype=np.int64)


def representable_matroid(p: int, s: int, q: int, field: ExtField | None = None) -> QMatroid:
    """M[G] for the matrix of the spread construction."""
    G = spread_matrix(p, s, q, field)
    return matroid_from_matrix(G, f"representable(q={q},p={p},s={s})")


def vector_to_elem(F: ExtField, vec: Sequence[int]) -> ExtElem:
    return gamma_inverse(F, vec)


def random_generator_matrix(q: int, n: int, k: int, m: int, seed: int) -> GeneratorMatrix:
    """A seeded random full-rank k x n matrix over GF(q^m)."""
    if not 0 < k <= n:
        raise DimensionMismatch(f"need 0 < k <= n, got k={k}, n={n}")
    F = ext_field_build(q, m)
    rng = np.random.default_rng(seed)
    while True:
        rows = rng.integers(0, F.size, size=(k, n)).tolist()
        if rank_codes(F, [list(r) for r in rows]) == k:
            return GeneratorMatrix(F, tuple(tuple(int(c) for c in r) for r in rows))


def random_representable(q: int, n: int, k: int, m: int, seed: int) -> QMatroid:
    G = random_generator_matrix(q, n, k, m, seed)
    return matroid_from_matrix(G, f"random(q={q},n={n},k={k},m={m},seed={seed})")
