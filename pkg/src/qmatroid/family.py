"""Families of subspaces and the family operators upp/low/max/min/opp/perp."""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import DimensionMismatch, NotAMember
from .subspace import Lattice, Subspace, get_lattice


class SubspaceFamily:
    """An immutable, deduplicated set of subspaces of F_q^n.

    Members are kept as sorted lattice indices, so iteration follows the
    canonical subspace order.
    """

    __slots__ = ("lattice", "indices", "_mask")

    def __init__(self, lattice: Lattice, indices: Iterable[int] | np.ndarray):
        self.lattice = lattice
        idx = np.unique(np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices, dtype=np.int64))
        idx.setflags(write=False)
        self.indices = idx
        self._mask = None

    @classmethod
    def from_mask(cls, lattice: Lattice, mask: np.ndarray) -> "SubspaceFamily":
        fam = cls(lattice, np.flatnonzero(mask))
        return fam

    @classmethod
    def from_spaces(cls, spaces: Iterable[Subspace], q: int | None = None, n: int | None = None):
        spaces = list(spaces)
        if q is None or n is None:
            if not spaces:
                raise DimensionMismatch("q and n are required for an empty family")
            q, n = spaces[0].q, spaces[0].n
        lat = get_lattice(q, n)
        return cls(lat, [lat.idx(S) for S in spaces])

    @property
    def q(self) -> int:
        return self.lattice.q

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            m = np.zeros(self.lattice.size, dtype=bool)
            m[self.indices] = True
            m.setflags(write=False)
            self._mask = m
        return self._mask

    @property
    def members(self) -> tuple[Subspace, ...]:
        sp = self.lattice.spaces
        return tuple(sp[i] for i in self.indices)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, S: Subspace) -> bool:
        return bool(self.mask[self.lattice.idx(S)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceFamily):
            return NotImplemented
        return (self.q, self.n) == (other.q, other.n) and np.array_equal(
            self.indices, other.indices
        )

    def __hash__(self):
        return hash((self.q, self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"SubspaceFamily(q={self.q}, n={self.n}, size={len(self)}, dims={self.dim_counts()})"

    def dim_counts(self) -> dict[int, int]:
        d = self.lattice.dims[self.indices]
        vals, counts = np.unique(d, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def _same(self, other: "SubspaceFamily"):
        if (self.q, self.n) != (other.q, other.n):
            raise DimensionMismatch("families over different ambient spaces")

    def union(self, other: "SubspaceFamily") -> "SubspaceFamily":
        self._same(other)
        return SubspaceFamily(self.lattice, np.concatenate([self.indices, other.indices]))

    def difference(self, other: "SubspaceFamily") -> "SubspaceFamily":
        self._same(other)
        return SubspaceFamily.from_mask(self.lattice, self.mask & ~other.mask)

    def without(self, S: Subspace) -> "SubspaceFamily":
        m = self.mask.copy()
        m[self.lattice.idx(S)] = False
        return SubspaceFamily.from_mask(self.lattice, m)

    def to_rows(self) -> list[list[str]]:
        return [S.row_strings() for S in self.members]

    # family operators as methods
    def upp(self):
        return family_upp(self)

    def low(self):
        return family_low(self)

    def max(self):
        return family_max(self)

    def min(self):
        return family_min(self)

    def opp(self):
        return family_opp(self)

    def perp(self):
        return family_perp(self)


def family_upp(F: SubspaceFamily) -> SubspaceFamily:
    """All X containing some member of F."""
    lat = F.lattice
    if len(F) == 0:
        return SubspaceFamily(lat, [])
    return SubspaceFamily.from_mask(lat, lat.leq[F.indices].any(axis=0))


def family_low(F: SubspaceFamily) -> SubspaceFamily:
    """All X contained in some member of F."""
    lat = F.lattice
    if len(F) == 0:
        return SubspaceFamily(lat, [])
    return SubspaceFamily.from_mask(lat, lat.leq[:, F.indices].any(axis=1))


def family_max(F: SubspaceFamily) -> SubspaceFamily:
    """Inclusion-maximal members."""
    lat = F.lattice
    idx = F.indices
    if len(idx) == 0:
        return F
    sub = lat.lt[np.ix_(idx, idx)]
    return SubspaceFamily(lat, idx[~sub.any(axis=1)])


def family_min(F: SubspaceFamily) -> SubspaceFamily:
    """Inclusion-minimal members."""
    lat = F.lattice
    idx = F.indices
    if len(idx) == 0:
        return F
    sub = lat.lt[np.ix_(idx, idx)]
    return SubspaceFamily(lat, idx[~sub.any(axis=0)])


def family_opp(F: SubspaceFamily) -> SubspaceFamily:
    """Complement of F in L(E)."""
    return SubspaceFamily.from_mask(F.lattice, ~F.mask)


def family_perp(F: SubspaceFamily) -> SubspaceFamily:
    """Orthogonal complements of the members."""
    return SubspaceFamily(F.lattice, F.lattice.perp[F.indices])


def family_covers(F: SubspaceFamily) -> np.ndarray:
    """``cov[i, j]``: j covers i in F (both indices into the lattice).

    Rows and columns outside F are all False.
    """
    lat = F.lattice
    N = lat.size
    idx = F.indices
    cov = np.zeros((N, N), dtype=bool)
    if len(idx) == 0:
        return cov
    lt_f = lat.lt[np.ix_(idx, idx)]
    lt32 = lt_f.astype(np.float32)
    between = (lt32 @ lt32) > 0
    cov[np.ix_(idx, idx)] = lt_f & ~between
    return cov


def covers_in_family(F: SubspaceFamily, A: Subspace) -> SubspaceFamily:
    """Members B of F with A ⊊ B and no member strictly between."""
    lat = F.lattice
    a = lat.idx(A)
    if not F.mask[a]:
        raise NotAMember(f"{A!r} is not a member of the family")
    above = F.indices[lat.lt[a, F.indices]]
    if len(above) == 0:
        return SubspaceFamily(lat, [])
    sub = lat.lt[np.ix_(above, above)]
    return SubspaceFamily(lat, above[~sub.any(axis=0)])


def is_cover(F: SubspaceFamily, A: Subspace, B: Subspace) -> bool:
    """B covers A in F (A ⊊ B, no member of F strictly between)."""
    lat = F.lattice
    a, b = lat.idx(A), lat.idx(B)
    if not (F.mask[a] and F.mask[b]):
        raise NotAMember("both spaces must be members of the family")
    if a == b or not lat.leq[a, b]:
        return False
    between = F.mask & lat.lt[a] & lat.lt[:, b]
    return not between.any()


def max_in(X: Subspace, A: SubspaceFamily) -> SubspaceFamily:
    """Members of A inside X having the largest dimension among such members."""
    lat = A.lattice
    x = lat.idx(X)
    inside = A.indices[lat.leq[A.indices, x]]
    if len(inside) == 0:
        return SubspaceFamily(lat, [])
    d = lat.dims[inside]
    return SubspaceFamily(lat, inside[d == d.max()])


def max_in_matrix(F: SubspaceFamily) -> np.ndarray:
    """``mx[x, i]``: member i lies in space x with maximal dimension there."""
    lat = F.lattice
    inside = lat.leq.T & F.mask[None, :]
    dims = np.where(inside, lat.dims[None, :], -1)
    best = dims.max(axis=1)
    return inside & (dims == best[:, None])


def min_above_matrix(F: SubspaceFamily) -> np.ndarray:
    """``mn[x, i]``: member i contains space x with minimal dimension there."""
    lat = F.lattice
    above = lat.leq & F.mask[None, :]
    big = lat.n + 1
    dims = np.where(above, lat.dims[None, :], big)
    best = dims.min(axis=1)
    return above & (dims == best[:, None])
