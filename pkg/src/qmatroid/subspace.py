"""Subspaces of F_q^n in canonical (RREF) form and the subspace lattice.

A vector of F_q^n is packed into an int with the first coordinate as the
most significant base-q digit, so ``"110000"`` over F_2 is ``0b110000``.
A :class:`Subspace` keeps the packed rows of its reduced row echelon form,
leftmost pivot first.  Subspaces are ordered by ``(dim, rows)``; every
"first witness" in the package refers to this order.

:class:`Lattice` enumerates all of L(F_q^n) once per ``(q, n)`` and keeps the
numpy tables (inclusion, meet, join, complements) that the exhaustive
checkers run on.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, LatticeTooLarge

DEFAULT_LATTICE_CAP = 30_000
# dense N x N tables are built only below this size
DENSE_TABLE_CAP = 6_000


def lattice_cap() -> int:
    env = os.environ.get("QMAT_LATTICE_CAP")
    return int(env) if env else DEFAULT_LATTICE_CAP


# -- packed vectors ---------------------------------------------------------


def pack(digits: Sequence[int], q: int) -> int:
    code = 0
    for d in digits:
        code = code * q + (int(d) % q)
    return code


def unpack(code: int, q: int, n: int) -> list[int]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = code % q
        code //= q
    return out


def _leading(code: int, q: int, n: int) -> tuple[int, int]:
    """(pivot column, pivot digit) of a non-zero packed vector."""
    if q == 2:
        return n - code.bit_length(), 1
    digits = unpack(code, q, n)
    for i, d in enumerate(digits):
        if d:
            return i, d
    raise ValueError("zero vector has no pivot")


def _coerce_vector(v, q: int, n: int) -> int:
    if isinstance(v, str):
        if len(v) != n:
            raise DimensionMismatch(f"vector {v!r} does not have length {n}")
        return pack([int(c, 36) for c in v], q)
    if isinstance(v, (int, np.integer)):
        v = int(v)
        if not 0 <= v < q**n:
            raise DimensionMismatch(f"packed vector {v} out of range for F_{q}^{n}")
        return v
    v = list(v)
    if len(v) != n:
        raise DimensionMismatch(f"vector of length {len(v)} in F_{q}^{n}")
    if any(not 0 <= int(x) < q for x in v):
        raise DimensionMismatch(f"entries of {v} not in [0, {q})")
    return pack(v, q)


def rref(rows: Iterable[int], q: int, n: int) -> tuple[int, ...]:
    """Reduced row echelon form of packed rows; zero rows dropped."""
    if q == 2:
        basis: dict[int, int] = {}  # pivot bit -> row
        for r in rows:
            for bit, b in basis.items():
                if r >> bit & 1:
                    r ^= b
            if not r:
                continue
            top = r.bit_length() - 1
            for bit in list(basis):
                if basis[bit] >> top & 1:
                    basis[bit] ^= r
            basis[top] = r
        return tuple(basis[b] for b in sorted(basis, reverse=True))

    mat: list[list[int]] = []
    pivots: list[int] = []
    for code in rows:
        v = unpack(code, q, n)
        for piv, row in zip(pivots, mat):
            c = v[piv]
            if c:
                v = [(a - c * b) % q for a, b in zip(v, row)]
        lead = next((i for i, d in enumerate(v) if d), None)
        if lead is None:
            continue
        inv = pow(v[lead], q - 2, q)
        v = [(a * inv) % q for a in v]
        for k, row in enumerate(mat):
            c = row[lead]
            if c:
                mat[k] = [(a - c * b) % q for a, b in zip(row, v)]
        mat.append(v)
        pivots.append(lead)
    order = sorted(range(len(mat)), key=lambda k: pivots[k])
    return tuple(pack(mat[k], q) for k in order)


def _reduce_vec(code: int, rows: tuple[int, ...], q: int, n: int) -> int:
    """Remainder of ``code`` modulo the RREF ``rows``."""
    if q == 2:
        for r in rows:
            if code >> (r.bit_length() - 1) & 1:
                code ^= r
        return code
    v = unpack(code, q, n)
    for r in rows:
        rv = unpack(r, q, n)
        piv = next(i for i, d in enumerate(rv) if d)
        c = v[piv]
        if c:
            v = [(a - c * b) % q for a, b in zip(v, rv)]
    return pack(v, q)


# -- subspaces --------------------------------------------------------------


@dataclass(frozen=True, order=False)
class Subspace:
    """A subspace of F_q^n stored by its canonical RREF rows."""

    q: int
    n: int
    rows: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def key(self) -> tuple:
        return (len(self.rows), self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self.key < other.key

    def __le__(self, other: "Subspace") -> bool:
        return self.key <= other.key

    def _check(self, other: "Subspace"):
        if (self.q, self.n) != (other.q, other.n):
            raise DimensionMismatch(
                f"ambient F_{self.q}^{self.n} vs F_{other.q}^{other.n}"
            )

    def contains(self, other: "Subspace") -> bool:
        """True when ``other`` is a subspace of ``self``."""
        self._check(other)
        if other.dim > self.dim:
            return False
        return all(_reduce_vec(r, self.rows, self.q, self.n) == 0 for r in other.rows)

    def contains_vector(self, v) -> bool:
        return _reduce_vec(_coerce_vector(v, self.q, self.n), self.rows, self.q, self.n) == 0

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.q, self.n, rref(self.rows + other.rows, self.q, self.n))

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def perp(self) -> "Subspace":
        return orthogonal_complement(self)

    def vectors(self) -> list[int]:
        """All packed vectors of the subspace."""
        q = self.q
        vecs = [0]
        if q == 2:
            for r in self.rows:
                vecs += [v ^ r for v in vecs]
            return vecs
        n = self.n
        for r in self.rows:
            rd = unpack(r, q, n)
            new = []
            for c in range(1, q):
                scaled = [(c * d) % q for d in rd]
                for v in vecs:
                    vd = unpack(v, q, n)
                    new.append(pack([(a + b) % q for a, b in zip(vd, scaled)], q))
            vecs += new
        return vecs

    def mask(self) -> int:
        m = 0
        for v in self.vectors():
            m |= 1 << v
        return m

    def row_strings(self) -> list[str]:
        return ["".join(str(d) for d in unpack(r, self.q, self.n)) for r in self.rows]

    def basis_vectors(self) -> list[tuple[int, ...]]:
        return [tuple(unpack(r, self.q, self.n)) for r in self.rows]

    @classmethod
    def from_strings(cls, rows: Sequence[str], q: int, n: int | None = None) -> "Subspace":
        if n is None:
            if not rows:
                raise DimensionMismatch("cannot infer n from an empty row list")
            n = len(rows[0])
        return canonicalize(list(rows), q, n)

    def __repr__(self) -> str:
        inner = ",".join(self.row_strings())
        return f"<{inner}>" if inner else f"<0 in F_{self.q}^{self.n}>"


def canonicalize(generators: Sequence, q: int, n: int) -> Subspace:
    """RREF span of the generators (strings, digit sequences or packed ints)."""
    codes = [_coerce_vector(g, q, n) for g in generators]
    return Subspace(q, n, rref(codes, q, n))


def zero_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, ())


def full_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, tuple(q ** (n - 1 - i) for i in range(n)))


def span_sum(A: Subspace, B: Subspace) -> Subspace:
    return A + B


def contains(A: Subspace, B: Subspace) -> bool:
    """B is a subspace of A."""
    return A.contains(B)


def dim(A: Subspace) -> int:
    return A.dim


def orthogonal_complement(A: Subspace) -> Subspace:
    """Kernel of the basis matrix under the standard dot product."""
    q, n = A.q, A.n
    mat = [unpack(r, q, n) for r in A.rows]
    pivots = [next(i for i, d in enumerate(row) if d) for row in mat]
    free = [c for c in range(n) if c not in pivots]
    gens = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for piv, row in zip(pivots, mat):
            v[piv] = (-row[f]) % q
        gens.append(pack(v, q))
    return Subspace(q, n, rref(gens, q, n))


def intersect(A: Subspace, B: Subspace) -> Subspace:
    """A ∩ B computed as (A⊥ + B⊥)⊥."""
    A._check(B)
    return orthogonal_complement(orthogonal_complement(A) + orthogonal_complement(B))


def intersect_zassenhaus(A: Subspace, B: Subspace) -> Subspace:
    """A ∩ B by the Zassenhaus sum-intersection algorithm (cross-check)."""
    A._check(B)
    q, n = A.q, A.n
    rows = []
    for r in A.rows:
        rows.append(r * q**n + r)
    for r in B.rows:
        rows.append(r * q**n)
    red = rref(rows, q, 2 * n)
    inter = [r for r in red if r < q**n]
    return Subspace(q, n, rref(inter, q, n))


# -- enumeration --------------------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def lattice_size(q: int, n: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _rref_of_dim(q: int, n: int, k: int) -> list[tuple[int, ...]]:
    from itertools import combinations, product

    out = []
    for pivots in combinations(range(n), k):
        slots = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in product(range(q), repeat=len(slots)):
            mat = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                mat[i][p] = 1
            for (i, c), val in zip(slots, values):
                mat[i][c] = val
            out.append(tuple(pack(row, q) for row in mat))
    out.sort()
    return out


def enumerate_subspaces(
    q: int, n: int, dim_filter: int | Iterable[int] | None = None, cap: int | None = None
) -> Iterator[Subspace]:
    """Every subspace of F_q^n exactly once, in canonical order."""
    cap = lattice_cap() if cap is None else cap
    total = lattice_size(q, n)
    if total > cap:
        raise LatticeTooLarge(f"L(F_{q}^{n}) has {total} subspaces, cap is {cap}")
    if dim_filter is None:
        dims = range(n + 1)
    elif isinstance(dim_filter, int):
        dims = [dim_filter]
    else:
        dims = sorted(set(dim_filter))
    for k in dims:
        for rows in _rref_of_dim(q, n, k):
            yield Subspace(q, n, rows)


# -- the lattice with dense tables --------------------------------------------


class Lattice:
    """All subspaces of F_q^n with index-based lattice tables.

    Index order equals canonical order.  Tables are built lazily and at most
    once (guarded by a lock); after construction they are read-only.
    """

    def __init__(self, q: int, n: int, cap: int | None = None):
        self.q = q
        self.n = n
        self.spaces: list[Subspace] = list(enumerate_subspaces(q, n, cap=cap))
        self.size = len(self.spaces)
        self.index: dict[Subspace, int] = {S: i for i, S in enumerate(self.spaces)}
        self.dims = np.array([S.dim for S in self.spaces], dtype=np.int64)
        self.masks: list[int] = [S.mask() for S in self.spaces]
        self.mask_index = {m: i for i, m in enumerate(self.masks)}
        self.nvec = q**n
        self.zero = 0
        self.top = self.size - 1
        self._lock = threading.RLock()

    def __repr__(self):
        return f"Lattice(q={self.q}, n={self.n}, size={self.size})"

    def __len__(self):
        return self.size

    def idx(self, S: Subspace) -> int:
        if (S.q, S.n) != (self.q, self.n):
            raise DimensionMismatch(f"{S!r} is not in F_{self.q}^{self.n}")
        return self.index[S]

    def _locked(self, name, build):
        val = self.__dict__.get(name)
        if val is None:
            with self._lock:
                val = self.__dict__.get(name)
                if val is None:
                    val = build()
                    if isinstance(val, np.ndarray):
                        val.setflags(write=False)
                    self.__dict__[name] = val
        return val

    def _dense_guard(self):
        if self.size > DENSE_TABLE_CAP:
            raise LatticeTooLarge(
                f"dense tables need N <= {DENSE_TABLE_CAP}; L(F_{self.q}^{self.n}) has {self.size}"
            )

    # word-packed membership masks, shape (N, W)
    @property
    def mask_words(self) -> np.ndarray:
        def build():
            W = (self.nvec + 63) // 64
            arr = np.zeros((self.size, W), dtype=np.uint64)
            full = (1 << 64) - 1
            for i, m in enumerate(self.masks):
                for w in range(W):
                    arr[i, w] = (m >> (64 * w)) & full
            return arr

        return self._locked("_mask_words", build)

    @property
    def perp(self) -> np.ndarray:
        def build():
            return np.array(
                [self.index[orthogonal_complement(S)] for S in self.spaces], dtype=np.int64
            )

        return self._locked("_perp", build)

    @property
    def atoms(self) -> np.ndarray:
        return self._locked("_atoms", lambda: np.flatnonzero(self.dims == 1))

    @property
    def coatoms(self) -> np.ndarray:
        """Codimension-1 subspaces, in canonical order."""
        return self._locked("_coatoms", lambda: np.flatnonzero(self.dims == self.n - 1))

    @property
    def leq(self) -> np.ndarray:
        """``leq[i, j]`` is True when space i is contained in space j."""

        def build():
            self._dense_guard()
            M = self.mask_words
            out = np.ones((self.size, self.size), dtype=bool)
            for w in range(M.shape[1]):
                col = M[:, w]
                out &= (col[:, None] & col[None, :]) == col[:, None]
            return out

        return self._locked("_leq", build)

    @property
    def meet(self) -> np.ndarray:
        def build():
            self._dense_guard()
            N = self.size
            M = self.mask_words
            out = np.empty((N, N), dtype=np.int32)
            if M.shape[1] == 1:
                col = M[:, 0]
                order = np.argsort(col)
                sorted_masks = col[order]
                for start in range(0, N, 256):
                    block = col[start : start + 256, None] & col[None, :]
                    pos = np.searchsorted(sorted_masks, block)
                    out[start : start + 256] = order[pos]
            else:
                for i in range(N):
                    mi = self.masks[i]
                    for j in range(i, N):
                        k = self.mask_index[mi & self.masks[j]]
                        out[i, j] = out[j, i] = k
            return out

        return self._locked("_meet", build)

    @property
    def join(self) -> np.ndarray:
        def build():
            p = self.perp
            return p[self.meet[np.ix_(p, p)]].astype(np.int32)

        return self._locked("_join", build)

    @property
    def atoms_in(self) -> np.ndarray:
        """``atoms_in[i, a]``: the a-th atom lies in space i."""
        return self._locked("_atoms_in", lambda: np.ascontiguousarray(self.leq[self.atoms].T))

    @property
    def in_coatoms(self) -> np.ndarray:
        """``in_coatoms[i, h]``: space i lies in the h-th coatom."""
        return self._locked(
            "_in_coatoms", lambda: np.ascontiguousarray(self.leq[:, self.coatoms])
        )

    @property
    def join_atom(self) -> np.ndarray:
        """``join_atom[i, a]`` = index of space_i + atom_a."""

        def build():
            if self.size <= DENSE_TABLE_CAP:
                return np.ascontiguousarray(self.join[:, self.atoms])
            # large lattices: no dense join, reduce each atom against each space
            atom_vecs = [self.spaces[a].rows[0] for a in self.atoms]
            out = np.empty((self.size, len(atom_vecs)), dtype=np.int32)
            q, n = self.q, self.n
            for i, S in enumerate(self.spaces):
                for k, v in enumerate(atom_vecs):
                    if _reduce_vec(v, S.rows, q, n) == 0:
                        out[i, k] = i
                    else:
                        out[i, k] = self.index[Subspace(q, n, rref(S.rows + (v,), q, n))]
            return out

        return self._locked("_join_atom", build)

    @property
    def meet_coatom(self) -> np.ndarray:
        return self._locked(
            "_meet_coatom", lambda: np.ascontiguousarray(self.meet[:, self.coatoms])
        )

    @property
    def lt(self) -> np.ndarray:
        def build():
            out = self.leq.copy()
            np.fill_diagonal(out, False)
            return out

        return self._locked("_lt", build)

    @property
    def lattice_cover(self) -> np.ndarray:
        """``lattice_cover[i, j]``: j covers i in L(E) (i ⊂ j, dim j = dim i + 1)."""
        return self._locked(
            "_lattice_cover",
            lambda: self.leq & (self.dims[None, :] == self.dims[:, None] + 1),
        )

    # convenience wrappers used outside hot loops
    def sum_idx(self, i: int, j: int) -> int:
        if self.size <= DENSE_TABLE_CAP:
            return int(self.join[i, j])
        return self.index[self.spaces[i] + self.spaces[j]]

    def meet_idx(self, i: int, j: int) -> int:
        if self.size <= DENSE_TABLE_CAP:
            return int(self.meet[i, j])
        return self.mask_index[self.masks[i] & self.masks[j]]

    def subset(self, i: int, j: int) -> bool:
        return (self.masks[i] & self.masks[j]) == self.masks[i]


_LATTICES: dict[tuple[int, int], Lattice] = {}
_LATTICE_LOCK = threading.Lock()


def get_lattice(q: int, n: int) -> Lattice:
    """Shared lattice for (q, n); the cap is checked on first construction."""
    key = (q, n)
    lat = _LATTICES.get(key)
    if lat is None:
        with _LATTICE_LOCK:
            lat = _LATTICES.get(key)
            if lat is None:
                lat = Lattice(q, n)
                _LATTICES[key] = lat
    return lat
