"""The rank-function q-matroid and the objects derived from it."""

from __future__ import annotations

import enum
import threading
from typing import Mapping

import numpy as np

from .errors import AxiomViolation, BadRank, NotTotal
from .family import SubspaceFamily, family_max, family_min, family_opp, family_perp
from .subspace import Lattice, Subspace, get_lattice, rref


class FamilyKind(str, enum.Enum):
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"
    BASIS = "basis"
    CIRCUIT = "circuit"
    SPANNING = "spanning"
    NONSPANNING = "nonspanning"
    FLAT = "flat"
    HYPERPLANE = "hyperplane"
    OPEN = "open"
    COCIRCUIT = "cocircuit"
    COOPEN = "coopen"

    @classmethod
    def parse(cls, name: "str | FamilyKind") -> "FamilyKind":
        if isinstance(name, FamilyKind):
            return name
        key = name.strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "independents": "independent",
            "dependents": "dependent",
            "bases": "basis",
            "circuits": "circuit",
            "nonspanningspaces": "nonspanning",
            "spanningspaces": "spanning",
            "flats": "flat",
            "hyperplanes": "hyperplane",
            "opens": "open",
            "openspaces": "open",
            "cocircuits": "cocircuit",
            "coopens": "coopen",
        }
        return cls(aliases.get(key, key))


class ClosureMap:
    """A total map L(E) -> L(E), stored as lattice indices."""

    __slots__ = ("lattice", "table")

    def __init__(self, lattice: Lattice, table):
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (lattice.size,):
            raise NotTotal(f"closure table has {table.size} entries, lattice has {lattice.size}")
        table.setflags(write=False)
        self.lattice = lattice
        self.table = table

    @classmethod
    def from_mapping(cls, q: int, n: int, mapping: Mapping[Subspace, Subspace]) -> "ClosureMap":
        lat = get_lattice(q, n)
        table = np.full(lat.size, -1, dtype=np.int64)
        for A, B in mapping.items():
            table[lat.idx(A)] = lat.idx(B)
        if (table < 0).any():
            missing = lat.spaces[int(np.flatnonzero(table < 0)[0])]
            raise NotTotal(f"closure map undefined at {missing!r}")
        return cls(lat, table)

    @classmethod
    def identity(cls, q: int, n: int) -> "ClosureMap":
        lat = get_lattice(q, n)
        return cls(lat, np.arange(lat.size))

    @property
    def q(self):
        return self.lattice.q

    @property
    def n(self):
        return self.lattice.n

    def __call__(self, A: Subspace) -> Subspace:
        return self.lattice.spaces[int(self.table[self.lattice.idx(A)])]

    def __eq__(self, other):
        if not isinstance(other, ClosureMap):
            return NotImplemented
        return (self.q, self.n) == (other.q, other.n) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.q, self.n, self.table.tobytes()))

    def __repr__(self):
        return f"ClosureMap(q={self.q}, n={self.n})"


class QMatroid:
    """A q-matroid given by its total rank table over L(F_q^n).

    Construct through :func:`from_rank_table`, :func:`uniform` or the
    representable constructors; those validate (R1)-(R3).  The raw
    constructor trusts its input.
    """

    def __init__(self, lattice: Lattice, ranks, provenance: str = "rank_table"):
        ranks = np.asarray(ranks, dtype=np.int64)
        if ranks.shape != (lattice.size,):
            raise NotTotal(f"rank table has {ranks.size} entries, lattice has {lattice.size}")
        ranks.setflags(write=False)
        self.lattice = lattice
        self.ranks = ranks
        self.provenance = provenance
        self._cache: dict = {}
        self._lock = threading.RLock()

    @property
    def q(self) -> int:
        return self.lattice.q

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def full_rank(self) -> int:
        return int(self.ranks[self.lattice.top])

    def __eq__(self, other):
        if not isinstance(other, QMatroid):
            return NotImplemented
        return (self.q, self.n) == (other.q, other.n) and np.array_equal(self.ranks, other.ranks)

    def __hash__(self):
        return hash((self.q, self.n, self.ranks.tobytes()))

    def __repr__(self):
        return f"QMatroid(q={self.q}, n={self.n}, rank={self.full_rank}, provenance={self.provenance!r})"

    def _memo(self, key, build):
        val = self._cache.get(key)
        if val is None:
            with self._lock:
                val = self._cache.get(key)
                if val is None:
                    val = build()
                    self._cache[key] = val
        return val

    def rank(self, A: Subspace) -> int:
        return int(self.ranks[self.lattice.idx(A)])

    def closure(self, A: Subspace) -> Subspace:
        return self.closure_map()(A)

    def closure_map(self) -> ClosureMap:
        return self._memo("closure", lambda: ClosureMap(self.lattice, _closure_table(self)))

    def family(self, kind: "FamilyKind | str") -> SubspaceFamily:
        kind = FamilyKind.parse(kind)
        return self._memo(kind, lambda: _derive(self, kind))

    def dual(self) -> "QMatroid":
        return dual(self)


def _closure_table(M: QMatroid) -> np.ndarray:
    lat = M.lattice
    r = M.ranks
    same = r[lat.join_atom] == r[:, None]
    atom_rows = [lat.spaces[a].rows[0] for a in lat.atoms]
    out = np.empty(lat.size, dtype=np.int64)
    cache: dict[bytes, int] = {}
    for i in range(lat.size):
        sel = same[i]
        key = sel.tobytes()
        hit = cache.get(key)
        if hit is None:
            rows = [atom_rows[k] for k in np.flatnonzero(sel)]
            hit = lat.index[Subspace(lat.q, lat.n, rref(rows, lat.q, lat.n))]
            cache[key] = hit
        out[i] = hit
    return out


def _opens_from_circuits(lat: Lattice, circuits: np.ndarray) -> np.ndarray:
    mask = np.zeros(lat.size, dtype=bool)
    mask[lat.zero] = True
    frontier = np.array([lat.zero])
    if len(circuits) == 0:
        return mask
    join = lat.join
    while len(frontier):
        sums = np.unique(join[np.ix_(frontier, circuits)])
        new = sums[~mask[sums]]
        mask[new] = True
        frontier = new
    return mask


def _derive(M: QMatroid, kind: FamilyKind) -> SubspaceFamily:
    lat = M.lattice
    r = M.ranks
    K = FamilyKind
    if kind is K.INDEPENDENT:
        return SubspaceFamily.from_mask(lat, r == lat.dims)
    if kind is K.DEPENDENT:
        return family_opp(M.family(K.INDEPENDENT))
    if kind is K.BASIS:
        return family_max(M.family(K.INDEPENDENT))
    if kind is K.CIRCUIT:
        return family_min(M.family(K.DEPENDENT))
    if kind is K.SPANNING:
        return SubspaceFamily.from_mask(lat, r == M.full_rank)
    if kind is K.NONSPANNING:
        return family_opp(M.family(K.SPANNING))
    if kind is K.FLAT:
        grows = lat.atoms_in | (r[lat.join_atom] > r[:, None])
        return SubspaceFamily.from_mask(lat, grows.all(axis=1))
    if kind is K.HYPERPLANE:
        flats = M.family(K.FLAT)
        return family_max(flats.without(lat.spaces[lat.top]))
    if kind is K.OPEN:
        return SubspaceFamily.from_mask(
            lat, _opens_from_circuits(lat, M.family(K.CIRCUIT).indices)
        )
    if kind is K.COCIRCUIT:
        return family_perp(M.family(K.HYPERPLANE))
    if kind is K.COOPEN:
        return family_perp(M.family(K.FLAT))
    raise ValueError(kind)


def derive_family(M: QMatroid, kind: "FamilyKind | str") -> SubspaceFamily:
    return M.family(kind)


def rank(M: QMatroid, A: Subspace) -> int:
    return M.rank(A)


def closure(M: QMatroid, A: Subspace) -> Subspace:
    return M.closure(A)


def _validated(lat: Lattice, ranks: np.ndarray, provenance: str, check: bool) -> QMatroid:
    M = QMatroid(lat, ranks, provenance)
    if check:
        from .axioms import check_rank

        variant = "global" if lat.size <= 6000 else "local"
        report = check_rank(ranks, lat, variant=variant)
        if not report.passed:
            raise AxiomViolation(report)
    return M


def from_rank_table(q: int, n: int, entries, check: bool = True) -> QMatroid:
    """Build a q-matroid from a total rank table.

    ``entries`` is a mapping Subspace -> int or an array in lattice order.
    """
    lat = get_lattice(q, n)
    if isinstance(entries, Mapping):
        ranks = np.full(lat.size, -1, dtype=np.int64)
        seen = np.zeros(lat.size, dtype=bool)
        for A, v in entries.items():
            i = lat.idx(A)
            ranks[i] = int(v)
            seen[i] = True
        if not seen.all():
            missing = lat.spaces[int(np.flatnonzero(~seen)[0])]
            raise NotTotal(f"no rank given for {missing!r}")
    else:
        ranks = np.asarray(entries, dtype=np.int64)
        if ranks.shape != (lat.size,):
            raise NotTotal(f"expected {lat.size} ranks, got {ranks.size}")
    return _validated(lat, ranks, "rank_table", check)


def uniform(k: int, n: int, q: int) -> QMatroid:
    """U_{k,n}(F_q): r(A) = min(dim A, k)."""
    if not 0 <= k <= n:
        raise BadRank(f"rank {k} outside [0, {n}]")
    lat = get_lattice(q, n)
    return QMatroid(lat, np.minimum(lat.dims, k), f"uniform({k})")


def free_matroid(q: int, n: int) -> QMatroid:
    return uniform(n, n, q)


def dual(M: QMatroid) -> QMatroid:
    """r*(A) = dim A - r(E) + r(A⊥)."""
    lat = M.lattice
    ranks = lat.dims - M.full_rank + M.ranks[lat.perp]
    return QMatroid(lat, ranks, f"dual({M.provenance})")
