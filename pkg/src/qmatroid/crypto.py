"""Translations between the defining systems of a q-matroid.

Every converter takes the source object, optionally validates it against its
axiom system (``check=True`` raises AxiomViolation on failure) and returns
the target object.  ``CONVERTERS`` maps each implemented arrow to its
function; :func:`roundtrip_verify` walks a path of arrows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import axioms as ax
from .errors import AxiomViolation, PathEdgeMissing
from .family import (
    SubspaceFamily,
    family_low,
    family_max,
    family_min,
    family_opp,
    family_perp,
    family_upp,
)
from .matroid import ClosureMap, QMatroid, dual
from .subspace import Lattice


def _require(report: ax.AxiomReport):
    if not report.passed:
        raise AxiomViolation(report)


# ---------------------------------------------------------------- rank sources


def independents_to_rank(I: SubspaceFamily, check: bool = True) -> QMatroid:
    """r(A) = max{dim I : I in the family, I ⊆ A}."""
    if check:
        _require(ax.check_independence(I))
    lat = I.lattice
    inside = lat.leq[I.indices]  # (member, A)
    r = np.where(inside, lat.dims[I.indices][:, None], 0).max(axis=0) if len(I) else np.zeros(lat.size, np.int64)
    return QMatroid(lat, r, "derived(independent->rank)")


def closure_to_independents(cl: ClosureMap, check: bool = True) -> SubspaceFamily:
    """I is independent iff cl(A) != cl(I) for every codimension-1 A ⊂ I."""
    if check:
        _require(ax.check_closure(cl))
    lat = cl.lattice
    c = cl.table
    same = lat.lattice_cover & (c[:, None] == c[None, :])  # (A, I)
    return SubspaceFamily.from_mask(lat, ~same.any(axis=0))


def closure_to_rank(cl: ClosureMap, check: bool = True) -> QMatroid:
    """r(A) = min{dim I : I ⊆ A, cl(I) = cl(A)}."""
    if check:
        _require(ax.check_closure(cl))
    lat = cl.lattice
    c = cl.table
    ok = lat.leq & (c[:, None] == c[None, :])  # (I, A)
    big = lat.n + 1
    r = np.where(ok, lat.dims[:, None], big).min(axis=0)
    return QMatroid(lat, r, "derived(closure->rank)")


def closure_to_flats(cl: ClosureMap, check: bool = True) -> SubspaceFamily:
    """Fixed points of cl."""
    if check:
        _require(ax.check_closure(cl))
    lat = cl.lattice
    return SubspaceFamily.from_mask(lat, cl.table == np.arange(lat.size))


def _intersection_index(lat: Lattice, idx: np.ndarray) -> int:
    if len(idx) == 0:
        return lat.top
    words = np.bitwise_and.reduce(lat.mask_words[idx], axis=0)
    mask = 0
    for w in range(len(words) - 1, -1, -1):
        mask = (mask << 64) | int(words[w])
    return lat.mask_index[mask]


def flats_to_closure(F: SubspaceFamily, check: bool = True) -> ClosureMap:
    """cl(A) = intersection of all flats containing A (E when there are none)."""
    if check:
        _require(ax.check_flats(F))
    lat = F.lattice
    above = lat.leq[:, F.indices]  # (A, flat)
    table = np.array(
        [_intersection_index(lat, F.indices[above[a]]) for a in range(lat.size)], dtype=np.int64
    )
    return ClosureMap(lat, table)


def flat_heights(F: SubspaceFamily) -> np.ndarray:
    """Height of every flat above the least flat, following least lower covers."""
    from .family import family_covers

    lat = F.lattice
    cov = family_covers(F)  # (lower, upper)
    h = np.full(lat.size, -1, dtype=np.int64)
    order = F.indices[np.argsort(lat.dims[F.indices], kind="stable")]
    for G in order:
        lower = np.flatnonzero(cov[:, G])
        h[G] = 0 if len(lower) == 0 else h[lower[0]] + 1
    return h


def flats_to_rank(F: SubspaceFamily, check: bool = True) -> QMatroid:
    """r(A) = length of a maximal chain of flats from cl({0}) to cl(A)."""
    if check:
        _require(ax.check_flats(F))
    cl = flats_to_closure(F, check=False)
    h = flat_heights(F)
    return QMatroid(F.lattice, h[cl.table], "derived(flat->rank)")


def flats_to_hyperplanes(F: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    """Maximal proper members."""
    if check:
        _require(ax.check_flats(F))
    return family_max(F.without(F.lattice.spaces[F.lattice.top]))


def hyperplanes_to_flats(H: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    """All intersections of sub-collections of H, the empty one giving E."""
    if check:
        _require(ax.check_hyperplanes(H))
    lat = H.lattice
    mask = np.zeros(lat.size, dtype=bool)
    mask[lat.top] = True
    frontier = np.array([lat.top])
    while len(frontier) and len(H):
        new = np.unique(lat.meet[np.ix_(frontier, H.indices)])
        new = new[~mask[new]]
        mask[new] = True
        frontier = new
    return SubspaceFamily.from_mask(lat, mask)


# ---------------------------------------------------------------- opp / extremal arrows


def _checked(system: str, fn: Callable[[SubspaceFamily], SubspaceFamily]):
    def conv(F: SubspaceFamily, check: bool = True) -> SubspaceFamily:
        if check:
            _require(ax.check_system(system, F))
        return fn(F)

    conv.__name__ = f"from_{system}"
    return conv


independents_to_dependents = _checked("independence", family_opp)
dependents_to_independents = _checked("dependence", family_opp)
dependents_to_circuits = _checked("dependence", family_min)
circuits_to_dependents = _checked("circuits", family_upp)
independents_to_bases = _checked("independence", family_max)
bases_to_independents = _checked("bases", family_low)
bases_to_spanning = _checked("bases", family_upp)
spanning_to_bases = _checked("spanning", family_min)
spanning_to_nonspanning = _checked("spanning", family_opp)
nonspanning_to_spanning = _checked("nonspanning", family_opp)
nonspanning_to_hyperplanes = _checked("nonspanning", family_max)
hyperplanes_to_nonspanning = _checked("hyperplanes", family_low)


def circuits_to_opens(C: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    """All sums of circuits, the empty sum giving {0}."""
    from .matroid import _opens_from_circuits

    if check:
        _require(ax.check_circuits(C))
    return SubspaceFamily.from_mask(C.lattice, _opens_from_circuits(C.lattice, C.indices))


def opens_to_circuits(O: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    """Minimal non-zero open spaces."""
    if check:
        _require(ax.check_open(O))
    return family_min(O.without(O.lattice.spaces[O.lattice.zero]))


# ---------------------------------------------------------------- perp transfers


def hyperplanes_to_cocircuits(H: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    if check:
        _require(ax.check_hyperplanes(H))
    return family_perp(H)


def cocircuits_to_hyperplanes(Cs: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    if check:
        _require(ax.check_circuits(Cs))
    return family_perp(Cs)


def flats_to_coopens(F: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    if check:
        _require(ax.check_flats(F))
    return family_perp(F)


def coopens_to_flats(Os: SubspaceFamily, check: bool = True) -> SubspaceFamily:
    if check:
        _require(ax.check_open(Os))
    return family_perp(Os)


def perp_transfers(M: QMatroid) -> dict[str, SubspaceFamily]:
    """The families obtained through orthogonal complements and M*."""
    D = dual(M)
    return {
        "cocircuit": family_perp(M.family("hyperplane")),
        "coopen": family_perp(M.family("flat")),
        "spanning": family_perp(D.family("independent")),
        "nonspanning": family_perp(D.family("dependent")),
    }


@dataclass
class SpanningReadings:
    """The two readings of 'S⊥ = I' for spanning and independent spaces."""

    via_dual: bool  # spanning(M)⊥ == independents(M*)
    literal: bool  # spanning(M)⊥ == independents(M)
    literal_diff: int  # size of the symmetric difference in the literal reading

    def to_json(self) -> dict:
        return {"via_dual": self.via_dual, "literal": self.literal, "literal_diff": self.literal_diff}


def spanning_readings(M: QMatroid) -> SpanningReadings:
    Sp = family_perp(M.family("spanning"))
    lit = M.family("independent")
    diff = int((Sp.mask ^ lit.mask).sum())
    return SpanningReadings(Sp == dual(M).family("independent"), diff == 0, diff)


# ---------------------------------------------------------------- paths


def _native(M: QMatroid, system: str):
    if system == "rank":
        return M
    if system == "closure":
        return M.closure_map()
    return M.family(system)


def _from_rank(kind: str):
    def conv(M: QMatroid, check: bool = True):
        if check:
            _require(ax.check_rank(M, variant="global" if M.lattice.size <= 6000 else "local"))
        return M.closure_map() if kind == "closure" else M.family(kind)

    conv.__name__ = f"rank_to_{kind}"
    return conv


SYSTEM_NAMES = (
    "rank", "closure", "independent", "dependent", "basis", "circuit", "flat",
    "hyperplane", "open", "spanning", "nonspanning", "cocircuit", "coopen",
)

_ALIASES = {
    "ranks": "rank", "r": "rank", "cl": "closure", "closures": "closure",
    "independents": "independent", "independence": "independent",
    "dependents": "dependent", "dependence": "dependent",
    "bases": "basis", "circuits": "circuit", "flats": "flat", "hyperplanes": "hyperplane",
    "opens": "open", "non-spanning": "nonspanning", "cocircuits": "cocircuit",
    "coopens": "coopen", "co-open": "coopen", "co-opens": "coopen",
}


def canonical_system(name: str) -> str:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in SYSTEM_NAMES:
        raise PathEdgeMissing(f"unknown system {name!r}")
    return key


CONVERTERS: dict[tuple[str, str], Callable] = {
    ("independent", "rank"): independents_to_rank,
    ("closure", "independent"): closure_to_independents,
    ("closure", "rank"): closure_to_rank,
    ("closure", "flat"): closure_to_flats,
    ("flat", "closure"): flats_to_closure,
    ("flat", "rank"): flats_to_rank,
    ("flat", "hyperplane"): flats_to_hyperplanes,
    ("hyperplane", "flat"): hyperplanes_to_flats,
    ("independent", "dependent"): independents_to_dependents,
    ("dependent", "independent"): dependents_to_independents,
    ("dependent", "circuit"): dependents_to_circuits,
    ("circuit", "dependent"): circuits_to_dependents,
    ("independent", "basis"): independents_to_bases,
    ("basis", "independent"): bases_to_independents,
    ("basis", "spanning"): bases_to_spanning,
    ("spanning", "basis"): spanning_to_bases,
    ("spanning", "nonspanning"): spanning_to_nonspanning,
    ("nonspanning", "spanning"): nonspanning_to_spanning,
    ("nonspanning", "hyperplane"): nonspanning_to_hyperplanes,
    ("hyperplane", "nonspanning"): hyperplanes_to_nonspanning,
    ("circuit", "open"): circuits_to_opens,
    ("open", "circuit"): opens_to_circuits,
    ("hyperplane", "cocircuit"): hyperplanes_to_cocircuits,
    ("cocircuit", "hyperplane"): cocircuits_to_hyperplanes,
    ("flat", "coopen"): flats_to_coopens,
    ("coopen", "flat"): coopens_to_flats,
}
for _k in SYSTEM_NAMES[1:]:
    CONVERTERS[("rank", _k)] = _from_rank(_k)


@dataclass(frozen=True)
class ConversionPath:
    systems: tuple[str, ...]

    @classmethod
    def parse(cls, spec: "str | Sequence[str]") -> "ConversionPath":
        parts = spec.split(",") if isinstance(spec, str) else list(spec)
        systems = tuple(canonical_system(p) for p in parts if p.strip())
        if not systems:
            raise PathEdgeMissing("empty conversion path")
        for a, b in zip(systems, systems[1:]):
            if (a, b) not in CONVERTERS:
                raise PathEdgeMissing(f"no converter {a} -> {b}")
        return cls(systems)

    def __str__(self):
        return ",".join(self.systems)


def same_object(a, b) -> bool:
    """Equality of canonical forms (rank tables, closure tables or member lists)."""
    if type(a) is not type(b):
        return False
    if isinstance(a, QMatroid):
        return (a.q, a.n) == (b.q, b.n) and np.array_equal(a.ranks, b.ranks)
    if isinstance(a, ClosureMap):
        return a == b
    return a == b


@dataclass
class RoundtripReport:
    path: ConversionPath
    ok: bool
    steps: list[dict] = field(default_factory=list)
    divergence: str | None = None

    def to_json(self) -> dict:
        return {"path": str(self.path), "ok": self.ok, "steps": self.steps, "divergence": self.divergence}


def roundtrip_verify(M: QMatroid, path: "ConversionPath | str | Sequence[str]",
                     check: bool = True) -> RoundtripReport:
    """Convert along ``path`` starting from M's object for path[0].

    Every intermediate object is compared with M's own object for that
    system; the first mismatch is reported.
    """
    if not isinstance(path, ConversionPath):
        path = ConversionPath.parse(path)
    obj = _native(M, path.systems[0])
    rep = RoundtripReport(path, True)
    for a, b in zip(path.systems, path.systems[1:]):
        obj = CONVERTERS[(a, b)](obj, check=check)
        match = same_object(obj, _native(M, b))
        rep.steps.append({"edge": f"{a}->{b}", "match": match})
        if not match:
            rep.ok = False
            rep.divergence = f"{a}->{b}"
            break
    return rep


def cycles(max_len: int = 4) -> list[ConversionPath]:
    """All simple directed cycles of at most ``max_len`` arrows, each listed once."""
    nodes = sorted({a for a, _ in CONVERTERS})
    out: list[tuple[str, ...]] = []
    adj: dict[str, list[str]] = {}
    for a, b in CONVERTERS:
        adj.setdefault(a, []).append(b)

    def walk(start, cur, seen):
        for nxt in sorted(adj.get(cur, [])):
            if nxt == start and len(seen) >= 2:
                out.append(tuple(seen) + (start,))
            elif nxt not in seen and len(seen) < max_len and nxt > start:
                walk(start, nxt, seen + [nxt])

    for s in nodes:
        walk(s, s, [s])
    return [ConversionPath(c) for c in out]
