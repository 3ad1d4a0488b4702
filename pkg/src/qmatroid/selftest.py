"""A quick end-to-end sanity run used by ``qmatroid selftest``."""

from __future__ import annotations

import numpy as np

from . import axioms as ax
from .crypto import roundtrip_verify
from .fixtures import example10_independents, lo_prime, m6, u45
from .representable import build_spread


def _spread_ok(q, s, m) -> bool:
    sp = build_spread(q, s, m)
    hits = np.zeros(q**m, dtype=np.int64)
    for G in sp.elements:
        hits[G.vectors()] += 1
    return bool((hits[1:] == 1).all())


def run() -> list[tuple[str, bool, str]]:
    out = []

    def record(name, fn):
        try:
            ok, detail = fn()
        except Exception as e:  # report, never crash the selftest
            ok, detail = False, f"{type(e).__name__}: {e}"
        out.append((name, ok, detail))

    record("spread (2,3,6) partitions F_2^6", lambda: (_spread_ok(2, 3, 6), ""))

    def m6_counts():
        M = m6()
        r1 = M.ranks == 1
        c2 = int((r1 & (M.lattice.dims == 2)).sum())
        c3 = int((r1 & (M.lattice.dims == 3)).sum())
        ok = set(np.unique(M.ranks).tolist()) == {0, 1, 2} and (c2, c3) == (63, 9)
        return ok, f"rank-1 spaces: {c2} of dim 2, {c3} of dim 3"

    record("M6 rank table", m6_counts)

    def ex10():
        rep = ax.check_independence(example10_independents(), variant="I4", mode="exhaustive")
        return rep.verdict("I3").passed and not rep.verdict("I4").passed, ""

    record("example10 fails I4 only", ex10)

    def lo():
        F = lo_prime()
        a = ax.check_open(F, variant="O3", mode="exhaustive")
        b = ax.check_open(F, variant="O3bar", mode="exhaustive")
        return (not a.passed) and b.passed, ""

    record("lo-prime fails O3, passes O3bar", lo)

    def rt():
        M = u45()
        return all(roundtrip_verify(M, p).ok for p in ("rank,closure,rank", "flat,hyperplane,flat")), ""

    record("U(4,5) round trips", rt)
    record("U(4,5) double dual", lambda: (u45().dual().dual() == u45(), ""))
    return out
