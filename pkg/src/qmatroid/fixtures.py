"""Builtin matroids and counterexample families."""

from __future__ import annotations

from .errors import UnknownFixture
from .family import SubspaceFamily, family_low, family_min, family_opp
from .matroid import QMatroid, dual, uniform
from .representable import build_spread, representable_matroid
from .subspace import Subspace, full_space, get_lattice, zero_space

FIXTURES = ("jp18-example10", "jp18-example10-circuits", "lo-prime", "m6", "m6-dual", "u45")


def example10_space() -> Subspace:
    """The 2-space I = <1001, 0110> of F_2^4."""
    return Subspace.from_strings(["1001", "0110"], 2)


def example10_independents() -> SubspaceFamily:
    """I and all its subspaces: satisfies (I1)-(I3) but not (I4)."""
    lat = get_lattice(2, 4)
    return family_low(SubspaceFamily(lat, [lat.idx(example10_space())]))


def example10_circuits() -> SubspaceFamily:
    """min(opp(I)): the twelve loops outside I."""
    return family_min(family_opp(example10_independents()))


def m6() -> QMatroid:
    return representable_matroid(2, 3, 2)


def m6_dual() -> QMatroid:
    return dual(m6())


def u45() -> QMatroid:
    return uniform(4, 5, 2)


def lo_prime() -> SubspaceFamily:
    """{0}, G_1⊥, ..., G_8⊥ and F_2^6: the opens of M6* without G_9⊥."""
    sp = build_spread(2, 3, 6)
    spaces = [zero_space(2, 6), full_space(2, 6)] + [sp.element(i).perp() for i in range(1, 9)]
    return SubspaceFamily.from_spaces(spaces)


def lo_prime_witness() -> tuple[Subspace, Subspace]:
    """(O, X) with O = F_2^6 and X = G_9⊥ + <100100, 100001>."""
    sp = build_spread(2, 3, 6)
    X = sp.element(9).perp() + Subspace.from_strings(["100100", "100001"], 2)
    return full_space(2, 6), X


_BUILDERS = {
    "jp18-example10": example10_independents,
    "jp18-example10-circuits": example10_circuits,
    "lo-prime": lo_prime,
    "m6": m6,
    "m6-dual": m6_dual,
    "u45": u45,
}

# the axiom system each family fixture is meant for
FIXTURE_SYSTEM = {
    "jp18-example10": "independence",
    "jp18-example10-circuits": "circuits",
    "lo-prime": "open",
}


def fixture(name: str):
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None
