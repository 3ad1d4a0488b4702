import pytest

from qmatroid import crypto as cr
from qmatroid.errors import AxiomViolation, PathEdgeMissing
from qmatroid.family import family_min, family_perp, family_upp
from qmatroid.fixtures import example10_independents, lo_prime
from qmatroid.matroid import dual, uniform

from conftest import random_test_matroids

SMALL = [uniform(k, 4, 2) for k in range(5)] + random_test_matroids()[:6]


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.provenance)
def test_every_short_cycle_returns_home(M):
    for path in cr.cycles(4):
        rep = cr.roundtrip_verify(M, path)
        assert rep.ok, (str(path), rep.divergence)


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.provenance)
def test_direct_converters(M):
    assert cr.flats_to_rank(M.family("flat")) == M
    assert cr.closure_to_rank(M.closure_map()) == M
    assert cr.independents_to_rank(M.family("independent")) == M
    assert cr.hyperplanes_to_flats(M.family("hyperplane")) == M.family("flat")
    assert cr.flats_to_hyperplanes(M.family("flat")) == M.family("hyperplane")
    assert cr.opens_to_circuits(M.family("open")) == M.family("circuit")
    assert family_upp(family_min(M.family("dependent"))) == M.family("dependent")


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.provenance)
def test_perp_transfers(M):
    D = dual(M)
    assert family_perp(M.family("basis")) == D.family("basis")
    assert M.family("circuit") == D.family("cocircuit")
    assert D.family("open") == family_perp(M.family("flat"))
    readings = cr.spanning_readings(M)
    assert readings.via_dual


def test_spanning_literal_reading_holds_for_self_dual_uniform():
    assert cr.spanning_readings(uniform(2, 4, 2)).literal
    assert not cr.spanning_readings(uniform(3, 4, 2)).literal


def test_flat_heights_give_rank(M6):
    assert (cr.flat_heights(M6.family("flat"))[M6.closure_map().table] == M6.ranks).all()


def test_converters_validate_their_input():
    with pytest.raises(AxiomViolation):
        cr.independents_to_rank(example10_independents())
    with pytest.raises(AxiomViolation):
        cr.opens_to_circuits(lo_prime())


def test_paths():
    p = cr.ConversionPath.parse("rank, closure, flats ,hyperplanes,flats,rank")
    assert str(p) == "rank,closure,flat,hyperplane,flat,rank"
    assert cr.roundtrip_verify(uniform(1, 3, 2), "rank").ok
    with pytest.raises(PathEdgeMissing):
        cr.ConversionPath.parse("circuit,flat")
    with pytest.raises(PathEdgeMissing):
        cr.ConversionPath.parse("bicolouring,rank")


def test_named_cycles_are_enumerated():
    names = {str(c) for c in cr.cycles(4)}
    for want in ("closure,rank,closure", "flat,rank,flat", "flat,hyperplane,flat",
                 "closure,independent,rank,closure", "dependent,independent,dependent",
                 "circuit,dependent,circuit", "cocircuit,hyperplane,cocircuit", "coopen,flat,coopen"):
        assert want in names


def test_m6_paths_from_the_examples(M6):
    assert cr.roundtrip_verify(M6, "rank,closure,independent,rank").ok
    assert cr.roundtrip_verify(M6, "flat,hyperplane,flat").ok
