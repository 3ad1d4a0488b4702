import numpy as np
import pytest

from qmatroid.errors import BadDivisibility, NotCoprime, RankDeficientG, ZeroSpace
from qmatroid.gf import ext_field_build
from qmatroid.representable import (
    GeneratorMatrix,
    SpreadRankInput,
    build_spread,
    format_elem,
    matroid_from_matrix,
    parse_elem,
    random_representable,
    rank_via_spread_formula,
    spread_index_of,
    spread_matrix,
)
from qmatroid.subspace import Subspace, get_lattice, rref, zero_space


def test_spread_elements_from_the_example():
    sp = build_spread(2, 3, 6)
    assert sp.e == 9
    assert sp.element(1).row_strings() == ["010000", "001101", "000011"]
    assert all(G.dim == 3 for G in sp.elements)


@pytest.mark.parametrize("q,s,m,e", [(2, 3, 6, 9), (2, 2, 6, 21), (2, 2, 4, 5), (3, 1, 2, 4), (2, 1, 3, 7)])
def test_spread_partitions_nonzero_vectors(q, s, m, e):
    sp = build_spread(q, s, m)
    assert sp.e == e
    hits = np.zeros(q**m, dtype=int)
    for G in sp.elements:
        hits[G.vectors()] += 1
    assert hits[0] == e and (hits[1:] == 1).all()


def test_spread_errors():
    with pytest.raises(BadDivisibility):
        build_spread(2, 4, 6)
    sp = build_spread(2, 2, 4)
    with pytest.raises(ZeroSpace):
        spread_index_of(sp, zero_space(2, 4))
    x = Subspace.from_strings(["1000"], 2)
    assert sp.element(spread_index_of(sp, x)).contains(x)


def test_spread_matrix_errors():
    with pytest.raises(NotCoprime):
        spread_matrix(2, 2, 2)


def test_rank_deficient_generator():
    F = ext_field_build(2, 2)
    with pytest.raises(RankDeficientG):
        GeneratorMatrix(F, ((1, 2), (2, F.mul_codes(2, 2))))


def test_element_names_roundtrip():
    F = ext_field_build(2, 6)
    for c in range(F.size):
        assert parse_elem(F, format_elem(F, c)) == c
    assert parse_elem(F, "c:010000") == F.alpha.code
    assert parse_elem(F, "alpha^2") == F.alpha_power_code(2)


def test_matrix_matroid_rank_is_column_rank():
    # identity matrix over GF(2) gives the free q-matroid
    F = ext_field_build(2, 1)
    M = matroid_from_matrix(GeneratorMatrix(F, ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    assert np.array_equal(M.ranks, M.lattice.dims)


def test_m6_rank_profile(M6):
    lat = M6.lattice
    assert set(np.unique(M6.ranks).tolist()) == {0, 1, 2}
    r1 = M6.ranks == 1
    assert int((r1 & (lat.dims == 3)).sum()) == 9
    assert int((r1 & (lat.dims == 2)).sum()) == 63
    sp = build_spread(2, 3, 6)
    assert {lat.spaces[i] for i in np.flatnonzero(r1 & (lat.dims == 3))} == set(sp.elements)


def test_formula_on_small_case():
    # (p, s) = (1, 2): a 1 x 2 matrix over GF(4), U_{1,2}-like behaviour
    inp = SpreadRankInput.build(1, 2, 2)
    M = matroid_from_matrix(inp.matrix)
    lat = get_lattice(2, 2)
    assert [rank_via_spread_formula(inp, A) for A in lat.spaces] == M.ranks.tolist()


def test_formula_is_basis_independent():
    inp = SpreadRankInput.build(2, 3, 2)
    rng = np.random.default_rng(7)
    lat = get_lattice(2, 6)
    for i in rng.choice(lat.size, 150, replace=False):
        A = lat.spaces[int(i)]
        if A.dim < 2:
            continue
        vecs = [v for v in A.vectors() if v]
        rng.shuffle(vecs)
        basis = []
        for v in vecs:
            if len(rref(basis + [v], 2, 6)) > len(basis):
                basis.append(v)
        assert rank_via_spread_formula(inp, A, basis) == rank_via_spread_formula(inp, A)


def test_random_representable_is_deterministic():
    a = random_representable(2, 4, 2, 3, 11)
    b = random_representable(2, 4, 2, 3, 11)
    assert a == b and a.full_rank == 2
