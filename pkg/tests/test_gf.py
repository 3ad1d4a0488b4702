import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmatroid.errors import DegreeTooLarge, EmptyList, NonPrimeModulus
from qmatroid.gf import (
    ExtField,
    PrimeField,
    ext_field_build,
    gamma,
    gamma_inverse,
    is_irreducible,
    matrix_rank_ext,
    moore_determinant,
    subfield_rank,
)

FIELDS = [(2, 1), (2, 3), (2, 4), (2, 6), (3, 2), (5, 2)]


@pytest.fixture(scope="module", params=FIELDS, ids=lambda p: f"GF({p[0]}^{p[1]})")
def F(request):
    return ext_field_build(*request.param)


def elems(F):
    return st.integers(0, F.size - 1).map(F.from_code)


def test_prime_field_inverse():
    P = PrimeField(7)
    assert all(P.mul(a, P.inv(a)) == 1 for a in range(1, 7))


def test_non_prime_rejected():
    with pytest.raises(NonPrimeModulus):
        ext_field_build(4, 2)


def test_degree_cap():
    with pytest.raises(DegreeTooLarge):
        ext_field_build(2, 40)


def test_known_modulus():
    assert ext_field_build(2, 6).modulus == (1, 1, 0, 0, 0, 0, 1)
    assert is_irreducible((1, 1, 0, 0, 0, 0, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)


def test_alpha_is_primitive(F):
    a = F.alpha
    powers = {(a**k).code for k in range(F.order)}
    assert len(powers) == F.order


def test_field_axioms(F):
    @settings(max_examples=60, deadline=None)
    @given(elems(F), elems(F), elems(F))
    def run(x, y, z):
        assert x + y == y + x and x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x - x == F.zero
        if x:
            assert x * (F.one / x) == F.one

    run()


def test_frobenius_is_additive(F):
    for x, y in itertools.islice(itertools.product(F.elements(), repeat=2), 300):
        assert (x + y) ** F.q == x**F.q + y**F.q


def test_gamma_roundtrip(F):
    for x in F.elements():
        assert gamma_inverse(F, gamma(x)) == x
    assert gamma(F.one) == (1,) + (0,) * (F.m - 1)


def test_dict_roundtrip(F):
    assert ExtField.from_dict(F.to_dict()) == F


def _moore_product(xs):
    """prod over i of prod over (c_1..c_{i-1}) in GF(q) of (x_i + sum c_j x_j)."""
    F = xs[0].field
    out = F.one
    for i, x in enumerate(xs):
        for cs in itertools.product(range(F.q), repeat=i):
            t = x
            for c, y in zip(cs, xs):
                t = t + y * c
            out = out * t
    return out


def test_moore_product_formula_gf8():
    F = ext_field_build(2, 3)
    for xs in itertools.product(F.elements(), repeat=2):
        assert moore_determinant(list(xs)) == _moore_product(list(xs))
    for xs in itertools.combinations(F.elements()[1:], 3):
        assert moore_determinant(list(xs)) == _moore_product(list(xs))


def test_moore_detects_independence_over_prime_field():
    F = ext_field_build(2, 4)
    for xs in itertools.combinations(F.elements(), 3):
        vecs = [gamma(x) for x in xs]
        indep = matrix_rank_ext(ext_field_build(2, 1), vecs) == 3
        assert bool(moore_determinant(list(xs))) == indep


def test_moore_empty():
    with pytest.raises(EmptyList):
        moore_determinant([])


def test_subfield_rank():
    F = ext_field_build(2, 6)
    a = F.alpha
    # GF(8) inside GF(64) is fixed by x -> x^8; GF(64) has dimension 2 over it
    assert subfield_rank(F.elements()[1:], 8) == 2
    assert subfield_rank([F.one, a**9], 8) == 1  # a^9 has order 7, so it lies in GF(8)
    assert subfield_rank([F.one, a], 8) == 2
    assert subfield_rank(F.elements(), 2) == 6
