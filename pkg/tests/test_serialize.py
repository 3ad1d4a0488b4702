import json

import pytest

from qmatroid import serialize as ser
from qmatroid.errors import DimensionMismatch
from qmatroid.fixtures import example10_circuits, lo_prime, u45
from qmatroid.matroid import uniform
from qmatroid.representable import spread_matrix


def roundtrip(obj, kind=None):
    return ser.load(json.loads(ser.dumps(ser.to_json(obj, kind))))


def test_matroid_roundtrip_and_shape():
    M = u45()
    d = ser.matroid_to_json(M)
    assert d["kind"] == "rank_table" and d["q"] == 2 and d["n"] == 5
    assert d["entries"][0] == {"space": [], "rank": 0}
    assert roundtrip(M) == M


def test_byte_identical_output():
    assert ser.dumps(ser.matroid_to_json(u45())) == ser.dumps(ser.matroid_to_json(uniform(4, 5, 2)))


def test_family_closure_roundtrip():
    assert roundtrip(lo_prime(), "open") == lo_prime()
    assert ser.family_to_json(example10_circuits(), "circuits")["kind"] == "circuit"
    cl = u45().closure_map()
    assert roundtrip(cl) == cl


def test_construction_specs(M6):
    assert ser.load({"construction": "representable", "q": 2, "p": 2, "s": 3}) == M6
    assert ser.load(ser.matrix_to_json(spread_matrix(2, 3, 2))) == M6
    assert ser.load({"construction": "uniform", "q": 2, "n": 3, "k": 0}).full_rank == 0


def test_bad_documents():
    with pytest.raises(ser.FormatError):
        ser.load({"hello": 1})
    with pytest.raises(ser.FormatError):
        ser.load({"construction": "uniform", "q": 2})
    with pytest.raises(DimensionMismatch):
        ser.load({"q": 2, "n": 3, "members": [["1010"]]})
