from qmatroid.classify import classify
from qmatroid.matroid import uniform


def test_m6_table(M6):
    c = classify(M6)
    assert c.families["flat"] == {0: 1, 1: 0, 2: 0, 3: 9, 4: 0, 5: 0, 6: 1}
    assert c.families["circuit"][2] == 63
    assert c.families["basis"][2] == 588
    assert c.ranks[3] == {1: 9, 2: 1386}
    assert c.closure[1] == {3: 63}


def test_m6_reference_delta(M6):
    delta = classify(M6).reference_delta
    cells = {(e["family"], e["dim"], e["source"]): e for e in delta}
    prose = cells[("circuit", 3, "prose count")]
    assert prose["published"] == 1332 and prose["enumerated"] == 504 and prose["status"] == "diverges"
    assert cells[("open", 4, "table cell")]["enumerated"] == 588
    assert len(delta) == 2


def test_free_matroid_has_no_circuits():
    c = classify(uniform(3, 3, 2))
    assert sum(c.families["circuit"].values()) == 0
    assert c.reference_delta == []


def test_renderings(M6):
    c = classify(M6)
    text = c.render()
    assert "reference-delta" in text and text.splitlines()[2].split()[0] == "dim"
    d = c.to_json()
    assert d["families"]["hyperplane"]["3"] == 9
