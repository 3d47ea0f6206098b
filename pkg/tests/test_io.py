import json

import pytest

from gradedpi.catalog import build, default_instances
from gradedpi.io import AlgebraFileError, dumps, from_document, loads, to_document


@pytest.mark.parametrize("spec", default_instances())
def test_round_trip(spec):
    A = build(spec).body
    text = dumps(A)
    B = loads(text)
    assert dumps(B) == text
    assert B.mult == A.mult and B.degrees == A.degrees and B.unit == A.unit


def test_hand_written_document():
    doc = {"name": "UT2", "group": {"orders": [2]}, "basis": ["e11", "e12", "e22"],
           "deg": [[0], [1, 0], [0, 0]],
           "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 2, 1, "1"], [2, 2, 2, "1"]]}
    A = from_document(doc)
    assert A.dim == 3 and A.unit is None
    assert A.mul_sparse({0: 1}, {1: 1}) == {1: 1}
    assert to_document(A)["deg"][0] == [0, 0]


@pytest.mark.parametrize("bad, message", [
    ({"name": "x"}, "missing"),
    ({"name": "x", "group": {"orders": [2]}, "basis": ["a"], "deg": [[0]], "mult": [[0, 0, 3, "1"]]}, "range"),
    ({"name": "x", "group": {"orders": [2]}, "basis": ["a"], "deg": [[0]], "mult": [[0, 0, 0, 0.5]]}, "rational"),
    ({"name": "x", "group": {"orders": [2]}, "basis": ["a"], "deg": [[0, 0, 0]], "mult": []}, "deg"),
])
def test_malformed(bad, message):
    with pytest.raises(AlgebraFileError, match=message):
        loads(json.dumps(bad))
