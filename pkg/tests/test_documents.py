import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equilayer.documents import DocumentError, MatrixDocument
from equilayer.sparse import SparseMatrix

entries = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 6)),
    st.fractions(max_denominator=50).filter(bool),
    max_size=12,
)


@given(entries, st.sampled_from(["basis_element", "weight_matrix", "local_element"]))
def test_round_trip(data, kind):
    doc = MatrixDocument(kind, {"n": 2, "k": 1, "l": 1, "group": "an"}, SparseMatrix(5, 7, data), {"index": 3})
    text = doc.dumps()
    back = MatrixDocument.loads(text)
    assert back == doc
    assert back.dumps() == text


def test_layout():
    doc = MatrixDocument("basis_element", {}, SparseMatrix(2, 2, {(1, 0): Fraction(-2, 4), (0, 1): 3}))
    obj = json.loads(doc.dumps())
    assert obj["schema_version"] == 1
    assert obj["shape"] == [2, 2]
    assert obj["entries"] == [[0, 1, 3, 1], [1, 0, -1, 2]]
    assert json.loads(doc.dumps(as_float=True))["entries"] == [[0, 1, 3.0], [1, 0, -0.5]]


@pytest.mark.parametrize(
    "mutate",
    [
        lambda o: o.update(schema_version=99),
        lambda o: o["entries"].append([0, 1, 1, 1]),
        lambda o: o["entries"].append([0, 0, 1, 0]),
        lambda o: o.pop("shape"),
        lambda o: o["entries"].append([9, 9, 1, 1]),
    ],
)
def test_rejects_malformed(mutate):
    obj = MatrixDocument("basis_element", {}, SparseMatrix(2, 2, {(0, 1): 1})).to_dict()
    mutate(obj)
    with pytest.raises(DocumentError):
        MatrixDocument.from_dict(obj)
