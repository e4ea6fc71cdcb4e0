import json

import pytest
from hypothesis import given

from conftest import nmsets, relations
from nmrel import NmError, NmRelation, NmSet, RangeError, SchemaError, parse, serialize
from nmrel.worked_example import relation_R, set_A


@given(nmsets())
def test_set_round_trip(A):
    text = serialize(A)
    assert parse(text) == A
    assert serialize(parse(text)) == text


@given(relations())
def test_relation_round_trip(R):
    text = serialize(R)
    assert parse(text) == R
    assert serialize(parse(text)) == text


def test_worked_set_document():
    doc = json.loads(serialize(set_A()))
    assert doc["kind"] == "nmset" and doc["dimension"] == 3
    assert [e["key"] for e in doc["entries"]] == ["x1", "x2"]
    assert doc["entries"][0]["t"] == [0.3, 0.5, 0.6]
    assert parse(json.dumps(doc)) == set_A()


def test_field_order_and_format():
    text = serialize(NmSet({"b": [(0.1, 0.2, 0.3)], "a": [(1, 0, 0)]}))
    assert text == (
        '{"kind":"nmset","dimension":1,"universe":["a","b"],"entries":['
        '{"key":"a","t":[1.0],"i":[0.0],"f":[0.0]},'
        '{"key":"b","t":[0.1],"i":[0.2],"f":[0.3]}]}'
    )


def test_partial_relation_lists_present_pairs_only():
    doc = json.loads(serialize(relation_R()))
    assert [e["key"] for e in doc["entries"]] == [["x1", "x1"], ["x1", "x2"], ["x2", "x1"]]
    assert ("x2", "x2") not in parse(json.dumps(doc))


def test_canonical_fixed_point():
    canonical = (
        '{"kind":"nmrelation","dimension":1,"universe":["a","b"],"target_universe":["c"],'
        '"entries":[{"key":["b","c"],"t":[0.25],"i":[0.5],"f":[1.0]}]}'
    )
    assert serialize(parse(canonical)) == canonical
    # non-canonical spelling of the same value
    loose = json.dumps(json.loads(canonical), indent=2)
    assert serialize(parse(loose)) == canonical


def test_out_of_range_names_entry():
    doc = {"kind": "nmset", "dimension": 1, "universe": ["a", "b"],
           "entries": [{"key": "a", "t": [0.1], "i": [0], "f": [0]},
                       {"key": "b", "t": [1.2], "i": [0], "f": [0]}]}
    with pytest.raises(RangeError, match="b"):
        parse(json.dumps(doc))


@pytest.mark.parametrize(
    "text, match",
    [
        ("{", "malformed"),
        ("[]", "object"),
        ('{"kind":"nmset","dimension":1,"universe":["a"],"entries":[{"key":"a","t":[NaN],"i":[0],"f":[0]}]}', "non-finite"),
        ('{"kind":"nmset","dimension":1,"universe":["a"],"entries":[{"key":"a","t":[true],"i":[0],"f":[0]}]}', "finite"),
        ('{"kind":"nmset","dimension":2,"universe":["a"],"entries":[{"key":"a","t":[0],"i":[0],"f":[0]}]}', "length"),
        ('{"kind":"nmset","dimension":1,"universe":["a","b"],"entries":[{"key":"a","t":[0],"i":[0],"f":[0]}]}', "missing"),
        ('{"kind":"nmset","dimension":1,"universe":["a"],"entries":[{"key":"a","t":[0],"i":[0],"f":[0]},{"key":"a","t":[0],"i":[0],"f":[0]}]}', "duplicate"),
        ('{"kind":"nmrelation","dimension":1,"universe":["a"],"target_universe":["a"],"entries":[{"key":"a","t":[0],"i":[0],"f":[0]}]}', "pair"),
        ('{"kind":"graph","dimension":1,"universe":[],"entries":[]}', "kind"),
        ('{"kind":"nmset","dimension":0,"universe":["a"],"entries":[]}', "dimension"),
    ],
)
def test_schema_errors(text, match):
    with pytest.raises(NmError, match=match):
        parse(text)


def test_schema_error_is_an_nm_error():
    assert issubclass(SchemaError, NmError)


def test_strict_flag():
    text = serialize(NmSet({"a": [(0.5, 0, 0), (0.2, 0, 0)]}))
    parse(text)
    with pytest.raises(RangeError):
        parse(text, strict=True)


def test_empty_relation_round_trip():
    E = NmRelation.empty(["a", "b"], dimension=2)
    assert parse(serialize(E)) == E
