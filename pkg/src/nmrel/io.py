"""JSON documents for sets and relations.

Canonical form: sorted universes, entries sorted by key, fixed field order,
compact separators, floats in shortest round-trip notation (Python's
``repr``).  ``serialize(parse(d)) == d`` for any canonical ``d``.

    {"kind":"nmset","dimension":1,"universe":["a","b"],
     "entries":[{"key":"a","t":[0.5],"i":[0.2],"f":[0.1]}, ...]}

Relations use ``"kind":"nmrelation"``, add ``"target_universe"`` and key
entries by ``[x, y]``; absent pairs are simply not listed.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .core import NmError, NmSet, T, I, F
from .relation import NmRelation


class SchemaError(NmError):
    pass


def _floats(values) -> list[float]:
    return [float(v) for v in values]


def to_document(value: NmSet | NmRelation) -> dict[str, Any]:
    if isinstance(value, NmSet):
        entries = [
            {"key": x, "t": _floats(row[:, T]), "i": _floats(row[:, I]), "f": _floats(row[:, F])}
            for x, row in zip(value.universe, value.data)
        ]
        return {
            "kind": "nmset",
            "dimension": value.dimension,
            "universe": list(value.universe),
            "entries": entries,
        }
    if isinstance(value, NmRelation):
        entries = []
        for x, y in value.present_pairs():
            row = value.data[value.source.index(x), value.target.index(y)]
            entries.append(
                {"key": [x, y], "t": _floats(row[:, T]), "i": _floats(row[:, I]), "f": _floats(row[:, F])}
            )
        return {
            "kind": "nmrelation",
            "dimension": value.dimension,
            "universe": list(value.source),
            "target_universe": list(value.target),
            "entries": entries,
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")


def serialize(value: NmSet | NmRelation) -> str:
    return json.dumps(to_document(value), separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def _reject_constant(name: str):
    raise SchemaError(f"non-finite number {name} is not allowed")


def _strings(doc: dict, field: str) -> list[str]:
    vals = doc.get(field)
    if not isinstance(vals, list) or not all(isinstance(v, str) for v in vals):
        raise SchemaError(f"'{field}' must be a list of strings")
    if len(set(vals)) != len(vals):
        raise SchemaError(f"'{field}' has duplicate elements")
    return vals


def _triples(entry: dict, p: int, label: str) -> list[tuple[float, float, float]]:
    seqs = []
    for c in ("t", "i", "f"):
        seq = entry.get(c)
        if not isinstance(seq, list):
            raise SchemaError(f"entry {label}: '{c}' must be a list")
        if len(seq) != p:
            raise SchemaError(f"entry {label}: '{c}' has length {len(seq)}, dimension is {p}")
        for j, v in enumerate(seq):
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise SchemaError(f"entry {label}: {c}[{j}]={v!r} is not a finite number")
        seqs.append(seq)
    return [(float(t), float(i), float(f)) for t, i, f in zip(*seqs)]


def from_document(doc: Any, strict: bool = False) -> NmSet | NmRelation:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    kind = doc.get("kind")
    p = doc.get("dimension")
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise SchemaError("'dimension' must be a positive integer")
    entries = doc.get("entries")
    if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
        raise SchemaError("'entries' must be a list of objects")
    universe = _strings(doc, "universe")

    if kind == "nmset":
        values = {}
        for e in entries:
            key = e.get("key")
            if not isinstance(key, str):
                raise SchemaError(f"set entry key {key!r} must be a string")
            if key in values:
                raise SchemaError(f"duplicate entry {key!r}")
            if key not in universe:
                raise SchemaError(f"entry {key!r} is not in the universe")
            values[key] = _triples(e, p, repr(key))
        missing = [x for x in universe if x not in values]
        if missing:
            raise SchemaError(f"set entries missing for {missing}")
        return NmSet(values, strict=strict)

    if kind == "nmrelation":
        target = _strings(doc, "target_universe")
        pairs = {}
        for e in entries:
            key = e.get("key")
            if not (isinstance(key, list) and len(key) == 2 and all(isinstance(k, str) for k in key)):
                raise SchemaError(f"relation entry key {key!r} must be a [x, y] pair of strings")
            key = (key[0], key[1])
            if key in pairs:
                raise SchemaError(f"duplicate entry {list(key)!r}")
            pairs[key] = _triples(e, p, repr(list(key)))
        return NmRelation(pairs, universe, target, dimension=p, strict=strict)

    raise SchemaError(f"unknown kind {kind!r}; expected 'nmset' or 'nmrelation'")


def parse(text: str | bytes, strict: bool = False) -> NmSet | NmRelation:
    """Parse and validate a document.  Raises :class:`NmError` subclasses."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from None
    return from_document(doc, strict=strict)
