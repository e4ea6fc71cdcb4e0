"""The standard two-element worked example and its printed results.

Sets ``A``, ``B`` and relations ``R``, ``S`` live on ``E = {x1, x2}`` with
dimension 3.  ``PRINTED`` holds the results of ``A x B``, ``R u S`` and
``R n S`` as originally printed.  :func:`divergence_report` recomputes those
results from the operation definitions and lists every slot where the
printed value differs.
"""

from __future__ import annotations

from .core import NmSet
from .relation import NmRelation, cartesian_product, rel_intersection, rel_union

Seqs = tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...]]

A_VALUES: dict[str, Seqs] = {
    "x1": ((0.3, 0.5, 0.6), (0.2, 0.3, 0.4), (0.4, 0.5, 0.9)),
    "x2": ((0.4, 0.5, 0.7), (0.4, 0.5, 0.1), (0.6, 0.2, 0.7)),
}
B_VALUES: dict[str, Seqs] = {
    "x1": ((0.4, 0.5, 0.6), (0.2, 0.4, 0.4), (0.3, 0.8, 0.4)),
    "x2": ((0.6, 0.7, 0.8), (0.3, 0.5, 0.7), (0.1, 0.7, 0.6)),
}
# (x2, x2) is absent from both relations
R_VALUES: dict[tuple[str, str], Seqs] = {
    ("x1", "x1"): ((0.2, 0.6, 0.9), (0.2, 0.4, 0.5), (0.3, 0.8, 0.9)),
    ("x1", "x2"): ((0.3, 0.9, 0.8), (0.2, 0.8, 0.7), (0.1, 0.8, 0.9)),
    ("x2", "x1"): ((0.1, 0.9, 0.6), (0.2, 0.5, 0.4), (0.2, 0.8, 0.7)),
}
S_VALUES: dict[tuple[str, str], Seqs] = {
    ("x1", "x1"): ((0.1, 0.7, 0.9), (0.2, 0.5, 0.7), (0.1, 0.9, 0.9)),
    ("x1", "x2"): ((0.3, 0.9, 0.8), (0.2, 0.8, 0.8), (0.1, 0.8, 0.9)),
    ("x2", "x1"): ((0.1, 0.9, 0.7), (0.2, 0.9, 0.4), (0.2, 0.8, 0.9)),
}

PRINTED: dict[str, dict[tuple[str, str], Seqs]] = {
    "AxB": {
        ("x1", "x1"): ((0.3, 0.5, 0.6), (0.2, 0.4, 0.4), (0.3, 0.8, 0.9)),
        ("x1", "x2"): ((0.3, 0.7, 0.8), (0.2, 0.5, 0.7), (0.1, 0.7, 0.9)),
        ("x2", "x1"): ((0.4, 0.5, 0.6), (0.2, 0.5, 0.4), (0.3, 0.8, 0.7)),
        ("x2", "x2"): ((0.4, 0.7, 0.8), (0.3, 0.5, 0.7), (0.1, 0.7, 0.7)),
    },
    "RuS": {
        ("x1", "x1"): ((0.2, 0.6, 0.9), (0.2, 0.4, 0.5), (0.3, 0.8, 0.9)),
        ("x1", "x2"): ((0.3, 0.9, 0.8), (0.2, 0.8, 0.7), (0.1, 0.8, 0.9)),
        ("x2", "x1"): ((0.1, 0.9, 0.6), (0.2, 0.5, 0.4), (0.2, 0.8, 0.7)),
    },
    "RnS": {
        ("x1", "x1"): ((0.1, 0.7, 0.9), (0.2, 0.5, 0.7), (0.1, 0.9, 0.9)),
        ("x1", "x2"): ((0.3, 0.9, 0.8), (0.2, 0.8, 0.8), (0.1, 0.8, 0.9)),
        ("x2", "x1"): ((0.1, 0.9, 0.7), (0.2, 0.9, 0.4), (0.2, 0.8, 0.9)),
    },
}


def _triples(seqs: Seqs) -> list[tuple[float, float, float]]:
    return list(zip(*seqs))


def set_A() -> NmSet:
    return NmSet({x: _triples(s) for x, s in A_VALUES.items()})


def set_B() -> NmSet:
    return NmSet({x: _triples(s) for x, s in B_VALUES.items()})


def relation_R() -> NmRelation:
    return NmRelation({k: _triples(s) for k, s in R_VALUES.items()}, ["x1", "x2"], ["x1", "x2"])


def relation_S() -> NmRelation:
    return NmRelation({k: _triples(s) for k, s in S_VALUES.items()}, ["x1", "x2"], ["x1", "x2"])


def computed() -> dict[str, NmRelation]:
    R, S = relation_R(), relation_S()
    return {
        "AxB": cartesian_product(set_A(), set_B()),
        "RuS": rel_union(R, S),
        "RnS": rel_intersection(R, S),
    }


def divergence_report() -> list[dict]:
    """Slots where a printed result differs from the recomputed one.

    Each row: ``result``, ``pair``, ``component`` (t/i/f), 1-based ``slot``,
    ``printed`` and ``computed``.  Pairs the computation yields but the
    printed result omits are reported with ``printed`` set to None.
    """
    rows = []
    for name, rel in computed().items():
        printed = PRINTED[name]
        for pair in rel.present_pairs():
            got = rel.sequences(pair)
            want = printed.get(pair)
            for c, comp in enumerate("tif"):
                for j, value in enumerate(got[c]):
                    shown = None if want is None else want[c][j]
                    if shown != value:
                        rows.append(
                            {
                                "result": name,
                                "pair": list(pair),
                                "component": comp,
                                "slot": j + 1,
                                "printed": shown,
                                "computed": value,
                            }
                        )
    return rows
