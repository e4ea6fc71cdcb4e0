"""Neutrosophic multi relations: products, operations, composition, closure.

A relation stores a dense ``(m, n, P, 3)`` array over ``source x target``
plus a boolean ``(m, n)`` mask of the pairs that are actually present.
Absent pairs hold the fill triple ``(0, 1, 1)`` in the dense array, so every
computation can ignore the mask; only serialization and the pairwise
operations (which keep the union of supports) look at it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import (
    FILL,
    DimensionError,
    DomainError,
    F,
    I,
    NeutroTriple,
    NmError,
    NmSet,
    MultiValue,
    T,
    as_multivalue,
    frozen,
    k_addition,
    k_intersection,
    k_multiplication,
    k_subset,
    k_union,
    pad_slots,
    validate_array,
)

Pair = tuple[str, str]


class ContainmentError(NmError):
    """A relation value exceeds the cartesian product of its context sets."""


class NmRelation:
    """Relation from ``source`` to ``target`` with a multi value per pair.

    ``pairs`` may be partial; a missing pair behaves as ``(0, 1, 1)`` in every
    slot.  Universes default to the elements mentioned in ``pairs`` and are
    sorted on construction.
    """

    __slots__ = ("_source", "_target", "_data", "_mask")

    def __init__(
        self,
        pairs: Mapping[Pair, Iterable[Sequence[float]]],
        source: Iterable[str] | None = None,
        target: Iterable[str] | None = None,
        *,
        dimension: int | None = None,
        strict: bool = False,
        context: RelationContext | None = None,
    ):
        src = _universe(source, (x for x, _ in pairs), "source")
        tgt = _universe(target, (y for _, y in pairs), "target")
        if not src or not tgt:
            raise DomainError("a relation needs non-empty source and target universes")
        si = {x: k for k, x in enumerate(src)}
        ti = {y: k for k, y in enumerate(tgt)}
        rows = {}
        for key, triples in pairs.items():
            x, y = key
            if x not in si or y not in ti:
                raise DomainError(f"pair {key!r} lies outside source x target")
            rows[key] = as_multivalue(triples, where=f"pair {key!r}")
        dims = {len(r) for r in rows.values()}
        if dimension is not None:
            dims.add(dimension)
        if len(dims) > 1:
            raise DimensionError(f"pairs carry sequences of different lengths {sorted(dims)}")
        if not dims:
            raise DimensionError("an empty relation needs an explicit dimension")
        p = dims.pop()
        data = np.empty((len(src), len(tgt), p, 3))
        data[:] = FILL
        mask = np.zeros((len(src), len(tgt)), dtype=bool)
        for (x, y), mv in rows.items():
            data[si[x], ti[y]] = mv
            mask[si[x], ti[y]] = True
        labels = [repr((x, y)) for x in src for y in tgt]
        validate_array(data, labels, strict=strict)
        self._source = tuple(src)
        self._target = tuple(tgt)
        self._data = frozen(data)
        self._mask = _frozen_mask(mask)
        if context is not None:
            check_containment(self, context)

    @classmethod
    def _wrap(cls, source, target, data, mask=None) -> NmRelation:
        obj = cls.__new__(cls)
        obj._source = source
        obj._target = target
        obj._data = frozen(data)
        if mask is None:
            mask = np.ones(data.shape[:2], dtype=bool)
        obj._mask = _frozen_mask(mask)
        return obj

    @classmethod
    def empty(cls, source: Iterable[str], target: Iterable[str] | None = None, dimension: int = 1) -> NmRelation:
        source = list(source)
        return cls({}, source, source if target is None else target, dimension=dimension)

    @classmethod
    def identity(cls, universe: Iterable[str], dimension: int = 1) -> NmRelation:
        """(1, 0, 0) on the diagonal, missing elsewhere."""
        universe = list(universe)
        one = [(1.0, 0.0, 0.0)] * dimension
        return cls({(x, x): one for x in universe}, universe, universe)

    @property
    def source(self) -> tuple[str, ...]:
        return self._source

    @property
    def target(self) -> tuple[str, ...]:
        return self._target

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def dimension(self) -> int:
        return self._data.shape[2]

    @property
    def is_square(self) -> bool:
        return self._source == self._target

    def __getitem__(self, pair: Pair) -> MultiValue:
        """Value at ``pair``; the fill sequence when the pair is absent."""
        x, y = pair
        try:
            row = self._data[self._source.index(x), self._target.index(y)]
        except ValueError:
            raise KeyError(pair) from None
        return tuple(NeutroTriple(*map(float, tr)) for tr in row)

    def __contains__(self, pair: Pair) -> bool:
        x, y = pair
        if x not in self._source or y not in self._target:
            return False
        return bool(self._mask[self._source.index(x), self._target.index(y)])

    def present_pairs(self) -> list[Pair]:
        return [(self._source[a], self._target[b]) for a, b in zip(*np.nonzero(self._mask))]

    @property
    def pairs(self) -> dict[Pair, MultiValue]:
        return {p: self[p] for p in self.present_pairs()}

    def sequences(self, pair: Pair) -> tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...]]:
        mv = self[pair]
        return tuple(tuple(tr[c] for tr in mv) for c in (T, I, F))

    def __eq__(self, other: object) -> bool:
        """Structural equality: same universes, same present pairs, same values."""
        if not isinstance(other, NmRelation):
            return NotImplemented
        return (
            self._source == other._source
            and self._target == other._target
            and np.array_equal(self._mask, other._mask)
            and np.array_equal(self._data, other._data)
        )

    def __hash__(self) -> int:
        return hash((self._source, self._target, self._mask.tobytes(), self._data.tobytes()))

    def __repr__(self) -> str:
        n = int(self._mask.sum())
        return f"NmRelation({len(self._source)}x{len(self._target)}, P={self.dimension}, {n} pairs)"


def _universe(given: Iterable[str] | None, mentioned: Iterable[str], name: str) -> list[str]:
    if given is None:
        return sorted(set(mentioned))
    given = list(given)
    if len(set(given)) != len(given):
        raise DomainError(f"{name} universe has duplicate elements")
    return sorted(given)


def _frozen_mask(mask: np.ndarray) -> np.ndarray:
    mask = np.array(mask, dtype=bool)
    mask.flags.writeable = False
    return mask


@dataclass(frozen=True)
class RelationContext:
    source_set: NmSet | None = None
    target_set: NmSet | None = None
    enforce_containment: bool = False


def check_containment(R: NmRelation, ctx: RelationContext) -> None:
    """Raise unless every pair of ``R`` is an Nm-subset of ``A x B`` there.

    A no-op unless ``ctx.enforce_containment`` is set and both sets are given.
    """
    if not ctx.enforce_containment:
        return
    if ctx.source_set is None or ctx.target_set is None:
        raise NmError("containment check needs both source_set and target_set")
    AB = cartesian_product(ctx.source_set, ctx.target_set)
    if set(R.source) - set(AB.source) or set(R.target) - set(AB.target):
        raise DomainError("relation universes are not covered by the context sets")
    n = max(R.dimension, AB.dimension)
    r = pad_slots(R.data, n)
    ab = pad_slots(AB.data, n)
    si = [AB.source.index(x) for x in R.source]
    ti = [AB.target.index(y) for y in R.target]
    ab = ab[np.ix_(si, ti)]
    for a, b in zip(*np.nonzero(R.mask)):
        if not k_subset(r[a, b], ab[a, b]):
            raise ContainmentError(
                f"pair {(R.source[a], R.target[b])!r} is not contained in the cartesian product"
            )


def align_relation(R: NmRelation, n: int) -> NmRelation:
    if n == R.dimension:
        return R
    return NmRelation._wrap(R.source, R.target, pad_slots(R.data, n), R.mask)


def cartesian_product(A: NmSet, B: NmSet) -> NmRelation:
    """Total relation on ``A.universe x B.universe``: min on T, max on I and F."""
    n = max(A.dimension, B.dimension)
    a = pad_slots(A.data, n)[:, None]
    b = pad_slots(B.data, n)[None, :]
    return NmRelation._wrap(A.universe, B.universe, k_intersection(a, b))


def cartesian_square(A: NmSet) -> NmRelation:
    return cartesian_product(A, A)


def _aligned(R: NmRelation, S: NmRelation) -> tuple[np.ndarray, np.ndarray]:
    if R.source != S.source or R.target != S.target:
        raise DomainError("relations are defined over different universes")
    n = max(R.dimension, S.dimension)
    return pad_slots(R.data, n), pad_slots(S.data, n)


def _pairwise(kernel, R: NmRelation, S: NmRelation) -> NmRelation:
    r, s = _aligned(R, S)
    # every kernel maps (fill, fill) to fill, so the support is the union of supports
    return NmRelation._wrap(R.source, R.target, kernel(r, s), R.mask | S.mask)


def rel_union(R: NmRelation, S: NmRelation) -> NmRelation:
    return _pairwise(k_union, R, S)


def rel_intersection(R: NmRelation, S: NmRelation) -> NmRelation:
    return _pairwise(k_intersection, R, S)


def rel_addition(R: NmRelation, S: NmRelation) -> NmRelation:
    return _pairwise(k_addition, R, S)


def rel_multiplication(R: NmRelation, S: NmRelation) -> NmRelation:
    return _pairwise(k_multiplication, R, S)


def compose(S: NmRelation, R: NmRelation) -> NmRelation:
    """``S o R``: first ``R`` (A to B), then ``S`` (B to C).

    Truth is the max over intermediates of the min along the path;
    indeterminacy and falsity are the min over intermediates of the max.
    The result is total over ``R.source x S.target``.
    """
    if R.target != S.source:
        raise DomainError(
            f"cannot chain: target of R {list(R.target)} differs from source of S {list(S.source)}"
        )
    n = max(R.dimension, S.dimension)
    r = pad_slots(R.data, n)[:, :, None]  # (m, k, 1, P, 3)
    s = pad_slots(S.data, n)[None, :, :]  # (1, k, q, P, 3)
    out = np.empty((r.shape[0], s.shape[2], n, 3))
    out[..., T] = np.minimum(r[..., T], s[..., T]).max(axis=1)
    out[..., I:] = np.maximum(r[..., I:], s[..., I:]).min(axis=1)
    return NmRelation._wrap(R.source, S.target, out)


def inverse(R: NmRelation) -> NmRelation:
    return NmRelation._wrap(R.target, R.source, R.data.transpose(1, 0, 2, 3), R.mask.T)


def rel_subset(R: NmRelation, S: NmRelation) -> bool:
    """Nm-subset on every pair (absent pairs compared as fill)."""
    r, s = _aligned(R, S)
    return k_subset(r, s)


def rel_equal(R: NmRelation, S: NmRelation) -> bool:
    """Value equality on every pair, treating absent pairs as fill.

    Unlike ``==`` this ignores whether a fill-valued pair is stored explicitly.
    """
    r, s = _aligned(R, S)
    return bool(np.array_equal(r, s))


def _require_square(R: NmRelation) -> None:
    if not R.is_square:
        raise DomainError("property needs a relation whose source and target coincide")


def is_reflexive(R: NmRelation) -> bool:
    _require_square(R)
    idx = np.arange(len(R.source))
    diag = R.data[idx, idx]  # (m, P, 3)
    return bool(np.all(diag[..., T] == 1.0) and np.all(diag[..., I:] == 0.0))


def is_symmetric(R: NmRelation) -> bool:
    _require_square(R)
    return bool(np.array_equal(R.data, R.data.transpose(1, 0, 2, 3)))


def is_transitive(R: NmRelation) -> bool:
    _require_square(R)
    return k_subset(compose(R, R).data, R.data)


def is_equivalence(R: NmRelation) -> bool:
    return is_reflexive(R) and is_symmetric(R) and is_transitive(R)


def power(R: NmRelation, k: int) -> NmRelation:
    """``R^k`` with ``R^1 = R`` and ``R^k = R o R^(k-1)``."""
    _require_square(R)
    if k < 1:
        raise DomainError(f"power needs k >= 1, got {k}")
    out = R
    for _ in range(k - 1):
        out = compose(R, out)
    return out


class ClosureError(NmError):
    pass


def closure_with_steps(R: NmRelation) -> tuple[NmRelation, int]:
    """Transitive closure plus the number of powers merged before the fixpoint.

    Accumulates ``R u R^2 u ... u R^k`` and stops as soon as adding
    ``R^(k+1)`` changes nothing.  For a universe of size m, paths longer
    than m never improve a max-min value, so k <= m always.
    """
    _require_square(R)
    m = len(R.source)
    acc = R
    pw = R
    for k in range(1, m + 1):
        pw = compose(R, pw)
        nxt = rel_union(acc, pw)
        if np.array_equal(nxt.data, acc.data):
            return acc, k
        acc = nxt
    raise ClosureError(f"closure did not reach a fixpoint within {m} iterations")


def transitive_closure(R: NmRelation) -> NmRelation:
    return closure_with_steps(R)[0]
