"""Neutrosophic multi sets: validated value types and their algebra.

Every element of a universe carries ``P`` parallel (truth, indeterminacy,
falsity) triples.  Values are stored as a read-only float array of shape
``(n, P, 3)`` whose last axis is ``(t, i, f)``; the public surface speaks in
:class:`NeutroTriple` tuples.

All operations are pure and return new objects.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

T, I, F = 0, 1, 2

#: Triple appended when aligning dimensions; also the value of a missing
#: relation pair.  Identity for union, annihilator for intersection.
FILL = (0.0, 1.0, 1.0)


class NmError(ValueError):
    """Base class for every error raised by this package."""


class DomainError(NmError):
    """Operands live over incompatible universes (or a non-square relation)."""


class DimensionError(NmError):
    pass


class RangeError(NmError):
    """A component is outside [0, 1] or violates the ordering rule."""


class NeutroTriple(NamedTuple):
    t: float
    i: float
    f: float


MultiValue = tuple  # tuple[NeutroTriple, ...], length P


def check_triple(t: float, i: float, f: float, where: str = "") -> NeutroTriple:
    prefix = f"{where}: " if where else ""
    for name, v in (("t", t), ("i", i), ("f", f)):
        if isinstance(v, bool) or not isinstance(v, (int, float, np.floating, np.integer)):
            raise RangeError(f"{prefix}component {name}={v!r} is not a real number")
        if not 0.0 <= v <= 1.0:
            raise RangeError(f"{prefix}component {name}={v!r} outside [0, 1]")
    # vacuous for in-range components; kept so a representation change cannot slip past
    if t + i + f > 3.0:
        raise RangeError(f"{prefix}t + i + f = {t + i + f!r} exceeds 3")
    return NeutroTriple(float(t), float(i), float(f))


def as_multivalue(triples: Iterable[Sequence[float]], where: str = "") -> MultiValue:
    out = tuple(check_triple(*tr, where=f"{where} slot {j + 1}".strip()) for j, tr in enumerate(triples))
    if not out:
        raise DimensionError(f"{where}: a multi value needs at least one triple")
    return out


def validate_array(data: np.ndarray, labels: Sequence[str], strict: bool = False) -> None:
    """Check range (and optionally truth ordering) of a ``(..., P, 3)`` array.

    ``labels`` names the leading entries so the message can point at the
    offending one.
    """
    flat = data.reshape(-1, data.shape[-2], 3)
    bad = ~np.isfinite(flat) | (flat < 0.0) | (flat > 1.0)
    if bad.any():
        e, j, c = (int(v) for v in np.argwhere(bad)[0])
        raise RangeError(
            f"entry {labels[e]} slot {j + 1}: component {'tif'[c]}={flat[e, j, c]!r} outside [0, 1]"
        )
    sums = flat.sum(axis=-1)
    if (sums > 3.0).any():
        e, j = (int(v) for v in np.argwhere(sums > 3.0)[0])
        raise RangeError(f"entry {labels[e]} slot {j + 1}: t + i + f exceeds 3")
    if strict:
        dec = np.diff(flat[..., T], axis=-1) < 0
        if dec.any():
            e, j = (int(v) for v in np.argwhere(dec)[0])
            raise RangeError(
                f"entry {labels[e]}: truth sequence decreases between slots {j + 1} and {j + 2} (strict mode)"
            )


def frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.float64)
    arr.flags.writeable = False
    return arr


def pad_slots(data: np.ndarray, n: int) -> np.ndarray:
    """Append fill triples along the slot axis (second to last) up to length ``n``."""
    p = data.shape[-2]
    if n < p:
        raise DimensionError(f"cannot align dimension {p} down to {n}")
    if n == p:
        return data
    pad = np.broadcast_to(np.asarray(FILL), data.shape[:-2] + (n - p, 3))
    return np.concatenate([data, pad], axis=-2)


# Slotwise kernels on (..., 3) arrays.  Shared with the relation module.

def k_union(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.minimum(a, b)
    out[..., T] = np.maximum(a[..., T], b[..., T])
    return out


def k_intersection(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.maximum(a, b)
    out[..., T] = np.minimum(a[..., T], b[..., T])
    return out


def _prob_sum(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # clip guards against a last-ulp excursion past 1
    return np.clip(x + y - x * y, 0.0, 1.0)


def k_addition(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = a * b
    out[..., T] = _prob_sum(a[..., T], b[..., T])
    return out


def k_multiplication(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = _prob_sum(a, b)
    out[..., T] = a[..., T] * b[..., T]
    return out


def k_complement(a: np.ndarray) -> np.ndarray:
    return np.stack([a[..., F], 1.0 - a[..., I], a[..., T]], axis=-1)


def k_subset(a: np.ndarray, b: np.ndarray) -> bool:
    """Componentwise order: a.t <= b.t, a.i >= b.i, a.f >= b.f everywhere."""
    return bool(
        np.all(a[..., T] <= b[..., T]) and np.all(a[..., 1:] >= b[..., 1:])
    )


class NmSet:
    """A neutrosophic multi set over a finite universe of string identifiers.

    ``values`` maps each element to its sequence of ``(t, i, f)`` triples;
    every sequence must have the same length P.  The universe is sorted on
    construction.  With ``strict=True`` each truth sequence must also be
    non-decreasing.

    >>> A = NmSet({"x1": [(0.3, 0.2, 0.4)], "x2": [(0.4, 0.4, 0.6)]})
    >>> A.dimension, A["x1"][0].t
    (1, 0.3)
    """

    __slots__ = ("_universe", "_data")

    def __init__(self, values: Mapping[str, Iterable[Sequence[float]]], *, strict: bool = False):
        universe = tuple(sorted(values))
        if not universe:
            raise DomainError("a neutrosophic multi set needs a non-empty universe")
        rows = [as_multivalue(values[x], where=f"element {x!r}") for x in universe]
        dims = {len(r) for r in rows}
        if len(dims) != 1:
            raise DimensionError(f"elements carry sequences of different lengths {sorted(dims)}")
        data = np.array(rows, dtype=np.float64)
        validate_array(data, [repr(x) for x in universe], strict=strict)
        self._universe = universe
        self._data = frozen(data)

    @classmethod
    def from_sequences(
        cls,
        values: Mapping[str, tuple[Sequence[float], Sequence[float], Sequence[float]]],
        *,
        strict: bool = False,
    ) -> NmSet:
        """Build from per-element ``(T-sequence, I-sequence, F-sequence)``."""
        triples = {}
        for x, (ts, is_, fs) in values.items():
            if not len(ts) == len(is_) == len(fs):
                raise DimensionError(f"element {x!r}: T, I, F sequences differ in length")
            triples[x] = list(zip(ts, is_, fs))
        return cls(triples, strict=strict)

    @classmethod
    def _wrap(cls, universe: tuple[str, ...], data: np.ndarray) -> NmSet:
        # trusted path for operation results: no revalidation
        obj = cls.__new__(cls)
        obj._universe = universe
        obj._data = frozen(data)
        return obj

    @property
    def universe(self) -> tuple[str, ...]:
        return self._universe

    @property
    def data(self) -> np.ndarray:
        """Read-only ``(n, P, 3)`` array aligned with :attr:`universe`."""
        return self._data

    @property
    def dimension(self) -> int:
        return self._data.shape[1]

    def __getitem__(self, x: str) -> MultiValue:
        try:
            row = self._data[self._universe.index(x)]
        except ValueError:
            raise KeyError(x) from None
        return tuple(NeutroTriple(*map(float, tr)) for tr in row)

    @property
    def values(self) -> dict[str, MultiValue]:
        return {x: self[x] for x in self._universe}

    def sequences(self, x: str) -> tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...]]:
        row = self._data[self._universe.index(x)]
        return tuple(tuple(float(v) for v in row[:, c]) for c in (T, I, F))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NmSet):
            return NotImplemented
        return self._universe == other._universe and np.array_equal(self._data, other._data)

    def __hash__(self) -> int:
        return hash((self._universe, self._data.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{x}: " + "/".join(str(list(s)) for s in self.sequences(x)) for x in self._universe
        )
        return f"NmSet(P={self.dimension}; {body})"


def cardinality(A: NmSet) -> int:
    """P(A), the common length of every element's triple sequence."""
    return A.dimension


def align_dimension(A: NmSet, n: int) -> NmSet:
    if n == A.dimension:
        return A
    return NmSet._wrap(A.universe, pad_slots(A.data, n))


def _aligned(A: NmSet, B: NmSet) -> tuple[np.ndarray, np.ndarray]:
    if A.universe != B.universe:
        raise DomainError(f"universe mismatch: {list(A.universe)} vs {list(B.universe)}")
    n = max(A.dimension, B.dimension)
    return pad_slots(A.data, n), pad_slots(B.data, n)


def nm_subset(A: NmSet, B: NmSet) -> bool:
    a, b = _aligned(A, B)
    return k_subset(a, b)


def nm_equal(A: NmSet, B: NmSet) -> bool:
    a, b = _aligned(A, B)
    return bool(np.array_equal(a, b))


def complement(A: NmSet) -> NmSet:
    return NmSet._wrap(A.universe, k_complement(A.data))


def union(A: NmSet, B: NmSet) -> NmSet:
    a, b = _aligned(A, B)
    return NmSet._wrap(A.universe, k_union(a, b))


def intersection(A: NmSet, B: NmSet) -> NmSet:
    a, b = _aligned(A, B)
    return NmSet._wrap(A.universe, k_intersection(a, b))


def addition(A: NmSet, B: NmSet) -> NmSet:
    """Algebraic sum on truth, product on indeterminacy and falsity."""
    a, b = _aligned(A, B)
    return NmSet._wrap(A.universe, k_addition(a, b))


def multiplication(A: NmSet, B: NmSet) -> NmSet:
    a, b = _aligned(A, B)
    return NmSet._wrap(A.universe, k_multiplication(a, b))
