"""Seeded generators and law checking for sets and relations.

Every trial draws its operands from its own generator, seeded from the
master seed and the trial index (``SeedSequence(seed, spawn_key=(trial,))``),
so a report depends only on ``(law, cfg, trials)``.

Without a value grid, components are drawn uniformly from the dyadic lattice
``k / 2**20``.  On that lattice ``1 - x`` and the products used by the
algebraic sum are exact, which is what lets complement laws be checked with
``==`` rather than a tolerance.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

import numpy as np

from . import core
from .core import FILL, NmError, NmSet
from .io import to_document
from .relation import (
    NmRelation,
    compose,
    inverse,
    is_symmetric,
    is_transitive,
    power,
    rel_addition,
    rel_equal,
    rel_intersection,
    rel_multiplication,
    rel_subset,
    rel_union,
    cartesian_square,
    closure_with_steps,
    transitive_closure,
)

UNIFORM_STEPS = 2**20
ARITH_TOL = 1e-12
DEFAULT_BUDGET = 1_000_000


class ResourceError(NmError):
    pass


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    universe_size: int = 3
    dimension: int = 1
    value_grid: tuple[float, ...] | None = None
    partial_probability: float = 0.0

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.universe_size < 1:
            raise ValueError("universe_size must be >= 1")
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.value_grid is not None:
            grid = tuple(float(v) for v in self.value_grid)
            if not grid or any(not 0.0 <= v <= 1.0 for v in grid):
                raise ValueError("value_grid must be a non-empty list of values in [0, 1]")
            object.__setattr__(self, "value_grid", grid)
        if not 0.0 <= self.partial_probability <= 1.0:
            raise ValueError("partial_probability must lie in [0, 1]")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def universe_of(n: int) -> tuple[str, ...]:
    return tuple(sorted(f"e{k}" for k in range(n)))


def _draw(cfg: GenConfig, rng: np.random.Generator, shape) -> np.ndarray:
    if cfg.value_grid is not None:
        return rng.choice(np.asarray(cfg.value_grid), size=shape)
    return rng.integers(0, UNIFORM_STEPS, size=shape, endpoint=True) / UNIFORM_STEPS


def gen_nmset(cfg: GenConfig, rng: np.random.Generator | None = None) -> NmSet:
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    data = _draw(cfg, rng, (cfg.universe_size, cfg.dimension, 3))
    return NmSet._wrap(universe_of(cfg.universe_size), data)


def gen_relation(cfg: GenConfig, rng: np.random.Generator | None = None) -> NmRelation:
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    m = cfg.universe_size
    data = _draw(cfg, rng, (m, m, cfg.dimension, 3))
    mask = rng.random((m, m)) >= cfg.partial_probability
    data[~mask] = FILL
    u = universe_of(m)
    return NmRelation._wrap(u, u, data, mask)


def gen_symmetric(cfg: GenConfig, rng: np.random.Generator | None = None) -> NmRelation:
    """Random relation with the upper triangle (x <= y) mirrored onto the lower."""
    R = gen_relation(cfg, rng)
    lower = np.tril_indices(cfg.universe_size, k=-1)
    data = R.data.copy()
    mask = R.mask.copy()
    data[lower] = R.data.transpose(1, 0, 2, 3)[lower]
    mask[lower] = R.mask.T[lower]
    return NmRelation._wrap(R.source, R.target, data, mask)


def gen_transitive(cfg: GenConfig, rng: np.random.Generator | None = None) -> NmRelation:
    return transitive_closure(gen_relation(cfg, rng))


def gen_reflexive(cfg: GenConfig, rng: np.random.Generator | None = None) -> NmRelation:
    R = gen_relation(cfg, rng)
    data = R.data.copy()
    mask = R.mask.copy()
    idx = np.arange(cfg.universe_size)
    data[idx, idx] = (1.0, 0.0, 0.0)
    mask[idx, idx] = True
    return NmRelation._wrap(R.source, R.target, data, mask)


# ---------------------------------------------------------------- law catalogue


@dataclass(frozen=True)
class Law:
    name: str
    domain: str  # "set" or "relation"
    arity: int
    holds: Callable[..., bool]
    sample: Callable[[GenConfig, np.random.Generator], tuple]
    premise: Callable[..., bool] | None = None
    statement: str = ""


def _close_sets(A: NmSet, B: NmSet, tol: float = ARITH_TOL) -> bool:
    if A.universe != B.universe or A.dimension != B.dimension:
        return False
    return bool(np.allclose(A.data, B.data, rtol=0.0, atol=tol))


def _symmetric_within(R: NmRelation, tol: float = ARITH_TOL) -> bool:
    return bool(np.allclose(R.data, R.data.transpose(1, 0, 2, 3), rtol=0.0, atol=tol))


def _sets(k):
    return lambda cfg, rng: tuple(gen_nmset(cfg, rng) for _ in range(k))


def _rels(gen, k):
    return lambda cfg, rng: tuple(gen(cfg, rng) for _ in range(k))


def _mixed_symmetry(cfg, rng):
    gen = gen_symmetric if rng.random() < 0.5 else gen_relation
    return (gen(cfg, rng),)


def _maybe_equal_pair(cfg, rng):
    A = gen_nmset(cfg, rng)
    return (A, A) if rng.random() < 0.5 else (A, gen_nmset(cfg, rng))


def _subset_chain(cfg, rng):
    A = gen_nmset(cfg, rng)
    B = core.union(A, gen_nmset(cfg, rng))
    return A, B, core.union(B, gen_nmset(cfg, rng))


def _both(pred):
    return lambda *rs: all(pred(r) for r in rs)


def _commuting_symmetric(R, S):
    return is_symmetric(R) and is_symmetric(S) and compose(R, S) == compose(S, R)


def _closure_contract(R):
    C, steps = closure_with_steps(R)
    return (
        rel_subset(R, C)
        and is_transitive(C)
        and transitive_closure(C) == C
        and (not is_transitive(R) or rel_equal(C, R))
        and steps <= len(R.source)
    )


_c, _u, _n = core.complement, core.union, core.intersection

LAWS: dict[str, Law] = {}


def _register(*laws: Law) -> None:
    for law in laws:
        LAWS[law.name] = law


_register(
    # relations
    Law("inverse_involution", "relation", 1,
        lambda R: inverse(inverse(R)) == R, _rels(gen_relation, 1),
        statement="(R^-1)^-1 = R"),
    Law("composition_inverse", "relation", 2,
        lambda S, R: inverse(compose(S, R)) == compose(inverse(R), inverse(S)), _rels(gen_relation, 2),
        statement="(S o R)^-1 = R^-1 o S^-1"),
    Law("symmetric_iff_self_inverse", "relation", 1,
        lambda R: is_symmetric(R) == rel_equal(R, inverse(R)), _mixed_symmetry,
        statement="R symmetric <=> R = R^-1"),
    Law("inverse_preserves_symmetry", "relation", 1,
        lambda R: is_symmetric(inverse(R)), _rels(gen_symmetric, 1), premise=is_symmetric,
        statement="R symmetric => R^-1 symmetric"),
    Law("symmetry_union", "relation", 2,
        lambda R, S: is_symmetric(rel_union(R, S)), _rels(gen_symmetric, 2), premise=_both(is_symmetric),
        statement="R, S symmetric => R u S symmetric"),
    Law("symmetry_intersection", "relation", 2,
        lambda R, S: is_symmetric(rel_intersection(R, S)), _rels(gen_symmetric, 2), premise=_both(is_symmetric),
        statement="R, S symmetric => R n S symmetric"),
    Law("symmetry_addition", "relation", 2,
        lambda R, S: _symmetric_within(rel_addition(R, S)), _rels(gen_symmetric, 2), premise=_both(is_symmetric),
        statement="R, S symmetric => R + S symmetric (1e-12)"),
    Law("symmetry_multiplication", "relation", 2,
        lambda R, S: _symmetric_within(rel_multiplication(R, S)), _rels(gen_symmetric, 2),
        premise=_both(is_symmetric),
        statement="R, S symmetric => R x S symmetric (1e-12)"),
    Law("transitive_inverse", "relation", 1,
        lambda R: is_transitive(inverse(R)), _rels(gen_transitive, 1), premise=is_transitive,
        statement="R transitive => R^-1 transitive"),
    Law("transitive_intersection", "relation", 2,
        lambda R, S: is_transitive(rel_intersection(R, S)), _rels(gen_transitive, 2),
        premise=_both(is_transitive),
        statement="R, S transitive => R n S transitive"),
    Law("transitive_square", "relation", 1,
        lambda R: is_transitive(power(R, 2)), _rels(gen_transitive, 1), premise=is_transitive,
        statement="R transitive => R^2 transitive"),
    Law("remark_commuting_composition_symmetric", "relation", 2,
        lambda R, S: is_symmetric(compose(R, S)), _rels(gen_symmetric, 2), premise=_commuting_symmetric,
        statement="R, S symmetric and R o S = S o R => R o S symmetric"),
    Law("compose_associative", "relation", 3,
        lambda T3, S, R: compose(T3, compose(S, R)) == compose(compose(T3, S), R), _rels(gen_relation, 3),
        statement="T o (S o R) = (T o S) o R"),
    Law("closure_contract", "relation", 1,
        _closure_contract, _rels(gen_relation, 1),
        statement="closure contains R, is transitive and idempotent, equals R when R is transitive"),
    # sets
    Law("complement_involution", "set", 1,
        lambda A: _c(_c(A)) == A, _sets(1), statement="(A^c)^c = A"),
    Law("de_morgan_union", "set", 2,
        lambda A, B: _c(_u(A, B)) == _n(_c(A), _c(B)), _sets(2), statement="(A u B)^c = A^c n B^c"),
    Law("de_morgan_intersection", "set", 2,
        lambda A, B: _c(_n(A, B)) == _u(_c(A), _c(B)), _sets(2), statement="(A n B)^c = A^c u B^c"),
    Law("union_commutative", "set", 2, lambda A, B: _u(A, B) == _u(B, A), _sets(2)),
    Law("intersection_commutative", "set", 2, lambda A, B: _n(A, B) == _n(B, A), _sets(2)),
    Law("union_associative", "set", 3, lambda A, B, C: _u(_u(A, B), C) == _u(A, _u(B, C)), _sets(3)),
    Law("intersection_associative", "set", 3, lambda A, B, C: _n(_n(A, B), C) == _n(A, _n(B, C)), _sets(3)),
    Law("union_idempotent", "set", 1, lambda A: _u(A, A) == A, _sets(1)),
    Law("intersection_idempotent", "set", 1, lambda A: _n(A, A) == A, _sets(1)),
    Law("union_absorption", "set", 2, lambda A, B: _u(A, _n(A, B)) == A, _sets(2)),
    Law("intersection_absorption", "set", 2, lambda A, B: _n(A, _u(A, B)) == A, _sets(2)),
    Law("subset_reflexive", "set", 1, lambda A: core.nm_subset(A, A), _sets(1)),
    Law("subset_antisymmetric", "set", 2,
        lambda A, B: (core.nm_subset(A, B) and core.nm_subset(B, A)) == core.nm_equal(A, B),
        _maybe_equal_pair, statement="A <= B and B <= A <=> A = B"),
    Law("subset_transitive", "set", 3,
        lambda A, B, C: core.nm_subset(A, C), _subset_chain,
        premise=lambda A, B, C: core.nm_subset(A, B) and core.nm_subset(B, C),
        statement="A <= B <= C => A <= C"),
    Law("intersection_below_union", "set", 2,
        lambda A, B: core.nm_subset(_n(A, B), A) and core.nm_subset(A, _u(A, B)), _sets(2)),
    Law("addition_commutative", "set", 2,
        lambda A, B: _close_sets(core.addition(A, B), core.addition(B, A)), _sets(2)),
    Law("addition_associative", "set", 3,
        lambda A, B, C: _close_sets(core.addition(core.addition(A, B), C), core.addition(A, core.addition(B, C))),
        _sets(3)),
    Law("multiplication_commutative", "set", 2,
        lambda A, B: _close_sets(core.multiplication(A, B), core.multiplication(B, A)), _sets(2)),
    Law("multiplication_associative", "set", 3,
        lambda A, B, C: _close_sets(
            core.multiplication(core.multiplication(A, B), C), core.multiplication(A, core.multiplication(B, C))
        ),
        _sets(3)),
    Law("addition_multiplication_duality", "set", 2,
        lambda A, B: _close_sets(_c(core.addition(A, B)), core.multiplication(_c(A), _c(B))), _sets(2),
        statement="(A + B)^c = A^c x B^c (1e-12)"),
    Law("cartesian_square_symmetric", "set", 1,
        lambda A: is_symmetric(cartesian_square(A)), _sets(1)),
)

POSITIVE_LAWS = (
    "inverse_involution",
    "composition_inverse",
    "symmetric_iff_self_inverse",
    "inverse_preserves_symmetry",
    "symmetry_union",
    "symmetry_intersection",
    "symmetry_addition",
    "symmetry_multiplication",
    "transitive_inverse",
    "transitive_intersection",
    "transitive_square",
)

CORE_LAWS = (
    "complement_involution",
    "de_morgan_union",
    "de_morgan_intersection",
    "union_commutative",
    "intersection_commutative",
    "union_associative",
    "intersection_associative",
    "union_idempotent",
    "intersection_idempotent",
    "union_absorption",
    "intersection_absorption",
    "subset_reflexive",
    "subset_antisymmetric",
    "subset_transitive",
    "intersection_below_union",
)


def get_law(name: str) -> Law:
    try:
        return LAWS[name]
    except KeyError:
        raise NmError(f"unknown law {name!r}; known laws: {', '.join(sorted(LAWS))}") from None


@dataclass
class LawReport:
    law_name: str
    trials: int
    failures: int
    seed: int | None
    first_counterexample: dict | None = None
    skipped: int = 0
    elapsed: float = 0.0
    mode: str = "random"

    @property
    def hit_rate(self) -> float:
        total = self.trials + self.skipped
        return self.trials / total if total else 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["hit_rate"] = self.hit_rate
        return out


def _witness(ops: Sequence, **extra) -> dict:
    return {**extra, "inputs": [to_document(op) for op in ops]}


def _evaluate(law: Law, cases, report: LawReport) -> LawReport:
    for tag, ops in cases:
        if law.premise is not None and not law.premise(*ops):
            report.skipped += 1
            continue
        report.trials += 1
        if not law.holds(*ops):
            report.failures += 1
            if report.first_counterexample is None:
                report.first_counterexample = _witness(ops, **tag)
    return report


def check_law(law_name: str, cfg: GenConfig, trials: int) -> LawReport:
    """Run ``law_name`` on ``trials`` independently seeded inputs.

    Inputs come from the law's own generator, which already satisfies its
    precondition; the only law that filters is the commuting-composition one,
    whose rejected draws are counted in ``skipped``.
    """
    law = get_law(law_name)
    start = time.perf_counter()
    cases = (
        ({"trial": t}, law.sample(cfg, trial_rng(cfg.seed, t))) for t in range(trials)
    )
    report = _evaluate(law, cases, LawReport(law_name, 0, 0, cfg.seed))
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------- exhaustive


def _set_cases(law: Law, grid: Sequence[float], n: int, p: int):
    # Every set operation acts on each (element, slot) triple on its own, so a
    # law holds for all n x p sets iff it holds when each operand repeats one
    # triple at every position; enumerate those.
    u = universe_of(n)
    triples = list(itertools.product(grid, repeat=3))
    for combo in itertools.product(triples, repeat=law.arity):
        ops = tuple(NmSet._wrap(u, np.broadcast_to(np.asarray(tr), (n, p, 3))) for tr in combo)
        yield {"case": [list(tr) for tr in combo]}, ops


def _relation_cases(law: Law, grid: Sequence[float], m: int, p: int):
    # Relation operations never mix T, I and F, nor slots.  So enumerate every
    # grid pattern of one component over all m x m pairs (repeated in every
    # slot) while the other two components sit at their fill value.
    u = universe_of(m)
    patterns = list(itertools.product(grid, repeat=m * m))
    for comp in range(3):
        for combo in itertools.product(patterns, repeat=law.arity):
            ops = []
            for pat in combo:
                data = np.empty((m, m, p, 3))
                data[:] = FILL
                data[..., comp] = np.asarray(pat).reshape(m, m, 1)
                ops.append(NmRelation._wrap(u, u, data))
            yield {"component": "tif"[comp], "case": [list(pat) for pat in combo]}, tuple(ops)


def count_cases(law: Law, grid: Sequence[float], universe_size: int) -> int:
    g = len(grid)
    if law.domain == "set":
        return g ** (3 * law.arity)
    return 3 * g ** (universe_size * universe_size * law.arity)


def exhaustive_check(
    law_name: str,
    grid: Sequence[float],
    universe_size: int,
    dimension: int,
    budget: int = DEFAULT_BUDGET,
) -> LawReport:
    """Check a law on every grid-valued input of the given shape.

    The enumeration is reduced by the independence of the operations:
    sets by (element, slot) position, relations by (component, slot).  See
    ``_set_cases`` and ``_relation_cases``.  Raises :class:`ResourceError`
    when the number of cases exceeds ``budget``.
    """
    law = get_law(law_name)
    grid = tuple(float(v) for v in grid)
    if not grid or any(not 0.0 <= v <= 1.0 for v in grid):
        raise NmError("grid values must lie in [0, 1]")
    if universe_size < 1 or dimension < 1:
        raise NmError("universe_size and dimension must be positive")
    n_cases = count_cases(law, grid, universe_size)
    if n_cases > budget:
        raise ResourceError(
            f"exhaustive {law_name!r} needs {n_cases} cases "
            f"(grid {len(grid)}, universe {universe_size}, arity {law.arity}); budget is {budget}"
        )
    start = time.perf_counter()
    if law.domain == "set":
        cases = _set_cases(law, grid, universe_size, dimension)
    else:
        cases = _relation_cases(law, grid, universe_size, dimension)
    report = _evaluate(law, cases, LawReport(law_name, 0, 0, None, mode="exhaustive"))
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------- counterexamples


@dataclass(frozen=True)
class Claim:
    name: str
    generator: Callable
    combine: Callable[[NmRelation, NmRelation], NmRelation]
    fails: Callable[[NmRelation], bool]


CLAIMS = {
    c.name: c
    for c in (
        Claim("union_not_transitive", gen_transitive, rel_union, lambda X: not is_transitive(X)),
        Claim("addition_not_transitive", gen_transitive, rel_addition, lambda X: not is_transitive(X)),
        Claim("multiplication_not_transitive", gen_transitive, rel_multiplication, lambda X: not is_transitive(X)),
        # R o S, i.e. S first then R
        Claim("composition_not_symmetric", gen_symmetric, compose, lambda X: not is_symmetric(X)),
    )
}


def replay_claim(claim: str, R: NmRelation, S: NmRelation) -> bool:
    """True when ``(R, S)`` witnesses ``claim``."""
    c = _get_claim(claim)
    pre = is_transitive if c.generator is gen_transitive else is_symmetric
    return pre(R) and pre(S) and c.fails(c.combine(R, S))


def _get_claim(claim: str) -> Claim:
    try:
        return CLAIMS[claim]
    except KeyError:
        raise NmError(f"unknown claim {claim!r}; known claims: {', '.join(sorted(CLAIMS))}") from None


def find_counterexample(claim: str, cfg: GenConfig, max_trials: int) -> dict | None:
    """Search for a pair of relations contradicting the universal form of ``claim``.

    Returns the first witness in trial order as a JSON-ready dict, or None.
    """
    c = _get_claim(claim)
    for t in range(max_trials):
        rng = trial_rng(cfg.seed, t)
        R, S = c.generator(cfg, rng), c.generator(cfg, rng)
        X = c.combine(R, S)
        if c.fails(X):
            return {
                "claim": claim,
                "seed": cfg.seed,
                "trial": t,
                "R": to_document(R),
                "S": to_document(S),
                "combined": to_document(X),
            }
    return None
