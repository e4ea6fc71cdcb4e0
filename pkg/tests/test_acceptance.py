"""One test per acceptance criterion; each logs a pass/fail line shown in the
terminal summary under "acceptance criteria"."""

import hashlib
import json
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from nmrel import closure_with_steps, is_transitive, parse, rel_subset, serialize, transitive_closure
from nmrel.verify import (
    CLAIMS,
    CORE_LAWS,
    POSITIVE_LAWS,
    GenConfig,
    check_law,
    exhaustive_check,
    find_counterexample,
    gen_nmset,
    gen_relation,
    replay_claim,
    trial_rng,
)
from nmrel.worked_example import PRINTED, computed, divergence_report

FIXTURE = Path(__file__).parent / "fixtures" / "witnesses.json"


class Criterion:
    def __init__(self, log, number, title, limit):
        self.log, self.number, self.title, self.limit = log, number, title, limit
        self.details = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        extra = "; ".join(self.details)
        self.log.append(
            f"[{'PASS' if ok else 'FAIL'}] {self.number}. {self.title}: {elapsed:.2f}s (limit {self.limit:g}s)"
            + (f"; {extra}" if extra else "")
        )
        if exc_type is None:
            assert elapsed < self.limit, f"took {elapsed:.2f}s, limit {self.limit}s"
        return False


def _slot(row):
    return (row["result"], tuple(row["pair"]), row["component"], row["slot"])


def test_1_worked_example(acceptance_log):
    with Criterion(acceptance_log, 1, "worked example and divergence report", 1.0) as c:
        rows = divergence_report()
        got = computed()
        diverging = {_slot(r) for r in rows}

        # every printed slot either matches exactly or is reported
        matched = 0
        for name, pairs in PRINTED.items():
            for pair, seqs in pairs.items():
                values = got[name].sequences(pair)
                for ci, comp in enumerate("tif"):
                    for j, printed in enumerate(seqs[ci]):
                        key = (name, pair, comp, j + 1)
                        if key in diverging:
                            assert values[ci][j] != printed
                        else:
                            assert values[ci][j] == printed, key
                            matched += 1

        assert got["AxB"].sequences(("x1", "x1"))[:2] == ((0.3, 0.5, 0.6), (0.2, 0.4, 0.4))
        assert got["RuS"].sequences(("x1", "x1"))[1] == (0.2, 0.4, 0.5)

        required = {
            ("AxB", ("x1", "x1"), "f", 1),
            ("AxB", ("x1", "x2"), "t", 2), ("AxB", ("x1", "x2"), "t", 3),
            ("AxB", ("x1", "x2"), "i", 1), ("AxB", ("x1", "x2"), "f", 1),
            ("RuS", ("x1", "x1"), "t", 2), ("RuS", ("x1", "x1"), "f", 1),
            ("RnS", ("x1", "x1"), "t", 2), ("RnS", ("x1", "x1"), "f", 1),
        }
        assert required <= diverging, required - diverging
        # the report is machine-readable
        assert json.loads(json.dumps(rows)) == rows
        c.details.append(f"{matched} slots match, {len(rows)} divergences reported")


def test_2_positive_laws_randomized(acceptance_log):
    with Criterion(acceptance_log, 2, "positive laws, randomized", 60.0) as c:
        runs = failures = 0
        for law in POSITIVE_LAWS:
            for n in (2, 3, 4):
                for p in (1, 3):
                    rep = check_law(law, GenConfig(seed=42, universe_size=n, dimension=p), 1000)
                    assert rep.trials == 1000
                    assert rep.failures == 0, (law, n, p, rep.first_counterexample)
                    runs += 1
                    failures += rep.failures
        c.details.append(f"{len(POSITIVE_LAWS)} laws x {runs // len(POSITIVE_LAWS)} configs x 1000 trials, 0 failures")


def test_3_positive_laws_exhaustive(acceptance_log):
    with Criterion(acceptance_log, 3, "positive laws, exhaustive", 300.0) as c:
        for law in ("inverse_involution", "composition_inverse", "transitive_intersection"):
            rep = exhaustive_check(law, (0.0, 0.5, 1.0), universe_size=2, dimension=1)
            assert rep.trials > 0 and rep.failures == 0, (law, rep.first_counterexample)
            c.details.append(f"{law} {rep.trials} cases")


def test_4_negative_claim_witnesses(acceptance_log):
    frozen = json.loads(FIXTURE.read_text())
    cfg = GenConfig(seed=frozen["config"]["seed"], universe_size=3, dimension=1, value_grid=(0.0, 0.3, 0.6, 1.0))
    assert tuple(frozen["config"]["grid"]) == cfg.value_grid
    with Criterion(acceptance_log, 4, "negative-claim witnesses", 60.0) as c:
        for claim in sorted(CLAIMS):
            w = find_counterexample(claim, cfg, 10_000)
            assert w is not None, claim
            assert w == frozen["witnesses"][claim], claim
            c.details.append(f"{claim}@{w['trial']}")
    with Criterion(acceptance_log, 4, "frozen witnesses replay", 1.0):
        for claim, w in frozen["witnesses"].items():
            R, S = parse(json.dumps(w["R"])), parse(json.dumps(w["S"]))
            assert replay_claim(claim, R, S)


def test_5_closure_contract(acceptance_log):
    with Criterion(acceptance_log, 5, "closure contract", 30.0) as c:
        transitive_inputs = 0
        for t in range(500):
            m = 1 + t % 5
            cfg = GenConfig(seed=2024, universe_size=m, dimension=1 + t % 2, partial_probability=(t % 4) / 4)
            rng = trial_rng(cfg.seed, t)
            R = gen_relation(cfg, rng)
            if t % 5 == 0:
                R = transitive_closure(R)
            C, steps = closure_with_steps(R)
            assert rel_subset(R, C)
            assert is_transitive(C)
            assert transitive_closure(C) == C
            assert steps <= m
            if is_transitive(R):
                transitive_inputs += 1
                assert C == R
        c.details.append(f"500 relations, {transitive_inputs} already transitive")


def test_6_algebraic_core(acceptance_log):
    with Criterion(acceptance_log, 6, "algebraic core laws", 30.0) as c:
        cases = 0
        for law in CORE_LAWS:
            rep = check_law(law, GenConfig(seed=42, universe_size=2, dimension=2), 1000)
            assert rep.failures == 0 and rep.trials + rep.skipped == 1000, (law, rep.first_counterexample)
            ex = exhaustive_check(law, (0.0, 0.5, 1.0), universe_size=2, dimension=2)
            assert ex.failures == 0 and ex.trials > 0, (law, ex.first_counterexample)
            cases += ex.trials
        c.details.append(f"{len(CORE_LAWS)} laws, 1000 random trials each, {cases} exhaustive cases")


_DUMP = """
import hashlib, sys
from nmrel import serialize
from nmrel.verify import GenConfig, gen_nmset, gen_relation, trial_rng
h = hashlib.sha256()
for t in range(200):
    cfg = GenConfig(seed=99, universe_size=1 + t % 4, dimension=1 + t % 3, partial_probability=0.3)
    gen = gen_nmset if t % 2 else gen_relation
    h.update(serialize(gen(cfg, trial_rng(99, t))).encode())
print(h.hexdigest())
"""


def test_7_serialization(acceptance_log):
    with Criterion(acceptance_log, 7, "serialization round trip and stability", 30.0) as c:
        for t in range(1000):
            cfg = GenConfig(seed=7, universe_size=1 + t % 5, dimension=1 + t % 3,
                            partial_probability=0.25 if t % 3 else 0.0,
                            value_grid=(0.0, 0.1, 0.5, 1.0) if t % 4 == 0 else None)
            gen = gen_nmset if t % 2 else gen_relation
            value = gen(cfg, trial_rng(cfg.seed, t))
            text = serialize(value)
            assert parse(text) == value
            assert serialize(parse(text)) == text
        digests = {
            subprocess.run([sys.executable, "-c", _DUMP], capture_output=True, text=True, check=True).stdout
            for _ in range(2)
        }
        assert len(digests) == 1
        c.details.append(f"1000 documents; two runs share digest {digests.pop().strip()[:12]}")
