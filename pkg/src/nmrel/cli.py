"""Batch command line over sets, relations and the law checker.

Exit status: 0 success, 1 false predicate / failing law / witness found,
2 bad input.  ``NMREL_SEED`` supplies the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import core, relation, verify
from .core import NmError, NmSet
from .io import parse, serialize
from .relation import NmRelation

SET_OPS = {
    "union": core.union,
    "intersection": core.intersection,
    "addition": core.addition,
    "multiplication": core.multiplication,
}
SET_PREDICATES = {"subset": core.nm_subset, "equal": core.nm_equal}
REL_OPS = {
    "union": relation.rel_union,
    "intersection": relation.rel_intersection,
    "addition": relation.rel_addition,
    "multiplication": relation.rel_multiplication,
}
PROPERTIES = {
    "reflexive": relation.is_reflexive,
    "symmetric": relation.is_symmetric,
    "transitive": relation.is_transitive,
    "equivalence": relation.is_equivalence,
}


class InputError(NmError):
    pass


def _read(path: str, strict: bool):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse(text, strict=strict)
    except NmError as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_as(path: str, kind: type, strict: bool):
    value = _read(path, strict)
    if not isinstance(value, kind):
        want = "nmset" if kind is NmSet else "nmrelation"
        raise InputError(f"{path}: expected a {want} document")
    return value


def _default_seed() -> int:
    raw = os.environ.get("NMREL_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"NMREL_SEED={raw!r} is not an integer") from None


def _grid(text: str | None) -> tuple[float, ...] | None:
    if text is None:
        return None
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise InputError(f"--grid expects comma-separated numbers, got {text!r}") from None


def _report(**fields) -> str:
    return json.dumps(fields, separators=(",", ":"))


def cmd_op(args) -> tuple[str, int]:
    if args.kind == "complement":
        if len(args.files) != 1:
            raise InputError("complement takes exactly one set")
        return serialize(core.complement(_read_as(args.files[0], NmSet, args.strict))), 0
    if len(args.files) != 2:
        raise InputError(f"{args.kind} takes exactly two sets")
    A, B = (_read_as(p, NmSet, args.strict) for p in args.files)
    if args.kind in SET_PREDICATES:
        result = SET_PREDICATES[args.kind](A, B)
        return _report(predicate=args.kind, result=result), 0 if result else 1
    return serialize(SET_OPS[args.kind](A, B)), 0


def cmd_relop(args) -> tuple[str, int]:
    R, S = (_read_as(p, NmRelation, args.strict) for p in (args.R, args.S))
    return serialize(REL_OPS[args.kind](R, S)), 0


def cmd_product(args) -> tuple[str, int]:
    A = _read_as(args.A, NmSet, args.strict)
    B = A if args.B is None else _read_as(args.B, NmSet, args.strict)
    return serialize(relation.cartesian_product(A, B)), 0


def cmd_compose(args) -> tuple[str, int]:
    S = _read_as(args.S, NmRelation, args.strict)
    R = _read_as(args.R, NmRelation, args.strict)
    return serialize(relation.compose(S, R)), 0


def cmd_inverse(args) -> tuple[str, int]:
    return serialize(relation.inverse(_read_as(args.R, NmRelation, args.strict))), 0


def cmd_power(args) -> tuple[str, int]:
    return serialize(relation.power(_read_as(args.R, NmRelation, args.strict), args.k)), 0


def cmd_closure(args) -> tuple[str, int]:
    return serialize(relation.transitive_closure(_read_as(args.R, NmRelation, args.strict))), 0


def cmd_align(args) -> tuple[str, int]:
    value = _read(args.file, args.strict)
    if isinstance(value, NmSet):
        return serialize(core.align_dimension(value, args.n)), 0
    return serialize(relation.align_relation(value, args.n)), 0


def cmd_check(args) -> tuple[str, int]:
    result = PROPERTIES[args.property](_read_as(args.R, NmRelation, args.strict))
    return _report(property=args.property, result=result), 0 if result else 1


def _config(args) -> verify.GenConfig:
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        return verify.GenConfig(
            seed=seed,
            universe_size=args.universe_size,
            dimension=args.dimension,
            value_grid=_grid(args.grid),
            partial_probability=args.partial_probability,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_verify(args) -> tuple[str, int]:
    if args.list:
        laws = {name: law.statement for name, law in sorted(verify.LAWS.items())}
        return json.dumps(laws, indent=2), 0
    if args.law is None:
        raise InputError("verify needs --law (or --list)")
    if args.exhaustive:
        grid = _grid(args.grid) or (0.0, 0.5, 1.0)
        report = verify.exhaustive_check(args.law, grid, args.universe_size, args.dimension, budget=args.budget)
    else:
        report = verify.check_law(args.law, _config(args), args.trials)
    return json.dumps(report.to_dict(), separators=(",", ":")), 0 if report.passed else 1


def cmd_hunt(args) -> tuple[str, int]:
    witness = verify.find_counterexample(args.claim, _config(args), args.max_trials)
    if witness is None:
        return _report(claim=args.claim, witness=None), 0
    return json.dumps(witness, separators=(",", ":")), 1


def _gen_options(p: argparse.ArgumentParser, universe_size: int) -> None:
    p.add_argument("--seed", type=int, default=None, help="master seed (default: $NMREL_SEED or 0)")
    p.add_argument("--universe-size", type=int, default=universe_size)
    p.add_argument("--dimension", type=int, default=1)
    p.add_argument("--grid", default=None, help="comma-separated component values, e.g. 0,0.3,0.6,1")
    p.add_argument("--partial-probability", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nmrel", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="write the result here instead of stdout")
    common.add_argument("--strict", action="store_true", help="require non-decreasing truth sequences in inputs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("op", parents=[common], help="set operation or predicate")
    p.add_argument("--kind", required=True, choices=[*SET_OPS, "complement", *SET_PREDICATES])
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("relop", parents=[common], help="pairwise relation operation")
    p.add_argument("--kind", required=True, choices=list(REL_OPS))
    p.add_argument("R")
    p.add_argument("S")
    p.set_defaults(func=cmd_relop)

    p = sub.add_parser("product", parents=[common], help="cartesian product A x B (or A x A)")
    p.add_argument("A")
    p.add_argument("B", nargs="?")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("compose", parents=[common], help="S o R (R first, then S)")
    p.add_argument("S")
    p.add_argument("R")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("inverse", parents=[common])
    p.add_argument("R")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("power", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("R")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("closure", parents=[common], help="transitive closure")
    p.add_argument("R")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("align", parents=[common], help="pad a set or relation to dimension n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("check", parents=[common], help="relation property predicate")
    p.add_argument("--property", required=True, choices=list(PROPERTIES))
    p.add_argument("R")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="check a law on random or exhaustive inputs")
    p.add_argument("--law")
    p.add_argument("--list", action="store_true", help="list the law catalogue")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--budget", type=int, default=verify.DEFAULT_BUDGET)
    _gen_options(p, universe_size=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", parents=[common], help="search for a counterexample to a claim")
    p.add_argument("--claim", required=True, choices=sorted(verify.CLAIMS))
    p.add_argument("--max-trials", type=int, default=10_000)
    _gen_options(p, universe_size=3)
    p.set_defaults(func=cmd_hunt)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, status = args.func(args)
    except NmError as exc:
        print(f"nmrel: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
