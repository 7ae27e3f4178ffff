"""Command-line front end: one verb per operation, JSON (or DOT) on stdout.

Exit codes: 0 on success, 1 for a violated precondition (a structured
error document goes to stderr), 2 for usage errors.  Identical flags give
byte-identical output, whatever the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import geometry, oracle
from .core import (
    InvalidPartition,
    InvalidRankFunction,
    MatrixClass,
    Partition,
    RankFunction,
    class_rank,
    dominates,
    partition_to_rank,
    rank_to_class,
)
from .equations import (
    BudgetExceeded,
    ConvexTable,
    EquationSpec,
    FnTable,
    InvalidTable,
    SolutionTuple,
    check_solution,
    search_general,
    solve_nilpotent,
    solve_with_stable_ranks,
)

SEED_ENV = "RANKFN_SEED"

_ERRORS = (
    InvalidPartition,
    InvalidRankFunction,
    InvalidTable,
    BudgetExceeded,
    ValueError,
)


def _parse_values(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.strip().split(","))
    except ValueError as exc:
        raise ValueError(f"malformed integer list: {text!r}") from exc


def _parse_class(text: str) -> MatrixClass:
    """'3,2:1' is nilpotent part (3,2) with stable rank 1; ':q' and plain
    part lists work too."""
    parts_text, _, q_text = text.partition(":")
    q = int(q_text) if q_text.strip() else 0
    return MatrixClass(Partition.parse(parts_text), q)


def _parse_table(text: str, n: int, convex: bool):
    cls = ConvexTable if convex else FnTable
    if text == "id":
        return cls.identity(n)
    if text == "square":
        return cls.squares(n)
    if text.startswith("table:"):
        return cls(_parse_values(text[len("table:"):]))
    raise ValueError(
        f"table spec must be 'id', 'square', or 'table:v0,v1,...': {text!r}")


def _sized_partition(text: str, n: int) -> Partition:
    p = Partition.parse(text)
    if p.n != n:
        raise ValueError(f"partition {text!r} sums to {p.n}, expected n = {n}")
    return p


def _sized_class(text: str, n: int) -> MatrixClass:
    c = _parse_class(text)
    if c.size != n:
        raise ValueError(f"class {text!r} has size {c.size}, expected n = {n}")
    return c


def _capacity_str(c) -> str:
    return "-inf" if c == float("-inf") else str(Fraction(c))


def _default_seed() -> int:
    env = os.environ.get(SEED_ENV)
    return int(env) if env else oracle.DEFAULT_SEED


def _dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def _cmd_rank(args) -> str:
    c = MatrixClass(Partition.parse(args.jp), args.q)
    return _dumps(list(class_rank(c).values))


def _cmd_unrank(args) -> str:
    r = RankFunction(_parse_values(args.values))
    return _dumps(rank_to_class(r).to_json())


def _cmd_dominates(args) -> str:
    ra = partition_to_rank(Partition.parse(args.a))
    rb = partition_to_rank(Partition.parse(args.b))
    return _dumps({"dominates": dominates(ra, rb)})


def _cmd_solve(args) -> str:
    f = _parse_table(args.f, args.n, convex=True)
    lhs = [_sized_partition(t, args.n) for t in args.jp]
    rhs = solve_nilpotent(f, lhs)
    return _dumps({"rhs": None if rhs is None else list(rhs.parts)})


def _cmd_solve_stable(args) -> str:
    f = _parse_table(args.f, args.n, convex=True)
    lhs = [_sized_class(t, args.n) for t in args.cls]
    rhs = solve_with_stable_ranks(f, lhs)
    return _dumps({"rhs": None if rhs is None else rhs.to_json()})


def _cmd_check(args) -> str:
    lhs = [_sized_class(t, args.n) for t in args.cls]
    spec = EquationSpec(
        n=args.n,
        k=len(lhs),
        f=_parse_table(args.f, args.n, convex=False),
        g=_parse_table(args.g, args.n, convex=False),
        include_zero=args.include_zero,
    )
    sol = SolutionTuple(tuple(lhs), _sized_class(args.rhs, args.n))
    return _dumps({"holds": check_solution(spec, sol)})


def _cmd_search(args) -> str:
    spec = EquationSpec(
        n=args.n,
        k=args.k,
        f=_parse_table(args.f, args.n, convex=False),
        g=_parse_table(args.g, args.n, convex=False),
        include_zero=args.include_zero,
    )
    sols = search_general(spec, budget=args.budget, workers=args.workers)
    return _dumps({
        "n": args.n,
        "k": args.k,
        "f": spec.f.to_json(),
        "g": spec.g.to_json(),
        "count": len(sols),
        "solutions": [s.to_json() for s in sols],
    })


def _cmd_enumerate(args) -> str:
    f = _parse_table(args.f, args.n, convex=True)
    s = geometry.enumerate_sol(args.n, args.k, f, budget=args.budget, workers=args.workers)
    return _dumps(s.to_json())


def _cmd_components(args) -> str:
    f = _parse_table(args.f, args.n, convex=True)
    s = geometry.enumerate_sol(args.n, args.k, f, budget=args.budget)
    comps = geometry.irreducible_components(s)
    return _dumps({
        "count": len(comps),
        "dimensions": [c.dimension for c in comps],
        "capacity": _capacity_str(geometry.sol_capacity(s)),
        "irreducible": geometry.is_irreducible(s),
        "components": [c.to_json() for c in comps],
    })


def _cmd_capacity(args) -> str:
    f = _parse_table(args.f, args.n, convex=True)
    s = geometry.enumerate_sol(args.n, args.k, f, budget=args.budget)
    return _dumps({"capacity": _capacity_str(geometry.sol_capacity(s))})


def _cmd_dominating_tuple(args) -> str:
    f = _parse_table(args.f, args.n, convex=True)
    s = geometry.enumerate_sol(args.n, args.k, f, budget=args.budget)
    return _dumps(geometry.dominating_tuple(s).to_json())


def _cmd_hasse(args) -> str:
    return geometry.hasse_dot(args.n)


def _cmd_oracle_verify(args) -> str:
    report = oracle.verify_class_ranks(
        args.max_n, q_max=args.q_max, seeds=args.seeds, seed=args.seed)
    return _dumps(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankfn",
        description="Rank functions of matrix powers: conversions, equations, "
                    "solution-set geometry, exact-matrix verification.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("rank", _cmd_rank, "rank function of a class")
    p.add_argument("--jp", required=True, help="Jordan partition, e.g. 3,2,1")
    p.add_argument("--q", type=int, default=0, help="stable rank (invertible part size)")

    p = add("unrank", _cmd_unrank, "class of a rank function")
    p.add_argument("--values", required=True, help="rank sequence r(0),...,r(n)")

    p = add("dominates", _cmd_dominates, "dominance of one nilpotent class over another")
    p.add_argument("--a", required=True, help="partition of the smaller candidate")
    p.add_argument("--b", required=True, help="partition of the larger candidate")

    p = add("solve", _cmd_solve, "solve the convex-f, plain-sum equation for nilpotent B")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", default="id", help="id | square | table:v0,v1,...")
    p.add_argument("--jp", action="append", required=True,
                   help="left-hand partition (repeatable)")

    p = add("solve-stable", _cmd_solve_stable, "same, for classes with invertible parts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", default="id", help="id | square | table:v0,v1,...")
    p.add_argument("--cls", action="append", required=True,
                   help="left-hand class as parts:q, e.g. 2,1:1 (repeatable)")

    p = add("check", _cmd_check, "verify a candidate tuple against an equation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", default="id")
    p.add_argument("--g", default="id")
    p.add_argument("--cls", action="append", required=True, help="left-hand class (repeatable)")
    p.add_argument("--rhs", required=True, help="right-hand class")
    p.add_argument("--include-zero", action="store_true",
                   help="also require the equation at power 0")

    p = add("search", _cmd_search, "exhaustive search for general f, g")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", default="id")
    p.add_argument("--g", default="id")
    p.add_argument("--include-zero", action="store_true")
    p.add_argument("--budget", type=int, default=10**6,
                   help="candidate-tuple cap; exceeding it is an error")
    p.add_argument("--workers", type=int, default=1)

    p = add("enumerate", _cmd_enumerate, "all nilpotent solutions for convex f, plain sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", default="id")
    p.add_argument("--budget", type=int, default=10**6,
                   help="enumeration state cap; exceeding it is an error")
    p.add_argument("--workers", type=int, default=1)

    p = add("components", _cmd_components, "irreducible components of the solution closure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", default="id")
    p.add_argument("--budget", type=int, default=10**6)

    p = add("capacity", _cmd_capacity, "linear capacity of the solution closure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", default="id")
    p.add_argument("--budget", type=int, default=10**6)

    p = add("dominating-tuple", _cmd_dominating_tuple,
            "least coordinatewise upper bound and its capacity bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", default="id")
    p.add_argument("--budget", type=int, default=10**6)

    p = add("hasse", _cmd_hasse, "DOT diagram of dominance on partitions of n")
    p.add_argument("--n", type=int, required=True)

    p = add("oracle-verify", _cmd_oracle_verify,
            "replay combinatorial rank functions on literal matrices")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--q-max", type=int, default=2)
    p.add_argument("--seeds", type=int, default=5,
                   help="random conjugations per case")
    p.add_argument("--seed", type=int, default=_default_seed(),
                   help=f"base seed (default from ${SEED_ENV} if set)")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.handler(args)
    except _ERRORS as exc:
        err = {"error": type(exc).__name__, "detail": str(exc)}
        print(json.dumps(err), file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
