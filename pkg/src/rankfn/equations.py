"""Rank function equations and their solvers.

An equation fixes integer tables f and g and asks for classes with

    f(r_{A_1}(m)) + ... + f(r_{A_k}(m)) = g(r_B(m))

at every power m in the evaluation window.  For strictly increasing convex
f with f(0) = 0 and g the identity, the left side already determines the
whole candidate sequence for B, and a solution exists iff that sequence is
a genuine rank function; this collapses to the single inequality
2 r(1) - r(2) <= n.  For arbitrary g nothing similar is available and
``search_general`` falls back to exhaustive, budgeted enumeration.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import (
    MatrixClass,
    Partition,
    RankFunction,
    class_rank,
    is_valid_rank_function,
    nontrivial_blocks,
    partition_count,
    partition_to_rank,
    partitions_of,
    rank_to_class,
    rank_to_partition,
)

__all__ = [
    "InvalidTable",
    "NotZeroAtZero",
    "NotStrictlyIncreasing",
    "NotConvex",
    "BudgetExceeded",
    "FnTable",
    "ConvexTable",
    "validate_convex_table",
    "table_from_json",
    "EquationSpec",
    "SolutionTuple",
    "check_solution",
    "solve_nilpotent",
    "solve_with_stable_ranks",
    "structure_check_identity",
    "search_general",
]


class InvalidTable(ValueError):
    """Table fails a declared shape constraint."""


class NotZeroAtZero(InvalidTable):
    """Convex table does not start at 0."""


class NotStrictlyIncreasing(InvalidTable):
    """Convex table is not strictly increasing."""


class NotConvex(InvalidTable):
    """Table violates v(i) + v(i+2) >= 2 v(i+1)."""


class BudgetExceeded(RuntimeError):
    """Enumeration would visit more states than the configured budget."""


@dataclass(frozen=True)
class FnTable:
    """Values of an arbitrary non-negative integer function on 0..len-1."""

    values: tuple[int, ...]
    kind: str = "table"

    def __post_init__(self) -> None:
        values = tuple(self.values)
        if not values:
            raise InvalidTable("empty table")
        if any(not isinstance(v, int) or v < 0 for v in values):
            raise InvalidTable(f"table entries must be non-negative integers: {values!r}")
        object.__setattr__(self, "values", values)

    def __call__(self, x: int) -> int:
        return self.values[x]

    @classmethod
    def identity(cls, n: int) -> "FnTable":
        return cls(tuple(range(n + 1)), kind="id")

    @classmethod
    def squares(cls, n: int) -> "FnTable":
        return cls(tuple(i * i for i in range(n + 1)), kind="square")

    def to_json(self) -> dict:
        obj: dict = {"kind": self.kind}
        if self.kind == "table":
            obj["values"] = list(self.values)
        return obj


@dataclass(frozen=True)
class ConvexTable(FnTable):
    """Strictly increasing convex table with f(0) = 0."""

    def __post_init__(self) -> None:
        super().__post_init__()
        v = self.values
        if v[0] != 0:
            raise NotZeroAtZero(f"f(0) = {v[0]} != 0")
        if any(v[i + 1] <= v[i] for i in range(len(v) - 1)):
            raise NotStrictlyIncreasing(f"table is not strictly increasing: {v!r}")
        if any(v[i] + v[i + 2] < 2 * v[i + 1] for i in range(len(v) - 2)):
            raise NotConvex(f"table is not convex: {v!r}")


def validate_convex_table(values: Sequence[int]) -> ConvexTable:
    """Wrap a value list, raising the specific violated condition if any."""
    return ConvexTable(tuple(values))


def table_from_json(obj: dict, n: int, convex: bool = False) -> FnTable:
    """Rebuild a table from its JSON descriptor, materialized on 0..n for the
    named kinds."""
    kind = obj.get("kind", "table")
    cls = ConvexTable if convex else FnTable
    if kind == "id":
        return cls.identity(n)
    if kind == "square":
        return cls.squares(n)
    if kind == "table":
        return cls(tuple(int(v) for v in obj["values"]))
    raise InvalidTable(f"unknown table kind: {kind!r}")


@dataclass(frozen=True)
class EquationSpec:
    """A fixed equation shape: k left-hand classes of size n, tables f and g,
    evaluated at powers 1..n (optionally also at 0).

    Powers beyond n add nothing: every rank function involved is constant
    from n on, so the m = n equation already covers the whole tail.
    """

    n: int
    k: int
    f: FnTable
    g: FnTable
    include_zero: bool = False

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"matrix size must be at least 2: n = {self.n}")
        if self.k < 1:
            raise ValueError(f"need at least one left-hand class: k = {self.k}")
        for name, table in (("f", self.f), ("g", self.g)):
            if len(table.values) < self.n + 1:
                raise InvalidTable(f"{name} table must cover 0..{self.n}")

    def points(self) -> range:
        return range(0 if self.include_zero else 1, self.n + 1)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "include_zero": self.include_zero,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EquationSpec":
        n = int(obj["n"])
        return cls(
            n=n,
            k=int(obj["k"]),
            f=table_from_json(obj["f"], n, convex=False),
            g=table_from_json(obj["g"], n, convex=False),
            include_zero=bool(obj.get("include_zero", False)),
        )


@dataclass(frozen=True)
class SolutionTuple:
    """Candidate (A_1, ..., A_k; B): nonzero classes of one common size."""

    lhs: tuple[MatrixClass, ...]
    rhs: MatrixClass

    def __post_init__(self) -> None:
        lhs = tuple(self.lhs)
        if not lhs:
            raise ValueError("need at least one left-hand class")
        members = lhs + (self.rhs,)
        sizes = {c.size for c in members}
        if len(sizes) != 1:
            raise ValueError(f"members must share one size, got {sorted(sizes)}")
        if any(c.is_zero for c in members):
            raise ValueError("zero classes are excluded from solution tuples")
        object.__setattr__(self, "lhs", lhs)

    @property
    def size(self) -> int:
        return self.rhs.size

    @classmethod
    def from_partitions(cls, lhs: Sequence[Partition], rhs: Partition) -> "SolutionTuple":
        """All-nilpotent tuple."""
        return cls(tuple(MatrixClass(p) for p in lhs), MatrixClass(rhs))

    def to_json(self) -> dict:
        return {"lhs": [c.to_json() for c in self.lhs], "rhs": self.rhs.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "SolutionTuple":
        return cls(
            tuple(MatrixClass.from_json(c) for c in obj["lhs"]),
            MatrixClass.from_json(obj["rhs"]),
        )


def check_solution(spec: EquationSpec, sol: SolutionTuple) -> bool:
    """Does the tuple satisfy the equation at every evaluation power?"""
    if sol.size != spec.n:
        raise ValueError(f"size mismatch: tuple has n = {sol.size}, spec has n = {spec.n}")
    if len(sol.lhs) != spec.k:
        raise ValueError(f"arity mismatch: tuple has k = {len(sol.lhs)}, spec has k = {spec.k}")
    ranks = [class_rank(c) for c in sol.lhs]
    rb = class_rank(sol.rhs)
    return all(
        sum(spec.f(r.at(m)) for r in ranks) == spec.g(rb.at(m))
        for m in spec.points()
    )


def solve_nilpotent(f: ConvexTable, lhs: Sequence[Partition]) -> Partition | None:
    """Unique nilpotent B with sum of f(r_{A_i}(m)) equal to r_B(m) on 1..n,
    or None when no such B exists.

    Writing r(m) for the transformed sum, the candidate (n, r(1), ..., r(n))
    is automatically weakly decreasing and convex away from 0, so it is a
    rank function exactly when 2 r(1) - r(2) <= n.  Since f(0) = 0 the tail
    vanishes and the candidate pins down a genuine partition of n.
    """
    if not lhs:
        raise ValueError("need at least one left-hand partition")
    n = lhs[0].n
    if any(p.n != n for p in lhs):
        raise ValueError("left-hand partitions must share one size")
    if any(not nontrivial_blocks(p) for p in lhs):
        raise ValueError("zero classes are excluded: every partition needs a part >= 2")
    if len(f.values) < n + 1:
        raise InvalidTable(f"f table must cover 0..{n}")
    ranks = [partition_to_rank(p) for p in lhs]
    r = [sum(f(rk.at(m)) for rk in ranks) for m in range(n + 1)]
    if 2 * r[1] - r[2] > n:
        return None
    values = (n, *r[1:])
    assert is_valid_rank_function(values), values
    return rank_to_partition(RankFunction(values))


def solve_with_stable_ranks(f: ConvexTable, lhs: Sequence[MatrixClass]) -> MatrixClass | None:
    """Mixed-class variant of ``solve_nilpotent`` for k >= 2 classes.

    The solution's stable rank is the f-sum of the left-hand stable ranks
    (it appears as the tail of the assembled sequence), and its nilpotent
    part falls out of the second differences.  A stable-rank sum above n
    always fails the solvability inequality, so it needs no separate error.
    """
    if len(lhs) < 2:
        raise ValueError(f"need at least two left-hand classes: k = {len(lhs)}")
    n = lhs[0].size
    if any(c.size != n for c in lhs):
        raise ValueError("left-hand classes must share one size")
    if n < 2:
        raise ValueError(f"matrix size must be at least 2: n = {n}")
    if any(c.is_zero for c in lhs):
        raise ValueError("zero classes are excluded")
    if len(f.values) < n + 1:
        raise InvalidTable(f"f table must cover 0..{n}")
    ranks = [class_rank(c) for c in lhs]
    r = [sum(f(rk.at(m)) for rk in ranks) for m in range(n + 1)]
    if 2 * r[1] - r[2] > n:
        return None
    values = (n, *r[1:])
    assert is_valid_rank_function(values), values
    out = rank_to_class(RankFunction(values))
    assert out.q == sum(f(c.q) for c in lhs)
    return out


def structure_check_identity(sol: SolutionTuple) -> bool:
    """Structural shape forced on plain-sum (f = g = id) solutions: B's
    nontrivial blocks are the multiset union of the left-hand nontrivial
    blocks, and B's stable rank is the sum of the left-hand ones."""
    pooled = sorted((k for c in sol.lhs for k in nontrivial_blocks(c.nilp)), reverse=True)
    return (
        list(nontrivial_blocks(sol.rhs.nilp)) == pooled
        and sol.rhs.q == sum(c.q for c in sol.lhs)
    )


def _search_block(args: tuple) -> list[tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]]:
    """Exhaust lhs tuples whose first coordinate lies in a chunk; returns raw
    part tuples so results pickle cheaply across workers."""
    spec, first_chunk, cand = args
    points = list(spec.points())
    fvec = {
        p: tuple(spec.f(partition_to_rank(p).at(m)) for m in points)
        for p in cand
    }
    rhs_index: dict[tuple[int, ...], list[Partition]] = {}
    for b in cand:
        vec = tuple(spec.g(partition_to_rank(b).at(m)) for m in points)
        rhs_index.setdefault(vec, []).append(b)
    out = []
    for first in first_chunk:
        for rest in product(cand, repeat=spec.k - 1):
            combo = (first,) + rest
            total = tuple(sum(col) for col in zip(*(fvec[p] for p in combo)))
            for b in rhs_index.get(total, ()):
                out.append((tuple(p.parts for p in combo), b.parts))
    return out


def search_general(spec: EquationSpec, budget: int = 10**6, workers: int = 1) -> list[SolutionTuple]:
    """All nontrivial nilpotent tuples satisfying the equation, by exhaustion.

    The candidate space has p(n)^(k+1) tuples and must fit inside the
    budget; exceeding it raises rather than truncating.  Output order is
    lexicographic on the concatenated partitions, independent of the worker
    count.
    """
    count = partition_count(spec.n)
    total = count ** (spec.k + 1)
    if total > budget:
        raise BudgetExceeded(
            f"p({spec.n})^{spec.k + 1} = {total} candidate tuples exceed budget {budget}")
    cand = [p for p in partitions_of(spec.n) if nontrivial_blocks(p)]
    if workers > 1 and len(cand) > 1:
        chunks = [cand[i::workers] for i in range(workers)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            blocks = list(pool.map(_search_block, [(spec, c, cand) for c in chunks]))
        raw = [item for block in blocks for item in block]
    else:
        raw = _search_block((spec, cand, cand))
    raw.sort()
    return [
        SolutionTuple.from_partitions([Partition(p) for p in lhs_parts], Partition(rhs_parts))
        for lhs_parts, rhs_parts in raw
    ]
