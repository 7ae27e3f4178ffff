"""Rank matrices and the geometry of plain-sum solution sets.

Stacking the rank functions of a solution tuple row by row gives its rank
matrix; the entrywise order on these matrices controls degeneration.  The
maximal matrices of a solution set correspond one to one with the
irreducible components of its closure: each component's dimension is the
sum of the orbit dimensions of its rows, and its linear capacity is half
that.  A dominating tuple bounds every solution from above coordinate by
coordinate and yields a cheap capacity upper bound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    MatrixClass,
    Partition,
    RankFunction,
    class_rank,
    conjugate,
    dominates,
    nontrivial_blocks,
    partition_count,
    partition_to_rank,
    partitions_of,
    rank_to_partition,
)
from .equations import (
    BudgetExceeded,
    ConvexTable,
    InvalidTable,
    SolutionTuple,
    solve_nilpotent,
)

__all__ = [
    "RankMatrix",
    "SolSet",
    "Component",
    "DominatingTuple",
    "rank_matrix",
    "rm_leq",
    "in_product_closure",
    "same_orbit_tuple",
    "enumerate_sol",
    "maximal_elements",
    "irreducible_components",
    "is_irreducible",
    "orbit_dimension",
    "component_dimension",
    "orbit_capacity",
    "sol_capacity",
    "dominating_tuple",
    "hasse_dot",
]

HASSE_MAX_N = 20


@dataclass(frozen=True)
class RankMatrix:
    """Rows are the rank functions of a tuple's classes, all of one size."""

    rows: tuple[RankFunction, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        if not rows:
            raise ValueError("a rank matrix needs at least one row")
        if len({r.n for r in rows}) != 1:
            raise ValueError("rows must share one size")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return self.rows[0].n

    def to_json(self) -> list[list[int]]:
        return [list(r.values) for r in self.rows]


def rank_matrix(sol: SolutionTuple) -> RankMatrix:
    """Stack a nilpotent tuple's rank functions, left-hand rows first."""
    if any(not c.is_nilpotent for c in (*sol.lhs, sol.rhs)):
        raise ValueError("rank matrices are built from all-nilpotent tuples")
    return RankMatrix(tuple(class_rank(c) for c in (*sol.lhs, sol.rhs)))


def rm_leq(a: RankMatrix, b: RankMatrix) -> bool:
    """Entrywise order: a's tuple degenerates into b's closure."""
    if len(a.rows) != len(b.rows) or a.n != b.n:
        raise ValueError("rank matrices must have matching shape")
    return all(dominates(x, y) for x, y in zip(a.rows, b.rows))


def in_product_closure(lhs: Sequence[Partition], rhs: Sequence[Partition]) -> bool:
    """Does the product orbit of lhs lie in the product-orbit closure of rhs?
    Equivalent to coordinatewise dominance of rank functions."""
    if len(lhs) != len(rhs):
        raise ValueError(f"coordinate count mismatch: {len(lhs)} vs {len(rhs)}")
    return all(
        dominates(partition_to_rank(a), partition_to_rank(b))
        for a, b in zip(lhs, rhs)
    )


def same_orbit_tuple(a: Sequence[Partition], b: Sequence[Partition]) -> bool:
    """Conjugate coordinate by coordinate, i.e. literally the same partitions."""
    return [p.parts for p in a] == [p.parts for p in b]


@dataclass(frozen=True)
class SolSet:
    """All nontrivial nilpotent solutions for one (n, k, f), with their
    deduplicated rank matrices."""

    n: int
    k: int
    f: ConvexTable
    tuples: tuple[SolutionTuple, ...]
    rank_matrices: tuple[RankMatrix, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "f": self.f.to_json(),
            "tuples": [t.to_json() for t in self.tuples],
            "rank_matrices": [rm.to_json() for rm in self.rank_matrices],
        }


def _solve_block(args: tuple) -> list[tuple[tuple[Partition, ...], Partition]]:
    f, chunk = args
    out = []
    for lhs in chunk:
        rhs = solve_nilpotent(f, lhs)
        assert rhs is not None  # chunks only ever hold feasible tuples
        out.append((lhs, rhs))
    return out


def enumerate_sol(n: int, k: int, f: ConvexTable, budget: int = 10**6, workers: int = 1) -> SolSet:
    """Enumerate every nontrivial nilpotent solution of the plain-sum
    equation with left-hand table f.

    Solvability is additive across coordinates: the tuple works iff the
    per-partition costs 2 f(r(1)) - f(r(2)) sum to at most n.  That lets
    the k-fold product be walked with pruning instead of in full; the
    budget caps the number of visited states.
    """
    if n < 2:
        raise ValueError(f"matrix size must be at least 2: n = {n}")
    if k < 1:
        raise ValueError(f"need at least one left-hand coordinate: k = {k}")
    if len(f.values) < n + 1:
        raise InvalidTable(f"f table must cover 0..{n}")
    cand = [p for p in partitions_of(n) if nontrivial_blocks(p)]
    costs = []
    for p in cand:
        r = partition_to_rank(p)
        costs.append(2 * f(r.at(1)) - f(r.at(2)))
    min_cost = min(costs)
    feasible: list[tuple[Partition, ...]] = []
    visited = 0

    def grow(prefix: tuple[Partition, ...], spent: int) -> None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"enumeration visited more than {budget} states")
        if len(prefix) == k:
            feasible.append(prefix)
            return
        slack = n - spent - (k - len(prefix) - 1) * min_cost
        for p, c in zip(cand, costs):
            if c <= slack:
                grow(prefix + (p,), spent + c)

    grow((), 0)

    if workers > 1 and len(feasible) > 1:
        chunks = [feasible[i::workers] for i in range(workers)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            blocks = list(pool.map(_solve_block, [(f, c) for c in chunks]))
        pairs = [item for block in blocks for item in block]
    else:
        pairs = _solve_block((f, feasible))

    sols = [SolutionTuple.from_partitions(lhs, rhs) for lhs, rhs in pairs]
    sols.sort(key=lambda s: tuple(c.nilp.parts for c in s.lhs) + (s.rhs.nilp.parts,))
    matrices: list[RankMatrix] = []
    seen: set[RankMatrix] = set()
    for s in sols:
        rm = rank_matrix(s)
        if rm not in seen:
            seen.add(rm)
            matrices.append(rm)
    return SolSet(n=n, k=k, f=f, tuples=tuple(sols), rank_matrices=tuple(matrices))


def maximal_elements(s: SolSet) -> list[RankMatrix]:
    """Rank matrices not strictly below any other one in the set."""
    rms = s.rank_matrices
    return [
        a for a in rms
        if not any(b != a and rm_leq(a, b) for b in rms)
    ]


@dataclass(frozen=True)
class Component:
    """Irreducible component of a solution-set closure, named by its maximal
    rank matrix."""

    max_rm: RankMatrix
    dimension: int
    capacity: Fraction

    def to_json(self) -> dict:
        return {
            "max_rm": self.max_rm.to_json(),
            "dimension": self.dimension,
            "capacity": str(self.capacity),
        }


def is_irreducible(s: SolSet) -> bool:
    """A closure is irreducible iff some solution dominates all others."""
    return any(
        all(rm_leq(b, a) for b in s.rank_matrices)
        for a in s.rank_matrices
    )


def irreducible_components(s: SolSet) -> list[Component]:
    """One component per maximal rank matrix, with dimension and capacity."""
    comps = []
    for rm in maximal_elements(s):
        dim = component_dimension(rm)
        comps.append(Component(max_rm=rm, dimension=dim, capacity=Fraction(dim, 2)))
    # single component and existence of a greatest element are the same thing;
    # the latter is computed independently above, so cross-check here
    assert (len(comps) == 1) == is_irreducible(s)
    return comps


def orbit_dimension(p: Partition) -> int:
    """Dimension of the conjugation orbit of a nilpotent class: n^2 minus the
    sum of squared rank drops, equivalently n^2 minus the squared conjugate
    parts (both computed, kept in agreement)."""
    n = p.n
    r = partition_to_rank(p).values
    by_drops = n * n - sum((r[j] - r[j + 1]) ** 2 for j in range(n))
    by_conj = n * n - sum(c * c for c in conjugate(p).parts)
    assert by_drops == by_conj
    return by_drops


def component_dimension(rm: RankMatrix) -> int:
    """Sum of orbit dimensions over the rows (a product of orbit closures)."""
    return sum(orbit_dimension(rank_to_partition(row)) for row in rm.rows)


def orbit_capacity(p: Partition) -> Fraction:
    """Largest dimension of a linear subspace inside the orbit closure of a
    nilpotent class: exactly half the orbit dimension."""
    return Fraction(orbit_dimension(p), 2)


def sol_capacity(s: SolSet):
    """Largest linear subspace dimension inside the solution-set closure:
    the best component capacity, or -inf for an empty set."""
    comps = irreducible_components(s)
    if not comps:
        return float("-inf")
    return max(c.capacity for c in comps)


@dataclass(frozen=True)
class DominatingTuple:
    """Least coordinatewise upper bound of a solution set's rank matrices."""

    partitions: tuple[Partition, ...]
    is_full_block: tuple[bool, ...]

    def capacity_upper_bound(self) -> Fraction:
        """Half the summed orbit dimensions; caps the solution-set capacity."""
        return Fraction(sum(orbit_dimension(p) for p in self.partitions), 2)

    def to_json(self) -> dict:
        return {
            "partitions": [list(p.parts) for p in self.partitions],
            "full_block": list(self.is_full_block),
            "capacity_upper_bound": str(self.capacity_upper_bound()),
        }


def dominating_tuple(s: SolSet) -> DominatingTuple:
    """Pointwise maximum of the rank functions at each coordinate.  The max
    of valid rank functions is again one, so each coordinate names a
    partition; a flag records whether it is the full single-block one."""
    if not s.tuples:
        raise ValueError("empty solution set has no dominating tuple")
    parts, flags = [], []
    for i in range(s.k + 1):
        rows = [rm.rows[i].values for rm in s.rank_matrices]
        lub = RankFunction(tuple(max(col) for col in zip(*rows)))
        p = rank_to_partition(lub)
        parts.append(p)
        flags.append(p.parts == (s.n,))
    return DominatingTuple(partitions=tuple(parts), is_full_block=tuple(flags))


def hasse_dot(n: int) -> str:
    """DOT digraph of the dominance order on partitions of n, reduced to its
    covering edges; an edge a -> b means b covers a (draw with rankdir=BT).
    """
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    if n > HASSE_MAX_N:
        raise BudgetExceeded(
            f"p({n}) = {partition_count(n)} nodes exceed the n <= {HASSE_MAX_N} cap")
    parts = list(partitions_of(n))
    ranks = [partition_to_rank(p).values for p in parts]
    m = len(parts)
    up = []
    for i in range(m):
        mask = 0
        for j in range(m):
            if i != j and all(x <= y for x, y in zip(ranks[i], ranks[j])):
                mask |= 1 << j
        up.append(mask)
    lines = [f"digraph dominance_{n} {{", "  rankdir=BT;"]
    for p in parts:
        lines.append(f'  "{p}";')
    for i in range(m):
        two_step = 0
        rest = up[i]
        j = 0
        while rest:
            if rest & 1:
                two_step |= up[j]
            rest >>= 1
            j += 1
        covers = up[i] & ~two_step
        j = 0
        while covers:
            if covers & 1:
                lines.append(f'  "{parts[i]}" -> "{parts[j]}";')
            covers >>= 1
            j += 1
    lines.append("}")
    return "\n".join(lines) + "\n"
