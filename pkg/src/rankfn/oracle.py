"""Exact matrix engine over the rationals.

Builds literal block matrices for a class, conjugates them by random
integer matrices, and recomputes rank functions by fraction-free
elimination.  Whatever the combinatorial layer claims about ranks can be
replayed here on actual matrices, with no floating point anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .core import MatrixClass, Partition, class_rank, partitions_of

__all__ = [
    "DEFAULT_SEED",
    "ExactMatrix",
    "jordan_matrix",
    "exact_rank",
    "matrix_rank_function",
    "random_conjugate",
    "direct_sum",
    "verify_class_ranks",
]

DEFAULT_SEED = 0
_ENTRY_RANGE = 3  # random integer entries are drawn from -3..3


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix with Fraction entries."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(e) for e in row) for row in self.entries)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"entries must form an {self.n} x {self.n} matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        rows = tuple(tuple(row) for row in rows)
        return cls(len(rows), rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n))
            for i in range(n)))

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[str(e) for e in row] for row in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> "ExactMatrix":
        return cls(int(obj["n"]), tuple(
            tuple(Fraction(s) for s in row) for row in obj["entries"]))


def _int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix, by one-step fraction-free elimination."""
    m = [row[:] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank, prev = 0, 1
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nr):
            row = m[i]
            factor = row[col]
            for j in range(col + 1, nc):
                row[j] = (pivot * row[j] - factor * m[rank][j]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
        if rank == nr:
            break
    return rank


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _frac_matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _frac_inverse(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _random_invertible(rng: random.Random, n: int) -> list[list[int]]:
    while True:
        m = [[rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(n)] for _ in range(n)]
        if _int_rank(m) == n:
            return m


def jordan_matrix(p: Partition, q: int = 0, seed: int = DEFAULT_SEED) -> ExactMatrix:
    """Block matrix for the class (p, q): one upper shift block per part,
    then a seeded random invertible q x q integer block (entries -3..3,
    resampled until nonsingular)."""
    n = p.n + q
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for k in p.parts:
        for i in range(k - 1):
            rows[offset + i][offset + i + 1] = 1
        offset += k
    if q:
        block = _random_invertible(random.Random(seed), q)
        for i in range(q):
            for j in range(q):
                rows[offset + i][offset + j] = block[i][j]
    return ExactMatrix.from_rows(
        [tuple(Fraction(v) for v in row) for row in rows])


def exact_rank(m: ExactMatrix) -> int:
    """Rank over the rationals (denominators cleared row by row first)."""
    if m.n == 0:
        return 0
    rows = []
    for row in m.entries:
        d = lcm(*(e.denominator for e in row))
        rows.append([int(e * d) for e in row])
    return _int_rank(rows)


def matrix_rank_function(m: ExactMatrix) -> list[int]:
    """(rk(M^0), ..., rk(M^n)), each rank computed on the literal power.

    A global scalar does not change ranks, so the matrix is cleared to an
    integer one once and powered there.
    """
    n = m.n
    denom = 1
    for row in m.entries:
        for e in row:
            denom = lcm(denom, e.denominator)
    base = [[int(e * denom) for e in row] for row in m.entries]
    ranks = [n]
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(n):
        power = _int_matmul(power, base)
        if any(any(row) for row in power):
            ranks.append(_int_rank(power))
        else:
            ranks.append(0)  # the zero matrix stays zero
    return ranks


def random_conjugate(m: ExactMatrix, seed: int = DEFAULT_SEED) -> ExactMatrix:
    """U^-1 M U for a seeded random integer U with nonzero determinant."""
    if m.n == 0:
        return m
    u = _random_invertible(random.Random(seed), m.n)
    u_frac = [[Fraction(v) for v in row] for row in u]
    u_inv = _frac_inverse(u_frac)
    product = _frac_matmul(_frac_matmul(u_inv, [list(r) for r in m.entries]), u_frac)
    return ExactMatrix.from_rows(tuple(tuple(row) for row in product))


def direct_sum(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Block-diagonal stack of two matrices."""
    zero = Fraction(0)
    rows = [tuple(row) + (zero,) * b.n for row in a.entries]
    rows += [(zero,) * a.n + tuple(row) for row in b.entries]
    return ExactMatrix(a.n + b.n, tuple(rows))


def verify_class_ranks(max_n: int, q_max: int = 2, seeds: int = 0,
                       seed: int = DEFAULT_SEED) -> dict:
    """Cross-check matrix rank functions against combinatorial ones.

    Covers every partition of every size up to max_n paired with each
    stable rank up to q_max; when ``seeds`` is positive, each case is also
    rechecked under that many random conjugations.  Returns a summary dict
    with the case/check/discrepancy counts and the base seed for replay.
    """
    cases = checks = bad = 0
    for n in range(1, max_n + 1):
        for p in partitions_of(n):
            for q in range(q_max + 1):
                cases += 1
                want = list(class_rank(MatrixClass(p, q)).values)
                mat = jordan_matrix(p, q, seed=seed + 97 * cases)
                checks += 1
                if matrix_rank_function(mat) != want:
                    bad += 1
                for s in range(seeds):
                    conj = random_conjugate(mat, seed=seed + 1009 * cases + s)
                    checks += 1
                    if matrix_rank_function(conj) != want:
                        bad += 1
    return {
        "max_n": max_n,
        "q_max": q_max,
        "seeds": seeds,
        "seed": seed,
        "cases": cases,
        "checks": checks,
        "discrepancies": bad,
        "ok": bad == 0,
    }
