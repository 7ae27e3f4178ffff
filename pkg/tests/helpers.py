"""Brute-force oracles shared by several test modules.

These deliberately avoid the code paths they are used to check: the
realizability set goes through explicit class enumeration, the partition
counter uses the restricted-parts recursion, and the rank routine is a
plain Fraction elimination with no fraction-free tricks.
"""

from fractions import Fraction
from functools import lru_cache

from rankfn import MatrixClass, class_rank, partitions_of


@lru_cache(maxsize=None)
def realizable_sequences(n):
    """Every stored rank sequence that some class of size n produces."""
    out = set()
    for q in range(n + 1):
        for p in partitions_of(n - q):
            out.add(class_rank(MatrixClass(p, q)).values)
    return out


@lru_cache(maxsize=None)
def count_partitions(n, max_part=None):
    """Independent partition counter (recursion on the largest part)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    return sum(count_partitions(n - first, first)
               for first in range(1, min(max_part, n) + 1))


def frac_rank(rows):
    """Textbook Gauss-Jordan rank over Fractions."""
    rows = [[Fraction(x) for x in row] for row in rows]
    if not rows:
        return 0
    rank = 0
    for col in range(len(rows[0])):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def decreasing_windows(n):
    """All sequences (n, v_1, ..., v_n) with n >= v_1 >= ... >= v_n >= 0.

    Superset of the valid stored rank sequences for size n; useful for
    exhaustive validity-versus-realizability comparisons.
    """
    def rec(prefix, last, remaining):
        if remaining == 0:
            yield tuple(prefix)
            return
        for v in range(last, -1, -1):
            yield from rec(prefix + [v], v, remaining - 1)

    yield from rec([n], n, n)
