"""The matrix engine, checked against literal matrices and a second rank routine."""

import random
from fractions import Fraction

import pytest

from rankfn import (
    ConvexTable,
    ExactMatrix,
    MatrixClass,
    Partition,
    class_rank,
    direct_sum,
    enumerate_sol,
    exact_rank,
    jordan_matrix,
    matrix_rank_function,
    partitions_of,
    random_conjugate,
    verify_class_ranks,
)

from helpers import frac_rank

F = Fraction


def test_jordan_matrix_literal_entries():
    m = jordan_matrix(Partition((2, 1)))
    assert m.entries == (
        (F(0), F(1), F(0)),
        (F(0), F(0), F(0)),
        (F(0), F(0), F(0)),
    )
    m2 = jordan_matrix(Partition((3,)))
    assert [[int(e) for e in row] for row in m2.entries] == [
        [0, 1, 0], [0, 0, 1], [0, 0, 0]]


def test_jordan_matrix_nilpotency_and_stable_block():
    for p in [Partition((3, 2)), Partition((4, 1, 1)), Partition((2, 2, 2))]:
        ranks = matrix_rank_function(jordan_matrix(p))
        assert ranks[-1] == 0
        assert ranks == list(class_rank(MatrixClass(p, 0)).values)
    withq = jordan_matrix(Partition((2, 1)), q=2, seed=5)
    assert matrix_rank_function(withq)[-1] == 2


def test_jordan_matrix_seeded_reproducibility():
    a = jordan_matrix(Partition((3, 1)), q=2, seed=11)
    b = jordan_matrix(Partition((3, 1)), q=2, seed=11)
    c = jordan_matrix(Partition((3, 1)), q=2, seed=12)
    assert a == b
    assert a != c


def test_exact_rank_literal_examples():
    assert exact_rank(ExactMatrix.identity(4)) == 4
    assert exact_rank(ExactMatrix.from_rows([
        (F(1), F(2)), (F(2), F(4))])) == 1
    assert exact_rank(ExactMatrix.from_rows([
        (F(1, 2), F(1, 3)), (F(1, 5), F(1, 7))])) == 2
    assert exact_rank(ExactMatrix.from_rows([
        (F(1, 2), F(1, 4)), (F(2), F(1))])) == 1
    assert exact_rank(ExactMatrix.from_rows([(F(0), F(0)), (F(0), F(0))])) == 0


def test_int_rank_agrees_with_gauss_jordan():
    rng = random.Random(2024)
    for _ in range(50):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        m = ExactMatrix.from_rows([[F(v) for v in row] for row in rows])
        assert exact_rank(m) == frac_rank(rows)


def test_matrix_rank_function_matches_class_rank():
    for n in range(1, 6):
        for p in partitions_of(n):
            for q in range(3):
                want = list(class_rank(MatrixClass(p, q)).values)
                got = matrix_rank_function(jordan_matrix(p, q, seed=3 * n + q))
                assert got == want, (p, q)


def test_rank_function_invariant_under_conjugation():
    cases = [
        (Partition((3, 1)), 0),
        (Partition((2, 2)), 1),
        (Partition((4,)), 2),
        (Partition((2, 1, 1)), 0),
    ]
    for p, q in cases:
        base = jordan_matrix(p, q, seed=7)
        want = list(class_rank(MatrixClass(p, q)).values)
        for s in range(10):
            assert matrix_rank_function(random_conjugate(base, seed=s)) == want


def test_conjugation_by_identity_like_seeds_is_still_similar():
    m = jordan_matrix(Partition((2, 2)), q=1, seed=1)
    conj = random_conjugate(m, seed=9)
    assert conj != m or exact_rank(m) == exact_rank(conj)
    assert exact_rank(conj) == exact_rank(m)


def test_direct_sum_rank_additivity():
    a = ExactMatrix.from_rows([(F(1), F(2)), (F(2), F(4))])
    b = ExactMatrix.identity(3)
    s = direct_sum(a, b)
    assert s.n == 5
    assert exact_rank(s) == exact_rank(a) + exact_rank(b)
    assert s.entries[0][:2] == (F(1), F(2)) and s.entries[2][2:] == (F(1), F(0), F(0))


def test_direct_sum_realizes_sum_of_rank_functions():
    left = jordan_matrix(Partition((2, 1)), q=1, seed=4)
    right = jordan_matrix(Partition((3,)), q=0, seed=4)
    total = direct_sum(left, right)
    la, ra = matrix_rank_function(left), matrix_rank_function(right)
    combined = matrix_rank_function(total)
    for m in range(1, min(len(la), len(ra))):
        assert combined[m] == la[m] + ra[m]


def test_solver_output_replayed_on_matrices():
    """Tuples from the symbolic solver really do satisfy the rank equation
    when everyone is instantiated as a conjugated matrix."""
    for n in (5, 6):
        s = enumerate_sol(n, 2, ConvexTable.identity(n))
        for idx, t in enumerate(s.tuples):
            mats = [random_conjugate(jordan_matrix(c.nilp, c.q, seed=idx), seed=50 + i)
                    for i, c in enumerate(t.lhs)]
            rhs = random_conjugate(jordan_matrix(t.rhs.nilp, t.rhs.q, seed=idx), seed=99)
            lhs_ranks = [matrix_rank_function(m) for m in mats]
            rhs_ranks = matrix_rank_function(rhs)
            for m in range(1, n + 1):
                assert sum(r[m] for r in lhs_ranks) == rhs_ranks[m]


def test_exact_matrix_json_round_trip():
    m = ExactMatrix.from_rows([(F(1, 2), F(-3)), (F(0), F(7, 5))])
    blob = m.to_json()
    assert blob["entries"][0][0] == "1/2" and blob["entries"][1][1] == "7/5"
    assert ExactMatrix.from_json(blob) == m


def test_exact_matrix_shape_validation():
    with pytest.raises(ValueError):
        ExactMatrix(2, ((F(1),),))


def test_verify_class_ranks_summary():
    out = verify_class_ranks(4, q_max=1, seeds=0)
    assert out["cases"] == 22  # (1 + 2 + 3 + 5 partitions) x two stable ranks
    assert out["checks"] == 22
    assert out["discrepancies"] == 0 and out["ok"]
    out2 = verify_class_ranks(3, q_max=0, seeds=2, seed=123)
    assert out2["cases"] == 6
    assert out2["checks"] == 18
    assert out2["ok"] and out2["seed"] == 123
