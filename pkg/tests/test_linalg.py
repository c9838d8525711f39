import random
from fractions import Fraction

import pytest

from inframono.linalg import (
    SingularMatrixError,
    invert,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
)


def F(x, y=1):
    return Fraction(x, y)


def random_matrix(rng, rows, cols, span=5):
    return [[F(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]


class TestRref:
    def test_identity_fixed_point(self):
        eye = [[F(int(i == j)) for j in range(3)] for i in range(3)]
        reduced, pivots = rref(eye)
        assert reduced == eye and pivots == [0, 1, 2]

    def test_known_rank_deficient(self):
        mat = [[F(1), F(2)], [F(2), F(4)]]
        _, pivots = rref(mat)
        assert pivots == [0]
        assert rank(mat) == 1

    def test_input_not_mutated(self):
        mat = [[F(2), F(1)], [F(1), F(1)]]
        snapshot = [row[:] for row in mat]
        rref(mat)
        assert mat == snapshot


class TestSolveInvert:
    def test_hand_example(self):
        mat = [[F(2), F(1)], [F(1), F(3)]]
        assert solve(mat, [F(5), F(10)]) == [F(1), F(3)]

    def test_random_round_trip(self):
        rng = random.Random(1)
        solved = 0
        while solved < 25:
            n = rng.randint(1, 6)
            mat = random_matrix(rng, n, n)
            x = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
            rhs = mat_vec(mat, x)
            try:
                got = solve(mat, rhs)
            except SingularMatrixError:
                continue
            assert mat_vec(mat, got) == rhs
            solved += 1

    def test_invert_round_trip(self):
        rng = random.Random(2)
        done = 0
        while done < 15:
            n = rng.randint(1, 5)
            mat = random_matrix(rng, n, n)
            try:
                inv = invert(mat)
            except SingularMatrixError:
                continue
            eye = [[F(int(i == j)) for j in range(n)] for i in range(n)]
            product = [mat_vec(inv, [mat[r][c] for r in range(n)]) for c in range(n)]
            # product columns of inv*mat
            assert [[product[c][r] for c in range(n)] for r in range(n)] == eye
            done += 1

    def test_singular_detection(self):
        with pytest.raises(SingularMatrixError):
            solve([[F(1), F(2)], [F(2), F(4)]], [F(1), F(1)])
        with pytest.raises(SingularMatrixError):
            invert([[F(0)]])

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            solve([[F(1), F(2)]], [F(1)])


class TestNullspace:
    def test_hand_example(self):
        mat = [[F(1), F(2), F(3)]]
        basis = nullspace(mat)
        assert len(basis) == 2
        for vec in basis:
            assert mat_vec(mat, vec) == [F(0)]

    def test_random_kernel_membership_and_count(self):
        rng = random.Random(3)
        for _ in range(25):
            rows, cols = rng.randint(1, 5), rng.randint(1, 6)
            mat = random_matrix(rng, rows, cols)
            basis = nullspace(mat)
            assert len(basis) == cols - rank(mat)
            for vec in basis:
                assert all(v == 0 for v in mat_vec(mat, vec))

    def test_full_rank_square_has_trivial_kernel(self):
        mat = [[F(2), F(0)], [F(0), F(3)]]
        assert nullspace(mat) == []
