import random

from superext.scalars import GaussianRational, ONE, as_scalar
from superext.linalg import (ExactMatrix, Echelon, Subspace, rank, rref,
                             kernel_basis, solve, solve_matrix, vec_equal)


def _dense(rows):
    return ExactMatrix.from_dense([[as_scalar(x) for x in r] for r in rows])


def test_matrix_algebra():
    a = _dense([[1, 2], [3, 4]])
    b = _dense([[0, 1], [1, 0]])
    assert a.matmul(b) == _dense([[2, 1], [4, 3]])
    assert a.add(a, -1).is_zero()
    assert a.transpose().transpose() == a
    assert a.matvec({0: ONE}) == {0: as_scalar(1), 1: as_scalar(3)}


def test_rank_and_kernel():
    m = _dense([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == 2
    for k in kernel_basis(m):
        assert not m.matvec(k)
    assert len(kernel_basis(m)) == 1


def test_solve_returns_actual_solution():
    m = _dense([[2, 1], [1, 1]])
    rhs = {0: as_scalar(3), 1: as_scalar(2)}
    x = solve(m, rhs)
    assert vec_equal(m.matvec(x), rhs)
    assert solve(_dense([[1, 0], [1, 0]]), {0: ONE, 1: as_scalar(2)}) is None


def test_solve_matrix_inverts():
    m = _dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    cols = solve_matrix(m, [{k: ONE} for k in range(3)])
    inv = ExactMatrix(3, 3)
    for j, c in enumerate(cols):
        for r, v in c.items():
            inv.rows[r][j] = v
    assert m.matmul(inv) == ExactMatrix.identity(3)


def test_rref_pivots_are_unit():
    m = _dense([[2, 4], [1, 3]])
    rk, pivots, rows = rref(m)
    assert rk == 2 and pivots == [0, 1]
    for p, row in zip(pivots, rows):
        assert row[p] == ONE


def test_echelon_residue_and_membership():
    e = Echelon()
    e.insert({0: ONE, 1: ONE})
    e.insert({1: ONE, 2: ONE})
    assert not e.reduce_vector({0: ONE, 2: -ONE,
                                1: as_scalar(2) - as_scalar(2)})
    assert e.reduce_vector({2: ONE})


def test_subspace_operations():
    s1 = Subspace(4, [{0: ONE}, {1: ONE}])
    s2 = Subspace(4, [{1: ONE}, {2: ONE}])
    assert s1.dim == 2
    assert s1.sum(s2).dim == 3
    inter = s1.intersect(s2)
    assert inter.dim == 1
    assert inter.contains({1: ONE})
    v = {0: as_scalar(2), 1: as_scalar(-3)}
    coords = s1.coordinates_of(v)
    rebuilt = {}
    for j, b in enumerate(s1.basis()):
        for r, c in b.items():
            rebuilt[r] = rebuilt.get(r, as_scalar(0)) + \
                coords.get(j, as_scalar(0)) * c
    assert vec_equal({k: c for k, c in rebuilt.items() if c}, v)


def test_randomized_rank_consistency_with_dense_reference():
    rng = random.Random(7)
    for _ in range(20):
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
        m = _dense(rows)
        # reference rank via sympy
        import sympy
        assert rank(m) == sympy.Matrix(rows).rank()
