import pytest

from superext.scalars import GaussianRational, ONE
from superext.superlie import build_osp, build_q, ValidationError
from superext.commalg import build_multipoint, scaling_action
from superext.mapalg import (tensor_algebra, equivariant_subalgebra,
                             parity_automorphism, slot_index,
                             lie_automorphism_validate, evaluation_hom)


def test_tensor_algebra_structure():
    g = build_osp(1)
    A = build_multipoint([(0, 2)], basis="monomial")
    L = tensor_algebra(g, A)
    L.validate()
    assert L.dim == g.dim * A.dim
    # [x (x) 1, y (x) t] = [x, y] (x) t
    i = slot_index(A.dim, 0, 0)
    j = slot_index(A.dim, 4, 1)        # cartan element of osp(1|2)
    comp = L.bracket_basis(i, j)
    base = g.bracket_basis(0, 4)
    assert comp == {slot_index(A.dim, k, 1): c for k, c in base.items()}
    # t-multiples bracket into t^2 = 0
    for i2 in range(g.dim):
        for j2 in range(g.dim):
            assert L.bracket_basis(slot_index(A.dim, i2, 1),
                                   slot_index(A.dim, j2, 1)) == {}


def test_tensor_algebra_weights_stay_diagonal():
    g = build_osp(1)
    A = build_multipoint([(0, 2), (1, 1)], basis="blocks")
    L = tensor_algebra(g, A)
    assert L.weights is not None
    assert len(L.cartan) == len(g.cartan) * len(A.grading_slots)


def test_parity_automorphism_is_an_automorphism():
    g = build_osp(1)
    lie_automorphism_validate(g, parity_automorphism(g))
    from superext.linalg import ExactMatrix
    with pytest.raises(ValidationError):
        bad = ExactMatrix.identity(g.dim)
        bad.rows[0][0] = GaussianRational(2)
        lie_automorphism_validate(g, bad)


def test_equivariant_subalgebra_of_sign_action():
    g = build_osp(1)
    C4 = build_multipoint([(1, 1), (-1, 1), (GaussianRational(0, 1), 1),
                           (GaussianRational(0, -1), 1)],
                          basis="monomial")
    L = tensor_algebra(g, C4)
    act = scaling_action(C4, 2)
    fixed, emb = equivariant_subalgebra(L, parity_automorphism(g), act)
    fixed.validate()
    # even part of g pairs with even powers of t, odd part with odd powers
    assert fixed.superdimension() == (6, 4)
    assert emb.ncols == fixed.dim and emb.nrows == L.dim


def test_evaluation_hom_kills_the_ideal():
    g = build_osp(1)
    A = build_multipoint([(0, 2), (1, 1)], basis="blocks")
    L = tensor_algebra(g, A)
    hom = evaluation_hom(L, A.maximal_ideal(0))
    hom.validate()
    assert hom.target.dim == g.dim
    # elements supported on m_0 map to zero
    for v in A.maximal_ideal(0).basis():
        x = {}
        for r, c in v.items():
            x[slot_index(A.dim, 0, r)] = c
        assert hom.apply(x) == {}
