import pytest

from superext.scalars import GaussianRational, ONE, as_scalar
from superext.superlie import ValidationError
from superext.commalg import (build_multipoint, ideal_from_generators,
                              ideal_product, ideal_power, ideal_support,
                              quotient_algebra, scaling_action,
                              fixed_subalgebra, GroupAction)


def test_monomial_model_truncated_polynomials():
    A = build_multipoint([(0, 3)], basis="monomial")
    A.validate()
    assert A.dim == 3
    t = {1: ONE}
    t2 = A.multiply(t, t)
    assert t2 == {2: ONE}
    assert A.multiply(t2, t) == {}          # t^3 = 0
    assert A.evaluate({0: as_scalar(5), 1: ONE}, 0) == as_scalar(5)


def test_distinct_points_required():
    with pytest.raises(ValidationError):
        build_multipoint([(1, 1), (1, 2)])


def test_block_model_is_isomorphic_to_monomial_model():
    pts = [(0, 2), (1, 2)]
    A = build_multipoint(pts, basis="blocks")
    A.validate()
    mono = build_multipoint(pts, basis="monomial")
    # to_monomial must be an algebra map: check on all basis products
    def convert(vec):
        out = {}
        for k, c in vec.items():
            for deg, coef in enumerate(A.to_monomial[k]):
                if coef:
                    out[deg] = out.get(deg, as_scalar(0)) + c * coef
        return {d: c for d, c in out.items() if c}
    for r in range(A.dim):
        for s in range(A.dim):
            lhs = convert(A.multiply_basis(r, s))
            rhs = mono.multiply(convert({r: ONE}), convert({s: ONE}))
            assert lhs == rhs
    assert convert(A.unit) == {0: ONE}


def test_block_heads_are_idempotents_evaluating_to_kronecker_delta():
    A = build_multipoint([(0, 1), (2, 1), (-1, 2)], basis="blocks")
    heads = A.grading_slots
    assert len(heads) == 3
    for i, h in enumerate(heads):
        e = {h: ONE}
        assert A.multiply(e, e) == e
        for j in range(3):
            expect = ONE if i == j else as_scalar(0)
            assert A.evaluate(e, j) == expect


def test_maximal_ideal_dimensions():
    for basis in ("monomial", "blocks"):
        A = build_multipoint([(0, 2), (1, 2)], basis=basis)
        m0 = A.maximal_ideal(0)
        assert m0.dim == A.dim - 1
        for v in m0.basis():
            assert not A.evaluate(v, 0)


def test_ideal_arithmetic():
    A = build_multipoint([(0, 2), (1, 2)], basis="monomial")
    m0 = A.maximal_ideal(0)
    m1 = A.maximal_ideal(1)
    I = ideal_product(A, m0, m1)      # functions vanishing at both points
    assert I.dim == 2
    sq = ideal_power(A, I, 2)
    assert sq.dim == 0                 # (m0 m1)^2 = 0 here
    gens = ideal_from_generators(A, [{1: ONE}])   # (t) = m_0
    assert gens.dim == 3
    assert gens == m0
    assert ideal_support(A, m0) == [0]


def test_quotient_algebra():
    A = build_multipoint([(0, 2), (1, 2)], basis="monomial")
    Q, proj = quotient_algebra(A, A.maximal_ideal(0))
    Q.validate()
    assert Q.dim == 1
    Q2, _ = quotient_algebra(A, ideal_power(A, A.maximal_ideal(0), 2))
    Q2.validate()
    assert Q2.dim == 2                 # C[t]/t^2 at the fat point


def test_scaling_action_and_fixed_subalgebra():
    C4 = build_multipoint([(1, 1), (-1, 1), (GaussianRational(0, 1), 1),
                           (GaussianRational(0, -1), 1)],
                          basis="monomial")
    for order in (2, 4):
        act = scaling_action(C4, order)
        act.validate(C4)
    fix, emb = fixed_subalgebra(C4, scaling_action(C4, 2))
    fix.validate()
    assert fix.dim == 2                # even polynomials 1, t^2


def test_group_action_validation_rejects_non_automorphism():
    A = build_multipoint([(0, 2)], basis="monomial")
    from superext.linalg import ExactMatrix
    bad = ExactMatrix.from_dense([[ONE, as_scalar(0)],
                                  [ONE, as_scalar(-1)]])
    with pytest.raises(ValidationError):
        GroupAction(2, bad).validate(A)
