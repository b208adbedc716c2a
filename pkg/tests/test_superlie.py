import pytest

from superext.scalars import ONE, GaussianRational
from superext.linalg import Subspace
from superext.superlie import (LieSuperalgebra, ValidationError,
                               GuardExceeded, build_gl, build_sl,
                               build_osp, build_p, build_q,
                               build_classical, root_data, direct_sum,
                               subalgebra_on_indices, quotient_by_indices,
                               bracket_span, rebase, smith_normal_form,
                               hermite_basis, lattice_class,
                               lattice_quotient_divisors)


def test_validation_catches_bad_jacobi():
    bad = LieSuperalgebra([0, 0, 0], {(0, 1): {0: ONE}, (0, 2): {1: ONE}})
    with pytest.raises(ValidationError):
        bad.validate()


def test_validation_catches_parity_violation():
    bad = LieSuperalgebra([0, 1], {(0, 0): {1: ONE}})
    with pytest.raises(ValidationError):
        bad.validate()


def test_guard_limit():
    with pytest.raises(GuardExceeded):
        build_gl(20, 20)


def test_classical_families_validate_with_expected_superdimensions():
    cases = [
        (build_gl(2, 1), (5, 4)),
        (build_sl(2, 1), (4, 4)),
        (build_osp(1), (3, 2)),
        (build_osp(2), (10, 4)),
        (build_p(2), (8, 9)),
        (build_q(2), (4, 4)),
    ]
    for alg, sd in cases:
        alg.validate()
        assert alg.superdimension() == sd


def test_sl_nn_is_rejected():
    with pytest.raises(ValidationError):
        build_sl(2, 2)


def test_build_classical_dispatch():
    assert build_classical("osp", n=1).superdimension() == (3, 2)
    assert build_classical("gl", 1, 1).superdimension() == (2, 2)
    with pytest.raises(ValidationError):
        build_classical("nosuch")


def test_osp_weights_and_roots():
    g = build_osp(1)
    pos = sorted(tuple(int(w.re) for w in g.weights[k]) for k in g.nilpos)
    assert pos == [(1,), (2,)]
    rd = root_data(g)
    assert len(rd.positive) == 2
    g2 = build_osp(2)
    pos2 = sorted(tuple(int(w.re) for w in g2.weights[k])
                  for k in g2.nilpos)
    # the positive system of B(0,2): eps2, 2eps2, eps1-eps2, eps1,
    # eps1+eps2, 2eps1 in Cartan coordinates
    assert pos2 == [(0, 1), (0, 2), (1, -1), (1, 0), (1, 1), (2, 0)]


def test_ad_matrices_respect_bracket():
    g = build_gl(1, 1)
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = g.ad_matrix(i).matvec({j: ONE})
            assert lhs == g.bracket_basis(i, j)


def test_direct_sum_and_quotient():
    g = build_osp(1)
    s = direct_sum(g, g)
    s.validate()
    assert s.dim == 2 * g.dim
    # summands never bracket across
    left = Subspace(s.dim, [{k: ONE} for k in range(g.dim)])
    right = Subspace(s.dim, [{k: ONE} for k in range(g.dim, s.dim)])
    assert bracket_span(s, left, right).dim == 0
    q, keep = quotient_by_indices(s, list(range(g.dim)))
    q.validate()
    assert q.dim == g.dim


def test_subalgebra_extraction():
    g = build_osp(1)
    ev = subalgebra_on_indices(g, g.even_indices())
    ev.validate()
    assert ev.superdimension() == (3, 0)   # sl(2) inside osp(1|2)


def test_rebase_preserves_structure():
    g = build_osp(1)
    vecs = [{k: ONE} for k in range(g.dim)]
    e1, e2 = g.even_indices()[:2]
    vecs[e1] = {e1: ONE, e2: GaussianRational(2)}
    h = rebase(g, vecs)
    h.validate()
    assert h.superdimension() == g.superdimension()


def test_json_round_trip(tmp_path):
    g = build_p(2)
    path = tmp_path / "p2.json"
    g.save(str(path))
    h = LieSuperalgebra.load(str(path))
    h.validate()
    assert h.parity == g.parity
    assert h._table == g._table
    assert h.cartan == g.cartan


def test_smith_normal_form_and_lattice_class():
    divisors, _ = smith_normal_form([[2, 0], [0, 3]])
    assert divisors == [1, 6]
    basis = hermite_basis([[1, 0], [0, 1]])
    # index-2 sublattice: classes distinguish parity of the coordinate sum
    divs = lattice_quotient_divisors(basis, [[1, 1], [1, -1]])
    assert [d for d in divs if d != 1] == [2]
    c0 = lattice_class(basis, [[1, 1], [1, -1]], [0, 0])
    c1 = lattice_class(basis, [[1, 1], [1, -1]], [1, 0])
    c2 = lattice_class(basis, [[1, 1], [1, -1]], [1, 1])
    assert c0 != c1 and c0 == c2


def test_weight_lattice_quotients_of_classical_algebras():
    # sl(2): weight lattice / root lattice = Z/2; osp(1|2): trivial
    sl2 = build_sl(2, 0)
    rd = root_data(sl2)
    assert [d for d in rd.divisors if d != 1] == [2]
    assert rd.quotient_order() == 2
    g = build_osp(1)
    rdo = root_data(g)
    assert rdo.quotient_order() == 1
