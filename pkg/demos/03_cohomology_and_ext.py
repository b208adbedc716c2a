"""Cohomology and Ext: graded dimensions over several algebras, the
vanishing theorems for perfect current algebras, and the Ext^1 identity
for evaluation modules over a fat point."""

from superext.scalars import ONE
from superext.superlie import LieSuperalgebra, build_osp
from superext.commalg import build_multipoint
from superext.mapalg import tensor_algebra
from superext.reps import (trivial_rep, adjoint_rep, evaluation_rep,
                           tensor_rep, module_homs, osp12_irrep)
from superext.cohomology import cohomology_dims, ext_dims

print("== H^1 with trivial coefficients ==")
heis = LieSuperalgebra([0, 1, 1], {(1, 1): {0: 2 * ONE},
                                   (2, 2): {0: 2 * ONE}})
g = build_osp(1)
for label, alg in [("odd Heisenberg (1|2)", heis),
                   ("osp(1|2)", g),
                   ("osp(1|2) (x) C[t]/t^3",
                    tensor_algebra(g, build_multipoint([(0, 3)])))]:
    dims = cohomology_dims(alg, trivial_rep(alg), 1)
    print("%-24s H^1 = %s" % (label, dims))

print()
print("== Ext^1 between evaluation modules over g (x) C[t]/t^2 ==")
A = build_multipoint([(0, 2)], basis="monomial")
L = tensor_algebra(g, A)
print("Ext^1(ev V(a), ev V(b)) vs dim hom_g(g (x) V(a), V(b)):")
adj = adjoint_rep(g)
for a in range(3):
    for b in range(3):
        Va = evaluation_rep(L, 0, osp12_irrep(g, a))
        Vb = evaluation_rep(L, 0, osp12_irrep(g, b))
        e1 = ext_dims(L, Va, Vb, 1)          # dual-route checked inside
        hom = len(module_homs(tensor_rep(adj, osp12_irrep(g, a)),
                              osp12_irrep(g, b), 0))
        print("  a=%d b=%d : Ext^1 even %d odd %d | hom side %d"
              % (a, b, e1["even"], e1["odd"], hom))
