"""Modules: irreducibles of osp(1|2), tensor products and their exact
decomposition, hom spaces, odd involutions, and the product of
queer-type irreducibles with its kappa statistic."""

from superext.superlie import build_osp, build_q
from superext.reps import (defining_rep, tensor_rep, decompose,
                           module_homs, module_weights, super_commutant,
                           irreducible_product, kappa_of, osp12_irrep)

g = build_osp(1)

print("== osp(1|2) irreducibles ==")
for lam in range(4):
    V = osp12_irrep(g, lam)
    V.validate()
    wts = sorted(int(w[0].re) for w in module_weights(V)) if lam else [0]
    print("V(%d): dim %d, weights %s" % (lam, V.dim, wts))

print()
print("== Clebsch-Gordan by exact decomposition ==")
M = tensor_rep(osp12_irrep(g, 1), osp12_irrep(g, 2))
parts = decompose(M)
print("V(1) (x) V(2) = " + " + ".join(
    "dim %d" % p[0].dim for p in sorted(parts, key=lambda p: -p[0].dim)))

print()
print("== Schur behaviour ==")
V2 = osp12_irrep(g, 2)
print("hom(V(2), V(2)): even %d, odd %d"
      % (len(module_homs(V2, V2, 0)), len(module_homs(V2, V2, 1))))

q1 = build_q(1)
D = defining_rep(q1)
ev, od = super_commutant(D)
print("q(1) defining module commutant: even %d, odd %d (queer type)"
      % (len(ev), len(od)))

print()
print("== product of queer-type irreducibles ==")
V, basis, T = irreducible_product(D, D)
print("dim(V1 (x) V2) = %d, dim(V1 *hat* V2) = %d" % (T.dim, V.dim))
print("kappa(q(1) defining, q(1) defining) =", kappa_of([D, D]))
print("kappa(V(1), V(2)) over osp(1|2)     =",
      kappa_of([osp12_irrep(g, 1), osp12_irrep(g, 2)]))
