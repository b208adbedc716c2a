"""Build the classical families and a truncated current algebra, and look
at their structure: superdimensions, validated brackets, weights, roots,
and the weight-lattice quotient."""

from superext.superlie import (build_gl, build_sl, build_osp, build_p,
                               build_q, root_data)
from superext.commalg import build_multipoint
from superext.mapalg import tensor_algebra

print("== classical families ==")
for name, alg in [("gl(2|1)", build_gl(2, 1)),
                  ("sl(2|1)", build_sl(2, 1)),
                  ("osp(1|2)", build_osp(1)),
                  ("osp(1|4)", build_osp(2)),
                  ("p(2)", build_p(2)),
                  ("q(2)", build_q(2))]:
    alg.validate()                       # antisymmetry + super Jacobi
    print("%-9s superdim %s  cartan rank %d"
          % (name, alg.superdimension(), len(alg.cartan)))

print()
print("== roots of osp(1|2) ==")
g = build_osp(1)
rd = root_data(g)
for w, parity, mult in rd.roots:
    print("  root %-6s parity %d  mult %d"
          % (tuple(str(c) for c in w), parity, mult))
print("positive:", [tuple(str(c) for c in w) for w in rd.positive])
print("weight lattice / root lattice order:", rd.quotient_order())

print()
print("== truncated currents ==")
A = build_multipoint([(0, 2), (1, 2)], basis="blocks")
print("ring C[t]/(t^2 (t-1)^2), blocks basis:", A.labels)
L = tensor_algebra(g, A)
L.validate()
print("osp(1|2) (x) A: superdim %s, %d Cartan directions"
      % (L.superdimension(), len(L.cartan)))
