"""Map superalgebras g (x) A and their equivariant subalgebras.

Basis slots are (i, r) -> i * dim(A) + r for a Lie basis index i and a
ring basis index r.  The Cartan slots of the product are h (x) e with h a
Cartan element of g and e a grading slot of A (the unit, or the block
idempotents); on the supported ring bases these act diagonally, so the
tensor algebra inherits exact weights.
"""

from .scalars import GaussianRational, as_scalar, ONE
from .linalg import ExactMatrix, kernel_basis, vec_add_scaled
from .superlie import (LieSuperalgebra, Coordinatizer, ValidationError,
                       check_guard)
from .commalg import quotient_algebra


def slot_index(ring_dim, i, r):
    return i * ring_dim + r


def tensor_algebra(g, ring, guard_dim=None):
    """The Lie superalgebra g (x) A for a commutative unital algebra A."""
    dim = g.dim * ring.dim
    check_guard(dim, guard_dim)
    parity, labels = [], []
    for i in range(g.dim):
        for r in range(ring.dim):
            parity.append(g.parity[i])
            labels.append("%s*%s" % (g.labels[i], ring.labels[r]))
    brackets = {}
    for i in range(g.dim):
        for j in range(i, g.dim):
            pairs = [(i, j)] if i == j else [(i, j), (j, i)]
            for (a, b) in pairs:
                comp_g = g.bracket_basis(a, b)
                if not comp_g:
                    continue
                for r in range(ring.dim):
                    for s in range(ring.dim):
                        comp_r = ring.multiply_basis(r, s)
                        if not comp_r:
                            continue
                        out = {}
                        for k, cg in comp_g.items():
                            for t, cr in comp_r.items():
                                key = slot_index(ring.dim, k, t)
                                cur = out.get(key, GaussianRational(0))
                                out[key] = cur + cg * cr
                        out = {k: c for k, c in out.items() if c}
                        if out:
                            brackets[(slot_index(ring.dim, a, r),
                                      slot_index(ring.dim, b, s))] = out
    cartan = [slot_index(ring.dim, h, e)
              for h in g.cartan for e in ring.grading_slots]
    nilpos = [slot_index(ring.dim, k, r)
              for k in g.nilpos for r in range(ring.dim)]
    nilneg = [slot_index(ring.dim, k, r)
              for k in g.nilneg for r in range(ring.dim)]
    alg = LieSuperalgebra(parity, brackets, labels=labels, cartan=cartan,
                          nilpos=nilpos, nilneg=nilneg,
                          metadata={"map_base": g, "map_ring": ring})
    if cartan:
        try:
            alg.compute_weights()
        except ValidationError:
            alg.weights = None
    return alg


def parity_automorphism(g):
    """The involution x -> (-1)^{|x|} x as a matrix."""
    m = ExactMatrix(g.dim, g.dim)
    for k in range(g.dim):
        m.rows[k][k] = as_scalar(1 if g.parity[k] == 0 else -1)
    return m


def lie_automorphism_validate(g, mat):
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = mat.matvec(g.bracket_basis(i, j))
            rhs = g.bracket(mat.matvec({i: ONE}), mat.matvec({j: ONE}))
            vec_add_scaled(lhs, rhs, -1)
            if lhs:
                raise ValidationError("matrix is not a Lie automorphism")
    return True


def equivariant_subalgebra(map_alg, lie_generator, ring_action,
                           order=None):
    """Fixed points of the diagonal action (x (x) a) -> g.x (x) gamma.a.

    lie_generator: matrix on the Lie factor (e.g. parity_automorphism);
    ring_action: GroupAction on the ring factor.
    Returns (subalgebra, embedding_columns)."""
    g = map_alg.metadata["map_base"]
    ring = map_alg.metadata["map_ring"]
    lie_automorphism_validate(g, lie_generator)
    ring_action.validate(ring)
    n = map_alg.dim
    gen = ExactMatrix(n, n)
    for i in range(g.dim):
        col_g = lie_generator.matvec({i: ONE})
        for r in range(ring.dim):
            col_r = ring_action.generator.matvec({r: ONE})
            src = slot_index(ring.dim, i, r)
            for i2, cg in col_g.items():
                for r2, cr in col_r.items():
                    gen.add_at(slot_index(ring.dim, i2, r2), src, cg * cr)
    delta = gen.add(ExactMatrix.identity(n), -1)
    basis = kernel_basis(delta)
    coord = Coordinatizer(n)
    for v in basis:
        coord.add(v)
    parities, labels = [], []
    for j, v in enumerate(basis):
        ps = {map_alg.parity[k] for k in v}
        if len(ps) != 1:
            raise ValidationError("fixed vector mixes parities")
        parities.append(ps.pop())
        if len(v) == 1 and list(v.values())[0] == ONE:
            labels.append(map_alg.labels[next(iter(v))])
        else:
            labels.append("fix%d" % j)
    brackets = {}
    for a, u in enumerate(basis):
        for b, v in enumerate(basis):
            comp = coord.coords(map_alg.bracket(u, v))
            if comp is None:
                raise ValidationError("fixed points not closed under bracket")
            if comp:
                brackets[(a, b)] = comp
    unit_slots = {j: next(iter(basis[j])) for j in range(len(basis))
                  if len(basis[j]) == 1 and
                  list(basis[j].values())[0] == ONE}
    cartan = [j for j, s in unit_slots.items() if s in set(map_alg.cartan)]
    nilpos = [j for j, s in unit_slots.items() if s in set(map_alg.nilpos)]
    nilneg = [j for j, s in unit_slots.items() if s in set(map_alg.nilneg)]
    sub = LieSuperalgebra(parities, brackets, labels=labels, cartan=cartan,
                          nilpos=nilpos, nilneg=nilneg,
                          metadata={"map_base": g, "map_ring": ring,
                                    "equivariant": True})
    if cartan:
        sub.compute_weights()
    emb = ExactMatrix(n, len(basis))
    for j, v in enumerate(basis):
        for r, c in v.items():
            emb.rows[r][j] = c
    return sub, emb


class AlgebraHom:
    """Homomorphism of Lie superalgebras given by its matrix (columns are
    images of source basis vectors in target coordinates)."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, vec):
        return self.matrix.matvec(vec)

    def validate(self):
        for i in range(self.source.dim):
            img = self.matrix.matvec({i: ONE})
            for k in img:
                if self.target.parity[k] != self.source.parity[i]:
                    raise ValidationError("homomorphism breaks parity")
        for i in range(self.source.dim):
            for j in range(self.source.dim):
                lhs = self.apply(self.source.bracket_basis(i, j))
                rhs = self.target.bracket(self.apply({i: ONE}),
                                          self.apply({j: ONE}))
                vec_add_scaled(lhs, rhs, -1)
                if lhs:
                    raise ValidationError(
                        "homomorphism breaks the bracket at (%d,%d)"
                        % (i, j))
        return True


def evaluation_hom(map_alg, ideal):
    """Quotient map g (x) A -> g (x) (A / ideal).

    Returns an AlgebraHom onto the tensor algebra of the quotient ring."""
    g = map_alg.metadata["map_base"]
    ring = map_alg.metadata["map_ring"]
    qring, proj = quotient_algebra(ring, ideal)
    target = tensor_algebra(g, qring)
    mat = ExactMatrix(target.dim, map_alg.dim)
    for i in range(g.dim):
        for r in range(ring.dim):
            src = slot_index(ring.dim, i, r)
            for r2, c in proj.matvec({r: ONE}).items():
                mat.add_at(slot_index(qring.dim, i, r2), src, c)
    hom = AlgebraHom(map_alg, target, mat)
    return hom
