"""Representations of Lie superalgebras with exact matrices.

A Representation stores one sparse matrix per algebra basis element,
acting on a Z2-graded coordinate space.  Koszul signs appear exactly
once, in the functorial constructors (dual, tensor); after that all
computations are plain matrix algebra.

Conventions:
  dual:    (x . f)(v) = -(-1)^{|x||f|} f(x . v)
  tensor:  x . (v (x) w) = x.v (x) w + (-1)^{|x||v|} v (x) x.w
"""

import json

from .scalars import (GaussianRational, as_scalar, format_scalar,
                      parse_scalar, sqrt_scalar, ONE, I as IMAG)
from .linalg import (ExactMatrix, Subspace, Echelon, kernel_basis,
                     vec_add_scaled, solve)
from .superlie import (Coordinatizer, ValidationError, direct_sum,
                       check_guard)


class IndecomposableDetected(Exception):
    pass


class NormalizationFailure(Exception):
    pass


class Representation:
    def __init__(self, algebra, parity, action, labels=None, metadata=None):
        self.algebra = algebra
        self.parity = tuple(parity)
        self.dim = len(self.parity)
        self.action = list(action)       # one ExactMatrix per basis index
        self.labels = list(labels) if labels else \
            ["v%d" % k for k in range(self.dim)]
        self.metadata = dict(metadata) if metadata else {}

    def act(self, i, vec):
        return self.action[i].matvec(vec)

    def act_element(self, element, vec):
        out = {}
        for i, c in element.items():
            vec_add_scaled(out, self.action[i].matvec(vec), c)
        return out

    def superdimension(self):
        ev = sum(1 for p in self.parity if p == 0)
        return (ev, self.dim - ev)

    def validate(self):
        alg = self.algebra
        if len(self.action) != alg.dim:
            raise ValidationError("one action matrix per basis element "
                                  "required")
        for i, m in enumerate(self.action):
            if (m.nrows, m.ncols) != (self.dim, self.dim):
                raise ValidationError("action matrix %d has wrong shape" % i)
            for r, row in enumerate(m.rows):
                for c in row:
                    if self.parity[r] != (self.parity[c] + alg.parity[i]) % 2:
                        raise ValidationError(
                            "action of %s violates the grading"
                            % alg.labels[i])
        for i in range(alg.dim):
            for j in range(alg.dim):
                sign = -1 if (alg.parity[i] * alg.parity[j]) % 2 == 0 else 1
                lhs = self.action[i].matmul(self.action[j]).add(
                    self.action[j].matmul(self.action[i]), sign)
                rhs = ExactMatrix(self.dim, self.dim)
                for k, c in alg.bracket_basis(i, j).items():
                    rhs = rhs.add(self.action[k].scale(c))
                if not lhs.add(rhs, -1).is_zero():
                    raise ValidationError(
                        "module axiom fails on ([%s, %s])"
                        % (alg.labels[i], alg.labels[j]))
        return True

    # -------------------------------------------------------------- JSON

    def to_json(self):
        action = []
        for i, m in enumerate(self.action):
            entries = [[r, c, format_scalar(v)]
                       for r, row in enumerate(m.rows)
                       for c, v in sorted(row.items())]
            action.append([i, entries])
        return {"dim": self.dim, "parity": list(self.parity),
                "labels": self.labels, "action": action}

    @classmethod
    def from_json(cls, algebra, data):
        action = [ExactMatrix(data["dim"], data["dim"])
                  for _ in range(algebra.dim)]
        for i, entries in data["action"]:
            for r, c, v in entries:
                action[i].rows[r][c] = parse_scalar(v)
        return cls(algebra, data["parity"], action,
                   labels=data.get("labels"))

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)


# --------------------------------------------------------- basic builders

def trivial_rep(alg, dim=1):
    return Representation(alg, [0] * dim,
                          [ExactMatrix(dim, dim) for _ in range(alg.dim)],
                          metadata={"kind": "trivial"})


def adjoint_rep(alg):
    return Representation(alg, alg.parity,
                          [alg.ad_matrix(i) for i in range(alg.dim)],
                          labels=list(alg.labels),
                          metadata={"kind": "adjoint"})


def defining_rep(alg):
    mats = alg.metadata.get("matrix_basis")
    vp = alg.metadata.get("vector_parity")
    if mats is None or vp is None:
        raise ValidationError("algebra has no matrix realization")
    return Representation(alg, vp, list(mats),
                          metadata={"kind": "defining"})


# ----------------------------------------------------------- functoriality

def dual_rep(rep):
    alg = rep.algebra
    action = []
    for i in range(alg.dim):
        m = ExactMatrix(rep.dim, rep.dim)
        src = rep.action[i]
        for r, row in enumerate(src.rows):
            for c, v in row.items():
                sign = -1 if (alg.parity[i] * rep.parity[c]) % 2 == 0 else 1
                # (x.f_c)(v_r) picks up -(-1)^{|x||f_c|} rho(x)[r, c]; note
                # |f_c| = |v_c| and the matrix of x on the dual basis puts
                # this at row c, column r
                m.add_at(c, r, sign * v)
        action.append(m)
    return Representation(alg, rep.parity, action,
                          labels=["%s'" % s for s in rep.labels],
                          metadata={"kind": "dual"})


def tensor_rep(r1, r2):
    if r1.algebra is not r2.algebra:
        raise ValidationError("tensor factors live over different algebras")
    alg = r1.algebra
    d1, d2 = r1.dim, r2.dim
    dim = d1 * d2
    parity = [(r1.parity[a] + r2.parity[b]) % 2
              for a in range(d1) for b in range(d2)]
    action = []
    for i in range(alg.dim):
        m = ExactMatrix(dim, dim)
        m1, m2 = r1.action[i], r2.action[i]
        for a2, row in enumerate(m1.rows):
            for a, v in row.items():
                for b in range(d2):
                    m.add_at(a2 * d2 + b, a * d2 + b, v)
        for b2, row in enumerate(m2.rows):
            for b, v in row.items():
                for a in range(d1):
                    sign = -1 if (alg.parity[i] * r1.parity[a]) % 2 else 1
                    m.add_at(a * d2 + b2, a * d2 + b, sign * v)
        action.append(m)
    labels = ["%s*%s" % (x, y) for x in r1.labels for y in r2.labels]
    return Representation(alg, parity, action, labels=labels)


def outer_tensor(r1, r2, sum_algebra=None):
    """Module over g1 (+) g2 on V1 (x) V2."""
    alg = sum_algebra or direct_sum(r1.algebra, r2.algebra)
    d1, d2 = r1.dim, r2.dim
    dim = d1 * d2
    parity = [(r1.parity[a] + r2.parity[b]) % 2
              for a in range(d1) for b in range(d2)]
    action = []
    for i in range(r1.algebra.dim):
        m = ExactMatrix(dim, dim)
        for a2, row in enumerate(r1.action[i].rows):
            for a, v in row.items():
                for b in range(d2):
                    m.add_at(a2 * d2 + b, a * d2 + b, v)
        action.append(m)
    for j in range(r2.algebra.dim):
        m = ExactMatrix(dim, dim)
        pj = r2.algebra.parity[j]
        for b2, row in enumerate(r2.action[j].rows):
            for b, v in row.items():
                for a in range(d1):
                    sign = -1 if (pj * r1.parity[a]) % 2 else 1
                    m.add_at(a * d2 + b2, a * d2 + b, sign * v)
        action.append(m)
    labels = ["%s*%s" % (x, y) for x in r1.labels for y in r2.labels]
    return Representation(alg, parity, action, labels=labels)


def pullback(rep, hom):
    """Module over hom.source from a module over hom.target."""
    action = []
    for i in range(hom.source.dim):
        img = hom.apply({i: ONE})
        m = ExactMatrix(rep.dim, rep.dim)
        for k, c in img.items():
            m = m.add(rep.action[k].scale(c))
        action.append(m)
    return Representation(hom.source, rep.parity, action,
                          labels=list(rep.labels))


def evaluation_rep(map_alg, point_idx, rep):
    """Pull a g-module back along evaluation at the point a_{point_idx}
    of the map algebra g (x) A."""
    g = map_alg.metadata["map_base"]
    ring = map_alg.metadata["map_ring"]
    if rep.algebra is not g:
        raise ValidationError("module must live over the Lie factor")
    action = []
    for i in range(g.dim):
        for r in range(ring.dim):
            val = ring.evaluate({r: ONE}, point_idx)
            action.append(rep.action[i].scale(val) if val
                          else ExactMatrix(rep.dim, rep.dim))
    return Representation(map_alg, rep.parity, action,
                          labels=list(rep.labels),
                          metadata={"kind": "evaluation",
                                    "point": point_idx})


def restrict_along_indices(rep, sub_alg, embedding):
    """Module over a subalgebra given by embedding columns."""
    action = []
    for j in range(sub_alg.dim):
        img = embedding.matvec({j: ONE}) if isinstance(embedding,
                                                       ExactMatrix) else None
        m = ExactMatrix(rep.dim, rep.dim)
        for k, c in img.items():
            m = m.add(rep.action[k].scale(c))
        action.append(m)
    return Representation(sub_alg, rep.parity, action,
                          labels=list(rep.labels))


# ------------------------------------------------------------ weight theory

def module_weights(rep, strict=True):
    """Weight tuple of each basis vector under the recorded Cartan basis;
    requires the action matrices of the Cartan elements to be diagonal."""
    alg = rep.algebra
    weights = []
    for b in range(rep.dim):
        w = []
        for c in alg.cartan:
            col = rep.action[c].rows
            diag = rep.action[c].entry(b, b)
            off = any(r != b and b in row
                      for r, row in enumerate(col))
            if off:
                if strict:
                    raise ValidationError(
                        "module basis is not weight adapted")
                return None
            w.append(diag)
        weights.append(tuple(w))
    return weights


def weight_spaces(rep):
    """Partition of basis indices by weight (weight-adapted bases only;
    falls back to an exact eigen decomposition otherwise)."""
    weights = module_weights(rep, strict=False)
    if weights is not None:
        out = {}
        for b, w in enumerate(weights):
            out.setdefault(w, []).append({b: ONE})
        return out
    return _weight_spaces_eigen(rep)


def _weight_spaces_eigen(rep):
    """Simultaneous eigenspaces of the Cartan action, computed exactly
    via sympy eigenvalues (slow path for non-adapted bases)."""
    import sympy
    from fractions import Fraction

    alg = rep.algebra
    spaces = [((), Subspace(rep.dim, [{b: ONE} for b in range(rep.dim)]))]
    for c in alg.cartan:
        m = rep.action[c]
        sm = sympy.zeros(rep.dim, rep.dim)
        for r, row in enumerate(m.rows):
            for cc, v in row.items():
                sm[r, cc] = sympy.Rational(v.a, v.d) + \
                    sympy.Rational(v.b, v.d) * sympy.I
        new_spaces = []
        for lam in sm.eigenvals():
            re, im = sympy.nsimplify(lam).as_real_imag()
            re, im = sympy.Rational(re), sympy.Rational(im)
            lam_exact = GaussianRational(Fraction(re.p, re.q),
                                         Fraction(im.p, im.q))
            shifted = m.add(ExactMatrix.identity(rep.dim).scale(lam_exact),
                            -1)
            ker = Subspace(rep.dim, kernel_basis(shifted))
            for wt, sp in spaces:
                inter = sp.intersect(ker)
                if inter.dim:
                    new_spaces.append((wt + (lam_exact,), inter))
        spaces = new_spaces
    out = {}
    for wt, sp in spaces:
        out.setdefault(wt, []).extend(sp.basis())
    return out


def highest_weight_vectors(rep):
    """Graded basis of the space killed by all positive root vectors."""
    alg = rep.algebra
    if not alg.nilpos:
        basis = [{b: ONE} for b in range(rep.dim)]
        return basis
    stacked = ExactMatrix(rep.dim * len(alg.nilpos), rep.dim)
    for k, e in enumerate(alg.nilpos):
        for r, row in enumerate(rep.action[e].rows):
            for c, v in row.items():
                stacked.rows[k * rep.dim + r][c] = v
    raw = kernel_basis(stacked)
    return _grade_vectors(rep, raw)


def _grade_vectors(rep, vectors):
    """Split vectors into parity-homogeneous pieces and return an
    independent homogeneous list spanning the same space."""
    ech0, ech1 = Echelon(), Echelon()
    out = []
    for v in vectors:
        for par, ech in ((0, ech0), (1, ech1)):
            part = {k: c for k, c in v.items() if rep.parity[k] == par}
            if part and ech.insert(dict(part)) is not None:
                out.append(part)
    return out


def spin_up(rep, seeds):
    """Smallest submodule containing the seed vectors; returns a list of
    parity-homogeneous spanning vectors (echelonized)."""
    ech = Echelon()
    queue = []
    out = []
    for s in _grade_vectors(rep, [dict(s) for s in seeds]):
        if ech.insert(dict(s)) is not None:
            out.append(s)
            queue.append(s)
    while queue:
        v = queue.pop()
        for i in range(rep.algebra.dim):
            w = rep.action[i].matvec(v)
            if w and ech.insert(dict(w)) is not None:
                out.append(w)
                queue.append(w)
    return out


def subrep(rep, basis_vectors):
    """Restriction of the action to the span of the given homogeneous
    vectors (must be invariant).  Returns (sub, basis_vectors)."""
    coord = Coordinatizer(rep.dim)
    for v in basis_vectors:
        coord.add(v)
    parity = []
    for v in basis_vectors:
        ps = {rep.parity[k] for k in v}
        if len(ps) != 1:
            raise ValidationError("subspace basis vector mixes parities")
        parity.append(ps.pop())
    action = []
    for i in range(rep.algebra.dim):
        m = ExactMatrix(len(basis_vectors), len(basis_vectors))
        for j, v in enumerate(basis_vectors):
            img = rep.action[i].matvec(v)
            comp = coord.coords(img)
            if comp is None:
                raise ValidationError("subspace is not invariant")
            for r, c in comp.items():
                m.rows[r][j] = c
        action.append(m)
    return Representation(rep.algebra, parity, action), basis_vectors


def decompose(rep, max_rounds=10):
    """Split a module into irreducible summands via highest-weight theory.

    Raises IndecomposableDetected when no equivariant splitting exists."""
    parts = []
    remaining = rep
    # work with explicit embeddings into the original module
    ambient_basis = [{b: ONE} for b in range(rep.dim)]
    covered = Subspace(rep.dim)
    for _ in range(max_rounds):
        hw = highest_weight_vectors(rep)
        new_seeds = [v for v in hw if not covered.contains(v)]
        progress = False
        for seed in new_seeds:
            if covered.contains(seed):
                continue
            span = spin_up(rep, [seed])
            if all(covered.contains(v) for v in span):
                continue
            if any(covered.contains(v) for v in span):
                # partially overlapping submodule: not a direct summand
                # candidate on its own; skip, the projection step below
                # will sort it out if a complement exists
                continue
            test = Subspace(rep.dim, covered.basis() + span)
            if test.dim == covered.dim + len(span):
                parts.append(span)
                covered = test
                progress = True
        if covered.dim == rep.dim:
            out = []
            for span in parts:
                sub, basis = subrep(rep, span)
                _certify_irreducible(sub)
                out.append((sub, basis))
            return out
        comp = _equivariant_complement(rep, covered)
        if comp is None:
            raise IndecomposableDetected(
                "no equivariant complement for a proper submodule "
                "(dimension %d inside %d)" % (covered.dim, rep.dim))
        grew = False
        for v in comp:
            if not covered.contains(v):
                grew = True
        if not progress and not grew:
            raise IndecomposableDetected("no further splitting found")
        # recurse on the complement as its own module
        sub, basis = subrep(rep, comp)
        inner = decompose(sub, max_rounds=max_rounds)
        for inner_sub, inner_basis in inner:
            lifted = []
            for v in inner_basis:
                out_v = {}
                for j, c in v.items():
                    vec_add_scaled(out_v, basis[j], c)
                lifted.append(out_v)
            parts.append(lifted)
            for v in lifted:
                covered.add_vector(v)
        if covered.dim == rep.dim:
            out = []
            for span in parts:
                sub2, basis2 = subrep(rep, span)
                _certify_irreducible(sub2)
                out.append((sub2, basis2))
            return out
    raise IndecomposableDetected("decomposition did not converge")


def _certify_irreducible(sub):
    hw = highest_weight_vectors(sub)
    for v in hw:
        span = spin_up(sub, [v])
        if len(span) != sub.dim:
            raise IndecomposableDetected(
                "summand is not irreducible: a highest weight vector "
                "generates a proper submodule")
    if not hw:
        raise IndecomposableDetected("summand has no highest weight vector")


def _equivariant_complement(rep, covered):
    """Basis of the kernel of an equivariant projection onto the covered
    submodule, or None if no such projection exists."""
    sbasis = covered.basis()
    s = len(sbasis)
    if s == 0:
        return [{b: ONE} for b in range(rep.dim)]
    B = ExactMatrix(rep.dim, s)
    for j, v in enumerate(sbasis):
        for r, c in v.items():
            B.rows[r][j] = c
    # unknown X: s x dim, P = B X; constraints: X B = I,  B X rho = rho B X
    nunk = s * rep.dim

    def xcol(a, b):      # X[a][b]
        return a * rep.dim + b

    rows = []
    rhs = {}
    for a in range(s):
        for j in range(s):
            row = {}
            for r, c in sbasis[j].items():
                row[xcol(a, r)] = c
            rows.append(row)
            if a == j:
                rhs[len(rows) - 1] = ONE
    eqs = []
    for i in range(rep.algebra.dim):
        rho = rep.action[i]
        rhoB = rho.matmul(B)          # dim x s
        rho_cols = rho.transpose()    # column c of rho = rho_cols.rows[c]
        for r in range(rep.dim):
            for c in range(rep.dim):
                row = {}
                for a in range(s):
                    bra = B.entry(r, a)
                    if bra:
                        for k, rkc in rho_cols.rows[c].items():
                            key = xcol(a, k)
                            cur = row.get(key, GaussianRational(0))
                            row[key] = cur + bra * rkc
                for a, rba in rhoB.rows[r].items():
                    key = xcol(a, c)
                    cur = row.get(key, GaussianRational(0))
                    row[key] = cur - rba
                row = {k: v for k, v in row.items() if v}
                if row:
                    eqs.append(row)
    allrows = rows + eqs
    m = ExactMatrix(len(allrows), nunk, rows=allrows)
    sol = solve(m, rhs)
    if sol is None:
        return None
    X = ExactMatrix(s, rep.dim)
    for key, v in sol.items():
        X.rows[key // rep.dim][key % rep.dim] = v
    P = B.matmul(X)
    ker = kernel_basis(P)
    return _grade_vectors(rep, ker)


# -------------------------------------------------------- endomorphisms

def module_homs(r1, r2, parity):
    """Basis of the space of maps f: V1 -> V2 with
    f(x.v) = (-1)^{parity |x|} x.f(v), i.e. graded equivariant maps."""
    if r1.algebra is not r2.algebra:
        raise ValidationError("hom spaces need a common algebra")
    alg = r1.algebra
    nunk = r2.dim * r1.dim

    def col(r, c):
        return r * r1.dim + c

    eqs = []
    for i in range(alg.dim):
        sign = -1 if (parity * alg.parity[i]) % 2 else 1
        a1, a2 = r1.action[i], r2.action[i]
        a1_cols = a1.transpose()
        for r in range(r2.dim):
            for c in range(r1.dim):
                row = {}
                # (Z a1)[r][c] - sign (a2 Z)[r][c] = 0
                for k, v in a1_cols.rows[c].items():
                    key = col(r, k)
                    row[key] = row.get(key, GaussianRational(0)) + v
                for k, v in a2.rows[r].items():
                    key = col(k, c)
                    row[key] = row.get(key, GaussianRational(0)) - sign * v
                row = {k: v for k, v in row.items() if v}
                if row:
                    eqs.append(row)
    # grading constraint: f has the stated parity as a linear map
    for r in range(r2.dim):
        for c in range(r1.dim):
            if (r2.parity[r] + r1.parity[c]) % 2 != parity:
                eqs.append({col(r, c): ONE})
    m = ExactMatrix(len(eqs), nunk, rows=eqs)
    out = []
    for v in kernel_basis(m):
        z = ExactMatrix(r2.dim, r1.dim)
        for key, val in v.items():
            z.rows[key // r1.dim][key % r1.dim] = val
        out.append(z)
    return out


def super_commutant(rep):
    """(even, odd) bases of the endomorphisms supercommuting with the
    action: Z rho(x) = (-1)^{|Z||x|} rho(x) Z."""
    return module_homs(rep, rep, 0), module_homs(rep, rep, 1)


def normalized_odd_involution(rep):
    """An odd supercommuting endomorphism phi with phi^2 = -1, or None
    when the odd commutant vanishes."""
    _, odd = super_commutant(rep)
    if not odd:
        return None
    if len(odd) > 1:
        raise NormalizationFailure(
            "odd commutant has dimension %d > 1" % len(odd))
    psi = odd[0]
    sq = psi.matmul(psi)
    c = sq.entry(0, 0)
    if not sq.add(ExactMatrix.identity(rep.dim).scale(c), -1).is_zero():
        raise NormalizationFailure("odd endomorphism squares to a "
                                   "non-scalar")
    s = sqrt_scalar(-c)
    if s is None or not s:
        raise NormalizationFailure(
            "cannot normalize: sqrt(%s) missing in Q(i)" % format_scalar(-c))
    return psi.scale(ONE / s)


def irreducible_product(r1, r2, sum_algebra=None):
    """The product of modules over g1 (+) g2: the plain outer tensor when
    at most one factor has odd endomorphisms, else the +1 eigenspace of
    the canonical even involution sqrt(-1) phi1 (x) phi2.

    Returns (module, basis_in_tensor_or_None, tensor_module)."""
    T = outer_tensor(r1, r2, sum_algebra)
    phi1 = normalized_odd_involution(r1)
    phi2 = normalized_odd_involution(r2)
    if phi1 is None or phi2 is None:
        return T, None, T
    d1, d2 = r1.dim, r2.dim
    J = ExactMatrix(d1 * d2, d1 * d2)
    for a2, row in enumerate(phi1.rows):
        for a, v1 in row.items():
            sign = -1 if r1.parity[a] else 1
            for b2, row2 in enumerate(phi2.rows):
                for b, v2 in row2.items():
                    J.add_at(a2 * d2 + b2, a * d2 + b,
                             IMAG * sign * v1 * v2)
    if not J.matmul(J).add(ExactMatrix.identity(d1 * d2), -1).is_zero():
        raise NormalizationFailure("product involution fails to square "
                                   "to the identity")
    for m in T.action:
        if not J.matmul(m).add(m.matmul(J), -1).is_zero():
            raise NormalizationFailure("product involution is not "
                                       "equivariant")
    plus = kernel_basis(J.add(ExactMatrix.identity(d1 * d2), -1))
    plus = _grade_vectors(T, plus)
    sub, basis = subrep(T, plus)
    return sub, basis, T


def product_family(reps, algebras=None):
    """Iterated product V1 *hat* V2 *hat* ... and its kappa statistic.

    Returns (module, algebra, kappa)."""
    if not reps:
        raise ValidationError("empty family")
    cur = reps[0]
    alg = reps[0].algebra
    kappa = 0
    for nxt in reps[1:]:
        odd_cur = 1 if module_homs(cur, cur, 1) else 0
        odd_nxt = 1 if module_homs(nxt, nxt, 1) else 0
        kappa += odd_cur * odd_nxt
        alg = direct_sum(alg, nxt.algebra)
        cur, _, _ = irreducible_product(cur, nxt)
        cur = Representation(alg, cur.parity, cur.action, cur.labels)
    return cur, alg, kappa


def kappa_of(reps):
    return product_family(reps)[2]


# --------------------------------------------------------- osp(1|2) irreps

def osp12_irrep(g, lam):
    """The irreducible osp(1|2)-module of highest weight lam (dimension
    2*lam + 1), carved out of a tensor power of the defining module."""
    if lam == 0:
        return trivial_rep(g)
    D = defining_rep(g)
    T = D
    hw_idx = 1        # index of the highest weight line p in the defining
    idx = hw_idx
    for _ in range(lam - 1):
        T = tensor_rep(T, D)
        idx = idx * 3 + hw_idx
    span = spin_up(T, [{idx: ONE}])
    sub, _ = subrep(T, span)
    if sub.dim != 2 * lam + 1:
        raise ValidationError(
            "highest weight module has dimension %d, expected %d"
            % (sub.dim, 2 * lam + 1))
    return sub
