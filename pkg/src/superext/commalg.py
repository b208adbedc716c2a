"""Finite-dimensional commutative associative algebras with unit.

The main constructor builds C[t] / prod (t - a_i)^{n_i} either on the
monomial basis 1, t, ..., t^{d-1} or on the idempotent block basis
e_i (t - a_i)^k, where e_i are the Chinese-remainder idempotents.  The
block basis makes every maximal ideal a coordinate subspace, which the
cohomology engine exploits for weight-graded computations.
"""

from .scalars import GaussianRational, as_scalar, ONE, I as IMAG
from .linalg import (ExactMatrix, Subspace, Echelon, vec_add_scaled,
                     vec_scale, solve, kernel_basis)
from .superlie import Coordinatizer, ValidationError


class CommutativeAlgebra:
    def __init__(self, dim, mult, unit, labels=None, points=None,
                 basis_kind="abstract", block_info=None, to_monomial=None,
                 grading_slots=None):
        self.dim = dim
        self.mult = {}
        for (r, s), comp in mult.items():
            comp = {t: as_scalar(c) for t, c in comp.items() if as_scalar(c)}
            if comp:
                self.mult[(r, s)] = comp
                if (s, r) not in mult:
                    self.mult[(s, r)] = comp
        self.unit = {k: as_scalar(c) for k, c in unit.items() if as_scalar(c)}
        self.labels = list(labels) if labels else \
            ["b%d" % k for k in range(dim)]
        self.points = list(points) if points else []   # [(a_i, n_i)]
        self.basis_kind = basis_kind
        self.block_info = block_info       # basis index -> (point_idx, k)
        self.to_monomial = to_monomial     # basis index -> poly coeff list
        self.grading_slots = list(grading_slots) if grading_slots else \
            ([0] if dim > 0 else [])

    def multiply_basis(self, r, s):
        return self.mult.get((r, s), {})

    def multiply(self, u, v):
        out = {}
        for r, a in u.items():
            for s, b in v.items():
                comp = self.mult.get((r, s))
                if comp:
                    vec_add_scaled(out, comp, a * b)
        return out

    def validate(self):
        for r in range(self.dim):
            for s in range(r, self.dim):
                if self.multiply_basis(r, s) != self.multiply_basis(s, r):
                    raise ValidationError("multiplication not commutative")
        for r in range(self.dim):
            er = {r: ONE}
            if self.multiply(self.unit, er) != er:
                raise ValidationError("unit fails on basis vector %d" % r)
            for s in range(self.dim):
                for t in range(self.dim):
                    lhs = self.multiply(er, self.multiply_basis(s, t))
                    rhs = self.multiply(self.multiply_basis(r, s), {t: ONE})
                    vec_add_scaled(lhs, rhs, -1)
                    if lhs:
                        raise ValidationError(
                            "multiplication not associative on (%d,%d,%d)"
                            % (r, s, t))
        return True

    def evaluate(self, vec, point_idx):
        """Value of the element at the point a_{point_idx}."""
        if self.basis_kind == "blocks":
            slot = next(k for k, (p, j) in enumerate(self.block_info)
                        if p == point_idx and j == 0)
            return vec.get(slot, GaussianRational(0))
        if self.basis_kind == "monomial":
            a = self.points[point_idx][0]
            total = GaussianRational(0)
            for k, c in vec.items():
                total = total + c * _power(a, k)
            return total
        raise ValidationError("evaluation needs a polynomial model")

    def maximal_ideal(self, point_idx):
        """Functions vanishing at a_{point_idx}, as a Subspace."""
        if self.basis_kind == "blocks":
            slot = next(k for k, (p, j) in enumerate(self.block_info)
                        if p == point_idx and j == 0)
            vecs = [{k: ONE} for k in range(self.dim) if k != slot]
            # e_i itself is not in m_i, but e_i - 1 is; the remaining
            # block heads e_j (j != i) already vanish at a_i
            return Subspace(self.dim, vecs)
        a = self.points[point_idx][0]
        # span of (t - a) t^k, k = 0..dim-2
        vecs = []
        for k in range(self.dim - 1):
            v = dict(self._tpow(k + 1))
            vec_add_scaled(v, self._tpow(k), -a)
            vecs.append(v)
        return Subspace(self.dim, vecs)

    def _tpow(self, k):
        if self.basis_kind != "monomial":
            raise ValidationError("not a monomial model")
        if k < self.dim:
            return {k: ONE}
        red = self._reductions()
        return red[k]

    def _reductions(self):
        if not hasattr(self, "_red_cache"):
            self._red_cache = {}
        return self._red_cache


def _power(a, k):
    out = ONE
    a = as_scalar(a)
    for _ in range(k):
        out = out * a
    return out


# ---------------------------------------------------------- construction

def _poly_mul(p, q):
    out = [GaussianRational(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def _poly_mod(p, modulus):
    """Reduce p modulo a monic modulus (coefficient list, ascending)."""
    p = list(p)
    d = len(modulus) - 1
    for k in range(len(p) - 1, d - 1, -1):
        c = p[k]
        if c:
            for j in range(d + 1):
                p[k - d + j] = p[k - d + j] - c * modulus[j]
    while len(p) > d:
        p.pop()
    while len(p) < d:
        p.append(GaussianRational(0))
    return p


def build_multipoint(points, basis="monomial"):
    """C[t] / prod (t - a_i)^{n_i}.

    points: list of (value, multiplicity); values must be distinct.
    basis 'monomial': 1, t, ..., t^{d-1}.
    basis 'blocks': Chinese-remainder adapted e_i (t - a_i)^k."""
    pts = [(as_scalar(a), int(n)) for a, n in points]
    vals = [a for a, n in pts]
    if len({(a.a, a.b, a.d) for a in vals}) != len(vals):
        raise ValidationError("points must be distinct")
    d = sum(n for _, n in pts)
    modulus = [ONE]
    for a, n in pts:
        for _ in range(n):
            modulus = _poly_mul(modulus, [-a, ONE])
    if basis == "monomial":
        mult = {}
        for r in range(d):
            for s in range(r, d):
                prod = [GaussianRational(0)] * (r + s) + [ONE]
                comp = {k: c for k, c in enumerate(_poly_mod(prod, modulus))
                        if c}
                if comp:
                    mult[(r, s)] = comp
        labels = ["1"] + ["t^%d" % k for k in range(1, d)]
        return CommutativeAlgebra(d, mult, {0: ONE}, labels=labels,
                                  points=pts, basis_kind="monomial",
                                  grading_slots=[0])
    if basis != "blocks":
        raise ValidationError("unknown basis kind %r" % basis)
    # block basis: compute idempotents in the monomial model, then write
    # the multiplication table directly from the block combinatorics
    mono = build_multipoint(points, basis="monomial")
    block_info, labels, polys = [], [], []
    for i, (a, n) in enumerate(pts):
        e_i = _idempotent(mono, pts, i)
        shift = [-a, ONE]
        cur = e_i
        for k in range(n):
            block_info.append((i, k))
            labels.append("e%d*(t-%s)^%d" % (i, a, k) if k else "e%d" % i)
            polys.append(cur)
            cur = _poly_mod(_poly_mul(cur, shift), _monic(mono, pts))
    mult = {}
    slot = {info: k for k, info in enumerate(block_info)}
    for r, (ip, kp) in enumerate(block_info):
        for s, (iq, kq) in enumerate(block_info):
            if ip != iq or s < r:
                continue
            tgt = (ip, kp + kq)
            if tgt in slot:
                mult[(r, s)] = {slot[tgt]: ONE}
    unit = {slot[(i, 0)]: ONE for i in range(len(pts))}
    grading = [slot[(i, 0)] for i in range(len(pts))]
    return CommutativeAlgebra(d, mult, unit, labels=labels, points=pts,
                              basis_kind="blocks", block_info=block_info,
                              to_monomial=polys, grading_slots=grading)


def _monic(mono, pts):
    modulus = [ONE]
    for a, n in pts:
        for _ in range(n):
            modulus = _poly_mul(modulus, [-a, ONE])
    return modulus


def _idempotent(mono, pts, i):
    """Coefficients of the idempotent e_i: e_i = 1 mod m_i^{n_i} and
    e_i = 0 mod m_j^{n_j} for j != i, solved exactly."""
    d = mono.dim
    a_i, n_i = pts[i]
    u = [ONE]          # prod_{j != i} (t - a_j)^{n_j}
    for j, (a, n) in enumerate(pts):
        if j != i:
            for _ in range(n):
                u = _poly_mul(u, [-a, ONE])
    v = [ONE]          # (t - a_i)^{n_i}
    for _ in range(n_i):
        v = _poly_mul(v, [-a_i, ONE])
    modulus = _monic(mono, pts)
    # e_i = u * w with u*w - 1 in span{v * t^k}; unknowns: w coeffs
    # (n_i of them) and the v-multiple coefficients (d - n_i of them)
    ncols = n_i + (d - n_i)
    rows = [dict() for _ in range(d)]
    for k in range(n_i):
        col = _poly_mod(_poly_mul(u, [GaussianRational(0)] * k + [ONE]),
                        modulus)
        for r, c in enumerate(col):
            if c:
                rows[r][k] = c
    for k in range(d - n_i):
        col = _poly_mod(_poly_mul(v, [GaussianRational(0)] * k + [ONE]),
                        modulus)
        for r, c in enumerate(col):
            if c:
                rows[r][n_i + k] = rows[r].get(
                    n_i + k, GaussianRational(0)) - c
    m = ExactMatrix(d, ncols, rows=rows)
    sol = solve(m, {0: ONE})
    if sol is None:
        raise ValidationError("idempotent system unsolvable")
    w = [sol.get(k, GaussianRational(0)) for k in range(n_i)]
    return _poly_mod(_poly_mul(u, w if w else [GaussianRational(0)]),
                     modulus)


# -------------------------------------------------------------- ideals

def ideal_from_generators(alg, gens):
    """Smallest ideal containing the generators, as a Subspace."""
    vecs = []
    for g in gens:
        for r in range(alg.dim):
            v = alg.multiply({r: ONE}, g)
            if v:
                vecs.append(v)
        if g:
            vecs.append(dict(g))
    return Subspace(alg.dim, vecs)


def ideal_product(alg, i1, i2):
    vecs = []
    for u in i1.basis():
        for v in i2.basis():
            w = alg.multiply(u, v)
            if w:
                vecs.append(w)
    return Subspace(alg.dim, vecs)


def ideal_power(alg, ideal, k):
    if k == 0:
        return ideal_from_generators(alg, [alg.unit])
    out = ideal
    for _ in range(k - 1):
        out = ideal_product(alg, out, ideal)
    return out


def ideal_support(alg, ideal):
    """Points where the ideal vanishes: {i : ideal <= m_i}."""
    out = []
    for i in range(len(alg.points)):
        if all(not alg.evaluate(v, i) for v in ideal.basis()):
            out.append(i)
    return out


def quotient_algebra(alg, ideal):
    """A / ideal on the basis of non-pivot coordinates of the ideal's
    reduced form.  Returns (quotient, projection_matrix)."""
    ech = Echelon()
    for v in ideal.basis():
        ech.insert(dict(v))
    ech.back_substitute()
    pivots = set(ech.pivot_rows)
    keep = [k for k in range(alg.dim) if k not in pivots]
    pos = {k: j for j, k in enumerate(keep)}
    proj = ExactMatrix(len(keep), alg.dim)

    def project(vec):
        res = ech.residue(dict(vec))
        return {pos[k]: c for k, c in res.items()}

    for k in range(alg.dim):
        for j, c in project({k: ONE}).items():
            proj.rows[j][k] = c
    mult = {}
    for a, ka in enumerate(keep):
        for b, kb in enumerate(keep):
            if b < a:
                continue
            comp = project(alg.multiply_basis(ka, kb))
            if comp:
                mult[(a, b)] = comp
    # grading slots: basis vectors that square to a multiple of themselves
    # and multiply every other basis vector to a multiple of it (scaled
    # idempotent block heads); these keep the tensor weight grading alive
    grading = []
    for j in range(len(keep)):
        ok = True
        for b in range(len(keep)):
            comp = mult.get((min(j, b), max(j, b)), {})
            if any(k != b for k in comp):
                ok = False
                break
        if ok and mult.get((j, j)):
            grading.append(j)
    q = CommutativeAlgebra(len(keep), mult, project(alg.unit),
                           labels=[alg.labels[k] for k in keep],
                           points=alg.points, basis_kind="quotient",
                           grading_slots=grading or [0])
    return q, proj


# --------------------------------------------------------- group actions

class GroupAction:
    """Cyclic group action on an algebra by an order-m generator matrix."""

    def __init__(self, order, generator_matrix):
        self.order = order
        self.generator = generator_matrix

    def validate(self, alg):
        g = self.generator
        p = ExactMatrix.identity(alg.dim)
        for _ in range(self.order):
            p = p.matmul(g)
        if p != ExactMatrix.identity(alg.dim):
            raise ValidationError("generator does not have the stated order")
        gu = g.matvec(alg.unit)
        if gu != alg.unit:
            raise ValidationError("action does not fix the unit")
        for r in range(alg.dim):
            for s in range(alg.dim):
                lhs = g.matvec(alg.multiply_basis(r, s))
                rhs = alg.multiply(g.matvec({r: ONE}), g.matvec({s: ONE}))
                vec_add_scaled(lhs, rhs, -1)
                if lhs:
                    raise ValidationError("action is not multiplicative")
        return True


def scaling_action(alg, order):
    """t -> zeta * t with zeta a primitive root of unity of the given
    order (1, 2 or 4); requires a monomial model with invariant modulus."""
    if alg.basis_kind != "monomial":
        raise ValidationError("scaling action needs the monomial basis")
    if order == 1:
        zeta = ONE
    elif order == 2:
        zeta = as_scalar(-1)
    elif order == 4:
        zeta = IMAG
    else:
        raise ValidationError("only cyclic orders 1, 2, 4 are supported")
    g = ExactMatrix(alg.dim, alg.dim)
    for k in range(alg.dim):
        g.rows[k][k] = _power(zeta, k)
    action = GroupAction(order, g)
    action.validate(alg)
    return action


def fixed_subalgebra(alg, action):
    """Invariant subalgebra A^Gamma.  Returns (subalgebra, embedding)
    where embedding columns hold the invariant basis in A coordinates."""
    delta = action.generator.add(ExactMatrix.identity(alg.dim), -1)
    basis = kernel_basis(delta)
    coord = Coordinatizer(alg.dim)
    for v in basis:
        coord.add(v)
    mult = {}
    for a, u in enumerate(basis):
        for b, v in enumerate(basis):
            if b < a:
                continue
            comp = coord.coords(alg.multiply(u, v))
            if comp is None:
                raise ValidationError("invariants not closed under product")
            if comp:
                mult[(a, b)] = comp
    unit = coord.coords(alg.unit)
    if unit is None:
        raise ValidationError("unit is not invariant")
    emb = ExactMatrix(alg.dim, len(basis))
    for j, v in enumerate(basis):
        for r, c in v.items():
            emb.rows[r][j] = c
    # grading slots: invariant basis vectors supported on old grading slots
    slots = []
    for j, v in enumerate(basis):
        if set(v) <= set(alg.grading_slots):
            slots.append(j)
    sub = CommutativeAlgebra(len(basis), mult, unit,
                             labels=["inv%d" % j for j in range(len(basis))],
                             points=alg.points, basis_kind="invariant",
                             grading_slots=slots or [0])
    return sub, emb
