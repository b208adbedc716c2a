"""Finite-dimensional Lie superalgebras over Q(i) as structure constants.

A LieSuperalgebra is a basis with a parity vector and a full bracket
table.  Validation checks parity compatibility, super antisymmetry and
the super Jacobi identity on all basis triples.  Constructors build the
classical matrix families (gl, sl, osp(1|2n), p(n), q(n)) on bases that
diagonalize the adjoint action of the recorded Cartan elements, so that
weights are available without any eigenvalue computation.
"""

import json
import os

from .scalars import (GaussianRational, as_scalar, format_scalar,
                      parse_scalar, ONE)
from .linalg import (ExactMatrix, Echelon, Subspace, vec_add_scaled,
                     kernel_basis)

DEFAULT_GUARD_DIM = 200


class GuardExceeded(Exception):
    pass


class ValidationError(Exception):
    pass


def guard_limit(guard_dim=None):
    if guard_dim is not None:
        return guard_dim
    env = os.environ.get("SUPEREXT_GUARD_DIM")
    return int(env) if env else DEFAULT_GUARD_DIM


def check_guard(dim, guard_dim=None):
    limit = guard_limit(guard_dim)
    if dim > limit:
        raise GuardExceeded(
            "dimension %d exceeds guard limit %d" % (dim, limit))


class LieSuperalgebra:
    def __init__(self, parity, brackets, labels=None, cartan=None,
                 nilpos=None, nilneg=None, weights=None, metadata=None):
        """brackets: dict {(i, j): {k: scalar}} for any index pairs; the
        table is completed by super antisymmetry for missing mirror pairs."""
        self.parity = tuple(parity)
        self.dim = len(self.parity)
        self.labels = list(labels) if labels else \
            ["x%d" % k for k in range(self.dim)]
        self.cartan = list(cartan) if cartan else []
        self.nilpos = list(nilpos) if nilpos else []
        self.nilneg = list(nilneg) if nilneg else []
        self.weights = [tuple(w) for w in weights] if weights else None
        self.metadata = dict(metadata) if metadata else {}
        table = {}
        for (i, j), comp in brackets.items():
            comp = {k: as_scalar(c) for k, c in comp.items() if as_scalar(c)}
            if comp:
                table[(i, j)] = comp
        for (i, j) in list(table):
            if (j, i) not in table and i != j:
                sign = -1 if (self.parity[i] * self.parity[j]) % 2 == 0 \
                    else 1
                table[(j, i)] = {k: sign * c for k, c in table[(i, j)].items()}
        self._table = table

    # ----------------------------------------------------------- brackets

    def bracket_basis(self, i, j):
        return self._table.get((i, j), {})

    def bracket(self, u, v):
        """Bracket of two coordinate vectors (dicts)."""
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                comp = self._table.get((i, j))
                if comp:
                    vec_add_scaled(out, comp, a * b)
        return out

    def ad_matrix(self, i):
        """Matrix of ad(x_i): column j holds [x_i, x_j]."""
        m = ExactMatrix(self.dim, self.dim)
        for j in range(self.dim):
            for k, c in self.bracket_basis(i, j).items():
                m.rows[k][j] = c
        return m

    # --------------------------------------------------------- validation

    def validate(self):
        pz = self.parity
        for (i, j), comp in self._table.items():
            want = (pz[i] + pz[j]) % 2
            for k, c in comp.items():
                if not c:
                    continue
                if pz[k] != want:
                    raise ValidationError(
                        "bracket [%s,%s] has a component of wrong parity"
                        % (self.labels[i], self.labels[j]))
        for i in range(self.dim):
            for j in range(self.dim):
                a = self.bracket_basis(i, j)
                b = self.bracket_basis(j, i)
                sign = -1 if (pz[i] * pz[j]) % 2 == 0 else 1
                mirror = {k: sign * c for k, c in a.items()}
                if {k: c for k, c in mirror.items() if c} != \
                   {k: c for k, c in b.items() if c}:
                    raise ValidationError(
                        "super antisymmetry fails for (%d, %d)" % (i, j))
                if i == j and pz[i] == 0 and a:
                    raise ValidationError(
                        "[x, x] must vanish for even x (index %d)" % i)
        for i in range(self.dim):
            ei = {i: ONE}
            for j in range(self.dim):
                sign = -1 if (pz[i] * pz[j]) % 2 else 1
                bij = self.bracket_basis(i, j)
                for k in range(self.dim):
                    lhs = self.bracket(ei, self.bracket_basis(j, k))
                    rhs = self.bracket(bij, {k: ONE})
                    vec_add_scaled(rhs, self.bracket({j: ONE},
                                                     self.bracket_basis(i, k)),
                                   sign)
                    vec_add_scaled(lhs, rhs, -1)
                    if lhs:
                        raise ValidationError(
                            "super Jacobi identity fails on (%d,%d,%d)"
                            % (i, j, k))
        return True

    # ------------------------------------------------------------ queries

    def even_indices(self):
        return [k for k in range(self.dim) if self.parity[k] == 0]

    def odd_indices(self):
        return [k for k in range(self.dim) if self.parity[k] == 1]

    def superdimension(self):
        return (len(self.even_indices()), len(self.odd_indices()))

    def compute_weights(self):
        """Weight tuple of each basis vector under ad of the Cartan basis
        elements; requires each ad(cartan) to be diagonal on the basis."""
        if not self.cartan:
            self.weights = [()] * self.dim
            return self.weights
        weights = []
        for j in range(self.dim):
            w = []
            for c in self.cartan:
                comp = self.bracket_basis(c, j)
                extra = {k: v for k, v in comp.items() if k != j}
                if any(extra.values()):
                    raise ValidationError(
                        "basis vector %d is not an ad-eigenvector of the "
                        "Cartan subalgebra" % j)
                w.append(comp.get(j, GaussianRational(0)))
            weights.append(tuple(w))
        self.weights = weights
        return weights

    # -------------------------------------------------------------- JSON

    def to_json(self):
        brackets = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                if i == j and self.parity[i] == 0:
                    continue
                comp = self.bracket_basis(i, j)
                if comp:
                    brackets.append(
                        [i, j, [[k, format_scalar(c)]
                                for k, c in sorted(comp.items())]])
        out = {
            "dim": self.dim,
            "parity": list(self.parity),
            "labels": self.labels,
            "brackets": brackets,
            "cartan": self.cartan,
            "nilpos": self.nilpos,
            "nilneg": self.nilneg,
        }
        if self.weights is not None:
            out["weights"] = [[format_scalar(c) for c in w]
                              for w in self.weights]
        return out

    @classmethod
    def from_json(cls, data):
        brackets = {}
        for i, j, comps in data["brackets"]:
            brackets[(i, j)] = {k: parse_scalar(c) for k, c in comps}
        weights = None
        if data.get("weights") is not None:
            weights = [tuple(parse_scalar(c) for c in w)
                       for w in data["weights"]]
        return cls(data["parity"], brackets, labels=data.get("labels"),
                   cartan=data.get("cartan"), nilpos=data.get("nilpos"),
                   nilneg=data.get("nilneg"), weights=weights)

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


# ----------------------------------------------------------- construction


class Coordinatizer:
    """Expresses vectors in terms of a fixed independent spanning list."""

    def __init__(self, ambient_dim):
        self.ambient = ambient_dim
        self.count = 0
        self._ech = Echelon()

    def add(self, vec):
        row = dict(vec)
        row[self.ambient + self.count] = GaussianRational(-1)
        if self._ech.insert(row) is None or \
                min(self._ech.pivot_rows) >= self.ambient:
            raise ValidationError("basis vectors are linearly dependent")
        self.count += 1

    def coords(self, vec):
        res = self._ech.residue(dict(vec))
        if any(k < self.ambient for k in res):
            return None
        return {k - self.ambient: c for k, c in res.items()}


def _flatten(mat):
    out = {}
    for r, row in enumerate(mat.rows):
        for c, val in row.items():
            out[r * mat.ncols + c] = val
    return out


def matrix_superbracket(a, b, pa, pb):
    sign = -1 if (pa * pb) % 2 == 0 else 1
    return a.matmul(b).add(b.matmul(a), sign)


def from_matrix_basis(mats, parities, labels=None, cartan=None,
                      nilpos=None, nilneg=None, metadata=None,
                      guard_dim=None):
    """Lie superalgebra of a list of square matrices closed under the
    superbracket; structure constants found by exact coordinatization."""
    check_guard(len(mats), guard_dim)
    n = mats[0].nrows
    coord = Coordinatizer(n * n)
    for m in mats:
        coord.add(_flatten(m))
    brackets = {}
    for i in range(len(mats)):
        for j in range(i, len(mats)):
            if i == j and parities[i] == 0:
                continue
            br = matrix_superbracket(mats[i], mats[j],
                                     parities[i], parities[j])
            comp = coord.coords(_flatten(br))
            if comp is None:
                raise ValidationError(
                    "matrix list is not closed under the superbracket")
            if comp:
                brackets[(i, j)] = comp
    meta = dict(metadata or {})
    meta["matrix_basis"] = mats
    alg = LieSuperalgebra(parities, brackets, labels=labels, cartan=cartan,
                          nilpos=nilpos, nilneg=nilneg, metadata=meta)
    if cartan:
        alg.compute_weights()
    return alg


def _gl_unit(size, r, c):
    m = ExactMatrix(size, size)
    m.rows[r][c] = ONE
    return m


def build_gl(m, n, guard_dim=None):
    """gl(m|n): all matrix units on C^(m|n)."""
    size = m + n
    check_guard(size * size, guard_dim)
    vp = [0] * m + [1] * n
    mats, parities, labels = [], [], []
    cartan, nilpos, nilneg = [], [], []
    for a in range(size):
        for b in range(size):
            idx = len(mats)
            mats.append(_gl_unit(size, a, b))
            parities.append((vp[a] + vp[b]) % 2)
            labels.append("E[%d,%d]" % (a + 1, b + 1))
            if a == b:
                cartan.append(idx)
            elif a < b:
                nilpos.append(idx)
            else:
                nilneg.append(idx)
    alg = from_matrix_basis(mats, parities, labels, cartan, nilpos, nilneg,
                            metadata={"family": "gl", "shape": (m, n),
                                      "vector_parity": vp},
                            guard_dim=guard_dim)
    alg.metadata["weight_lattice"] = _lattice_from_vectors(
        [_diag_weight(vp, a, cartan_kind="gl") for a in range(size)])
    return alg


def build_sl(m, n, guard_dim=None):
    """sl(m|n): supertrace-zero matrices on C^(m|n)."""
    size = m + n
    if m == n:
        raise ValidationError("sl(n|n) is not handled (center issues); "
                              "use gl or a quotient instead")
    vp = [0] * m + [1] * n
    mats, parities, labels = [], [], []
    cartan, nilpos, nilneg = [], [], []
    for a in range(size):
        for b in range(size):
            if a == b:
                continue
            idx = len(mats)
            mats.append(_gl_unit(size, a, b))
            parities.append((vp[a] + vp[b]) % 2)
            labels.append("E[%d,%d]" % (a + 1, b + 1))
            (nilpos if a < b else nilneg).append(idx)
    for a in range(size - 1):
        # supertrace-zero diagonal: (-1)^{|a|} E_aa - (-1)^{|a+1|} E_{a+1,a+1}
        d = ExactMatrix(size, size)
        d.rows[a][a] = as_scalar(1 if vp[a] == 0 else -1)
        d.rows[a + 1][a + 1] = as_scalar(-1 if vp[a + 1] == 0 else 1)
        cartan.append(len(mats))
        mats.append(d)
        parities.append(0)
        labels.append("h%d" % (a + 1))
    alg = from_matrix_basis(mats, parities, labels, cartan, nilpos, nilneg,
                            metadata={"family": "sl", "shape": (m, n),
                                      "vector_parity": vp},
                            guard_dim=guard_dim)
    alg.metadata["weight_lattice"] = _defining_weight_lattice(alg)
    return alg


def build_osp(n, guard_dim=None):
    """osp(1|2n) on C^(1|2n), preserving the standard even supersymmetric
    form (symmetric 1x1 on the even line, symplectic on the odd part)."""
    size = 1 + 2 * n
    vp = [0] + [1] * (2 * n)
    # weights of the defining basis: v0 -> 0, p_i -> e_i, q_i -> -e_i
    def wt(a):
        if a == 0:
            return (0,) * n
        i, sgn = (a - 1) % n, (1 if a <= n else -1)
        return tuple(sgn if k == i else 0 for k in range(n))

    gram = ExactMatrix(size, size)
    gram.rows[0][0] = ONE
    for i in range(n):
        gram.rows[1 + i][1 + n + i] = ONE
        gram.rows[1 + n + i][1 + i] = as_scalar(-1)

    mats, parities, labels = _form_preserving_basis(vp, wt, gram)
    check_guard(len(mats), guard_dim)
    # replace the solver's weight-zero even solutions by the normalized
    # diagonal Cartan basis h_i = diag(0, e_i, -e_i) (fixes signs)
    zero_even = [k for k, m in enumerate(mats)
                 if parities[k] == 0 and _ad_weight_of(m, wt, vp) == (0,) * n]
    if len(zero_even) != n:
        raise ValidationError("unexpected Cartan dimension in osp(1|%d)"
                              % (2 * n))
    keep = [k for k in range(len(mats)) if k not in set(zero_even)]
    mats = [mats[k] for k in keep]
    parities = [parities[k] for k in keep]
    labels = [labels[k] for k in keep]
    cartan = []
    for i in range(n):
        h = ExactMatrix(size, size)
        h.rows[1 + i][1 + i] = ONE
        h.rows[1 + n + i][1 + n + i] = as_scalar(-1)
        cartan.append(len(mats))
        mats.append(h)
        parities.append(0)
        labels.append("h%d" % (i + 1))
    nilpos, nilneg = [], []
    for k, m in enumerate(mats):
        w = _ad_weight_of(m, wt, vp)
        if w > (0,) * n:
            nilpos.append(k)
        elif w < (0,) * n:
            nilneg.append(k)
    alg = from_matrix_basis(mats, parities, labels, cartan, nilpos, nilneg,
                            metadata={"family": "osp", "shape": (1, 2 * n),
                                      "vector_parity": vp},
                            guard_dim=guard_dim)
    alg.metadata["weight_lattice"] = _defining_weight_lattice(alg)
    ev, od = alg.superdimension()
    if (ev, od) != (2 * n * n + n, 2 * n):
        raise ValidationError("osp(1|%d) has unexpected superdimension "
                              "(%d|%d)" % (2 * n, ev, od))
    return alg


def build_p(n, guard_dim=None):
    """p(n) in gl(n+1|n+1): blocks [[A, B], [C, -A^t]] with A traceless,
    B symmetric, C antisymmetric."""
    sz = n + 1
    size = 2 * sz
    check_guard(2 * sz * sz + sz, guard_dim)
    mats, parities, labels = [], [], []
    cartan, nilpos, nilneg = [], [], []

    def embed_A(amat):
        m = ExactMatrix(size, size)
        for r, row in enumerate(amat.rows):
            for c, v in row.items():
                m.rows[r][c] = v
                m.add_at(sz + c, sz + r, -v)
        return m

    for a in range(sz):
        for b in range(sz):
            if a == b:
                continue
            idx = len(mats)
            mats.append(embed_A(_gl_unit(sz, a, b)))
            parities.append(0)
            labels.append("A[%d,%d]" % (a + 1, b + 1))
            (nilpos if a < b else nilneg).append(idx)
    for a in range(n):
        d = ExactMatrix(sz, sz)
        d.rows[a][a] = ONE
        d.rows[a + 1][a + 1] = as_scalar(-1)
        cartan.append(len(mats))
        mats.append(embed_A(d))
        parities.append(0)
        labels.append("h%d" % (a + 1))
    for a in range(sz):          # B symmetric: degree +1 part
        for b in range(a, sz):
            m = ExactMatrix(size, size)
            m.rows[a][sz + b] = ONE
            if b != a:
                m.rows[b][sz + a] = ONE
            nilpos.append(len(mats))
            mats.append(m)
            parities.append(1)
            labels.append("B[%d,%d]" % (a + 1, b + 1))
    for a in range(sz):          # C antisymmetric: degree -1 part
        for b in range(a + 1, sz):
            m = ExactMatrix(size, size)
            m.rows[sz + a][b] = ONE
            m.rows[sz + b][a] = as_scalar(-1)
            nilneg.append(len(mats))
            mats.append(m)
            parities.append(1)
            labels.append("C[%d,%d]" % (a + 1, b + 1))
    alg = from_matrix_basis(mats, parities, labels, cartan, nilpos, nilneg,
                            metadata={"family": "p", "shape": (sz, sz),
                                      "vector_parity": [0] * sz + [1] * sz},
                            guard_dim=guard_dim)
    alg.metadata["weight_lattice"] = _defining_weight_lattice(alg)
    return alg


def build_q(n, guard_dim=None):
    """q(n) in gl(n|n): blocks [[A, B], [B, A]]."""
    size = 2 * n
    check_guard(2 * n * n, guard_dim)
    mats, parities, labels = [], [], []
    cartan, nilpos, nilneg = [], [], []
    for a in range(n):
        for b in range(n):
            m = ExactMatrix(size, size)
            m.rows[a][b] = ONE
            m.rows[n + a][n + b] = ONE
            idx = len(mats)
            mats.append(m)
            parities.append(0)
            labels.append("A[%d,%d]" % (a + 1, b + 1))
            if a == b:
                cartan.append(idx)
            elif a < b:
                nilpos.append(idx)
            else:
                nilneg.append(idx)
    for a in range(n):
        for b in range(n):
            m = ExactMatrix(size, size)
            m.rows[a][n + b] = ONE
            m.rows[n + a][b] = ONE
            idx = len(mats)
            mats.append(m)
            parities.append(1)
            labels.append("B[%d,%d]" % (a + 1, b + 1))
            if a < b:
                nilpos.append(idx)
            elif a > b:
                nilneg.append(idx)
    return from_matrix_basis(mats, parities, labels, cartan, nilpos, nilneg,
                             metadata={"family": "q", "shape": (n, n),
                                       "vector_parity": [0] * n + [1] * n},
                             guard_dim=guard_dim)


def build_classical(kind, m=0, n=0, guard_dim=None):
    if kind == "gl":
        return build_gl(m, n, guard_dim)
    if kind == "sl":
        return build_sl(m, n, guard_dim)
    if kind == "osp":
        return build_osp(n, guard_dim)
    if kind == "p":
        return build_p(n, guard_dim)
    if kind == "q":
        return build_q(n, guard_dim)
    raise ValidationError("unknown family %r" % kind)


def _is_diagonal(m):
    return all(all(r == c for c in row) for r, row in enumerate(m.rows))


def _ad_weight_of(m, wt, vp):
    """Weight of a matrix spanning a single weight space: w_row - w_col
    of any nonzero entry (diagonal matrices have weight zero)."""
    n = len(wt(0))
    for r, row in enumerate(m.rows):
        for c in row:
            if r != c:
                return tuple(a - b for a, b in zip(wt(r), wt(c)))
    return (0,) * n


def _form_preserving_basis(vp, wt, gram):
    """Basis, grouped by (parity, ad-weight), of the matrices X with
    beta(X u, v) + (-1)^{|X||u|} beta(u, X v) = 0 for the bilinear form
    with Gram matrix `gram` (beta(e_a, e_b) = gram[a][b])."""
    size = len(vp)
    groups = {}
    for a in range(size):
        for b in range(size):
            par = (vp[a] + vp[b]) % 2
            w = tuple(x - y for x, y in zip(wt(a), wt(b)))
            groups.setdefault((par, w), []).append((a, b))
    mats, parities, labels = [], [], []
    order = sorted(groups, key=lambda pw: (tuple(-x for x in pw[1]), pw[0]))
    for (par, w) in order:
        units = groups[(par, w)]
        col_of = {ab: k for k, ab in enumerate(units)}
        equations = {}
        for c in range(size):
            for d in range(size):
                row = {}
                for a in range(size):
                    gad = gram.entry(a, d)
                    if gad and (a, c) in col_of:
                        row[col_of[(a, c)]] = row.get(
                            col_of[(a, c)], GaussianRational(0)) + gad
                    gca = gram.entry(c, a)
                    if gca and (a, d) in col_of:
                        sgn = -1 if (par * vp[c]) % 2 else 1
                        cur = row.get(col_of[(a, d)], GaussianRational(0))
                        row[col_of[(a, d)]] = cur + sgn * gca
                row = {k: v for k, v in row.items() if v}
                if row:
                    equations[(c, d)] = row
        sys = ExactMatrix(len(equations), len(units),
                          rows=list(equations.values()))
        for sol in kernel_basis(sys):
            m = ExactMatrix(size, size)
            for k, coeff in sorted(sol.items()):
                a, b = units[k]
                m.add_at(a, b, coeff)
            mats.append(m)
            parities.append(par)
            labels.append("x[w=%s]#%d"
                          % (",".join(str(x) for x in w), len(mats)))
    return mats, parities, labels


def _diag_weight(vp, a, cartan_kind):
    # weight of the defining basis vector e_a for gl: the indicator tuple
    return tuple(1 if k == a else 0 for k in range(len(vp)))


def _defining_weight_lattice(alg):
    """Lattice generated by the weights of the defining representation,
    read off from ad-diagonal matrix realizations: the weight of e_a is
    (h -> h[a,a]) over the recorded Cartan basis."""
    mats = alg.metadata["matrix_basis"]
    size = mats[0].nrows
    vecs = []
    for a in range(size):
        vecs.append(tuple(mats[c].entry(a, a) for c in alg.cartan))
    return _lattice_from_vectors(vecs)


def _lattice_from_vectors(vecs):
    """Integer basis (list of int tuples) of the lattice generated by the
    given rational vectors; requires them to be integral."""
    rows = []
    for v in vecs:
        row = []
        for x in v:
            x = as_scalar(x)
            if x.b != 0 or x.d != 1:
                raise ValidationError("non-integral weight %s" % x)
            row.append(x.a)
        rows.append(row)
    return hermite_basis(rows)


# ------------------------------------------------- integer lattice tools

def hermite_basis(rows):
    """Row-style Hermite reduction: independent integer basis rows."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = {}
    for row in rows:
        row = list(row)
        while True:
            lead = next((c for c in range(ncols) if row[c]), None)
            if lead is None:
                break
            if lead not in basis:
                if row[lead] < 0:
                    row = [-x for x in row]
                basis[lead] = row
                break
            b = basis[lead]
            if abs(row[lead]) < abs(b[lead]):
                basis[lead], row = row, b
                if basis[lead][lead] < 0:
                    basis[lead] = [-x for x in basis[lead]]
                b = basis[lead]
            q = row[lead] // b[lead]
            row = [x - q * y for x, y in zip(row, b)]
    return [tuple(basis[c]) for c in sorted(basis)]


def smith_normal_form(rows):
    """Smith normal form of an integer matrix (list of lists).

    Returns (divisors, V) where divisors are the nonzero diagonal entries
    and V is the unimodular column transform: the class of an integer
    vector x in Z^n / rowspace is given by (x V) mod divisors (columns
    beyond len(divisors) are free Z coordinates)."""
    m = [list(r) for r in rows]
    if not m:
        return [], None
    nr, nc = len(m), len(m[0])
    V = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    r = c = 0
    while r < nr and c < nc:
        pr = next(((i, j) for i in range(r, nr) for j in range(c, nc)
                   if m[i][j]), None)
        if pr is None:
            break
        i0, j0 = pr
        m[r], m[i0] = m[i0], m[r]
        for row in m:
            row[c], row[j0] = row[j0], row[c]
        for i in range(nc):
            V[i][c], V[i][j0] = V[i][j0], V[i][c]
        while True:
            done = True
            for i in range(r + 1, nr):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    for j in range(nc):
                        m[i][j] -= q * m[r][j]
                    if m[i][c]:
                        m[r], m[i] = m[i], m[r]
                        done = False
            for j in range(c + 1, nc):
                if m[r][j]:
                    q = m[r][j] // m[r][c]
                    for i in range(nr):
                        m[i][j] -= q * m[i][c]
                    for i in range(nc):
                        V[i][j] -= q * V[i][c]
                    if m[r][j]:
                        for i in range(nr):
                            m[i][c], m[i][j] = m[i][j], m[i][c]
                        for i in range(nc):
                            V[i][c], V[i][j] = V[i][j], V[i][c]
                        done = False
            if done:
                break
        r += 1
        c += 1
    divisors = []
    for k in range(min(nr, nc)):
        if m[k][k]:
            divisors.append(abs(m[k][k]))
    # enforce divisibility chain
    for a in range(len(divisors)):
        for b in range(a + 1, len(divisors)):
            da, db = divisors[a], divisors[b]
            from math import gcd
            g = gcd(da, db)
            divisors[a], divisors[b] = g, da * db // g
    return divisors, V


# ---------------------------------------------------------- derived data

class RootData:
    def __init__(self, roots, positive, weight_lattice, root_lattice,
                 divisors):
        self.roots = roots                  # list of (weight, parity, mult)
        self.positive = positive            # subset of weights
        self.weight_lattice = weight_lattice
        self.root_lattice = root_lattice
        self.divisors = divisors            # elementary divisors of L/Q

    def quotient_order(self):
        total = 1
        for d in self.divisors:
            if d == 0:
                return 0
            total *= d
        return total


def root_data(alg):
    """Roots, positivity (from the recorded nilpotent radicals), and the
    quotient of the weight lattice by the root lattice."""
    if alg.weights is None:
        alg.compute_weights()
    zero = (GaussianRational(0),) * len(alg.cartan)
    mult = {}
    for k in range((alg.dim)):
        w = alg.weights[k]
        if w != zero:
            key = (w, alg.parity[k])
            mult[key] = mult.get(key, 0) + 1
    roots = [(w, p, m) for (w, p), m in sorted(
        mult.items(), key=lambda kv: (tuple(str(x) for x in kv[0][0]),
                                      kv[0][1]))]
    positive = sorted({alg.weights[k] for k in alg.nilpos},
                      key=lambda w: tuple(str(x) for x in w))
    root_lat = _lattice_from_vectors([w for (w, p, m) in roots])
    wl = alg.metadata.get("weight_lattice")
    divisors = None
    if wl:
        divisors = lattice_quotient_divisors(wl, root_lat)
    return RootData(roots, positive, wl, root_lat, divisors)


def lattice_quotient_divisors(big_basis, sub_vectors):
    """Elementary divisors of (lattice spanned by big_basis) modulo the
    sublattice generated by sub_vectors, dropping trivial factors."""
    coords = [lattice_coordinates(big_basis, v) for v in sub_vectors]
    if any(c is None for c in coords):
        raise ValidationError("sublattice not contained in lattice")
    k = len(big_basis)
    if not coords:
        return [0] * k
    raw, _ = smith_normal_form(coords)
    divisors = [d for d in raw if d != 1]
    return divisors + [0] * (k - len(raw))


def lattice_coordinates(basis, vec):
    """Integer coordinates of vec in the given lattice basis, or None."""
    work = [int(x) for x in vec]
    coords = [0] * len(basis)
    for k, b in enumerate(basis):
        lead = next(c for c in range(len(b)) if b[c])
        if work[lead] % b[lead] != 0:
            return None
        q = work[lead] // b[lead]
        coords[k] = q
        work = [x - q * y for x, y in zip(work, b)]
    if any(work):
        return None
    return coords


def lattice_class(big_basis, sub_vectors, vec):
    """Class of vec in lattice(big_basis)/lattice(sub_vectors), as a tuple
    of residues (Smith coordinates).  vec must lie in the big lattice."""
    coords = lattice_coordinates(big_basis, vec)
    if coords is None:
        raise ValidationError("vector outside the weight lattice")
    sub_coords = [lattice_coordinates(big_basis, v) for v in sub_vectors]
    if any(c is None for c in sub_coords):
        raise ValidationError("sublattice not contained in lattice")
    k = len(big_basis)
    if not sub_coords:
        return tuple(coords)
    divisors, V = smith_normal_form(sub_coords)
    y = [sum(coords[i] * V[i][j] for i in range(k)) for j in range(k)]
    out = []
    for j in range(k):
        if j < len(divisors) and divisors[j]:
            out.append(y[j] % divisors[j])
        else:
            out.append(y[j])
    return tuple(out)


# ------------------------------------------------------------ operations

def direct_sum(g1, g2):
    parity = list(g1.parity) + list(g2.parity)
    brackets = {}
    off = g1.dim
    for (i, j), comp in g1._table.items():
        brackets[(i, j)] = dict(comp)
    for (i, j), comp in g2._table.items():
        brackets[(i + off, j + off)] = {k + off: c for k, c in comp.items()}
    weights = None
    if g1.weights is not None and g2.weights is not None:
        z1 = (GaussianRational(0),) * len(g2.cartan)
        z2 = (GaussianRational(0),) * len(g1.cartan)
        weights = [w + z1 for w in g1.weights] + \
                  [z2 + w for w in g2.weights]
    return LieSuperalgebra(
        parity, brackets,
        labels=["L." + s for s in g1.labels] + ["R." + s for s in g2.labels],
        cartan=g1.cartan + [c + off for c in g2.cartan],
        nilpos=g1.nilpos + [k + off for k in g2.nilpos],
        nilneg=g1.nilneg + [k + off for k in g2.nilneg],
        weights=weights)


def subalgebra_on_indices(alg, indices):
    """The subalgebra spanned by a subset of basis vectors (must close)."""
    pos = {gi: k for k, gi in enumerate(indices)}
    brackets = {}
    for a, gi in enumerate(indices):
        for b, gj in enumerate(indices):
            comp = alg.bracket_basis(gi, gj)
            out = {}
            for k, c in comp.items():
                if k not in pos:
                    raise ValidationError(
                        "index set does not span a subalgebra")
                out[pos[k]] = c
            if out:
                brackets[(a, b)] = out
    return LieSuperalgebra(
        [alg.parity[i] for i in indices], brackets,
        labels=[alg.labels[i] for i in indices],
        cartan=[pos[c] for c in alg.cartan if c in pos],
        nilpos=[pos[c] for c in alg.nilpos if c in pos],
        nilneg=[pos[c] for c in alg.nilneg if c in pos],
        weights=None if alg.weights is None else
        [alg.weights[i] for i in indices])


def quotient_by_indices(alg, ideal_indices):
    """Quotient by the ideal spanned by a subset of basis vectors; the
    remaining basis vectors descend to a basis of the quotient."""
    ideal = set(ideal_indices)
    keep = [k for k in range(alg.dim) if k not in ideal]
    # check ideal property: [L, ideal] stays in the ideal span
    for i in range(alg.dim):
        for j in ideal:
            if any(k not in ideal for k in alg.bracket_basis(i, j)):
                raise ValidationError("index set is not an ideal")
    pos = {gi: k for k, gi in enumerate(keep)}
    brackets = {}
    for a, gi in enumerate(keep):
        for b, gj in enumerate(keep):
            comp = {pos[k]: c for k, c in alg.bracket_basis(gi, gj).items()
                    if k in pos}
            if comp:
                brackets[(a, b)] = comp
    return LieSuperalgebra(
        [alg.parity[i] for i in keep], brackets,
        labels=[alg.labels[i] for i in keep],
        cartan=[pos[c] for c in alg.cartan if c in pos],
        nilpos=[pos[c] for c in alg.nilpos if c in pos],
        nilneg=[pos[c] for c in alg.nilneg if c in pos],
        weights=None if alg.weights is None else
        [alg.weights[i] for i in keep]), keep


def bracket_span(alg, sub1, sub2):
    """Span of all brackets [u, v] with u in sub1, v in sub2."""
    vecs = []
    for u in sub1.basis():
        for v in sub2.basis():
            b = alg.bracket(u, v)
            if b:
                vecs.append(b)
    return Subspace(alg.dim, vecs)


def rebase(alg, basis_vectors, parities=None):
    """Structure constants in a new basis given by coordinate vectors in
    the old basis (each must be parity homogeneous)."""
    coord = Coordinatizer(alg.dim)
    for v in basis_vectors:
        coord.add(v)
    if parities is None:
        parities = []
        for v in basis_vectors:
            ps = {alg.parity[i] for i in v}
            if len(ps) != 1:
                raise ValidationError("new basis vector mixes parities")
            parities.append(ps.pop())
    brackets = {}
    for i, u in enumerate(basis_vectors):
        for j, v in enumerate(basis_vectors):
            comp = coord.coords(alg.bracket(u, v))
            if comp is None:
                raise ValidationError("new basis does not span the algebra")
            if comp:
                brackets[(i, j)] = comp
    return LieSuperalgebra(parities, brackets)
