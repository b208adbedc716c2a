"""Sparse exact linear algebra over the Gaussian rationals.

Vectors are dicts {column_index: GaussianRational} holding only nonzero
entries.  Matrices store a list of such row dicts.  All ranks, kernels and
solves are exact; for very wide systems an independent rank computation
over a random prime field is run as a consistency assertion (never as the
answer).
"""

import random

from .scalars import GaussianRational, as_scalar, ONE

# matrices at least this wide get the modular consistency cross-check
MODULAR_CHECK_MIN_COLS = 5000


class LinalgError(Exception):
    pass


# ---------------------------------------------------------------- vectors

def vec_scale(v, c):
    c = as_scalar(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_add_scaled(dst, src, c):
    """dst += c * src, in place; returns dst."""
    c = as_scalar(c)
    if not c:
        return dst
    for k, x in src.items():
        s = dst.get(k)
        s = c * x if s is None else s + c * x
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)
    return dst


def vec_dot(u, v):
    if len(u) > len(v):
        u, v = v, u
    total = GaussianRational(0)
    for k, x in u.items():
        y = v.get(k)
        if y is not None:
            total = total + x * y
    return total


def vec_equal(u, v):
    return _clean(u) == _clean(v)


def _clean(v):
    return {k: x for k, x in v.items() if x}


# ---------------------------------------------------------------- matrices

class ExactMatrix:
    """Sparse matrix over Q(i): a list of row dicts {col: scalar}."""

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        m = cls(nrows, ncols)
        for r, c, val in entries:
            m.add_at(r, c, val)
        return m

    @classmethod
    def from_dense(cls, rows_of_scalars):
        nrows = len(rows_of_scalars)
        ncols = len(rows_of_scalars[0]) if nrows else 0
        m = cls(nrows, ncols)
        for r, row in enumerate(rows_of_scalars):
            for c, val in enumerate(row):
                val = as_scalar(val)
                if val:
                    m.rows[r][c] = val
        return m

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for k in range(n):
            m.rows[k][k] = ONE
        return m

    def add_at(self, r, c, val):
        val = as_scalar(val)
        if not val:
            return
        row = self.rows[r]
        cur = row.get(c)
        cur = val if cur is None else cur + val
        if cur:
            row[c] = cur
        else:
            row.pop(c, None)

    def entry(self, r, c):
        return self.rows[r].get(c, GaussianRational(0))

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def transpose(self):
        t = ExactMatrix(self.ncols, self.nrows)
        for r, row in enumerate(self.rows):
            for c, val in row.items():
                t.rows[c][r] = val
        return t

    def matvec(self, v):
        """Matrix times column vector (dict over self.ncols)."""
        out = {}
        for r, row in enumerate(self.rows):
            s = vec_dot(row, v)
            if s:
                out[r] = s
        return out

    def vecmat(self, v):
        """Row vector (dict over self.nrows) times matrix."""
        out = {}
        for r, c in v.items():
            vec_add_scaled(out, self.rows[r], c)
        return out

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise LinalgError("shape mismatch in matmul")
        out = ExactMatrix(self.nrows, other.ncols)
        for r, row in enumerate(self.rows):
            acc = out.rows[r]
            for k, val in row.items():
                vec_add_scaled(acc, other.rows[k], val)
        return out

    def add(self, other, coeff=1):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise LinalgError("shape mismatch in add")
        out = ExactMatrix(self.nrows, self.ncols,
                          [dict(r) for r in self.rows])
        for r, row in enumerate(other.rows):
            vec_add_scaled(out.rows[r], row, coeff)
        return out

    def scale(self, c):
        return ExactMatrix(self.nrows, self.ncols,
                           [vec_scale(r, c) for r in self.rows])

    def is_zero(self):
        return all(not r for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix)
                and self.nrows == other.nrows and self.ncols == other.ncols
                and all(_clean(a) == _clean(b)
                        for a, b in zip(self.rows, other.rows)))


# ------------------------------------------------------------- elimination

class Echelon:
    """Row echelon accumulator: pivot column -> row with leading 1 there."""

    def __init__(self):
        self.pivot_rows = {}   # col -> row dict, row[col] == 1

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce_vector(self, v):
        """Return v minus its projection onto the row space."""
        v = dict(v)
        while v:
            c = min(v)
            piv = self.pivot_rows.get(c)
            if piv is None:
                break
            vec_add_scaled(v, piv, -v[c])
        return v

    def residue(self, v):
        """Fully reduce v by all pivots (not only leading ones)."""
        v = dict(v)
        for c in sorted(set(v) & set(self.pivot_rows)):
            if c in v:
                vec_add_scaled(v, self.pivot_rows[c], -v[c])
        # leading-position reduction may expose more pivot columns
        changed = True
        while changed:
            changed = False
            for c in list(v):
                if c in self.pivot_rows and c in v:
                    vec_add_scaled(v, self.pivot_rows[c], -v[c])
                    changed = True
        return v

    def insert(self, v):
        """Reduce v and, if independent, add it as a new pivot row.

        Returns the new pivot column, or None if v was dependent."""
        v = self.reduce_vector(v)
        if not v:
            return None
        c = min(v)
        lead = v[c]
        if lead != ONE:
            inv = ONE / lead
            v = {k: inv * x for k, x in v.items()}
        self.pivot_rows[c] = v
        return c

    def back_substitute(self):
        """Turn the echelon into fully reduced form (RREF rows)."""
        for c in sorted(self.pivot_rows, reverse=True):
            row = self.pivot_rows[c]
            for c2 in sorted(set(row) & set(self.pivot_rows)):
                if c2 != c and c2 in row:
                    vec_add_scaled(row, self.pivot_rows[c2], -row[c2])

    def rref_rows(self):
        self.back_substitute()
        return [self.pivot_rows[c] for c in sorted(self.pivot_rows)]


def echelon_of(matrix_or_rows):
    rows = matrix_or_rows.rows if isinstance(matrix_or_rows, ExactMatrix) \
        else matrix_or_rows
    ech = Echelon()
    for row in rows:
        if row:
            ech.insert(row)
    return ech


def rank(matrix, modular_check=None):
    """Exact rank.  For wide matrices a modular rank over a random prime
    is computed independently and asserted to agree."""
    ech = echelon_of(matrix)
    r = ech.rank
    wide = isinstance(matrix, ExactMatrix) and \
        matrix.ncols >= MODULAR_CHECK_MIN_COLS
    if modular_check or (modular_check is None and wide):
        rm = _rank_mod_prime(matrix)
        if rm is not None and rm != r:
            raise LinalgError(
                "modular rank consistency check failed: %d (mod p) vs %d"
                % (rm, r))
    return r


def rref(matrix):
    """Returns (rank, pivot_columns, rref_rows)."""
    ech = echelon_of(matrix)
    rows = ech.rref_rows()
    return ech.rank, sorted(ech.pivot_rows), rows


def kernel_basis(matrix):
    """Basis of the right kernel {v : A v = 0}, as vectors over ncols."""
    ncols = matrix.ncols
    ech = echelon_of(matrix)
    ech.back_substitute()
    pivots = ech.pivot_rows
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: ONE}
        for p, row in pivots.items():
            coeff = row.get(f)
            if coeff:
                v[p] = -coeff
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One solution x of A x = b, or None if inconsistent.

    rhs is a dict over row indices."""
    ncols = matrix.ncols
    ech = Echelon()
    AUG = ncols  # augmented column index
    for r, row in enumerate(matrix.rows):
        aug = dict(row)
        b = rhs.get(r)
        if b:
            aug[AUG] = b
        if aug:
            ech.insert(aug)
    if AUG in ech.pivot_rows:
        return None
    ech.back_substitute()
    x = {}
    for p, row in ech.pivot_rows.items():
        # each pivot row encodes x_p + sum_f row[f] x_f + row[AUG] z = 0
        # where z marks the right-hand side; solutions of A x = b have
        # z = -1, so with the free variables at zero, x_p = row[AUG]
        b = row.get(AUG)
        if b:
            x[p] = b
    return x


def solve_matrix(matrix, rhs_columns):
    """Solve A X = B column by column; returns list of solutions or None."""
    out = []
    for col in rhs_columns:
        s = solve(matrix, col)
        if s is None:
            return None
        out.append(s)
    return out


# ------------------------------------------------------------- subspaces

class Subspace:
    """Subspace of an ambient coordinate space, kept in RREF form."""

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        self._ech = Echelon()
        for v in vectors:
            if v:
                self._ech.insert(dict(v))
        self._ech.back_substitute()

    @property
    def dim(self):
        return self._ech.rank

    def basis(self):
        return self._ech.rref_rows()

    def contains(self, v):
        return not self._ech.reduce_vector(v)

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis())

    def add_vector(self, v):
        """Insert v; returns True if the dimension grew."""
        grew = self._ech.insert(dict(v)) is not None
        if grew:
            self._ech.back_substitute()
        return grew

    def sum(self, other):
        return Subspace(self.ambient_dim, self.basis() + other.basis())

    def intersect(self, other):
        u, w = self.basis(), other.basis()
        k = len(u)
        # columns: coefficients on u then on w; rows: ambient coordinates
        m = ExactMatrix(self.ambient_dim, k + len(w))
        for j, vec in enumerate(u):
            for amb, val in vec.items():
                m.rows[amb][j] = val
        for j, vec in enumerate(w):
            for amb, val in vec.items():
                m.add_at(amb, k + j, -val)
        vecs = []
        for coeffs in kernel_basis(m):
            v = {}
            for j, c in coeffs.items():
                if j < k:
                    vec_add_scaled(v, u[j], c)
            if v:
                vecs.append(v)
        return Subspace(self.ambient_dim, vecs)

    def coordinates_of(self, v):
        """Coefficients of v in terms of basis(), or None."""
        b = self.basis()
        m = ExactMatrix(self.ambient_dim, len(b))
        for j, vec in enumerate(b):
            for amb, val in vec.items():
                m.rows[amb][j] = val
        return solve(m, v)

    def __eq__(self, other):
        return (self.ambient_dim == other.ambient_dim
                and self.dim == other.dim and self.contains_space(other))


# --------------------------------------------------- modular consistency

def _rank_mod_prime(matrix, tries=3):
    """Rank over GF(p) for a random prime p = 1 mod 4 (so that i exists).

    Returns None if no suitable prime avoids all denominators."""
    for _ in range(tries):
        p = _random_prime_1mod4()
        root = _sqrt_minus_one(p)
        ok = True
        ech_rows = {}   # col -> row dict over GF(p)
        rk = 0
        for row in matrix.rows:
            v = {}
            for c, val in row.items():
                if val.d % p == 0:
                    ok = False
                    break
                dinv = pow(val.d, p - 2, p)
                x = (val.a + val.b * root) * dinv % p
                if x:
                    v[c] = x
            if not ok:
                break
            while v:
                c = min(v)
                piv = ech_rows.get(c)
                if piv is None:
                    inv = pow(v[c], p - 2, p)
                    ech_rows[c] = {k: x * inv % p for k, x in v.items()}
                    rk += 1
                    break
                f = v[c]
                for k, x in piv.items():
                    nv = (v.get(k, 0) - f * x) % p
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        if ok:
            return rk
    return None


def _random_prime_1mod4(bits=30):
    while True:
        n = random.getrandbits(bits) | 1
        if n % 4 == 1 and _is_prime(n):
            return n


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sqrt_minus_one(p):
    while True:
        a = random.randrange(2, p - 1)
        r = pow(a, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return r
