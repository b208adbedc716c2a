"""Z2-graded Chevalley-Eilenberg (co)homology with exact coefficients.

Chains: C_p(L, W) = (Lambda^p L) (x) W, where Lambda^p mixes exterior
powers of the even part with symmetric powers of the odd part.  A chain
basis element is (S, T, m): S strictly increasing even indices, T weakly
increasing odd indices, m a coefficient basis index.

The boundary on a word x_1 ... x_p (evens first, then odds) is

  d(x_1...x_p (x) v) =
      sum_i (-1)^{i + |x_i|(|x_{i+1}|+...+|x_p|)}
            x_1...^x_i...x_p (x) x_i.v
    + sum_{j<k} (-1)^{j+k+eta_j+eta_k+|x_j||x_k|}
            [x_j,x_k] x_1...^x_j...^x_k...x_p (x) v,

with eta_i = |x_i| (|x_1|+...+|x_{i-1}|).  Resorting a word into the
canonical order multiplies by -(-1)^{|u||v|} per adjacent swap.

Cochain differentials are the transposes of the boundary maps with
dualized coefficients: C^p(L; V, U) = hom(Lambda^p L (x) V, U) is
identified with (Lambda^p L (x) V (x) U^*)^*.  This pins all signs down
and makes d o d = 0 automatic; the identification is the standard
duality between the cohomology of a module and the homology of its
dual.  Ext groups are computed twice, through both dualization routes,
and the two answers must agree.

When the algebra and the coefficients carry exact weights for a common
Cartan family, every differential is block diagonal over (parity,
weight) and all ranks are computed block by block.
"""

from itertools import combinations, combinations_with_replacement

from .scalars import GaussianRational
from .linalg import ExactMatrix, Echelon, kernel_basis
from .superlie import ValidationError, quotient_by_indices
from .reps import Representation, dual_rep, tensor_rep, module_weights

DEFAULT_MAX_DEGREE = 3


class OracleMismatch(Exception):
    pass


# ------------------------------------------------------------ chain data

class ChainData:
    """Precomputed tables for boundary computations over (L, W)."""

    def __init__(self, L, W):
        if W.algebra is not L:
            raise ValidationError("coefficients live over a different "
                                  "algebra")
        self.L = L
        self.W = W
        self.Lpar = L.parity
        self.evens = L.even_indices()
        self.odds = L.odd_indices()
        self.bracket = L.bracket_basis
        # columns of each action matrix: Wcols[i][m] = {m2: coeff}
        self.Wcols = []
        for i in range(L.dim):
            cols = {}
            for r, row in enumerate(W.action[i].rows):
                for c, v in row.items():
                    cols.setdefault(c, {})[r] = v
            self.Wcols.append(cols)
        self.Lw = L.weights if L.cartan else None
        self.Ww = module_weights(W, strict=False) if self.Lw else None
        if self.Ww is None:
            self.Lw = None

    def word_weight_key(self, word):
        if self.Lw is None:
            return None
        total = tuple(GaussianRational(0) for _ in self.L.cartan)
        for x in word:
            total = tuple(a + b for a, b in zip(total, self.Lw[x]))
        return total

    def chain_key(self, word_wkey, word_parity, m):
        par = (word_parity + self.W.parity[m]) % 2
        if word_wkey is None:
            return (par, None)
        total = tuple(a + b for a, b in zip(word_wkey, self.Ww[m]))
        return (par, tuple((w.a, w.b, w.d) for w in total))

    # ------------------------------------------------------- enumeration

    def words(self, p):
        """All canonical words of length p as (S, T) pairs."""
        for j in range(p + 1):
            i = p - j
            if i > len(self.evens):
                continue
            for S in combinations(self.evens, i):
                for T in combinations_with_replacement(self.odds, j):
                    yield S, T

    # ---------------------------------------------------------- boundary

    def image(self, S, T, m):
        """Boundary of the chain basis element (S, T, m) as a dict keyed
        by (S', T', m')."""
        word = S + T
        p = len(word)
        pars = [self.Lpar[x] for x in word]
        suffix = [0] * (p + 1)
        for i in range(p - 1, -1, -1):
            suffix[i] = suffix[i + 1] + pars[i]
        prefix = [0] * (p + 1)
        for i in range(p):
            prefix[i + 1] = prefix[i] + pars[i]
        out = {}
        ns = len(S)

        def acc(key, val):
            cur = out.get(key)
            val = val if cur is None else cur + val
            if val:
                out[key] = val
            elif cur is not None:
                del out[key]

        for i0 in range(p):
            col = self.Wcols[word[i0]].get(m)
            if not col:
                continue
            e = (i0 + 1) + pars[i0] * suffix[i0 + 1]
            sgn = -1 if e % 2 else 1
            if i0 < ns:
                S2, T2 = S[:i0] + S[i0 + 1:], T
            else:
                j = i0 - ns
                S2, T2 = S, T[:j] + T[j + 1:]
            for m2, c in col.items():
                acc((S2, T2, m2), sgn * c)
        for j0 in range(p):
            for k0 in range(j0 + 1, p):
                comp = self.bracket(word[j0], word[k0])
                if not comp:
                    continue
                e = (j0 + 1) + (k0 + 1) + pars[j0] * prefix[j0] \
                    + pars[k0] * prefix[k0] + pars[j0] * pars[k0]
                base_sgn = -1 if e % 2 else 1
                rS = tuple(S[a] for a in range(ns)
                           if a != j0 and a != k0)
                rT = tuple(T[a] for a in range(len(T))
                           if a + ns != j0 and a + ns != k0)
                for c_idx, gamma in comp.items():
                    ins = self._insert_front(c_idx, rS, rT)
                    if ins is None:
                        continue
                    S2, T2, isgn = ins
                    acc((S2, T2, m), base_sgn * isgn * gamma)
        return out

    def _insert_front(self, c, S, T):
        """Sort the word [c] + S + T into canonical order; returns
        (S', T', sign) or None when the result vanishes."""
        if self.Lpar[c] == 0:
            if c in S:
                return None
            passed = sum(1 for u in S if u < c)
            S2 = S[:passed] + (c,) + S[passed:]
            return S2, T, (-1 if passed % 2 else 1)
        # odd letter: passes every even letter (sign -1 each), then
        # commutes freely with the odd letters
        passed = len(S)
        pos = 0
        while pos < len(T) and T[pos] < c:
            pos += 1
        T2 = T[:pos] + (c,) + T[pos:]
        return S, T2, (-1 if passed % 2 else 1)


# ------------------------------------------------------- rank machinery

def boundary_rank_split(data, p):
    """Ranks of d_p: C_p -> C_{p-1}, split by the parity of the domain
    chain element, computed independently on each (parity, weight)
    block."""
    ranks = {0: 0, 1: 0}
    if p <= 0:
        return ranks
    blocks = {}
    for S, T in data.words(p):
        word = S + T
        wpar = sum(data.Lpar[x] for x in word) % 2
        wkey = data.word_weight_key(word)
        for m in range(data.W.dim):
            img = data.image(S, T, m)
            if not img:
                continue
            key = data.chain_key(wkey, wpar, m)
            ech = blocks.get(key)
            if ech is None:
                ech = blocks[key] = Echelon()
            if ech.insert(img) is not None:
                ranks[key[0]] += 1
    return ranks


def chain_dims_split(data, p):
    dims = {0: 0, 1: 0}
    for S, T in data.words(p):
        wpar = sum(data.Lpar[x] for x in S + T) % 2
        for m in range(data.W.dim):
            dims[(wpar + data.W.parity[m]) % 2] += 1
    return dims


def homology_dims(L, W, p):
    """Dimensions {'even': ., 'odd': .} of H_p(L, W)."""
    data = ChainData(L, W)
    dims = chain_dims_split(data, p)
    r_in = boundary_rank_split(data, p + 1)
    r_out = boundary_rank_split(data, p)
    return {"even": dims[0] - r_in[0] - r_out[0],
            "odd": dims[1] - r_in[1] - r_out[1]}


def cohomology_dims(L, U, p):
    """H^p(L, U) via the dual chain complex with coefficients U^*."""
    return homology_dims(L, dual_rep(U), p)


def ext_dims(L, V, U, p, check=True):
    """Ext^p(V, U) as {'even', 'odd'}.

    Computed through hom(Lambda L (x) V, U) ~ (Lambda L (x) V (x) U^*)^*
    and, independently, through the cohomology of L with coefficients
    V^* (x) U; a disagreement raises OracleMismatch."""
    route_a = homology_dims(L, tensor_rep(V, dual_rep(U)), p)
    if check:
        route_b = homology_dims(
            L, dual_rep(tensor_rep(dual_rep(V), U)), p)
        if route_a != route_b:
            raise OracleMismatch(
                "Ext^%d routes disagree: %r vs %r" % (p, route_a, route_b))
    return route_a


# -------------------------------------------------- explicit differentials

def chain_index(data, p):
    """Chain basis of degree p in enumeration order, with its index map."""
    basis = []
    for S, T in data.words(p):
        for m in range(data.W.dim):
            basis.append((S, T, m))
    index = {b: k for k, b in enumerate(basis)}
    return basis, index


def boundary_matrix(data, p):
    """d_p as an ExactMatrix (rows: C_{p-1}, columns: C_p), plus the two
    bases."""
    basis_p, _ = chain_index(data, p)
    basis_q, index_q = chain_index(data, p - 1)
    mat = ExactMatrix(len(basis_q), len(basis_p))
    for col, (S, T, m) in enumerate(basis_p):
        for key, val in data.image(S, T, m).items():
            mat.rows[index_q[key]][col] = val
    return mat, basis_p, basis_q


def cocycle_representatives(L, U, p, max_count=20):
    """Representative degree-p cocycles for H^p(L, U), as coordinate
    vectors over the degree-p cochain basis (the chain basis over U^*)."""
    data = ChainData(L, dual_rep(U))
    dpp, _, basis_p = boundary_matrix(data, p + 1)
    dT = dpp.transpose()      # cochain differential d^p
    cocycles = kernel_basis(dT)
    ech = Echelon()
    if p > 0:
        dp, _, _ = boundary_matrix(data, p)
        for row in dp.transpose().rows:   # coboundaries d^{p-1}(basis)
            if row:
                ech.insert(dict(row))
    reps = []
    for z in cocycles:
        if ech.insert(dict(z)) is not None:
            reps.append(z)
            if len(reps) >= max_count:
                break
    return reps, basis_p


# --------------------------------------- low-degree spectral sequence data

class LHSReport:
    def __init__(self, **kw):
        self.__dict__.update(kw)

    def to_json(self):
        return dict(self.__dict__)


def lhs_low_degree(L, ideal_indices, M, ideal_groups=None):
    """Low-degree data of the ideal filtration for H^1(L, M).

    Requires: ideal_indices spans an ideal i of L acting trivially on M.
    Computes E2^{1,0} = H^1(L/i, M), E2^{0,1} = hom_{L/i}(i/[i,i], M),
    the transgression t: E2^{0,1} -> H^2(L/i, M), and checks
    dim H^1(L, M) = dim E2^{1,0} + dim ker t with both sides computed
    independently.  Optional ideal_groups (disjoint index subsets of the
    ideal) yield the kernel dimension contributed by cochains supported
    on each group."""
    ideal = sorted(set(ideal_indices))
    ideal_set = set(ideal)
    for j in ideal:
        if not M.action[j].is_zero():
            raise ValidationError("ideal must act trivially on the module")
    Lq, keep = quotient_by_indices(L, ideal)
    keep_pos = {g: k for k, g in enumerate(keep)}
    Mq = Representation(Lq, M.parity, [M.action[g] for g in keep],
                        labels=list(M.labels))

    W = dual_rep(M)
    data = ChainData(L, W)
    d2, basis2, basis1 = boundary_matrix(data, 2)

    Wq = dual_rep(Mq)
    dataq = ChainData(Lq, Wq)
    d2q, basis2q, basis1q = boundary_matrix(dataq, 2)
    d3q, basis3q, _ = boundary_matrix(dataq, 3)
    index2q = {b: k for k, b in enumerate(basis2q)}

    e2_10 = homology_dims(Lq, Wq, 1)

    ideal_slots = [k for k, (S, T, m) in enumerate(basis1)
                   if (S + T)[0] in ideal_set]
    mixed_rows = [k for k, (S, T, m) in enumerate(basis2)
                  if any(x in ideal_set for x in S + T)]

    # for a degree-1 cochain f, (d f)[c2] = sum_r1 d2[r1][c2] f[r1]
    d2_cols = {}
    for r1, row in enumerate(d2.rows):
        for c2, v in row.items():
            d2_cols.setdefault(c2, {})[r1] = v

    def e01_basis(allowed_slots):
        """Cochains supported on the allowed slots that kill every
        degree-2 chain touching the ideal: hom_{L/i}(i/[i,i], M)."""
        allowed = set(allowed_slots)
        pos = {k: a for a, k in enumerate(allowed_slots)}
        eqs = []
        for r2 in mixed_rows:
            col = d2_cols.get(r2, {})
            row = {pos[r1]: v for r1, v in col.items() if r1 in allowed}
            if row:
                eqs.append(row)
        mtx = ExactMatrix(len(eqs), len(allowed_slots), rows=eqs)
        return [{allowed_slots[a]: c for a, c in v.items()}
                for v in kernel_basis(mtx)]

    fs = e01_basis(ideal_slots)

    def transgress(f):
        """d f, restricted to the ideal-free rows, rewritten as a
        degree-2 cochain of the quotient."""
        c = {}
        for r1, val in f.items():
            for c2, v in d2.rows[r1].items():
                cur = c.get(c2, GaussianRational(0))
                nv = cur + v * val
                if nv:
                    c[c2] = nv
                elif c2 in c:
                    del c[c2]
        cbar = {}
        for c2, v in c.items():
            S, T, m = basis2[c2]
            if any(x in ideal_set for x in S + T):
                raise ValidationError(
                    "transgression image is not a quotient cochain")
            S2 = tuple(keep_pos[x] for x in S)
            T2 = tuple(keep_pos[x] for x in T)
            cbar[index2q[(S2, T2, m)]] = v
        return cbar

    cbars = [transgress(f) for f in fs]

    # every transgressed cochain must be a quotient cocycle
    d3q_cols = {}
    for r2, row in enumerate(d3q.rows):
        for c3, v in row.items():
            d3q_cols.setdefault(c3, {})[r2] = v
    for cbar in cbars:
        for col in d3q_cols.values():
            total = GaussianRational(0)
            for r2, v in col.items():
                val = cbar.get(r2)
                if val:
                    total = total + v * val
            if total:
                raise ValidationError("transgressed cochain is not a "
                                      "cocycle")

    # kernel of the transgression: quotient coboundaries are the images
    # of degree-1 quotient cochains under the transposed differential
    cob_rows = [dict(row) for row in d2q.transpose().rows if row]

    def kernel_against_coboundaries(cbar_list):
        ech = Echelon()
        for vec in cob_rows:
            ech.insert(dict(vec))
        added = 0
        for cbar in cbar_list:
            if ech.insert(dict(cbar)) is not None:
                added += 1
        return len(cbar_list) - added, added

    ker_t, t_rank = kernel_against_coboundaries(cbars)

    h1_direct = homology_dims(L, W, 1)
    total_direct = h1_direct["even"] + h1_direct["odd"]
    total_predicted = e2_10["even"] + e2_10["odd"] + ker_t

    group_kernels = None
    if ideal_groups is not None:
        group_kernels = []
        for grp in ideal_groups:
            gset = set(grp)
            slots = [k for k in ideal_slots
                     if (basis1[k][0] + basis1[k][1])[0] in gset]
            gfs = e01_basis(slots)
            gker, _ = kernel_against_coboundaries(
                [transgress(f) for f in gfs])
            group_kernels.append(gker)

    return LHSReport(
        e2_10=e2_10,
        e2_01_dim=len(fs),
        transgression_rank=t_rank,
        transgression_kernel=ker_t,
        h1_direct=h1_direct,
        reconstruction_check=(total_direct == total_predicted),
        group_kernels=group_kernels,
    )
