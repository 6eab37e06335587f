"""Finite dimensional algebras by structure constants, and the preprojective
algebra of a Dynkin quiver.

The preprojective algebra is built level by level in the path-length grading:
level l+1 is spanned by (arrow, basis element of level l) symbols, and the
defining relations contribute one row per (vertex component, level l-1 basis
element). Working over the already-reduced previous level keeps every
elimination tiny, so even E types stay tractable.

All algebras here are basic with a distinguished idempotent-homogeneous
basis: each basis element b satisfies b = e_t · b · e_s for a single pair
(s, t), stored as its weight. The first `n` basis elements are the orthogonal
idempotents themselves and the remaining ones span the radical, which makes
radicals, simples, projectives and injectives combinatorial to read off.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import QQ
from .linalg import Matrix, hstack, solve_linear
from .quivers import DynkinType, build_quiver, double_quiver


class FinDimAlgebra:
    """Associative algebra by structure constants over an exact field.

    table[i][j] is the sparse expansion of b_i * b_j as [(k, coeff), ...].
    weights[k] = (s, t) means b_k lies in e_t A e_s (0-based idempotent
    positions). idempotents[v] is the basis index of e_v (conventionally v
    itself); radical_generators index a set of radical elements generating
    the radical as an ideal (arrows in the quiver-algebra cases).
    """

    def __init__(self, field, labels, table, weights, idempotents,
                 radical_generators):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = table
        self.weights = list(weights)
        self.idempotents = list(idempotents)
        self.n_idem = len(self.idempotents)
        self.radical_generators = list(radical_generators)
        for v, k in enumerate(self.idempotents):
            if self.weights[k] != (v, v):
                raise ValueError(f"idempotent {v} has weight {self.weights[k]}")

    # -- elements are dense coefficient lists -----------------------------

    def basis_element(self, k):
        vec = [self.field.zero()] * self.dim
        vec[k] = self.field.one()
        return vec

    def unit(self):
        vec = [self.field.zero()] * self.dim
        for k in self.idempotents:
            vec[k] = self.field.one()
        return vec

    def multiply(self, x, y):
        f = self.field
        out = [f.zero()] * self.dim
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                c = f.mul(xi, yj)
                for k, coeff in row[j]:
                    out[k] = f.add(out[k], f.mul(c, coeff))
        return out

    def left_mult_matrix(self, x):
        cols = []
        for j in range(self.dim):
            cols.append(self.multiply(x, self.basis_element(j)))
        return Matrix.from_cols(self.field, cols, nrows=self.dim)

    def right_mult_matrix(self, x):
        cols = []
        for j in range(self.dim):
            cols.append(self.multiply(self.basis_element(j), x))
        return Matrix.from_cols(self.field, cols, nrows=self.dim)

    def radical_indices(self):
        idem = set(self.idempotents)
        return [k for k in range(self.dim) if k not in idem]

    def opposite(self):
        table = [[self.table[j][i] for j in range(self.dim)]
                 for i in range(self.dim)]
        weights = [(t, s) for (s, t) in self.weights]
        return FinDimAlgebra(self.field, self.labels, table, weights,
                             self.idempotents, self.radical_generators)

    def cartan_matrix(self):
        """c[i][j] = dim e_i A e_j (weights (j, i))."""
        c = [[0] * self.n_idem for _ in range(self.n_idem)]
        for (s, t) in self.weights:
            c[t][s] += 1
        return c

    def check(self):
        """Unit, idempotent orthogonality and full associativity; O(dim^3),
        meant for tests on small algebras."""
        f = self.field
        one = self.unit()
        for j in range(self.dim):
            b = self.basis_element(j)
            if self.multiply(one, b) != b or self.multiply(b, one) != b:
                raise AssertionError(f"unit fails on basis {j}")
        for u in self.idempotents:
            for v in self.idempotents:
                prod = self.multiply(self.basis_element(u),
                                     self.basis_element(v))
                expect = self.basis_element(u) if u == v \
                    else [f.zero()] * self.dim
                if prod != expect:
                    raise AssertionError("idempotents not orthogonal")
        for i in range(self.dim):
            bi = self.basis_element(i)
            for j in range(self.dim):
                bj = self.basis_element(j)
                ij = self.multiply(bi, bj)
                for k in range(self.dim):
                    bk = self.basis_element(k)
                    left = self.multiply(ij, bk)
                    right = self.multiply(bi, self.multiply(bj, bk))
                    if left != right:
                        raise AssertionError(
                            f"associativity fails at ({i},{j},{k})")
        # weight homogeneity: b_i b_j lands in e_{t_i} A e_{s_j} and needs
        # s_i = t_j to be nonzero (b_i is applied after b_j)
        for i in range(self.dim):
            si, ti = self.weights[i]
            for j in range(self.dim):
                sj, tj = self.weights[j]
                for k, coeff in self.table[i][j]:
                    if f.is_zero(coeff):
                        continue
                    if si != tj:
                        raise AssertionError("nonzero product across weights")
                    if self.weights[k] != (sj, ti):
                        raise AssertionError("product weight mismatch")
        return True

    # -- canonical one-sided modules --------------------------------------

    def simple(self, v):
        """1-dim module at idempotent position v; radical acts by zero."""
        acts = []
        for k in range(self.dim):
            val = self.field.one() if k == self.idempotents[v] \
                else self.field.zero()
            acts.append(Matrix(self.field, [[val]]))
        return AlgebraModule(self, acts)

    def projective_indices(self, v):
        return [k for k in range(self.dim) if self.weights[k][0] == v]

    def projective(self, v):
        """Left module A e_v on the basis elements of source weight v."""
        S = self.projective_indices(v)
        pos = {k: a for a, k in enumerate(S)}
        f = self.field
        acts = []
        for b in range(self.dim):
            cols = []
            for k in S:
                col = [f.zero()] * len(S)
                for m, coeff in self.table[b][k]:
                    col[pos[m]] = coeff  # product stays in A e_v
                cols.append(col)
            acts.append(Matrix.from_cols(f, cols, nrows=len(S)))
        M = AlgebraModule(self, acts)
        M._cyclic_generator = pos[self.idempotents[v]]
        return M

    def injective(self, v):
        """Left module D(e_v A): action (a.f)(x) = f(x a)."""
        S = [k for k in range(self.dim) if self.weights[k][1] == v]
        pos = {k: a for a, k in enumerate(S)}
        f = self.field
        acts = []
        for b in range(self.dim):
            # right multiplication by b on e_v A, then transpose
            rows = []
            for k in S:
                row = [f.zero()] * len(S)
                for m, coeff in self.table[k][b]:
                    row[pos[m]] = coeff
                rows.append(row)
            R = Matrix(f, rows, ncols=len(S)) if S else Matrix.zeros(f, 0, 0)
            acts.append(R)  # (R_b restricted)^T applied over dual basis
        return AlgebraModule(self, acts)


class AlgebraModule:
    """Finite dimensional left module over a FinDimAlgebra, stored as one
    action matrix per algebra basis element."""

    def __init__(self, algebra, acts, check=False):
        self.algebra = algebra
        self.acts = acts
        self.dim = acts[0].nrows if acts else 0
        if check:
            self._check()

    def _check(self):
        A = self.algebra
        f = A.field
        total = Matrix.zeros(f, self.dim, self.dim)
        for v in A.idempotents:
            total = total + self.acts[v]
        if total != Matrix.identity(f, self.dim):
            raise AssertionError("idempotents do not sum to identity")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = self.acts[i] * self.acts[j]
                expect = Matrix.zeros(f, self.dim, self.dim)
                for k, coeff in A.table[i][j]:
                    expect = expect + self.acts[k].scale(coeff)
                if prod != expect:
                    raise AssertionError(f"action not multiplicative ({i},{j})")

    def act_element(self, vec):
        f = self.algebra.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, c in enumerate(vec):
            if not f.is_zero(c):
                out = out + self.acts[i].scale(c)
        return out

    def is_zero(self):
        return self.dim == 0

    @classmethod
    def direct_sum(cls, algebra, summands):
        from .linalg import block_diag
        f = algebra.field
        acts = []
        for b in range(algebra.dim):
            acts.append(block_diag(f, [m.acts[b] for m in summands])
                        if summands else Matrix.zeros(f, 0, 0))
        return cls(algebra, acts)

    # -- weight decomposition and Hom -------------------------------------

    def weight_dims(self):
        return [self._weight_data()[2][v].ncols
                for v in range(self.algebra.n_idem)]

    def _weight_data(self):
        """(U, Uinv, per-idempotent basis columns); U groups coordinates by
        idempotent weight space."""
        if not hasattr(self, "_wcache"):
            A = self.algebra
            pieces = []
            for v in range(A.n_idem):
                P = self.acts[A.idempotents[v]]
                R, pivots = P.transpose().rref()
                # rows of R at pivots form a basis of the image of P
                cols = [list(R.rows[i]) for i in range(len(pivots))]
                pieces.append(Matrix.from_cols(A.field, cols, nrows=self.dim))
            U = hstack(pieces) if self.dim else Matrix.zeros(A.field, 0, 0)
            Uinv = U.invert() if self.dim else U
            self._wcache = (U, Uinv, pieces)
        return self._wcache

    def _weight_slices(self):
        _, _, pieces = self._weight_data()
        slices = []
        start = 0
        for p in pieces:
            slices.append((start, start + p.ncols))
            start += p.ncols
        return slices

    def generator_block(self, gen_index):
        """Block of the action of a radical generator between its weight
        spaces, in the grouped basis."""
        A = self.algebra
        s, t = A.weights[gen_index]
        U, Uinv, _ = self._weight_data()
        full = Uinv * self.acts[gen_index] * U
        sl = self._weight_slices()
        (s0, s1), (t0, t1) = sl[s], sl[t]
        return full.submatrix(range(t0, t1), range(s0, s1))

    def hom(self, other):
        """Basis of Hom_A(self, other) as dim(other) x dim(self) matrices.

        A map commutes with the idempotents (block diagonal over weight
        spaces) and with the radical generators; together these generate the
        algebra, so nothing else needs checking.
        """
        A = self.algebra
        if A is not other.algebra and A.table is not other.algebra.table:
            if A.field != other.algebra.field or A.dim != other.algebra.dim:
                raise ValueError("modules over different algebras")
        f = A.field
        mdims = self.weight_dims()
        ndims = other.weight_dims()
        offsets = []
        total = 0
        for v in range(A.n_idem):
            offsets.append(total)
            total += ndims[v] * mdims[v]
        if total == 0:
            return []
        mblocks = {g: self.generator_block(g) for g in A.radical_generators}
        nblocks = {g: other.generator_block(g) for g in A.radical_generators}
        rows = []
        for g in A.radical_generators:
            s, t = A.weights[g]
            BM, BN = mblocks[g], nblocks[g]
            # phi_t BM - BN phi_s = 0, entries are (ndims[t] x mdims[s])
            for i in range(ndims[t]):
                for j in range(mdims[s]):
                    row = [f.zero()] * total
                    for k in range(mdims[t]):
                        row[offsets[t] + i * mdims[t] + k] = BM[k, j]
                    for k in range(ndims[s]):
                        idx = offsets[s] + k * mdims[s] + j
                        row[idx] = f.sub(row[idx], BN[i, k])
                    rows.append(row)
        if rows:
            sys = Matrix(f, rows, ncols=total)
            _, K = sys.rank_and_kernel()
        else:
            K = Matrix.identity(f, total)
        UM, UMinv, _ = self._weight_data()
        UN, UNinv, _ = other._weight_data()
        msl, nsl = self._weight_slices(), other._weight_slices()
        out = []
        for c in range(K.ncols):
            vec = K.col(c)
            blocky = Matrix.zeros(f, other.dim, self.dim)
            for v in range(A.n_idem):
                for i in range(ndims[v]):
                    for j in range(mdims[v]):
                        blocky[nsl[v][0] + i, msl[v][0] + j] = \
                            vec[offsets[v] + i * mdims[v] + j]
            out.append(UN * blocky * UMinv)
        return out

    def is_isomorphic_indec(self, other):
        """Isomorphism test, valid when both modules are indecomposable
        (trace pairing argument; needs char 0 or p > dim)."""
        if self.dim != other.dim or self.weight_dims() != other.weight_dims():
            return False
        if self.dim == 0:
            return True
        fwd = self.hom(other)
        back = other.hom(self)
        f = self.algebra.field
        for phi in fwd:
            for psi in back:
                comp = psi * phi
                tr = f.zero()
                for i in range(comp.nrows):
                    tr = f.add(tr, comp[i, i])
                if not f.is_zero(tr):
                    return True
        return False

    # -- submodules, quotients, covers ------------------------------------

    def submodule(self, J):
        """Module structure on the column span of J (must be invariant)."""
        A = self.algebra
        acts = []
        for b in range(A.dim):
            sol, _ = solve_linear(J, self.acts[b] * J)
            if sol is None:
                raise ValueError("column span is not a submodule")
            acts.append(sol)
        return AlgebraModule(A, acts)

    def quotient(self, J):
        A = self.algebra
        f = A.field
        k = J.ncols
        ext = hstack([J, Matrix.identity(f, self.dim)])
        _, pivots = ext.rref()
        if any(p >= k for p in pivots[:k]) or len(pivots) < self.dim:
            raise ValueError("J does not have full column rank")
        cols = [J.col(j) for j in range(k)]
        cols += [ext.col(p) for p in pivots[k:]]
        U = Matrix.from_cols(f, cols, nrows=self.dim)
        Uinv = U.invert()
        acts = []
        rng = range(k, self.dim)
        for b in range(A.dim):
            full = Uinv * self.acts[b] * U
            acts.append(full.submatrix(rng, rng))
        return AlgebraModule(A, acts)

    def radical_span(self):
        """Columns spanning rad(A) . M."""
        A = self.algebra
        f = A.field
        cols = []
        for r in A.radical_indices():
            act = self.acts[r]
            for j in range(self.dim):
                col = act.col(j)
                if any(not f.is_zero(x) for x in col):
                    cols.append(col)
        if not cols:
            return Matrix.zeros(f, self.dim, 0)
        M = Matrix.from_cols(f, cols, nrows=self.dim)
        R, pivots = M.transpose().rref()
        basis = [list(R.rows[i]) for i in range(len(pivots))]
        return Matrix.from_cols(f, basis, nrows=self.dim)

    def top_multiplicities(self):
        rad = self.radical_span()
        radmod = self.submodule(rad) if rad.ncols else None
        raddims = radmod.weight_dims() if radmod else [0] * self.algebra.n_idem
        return [d - r for d, r in zip(self.weight_dims(), raddims)]

    def projective_cover(self):
        """(P, cover map P -> M as a matrix, multiplicity vector)."""
        A = self.algebra
        f = A.field
        rad = self.radical_span()
        mults = [0] * A.n_idem
        lifts = []  # (idempotent position, vector in M)
        _, _, pieces = self._weight_data()
        for v in range(A.n_idem):
            # complement of rad_v inside e_v M
            evM = pieces[v]
            radv_cols = []
            P = self.acts[A.idempotents[v]]
            for j in range(rad.ncols):
                col = (P * rad.column_matrix(j)).col(0)
                if any(not f.is_zero(x) for x in col):
                    radv_cols.append(col)
            base = Matrix.from_cols(f, radv_cols, nrows=self.dim) \
                if radv_cols else Matrix.zeros(f, self.dim, 0)
            ext = hstack([base, evM])
            _, pivots = ext.rref()
            for p in pivots:
                if p >= base.ncols:
                    mults[v] += 1
                    lifts.append((v, ext.col(p)))
        summands = [A.projective(v) for v, _ in lifts]
        P = AlgebraModule.direct_sum(A, summands)
        cols = []
        for (v, lift) in lifts:
            liftM = Matrix.column(f, lift)
            for k in A.projective_indices(v):
                cols.append((self.acts[k] * liftM).col(0))
        cover = Matrix.from_cols(f, cols, nrows=self.dim) if cols \
            else Matrix.zeros(f, self.dim, 0)
        if cover.rank() != self.dim:
            raise AssertionError("projective cover is not surjective")
        return P, cover, mults

    def syzygy(self):
        P, cover, mults = self.projective_cover()
        _, K = cover.rank_and_kernel()
        return P.submodule(K), K, P, mults

    def dual(self):
        """D(M) as a module over the opposite algebra."""
        Aop = self.algebra.opposite()
        return AlgebraModule(Aop, [a.transpose() for a in self.acts])

    def is_projective(self):
        if self.dim == 0:
            return True
        _, cover, _ = self.projective_cover()
        return cover.ncols == self.dim


# -- homological dimensions ------------------------------------------------

@dataclass(frozen=True)
class HomDim:
    value: int
    exact: bool  # False means ">= value" (cap reached)

    def __str__(self):
        return str(self.value) if self.exact else f">= {self.value}"


def minimal_resolution(M, cap):
    """Multiplicity vectors of the terms of a minimal projective resolution,
    up to cap+1 terms. Returns (mults, terminated)."""
    mults = []
    cur = M
    for _ in range(cap + 1):
        if cur.is_zero():
            return mults, True
        K, _, _, m = cur.syzygy()
        mults.append(m)
        cur = K
    return mults, cur.is_zero()


def projective_dimension(M, cap=6):
    mults, terminated = minimal_resolution(M, cap)
    if terminated:
        return HomDim(len(mults) - 1, True)
    return HomDim(cap, False)


def global_dimension(A, cap=6):
    worst = 0
    for v in range(A.n_idem):
        pd = projective_dimension(A.simple(v), cap)
        if not pd.exact:
            return HomDim(cap, False)
        worst = max(worst, pd.value)
    return HomDim(worst, True)


def ext_dim(A, i, j, k, cap=6):
    """dim Ext^k(S_i, S_j), read off a minimal resolution of S_i."""
    if k > cap:
        raise ValueError(f"degree {k} exceeds cap {cap}")
    mults, terminated = minimal_resolution(A.simple(i), cap)
    if k < len(mults):
        return mults[k][j]
    if terminated:
        return 0
    raise ValueError("cap too small to settle the requested Ext degree")


def dominant_dimension(A, cap=6):
    """Number of leading projective terms in a minimal injective coresolution
    of the regular module, computed through the dual resolution over A^op."""
    Aop = A.opposite()
    inj_is_proj = []
    for j in range(A.n_idem):
        I = A.injective(j)
        inj_is_proj.append(any(I.is_isomorphic_indec(A.projective(i))
                               for i in range(A.n_idem)))
    best = None
    for v in range(A.n_idem):
        DM = A.projective(v).dual()  # module over A^op
        mults, terminated = minimal_resolution(DM, cap)
        bad = None
        for k, m in enumerate(mults):
            if any(c > 0 and not inj_is_proj[j] for j, c in enumerate(m)):
                bad = k
                break
        if bad is not None:
            best = bad if best is None else min(best, bad)
    if best is None:
        return HomDim(cap, False)
    return HomDim(best, True)


# -- the preprojective algebra ---------------------------------------------

class PreprojectiveAlgebra:
    """Λ for a Dynkin type: quotient of the path algebra of the double quiver
    by the per-vertex defining relations. Holds the reduced path basis."""

    def __init__(self, dt, field, algebra, levels, parents, srcs, tgts,
                 reduce_maps, level_index):
        self.dt = dt
        self.field = field
        self.algebra = algebra
        self.quiver = build_quiver(dt)
        self.dquiver = double_quiver(self.quiver)
        self.levels = levels        # list of lists of basis indices
        self.parents = parents      # basis index -> (arrow name, parent) | None
        self.srcs = srcs            # basis index -> source vertex (1-based)
        self.tgts = tgts
        self.reduce_maps = reduce_maps  # level -> {(arrow, basis idx): sparse}
        self.level_index = level_index

    @property
    def dim(self):
        return self.algebra.dim

    def arrow_action(self, arrow_name, k):
        """Sparse coords of (arrow . basis element k) over the basis."""
        lvl = self.level_index[k] + 1
        table = self.reduce_maps.get(lvl)
        if table is None:
            return {}
        return table.get((arrow_name, k), {})

    def basis_at_source(self, v):
        return [k for k in range(self.dim) if self.srcs[k] == v]


def build_preprojective(dt: DynkinType, field=QQ, max_level=64,
                        max_span=200000):
    q = build_quiver(dt)
    dq = double_quiver(q)
    n = dt.rank
    f = field

    labels = [f"e{v}" for v in range(1, n + 1)]
    parents = [None] * n
    srcs = list(range(1, n + 1))
    tgts = list(range(1, n + 1))
    levels = [list(range(n))]
    level_index = {k: 0 for k in range(n)}
    reduce_maps = {}

    lvl = 0
    while levels[-1]:
        lvl += 1
        if lvl > max_level:
            raise ValueError(f"no stabilization after {max_level} levels")
        prev = levels[-1]
        cands = []
        for k in prev:
            for a in dq.arrows_from(tgts[k]):
                cands.append((a.name, k))
        if len(cands) > max_span:
            raise ValueError(f"path span too large at level {lvl}")
        cidx = {c: i for i, c in enumerate(cands)}
        rows = []
        if lvl >= 2:
            lower = levels[-2]
            prev_map = reduce_maps[lvl - 1]
            for b in lower:
                v = tgts[b]
                row = [f.zero()] * len(cands)
                touched = False
                for a in q.arrows_from(v):  # + (a* after a)
                    inner = prev_map.get((a.name, b), {})
                    star = a.name + "*"
                    for bp, coeff in inner.items():
                        row[cidx[(star, bp)]] = f.add(
                            row[cidx[(star, bp)]], coeff)
                        touched = True
                for a in q.arrows_to(v):   # - (a after a*)
                    inner = prev_map.get((a.name + "*", b), {})
                    for bp, coeff in inner.items():
                        row[cidx[(a.name, bp)]] = f.sub(
                            row[cidx[(a.name, bp)]], coeff)
                        touched = True
                if touched:
                    rows.append(row)
        if rows:
            R, pivots = Matrix(f, rows, ncols=len(cands)).rref()
        else:
            R, pivots = None, []
        pivot_set = set(pivots)
        new_level = []
        cand_expr = {}
        survivors = {}  # candidate position -> basis index
        for pos, (aname, k) in enumerate(cands):
            if pos in pivot_set:
                continue
            idx = len(labels)
            a = dq.by_name[aname]
            labels.append(aname if parents[k] is None
                          else f"{aname}.{labels[k]}")
            parents.append((aname, k))
            srcs.append(srcs[k])
            tgts.append(a.tgt)
            level_index[idx] = lvl
            new_level.append(idx)
            survivors[pos] = idx
        for pos, (aname, k) in enumerate(cands):
            if pos not in pivot_set:
                cand_expr[(aname, k)] = {survivors[pos]: f.one()}
        if R is not None:
            for r, p in enumerate(pivots):
                expr = {}
                for pos, idx in survivors.items():
                    coeff = R.rows[r][pos]
                    if not f.is_zero(coeff):
                        expr[idx] = f.neg(coeff)
                cand_expr[cands[p]] = expr
        reduce_maps[lvl] = cand_expr
        levels.append(new_level)

    levels.pop()  # drop the trailing empty level
    dim = len(labels)

    # products via the stored arrow actions, memoized
    memo = {}

    def prod(i, j):
        if tgts[j] != srcs[i]:
            return {}
        key = (i, j)
        if key in memo:
            return memo[key]
        if parents[i] is None:  # idempotent
            out = {j: f.one()}
        else:
            aname, par = parents[i]
            out = {}
            for k, c in prod(par, j).items():
                table = reduce_maps.get(level_index[k] + 1)
                if not table:
                    continue
                for m, c2 in table.get((aname, k), {}).items():
                    val = f.add(out.get(m, f.zero()), f.mul(c, c2))
                    if f.is_zero(val):
                        out.pop(m, None)
                    else:
                        out[m] = val
        memo[key] = out
        return out

    table = [[[(k, c) for k, c in prod(i, j).items()]
              for j in range(dim)] for i in range(dim)]
    weights = [(srcs[k] - 1, tgts[k] - 1) for k in range(dim)]
    arrow_indices = levels[1] if len(levels) > 1 else []
    algebra = FinDimAlgebra(field, labels, table, weights,
                            idempotents=list(range(n)),
                            radical_generators=arrow_indices)
    return PreprojectiveAlgebra(dt, field, algebra, levels, parents, srcs,
                                tgts, reduce_maps, level_index)
