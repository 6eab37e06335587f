"""Representations of the doubled Dynkin quiver subject to the preprojective
relations, i.e. finite dimensional modules over the preprojective algebra.

A representation stores one matrix per double-quiver arrow, of shape
(target dim x source dim). Maps between representations are dicts
vertex -> matrix. Everything is exact; the default field is QQ.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .fields import QQ
from .linalg import Matrix, hstack, solve_linear, vstack
from .polyroots import rational_roots_split
from .quivers import DynkinType, bilinear_form, build_quiver, double_quiver

_dq_cache = {}


def dq_of(dt: DynkinType):
    if dt not in _dq_cache:
        _dq_cache[dt] = double_quiver(build_quiver(dt))
    return _dq_cache[dt]


class Representation:
    def __init__(self, dt, dims, mats, field=QQ):
        self.dt = dt if isinstance(dt, DynkinType) else DynkinType.parse(dt)
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        dq = dq_of(self.dt)
        if len(self.dims) != self.dt.rank:
            raise ValueError("dimension vector length mismatch")
        self.mats = {}
        for a in dq.arrows:
            m = mats.get(a.name)
            rows, cols = self.dims[a.tgt - 1], self.dims[a.src - 1]
            if m is None:
                m = Matrix.zeros(field, rows, cols)
            elif not isinstance(m, Matrix):
                m = Matrix(field, m, ncols=cols) if m else \
                    Matrix.zeros(field, rows, cols)
            if m.shape != (rows, cols):
                raise ValueError(
                    f"matrix for {a.name} has shape {m.shape}, "
                    f"expected {(rows, cols)}")
            self.mats[a.name] = m
        extra = set(mats) - {a.name for a in dq.arrows}
        if extra:
            raise ValueError(f"unknown arrows {sorted(extra)}")

    @property
    def dquiver(self):
        return dq_of(self.dt)

    @property
    def total_dim(self):
        return sum(self.dims)

    def mat(self, name):
        return self.mats[name]

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.dt == other.dt
                and self.dims == other.dims and self.field == other.field
                and self.mats == other.mats)

    def __repr__(self):
        return f"Rep({self.dt}, dims={list(self.dims)})"

    @classmethod
    def zero(cls, dt, field=QQ):
        dt = dt if isinstance(dt, DynkinType) else DynkinType.parse(dt)
        return cls(dt, (0,) * dt.rank, {}, field)

    @classmethod
    def simple(cls, dt, v, field=QQ):
        dt = dt if isinstance(dt, DynkinType) else DynkinType.parse(dt)
        dims = [0] * dt.rank
        dims[v - 1] = 1
        return cls(dt, dims, {}, field)

    def check_relations(self):
        """Per-vertex defect of the defining relations; all-zero matrices
        iff this is a module over the preprojective algebra."""
        dq = self.dquiver
        out = {}
        for v in range(1, self.dt.rank + 1):
            d = self.dims[v - 1]
            acc = Matrix.zeros(self.field, d, d)
            for a in dq.original:
                if a.src == v:
                    acc = acc + self.mat(a.name + "*") * self.mat(a.name)
                if a.tgt == v:
                    acc = acc - self.mat(a.name) * self.mat(a.name + "*")
            out[v] = acc
        return out

    def satisfies_relations(self):
        return all(m.is_zero() for m in self.check_relations().values())

    def dual(self):
        """D(M) is again a module via the antiautomorphism swapping each
        arrow with its star (every relation term a*a is fixed by the swap,
        so the relation ideal is preserved). Involutive on the nose."""
        dq = self.dquiver
        mats = {}
        for a in dq.original:
            mats[a.name] = self.mat(a.name + "*").transpose()
            mats[a.name + "*"] = self.mat(a.name).transpose()
        return Representation(self.dt, self.dims, mats, self.field)

    def to_json_dict(self):
        return {
            "type": str(self.dt),
            "dim": list(self.dims),
            "mats": {name: [[str(x) for x in row] for row in m.rows]
                     for name, m in self.mats.items()},
        }

    @classmethod
    def from_json_dict(cls, d, field=QQ):
        dt = DynkinType.parse(d["type"])
        dims = d["dim"]
        dq = dq_of(dt)
        mats = {}
        for a in dq.arrows:
            raw = d["mats"].get(a.name)
            if raw is None:
                continue
            mats[a.name] = Matrix(
                field, [[Fraction(x) for x in row] for row in raw],
                ncols=dims[a.src - 1])
        return cls(dt, dims, mats, field)


def direct_sum_with_slices(reps):
    """Direct sum plus, per summand and vertex, its (start, end) slice."""
    if not reps:
        raise ValueError("empty direct sum needs a Dynkin type")
    dt, field = reps[0].dt, reps[0].field
    n = dt.rank
    dims = [sum(r.dims[v] for r in reps) for v in range(n)]
    slices = []
    offsets = [0] * n
    for r in reps:
        sl = []
        for v in range(n):
            sl.append((offsets[v], offsets[v] + r.dims[v]))
            offsets[v] += r.dims[v]
        slices.append(sl)
    dq = dq_of(dt)
    mats = {}
    for a in dq.arrows:
        t, s = a.tgt - 1, a.src - 1
        M = Matrix.zeros(field, dims[t], dims[s])
        for r, sl in zip(reps, slices):
            block = r.mat(a.name)
            r0, c0 = sl[t][0], sl[s][0]
            for i in range(block.nrows):
                for j in range(block.ncols):
                    M[r0 + i, c0 + j] = block[i, j]
        mats[a.name] = M
    return Representation(dt, dims, mats, field), slices


def direct_sum(reps):
    return direct_sum_with_slices(reps)[0]


# -- maps between representations -------------------------------------------


def identity_hom(X):
    return {v + 1: Matrix.identity(X.field, X.dims[v])
            for v in range(X.dt.rank)}


def zero_hom(X, Y):
    return {v + 1: Matrix.zeros(X.field, Y.dims[v], X.dims[v])
            for v in range(X.dt.rank)}


def compose_homs(g, f):
    """g after f, vertexwise."""
    return {v: g[v] * f[v] for v in f}


def hom_add(f, g):
    return {v: f[v] + g[v] for v in f}


def hom_scale(f, c):
    return {v: m.scale(c) for v, m in f.items()}


def is_rep_hom(X, Y, f):
    for a in X.dquiver.arrows:
        if f[a.tgt] * X.mat(a.name) != Y.mat(a.name) * f[a.src]:
            return False
    return True


def hom_space(X, Y):
    """Basis of Hom(X, Y) as vertex-indexed matrix dicts."""
    if X.dt != Y.dt or X.field != Y.field:
        raise ValueError("representations over different data")
    f = X.field
    n = X.dt.rank
    offs = []
    total = 0
    for v in range(n):
        offs.append(total)
        total += Y.dims[v] * X.dims[v]
    if total == 0:
        return []
    rows = []
    for a in X.dquiver.arrows:
        s, t = a.src - 1, a.tgt - 1
        FX, FY = X.mat(a.name), Y.mat(a.name)
        for i in range(Y.dims[t]):
            for j in range(X.dims[s]):
                row = [f.zero()] * total
                for k in range(X.dims[t]):
                    row[offs[t] + i * X.dims[t] + k] = FX[k, j]
                for k in range(Y.dims[s]):
                    idx = offs[s] + k * X.dims[s] + j
                    row[idx] = f.sub(row[idx], FY[i, k])
                rows.append(row)
    if rows:
        _, K = Matrix(f, rows, ncols=total).rank_and_kernel()
    else:
        K = Matrix.identity(f, total)
    out = []
    for c in range(K.ncols):
        vec = K.col(c)
        phi = {}
        for v in range(n):
            m = Matrix.zeros(f, Y.dims[v], X.dims[v])
            for i in range(Y.dims[v]):
                for j in range(X.dims[v]):
                    m[i, j] = vec[offs[v] + i * X.dims[v] + j]
            phi[v + 1] = m
        out.append(phi)
    return out


def hom_dim(X, Y):
    return len(hom_space(X, Y))


def flatten_hom(X, Y, f):
    vec = []
    for v in range(1, X.dt.rank + 1):
        for row in f[v].rows:
            vec.extend(row)
    return vec


class HomBasis:
    """A computed basis of Hom(X, Y) with exact coordinate lookup."""

    def __init__(self, X, Y, basis=None):
        self.X, self.Y = X, Y
        self.basis = hom_space(X, Y) if basis is None else basis
        cols = [flatten_hom(X, Y, b) for b in self.basis]
        size = sum(Y.dims[v] * X.dims[v] for v in range(X.dt.rank))
        self.flat = Matrix.from_cols(X.field, cols, nrows=size)

    @property
    def dim(self):
        return len(self.basis)

    def express(self, f):
        b = Matrix.column(self.X.field, flatten_hom(self.X, self.Y, f))
        sol, _ = solve_linear(self.flat, b)
        if sol is None:
            raise ValueError("map does not lie in the Hom space")
        return sol.col(0)


# -- subs, quotients, socle and top ------------------------------------------


def sub_representation(X, J):
    """Representation on the column spans J[v] (must be arrow-invariant);
    returns (S, inclusion)."""
    f = X.field
    mats = {}
    for a in X.dquiver.arrows:
        s, t = a.src, a.tgt
        sol, _ = solve_linear(J[t], X.mat(a.name) * J[s])
        if sol is None:
            raise ValueError("spans are not a subrepresentation")
        mats[a.name] = sol
    dims = [J[v + 1].ncols for v in range(X.dt.rank)]
    S = Representation(X.dt, dims, mats, f)
    return S, {v: J[v] for v in J}


def quotient_representation(X, J):
    """(X / span J, projection); J[v] columns independent and invariant."""
    f = X.field
    unions = {}
    projs = {}
    for v in range(1, X.dt.rank + 1):
        k = J[v].ncols
        d = X.dims[v - 1]
        ext = hstack([J[v], Matrix.identity(f, d)])
        _, pivots = ext.rref()
        if pivots[:k] != list(range(k)):
            raise ValueError("J columns are dependent")
        cols = [ext.col(p) for p in pivots]
        U = Matrix.from_cols(f, cols, nrows=d)
        Uinv = U.invert() if d else U
        unions[v] = (U, Uinv, k)
        projs[v] = Uinv.submatrix(range(k, d), range(d)) if d else \
            Matrix.zeros(f, 0, 0)
    mats = {}
    for a in X.dquiver.arrows:
        s, t = a.src, a.tgt
        Us, _, ks = unions[s]
        keep = range(ks, X.dims[s - 1])
        act = projs[t] * X.mat(a.name) * Us
        mats[a.name] = act.submatrix(range(act.nrows), keep)
    dims = [X.dims[v - 1] - J[v].ncols for v in range(1, X.dt.rank + 1)]
    Q = Representation(X.dt, dims, mats, f)
    return Q, projs


def socle_spans(X):
    """J[v] = basis of the subspace killed by every arrow out of v."""
    f = X.field
    out = {}
    for v in range(1, X.dt.rank + 1):
        outgoing = [X.mat(a.name) for a in X.dquiver.arrows_from(v)]
        if not outgoing:
            out[v] = Matrix.identity(f, X.dims[v - 1])
            continue
        stacked = vstack(outgoing)
        _, K = stacked.rank_and_kernel()
        out[v] = K
    return out


def radical_spans(X):
    """J[v] = basis of the sum of images of arrows into v."""
    f = X.field
    out = {}
    for v in range(1, X.dt.rank + 1):
        incoming = [X.mat(a.name) for a in X.dquiver.arrows_to(v)]
        d = X.dims[v - 1]
        if not incoming:
            out[v] = Matrix.zeros(f, d, 0)
            continue
        M = hstack(incoming)
        R, pivots = M.transpose().rref()
        cols = [list(R.rows[i]) for i in range(len(pivots))]
        out[v] = Matrix.from_cols(f, cols, nrows=d)
    return out


def top_dims(X):
    rad = radical_spans(X)
    return tuple(X.dims[v - 1] - rad[v].ncols
                 for v in range(1, X.dt.rank + 1))


def socle_dims(X):
    soc = socle_spans(X)
    return tuple(soc[v].ncols for v in range(1, X.dt.rank + 1))


def socle_series(X):
    """Layer dimension vectors from the socle upward."""
    layers = []
    cur = X
    while cur.total_dim:
        soc = socle_spans(cur)
        layers.append(tuple(soc[v].ncols
                            for v in range(1, cur.dt.rank + 1)))
        cur, _ = quotient_representation(cur, soc)
    return layers


def socle_profile(X):
    """Loewy layers rendered top row first, socle last, e.g. '2/1 3/2'."""
    layers = socle_series(X)
    parts = []
    for layer in reversed(layers):
        bits = []
        for v, d in enumerate(layer):
            bits.extend([str(v + 1)] * d)
        parts.append(" ".join(bits))
    return "/".join(parts)


# -- Ext^1: bilinear-form route and resolution oracle ------------------------


def ext1_dim(X, Y):
    """dim Ext^1 from dim Hom(X,Y) + dim Hom(Y,X) - (dim X, dim Y)."""
    return hom_dim(X, Y) + hom_dim(Y, X) - bilinear_form(X.dt, X.dims, Y.dims)


def projective_rep(ppa, v):
    """The projective at vertex v as a representation, basis = reduced
    paths starting at v grouped by endpoint."""
    f = ppa.field
    n = ppa.dt.rank
    members = ppa.basis_at_source(v)
    groups = {w: [k for k in members if ppa.tgts[k] == w]
              for w in range(1, n + 1)}
    pos = {w: {k: i for i, k in enumerate(groups[w])} for w in groups}
    dims = [len(groups[w]) for w in range(1, n + 1)]
    mats = {}
    for a in ppa.dquiver.arrows:
        s, t = a.src, a.tgt
        M = Matrix.zeros(f, dims[t - 1], dims[s - 1])
        for k in groups[s]:
            for m, coeff in ppa.arrow_action(a.name, k).items():
                M[pos[t][m], pos[s][k]] = coeff
        mats[a.name] = M
    P = Representation(ppa.dt, dims, mats, f)
    P._path_groups = groups
    P._proj_vertex = v
    return P


def _apply_path(ppa, X, k, col):
    """Act by the reduced basis path k on a column vector of X."""
    if ppa.parents[k] is None:
        return col
    aname, parent = ppa.parents[k]
    return X.mat(aname) * _apply_path(ppa, X, parent, col)


def projective_cover(ppa, X):
    """(P, cover map P -> X, multiplicity per vertex)."""
    f = X.field
    n = X.dt.rank
    rad = radical_spans(X)
    lifts = []
    mults = [0] * n
    for v in range(1, n + 1):
        d = X.dims[v - 1]
        ext = hstack([rad[v], Matrix.identity(f, d)])
        _, pivots = ext.rref()
        for p in pivots:
            if p >= rad[v].ncols:
                lifts.append((v, ext.col(p)))
                mults[v - 1] += 1
    summands = [projective_rep(ppa, v) for v, _ in lifts]
    if summands:
        P, slices = direct_sum_with_slices(summands)
    else:
        P, slices = Representation.zero(X.dt, f), []
    cover = {w: Matrix.zeros(f, X.dims[w - 1], P.dims[w - 1])
             for w in range(1, n + 1)}
    for (v, x), summand, sl in zip(lifts, summands, slices):
        xcol = Matrix.column(f, x)
        for w in range(1, n + 1):
            for i, k in enumerate(summand._path_groups[w]):
                img = _apply_path(ppa, X, k, xcol)
                for r in range(X.dims[w - 1]):
                    cover[w][r, sl[w - 1][0] + i] = img[r, 0]
    return P, cover, mults


def syzygy(ppa, X):
    """Kernel of the projective cover: (K, inclusion into P, P, mults)."""
    P, cover, mults = projective_cover(ppa, X)
    J = {}
    for v in range(1, X.dt.rank + 1):
        _, K = cover[v].rank_and_kernel()
        J[v] = K
    K, incl = sub_representation(P, J)
    return K, incl, P, mults


def ext1_dim_oracle(ppa, X, Y):
    """Independent route: apply Hom(-, Y) to 0 -> K -> P -> X -> 0."""
    K, _, P, _ = syzygy(ppa, X)
    return hom_dim(K, Y) - hom_dim(P, Y) + hom_dim(X, Y)


def has_projective_summand(ppa, X):
    """True when some projective (equivalently injective) splits off X.
    P_v splits off iff some pair of maps P_v -> X -> P_v composes to an
    endomorphism with nonzero trace (local endo ring, characteristic 0)."""
    for v in range(1, X.dt.rank + 1):
        P = projective_rep(ppa, v)
        fwd = hom_space(P, X)
        if not fwd:
            continue
        back = hom_space(X, P)
        for phi in fwd:
            for psi in back:
                if not X.field.is_zero(
                        trace_of_endo(P, compose_homs(psi, phi))):
                    return True
    return False


def cosyzygy(ppa, X):
    """Cokernel of the injective hull, computed through duality."""
    if X.total_dim and has_projective_summand(ppa, X):
        raise ValueError("cosyzygy undefined: the module has a projective "
                         "direct summand")
    K, _, _, _ = syzygy(ppa, X.dual())
    return K.dual()


def injective_hull_mults(ppa, X):
    _, _, _, mults = syzygy(ppa, X.dual())
    return mults


# -- orbit geometry -----------------------------------------------------------


def orbit_dim(X):
    return sum(d * d for d in X.dims) - hom_dim(X, X)


def orbit_codim(X):
    """Codimension of the orbit inside the module variety, which has the
    dimension of the representation space of the single quiver."""
    q = build_quiver(X.dt)
    amb = sum(X.dims[a.src - 1] * X.dims[a.tgt - 1] for a in q.arrows)
    return amb - orbit_dim(X)


# -- extensions: cocycles, coboundaries, middle terms -------------------------


def _cocycle_layout(X, Y):
    dq = X.dquiver
    offs = {}
    total = 0
    for a in dq.arrows:
        offs[a.name] = total
        total += Y.dims[a.tgt - 1] * X.dims[a.src - 1]
    return offs, total


def _flatten_cocycle(X, Y, c):
    offs, total = _cocycle_layout(X, Y)
    vec = [X.field.zero()] * total
    for name, m in c.items():
        base = offs[name]
        idx = 0
        for row in m.rows:
            for x in row:
                vec[base + idx] = x
                idx += 1
    return vec


def coboundary_matrix(X, Y):
    """Columns: cocycles of the maps g -> (f^Y_a g_s - g_t f^X_a)."""
    f = X.field
    dq = X.dquiver
    cols = []
    for v in range(1, X.dt.rank + 1):
        for i in range(Y.dims[v - 1]):
            for j in range(X.dims[v - 1]):
                g = zero_hom(X, Y)
                g[v][i, j] = f.one()
                c = {}
                for a in dq.arrows:
                    c[a.name] = Y.mat(a.name) * g[a.src] - \
                        g[a.tgt] * X.mat(a.name)
                cols.append(_flatten_cocycle(X, Y, c))
    _, total = _cocycle_layout(X, Y)
    return Matrix.from_cols(f, cols, nrows=total)


def cocycle_space(X, Y):
    """Basis of the space of extension cocycles: families c = (c_a) such
    that the block matrices [[f^Y, c], [0, f^X]] satisfy the relations."""
    f = X.field
    dq = X.dquiver
    offs, total = _cocycle_layout(X, Y)
    if total == 0:
        return []
    rows = []
    for v in range(1, X.dt.rank + 1):
        # off-diagonal defect block at v, linear in the c_a:
        #   sum_{s(a)=v} (f^Y_{a*} c_a + c_{a*} f^X_a)
        # - sum_{t(a)=v} (f^Y_a c_{a*} + c_a f^X_{a*})
        terms = []
        for al in dq.original:
            if al.src == v:
                terms.append((1, "Yc", al.name + "*", al.name))
                terms.append((1, "cX", al.name + "*", al.name))
            if al.tgt == v:
                terms.append((-1, "Yc", al.name, al.name + "*"))
                terms.append((-1, "cX", al.name, al.name + "*"))
        dY, dX = Y.dims[v - 1], X.dims[v - 1]
        for i in range(dY):
            for j in range(dX):
                row = [f.zero()] * total
                for sign, kind, bname, aname in terms:
                    if kind == "Yc":
                        # (f^Y_b @ c_a)[i, j]; a starts at v
                        FY = Y.mat(bname)
                        a = dq.by_name[aname]
                        width = X.dims[a.src - 1]
                        for k in range(Y.dims[a.tgt - 1]):
                            val = FY[i, k]
                            if not f.is_zero(val):
                                idx = offs[aname] + k * width + j
                                row[idx] = f.add(
                                    row[idx], f.mul(f.of(sign), val))
                    else:
                        # (c_b @ f^X_a)[i, j]; a starts at v
                        FX = X.mat(aname)
                        b = dq.by_name[bname]
                        width = X.dims[b.src - 1]
                        for k in range(width):
                            val = FX[k, j]
                            if not f.is_zero(val):
                                idx = offs[bname] + i * width + k
                                row[idx] = f.add(
                                    row[idx], f.mul(f.of(sign), val))
                rows.append(row)
    if rows:
        _, K = Matrix(f, rows, ncols=total).rank_and_kernel()
    else:
        K = Matrix.identity(f, total)
    basis = []
    for cidx in range(K.ncols):
        vec = K.col(cidx)
        c = {}
        for a in dq.arrows:
            width = X.dims[a.src - 1]
            body = [[vec[offs[a.name] + i * width + j] for j in range(width)]
                    for i in range(Y.dims[a.tgt - 1])]
            c[a.name] = Matrix(f, body, ncols=width)
        basis.append(c)
    return basis


def ext1_classes(X, Y):
    """Cocycles spanning Ext^1(X, Y) modulo coboundaries: (reps, dim)."""
    Z = cocycle_space(X, Y)
    B = coboundary_matrix(X, Y)
    cur, cur_rank = B, B.rank()
    chosen = []
    for c in Z:
        cand = hstack(
            [cur, Matrix.column(X.field, _flatten_cocycle(X, Y, c))])
        r = cand.rank()
        if r > cur_rank:
            chosen.append(c)
            cur, cur_rank = cand, r
    return chosen, len(chosen)


def extension_middle(X, Y, c):
    """The middle term of the extension of X by Y with cocycle c, carrying
    Y as a subrepresentation and X as the quotient."""
    f = X.field
    n = X.dt.rank
    dims = [Y.dims[v] + X.dims[v] for v in range(n)]
    mats = {}
    for a in X.dquiver.arrows:
        t, s = a.tgt - 1, a.src - 1
        M = Matrix.zeros(f, dims[t], dims[s])
        FY, FX, C = Y.mat(a.name), X.mat(a.name), c[a.name]
        for i in range(FY.nrows):
            for j in range(FY.ncols):
                M[i, j] = FY[i, j]
            for j in range(C.ncols):
                M[i, Y.dims[s] + j] = C[i, j]
        for i in range(FX.nrows):
            for j in range(FX.ncols):
                M[Y.dims[t] + i, Y.dims[s] + j] = FX[i, j]
        mats[a.name] = M
    return Representation(X.dt, dims, mats, f)


# -- decomposition into indecomposables ---------------------------------------


def trace_of_endo(X, f):
    tr = X.field.zero()
    for v in range(1, X.dt.rank + 1):
        m = f[v]
        for i in range(min(m.nrows, m.ncols)):
            tr = X.field.add(tr, m[i, i])
    return tr


def _power_hom(X, phi, n):
    cur = identity_hom(X)
    base = phi
    while n:
        if n & 1:
            cur = compose_homs(cur, base)
        base = compose_homs(base, base)
        n >>= 1
    return cur


def _hom_eq(f, g):
    return all(f[v] == g[v] for v in f)


def _try_fitting(X, phi):
    """Split X = ker(phi^N) + im(phi^N); None when phi^N is 0 or a unit."""
    p = _power_hom(X, phi, X.total_dim)
    kernels, k_total = {}, 0
    for v in range(1, X.dt.rank + 1):
        _, K = p[v].rank_and_kernel()
        kernels[v] = K
        k_total += K.ncols
    if k_total == 0 or k_total == X.total_dim:
        return None
    images = {}
    for v in range(1, X.dt.rank + 1):
        _, pivots = p[v].rref()
        images[v] = Matrix.from_cols(
            X.field, [p[v].col(c) for c in pivots], nrows=p[v].nrows)
    return sub_representation(X, kernels), sub_representation(X, images)


def _central_split_hom(X, E, gram):
    """A nontrivial idempotent endomorphism found by splitting the centre
    of End(X) modulo its radical; None if that route does not apply."""
    f = X.field
    m = len(E)
    _, radK = gram.rank_and_kernel()
    sdim = m - radK.ncols
    if sdim <= 1:
        return None
    ext = hstack([radK, Matrix.identity(f, m)])
    _, pivots = ext.rref()
    comp_idx = [p - radK.ncols for p in pivots if p >= radK.ncols]
    U = hstack([
        Matrix.from_cols(f, [[f.one() if r == c else f.zero()
                              for r in range(m)] for c in comp_idx],
                         nrows=m),
        radK])
    Uinv = U.invert()
    hb = HomBasis(X, X, basis=E)

    def s_coords(phi):
        alpha = Matrix.column(f, list(hb.express(phi)))
        return (Uinv * alpha).col(0)[:sdim]

    table = [[s_coords(compose_homs(E[ci], E[cj])) for cj in comp_idx]
             for ci in comp_idx]
    unit = s_coords(identity_hom(X))

    def s_mult_vec(z, w):
        out = [f.zero()] * sdim
        for i in range(sdim):
            if f.is_zero(z[i]):
                continue
            for j in range(sdim):
                if f.is_zero(w[j]):
                    continue
                coeff = f.mul(z[i], w[j])
                for k in range(sdim):
                    out[k] = f.add(out[k], f.mul(coeff, table[i][j][k]))
        return out

    # centre: z with z*s_j = s_j*z for all j
    rows = []
    for j in range(sdim):
        for k in range(sdim):
            rows.append([f.sub(table[i][j][k], table[j][i][k])
                         for i in range(sdim)])
    _, cent = Matrix(f, rows, ncols=sdim).rank_and_kernel()
    if cent.ncols <= 1:
        return None
    unit_col = Matrix.column(f, unit)
    z = None
    for c in range(cent.ncols):
        cand = cent.column_matrix(c)
        if hstack([unit_col, cand]).rank() == 2:
            z = cent.col(c)
            break
    if z is None:
        return None
    # minimal polynomial of z via its Krylov sequence
    vecs = [unit]
    cur = unit
    coeffs = None
    for _ in range(sdim + 1):
        cur = s_mult_vec(z, cur)
        M = Matrix.from_cols(f, vecs, nrows=sdim)
        sol, _ = solve_linear(M, Matrix.column(f, cur))
        if sol is not None:
            coeffs = [f.neg(x) for x in sol.col(0)] + [f.one()]
            break
        vecs.append(cur)
    if coeffs is None or len(coeffs) <= 2:
        return None
    try:
        roots = rational_roots_split([Fraction(c) for c in coeffs])
    except ValueError:
        return None
    if len(roots) < 2:
        return None
    lam0, rest = roots[0], roots[1:]
    w = unit
    denom = f.one()
    for lam in rest:
        w = [f.sub(a, f.mul(f.of(lam), b)) for a, b in zip(s_mult_vec(z, w), w)]
        denom = f.mul(denom, f.of(lam0 - lam))
    w = [f.div(x, denom) for x in w]
    # lift to an honest idempotent endomorphism by Newton iteration
    full = Matrix.column(f, list(w) + [f.zero()] * radK.ncols)
    gamma = (U * full).col(0)
    e = zero_hom(X, X)
    for k, c in enumerate(gamma):
        if not f.is_zero(c):
            e = hom_add(e, hom_scale(E[k], c))
    for _ in range(60):
        e2 = compose_homs(e, e)
        if _hom_eq(e2, e):
            break
        e = hom_add(hom_scale(e2, f.of(3)),
                    hom_scale(compose_homs(e2, e), f.of(-2)))
    else:
        return None
    if all(mat.is_zero() for mat in e.values()):
        return None
    if _hom_eq(e, identity_hom(X)):
        return None
    return e


def _decompose_work(X, rng):
    if X.total_dim == 0:
        return []
    E = hom_space(X, X)
    if len(E) == 1:
        return [(X, identity_hom(X))]

    def finish(split):
        out = []
        for S, incl in split:
            for W, sub_incl in _decompose_work(S, rng):
                out.append((W, {v: incl[v] * sub_incl[v] for v in incl}))
        return out

    candidates = list(E)
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            candidates.append(hom_add(E[i], E[j]))
    for phi in candidates:
        split = _try_fitting(X, phi)
        if split:
            return finish(split)
    f = X.field
    gram = Matrix(f, [[trace_of_endo(X, compose_homs(a, b)) for b in E]
                      for a in E], ncols=len(E))
    if gram.rank() == 1:
        # endomorphisms modulo nilpotents are one dimensional: local ring
        return [(X, identity_hom(X))]
    e = _central_split_hom(X, E, gram)
    if e is not None:
        split = _try_fitting(X, e)
        if split:
            return finish(split)
    for _ in range(500):
        phi = zero_hom(X, X)
        for b in E:
            phi = hom_add(phi, hom_scale(b, f.of(rng.randint(-4, 4))))
        split = _try_fitting(X, phi)
        if split:
            return finish(split)
    raise ValueError(
        "could not split the module over the rational field; its "
        "endomorphism ring has an isotypic block with no rational splitting")


def split_indecomposables(X, seed=0):
    """Indecomposable summands of X as (summand, inclusion) pairs, in a
    deterministic order (by total dimension, dimension vector, profile)."""
    rng = random.Random(seed)
    parts = _decompose_work(X, rng)
    return sorted(parts, key=lambda p: (
        p[0].total_dim, p[0].dims, socle_profile(p[0])))


def decompose(X, seed=0):
    """Indecomposable summands with multiplicities, grouped up to iso."""
    groups = []
    for S, _ in split_indecomposables(X, seed):
        for k, (W, mult) in enumerate(groups):
            if _indec_iso_witness(W, S) is not None:
                groups[k] = (W, mult + 1)
                break
        else:
            groups.append((S, 1))
    return groups


def _indec_iso_witness(A, B):
    """For indecomposables over QQ: some hom with a back-map of nonzero
    trace is an isomorphism."""
    if A.dims != B.dims:
        return None
    fwd = hom_space(A, B)
    back = hom_space(B, A)
    for phi in fwd:
        for psi in back:
            if not A.field.is_zero(trace_of_endo(A, compose_homs(psi, phi))):
                return phi
    return None


def is_isomorphic(X, Y, seed=0):
    """(answer, witness); the witness is an invertible hom X -> Y.

    Strategy: random combinations of a Hom basis, then a deterministic
    sweep over small coefficients, then certified Krull-Schmidt matching
    (the only route that can answer False)."""
    if X.dt != Y.dt or X.dims != Y.dims:
        return False, None
    if X.total_dim == 0:
        return True, identity_hom(X)
    basis = hom_space(X, Y)
    if len(basis) != len(hom_space(Y, X)):
        return False, None
    f = X.field

    def invertible(phi):
        return all(phi[v].rank() == X.dims[v - 1] for v in phi)

    rng = random.Random(seed)
    for _ in range(6):
        phi = zero_hom(X, Y)
        for b in basis:
            phi = hom_add(phi, hom_scale(b, f.of(rng.randint(-9, 9))))
        if invertible(phi):
            return True, phi
    if len(basis) <= 7:
        for coeffs in itertools.product((0, 1, -1), repeat=len(basis)):
            if not any(coeffs):
                continue
            phi = zero_hom(X, Y)
            for c, b in zip(coeffs, basis):
                if c:
                    phi = hom_add(phi, hom_scale(b, f.of(c)))
            if invertible(phi):
                return True, phi
    return _iso_by_decomposition(X, Y, seed)


def _iso_by_decomposition(X, Y, seed=0):
    DX = split_indecomposables(X, seed)
    DY = split_indecomposables(Y, seed)
    if len(DX) != len(DY):
        return False, None
    f = X.field
    used = [False] * len(DY)
    matches = []
    for S, incl in DX:
        found = None
        for j, (T, _) in enumerate(DY):
            if used[j]:
                continue
            phi = _indec_iso_witness(S, T)
            if phi is not None:
                found = (j, phi)
                break
        if found is None:
            return False, None
        used[found[0]] = True
        matches.append((incl, found[1], DY[found[0]][1]))
    # assemble: sum over summands of (Y-inclusion) o phi o (X-projection)
    witness = {}
    for v in range(1, X.dt.rank + 1):
        UX = hstack([incl[v] for incl, _, _ in matches])
        UXinv = UX.invert()
        W = Matrix.zeros(f, Y.dims[v - 1], X.dims[v - 1])
        row0 = 0
        for incl, phi, kappa in matches:
            k = incl[v].ncols
            proj = UXinv.submatrix(range(row0, row0 + k),
                                   range(UXinv.ncols))
            W = W + kappa[v] * phi[v] * proj
            row0 += k
        witness[v] = W
    if not is_rep_hom(X, Y, witness):
        raise AssertionError("assembled witness is not a morphism")
    for v in witness:
        if witness[v].rank() != X.dims[v - 1]:
            raise AssertionError("assembled witness is not invertible")
    return True, witness
