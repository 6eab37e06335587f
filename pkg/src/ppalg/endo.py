"""Quiver and matrix data of the endomorphism algebra of a basic complete
rigid module, plus the Hom functor into modules over that algebra.

Summand order is always the global convention from `approx.canonical_slots`
(exchangeables by catalog id, then the projectives), or an explicit ordered
tuple when a mutation has replaced a slot in place. All integer matrices are
plain lists of lists; the Cartan matrix C has c_ij = dim Hom(T_j, T_i), its
inverse transpose R is exact, and B counts arrows of the quiver with
t_ij = (arrows j->i) - (arrows i->j).
"""

from __future__ import annotations

from fractions import Fraction

from .algebras import AlgebraModule, FinDimAlgebra
from .approx import canonical_slots, check_basic_complete_rigid
from .linalg import Matrix
from .reps import (
    HomBasis, compose_homs, flatten_hom, hom_space, hom_add, hom_scale,
    identity_hom, trace_of_endo, zero_hom,
)


def mat_mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)]
            for row in A]


def mat_transpose(A):
    return [list(col) for col in zip(*A)]


def mat_identity(r):
    return [[1 if i == j else 0 for j in range(r)] for i in range(r)]


def _det(A):
    a = [[Fraction(x) for x in row] for row in A]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det) if det.denominator == 1 else det


def _inverse_transpose(C):
    from .fields import QQ
    r = len(C)
    Cq = Matrix(QQ, [[Fraction(x) for x in row] for row in C])
    Rq = Cq.transpose().invert()
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            e = Rq[i, j]
            if e.denominator != 1:
                raise ValueError("Cartan matrix is not unimodular")
            row.append(int(e))
        out.append(row)
    return out


def _lin_comb(zero, basis, coeffs):
    out = zero
    for h, c in zip(basis, coeffs):
        if c:
            out = hom_add(out, hom_scale(h, c))
    return out


def rad_endo_basis(X):
    """Basis of rad End(X) for X indecomposable: the kernel of the trace
    pairing (f, g) -> tr(g o f)."""
    basis = hom_space(X, X)
    d = len(basis)
    f = X.field
    gram = Matrix.zeros(f, d, d)
    for i in range(d):
        for j in range(d):
            gram[i, j] = trace_of_endo(X, compose_homs(basis[j], basis[i]))
    _, K = gram.rank_and_kernel()
    out = []
    for c in range(K.ncols):
        coeffs = [K[i, c] for i in range(d)]
        out.append(_lin_comb(zero_hom(X, X), basis, coeffs))
    return out


def gamma_quiver(T, order=None):
    """Arrow-count matrix of the quiver of End(T): entry [i][j] counts the
    arrows T_i -> T_j (dimension of rad/rad^2 in the module-map direction)."""
    catalog = T.catalog
    if not T.is_basic():
        raise ValueError("module sum is not basic")
    order = canonical_slots(T) if order is None else tuple(order)
    reps = [catalog.entry(i).rep for i in order]
    r = len(order)
    rad = {}
    for a in range(r):
        for b in range(r):
            rad[a, b] = rad_endo_basis(reps[a]) if a == b \
                else hom_space(reps[a], reps[b])
    gamma = [[0] * r for _ in range(r)]
    field = catalog.field
    for a in range(r):
        for b in range(r):
            sq = []
            for c in range(r):
                for f1 in rad[a, c]:
                    for g in rad[c, b]:
                        sq.append(flatten_hom(reps[a], reps[b],
                                              compose_homs(g, f1)))
            size = sum(reps[b].dims[v] * reps[a].dims[v]
                       for v in range(catalog.dt.rank))
            rk = Matrix.from_cols(field, sq, nrows=size).rank() if sq else 0
            gamma[a][b] = len(rad[a, b]) - rk
    return gamma


class ExchangeData:
    """Integer matrices attached to an ordered basic complete rigid module:
    arrow counts, B, B-degrees restricted to exchangeable columns, Cartan C
    and its inverse transpose R."""

    def __init__(self, catalog, order, gamma, b, b_cols, c, r_mat):
        self.catalog = catalog
        self.order = order
        self.gamma = gamma
        self.b = b
        self.b_cols = b_cols
        self.c = c
        self.r_mat = r_mat

    @property
    def r(self):
        return len(self.order)

    @property
    def n(self):
        return self.catalog.n

    def to_json(self):
        return {"order": list(self.order), "gamma": self.gamma, "b": self.b,
                "b_cols": self.b_cols, "c": self.c, "r": self.r_mat}

    def to_dot(self):
        cat = self.catalog
        lines = ["digraph gamma {"]
        for p, i in enumerate(self.order):
            shape = "box" if cat.entry(i).projective else "ellipse"
            lines.append(
                f'  v{p + 1} [label="{cat.entry(i).display()}" '
                f'shape={shape}];')
        for a in range(self.r):
            for b in range(self.r):
                for _ in range(self.gamma[a][b]):
                    lines.append(f"  v{a + 1} -> v{b + 1};")
        lines.append("}")
        return "\n".join(lines)


def exchange_data(T, order=None):
    """All matrix data for a basic complete rigid ModuleSum, with the shape
    and unimodularity checks applied."""
    catalog = T.catalog
    check_basic_complete_rigid(T)
    order = canonical_slots(T) if order is None else tuple(order)
    r = len(order)
    n = catalog.n
    gamma = gamma_quiver(T, order)
    for i in range(r):
        if gamma[i][i]:
            raise AssertionError(f"loop at slot {i + 1}")
        for j in range(r):
            if i != j and gamma[i][j] and gamma[j][i]:
                raise AssertionError(f"2-cycle between slots {i+1},{j+1}")
    b = [[gamma[j][i] - gamma[i][j] for j in range(r)] for i in range(r)]
    b_cols = [row[:r - n] for row in b]
    c = [[catalog.hom(order[j], order[i]) for j in range(r)]
         for i in range(r)]
    if abs(_det(c)) != 1:
        raise AssertionError("Cartan matrix is not unimodular")
    r_mat = _inverse_transpose(c)
    if mat_mul(r_mat, mat_transpose(c)) != mat_identity(r):
        raise AssertionError("inverse transpose check failed")
    if [row[:r - n] for row in r_mat] != b_cols:
        raise AssertionError("R and B disagree on exchangeable columns")
    return ExchangeData(catalog, order, gamma, b, b_cols, c, r_mat)


def s_matrix(B, k):
    """Slot-swap transport matrix: identity except row k, where the entry is
    -1 on the diagonal and the negative part of B's row k off it."""
    r = len(B)
    if not 1 <= k <= r:
        raise ValueError(f"slot {k} out of range 1..{r}")
    S = mat_identity(r)
    i = k - 1
    S[i] = [(-1 if j == i else 0) + max(-B[i][j], 0) for j in range(r)]
    return S


# -- the endomorphism algebra and the Hom functor ----------------------------


class EndoAlgebra:
    """End(T) materialized as a FinDimAlgebra: one idempotent per slot, then
    a radical basis of every Hom block, products expressed exactly."""

    def __init__(self, catalog, order):
        self.catalog = catalog
        self.order = tuple(order)
        self.reps = [catalog.entry(i).rep for i in self.order]
        r = len(self.order)
        field = catalog.field
        homs = []      # global basis as (src slot, tgt slot, hom)
        labels = []
        for a in range(r):
            homs.append((a, a, identity_hom(self.reps[a])))
            labels.append(f"e{a + 1}")
        self._block_basis = {}
        for a in range(r):
            for b in range(r):
                rad = rad_endo_basis(self.reps[a]) if a == b \
                    else hom_space(self.reps[a], self.reps[b])
                start = len(homs)
                for t, h in enumerate(rad):
                    homs.append((a, b, h))
                    labels.append(f"f{a + 1}.{b + 1}.{t}")
                full = ([identity_hom(self.reps[a])] if a == b else []) + rad
                idx = ([a] if a == b else []) + list(range(start,
                                                           start + len(rad)))
                self._block_basis[a, b] = (
                    idx, HomBasis(self.reps[a], self.reps[b], basis=full))
        dim = len(homs)
        table = [[[] for _ in range(dim)] for _ in range(dim)]
        for i, (si, ti, hi) in enumerate(homs):
            for j, (sj, tj, hj) in enumerate(homs):
                if si != tj:
                    continue
                comp = compose_homs(hi, hj)
                idx, hb = self._block_basis[sj, ti]
                coords = hb.express(comp)
                table[i][j] = [(idx[p], coords[p]) for p in range(len(idx))
                               if not field.is_zero(coords[p])]
        weights = [(a, b) for a, b, _ in homs]
        self.homs = homs
        self.algebra = FinDimAlgebra(
            field, labels, table, weights,
            idempotents=list(range(r)),
            radical_generators=list(range(r, dim)))

    @property
    def dim(self):
        return self.algebra.dim

    def ft_module(self, X):
        """Hom(X, T) as a left module over End(T): the basis element
        f: T_a -> T_b acts on the Hom(X, T_a) component by postcomposition."""
        field = self.catalog.field
        comps = [hom_space(X, R) for R in self.reps]
        bases = [HomBasis(X, R, basis=g) for R, g in zip(self.reps, comps)]
        offs = []
        total = 0
        for g in comps:
            offs.append(total)
            total += len(g)
        acts = []
        for (a, b, h) in self.homs:
            M = Matrix.zeros(field, total, total)
            for col, g in enumerate(comps[a]):
                coords = bases[b].express(compose_homs(h, g))
                for row in range(len(comps[b])):
                    M[offs[b] + row, offs[a] + col] = coords[row]
            acts.append(M)
        return AlgebraModule(self.algebra, acts)


_endo_cache = {}


def endo_algebra(catalog, order):
    key = (id(catalog), tuple(order))
    if key not in _endo_cache:
        _endo_cache[key] = EndoAlgebra(catalog, order)
    return _endo_cache[key]


def ft_module(X, T, order=None):
    """Spec-level entry point: the End(T)-module Hom(X, T)."""
    order = canonical_slots(T) if order is None else tuple(order)
    return endo_algebra(T.catalog, order).ft_module(X)
