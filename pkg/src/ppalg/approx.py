"""Minimal left/right approximations inside add(T), exchange sequences, and
mutation of basic complete rigid modules.

A left approximation of X is assembled as the universal map into one copy of
T_i per Hom(X, T_i) basis element, then minimized by greedily stripping
copies (summands in ascending catalog id, copies last to first) while the
factorization property survives. The resulting multiplicities and cokernel
are independent of the stripping order, so the greedy pass is safe.
"""

from __future__ import annotations

from .catalog import ModuleSum
from .linalg import Matrix
from .reps import (
    Representation, compose_homs, direct_sum_with_slices, flatten_hom,
    hom_space, quotient_representation, sub_representation, zero_hom,
)


class MutationDirectionError(ValueError):
    """Requested mutation slot is projective or out of range."""


class ApproximationResult:
    """Minimal approximation data: the add(T) module, the map, and its
    kernel/cokernel with the connecting inclusion/projection."""

    def __init__(self, side, rep, map, mults, kernel, kernel_incl,
                 cokernel, coker_proj):
        self.side = side
        self.rep = rep
        self.map = map
        self.mults = mults
        self.kernel = kernel
        self.kernel_incl = kernel_incl
        self.cokernel = cokernel
        self.coker_proj = coker_proj

    def sum(self, catalog):
        return ModuleSum(catalog, self.mults)


def _col_basis(field, M):
    """Matrix whose columns are a basis of the column space of M."""
    R, pivots = M.transpose().rref()
    cols = [list(R.rows[i]) for i in range(len(pivots))]
    return Matrix.from_cols(field, cols, nrows=M.nrows)


def _kernel_basis(M):
    _, K = M.rank_and_kernel()
    return K


def _assemble(catalog, X, copies, side):
    """Direct sum over copies plus the stacked map (left: X -> M, right:
    M -> X)."""
    field = X.field
    n = X.dt.rank
    if not copies:
        M = Representation(X.dt, [0] * n, {}, field)
        f = zero_hom(X, M) if side == "left" else zero_hom(M, X)
        return M, f
    M, slices = direct_sum_with_slices(
        [catalog.entry(i).rep for i, _ in copies])
    f = {}
    for v in range(1, n + 1):
        if side == "left":
            out = Matrix.zeros(field, M.dims[v - 1], X.dims[v - 1])
        else:
            out = Matrix.zeros(field, X.dims[v - 1], M.dims[v - 1])
        for idx, (_, h) in enumerate(copies):
            block = h[v]
            off = slices[idx][v - 1][0]
            for i in range(block.nrows):
                for j in range(block.ncols):
                    if side == "left":
                        out[off + i, j] = block[i, j]
                    else:
                        out[i, off + j] = block[i, j]
        f[v] = out
    return M, f


def _is_left_approximation(catalog, X, support, M, f):
    """Every X -> T_k with T_k a summand of T factors through f."""
    for k in support:
        Tk = catalog.entry(k).rep
        need = hom_space(X, Tk)
        if not need:
            continue
        comps = [flatten_hom(X, Tk, compose_homs(h, f))
                 for h in hom_space(M, Tk)]
        size = sum(Tk.dims[v] * X.dims[v] for v in range(X.dt.rank))
        got = Matrix.from_cols(X.field, comps, nrows=size)
        if got.rank() < len(need):
            return False
    return True


def _is_right_approximation(catalog, X, support, M, f):
    for k in support:
        Tk = catalog.entry(k).rep
        need = hom_space(Tk, X)
        if not need:
            continue
        comps = [flatten_hom(Tk, X, compose_homs(f, h))
                 for h in hom_space(Tk, M)]
        size = sum(Tk.dims[v] * X.dims[v] for v in range(X.dt.rank))
        got = Matrix.from_cols(X.field, comps, nrows=size)
        if got.rank() < len(need):
            return False
    return True


def _minimize(catalog, X, support, copies, holds):
    for i in sorted({c[0] for c in copies}):
        positions = [p for p, c in enumerate(copies) if c[0] == i]
        for p in reversed(positions):
            trial = copies[:p] + copies[p + 1:]
            M, f = _assemble(catalog, X, trial,
                             "left" if holds is _is_left_approximation
                             else "right")
            if holds(catalog, X, support, M, f):
                copies = trial
    return copies


def minimal_left_approx(X, T):
    """Minimal left add(T)-approximation of X; T is a ModuleSum."""
    catalog = T.catalog
    support = sorted(set(T.expanded))
    copies = [(i, h) for i in support
              for h in hom_space(X, catalog.entry(i).rep)]
    copies = _minimize(catalog, X, support, copies, _is_left_approximation)
    M, f = _assemble(catalog, X, copies, "left")
    mults = {}
    for i, _ in copies:
        mults[i] = mults.get(i, 0) + 1
    kerJ = {v: _kernel_basis(f[v]) for v in f}
    kernel, incl = sub_representation(X, kerJ)
    imgJ = {v: _col_basis(X.field, f[v]) for v in f}
    cokernel, proj = quotient_representation(M, imgJ)
    return ApproximationResult("left", M, f, mults, kernel, incl,
                               cokernel, proj)


def minimal_right_approx(X, T):
    """Minimal right add(T)-approximation of X (the mirror construction)."""
    catalog = T.catalog
    support = sorted(set(T.expanded))
    copies = [(i, h) for i in support
              for h in hom_space(catalog.entry(i).rep, X)]
    copies = _minimize(catalog, X, support, copies, _is_right_approximation)
    M, f = _assemble(catalog, X, copies, "right")
    mults = {}
    for i, _ in copies:
        mults[i] = mults.get(i, 0) + 1
    kerJ = {v: _kernel_basis(f[v]) for v in f}
    kernel, incl = sub_representation(M, kerJ)
    imgJ = {v: _col_basis(X.field, f[v]) for v in f}
    cokernel, proj = quotient_representation(X, imgJ)
    return ApproximationResult("right", M, f, mults, kernel, incl,
                               cokernel, proj)


# -- mutation ----------------------------------------------------------------


class ExchangeSequence:
    """Short exact sequence 0 -> T_k -> T' -> T_k* -> 0 produced by one
    mutation step."""

    def __init__(self, catalog, x, middle, y, f, g, middle_rep, coker_rep):
        self.catalog = catalog
        self.x = x
        self.middle = middle
        self.y = y
        self.f = f                  # catalog rep of x -> middle_rep
        self.g = g                  # middle_rep -> coker_rep
        self.middle_rep = middle_rep
        self.coker_rep = coker_rep  # isomorphic to catalog entry y

    def display(self):
        cat = self.catalog
        mid = " + ".join(cat.entry(i).display()
                         for i in self.middle.expanded) or "0"
        return (f"0 -> {cat.entry(self.x).display()} -> {mid} -> "
                f"{cat.entry(self.y).display()} -> 0")

    def to_json(self):
        return {"x": self.x, "middle": self.middle.to_json(), "y": self.y,
                "display": self.display()}

    def __repr__(self):
        return f"ExchangeSequence({self.display()})"


def check_basic_complete_rigid(T):
    catalog = T.catalog
    if not T.is_basic():
        raise ValueError("module sum is not basic")
    ids = T.expanded
    for i in ids:
        for j in ids:
            if catalog.ext(i, j):
                raise ValueError(
                    f"not rigid: Ext^1 between summands {i} and {j} is "
                    f"{catalog.ext(i, j)}")
    for p in catalog.projective_ids:
        if p not in T:
            raise ValueError(f"not complete: projective {p} missing")
    if T.total() != catalog.r:
        raise ValueError(
            f"not complete: {T.total()} summands, expected {catalog.r}")


def canonical_slots(T):
    """Summand order used everywhere: exchangeables by catalog id, then the
    projectives."""
    ids = T.expanded
    nonproj = sorted(i for i in ids if not T.catalog.entry(i).projective)
    proj = sorted(i for i in ids if T.catalog.entry(i).projective)
    return tuple(nonproj + proj)


def mutate_slots(catalog, slots, k):
    """Replace the summand in 1-based position k of the ordered tuple by its
    exchange partner; returns (new slots, ExchangeSequence)."""
    slots = tuple(slots)
    T = ModuleSum.from_ids(catalog, slots)
    check_basic_complete_rigid(T)
    if not 1 <= k <= len(slots):
        raise MutationDirectionError(f"slot {k} out of range 1..{len(slots)}")
    x = slots[k - 1]
    if catalog.entry(x).projective:
        raise MutationDirectionError(
            f"projective direction: slot {k} is {catalog.entry(x).name}")
    rest = T.remove(x)
    appr = minimal_left_approx(catalog.entry(x).rep, rest)
    if appr.kernel.total_dim:
        raise AssertionError("exchange map is not injective")
    got = catalog.canonical_sum(appr.cokernel)
    if got.total() != 1:
        raise AssertionError("exchange cokernel is not indecomposable")
    y = got.expanded[0]
    if y == x:
        raise AssertionError("exchange partner equals the mutated summand")
    seq = ExchangeSequence(catalog, x, appr.sum(catalog), y, appr.map,
                           appr.coker_proj, appr.rep, appr.cokernel)
    return slots[:k - 1] + (y,) + slots[k:], seq


def mutate(T, k):
    """Mutation of a basic complete rigid ModuleSum in direction of its k-th
    summand (canonical slot order)."""
    new_slots, seq = mutate_slots(T.catalog, canonical_slots(T), k)
    return ModuleSum.from_ids(T.catalog, new_slots), seq


def is_maximal_rigid(T):
    """No catalog indecomposable outside add(T) keeps Ext^1 vanishing;
    cross-checked against the summand count criterion."""
    catalog = T.catalog
    ids = sorted(set(T.expanded))
    for i in ids:
        for j in ids:
            if catalog.ext(i, j):
                return False
    ext_route = True
    for c in range(len(catalog.entries)):
        if c in T:
            continue
        if all(catalog.ext(c, j) == 0 for j in ids):
            ext_route = False
            break
    count_route = len(ids) == catalog.r
    assert ext_route == count_route, "maximality criteria disagree"
    return ext_route


def _extend_rigid(catalog, ids, start):
    if len(ids) == catalog.r:
        return ids
    for c in range(start, len(catalog.entries)):
        if c in ids or catalog.entry(c).projective:
            continue
        if all(catalog.ext(c, j) == 0 for j in ids):
            got = _extend_rigid(catalog, ids + [c], c + 1)
            if got:
                return got
    return None


def initial_rigid(catalog):
    """The builtin seed: the worked case-study modules for A2 and A3, and
    the lexicographically first completion of the projectives for A4."""
    fam = (catalog.dt.family, catalog.dt.rank)
    if fam == ("A", 2):
        ids = [0, 2, 3]
    elif fam == ("A", 3):
        ids = [0, 6, 7, 3, 4, 5]
    else:
        ids = _extend_rigid(catalog, list(catalog.projective_ids), 0)
        if ids is None:
            raise RuntimeError("no completion of the projectives found")
    T = ModuleSum.from_ids(catalog, ids)
    check_basic_complete_rigid(T)
    return T
