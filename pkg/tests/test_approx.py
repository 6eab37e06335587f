import pytest

from ppalg.approx import (
    ExchangeSequence, canonical_slots, check_basic_complete_rigid,
    initial_rigid, is_maximal_rigid, minimal_left_approx,
    minimal_right_approx, mutate, mutate_slots,
)
from ppalg.catalog import ModuleSum, build_catalog
from ppalg.reps import cosyzygy, ext1_dim, is_isomorphic


@pytest.fixture(scope="module")
def cat2():
    return build_catalog("A2")


@pytest.fixture(scope="module")
def cat3():
    return build_catalog("A3")


def test_left_approx_a2_golden(cat2):
    T = cat2.sum_of([0, 2, 3])
    S2 = cat2.entry(1).rep
    appr = minimal_left_approx(S2, T)
    assert appr.mults == {2: 1}
    assert appr.kernel.total_dim == 0
    assert cat2.identify(appr.cokernel) == 0


def test_left_approx_inside_addT(cat2):
    T = cat2.sum_of([0, 2, 3])
    P1 = cat2.entry(2).rep
    appr = minimal_left_approx(P1, T)
    assert appr.mults == {2: 1}
    assert appr.cokernel.total_dim == 0
    assert appr.kernel.total_dim == 0


def test_approx_a3_golden_pair(cat3):
    # the two displayed sequences through the (1/2) <-> (2/1 3) exchange:
    # left approx of (1/2) runs 0 -> (1/2) -> (1)+(2/1 3/2) -> (2/1 3) -> 0,
    # right approx runs 0 -> (2/1 3) -> (2/1)+(1/2/3) -> (1/2) -> 0
    rest = cat3.sum_of([0, 7, 3, 4, 5])
    X = cat3.entry(6).rep
    left = minimal_left_approx(X, rest)
    assert left.mults == {0: 1, 4: 1}
    assert cat3.identify(left.cokernel) == 11
    right = minimal_right_approx(X, rest)
    assert right.mults == {7: 1, 3: 1}
    assert cat3.identify(right.kernel) == 11
    assert right.cokernel.total_dim == 0


def test_right_approx_mirrors(cat2):
    T = cat2.sum_of([0, 2, 3])
    S2 = cat2.entry(1).rep
    appr = minimal_right_approx(S2, T)
    # P_2 surjects onto S_2; the universal cover from add(T)
    assert appr.mults == {3: 1}
    assert appr.cokernel.total_dim == 0
    assert cat2.identify(appr.kernel) == 0


def test_mutate_a2_both_sequences(cat2):
    T = cat2.sum_of([0, 2, 3])
    Tstar, seq = mutate(T, 1)
    assert Tstar == cat2.sum_of([1, 2, 3])
    assert (seq.x, seq.y) == (0, 1)
    assert seq.display() == "0 -> (1) -> (2 / 1) -> (2) -> 0"
    back, seq2 = mutate(Tstar, 1)
    assert back == T
    assert seq2.display() == "0 -> (2) -> (1 / 2) -> (1) -> 0"
    # the two sequences through the exchange pair share no summand
    assert set(seq.middle.expanded) & set(seq2.middle.expanded) == set()


def test_mutate_a3_slot2(cat3):
    T = initial_rigid(cat3)
    slots = canonical_slots(T)
    assert slots == (0, 6, 7, 3, 4, 5)
    new_slots, seq = mutate_slots(cat3, slots, 2)
    assert new_slots == (0, 11, 7, 3, 4, 5)
    assert (seq.x, seq.y) == (6, 11)
    assert seq.middle == cat3.sum_of([0, 4])
    assert seq.display() == \
        "0 -> (1 / 2) -> (1) + (2 / 1 3 / 2) -> (2 / 1 3) -> 0"
    back, seq2 = mutate_slots(cat3, new_slots, 2)
    assert back == slots
    assert seq2.middle == cat3.sum_of([7, 3])
    assert seq2.display() == \
        "0 -> (2 / 1 3) -> (1 / 2 / 3) + (2 / 1) -> (1 / 2) -> 0"
    assert set(seq.middle.expanded) & set(seq2.middle.expanded) == set()


def test_exchange_exactness(cat3):
    T = initial_rigid(cat3)
    slots = canonical_slots(T)
    for k in (1, 2, 3):
        _, seq = mutate_slots(cat3, slots, k)
        X = cat3.entry(seq.x).rep
        M = seq.middle_rep
        Y = seq.coker_rep
        assert tuple(a + b for a, b in zip(X.dims, Y.dims)) == M.dims
        assert ext1_dim(cat3.entry(seq.y).rep, X) == 1
        assert ext1_dim(X, cat3.entry(seq.y).rep) == 1
        for v in range(1, 4):
            fv, gv = seq.f[v], seq.g[v]
            assert (gv * fv).rank() == 0
            assert fv.rank() == X.dims[v - 1]
            assert gv.rank() == Y.dims[v - 1]
            assert fv.rank() + gv.rank() == M.dims[v - 1]


def test_mutate_errors(cat2):
    T = cat2.sum_of([0, 2, 3])
    with pytest.raises(ValueError, match="projective direction"):
        mutate(T, 2)
    with pytest.raises(ValueError, match="out of range"):
        mutate(T, 4)
    with pytest.raises(ValueError, match="not rigid"):
        mutate(cat2.sum_of([0, 1, 2, 3]), 1)
    with pytest.raises(ValueError, match="not complete"):
        mutate_slots(cat2, (0, 2), 1)
    with pytest.raises(ValueError, match="not basic"):
        mutate_slots(cat2, (0, 0, 2, 3), 1)


def test_is_maximal_rigid(cat2, cat3):
    assert is_maximal_rigid(cat2.sum_of([0, 2, 3]))
    assert is_maximal_rigid(cat2.sum_of([1, 2, 3]))
    assert not is_maximal_rigid(cat2.sum_of([2, 3]))
    assert not is_maximal_rigid(cat2.sum_of([0, 1, 2, 3]))
    assert is_maximal_rigid(initial_rigid(cat3))
    assert not is_maximal_rigid(cat3.sum_of([3, 4, 5]))


def test_rigid_sums_bounded_by_r(cat2, cat3):
    for cat in (cat2, cat3):
        T = initial_rigid(cat)
        assert T.total() <= cat.r
        check_basic_complete_rigid(T)


def test_cosyzygy_is_projective_approx_cokernel(cat3):
    Lam = cat3.sum_of(cat3.projective_ids)
    for e in cat3.entries:
        if e.projective:
            continue
        appr = minimal_left_approx(e.rep, Lam)
        want = cosyzygy(cat3.ppa, e.rep)
        assert is_isomorphic(appr.cokernel, want)


def test_initial_rigid_a4():
    cat4 = build_catalog("A4")
    T = initial_rigid(cat4)
    assert T.total() == 10
    assert is_maximal_rigid(T)
    for p in cat4.projective_ids:
        assert p in T


def test_every_hom_factors_through_approx(cat3):
    from ppalg.reps import HomBasis, compose_homs, flatten_hom, hom_space
    from ppalg.linalg import Matrix
    T = initial_rigid(cat3)
    X = cat3.entry(9).rep
    appr = minimal_left_approx(X, T)
    for k in sorted(set(T.expanded)):
        Tk = cat3.entry(k).rep
        need = hom_space(X, Tk)
        if not need:
            continue
        comps = [flatten_hom(X, Tk, compose_homs(h, appr.map))
                 for h in hom_space(appr.rep, Tk)]
        size = sum(Tk.dims[v] * X.dims[v] for v in range(3))
        assert Matrix.from_cols(X.field, comps, nrows=size).rank() \
            == len(need)
