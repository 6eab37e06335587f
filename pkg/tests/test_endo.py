import pytest

from ppalg.algebras import (
    dominant_dimension, ext_dim, global_dimension, projective_dimension,
)
from ppalg.approx import canonical_slots, initial_rigid, mutate_slots
from ppalg.catalog import ModuleSum, build_catalog
from ppalg.endo import (
    endo_algebra, exchange_data, ft_module, gamma_quiver, mat_identity,
    mat_mul, mat_transpose, s_matrix,
)

A3_C = [
    [1, 1, 0, 1, 0, 0],
    [0, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 1],
    [0, 1, 1, 1, 2, 1],
    [1, 1, 1, 1, 1, 1],
]
A3_R = [
    [0, 1, -1, 0, 0, 0],
    [-1, 0, 1, 1, -1, 0],
    [1, -1, 0, 0, 1, -1],
    [0, -1, 0, 1, 0, 0],
    [0, 1, -1, -1, 1, 0],
    [0, 0, 1, 0, -1, 1],
]
A3_STAR_C = [
    [1, 0, 0, 1, 0, 0],
    [1, 1, 0, 1, 1, 1],
    [1, 1, 1, 1, 1, 0],
    [0, 1, 0, 1, 1, 1],
    [0, 1, 1, 1, 2, 1],
    [1, 1, 1, 1, 1, 1],
]
A3_STAR_R = [
    [0, -1, 0, 1, 0, 0],
    [1, 0, -1, -1, 1, 0],
    [0, 1, 0, 0, 0, -1],
    [-1, 1, 0, 1, -1, 0],
    [0, -1, 0, 0, 1, 0],
    [0, 0, 1, 0, -1, 1],
]


def arrows_of(gamma):
    return {(i + 1, j + 1)
            for i, row in enumerate(gamma) for j, c in enumerate(row) if c}


@pytest.fixture(scope="module")
def cat2():
    return build_catalog("A2")


@pytest.fixture(scope="module")
def cat3():
    return build_catalog("A3")


@pytest.fixture(scope="module")
def ed2(cat2):
    return exchange_data(initial_rigid(cat2))


@pytest.fixture(scope="module")
def ed3(cat3):
    return exchange_data(initial_rigid(cat3))


def test_a2_gamma_three_cycle(ed2):
    assert ed2.order == (0, 2, 3)
    assert arrows_of(ed2.gamma) == {(1, 3), (3, 2), (2, 1)}
    assert all(c in (0, 1) for row in ed2.gamma for c in row)


def test_a2_matrices(ed2):
    assert ed2.c == [[1, 1, 0], [0, 1, 1], [1, 1, 1]]
    assert ed2.r_mat == [[0, 1, -1], [-1, 1, 0], [1, -1, 1]]
    assert ed2.b_cols == [[0], [-1], [1]]
    assert s_matrix(ed2.r_mat, 1) == [[-1, 0, 1], [0, 1, 0], [0, 0, 1]]


def test_a2_transport(cat2, ed2):
    slots, _ = mutate_slots(cat2, ed2.order, 1)
    assert slots == (1, 2, 3)
    star = exchange_data(cat2.sum_of(slots), order=slots)
    assert star.c == [[1, 0, 1], [1, 1, 1], [0, 1, 1]]
    assert star.r_mat == [[0, -1, 1], [1, 1, -1], [-1, 0, 1]]
    S = s_matrix(ed2.r_mat, 1)
    assert mat_mul(mat_mul(S, ed2.c), mat_transpose(S)) == star.c
    assert mat_mul(mat_mul(mat_transpose(S), ed2.r_mat), S) == star.r_mat


def test_s_matrix_involution_on_skew(ed2, ed3):
    for ed, k in ((ed2, 1), (ed3, 2)):
        S = s_matrix(ed.b, k)
        assert mat_mul(S, S) == mat_identity(len(ed.b))
    with pytest.raises(ValueError, match="out of range"):
        s_matrix(ed2.b, 4)


def test_a3_gamma_golden(ed3):
    assert ed3.order == (0, 6, 7, 3, 4, 5)
    assert arrows_of(ed3.gamma) == {
        (1, 3), (2, 1), (2, 5), (3, 2), (3, 6),
        (4, 2), (5, 3), (5, 4), (6, 5)}
    assert all(c in (0, 1) for row in ed3.gamma for c in row)
    outs = [sum(row) for row in ed3.gamma]
    ins = [sum(col) for col in zip(*ed3.gamma)]
    assert all(o > 0 for o in outs) and all(i > 0 for i in ins)


def test_a3_matrices_golden(ed3):
    assert ed3.c == A3_C
    assert ed3.r_mat == A3_R
    S = s_matrix(ed3.r_mat, 2)
    assert S[1] == [1, -1, 0, 0, 1, 0]
    for i in (0, 2, 3, 4, 5):
        assert S[i] == [1 if j == i else 0 for j in range(6)]


def test_a3_transport_and_gamma_star(cat3, ed3):
    slots, _ = mutate_slots(cat3, ed3.order, 2)
    assert slots == (0, 11, 7, 3, 4, 5)
    star = exchange_data(cat3.sum_of(slots), order=slots)
    assert star.c == A3_STAR_C
    assert star.r_mat == A3_STAR_R
    S = s_matrix(ed3.r_mat, 2)
    assert mat_mul(mat_mul(S, ed3.c), mat_transpose(S)) == star.c
    assert mat_mul(mat_mul(mat_transpose(S), ed3.r_mat), S) == star.r_mat
    # the mutated quiver, including the long arrow from P_1 back to slot 1
    assert arrows_of(star.gamma) == {
        (1, 2), (2, 3), (2, 4), (3, 6), (4, 5), (4, 1), (5, 2), (6, 5)}


def test_exchange_data_rejects_bad_input(cat2):
    with pytest.raises(ValueError, match="not rigid"):
        exchange_data(cat2.sum_of([0, 1, 2, 3]))
    with pytest.raises(ValueError, match="not complete"):
        exchange_data(cat2.sum_of([0, 2]))


def test_endo_algebra_a2(cat2, ed2):
    E = endo_algebra(cat2, ed2.order)
    assert E.dim == 7
    assert E.algebra.check()
    assert E.algebra.cartan_matrix() == ed2.c
    assert global_dimension(E.algebra).value == 3
    assert global_dimension(E.algebra).exact
    assert dominant_dimension(E.algebra).value == 3
    for i in range(3):
        assert ext_dim(E.algebra, i, i, 1) == 0
        assert ext_dim(E.algebra, i, i, 2) == 0


def test_endo_algebra_a3_dim(cat3, ed3):
    E = endo_algebra(cat3, ed3.order)
    assert E.dim == sum(sum(row) for row in A3_C) == 27
    assert E.algebra.cartan_matrix() == ed3.c


def test_ft_golden_table_a2(cat2, ed2):
    T = initial_rigid(cat2)
    E = endo_algebra(cat2, ed2.order)
    # slot order (T_1, T_3, T_4); weight dims follow that order
    tbl = {}
    for i in range(4):
        tbl[i] = ft_module(cat2.entry(i).rep, T)
    assert tbl[0].weight_dims() == [1, 0, 1]
    assert tbl[1].weight_dims() == [0, 1, 0]
    assert tbl[2].weight_dims() == [1, 1, 1]
    assert tbl[3].weight_dims() == [0, 1, 1]
    # summands of T go to the projectives, S_2 to the simple at T_3's slot
    assert tbl[0].is_isomorphic_indec(E.algebra.projective(0))
    assert tbl[2].is_isomorphic_indec(E.algebra.projective(1))
    assert tbl[3].is_isomorphic_indec(E.algebra.projective(2))
    assert tbl[1].is_isomorphic_indec(E.algebra.simple(1))
    # layered structure: top of Hom(S_1, T) sits at slot 1, socle at slot 3
    assert tbl[0].top_multiplicities() == [1, 0, 0]
    assert tbl[3].top_multiplicities() == [0, 0, 1]


def test_ft_projective_dimension_a2(cat2):
    T = initial_rigid(cat2)
    for e in cat2.entries:
        M = ft_module(e.rep, T)
        pd = projective_dimension(M, cap=2)
        assert pd.exact and pd.value <= 1


def test_ft_action_is_multiplicative(cat2):
    from ppalg.algebras import AlgebraModule
    T = initial_rigid(cat2)
    E = endo_algebra(cat2, canonical_slots(T))
    M = ft_module(cat2.entry(1).rep, T)
    AlgebraModule(E.algebra, M.acts, check=True)
    N = ft_module(cat2.entry(2).rep, T)
    AlgebraModule(E.algebra, N.acts, check=True)


def test_calabi_yau_symmetry_a2(cat2, ed2):
    E = endo_algebra(cat2, ed2.order).algebra
    nonproj = [p for p, i in enumerate(ed2.order)
               if not cat2.entry(i).projective]
    for x in nonproj:
        for z in range(3):
            for i in range(4):
                assert ext_dim(E, x, z, 3 - i) == ext_dim(E, z, x, i)


def test_dot_export(ed2):
    dot = ed2.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 3
    assert '"(1)"' in dot and '"(2 / 1)"' in dot
