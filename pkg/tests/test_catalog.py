from fractions import Fraction

import pytest

from ppalg.catalog import ModuleSum, build_catalog
from ppalg.fields import QQ
from ppalg.linalg import Matrix
from ppalg.quivers import DynkinType
from ppalg.reps import Representation, direct_sum, socle_profile


@pytest.fixture(scope="module")
def cat2():
    return build_catalog("A2")


@pytest.fixture(scope="module")
def cat3():
    return build_catalog("A3")


@pytest.fixture(scope="module")
def cat4():
    return build_catalog("A4")


def test_counts(cat2, cat3, cat4):
    assert len(cat2) == 4
    assert len(cat3) == 12
    assert len(cat4) == 40


def test_a2_golden_entries(cat2):
    got = [(e.name, e.dims, e.profile, e.projective) for e in cat2.entries]
    assert got == [
        ("S1", (1, 0), "1", False),
        ("S2", (0, 1), "2", False),
        ("P1", (1, 1), "1/2", True),
        ("P2", (1, 1), "2/1", True),
    ]


def test_a3_golden_entries(cat3):
    got = [(e.name, e.dims, e.profile) for e in cat3.entries]
    assert got == [
        ("S1", (1, 0, 0), "1"),
        ("S2", (0, 1, 0), "2"),
        ("S3", (0, 0, 1), "3"),
        ("P1", (1, 1, 1), "1/2/3"),
        ("P2", (1, 2, 1), "2/1 3/2"),
        ("P3", (1, 1, 1), "3/2/1"),
        ("(1 / 2)", (1, 1, 0), "1/2"),
        ("(2 / 1)", (1, 1, 0), "2/1"),
        ("(2 / 3)", (0, 1, 1), "2/3"),
        ("(3 / 2)", (0, 1, 1), "3/2"),
        ("(1 3 / 2)", (1, 1, 1), "1 3/2"),
        ("(2 / 1 3)", (1, 1, 1), "2/1 3"),
    ]
    assert [e.id for e in cat3.entries] == list(range(12))
    assert cat3.projective_ids == [3, 4, 5]


def test_all_entries_rigid_and_consistent(cat2, cat3, cat4):
    for cat in (cat2, cat3, cat4):
        for e in cat.entries:
            assert e.rigid
            assert e.rep.satisfies_relations()
            assert socle_profile(e.rep) == e.profile
            rendered = "/".join(
                " ".join(str(v + 1)
                         for v, d in enumerate(layer) for _ in range(d))
                for layer in e.layers)
            assert rendered == e.profile


def test_a4_shape(cat4):
    dist = {}
    for e in cat4.entries:
        dist[e.total_dim] = dist.get(e.total_dim, 0) + 1
    assert sorted(dist.items()) == [
        (1, 4), (2, 6), (3, 8), (4, 10), (5, 4), (6, 6), (7, 2)]
    assert [cat4.entry(i).dims for i in cat4.projective_ids] == [
        (1, 1, 1, 1), (1, 2, 2, 1), (1, 2, 2, 1), (1, 1, 1, 1)]
    assert cat4.r == 10


def test_identify_every_entry(cat3):
    for e in cat3.entries:
        assert cat3.identify(e.rep) == e.id


def test_identify_after_base_change(cat3):
    P2 = cat3.entry(4).rep
    U = {1: Matrix(QQ, [[Fraction(3)]]),
         2: Matrix(QQ, [[Fraction(1), Fraction(2)],
                        [Fraction(1), Fraction(3)]]),
         3: Matrix(QQ, [[Fraction(1)]])}
    mats = {}
    for a in P2.dquiver.arrows:
        mats[a.name] = U[a.tgt] * P2.mat(a.name) * U[a.src].invert()
    twisted = Representation(P2.dt, P2.dims, mats)
    assert twisted.satisfies_relations()
    assert cat3.identify(twisted) == 4


def test_canonical_sum_a2(cat2):
    T = cat2.sum_of([0, 2, 3])
    assert cat2.canonical_sum(T.rep()) == T
    S1 = cat2.entry(0).rep
    double = cat2.canonical_sum(direct_sum([S1, S1]))
    assert double.items() == [(0, 2)]
    assert not double.is_basic()


def test_canonical_sum_a3_six_summands(cat3):
    T = cat3.sum_of([0, 6, 7, 3, 4, 5])
    assert T.items() == [(0, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)]
    assert T.is_basic() and T.total() == 6
    assert cat3.canonical_sum(T.rep()) == T


def test_lookup(cat3):
    assert cat3.lookup("S1").id == 0
    assert cat3.lookup("P2").id == 4
    assert cat3.lookup("2/1 3").id == 11
    assert cat3.lookup("(2 / 1 3)").id == 11
    assert cat3.lookup("1 3/2").id == 10
    with pytest.raises(LookupError):
        cat3.lookup("4/5")


def test_module_sum_ops(cat2):
    T = ModuleSum.from_ids(cat2, [3, 0, 2])
    assert T.expanded == [0, 2, 3]
    assert 2 in T and 1 not in T
    assert T.add(0).counts[0] == 2
    assert T.remove(0).expanded == [2, 3]
    with pytest.raises(ValueError):
        T.remove(1)
    with pytest.raises(ValueError):
        ModuleSum(cat2, {17: 1})
    assert hash(T) == hash(cat2.sum_of([0, 2, 3]))
    assert T != cat2.sum_of([0, 2])


def test_hom_ext_tables(cat2):
    assert cat2.hom(2, 3) == 1
    assert cat2.hom(0, 2) == 0
    assert cat2.ext(0, 1) == 1
    assert cat2.ext(1, 0) == 1
    for i in range(4):
        for j in range(4):
            assert cat2.ext(i, j) == cat2.ext(j, i)
            if i in cat2.projective_ids or j in cat2.projective_ids:
                assert cat2.ext(i, j) == 0


def test_display(cat3):
    assert cat3.entry(11).display() == "(2 / 1 3)"
    assert cat3.entry(4).display() == "(2 / 1 3 / 2)"
    assert cat3.entry(0).display() == "(1)"


def test_json_round(cat2):
    d = cat2.to_json(with_reps=True)
    assert d["count"] == 4
    assert d["entries"][2]["name"] == "P1"
    got = Representation.from_json_dict(d["entries"][2]["rep"])
    assert got.dims == (1, 1)
