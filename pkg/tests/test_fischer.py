from fractions import Fraction as F

import pytest

from axial import linalg as la
from axial.fischer import (GeneratorParseError, GroupCapError, MonomialElement, Permutation,
                           element_order, enumerate_group, fischer_space, g334_generators,
                           involution_class, line_orbits, matsuo_algebra, parse_generators,
                           reflection, symmetric_generators, three_transposition_check,
                           transpositions)


def test_composition_convention():
    p = Permutation.from_cycles(3, [(0, 1)])
    q = Permutation.from_cycles(3, [(1, 2)])
    # q first: 0 -> 0 -> 1
    assert (p * q).images[0] == 1


def test_monomial_rule():
    x = MonomialElement(Permutation.from_cycles(3, [(0, 1)]), (1, 2, 0))
    y = MonomialElement(Permutation.from_cycles(3, [(1, 2)]), (0, 1, 2))
    xy = x * y
    tau = y.perm.images
    assert xy.perm == x.perm * y.perm
    assert xy.exps == tuple((x.exps[tau[i]] + y.exps[i]) % 3 for i in range(3))


def test_monomial_identity():
    e = MonomialElement(Permutation.identity(4), (0, 0, 0, 0))
    r = reflection(4, 0, 1, 1)
    assert e * r == r == r * e and e.is_identity()


def test_bad_exponents():
    with pytest.raises(ValueError):
        MonomialElement(Permutation.identity(3), (1, 0, 0))


def test_group_orders():
    assert len(enumerate_group(symmetric_generators(4))) == 24
    assert len(enumerate_group(g334_generators())) == 648
    assert len(enumerate_group([], identity=Permutation.identity(3))) == 1


def test_group_cap():
    with pytest.raises(GroupCapError):
        enumerate_group(symmetric_generators(6), cap=100)


def test_involution_classes():
    s4 = symmetric_generators(4)
    assert len(involution_class(s4, [Permutation.from_cycles(4, [(0, 1)])])) == 6
    s5 = symmetric_generators(5)
    assert len(involution_class(s5, [Permutation.from_cycles(5, [(0, 1)])])) == 10
    gens = g334_generators()
    assert len(involution_class(gens, [gens[0]])) == 18
    with pytest.raises(ValueError):
        involution_class(s4, [Permutation.from_cycles(4, [(0, 1, 2)])])


def test_three_transposition():
    assert three_transposition_check(transpositions(4)).passed
    gens = g334_generators()
    assert three_transposition_check(involution_class(gens, [gens[0]])).passed
    bad = [Permutation.from_cycles(4, [(0, 1)]), Permutation.from_cycles(4, [(0, 2), (1, 3)])]
    res = three_transposition_check(bad)
    assert not res.passed and res.witness[2] == 4


def test_s4_lines(s4_space):
    lines = {frozenset(s4_space.labels[i] for i in L) for L in s4_space.lines}
    assert lines == {
        frozenset({"(1 2)", "(1 3)", "(2 3)"}), frozenset({"(1 2)", "(1 4)", "(2 4)"}),
        frozenset({"(1 3)", "(1 4)", "(3 4)"}), frozenset({"(2 3)", "(2 4)", "(3 4)"})}
    i, j = s4_space.labels.index("(1 2)"), s4_space.labels.index("(3 4)")
    assert not s4_space.collinear(i, j)


def test_fischer_symmetry(g334):
    FS = g334.space
    n = len(FS)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            k = FS.third[(i, j)]
            assert k == FS.third[(j, i)]
            if k is not None:
                assert FS.third[(i, k)] == j and FS.third[(k, j)] == i


def test_normality(g334):
    D = set(g334.D)
    for g in g334.group[::37]:
        assert {g.inverse() * d * g for d in D} == D


def test_g334_generator_orders():
    r = {g.label(): g for g in g334_generators()}
    assert len(r) == 18
    assert element_order(r["r12_0"] * r["r12_1"]) == 3
    assert element_order(r["r12_0"] * r["r34_2"]) == 2


def test_line_dichotomy(g334):
    split = g334.split
    assert len(split.vertical) == 6 and len(split.horizontal) == 36
    labels = g334.space.labels
    assert tuple(sorted(labels.index(x) for x in ("r12_0", "r12_1", "r12_2"))) in split.vertical
    for L in split.horizontal:
        pairs = {frozenset(g334.space.points[i].perm.cycles()[0]) for i in L}
        assert len(pairs) == 3


def test_line_orbits(g334):
    orbits = line_orbits(g334.space, g334_generators())
    assert sorted(len(o) for o in orbits) == [6, 36]


def test_relabel_invariance(s4_space):
    # conjugating every point by a fixed element keeps the line count
    g = Permutation.from_cycles(4, [(0, 1, 2, 3)])
    moved = fischer_space([g.inverse() * p * g for p in s4_space.points])
    assert len(moved.lines) == len(s4_space.lines) == 4


def test_matsuo_products(s4_matsuo):
    M = s4_matsuo
    assert M.dim == 6
    i, j, k = (M.labels.index(x) for x in ("(1 2)", "(1 3)", "(2 3)"))
    expected = la.scale(F(1, 4), la.sub(la.add(M.basis(i), M.basis(j)), M.basis(k)))
    assert M.product(i, j) == expected
    assert M.bilinear(M.basis(i), M.basis(j)) == F(1, 4)
    assert all(M.form[x][x] == 1 for x in range(6))


def test_matsuo_other_eta(s4_space):
    from axial.axes import axis_check
    M = matsuo_algebra(s4_space, F(1, 3))
    assert all(axis_check(M, M.basis(i), F(1, 3)).passed for i in range(6))
    assert M.form[0][1] in (0, F(1, 6))
    with pytest.raises(ValueError):
        matsuo_algebra(s4_space, 1)


def test_g334_dimension(g334):
    assert g334.algebra.dim == 18


def test_parse_generators_permutations():
    gens = parse_generators("# S3\n(1 2)\n(1 2 3)  # a 3-cycle\n\n")
    assert [g.label() for g in gens] == ["(1 2)", "(1 2 3)"]


def test_parse_generators_monomial():
    gens = parse_generators("(1 2) | 1 2 0 0\n(3 4) | 0 0 0 0\n")
    assert gens[0] == reflection(4, 0, 1, 1)


@pytest.mark.parametrize("text, line_no", [
    ("(1 2)\n1 2\n", 2),
    ("(1 x)\n", 1),
    ("(1 2) | 1 1 0 0\n", 1),
    ("(1 2)\n(3 4) | 1 2\n", 2),
    ("(1 1)\n", 1),
])
def test_parse_generators_errors(text, line_no):
    with pytest.raises(GeneratorParseError) as err:
        parse_generators(text)
    assert err.value.line_no == line_no
