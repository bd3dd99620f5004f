"""Group arithmetic, characters, and character sums."""

import cmath

import numpy as np
import pytest

from cayleyx import AbelianGroup, cyclic


def test_factor_validation():
    with pytest.raises(ValueError):
        AbelianGroup([])
    with pytest.raises(ValueError):
        AbelianGroup([4, 1])


def test_basic_arithmetic():
    g = AbelianGroup([4, 6])
    assert g.order == 24
    assert g.zero == (0, 0)
    assert g.add((3, 5), (2, 2)) == (1, 1)
    assert g.sub((0, 0), (1, 2)) == (3, 4)
    assert g.neg((1, 2)) == (3, 4)
    assert g.element((7, -1)) == (3, 5)
    assert (3, 5) in g and (4, 0) not in g and (1,) not in g


def test_element_indexing_roundtrip():
    g = AbelianGroup([3, 4, 2])
    elems = g.elements()
    assert len(elems) == g.order
    assert elems == sorted(elems)  # lexicographic
    for i, e in enumerate(elems):
        assert g.index_of(e) == i
        assert g.element_at(i) == e


def test_character_values_are_exact_fourth_roots():
    g = cyclic(20)
    assert g.character_value((5,), (1,)) == 1j
    assert g.character_value((10,), (1,)) == -1
    assert g.character_value((0,), (7,)) == 1
    # a generic 20th root comes from cmath
    v = g.character_value((1,), (1,))
    assert abs(v - cmath.exp(2j * cmath.pi / 20)) < 1e-15


def test_characters_are_homomorphisms():
    g = AbelianGroup([4, 3])
    for a in g.elements():
        for x in g.elements()[:6]:
            for y in g.elements()[:6]:
                lhs = g.character_value(a, g.add(x, y))
                rhs = g.character_value(a, x) * g.character_value(a, y)
                assert abs(lhs - rhs) < 1e-12


def test_character_orthogonality():
    g = cyclic(12)
    for a in g.elements():
        total = sum(g.character_value(a, x) for x in g.elements())
        expected = g.order if a == g.zero else 0
        assert abs(total - expected) < 1e-9


def test_character_sum_real_for_symmetric_sets():
    g = cyclic(20)
    C = [(3,), (17,), (4,), (16,)]
    for a in g.elements():
        v = g.character_sum(a, C)
        assert isinstance(v, float)


def test_character_sum_complex_for_asymmetric_sets():
    g = cyclic(5)
    v = g.character_sum((1,), [(1,)])
    assert isinstance(v, complex)
    assert abs(v - cmath.exp(2j * cmath.pi / 5)) < 1e-15


def test_character_sum_table_matches_pointwise():
    g = AbelianGroup([4, 5])
    C = [(1, 2), (3, 3), (0, 1), (0, 4)]
    table = g.character_sum_table(C)
    for a in g.elements():
        direct = sum(g.character_value(a, c) for c in C)
        assert abs(table[a] - direct) < 1e-9


def test_character_sum_table_real_for_symmetric():
    g = AbelianGroup([2, 2, 2])
    C = [(1, 0, 0), (0, 1, 1)]
    table = g.character_sum_table(C)
    assert np.abs(table.imag).max() < 1e-12


def test_subgroup_generated():
    g = cyclic(20)
    assert g.subgroup_generated([(4,)]) == frozenset({(0,), (4,), (8,), (12,), (16,)})
    assert g.subgroup_generated([(3,)]) == frozenset(g.elements())


def test_is_symmetric():
    g = cyclic(7)
    assert g.is_symmetric([(1,), (6,)])
    assert not g.is_symmetric([(1,), (2,), (4,)])


def test_json_roundtrip():
    g = AbelianGroup([4, 6, 2])
    assert AbelianGroup.from_json(g.to_json()) == g
