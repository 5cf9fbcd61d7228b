import pytest

from qmn.compositions import partitions_of
from qmn.mn import mn_expansion
from qmn.qsym import psi_to_monomial
from qmn.schur import (
    SkewShape,
    border_strip_tableaux,
    character_table,
    chi,
    chi_bst,
    orthogonality_check,
    shape_to_poset,
)
from qmn.surjections import enumerate_partition_surjections, monomial_expansion


def test_shape_to_poset_22():
    p = shape_to_poset(SkewShape((2, 2)))
    assert p.n == 4
    strict = sum(p.edge_is_strict(a, b) for a, b in p.covers)
    weak = len(p.covers) - strict
    assert (strict, weak) == (2, 2)
    # semistandard fillings with entries in {1, 2}: only 1 1 / 2 2
    assert len(enumerate_partition_surjections(p, 2)) == 1


def test_skew_shape_cells():
    shape = SkewShape((3, 2), (1,))
    assert shape.size() == 4
    assert set(shape.cells()) == {(0, 1), (0, 2), (1, 0), (1, 1)}


def test_row_shape_is_weak_chain():
    p = shape_to_poset(SkewShape((3,)))
    assert not any(p.edge_is_strict(a, b) for a, b in p.covers)
    assert p.covers == [(0, 1), (1, 2)]


def test_column_shape_is_strict_chain():
    p = shape_to_poset(SkewShape((1, 1, 1)))
    assert all(p.edge_is_strict(a, b) for a, b in p.covers)


def test_known_character_values():
    assert chi((3,), (1, 1, 1)) == 1
    assert chi((2, 1), (1, 1, 1)) == 2
    assert chi((2, 1), (2, 1)) == 0
    assert chi((2, 1), (3,)) == -1
    assert chi((1, 1, 1), (3,)) == 1
    assert chi((1, 1, 1), (2, 1)) == -1


def test_trivial_and_sign_characters():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert chi((n,), mu) == 1
            assert chi((1,) * n, mu) == (-1) ** (n - len(mu))


def test_chi_agrees_with_border_strip_recursion():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert chi(lam, mu) == chi_bst(lam, mu)


def test_border_strip_tableaux_examples():
    # two tableaux of opposite sign, matching chi((2,1),(2,1)) == 0
    tabs21 = border_strip_tableaux((2, 1), (2, 1))
    assert sorted(sum(t.heights) for t in tabs21) == [0, 1]
    # a 2x2 square contains no single border strip of size 4
    assert border_strip_tableaux((2, 2), (4,)) == []
    tabs = border_strip_tableaux((2, 2), (2, 2))
    # the bottom row plus top row, and the right column plus left column
    assert len(tabs) == 2
    assert sorted(sum(t.heights) for t in tabs) == [0, 2]
    with pytest.raises(ValueError):
        border_strip_tableaux((2, 1), (2, 2))


def test_chi_bst_is_signed_tableau_count():
    for lam in partitions_of(5):
        for mu in partitions_of(5):
            total = sum(
                (-1) ** sum(t.heights) for t in border_strip_tableaux(lam, mu)
            )
            assert total == chi_bst(lam, mu)


def test_character_table_first_column_is_dimension():
    # chi^lam(1^n) is the number of standard tableaux; for n=4 the
    # dimensions are 1, 3, 2, 3, 1
    table = {(lam, mu): value for lam, mu, value in character_table(4)}
    ones = (1, 1, 1, 1)
    dims = [table[(lam, ones)] for lam in partitions_of(4)]
    assert dims == [1, 3, 2, 3, 1]


def test_orthogonality():
    for n in range(1, 6):
        assert orthogonality_check(n)


def test_schur_expansion_matches_oracle():
    for lam in partitions_of(4):
        p = shape_to_poset(SkewShape(lam))
        assert psi_to_monomial(mn_expansion(p)) == monomial_expansion(p)
