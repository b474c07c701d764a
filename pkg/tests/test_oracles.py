import pytest

from conftest import DOMINO, GAPPY, MONO, TROMINO
from tilez.errors import BudgetExceeded
from tilez.lattice import Lattice
from tilez.oracles import brute_box, brute_line, brute_torus, least_uncoverable_radius


def test_brute_torus_examples():
    assert brute_torus(TROMINO.cells, Lattice(3, 1, 1)) == ((0, 0),)
    assert brute_torus(DOMINO.cells, Lattice(1, 0, 1)) is None
    assert brute_torus(MONO.cells, Lattice(1, 0, 1)) == ((0, 0),)
    with pytest.raises(BudgetExceeded):
        brute_torus(MONO.cells, Lattice(10, 0, 1))


def test_brute_box_examples():
    assert brute_box(MONO.cells, 3)
    assert brute_box(DOMINO.cells, 2)
    assert [brute_box(GAPPY.cells, n) for n in range(3)] == [True, True, False]
    with pytest.raises(BudgetExceeded):
        brute_box(MONO.cells, 6)
    with pytest.raises(BudgetExceeded):
        brute_box([(i, 0) for i in range(7)], 1)


def test_least_uncoverable_radius():
    assert least_uncoverable_radius(GAPPY.cells) == 2
    assert least_uncoverable_radius(DOMINO.cells) is None


def test_brute_line_agrees_with_periods():
    assert brute_line([0, 1], 4) == (2, (0,))
    assert brute_line([0, 3], 16) == (2, (0,))
    assert brute_line([0, 2, 3], 16) is None
