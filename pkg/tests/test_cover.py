import itertools
import random

import pytest

from tilez.cover import CoverInstance, check_solution, solve_cover
from tilez.errors import InvalidInstance


def brute_force(inst: CoverInstance) -> bool:
    for k in range(len(inst.rows) + 1):
        for rows in itertools.combinations(range(len(inst.rows)), k):
            if check_solution(inst, rows):
                return True
    return False


def random_instance(rng: random.Random) -> CoverInstance:
    n_cols = rng.randint(1, 12)
    n_primary = rng.randint(0, n_cols)
    rows = []
    for _ in range(rng.randint(0, 14)):
        size = rng.randint(1, min(4, n_cols))
        rows.append(sorted(rng.sample(range(n_cols), size)))
    return CoverInstance.build(n_primary, n_cols - n_primary, rows)


def test_examples():
    inst = CoverInstance.build(1, 0, [[0]])
    assert solve_cover(inst) == [0]
    inst = CoverInstance.build(2, 0, [[0], [1], [0, 1]])
    assert check_solution(inst, solve_cover(inst))
    inst = CoverInstance.build(3, 0, [[0, 1], [1, 2]])
    assert not brute_force(inst)
    assert solve_cover(inst) is None


def test_check_solution_examples():
    inst = CoverInstance.build(1, 0, [[0]])
    assert check_solution(inst, [0])
    assert not check_solution(inst, [])
    inst = CoverInstance.build(2, 1, [[0, 2], [1, 2]])
    assert not check_solution(inst, [0, 1])


def test_secondary_columns_are_optional():
    inst = CoverInstance.build(1, 2, [[0, 1], [0, 2], [1, 2]])
    sol = solve_cover(inst)
    assert sol == [0]
    assert solve_cover(CoverInstance.build(0, 3, [[0]])) == []


@pytest.mark.parametrize(
    "rows, n",
    [([[]], 1), ([[0, 0]], 1), ([[3]], 2), ([[-1]], 2)],
)
def test_invalid(rows, n):
    with pytest.raises(InvalidInstance):
        solve_cover(CoverInstance.build(n, 0, rows))


def test_agrees_with_brute_force():
    rng = random.Random(1)
    for _ in range(200):
        inst = random_instance(rng)
        sol = solve_cover(inst)
        assert (sol is not None) == brute_force(inst)
        if sol is not None:
            assert check_solution(inst, sol)


def test_unused_row_keeps_satisfiable():
    rng = random.Random(2)
    for _ in range(100):
        inst = random_instance(rng)
        if solve_cover(inst) is None:
            continue
        extra = sorted(rng.sample(range(inst.n_columns), 1))
        bigger = CoverInstance.build(inst.n_primary, inst.n_secondary, list(inst.rows) + [extra])
        assert solve_cover(bigger) is not None


def test_deterministic():
    rng = random.Random(3)
    for _ in range(50):
        inst = random_instance(rng)
        assert solve_cover(inst) == solve_cover(inst)


def test_selection_policy_first_row_of_first_min_column():
    # columns 0 and 1 both have two candidates; column 0 wins the tie and
    # its lowest row (row 0) is tried first
    inst = CoverInstance.build(2, 0, [[0], [0, 1], [1]])
    assert solve_cover(inst) == [0, 2]
