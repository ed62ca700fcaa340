import pytest

from kroncalc.partition import Partition, is_double_hook, partitions_list
from kroncalc.rosas import phi, psi, rosas_kronecker, rosas_report, xi, xi_report
from kroncalc.symfun import kronecker_coefficient


def test_phi_values():
    assert phi(2, 3, 3, 0, 6, 2) == 1
    assert phi(2, 3, 3, 0, 6, 3) == 1
    assert phi(2, 3, 3, 0, 6, 1) == 0
    assert phi(2, 3, 3, 0, 6, 4) == 0
    assert phi(0, 0, 0, 0, 0, 5) == 0


def test_psi_values():
    # matching hooks, interior r: two pair families survive
    assert psi(2, 2, 3, 8) == 2
    assert psi(1, 1, 2, 5) == 1
    assert psi(1, 2, 2, 5) == 2
    # hooks too far apart never meet
    assert psi(0, 1, 4, 9) == 0


def test_xi_branches():
    assert xi((3, 2, 1, 1, 1), 2, 2, 5) == 1
    assert xi_report((3, 2, 1, 1, 1), 2, 2, 5).case == "double-hook"
    assert xi_report((3, 2, 1, 1, 1), 2, 2, 5).arguments == (2, 3, 3, 0, 6, 2)
    assert xi((4, 2, 1), 3, 2, 3) == 1
    # one-row branch
    for r in range(1, 4):
        for c in (0, 1, 2):
            a = 7 - c - 1
            assert xi((7,), a, r, c) == int(c == 0 and r == 1)
    # r = 0 base case
    assert xi((3, 1, 1), 3, 0, 1) == 1
    assert xi((3, 2), 3, 0, 1) == 0
    assert xi_report((3, 1, 1), 3, 0, 1).case == "r-zero"
    # column branch: positive iff the hook transposes onto the two-row shape
    assert xi((1,) * 4, 2, 1, 1) == 1  # (2,1,1) == (3,1)^t
    assert xi((1,) * 4, 2, 1, 0) == 0
    assert xi((1,) * 6, 1, 2, 3) == 0
    with pytest.raises(ValueError):
        xi((3, 2, 1), 2, 4, 1)


def test_branch_tags_are_exclusive():
    tags = set()
    for n in range(1, 10):
        for nu in partitions_list(n):
            for r in range(n // 2 + 1):
                for a in range(1, n):
                    report = xi_report(nu, a, r, n - a - 1)
                    tags.add(report.case)
                    assert report.value >= 0
    assert tags >= {"r-zero", "row-N", "column-1N", "hook", "double-hook", "zero"}


def test_rosas_paper_value():
    assert rosas_kronecker(8, 2, 2, 5, (3, 2, 1, 1, 1)) == 1
    report = rosas_report(8, 2, 2, 5, (3, 2, 1, 1, 1))
    assert report.case == "double-hook" and report.value == 1


def test_rosas_column_hook_case():
    # a = 1 turns the hook into a column; value 1 iff nu is the transpose
    for n in range(2, 9):
        for r in range(n // 2 + 1):
            expected = Partition((n - r, r)).transpose()
            for nu in partitions_list(n):
                assert rosas_kronecker(n, r, 1, n - 2, nu) == int(nu == expected)


def test_rosas_validation():
    with pytest.raises(ValueError):
        rosas_kronecker(6, 1, 2, 2, (3, 2))  # |nu| != 6
    with pytest.raises(ValueError):
        rosas_kronecker(6, 1, 2, 4, (3, 2, 1))  # a + c + 1 != 6
    with pytest.raises(ValueError):
        rosas_kronecker(6, 4, 2, 3, (3, 2, 1))  # r too large
    with pytest.raises(ValueError):
        rosas_kronecker(6, 1, 0, 5, (3, 2, 1))  # a must be >= 1


def test_rosas_matches_oracle_small():
    for n in range(1, 9):
        for r in range(n // 2 + 1):
            two_row = Partition((n - r, r))
            for a in range(1, n):
                c = n - a - 1
                hook = Partition((a,) + (1,) * (c + 1))
                for nu in partitions_list(n):
                    closed = rosas_kronecker(n, r, a, c, nu)
                    oracle = kronecker_coefficient(two_row, hook, nu)
                    assert closed == oracle, (n, r, a, nu)
                    assert (oracle > 0) == (
                        is_double_hook(nu, n) and xi(nu, a, r, c) > 0
                    )
