import pytest

from kroncalc.partition import (
    FrobeniusCoords,
    Partition,
    as_hook,
    as_near_hook,
    as_two_row,
    contains,
    format_partition,
    from_frobenius,
    hook_partition,
    is_double_hook,
    is_horizontal_strip,
    parse_partition,
    partition_count,
    partitions_list,
    partitions_of,
    tail,
    tail_ones,
    tail_twos,
)


def test_construction_normalizes_trailing_zeros():
    assert Partition((5, 2, 0, 0)) == Partition((5, 2))
    assert Partition(()) == ()
    assert Partition((3,)).size == 3


def test_construction_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_transpose_examples():
    assert Partition(()).transpose() == Partition(())
    assert Partition((5, 2, 1)).transpose() == Partition((3, 2, 1, 1, 1))
    # (M-S, S) with M = c+2 transposes to (2^S, 1^(M-2S)); c = 4, S = 2
    assert Partition((4, 2)).transpose() == Partition((2, 2, 1, 1))


def test_transpose_involution_small():
    for n in range(9):
        for lam in partitions_list(n):
            assert lam.transpose().transpose() == lam


def test_frobenius_examples():
    # (a, b, 1^c) with a >= b >= 2 has arms (a-1, b-2) and legs (c+1, 0)
    lam = Partition((4, 3, 1, 1))
    assert lam.frobenius() == FrobeniusCoords((3, 1), (3, 0))
    assert Partition((1,)).frobenius() == FrobeniusCoords((0,), (0,))
    # direct arm/leg count on the diagram
    assert Partition((4, 3, 1)).frobenius() == FrobeniusCoords((3, 1), (2, 0))
    assert Partition(()).frobenius() == FrobeniusCoords((), ())


def test_frobenius_round_trip():
    for n in range(13):
        for lam in partitions_list(n):
            coords = lam.frobenius()
            assert sum(coords.arms) + sum(coords.legs) + coords.diagonal == n
            assert from_frobenius(coords) == lam


def test_contains():
    assert contains((), (3, 1))
    assert contains((4, 3), (5, 3, 2))
    assert not contains((2, 2), (3, 1))


def test_horizontal_strip():
    assert is_horizontal_strip((3, 2), (3, 2))
    assert is_horizontal_strip((4, 3), (5, 4))
    # one cell in column 4 row 2 and one in column 1 row 3: still single cells
    # per column, so this is a horizontal strip
    assert is_horizontal_strip((4, 3), (4, 4, 1))
    assert not is_horizontal_strip((2,), (3, 3))
    with pytest.raises(ValueError):
        is_horizontal_strip((3, 3), (4, 2))


def test_tail_counts():
    assert tail((3, 2, 1, 1, 1)) == (1, 1, 1)
    assert tail_twos((3, 2, 1, 1, 1)) == 0
    assert tail_ones((3, 2, 1, 1, 1)) == 3
    assert tail((5, 3)) == ()
    assert tail_twos((3, 2, 2, 2, 1)) == 2
    assert tail_ones((3, 2, 2, 2, 1)) == 1


def test_double_hook():
    assert is_double_hook((3, 2, 1, 1, 1), 8)
    assert not is_double_hook((3, 3, 3), 9)
    assert is_double_hook((9,), 9)
    assert not is_double_hook((3, 2), 6)  # wrong size


def test_partitions_of_order_and_counts():
    assert list(partitions_of(0)) == [Partition(())]
    assert [tuple(p) for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert len(partitions_list(8)) == 22
    for n in range(31):
        assert len(partitions_list(n)) == partition_count(n)


def test_partitions_of_max_length():
    assert [tuple(p) for p in partitions_of(4, max_length=2)] == [(4,), (3, 1), (2, 2)]


def test_parse_and_format():
    assert parse_partition("6,2,1^6") == Partition((6, 2, 1, 1, 1, 1, 1, 1))
    assert parse_partition("4,1^4") == Partition((4, 1, 1, 1, 1))
    assert parse_partition("()") == Partition(())
    assert format_partition(Partition((5, 2, 1))) == "5,2,1"
    assert format_partition(Partition(())) == "()"
    for n in range(7):
        for lam in partitions_list(n):
            assert parse_partition(format_partition(lam)) == lam


def test_shape_classifiers():
    assert as_hook((4, 1, 1)) == (4, 2)
    assert as_hook((3, 2)) is None
    assert as_hook((5,)) == (5, 0)
    assert as_two_row((4, 2)) == (4, 2)
    assert as_two_row((4,)) == (4, 0)
    assert as_two_row((2, 1, 1)) is None
    assert as_near_hook((4, 3, 1, 1)) == (4, 3, 2)
    assert as_near_hook((4, 1, 1)) is None
    assert as_near_hook((3, 2)) == (3, 2, 0)
    assert hook_partition(3, 2) == Partition((3, 1, 1))
