"""Integer partitions and shape predicates.

A partition is a weakly decreasing tuple of positive integers.  Trailing
zeros are stripped at construction, so ``(5, 2, 0)`` and ``(5, 2)`` denote
the same partition and the empty tuple is the unique partition of 0.

The text syntax shared with the command line accepts exponent tokens:
``"6,2,1^6"`` parses to ``(6, 2, 1, 1, 1, 1, 1, 1)``.  Enumeration of all
partitions of n is reverse-lexicographic and stable, so sweep output is
reproducible byte for byte.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator, NamedTuple, Optional


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        tup = [int(p) for p in parts]
        while tup and tup[-1] == 0:
            tup.pop()
        for a, b in zip(tup, tup[1:]):
            if a < b:
                raise ValueError(f"parts must weakly decrease: {tuple(parts)!r}")
        if tup and tup[-1] < 0:
            raise ValueError(f"parts must be positive: {tuple(parts)!r}")
        return super().__new__(cls, tup)

    def __getnewargs__(self):
        return (tuple(self),)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-indexed part; 0 past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> "Partition":
        """Column lengths of the Young diagram."""
        if not self:
            return self
        cols = [0] * self[0]
        for p in self:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def frobenius(self) -> "FrobeniusCoords":
        """Arm/leg lengths of the diagonal boxes.

        The i-th diagonal box (1-indexed) has arm ``self[i] - i`` and leg
        ``transpose[i] - i``; the empty partition has no diagonal boxes.
        """
        t = self.transpose()
        arms, legs = [], []
        i = 0
        while i < len(self) and self[i] >= i + 1:
            arms.append(self[i] - i - 1)
            legs.append(t[i] - i - 1)
            i += 1
        return FrobeniusCoords(tuple(arms), tuple(legs))

    def hook_lengths(self) -> list[list[int]]:
        t = self.transpose()
        return [
            [self[i] - j + t[j] - i - 1 for j in range(self[i])]
            for i in range(len(self))
        ]


class FrobeniusCoords(NamedTuple):
    """Strictly decreasing arm and leg sequences of equal length."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    @property
    def diagonal(self) -> int:
        return len(self.arms)


def from_frobenius(coords: FrobeniusCoords) -> Partition:
    """Rebuild the partition with the given diagonal arm/leg lengths."""
    arms, legs = coords.arms, coords.legs
    d = len(arms)
    if d != len(legs):
        raise ValueError("arm and leg sequences must have equal length")
    rows = [arms[i] + i + 1 for i in range(d)]
    depth = max((legs[j] + j + 1 for j in range(d)), default=0)
    for i in range(d, depth):
        rows.append(sum(1 for j in range(d) if legs[j] + j + 1 >= i + 1))
    return Partition(rows)


def contains(inner, outer) -> bool:
    """True iff inner_i <= outer_i for all i (missing parts read as 0)."""
    inner, outer = Partition(inner), Partition(outer)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def is_horizontal_strip(inner, outer) -> bool:
    """True iff outer/inner has at most one cell per column.

    Requires ``contains(inner, outer)``; equivalently outer_{i+1} <= inner_i
    for every row i.
    """
    inner, outer = Partition(inner), Partition(outer)
    if not contains(inner, outer):
        raise ValueError(f"{inner!r} is not contained in {outer!r}")
    return all(outer[i + 1] <= inner.part(i + 1) for i in range(len(outer) - 1))


def tail(eta) -> Partition:
    """Parts of eta from the third on; empty when fewer than three parts."""
    eta = Partition(eta)
    return Partition(eta[2:])


def tail_twos(eta) -> int:
    """Number of 2's among the parts of tail(eta)."""
    return sum(1 for p in tail(eta) if p == 2)


def tail_ones(eta) -> int:
    """Number of 1's among the parts of tail(eta)."""
    return sum(1 for p in tail(eta) if p == 1)


def is_double_hook(eta, n: int) -> bool:
    """True iff eta is a partition of n with at most two rows or third part <= 2."""
    eta = Partition(eta)
    return eta.size == n and (len(eta) <= 2 or eta[2] <= 2)


def as_hook(p) -> Optional[tuple[int, int]]:
    """Decompose p as (arm, legs) with p == (arm, 1^legs), else None."""
    p = Partition(p)
    if not p:
        return None
    if any(x != 1 for x in p[1:]):
        return None
    return p[0], len(p) - 1


def as_two_row(p) -> Optional[tuple[int, int]]:
    """Decompose p as (d, e) with at most two rows, else None."""
    p = Partition(p)
    if len(p) > 2:
        return None
    return p.part(1), p.part(2)


def as_near_hook(p) -> Optional[tuple[int, int, int]]:
    """Decompose p as (a, b, c) with p == (a, b, 1^c), a >= b >= 2, else None."""
    p = Partition(p)
    if len(p) < 2 or p[1] < 2:
        return None
    if any(x != 1 for x in p[2:]):
        return None
    return p[0], p[1], len(p) - 2


def hook_partition(arm: int, legs: int) -> Partition:
    """The hook (arm, 1^legs)."""
    if arm < 1 or legs < 0:
        raise ValueError(f"invalid hook parameters ({arm}, {legs})")
    return Partition((arm,) + (1,) * legs)


def partitions_of(n: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    """Yield the partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    room = n if max_length is None else max_length

    def rec(remaining: int, biggest: int, room: int):
        if remaining == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(remaining, biggest), 0, -1):
            for rest in rec(remaining - first, first, room - 1):
                yield (first,) + rest

    for t in rec(n, n, room):
        yield Partition(t)


@cache
def partitions_list(n: int, max_length: Optional[int] = None) -> tuple[Partition, ...]:
    """Cached tuple of partitions_of(n, max_length)."""
    return tuple(partitions_of(n, max_length))


@cache
def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence (independent of the enumerator)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1
    return total


def parse_partition(text: str) -> Partition:
    """Parse "6,2,1^6" style text; "" and "()" denote the empty partition."""
    s = text.strip()
    if s in ("", "()"):
        return Partition()
    parts: list[int] = []
    for token in s.split(","):
        token = token.strip()
        if "^" in token:
            base, _, exp = token.partition("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(token))
    return Partition(parts)


def format_partition(p) -> str:
    """Comma-separated parts; "()" for the empty partition."""
    p = Partition(p)
    return ",".join(str(x) for x in p) if p else "()"
