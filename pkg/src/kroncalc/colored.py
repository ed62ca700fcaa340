"""Colored words, mixed insertion, and the hook Kronecker tableau rule.

The alphabet is 1' < 1 < 2' < 2 < ... where a trailing apostrophe marks a
barred letter.  Internally a letter (v, barred) is encoded as the integer
2v-1 (barred) or 2v (unbarred) so the total order is plain integer order.

Mixed insertion: an unbarred letter enters row 1 and bumps the leftmost
entry strictly greater than it; a barred letter enters column 1 and bumps
the topmost entry strictly greater than it.  A bumped unbarred letter
continues in the row below its old cell; a bumped barred letter continues
in the column to its right.  The strict comparators in both directions are
forced by the worked single-letter insertions and the full insertion trace
for an eight-letter word, which are pinned as test vectors; row insertion
passes over equal unbarred letters (rows weakly increase in them) and
column insertion passes over equal barred letters (columns weakly increase
in them).

A colored word w lies behind the hook rule when w^blft - barred letters
moved to the front, bars erased - is Yamanouchi in the suffix sense: the
content of every suffix is a partition.  The number of distinct mixed
insertion tableaux of such words with content lam, exactly d bars, shape
nu, and an unbarred southwest corner equals g(lam, (n-d, 1^d), nu).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Optional, Sequence

from .partition import Partition


@total_ordering
@dataclass(frozen=True)
class ColoredLetter:
    value: int
    barred: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("letter values start at 1")

    @property
    def key(self) -> int:
        return 2 * self.value - 1 if self.barred else 2 * self.value

    def __lt__(self, other: "ColoredLetter") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return f"{self.value}'" if self.barred else str(self.value)


def _enc(letter: ColoredLetter) -> int:
    return letter.key


def _dec(k: int) -> ColoredLetter:
    return ColoredLetter((k + 1) // 2, bool(k & 1))


def parse_colored_word(text: str) -> tuple[ColoredLetter, ...]:
    """Parse space-separated letters; "2' 1 4'" means barred 2, 1, barred 4."""
    letters = []
    for token in text.split():
        barred = token.endswith("'")
        value = int(token[:-1] if barred else token)
        letters.append(ColoredLetter(value, barred))
    return tuple(letters)


def format_colored_word(word: Iterable[ColoredLetter]) -> str:
    return " ".join(str(x) for x in word)


def content(word: Iterable[ColoredLetter]) -> tuple[int, ...]:
    """Counts of each value, barred and unbarred occurrences together."""
    counts: dict[int, int] = {}
    for letter in word:
        counts[letter.value] = counts.get(letter.value, 0) + 1
    m = max(counts) if counts else 0
    return tuple(counts.get(i, 0) for i in range(1, m + 1))


def total_color(word: Iterable[ColoredLetter]) -> int:
    """Number of barred letters."""
    return sum(1 for letter in word if letter.barred)


def blft(word: Iterable[ColoredLetter]) -> tuple[int, ...]:
    """Barred letters moved to the front (order kept), bars erased."""
    barred = [x.value for x in word if x.barred]
    unbarred = [x.value for x in word if not x.barred]
    return tuple(barred + unbarred)


def is_suffix_yamanouchi(values: Sequence[int]) -> bool:
    """Every suffix of the plain word has weakly decreasing content."""
    counts: dict[int, int] = {}
    for v in reversed(values):
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_colored_yamanouchi(word: Iterable[ColoredLetter]) -> bool:
    """The content of every suffix (bars ignored) is a partition."""
    return is_suffix_yamanouchi([x.value for x in word])


@dataclass(frozen=True)
class ColoredTableau:
    """Partition-shaped tableau over the colored alphabet.

    Construction enforces the four colored-tableau conditions: unbarred
    letters weakly increase along rows and strictly increase down columns;
    barred letters strictly increase along rows and weakly increase down
    columns.  Global weak monotonicity is a separate, stronger property
    reported by is_globally_weakly_increasing().
    """

    rows: tuple[tuple[ColoredLetter, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(l == 0 for l in lengths) or any(
            a < b for a, b in zip(lengths, lengths[1:])
        ):
            raise ValueError("rows must be nonempty with weakly decreasing lengths")
        for row in rows:
            unb = [x.value for x in row if not x.barred]
            if any(a > b for a, b in zip(unb, unb[1:])):
                raise ValueError("unbarred letters must weakly increase in rows")
            bar = [x.value for x in row if x.barred]
            if any(a >= b for a, b in zip(bar, bar[1:])):
                raise ValueError("barred letters must strictly increase in rows")
        ncols = lengths[0] if lengths else 0
        for c in range(ncols):
            col = [row[c] for row in rows if c < len(row)]
            unb = [x.value for x in col if not x.barred]
            if any(a >= b for a, b in zip(unb, unb[1:])):
                raise ValueError("unbarred letters must strictly increase in columns")
            bar = [x.value for x in col if x.barred]
            if any(a > b for a, b in zip(bar, bar[1:])):
                raise ValueError("barred letters must weakly increase in columns")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def cells(self) -> tuple[ColoredLetter, ...]:
        return tuple(x for row in self.rows for x in row)

    def southwest(self) -> ColoredLetter:
        """Lowest cell of the leftmost column."""
        if not self.rows:
            raise ValueError("empty tableau has no southwest entry")
        return self.rows[-1][0]

    def reading_word(self) -> tuple[ColoredLetter, ...]:
        """Rows read right to left, top row first."""
        out: list[ColoredLetter] = []
        for row in self.rows:
            out.extend(reversed(row))
        return tuple(out)

    def is_globally_weakly_increasing(self) -> bool:
        for row in self.rows:
            keys = [x.key for x in row]
            if any(a > b for a, b in zip(keys, keys[1:])):
                return False
        ncols = len(self.rows[0]) if self.rows else 0
        for c in range(ncols):
            keys = [row[c].key for row in self.rows if c < len(row)]
            if any(a > b for a, b in zip(keys, keys[1:])):
                return False
        return True

    def to_ascii(self) -> str:
        return "\n".join(
            " ".join(f"{str(x):<2}" for x in row).rstrip() for row in self.rows
        )

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "cells": [[x.value, x.barred] for row in self.rows for x in row],
        }

    @classmethod
    def from_text(cls, text: str) -> "ColoredTableau":
        """Rows separated by "|", letters by spaces: "1' 1 1 | 2"."""
        rows = [parse_colored_word(chunk) for chunk in text.split("|")]
        return cls(tuple(rows))


def _encode_rows(tab: ColoredTableau) -> list[list[int]]:
    return [[x.key for x in row] for row in tab.rows]


def _tableau_from_encoded(rows: Sequence[Sequence[int]]) -> ColoredTableau:
    return ColoredTableau(tuple(tuple(_dec(k) for k in row) for row in rows))


# ---------------------------------------------------------------------------
# insertion


def schensted_insert(
    rows: Sequence[Sequence[int]], x: int
) -> tuple[tuple[int, ...], ...]:
    """Ordinary row insertion into a straight-shape SSYT of plain integers."""
    out = [list(r) for r in rows]
    i = 0
    while True:
        if i == len(out):
            out.append([x])
            break
        row = out[i]
        for j, y in enumerate(row):
            if y > x:
                row[j] = x
                x = y
                break
        else:
            row.append(x)
            break
        i += 1
    return tuple(tuple(r) for r in out)


def _mixed_insert_encoded(rows: list[list[int]], k: int, log: Optional[list] = None) -> None:
    """Insert encoded letter k; mutates rows, recording undo steps in log."""
    if k & 1:
        _column_insert(rows, k, 0, log)
    else:
        _row_insert(rows, k, 0, log)


def _row_insert(rows: list[list[int]], k: int, i: int, log) -> None:
    while True:
        if i == len(rows):
            rows.append([k])
            if log is not None:
                log.append(("new",))
            return
        row = rows[i]
        for j, y in enumerate(row):
            if y > k:
                row[j] = k
                if log is not None:
                    log.append(("set", i, j, y))
                if y & 1:
                    _column_insert(rows, y, j + 1, log)
                    return
                k = y
                break
        else:
            row.append(k)
            if log is not None:
                log.append(("app", i))
            return
        i += 1


def _column_insert(rows: list[list[int]], k: int, j: int, log) -> None:
    while True:
        i = 0
        bumped = -1
        while i < len(rows) and len(rows[i]) > j:
            if rows[i][j] > k:
                bumped = rows[i][j]
                rows[i][j] = k
                if log is not None:
                    log.append(("set", i, j, bumped))
                break
            i += 1
        if bumped < 0:
            if i == len(rows):
                if j != 0:
                    raise RuntimeError("insertion produced a ragged shape")
                rows.append([k])
                if log is not None:
                    log.append(("new",))
            else:
                if len(rows[i]) != j:
                    raise RuntimeError("insertion produced a ragged shape")
                rows[i].append(k)
                if log is not None:
                    log.append(("app", i))
            return
        if bumped & 1:
            k = bumped
            j += 1
        else:
            _row_insert(rows, bumped, i + 1, log)
            return


def _undo(rows: list[list[int]], log: list) -> None:
    for record in reversed(log):
        tag = record[0]
        if tag == "set":
            rows[record[1]][record[2]] = record[3]
        elif tag == "app":
            rows[record[1]].pop()
        else:
            rows.pop()


def mixed_insert(tab: ColoredTableau, letter: ColoredLetter) -> ColoredTableau:
    """Mixed-insert one letter into a colored tableau."""
    rows = _encode_rows(tab)
    _mixed_insert_encoded(rows, letter.key)
    return _tableau_from_encoded(rows)


def mixed_insertion_tableau(word: Iterable[ColoredLetter]) -> ColoredTableau:
    """Left-to-right mixed insertion of the word, starting from empty."""
    rows: list[list[int]] = []
    for letter in word:
        _mixed_insert_encoded(rows, letter.key)
    return _tableau_from_encoded(rows)


def mixed_insertion_trace(word: Sequence[ColoredLetter]) -> list[ColoredTableau]:
    """The successive insertion tableaux P_1, ..., P_n."""
    rows: list[list[int]] = []
    trace = []
    for letter in word:
        _mixed_insert_encoded(rows, letter.key)
        trace.append(_tableau_from_encoded(rows))
    return trace


# ---------------------------------------------------------------------------
# tableau enumeration behind the hook rule


def _barred_content_vectors(lam: Partition, d: int):
    """All ways to choose how many letters of each value carry a bar."""
    m = len(lam)

    def rec(i: int, left: int):
        if i == m:
            if left == 0:
                yield ()
            return
        hi = min(lam[i], left)
        lo = max(0, left - sum(lam[i + 1 :]))
        for take in range(hi, lo - 1, -1):
            for rest in rec(i + 1, left - take):
                yield (take,) + rest

    yield from rec(0, d)


def _search(lam: Partition, d: int, target: Optional[Partition]):
    """Distinct insertion tableaux of admissible words, keyed by shape.

    Words are generated by interleaving a barred subsequence B and an
    unbarred subsequence U.  Fixing the bar content vector, the suffix
    condition on w^blft becomes two prefix-checkable conditions: after each
    barred letter the remaining barred content plus the whole unbarred
    content must be a partition, and after each unbarred letter the
    remaining unbarred content must be a partition.  Every intermediate
    insertion shape is contained in the final one, so a target shape prunes
    the search tree early.
    """
    n = lam.size
    m = len(lam)
    found: dict[tuple[int, ...], set] = {}
    tgt = tuple(target) if target is not None else None
    if tgt is not None and sum(tgt) != n:
        return found

    for cb in _barred_content_vectors(lam, d):
        cu = tuple(a - b for a, b in zip(lam, cb))
        if any(cu[i] < cu[i + 1] for i in range(m - 1)):
            continue
        rb = list(cb)
        ru = list(cu)
        rows: list[list[int]] = []

        def dfs(remaining: int):
            if remaining == 0:
                if rows and not rows[-1][0] & 1:
                    shape = tuple(len(r) for r in rows)
                    if tgt is None or shape == tgt:
                        found.setdefault(shape, set()).add(
                            tuple(tuple(r) for r in rows)
                        )
                return
            for v in range(m):
                if rb[v]:
                    below = (rb[v + 1] + cu[v + 1]) if v + 1 < m else 0
                    if rb[v] - 1 + cu[v] >= below:
                        rb[v] -= 1
                        log: list = []
                        _mixed_insert_encoded(rows, 2 * v + 1, log)
                        if _fits(rows, tgt):
                            dfs(remaining - 1)
                        _undo(rows, log)
                        rb[v] += 1
                if ru[v]:
                    below = ru[v + 1] if v + 1 < m else 0
                    if ru[v] - 1 >= below:
                        ru[v] -= 1
                        log = []
                        _mixed_insert_encoded(rows, 2 * v + 2, log)
                        if _fits(rows, tgt):
                            dfs(remaining - 1)
                        _undo(rows, log)
                        ru[v] += 1

        dfs(n)
    return found


def _fits(rows: list[list[int]], tgt: Optional[tuple[int, ...]]) -> bool:
    if tgt is None:
        return True
    if len(rows) > len(tgt):
        return False
    return all(len(rows[i]) <= tgt[i] for i in range(len(rows)))


def _check_hook_args(lam: Partition, d: int) -> None:
    if not 0 <= d < max(lam.size, 1):
        raise ValueError(f"total color {d} out of range for content {lam!r}")


def _finalize(lam: Partition, d: int, encoded: Iterable[tuple]) -> tuple[ColoredTableau, ...]:
    """Decode, validate, and canonically order enumerated tableaux."""
    out = []
    for rows in encoded:
        tab = _tableau_from_encoded(rows)
        if not tab.is_globally_weakly_increasing():
            raise AssertionError(f"enumerated tableau not globally monotone: {rows}")
        if content(tab.cells()) != tuple(lam) or total_color(tab.cells()) != d:
            raise AssertionError(f"enumerated tableau has wrong content: {rows}")
        if tab.southwest().barred:
            raise AssertionError(f"enumerated tableau has barred corner: {rows}")
        out.append(tab)
    out.sort(key=lambda t: (tuple(t.shape), tuple(x.key for x in t.reading_word())))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_blasiak(lam, d: int, nu) -> tuple[ColoredTableau, ...]:
    """The tableaux counted by g(lam, (n-d, 1^d), nu), canonically ordered."""
    lam, nu = Partition(lam), Partition(nu)
    _check_hook_args(lam, d)
    found = _search(lam, d, nu)
    return _finalize(lam, d, found.get(tuple(nu), ()))


def count_blasiak(lam, d: int, nu) -> int:
    """g(lam, (n-d, 1^d), nu) as a tableau count."""
    return len(enumerate_blasiak(Partition(lam), d, Partition(nu)))


@lru_cache(maxsize=None)
def blasiak_by_shape(lam, d: int) -> dict:
    """Map shape -> canonically ordered tableaux, one search for all shapes."""
    lam = Partition(lam)
    _check_hook_args(lam, d)
    found = _search(lam, d, None)
    return {
        Partition(shape): _finalize(lam, d, rows) for shape, rows in sorted(found.items())
    }
