"""Exact counts of tournament sequences of a given length, three ways.

Writing s(n) for the number of sequences of length n (the same for both
tree kinds), the routes are:

* :func:`count_via_profile` builds the per-level label histogram
  c(n, k): c(1, k) is 1 at k = 1, and c(n, k) sums c(n-1, j) over
  ceil(k/2) <= j <= k - 1.  Exact but with support up to 2^(n-1).
* :func:`count_fast` fills a table d(n, k) of n-th generation
  descendant counts of a label-k node, using a pruning identity for
  small k and a finite-difference extension for the rest, keeping only
  O(n) cells per row.  s(n) = d(n-1, 1).
* :func:`count_via_polynomial` carries d(n, .) symbolically: it is a
  degree-n polynomial in k with exact rational coefficients, advanced
  by symbolic summation over (k, 2k].
* :func:`count_dfs` walks the tree and counts leaves: the slow,
  obviously-correct oracle.

All arithmetic is exact (Python ints and fractions).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .sequences import enumerate_tree

#: Level counts s(1) .. s(22); the sequence is OEIS entry A008934.
PUBLISHED_COUNTS = (
    1,
    1,
    2,
    7,
    41,
    397,
    6377,
    171886,
    7892642,
    627340987,
    87635138366,
    21808110976027,
    9780286524758582,
    7981750158298108606,
    11950197013167283686587,
    33046443615914736611839942,
    169758733825407174485685959261,
    1627880269212042994531083889564192,
    29264239787495935863325877024506142042,
    989901541366810465070950556260422637919176,
    63214893835996484808167529681187283166038800097,
    7643667309922877343580868981767361594845888953165967,
)

DEFAULT_PROFILE_LIMIT = 24  # level histogram support is O(2^n)
DEFAULT_POLY_LIMIT = 40  # rational coefficients grow quickly with degree
DFS_LIMIT = 10


@dataclass(frozen=True)
class LevelProfile:
    """Exact histogram of labels on one tree level."""

    n: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def _profile_rows(n: int) -> list[int]:
    """Row n of the label histogram as a list indexed by label."""
    row = [0, 1]  # level 1: single node labelled 1
    for level in range(2, n + 1):
        width = 1 << (level - 1)
        prefix = [0]
        acc = 0
        for v in row:
            acc += v
            prefix.append(acc)
        top = len(row) - 1
        nxt = [0] * (width + 1)
        for k in range(level, width + 1):
            lo = (k + 1) // 2
            hi = min(k - 1, top)
            if lo <= hi:
                nxt[k] = prefix[hi + 1] - prefix[lo]
        row = nxt
    return row


def level_profile(n: int, *, limit: int = DEFAULT_PROFILE_LIMIT) -> LevelProfile:
    """Exact label histogram of level n; support lies in [n, 2^(n-1)]."""
    if n < 1:
        raise ValueError("level must be a positive integer")
    if n > limit:
        raise ValueError(f"level {n} exceeds the profile limit {limit}")
    row = _profile_rows(n)
    return LevelProfile(n, {k: v for k, v in enumerate(row) if v})


def count_via_profile(n: int, *, limit: int = DEFAULT_PROFILE_LIMIT) -> int:
    """s(n) as the sum of the level-n label histogram."""
    if n < 1:
        raise ValueError("level must be a positive integer")
    if n > limit:
        raise ValueError(f"level {n} exceeds the profile limit {limit}")
    return sum(_profile_rows(n))


def count_dfs(n: int) -> int:
    """s(n) by direct traversal of the tournament tree; exponential time,
    usable for n up to 10."""
    if n < 1:
        raise ValueError("level must be a positive integer")
    if n > DFS_LIMIT:
        raise ValueError(f"level {n} exceeds the traversal limit {DFS_LIMIT}")
    return enumerate_tree("tournament", n, None, depth_limit=DFS_LIMIT)


class CountTable:
    """Descendant-count table: row n holds d(n, k) for 0 <= k <= 2n + 2.

    d(n, k) is the number of n-th generation descendants of a node
    labelled k.  Row n is built from row n - 1 in two phases:

    * pruning, for 1 <= k <= n:
      d(n, k) = d(n, k-1) - d(n-1, k) + d(n-1, 2k-1) + d(n-1, 2k)
      (the tree below a (k) is the tree below a (k-1) with the branch
      at child (k) pruned and branches at (2k-1), (2k) grafted on);
    * extension, for n < k <= 2n + 2: d(n, .) agrees with a degree-n
      polynomial, so n + 2 consecutive values satisfy the alternating
      binomial dependence d(n, k) = sum_{j=1..n+1} (-1)^(j-1) C(n+1, j)
      d(n, k-j).  That dependence says the (n+1)-st forward differences
      vanish, so each new cell is produced by stepping a ladder of n + 1
      running differences: n big-integer additions per cell and no
      multiplications, which is what keeps row extension around n^4 bit
      operations instead of n^5.

    Columns run up to 2n + 2 because the pruning phase of row n + 1
    reads d(n, 2k-1) and d(n, 2k) for k up to n + 1.  Rows only ever
    get appended, so a grown table stays valid for all earlier queries.
    """

    def __init__(self):
        self.rows: list[list[int]] = [[1, 1, 1]]  # d(0, k) = 1, stored for k = 0..2

    @property
    def max_row(self) -> int:
        return len(self.rows) - 1

    def extend_to(self, n_max: int) -> None:
        while self.max_row < n_max:
            self._add_row()

    def _add_row(self) -> None:
        n = len(self.rows)
        prev = self.rows[-1]
        width = 2 * n + 2
        row = [0] * (width + 1)
        for k in range(1, n + 1):
            row[k] = row[k - 1] - prev[k] + prev[2 * k - 1] + prev[2 * k]
        # seed the difference ladder from the n + 1 values at columns 0..n:
        # frontier[i] = (i-th forward difference) at column n - i
        frontier = [row[n]]
        level = row[: n + 1]
        for _ in range(n):
            level = [level[i + 1] - level[i] for i in range(len(level) - 1)]
            frontier.append(level[-1])
        for k in range(n + 1, width + 1):
            for i in range(n - 1, -1, -1):
                frontier[i] += frontier[i + 1]
            row[k] = frontier[0]
        self.rows.append(row)

    def d(self, n: int, k: int) -> int:
        if n < 0 or n > self.max_row:
            raise IndexError(f"row {n} not built (table has rows 0..{self.max_row})")
        row = self.rows[n]
        if not 0 <= k < len(row):
            raise IndexError(f"column {k} outside row {n} (columns 0..{len(row) - 1})")
        return row[k]

    def count(self, n: int) -> int:
        """s(n) = d(n - 1, 1), extending the table as needed."""
        if n < 1:
            raise ValueError("level must be a positive integer")
        self.extend_to(n - 1)
        return self.rows[n - 1][1]


def build_count_table(n_max: int) -> CountTable:
    """Fresh table with rows 0 .. n_max."""
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    table = CountTable()
    table.extend_to(n_max)
    return table


_shared_table = CountTable()


def count_fast(n: int, *, table: CountTable | None = None) -> int:
    """s(n) from the descendant table; successive calls reuse rows already
    built, so going from n to n + 1 costs only one new row."""
    tbl = _shared_table if table is None else table
    return tbl.count(n)


def bound_check(n: int, k: int, *, table: CountTable | None = None) -> bool:
    """Whether d(n, k) <= 2^(n(n-1)/2) * k^n holds at one cell of an
    already-built table (raises if the row is missing).  A correct table
    satisfies this everywhere."""
    tbl = _shared_table if table is None else table
    value = tbl.d(n, k)
    return value <= (1 << (n * (n - 1) // 2)) * k**n


class Polynomial:
    """Polynomial with exact rational coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def value_at(self, k: int) -> int:
        """Evaluate at an integer and assert the result is an integer."""
        v = self(k)
        if v.denominator != 1:
            raise ValueError(f"value at {k} is {v}, not an integer")
        return v.numerator

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(merged)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def scale(self, factor) -> "Polynomial":
        f = Fraction(factor)
        return Polynomial([c * f for c in self.coeffs])

    def stretch(self, factor: int) -> "Polynomial":
        """Substitute factor * x for x."""
        return Polynomial([c * factor**i for i, c in enumerate(self.coeffs)])

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


@functools.lru_cache(maxsize=None)
def power_sum_polynomial(m: int) -> Polynomial:
    """The degree m + 1 polynomial P with P(x) = 1^m + 2^m + ... + x^m.

    Built by the binomial recurrence obtained from telescoping
    (j+1)^(m+1) - j^(m+1): (m+1) P_m(x) = (x+1)^(m+1) - 1
    - sum_{j<m} C(m+1, j) P_j(x).  P(0) = 0 for every m.
    """
    if m < 0:
        raise ValueError("power must be a nonnegative integer")
    if m == 0:
        return Polynomial([0, 1])
    mm = m + 1
    coeffs = [Fraction(math.comb(mm, i)) for i in range(mm + 1)]  # (x+1)^(m+1)
    coeffs[0] -= 1
    poly = Polynomial(coeffs)
    for j in range(m):
        poly = poly - power_sum_polynomial(j).scale(math.comb(mm, j))
    return poly.scale(Fraction(1, mm))


def _range_sum(poly: Polynomial) -> Polynomial:
    """P with P(x) = poly(1) + poly(2) + ... + poly(x)."""
    acc = Polynomial([0])
    for power, coef in enumerate(poly.coeffs):
        if coef:
            acc = acc + power_sum_polynomial(power).scale(coef)
    return acc


@functools.lru_cache(maxsize=None)
def _level_polynomial(n: int) -> Polynomial:
    if n == 1:
        return Polynomial([0, 1])
    prev = _level_polynomial(n - 1)
    summed = _range_sum(prev)
    # sum of prev over (k, 2k] is the antidifference at 2k minus at k
    return summed.stretch(2) - summed


def level_polynomial(n: int, *, limit: int = DEFAULT_POLY_LIMIT) -> Polynomial:
    """The degree-n polynomial p_n with p_n(k) = d(n, k) at every positive
    integer k; p_n(1) = s(n + 1)."""
    if n < 1:
        raise ValueError("index must be a positive integer")
    if n > limit:
        raise ValueError(f"index {n} exceeds the polynomial limit {limit}")
    return _level_polynomial(n)


def count_via_polynomial(n: int, *, limit: int = DEFAULT_POLY_LIMIT) -> int:
    """s(n) as p_{n-1}(1)."""
    if n < 2:
        raise ValueError("polynomial counting needs n >= 2")
    return level_polynomial(n - 1, limit=limit).value_at(1)


def bfile_lines(n_max: int, *, table: CountTable | None = None) -> Iterator[str]:
    """s(1) .. s(n_max) in b-file format: one "n value" pair per line."""
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    for n in range(1, n_max + 1):
        yield f"{n} {count_fast(n, table=table)}"
