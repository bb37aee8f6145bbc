"""The tree isomorphism between tournament and Meeussen sequences.

Both families grow as generating trees with identical branching: the
root has one child, and whenever a node has k children those children
have k+1, k+2, ..., 2k children respectively.  Since no two siblings
share a child count, there is exactly one correspondence between the
two trees, and it preserves sequence length and lexicographic order.
This module computes it in both directions without ever materializing
the exponential-size set of uniquely representable sums.

The workhorse is ``BijectionState.candidate(level, k)``: the k-th
smallest uniquely representable subset sum of the first ``level``
Meeussen terms that is at least as large as the last of them (a
"candidate"; appending candidate + 1 is exactly what keeps the sequence
Meeussen).  Writing j for the jump between consecutive tournament
labels and S' for the running total after the new Meeussen term m, the
candidate lists obey

    m = candidate(level, j) + 1
    candidate(level + 1, k) = S' - candidate(level, j + 1 - k)   for k <= j
    candidate(level + 1, k) = m  + candidate(level, k - j)       for k > j

with base candidate(1, 1) = 1.  The first branch reflects candidates
through the new total (subset complementation), the second shifts the
old ones up by m.  A query walks down one level per step, so a single
candidate costs O(level) big-integer operations and mapping a length-n
sequence costs O(n^2).
"""

from __future__ import annotations

from typing import Iterable

from .sequences import (
    InvalidSequenceError,
    Terms,
    ValidationReport,
    Violation,
    _as_terms,
    representation_profile,
    validate_tournament,
    DEFAULT_DP_BUDGET,
)


class NotMeeussenError(ValueError):
    """Inversion failed: no candidate matches the claimed term.

    ``level`` is the 1-based position of the first offending term.
    """

    def __init__(self, level: int, detail: str = ""):
        message = f"not a Meeussen sequence at term {level}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.level = level


class BijectionState:
    """Streaming state for mapping between the two trees, one term at a time.

    Tracks the tournament labels, their jumps, the Meeussen terms and
    their partial sums, plus a cache of resolved candidate queries keyed
    by (level, index).  Cache fills are idempotent and invisible to
    callers, but an instance should be confined to one thread at a time.
    """

    __slots__ = ("labels", "jumps", "m_terms", "sums", "_memo")

    def __init__(self):
        self.labels: list[int] = [1]  # tournament labels t_i
        self.jumps: list[int] = []  # jumps[i] = t_{i+2} - t_{i+1}
        self.m_terms: list[int] = [1]  # Meeussen terms m_i
        self.sums: list[int] = [1]  # partial sums S_i
        self._memo: dict[tuple[int, int], int] = {}

    @property
    def length(self) -> int:
        return len(self.labels)

    def clone(self) -> "BijectionState":
        """Independent copy; cached queries carry over (they only depend on
        the shared prefix)."""
        other = BijectionState.__new__(BijectionState)
        other.labels = self.labels[:]
        other.jumps = self.jumps[:]
        other.m_terms = self.m_terms[:]
        other.sums = self.sums[:]
        other._memo = self._memo.copy()
        return other

    def candidate(self, level: int, k: int) -> int:
        """The k-th smallest candidate for extending the first ``level`` terms.

        Strictly increasing in k; k ranges over [1, t_level], and the
        value at k = t_level equals the partial sum S_level.
        """
        if not 1 <= level <= self.length:
            raise ValueError(f"level {level} outside [1, {self.length}]")
        width = self.labels[level - 1]
        if not 1 <= k <= width:
            raise ValueError(f"candidate index {k} outside [1, {width}] at level {level}")
        memo = self._memo
        jumps = self.jumps
        m_terms = self.m_terms
        sums = self.sums

        # walk down one level per step, accumulating the affine transform
        # value = offset + sign * u(level, k); record the path to backfill
        offset, sign = 0, 1
        path: list[tuple[tuple[int, int], int, int]] = []
        while True:
            key = (level, k)
            cached = memo.get(key)
            if cached is not None:
                value = offset + sign * cached
                break
            if level == 1:
                memo[key] = 1
                value = offset + sign
                break
            path.append((key, offset, sign))
            j = jumps[level - 2]
            if k > j:
                offset += sign * m_terms[level - 1]
                k -= j
            else:
                offset += sign * sums[level - 1]
                sign = -sign
                k = j + 1 - k
            level -= 1
        for key, off, sgn in path:
            memo[key] = (value - off) * sgn
        return value

    def extend(self, jump: int) -> "BijectionState":
        """Append the next term pair: tournament label grows by ``jump``
        and the Meeussen side gains candidate(length, jump) + 1.

        ``jump`` must lie in [1, current label].  Costs O(length)
        big-integer operations.  Mutates and returns self.
        """
        label = self.labels[-1]
        if not 1 <= jump <= label:
            raise ValueError(f"jump {jump} outside [1, {label}]")
        m_next = self.candidate(self.length, jump) + 1
        self.labels.append(label + jump)
        self.jumps.append(jump)
        self.m_terms.append(m_next)
        self.sums.append(self.sums[-1] + m_next)
        return self


def phi(seq: Iterable[int]) -> Terms:
    """Image of a tournament sequence in the Meeussen tree.

    The unique equal-length Meeussen sequence at the same tree position;
    O(n^2) big-integer operations overall.
    """
    terms = _as_terms(seq)
    report = validate_tournament(terms)
    if not report.valid:
        raise InvalidSequenceError("tournament", report)
    state = BijectionState()
    for i in range(1, len(terms)):
        state.extend(terms[i] - terms[i - 1])
    return tuple(state.m_terms)


def phi_inverse(seq: Iterable[int]) -> Terms:
    """Tournament sequence whose image under :func:`phi` is the input.

    At each level the jump is located by binary search over the strictly
    increasing candidates.  A clean failure (no candidate equals the
    next term minus one) raises :class:`NotMeeussenError`, which makes
    this double as a structural Meeussen validator.
    """
    terms = _as_terms(seq)
    if terms[0] != 1:
        raise NotMeeussenError(1, f"first term is {terms[0]}, must be 1")
    state = BijectionState()
    for i in range(1, len(terms)):
        m = terms[i]
        if m <= terms[i - 1]:
            raise NotMeeussenError(i + 1, f"{m} does not exceed {terms[i - 1]}")
        target = m - 1
        level = state.length
        lo, hi = 1, state.labels[-1]
        while lo < hi:
            mid = (lo + hi) // 2
            if state.candidate(level, mid) < target:
                lo = mid + 1
            else:
                hi = mid
        if state.candidate(level, lo) != target:
            raise NotMeeussenError(
                i + 1, f"term {m} is not one more than a uniquely representable sum"
            )
        state.extend(lo)
    return tuple(state.labels)


def check_lemma_tm(seq: Iterable[int], *, budget: int = DEFAULT_DP_BUDGET) -> ValidationReport:
    """Cross-check the bijection against the brute-force subset-sum profile.

    With M the image of the tournament sequence T and u_1 < u_2 < ... the
    uniquely representable sums of M (including 0), two identities tie
    the tournament labels to ranks in that list, for every i >= 2:

        u[t_i]     == m_i - 1
        u[t_i + 1] == m_1 + ... + m_{i-1} + 1

    Requires the profile, so the dp budget applies.
    """
    terms = _as_terms(seq)
    image = phi(terms)
    profile = representation_profile(image, budget=budget)
    ur = profile.uniquely_representable()
    violations = []
    partial = image[0]
    for i in range(2, len(terms) + 1):
        t_i = terms[i - 1]
        m_i = image[i - 1]
        rank_val = int(ur[t_i - 1])
        next_val = int(ur[t_i])
        if rank_val != m_i - 1:
            violations.append(
                Violation(i, "ur-rank", f"u[{t_i}] = {rank_val}, expected m_{i} - 1 = {m_i - 1}")
            )
        if next_val != partial + 1:
            violations.append(
                Violation(i, "ur-next", f"u[{t_i + 1}] = {next_val}, expected {partial + 1}")
            )
        partial += m_i
    return ValidationReport.from_violations(violations)


def check_kbonacci(seq: Iterable[int], n: int, k: int) -> bool:
    """Whether a locally self-doubling step maps to a running-sum step.

    Precondition (checked): t_{n+1} = 2 t_n - t_{n-k} with 1-based
    indices, which is the same as saying both t_{n+1} and t_n exceed the
    sum of their previous k terms by a common constant.  Returns whether
    the image satisfies m_{n+1} = m_n + m_{n-1} + ... + m_{n-k}, i.e.
    the new term is the sum of the previous k + 1 image terms.
    """
    terms = _as_terms(seq)
    if not 1 <= n - k:
        raise ValueError(f"need n - k >= 1, got n={n}, k={k}")
    if n + 1 > len(terms):
        raise ValueError(f"need at least {n + 1} terms, got {len(terms)}")
    if terms[n] != 2 * terms[n - 1] - terms[n - k - 1]:
        raise ValueError(
            f"precondition t_{n + 1} = 2 t_{n} - t_{n - k} fails:"
            f" {terms[n]} != 2*{terms[n - 1]} - {terms[n - k - 1]}"
        )
    image = phi(terms[: n + 1])
    return image[n] == sum(image[n - k - 1 : n])
