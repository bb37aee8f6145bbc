"""Tournament and Meeussen sequences: validation, subset-sum profiles,
candidate extensions, and bounded enumeration of the two generating trees.

A tournament sequence is a strictly increasing sequence of positive
integers that starts at 1 and in which each term is at most double the
previous one.  A Meeussen sequence is a strictly increasing sequence of
positive integers that starts at 1, whose subset sums cover the whole
interval from 0 to the total, and in which every term minus one is a
subset sum in exactly one way.

Both families form generating trees: the children of a sequence are its
one-term extensions, visited here in increasing order of the new term.
Everything in this module is deliberately the direct, small-scale kind
of computation (subset-sum tables, explicit tree walks); it serves as
the oracle that the scalable machinery elsewhere is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

import numpy as np

Terms = tuple[int, ...]

#: Maximum number of subset-sum targets (total + 1) the dp profile will allocate.
DEFAULT_DP_BUDGET = 1 << 26

#: Default cap for tree enumeration; level 10 already holds ~6.3e8 sequences.
DEFAULT_DEPTH_LIMIT = 10


class BudgetExceededError(Exception):
    """The subset-sum table would exceed the configured target budget."""

    def __init__(self, total: int, budget: int):
        super().__init__(
            f"sequence sums to {total}, needing {total + 1} subset-sum targets,"
            f" over the budget of {budget}"
        )
        self.total = total
        self.budget = budget


class Violation(NamedTuple):
    """One failed rule.  ``index`` is the 1-based position of the offending
    term; rules about a pair of terms anchor at the earlier one; ``index`` 0
    means the sequence as a whole."""

    index: int
    rule: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "ValidationReport":
        vs = tuple(violations)
        return cls(valid=not vs, violations=vs)


class InvalidSequenceError(ValueError):
    """Input failed validation for the role it claims; carries the report."""

    def __init__(self, kind: str, report: ValidationReport):
        lines = "; ".join(f"term {v.index}: {v.rule}: {v.detail}" for v in report.violations)
        super().__init__(f"not a valid {kind} sequence ({lines})")
        self.kind = kind
        self.report = report


def _as_terms(seq: Iterable[int]) -> Terms:
    terms = tuple(seq)
    if not terms:
        raise ValueError("sequence must be non-empty")
    return terms


def _prefix_violations(terms: Terms) -> list[Violation]:
    """Rules shared by both roles: first term 1, strictly increasing, positive."""
    violations = []
    if terms[0] != 1:
        violations.append(Violation(1, "first-term", f"first term is {terms[0]}, must be 1"))
    for i, t in enumerate(terms, 1):
        if t < 1:
            violations.append(Violation(i, "not-positive", f"term {t} is not a positive integer"))
    for i in range(1, len(terms)):
        if terms[i] <= terms[i - 1]:
            violations.append(
                Violation(i, "not-increasing", f"{terms[i]} does not exceed {terms[i - 1]}")
            )
    return violations


def validate_tournament(seq: Iterable[int]) -> ValidationReport:
    """Check the tournament rules: t_1 = 1 and t_i < t_{i+1} <= 2 t_i.

    Collects every violation instead of stopping at the first.
    """
    terms = _as_terms(seq)
    violations = _prefix_violations(terms)
    for i in range(1, len(terms)):
        prev, cur = terms[i - 1], terms[i]
        if cur > prev and cur > 2 * prev:
            violations.append(Violation(i, "exceeds-double", f"{cur} > 2*{prev}"))
    return ValidationReport.from_violations(violations)


def tournament_children(k: int) -> list[int]:
    """Labels of the k children of a tree node labelled k: k+1, ..., 2k."""
    if k < 1:
        raise ValueError(f"label must be a positive integer, got {k}")
    return list(range(k + 1, 2 * k + 1))


@dataclass(frozen=True)
class RepresentationProfile:
    """Subset-sum representation counts of a sequence, saturated at 2.

    ``counts[t]`` is min(2, number of subsets summing to t) for every
    target t in [0, total].  Saturation keeps the table in {0, 1, 2},
    which is all that uniqueness questions need.
    """

    total: int
    counts: np.ndarray  # uint8, length total + 1

    def count(self, target: int) -> int:
        return int(self.counts[target])

    def representable(self) -> np.ndarray:
        """All subset sums, ascending."""
        return np.flatnonzero(self.counts >= 1)

    def uniquely_representable(self) -> np.ndarray:
        """Subset sums achievable in exactly one way, ascending."""
        return np.flatnonzero(self.counts == 1)

    def covers_interval(self) -> bool:
        """True when every target in [0, total] is a subset sum."""
        return bool(np.all(self.counts >= 1))


def representation_profile(
    seq: Iterable[int], *, budget: int = DEFAULT_DP_BUDGET
) -> RepresentationProfile:
    """Count subset representations of every target in [0, sum(seq)].

    One saturating convolution pass per term; memory is O(sum) bytes.
    Raises :class:`BudgetExceededError` when sum(seq) + 1 targets would
    exceed ``budget``.
    """
    terms = _as_terms(seq)
    if any(t < 1 for t in terms):
        raise ValueError("terms must be positive integers")
    total = sum(terms)
    if total + 1 > budget:
        raise BudgetExceededError(total, budget)
    counts = np.zeros(total + 1, dtype=np.uint8)
    counts[0] = 1
    for m in terms:
        bumped = counts.copy()
        # entries stay <= 4 before clipping, no uint8 overflow
        bumped[m:] += counts[: total + 1 - m]
        np.minimum(bumped, 2, out=bumped)
        counts = bumped
    counts.setflags(write=False)
    return RepresentationProfile(total, counts)


def validate_meeussen(
    seq: Iterable[int],
    mode: str = "dp",
    *,
    budget: int = DEFAULT_DP_BUDGET,
) -> ValidationReport:
    """Check the Meeussen rules.

    ``dp`` mode verifies all rules directly on the subset-sum profile:
    first term 1, strictly increasing, the subset sums fill [0, total]
    with no gap, and each term minus one has exactly one representation.
    ``structural`` mode instead attempts to invert the tree isomorphism
    and reports valid iff the inversion succeeds; it never builds the
    subset-sum table, so it works at scales where dp cannot.
    """
    terms = _as_terms(seq)
    if mode not in ("dp", "structural"):
        raise ValueError(f"mode must be 'dp' or 'structural', got {mode!r}")
    violations = _prefix_violations(terms)

    if mode == "structural":
        if not violations:
            from . import bijection  # deferred: bijection imports this module

            try:
                bijection.phi_inverse(terms)
            except bijection.NotMeeussenError as exc:
                violations.append(Violation(exc.level, "no-candidate", str(exc)))
        return ValidationReport.from_violations(violations)

    if any(t < 1 for t in terms):
        return ValidationReport.from_violations(violations)
    profile = representation_profile(terms, budget=budget)
    if not profile.covers_interval():
        gap = int(np.flatnonzero(profile.counts == 0)[0])
        violations.append(
            Violation(0, "sum-gap", f"smallest unrepresentable value is {gap}")
        )
    for i, m in enumerate(terms, 1):
        c = profile.count(m - 1)
        if c != 1:
            word = "no" if c == 0 else "2 or more"
            violations.append(
                Violation(i, "not-unique", f"m_{i} - 1 = {m - 1} has {word} subset representations")
            )
    return ValidationReport.from_violations(violations)


def candidates(seq: Iterable[int], *, budget: int = DEFAULT_DP_BUDGET) -> Terms:
    """Uniquely representable sums >= the last term, ascending.

    These are exactly the values u for which appending u + 1 keeps the
    sequence Meeussen; the largest is always the sequence total.  Built
    from the subset-sum profile, so subject to the dp budget; rejects
    input that is not a valid Meeussen sequence.
    """
    terms = _as_terms(seq)
    report = validate_meeussen(terms, "dp", budget=budget)
    if not report.valid:
        raise InvalidSequenceError("meeussen", report)
    profile = representation_profile(terms, budget=budget)
    ur = profile.uniquely_representable()
    return tuple(int(u) for u in ur[ur >= terms[-1]])


def enumerate_tree(
    kind: str,
    depth: int,
    visitor: Callable[[Terms], None] | None = None,
    *,
    depth_limit: int = DEFAULT_DEPTH_LIMIT,
) -> int:
    """Depth-first, lexicographic walk over all sequences of exactly ``depth``
    terms of the given kind; returns how many there are.

    ``visitor`` receives each sequence as a tuple.  With no visitor the
    bottom level is tallied from its parents' child counts instead of
    being materialized, which keeps pure counting cheap.

    Meeussen children are derived per node from the full prefix (two
    distinct prefixes may share a last term yet extend differently), by
    updating the candidate list: extending by candidate u_j + 1 reflects
    the j top candidates at or below u_j through the new total and
    shifts every old candidate up by the new term.
    """
    if kind not in ("tournament", "meeussen"):
        raise ValueError(f"kind must be 'tournament' or 'meeussen', got {kind!r}")
    if depth < 1:
        raise ValueError("depth must be a positive integer")
    if depth > depth_limit:
        raise ValueError(f"depth {depth} exceeds the enumeration limit {depth_limit}")
    if depth == 1:
        if visitor is not None:
            visitor((1,))
        return 1
    if kind == "tournament":
        return _walk_tournament(depth, visitor)
    return _walk_meeussen(depth, visitor)


def _walk_tournament(depth: int, visitor) -> int:
    if visitor is None:
        count = 0
        stack = [(1, 1)]
        while stack:
            label, level = stack.pop()
            if level == depth - 1:
                count += label  # the node has exactly `label` children, all leaves
            else:
                stack.extend((c, level + 1) for c in range(label + 1, 2 * label + 1))
        return count

    count = 0
    terms = [1]

    def descend(label: int, level: int) -> None:
        nonlocal count
        for child in range(label + 1, 2 * label + 1):
            terms.append(child)
            if level + 1 == depth:
                visitor(tuple(terms))
                count += 1
            else:
                descend(child, level + 1)
            terms.pop()

    descend(1, 1)
    return count


def _walk_meeussen(depth: int, visitor) -> int:
    count = 0
    terms = [1]

    def descend(total: int, cands: list[int], level: int) -> None:
        nonlocal count
        last = level + 1 == depth
        if last and visitor is None:
            count += len(cands)
            return
        for j, u in enumerate(cands, 1):
            m = u + 1
            terms.append(m)
            if last:
                visitor(tuple(terms))
                count += 1
            else:
                new_total = total + m
                child = [new_total - cands[i] for i in range(j - 1, -1, -1)]
                child += [c + m for c in cands]
                descend(new_total, child, level + 1)
            terms.pop()

    # the root (1) has total 1 and the single candidate 1
    descend(1, [1], 1)
    return count


def parse_terms(text: str) -> Terms:
    """Parse one sequence in the shared text format: decimal terms separated
    by single spaces, no signs, no leading zeros."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty sequence line")
    terms = []
    for tok in tokens:
        if not tok.isdigit() or tok[0] == "0":
            raise ValueError(f"bad term {tok!r}: expected a positive decimal integer")
        terms.append(int(tok))
    return tuple(terms)


def format_terms(terms: Iterable[int]) -> str:
    """Render a sequence in the shared text format."""
    return " ".join(str(t) for t in terms)
