"""Independent brute-force oracles shared by the tests.

Everything here is written directly from the definitions (bitmask
subset enumeration, the plain descendant recurrence, explicit random
walks) and deliberately avoids the library's own shortcuts, so the two
sides can disagree when one of them is wrong.
"""

import functools
import random
from collections import Counter


def brute_subset_counts(terms):
    """Exact number of subsets per sum, by enumerating all 2^len subsets."""
    counts = Counter()
    for mask in range(1 << len(terms)):
        s = 0
        for i, t in enumerate(terms):
            if mask >> i & 1:
                s += t
        counts[s] += 1
    return counts


def brute_ur(terms):
    """Uniquely representable sums, ascending."""
    counts = brute_subset_counts(terms)
    return sorted(v for v, c in counts.items() if c == 1)


def brute_is_meeussen(terms):
    if terms[0] != 1:
        return False
    if any(b <= a for a, b in zip(terms, terms[1:])):
        return False
    counts = brute_subset_counts(terms)
    total = sum(terms)
    if any(counts[v] == 0 for v in range(total + 1)):
        return False
    return all(counts[m - 1] == 1 for m in terms)


def brute_meeussen_children(terms):
    """Labels of the children of a Meeussen tree node, from the definition."""
    last = terms[-1]
    return [u + 1 for u in brute_ur(terms) if u >= last]


@functools.cache
def d_basic(n, k):
    """The plain descendant recurrence: d(0,k)=1, d(n,0)=0,
    d(n,k) = sum_{j=k+1}^{2k} d(n-1,j)."""
    if n == 0:
        return 1
    if k == 0:
        return 0
    return sum(d_basic(n - 1, j) for j in range(k + 1, 2 * k + 1))


def random_tournament(rng: random.Random, length: int):
    """Uniformly random jumps; not the uniform distribution over sequences,
    just a generator of valid ones."""
    terms = [1]
    for _ in range(length - 1):
        terms.append(terms[-1] + rng.randint(1, terms[-1]))
    return tuple(terms)


def all_tournament_sequences(length):
    """Every tournament sequence of the given length, in lex order."""
    out = []

    def grow(terms):
        if len(terms) == length:
            out.append(tuple(terms))
            return
        last = terms[-1]
        for nxt in range(last + 1, 2 * last + 1):
            terms.append(nxt)
            grow(terms)
            terms.pop()

    grow([1])
    return out
