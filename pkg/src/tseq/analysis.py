"""Monte Carlo estimation and asymptotic growth of the level counts.

A uniformly random root-to-level-(n-1) walk down the tournament tree
(each child equally likely) makes the product of the labels along the
path an unbiased estimator of s(n), the number of level-n nodes: the
probability of a path cancels all labels but the last, so the
expectation telescopes into the child count of the whole level.

The continuous relaxation of the walk (each ratio uniform on (1, 2])
has the exact expectation prod_{j=2}^{n-1} (2^j - 1) / j, which bounds
s(n) from below and itself exceeds alpha * 2^C(n,2) / (n-1)! with
alpha the infinite product (1 - 1/2)(1 - 1/4)(1 - 1/8)...

For the growth constant study we track, with lg = log base 2,

    c(n) = (lg s(n) - C(n, 2) + lg n!) / (log n)^2

where only the log in the denominator has a configurable base.  With a
natural-log denominator the series peaks at n = 32 with
c(32) = 1.18304060...; a base-2 denominator rescales all values by a
constant, so the peak location does not move.  See the README for how
the base was pinned.

High-precision arithmetic uses mpmath with a configurable mantissa
(default 128 bits); base-2 logs of exact big integers go through the
bit length plus a correction from the leading bits, never through a
single machine float.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import mpmath

from .counting import CountTable, count_fast
from .sequences import enumerate_tree

DEFAULT_PRECISION_BITS = 128

#: Denominator log base under which the growth series matches the published
#: peak value; "2" is the other accepted choice.
DEFAULT_GROWTH_BASE = "e"


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo estimate of s(n); reproducible from (n, samples, seed,
    streams)."""

    n: int
    samples: int
    seed: int
    streams: int
    mean: mpmath.mpf
    std_error: mpmath.mpf


@dataclass(frozen=True)
class GrowthPoint:
    n: int
    lg_s: mpmath.mpf
    c_value: mpmath.mpf


def sample_path(n: int, rng: random.Random) -> int:
    """Product of the labels along one uniformly random path to level n - 1.

    Unbiased for s(n).  ``rng`` must offer modulo-bias-free uniform
    integers (``random.Random`` does).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    randint = rng.randint
    label = 1
    product = 1
    for _ in range(n - 2):
        label += randint(1, label)
        product *= label
    return product


def _stream_moments(n: int, count: int, seed: int) -> tuple[int, int, int]:
    rng = random.Random(seed)
    total = 0
    total_sq = 0
    for _ in range(count):
        v = sample_path(n, rng)
        total += v
        total_sq += v * v
    return count, total, total_sq


def estimate_count(
    n: int,
    samples: int,
    seed: int,
    *,
    streams: int = 1,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> Estimate:
    """Sample mean and standard error of the path products.

    Moments are accumulated exactly (big integers) per stream and merged
    associatively, so splitting across streams is deterministic for a
    fixed (n, samples, seed, streams).  Streams run on a thread pool.
    Standard error uses the unbiased sample-variance estimator.
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    if streams < 1:
        raise ValueError("need at least 1 stream")
    master = random.Random(seed)
    stream_seeds = [master.getrandbits(63) for _ in range(streams)]
    base, extra = divmod(samples, streams)
    sizes = [base + (1 if i < extra else 0) for i in range(streams)]

    if streams == 1:
        parts = [_stream_moments(n, sizes[0], stream_seeds[0])]
    else:
        with ThreadPoolExecutor(max_workers=streams) as pool:
            parts = list(pool.map(_stream_moments, [n] * streams, sizes, stream_seeds))

    count = sum(p[0] for p in parts)
    total = sum(p[1] for p in parts)
    total_sq = sum(p[2] for p in parts)

    mean_exact = Fraction(total, count)
    var_exact = (Fraction(total_sq) - Fraction(total * total, count)) / (count - 1)
    with mpmath.workprec(precision_bits):
        mean = mpmath.mpf(mean_exact.numerator) / mean_exact.denominator
        variance = mpmath.mpf(var_exact.numerator) / var_exact.denominator
        std_error = mpmath.sqrt(variance / count)
    return Estimate(n, samples, seed, streams, mean, std_error)


def exact_path_expectation(n: int) -> Fraction:
    """The full expectation over every root-to-level-(n-1) path, exactly.

    Enumerates the paths and sums probability times label product with
    exact rationals; equals s(n).  Exponential in n, fine for n <= 8.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    total = Fraction(0)

    def visit(terms):
        nonlocal total
        prob_denominator = math.prod(terms[:-1])  # degrees of the chosen-from nodes
        product = math.prod(terms)
        total += Fraction(product, prob_denominator)

    enumerate_tree("tournament", n - 1, visit)
    return total


def alpha(precision_bits: int = DEFAULT_PRECISION_BITS, *, factors: int | None = None) -> mpmath.mpf:
    """The infinite product (1 - 1/2)(1 - 1/4)(1 - 1/8)... ~= 0.2887881.

    Truncated after ``factors`` terms when given, otherwise once the
    next factor differs from 1 by less than the working precision.  The
    omitted tail multiplies the result by at least 1 - 2^-N after N
    factors, so the truncation error is below the target precision.
    Partial products decrease monotonically (every factor is < 1).
    """
    if precision_bits < 16:
        raise ValueError("need at least 16 precision bits")
    limit = factors if factors is not None else precision_bits + 16
    if limit < 1:
        raise ValueError("need at least one factor")
    with mpmath.workprec(precision_bits + 16):
        product = mpmath.mpf(1)
        for i in range(1, limit + 1):
            product *= 1 - mpmath.mpf(2) ** (-i)
    return product


def continuous_expectation(n: int) -> Fraction:
    """Exact expectation of the continuous path-product analogue:
    prod_{j=2}^{n-1} (2^j - 1) / j; the empty product (n = 2) is 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    product = Fraction(1)
    for j in range(2, n):
        product *= Fraction((1 << j) - 1, j)
    return product


def lower_bound(n: int, *, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpmath.mpf:
    """alpha * 2^C(n, 2) / (n - 1)!, a lower bound for s(n)."""
    if n < 2:
        raise ValueError("need n >= 2")
    a = alpha(precision_bits)
    with mpmath.workprec(precision_bits):
        return a * mpmath.mpf(2) ** math.comb(n, 2) / mpmath.mpf(math.factorial(n - 1))


def _lg_int(x: int) -> mpmath.mpf:
    """Base-2 log of a positive integer under the current mpmath precision.

    Splits off the bit length and takes the log of the leading bits, so
    integers with thousands of digits never round through one float.
    """
    if x < 1:
        raise ValueError("need a positive integer")
    bits = x.bit_length()
    keep = mpmath.mp.prec + 8
    if bits <= keep:
        return mpmath.log(mpmath.mpf(x), 2)
    shift = bits - keep
    return shift + mpmath.log(mpmath.mpf(x >> shift), 2)


def lg_exact(x: int, *, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpmath.mpf:
    """Base-2 log of an exact big integer at the requested precision."""
    with mpmath.workprec(precision_bits):
        return _lg_int(x)


def growth_series(
    n_max: int,
    base: str = DEFAULT_GROWTH_BASE,
    *,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    table: CountTable | None = None,
) -> list[GrowthPoint]:
    """Growth-constant series c(n) for 4 <= n <= n_max.

    c(n) = (lg s(n) - C(n, 2) + lg n!) / (log n)^2 with lg fixed to base
    2 and only the denominator log base configurable ("e" or "2").  The
    argmax over n does not depend on the base choice.
    """
    if n_max < 4:
        raise ValueError("need n_max >= 4")
    if base not in ("2", "e"):
        raise ValueError(f"base must be '2' or 'e', got {base!r}")
    points = []
    with mpmath.workprec(precision_bits):
        for n in range(4, n_max + 1):
            s = count_fast(n, table=table)
            lg_s = _lg_int(s)
            excess = lg_s - math.comb(n, 2) + _lg_int(math.factorial(n))
            log_n = mpmath.log(n, 2) if base == "2" else mpmath.log(n)
            points.append(GrowthPoint(n, lg_s, excess / log_n**2))
    return points


def peak(points: list[GrowthPoint]) -> GrowthPoint:
    """The point with the largest growth constant."""
    if not points:
        raise ValueError("no points")
    return max(points, key=lambda p: p.c_value)


def format_fixed(x, digits: int) -> str:
    """Render a high-precision real with a fixed number of decimals."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    scaled = int(mpmath.nint(mpmath.mpf(x) * mpmath.mpf(10) ** digits))
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**digits) if digits else (scaled, 0)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def growth_csv_lines(points: list[GrowthPoint], *, digits: int = 10) -> Iterator[str]:
    """CSV rows for a growth series: header "n,lg_s,c" then one row per n."""
    yield "n,lg_s,c"
    for p in points:
        yield f"{p.n},{format_fixed(p.lg_s, digits)},{format_fixed(p.c_value, digits)}"


def growth_rate_diagnostic(k: int, samples: int, seed: int) -> float:
    """Sample mean of t_k^(1/k) over random paths; concentrates at or above
    a constant approaching 4/e ~= 1.4715 as k grows.  Reported as a
    diagnostic only."""
    if k < 2:
        raise ValueError("need k >= 2")
    rng = random.Random(seed)
    acc = 0.0
    for _ in range(samples):
        label = 1
        for _ in range(k - 1):
            label += rng.randint(1, label)
        acc += float(label) ** (1.0 / k)
    return acc / samples
