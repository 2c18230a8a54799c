"""Binary-search construction of partitions with prescribed integrals.

Two edge families bracket any target c in (0, 1/2): ⟨1^1, s^(s-1)⟩ with
integral tending to 0, and ⟨1^(s-1), s^1⟩ with integral tending to 1/2.
Both have length s, so combining them with ⊕ keeps lengths equal and makes
each combined integral the exact midpoint of the bracket.  Halving the
bracket each step certifies |∫ − c| < (b − a)/2^s, entirely in exact
rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .integrals import integral
from .partitions import Partition


def alpha(s):
    """⟨1^1, s^(s-1)⟩, the low-integral edge partition of length s."""
    if s < 2:
        raise DomainError("need s >= 2")
    return Partition([1] + [0] * (s - 2) + [s - 1])


def beta(s):
    """⟨1^(s-1), s^1⟩, the high-integral edge partition of length s."""
    if s < 2:
        raise DomainError("need s >= 2")
    return Partition([s - 1] + [0] * (s - 2) + [1])


def alpha_integral(s):
    """Closed form (1/s)(1/2 + (s-1)/(s+1)); decreases to 0."""
    if s < 2:
        raise DomainError("need s >= 2")
    return (Fraction(1, 2) + Fraction(s - 1, s + 1)) / s


def beta_integral(s):
    """Closed form (1/s)((s-1)/2 + 1/(s+1)); increases to 1/2."""
    if s < 2:
        raise DomainError("need s >= 2")
    return (Fraction(s - 1, 2) + Fraction(1, s + 1)) / s


@dataclass(frozen=True)
class DensityStep:
    index: int
    partition: Partition  # the combined partition δ at this step
    integral: Fraction
    error_bound: Fraction  # (b − a) / 2^index


@dataclass(frozen=True)
class DensityTrace:
    target: Fraction
    epsilon: Fraction
    start_index: int  # s of the edge partitions used for the bracket
    interval: tuple  # (a, b) = starting bracket integrals
    steps: tuple  # DensityStep per iteration
    result: Partition
    achieved_error: Fraction


def _bracket_index(c):
    # Smallest s >= 2 with alpha_integral(s) < c < beta_integral(s);
    # widened by one when c lands exactly on an endpoint.
    s = 2
    while not (alpha_integral(s) < c < beta_integral(s)):
        s += 1
    return s


def approximate(c, epsilon):
    """Construct a partition whose normalized integral is within `epsilon`
    of the target c ∈ (0, 1/2), with a certified error bound per step."""
    c = Fraction(c)
    epsilon = Fraction(epsilon)
    if not 0 < c < Fraction(1, 2):
        raise DomainError("target must lie strictly between 0 and 1/2")
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")

    s = _bracket_index(c)
    low, high = alpha(s), beta(s)
    a, b = alpha_integral(s), beta_integral(s)
    width = b - a

    steps = []
    achieved = None
    r = 0
    delta = None
    while True:
        r += 1
        delta = low.oplus(high)
        value = integral(delta)
        bound = width / 2 ** r
        steps.append(DensityStep(r, delta, value, bound))
        if value == c:
            achieved = Fraction(0)
            break
        if bound < epsilon:
            achieved = abs(value - c)
            break
        if c < value:
            high = delta
            low = low.oplus(low)
        else:
            low = delta
            high = high.oplus(high)

    return DensityTrace(
        target=c,
        epsilon=epsilon,
        start_index=s,
        interval=(a, b),
        steps=tuple(steps),
        result=delta,
        achieved_error=achieved,
    )
