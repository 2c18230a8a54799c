"""Exact arithmetic support: rationals, Stirling numbers, harmonic numbers, primes.

Rational values throughout the package are ``fractions.Fraction`` instances,
which are arbitrary precision and always stored fully reduced with a positive
denominator.  This module adds the string forms used on the wire ("num/den",
or "num" for integers) and the memoized integer tables the calculus and
averages code needs.
"""

from fractions import Fraction

from .errors import DomainError

# Triangle of Stirling numbers of the second kind; row d holds S(d, 0..d).
_stirling_rows = [[1]]

# harmonic[n] = H_n; harmonic[0] = 0 so indexing is direct.
_harmonics = [Fraction(0)]

_primes = [2, 3, 5, 7, 11, 13]


def stirling2(d, j):
    """Stirling number of the second kind S(d, j), memoized.

    S(d+1, j) = j*S(d, j) + S(d, j-1); values with j > d are 0.
    """
    if d < 0 or j < 0:
        raise DomainError("stirling2 requires nonnegative arguments")
    if j > d:
        return 0
    while len(_stirling_rows) <= d:
        prev = _stirling_rows[-1]
        n = len(_stirling_rows)  # building row n from row n-1
        row = [0] * (n + 1)
        for m in range(1, n):
            row[m] = m * prev[m] + prev[m - 1]
        row[n] = 1
        _stirling_rows.append(row)
    return _stirling_rows[d][j]


def harmonic(n):
    """The n-th harmonic number H_n = 1 + 1/2 + ... + 1/n, exact."""
    if n < 1:
        raise DomainError("harmonic requires n >= 1")
    while len(_harmonics) <= n:
        _harmonics.append(_harmonics[-1] + Fraction(1, len(_harmonics)))
    return _harmonics[n]


def _extend_primes(count):
    # Sieve with a growing bound until at least `count` primes are known.
    bound = max(2 * _primes[-1], 32)
    while True:
        sieve = bytearray([1]) * (bound + 1)
        sieve[0] = sieve[1] = 0
        for p in range(2, int(bound ** 0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        found = [i for i in range(2, bound + 1) if sieve[i]]
        if len(found) >= count:
            _primes[:] = found
            return
        bound *= 2


def nth_prime(i):
    """The i-th prime, with nth_prime(1) = 2."""
    if i < 1:
        raise DomainError("nth_prime requires i >= 1")
    if i > len(_primes):
        _extend_primes(i)
    return _primes[i - 1]


def format_rational(q):
    """Serialize a Fraction as "num/den", or "num" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s):
    """Parse "num/den" or "num" into a Fraction."""
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {s!r}") from exc


def rational_to_decimal(q, digits=12):
    """Round a Fraction to a fixed-point decimal string with `digits` places."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q * 10 ** digits
    units = scaled.numerator // scaled.denominator
    # round half up on the truncated tail
    if 2 * (scaled.numerator % scaled.denominator) >= scaled.denominator:
        units += 1
    whole, frac = divmod(units, 10 ** digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
