"""Partitions in frequency notation, their statistics, and enumeration/counting.

A partition is stored as the tuple of multiplicities (m_1, ..., m_k) with all
trailing zeros trimmed, so equality of partitions is tuple equality.
Multiplicities are plain Python ints and therefore arbitrary precision: the
density construction doubles them every step and derived partitions scale
them by factorial ratios.
"""

from dataclasses import dataclass

from .errors import DomainError
from .exact import nth_prime


class Partition:
    """An integer partition ⟨1^m1, 2^m2, ..., k^mk⟩ in frequency notation."""

    __slots__ = ("_mults",)

    def __init__(self, multiplicities=()):
        mults = list(multiplicities)
        while mults and mults[-1] == 0:
            mults.pop()
        for m in mults:
            if m < 0:
                raise DomainError("multiplicities must be nonnegative")
        self._mults = tuple(mults)

    @classmethod
    def from_parts(cls, parts):
        """Build a partition from a list of parts (additive notation)."""
        mults = {}
        for p in parts:
            if p < 1:
                raise DomainError(f"parts must be positive integers, got {p}")
            mults[p] = mults.get(p, 0) + 1
        if not mults:
            return cls()
        k = max(mults)
        return cls(mults.get(i, 0) for i in range(1, k + 1))

    @property
    def multiplicities(self):
        return self._mults

    @property
    def largest_part(self):
        """The largest part k (0 for the empty partition)."""
        return len(self._mults)

    @property
    def is_empty(self):
        return not self._mults

    def multiplicity(self, i):
        """Multiplicity of part i (0 beyond the largest part)."""
        if i < 1:
            raise DomainError("part sizes start at 1")
        if i > len(self._mults):
            return 0
        return self._mults[i - 1]

    @property
    def length(self):
        """Number of parts ℓ = Σ m_i."""
        return sum(self._mults)

    @property
    def size(self):
        """Sum of all parts |λ| = Σ i·m_i."""
        return sum(i * m for i, m in enumerate(self._mults, start=1))

    def norm(self):
        """Product of the parts, Π i^{m_i} (1 for the empty partition)."""
        result = 1
        for i, m in enumerate(self._mults, start=1):
            result *= i ** m
        return result

    def supernorm(self):
        """Π p_i^{m_i} over the i-th primes; injective on partitions."""
        result = 1
        for i, m in enumerate(self._mults, start=1):
            result *= nth_prime(i) ** m
        return result

    def moment(self, k):
        """The k-th moment Σ i^k·m_i; moment(0) = length, moment(1) = size."""
        if k < 0:
            raise DomainError("moment order must be nonnegative")
        return sum(i ** k * m for i, m in enumerate(self._mults, start=1))

    def oplus(self, other):
        """Combine two partitions by adding multiplicities componentwise."""
        a, b = self._mults, other._mults
        if len(a) < len(b):
            a, b = b, a
        return Partition(
            [a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))]
        )

    __add__ = oplus

    def parts(self):
        """Expand to the descending part list.  Only sensible for small
        multiplicities; the density construction never calls this."""
        out = []
        for i in range(len(self._mults), 0, -1):
            out.extend([i] * self._mults[i - 1])
        return out

    def support_size(self):
        """Number of distinct part sizes with nonzero multiplicity."""
        return sum(1 for m in self._mults if m > 0)

    def to_json(self):
        return {"multiplicities": [str(m) for m in self._mults]}

    @classmethod
    def from_json(cls, doc):
        """Accept {"multiplicities": [...]} or {"parts": [...]} with
        big integers as decimal strings or numbers."""
        if "multiplicities" in doc:
            return cls(int(m) for m in doc["multiplicities"])
        if "parts" in doc:
            return cls.from_parts([int(p) for p in doc["parts"]])
        raise DomainError("partition JSON needs 'multiplicities' or 'parts'")

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._mults == other._mults

    def __hash__(self):
        return hash(self._mults)

    def __repr__(self):
        if not self._mults:
            return "Partition(⟨⟩)"
        inner = ",".join(
            f"{i}^{m}" for i, m in enumerate(self._mults, start=1) if m > 0
        )
        return f"Partition(⟨{inner}⟩)"


@dataclass(frozen=True)
class PartitionStats:
    length: int
    size: int
    largest_part: int


def stats(partition):
    """Length, size, and largest part of a partition."""
    return PartitionStats(partition.length, partition.size, partition.largest_part)


def _gen_parts(n, max_part):
    # Descending-lexicographic part lists, any length.
    if n == 0:
        yield []
        return
    for first in range(min(max_part, n), 0, -1):
        for rest in _gen_parts(n - first, first):
            yield [first] + rest


def _gen_parts_len(n, max_part, length):
    # Descending-lexicographic part lists with exactly `length` parts.
    if length == 0:
        if n == 0:
            yield []
        return
    if n < length:
        return
    lo = -(-n // length)  # smallest feasible first part: ceil(n / length)
    for first in range(min(max_part, n - length + 1), lo - 1, -1):
        for rest in _gen_parts_len(n - first, first, length - 1):
            yield [first] + rest


def iter_partitions(n, length=None):
    """Yield all partitions of n (with exactly `length` parts when given),
    each exactly once, in descending-lexicographic order of part lists."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if length is None:
        gen = _gen_parts(n, n if n else 0)
    else:
        if length < 1:
            raise DomainError("length must be positive")
        gen = _gen_parts_len(n, n, length)
    for parts in gen:
        yield Partition.from_parts(parts)


class CountTable:
    """Memoized table of p(n, ℓ) via p(n, ℓ) = p(n−1, ℓ−1) + p(n−ℓ, ℓ).

    The table is filled iteratively up to a requested bound; precompute with
    ``ensure`` before sharing across threads.
    """

    def __init__(self):
        self._rows = [[1]]  # _rows[n][l] = p(n, l) for 0 <= l <= n

    def ensure(self, n_max):
        while len(self._rows) <= n_max:
            n = len(self._rows)
            row = [0] * (n + 1)
            for l in range(1, n + 1):
                row[l] = self._rows[n - 1][l - 1]
                if l <= n - l:
                    row[l] += self._rows[n - l][l]
            self._rows.append(row)

    def count(self, n, length=None):
        """p(n) or p(n, length)."""
        if n < 0:
            return 0
        self.ensure(n)
        if length is None:
            return sum(self._rows[n])
        if length < 0 or length > n:
            return 1 if (n == 0 and length == 0) else 0
        return self._rows[n][length]


_shared_table = CountTable()


def count_partitions(n, length=None):
    """p(n), or p(n, ℓ) when `length` is given, from the shared memo table."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return _shared_table.count(n, length)


def count_fixed_length(n, length):
    """p(n, ℓ) for a single ℓ without the full triangle: O(n·ℓ) time and
    O(n) memory.  Used for large-n diagnostics where ℓ is tiny."""
    if n < 0 or length < 0:
        raise DomainError("arguments must be nonnegative")
    if length == 0:
        return 1 if n == 0 else 0
    prev = [1] + [0] * n  # p(m, 0)
    for l in range(1, length + 1):
        cur = [0] * (n + 1)
        for m in range(l, n + 1):
            cur[m] = prev[m - 1] + (cur[m - l] if m - l >= 0 else 0)
        prev = cur
    return prev[n]
