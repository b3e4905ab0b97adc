"""Partition statistics: p(n), ranks, cranks, residue counts, deviations.

Counting runs along two independent routes.  The combinatorial route
enumerates partitions and reads each statistic off the parts; it is the
brute-force oracle.  The generating-function route expands

    sum_n q^(n^2) / ((zq;q)_n (z^-1 q;q)_n)          (ranks)
    prod_n (1-q^n) / ((1-z q^n)(1-z^-1 q^n))         (cranks)

with z living in Z[z]/(z^M - 1), so the residue-class counts N(a,M;n)
and C(a,M;n) fall out of the z^a component of each q-coefficient.

Conventions (generating-function convention throughout):
  * n=0: the empty partition counts with statistic 0 in both series.
  * n=1 cranks: the product yields z + z^-1 - 1, not the single
    combinatorial value crank((1)) = -1.  The oracle comparison skips
    n=1 for cranks; everything downstream uses the product convention,
    because every identity in scope is a statement about these series.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from .rings import CyclicLaurent, cyclic_ring, INTEGER, RATIONAL
from .series import Series

DEFAULT_ENUMERATION_CAP = 45

_STATS = ("rank", "crank")


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive parts."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        self._require_nonempty()
        return self.parts[0]

    @property
    def num_ones(self) -> int:
        return sum(1 for p in self.parts if p == 1)

    def _require_nonempty(self):
        if not self.parts:
            raise ValueError("statistic undefined for the empty partition")

    def rank(self) -> int:
        """Largest part minus number of parts."""
        self._require_nonempty()
        return self.parts[0] - len(self.parts)

    def crank(self) -> int:
        """Largest part if there are no ones; otherwise mu - nu, where nu
        counts the ones and mu counts the parts larger than nu."""
        self._require_nonempty()
        nu = self.num_ones
        if nu == 0:
            return self.parts[0]
        mu = sum(1 for p in self.parts if p > nu)
        return mu - nu

    def statistic(self, stat: str) -> int:
        if stat == "rank":
            return self.rank()
        if stat == "crank":
            return self.crank()
        raise ValueError(f"unknown statistic {stat!r}")


def _descending(n: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _descending(n - k, k):
            yield (k,) + rest


def enumerate_partitions(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> List[Partition]:
    """All partitions of n, largest-first lexicographic, each exactly once.

    n above the cap raises: enumeration is the exponential oracle and the
    cap keeps accidental blowups out of the main verification path.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ValueError(f"enumeration of n={n} exceeds the cap {cap}")
    return [Partition(parts) for parts in _descending(n, n if n else 1)]


_pn_cache: List[int] = [1]
_pn_lock = threading.Lock()


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _pn_lock:
        while len(_pn_cache) <= n:
            m = len(_pn_cache)
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                g2 = k * (3 * k + 1) // 2
                if g1 > m and g2 > m:
                    break
                term = 0
                if g1 <= m:
                    term += _pn_cache[m - g1]
                if g2 <= m:
                    term += _pn_cache[m - g2]
                total += term if k % 2 else -term
                k += 1
            _pn_cache.append(total)
        return _pn_cache[n]


def partition_series(prec: int) -> Series:
    """The generating function sum p(n) q^n as an integer series."""
    return Series.from_coeffs(
        INTEGER, 0, [partition_count(n) for n in range(max(prec, 0))], max(prec, 0)
    )


# -- generating-function counts ------------------------------------------------


def _rank_counts(M: int, prec: int) -> List[CyclicLaurent]:
    one = CyclicLaurent.one(M)
    zero = CyclicLaurent.zero(M)
    acc = [zero] * prec
    if prec > 0:
        acc[0] = one
    term = [zero] * prec
    if prec > 0:
        term[0] = one
    n = 1
    while n * n < prec:
        # term <- term * q^(2n-1) / ((1 - z q^n)(1 - z^-1 q^n))
        shift = 2 * n - 1
        term = [zero] * shift + term[: prec - shift]
        for rot in (1, -1):
            for k in range(n, prec):
                prev = term[k - n]
                if prev:
                    term[k] = term[k] + prev.rotate(rot)
        for k in range(n * n, prec):
            if term[k]:
                acc[k] = acc[k] + term[k]
        n += 1
    return acc


def _crank_counts(M: int, prec: int) -> List[CyclicLaurent]:
    one = CyclicLaurent.one(M)
    zero = CyclicLaurent.zero(M)
    acc = [zero] * prec
    if prec > 0:
        acc[0] = one
    for n in range(1, prec):
        for k in range(prec - 1, n - 1, -1):
            prev = acc[k - n]
            if prev:
                acc[k] = acc[k] - prev
        for rot in (1, -1):
            for k in range(n, prec):
                prev = acc[k - n]
                if prev:
                    acc[k] = acc[k] + prev.rotate(rot)
    return acc


_count_cache: dict = {}
_count_lock = threading.Lock()


def count_series(stat: str, M: int, prec: int) -> Series:
    """Series over Z[z]/(z^M-1) whose q^n coefficient holds the residue
    counts of the statistic: index a is N(a,M;n) resp. C(a,M;n).

    Cached per (stat, M); a larger request recomputes and replaces the
    cache entry, smaller requests are served by truncation.
    """
    if stat not in _STATS:
        raise ValueError(f"unknown statistic {stat!r}")
    if M < 1:
        raise ValueError("modulus must be >= 1")
    key = (stat, M)
    with _count_lock:
        cached = _count_cache.get(key)
        if cached is not None and cached.prec >= prec:
            return cached.truncate(prec)
        # grow geometrically so ascending one-at-a-time reads stay amortized
        target = prec if cached is None else max(prec, 2 * cached.prec)
        counts = _rank_counts(M, target) if stat == "rank" else _crank_counts(M, target)
        series = Series(cyclic_ring(M), 0, counts, target)
        _count_cache[key] = series
        return series.truncate(prec)


def rank_count_series(M: int, prec: int) -> Series:
    return count_series("rank", M, prec)


def crank_count_series(M: int, prec: int) -> Series:
    return count_series("crank", M, prec)


def residue_count(stat: str, a: int, M: int, n: int) -> int:
    """N(a,M;n) or C(a,M;n) in the generating-function convention."""
    if not 0 <= a < M:
        raise ValueError(f"residue {a} out of range for modulus {M}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return count_series(stat, M, n + 1).coeff(n).counts[a]


def residue_series(stat: str, a: int, M: int, prec: int) -> Series:
    """Integer series sum_n N(a,M;n) q^n (resp. cranks)."""
    if not 0 <= a < M:
        raise ValueError(f"residue {a} out of range for modulus {M}")
    counts = count_series(stat, M, prec)
    return Series.from_coeffs(
        INTEGER, 0, [c.counts[a] for c in counts.coeffs], prec
    )


def deviation_series(stat: str, a: int, M: int, prec: int) -> Series:
    """The deviation sum_n (N(a,M;n) - p(n)/M) q^n over the rationals.

    The n=0 coefficient is [a=0] - 1/M: the empty partition carries
    statistic 0 in the generating-function convention.
    """
    if not 0 <= a < M:
        raise ValueError(f"residue {a} out of range for modulus {M}")
    counts = count_series(stat, M, prec)
    coeffs = [
        Fraction(c.counts[a]) - Fraction(partition_count(n), M)
        for n, c in enumerate(counts.coeffs)
    ]
    return Series.from_coeffs(RATIONAL, 0, coeffs, prec)


def oracle_residue_counts(stat: str, M: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> List[int]:
    """Residue counts by exhaustive enumeration (the independent oracle)."""
    out = [0] * M
    for p in enumerate_partitions(n, cap):
        if p.parts:
            out[p.statistic(stat) % M] += 1
        else:
            out[0] += 1
    return out
