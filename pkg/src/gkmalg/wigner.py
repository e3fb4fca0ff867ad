"""Exact angular-momentum coupling coefficients.

3j symbols are evaluated with the single-sum factorial formula over big
integers: the alternating sum is an exact rational and the prefactor is the
square root of an exact rational, so every symbol is a single surd term.
Radicands built from factorials are never factorised directly; their prime
exponents come from Legendre's formula.

Labels are doubled half-integers throughout (tj = 2j, tm = 2m), the usual
trick for keeping half-integer spins in integer arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .scalars import SURD_ZERO, SurdScalar


@dataclass(frozen=True)
class SpinTriple:
    """Three (j, m) pairs as doubled integers; validated on construction."""

    tj1: int
    tj2: int
    tj3: int
    tm1: int
    tm2: int
    tm3: int

    def __post_init__(self):
        for tj, tm in self.columns():
            if not isinstance(tj, int) or not isinstance(tm, int):
                raise ValueError("spin labels must be doubled integers")
            if tj < 0:
                raise ValueError(f"negative angular momentum 2j={tj}")
            if abs(tm) > tj:
                raise ValueError(f"|m| > j in column (2j={tj}, 2m={tm})")
            if (tj - tm) % 2:
                raise ValueError(f"j and m differ by a non-integer (2j={tj}, 2m={tm})")

    def columns(self):
        return ((self.tj1, self.tm1), (self.tj2, self.tm2), (self.tj3, self.tm3))

    @classmethod
    def of(cls, j1, j2, j3, m1, m2, m3) -> "SpinTriple":
        """Build from plain (half-)integer values, e.g. Fractions."""
        doubled = []
        for x in (j1, j2, j3, m1, m2, m3):
            t = Fraction(x) * 2
            if t.denominator != 1:
                raise ValueError(f"label {x} is not an integer or half-integer")
            doubled.append(int(t))
        return cls(*doubled)


@lru_cache(maxsize=None)
def _primes_upto(n: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return tuple(i for i in range(n + 1) if sieve[i])


def _factorial_exponent(n: int, p: int) -> int:
    # Legendre's formula for the exponent of p in n!
    e, q = 0, p
    while q <= n:
        e += n // q
        q *= p
    return e


def _sqrt_factorial_ratio(numerators: list[int], denominators: list[int]) -> SurdScalar:
    """Exact sqrt of prod(n_i!) / prod(d_i!) as a single surd term."""
    top = max(numerators + denominators, default=1)
    coeff = Fraction(1)
    radicand = 1
    for p in _primes_upto(max(top, 2)):
        e = sum(_factorial_exponent(n, p) for n in numerators)
        e -= sum(_factorial_exponent(d, p) for d in denominators)
        if e:
            coeff *= Fraction(p) ** (e // 2)
            if e % 2:
                radicand *= p
    return SurdScalar._raw({radicand: coeff})


def _selection_ok(t: SpinTriple) -> bool:
    if t.tm1 + t.tm2 + t.tm3 != 0:
        return False
    if (t.tj1 + t.tj2 + t.tj3) % 2:
        return False
    return abs(t.tj1 - t.tj2) <= t.tj3 <= t.tj1 + t.tj2


def _canonical_key(t: SpinTriple) -> tuple[tuple[int, ...], int]:
    """Symmetry-reduced cache key and the phase restoring the original symbol.

    Column permutations and global m-negation change a 3j symbol by at most
    (-1)^(j1+j2+j3); sorting columns and fixing the sign of the m-vector
    collapses those 12 variants onto one representative.
    """
    cols = list(t.columns())
    jsum = (t.tj1 + t.tj2 + t.tj3) // 2
    swaps = 0
    for i in range(2):  # insertion sort, parity tracked
        for k in range(2 - i):
            if cols[k] < cols[k + 1]:
                cols[k], cols[k + 1] = cols[k + 1], cols[k]
                swaps += 1
    flips = swaps
    ms = [tm for _, tm in cols]
    first = next((tm for tm in ms if tm), 0)
    if first < 0:
        cols = [(tj, -tm) for tj, tm in cols]
        flips += 1
    phase = -1 if (jsum % 2 and flips % 2) else 1
    key = tuple(x for col in cols for x in col)
    return key, phase


_CACHE: dict[tuple[int, ...], SurdScalar] = {}


def _racah_sum(tj1, tj2, tj3, tm1, tm2, tm3) -> SurdScalar:
    kmin = max(0, (tj2 - tj3 - tm1) // 2, (tj1 - tj3 + tm2) // 2)
    kmax = min((tj1 + tj2 - tj3) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    if kmax < kmin:
        return SURD_ZERO
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            factorial(k)
            * factorial((tj1 + tj2 - tj3) // 2 - k)
            * factorial((tj1 - tm1) // 2 - k)
            * factorial((tj2 + tm2) // 2 - k)
            * factorial((tj3 - tj2 + tm1) // 2 + k)
            * factorial((tj3 - tj1 - tm2) // 2 + k)
        )
        total += Fraction(-1 if k % 2 else 1, den)
    if not total:
        return SURD_ZERO
    nums = [
        (tj1 + tj2 - tj3) // 2,
        (tj1 - tj2 + tj3) // 2,
        (-tj1 + tj2 + tj3) // 2,
        (tj1 + tm1) // 2,
        (tj1 - tm1) // 2,
        (tj2 + tm2) // 2,
        (tj2 - tm2) // 2,
        (tj3 + tm3) // 2,
        (tj3 - tm3) // 2,
    ]
    dens = [(tj1 + tj2 + tj3) // 2 + 1]
    prefactor = _sqrt_factorial_ratio(nums, dens)
    sign = -1 if ((tj1 - tj2 - tm3) // 2) % 2 else 1
    return prefactor * (total * sign)


def wigner3j(t: SpinTriple) -> SurdScalar:
    """Exact 3j symbol; zero outside the triangle and m-selection rules.

    Results are memoised under the symmetry-reduced key, so the cache stays
    small even when product tables hammer permuted variants of one symbol.
    The cache only ever maps a key to one canonical value, hence lookups
    are race-free under concurrent use.
    """
    if not _selection_ok(t):
        return SURD_ZERO
    key, phase = _canonical_key(t)
    value = _CACHE.get(key)
    if value is None:
        value = _racah_sum(*key[0::2], *key[1::2])
        _CACHE[key] = value
    return value if phase == 1 else -value


def clebsch_gordan(t: SpinTriple) -> SurdScalar:
    """Exact <j1 m1; j2 m2 | j3 m3> via the 3j reduction."""
    base = wigner3j(SpinTriple(t.tj1, t.tj2, t.tj3, t.tm1, t.tm2, -t.tm3))
    if base.is_zero:
        return SURD_ZERO
    sign = -1 if ((t.tj1 - t.tj2 + t.tm3) // 2) % 2 else 1
    return SurdScalar.sqrt(t.tj3 + 1, sign) * base


def gaunt_normalized(l1: int, m1: int, l2: int, m2: int, l3: int, m3: int) -> SurdScalar:
    """Triple-product coefficient for unit-normalised spherical modes.

    With rho_lm = sqrt(4 pi) Y_lm on the unit-measure sphere,
    rho_{l1 m1} rho_{l2 m2} = sum_{l3 m3} c rho_{l3 m3} and this returns c.
    """
    for l, m in ((l1, m1), (l2, m2), (l3, m3)):
        if not isinstance(l, int) or not isinstance(m, int) or l < 0 or abs(m) > l:
            raise ValueError(f"bad spherical label (l={l}, m={m})")
    zero3j = wigner3j(SpinTriple(2 * l1, 2 * l2, 2 * l3, 0, 0, 0))
    if zero3j.is_zero:
        return SURD_ZERO
    m3j = wigner3j(SpinTriple(2 * l1, 2 * l2, 2 * l3, 2 * m1, 2 * m2, -2 * m3))
    if m3j.is_zero:
        return SURD_ZERO
    sign = -1 if m3 % 2 else 1
    norm = SurdScalar.sqrt((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1), sign)
    return norm * zero3j * m3j


# -- cache maintenance --------------------------------------------------------


def cache_size() -> int:
    return len(_CACHE)


def clear_cache() -> None:
    _CACHE.clear()


def save_cache(path) -> None:
    """Persist the memoised 3j table as JSON (integer-string coefficients)."""
    payload = [[list(key), value.to_records()] for key, value in _CACHE.items()]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_cache(path) -> int:
    """Merge a persisted table into the memo cache; returns entries loaded."""
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    loaded = 0
    for key, records in payload:
        _CACHE[tuple(int(x) for x in key)] = SurdScalar.from_records(records)
        loaded += 1
    return loaded
