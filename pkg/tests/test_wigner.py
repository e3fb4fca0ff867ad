"""Coupling coefficients against two independent oracles.

The squared-coefficient oracle below evaluates |CG|^2 with its sign from
the classic summation formula over plain Fractions, independently of the
package's surd pipeline, and the quadrature grid gives a second opinion on
the triple-product coefficients.
"""

import itertools
from fractions import Fraction
from math import factorial

import pytest

from gkmalg.scalars import SURD_ZERO, SurdScalar
from gkmalg.wigner import (
    SpinTriple,
    cache_size,
    clear_cache,
    clebsch_gordan,
    gaunt_normalized,
    wigner3j,
)


def _cg_squared_oracle(tj1, tm1, tj2, tm2, tj3, tm3):
    """(sign, CG^2) as exact Fractions; classic CG summation formula."""
    if tm1 + tm2 != tm3 or (tj1 + tj2 + tj3) % 2:
        return 0, Fraction(0)
    if not abs(tj1 - tj2) <= tj3 <= tj1 + tj2:
        return 0, Fraction(0)
    kmin = max(0, -(tj3 - tj2 + tm1) // 2, -(tj3 - tj1 - tm2) // 2)
    kmax = min((tj1 + tj2 - tj3) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    if kmax < kmin:
        return 0, Fraction(0)
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
        total += Fraction((-1) ** k, den)
    if not total:
        return 0, Fraction(0)
    norm = Fraction(
        (tj3 + 1)
        * factorial((tj1 + tj2 - tj3) // 2)
        * factorial((tj1 - tj2 + tj3) // 2)
        * factorial((-tj1 + tj2 + tj3) // 2),
        factorial((tj1 + tj2 + tj3) // 2 + 1),
    )
    for tj, tm in ((tj1, tm1), (tj2, tm2), (tj3, tm3)):
        norm *= factorial((tj + tm) // 2) * factorial((tj - tm) // 2)
    sign = 1 if total > 0 else -1
    return sign, total * total * norm


def _surd_squared(value: SurdScalar):
    sq = value * value
    assert sq.is_rational
    return sq.as_fraction()


def _all_labels(max_tj):
    for tj1 in range(max_tj + 1):
        for tj2 in range(max_tj + 1):
            for tj3 in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2):
                for tm1 in range(-tj1, tj1 + 1, 2):
                    for tm2 in range(-tj2, tj2 + 1, 2):
                        tm3 = tm1 + tm2
                        if abs(tm3) <= tj3:
                            yield tj1, tm1, tj2, tm2, tj3, tm3


def test_cg_matches_independent_squared_oracle():
    checked = 0
    for tj1, tm1, tj2, tm2, tj3, tm3 in _all_labels(5):
        value = clebsch_gordan(SpinTriple(tj1, tj2, tj3, tm1, tm2, tm3))
        sign, squared = _cg_squared_oracle(tj1, tm1, tj2, tm2, tj3, tm3)
        assert _surd_squared(value) == squared, (tj1, tm1, tj2, tm2, tj3, tm3)
        if squared:
            got_sign = 1 if float(value) > 0 else -1
            assert got_sign == sign, (tj1, tm1, tj2, tm2, tj3, tm3)
        checked += 1
    assert checked > 500


def test_spot_values():
    assert wigner3j(SpinTriple(2, 2, 0, 0, 0, 0)) == SurdScalar.sqrt(3, Fraction(-1, 3))
    assert wigner3j(SpinTriple(2, 2, 2, 0, 0, 0)).is_zero
    assert wigner3j(SpinTriple(2, 4, 8, 0, 0, 0)).is_zero
    # coupling to the trivial representation is trivial
    for tj, tm in ((4, 2), (3, -1), (0, 0)):
        assert clebsch_gordan(SpinTriple(tj, 0, tj, tm, 0, tm)) == SurdScalar.rational(1)
    assert clebsch_gordan(SpinTriple(1, 1, 2, 1, -1, 0)) == SurdScalar.sqrt(2, Fraction(1, 2))
    # selection rule m1 + m2 != m3
    assert clebsch_gordan(SpinTriple(2, 2, 2, 2, 0, 0)).is_zero


def test_malformed_labels_rejected():
    with pytest.raises(ValueError):
        SpinTriple(2, 2, 2, 4, 0, 0)  # |m| > j
    with pytest.raises(ValueError):
        SpinTriple(2, 2, 2, 1, 0, 0)  # parity mismatch
    with pytest.raises(ValueError):
        SpinTriple(-2, 2, 2, 0, 0, 0)
    with pytest.raises(ValueError):
        SpinTriple.of(1, 1, 1, Fraction(1, 3), 0, 0)


def test_3j_orthogonality_exact():
    # sum_{m1,m2} (2j3+1) 3j(m1,m2,m3) 3j(m1,m2,m3') = delta_{j3 j3'} delta_{m3 m3'}
    tj1, tj2 = 3, 4
    for tj3 in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2):
        for tj3p in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2):
            for tm3 in range(-tj3, tj3 + 1, 2):
                for tm3p in range(-tj3p, tj3p + 1, 2):
                    acc = SURD_ZERO
                    for tm1 in range(-tj1, tj1 + 1, 2):
                        tm2 = -tm3 - tm1
                        if abs(tm2) > tj2:
                            continue
                        left = wigner3j(SpinTriple(tj1, tj2, tj3, tm1, tm2, tm3))
                        right = wigner3j(SpinTriple(tj1, tj2, tj3p, tm1, tm2, tm3p))
                        acc = acc + left * right * (tj3 + 1)
                    expected = 1 if (tj3 == tj3p and tm3 == tm3p) else 0
                    assert acc == SurdScalar.rational(expected)


def test_column_permutation_symmetry():
    for tj1, tm1, tj2, tm2, tj3, tm3 in _all_labels(4):
        base = wigner3j(SpinTriple(tj1, tj2, tj3, tm1, tm2, tm3))
        jsum = (tj1 + tj2 + tj3) // 2
        sign = -1 if jsum % 2 else 1
        cyclic = wigner3j(SpinTriple(tj2, tj3, tj1, tm2, tm3, tm1))
        swapped = wigner3j(SpinTriple(tj2, tj1, tj3, tm2, tm1, tm3))
        negated = wigner3j(SpinTriple(tj1, tj2, tj3, -tm1, -tm2, -tm3))
        assert cyclic == base
        assert swapped == (base if sign == 1 else -base)
        assert negated == (base if sign == 1 else -base)


def test_gaunt_examples_and_symmetry():
    assert gaunt_normalized(1, 0, 1, 0, 2, 0) == SurdScalar.sqrt(5, Fraction(2, 5))
    for l, m in ((0, 0), (2, 1), (3, -2)):
        assert gaunt_normalized(0, 0, l, m, l, m) == SurdScalar.rational(1)
    assert gaunt_normalized(1, 0, 1, 0, 3, 0).is_zero  # parity
    for l1, l2, l3 in itertools.product(range(4), range(4), range(4)):
        for m1 in range(-l1, l1 + 1):
            for m2 in range(-l2, l2 + 1):
                m3 = m1 + m2
                if abs(m3) > l3:
                    continue
                assert gaunt_normalized(l1, m1, l2, m2, l3, m3) == gaunt_normalized(
                    l2, m2, l1, m1, l3, m3
                )


def test_gaunt_rejects_bad_labels():
    with pytest.raises(ValueError):
        gaunt_normalized(1, 2, 1, 0, 2, 0)
    with pytest.raises(ValueError):
        gaunt_normalized(-1, 0, 1, 0, 2, 0)


def test_cache_determinism():
    clear_cache()
    first = wigner3j(SpinTriple(6, 6, 4, 2, -4, 2))
    size_after_first = cache_size()
    again = wigner3j(SpinTriple(6, 6, 4, 2, -4, 2))
    permuted = wigner3j(SpinTriple(6, 4, 6, 2, 2, -4))
    assert first == again
    assert cache_size() == size_after_first  # symmetry variants reuse the entry
    assert permuted == first  # even permutation
