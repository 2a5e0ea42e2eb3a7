import random
from fractions import Fraction
from math import gcd

import pytest

from trifrac.exactmath import isqrt, perfect_square_root, unit_fraction_sum


def test_isqrt_known_values():
    assert isqrt(0) == 0
    assert isqrt(145) == 12  # 144 <= 145 < 169
    assert isqrt(4479892624) == 66932


def test_isqrt_matches_incremental_search_below_1e6():
    # independent oracle: grow r one step at a time
    r = 0
    for m in range(1_000_000):
        while (r + 1) * (r + 1) <= m:
            r += 1
        assert isqrt(m) == r


def test_isqrt_bracket_at_large_magnitudes():
    rng = random.Random(20250809)
    for _ in range(500):
        m = rng.randrange(10**12, 10**30)
        r = isqrt(m)
        assert r * r <= m < (r + 1) * (r + 1)


def test_perfect_square_root_known_values():
    assert perfect_square_root(18496) == 136
    assert perfect_square_root(2) is None
    assert perfect_square_root(124746561) == 11169
    assert perfect_square_root(0) == 0
    assert perfect_square_root(-4) is None


def test_perfect_square_root_iff_isqrt_squares_back():
    rng = random.Random(7)
    for _ in range(5000):
        m = rng.randrange(0, 10**18)
        r = isqrt(m)
        expected = r if r * r == m else None
        assert perfect_square_root(m) == expected
        assert perfect_square_root(r * r) == r


def test_unit_fraction_sum_known_values():
    assert unit_fraction_sum(1, 2, 2) == Fraction(2)
    assert unit_fraction_sum(2, 3, 2) == Fraction(4, 3)
    assert unit_fraction_sum(3, 3, 3) == Fraction(1)


def test_unit_fraction_sum_rejects_nonpositive():
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-2, 3, 4)]:
        with pytest.raises(ValueError):
            unit_fraction_sum(*bad)


def test_unit_fraction_sum_symmetric_and_reduced():
    rng = random.Random(99)
    for _ in range(300):
        x, y, z = (rng.randrange(1, 5000) for _ in range(3))
        s = unit_fraction_sum(x, y, z)
        assert s == unit_fraction_sum(z, x, y) == unit_fraction_sum(y, z, x)
        assert gcd(s.numerator, s.denominator) == 1
        assert s.denominator > 0
