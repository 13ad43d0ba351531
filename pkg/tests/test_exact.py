"""Certified integer-only comparisons against quadratic irrationals."""

import math
from fractions import Fraction

import pytest

from fibwalk.exact import (below_alpha2, cmp_ratio_alpha2,
                           exceeds_alpha_squared, min_ceil_multiple,
                           sign_sqrt_sum, sqrt_bounds, theorem_margin_sign)

ALPHA2 = (3 + math.sqrt(5)) / 2


def test_sqrt_bounds_bracket():
    for r in [0, 1, 2, 3, 5, 10, 99, 10 ** 12 + 7]:
        for bits in [1, 8, 32]:
            lo, hi = sqrt_bounds(r, bits)
            assert hi - lo <= 1
            assert lo * lo <= r << (2 * bits) <= hi * hi
    with pytest.raises(ValueError):
        sqrt_bounds(-1, 8)


def test_sqrt_bounds_exact_squares():
    lo, hi = sqrt_bounds(49, 16)
    assert lo == hi == 7 << 16


def test_sign_sqrt_sum_basic():
    assert sign_sqrt_sum([(1, 2), (-1, 3)]) == -1
    assert sign_sqrt_sum([(3, 2), (-2, 3)]) == 1
    assert sign_sqrt_sum([(2, 9), (-3, 4)]) == 0
    assert sign_sqrt_sum([(5, 0), (0, 7)]) == 0
    # close call: 7*sqrt(2) vs sqrt(98) = 7*sqrt(2) exactly, perturbed
    assert sign_sqrt_sum([(7, 2), (-1, 98), (1, 1)]) == 1
    assert sign_sqrt_sum([(7, 2), (-1, 98), (-1, 1)]) == -1


def test_sign_sqrt_sum_irrational_zero_raises():
    # an exact zero with irrational parts never separates; the cap trips
    with pytest.raises(ArithmeticError):
        sign_sqrt_sum([(1, 2), (-1, 2)], max_bits=256)
    with pytest.raises(ArithmeticError):
        sign_sqrt_sum([(1, 8), (-2, 2)], max_bits=256)


def test_sign_sqrt_sum_cancels_perfect_squares():
    # rational parts that cancel exactly are recognized as zero
    assert sign_sqrt_sum([(1, 4), (-2, 1)]) == 0


def test_cmp_ratio_alpha2_brackets_the_constant():
    for y in range(1, 400):
        for x in range(1, 4 * y):
            want = 1 if x / y > ALPHA2 else -1
            # floats are safe as an oracle here: x/y never equals alpha^2
            assert cmp_ratio_alpha2(x, y) == want
    assert exceeds_alpha_squared(21, 8)  # 2.625 > 2.618
    assert not exceeds_alpha_squared(13, 5)  # 2.6 < 2.618
    assert below_alpha2(13, 5)
    assert not below_alpha2(21, 8)
    with pytest.raises(ValueError):
        cmp_ratio_alpha2(1, 0)


def test_convergents_straddle_alpha2():
    # F_{n+2} - alpha^2 F_n = beta^n: below for odd n, above for even n
    from fibwalk.numeration import fib
    for n in range(2, 60):
        side = cmp_ratio_alpha2(fib(n + 2), fib(n))
        assert side == (1 if n % 2 == 0 else -1)


def test_theorem_margin_sign_examples():
    # e(1) = 1 >= alpha^2 - 3: margin positive
    assert theorem_margin_sign(1, 1, 1) == 1
    # 3/2 - alpha^2 + 3/sqrt(3) > 0
    assert theorem_margin_sign(3, 2, 3) == 1
    # 1 - alpha^2 + 3/sqrt(400) = 1 - 2.618 + 0.15 < 0
    assert theorem_margin_sign(1, 1, 400) == -1
    with pytest.raises(ValueError):
        theorem_margin_sign(1, 0, 1)
    with pytest.raises(ValueError):
        theorem_margin_sign(1, 1, 0)


def test_theorem_margin_sign_matches_floats_when_far():
    for n in [1, 2, 3, 5, 10, 49, 100, 500]:
        for x, y in [(1, 1), (3, 2), (7, 3), (12, 5), (8, 3)]:
            margin = x / y - ALPHA2 + 3 / math.sqrt(n)
            if abs(margin) > 1e-9:
                assert theorem_margin_sign(x, y, n) == (
                    1 if margin > 0 else -1)


def test_min_ceil_multiple_is_ceiling():
    # against Fraction-based ceiling for perfect-square radicands
    for a, b, r, c in [(1, 1, 4, 2), (0, 1, 9, 1), (3, 2, 1, 5)]:
        val = Fraction(a + b * math.isqrt(r), c)
        for p in range(1, 50):
            assert min_ceil_multiple(a, b, r, c, p) == math.ceil(val * p)


def test_min_ceil_multiple_alpha_powers():
    # ceil(alpha^2 * p) with alpha^2 = (3 + sqrt5)/2
    for p in range(1, 2000):
        got = min_ceil_multiple(3, 1, 5, 2, p)
        want = math.floor(ALPHA2 * p) + 1  # never integral, so ceil = floor+1
        assert got == want
    with pytest.raises(ValueError):
        min_ceil_multiple(1, 1, 5, 0, 1)
    with pytest.raises(ValueError):
        min_ceil_multiple(1, -1, 5, 1, 1)
