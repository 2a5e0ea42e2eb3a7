"""Exact integer and rational kernel.

Everything downstream (certificate construction, range scans, table
regression) funnels its arithmetic through here so that no floating
point ever touches a yes/no decision. Values routinely exceed 2**53,
where ``int(v ** 0.5)`` silently goes wrong.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["isqrt", "perfect_square_root", "unit_fraction_sum"]

# math.isqrt is exact at arbitrary magnitude; float sqrt is banned here.
isqrt = math.isqrt


def perfect_square_root(m: int) -> int | None:
    """Return r with r*r == m, or None when m is not a perfect square."""
    if m < 0:
        return None
    r = math.isqrt(m)
    return r if r * r == m else None


def unit_fraction_sum(x: int, y: int, z: int) -> Fraction:
    """1/x + 1/y + 1/z as a reduced fraction, computed exactly."""
    if x < 1 or y < 1 or z < 1:
        raise ValueError("unit-fraction denominators must be positive integers")
    # Single reduction is cheaper than three Fraction additions.
    return Fraction(y * z + x * z + x * y, x * y * z)
