"""Certificate construction for a/n = 1/x + 1/y + 1/z.

Subtracting 1/x and clearing denominators turns the target equation into
yz*(ax - n) = nx*(y + z), so for any t >= 1 one may impose

    y + z = (ax - n) * t,      y * z = n * x * t,

making y and z the roots of V^2 - ((ax-n)t)V + nxt = 0. Every route below
is a different way of forcing that quadratic to have positive integer
roots:

* trivial       -- (a-2) | n gives x = n/(a-2), y = z = n outright.
* formula-1     -- if ax-n-1 and ax-n+1 both divide 2nx, then
                   {y, z} = {2nx/(ax-n+1), 2nx/(ax-n-1)} works.
* formula-2     -- if t^2 (ax-n)^2 - 2ntx is a perfect square q^2, then
                   y = t(ax-n) - q, z = t(ax-n) + q works.
* vieta         -- solve the quadratic directly for a given (x, t).

Certificates re-check the defining equation with exact rationals at
construction time, so nothing that leaves this module can be wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exactmath import isqrt, perfect_square_root, unit_fraction_sum

__all__ = [
    "Route",
    "Instance",
    "Triple",
    "Certificate",
    "Verdict",
    "BoundInterval",
    "verify_decomposition",
    "trivial_decompose",
    "formula_one_at",
    "formula_two_at",
    "q_poly",
    "vieta_solve",
    "explore_t_param",
    "delta_positive_bounds",
]


class Route(str, Enum):
    """How a certificate was obtained."""

    TRIVIAL = "trivial"
    FORMULA_ONE = "formula-1"
    FORMULA_TWO = "formula-2"
    VIETA = "vieta"


@dataclass(frozen=True)
class Instance:
    """The target fraction a/n. a = 4 is the classical case; a = 2, 3 are
    accepted but lie outside the conjecture regime."""

    a: int
    n: int

    def __post_init__(self) -> None:
        if self.a < 2:
            raise ValueError(f"numerator a must be >= 2, got {self.a}")
        if self.n < 2:
            raise ValueError(f"denominator n must be >= 2, got {self.n}")

    @property
    def target(self) -> Fraction:
        return Fraction(self.a, self.n)

    @property
    def in_conjecture_regime(self) -> bool:
        return self.a >= 4


@dataclass(frozen=True)
class Triple:
    """Denominators (x, y, z), all >= 1. Stored with y <= z; x stays first
    because it is the pivot the search varies."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if self.x < 1 or self.y < 1 or self.z < 1:
            raise ValueError(f"triple components must be >= 1, got {self}")
        if self.y > self.z:
            y, z = self.y, self.z
            object.__setattr__(self, "y", z)
            object.__setattr__(self, "z", y)

    def sum(self) -> Fraction:
        return unit_fraction_sum(self.x, self.y, self.z)


@dataclass(frozen=True)
class Certificate:
    """A proved decomposition: the triple plus the route and its witnesses.

    witness_t is the parameter of the quadratic (formula-2 and vieta),
    witness_q the square root of formula-2's polynomial value, witness_k
    formula-1's ratio 2nx / ((ax-n-1)(ax-n+1)), which the worked tables
    show need not be an integer.
    """

    instance: Instance
    triple: Triple
    route: Route
    witness_t: int | None = None
    witness_q: int | None = None
    witness_k: Fraction | None = None

    def __post_init__(self) -> None:
        if self.triple.sum() != self.instance.target:
            raise ValueError(
                f"bogus certificate: 1/{self.triple.x} + 1/{self.triple.y} "
                f"+ 1/{self.triple.z} != {self.instance.a}/{self.instance.n}"
            )


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exact verification, with both sides reduced."""

    holds: bool
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class BoundInterval:
    """Rational cut points bracketing the x-region where the formula-2
    polynomial is <= 0 (the region scans may skip)."""

    left_cut: Fraction
    right_cut: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.left_cut <= self.right_cut:
            raise ValueError(f"need 0 < left_cut <= right_cut, got {self}")


def verify_decomposition(inst: Instance, triple: Triple) -> Verdict:
    """Check a/n == 1/x + 1/y + 1/z by exact rational comparison."""
    lhs = inst.target
    rhs = triple.sum()
    return Verdict(holds=lhs == rhs, lhs=lhs, rhs=rhs)


def trivial_decompose(inst: Instance) -> Certificate | None:
    """x = n/(a-2), y = z = n whenever (a-2) divides n; None otherwise.

    a = 2 makes the divisor zero, so it never has a trivial split.
    """
    d = inst.a - 2
    if d < 1 or inst.n % d != 0:
        return None
    return Certificate(
        instance=inst,
        triple=Triple(inst.n // d, inst.n, inst.n),
        route=Route.TRIVIAL,
    )


def formula_one_at(inst: Instance, x: int) -> Certificate | None:
    """Divisibility certificate at a fixed x.

    With D = ax - n, requires D >= 2 and both D-1 and D+1 dividing 2nx;
    then {y, z} = {2nx/(D+1), 2nx/(D-1)}. The two divisibilities alone
    already make the identity exact, so k = 2nx/((D-1)(D+1)) is kept as a
    rational witness rather than required integral.
    """
    if x < 1:
        return None
    d = inst.a * x - inst.n
    if d < 2:
        return None
    num = 2 * inst.n * x
    if num % (d - 1) != 0 or num % (d + 1) != 0:
        return None
    return Certificate(
        instance=inst,
        triple=Triple(x, num // (d + 1), num // (d - 1)),
        route=Route.FORMULA_ONE,
        witness_k=Fraction(num, (d - 1) * (d + 1)),
    )


def q_poly(inst: Instance, x: int, t: int) -> int:
    """t^2 (ax - n)^2 - 2ntx, exactly; negative values are meaningful
    (scans use the sign to prune)."""
    d = inst.a * x - inst.n
    return t * t * d * d - 2 * inst.n * t * x


def formula_two_at(inst: Instance, x: int, t: int) -> Certificate | None:
    """Perfect-square certificate at a fixed (x, t).

    If q_poly(x, t) is a square q^2 and y = t(ax-n) - q stays positive,
    then (x, y, t(ax-n) + q) decomposes a/n. q = 0 is legitimate and
    yields y = z.
    """
    if x < 1 or t < 1:
        return None
    d = inst.a * x - inst.n
    if d <= 0:
        return None
    v = q_poly(inst, x, t)
    if v < 0:
        return None
    q = perfect_square_root(v)
    if q is None:
        return None
    y = t * d - q
    if y <= 0:
        return None
    return Certificate(
        instance=inst,
        triple=Triple(x, y, t * d + q),
        route=Route.FORMULA_TWO,
        witness_t=t,
        witness_q=q,
    )


def vieta_solve(s: int, p: int) -> tuple[int, int] | None:
    """Positive integer roots (y, z), y <= z, of V^2 - sV + p = 0.

    Exists iff s^2 - 4p is a perfect square of the same parity as s
    and the smaller root stays positive.
    """
    disc = s * s - 4 * p
    if disc < 0:
        return None
    r = perfect_square_root(disc)
    if r is None or (s - r) % 2 != 0:
        return None
    y = (s - r) // 2
    if y < 1:
        return None
    return y, (s + r) // 2


def explore_t_param(inst: Instance, x: int, t: int) -> Certificate | None:
    """Solve the parameterized quadratic directly: y + z = (ax-n)t,
    yz = nxt. This is the single-t system the worked small cases use;
    its hits correspond to formula-2 hits at half the t."""
    if x < 1 or t < 1:
        return None
    d = inst.a * x - inst.n
    if d <= 0:
        return None
    roots = vieta_solve(d * t, inst.n * x * t)
    if roots is None:
        return None
    return Certificate(
        instance=inst,
        triple=Triple(x, roots[0], roots[1]),
        route=Route.VIETA,
        witness_t=t,
    )


def delta_positive_bounds(inst: Instance, t: int) -> BoundInterval:
    """Rational cut points for the sign of q_poly in x.

    The real roots are n(at + 1 +- sqrt(2at + 1)) / (a^2 t). Using
    w = isqrt(n^2 (2at+1)) rounds the left cut up and the right cut down,
    and because n*(at+1) - a^2*t*x is an integer while (w, n*sqrt(2at+1))
    contains none, no integer x ever lands between a true root and its
    rounded cut. Hence for integer x:

        x < left_cut or x > right_cut  =>  q_poly(x, t) > 0
        left_cut <= x <= right_cut     =>  q_poly(x, t) <= 0

    When 2at + 1 is itself a perfect square the cuts are exact.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    a, n = inst.a, inst.n
    w = isqrt(n * n * (2 * a * t + 1))
    mid = n * (a * t + 1)
    den = a * a * t
    return BoundInterval(Fraction(mid - w, den), Fraction(mid + w, den))
