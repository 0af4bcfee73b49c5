"""Independent oracles used by the tests.

Everything here is computed by a route disjoint from the library code:
integer square roots, the quadratic formula, and a floating-point
companion-matrix root finder.  Exact enclosures keep comparisons against
the library's certified intervals free of rounding judgement calls.
"""

from __future__ import annotations

import math
from fractions import Fraction


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def sqrt_enclosure(m: int, scale_bits: int = 80) -> tuple[Fraction, Fraction]:
    """Exact rational enclosure lo <= sqrt(m) <= hi of width 2^-scale_bits-ish."""
    if m < 0:
        raise ValueError("negative radicand")
    shifted = m << (2 * scale_bits)
    root = math.isqrt(shifted)
    lo = Fraction(root, 1 << scale_bits)
    hi = Fraction(root + 1, 1 << scale_bits)
    return lo, hi


def cmp_fraction_vs_sqrt(r: Fraction, m: int) -> int:
    """Exact sign of ``r - sqrt(m)`` for m >= 0."""
    if r < 0:
        return -1 if m > 0 else (0 if r == 0 else -1)
    d = r * r - m
    return (d > 0) - (d < 0)


def quad_max_root_float(c2: float, c1: float, c0: float) -> float:
    """Largest real root of c2 x^2 + c1 x + c0; requires a nonnegative discriminant."""
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc < 0:
        raise ValueError("complex roots")
    return (-c1 + math.sqrt(disc)) / (2.0 * c2)


def surface_zeta_oracle(l2: int, lm: int, m2: int):
    """Maximal root of the surface profile polynomial, decided exactly.

    The polynomial is ``l2 u^2 - 2 lm u + m2`` up to the common factor 2;
    its maximal root is ``(lm + sqrt(lm^2 - l2 m2)) / l2``.  Returns a triple
    ``(kind, value, positive)`` with kind one of:

    * ``"rational"``   -- discriminant a perfect square; value is a Fraction;
    * ``"irrational"`` -- otherwise; value is a float approximation.

    ``positive`` is the exact sign verdict for the maximal root (irrational
    roots are never zero; ``lm + sqrt(disc) > 0`` iff ``lm >= 0 or m2 < 0``).
    """
    disc = lm * lm - l2 * m2
    if disc < 0:
        raise ValueError("index inequality violated; roots are complex")
    if is_perfect_square(disc):
        value = Fraction(lm + math.isqrt(disc), l2)
        return "rational", value, value > 0
    return "irrational", (lm + math.sqrt(disc)) / l2, lm >= 0 or m2 < 0


def cmp_fraction_vs_surd(r: Fraction, a: Fraction, b: Fraction, m: int) -> int:
    """Exact sign of ``r - (a + b sqrt(m))`` for m >= 0."""
    t = Fraction(r) - Fraction(a)
    b = Fraction(b)
    if b == 0:
        return (t > 0) - (t < 0)
    d = t * t - b * b * m
    if b > 0:
        if t <= 0:
            return -1
        return (d > 0) - (d < 0)
    if t >= 0:
        return 1
    return -1 if d > 0 else (1 if d < 0 else 0)


def in_interval_surd(lo: Fraction, hi: Fraction, a: Fraction, b: Fraction, m: int) -> bool:
    """Exact check that ``a + b sqrt(m)`` lies in the half-open interval ``(lo, hi]``."""
    return cmp_fraction_vs_surd(lo, a, b, m) < 0 and cmp_fraction_vs_surd(hi, a, b, m) >= 0
