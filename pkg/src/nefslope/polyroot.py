"""Exact integer-polynomial algebra and real-root certification.

Polynomials carry arbitrary-precision integer coefficients in ascending
degree order.  On top of the raw arithmetic this module provides:

* ``chi_polynomial`` -- the degree-n integer polynomial attached to an
  intersection profile, whose maximal real root is the reciprocal of the
  nef threshold;
* Sturm chains and ``sturm_count`` for exact root counting on half-open
  intervals ``(lo, hi]``, with ``lo``/``hi`` rationals or +-infinity;
* ``isolate_max_root`` / ``refine`` -- certified isolation of the largest
  real root as an :class:`AlgebraicNumber`;
* ``rational_roots`` -- complete rational-root extraction via divisor
  pairs of the constant and leading coefficients;
* ``cauchy_bound`` -- the classical radius ``1 + max |c_k / c_d|``
  enclosing every root.

Rational roots are always divided out before irrational isolation, so an
:class:`AlgebraicNumber` is rational exactly when its ``exact`` field is
set; no numeric equality test against rationals is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import InputError
from .exactio import format_int, format_rational, parse_int, parse_rational

if TYPE_CHECKING:
    from .numdata import IntersectionProfile

NEG_INF = float("-inf")
POS_INF = float("inf")

#: Interval width used for display purposes only; certificates never depend on it.
DEFAULT_WIDTH = Fraction(1, 2**64)

Endpoint = Fraction | float


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial ``c[0] + c[1] u + ... + c[d] u^d`` with ``c[d] != 0``.

    The zero polynomial is the empty coefficient tuple.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be exact integers, got {c!r}")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use IntPolynomial.of)")

    @classmethod
    def of(cls, coeffs: Iterable[int | Fraction]) -> "IntPolynomial":
        """Build from any integral coefficient sequence, stripping trailing zeros."""
        out = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integral coefficient {c}")
                c = c.numerator
            out.append(int(c))
        while out and out[-1] == 0:
            out.pop()
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.of(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def reversed_coeffs(self) -> "IntPolynomial":
        """Coefficient reversal; maps every nonzero root to its reciprocal."""
        return IntPolynomial.of(reversed(self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}u" if k == 1 else f"{head}u^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [format_int(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "IntPolynomial":
        if not isinstance(data, dict) or "coeffs" not in data:
            raise InputError("polynomial JSON must be an object with a 'coeffs' array")
        return cls.of(parse_int(c) for c in data["coeffs"])


# ---------------------------------------------------------------------------
# Raw coefficient arithmetic over the rationals (internal).

def _frac(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _strip(fs: list[Fraction]) -> list[Fraction]:
    while fs and fs[-1] == 0:
        fs.pop()
    return fs


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals; b must be nonzero."""
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        q = a[-1] / lb
        for i, c in enumerate(b):
            a[i + k] -= q * c
        a.pop()
        _strip(a)
    return a


def _quo_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Exact quotient a / b; raises if b does not divide a."""
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        q = a[-1] / lb
        out[k] = q
        for i, c in enumerate(b):
            a[i + k] -= q * c
        a.pop()
        _strip(a)
    if a:
        raise ArithmeticError("polynomial division is not exact")
    return _strip(out)


def _primitive(fs: Sequence[Fraction], positive_lead: bool = False) -> IntPolynomial:
    """Scale by a rational to integer coefficients with content 1.

    The scale factor is positive, so the sign pattern is preserved unless
    ``positive_lead`` forces a global sign flip.
    """
    fs = _strip(list(fs))
    if not fs:
        return IntPolynomial(())
    denom = 1
    for c in fs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in fs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if positive_lead and ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(tuple(ints))


def _gcd_poly(a: list[Fraction], b: list[Fraction]) -> IntPolynomial:
    """Primitive, positive-lead gcd over the rationals (Euclid)."""
    a, b = _strip(a[:]), _strip(b[:])
    while b:
        a, b = b, _rem(a, b)
    return _primitive(a, positive_lead=True)


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return _gcd_poly(_frac(p), _frac(q))


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` as a primitive integer polynomial with positive lead."""
    if p.is_zero:
        raise ValueError("zero polynomial has no square-free part")
    if p.degree == 0:
        return IntPolynomial((1,))
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return _primitive(_frac(p), positive_lead=True)
    return _primitive(_quo_exact(_frac(p), _frac(g)), positive_lead=True)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition ``[(g_i, i)]`` with the g_i square-free and coprime.

    The product of ``g_i ** i`` equals ``p`` up to a rational constant.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree <= 0:
        return []
    f, fp = _frac(p), _frac(p.derivative())
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(_primitive(f, positive_lead=True), 1)]
    gq = _frac(g)
    c = _quo_exact(f, gq)
    d = _strip([x - y for x, y in _zip_pad(_quo_exact(fp, gq), _deriv(c))])
    out: list[tuple[IntPolynomial, int]] = []
    i = 1
    while len(c) - 1 > 0:
        a = _gcd_poly(c, d) if d else _primitive(c, positive_lead=True)
        aq = _frac(a)
        c = _quo_exact(c, aq)
        d = _strip([x - y for x, y in _zip_pad(_quo_exact(d, aq) if d else [], _deriv(c))])
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def _deriv(fs: Sequence[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(fs) if k > 0]


def _zip_pad(a: Sequence[Fraction], b: Sequence[Fraction]):
    n = max(len(a), len(b))
    za = list(a) + [Fraction(0)] * (n - len(a))
    zb = list(b) + [Fraction(0)] * (n - len(b))
    return zip(za, zb)


# ---------------------------------------------------------------------------
# Sturm chains and root counting.

@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence of the square-free part of a polynomial.

    Every element is primitive; content is divided out by positive factors
    only, which leaves all sign variations intact.
    """

    polys: tuple[IntPolynomial, ...]


def sturm_chain(p: IntPolynomial) -> SturmChain:
    if p.is_zero:
        raise ValueError("cannot build a Sturm chain for the zero polynomial")
    f0 = squarefree_part(p)
    seq = [f0]
    f1 = _primitive(_frac(f0.derivative()))
    while not f1.is_zero:
        seq.append(f1)
        r = _rem(_frac(seq[-2]), _frac(seq[-1]))
        f1 = _primitive([-c for c in r])
    return SturmChain(tuple(seq))


def _sign_at(p: IntPolynomial, x: Endpoint) -> int:
    if p.is_zero:
        return 0
    if x == POS_INF:
        return _sgn(p.coeffs[-1])
    if x == NEG_INF:
        return _sgn(p.coeffs[-1]) * (-1 if p.degree % 2 else 1)
    return _sgn(p(x))


def _variations(chain: SturmChain, x: Endpoint) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain.polys) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain: SturmChain, lo: Endpoint, hi: Endpoint) -> int:
    """Number of distinct real roots in the half-open interval ``(lo, hi]``."""
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    count = _variations(chain, lo) - _variations(chain, hi)
    if count < 0:
        raise AssertionError("sign variations must be monotone along the chain")
    return count


def count_distinct_real_roots(p: IntPolynomial) -> int:
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0
    return sturm_count(sturm_chain(p), NEG_INF, POS_INF)


def is_real_rooted(p: IntPolynomial) -> bool:
    """True when every root of ``p`` is real, counted with multiplicity."""
    return all(
        count_distinct_real_roots(factor) == factor.degree
        for factor, _ in squarefree_decomposition(p)
    )


# ---------------------------------------------------------------------------
# Root bounds and rational roots.

def cauchy_bound(p: IntPolynomial) -> Fraction:
    """``1 + max_k |c_k / c_d|`` over k < d; every root lies in (-bound, bound)."""
    if p.degree < 1:
        raise ValueError("Cauchy bound requires degree >= 1")
    lead = abs(p.coeffs[-1])
    top = max(abs(c) for c in p.coeffs[:-1])
    return 1 + Fraction(top, lead)


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _strip_zero_roots(p: IntPolynomial) -> tuple[IntPolynomial, int]:
    k = 0
    while k <= p.degree and p.coeffs[k] == 0:
        k += 1
    return IntPolynomial(p.coeffs[k:]), k


def rational_root_candidates(p: IntPolynomial) -> tuple[Fraction, ...]:
    """All candidates +-r/s with r | |c_0| and s | |c_d|, in descending order.

    Zero roots are stripped first; 0 itself is never listed as a candidate.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    core, _ = _strip_zero_roots(p)
    if core.degree < 1:
        return ()
    nums = _divisors(core.coeffs[0])
    dens = _divisors(core.coeffs[-1])
    cands = {Fraction(sign * r, s) for r in nums for s in dens for sign in (1, -1)}
    return tuple(sorted(cands, reverse=True))


def rational_roots(p: IntPolynomial) -> tuple[Fraction, ...]:
    """All rational roots of ``p`` in lowest terms, descending."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    core, zeros = _strip_zero_roots(p)
    roots = [c for c in rational_root_candidates(p) if core(c) == 0]
    if zeros > 0:
        roots.append(Fraction(0))
    return tuple(sorted(roots, reverse=True))


def divide_out_rational_roots(
    p: IntPolynomial,
) -> tuple[IntPolynomial, tuple[tuple[Fraction, int], ...]]:
    """Remove every rational root to full multiplicity.

    Returns the quotient (which has no rational roots) and the removed
    roots with multiplicities, in descending root order.
    """
    quotient = p
    removed = []
    for root in rational_roots(p):
        linear = [Fraction(-root.numerator), Fraction(root.denominator)]
        mult = 0
        while True:
            fs = _frac(quotient)
            if len(fs) - 1 < 1:
                break
            r = _rem(fs, linear)
            if r:
                break
            quotient = IntPolynomial.of(_quo_exact(fs, linear))
            mult += 1
        removed.append((root, mult))
    return quotient, tuple(removed)


# ---------------------------------------------------------------------------
# Algebraic numbers: certified real roots.

@dataclass(frozen=True)
class AlgebraicNumber:
    """An exact real algebraic number.

    ``minpoly_factor`` is square-free and has the number as its only root in
    the half-open interval ``(lo, hi]``.  ``exact`` is set if and only if the
    number is rational; in that case the defining polynomial is linear.
    """

    minpoly_factor: IntPolynomial
    interval: tuple[Fraction, Fraction]
    exact: Fraction | None = None

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "AlgebraicNumber":
        value = Fraction(value)
        minpoly = IntPolynomial((-value.numerator, value.denominator))
        return cls(minpoly, (value - 1, value), value)

    @property
    def is_rational(self) -> bool:
        return self.exact is not None

    def midpoint(self) -> Fraction:
        if self.exact is not None:
            return self.exact
        lo, hi = self.interval
        return (lo + hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint())

    def __str__(self) -> str:
        if self.exact is not None:
            return f"{format_rational(self.exact)} (exact)"
        lo, hi = self.interval
        return f"~{float((lo + hi) / 2):.12g} in ({format_rational(lo)}, {format_rational(hi)}]"

    def to_json(self) -> dict:
        lo, hi = self.interval
        return {
            "minpoly": self.minpoly_factor.to_json(),
            "interval": [format_rational(lo), format_rational(hi)],
            "exact": format_rational(self.exact) if self.exact is not None else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraicNumber":
        try:
            minpoly = IntPolynomial.from_json(data["minpoly"])
            lo, hi = (parse_rational(x) for x in data["interval"])
            exact = data.get("exact")
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed algebraic number: {data!r}") from exc
        return cls(minpoly, (lo, hi), parse_rational(exact) if exact is not None else None)


def _bisect_once(a: AlgebraicNumber) -> AlgebraicNumber:
    """One sign-test bisection step; the root stays inside ``(lo, hi]``."""
    lo, hi = a.interval
    mid = (lo + hi) / 2
    if _sign_at(a.minpoly_factor, mid) == _sign_at(a.minpoly_factor, hi):
        return AlgebraicNumber(a.minpoly_factor, (lo, mid), a.exact)
    return AlgebraicNumber(a.minpoly_factor, (mid, hi), a.exact)


def refine(a: AlgebraicNumber, width: Fraction) -> AlgebraicNumber:
    """Shrink the isolating interval to length <= ``width``; exact values pass through."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if a.exact is not None:
        return a
    while a.interval[1] - a.interval[0] > width:
        a = _bisect_once(a)
    return a


def refine_away_from(a: AlgebraicNumber, point: Fraction) -> AlgebraicNumber:
    """Shrink the interval until ``point`` lies outside ``(lo, hi]``."""
    if a.exact is not None:
        return a
    while a.interval[0] < point <= a.interval[1]:
        a = _bisect_once(a)
    return a


def compare_with_rational(a: AlgebraicNumber, value: Fraction | int) -> int:
    """Exact three-way comparison of an algebraic number with a rational."""
    value = Fraction(value)
    if a.exact is not None:
        return _sgn(a.exact - value)
    lo, hi = a.interval
    if value <= lo:
        return 1
    if value > hi:
        return -1
    # value falls inside (lo, hi]; the root is irrational, hence distinct from
    # it, and the single sign change locates the root relative to value.
    if _sign_at(a.minpoly_factor, value) * _sign_at(a.minpoly_factor, hi) < 0:
        return 1
    return -1


def reciprocal(a: AlgebraicNumber) -> AlgebraicNumber:
    """The reciprocal, via coefficient reversal of the defining polynomial."""
    if a.exact is not None:
        if a.exact == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return AlgebraicNumber.from_rational(Fraction(1) / a.exact)
    b = refine_away_from(a, Fraction(0))
    while b.interval[0] == 0:
        b = _bisect_once(b)
    lo, hi = b.interval
    rev = _primitive(_frac(b.minpoly_factor.reversed_coeffs()), positive_lead=True)
    return AlgebraicNumber(rev, (1 / hi, 1 / lo))


# ---------------------------------------------------------------------------
# Maximal-root isolation.

@dataclass(frozen=True)
class RootAnalysis:
    """Outcome of splitting the roots of a polynomial into certified parts."""

    rational: tuple[Fraction, ...]
    reduced: IntPolynomial
    irrational_max: AlgebraicNumber | None
    max_root: AlgebraicNumber | None


def _isolate_topmost(chain: SturmChain, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink ``(lo, hi]`` (containing >= 1 root, none above) around the largest root."""
    count = sturm_count(chain, lo, hi)
    while count > 1:
        mid = (lo + hi) / 2
        upper = sturm_count(chain, mid, hi)
        if upper >= 1:
            lo, count = mid, upper
        else:
            hi, count = mid, count - upper
    return lo, hi


def analyze_roots(p: IntPolynomial) -> RootAnalysis:
    if p.is_zero:
        raise ValueError("zero polynomial")
    rr = rational_roots(p)
    reduced, _ = divide_out_rational_roots(p)
    irrational_max = None
    if reduced.degree >= 2:
        h = squarefree_part(reduced)
        chain = sturm_chain(h)
        bound = cauchy_bound(h)
        if sturm_count(chain, -bound, bound) > 0:
            lo, hi = _isolate_topmost(chain, -bound, bound)
            irrational_max = AlgebraicNumber(h, (lo, hi))
    best: AlgebraicNumber | None
    if irrational_max is None:
        best = AlgebraicNumber.from_rational(rr[0]) if rr else None
    elif not rr:
        best = irrational_max
    elif compare_with_rational(irrational_max, rr[0]) > 0:
        best = irrational_max
    else:
        best = AlgebraicNumber.from_rational(rr[0])
    return RootAnalysis(rr, reduced, irrational_max, best)


def isolate_max_root(p: IntPolynomial) -> AlgebraicNumber | None:
    """The largest real root of ``p``, or None if ``p`` has no real root."""
    if p.is_zero or p.degree < 1:
        raise ValueError("isolate_max_root requires a nonzero polynomial of degree >= 1")
    return analyze_roots(p).max_root


# ---------------------------------------------------------------------------
# The profile polynomial.

def chi_polynomial(profile: "IntersectionProfile") -> IntPolynomial:
    """Integer polynomial with coefficients ``(-1)^(n-k) C(n,k) v[k]``.

    Its leading coefficient is the top self-intersection of the
    polarization and its constant term is the signed top self-intersection
    of the second bundle; content is deliberately not stripped, since the
    divisor certificates read off these two coefficients.
    """
    n, v = profile.n, profile.v
    return IntPolynomial.of(
        (-1) ** (n - k) * comb(n, k) * v[k] for k in range(n + 1)
    )
