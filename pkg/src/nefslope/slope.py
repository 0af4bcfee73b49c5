"""Nef thresholds with exact rationality certificates.

The nef threshold of a pair ``(L, M)`` is ``sup{t : L - tM nef}``.  It is
computed from the profile polynomial: when the maximal real root is
positive the threshold is its reciprocal, otherwise the threshold is
infinite (represented explicitly, never as a large number).

Rationality of a finite threshold is a decided property: every rational
value must be a divisor quotient of the constant and leading coefficients,
so enumerating those candidates with exact evaluations either exhibits the
maximal root or certifies that the maximum is irrational.  The enumeration
is materialized as a :class:`CandidateTrace` so third parties can replay
the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, NegationIsNef, SlopeIsInfinite
from .exactio import format_int, format_rational
from .numdata import IntersectionProfile, binary_profile, require_valid
from .polyroot import (
    AlgebraicNumber,
    analyze_roots,
    cauchy_bound,
    chi_polynomial,
    compare_with_rational,
    rational_root_candidates,
    reciprocal,
    refine,
)


@dataclass(frozen=True)
class NefReport:
    """Verdict of the coordinate-wise nefness test on a bundle profile."""

    values: tuple[tuple[int, int], ...]
    nef: bool
    witness_k: int | None
    ample: bool

    def to_json(self) -> dict:
        return {
            "values": [{"k": k, "value": format_int(x)} for k, x in self.values],
            "verdict": "nef" if self.nef else "not-nef",
            "witness_k": self.witness_k,
            "ample": self.ample,
        }


@dataclass(frozen=True)
class CandidateTrace:
    """Replayable record of the rational-candidate enumeration.

    ``candidates`` holds every positive divisor-quotient candidate for the
    maximal root, in descending order, with the exact value of the profile
    polynomial at it.  ``max_root_candidate`` names the winner when the
    maximal root is rational; otherwise ``separation`` is an isolating
    interval for the irrational maximum, and every candidate above it
    evaluates to a nonzero value.
    """

    candidates: tuple[tuple[Fraction, Fraction], ...]
    max_root_candidate: Fraction | None
    separation: tuple[Fraction, Fraction] | None

    def to_json(self) -> list:
        return [
            {"candidate": format_rational(c), "value": format_rational(val)}
            for c, val in self.candidates
        ]


@dataclass(frozen=True)
class RationalSlope:
    """Certified rational threshold p/q in lowest terms, with p | L^n and q | M^n."""

    p: int
    q: int
    trace: CandidateTrace

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class IrrationalSlope:
    """Certificate that the finite threshold is irrational."""

    trace: CandidateTrace


@dataclass(frozen=True)
class SlopeResult:
    """Threshold of a pair: infinite, or finite with rationality certificate.

    For finite results ``max_root`` is the maximal real root of the profile
    polynomial and ``slope`` its reciprocal; the defining polynomial of one
    is the coefficient reversal of the other.
    """

    max_root: AlgebraicNumber | None
    slope: AlgebraicNumber | None
    rationality: RationalSlope | IrrationalSlope | None

    @property
    def infinite(self) -> bool:
        return self.max_root is None

    @property
    def slope_fraction(self) -> Fraction | None:
        if isinstance(self.rationality, RationalSlope):
            return self.rationality.value
        return None

    def refined(self, width: Fraction) -> "SlopeResult":
        if self.infinite:
            return self
        return SlopeResult(refine(self.max_root, width), refine(self.slope, width), self.rationality)

    def to_json(self) -> dict:
        if self.infinite:
            return {"kind": "infinite"}
        if isinstance(self.rationality, RationalSlope):
            rationality = {
                "verdict": "rational",
                "p": format_int(self.rationality.p),
                "q": format_int(self.rationality.q),
                "trace": self.rationality.trace.to_json(),
            }
        else:
            rationality = {
                "verdict": "irrational",
                "trace": self.rationality.trace.to_json(),
            }
        return {
            "kind": "finite",
            "zeta": self.max_root.to_json(),
            "slope": self.slope.to_json(),
            "rationality": rationality,
        }


def is_nef(p: IntersectionProfile) -> NefReport:
    """Nefness test: nef iff every profile entry is non-negative.

    The profile is that of the tested bundle ``B`` against the ample ``L``;
    ampleness additionally requires ``B^n > 0``.
    """
    require_valid(p)
    values = tuple((k, p.v[k]) for k in range(p.n + 1))
    witness = next((k for k, x in values if x < 0), None)
    nef = witness is None
    return NefReport(values, nef, witness, nef and p.v[0] > 0)


def _candidate_trace(chi, analysis) -> CandidateTrace:
    cands = tuple((c, Fraction(chi(c))) for c in rational_root_candidates(chi) if c > 0)
    best = analysis.max_root
    if best is not None and best.exact is not None and best.exact > 0:
        return CandidateTrace(cands, best.exact, None)
    separation = best.interval if best is not None else None
    return CandidateTrace(cands, None, separation)


def _check_divisibility(p: int, q: int, profile: IntersectionProfile) -> None:
    top_l = profile.v[profile.n]
    top_m = profile.v[0]
    if top_l % p != 0 or top_m % q != 0:
        raise AssertionError(
            f"certified threshold {p}/{q} violates the divisor conditions "
            f"against L^n={top_l}, M^n={top_m}"
        )


def slope(profile: IntersectionProfile) -> SlopeResult:
    """The nef threshold with certified rationality.

    Infinite exactly when the maximal real root of the profile polynomial
    is non-positive or absent, zero included.
    """
    require_valid(profile)
    chi = chi_polynomial(profile)
    if chi.degree < 1:
        raise DegenerateInput("profile polynomial is constant")
    analysis = analyze_roots(chi)
    best = analysis.max_root
    if best is None or compare_with_rational(best, 0) <= 0:
        return SlopeResult(None, None, None)
    trace = _candidate_trace(chi, analysis)
    if best.exact is not None:
        value = Fraction(1) / best.exact
        rationality = RationalSlope(value.numerator, value.denominator, trace)
        _check_divisibility(value.numerator, value.denominator, profile)
    else:
        rationality = IrrationalSlope(trace)
    return SlopeResult(best, reciprocal(best), rationality)


def certify_rationality(profile: IntersectionProfile) -> RationalSlope | IrrationalSlope:
    """Rationality certificate of a finite threshold.

    Raises :class:`SlopeIsInfinite` when the threshold is infinite.
    """
    result = slope(profile)
    if result.infinite:
        raise SlopeIsInfinite("threshold is infinite; nothing to certify")
    if isinstance(result.rationality, RationalSlope):
        _check_divisibility(result.rationality.p, result.rationality.q, profile)
    return result.rationality


def slope_lower_bound(profile: IntersectionProfile) -> Fraction:
    """Coefficient lower bound for the threshold.

    Requires ``-M`` not nef (checked on the negated profile); then the
    threshold exceeds the reciprocal Cauchy radius of the profile
    polynomial, ``(1 + max_k C(n,k) |v[k]| / v[n])^-1``.
    """
    require_valid(profile)
    negated = binary_profile(profile, 0, -1)
    if is_nef(negated).nef:
        raise NegationIsNef("-M is nef, the threshold is infinite and needs no bound")
    return Fraction(1) / cauchy_bound(chi_polynomial(profile))


def slope_at_least(result: SlopeResult, bound: Fraction) -> bool:
    """Exact comparison ``threshold >= bound``; infinite thresholds dominate."""
    if result.infinite:
        return True
    return compare_with_rational(result.slope, Fraction(bound)) >= 0


def s_invariant(profile: IntersectionProfile) -> AlgebraicNumber | None:
    """The s-invariant of the divisor ideal attached to ``M``: the reciprocal
    of the threshold, i.e. the maximal root itself.

    Returns None as an explicit marker when the threshold is infinite; no
    numeric convention is invented for that case.
    """
    result = slope(profile)
    if result.infinite:
        return None
    return result.max_root
