"""Numeric data model for polarized abelian varieties.

A bundle pair ``(L, M)`` on an n-dimensional abelian variety is presented by
its intersection profile, the vector of integers ``v[k] = L^k . M^(n-k)``.
Non-simple varieties are modelled concretely on products of elliptic curves
with the product principal polarization: a symmetric rational matrix plays
the role of the endomorphism attached to ``M``, the top self-intersection of
``L`` defaults to ``n!``, and the profile is read off the characteristic
polynomial of the matrix.

Profiles are passive records: arbitrary integer vectors are accepted as
first-class inputs, and realizability checks are opt-in through
:func:`validate` at increasing :class:`ValidationLevel` strictness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import InputError, NonIntegralProfile
from .exactio import format_int, format_rational, parse_int, parse_rational
from .polyroot import chi_polynomial, count_distinct_real_roots, squarefree_decomposition


@dataclass(frozen=True)
class IntersectionProfile:
    """The vector ``(L^k . M^(n-k))_{k=0..n}``, listed from k=0 upward."""

    n: int
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(self.v))

    @property
    def top_self_intersection(self) -> int:
        """``L^n``, the last profile entry."""
        return self.v[self.n]

    def to_json(self) -> dict:
        return {"n": self.n, "v": [format_int(x) for x in self.v]}

    @classmethod
    def from_json(cls, data: dict) -> "IntersectionProfile":
        if not isinstance(data, dict) or "n" not in data or "v" not in data:
            raise InputError("profile JSON must be an object with 'n' and 'v'")
        n = parse_int(data["n"])
        v = tuple(parse_int(x) for x in data["v"])
        return cls(n, v)


@dataclass(frozen=True)
class SymMatrixModel:
    """Symmetric rational matrix model of a bundle on a product of elliptic curves.

    ``entries`` is the matrix of the endomorphism attached to the bundle;
    ``top_l`` is the value of ``L^n`` (``n!`` for the product principal
    polarization, scalable for scaled polarizations).
    """

    n: int
    entries: tuple[tuple[Fraction, ...], ...]
    top_l: int

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)

    @property
    def is_symmetric(self) -> bool:
        m = self.entries
        return all(
            len(row) == self.n for row in m
        ) and len(m) == self.n and all(
            m[i][j] == m[j][i] for i in range(self.n) for j in range(i)
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "Ln": format_int(self.top_l),
            "F": [[format_rational(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymMatrixModel":
        if not isinstance(data, dict) or not {"n", "Ln", "F"} <= set(data):
            raise InputError("matrix JSON must be an object with 'n', 'Ln' and 'F'")
        n = parse_int(data["n"])
        top_l = parse_int(data["Ln"])
        rows = tuple(tuple(parse_rational(x) for x in row) for row in data["F"])
        return cls(n, rows, top_l)


class ValidationLevel(enum.IntEnum):
    """Opt-in realizability filters, ordered by strictness."""

    SYNTACTIC = 1
    SPECTRAL = 2
    SURFACE_HODGE = 3


@dataclass(frozen=True)
class Violation:
    check: str
    message: str
    witness: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    level: ValidationLevel
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "level": self.level.name.lower(),
            "ok": self.ok,
            "violations": [
                {"check": w.check, "message": w.message, "witness": [str(x) for x in w.witness]}
                for w in self.violations
            ],
        }


def _is_plain_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _syntactic_violations(p: IntersectionProfile) -> list[Violation]:
    out = []
    if not _is_plain_int(p.n) or p.n < 1:
        out.append(Violation("dimension", f"n must be a positive integer, got {p.n!r}", (p.n,)))
        return out
    if len(p.v) != p.n + 1:
        out.append(
            Violation("profile-length", f"expected {p.n + 1} entries, got {len(p.v)}", (len(p.v),))
        )
        return out
    bad = [x for x in p.v if not _is_plain_int(x)]
    if bad:
        out.append(Violation("integrality", f"non-integer entries {bad!r}", tuple(bad)))
        return out
    if p.v[p.n] <= 0:
        out.append(
            Violation("ample-top", f"L^n must be positive, got {p.v[p.n]}", (p.v[p.n],))
        )
    return out


def validate(p: IntersectionProfile, level: ValidationLevel) -> ValidationReport:
    """Check a profile at the requested strictness; never raises.

    SYNTACTIC checks the type invariants.  SPECTRAL additionally requires the
    profile polynomial to be real-rooted (counting multiplicity through the
    square-free decomposition), as holds for every profile arising from a
    symmetric matrix model.  SURFACE_HODGE additionally requires, on
    surfaces, the index inequality ``(L.M)^2 >= L^2 M^2``.
    """
    violations = _syntactic_violations(p)
    if violations:
        return ValidationReport(level, tuple(violations))
    if level >= ValidationLevel.SPECTRAL:
        chi = chi_polynomial(p)
        for factor, mult in squarefree_decomposition(chi):
            real = count_distinct_real_roots(factor)
            if real != factor.degree:
                violations.append(
                    Violation(
                        "real-rooted",
                        f"factor {factor} of multiplicity {mult} has {real} real "
                        f"roots but degree {factor.degree}",
                        (str(factor), mult, real),
                    )
                )
    if level >= ValidationLevel.SURFACE_HODGE:
        if p.n != 2:
            violations.append(
                Violation("hodge-index", f"surface check requires n=2, got n={p.n}", (p.n,))
            )
        elif p.v[1] ** 2 < p.v[2] * p.v[0]:
            violations.append(
                Violation(
                    "hodge-index",
                    f"(L.M)^2 = {p.v[1] ** 2} < L^2 M^2 = {p.v[2] * p.v[0]}",
                    (p.v[1] ** 2, p.v[2] * p.v[0]),
                )
            )
    return ValidationReport(level, tuple(violations))


def require_valid(p: IntersectionProfile) -> None:
    """Raise on profiles that fail the syntactic invariants."""
    report = validate(p, ValidationLevel.SYNTACTIC)
    if not report.ok:
        raise InputError("; ".join(v.message for v in report.violations))


# ---------------------------------------------------------------------------
# Matrix model.

def charpoly(entries: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    """Coefficients of ``det(u I - F)``, ascending, by the Faddeev-LeVerrier scheme."""
    n = len(entries)
    m = [[Fraction(x) for x in row] for row in entries]
    if any(len(row) != n for row in m):
        raise InputError("matrix must be square")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    aux = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # aux <- F @ aux + c_{n-k+1} I
        nxt = [
            [sum(m[i][t] * aux[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            nxt[i][i] += coeffs[n - k + 1]
        trace = sum(
            sum(m[i][t] * nxt[t][i] for t in range(n)) for i in range(n)
        )
        coeffs[n - k] = -trace / k
        aux = nxt
    return tuple(coeffs)


def _require_model(m: SymMatrixModel) -> None:
    if not _is_plain_int(m.n) or m.n < 1:
        raise InputError(f"matrix model dimension must be a positive integer, got {m.n!r}")
    if not m.is_symmetric:
        raise InputError("matrix model requires a symmetric square matrix")
    if not _is_plain_int(m.top_l) or m.top_l <= 0:
        raise InputError(f"L^n must be a positive integer, got {m.top_l!r}")


def profile_from_matrix(m: SymMatrixModel) -> IntersectionProfile:
    """Intersection profile of the modelled pair.

    The identity ``chi_polynomial(profile) = L^n * charpoly(F)`` pins down
    every entry; non-integral entries mean the matrix does not model an
    integral bundle against this ``L^n`` and are an error, never rounded.
    """
    _require_model(m)
    cp = charpoly(m.entries)
    v = []
    for k in range(m.n + 1):
        value = Fraction(m.top_l) * (-1) ** (m.n - k) * cp[k] / comb(m.n, k)
        if value.denominator != 1:
            raise NonIntegralProfile(
                f"entry k={k} is {value}, not an integer (L^n = {m.top_l})"
            )
        v.append(value.numerator)
    return IntersectionProfile(m.n, tuple(v))


def product_model(entries: Sequence[Sequence[Fraction | int]], top_l: int | None = None) -> SymMatrixModel:
    """Convenience constructor; ``top_l`` defaults to ``n!``."""
    n = len(entries)
    rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
    return SymMatrixModel(n, rows, factorial(n) if top_l is None else top_l)


# ---------------------------------------------------------------------------
# Profile operations.

def is_proportional(p: IntersectionProfile) -> Fraction | None:
    """The rational t with ``M = t L`` numerically, if one exists.

    Such a t forces ``v[k] = t^(n-k) v[n]`` for every k, so it is determined
    by the last two entries and then verified against the whole profile.
    """
    require_valid(p)
    t = Fraction(p.v[p.n - 1], p.v[p.n])
    for k in range(p.n + 1):
        if p.v[k] != t ** (p.n - k) * p.v[p.n]:
            return None
    return t


def binary_profile(p: IntersectionProfile, a: int, b: int) -> IntersectionProfile:
    """Profile of ``B = aL + bM`` against ``L``, expanded by the binomial theorem."""
    require_valid(p)
    if not _is_plain_int(a) or not _is_plain_int(b):
        raise InputError("coefficients of the bundle combination must be integers")
    n, v = p.n, p.v
    w = []
    for k in range(n + 1):
        d = n - k
        w.append(sum(comb(d, j) * a ** (d - j) * b**j * v[n - j] for j in range(d + 1)))
    return IntersectionProfile(n, tuple(w))
