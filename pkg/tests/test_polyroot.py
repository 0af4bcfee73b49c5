"""Tests for the exact polynomial layer: Sturm counting, isolation, bounds."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nefslope.generators import SplitMix64
from nefslope.numdata import IntersectionProfile
from nefslope.polyroot import (
    NEG_INF,
    POS_INF,
    AlgebraicNumber,
    IntPolynomial,
    cauchy_bound,
    chi_polynomial,
    compare_with_rational,
    count_distinct_real_roots,
    divide_out_rational_roots,
    isolate_max_root,
    rational_root_candidates,
    rational_roots,
    reciprocal,
    refine,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
    sturm_count,
)
from oracle import in_interval_surd

P = IntPolynomial.of


def from_roots(roots, lead=1):
    """Expand lead * prod (u - r) for integer roots r."""
    coeffs = [lead]
    for r in roots:
        coeffs = [0] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return P(coeffs)


class TestIntPolynomial:
    def test_normalization_strips_trailing_zeros(self):
        assert P([1, 2, 0, 0]).coeffs == (1, 2)
        assert P([0, 0]).is_zero

    def test_direct_construction_rejects_zero_lead(self):
        with pytest.raises(ValueError):
            IntPolynomial((1, 0))

    def test_rejects_non_integral(self):
        with pytest.raises(ValueError):
            P([Fraction(1, 2)])

    def test_evaluation_exact(self):
        p = P([2, -6, 2])
        assert p(Fraction(1, 2)) == Fraction(-1, 2)
        assert p(0) == 2
        assert p(3) == 2

    def test_derivative(self):
        assert P([5, 0, 3, 4]).derivative() == P([0, 6, 12])

    def test_json_round_trip(self):
        p = P([2, -6, 2])
        assert IntPolynomial.from_json(p.to_json()) == p
        assert p.to_json() == {"coeffs": ["2", "-6", "2"]}


class TestSquarefree:
    def test_squarefree_part_of_power(self):
        assert squarefree_part(P([0, 0, 1])) == P([0, 1])

    def test_squarefree_part_keeps_distinct_roots(self):
        p = from_roots([1, 3], lead=2)
        assert squarefree_part(p) == from_roots([1, 3])

    def test_decomposition_multiplicities(self):
        # 2 (u-2)^2: single factor of multiplicity 2
        p = P([8, -8, 2])
        assert squarefree_decomposition(p) == [(P([-2, 1]), 2)]

    def test_decomposition_mixed(self):
        # u^3 (u-1): factors u of multiplicity 3 and u-1 of multiplicity 1
        p = P([0, 0, 0, -1, 1])
        assert sorted(squarefree_decomposition(p), key=lambda t: t[1]) == [
            (P([-1, 1]), 1),
            (P([0, 1]), 3),
        ]


class TestSturm:
    def test_count_whole_line(self):
        chain = sturm_chain(P([2, -6, 2]))
        assert sturm_count(chain, NEG_INF, POS_INF) == 2

    def test_count_unit_interval(self):
        chain = sturm_chain(P([2, -6, 2]))
        assert sturm_count(chain, Fraction(0), Fraction(1)) == 1

    def test_count_square(self):
        chain = sturm_chain(P([0, 0, 1]))
        assert sturm_count(chain, Fraction(-1), Fraction(1)) == 1

    def test_half_open_convention(self):
        # root at 0 belongs to (-1, 0] but not to (0, 1]
        chain = sturm_chain(P([0, 1]))
        assert sturm_count(chain, Fraction(-1), Fraction(0)) == 1
        assert sturm_count(chain, Fraction(0), Fraction(1)) == 0

    def test_constructed_root_counts(self):
        rng = SplitMix64(2024)
        for _ in range(200):
            k = rng.below(4)
            roots = sorted({rng.in_range(-8, 8) for _ in range(k)})
            p = from_roots(roots, lead=rng.in_range(1, 3))
            if rng.below(2):
                # u^2 + c contributes no real roots
                p = _mul(p, P([rng.in_range(1, 9), 0, 1]))
            if p.degree < 1:
                continue
            assert count_distinct_real_roots(p) == len(roots)


def _mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPolynomial.of(out)


class TestCauchyBound:
    def test_examples(self):
        assert cauchy_bound(P([2, -6, 2])) == 4
        assert cauchy_bound(P([0, 0, 0, 1])) == 1
        assert cauchy_bound(P([0, 0, -54, 6])) == 10

    @given(st.lists(st.integers(-100, 100), min_size=2, max_size=9))
    def test_no_roots_outside(self, coeffs):
        p = P(coeffs)
        if p.degree < 1:
            return
        bound = cauchy_bound(p)
        chain = sturm_chain(p)
        assert sturm_count(chain, NEG_INF, POS_INF) == sturm_count(chain, -bound, bound)


class TestRationalRoots:
    def test_two_roots(self):
        assert set(rational_roots(P([3, -10, 3]))) == {Fraction(3), Fraction(1, 3)}

    def test_no_rational_roots(self):
        assert rational_roots(P([2, -6, 2])) == ()

    def test_zero_root_extraction(self):
        assert set(rational_roots(P([0, -2, 2]))) == {Fraction(0), Fraction(1)}

    def test_candidates_descending(self):
        cands = rational_root_candidates(P([2, -6, 2]))
        assert cands == tuple(sorted(cands, reverse=True))
        assert set(c for c in cands if c > 0) == {Fraction(2), Fraction(1), Fraction(1, 2)}

    def test_divide_out_removes_multiplicity(self):
        p = _mul(from_roots([2, 2, -1], lead=3), P([1, 0, 1]))
        reduced, removed = divide_out_rational_roots(p)
        assert dict(removed) == {Fraction(2): 2, Fraction(-1): 1}
        assert reduced == P([3, 0, 3])

    @given(st.lists(st.integers(-60, 60), min_size=2, max_size=8))
    def test_roots_satisfy_divisor_conditions(self, coeffs):
        p = P(coeffs)
        if p.degree < 1:
            return
        core_coeffs = list(p.coeffs)
        while core_coeffs and core_coeffs[0] == 0:
            core_coeffs.pop(0)
        for r in rational_roots(p):
            assert p(r) == 0
            if r != 0:
                assert core_coeffs[0] % r.numerator == 0
                assert core_coeffs[-1] % r.denominator == 0


class TestIsolateMaxRoot:
    def test_irrational_quadratic(self):
        root = isolate_max_root(P([2, -6, 2]))
        assert root.exact is None
        lo, hi = root.interval
        # (3 + sqrt 5) / 2
        assert in_interval_surd(lo, hi, Fraction(3, 2), Fraction(1, 2), 5)

    def test_exact_rational(self):
        root = isolate_max_root(P([0, -2, 2]))
        assert root.exact == 1

    def test_no_real_roots(self):
        assert isolate_max_root(P([1, 0, 1])) is None

    def test_rational_beats_smaller_irrational(self):
        # (u - 10) (u^2 - 2): max root is 10, not sqrt(2)
        p = _mul(P([-10, 1]), P([-2, 0, 1]))
        root = isolate_max_root(p)
        assert root.exact == 10

    def test_irrational_beats_smaller_rational(self):
        # (u - 1) (u^2 - 7): max root is sqrt(7)
        p = _mul(P([-1, 1]), P([-7, 0, 1]))
        root = isolate_max_root(p)
        assert root.exact is None
        lo, hi = root.interval
        assert in_interval_surd(lo, hi, Fraction(0), Fraction(1), 7)

    def test_interval_isolates_and_tops(self):
        p = P([2, -6, 2])
        root = isolate_max_root(p)
        chain = sturm_chain(p)
        lo, hi = root.interval
        assert sturm_count(chain, lo, hi) == 1
        assert sturm_count(chain, hi, POS_INF) == 0


class TestRefine:
    def test_width_target(self):
        root = isolate_max_root(P([2, -6, 2]))
        tight = refine(root, Fraction(1, 10**12))
        lo, hi = tight.interval
        assert hi - lo <= Fraction(1, 10**12)
        assert in_interval_surd(lo, hi, Fraction(3, 2), Fraction(1, 2), 5)

    def test_exact_unchanged(self):
        a = AlgebraicNumber.from_rational(Fraction(1))
        assert refine(a, Fraction(1, 10**30)) is a

    def test_sqrt_two(self):
        root = isolate_max_root(P([-2, 0, 1]))
        tight = refine(root, Fraction(1, 4))
        lo, hi = tight.interval
        assert hi - lo <= Fraction(1, 4)
        assert in_interval_surd(lo, hi, Fraction(0), Fraction(1), 2)

    def test_compare_with_rational(self):
        root = isolate_max_root(P([-2, 0, 1]))
        assert compare_with_rational(root, Fraction(1)) == 1
        assert compare_with_rational(root, Fraction(2)) == -1
        assert compare_with_rational(root, Fraction(3, 2)) == -1
        assert compare_with_rational(root, Fraction(7, 5)) == 1

    def test_reciprocal_brackets_one(self):
        root = isolate_max_root(P([2, -6, 2]))
        inv = reciprocal(root)
        a = refine(root, Fraction(1, 10**9))
        b = refine(inv, Fraction(1, 10**9))
        prod_lo = a.interval[0] * b.interval[0]
        prod_hi = a.interval[1] * b.interval[1]
        assert prod_lo < 1 < prod_hi


class TestChiPolynomial:
    def test_examples(self):
        assert chi_polynomial(IntersectionProfile(2, (2, 3, 2))) == P([2, -6, 2])
        assert chi_polynomial(IntersectionProfile(2, (0, 1, 2))) == P([0, -2, 2])
        assert chi_polynomial(IntersectionProfile(3, (0, 0, 18, 6))) == P([0, 0, -54, 6])

    def test_polarization_power(self):
        # M = L gives top_l * (u - 1)^n
        for n, top_l in [(2, 2), (3, 6), (4, 24)]:
            p = IntersectionProfile(n, tuple([top_l] * (n + 1)))
            expected = from_roots([1] * n, lead=top_l)
            assert chi_polynomial(p) == expected

    @given(
        st.integers(1, 4),
        st.data(),
    )
    def test_linearity(self, n, data):
        ints = st.integers(-40, 40)
        v1 = [data.draw(ints) for _ in range(n)] + [data.draw(st.integers(1, 40))]
        v2 = [data.draw(ints) for _ in range(n)] + [data.draw(st.integers(1, 40))]
        p1 = IntersectionProfile(n, tuple(v1))
        p2 = IntersectionProfile(n, tuple(v2))
        psum = IntersectionProfile(n, tuple(a + b for a, b in zip(v1, v2)))
        left = chi_polynomial(psum)
        c1, c2 = chi_polynomial(p1), chi_polynomial(p2)
        width = max(len(c1.coeffs), len(c2.coeffs))
        summed = IntPolynomial.of(
            (c1.coeffs[i] if i < len(c1.coeffs) else 0)
            + (c2.coeffs[i] if i < len(c2.coeffs) else 0)
            for i in range(width)
        )
        assert left == summed


class TestFloatOracleAgreement:
    def test_thousand_random_polynomials(self):
        """Certified max roots agree with a float companion-matrix solver to 1e-9."""
        rng = SplitMix64(777)
        checked = 0
        while checked < 1000:
            degree = rng.in_range(1, 8)
            coeffs = [rng.in_range(-100, 100) for _ in range(degree)] + [0]
            while coeffs[-1] == 0:
                coeffs[-1] = rng.in_range(-100, 100)
            p = IntPolynomial.of(coeffs)
            got = isolate_max_root(p)
            np_roots = np.roots(list(reversed(p.coeffs)))
            real = sorted(r.real for r in np_roots if abs(r.imag) < 1e-7)
            if got is None:
                assert not real
            else:
                assert real
                tight = refine(got, Fraction(1, 10**12))
                assert abs(float(tight.midpoint()) - real[-1]) < 1e-9
            checked += 1
