import cmath
import math

import numpy as np
import pytest

from euleriana.polyrat import (
    Polynomial,
    RationalFunction,
    find_roots,
    integrate_rational,
    partial_fractions,
    poly_eval,
)


def test_poly_eval_root_of_unity():
    p = Polynomial([1, 0, 1])  # z^2 + 1
    assert abs(poly_eval(p, 1j)) < 1e-15


def test_poly_eval_constant():
    assert poly_eval(Polynomial([1]), 5) == 1


def test_poly_eval_quintic_integer():
    # oracle: direct integer arithmetic, 20**5 - 2625*20 - 16600 = 3130900
    assert 20**5 - 2625 * 20 - 16600 == 3130900
    p = Polynomial([-16600, -2625, 0, 0, 0, 1])
    assert poly_eval(p, 20) == pytest.approx(3130900)


def test_find_roots_quadratic():
    rs = find_roots(Polynomial([1, 0, 1]))
    vals = sorted(rs.flat(), key=lambda z: z.imag)
    assert vals[0] == pytest.approx(-1j, abs=1e-10)
    assert vals[1] == pytest.approx(1j, abs=1e-10)


def test_find_roots_cubic_roots_of_unity():
    rs = find_roots(Polynomial([-1, 0, 0, 1]))
    expected = sorted(
        [1, cmath.exp(2j * math.pi / 3), cmath.exp(-2j * math.pi / 3)],
        key=lambda z: (z.real, z.imag),
    )
    got = rs.flat()
    for g, e in zip(got, expected):
        assert g == pytest.approx(e, abs=1e-10)


def test_find_roots_euler_quintic_radical_root():
    # Radical expression 75(5±4√10), 225(35±11√10) summed over real fifth
    # roots; frozen from a 50-digit evaluation.  It is the real root of
    # x^5 = 2625x + 61500 (the constant printed alongside it elsewhere is a
    # typo; the expression does not satisfy x^5 = 2625x + 16600).
    radical_value = 9.726006661286260
    p = Polynomial([-61500, -2625, 0, 0, 0, 1])
    rs = find_roots(p)
    real_roots = [r for r, m in rs.roots if abs(r.imag) < 1e-8]
    assert len(real_roots) == 1
    assert real_roots[0].real == pytest.approx(radical_value, abs=1e-9)


def test_partial_fractions_two_simple_poles():
    r = RationalFunction(Polynomial([1]), Polynomial([0, -1, 1]))  # 1/(t(t-1))
    pf = partial_fractions(r)
    assert pf.polynomial_part.is_zero(1e-12)
    terms = {round(p.real): c for p, k, c in pf.terms}
    assert terms[0] == pytest.approx(-1, abs=1e-10)
    assert terms[1] == pytest.approx(1, abs=1e-10)


def test_partial_fractions_with_polynomial_part():
    r = RationalFunction(Polynomial([1, 0, 1]), Polynomial([0, 1]))  # (t^2+1)/t
    pf = partial_fractions(r)
    assert pf.polynomial_part.coeffs == pytest.approx([0, 1])
    (pole, k, c) = pf.terms[0]
    assert pole == pytest.approx(0, abs=1e-12)
    assert k == 1
    assert c == pytest.approx(1)


def test_partial_fractions_gamma_kernel_ratio():
    # (-t-1)/t; long division oracle: quotient -1, remainder -1
    r = RationalFunction(Polynomial([-1, -1]), Polynomial([0, 1]))
    pf = partial_fractions(r)
    assert pf.polynomial_part.coeffs == pytest.approx([-1])
    assert pf.terms[0][2] == pytest.approx(-1)


def test_integrate_rational_log():
    anti = integrate_rational(RationalFunction(Polynomial([1]), Polynomial([0, 1])))
    assert anti.log_terms[0][1] == pytest.approx(1)
    assert abs(anti(2.0) - cmath.log(2.0)) < 1e-12


def test_integrate_rational_gamma_kernel():
    # -1 - 1/t -> -t - log t  (termwise antiderivative oracle)
    r = RationalFunction(Polynomial([-1, -1]), Polynomial([0, 1]))
    anti = integrate_rational(r)
    assert anti(3.0) == pytest.approx(-3.0 - math.log(3.0))


def test_integrate_rational_double_pole():
    anti = integrate_rational(RationalFunction(Polynomial([1]), Polynomial([0, 0, 1])))
    assert not anti.log_terms
    pole, k, c = anti.power_terms[0]
    assert pole == pytest.approx(0, abs=1e-12)
    assert k == 1
    assert c == pytest.approx(-1)


# ---------------------------------------------------------------------------
# property checks


def _random_poly(rng, degree):
    coeffs = rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1)
    coeffs[-1] += 2.0  # keep leading coefficient well away from zero
    return Polynomial(list(coeffs))


def test_roots_reproduce_polynomial():
    rng = np.random.default_rng(42)
    for degree in range(1, 9):
        p = _random_poly(rng, degree)
        rs = find_roots(p)
        rebuilt = Polynomial.from_roots(rs.flat(), p.coeffs[-1])
        for _ in range(20):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            ref = p(z)
            scale = max(abs(ref), p.norm1() * max(1.0, abs(z)) ** degree * 1e-3)
            assert abs(rebuilt(z) - ref) <= 1e-8 * scale


def test_partial_fraction_recombination_identity():
    rng = np.random.default_rng(7)
    for _ in range(10):
        num = _random_poly(rng, int(rng.integers(0, 4)))
        den = _random_poly(rng, int(rng.integers(1, 5)))
        r = RationalFunction(num, den).reduce()
        pf = partial_fractions(r)
        poles = [p for p, _, _ in pf.terms]
        checked = 0
        while checked < 20:
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if any(abs(z - p) < 0.3 for p in poles):
                continue
            ref = r(z)
            assert abs(pf(z) - ref) <= 1e-10 * max(1.0, abs(ref))
            checked += 1


def test_antiderivative_derivative_identity():
    rng = np.random.default_rng(11)
    for _ in range(10):
        num = _random_poly(rng, int(rng.integers(0, 4)))
        den = _random_poly(rng, int(rng.integers(1, 5)))
        r = RationalFunction(num, den).reduce()
        anti = integrate_rational(r)
        poles = [p for p, _, _ in partial_fractions(r).terms]
        checked = 0
        while checked < 20:
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if any(abs(z - p) < 0.3 for p in poles):
                continue
            ref = r(z)
            assert abs(anti.derivative_value(z) - ref) <= 1e-10 * max(1.0, abs(ref))
            checked += 1
