"""Complex rational calculus: polynomials, root finding, partial fractions,
and symbolic antiderivatives of rational functions.

Everything here works on plain complex coefficients in ascending order.
Root finding uses Aberth's simultaneous iteration, which is robust for the
low degrees (<= ~10) occurring in the kernel derivations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import NonConvergence

CLUSTER_TOL = 1e-7  # multiplicity clustering / reduction radius, scaled by 1+|root|
RESIDUAL_FACTOR = 1e-12


def _trim(coeffs, tol=0.0):
    c = list(coeffs)
    while len(c) > 1 and abs(c[-1]) <= tol:
        c.pop()
    return c


class Polynomial:
    """Polynomial with complex coefficients, ascending degree order."""

    def __init__(self, coeffs):
        c = [complex(v) for v in coeffs] or [0j]
        self.coeffs = _trim(c)

    @classmethod
    def zero(cls):
        return cls([0])

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        p = cls([leading])
        for r in roots:
            p = p * cls([-r, 1.0])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self, tol=0.0):
        return all(abs(c) <= tol for c in self.coeffs)

    def __call__(self, z):
        # Horner evaluation
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [0j] * (n - len(self.coeffs))
        b = other.coeffs + [0j] * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else Polynomial([-other]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([other * c for c in self.coeffs])
        out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Long division; other must not be the zero polynomial."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < d:
            return Polynomial.zero(), Polynomial(rem)
        quot = [0j] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k] / lead
            quot[k - d] = q
            for j in range(d + 1):
                rem[k - d + j] -= q * other.coeffs[j]
        return Polynomial(quot), Polynomial(_trim(rem, 0.0)[:d] or [0])

    def derivative(self):
        if self.degree == 0:
            return Polynomial.zero()
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self):
        return Polynomial([0j] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def shifted(self, a):
        """Coefficients of p(t + a), i.e. the Taylor expansion about a.

        Repeated synthetic division by (t - a); the remainders are the
        Taylor coefficients.
        """
        work = list(self.coeffs)
        out = []
        for _ in range(len(self.coeffs)):
            deg = len(work) - 1
            if deg < 0:
                break
            new = [0j] * deg
            carry = work[-1]
            for k in range(deg - 1, -1, -1):
                new[k] = carry
                carry = work[k] + carry * a
            out.append(carry)
            work = new
        return out

    def norm1(self):
        return sum(abs(c) for c in self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.coeffs!r})"


@dataclass
class RootSet:
    """Roots with multiplicities; residual_bound = max |p(root)| observed."""

    roots: list  # list of (value, multiplicity)
    residual_bound: float

    def flat(self):
        out = []
        for r, m in self.roots:
            out.extend([r] * m)
        return out


def poly_eval(p: Polynomial, z) -> complex:
    """Horner evaluation of p at z."""
    return p(z)


def _aberth(coeffs, maxiter=200, target=None):
    """All roots of the (trimmed, degree>=1) coefficient list via Aberth iteration."""
    n = len(coeffs) - 1
    lead = coeffs[-1]
    p = Polynomial(coeffs)
    dp = p.derivative()
    # Cauchy-style radius; perturbed-circle initial guesses (deterministic)
    radius = 1.0 + max(abs(c / lead) for c in coeffs[:-1])
    z = [
        radius * cmath.exp(2j * math.pi * (k + 0.35) / n + 0.4j)
        for k in range(n)
    ]
    norm = p.norm1()
    tgt = target if target is not None else RESIDUAL_FACTOR * norm
    for _ in range(maxiter):
        converged = True
        newz = list(z)
        for i in range(n):
            pv = p(z[i])
            if abs(pv) <= tgt * 1e-3:
                continue
            dv = dp(z[i])
            if dv == 0:
                newz[i] = z[i] * (1 + 1e-8) + 1e-8
                converged = False
                continue
            ratio = pv / dv
            s = 0j
            for j in range(n):
                if j != i:
                    dz = z[i] - z[j]
                    if dz == 0:
                        dz = 1e-30
                    s += 1.0 / dz
            denom = 1.0 - ratio * s
            if denom == 0:
                denom = 1e-30
            step = ratio / denom
            newz[i] = z[i] - step
            if abs(step) > 1e-14 * (1 + abs(z[i])):
                converged = False
        z = newz
        if converged:
            break
    residual = max(abs(p(zi)) for zi in z)
    if residual > tgt and residual > 1e-10 * norm:
        raise NonConvergence(
            f"Aberth iteration residual {residual:.3e} above target {tgt:.3e}"
        )
    return z


def find_roots(p: Polynomial) -> RootSet:
    """All complex roots with multiplicities.

    Simultaneous Aberth iteration from perturbed-circle starting points;
    multiplicities by clustering within CLUSTER_TOL*(1+|root|).  Raises
    NonConvergence when the iteration cannot reach residual 1e-12*|p|_1
    (pathological conditioning).
    """
    coeffs = _trim(p.coeffs)
    if len(coeffs) < 2:
        raise ValueError("find_roots requires degree >= 1")
    raw = _aberth(coeffs)
    # cluster
    raw = sorted(raw, key=lambda z: (z.real, z.imag))
    clusters = []
    for z in raw:
        for c in clusters:
            center = sum(c) / len(c)
            if abs(z - center) <= CLUSTER_TOL * (1 + abs(center)):
                c.append(z)
                break
        else:
            clusters.append([z])
    roots = []
    for c in clusters:
        roots.append((sum(c) / len(c), len(c)))
    roots.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    residual = max(abs(p(r)) for r, _ in roots)
    return RootSet(roots=roots, residual_bound=residual)


class RationalFunction:
    """Quotient of two polynomials.  reduce() cancels shared roots."""

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    def __call__(self, z):
        return self.numerator(z) / self.denominator(z)

    def reduce(self) -> "RationalFunction":
        """Cancel numerator/denominator roots closer than the cluster radius."""
        num, den = self.numerator, self.denominator
        if num.is_zero():
            return RationalFunction(Polynomial.zero(), Polynomial([1.0]))
        if num.degree == 0 or den.degree == 0:
            return RationalFunction(num, den)
        nroots = find_roots(num).flat()
        droots = find_roots(den).flat()
        remaining = list(droots)
        kept_num = []
        for r in nroots:
            hit = None
            for i, s in enumerate(remaining):
                if abs(r - s) <= CLUSTER_TOL * (1 + abs(r)):
                    hit = i
                    break
            if hit is None:
                kept_num.append(r)
            else:
                remaining.pop(hit)
        if len(kept_num) == len(nroots):
            return RationalFunction(num, den)
        new_num = Polynomial.from_roots(kept_num, num.coeffs[-1])
        new_den = Polynomial.from_roots(remaining, den.coeffs[-1])
        return RationalFunction(new_num, new_den)


@dataclass
class PartialFractionExpansion:
    """polynomial_part + sum of coefficient/(t-pole)^multiplicity terms."""

    polynomial_part: Polynomial
    terms: list  # list of (pole, multiplicity, coefficient)

    def __call__(self, z):
        v = self.polynomial_part(z)
        for pole, k, c in self.terms:
            v += c / (z - pole) ** k
        return v


def _series_div(a, b, m):
    """First m coefficients of the power series a(t)/b(t), b[0] != 0."""
    out = []
    a = list(a) + [0j] * m
    for k in range(m):
        ck = a[k]
        for j in range(k):
            ck -= out[j] * (b[k - j] if k - j < len(b) else 0j)
        out.append(ck / b[0])
    return out


def partial_fractions(r: RationalFunction) -> PartialFractionExpansion:
    """Partial fraction expansion by the limit method.

    The pole coefficients come from multiplying by (t-pole)^m and expanding
    about the pole (series division), which is the derivative-evaluation form
    of the classical limit procedure.
    """
    r = r.reduce()
    num, den = r.numerator, r.denominator
    if den.degree == 0:
        return PartialFractionExpansion(num * (1.0 / den.coeffs[0]), [])
    quot, rem = divmod(num, den)
    terms = []
    if not rem.is_zero(1e-300):
        rs = find_roots(den)
        for pole, m in rs.roots:
            # q(t) = den(t)/(t-pole)^m via repeated synthetic division
            q = list(den.coeffs)
            for _ in range(m):
                new = [0j] * (len(q) - 1)
                carry = q[-1]
                for k in range(len(q) - 2, -1, -1):
                    new[k] = carry
                    carry = q[k] + carry * pole
                q = new  # remainder (carry) is ~0 since pole is a root
            num_sh = rem.shifted(pole)
            den_sh = Polynomial(q).shifted(pole)
            cs = _series_div(num_sh, den_sh, m)
            for j, c in enumerate(cs):
                if abs(c) > 1e-300:
                    terms.append((pole, m - j, c))
    terms.sort(key=lambda t: (t[0].real, t[0].imag, -t[1]))
    return PartialFractionExpansion(polynomial_part=quot, terms=terms)


@dataclass
class RationalAntiderivative:
    """Closed-form antiderivative of a rational function.

    poly_part : Polynomial, antiderivative of the polynomial part
    log_terms : list of (pole, coefficient) meaning coefficient*log(t-pole)
    power_terms : list of (pole, exponent k>=1, coefficient) meaning
                  coefficient/(t-pole)^k
    """

    poly_part: Polynomial
    log_terms: list = field(default_factory=list)
    power_terms: list = field(default_factory=list)

    def __call__(self, z):
        v = self.poly_part(z)
        for pole, c in self.log_terms:
            v += c * cmath.log(z - pole)
        for pole, k, c in self.power_terms:
            v += c / (z - pole) ** k
        return v

    def derivative_value(self, z):
        v = self.poly_part.derivative()(z)
        for pole, c in self.log_terms:
            v += c / (z - pole)
        for pole, k, c in self.power_terms:
            v += -k * c / (z - pole) ** (k + 1)
        return v


def integrate_rational(r: RationalFunction) -> RationalAntiderivative:
    """Termwise antiderivative: polynomial part + c*log(t-pole) + negative powers."""
    pf = partial_fractions(r)
    logs = []
    powers = []
    for pole, k, c in pf.terms:
        if k == 1:
            logs.append((pole, c))
        else:
            powers.append((pole, k - 1, -c / (k - 1)))
    return RationalAntiderivative(
        poly_part=pf.polynomial_part.antiderivative(),
        log_terms=logs,
        power_terms=powers,
    )
