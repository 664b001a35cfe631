"""Exact rational generating functions of the multiplicity sequences.

Polynomials carry exact rational coefficients in ascending degree with no
trailing zeros (the zero polynomial has degree -1).  A RationalFunction is
kept in canonical form: numerator and denominator coprime, denominator with
integer coefficients of content 1 and positive leading coefficient, so
equality of canonical forms is equality of rational functions.

The generating function of one label's multiplicities is assembled from the
eventually periodic closed form: past the first few tensor powers the
multiplicity is deg/6 * (m - ceil((3m-1)/n)) plus data periodic in m of
periods n (the A part), 2n (the B part) and 3 (the Gamma part), which sums to
an explicit rational function; the finitely many initial powers where the
small-triangle branch applies are patched by a correction polynomial computed
against the true multiplicities.  Taylor coefficients of the result therefore
agree with decompose.multiplicity at every m >= 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .decompose import coeffs, multiplicity
from .group import IrrepLabel, irrep_degree, list_irreps


class Polynomial:
    """Dense polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_terms(cls, terms: dict[int, object]) -> "Polynomial":
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for d, c in terms.items():
            out[d] = c
        return cls(out)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls.from_terms({degree: coeff})

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d <= self.degree else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(k)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] - other[i] for i in range(k)])

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dd = other.degree
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            if rem[k]:
                q = rem[k] / lead
                quot[k - dd] = q
                for j, c in enumerate(other.coeffs):
                    rem[k - dd + j] -= q * c
        return Polynomial(quot), Polynomial(rem)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the rationals."""
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def _clear_denominators(p: Polynomial) -> tuple[Polynomial, int]:
    """Return (integer-coefficient polynomial, scale) with p * scale integral."""
    scale = 1
    for c in p.coeffs:
        scale = lcm(scale, c.denominator)
    return Polynomial([c * scale for c in p.coeffs]), scale


class RationalFunction:
    """Quotient of polynomials in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = Polynomial()
            self.den = Polynomial([1])
            return
        g = poly_gcd(num, den)
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        den_int, scale = _clear_denominators(den)
        num = num * scale
        content = 0
        for c in den_int.coeffs:
            content = gcd(content, c.numerator)
        if den_int.coeffs[-1] < 0:
            content = -content
        self.num = num * Fraction(1, content)
        self.den = den_int * Fraction(1, content)

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial([1]))

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls.from_poly(Polynomial())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rf_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def taylor(rf: RationalFunction, k: int) -> list[Fraction]:
    """First k+1 power-series coefficients at t = 0, by exact recurrence."""
    den = rf.den.coeffs
    if not den or den[0] == 0:
        raise ValueError("denominator vanishes at 0; not a power series there")
    d0 = Fraction(den[0])
    out: list[Fraction] = []
    for j in range(k + 1):
        acc = rf.num[j]
        for i in range(1, min(j, rf.den.degree) + 1):
            acc -= den[i] * out[j - i]
        out.append(acc / d0)
    return out


def _one_minus_tpow(k: int) -> Polynomial:
    return Polynomial.from_terms({0: 1, k: -1})


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def correction_polys(
    n: int, label: IrrepLabel
) -> tuple[Polynomial, Polynomial, Polynomial, RationalFunction]:
    """The four finite correction objects of the periodic tail.

    F collects the ceiling offsets over one period; G_A and G_B sample the A
    and B coefficients at the shifted arguments m+n and m+2n, which realizes
    the periodic extension to m = 0; the Gamma series is the closed rational
    form (t^nu - t^(nu+1)) / (1 - t^3), negated for the two-dimensional
    labels, and zero off the fully fixed block.
    """
    f_poly = Polynomial([_ceil_div(3 * m - 1, n) for m in range(n)])
    g_a = Polynomial([coeffs(n, m + n, label).A for m in range(n)])
    g_b = Polynomial([coeffs(n, m + 2 * n, label).B for m in range(2 * n)])
    if label.orbit_class == "fully_fixed":
        nu = 0 if label.kappa == 0 else (3 * label.kappa) // n
        num = Polynomial.from_terms({nu: 1, nu + 1: -1})
        if label.rho == "stan":
            num = -num
        g_gamma = RationalFunction(num, _one_minus_tpow(3))
    else:
        g_gamma = RationalFunction.zero()
    return f_poly, g_a, g_b, g_gamma


def _small_branch_cutoff(n: int) -> int:
    """Smallest m with m(n-3) >= n; tensor powers below it need patching."""
    return _ceil_div(n, n - 3)


@lru_cache(maxsize=None)
def isotypic_series(n: int, label: IrrepLabel) -> RationalFunction:
    """Generating function of m -> multiplicity(n, m, label), canonical form."""
    d = irrep_degree(label)
    f_poly, g_a, g_b, g_gamma = correction_polys(n, label)
    one = Polynomial([1])
    t = Polynomial.from_terms({1: 1})
    one_minus_t = _one_minus_tpow(1)

    linear = RationalFunction(t, one_minus_t * one_minus_t)
    ceil_part = RationalFunction(
        Polynomial.from_terms({n: 3}), one_minus_t * _one_minus_tpow(n)
    ) + RationalFunction(f_poly, _one_minus_tpow(n))
    a_part = RationalFunction(g_a, _one_minus_tpow(n))
    periodic = (
        Fraction(d, 6) * (linear - ceil_part + a_part)
        + Fraction(1, 2) * RationalFunction(g_b, _one_minus_tpow(2 * n))
        + Fraction(1, 3) * g_gamma
    )

    cutoff = _small_branch_cutoff(n)
    head = taylor(periodic, cutoff - 1)
    patch = Polynomial(
        [multiplicity(n, m, label) - head[m] for m in range(cutoff)]
    )
    return periodic + RationalFunction(patch, one)


def total_series(n: int, weighted: bool) -> RationalFunction:
    """Sum of the isotypic series, weighted by degree or plain."""
    total = RationalFunction.zero()
    for label in list_irreps(n):
        term = isotypic_series(n, label)
        if weighted:
            term = irrep_degree(label) * term
        total = total + term
    return total
