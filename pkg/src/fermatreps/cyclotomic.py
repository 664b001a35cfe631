"""Exact arithmetic in the ring of cyclotomic integers Z[zeta_n].

An element is stored by its coefficient vector in the power basis
1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic
polynomial Phi_n.  Reducing modulo Phi_n (rather than x^n - 1) makes the
representation canonical: two values are equal in the ring exactly when
their coefficient tuples coincide, so equality tests are exact.  All
coefficients are plain Python integers and never overflow.

Polynomials are coefficient lists in ascending degree throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num: list[int], div: list[int]) -> tuple[list[int], list[int]]:
    """Divide by a monic integer polynomial; quotient and remainder are integral."""
    assert div and div[-1] == 1
    rem = list(num)
    dd = len(div) - 1
    quot = [0] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(div):
                rem[k - dd + j] -= c * dj
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


@dataclass(frozen=True)
class CycloPolyBasis:
    """Reduction modulus for Z[zeta_n]: the order n and Phi_n (ascending, monic)."""

    n: int
    phi_n: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.phi_n) - 1


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> CycloPolyBasis:
    """Compute Phi_n by exact division of x^n - 1 by Phi_d over proper divisors d."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            quot, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d).phi_n))
            assert not rem, f"Phi_{d} must divide exactly"
            poly = quot
    return CycloPolyBasis(n, tuple(poly))


@lru_cache(maxsize=None)
def _power_residues(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta^k as a reduced coefficient tuple, for k = 0 .. n-1."""
    basis = cyclotomic_polynomial(n)
    deg = basis.degree
    out = []
    for k in range(n):
        mono = [0] * k + [1]
        _, rem = _poly_divmod_monic(mono, list(basis.phi_n))
        rem += [0] * (deg - len(rem))
        out.append(tuple(rem))
    return tuple(out)


@dataclass(frozen=True)
class Cyclo:
    """A cyclotomic integer: coefficient tuple of length phi(n), reduced mod Phi_n."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        deg = cyclotomic_polynomial(self.n).degree
        if len(self.coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for n={self.n}, got {len(self.coeffs)}")

    @classmethod
    def from_int(cls, n: int, value: int) -> "Cyclo":
        deg = cyclotomic_polynomial(n).degree
        return cls(n, (value,) + (0,) * (deg - 1))

    @classmethod
    def zero(cls, n: int) -> "Cyclo":
        return cls.from_int(n, 0)

    @classmethod
    def one(cls, n: int) -> "Cyclo":
        return cls.from_int(n, 1)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check_same_order(self, other: "Cyclo") -> None:
        if self.n != other.n:
            raise ValueError(f"mixed root orders {self.n} and {other.n}")

    def __add__(self, other: "Cyclo") -> "Cyclo":
        self._check_same_order(other)
        return Cyclo(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyclo") -> "Cyclo":
        self._check_same_order(other)
        return Cyclo(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo(self.n, tuple(a * other for a in self.coeffs))
        self._check_same_order(other)
        prod = _poly_mul(list(self.coeffs), list(other.coeffs))
        return _from_poly(self.n, prod)

    __rmul__ = __mul__

    def conj(self) -> "Cyclo":
        """Complex conjugation, zeta -> zeta^(-1)."""
        powers = _power_residues(self.n)
        deg = cyclotomic_polynomial(self.n).degree
        acc = [0] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                for idx, p in enumerate(powers[(-k) % self.n]):
                    acc[idx] += c * p
        return Cyclo(self.n, tuple(acc))

    def as_integer(self) -> int | None:
        """The rational integer this value equals, or None if it is not one."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"Cyclo(n={self.n}, {list(self.coeffs)})"


def _from_poly(n: int, poly: list[int]) -> Cyclo:
    basis = cyclotomic_polynomial(n)
    _, rem = _poly_divmod_monic(poly, list(basis.phi_n))
    rem += [0] * (basis.degree - len(rem))
    return Cyclo(n, tuple(rem))


def root_power(n: int, k: int) -> Cyclo:
    """zeta_n^k, reduced."""
    return Cyclo(n, _power_residues(n)[k % n])


def from_root_power_counts(n: int, counts) -> Cyclo:
    """Sum of counts[e] * zeta^e over e = 0 .. n-1 (counts may be any int sequence)."""
    deg = cyclotomic_polynomial(n).degree
    powers = _power_residues(n)
    acc = [0] * deg
    for e, c in enumerate(counts):
        if c:
            for idx, p in enumerate(powers[e]):
                acc[idx] += c * p
    return Cyclo(n, tuple(acc))
