"""Characters of the group action on spaces of m-differentials.

W_m is the monomial span over the triangle E_{m(n-3)} and I_m the relation
subspace over E_{m(n-3)-n}; the space of holomorphic m-differentials is
W_m / I_m, so its character is the difference of the two traces.  Each trace
has a closed form per permutation part: a full double sum over the triangle
for pure translations, a single gated root power for the 3-cycles, and a
signed single sum over half the edge for the involutions.

Whenever the relation triangle is empty (m(n-3) - n < 0, in particular for
m = 1) every I_m value is an empty sum, i.e. zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import Cyclo, from_root_power_counts
from .group import GroupElement


@dataclass(frozen=True)
class DiffSpaceSpec:
    """The curve exponent n >= 4 and tensor power m >= 0."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError(f"need n >= 4, got {self.n}")
        if self.m < 0:
            raise ValueError(f"need m >= 0, got {self.m}")


def genus(n: int) -> int:
    return (n - 1) * (n - 2) // 2


def dim_Vm(spec: DiffSpaceSpec) -> int:
    """Dimension of the space of m-differentials."""
    n, m = spec.n, spec.m
    if m == 0:
        return 1
    if m == 1:
        return genus(n)
    return (2 * m - 1) * n * (n - 3) // 2


@lru_cache(maxsize=None)
def _shifted_residue_counts(n: int, m: int, M: int) -> tuple[tuple[int, ...], ...]:
    """counts[a][b] = #{(i,j) in E_M : i+m = a, j+m = b mod n}."""
    counts = [[0] * n for _ in range(n)]
    for i in range(M + 1):
        ia = (i + m) % n
        for j in range(M - i + 1):
            counts[ia][(j + m) % n] += 1
    return tuple(tuple(row) for row in counts)


def _translation_char(n: int, m: int, M: int, alpha: int, beta: int) -> Cyclo:
    if M < 0:
        return Cyclo.zero(n)
    counts = _shifted_residue_counts(n, m, M)
    exps = [0] * n
    for a in range(n):
        row = counts[a]
        aa = alpha * a
        for b in range(n):
            c = row[b]
            if c:
                exps[(aa + beta * b) % n] += c
    return from_root_power_counts(n, exps)


def _involution_char(n: int, m: int, M: int, coeff: int, sign: int) -> Cyclo:
    if M < 0:
        return Cyclo.zero(n)
    exps = [0] * n
    for i in range(M // 2 + 1):
        exps[(coeff * (i + m)) % n] += sign
    return from_root_power_counts(n, exps)


def _space_char(n: int, m: int, M: int, g: GroupElement, rotation_exp: int | None) -> Cyclo:
    """Shared evaluator for the W_m (M = m(n-3)) and I_m (M = m(n-3)-n) tables.

    rotation_exp is the exponent multiplying alpha+beta on the 3-cycle rows,
    or None when those rows vanish.
    """
    a, b, x = g.alpha, g.beta, g.perm
    if x == "1":
        return _translation_char(n, m, M, a, b)
    if x in ("s", "s2"):
        if M < 0 or rotation_exp is None:
            return Cyclo.zero(n)
        return from_root_power_counts(n, _single_power(n, (a + b) * rotation_exp))
    sign = -1 if m % 2 else 1
    if x == "t":
        return _involution_char(n, m, M, a - 2 * b, sign)
    if x == "ts":
        return _involution_char(n, m, M, a + b, sign)
    return _involution_char(n, m, M, b - 2 * a, sign)  # x == "st"


def _single_power(n: int, e: int) -> list[int]:
    exps = [0] * n
    exps[e % n] += 1
    return exps


def char_Wm(spec: DiffSpaceSpec, g: GroupElement) -> Cyclo:
    """Trace of g on W_m."""
    n, m = spec.n, spec.m
    if m < 1:
        raise ValueError("traces on W_m need m >= 1")
    M = m * (n - 3)
    if n % 3 == 0 or m % 3 == 0:
        assert (m * n) % 3 == 0
        rot = m * n // 3
    else:
        rot = None
    return _space_char(n, m, M, g, rot)


def char_Im(spec: DiffSpaceSpec, g: GroupElement) -> Cyclo:
    """Trace of g on I_m; identically zero when the relation triangle is empty."""
    n, m = spec.n, spec.m
    if m < 1:
        raise ValueError("traces on I_m need m >= 1")
    M = m * (n - 3) - n
    rot = n * (m - 1) // 3 if (n * (m - 1)) % 3 == 0 else None
    return _space_char(n, m, M, g, rot)


def char_Vm(spec: DiffSpaceSpec, g: GroupElement) -> Cyclo:
    """Trace of g on the space of m-differentials, W_m minus I_m."""
    return char_Wm(spec, g) - char_Im(spec, g)
