"""The automorphism group (Z/n x Z/n) semidirect S3 and its irreducible characters.

Every element is written uniquely as a translation part sigma_{alpha,beta}
followed by a permutation part x in S3 = {1, s, s2, t, ts, st}, where s has
order 3, t order 2 and t*s*t = s^2.  Multiplication pulls the right factor's
translation part through the left factor's permutation part, so products stay
in that normal form.

Irreducibles are labelled by a pair (kappa, lambda) of residues mod n together
with an S3-side representation; the catalog splits into three orbit classes:

- fully_fixed: kappa = lambda = nu*n/3 (nu > 0 only when 3 | n), carrying
  triv/sgn (degree 1) or stan (degree 2);
- diagonal: kappa = lambda outside the fully fixed values, carrying triv/sgn
  (degree 3);
- generic: size-six orbits of (kappa, lambda), degree 6, one label per orbit
  at the lexicographically smallest orbit member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .cyclotomic import Cyclo, root_power

S3_ELEMENTS = ("1", "s", "s2", "t", "ts", "st")

# normal form s^i t^e
_ROTFLIP = {"1": (0, 0), "s": (1, 0), "s2": (2, 0), "t": (0, 1), "st": (1, 1), "ts": (2, 1)}
_FROM_ROTFLIP = {v: k for k, v in _ROTFLIP.items()}

S3_CHAR = {
    "triv": {"1": 1, "s": 1, "s2": 1, "t": 1, "ts": 1, "st": 1},
    "sgn": {"1": 1, "s": 1, "s2": 1, "t": -1, "ts": -1, "st": -1},
    "stan": {"1": 2, "s": -1, "s2": -1, "t": 0, "ts": 0, "st": 0},
}

# (a, b) -> x^(-1) sigma_{a,b} x, one linear map per x
_CONJ_BY_INVERSE = {
    "1": lambda a, b: (a, b),
    "s": lambda a, b: (b - a, -a),
    "s2": lambda a, b: (-b, a - b),
    "t": lambda a, b: (-a, b - a),
    "ts": lambda a, b: (b, a),
    "st": lambda a, b: (a - b, -b),
}


def s3_mul(x: str, y: str) -> str:
    i, e = _ROTFLIP[x]
    j, f = _ROTFLIP[y]
    rot = (i + j) % 3 if e == 0 else (i - j) % 3
    return _FROM_ROTFLIP[(rot, (e + f) % 2)]


def s3_inv(x: str) -> str:
    i, e = _ROTFLIP[x]
    return _FROM_ROTFLIP[((-i) % 3 if e == 0 else i, e)]


def s3_action_on_character(g: str, kappa: int, lam: int, n: int) -> tuple[int, int]:
    """Image (kappa', lambda') of the character (kappa, lambda) under g."""
    if g == "1":
        pair = (kappa, lam)
    elif g == "s":
        pair = (-kappa - lam, kappa)
    elif g == "s2":
        pair = (lam, -kappa - lam)
    elif g == "t":
        pair = (-kappa - lam, lam)
    elif g == "ts":
        pair = (lam, kappa)
    elif g == "st":
        pair = (kappa, -kappa - lam)
    else:
        raise ValueError(f"unknown permutation {g!r}")
    return (pair[0] % n, pair[1] % n)


@dataclass(frozen=True)
class GroupElement:
    """sigma_{alpha,beta} * perm, with alpha, beta residues mod n."""

    n: int
    alpha: int
    beta: int
    perm: str

    def __post_init__(self) -> None:
        if self.perm not in _ROTFLIP:
            raise ValueError(f"unknown permutation {self.perm!r}")
        if not (0 <= self.alpha < self.n and 0 <= self.beta < self.n):
            raise ValueError("translation part must be reduced mod n")


def identity(n: int) -> GroupElement:
    return GroupElement(n, 0, 0, "1")


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.n != h.n:
        raise ValueError("mixed moduli")
    # g.perm * sigma_{h.alpha,h.beta} = sigma_{c,d} * g.perm
    c, d = _CONJ_BY_INVERSE[s3_inv(g.perm)](h.alpha, h.beta)
    return GroupElement(g.n, (g.alpha + c) % g.n, (g.beta + d) % g.n, s3_mul(g.perm, h.perm))


def inverse(g: GroupElement) -> GroupElement:
    x_inv = s3_inv(g.perm)
    c, d = _CONJ_BY_INVERSE[g.perm](-g.alpha, -g.beta)
    return GroupElement(g.n, c % g.n, d % g.n, x_inv)


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """h^(-1) g h."""
    return mul(mul(inverse(h), g), h)


def elements(n: int) -> Iterator[GroupElement]:
    """All 6 n^2 elements, in a fixed deterministic order."""
    for perm in S3_ELEMENTS:
        for alpha in range(n):
            for beta in range(n):
                yield GroupElement(n, alpha, beta, perm)


def group_order(n: int) -> int:
    return 6 * n * n


@dataclass(frozen=True)
class IrrepLabel:
    """One isomorphism class of irreducibles: theta_{kappa,lambda,rho}."""

    kappa: int
    lam: int
    rho: str
    orbit_class: str

    def __post_init__(self) -> None:
        if self.rho not in ("triv", "sgn", "stan"):
            raise ValueError(f"unknown rho {self.rho!r}")
        if self.orbit_class not in ("fully_fixed", "diagonal", "generic"):
            raise ValueError(f"unknown orbit class {self.orbit_class!r}")


def irrep_degree(label: IrrepLabel) -> int:
    if label.orbit_class == "fully_fixed":
        return 2 if label.rho == "stan" else 1
    if label.orbit_class == "diagonal":
        return 3
    return 6


def _fully_fixed_kappas(n: int) -> list[int]:
    return [0] + ([n // 3, 2 * n // 3] if n % 3 == 0 else [])


def character_orbit(n: int, kappa: int, lam: int) -> list[tuple[int, int]]:
    """The six (not necessarily distinct) images of (kappa, lambda) under S3."""
    return [s3_action_on_character(g, kappa, lam, n) for g in S3_ELEMENTS]


def _is_generic(n: int, kappa: int, lam: int) -> bool:
    return kappa != lam and lam != (-2 * kappa) % n and kappa != (-2 * lam) % n


@lru_cache(maxsize=None)
def list_irreps(n: int) -> tuple[IrrepLabel, ...]:
    """All irreducible labels for order n, one per isomorphism class, sorted.

    Order: fully fixed labels by kappa then triv < sgn < stan, diagonal labels
    by kappa then triv < sgn, generic labels by their canonical (lexicographic
    minimum) orbit representative.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    fixed = _fully_fixed_kappas(n)
    labels: list[IrrepLabel] = []
    for k in fixed:
        for rho in ("triv", "sgn", "stan"):
            labels.append(IrrepLabel(k, k, rho, "fully_fixed"))
    for k in range(n):
        if k not in fixed:
            for rho in ("triv", "sgn"):
                labels.append(IrrepLabel(k, k, rho, "diagonal"))
    generic_reps = set()
    for kappa in range(n):
        for lam in range(n):
            if _is_generic(n, kappa, lam):
                generic_reps.add(min(character_orbit(n, kappa, lam)))
    for kappa, lam in sorted(generic_reps):
        labels.append(IrrepLabel(kappa, lam, "triv", "generic"))
    return tuple(labels)


def irrep_character(n: int, label: IrrepLabel, g: GroupElement) -> Cyclo:
    """Exact character value of theta_{kappa,lambda,rho} at g."""
    a, b, x = g.alpha, g.beta, g.perm
    if label.orbit_class == "fully_fixed":
        scalar = S3_CHAR[label.rho][x]
        if scalar == 0:
            return Cyclo.zero(n)
        return scalar * root_power(n, label.kappa * (a + b))
    if label.orbit_class == "diagonal":
        k = label.kappa
        if x in ("s", "s2"):
            return Cyclo.zero(n)
        if x == "1":
            return (
                root_power(n, k * (a + b))
                + root_power(n, k * (a - 2 * b))
                + root_power(n, k * (b - 2 * a))
            )
        sign = S3_CHAR[label.rho][x]
        if x == "ts":
            return sign * root_power(n, k * (a + b))
        if x == "t":
            return sign * root_power(n, k * (a - 2 * b))
        return sign * root_power(n, k * (b - 2 * a))  # x == "st"
    # generic
    if x != "1":
        return Cyclo.zero(n)
    total = Cyclo.zero(n)
    for kp, lp in character_orbit(n, label.kappa, label.lam):
        total = total + root_power(n, kp * a + lp * b)
    return total
