"""First-principles traces via the explicit monomial action on basis vectors.

Every group element permutes the monomial bases of W_m (indexed by the
triangle E_{m(n-3)}) and of I_m (indexed by E_{m(n-3)-n}) up to a scalar that
is a root of unity times a sign, so traces can be computed by enumerating
fixed basis vectors.  Nothing here touches the closed-form character tables
or the lattice-count formulas: this module exists to check them.

The permutation part acts first, then the translation part contributes the
scalar zeta^(alpha*(i+m) + beta*(j+m)) at the resulting index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import Cyclo, from_root_power_counts, root_power
from .group import GroupElement


@dataclass(frozen=True)
class BasisVector:
    """Monomial basis vector of W_m (kind "W") or I_m (kind "I") at (i, j)."""

    kind: str
    i: int
    j: int
    m: int

    def __post_init__(self) -> None:
        if self.kind not in ("W", "I"):
            raise ValueError(f"unknown kind {self.kind!r}")


@dataclass(frozen=True)
class MonomialAction:
    target: BasisVector
    scalar: Cyclo


def _triangle_bound(n: int, m: int, kind: str) -> int:
    M = m * (n - 3)
    return M if kind == "W" else M - n


@lru_cache(maxsize=None)
def basis(n: int, m: int, kind: str) -> tuple[BasisVector, ...]:
    """All basis vectors of the given space; empty when the triangle is empty."""
    M = _triangle_bound(n, m, kind)
    return tuple(
        BasisVector(kind, i, j, m) for i in range(M + 1) for j in range(M - i + 1)
    )


def _perm_image(n: int, m: int, kind: str, perm: str, i: int, j: int) -> tuple[int, int, int]:
    """Index image and sign of the permutation part acting on (i, j)."""
    M = m * (n - 3)
    drop = 0 if kind == "W" else n
    sign = -1 if (m % 2 and perm in ("t", "ts", "st")) else 1
    if perm == "1":
        return i, j, 1
    if perm == "s":
        return M - (i + j) - drop, i, 1
    if perm == "s2":
        return j, M - (i + j) - drop, 1
    if perm == "t":
        return M - (i + j) - drop, j, sign
    if perm == "ts":
        return j, i, sign
    if perm == "st":
        return i, M - (i + j) - drop, sign
    raise ValueError(f"unknown permutation {perm!r}")


def act(n: int, m: int, g: GroupElement, v: BasisVector) -> MonomialAction:
    """Image of v under g: a scalar times another basis vector of the same kind."""
    M = _triangle_bound(n, m, v.kind)
    if not (0 <= v.i and 0 <= v.j and v.i + v.j <= M):
        raise ValueError(f"{v} is not a basis vector for n={n}, m={m}")
    ii, jj, sign = _perm_image(n, m, v.kind, g.perm, v.i, v.j)
    scalar = sign * root_power(n, g.alpha * (ii + m) + g.beta * (jj + m))
    return MonomialAction(BasisVector(v.kind, ii, jj, m), scalar)


def trace_char(n: int, m: int, g: GroupElement, kind: str) -> Cyclo:
    """Trace of g on W_m, I_m, or their difference space ("V")."""
    if kind == "V":
        return trace_char(n, m, g, "W") - trace_char(n, m, g, "I")
    exps = [0] * n
    for v in basis(n, m, kind):
        ii, jj, sign = _perm_image(n, m, kind, g.perm, v.i, v.j)
        if ii == v.i and jj == v.j:
            exps[(g.alpha * (ii + m) + g.beta * (jj + m)) % n] += sign
    return from_root_power_counts(n, exps)
