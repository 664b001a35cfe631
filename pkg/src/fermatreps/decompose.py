"""Multiplicity of each irreducible inside the space of m-differentials.

The closed form assembles three correction coefficients per label:

- A averages the triangle-difference corrections alpha over the label's
  orbit (one value for fully fixed labels, three for diagonal, six for
  generic), so it is a fraction with denominator dividing 6;
- B is a signed half-edge count, nonzero only for triv/sgn labels;
- Gamma is the 3-cycle contribution, nonzero only for fully fixed labels,
  with its -1 case gated on the relation triangle being nonempty.

multiplicity() evaluates deg(theta)/6 * (m - ceil((3m-1)/n) + A) + B/2 +
Gamma/3 exactly and insists the result is a non-negative integer; any other
outcome is a bug, never rounded away.  multiplicity_oracle() recomputes the
same number as a full character inner product over all 6 n^2 group elements
in exact cyclotomic arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chars import DiffSpaceSpec, char_Vm, dim_Vm
from .cyclotomic import Cyclo
from .group import (
    GroupElement,
    IrrepLabel,
    elements,
    group_order,
    irrep_character,
    irrep_degree,
    list_irreps,
)
from .lattice import J_diff, alpha

DEFAULT_ORACLE_BOUND = 9


@dataclass(frozen=True)
class CoefficientBundle:
    A: Fraction
    B: int
    Gamma: int


@dataclass(frozen=True)
class MultiplicityTable:
    """Multiplicities of every irreducible label inside one graded piece."""

    n: int
    m: int
    entries: tuple[tuple[IrrepLabel, int], ...]

    def __post_init__(self) -> None:
        total = sum(irrep_degree(label) * mult for label, mult in self.entries)
        expected = dim_Vm(DiffSpaceSpec(self.n, self.m))
        if total != expected:
            raise ValueError(
                f"degree-weighted multiplicities sum to {total}, expected {expected}"
            )

    def as_dict(self) -> dict[IrrepLabel, int]:
        return dict(self.entries)


def _alpha_pairs(m: int, label: IrrepLabel) -> list[tuple[int, int]]:
    k, l = label.kappa, label.lam
    if label.orbit_class == "fully_fixed":
        return [(m - k, m - k)]
    if label.orbit_class == "diagonal":
        return [(m - k, m - k), (m - k, m + 2 * k), (m + 2 * k, m - k)]
    return [
        (m - k, m - l),
        (m - l, m - k),
        (m - k, m + k + l),
        (m + k + l, m - k),
        (m - l, m + k + l),
        (m + k + l, m - l),
    ]


def coeffs(n: int, m: int, label: IrrepLabel) -> CoefficientBundle:
    """The (A, B, Gamma) bundle for one label at tensor power m >= 1."""
    if m < 1:
        raise ValueError("coefficients are defined for m >= 1")
    pairs = _alpha_pairs(m, label)
    a_val = Fraction(sum(alpha(n, m, X, Y) for X, Y in pairs), len(pairs))

    if label.orbit_class == "generic" or label.rho == "stan":
        b_val = 0
    else:
        j = J_diff(n, m, m - label.kappa)
        b_val = j if (m % 2 == 0) == (label.rho == "triv") else -j

    gamma = 0
    if label.orbit_class == "fully_fixed":
        nu = 0 if label.kappa == 0 else (3 * label.kappa) // n
        if (m - nu) % 3 == 0:
            gamma = 1
        elif (m - nu + 2) % 3 == 0 and m * (n - 3) >= n:
            gamma = -1
        if label.rho == "stan":
            gamma = -gamma
    return CoefficientBundle(a_val, b_val, gamma)


def multiplicity(n: int, m: int, label: IrrepLabel) -> int:
    """Closed-form multiplicity of the label inside the m-differentials."""
    if m == 0:
        return 1 if (label.orbit_class == "fully_fixed" and label.kappa == 0 and label.rho == "triv") else 0
    bundle = coeffs(n, m, label)
    base = m - (-((1 - 3 * m) // n))  # m - ceil((3m-1)/n)
    value = (
        Fraction(irrep_degree(label), 6) * (base + bundle.A)
        + Fraction(bundle.B, 2)
        + Fraction(bundle.Gamma, 3)
    )
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(
            f"multiplicity for {label} at n={n}, m={m} came out {value}; "
            "branch logic is broken"
        )
    return int(value)


def decompose_table(n: int, m_range) -> list[MultiplicityTable]:
    """One multiplicity table per m, labels in catalog order."""
    labels = list_irreps(n)
    return [
        MultiplicityTable(n, m, tuple((lab, multiplicity(n, m, lab)) for lab in labels))
        for m in m_range
    ]


@lru_cache(maxsize=None)
def _char_vm_values(n: int, m: int) -> dict[GroupElement, Cyclo]:
    spec = DiffSpaceSpec(n, m)
    return {g: char_Vm(spec, g) for g in elements(n)}


@lru_cache(maxsize=None)
def _irrep_conj_support(n: int, label: IrrepLabel) -> dict[GroupElement, Cyclo]:
    """Conjugated character values, restricted to elements where they are nonzero."""
    out = {}
    for g in elements(n):
        value = irrep_character(n, label, g)
        if not value.is_zero:
            out[g] = value.conj()
    return out


def multiplicity_oracle(
    n: int, m: int, label: IrrepLabel, oracle_bound: int = DEFAULT_ORACLE_BOUND
) -> int:
    """Brute-force inner product of the m-differential character with the label's.

    Sums char_Vm(g) * conj(char_label(g)) over all 6 n^2 elements in exact
    cyclotomic arithmetic and divides by the group order, insisting on an
    integer quotient.
    """
    if n > oracle_bound:
        raise ValueError(f"n={n} exceeds the oracle bound {oracle_bound}")
    if m < 1:
        raise ValueError("the inner-product oracle needs m >= 1")
    vm = _char_vm_values(n, m)
    total = Cyclo.zero(n)
    for g, conj_val in _irrep_conj_support(n, label).items():
        v = vm[g]
        if not v.is_zero:
            total = total + v * conj_val
    as_int = total.as_integer()
    if as_int is None:
        raise ArithmeticError(f"inner product is not rational: {total}")
    order = group_order(n)
    if as_int % order != 0:
        raise ArithmeticError(f"inner product {as_int} is not divisible by {order}")
    return as_int // order
