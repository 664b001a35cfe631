from fractions import Fraction

import pytest

from fermatreps.chars import DiffSpaceSpec, dim_Vm
from fermatreps.decompose import (
    MultiplicityTable,
    coeffs,
    decompose_table,
    multiplicity,
    multiplicity_oracle,
)
from fermatreps.group import IrrepLabel, irrep_degree, list_irreps

from table1_data import expected_dim, expected_multiplicities


def _label(n, kappa, lam, rho):
    for label in list_irreps(n):
        if (label.kappa, label.lam, label.rho) == (kappa, lam, rho):
            return label
    raise LookupError((n, kappa, lam, rho))


def test_coeffs_generic_has_no_b_or_gamma():
    for n, m in ((5, 2), (6, 3), (8, 4)):
        for label in list_irreps(n):
            if label.orbit_class == "generic":
                bundle = coeffs(n, m, label)
                assert bundle.B == 0 and bundle.Gamma == 0
            if label.orbit_class == "diagonal":
                assert coeffs(n, m, label).Gamma == 0


def test_coeffs_gamma_cases():
    assert coeffs(6, 6, _label(6, 0, 0, "triv")).Gamma == 1
    # the -1 case is gated on a nonempty relation triangle
    assert coeffs(4, 1, _label(4, 0, 0, "triv")).Gamma == 0
    assert coeffs(4, 4, _label(4, 0, 0, "triv")).Gamma == -1
    # stan labels carry the opposite sign
    assert coeffs(6, 6, _label(6, 0, 0, "stan")).Gamma == -1


def test_coeffs_a_is_orbit_average():
    bundle = coeffs(6, 2, _label(6, 1, 1, "triv"))
    assert bundle.A.denominator in (1, 3)
    bundle = coeffs(6, 2, _label(6, 0, 1, "triv"))
    assert bundle.A.denominator in (1, 2, 3, 6)
    assert isinstance(bundle.A, Fraction)


def test_multiplicity_examples():
    # first power: a single degree-3 constituent for n=4
    for label in list_irreps(4):
        expected = 1 if (label.kappa, label.lam, label.rho) == (1, 1, "sgn") else 0
        assert multiplicity(4, 1, label) == expected
    # n=6, m=1 decomposes as 1 + 3 + 6 = 10
    nonzero = {
        (l.kappa, l.lam, l.rho): multiplicity(6, 1, l)
        for l in list_irreps(6)
        if multiplicity(6, 1, l)
    }
    assert nonzero == {(2, 2, "sgn"): 1, (1, 1, "sgn"): 1, (1, 2, "triv"): 1}
    # the published sixth-power decomposition for n=4
    expected6 = {
        (0, 0, "triv"): 1,
        (1, 1, "triv"): 1,
        (2, 2, "triv"): 1,
        (3, 3, "triv"): 1,
        (2, 2, "sgn"): 1,
        (3, 3, "sgn"): 1,
        (0, 1, "triv"): 1,
    }
    got = {
        (l.kappa, l.lam, l.rho): multiplicity(4, 6, l)
        for l in list_irreps(4)
        if multiplicity(4, 6, l)
    }
    assert got == expected6


def test_m_zero_is_the_trivial_class():
    for n in (4, 5, 6):
        for label in list_irreps(n):
            expected = 1 if (label.kappa, label.lam, label.rho) == (0, 0, "triv") else 0
            assert multiplicity(n, 0, label) == expected


def test_decompose_table_examples():
    tables = decompose_table(5, [4])
    assert isinstance(tables[0], MultiplicityTable)
    assert sum(irrep_degree(l) * v for l, v in tables[0].entries) == 35
    t9 = decompose_table(6, [9])[0].as_dict()
    generic = {
        (l.kappa, l.lam): v for l, v in t9.items() if l.orbit_class == "generic"
    }
    assert generic == {(0, 1): 4, (0, 2): 4, (1, 2): 4, (3, 4): 5}
    t0 = decompose_table(4, [0])[0]
    assert [(l.rho, v) for l, v in t0.entries if v] == [("triv", 1)]


def test_table_rejects_inconsistent_entries():
    labels = list_irreps(4)
    bad = tuple((l, 0) for l in labels)
    with pytest.raises(ValueError):
        MultiplicityTable(4, 1, bad)


@pytest.mark.parametrize("n", range(4, 13))
def test_dimension_sum(n):
    labels = list_irreps(n)
    for m in range(0, 21):
        total = sum(irrep_degree(l) * multiplicity(n, m, l) for l in labels)
        assert total == dim_Vm(DiffSpaceSpec(n, m)), (n, m)


@pytest.mark.parametrize("n,m", [(4, 1), (4, 2), (5, 2), (6, 1), (6, 3)])
def test_closed_form_matches_oracle_small(n, m):
    for label in list_irreps(n):
        assert multiplicity(n, m, label) == multiplicity_oracle(n, m, label), (n, m, label)


def test_oracle_spot_values():
    assert multiplicity_oracle(4, 1, _label(4, 0, 0, "triv")) == 0
    assert multiplicity_oracle(6, 3, _label(6, 0, 0, "sgn")) == 1


def test_oracle_bound_enforced():
    with pytest.raises(ValueError):
        multiplicity_oracle(10, 1, _label(10, 0, 0, "triv"))


def test_against_golden_rows_spot():
    for n, m in ((4, 9), (5, 11), (6, 7)):
        expected = expected_multiplicities(n, m)
        for label in list_irreps(n):
            key = (label.kappa, label.lam, label.rho)
            assert multiplicity(n, m, label) == expected.get(key, 0), (n, m, key)
        assert dim_Vm(DiffSpaceSpec(n, m)) == expected_dim(n, m)
