"""Diagonal-reachability checks, proof identities, and the sweep harness."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightslab.gf2 import BitVec, Gf2Matrix, nullspace_basis, solve
from lightslab.theorem import (
    DENSITY_GRID,
    ORACLE_CAP,
    RngSpec,
    SizeLimitError,
    SymmetryError,
    brute_force_member,
    random_symmetric,
    sweep,
    verify_column_sum_identity,
    verify_diagonal_in_range,
    verify_nullspace_orthogonality,
)

from _naive import exhaustive_solutions


# -- RngSpec ------------------------------------------------------------------


def test_rngspec_validation():
    RngSpec(seed=0)
    RngSpec(seed=(1 << 64) - 1, density=1.0, diag_density=0.0)
    with pytest.raises(ValueError):
        RngSpec(seed=-1)
    with pytest.raises(ValueError):
        RngSpec(seed=1 << 64)
    with pytest.raises(ValueError):
        RngSpec(seed=0, density=1.5)
    with pytest.raises(ValueError):
        RngSpec(seed=0, diag_density=-0.1)


# -- random_symmetric ----------------------------------------------------------


def test_random_symmetric_empty():
    a = random_symmetric(0, RngSpec(seed=1))
    assert a.n_rows == 0 and a.n_cols == 0


def test_random_symmetric_forced_densities():
    spec = RngSpec(seed=7, density=0.0, diag_density=1.0)
    assert random_symmetric(3, spec) == Gf2Matrix.identity(3)
    spec = RngSpec(seed=7, density=1.0, diag_density=0.0)
    a = random_symmetric(3, spec)
    expected = Gf2Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert a == expected


def test_random_symmetric_is_symmetric_and_deterministic():
    spec = RngSpec(seed=123, density=0.5, diag_density=0.5)
    a = random_symmetric(16, spec)
    b = random_symmetric(16, spec)
    assert a == b
    assert a.is_symmetric()
    assert random_symmetric(16, RngSpec(seed=124)) != a


def test_random_symmetric_rejects_negative():
    with pytest.raises(ValueError):
        random_symmetric(-1, RngSpec(seed=0))


# -- verify_diagonal_in_range ----------------------------------------------------


def test_certificate_identity():
    cert = verify_diagonal_in_range(Gf2Matrix.identity(3))
    assert cert.witness.to01() == "111"
    assert cert.matrix_dim == 3 and cert.nullity == 0


def test_certificate_zero_diagonal():
    cert = verify_diagonal_in_range(Gf2Matrix([[0, 1], [1, 0]]))
    assert cert.witness.to01() == "00"


def test_certificate_rank_one():
    cert = verify_diagonal_in_range(Gf2Matrix([[1, 1], [1, 1]]))
    assert cert.witness.to01() == "10"
    assert cert.nullity == 1


def test_asymmetric_rejected():
    with pytest.raises(SymmetryError):
        verify_diagonal_in_range(Gf2Matrix([[0, 1], [0, 1]]))
    with pytest.raises(SymmetryError):
        verify_nullspace_orthogonality(Gf2Matrix([[0, 1], [0, 1]]))


def test_symmetry_necessity_counterexample():
    # rows [[0,1],[0,1]]: diagonal 01 is outside the range {00, 11}
    a = Gf2Matrix([[0, 1], [0, 1]])
    assert solve(a, a.diagonal()) is None
    assert not brute_force_member(a, a.diagonal())
    assert [tuple(x) for x in exhaustive_solutions([[0, 1], [0, 1]], [0, 1])] == []


# -- proof identities -------------------------------------------------------------


def test_orthogonality_trivial_cases():
    assert verify_nullspace_orthogonality(Gf2Matrix.identity(4))
    assert verify_nullspace_orthogonality(Gf2Matrix.zeros(3, 3))


def test_orthogonality_rank_one():
    assert verify_nullspace_orthogonality(Gf2Matrix([[1, 1], [1, 1]]))


def test_column_sum_identity_cases():
    assert verify_column_sum_identity(Gf2Matrix.zeros(3, 3), BitVec.ones(3))
    assert verify_column_sum_identity(
        Gf2Matrix([[1, 1], [1, 1]]), BitVec.from01("11")
    )
    assert verify_column_sum_identity(
        Gf2Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]]), BitVec.ones(3)
    )


def test_column_sum_identity_preconditions():
    a = Gf2Matrix.identity(2)
    with pytest.raises(ValueError):
        verify_column_sum_identity(a, BitVec.zeros(2))
    with pytest.raises(ValueError):
        verify_column_sum_identity(a, BitVec.from01("10"))
    with pytest.raises(SymmetryError):
        verify_column_sum_identity(Gf2Matrix([[0, 1], [0, 1]]), BitVec.ones(2))


# -- brute-force oracle ------------------------------------------------------------


def test_brute_force_basics():
    assert brute_force_member(Gf2Matrix.identity(2), BitVec.ones(2))
    assert not brute_force_member(Gf2Matrix.zeros(2, 2), BitVec.from01("01"))


def test_brute_force_cap():
    wide = Gf2Matrix.zeros(1, ORACLE_CAP + 1)
    with pytest.raises(SizeLimitError):
        brute_force_member(wide, BitVec.zeros(1))


def test_brute_force_mismatched_b():
    with pytest.raises(ValueError):
        brute_force_member(Gf2Matrix.zeros(2, 2), BitVec.zeros(3))


# -- sweep -------------------------------------------------------------------------


def test_sweep_small():
    report = sweep(1, 1, RngSpec(seed=5))
    assert report.total == 1 and report.failures == 0
    assert report.records[0].n == 1


def test_sweep_deterministic():
    a = sweep(4, 6, RngSpec(seed=9))
    b = sweep(4, 6, RngSpec(seed=9))
    assert a.records == b.records


def test_sweep_cycles_density_grid():
    report = sweep(2, len(DENSITY_GRID), RngSpec(seed=3))
    per_n = [
        (r.density, r.diag_density) for r in report.records if r.n == 2
    ]
    assert per_n == list(DENSITY_GRID)


def test_sweep_oracle_agreement():
    report = sweep(6, 9, RngSpec(seed=11), oracle_max=6)
    assert report.oracle_checked == 54
    assert report.oracle_disagreements == 0


def test_sweep_report_shapes():
    report = sweep(3, 4, RngSpec(seed=2))
    lines = report.machine_lines()
    assert len(lines) == 12
    assert all(
        line.startswith("n=") and " nullity=" in line and " ok=" in line
        for line in lines
    )
    summary = report.summary()
    assert "failures" in summary
    hist = report.nullity_histogram()
    assert sum(hist.values()) == 12


def test_sweep_argument_validation():
    with pytest.raises(ValueError):
        sweep(0, 1, RngSpec(seed=0))
    with pytest.raises(ValueError):
        sweep(1, 0, RngSpec(seed=0))


# -- properties ---------------------------------------------------------------------


@given(st.integers(0, 1 << 32), st.integers(1, 24))
@settings(max_examples=60)
def test_theorem_property(seed, n):
    spec = RngSpec(seed=seed, density=0.4, diag_density=0.6)
    a = random_symmetric(n, spec)
    cert = verify_diagonal_in_range(a)
    assert a.matvec(cert.witness) == a.diagonal()
    assert verify_nullspace_orthogonality(a)


@given(st.integers(0, 1 << 32), st.integers(1, 12))
@settings(max_examples=40)
def test_column_sum_identity_on_nullspace(seed, n):
    a = random_symmetric(n, RngSpec(seed=seed, density=0.5, diag_density=0.5))
    for v in nullspace_basis(a):
        assert verify_column_sum_identity(a, v)


@given(st.integers(0, 1 << 32), st.integers(1, 10), st.integers(0, 1023))
@settings(max_examples=60)
def test_oracle_equivalence_property(seed, n, b_bits):
    a = random_symmetric(n, RngSpec(seed=seed, density=0.5, diag_density=0.5))
    b = BitVec(n, b_bits & ((1 << n) - 1))
    assert (solve(a, b) is not None) == brute_force_member(a, b)
