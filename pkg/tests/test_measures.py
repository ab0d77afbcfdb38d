from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from helpers import random_density, random_ket
from tribell import (
    DensityMatrix,
    DimensionMismatchError,
    Ket,
    bloch_observable,
    computational_kets,
    dephase,
    l1_coherence,
    pauli,
    product_basis,
    pure_density,
    random_settings,
    random_single_qubit_state,
    relative_entropy_coherence,
    skew_information,
    variance,
    von_neumann_entropy,
    w_state,
)


def _random_product_basis(seed: int):
    s = random_settings(seed)
    return product_basis(s.m_a1, s.m_b1, s.m_c1)


def plus_density() -> DensityMatrix:
    return DensityMatrix((np.eye(2) + pauli("x")) / 2.0)


def test_l1_known_values():
    comp8 = computational_kets(8)
    assert abs(l1_coherence(pure_density(w_state()), comp8) - 2.0) < 1e-12
    assert abs(l1_coherence(pure_density(comp8[0]), comp8)) < 1e-12
    assert abs(l1_coherence(plus_density(), computational_kets(2)) - 1.0) < 1e-12


def test_l1_accepts_all_basis_forms():
    rho = pure_density(w_state())
    basis = _random_product_basis(5)
    as_object = l1_coherence(rho, basis)
    as_kets = l1_coherence(rho, basis.kets)
    as_array = l1_coherence(rho, basis.unitary())
    assert abs(as_object - as_kets) < 1e-14
    assert abs(as_object - as_array) < 1e-14


def test_l1_range_over_random_states():
    rng = np.random.default_rng(10)
    for trial in range(1000):
        rho = random_density(rng, 8)
        value = l1_coherence(rho, _random_product_basis(trial % 50))
        assert -1e-12 <= value <= 7.0 + 1e-9


def test_l1_gauge_invariance():
    rng = np.random.default_rng(11)
    rho = random_density(rng, 8)
    for trial in range(200):
        u = _random_product_basis(trial).unitary()
        phases = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, size=8))
        base = l1_coherence(rho, u)
        rotated = l1_coherence(rho, u * phases)
        assert abs(base - rotated) <= 1e-10


def test_basis_validation():
    rho = pure_density(w_state())
    with pytest.raises(DimensionMismatchError):
        l1_coherence(rho, computational_kets(2))
    with pytest.raises(ValueError):
        l1_coherence(rho, np.ones((8, 8), dtype=complex))
    with pytest.raises(TypeError):
        l1_coherence(rho, ["not", "kets"])


def test_entropy_known_values():
    assert abs(von_neumann_entropy(pure_density(w_state()))) < 1e-12
    assert abs(von_neumann_entropy(DensityMatrix(np.eye(2) / 2.0)) - 1.0) < 1e-12
    assert abs(von_neumann_entropy(DensityMatrix(np.eye(8) / 8.0)) - 3.0) < 1e-12
    lam = np.array([0.5, 0.3, 0.2] + [0.0] * 5)
    rho = DensityMatrix(np.diag(lam).astype(complex))
    want = -sum(x * math.log2(x) for x in lam[:3])
    assert abs(von_neumann_entropy(rho) - want) < 1e-12


def test_dephase_diagonalizes_and_is_idempotent():
    rng = np.random.default_rng(12)
    rho = random_density(rng, 8)
    basis = _random_product_basis(3)
    u = basis.unitary()
    fixed = dephase(rho, basis)
    rep = u.conj().T @ fixed.matrix @ u
    off = rep - np.diag(np.diag(rep))
    assert float(np.max(np.abs(off))) < 1e-12
    np.testing.assert_allclose(dephase(fixed, basis).matrix, fixed.matrix, atol=1e-12)
    np.testing.assert_allclose(np.diag(rep).real, np.diag(u.conj().T @ rho.matrix @ u).real, atol=1e-12)


def test_dephase_plus_state_gives_maximally_mixed():
    got = dephase(plus_density(), computational_kets(2))
    np.testing.assert_allclose(got.matrix, np.eye(2) / 2.0, atol=1e-12)


def test_rel_ent_known_values():
    comp8 = computational_kets(8)
    assert abs(relative_entropy_coherence(pure_density(w_state()), comp8) - math.log2(3.0)) < 1e-12
    diag = DensityMatrix(np.diag([0.5, 0.5, 0, 0, 0, 0, 0, 0]).astype(complex))
    assert abs(relative_entropy_coherence(diag, comp8)) < 1e-12


def test_rel_ent_range_over_random_states():
    rng = np.random.default_rng(13)
    for trial in range(1000):
        rho = random_density(rng, 8)
        value = relative_entropy_coherence(rho, _random_product_basis(trial % 50))
        assert -1e-12 <= value <= 3.0 + 1e-9


def test_skew_known_diagonal_value():
    rho = DensityMatrix(np.diag([0.75, 0.25]).astype(complex))
    assert abs(skew_information(rho, pauli("x")) - (1.0 - math.sqrt(3.0) / 2.0)) < 1e-12
    assert abs(skew_information(rho, pauli("z"))) < 1e-14


def test_skew_equals_variance_for_pure_states():
    rng = np.random.default_rng(14)
    x = np.diag([3, 1, 1, -1, 1, -1, -1, -3]).astype(complex)
    for _ in range(100):
        rho = pure_density(random_ket(rng, 8))
        assert abs(skew_information(rho, x) - variance(rho, x)) < 1e-9


def test_skew_bounded_by_variance():
    rng = np.random.default_rng(15)
    for trial in range(1000):
        rho = random_density(rng, 2)
        ob = bloch_observable(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        skew = skew_information(rho, ob.matrix)
        assert skew >= 0.0
        assert skew <= variance(rho, ob.matrix) + 1e-9


def test_single_qubit_skew_capped_at_one():
    for trial in range(1000):
        rho = random_single_qubit_state(trial)
        rng = np.random.default_rng(10**6 + trial)
        ob = bloch_observable(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        assert skew_information(rho, ob.matrix) <= 1.0 + 1e-9


def test_skew_shift_invariance():
    rng = np.random.default_rng(16)
    x = np.diag([3, 1, 1, -1, 1, -1, -1, -3]).astype(complex)
    rho = random_density(rng, 8)
    for c in (-2.0, 0.5, 10.0):
        shifted = skew_information(rho, x + c * np.eye(8))
        assert abs(shifted - skew_information(rho, x)) < 1e-10


def test_variance_known_value():
    assert abs(variance(plus_density(), pauli("z")) - 1.0) < 1e-12
    assert abs(variance(plus_density(), pauli("x"))) < 1e-12


def test_observable_shape_checks():
    rho = pure_density(w_state())
    with pytest.raises(DimensionMismatchError):
        skew_information(rho, pauli("x"))
    with pytest.raises(DimensionMismatchError):
        variance(rho, pauli("x"))


@given(st.integers(0, 10**6))
def test_skew_never_exceeds_variance_random(seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, 8)
    x = np.diag(rng.uniform(-3.0, 3.0, size=8)).astype(complex)
    assert skew_information(rho, x) <= variance(rho, x) + 1e-9


@given(st.integers(0, 10**6))
def test_dephasing_never_lowers_entropy(seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, 8)
    basis = _random_product_basis(seed % 97)
    assert von_neumann_entropy(dephase(rho, basis)) >= von_neumann_entropy(rho) - 1e-10
