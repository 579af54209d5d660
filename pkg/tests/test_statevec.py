"""Simulator substrate tests: gates, measurement, discards, phase comparison."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entnet import statevec as sv
from entnet.errors import (
    EntangledSiteError,
    InternalError,
    InvalidGateError,
    InvalidInputError,
)

RNG = lambda seed=0: np.random.default_rng(seed)

INV_SQRT2 = 1 / np.sqrt(2)


def test_basis_state_qubit():
    reg = sv.basis_state([2], [0])
    assert np.allclose(reg.amps, [1, 0])


def test_basis_state_two_qubits():
    reg = sv.basis_state([2, 2], [1, 1])
    assert np.allclose(reg.amps, [0, 0, 0, 1])


def test_basis_state_qutrit():
    reg = sv.basis_state([3], [2])
    assert np.allclose(reg.amps, [0, 0, 1])


def test_basis_state_label_out_of_range():
    with pytest.raises(InvalidInputError):
        sv.basis_state([2], [2])
    with pytest.raises(InvalidInputError):
        sv.basis_state([2, 2], [0])


def test_hadamard_on_zero():
    reg = sv.apply(sv.basis_state([2], [0]), sv.h(0))
    assert np.allclose(reg.amps, [INV_SQRT2, INV_SQRT2])


def test_cnot_truth_table():
    plus0 = sv.apply(sv.basis_state([2, 2], [0, 0]), sv.h(0))
    bell = sv.apply(plus0, sv.cnot(0, 1))
    assert np.allclose(bell.amps, [INV_SQRT2, 0, 0, INV_SQRT2])


def test_pauli_z_flips_phase():
    plus = sv.apply(sv.basis_state([2], [0]), sv.h(0))
    minus = sv.apply(plus, sv.z(0))
    assert np.allclose(minus.amps, [INV_SQRT2, -INV_SQRT2])


def test_non_unitary_custom_rejected():
    bad = sv.custom(np.array([[1, 1], [0, 1]]), [0])
    with pytest.raises(InvalidGateError):
        sv.apply(sv.basis_state([2], [0]), bad)


def test_gate_shape_mismatch_rejected():
    with pytest.raises(InvalidGateError):
        sv.apply(sv.basis_state([3], [0]), sv.x(0))


def test_measure_deterministic_zero():
    out, reg = sv.measure(sv.basis_state([2], [0]), 0, RNG())
    assert out.value == 0
    assert np.allclose(reg.amps, [1, 0])


def test_measure_ghz_collapses_remainder():
    ghz = sv.cat_state(3)
    out, reg = sv.measure(ghz, 0, RNG(3))
    rest = sv.discard_site(reg, 0)
    expect = sv.basis_state([2, 2], [out.value, out.value])
    assert sv.equal_up_to_global_phase(rest, expect)


def test_measurement_statistics_ghz():
    # outcome-0 frequency over 10k seeded trials within [0.47, 0.53]
    ghz = sv.cat_state(3)
    rng = RNG(12345)
    zeros = sum(sv.measure(ghz, 0, rng)[0].value == 0 for _ in range(10_000))
    assert 0.47 <= zeros / 10_000 <= 0.53


def hadamard_all_support(n):
    # independent oracle: expand H^{(x)n} (|0..0>+|1..1>)/sqrt2 term by term
    reg = sv.cat_state(n)
    for i in range(n):
        reg = sv.apply(reg, sv.h(i))
    return sv.support(reg)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_diagonal_parity_support(n):
    # only even-parity terms survive in the rotated CAT state
    for labels, _amp in hadamard_all_support(n):
        assert sum(labels) % 2 == 0


def test_diagonal_measurement_parity_always_even():
    rng = RNG(7)
    for _ in range(200):
        reg = sv.cat_state(3)
        values = []
        for site in (0, 1, 2):
            out, reg = sv.measure(reg, site, rng, basis="diagonal")
            values.append(out.value)
        assert sum(values) % 2 == 0


def test_diagonal_basis_rejected_for_qutrit():
    with pytest.raises(InvalidInputError):
        sv.measure(sv.basis_state([3], [0]), 0, RNG(), basis="diagonal")


def test_diagonal_post_state_is_eigenstate():
    plus = sv.apply(sv.basis_state([2], [0]), sv.h(0))
    out, reg = sv.measure(plus, 0, RNG(0), basis="diagonal")
    assert out.value == 0
    assert sv.equal_up_to_global_phase(reg, plus)


def test_collapse_zero_norm_branch_is_internal_error():
    with pytest.raises(InternalError):
        sv.collapse(sv.basis_state([2], [0]), 0, 1)


def test_equal_up_to_global_phase_on_sign_flip():
    ghz = sv.cat_state(3)
    flipped = sv.Register(ghz.dims, -ghz.amps)
    assert sv.equal_up_to_global_phase(ghz, flipped)


def test_equal_up_to_global_phase_distinct_states():
    assert not sv.equal_up_to_global_phase(sv.basis_state([2], [0]), sv.basis_state([2], [1]))
    plus = sv.apply(sv.basis_state([2], [0]), sv.h(0))
    assert not sv.equal_up_to_global_phase(plus, sv.basis_state([2], [0]))


def test_tensor_product():
    reg = sv.tensor(sv.basis_state([2], [0]), sv.basis_state([2], [1]))
    assert reg.dims == (2, 2)
    assert np.allclose(reg.amps, [0, 1, 0, 0])


def test_discard_product_factor():
    # (|000> + |110>)/sqrt2: site 2 is a pure |0> factor
    amps = np.zeros(8, dtype=complex)
    amps[0b000] = INV_SQRT2
    amps[0b110] = INV_SQRT2
    reg = sv.Register((2, 2, 2), amps)
    rest = sv.discard_site(reg, 2)
    assert sv.equal_up_to_global_phase(rest, sv.cat_state(2))


def test_discard_entangled_site_rejected():
    with pytest.raises(EntangledSiteError):
        sv.discard_site(sv.cat_state(3), 0)


def test_discard_joint_pair():
    pair = sv.tensor(sv.basis_state([2], [1]), sv.cat_state(2))
    rest = sv.discard_sites(pair, (1, 2))
    assert sv.equal_up_to_global_phase(rest, sv.basis_state([2], [1]))


def test_qutrit_permutation_gate():
    reg = sv.apply(sv.basis_state([3], [1]), sv.qutrit_permutation(0, [0, 2, 1]))
    assert np.allclose(reg.amps, [0, 0, 1])


def test_partial_swap_is_unitary_and_swaps_at_pi_half():
    a = sv.tensor(sv.basis_state([2], [1]), sv.basis_state([2], [0]))
    swapped = sv.apply(a, sv.partial_swap(0, 1, np.pi / 2))
    assert sv.equal_up_to_global_phase(swapped, sv.basis_state([2, 2], [0, 1]))


def test_state_dimension_cap():
    with pytest.raises(InvalidInputError):
        sv.basis_state([2] * 23, [0] * 23)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**8 - 1), st.permutations(list(range(4))))
def test_norm_preserved_by_random_circuits(bits, order):
    reg = sv.basis_state([2, 2, 2], [bits & 1, (bits >> 1) & 1, (bits >> 2) & 1])
    gates = [sv.h(0), sv.cnot(0, 1), sv.y(2), sv.cnot(1, 2)]
    for k in order:
        reg = sv.apply(reg, gates[k])
    assert abs(np.linalg.norm(reg.amps) - 1.0) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 2 * np.pi, allow_nan=False))
def test_global_phase_equivalence_property(theta):
    reg = sv.cat_state(2)
    rotated = sv.Register(reg.dims, np.exp(1j * theta) * reg.amps)
    assert sv.equal_up_to_global_phase(reg, rotated, tol=1e-9)
