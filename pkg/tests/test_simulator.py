import numpy as np
import pytest

from helpers import rand_qubit_circuit, reference_circuit, reference_mapping
from quditlift import circuits as ir
from quditlift.circuits import (
    CtrlEmbedded,
    Local1D,
    QubitCircuit,
    QuditCircuit,
    array_to_matrix,
    qubit_unitary,
    qudit_unitary,
)
from quditlift.errors import CircuitError, TooLargeError
from quditlift.registers import digits_to_index
from quditlift.simulator import (
    GENERATOR_ID,
    apply_gate,
    apply_qubit_gate,
    basis_state,
    evolve,
    exact_distribution,
    init_state,
    run,
    sample,
)
from quditlift.transpiler import transpile

SQ2 = 1.0 / np.sqrt(2.0)


def random_unitary(rng, d):
    raw = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(raw)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_qudit_circuit(rng, dims, gate_count):
    gates = []
    for _ in range(gate_count):
        if len(dims) > 1 and rng.random() < 0.4:
            control, target = rng.choice(len(dims), size=2, replace=False)
            levels = rng.choice(
                dims[control], size=int(rng.integers(1, dims[control])), replace=False
            )
            gates.append(CtrlEmbedded(
                int(control), int(target),
                tuple(int(v) for v in sorted(levels)),
                array_to_matrix(random_unitary(rng, dims[int(target)])),
            ))
        else:
            wire = int(rng.integers(len(dims)))
            gates.append(Local1D(wire, array_to_matrix(random_unitary(rng, dims[wire]))))
    return QuditCircuit(dims, tuple(gates))


def test_init_state():
    state = init_state((3, 4))
    assert state.amplitudes.shape == (12,)
    assert state.amplitudes[0] == 1.0
    assert np.count_nonzero(state.amplitudes) == 1
    with pytest.raises(CircuitError):
        init_state((3, 1))
    with pytest.raises(TooLargeError):
        init_state((2,) * 25)


def test_basis_state():
    state = basis_state((3, 4), 7)
    assert state.amplitudes[7] == 1.0
    assert np.count_nonzero(state.amplitudes) == 1


def test_local_gate_on_qutrit():
    h_embed = np.eye(3, dtype=complex)
    h_embed[:2, :2] = [[SQ2, SQ2], [SQ2, -SQ2]]
    state = apply_gate(init_state((3,)), Local1D(0, array_to_matrix(h_embed)))
    assert np.allclose(state.amplitudes, [SQ2, SQ2, 0.0])


def test_ctrl_gate_fires_only_on_listed_levels():
    x3 = array_to_matrix(np.eye(3)[[1, 0, 2]])
    gate = CtrlEmbedded(0, 1, (2,), x3)
    # control at level 1: nothing happens
    state = apply_gate(basis_state((3, 3), digits_to_index((1, 0), (3, 3))), gate)
    assert state.amplitudes[digits_to_index((1, 0), (3, 3))] == 1.0
    # control at level 2: target swaps 0 and 1
    state = apply_gate(basis_state((3, 3), digits_to_index((2, 0), (3, 3))), gate)
    assert state.amplitudes[digits_to_index((2, 1), (3, 3))] == 1.0


def test_ctrl_gate_with_control_after_target():
    x3 = array_to_matrix(np.eye(3)[[1, 0, 2]])
    gate = CtrlEmbedded(1, 0, (1,), x3)
    state = apply_gate(basis_state((3, 3), digits_to_index((0, 1), (3, 3))), gate)
    assert state.amplitudes[digits_to_index((1, 1), (3, 3))] == 1.0


def test_apply_gate_matches_dense_unitary():
    rng = np.random.default_rng(31)
    for dims in [(3, 3), (4, 3, 2), (5, 4)]:
        circ = rand_qudit_circuit(rng, dims, 8)
        u = qudit_unitary(circ)
        state = run(circ)
        assert np.allclose(state.amplitudes, u[:, 0], atol=1e-10)
        # from a random basis state too
        start = int(rng.integers(u.shape[0]))
        state = evolve(basis_state(dims, start), circ)
        assert np.allclose(state.amplitudes, u[:, start], atol=1e-10)


def test_qubit_gates_match_dense_unitary():
    rng = np.random.default_rng(37)
    for _ in range(10):
        n = int(rng.integers(2, 6))
        circ = rand_qubit_circuit(rng, n, 12)
        u = qubit_unitary(circ)
        state = run(circ)
        assert np.allclose(state.amplitudes, u[:, 0], atol=1e-10)


def test_cz_flips_the_sign_of_11():
    state = basis_state((2, 2), 3)
    state = apply_qubit_gate(state, ir.cz(0, 1))
    assert state.amplitudes[3] == -1.0


def test_norm_is_preserved():
    rng = np.random.default_rng(41)
    circ = rand_qudit_circuit(rng, (4, 3, 3), 20)
    state = run(circ)
    assert abs(np.linalg.norm(state.amplitudes) - 1.0) <= 1e-12


def test_evolve_rejects_wrong_dims():
    circ = QuditCircuit((3, 3), ())
    with pytest.raises(CircuitError):
        evolve(init_state((3, 4)), circ)
    with pytest.raises(CircuitError):
        evolve(init_state((3,)), QubitCircuit(1, ()))


def test_exact_distribution_bell_pair():
    dist = exact_distribution(run(QubitCircuit(2, (ir.h(0), ir.cnot(0, 1)))))
    assert sorted(dist) == ["00", "11"]
    assert dist["00"] == pytest.approx(0.5, abs=1e-12)
    assert dist["11"] == pytest.approx(0.5, abs=1e-12)


def test_exact_distribution_point_mass():
    dist = exact_distribution(run(QubitCircuit(2, (ir.x(1),))))
    assert dist == {"01": 1.0}


def test_exact_distribution_drops_numerical_dust():
    state = run(QubitCircuit(1, (ir.h(0), ir.h(0))))
    assert exact_distribution(state) == {"0": pytest.approx(1.0)}


def test_exact_distribution_wide_dims_keys():
    state = basis_state((12, 3), digits_to_index((11, 2), (12, 3)))
    assert exact_distribution(state) == {"11-2": 1.0}


def test_sample_is_deterministic():
    state = run(QubitCircuit(2, (ir.h(0), ir.cnot(0, 1))))
    a = sample(state, 500, 123)
    b = sample(state, 500, 123)
    assert a == b
    assert a.generator == GENERATOR_ID
    assert a.shots == 500 and a.seed == 123
    assert sum(a.counts.values()) == 500
    assert set(a.counts) <= {"00", "11"}


def test_sample_point_mass():
    counts = sample(run(QubitCircuit(2, (ir.x(1),))), 1024, 9)
    assert counts.counts == {"01": 1024}


def test_sample_rejects_bad_shots():
    state = init_state((2,))
    with pytest.raises(ValueError):
        sample(state, 0, 1)


def test_sample_chi_square_on_uniform_four_outcomes():
    from scipy import stats

    state = run(QubitCircuit(2, (ir.h(0), ir.h(1))))
    counts = sample(state, 100_000, 11)
    observed = [counts.counts.get(k, 0) for k in ("00", "01", "10", "11")]
    _, p = stats.chisquare(observed)
    assert p > 1e-4


def test_lowered_reference_circuit_matches_qubit_distribution():
    circuit = reference_circuit()
    lowered = transpile(circuit, reference_mapping())
    qudit_dist = exact_distribution(run(lowered))
    # uniform over 16 encoded outcomes
    assert len(qudit_dist) == 16
    assert all(abs(p - 1 / 16) <= 1e-12 for p in qudit_dist.values())
