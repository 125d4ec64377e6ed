import random

import numpy as np
import pytest

from qsqrt import (
    CLIFFORD_T_KINDS,
    DEFAULT_RULES,
    Circuit,
    DecompositionRule,
    Gate,
    GateKind,
    assert_equiv,
    basis_statevector,
    build_adder,
    build_isqrt_circuit,
    flatten,
    lower_swap,
    lower_to_clifford_t,
    lower_toffoli,
    lower_zcx,
    peres_circuit,
    perm_run,
    permutation_matrix,
    sv_run,
    t_count,
    unitary,
)
from qsqrt.errors import UnsupportedGateError


def test_flatten_peres_gives_two_primitives():
    qc = Circuit(3)
    qc.append_composite("PERES", peres_circuit(), [0, 1, 2])
    flat = flatten(qc)
    assert [(g.kind, g.qubits) for g in flat.gates] == [
        (GateKind.CCX, (0, 1, 2)),
        (GateKind.CX, (0, 1)),
    ]


def test_flatten_without_composites_is_identity():
    qc = Circuit(2).cx(0, 1)
    qc.x(0)
    assert flatten(qc) == qc


def test_flatten_remaps_composite_operands():
    qc = Circuit(5)
    qc.append_composite("PERES", peres_circuit(), [4, 1, 0])
    flat = flatten(qc)
    assert flat.gates[0].qubits == (4, 1, 0)
    assert flat.gates[1].qubits == (4, 1)


def test_flatten_isqrt_preserves_permutation():
    qc = build_isqrt_circuit(6)
    flat = flatten(qc)
    rng = random.Random(7)
    for _ in range(100):
        state = rng.randrange(1 << 13)
        assert perm_run(flat, state) == perm_run(qc, state)


def test_lower_swap_is_three_cx():
    low = lower_swap(Gate(GateKind.SWAP, (0, 1)))
    assert [(g.kind, g.qubits) for g in low.gates] == [
        (GateKind.CX, (0, 1)),
        (GateKind.CX, (1, 0)),
        (GateKind.CX, (0, 1)),
    ]


def test_lower_swap_matches_swap_exhaustively():
    low = lower_swap(Gate(GateKind.SWAP, (0, 1)))
    swap = Circuit(2).swap(0, 1)
    for state in range(4):
        assert perm_run(low, state) == perm_run(swap, state)
    assert perm_run(low, 0b10) == 0b01  # |01> -> |10>, qubit 0 written first
    assert perm_run(low, 0b11) == 0b11


def test_lower_zcx_fires_on_zero_control():
    low = lower_zcx(Gate(GateKind.ZCX, (0, 1)))
    assert [g.kind for g in low.gates] == [GateKind.X, GateKind.CX, GateKind.X]
    assert perm_run(low, 0b00) == 0b10  # control clear: target flips
    assert perm_run(low, 0b01) == 0b01  # control set: blocked
    zcx = Circuit(2).zcx(0, 1)
    for state in range(4):
        assert perm_run(low, state) == perm_run(zcx, state)


def test_lower_toffoli_gate_counts():
    low = lower_toffoli(Gate(GateKind.CCX, (0, 1, 2)))
    kinds = [g.kind for g in low.gates]
    assert len(kinds) == 15
    assert kinds.count(GateKind.H) == 2
    assert kinds.count(GateKind.CX) == 6
    assert kinds.count(GateKind.T) == 4
    assert kinds.count(GateKind.TDG) == 3
    assert t_count(low) == 7


def test_lower_toffoli_flips_target_when_both_controls_set():
    low = lower_toffoli(Gate(GateKind.CCX, (0, 1, 2)))
    vec = sv_run(low, basis_statevector(3, 0b011))
    assert abs(vec[0b111]) == pytest.approx(1.0, abs=1e-12)


def test_lower_toffoli_unitary_equals_ccx():
    low = lower_toffoli(Gate(GateKind.CCX, (0, 1, 2)))
    ccx = Circuit(3).ccx(0, 1, 2)
    assert np.max(np.abs(unitary(low) - permutation_matrix(ccx))) < 1e-12


def test_every_default_rule_matches_its_gate():
    for kind, rule in DEFAULT_RULES.items():
        arity = rule.template.width
        logical = Circuit(arity).append(Gate(kind, tuple(range(arity))))
        lowered = lower_to_clifford_t(logical)
        diff = np.abs(unitary(lowered) - permutation_matrix(logical))
        assert np.max(diff) < 1e-12, kind


def test_lower_peres_gate_count():
    qc = Circuit(3)
    qc.append_composite("PERES", peres_circuit(), [0, 1, 2])
    assert len(lower_to_clifford_t(qc).gates) == 16  # 15 from CCX plus one CX


def test_lowering_is_idempotent():
    low = lower_to_clifford_t(build_adder(3))
    assert lower_to_clifford_t(low) == low


def test_lowered_gates_are_clifford_t_only():
    low = lower_to_clifford_t(build_isqrt_circuit(6))
    assert all(g.kind in CLIFFORD_T_KINDS for g in low.gates)


def test_lowering_preserves_width_and_name():
    low = lower_to_clifford_t(build_adder(3))
    assert (low.width, low.name) == (6, "ADD")


def test_lowered_isqrt_matches_logical_circuit():
    logical = build_isqrt_circuit(6)
    lowered = lower_to_clifford_t(logical)
    assert assert_equiv(logical, lowered, mode="sampled", samples=100, seed=3) is None


def test_unknown_kind_without_rule_raises():
    qc = Circuit(2).swap(0, 1)
    with pytest.raises(UnsupportedGateError):
        lower_to_clifford_t(qc, rules={})


def test_alternate_rule_can_be_plugged():
    # same SWAP written with the opposite CX orientation
    alt = Circuit(2, "swap")
    alt.cx(1, 0)
    alt.cx(0, 1)
    alt.cx(1, 0)
    rules = dict(DEFAULT_RULES)
    rules[GateKind.SWAP] = DecompositionRule(GateKind.SWAP, alt)
    logical = Circuit(2).swap(0, 1)
    lowered = lower_to_clifford_t(logical, rules=rules)
    assert [g.qubits for g in lowered.gates] == [(1, 0), (0, 1), (1, 0)]
    for state in range(4):
        assert perm_run(lowered, state) == perm_run(logical, state)


def test_rule_rejects_wrong_gate_kind():
    with pytest.raises(UnsupportedGateError):
        DEFAULT_RULES[GateKind.SWAP].expand(Gate(GateKind.CX, (0, 1)))


def test_t_count_invariant_under_flatten():
    qc = build_isqrt_circuit(6)
    assert t_count(flatten(qc)) == t_count(qc)
