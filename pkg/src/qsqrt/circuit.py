"""Gate set and circuit IR with validation and composite gates."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    ArityError,
    InvalidWidthError,
    OperandCollisionError,
    QubitIndexError,
)


class GateKind(Enum):
    """Primitive gate kinds plus the COMPOSITE wrapper."""

    X = "x"
    CX = "cx"
    ZCX = "zcx"
    CCX = "ccx"
    SWAP = "swap"
    H = "h"
    T = "t"
    TDG = "tdg"
    COMPOSITE = "composite"


PRIMITIVE_ARITY = {
    GateKind.X: 1,
    GateKind.CX: 2,
    GateKind.ZCX: 2,
    GateKind.CCX: 3,
    GateKind.SWAP: 2,
    GateKind.H: 1,
    GateKind.T: 1,
    GateKind.TDG: 1,
}

#: Gates that map computational basis states to basis states.
PERMUTATION_KINDS = frozenset(
    {GateKind.X, GateKind.CX, GateKind.ZCX, GateKind.CCX, GateKind.SWAP}
)

#: The lowered primitive set.
CLIFFORD_T_KINDS = frozenset(
    {GateKind.X, GateKind.CX, GateKind.H, GateKind.T, GateKind.TDG}
)


@dataclass(frozen=True)
class Gate:
    """One operation: a primitive gate, or a composite holding a sub-circuit.

    Controls come first: CX/ZCX are (control, target), CCX is
    (control, control, target). ZCX fires when its control reads 0.
    Qubit indices refer to positions in the owning circuit; index 0 is the
    least significant bit of whichever register it belongs to.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    name: str | None = None
    body: "Circuit | None" = None

    def __repr__(self) -> str:
        label = self.name if self.kind is GateKind.COMPOSITE else self.kind.value
        return f"{label}{self.qubits}"


class Circuit:
    """Fixed-width ordered gate sequence, the IR for the whole toolkit.

    Append-only while being built; treat instances as immutable afterwards
    (analysis and simulation never mutate them).
    """

    def __init__(self, width: int, name: str = ""):
        if width < 1:
            raise InvalidWidthError(f"circuit width must be >= 1, got {width}")
        self.width = width
        self.name = name
        self.gates: list[Gate] = []

    def append(self, gate: Gate) -> "Circuit":
        """Append one gate after checking arity, index range and distinctness."""
        if gate.kind is GateKind.COMPOSITE:
            if gate.body is None:
                raise ArityError("composite gate needs a body circuit")
            expected = gate.body.width
        else:
            expected = PRIMITIVE_ARITY[gate.kind]
        if len(gate.qubits) != expected:
            raise ArityError(
                f"{gate!r} expects {expected} operands, got {len(gate.qubits)}"
            )
        for q in gate.qubits:
            if not 0 <= q < self.width:
                raise QubitIndexError(
                    f"qubit {q} out of range for width {self.width}"
                )
        if len(set(gate.qubits)) != len(gate.qubits):
            raise OperandCollisionError(f"duplicate operands in {gate!r}")
        self.gates.append(gate)
        return self

    def append_composite(
        self, name: str, body: "Circuit", qubits: Sequence[int]
    ) -> "Circuit":
        """Append `body` as a single reusable gate mapped onto `qubits`.

        The body is stored by reference and never flattened here; qubit i of
        the body acts on qubits[i] of this circuit.
        """
        return self.append(
            Gate(GateKind.COMPOSITE, tuple(qubits), name=name, body=body)
        )

    # shorthands used by the circuit generators
    def x(self, q: int) -> "Circuit":
        return self.append(Gate(GateKind.X, (q,)))

    def cx(self, control: int, target: int) -> "Circuit":
        return self.append(Gate(GateKind.CX, (control, target)))

    def zcx(self, control: int, target: int) -> "Circuit":
        return self.append(Gate(GateKind.ZCX, (control, target)))

    def ccx(self, control_a: int, control_b: int, target: int) -> "Circuit":
        return self.append(Gate(GateKind.CCX, (control_a, control_b, target)))

    def swap(self, a: int, b: int) -> "Circuit":
        return self.append(Gate(GateKind.SWAP, (a, b)))

    def h(self, q: int) -> "Circuit":
        return self.append(Gate(GateKind.H, (q,)))

    def t(self, q: int) -> "Circuit":
        return self.append(Gate(GateKind.T, (q,)))

    def tdg(self, q: int) -> "Circuit":
        return self.append(Gate(GateKind.TDG, (q,)))

    def inverse(self) -> "Circuit":
        """Gate-wise inverse: reversed order with T and TDG exchanged."""
        inv = Circuit(self.width, self.name)
        for g in reversed(self.gates):
            if g.kind is GateKind.T:
                inv.append(Gate(GateKind.TDG, g.qubits))
            elif g.kind is GateKind.TDG:
                inv.append(Gate(GateKind.T, g.qubits))
            elif g.kind is GateKind.COMPOSITE:
                assert g.body is not None
                inv.append(
                    Gate(GateKind.COMPOSITE, g.qubits, g.name, g.body.inverse())
                )
            else:
                inv.append(g)  # X, CX, ZCX, CCX, SWAP, H are self-inverse
        return inv

    def __len__(self) -> int:
        return len(self.gates)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Circuit)
            and self.width == other.width
            and self.name == other.name
            and self.gates == other.gates
        )

    def __repr__(self) -> str:
        return f"Circuit({self.name!r}, width={self.width}, gates={len(self.gates)})"


@dataclass(frozen=True)
class Violation:
    """One invariant breach found by validate.

    `path` names the chain of composites leading to the offending circuit,
    `gate_index` the gate's position inside it (-1 for circuit-level issues).
    """

    path: str
    gate_index: int
    message: str


def validate(c: Circuit) -> list[Violation]:
    """Collect every invariant violation in `c`, recursing through composites.

    An empty list means the circuit is well formed. Violations are data, not
    exceptions, so hand-built or deserialized circuits can be inspected.
    """
    out: list[Violation] = []
    _validate_into(c, c.name or "circuit", (), out)
    return out


def _validate_into(
    c: Circuit, path: str, stack: tuple[int, ...], out: list[Violation]
) -> None:
    if c.width < 1:
        out.append(Violation(path, -1, f"width must be >= 1, got {c.width}"))
        return
    for i, g in enumerate(c.gates):
        if g.kind is GateKind.COMPOSITE:
            if g.body is None:
                out.append(Violation(path, i, "composite gate without a body"))
                continue
            expected = g.body.width
        elif g.kind in PRIMITIVE_ARITY:
            expected = PRIMITIVE_ARITY[g.kind]
        else:
            out.append(Violation(path, i, f"unknown gate kind {g.kind!r}"))
            continue
        if len(g.qubits) != expected:
            out.append(
                Violation(
                    path,
                    i,
                    f"{g!r} expects {expected} operands, got {len(g.qubits)}",
                )
            )
        bad = [q for q in g.qubits if not 0 <= q < c.width]
        if bad:
            out.append(
                Violation(
                    path, i, f"operands {bad} out of range for width {c.width}"
                )
            )
        if len(set(g.qubits)) != len(g.qubits):
            out.append(Violation(path, i, f"duplicate operands in {g!r}"))
        if g.kind is GateKind.COMPOSITE and g.body is not None:
            sub_path = f"{path} > {g.name or 'composite'}"
            if id(g.body) in stack:
                out.append(Violation(sub_path, i, "composite cycle detected"))
                continue
            _validate_into(g.body, sub_path, stack + (id(g.body),), out)
