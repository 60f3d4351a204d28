"""Boolean circuit intermediate representation.

Circuits are immutable DAGs of fan-in <= 2 gates over a declared number of
witness inputs.  They serve two roles here: as verifiers for witness
machines, and as the cardinality-guess instances that get compiled to CNF.
The module also ships the combinational builders needed for those
instances: lexicographic comparators, single-bit tests, threshold counters,
and conjunction of fragments over a shared input space.

Conventions: witness bit ``k = 1`` is the leftmost (most significant) bit,
so lexicographic order on equal-length bit strings coincides with unsigned
numeric order.  Unreferenced inputs are legal; they stay free witness bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CircuitError, ResourceLimitError
from . import kernels

DEFAULT_CAP = 24

# Gate op codes.  Mirrored in _kernels.pyx; do not renumber.
OP_INPUT = 0
OP_CONST0 = 1
OP_CONST1 = 2
OP_NOT = 3
OP_AND = 4
OP_OR = 5
OP_XOR = 6

_ARITY = {
    OP_INPUT: 1,  # payload: input index, not an operand
    OP_CONST0: 0,
    OP_CONST1: 0,
    OP_NOT: 1,
    OP_AND: 2,
    OP_OR: 2,
    OP_XOR: 2,
}

_OP_NAMES = {
    OP_INPUT: "INPUT",
    OP_CONST0: "CONST0",
    OP_CONST1: "CONST1",
    OP_NOT: "NOT",
    OP_AND: "AND",
    OP_OR: "OR",
    OP_XOR: "XOR",
}


@dataclass(frozen=True, order=True)
class BitString:
    """Immutable sequence of bits, indexed 1..length from the left.

    Comparison is tuple-lexicographic, which for equal lengths equals
    unsigned numeric order with the leftmost bit most significant.
    """

    bits: tuple[int, ...]

    def __init__(self, bits: str | Iterable[int]):
        if isinstance(bits, str):
            if not all(ch in "01" for ch in bits):
                raise ValueError(f"bit string must be over 0/1, got {bits!r}")
            values = tuple(int(ch) for ch in bits)
        else:
            values = tuple(int(b) for b in bits)
            if not all(b in (0, 1) for b in values):
                raise ValueError("bit values must be 0 or 1")
        object.__setattr__(self, "bits", values)

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        if value < 0 or value >= 1 << width:
            raise ValueError(f"{value} does not fit in {width} bits")
        return cls(format(value, f"0{width}b") if width else "")

    def bit(self, k: int) -> int:
        """Return bit k, 1-based from the left."""
        if not 1 <= k <= len(self.bits):
            raise IndexError(f"bit index {k} outside 1..{len(self.bits)}")
        return self.bits[k - 1]

    def to01(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return self.to01()

    def __repr__(self) -> str:
        return f"BitString({self.to01()!r})"


@dataclass(frozen=True)
class Gate:
    """One gate record: op code plus operand gate indices.

    For INPUT gates ``args`` holds the 1-based witness-bit index instead of
    an operand.
    """

    op: int
    args: tuple[int, ...] = ()

    @classmethod
    def input(cls, index: int) -> "Gate":
        return cls(OP_INPUT, (index,))

    @classmethod
    def const(cls, value: int) -> "Gate":
        return cls(OP_CONST1 if value else OP_CONST0)

    @classmethod
    def not_(cls, a: int) -> "Gate":
        return cls(OP_NOT, (a,))

    @classmethod
    def and_(cls, a: int, b: int) -> "Gate":
        return cls(OP_AND, (a, b))

    @classmethod
    def or_(cls, a: int, b: int) -> "Gate":
        return cls(OP_OR, (a, b))

    @classmethod
    def xor(cls, a: int, b: int) -> "Gate":
        return cls(OP_XOR, (a, b))


@dataclass(frozen=True)
class Circuit:
    """Acyclic single-output circuit over ``input_count`` witness bits."""

    input_count: int
    gates: tuple[Gate, ...]
    output: int

    def __post_init__(self):
        if self.input_count < 0:
            raise CircuitError("input_count must be non-negative")
        if not self.gates:
            raise CircuitError("circuit needs at least one gate")
        for idx, gate in enumerate(self.gates):
            if gate.op not in _ARITY:
                raise CircuitError(f"gate {idx}: unknown op {gate.op}")
            if len(gate.args) != _ARITY[gate.op]:
                raise CircuitError(
                    f"gate {idx}: {_OP_NAMES[gate.op]} expects "
                    f"{_ARITY[gate.op]} args, got {len(gate.args)}"
                )
            if gate.op == OP_INPUT:
                (inp,) = gate.args
                if not 1 <= inp <= self.input_count:
                    raise CircuitError(
                        f"gate {idx}: input index {inp} outside "
                        f"1..{self.input_count}"
                    )
            else:
                for arg in gate.args:
                    if not 0 <= arg < idx:
                        raise CircuitError(
                            f"gate {idx}: operand {arg} does not precede it"
                        )
        if not 0 <= self.output < len(self.gates):
            raise CircuitError(f"output index {self.output} out of range")

    def tables(self) -> tuple:
        """Flat (ops, a0, a1) arrays for the counting kernels."""
        ops = []
        a0 = []
        a1 = []
        for gate in self.gates:
            ops.append(gate.op)
            a0.append(gate.args[0] if gate.args else 0)
            a1.append(gate.args[1] if len(gate.args) > 1 else 0)
        return ops, a0, a1


def evaluate(circuit: Circuit, witness: BitString) -> int:
    """Run the circuit on one witness assignment; returns the output bit."""
    if len(witness) != circuit.input_count:
        raise CircuitError(
            f"witness length {len(witness)} != input_count "
            f"{circuit.input_count}"
        )
    values = [0] * len(circuit.gates)
    for idx, gate in enumerate(circuit.gates):
        if gate.op == OP_INPUT:
            values[idx] = witness.bits[gate.args[0] - 1]
        elif gate.op == OP_CONST0:
            values[idx] = 0
        elif gate.op == OP_CONST1:
            values[idx] = 1
        elif gate.op == OP_NOT:
            values[idx] = 1 - values[gate.args[0]]
        elif gate.op == OP_AND:
            values[idx] = values[gate.args[0]] & values[gate.args[1]]
        elif gate.op == OP_OR:
            values[idx] = values[gate.args[0]] | values[gate.args[1]]
        else:  # OP_XOR
            values[idx] = values[gate.args[0]] ^ values[gate.args[1]]
    return values[circuit.output]


def count_witnesses(circuit: Circuit, cap: int = DEFAULT_CAP) -> int:
    """Count accepting witnesses by exhaustive enumeration of all inputs."""
    if circuit.input_count > cap:
        raise ResourceLimitError(
            f"{circuit.input_count} witness bits exceed enumeration cap {cap}"
        )
    ops, a0, a1 = circuit.tables()
    return kernels.count_witnesses(circuit.input_count, ops, a0, a1, circuit.output)


class CircuitBuilder:
    """Append-only gate list with de-duplicated INPUT gates.

    Gate references are plain indices into the list under construction.
    """

    def __init__(self, input_count: int):
        if input_count < 0:
            raise CircuitError("input_count must be non-negative")
        self.input_count = input_count
        self._gates: list[Gate] = []
        self._input_refs: dict[int, int] = {}

    def _append(self, gate: Gate) -> int:
        self._gates.append(gate)
        return len(self._gates) - 1

    def input(self, index: int) -> int:
        if not 1 <= index <= self.input_count:
            raise CircuitError(
                f"input index {index} outside 1..{self.input_count}"
            )
        if index not in self._input_refs:
            self._input_refs[index] = self._append(Gate.input(index))
        return self._input_refs[index]

    def const(self, value: int) -> int:
        return self._append(Gate.const(value))

    def not_(self, a: int) -> int:
        return self._append(Gate.not_(a))

    def and_(self, a: int, b: int) -> int:
        return self._append(Gate.and_(a, b))

    def or_(self, a: int, b: int) -> int:
        return self._append(Gate.or_(a, b))

    def xor(self, a: int, b: int) -> int:
        return self._append(Gate.xor(a, b))

    def and_all(self, refs: Sequence[int]) -> int:
        """Left fold of AND; empty sequence yields CONST1."""
        if not refs:
            return self.const(1)
        acc = refs[0]
        for ref in refs[1:]:
            acc = self.and_(acc, ref)
        return acc

    def or_all(self, refs: Sequence[int]) -> int:
        if not refs:
            return self.const(0)
        acc = refs[0]
        for ref in refs[1:]:
            acc = self.or_(acc, ref)
        return acc

    def embed(self, circuit: Circuit, input_refs: Sequence[int]) -> int:
        """Copy a sub-circuit in, wiring its inputs to existing refs."""
        if len(input_refs) != circuit.input_count:
            raise CircuitError(
                f"embed needs {circuit.input_count} input refs, "
                f"got {len(input_refs)}"
            )
        mapping: list[int] = []
        for gate in circuit.gates:
            if gate.op == OP_INPUT:
                mapping.append(input_refs[gate.args[0] - 1])
            else:
                remapped = tuple(mapping[a] for a in gate.args)
                mapping.append(self._append(Gate(gate.op, remapped)))
        return mapping[circuit.output]

    def build(self, output: int) -> Circuit:
        return Circuit(self.input_count, tuple(self._gates), output)


def remap_inputs(
    circuit: Circuit, input_count: int, mapping: Sequence[int]
) -> Circuit:
    """Rewire INPUT gates through ``mapping`` into a wider input space.

    ``mapping[i]`` is the new 1-based index for old input ``i + 1``.
    """
    if len(mapping) != circuit.input_count:
        raise CircuitError(
            f"mapping covers {len(mapping)} inputs, circuit has "
            f"{circuit.input_count}"
        )
    gates = []
    for gate in circuit.gates:
        if gate.op == OP_INPUT:
            new_index = mapping[gate.args[0] - 1]
            if not 1 <= new_index <= input_count:
                raise CircuitError(
                    f"mapped input {new_index} outside 1..{input_count}"
                )
            gates.append(Gate.input(new_index))
        else:
            gates.append(gate)
    return Circuit(input_count, tuple(gates), circuit.output)


def build_bit_equals(input_count: int, input_index: int, value: int) -> Circuit:
    """Fragment that is 1 iff the addressed witness bit equals ``value``."""
    if value not in (0, 1):
        raise CircuitError(f"bit value must be 0 or 1, got {value}")
    b = CircuitBuilder(input_count)
    ref = b.input(input_index)
    if value == 0:
        ref = b.not_(ref)
    return b.build(ref)


def build_less_than(
    input_count: int, a_inputs: Sequence[int], b_inputs: Sequence[int]
) -> Circuit:
    """Fragment that is 1 iff bits at ``a_inputs`` < bits at ``b_inputs``.

    Strict lexicographic order; the first index of each sequence is the
    most significant bit.
    """
    if len(a_inputs) != len(b_inputs):
        raise CircuitError(
            f"width mismatch: {len(a_inputs)} vs {len(b_inputs)}"
        )
    if not a_inputs:
        raise CircuitError("comparator width must be at least 1")
    b = CircuitBuilder(input_count)
    result = None
    eq_prefix = None
    for a_idx, b_idx in zip(a_inputs, b_inputs):
        a_ref = b.input(a_idx)
        b_ref = b.input(b_idx)
        here = b.and_(b.not_(a_ref), b_ref)
        if eq_prefix is not None:
            here = b.and_(eq_prefix, here)
        result = here if result is None else b.or_(result, here)
        bit_eq = b.not_(b.xor(a_ref, b_ref))
        eq_prefix = bit_eq if eq_prefix is None else b.and_(eq_prefix, bit_eq)
    return b.build(result)


def build_exactly_k(input_count: int, wires: Sequence[int], k: int) -> Circuit:
    """Fragment that is 1 iff exactly ``k`` of the watched wires are 1.

    Dynamic-programming ladder over the wires; counts above ``k`` fall off
    the tracked states and can never satisfy the output.
    """
    if k < 0:
        raise CircuitError("threshold k must be non-negative")
    b = CircuitBuilder(input_count)
    if k > len(wires):
        return b.build(b.const(0))
    # state[t] = ref computing "exactly t ones among wires seen so far"
    state: dict[int, int] = {0: b.const(1)}
    for wire in wires:
        w = b.input(wire)
        not_w = b.not_(w)
        new_state: dict[int, int] = {}
        for t in range(k + 1):
            terms = []
            if t in state:
                terms.append(b.and_(state[t], not_w))
            if t - 1 in state:
                terms.append(b.and_(state[t - 1], w))
            if terms:
                new_state[t] = b.or_all(terms) if len(terms) > 1 else terms[0]
        state = new_state
    if k not in state:
        return b.build(b.const(0))
    return b.build(state[k])


def conjoin(
    fragments: Sequence[Circuit], input_count: int | None = None
) -> Circuit:
    """AND together fragments sharing one input space.

    All fragments must declare the same ``input_count``.  The empty
    conjunction is CONST1 and then requires an explicit ``input_count``.
    A singleton conjunction is returned unchanged.
    """
    if not fragments:
        if input_count is None:
            raise CircuitError("empty conjunction needs an input_count")
        b = CircuitBuilder(input_count)
        return b.build(b.const(1))
    width = fragments[0].input_count
    if input_count is not None and input_count != width:
        raise CircuitError(
            f"declared input_count {input_count} != fragment width {width}"
        )
    for frag in fragments[1:]:
        if frag.input_count != width:
            raise CircuitError(
                f"fragment input_count {frag.input_count} != {width}"
            )
    if len(fragments) == 1:
        return fragments[0]
    b = CircuitBuilder(width)
    outputs = [b.embed(frag, [b.input(i) for i in range(1, width + 1)])
               for frag in fragments]
    return b.build(b.and_all(outputs))
