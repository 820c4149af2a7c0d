"""Fan-out-free, feedback-free reversible circuits.

A circuit is a DAG of gate instances connected by wires. Two structural
rules from reversible-logic design are enforced:

* no fan-out: every wire is consumed by exactly one sink (a gate input
  pin, a primary output, or an explicit garbage mark), and
* no feedback: a gate's inputs must already exist when the gate is
  added, so cycles cannot be expressed.

Construction goes through `CircuitBuilder` (obtained from `new_circuit`),
which hands out `Wire` handles and rejects any second consumption of a
wire with `FanOutViolation`. `seal()` re-checks every invariant and
returns an immutable `Circuit` that can be simulated or exhaustively
enumerated.

Garbage is explicit: an output that is neither marked as a primary
output nor as garbage is a dangling wire and fails sealing. This keeps
the garbage count an honest, declared quantity instead of an inferred
one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import RevLogicError
from .gates import BitWord, GateDef, WidthMismatch

# Exhaustive enumeration is capped here; 2^20 evaluations stay cheap.
ENUMERATION_LIMIT = 20

_PIN_NAMES = "PQRS"


class DuplicateLabel(RevLogicError):
    """An input or output label was used twice."""


class FanOutViolation(RevLogicError):
    """A wire was offered to a second sink; signals may not be split."""


class ArityMismatch(RevLogicError):
    """Number of wires passed to add_gate differs from the gate's arity."""


class TooWide(RevLogicError):
    """Circuit has too many primary inputs for exhaustive enumeration."""


class ValidationFailed(RevLogicError):
    """Sealing found structural violations; `.violations` lists them all."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# A wire source is one of:
#   ("in", input_index)  ("const", constant_index)  ("gate", instance, pin)
Source = tuple


@dataclass(frozen=True)
class Instance:
    """One placed gate: its definition plus the sources feeding its pins."""

    gate: GateDef
    sources: tuple[Source, ...]


class Wire:
    """Handle for a signal inside a builder; valid for one consumption."""

    __slots__ = ("source", "_builder", "_consumed")

    def __init__(self, source: Source, builder: CircuitBuilder):
        self.source = source
        self._builder = builder
        self._consumed = False

    @property
    def consumed(self) -> bool:
        return self._consumed

    def __repr__(self) -> str:
        state = "consumed" if self._consumed else "free"
        return f"<Wire {self._builder.describe(self.source)} ({state})>"


class CircuitBuilder:
    """Accumulates gates and wire marks; `seal()` yields the Circuit.

    Use `new_circuit` to create one.
    """

    def __init__(self, input_labels: Iterable[str]):
        labels = list(input_labels)
        if not labels:
            raise ValueError("need at least one primary input")
        seen = set()
        for label in labels:
            if not label or label != label.strip():
                raise ValueError(f"bad input label {label!r}")
            if label in seen:
                raise DuplicateLabel(f"duplicate input label {label!r}")
            seen.add(label)
        self.input_labels: tuple[str, ...] = tuple(labels)
        self._constants: list[int] = []
        self._instances: list[Instance] = []
        self._outputs: list[tuple[str, Source]] = []
        self._garbage: list[Source] = []
        self._wires: list[Wire] = []
        self._sealed = False
        self.inputs = tuple(self._new_wire(("in", i)) for i in range(len(labels)))

    @property
    def constant_count(self) -> int:
        return len(self._constants)

    def _new_wire(self, source: Source) -> Wire:
        wire = Wire(source, self)
        self._wires.append(wire)
        return wire

    def _check_open(self) -> None:
        if self._sealed:
            raise ValueError("builder already sealed")

    def _own(self, wire: Wire) -> None:
        if not isinstance(wire, Wire) or wire._builder is not self:
            raise ValueError("wire does not belong to this builder")

    def describe(self, source: Source) -> str:
        """Human-readable name for a wire source, used in diagnostics."""
        kind = source[0]
        if kind == "in":
            return f"input {self.input_labels[source[1]]!r}"
        if kind == "const":
            return f"constant #{source[1]}"
        _, idx, pin = source
        gate = self._instances[idx].gate
        pin_name = _PIN_NAMES[pin] if pin < len(_PIN_NAMES) else f"pin{pin}"
        return f"{gate.name}#{idx} output {pin_name}"

    def add_constant(self, value: int) -> Wire:
        """Add a constant input line fixed at 0 or 1; returns its wire."""
        self._check_open()
        if value not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {value!r}")
        self._constants.append(value)
        return self._new_wire(("const", len(self._constants) - 1))

    def add_gate(self, gate: GateDef, inputs: Sequence[Wire]) -> tuple[Wire, ...]:
        """Place a gate instance; consumes the input wires, returns outputs.

        Output wires come back in pin order (P, Q, ...). All fan-out
        checks happen before anything is consumed, so a failed call
        leaves the builder unchanged.
        """
        self._check_open()
        wires = list(inputs)
        if len(wires) != gate.arity:
            raise ArityMismatch(
                f"gate {gate.name} has arity {gate.arity}, got {len(wires)} wires"
            )
        for wire in wires:
            self._own(wire)
            if wire.consumed:
                raise FanOutViolation(
                    f"{self.describe(wire.source)} is already consumed"
                )
        if len({id(w) for w in wires}) != len(wires):
            raise FanOutViolation(
                f"gate {gate.name}: the same wire was passed to two pins"
            )
        for wire in wires:
            wire._consumed = True
        idx = len(self._instances)
        self._instances.append(Instance(gate, tuple(w.source for w in wires)))
        return tuple(self._new_wire(("gate", idx, pin)) for pin in range(gate.arity))

    def mark_output(self, wire: Wire, label: str) -> None:
        """Consume a wire as the primary output named `label`."""
        self._check_open()
        self._own(wire)
        if not label:
            raise ValueError("output label must be nonempty")
        if any(label == existing for existing, _ in self._outputs):
            raise DuplicateLabel(f"duplicate output label {label!r}")
        if wire.consumed:
            raise FanOutViolation(f"{self.describe(wire.source)} is already consumed")
        wire._consumed = True
        self._outputs.append((label, wire.source))

    def mark_garbage(self, wire: Wire) -> None:
        """Consume a wire as an explicit garbage output."""
        self._check_open()
        self._own(wire)
        if wire.consumed:
            raise FanOutViolation(f"{self.describe(wire.source)} is already consumed")
        wire._consumed = True
        self._garbage.append(wire.source)

    def seal(self) -> Circuit:
        """Validate every structural invariant and freeze the circuit.

        All violations are collected and reported together in
        ValidationFailed rather than stopping at the first.
        """
        self._check_open()
        violations: list[str] = []

        for wire in self._wires:
            if not wire.consumed:
                violations.append(f"dangling wire: {self.describe(wire.source)}")

        lines_in = len(self.input_labels) + len(self._constants)
        lines_out = len(self._outputs) + len(self._garbage)
        if lines_in != lines_out:
            violations.append(
                "line count not conserved: "
                f"{len(self.input_labels)} inputs + {len(self._constants)} constants"
                f" != {len(self._outputs)} outputs + {len(self._garbage)} garbage"
            )

        # The builder only hands out wires for already-placed instances,
        # so forward references would indicate internal corruption; the
        # seal-time re-check keeps the guarantee explicit.
        for idx, inst in enumerate(self._instances):
            for source in inst.sources:
                if source[0] == "gate" and source[1] >= idx:
                    violations.append(
                        f"feedback: {inst.gate.name}#{idx} reads "
                        f"{self.describe(source)}"
                    )

        marked = [source for _, source in self._outputs] + self._garbage
        if len(set(marked)) != len(marked):
            violations.append("a wire is marked as output or garbage more than once")

        if violations:
            raise ValidationFailed(violations)
        self._sealed = True
        return Circuit(
            input_labels=self.input_labels,
            constants=tuple(self._constants),
            instances=tuple(self._instances),
            outputs=tuple(self._outputs),
            garbage=tuple(self._garbage),
        )


def new_circuit(input_labels: Iterable[str]) -> CircuitBuilder:
    """Start building a circuit over the given primary-input labels."""
    return CircuitBuilder(input_labels)


@dataclass(frozen=True)
class Circuit:
    """A sealed, immutable reversible circuit.

    `outputs` holds (label, source) pairs in marking order; `garbage`
    holds sources in marking order. Simulation evaluates instances in
    list order, which the builder guarantees is topological.
    """

    input_labels: tuple[str, ...]
    constants: tuple[int, ...]
    instances: tuple[Instance, ...]
    outputs: tuple[tuple[str, Source], ...]
    garbage: tuple[Source, ...]

    @property
    def width(self) -> int:
        return len(self.input_labels)

    @property
    def output_labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.outputs)

    @cached_property
    def _plan(self):
        # Flat slot layout: inputs, constants, then each instance's
        # output pins. Precomputing slot indices keeps simulate() to
        # list indexing and table lookups.
        slot: dict[Source, int] = {}
        for i in range(len(self.input_labels)):
            slot[("in", i)] = i
        base = len(self.input_labels)
        for j in range(len(self.constants)):
            slot[("const", j)] = base + j
        base += len(self.constants)
        ops = []
        for idx, inst in enumerate(self.instances):
            arity = inst.gate.arity
            in_slots = tuple(slot[s] for s in inst.sources)
            ops.append((inst.gate.table.rows, in_slots, base, arity))
            for pin in range(arity):
                slot[("gate", idx, pin)] = base + pin
            base += arity
        out_slots = tuple(slot[s] for _, s in self.outputs)
        garbage_slots = tuple(slot[s] for s in self.garbage)
        return ops, out_slots, garbage_slots, base

    def simulate(self, inputs: BitWord) -> tuple[BitWord, BitWord]:
        """Evaluate the circuit; returns (outputs, garbage) as BitWords.

        Output and garbage bits appear in marking order, MSB-first.
        """
        if inputs.width != self.width:
            raise WidthMismatch(
                f"circuit has {self.width} inputs, got a {inputs.width}-bit word"
            )
        ops, out_slots, garbage_slots, n_slots = self._plan
        values = [0] * n_slots
        values[: inputs.width] = inputs.bits
        base = inputs.width
        values[base : base + len(self.constants)] = self.constants
        for rows, in_slots, out_base, arity in ops:
            word = 0
            for s in in_slots:
                word = (word << 1) | values[s]
            out = rows[word]
            for pin in range(arity):
                values[out_base + pin] = (out >> (arity - 1 - pin)) & 1
        outputs = BitWord(tuple(values[s] for s in out_slots))
        garbage = BitWord(tuple(values[s] for s in garbage_slots))
        return outputs, garbage

    def mapping(self) -> list[tuple[BitWord, BitWord]]:
        """The (outputs, garbage) pair for every primary-input word.

        Entry `i` corresponds to the input word with integer value `i`
        (MSB-first). Refuses circuits wider than ENUMERATION_LIMIT.
        """
        if self.width > ENUMERATION_LIMIT:
            raise TooWide(
                f"{self.width} primary inputs exceed the exhaustive "
                f"enumeration bound of {ENUMERATION_LIMIT}"
            )
        return [
            self.simulate(BitWord.from_int(value, self.width))
            for value in range(1 << self.width)
        ]

    def describe(self, source: Source) -> str:
        """Human-readable name for a wire source, used in diagnostics."""
        kind = source[0]
        if kind == "in":
            return f"input {self.input_labels[source[1]]!r}"
        if kind == "const":
            return f"constant #{source[1]}"
        _, idx, pin = source
        gate = self.instances[idx].gate
        pin_name = _PIN_NAMES[pin] if pin < len(_PIN_NAMES) else f"pin{pin}"
        return f"{gate.name}#{idx} output {pin_name}"


def circuit_mapping(circuit: Circuit) -> list[tuple[BitWord, BitWord]]:
    """Module-level alias for Circuit.mapping()."""
    return circuit.mapping()
