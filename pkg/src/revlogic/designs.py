"""Reference BCD-adder designs and their decimal oracle.

The centerpiece is a one-digit BCD adder built from 8 reversible gates:

* adder-1: four HNG full adders rippling a carry, computing the plain
  binary sum S4..S0 of the two digits plus carry-in (8 garbage outputs,
  4 constant inputs);
* correction: one SCL gate computing the decimal carry
  Cout = C4 xor S3·(S2 + S1) while passing S1,S2,S3 through. On every
  sum reachable from valid BCD operands this equals the textbook
  correction OR-form Cout = S3·S2 + S3·S1 + C4 (`eval_correction_eq1`);
  the two differ only on unreachable states, which is what lets an XOR
  replace the OR and saves the gate that would otherwise copy C4;
* adder-2: a PG, HNG, FG chain that adds 6 (0110) to the binary sum
  exactly when Cout is set. Cout is threaded through the PG and HNG
  pass-through pins so the carry reaches the primary output without
  fan-out. Bit 0 never changes when adding 6, so S0 wires straight out.

Totals: 8 gates (5 HNG, 1 SCL, 1 PG, 1 FG), 10 garbage outputs, 6
constant inputs, 8 gate levels with the stage split 4 + 1 + 3.

An N-digit adder cascades one-digit blocks on their carries. Everything
is verified against `oracle_bcd_add`, plain decimal arithmetic with no
circuit anywhere in it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RevLogicError
from .gates import BitWord, catalog_by_name
from .netlist import Circuit, CircuitBuilder, Wire, new_circuit


class BadDigitCount(RevLogicError):
    """Cascade size outside the supported range."""


MAX_DIGITS = 4


def _bit(name: str, value: int) -> int:
    if value not in (0, 1):
        raise ValueError(f"{name} must be 0 or 1, got {value!r}")
    return value


def _digit(name: str, value: int) -> int:
    if not isinstance(value, int) or not 0 <= value <= 9:
        raise ValueError(f"{name} must be a BCD digit in [0, 9], got {value!r}")
    return value


def oracle_bcd_add(a: int, b: int, cin: int) -> tuple[int, int]:
    """Decimal-arithmetic oracle: (carry out, sum digit) of a + b + cin."""
    total = _digit("a", a) + _digit("b", b) + _bit("cin", cin)
    if total > 9:
        return 1, total - 10
    return 0, total


def oracle_bcd_add_number(a: int, b: int, cin: int, digits: int) -> tuple[int, int]:
    """Multi-digit oracle: chains oracle_bcd_add digit by digit."""
    if digits < 1:
        raise ValueError("digits must be positive")
    limit = 10**digits
    if not 0 <= a < limit or not 0 <= b < limit:
        raise ValueError(f"operands must be in [0, {limit - 1}]")
    carry = _bit("cin", cin)
    total = 0
    for position in range(digits):
        carry, digit = oracle_bcd_add((a // 10**position) % 10,
                                      (b // 10**position) % 10, carry)
        total += digit * 10**position
    return carry, total


def eval_correction_eq1(s3: int, s2: int, s1: int, c4: int) -> int:
    """OR-form decimal-carry correction: S3·S2 + S3·S1 + C4."""
    s3, s2, s1, c4 = (_bit(n, v) for n, v in
                      (("s3", s3), ("s2", s2), ("s1", s1), ("c4", c4)))
    return (s3 & s2) | (s3 & s1) | c4


def eval_correction_eq2(s3: int, s2: int, s1: int, c4: int) -> int:
    """XOR-form decimal-carry correction: C4 xor S3·(S2 + S1).

    Agrees with eval_correction_eq1 on every state reachable from valid
    BCD operands; differs on some unreachable ones (e.g. all-ones).
    """
    s3, s2, s1, c4 = (_bit(n, v) for n, v in
                      (("s3", s3), ("s2", s2), ("s1", s1), ("c4", c4)))
    return c4 ^ (s3 & (s2 | s1))


@dataclass(frozen=True)
class BcdCase:
    """One BCD addition test vector with its expected result."""

    a: int
    b: int
    cin: int
    expected_cout: int
    expected_sum: int

    def __post_init__(self):
        _digit("a", self.a)
        _digit("b", self.b)
        _bit("cin", self.cin)
        _bit("expected_cout", self.expected_cout)
        _digit("expected_sum", self.expected_sum)
        if self.expected_cout * 10 + self.expected_sum != self.a + self.b + self.cin:
            raise ValueError(f"inconsistent case: {self}")

    @classmethod
    def from_operands(cls, a: int, b: int, cin: int) -> BcdCase:
        cout, total = oracle_bcd_add(a, b, cin)
        return cls(a, b, cin, cout, total)


def all_bcd_cases() -> list[BcdCase]:
    """Every valid (a, b, cin) combination: 10 * 10 * 2 = 200 cases."""
    return [
        BcdCase.from_operands(a, b, cin)
        for a in range(10)
        for b in range(10)
        for cin in (0, 1)
    ]


def _add_full_adder(
    builder: CircuitBuilder, a: Wire, b: Wire, cin: Wire
) -> tuple[Wire, Wire]:
    """Place one HNG full adder; marks its two pass-throughs garbage.

    Returns (sum, carry). Costs one constant input (the HNG D pin).
    """
    hng = catalog_by_name()["HNG"]
    d = builder.add_constant(0)
    p, q, total, carry = builder.add_gate(hng, [a, b, cin, d])
    builder.mark_garbage(p)
    builder.mark_garbage(q)
    return total, carry


def build_full_adder() -> Circuit:
    """Single-HNG full adder: outputs (sum, carry), 2 garbage, 1 constant."""
    builder = new_circuit(["a", "b", "cin"])
    a, b, cin = builder.inputs
    total, carry = _add_full_adder(builder, a, b, cin)
    builder.mark_output(total, "sum")
    builder.mark_output(carry, "carry")
    return builder.seal()


def _add_ripple4(
    builder: CircuitBuilder,
    a_bits: tuple[Wire, Wire, Wire, Wire],
    b_bits: tuple[Wire, Wire, Wire, Wire],
    cin: Wire,
) -> tuple[Wire, list[Wire]]:
    """Four chained full adders over MSB-first nibbles.

    Returns (c4, [s3, s2, s1, s0]).
    """
    a3, a2, a1, a0 = a_bits
    b3, b2, b1, b0 = b_bits
    s0, c1 = _add_full_adder(builder, a0, b0, cin)
    s1, c2 = _add_full_adder(builder, a1, b1, c1)
    s2, c3 = _add_full_adder(builder, a2, b2, c2)
    s3, c4 = _add_full_adder(builder, a3, b3, c3)
    return c4, [s3, s2, s1, s0]


def build_ripple_adder4() -> Circuit:
    """4-bit binary ripple adder: 4 HNGs, 8 garbage, 4 constants, delay 4.

    Inputs a3..a0, b3..b0, cin; outputs c4, s3..s0.
    """
    builder = new_circuit(["a3", "a2", "a1", "a0", "b3", "b2", "b1", "b0", "cin"])
    ins = builder.inputs
    c4, sums = _add_ripple4(builder, ins[0:4], ins[4:8], ins[8])
    builder.mark_output(c4, "c4")
    for i, wire in enumerate(sums):
        builder.mark_output(wire, f"s{3 - i}")
    return builder.seal()


def build_correction_stage() -> Circuit:
    """The correction gate alone: SCL(S1,S2,S3,C4) -> (S1,S2,S3,Cout).

    1 gate, 0 garbage, 0 constants: the pass-throughs are real outputs
    here, which is exactly why the full adder design pays no garbage for
    its correction stage.
    """
    builder = new_circuit(["s1", "s2", "s3", "c4"])
    s1, s2, s3, c4 = builder.inputs
    scl = catalog_by_name()["SCL"]
    s1p, s2p, s3p, cout = builder.add_gate(scl, [s1, s2, s3, c4])
    builder.mark_output(s1p, "s1")
    builder.mark_output(s2p, "s2")
    builder.mark_output(s3p, "s3")
    builder.mark_output(cout, "cout")
    return builder.seal()


def _add_bcd_digit(
    builder: CircuitBuilder,
    a_bits: tuple[Wire, Wire, Wire, Wire],
    b_bits: tuple[Wire, Wire, Wire, Wire],
    cin: Wire,
) -> tuple[Wire, list[Wire]]:
    """One full BCD digit block (8 gates); returns (cout, [sum3..sum0]).

    Marks the block's 10 garbage wires; the caller owns cout and sums.
    """
    gates = catalog_by_name()
    scl, pg, hng, fg = gates["SCL"], gates["PG"], gates["HNG"], gates["FG"]

    # adder-1: plain binary sum of the digit pair.
    c4, (s3, s2, s1, s0) = _add_ripple4(builder, a_bits, b_bits, cin)

    # correction: Cout = C4 ^ S3(S2+S1); S1,S2,S3 pass through untouched.
    s1p, s2p, s3p, cout = builder.add_gate(scl, [s1, s2, s3, c4])

    # adder-2: add 0110 when Cout is set. The PG and HNG pass-through
    # pins carry Cout forward, so no wire ever splits.
    #   PG(Cout, S1, 0)            -> Cout copy, Sum1 = S1^Cout, c1 = S1·Cout
    #   HNG(S2, Cout, c1, 0)       -> S2 (garbage), Cout copy, Sum2, c2
    #   FG(c2, S3)                 -> c2 (garbage), Sum3 = S3^c2
    zero_pg = builder.add_constant(0)
    cout_a, sum1, carry1 = builder.add_gate(pg, [cout, s1p, zero_pg])
    zero_hng = builder.add_constant(0)
    s2_spent, cout_b, sum2, carry2 = builder.add_gate(hng, [s2p, cout_a, carry1, zero_hng])
    builder.mark_garbage(s2_spent)
    c2_spent, sum3 = builder.add_gate(fg, [carry2, s3p])
    builder.mark_garbage(c2_spent)

    return cout_b, [sum3, sum2, sum1, s0]


def build_bcd_adder_digit() -> Circuit:
    """One-digit BCD adder: 8 gates, 10 garbage, 6 constants, delay 8.

    Inputs a3..a0, b3..b0, cin; outputs cout, s3..s0 (the BCD sum digit).
    """
    builder = new_circuit(["a3", "a2", "a1", "a0", "b3", "b2", "b1", "b0", "cin"])
    ins = builder.inputs
    cout, sums = _add_bcd_digit(builder, ins[0:4], ins[4:8], ins[8])
    builder.mark_output(cout, "cout")
    for i, wire in enumerate(sums):
        builder.mark_output(wire, f"s{3 - i}")
    return builder.seal()


def bcd_digit_stage_tags() -> dict[int, str]:
    """Stage labels for build_bcd_adder_digit's instances.

    Instances 0-3 are the ripple full adders, 4 the SCL correction,
    5-7 the PG/HNG/FG of adder-2.
    """
    tags = {i: "adder1" for i in range(4)}
    tags[4] = "correction"
    tags.update({i: "adder2" for i in (5, 6, 7)})
    return tags


def build_bcd_adder_n(n: int) -> Circuit:
    """Cascade of n one-digit blocks, carry rippling between blocks.

    Inputs: a and b most-significant digit first, 4 bits per digit
    (a{d}_3..a{d}_0 where d counts down from n-1), then cin. Outputs:
    cout, then the sum digits most-significant first. n is capped at
    MAX_DIGITS to keep exhaustive verification tractable.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_DIGITS:
        raise BadDigitCount(f"digit count must be in [1, {MAX_DIGITS}], got {n!r}")
    if n == 1:
        return build_bcd_adder_digit()

    labels = [f"a{d}_{i}" for d in range(n - 1, -1, -1) for i in (3, 2, 1, 0)]
    labels += [f"b{d}_{i}" for d in range(n - 1, -1, -1) for i in (3, 2, 1, 0)]
    labels += ["cin"]
    builder = new_circuit(labels)
    ins = builder.inputs

    def nibble(base: int, d: int) -> tuple[Wire, Wire, Wire, Wire]:
        # Labels run MSB digit first; digit d sits (n-1-d) nibbles in.
        start = base + (n - 1 - d) * 4
        return tuple(ins[start : start + 4])

    carry: Wire = ins[8 * n]
    sums_per_digit: list[list[Wire]] = []
    for d in range(n):
        carry, sums = _add_bcd_digit(builder, nibble(0, d), nibble(4 * n, d), carry)
        sums_per_digit.append(sums)

    builder.mark_output(carry, "cout")
    for d in range(n - 1, -1, -1):
        for i, wire in enumerate(sums_per_digit[d]):
            builder.mark_output(wire, f"s{d}_{3 - i}")
    return builder.seal()


def encode_bcd_operands(a: int, b: int, cin: int, digits: int = 1) -> BitWord:
    """Pack decimal operands into the adder's input word.

    Layout matches the builders: a's digits MSB-first (4 bits each,
    MSB-first), then b's, then cin.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    limit = 10**digits
    if not 0 <= a < limit or not 0 <= b < limit:
        raise ValueError(f"operands must be in [0, {limit - 1}]")
    _bit("cin", cin)
    bits: list[int] = []
    for operand in (a, b):
        for d in range(digits - 1, -1, -1):
            nibble = (operand // 10**d) % 10
            bits.extend((nibble >> k) & 1 for k in (3, 2, 1, 0))
    bits.append(cin)
    return BitWord(tuple(bits))


def decode_bcd_result(outputs: BitWord, digits: int = 1) -> tuple[int, int]:
    """Unpack an adder's output word into (cout, decimal sum value).

    Inverse of the builders' output layout: cout, then sum digits
    MSB-first. Out-of-range nibbles (possible for non-BCD inputs) decode
    to their binary value so mismatches stay visible.
    """
    if outputs.width != 4 * digits + 1:
        raise ValueError(
            f"expected {4 * digits + 1} output bits for {digits} digit(s), "
            f"got {outputs.width}"
        )
    cout = outputs[0]
    value = 0
    for d in range(digits):
        nibble_bits = outputs.bits[1 + 4 * d : 5 + 4 * d]
        nibble = 0
        for bit in nibble_bits:
            nibble = (nibble << 1) | bit
        value = value * 10 + nibble
    return cout, value


def verify_bcd_adder(digits: int = 1) -> tuple[int, list[tuple]]:
    """Exhaustively compare the n-digit adder against the decimal oracle.

    Covers every valid operand pair and carry-in: 10^n * 10^n * 2 cases.
    Returns (case count, failures); each failure records the operands
    and both results.
    """
    circuit = build_bcd_adder_n(digits)
    limit = 10**digits
    failures: list[tuple] = []
    total = 0
    for a in range(limit):
        for b in range(limit):
            for cin in (0, 1):
                total += 1
                outputs, _ = circuit.simulate(encode_bcd_operands(a, b, cin, digits))
                got = decode_bcd_result(outputs, digits)
                want = oracle_bcd_add_number(a, b, cin, digits)
                if got != want:
                    failures.append((a, b, cin, got, want))
    return total, failures


@dataclass(frozen=True)
class ReferenceRow:
    """One row of the published design-comparison table, stored verbatim.

    Stage figures and totals are carried as printed; for some designs
    the printed totals include fan-out workaround gates, so the columns
    are not additive and are never recomputed here.
    """

    design_label: str
    adder1_gates: int
    adder1_garbage: int
    correction_gates: int
    correction_garbage: int
    adder2_gates: int
    adder2_garbage: int
    total_gates: int
    total_garbage: int
    total_constants: int
    total_delay: int


def reference_table() -> list[ReferenceRow]:
    """The six-design comparison: five published designs plus this one."""
    return [
        ReferenceRow("BCD adder[13] (without fan-out)", 4, 8, 3, 6, 4, 8, 11, 22, 11, 10),
        ReferenceRow("BCD adder[14]", 4, 8, 6, 6, 4, 8, 14, 22, 17, 13),
        ReferenceRow("BCD adder[15]", 8, 8, 7, 6, 8, 8, 23, 22, 17, 14),
        ReferenceRow("BCD adder[16]", 4, 8, 3, 1, 3, 2, 10, 11, 7, 10),
        ReferenceRow("BCD adder[17]", 4, 8, 2, 1, 3, 2, 9, 11, 7, 9),
        ReferenceRow("Proposed BCD adder", 4, 8, 1, 0, 3, 2, 8, 10, 6, 8),
    ]
