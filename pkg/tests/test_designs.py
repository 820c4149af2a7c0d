"""Design tests: oracle, correction equations, adder constructions."""

from __future__ import annotations

import pytest

from revlogic.designs import (
    BadDigitCount,
    BcdCase,
    ReferenceRow,
    all_bcd_cases,
    bcd_digit_stage_tags,
    build_bcd_adder_digit,
    build_bcd_adder_n,
    build_correction_stage,
    build_full_adder,
    build_ripple_adder4,
    decode_bcd_result,
    encode_bcd_operands,
    eval_correction_eq1,
    eval_correction_eq2,
    oracle_bcd_add,
    oracle_bcd_add_number,
    reference_table,
    verify_bcd_adder,
)
from revlogic.gates import BitWord
from revlogic.metrics import analyze, delay, delay_decomposition


class TestOracle:
    def test_no_correction(self):
        assert oracle_bcd_add(4, 4, 0) == (0, 8)

    def test_maximum_sum(self):
        assert oracle_bcd_add(9, 9, 1) == (1, 9)

    def test_correction_path(self):
        assert oracle_bcd_add(7, 8, 0) == (1, 5)

    def test_matches_plain_arithmetic(self):
        for a in range(10):
            for b in range(10):
                for cin in (0, 1):
                    cout, total = oracle_bcd_add(a, b, cin)
                    assert cout * 10 + total == a + b + cin

    def test_rejects_bad_digit(self):
        with pytest.raises(ValueError):
            oracle_bcd_add(10, 0, 0)
        with pytest.raises(ValueError):
            oracle_bcd_add(0, -1, 0)

    def test_rejects_bad_carry(self):
        with pytest.raises(ValueError):
            oracle_bcd_add(0, 0, 2)

    def test_number_oracle_chains_digits(self):
        assert oracle_bcd_add_number(99, 1, 0, 2) == (1, 0)
        assert oracle_bcd_add_number(99, 99, 1, 2) == (1, 99)
        assert oracle_bcd_add_number(45, 55, 0, 2) == (1, 0)
        for a in (0, 7, 42, 99):
            for b in (0, 9, 58, 99):
                for cin in (0, 1):
                    cout, total = oracle_bcd_add_number(a, b, cin, 2)
                    assert cout * 100 + total == a + b + cin

    def test_number_oracle_bounds(self):
        with pytest.raises(ValueError):
            oracle_bcd_add_number(100, 0, 0, 2)


class TestBcdCase:
    def test_from_operands(self):
        case = BcdCase.from_operands(7, 8, 0)
        assert case.expected_cout == 1
        assert case.expected_sum == 5

    def test_inconsistent_case_rejected(self):
        with pytest.raises(ValueError):
            BcdCase(1, 1, 0, 1, 2)

    def test_bad_digit_rejected(self):
        with pytest.raises(ValueError):
            BcdCase(11, 0, 0, 1, 1)

    def test_all_cases(self):
        cases = all_bcd_cases()
        assert len(cases) == 200
        assert len(set(cases)) == 200


class TestCorrectionEquations:
    def test_eq1_examples(self):
        assert eval_correction_eq1(0, 0, 0, 1) == 1
        assert eval_correction_eq1(1, 0, 1, 0) == 1
        assert eval_correction_eq1(1, 1, 1, 1) == 1

    def test_eq2_examples(self):
        assert eval_correction_eq2(0, 0, 0, 1) == 1
        assert eval_correction_eq2(1, 0, 1, 0) == 1
        assert eval_correction_eq2(1, 1, 1, 1) == 0

    def test_bits_validated(self):
        with pytest.raises(ValueError):
            eval_correction_eq1(2, 0, 0, 0)
        with pytest.raises(ValueError):
            eval_correction_eq2(0, 0, 0, 2)

    def test_equal_on_reachable_states(self):
        # The reachable (s3,s2,s1,c4) states come from the binary sum
        # of two BCD digits plus carry: 0..19.
        for case in all_bcd_cases():
            total = case.a + case.b + case.cin
            c4, s3, s2, s1 = [(total >> k) & 1 for k in (4, 3, 2, 1)]
            v1 = eval_correction_eq1(s3, s2, s1, c4)
            v2 = eval_correction_eq2(s3, s2, s1, c4)
            assert v1 == v2
            assert v1 == case.expected_cout

    def test_disagree_somewhere_off_domain(self):
        disagreements = [
            (s3, s2, s1, c4)
            for s3 in (0, 1) for s2 in (0, 1) for s1 in (0, 1) for c4 in (0, 1)
            if eval_correction_eq1(s3, s2, s1, c4)
            != eval_correction_eq2(s3, s2, s1, c4)
        ]
        assert disagreements
        assert (1, 1, 1, 1) in disagreements


class TestFullAdder:
    def test_examples(self):
        circuit = build_full_adder()
        outputs, _ = circuit.simulate(BitWord((1, 1, 0)))
        assert outputs.bits == (0, 1)
        outputs, _ = circuit.simulate(BitWord((0, 0, 0)))
        assert outputs.bits == (0, 0)

    def test_all_inputs_match_binary_addition(self):
        circuit = build_full_adder()
        for value, (outputs, _) in enumerate(circuit.mapping()):
            a, b, cin = (value >> 2) & 1, (value >> 1) & 1, value & 1
            total, carry = outputs
            assert carry * 2 + total == a + b + cin

    def test_metrics(self):
        report = analyze(build_full_adder())
        assert (report.gate_count, report.garbage_count, report.constant_count) \
            == (1, 2, 1)


class TestRippleAdder4:
    def test_spot_values(self):
        circuit = build_ripple_adder4()
        word = BitWord.from_string("1001" "1001" "1")
        outputs, _ = circuit.simulate(word)
        assert outputs.bits == (1, 0, 0, 1, 1)

    def test_zero(self):
        circuit = build_ripple_adder4()
        outputs, _ = circuit.simulate(BitWord.from_int(0, 9))
        assert outputs.to_int() == 0

    def test_all_512_match_binary_addition(self):
        circuit = build_ripple_adder4()
        for value, (outputs, _) in enumerate(circuit.mapping()):
            a = (value >> 5) & 0xF
            b = (value >> 1) & 0xF
            cin = value & 1
            assert outputs.to_int() == a + b + cin

    def test_metrics(self):
        report = analyze(build_ripple_adder4())
        assert report.gate_count == 4
        assert report.garbage_count == 8
        assert report.constant_count == 4
        assert report.delay_levels == 4


class TestCorrectionStage:
    def test_metrics(self):
        report = analyze(build_correction_stage())
        assert report.gate_count == 1
        assert report.garbage_count == 0
        assert report.constant_count == 0

    def test_matches_eq2_everywhere(self):
        circuit = build_correction_stage()
        for value, (outputs, garbage) in enumerate(circuit.mapping()):
            s1, s2, s3, c4 = [(value >> k) & 1 for k in (3, 2, 1, 0)]
            assert garbage.width == 0
            assert outputs.bits == (s1, s2, s3,
                                    eval_correction_eq2(s3, s2, s1, c4))


class TestBcdAdderDigit:
    def test_metrics(self):
        report = analyze(build_bcd_adder_digit())
        assert report.gate_count == 8
        assert report.garbage_count == 10
        assert report.constant_count == 6
        assert report.delay_levels == 8

    def test_gate_mix(self):
        names = [inst.gate.name for inst in build_bcd_adder_digit().instances]
        assert names.count("HNG") == 5
        assert names.count("SCL") == 1
        assert names.count("PG") == 1
        assert names.count("FG") == 1

    def test_output_labels(self):
        circuit = build_bcd_adder_digit()
        assert circuit.output_labels == ("cout", "s3", "s2", "s1", "s0")

    def test_simulate_examples(self):
        circuit = build_bcd_adder_digit()
        outputs, _ = circuit.simulate(encode_bcd_operands(5, 5, 0))
        assert decode_bcd_result(outputs) == (1, 0)
        outputs, _ = circuit.simulate(encode_bcd_operands(0, 0, 0))
        assert decode_bcd_result(outputs) == (0, 0)
        outputs, _ = circuit.simulate(encode_bcd_operands(9, 9, 1))
        assert decode_bcd_result(outputs) == (1, 9)

    def test_all_200_cases_match_plain_arithmetic(self):
        circuit = build_bcd_adder_digit()
        for case in all_bcd_cases():
            word = encode_bcd_operands(case.a, case.b, case.cin)
            outputs, _ = circuit.simulate(word)
            cout, total = decode_bcd_result(outputs)
            assert cout * 10 + total == case.a + case.b + case.cin

    def test_verify_helper_agrees(self):
        total, failures = verify_bcd_adder(1)
        assert total == 200
        assert failures == []

    def test_stage_tags(self):
        assert bcd_digit_stage_tags() == {
            0: "adder1", 1: "adder1", 2: "adder1", 3: "adder1",
            4: "correction", 5: "adder2", 6: "adder2", 7: "adder2",
        }

    def test_delay_decomposition(self):
        circuit = build_bcd_adder_digit()
        decomposition = delay_decomposition(circuit, bcd_digit_stage_tags())
        assert decomposition == {"adder1": 4, "correction": 1, "adder2": 3}
        assert list(decomposition) == ["adder1", "correction", "adder2"]
        assert sum(decomposition.values()) == delay(circuit)


class TestCascade:
    def test_one_digit_degenerate(self):
        assert analyze(build_bcd_adder_n(1)) == analyze(build_bcd_adder_digit())

    def test_bad_digit_counts(self):
        for n in (0, -1, 5):
            with pytest.raises(BadDigitCount):
                build_bcd_adder_n(n)
        with pytest.raises(BadDigitCount):
            build_bcd_adder_n("2")

    def test_two_digit_shape(self):
        circuit = build_bcd_adder_n(2)
        assert circuit.width == 17
        assert len(circuit.outputs) == 9
        assert circuit.output_labels == (
            "cout", "s1_3", "s1_2", "s1_1", "s1_0", "s0_3", "s0_2", "s0_1", "s0_0",
        )

    def test_two_digit_metrics_scale(self):
        report = analyze(build_bcd_adder_n(2))
        assert report.gate_count == 16
        assert report.garbage_count == 20
        assert report.constant_count == 12

    def test_two_digit_delay_hand_traced(self):
        # The carry leaves each block from the adder-2 HNG at level 7;
        # the final FG adds one more level: 7 + 7 + 1 = 15.
        assert delay(build_bcd_adder_n(2)) == 15

    def test_two_digit_examples(self):
        circuit = build_bcd_adder_n(2)
        for a, b, cin, want in [
            (99, 1, 0, (1, 0)),
            (99, 99, 1, (1, 99)),
            (45, 55, 0, (1, 0)),
            (12, 34, 0, (0, 46)),
            (0, 0, 0, (0, 0)),
        ]:
            outputs, _ = circuit.simulate(encode_bcd_operands(a, b, cin, 2))
            assert decode_bcd_result(outputs, 2) == want

    def test_two_digit_sample_against_arithmetic(self):
        circuit = build_bcd_adder_n(2)
        for a in range(0, 100, 7):
            for b in range(0, 100, 9):
                for cin in (0, 1):
                    outputs, _ = circuit.simulate(encode_bcd_operands(a, b, cin, 2))
                    cout, total = decode_bcd_result(outputs, 2)
                    assert cout * 100 + total == a + b + cin

    def test_three_digit_spot(self):
        circuit = build_bcd_adder_n(3)
        outputs, _ = circuit.simulate(encode_bcd_operands(999, 1, 0, 3))
        assert decode_bcd_result(outputs, 3) == (1, 0)


class TestEncodeDecode:
    def test_encode_layout(self):
        word = encode_bcd_operands(9, 3, 1)
        assert str(word) == "1001" "0011" "1"

    def test_decode_inverts_oracle_layout(self):
        for a in range(10):
            for b in range(10):
                cout, total = oracle_bcd_add(a, b, 0)
                bits = (cout,) + tuple((total >> k) & 1 for k in (3, 2, 1, 0))
                assert decode_bcd_result(BitWord(bits)) == (cout, total)

    def test_encode_bounds(self):
        with pytest.raises(ValueError):
            encode_bcd_operands(10, 0, 0)
        with pytest.raises(ValueError):
            encode_bcd_operands(0, 0, 2)

    def test_decode_width_checked(self):
        with pytest.raises(ValueError):
            decode_bcd_result(BitWord((1, 0, 1)))


class TestReferenceTable:
    def test_six_rows(self):
        rows = reference_table()
        assert len(rows) == 6
        assert [r.design_label for r in rows] == [
            "BCD adder[13] (without fan-out)",
            "BCD adder[14]",
            "BCD adder[15]",
            "BCD adder[16]",
            "BCD adder[17]",
            "Proposed BCD adder",
        ]

    def test_row_17(self):
        row = next(r for r in reference_table() if r.design_label == "BCD adder[17]")
        assert (row.total_gates, row.total_garbage,
                row.total_constants, row.total_delay) == (9, 11, 7, 9)

    def test_row_15(self):
        row = next(r for r in reference_table() if r.design_label == "BCD adder[15]")
        assert (row.total_gates, row.total_garbage,
                row.total_constants, row.total_delay) == (23, 22, 17, 14)

    def test_proposed_row_matches_build(self):
        proposed = reference_table()[-1]
        assert proposed.design_label == "Proposed BCD adder"
        report = analyze(build_bcd_adder_digit())
        assert proposed.total_gates == report.gate_count
        assert proposed.total_garbage == report.garbage_count
        assert proposed.total_constants == report.constant_count
        assert proposed.total_delay == report.delay_levels

    def test_proposed_stage_columns_match_builds(self):
        proposed = reference_table()[-1]
        adder1 = analyze(build_ripple_adder4())
        assert proposed.adder1_gates == adder1.gate_count == 4
        assert proposed.adder1_garbage == adder1.garbage_count == 8
        correction = analyze(build_correction_stage())
        assert proposed.correction_gates == correction.gate_count == 1
        assert proposed.correction_garbage == correction.garbage_count == 0

    def test_rows_are_immutable_records(self):
        row = reference_table()[0]
        assert isinstance(row, ReferenceRow)
        with pytest.raises(AttributeError):
            row.total_gates = 0
