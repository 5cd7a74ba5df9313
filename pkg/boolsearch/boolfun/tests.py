import io
import json
from pathlib import Path
import tempfile
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
import numpy as np

from boolfun.utils.config import VelocityParams, load_config
from boolfun.utils.errors import (
    ConfigError,
    OrderOutOfRangeError,
    SwapPreconditionError,
    TruthTableFormatError,
    UnbalancedFunctionError,
    UnsupportedSizeError,
)
from boolfun.utils.fitness import FitnessKind, evaluate, evaluate_spectra
from boolfun.utils.hillclimb import climb, nl_ci_hc, nl_hc
from boolfun.utils.properties import (
    NOT_APPLICABLE,
    PASS,
    SARKAR_MAITRA,
    SIEGENTHALER,
    PropertyReport,
    absolute_indicator,
    bound_violations,
    check_bounds,
    cidev,
    nonlinearity,
    pcdev,
    property_report,
)
from boolfun.utils.reports import ReportWriter
from boolfun.utils.spectra import (
    algebraic_degree,
    anf_to_string,
    anf_truth_table,
    autocorrelation,
    autocorrelation_naive,
    mobius_transform,
    walsh_swap_delta,
    walsh_transform_fast,
    walsh_transform_naive,
)
from boolfun.utils.truth_table import (
    BooleanFunction,
    constant,
    from_callable,
    hamming_distance,
    parse_truth_table,
    random_balanced,
    variable,
)

XOR2 = BooleanFunction.from_bits([0, 1, 1, 0])
AND2 = BooleanFunction.from_bits([0, 0, 0, 1])


def bent(n):
    """x1x2 + x3x4 + ... on an even number of variables."""
    return from_callable(n, lambda *xs: sum(xs[i] & xs[i + 1] for i in range(0, n, 2)))


def random_function(n, rng):
    return BooleanFunction.from_bits(rng.integers(0, 2, 1 << n))


class TruthTableTests(SimpleTestCase):
    def test_parse_examples(self):
        np.testing.assert_array_equal(parse_truth_table("6").table, [0, 1, 1, 0])
        np.testing.assert_array_equal(parse_truth_table("8").table, [1, 0, 0, 0])
        f = parse_truth_table("0001")
        self.assertEqual(f.n, 4)
        self.assertEqual(f.weight, 1)
        self.assertEqual(int(np.flatnonzero(f.table)[0]), 15)

    def test_parse_ignores_whitespace_and_case(self):
        self.assertEqual(parse_truth_table(" 0F f0\n"), parse_truth_table("0ff0"))

    def test_parse_errors(self):
        with self.assertRaisesMessage(TruthTableFormatError, "line 4"):
            parse_truth_table("XYZ", line=4)
        with self.assertRaises(TruthTableFormatError):
            parse_truth_table("abc")
        with self.assertRaises(TruthTableFormatError):
            parse_truth_table("")
        with self.assertRaises(TruthTableFormatError):
            parse_truth_table("0" * (1 << 16))

    def test_hex_is_lossless(self):
        rng = np.random.default_rng(7)
        for n in range(2, 11):
            f = random_function(n, rng)
            self.assertEqual(BooleanFunction.from_hex(f.to_hex()), f)

    def test_variable_uses_msb_for_x1(self):
        self.assertEqual(variable(3, 1).to_hex(), "0f")
        self.assertEqual(variable(3, 3).to_hex(), "55")
        with self.assertRaises(UnsupportedSizeError):
            variable(3, 4)

    def test_from_bits_rejects_bad_tables(self):
        with self.assertRaises(UnsupportedSizeError):
            BooleanFunction.from_bits([0, 1, 1])
        with self.assertRaises(TruthTableFormatError):
            BooleanFunction.from_bits([0, 2])

    def test_table_is_read_only(self):
        with self.assertRaises(ValueError):
            XOR2.table[0] = 1

    def test_random_balanced(self):
        rng = np.random.default_rng(1)
        x = random_balanced(6, rng)
        self.assertEqual(int(x.sum()), 32)
        x[0] ^= 1
        self.assertEqual(hamming_distance(x, random_balanced(6, np.random.default_rng(1))), 1)


class WalshTests(SimpleTestCase):
    def test_examples(self):
        np.testing.assert_array_equal(walsh_transform_fast(XOR2).values, [0, 0, 0, 4])
        np.testing.assert_array_equal(walsh_transform_fast(AND2).values, [2, 2, 2, -2])
        np.testing.assert_array_equal(walsh_transform_fast(constant(3)).values, [8, 0, 0, 0, 0, 0, 0, 0])
        np.testing.assert_array_equal(walsh_transform_fast(constant(3, 1)).values, [-8, 0, 0, 0, 0, 0, 0, 0])

    def test_fast_matches_naive_exhaustively(self):
        for n in (2, 3):
            m = 1 << n
            for code in range(1 << m):
                f = BooleanFunction.from_bits([(code >> i) & 1 for i in range(m)])
                self.assertEqual(walsh_transform_fast(f), walsh_transform_naive(f))

    def test_fast_matches_naive_on_random_functions(self):
        rng = np.random.default_rng(11)
        for n in range(4, 11):
            for _ in range(1000):
                f = random_function(n, rng)
                fast = walsh_transform_fast(f)
                self.assertEqual(fast, walsh_transform_naive(f))
                self.assertEqual(int(np.sum(fast.values * fast.values)), 1 << (2 * n))
                self.assertEqual(int(fast.values[0]), (1 << n) - 2 * f.weight)

    def test_parseval(self):
        rng = np.random.default_rng(3)
        for n in range(2, 13):
            values = walsh_transform_fast(random_function(n, rng)).values
            self.assertEqual(int(np.sum(values * values)), 1 << (2 * n))

    def test_zero_coefficient_vanishes_exactly_on_balanced_functions(self):
        rng = np.random.default_rng(13)
        for n in range(2, 9):
            table = random_balanced(n, rng)
            self.assertEqual(int(walsh_transform_fast(BooleanFunction.from_bits(table)).values[0]), 0)
            table[0] ^= 1
            self.assertEqual(abs(int(walsh_transform_fast(BooleanFunction.from_bits(table)).values[0])), 2)
            f = random_function(n, rng)
            self.assertEqual(int(walsh_transform_fast(f).values[0]) == 0, f.is_balanced)

    def test_naive_size_limit(self):
        with self.assertRaises(UnsupportedSizeError):
            walsh_transform_naive(constant(13))

    def test_swap_delta_matches_recomputation(self):
        delta = walsh_swap_delta(walsh_transform_fast(AND2), AND2, 3, 0)
        self.assertEqual(delta, walsh_transform_fast(BooleanFunction.from_bits([1, 0, 0, 0])))

        rng = np.random.default_rng(5)
        for _ in range(10_000):
            f = BooleanFunction.from_bits(random_balanced(int(rng.integers(2, 9)), rng))
            u = int(rng.choice(np.flatnonzero(f.table == 1)))
            v = int(rng.choice(np.flatnonzero(f.table == 0)))
            spectrum = walsh_swap_delta(walsh_transform_fast(f), f, u, v)
            self.assertEqual(spectrum, walsh_transform_fast(f.swapped(u, v)))

    def test_swap_delta_preconditions(self):
        with self.assertRaises(SwapPreconditionError):
            walsh_swap_delta(walsh_transform_fast(AND2), AND2, 0, 3)


class AnfTests(SimpleTestCase):
    def test_examples(self):
        np.testing.assert_array_equal(mobius_transform(AND2).coefficients, [0, 0, 0, 1])
        np.testing.assert_array_equal(mobius_transform(XOR2).coefficients, [0, 1, 1, 0])
        np.testing.assert_array_equal(mobius_transform(constant(2, 1)).coefficients, [1, 0, 0, 0])

    def test_involution(self):
        rng = np.random.default_rng(9)
        for n in range(2, 11):
            f = random_function(n, rng)
            self.assertEqual(anf_truth_table(mobius_transform(f)), f)

    def test_degree(self):
        self.assertEqual(algebraic_degree(mobius_transform(AND2)), 2)
        self.assertEqual(algebraic_degree(mobius_transform(constant(3))), 0)
        self.assertEqual(algebraic_degree(mobius_transform(bent(6))), 2)

    def test_to_string(self):
        self.assertEqual(anf_to_string(mobius_transform(AND2)), "x1x2")
        self.assertEqual(anf_to_string(mobius_transform(XOR2)), "x2 + x1")
        self.assertEqual(anf_to_string(mobius_transform(constant(2))), "0")
        self.assertEqual(anf_to_string(mobius_transform(constant(2, 1))), "1")


class AutocorrelationTests(SimpleTestCase):
    def test_examples(self):
        np.testing.assert_array_equal(autocorrelation(constant(3)).values, [8] * 8)
        np.testing.assert_array_equal(autocorrelation(XOR2).values, [4, -4, -4, 4])
        values = autocorrelation(bent(4)).values
        self.assertEqual(values[0], 16)
        self.assertFalse(np.any(values[1:]))

    def test_wiener_khinchin_matches_naive(self):
        rng = np.random.default_rng(13)
        for n in range(2, 11):
            f = random_function(n, rng)
            self.assertEqual(autocorrelation(f), autocorrelation_naive(f))


class PropertyTests(SimpleTestCase):
    def test_nonlinearity(self):
        self.assertEqual(nonlinearity(walsh_transform_fast(XOR2)), 0)
        self.assertEqual(nonlinearity(walsh_transform_fast(bent(4))), 6)
        self.assertEqual(nonlinearity(walsh_transform_fast(bent(6))), 28)

    def test_absolute_indicator(self):
        self.assertEqual(absolute_indicator(autocorrelation(bent(4))), 0)
        self.assertEqual(absolute_indicator(autocorrelation(constant(3))), 8)

    def test_deviations(self):
        self.assertEqual(cidev(walsh_transform_fast(variable(3, 1)), 1), 8)
        self.assertEqual(cidev(walsh_transform_fast(XOR2), 1), 0)
        self.assertEqual(pcdev(autocorrelation(bent(4)), 1), 0)
        self.assertEqual(pcdev(autocorrelation(constant(3)), 1), 8)

    def test_order_range(self):
        with self.assertRaises(OrderOutOfRangeError):
            cidev(walsh_transform_fast(XOR2), 0)
        with self.assertRaises(OrderOutOfRangeError):
            pcdev(autocorrelation(XOR2), 3)

    def test_report_for_xor(self):
        report = property_report(XOR2)
        self.assertTrue(report.balanced)
        self.assertEqual(report.nonlinearity, 0)
        self.assertEqual(report.degree, 1)
        self.assertEqual(report.resiliency_order, 1)
        self.assertEqual(report.cidev, {1: 0, 2: 4})

    def test_report_for_constant(self):
        report = property_report(constant(3))
        self.assertFalse(report.balanced)
        self.assertIsNone(report.resiliency_order)
        self.assertIsNone(report.pc_order)
        self.assertEqual(report.degree, 0)

    def test_report_for_bent(self):
        report = property_report(bent(4))
        self.assertFalse(report.balanced)
        self.assertEqual(report.pc_order, 4)
        self.assertEqual(report.absolute_indicator, 0)
        self.assertEqual(report.degree, 2)

    def test_record_fields(self):
        record = property_report(XOR2, k_max=2, l_max=1).as_record()
        self.assertEqual(
            list(record),
            ["n", "balanced", "nl", "deg", "cidev_1", "cidev_2", "pcdev_1", "ac_max", "resiliency", "pc_order"],
        )

    def _report(self, **fields):
        defaults = dict(
            n=7, balanced=True, weight=64, nonlinearity=56, degree=4, cidev={1: 0}, pcdev={1: 8},
            absolute_indicator=16, resiliency_order=2, pc_order=None,
        )
        defaults.update(fields)
        return PropertyReport(**defaults)

    def test_sarkar_maitra_tight(self):
        findings = {f.bound: f for f in check_bounds(self._report())}
        self.assertEqual(findings[SARKAR_MAITRA].limit, 56)
        self.assertTrue(findings[SARKAR_MAITRA].tight)

    def test_siegenthaler_tight(self):
        findings = {f.bound: f for f in check_bounds(self._report(resiliency_order=1, degree=5))}
        self.assertEqual(findings[SIEGENTHALER].status, PASS)
        self.assertTrue(findings[SIEGENTHALER].tight)

    def test_siegenthaler_for_balanced_only(self):
        findings = {f.bound: f for f in check_bounds(self._report(resiliency_order=0, degree=6))}
        self.assertEqual(findings[SIEGENTHALER].limit, 6)
        self.assertEqual(findings[SIEGENTHALER].status, PASS)

    def test_violation_is_reported(self):
        violations = bound_violations(self._report(resiliency_order=1, degree=6))
        self.assertEqual([f.bound for f in violations], [SIEGENTHALER])

    def test_xor_bounds_not_applicable(self):
        statuses = {f.bound: f.status for f in check_bounds(property_report(XOR2))}
        self.assertEqual(statuses[SIEGENTHALER], NOT_APPLICABLE)
        self.assertEqual(statuses[SARKAR_MAITRA], NOT_APPLICABLE)


class FitnessTests(SimpleTestCase):
    # x1 + x2 on three variables
    LINEAR = BooleanFunction.from_hex("3c")

    def test_linear_function(self):
        self.assertEqual(evaluate(FitnessKind.FIT2, self.LINEAR), -8)
        self.assertEqual(evaluate(FitnessKind.FIT1, self.LINEAR), -1)
        self.assertEqual(evaluate(FitnessKind.FIT3, self.LINEAR), -8)

    def test_spectra_variant_agrees(self):
        rng = np.random.default_rng(17)
        f = BooleanFunction.from_bits(random_balanced(7, rng))
        spectrum = walsh_transform_fast(f)
        for kind in FitnessKind:
            self.assertEqual(evaluate_spectra(kind, spectrum, autocorrelation(f)), evaluate(kind, f))

    def test_unbalanced_rejected(self):
        with self.assertRaises(UnbalancedFunctionError):
            evaluate(FitnessKind.FIT1, AND2)

    def test_parse(self):
        self.assertIs(FitnessKind.parse("FIT2"), FitnessKind.FIT2)
        self.assertEqual(FitnessKind.FIT1.ci_order, 1)
        self.assertEqual(FitnessKind.FIT2.ci_order, 2)
        self.assertIsNone(FitnessKind.FIT3.ci_order)
        with self.assertRaises(ValueError):
            FitnessKind.parse("fit4")


class HillClimbTests(SimpleTestCase):
    def test_nonlinearity_never_drops(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            f = BooleanFunction.from_bits(random_balanced(6, rng))
            outcome = climb(f, None, 20, rng)
            self.assertTrue(outcome.function.is_balanced)
            self.assertEqual(outcome.spectrum, walsh_transform_fast(outcome.function))
            before = nonlinearity(walsh_transform_fast(f))
            self.assertGreaterEqual(nonlinearity(outcome.spectrum), before)

    def test_ci_climb_is_monotone_in_both_targets(self):
        rng = np.random.default_rng(23)
        for _ in range(1000):
            f = BooleanFunction.from_bits(random_balanced(6, rng))
            spectrum = walsh_transform_fast(f)
            outcome = climb(f, 1, 20, rng)
            self.assertEqual(outcome.spectrum, walsh_transform_fast(outcome.function))
            self.assertLessEqual(cidev(outcome.spectrum, 1), cidev(spectrum, 1))
            self.assertGreaterEqual(nonlinearity(outcome.spectrum), nonlinearity(spectrum))

    def test_spectrum_follows_each_accepted_swap(self):
        rng = np.random.default_rng(27)
        f = BooleanFunction.from_bits(random_balanced(7, rng))
        with mock.patch("boolfun.utils.hillclimb.walsh_swap_delta", side_effect=walsh_swap_delta) as delta:
            outcome = climb(f, 2, 30, rng)
        self.assertEqual(delta.call_count, outcome.swaps)
        self.assertGreater(outcome.swaps, 0)
        self.assertEqual(outcome.spectrum, walsh_transform_fast(outcome.function))

    def test_affine_start_improves(self):
        f = from_callable(4, lambda a, b, c, d: a ^ b)
        out = nl_hc(f, budget=1, rng=np.random.default_rng(0))
        self.assertGreaterEqual(nonlinearity(walsh_transform_fast(out)), 1)

    def test_ci_climb_reduces_deviation(self):
        f = variable(3, 1)
        out = nl_ci_hc(f, 1, budget=50, rng=np.random.default_rng(0))
        self.assertLess(cidev(walsh_transform_fast(out), 1), 8)

    def test_local_optimum_is_fixpoint(self):
        rng = np.random.default_rng(29)
        f = BooleanFunction.from_bits(random_balanced(5, rng))
        first = climb(f, None, 10 ** 6, rng)
        second = climb(first.function, None, 10 ** 6, np.random.default_rng(1))
        self.assertEqual(second.swaps, 0)
        self.assertEqual(second.function, first.function)

    def test_zero_budget(self):
        f = BooleanFunction.from_bits(random_balanced(4, np.random.default_rng(2)))
        outcome = climb(f, 2, 0, np.random.default_rng(0))
        self.assertEqual(outcome.function, f)
        self.assertEqual(outcome.evaluations, 0)

    def test_preconditions(self):
        rng = np.random.default_rng(0)
        with self.assertRaises(UnbalancedFunctionError):
            climb(AND2, None, 5, rng)
        with self.assertRaises(OrderOutOfRangeError):
            climb(XOR2, 3, 5, rng)


class ConfigTests(SimpleTestCase):
    def test_search_defaults(self):
        config = load_config(mode="search", fitness="fit3")
        self.assertEqual(config.n, [7])
        self.assertEqual((config.runs, config.particles, config.iterations), (100, 200, 400))
        self.assertEqual(config.velocity_params(), VelocityParams(w=0.2828, phi=2.1824, psi=0.8951, v_max=4.2639))
        self.assertEqual(config.run_seeds()[:3], [0, 1, 2])

    def test_n_ranges(self):
        self.assertEqual(load_config(mode="search", n="7-9").n, [7, 8, 9])
        self.assertEqual(load_config(mode="search", n="7,10").n, [7, 10])

    def test_params_string(self):
        config = load_config(mode="search", params="0.5, 2, 1.5, 3")
        self.assertEqual(config.velocity_params().v_max, 3.0)

    def test_seeds_set_runs(self):
        config = load_config(mode="search", seeds=[5, 9])
        self.assertEqual(config.runs, 2)
        self.assertEqual(config.run_seeds(), [5, 9])

    def test_meta_defaults(self):
        config = load_config(mode="meta", meta="lus")
        self.assertEqual(config.n, [7])
        self.assertEqual((config.runs, config.particles, config.iterations), (30, 50, 100))
        self.assertEqual(config.lus.beta, 0.33)
        self.assertEqual(config.cga.population, 20)
        self.assertEqual(config.meta_runs, 6)

    @override_settings(BOOLSEARCH={
        "HC_BUDGET": 5, "PSO_PARAMS": {}, "SWARM_SIZE": 3, "ITERATIONS": 4, "RUNS": 2,
        "LUS": {"beta": 0.5, "tau": 0.1, "initial_range": 1.0},
        "CGA": {"population": 4, "generations": 1, "crossover_prob": 1.0, "mutation_prob": 0.0},
        "META_SPEC": {"n": 5, "particles": 2, "iterations": 1, "runs": 1}, "META_RUNS": 1,
        "WORKERS": 1, "OUTPUT_FORMAT": "csv", "ANALYZE_ORDERS": {"k_max": 1, "l_max": 1},
    })
    def test_defaults_follow_settings(self):
        config = load_config(mode="search")
        self.assertEqual((config.runs, config.particles, config.iterations, config.hc_budget), (2, 3, 4, 5))
        self.assertEqual(config.format, "csv")

    def test_errors(self):
        bad = [
            dict(mode="search", runs=3, seeds=[1, 2]),
            dict(mode="search", n="1"),
            dict(mode="search", n="17"),
            dict(mode="search", params="1,2"),
            dict(mode="search", fitness="fit9"),
            dict(mode="meta", n="7-8"),
            dict(mode="analyze"),
            dict(mode="explore"),
            dict(mode="search", unknown_key=1),
        ]
        for overrides in bad:
            with self.subTest(overrides=overrides), self.assertRaises(ConfigError):
                load_config(**overrides)

    def test_yaml_file_and_overrides(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "campaign.yaml"
            path.write_text("mode: search\nn: 8\nruns: 4\nfitness: fit2\ncga:\n  population: 6\n")
            config = load_config(path, runs=2)
            self.assertEqual(config.n, [8])
            self.assertEqual(config.runs, 2)
            self.assertIs(config.fitness, FitnessKind.FIT2)
            self.assertEqual(config.cga.population, 6)

    def test_yaml_input_is_relative_to_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "analyze.yaml"
            path.write_text("mode: analyze\ninput: tables.txt\n")
            self.assertEqual(load_config(path).input, Path(tmp) / "tables.txt")

    def test_yaml_out_is_relative_to_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "search.yaml"
            path.write_text("mode: search\nout: reports/fit1.jsonl\n")
            self.assertEqual(load_config(path).out, Path(tmp) / "reports" / "fit1.jsonl")
            self.assertEqual(load_config(path, out="fit1.jsonl").out, Path("fit1.jsonl"))

    def test_malformed_yaml(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "broken.yaml"
            path.write_text("mode: [search\n")
            with self.assertRaises(ConfigError):
                load_config(path)
            with self.assertRaises(ConfigError):
                load_config(Path(tmp) / "missing.yaml")

    def test_unknown_keys_in_sections(self):
        with self.assertRaises(ConfigError):
            load_config(mode="meta", cga={"population": 3})
        with self.assertRaises(ConfigError):
            load_config(mode="meta", lus={"beta": 0.3, "gamma": 1})


class ReportWriterTests(SimpleTestCase):
    def test_json_lines(self):
        stream = io.StringIO()
        writer = ReportWriter(stream, "json")
        writer.write({"a": 1, "b": None})
        writer.write({"a": 2, "b": [1, 2]})
        lines = stream.getvalue().splitlines()
        self.assertEqual([json.loads(line) for line in lines], [{"a": 1, "b": None}, {"a": 2, "b": [1, 2]}])
        self.assertEqual(writer.count, 2)

    def test_csv_blocks(self):
        stream = io.StringIO()
        writer = ReportWriter(stream, "csv")
        writer.write({"a": 1, "b": None})
        writer.write({"a": 2, "b": 3})
        writer.write({"c": "x"})
        self.assertEqual(stream.getvalue(), "a,b\n1,\n2,3\n\nc\nx\n")


class AnalyzeCommandTests(SimpleTestCase):
    def _analyze(self, text, **options):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "tables.txt"
            if isinstance(text, bytes):
                path.write_bytes(text)
            else:
                path.write_text(text)
            out = io.StringIO()
            call_command("analyze", str(path), stdout=out, **options)
            return out.getvalue()

    def test_xor_line(self):
        record = json.loads(self._analyze("6\n"))
        self.assertEqual(record["line"], 1)
        self.assertTrue(record["balanced"])
        self.assertEqual((record["nl"], record["deg"], record["resiliency"]), (0, 1, 1))
        self.assertEqual(record["cidev_2"], 4)

    def test_one_report_per_line(self):
        output = self._analyze("6\n\n0ff0\nac\n", anf=True)
        records = [json.loads(line) for line in output.splitlines()]
        self.assertEqual([r["line"] for r in records], [1, 3, 4])
        self.assertEqual(records[1]["anf"], "x2 + x1")

    def test_empty_file(self):
        self.assertEqual(self._analyze(""), "")

    def test_csv_has_fixed_columns(self):
        output = self._analyze("6\n0ff0\n", format="csv")
        lines = output.splitlines()
        self.assertEqual(lines[0], "line,table,n,balanced,nl,deg,cidev_1,cidev_2,pcdev_1,ac_max,resiliency,pc_order")
        self.assertEqual(len(lines), 3)

    def test_bad_line_is_an_input_error(self):
        with self.assertRaises(CommandError) as caught:
            self._analyze("6\nXYZ\n")
        self.assertEqual(caught.exception.returncode, 3)
        self.assertIn("line 2", str(caught.exception))

    def test_undecodable_line_is_an_input_error(self):
        with self.assertRaises(CommandError) as caught:
            self._analyze(b"6\n\xff\n")
        self.assertEqual(caught.exception.returncode, 3)
        self.assertIn("line 2", str(caught.exception))

    def test_missing_file_is_an_input_error(self):
        with self.assertRaises(CommandError) as caught:
            call_command("analyze", "/nonexistent/tables.txt", stdout=io.StringIO())
        self.assertEqual(caught.exception.returncode, 3)

    def test_missing_input_is_a_config_error(self):
        with self.assertRaises(CommandError) as caught:
            call_command("analyze", stdout=io.StringIO())
        self.assertEqual(caught.exception.returncode, 2)

    def test_report_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            tables = Path(tmp) / "tables.txt"
            tables.write_text("6\n")
            report = Path(tmp) / "report.jsonl"
            call_command("analyze", str(tables), out=str(report), stdout=io.StringIO())
            self.assertEqual(json.loads(report.read_text())["table"], "6")
