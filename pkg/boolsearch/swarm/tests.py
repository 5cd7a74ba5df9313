import io
import json
from pathlib import Path
import tempfile
from unittest import mock, skipUnless

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, tag
import numpy as np
from scipy.stats import chisquare

from boolfun.utils.errors import SwapPreconditionError, UnbalancedFunctionError, UnsupportedSizeError
from boolfun.utils.fitness import FitnessKind, evaluate
from boolfun.utils.hillclimb import climb
from boolfun.utils.properties import bound_violations, property_report
from boolfun.utils.truth_table import BooleanFunction, hamming_distance, random_balanced
from swarm.models import SearchRun
from swarm.utils.pso import (
    Particle,
    PsoParams,
    anti_stagnation_swap,
    find_cand_swap,
    init_swarm,
    make_rng,
    pso_run,
    update_bal_pos,
    velocity_update,
)

FIT1_PARAMS = PsoParams(w=0.5067, phi=2.8751, psi=1.3587, v_max=3.5008)


def particle(position, velocity, local_best=None):
    position = np.array(position, dtype=np.uint8)
    return Particle(
        position=position,
        velocity=np.array(velocity, dtype=np.float64),
        probability=np.zeros(position.size),
        local_best=position.copy() if local_best is None else np.array(local_best, dtype=np.uint8),
    )


class InitSwarmTests(SimpleTestCase):
    def test_every_particle_is_balanced(self):
        swarm = init_swarm(6, PsoParams(w=0.5, phi=1, psi=1, v_max=2), make_rng(0))
        self.assertEqual(len(swarm), 50)
        for p in swarm:
            self.assertEqual(int(p.position.sum()), 32)
            self.assertTrue(np.all(np.abs(p.velocity) <= 2))
            np.testing.assert_array_equal(p.local_best, p.position)

    def test_zero_v_max_gives_even_odds(self):
        params = PsoParams(w=1, phi=1, psi=1, v_max=0, swarm_size=2)
        for p in init_swarm(4, params, make_rng(1)):
            np.testing.assert_array_equal(p.probability, np.full(16, 0.5))

    def test_seeded_initialization_is_reproducible(self):
        params = PsoParams(w=1, phi=1, psi=1, v_max=1, swarm_size=3)
        first, second = init_swarm(4, params, make_rng(9)), init_swarm(4, params, make_rng(9))
        for a, b in zip(first, second):
            np.testing.assert_array_equal(a.position, b.position)
            np.testing.assert_array_equal(a.velocity, b.velocity)

    def test_size_limits(self):
        with self.assertRaises(UnsupportedSizeError):
            init_swarm(1, FIT1_PARAMS, make_rng(0))
        with self.assertRaises(UnsupportedSizeError):
            init_swarm(17, FIT1_PARAMS, make_rng(0))


class VelocityTests(SimpleTestCase):
    def test_converged_particle_keeps_velocity(self):
        p = particle([0, 1, 1, 0], [0.3, -1.2, 2.0, 0.0])
        params = PsoParams(w=1, phi=2, psi=2, v_max=4)
        velocity_update(p, p.position.copy(), params, make_rng(0))
        np.testing.assert_allclose(p.velocity, [0.3, -1.2, 2.0, 0.0])

    def test_zero_coefficients(self):
        p = particle([0, 1, 1, 0], [0.3, -1.2, 2.0, 0.0])
        velocity_update(p, np.array([1, 0, 0, 1], dtype=np.uint8), PsoParams(0, 0, 0, 4), make_rng(0))
        np.testing.assert_array_equal(p.velocity, np.zeros(4))
        np.testing.assert_array_equal(p.probability, np.full(4, 0.5))

    def test_clamp(self):
        p = particle([0, 1], [7.2, -7.2])
        velocity_update(p, p.position.copy(), PsoParams(1, 0, 0, 3.5008), make_rng(0))
        np.testing.assert_array_equal(p.velocity, [3.5008, -3.5008])

    def test_pull_toward_global_best(self):
        p = particle([0, 1], [0.0, 0.0])
        velocity_update(p, np.array([1, 0], dtype=np.uint8), PsoParams(0, 2, 0, 10), make_rng(0))
        self.assertGreater(p.velocity[0], 0)
        self.assertLess(p.velocity[1], 0)

    def test_shared_random_draw(self):
        p = particle([0, 1], [0.0, 0.0], local_best=[1, 0])
        params = PsoParams(0, 1, 1, 10, shared_r=True)
        velocity_update(p, np.array([1, 0], dtype=np.uint8), params, make_rng(4))
        r = make_rng(4).random(2)
        np.testing.assert_allclose(p.velocity, [2 * r[0], -2 * r[1]])


class UpdateBalPosTests(SimpleTestCase):
    def test_hand_example(self):
        x = np.array([0, 1], dtype=np.uint8)
        swaps = update_bal_pos(x, np.array([1, 0], dtype=np.uint8), np.ones(2), make_rng(0))
        self.assertEqual(swaps, 1)
        np.testing.assert_array_equal(x, [1, 0])

    def test_agreeing_target_is_a_no_op(self):
        x = np.array([0, 1, 1, 0], dtype=np.uint8)
        self.assertEqual(update_bal_pos(x, x.copy(), np.ones(4), make_rng(0)), 0)
        np.testing.assert_array_equal(x, [0, 1, 1, 0])

    def test_zero_probability_is_a_no_op(self):
        x = np.array([0, 1, 1, 0], dtype=np.uint8)
        self.assertEqual(update_bal_pos(x, np.array([1, 0, 0, 1], dtype=np.uint8), np.zeros(4), make_rng(0)), 0)
        np.testing.assert_array_equal(x, [0, 1, 1, 0])

    def test_weight_is_preserved_and_distance_shrinks(self):
        rng = make_rng(8)
        for _ in range(10_000):
            n = int(rng.integers(2, 7))
            x = random_balanced(n, rng)
            y = random_balanced(n, rng)
            before = hamming_distance(x, y)
            swaps = update_bal_pos(x, y, rng.random(x.size), rng)
            self.assertEqual(2 * int(x.sum()), x.size)
            self.assertEqual(hamming_distance(x, y), before - 2 * swaps)

    def test_each_swap_cuts_distance_by_two(self):
        rng = make_rng(11)
        distances = []

        def checked(x, y, j, rng):
            k = find_cand_swap(x, y, j, rng)
            if k is not None:
                swapped = x.copy()
                swapped[j], swapped[k] = swapped[k], swapped[j]
                distances.append(hamming_distance(x, y) - hamming_distance(swapped, y))
            return k

        with mock.patch("swarm.utils.pso.find_cand_swap", side_effect=checked):
            for _ in range(10_000):
                x, y = random_balanced(5, rng), random_balanced(5, rng)
                update_bal_pos(x, y, rng.random(32), rng)
        self.assertTrue(distances)
        self.assertEqual(set(distances), {2})

    def test_full_probability_reaches_target(self):
        rng = make_rng(3)
        x, y = random_balanced(5, rng), random_balanced(5, rng)
        update_bal_pos(x, y, np.ones(32), rng)
        np.testing.assert_array_equal(x, y)

    def test_unbalanced_input(self):
        with self.assertRaises(UnbalancedFunctionError):
            update_bal_pos(np.array([1, 1], dtype=np.uint8), np.array([1, 0], dtype=np.uint8), np.ones(2), make_rng(0))


class FindCandSwapTests(SimpleTestCase):
    def test_single_candidate(self):
        x, y = np.array([0, 1]), np.array([1, 0])
        self.assertEqual(find_cand_swap(x, y, 0, make_rng(0)), 1)

    def test_no_candidate(self):
        self.assertIsNone(find_cand_swap(np.array([0, 1, 1, 0]), np.array([1, 1, 1, 0]), 0, make_rng(0)))

    def test_agreeing_position_rejected(self):
        with self.assertRaises(SwapPreconditionError):
            find_cand_swap(np.array([0, 1]), np.array([0, 1]), 0, make_rng(0))

    def test_uniform_choice(self):
        x = np.array([0, 1, 1, 1, 1, 0, 0])
        y = np.array([1, 0, 0, 0, 0, 0, 0])
        rng = make_rng(12)
        picks = [find_cand_swap(x, y, 0, rng) for _ in range(10_000)]
        counts = np.bincount(picks, minlength=5)[1:5]
        self.assertEqual(int(counts.sum()), 10_000)
        self.assertGreater(chisquare(counts).pvalue, 1e-4)


class AntiStagnationTests(SimpleTestCase):
    def test_forced_swap(self):
        x = np.array([0, 1], dtype=np.uint8)
        self.assertEqual(anti_stagnation_swap(x, make_rng(0)), (1, 0))
        np.testing.assert_array_equal(x, [1, 0])

    def test_keeps_weight(self):
        rng = make_rng(2)
        for _ in range(10_000):
            n = int(rng.integers(1, 7))
            x = random_balanced(n, rng)
            before = x.copy()
            anti_stagnation_swap(x, rng)
            self.assertEqual(2 * int(x.sum()), x.size)
            self.assertEqual(hamming_distance(x, before), 2)


class PsoRunTests(SimpleTestCase):
    def test_no_iterations_returns_initial_particle(self):
        params = PsoParams(1, 1, 1, 1, swarm_size=1, iterations=0)
        result = pso_run(5, FitnessKind.FIT1, params, seed=4)
        initial = init_swarm(5, params, make_rng(4))[0]
        np.testing.assert_array_equal(result.global_best.table, initial.position)
        self.assertEqual(len(result.fitness_trace), 1)
        self.assertEqual(result.evaluations, 1)

    def test_trace_is_monotone_and_final(self):
        params = PsoParams(w=0.5, phi=2.0, psi=1.5, v_max=3.0, swarm_size=6, iterations=5)
        for kind in FitnessKind:
            with self.subTest(kind=kind):
                result = pso_run(5, kind, params, hc_budget=5, seed=1)
                self.assertEqual(len(result.fitness_trace), 6)
                self.assertTrue(all(a <= b for a, b in zip(result.fitness_trace, result.fitness_trace[1:])))
                self.assertEqual(result.fitness_trace[-1], result.global_best_fitness)
                self.assertTrue(result.global_best.is_balanced)
                self.assertEqual(evaluate(kind, result.global_best), result.global_best_fitness)

    def test_seeded_runs_are_reproducible(self):
        params = PsoParams(0.5, 2.0, 1.5, 3.0, swarm_size=4, iterations=3)
        self.assertEqual(pso_run(6, "fit2", params, 10, seed=7), pso_run(6, "fit2", params, 10, seed=7))

    def test_degenerate_parameters_still_climb(self):
        params = PsoParams(0, 0, 0, 0, swarm_size=3, iterations=2)
        result = pso_run(5, FitnessKind.FIT3, params, hc_budget=10, seed=0)
        self.assertTrue(np.isfinite(result.global_best_fitness))

    def test_every_step_keeps_particles_balanced(self):
        params = PsoParams(w=0.5, phi=2.0, psi=1.5, v_max=3.0, swarm_size=8, iterations=6)
        for kind in FitnessKind:
            with self.subTest(kind=kind):
                result = self._watched_run(6, kind, params, hc_budget=5, seed=3)
                self.assertTrue(result.global_best.is_balanced)

    def _watched_run(self, n, kind, params, hc_budget, seed):
        """pso_run with every particle position checked after each position step and each climb."""
        def checked(f, *args, **kwargs):
            self.assertTrue(f.is_balanced)
            outcome = climb(f, *args, **kwargs)
            self.assertTrue(outcome.function.is_balanced)
            return outcome

        with mock.patch("swarm.utils.pso.climb", side_effect=checked) as watched:
            result = pso_run(n, kind, params, hc_budget=hc_budget, seed=seed)
        self.assertEqual(watched.call_count, params.swarm_size * params.iterations)
        return result

    @tag("slow")
    @skipUnless(settings.BOOLSEARCH["RUN_SLOW_TESTS"], "set BOOLSEARCH_SLOW_TESTS=1")
    def test_desk_scale_fit1_n7(self):
        params = PsoParams(*FIT1_PARAMS.velocity, swarm_size=50, iterations=100)
        results = [pso_run(7, FitnessKind.FIT1, params, seed=seed) for seed in range(10)]
        self.assertGreaterEqual(max(result.global_best_fitness for result in results), 52)

        reports = [property_report(result.global_best) for result in results]
        self.assertTrue(any(
            r.balanced and (r.resiliency_order or 0) >= 1 and r.nonlinearity >= 52 for r in reports
        ))
        for report in reports:
            self.assertEqual(bound_violations(report), [])
            if report.resiliency_order == 1:
                self.assertLessEqual(report.degree, 5)

    @tag("slow")
    @skipUnless(settings.BOOLSEARCH["RUN_SLOW_TESTS"], "set BOOLSEARCH_SLOW_TESTS=1")
    def test_desk_scale_fit3_n8(self):
        params = PsoParams(**settings.BOOLSEARCH["PSO_PARAMS"]["fit3"], swarm_size=50, iterations=100)
        reports = [
            property_report(pso_run(8, FitnessKind.FIT3, params, seed=seed).global_best)
            for seed in range(10)
        ]
        self.assertTrue(any(
            r.balanced and r.nonlinearity >= 112 and r.absolute_indicator <= 48 for r in reports
        ))

    @tag("slow")
    @skipUnless(settings.BOOLSEARCH["RUN_SLOW_TESTS"], "set BOOLSEARCH_SLOW_TESTS=1")
    def test_full_budget_n10(self):
        params = PsoParams(
            **settings.BOOLSEARCH["PSO_PARAMS"]["fit1"],
            swarm_size=settings.BOOLSEARCH["SWARM_SIZE"],
            iterations=settings.BOOLSEARCH["ITERATIONS"],
        )
        result = self._watched_run(10, FitnessKind.FIT1, params, hc_budget=settings.BOOLSEARCH["HC_BUDGET"], seed=0)
        trace = result.fitness_trace
        self.assertEqual(len(trace), params.iterations + 1)
        self.assertTrue(all(a <= b for a, b in zip(trace, trace[1:])))


class SearchCommandTests(SimpleTestCase):
    ARGS = dict(n="4", fitness="fit1", seeds=[1, 2], particles=3, iterations=2, hc_budget=3)

    def _search(self, **options):
        out = io.StringIO()
        call_command("search", stdout=out, **{**self.ARGS, **options})
        return out.getvalue()

    def test_run_and_summary_records(self):
        records = [json.loads(line) for line in self._search().splitlines()]
        self.assertEqual([r["record"] for r in records], ["run", "run", "summary"])
        self.assertEqual([r["seed"] for r in records[:2]], [1, 2])
        run = records[0]
        for key in ("best_fitness", "table", "nl", "deg", "cidev_1", "cidev_2", "pcdev_1", "ac_max", "evaluations", "wall_time"):
            self.assertIn(key, run)
        summary = records[2]
        self.assertEqual(summary["best_fitness"], max(r["best_fitness"] for r in records[:2]))
        self.assertEqual(summary["runs"], 2)
        self.assertEqual(summary["bound_violations"], 0)

    def test_reports_are_reproducible_without_timings(self):
        self.assertEqual(self._search(timings=False), self._search(timings=False))
        self.assertNotIn("wall_time", self._search(timings=False))

    def test_parallel_workers_keep_order(self):
        self.assertEqual(self._search(timings=False, workers=2), self._search(timings=False))

    def test_master_seed(self):
        options = {**self.ARGS, "seeds": None, "runs": 3, "seed": 10}
        out = io.StringIO()
        call_command("search", stdout=out, **options)
        seeds = [json.loads(line)["seed"] for line in out.getvalue().splitlines()[:3]]
        self.assertEqual(seeds, [10, 11, 12])

    def test_csv_report(self):
        lines = self._search(format="csv", timings=False).splitlines()
        self.assertTrue(lines[0].startswith("record,fitness,n,seed,best_fitness,table,nl,deg,cidev_1,cidev_2,pcdev_1,ac_max"))
        self.assertIn("", lines)

    def test_best_tables_round_trip_through_analyze(self):
        runs = [json.loads(line) for line in self._search().splitlines()][:2]
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "best.txt"
            path.write_text("".join(run["table"] + "\n" for run in runs))
            out = io.StringIO()
            call_command("analyze", str(path), stdout=out)
        for run, line in zip(runs, out.getvalue().splitlines()):
            report = json.loads(line)
            for key in ("nl", "deg", "cidev_1", "cidev_2", "pcdev_1", "ac_max", "resiliency", "pc_order"):
                self.assertEqual(report[key], run[key], key)
            self.assertEqual(BooleanFunction.from_hex(report["table"]).weight, 8)

    def test_config_errors(self):
        for options in (dict(params="1,2"), dict(runs=3), dict(n="20")):
            with self.subTest(options=options), self.assertRaises(CommandError) as caught:
                self._search(**options)
            self.assertEqual(caught.exception.returncode, 2)

    def test_campaign_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "search.yaml"
            path.write_text("mode: search\nn: 4\nfitness: fit3\nseeds: [3]\nparticles: 2\niterations: 1\nhc_budget: 2\n")
            out = io.StringIO()
            call_command("campaign", config=str(path), timings=False, stdout=out)
        records = [json.loads(line) for line in out.getvalue().splitlines()]
        self.assertEqual([r["record"] for r in records], ["run", "summary"])
        self.assertEqual(records[0]["fitness"], "fit3")

    def test_campaign_needs_config(self):
        with self.assertRaises(CommandError) as caught:
            call_command("campaign", stdout=io.StringIO())
        self.assertEqual(caught.exception.returncode, 2)


class SearchRecordTests(TestCase):
    def test_record_stores_each_run(self):
        call_command(
            "search", n="4", fitness="fit2", seeds=[5, 6], particles=2, iterations=1,
            hc_budget=2, record=True, stdout=io.StringIO(),
        )
        self.assertEqual(SearchRun.objects.count(), 2)
        run = SearchRun.objects.get(seed=5)
        self.assertEqual(run.n, 4)
        self.assertEqual(BooleanFunction.from_hex(run.best_table).n, 4)
        self.assertEqual(set(run.cidev), {"1", "2"})
