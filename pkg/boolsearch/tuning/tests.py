import io
import json
import math
from pathlib import Path
import tempfile
from unittest import skipUnless

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, tag
import numpy as np

from boolfun.utils.fitness import FitnessKind
from swarm.utils.pso import make_rng
from tuning.models import MetaRun
from tuning.utils.cga import CgaConfig, cga_optimize, flat_crossover, random_mutation, roulette_probabilities
from tuning.utils.lus import LusConfig, lus_optimize
from tuning.utils.meta import MetaFitnessSpec, ParamVector, meta_fitness

TINY = MetaFitnessSpec(kind=FitnessKind.FIT1, n=3, swarm_size=2, iterations=1, runs=1, hc_budget=1)


class ParamVectorTests(SimpleTestCase):
    def test_clamped_to_box(self):
        x = ParamVector.from_array([-1.0, 3.0, 12.0, 10.0])
        self.assertEqual(x.as_array().tolist(), [0.0, 3.0, 10.0, 10.0])
        self.assertTrue(x.in_bounds())

    def test_random_in_box(self):
        rng = make_rng(0)
        for _ in range(100):
            self.assertTrue(ParamVector.random(rng).in_bounds())

    def test_to_params(self):
        params = ParamVector(0.5, 2.0, 1.5, 3.0).to_params(swarm_size=7, iterations=9)
        self.assertEqual(params.velocity, (0.5, 2.0, 1.5, 3.0))
        self.assertEqual((params.swarm_size, params.iterations), (7, 9))


class MetaFitnessTests(SimpleTestCase):
    def test_single_run_doubles_the_best(self):
        evaluation = meta_fitness(ParamVector(0.5, 2.0, 1.5, 3.0), TINY, make_rng(1))
        self.assertEqual(len(evaluation.finals), 1)
        self.assertEqual(evaluation.value, 2 * evaluation.finals[0])
        self.assertEqual(len(evaluation.seeds), 1)

    def test_degenerate_parameters(self):
        spec = MetaFitnessSpec(n=4, swarm_size=2, iterations=1, runs=2, hc_budget=3)
        evaluation = meta_fitness(ParamVector(0, 0, 0, 0), spec, make_rng(2))
        self.assertTrue(math.isfinite(evaluation.value))
        self.assertLessEqual(evaluation.mean, evaluation.best)

    def test_reproducible_from_the_same_stream(self):
        x = ParamVector(1.0, 1.0, 1.0, 1.0)
        self.assertEqual(meta_fitness(x, TINY, make_rng(5)), meta_fitness(x, TINY, make_rng(5)))

    def test_out_of_box_rejected(self):
        with self.assertRaises(ValueError):
            meta_fitness(ParamVector(11.0, 0, 0, 0), TINY, make_rng(0))


class LusTests(SimpleTestCase):
    def test_default_rejection_count(self):
        self.assertEqual(LusConfig().max_rejections(), 8)

    def test_each_rejection_shrinks_by_beta(self):
        cfg = LusConfig(beta=0.33, tau=0.2, initial_range=1.0)
        result = lus_optimize(cfg, TINY, make_rng(3))
        radii = [step.radius for step in result.steps[1:] if not step.accepted]
        self.assertEqual(len(radii), cfg.max_rejections())
        self.assertAlmostEqual(radii[0], 1.0)
        self.assertAlmostEqual(radii[1], 0.33)

    def test_accepted_trace_increases(self):
        result = lus_optimize(LusConfig(beta=0.5, tau=0.05, initial_range=5.0), TINY, make_rng(4))
        trace = result.accepted_trace
        self.assertTrue(all(a < b for a, b in zip(trace, trace[1:])))
        self.assertEqual(result.best.value, trace[-1])
        self.assertTrue(result.params.in_bounds())
        self.assertGreater(result.evaluations, 0)

    def test_invalid_config(self):
        for kwargs in (dict(beta=1.0), dict(beta=0), dict(tau=0), dict(initial_range=-1)):
            with self.subTest(kwargs=kwargs), self.assertRaises(ValueError):
                LusConfig(**kwargs)


class CgaOperatorTests(SimpleTestCase):
    def test_roulette_proportional(self):
        np.testing.assert_allclose(roulette_probabilities([1, 3]), [0.25, 0.75])

    def test_roulette_shifts_negative_values(self):
        probs = roulette_probabilities([-4.0, 0.0, 4.0])
        self.assertAlmostEqual(probs.sum(), 1.0)
        self.assertTrue(np.all(probs > 0))
        self.assertTrue(probs[0] < probs[1] < probs[2])

    def test_roulette_all_zero(self):
        np.testing.assert_allclose(roulette_probabilities([0.0, 0.0]), [0.5, 0.5])

    def test_flat_crossover_stays_between_parents(self):
        rng = make_rng(6)
        x, y = np.array([1.0, 5.0, 2.0, 9.0]), np.array([3.0, 4.0, 2.0, 0.0])
        for _ in range(200):
            for child in flat_crossover(x, y, rng):
                self.assertTrue(np.all(child >= np.minimum(x, y)))
                self.assertTrue(np.all(child <= np.maximum(x, y)))

    def test_mutation(self):
        rng = make_rng(7)
        genes = np.array([1.0, 2.0, 3.0, 4.0])
        np.testing.assert_array_equal(random_mutation(genes, 0.0, rng), genes)
        mutated = random_mutation(genes, 1.0, rng)
        self.assertTrue(np.all((mutated >= 0) & (mutated <= 10)))
        self.assertFalse(np.array_equal(mutated, genes))

    def test_invalid_config(self):
        for kwargs in (dict(population=3), dict(population=0), dict(crossover_prob=1.5), dict(generations=-1)):
            with self.subTest(kwargs=kwargs), self.assertRaises(ValueError):
                CgaConfig(**kwargs)


class CgaTests(SimpleTestCase):
    def test_elitism_keeps_generation_best_monotone(self):
        cfg = CgaConfig(population=4, generations=3)
        result = cga_optimize(cfg, TINY, make_rng(8))
        self.assertEqual(len(result.generation_best), 4)
        best = result.generation_best
        self.assertTrue(all(a <= b for a, b in zip(best, best[1:])))
        self.assertEqual(result.best.value, best[-1])
        self.assertEqual(len(result.seeds), 4 * 4)
        self.assertTrue(result.params.in_bounds())

    def test_no_generations(self):
        result = cga_optimize(CgaConfig(population=2, generations=0), TINY, make_rng(9))
        self.assertEqual(len(result.generation_best), 1)


class MetaCommandTests(SimpleTestCase):
    ARGS = dict(n="3", fitness="fit1", runs=1, particles=2, iterations=1, hc_budget=1, meta_runs=1, seed=2)

    def _meta(self, **options):
        out = io.StringIO()
        call_command("meta", stdout=out, stderr=io.StringIO(), **{**self.ARGS, **options})
        return [json.loads(line) for line in out.getvalue().splitlines()]

    def test_cga_smoke_run(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "meta.yaml"
            path.write_text("mode: meta\ncga:\n  population: 4\n  generations: 2\n")
            rows = self._meta(meta="cga", config=str(path))
        self.assertEqual([row["record"] for row in rows], ["meta", "summary"])
        row = rows[0]
        self.assertEqual(row["method"], "cga")
        self.assertEqual(row["seed"], 2)
        for key in ("mean_g", "max_g", "mfit", "w", "phi", "psi", "v_max"):
            self.assertTrue(math.isfinite(row[key]), key)
        self.assertAlmostEqual(row["mfit"], row["mean_g"] + row["max_g"])
        self.assertEqual(len(row["trace"]), 3)

    def test_lus_smoke_run(self):
        rows = self._meta(meta="lus", timings=False)
        self.assertEqual(rows[0]["method"], "lus")
        self.assertNotIn("wall_time", rows[0])
        self.assertEqual(rows[1]["mfit"], rows[0]["mfit"])

    def test_meta_needs_one_n(self):
        with self.assertRaises(CommandError) as caught:
            self._meta(meta="lus", n="3-4")
        self.assertEqual(caught.exception.returncode, 2)

    @tag("slow")
    @skipUnless(settings.BOOLSEARCH["RUN_SLOW_TESTS"], "set BOOLSEARCH_SLOW_TESTS=1")
    def test_desk_scale_meta_run(self):
        rows = self._meta(meta="lus", n="5", runs=3, particles=10, iterations=10, hc_budget=20)
        self.assertGreater(rows[0]["max_g"], 0)

    @tag("slow")
    @skipUnless(settings.BOOLSEARCH["RUN_SLOW_TESTS"], "set BOOLSEARCH_SLOW_TESTS=1")
    def test_desk_scale_cga_smoke_run(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "meta.yaml"
            path.write_text("mode: meta\ncga:\n  population: 6\n  generations: 5\n")
            rows = self._meta(
                meta="cga", config=str(path), n="7", runs=3, particles=20, iterations=30, hc_budget=50,
            )
        row = rows[0]
        self.assertEqual(len(row["trace"]), 6)
        self.assertTrue(all(a <= b for a, b in zip(row["trace"], row["trace"][1:])))
        for key in ("w", "phi", "psi", "v_max"):
            self.assertTrue(0 <= row[key] <= 10, key)
        self.assertGreater(row["max_g"], 0)


class MetaRecordTests(TestCase):
    def test_record_stores_each_meta_run(self):
        call_command(
            "meta", meta="lus", n="3", runs=1, particles=2, iterations=1, hc_budget=1,
            meta_runs=2, record=True, stdout=io.StringIO(),
        )
        self.assertEqual(MetaRun.objects.count(), 2)
        self.assertEqual(sorted(MetaRun.objects.values_list("seed", flat=True)), [0, 1])
