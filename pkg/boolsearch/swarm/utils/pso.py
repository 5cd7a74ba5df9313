"""
Discrete particle swarm over balanced truth tables.

Positions move by swaps only, so every particle keeps Hamming weight 2^(n-1)
for the whole run. Velocities are real vectors clamped to [-v_max, v_max]; the
logistic of a velocity coordinate is the probability of trying a swap there.
"""
from dataclasses import dataclass, field
import logging
import time
from typing import List, Optional, Tuple

import numpy as np
from scipy.special import expit

from boolfun.utils.errors import SwapPreconditionError, UnbalancedFunctionError, UnsupportedSizeError
from boolfun.utils.fitness import FitnessKind, evaluate_spectra
from boolfun.utils.hillclimb import DEFAULT_BUDGET, climb
from boolfun.utils.spectra import walsh_transform_fast
from boolfun.utils.truth_table import MAX_VARIABLES, BooleanFunction, hamming_distance, random_balanced

logger = logging.getLogger(__name__)

PARAM_BOUNDS = (0.0, 10.0)


@dataclass(frozen=True)
class PsoParams:
    w: float
    phi: float
    psi: float
    v_max: float
    swarm_size: int = 50
    iterations: int = 100
    shared_r: bool = False

    def __post_init__(self):
        if self.swarm_size < 1:
            raise ValueError(f"swarm_size must be positive, got {self.swarm_size}")
        if self.iterations < 0:
            raise ValueError(f"iterations must be non-negative, got {self.iterations}")
        if self.v_max < 0:
            raise ValueError(f"v_max must be non-negative, got {self.v_max}")

    @property
    def velocity(self) -> Tuple[float, float, float, float]:
        return (self.w, self.phi, self.psi, self.v_max)


@dataclass
class Particle:
    position: np.ndarray
    velocity: np.ndarray
    probability: np.ndarray
    local_best: np.ndarray
    local_best_fitness: float = -np.inf


@dataclass(frozen=True)
class RunResult:
    global_best: BooleanFunction
    global_best_fitness: float
    fitness_trace: Tuple[float, ...]
    evaluations: int
    seed: int
    kind: FitnessKind = FitnessKind.FIT1
    wall_time: float = field(default=0.0, compare=False)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _check_balanced(x: np.ndarray, name: str) -> None:
    if 2 * int(x.sum(dtype=np.int64)) != x.size:
        raise UnbalancedFunctionError(f"{name} is not balanced")


def init_swarm(n: int, params: PsoParams, rng: np.random.Generator) -> List[Particle]:
    if not 2 <= n <= MAX_VARIABLES:
        raise UnsupportedSizeError(f"n={n} outside supported range [2, {MAX_VARIABLES}]")
    m = 1 << n
    swarm = []
    for _ in range(params.swarm_size):
        position = random_balanced(n, rng)
        velocity = rng.uniform(-params.v_max, params.v_max, m)
        swarm.append(Particle(
            position=position,
            velocity=velocity,
            probability=expit(velocity),
            local_best=position.copy(),
        ))
    return swarm


def velocity_update(p: Particle, g: np.ndarray, params: PsoParams, rng: np.random.Generator) -> None:
    """v' = w v + r1 phi (g - x) + r2 psi (b - x), clamped, then squashed to probabilities."""
    if g.size != p.position.size:
        raise ValueError("global best and position differ in length")
    m = p.position.size
    x = p.position.astype(np.float64)
    r1 = rng.random(m)
    r2 = r1 if params.shared_r else rng.random(m)
    velocity = (params.w * p.velocity
                + r1 * params.phi * (g - x)
                + r2 * params.psi * (p.local_best - x))
    np.clip(velocity, -params.v_max, params.v_max, out=velocity)
    p.velocity = velocity
    p.probability = expit(velocity)


def find_cand_swap(x: np.ndarray, y: np.ndarray, j: int, rng: np.random.Generator) -> Optional[int]:
    """Uniform k != j with x[k] != y[k] and x[k] != x[j], or None when there is none."""
    if x[j] == y[j]:
        raise SwapPreconditionError(f"position {j} already agrees with the target")
    candidates = np.flatnonzero((x != y) & (x != x[j]))
    if candidates.size == 0:
        return None
    return int(candidates[rng.integers(candidates.size)])


def update_bal_pos(x: np.ndarray, y: np.ndarray, prob: np.ndarray, rng: np.random.Generator) -> int:
    """
    Move x toward y by weight-preserving swaps, in place. Returns the number of swaps.

    Position j fires when a uniform draw falls below prob[j] while x[j] != y[j];
    it is then swapped with the partner find_cand_swap picks, so each swap cuts
    the distance to y by exactly 2.
    """
    if x.size != y.size or prob.size != x.size:
        raise ValueError("position, target and probability vectors differ in length")
    _check_balanced(x, "position")
    _check_balanced(y, "target")

    draws = rng.random(x.size)
    fired = np.flatnonzero((draws < prob) & (x != y))
    # a bit value with no opposite-bit mismatch left stays without partners
    exhausted = set()
    swaps = 0
    for j in fired.tolist():
        bit = int(x[j])
        if x[j] == y[j] or bit in exhausted:
            continue
        k = find_cand_swap(x, y, j, rng)
        if k is None:
            exhausted.add(bit)
            continue
        x[j], x[k] = x[k], x[j]
        swaps += 1
    return swaps


def anti_stagnation_swap(x: np.ndarray, rng: np.random.Generator) -> Tuple[int, int]:
    """Exchange one random 1-bit with one random 0-bit, in place."""
    ones = np.flatnonzero(x == 1)
    zeros = np.flatnonzero(x == 0)
    if ones.size == 0 or zeros.size == 0:
        raise SwapPreconditionError("cannot swap bits of a constant table")
    u = int(ones[rng.integers(ones.size)])
    v = int(zeros[rng.integers(zeros.size)])
    x[u], x[v] = 0, 1
    return u, v


class _Evaluator:
    def __init__(self, kind: FitnessKind):
        self.kind = kind
        self.count = 0

    def __call__(self, position: np.ndarray, spectrum=None) -> float:
        self.count += 1
        if spectrum is None:
            spectrum = walsh_transform_fast(BooleanFunction.from_bits(position))
        return evaluate_spectra(self.kind, spectrum)


def pso_run(n: int, kind: FitnessKind, params: PsoParams, hc_budget: int = DEFAULT_BUDGET,
            seed: int = 0) -> RunResult:
    kind = FitnessKind.parse(kind)
    rng = make_rng(seed)
    started = time.perf_counter()
    evaluate = _Evaluator(kind)
    swarm = init_swarm(n, params, rng)
    spectra = [None] * len(swarm)
    climb_evaluations = 0

    g = None
    g_fitness = -np.inf
    trace = []

    def assess():
        nonlocal g, g_fitness
        for i, p in enumerate(swarm):
            fitness = evaluate(p.position, spectra[i])
            if fitness > p.local_best_fitness:
                p.local_best = p.position.copy()
                p.local_best_fitness = fitness
            if fitness > g_fitness:
                g = p.position.copy()
                g_fitness = fitness
        trace.append(g_fitness)

    assess()
    for iteration in range(params.iterations):
        for i, p in enumerate(swarm):
            velocity_update(p, g, params, rng)
            if np.array_equal(p.position, g) or np.array_equal(p.position, p.local_best):
                anti_stagnation_swap(p.position, rng)
            else:
                update_bal_pos(p.position, g, p.probability, rng)
                update_bal_pos(p.position, p.local_best, p.probability, rng)
            outcome = climb(BooleanFunction.from_bits(p.position), kind.ci_order, hc_budget, rng)
            p.position = np.array(outcome.function.table, dtype=np.uint8)
            spectra[i] = outcome.spectrum
            climb_evaluations += outcome.evaluations
        assess()
        if logger.isEnabledFor(logging.DEBUG):
            spread = np.mean([hamming_distance(p.position, g) for p in swarm])
            logger.debug("iteration %d: global best %.3f, mean distance to it %.1f",
                         iteration + 1, g_fitness, spread)

    elapsed = time.perf_counter() - started
    logger.info("%s n=%d seed=%d: best fitness %.3f after %d iterations (%.1fs)",
                kind, n, seed, g_fitness, params.iterations, elapsed)
    return RunResult(
        global_best=BooleanFunction.from_bits(g),
        global_best_fitness=float(g_fitness),
        fitness_trace=tuple(float(v) for v in trace),
        evaluations=evaluate.count + climb_evaluations,
        seed=seed,
        kind=kind,
        wall_time=elapsed,
    )
