"""
Meta-fitness of a velocity parameter vector: mean plus maximum of the final
global-best fitness over R independent swarm runs.
"""
from dataclasses import dataclass, field
import logging
from typing import Tuple

from joblib import Parallel, delayed
import numpy as np

from boolfun.utils.fitness import FitnessKind
from boolfun.utils.hillclimb import DEFAULT_BUDGET
from swarm.utils.pso import PARAM_BOUNDS, PsoParams, pso_run

logger = logging.getLogger(__name__)

LOWER, UPPER = PARAM_BOUNDS
DIMENSIONS = 4
SEED_LIMIT = 2 ** 63 - 1


@dataclass(frozen=True)
class ParamVector:
    w: float
    phi: float
    psi: float
    v_max: float

    @classmethod
    def from_array(cls, values) -> "ParamVector":
        """Coordinates outside [0, 10] are clamped to the boundary."""
        clipped = np.clip(np.asarray(values, dtype=np.float64), LOWER, UPPER)
        return cls(*(float(v) for v in clipped))

    @classmethod
    def random(cls, rng: np.random.Generator) -> "ParamVector":
        return cls.from_array(rng.uniform(LOWER, UPPER, DIMENSIONS))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.phi, self.psi, self.v_max], dtype=np.float64)

    def in_bounds(self) -> bool:
        values = self.as_array()
        return bool(np.all((values >= LOWER) & (values <= UPPER)))

    def to_params(self, swarm_size: int, iterations: int) -> PsoParams:
        return PsoParams(self.w, self.phi, self.psi, self.v_max,
                         swarm_size=swarm_size, iterations=iterations)

    def as_record(self) -> dict:
        return {"w": self.w, "phi": self.phi, "psi": self.psi, "v_max": self.v_max}


@dataclass(frozen=True)
class MetaFitnessSpec:
    kind: FitnessKind = FitnessKind.FIT1
    n: int = 7
    swarm_size: int = 50
    iterations: int = 100
    runs: int = 30
    hc_budget: int = DEFAULT_BUDGET
    workers: int = 1

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError(f"runs must be at least 1, got {self.runs}")


@dataclass(frozen=True)
class MetaEvaluation:
    params: ParamVector
    mean: float
    best: float
    seeds: Tuple[int, ...]
    evaluations: int
    finals: Tuple[float, ...] = field(repr=False, default=())

    @property
    def value(self) -> float:
        return self.mean + self.best


def meta_fitness(x: ParamVector, spec: MetaFitnessSpec, rng: np.random.Generator) -> MetaEvaluation:
    if not x.in_bounds():
        raise ValueError(f"parameter vector out of bounds: {x}")
    seeds = tuple(int(s) for s in rng.integers(0, SEED_LIMIT, size=spec.runs))
    params = x.to_params(spec.swarm_size, spec.iterations)
    jobs = (delayed(pso_run)(spec.n, spec.kind, params, spec.hc_budget, seed) for seed in seeds)
    results = Parallel(n_jobs=spec.workers)(jobs)
    finals = tuple(result.global_best_fitness for result in results)
    evaluation = MetaEvaluation(
        params=x,
        mean=float(np.mean(finals)),
        best=float(np.max(finals)),
        seeds=seeds,
        evaluations=sum(result.evaluations for result in results),
        finals=finals,
    )
    logger.debug("mfit%s(%s) = %.3f", spec.kind.value[-1], x, evaluation.value)
    return evaluation
