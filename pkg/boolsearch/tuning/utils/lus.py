"""
Local Unimodal Sampling over the parameter box [0, 10]^4.

Sample uniformly in the box x +/- d; move on improvement, otherwise shrink d
by beta. Stops once d <= tau.
"""
from dataclasses import dataclass, field
import logging
import math
from typing import List

import numpy as np

from .meta import LOWER, UPPER, MetaEvaluation, MetaFitnessSpec, ParamVector, meta_fitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LusConfig:
    beta: float = 0.33
    tau: float = 0.001
    initial_range: float = 5.0

    def __post_init__(self):
        if not 0 < self.beta < 1:
            raise ValueError(f"beta must lie in (0, 1), got {self.beta}")
        if self.tau <= 0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if self.initial_range <= 0:
            raise ValueError(f"initial_range must be positive, got {self.initial_range}")

    def max_rejections(self) -> int:
        """Consecutive rejections after which d <= tau."""
        if self.initial_range <= self.tau:
            return 0
        return math.ceil(math.log(self.tau / self.initial_range) / math.log(self.beta))


@dataclass(frozen=True)
class LusStep:
    evaluation: MetaEvaluation
    radius: float
    accepted: bool


@dataclass
class LusResult:
    best: MetaEvaluation
    steps: List[LusStep] = field(default_factory=list)

    @property
    def params(self) -> ParamVector:
        return self.best.params

    @property
    def accepted_trace(self) -> List[float]:
        return [step.evaluation.value for step in self.steps if step.accepted]

    @property
    def evaluations(self) -> int:
        return sum(step.evaluation.evaluations for step in self.steps)


def lus_optimize(cfg: LusConfig, spec: MetaFitnessSpec, rng: np.random.Generator) -> LusResult:
    current = meta_fitness(ParamVector.random(rng), spec, rng)
    d = cfg.initial_range
    result = LusResult(best=current, steps=[LusStep(current, d, True)])
    logger.info("LUS start: mfit %.3f at %s", current.value, current.params)

    while d > cfg.tau:
        offset = rng.uniform(-d, d, current.params.as_array().size)
        candidate = ParamVector.from_array(np.clip(current.params.as_array() + offset, LOWER, UPPER))
        trial = meta_fitness(candidate, spec, rng)
        accepted = trial.value > current.value
        result.steps.append(LusStep(trial, d, accepted))
        if accepted:
            current = trial
            logger.info("LUS accept: mfit %.3f (d=%.4g)", current.value, d)
        else:
            d *= cfg.beta

    result.best = current
    return result
