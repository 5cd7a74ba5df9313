"""
Continuous (real-coded) genetic algorithm over [0, 10]^4: roulette-wheel
pairing, flat crossover, random-reset mutation, and elitism that puts the
best individual found so far in place of the worst child.
"""
from dataclasses import dataclass, field
import logging
from typing import List, Tuple

import numpy as np

from .meta import LOWER, UPPER, MetaEvaluation, MetaFitnessSpec, ParamVector, meta_fitness

logger = logging.getLogger(__name__)

ROULETTE_EPSILON = 1e-9


@dataclass(frozen=True)
class CgaConfig:
    population: int = 20
    generations: int = 100
    crossover_prob: float = 0.95
    mutation_prob: float = 0.05

    def __post_init__(self):
        if self.population < 2 or self.population % 2:
            raise ValueError(f"population must be even and at least 2, got {self.population}")
        if self.generations < 0:
            raise ValueError(f"generations must be non-negative, got {self.generations}")
        for name in ("crossover_prob", "mutation_prob"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")


@dataclass
class CgaResult:
    best: MetaEvaluation
    generation_best: List[float] = field(default_factory=list)
    evaluations: int = 0
    seeds: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def params(self) -> ParamVector:
        return self.best.params


def roulette_probabilities(fitness: np.ndarray) -> np.ndarray:
    fitness = np.asarray(fitness, dtype=np.float64)
    if fitness.min() < 0:
        fitness = fitness - fitness.min() + ROULETTE_EPSILON
    total = fitness.sum()
    if total <= 0:
        return np.full(fitness.size, 1.0 / fitness.size)
    return fitness / total


def flat_crossover(x: np.ndarray, y: np.ndarray, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Two children, every gene uniform between the parents' genes."""
    low, high = np.minimum(x, y), np.maximum(x, y)
    return rng.uniform(low, high), rng.uniform(low, high)


def random_mutation(genes: np.ndarray, prob: float, rng: np.random.Generator) -> np.ndarray:
    mask = rng.random(genes.size) < prob
    mutated = genes.copy()
    mutated[mask] = rng.uniform(LOWER, UPPER, int(mask.sum()))
    return mutated


def _breed(population: List[MetaEvaluation], cfg: CgaConfig, rng: np.random.Generator) -> List[np.ndarray]:
    weights = roulette_probabilities(np.array([member.value for member in population]))
    children = []
    for _ in range(cfg.population // 2):
        i, j = rng.choice(len(population), size=2, p=weights)
        x, y = population[i].params.as_array(), population[j].params.as_array()
        if rng.random() < cfg.crossover_prob:
            x, y = flat_crossover(x, y, rng)
        children.append(random_mutation(x, cfg.mutation_prob, rng))
        children.append(random_mutation(y, cfg.mutation_prob, rng))
    return [np.clip(child, LOWER, UPPER) for child in children]


def cga_optimize(cfg: CgaConfig, spec: MetaFitnessSpec, rng: np.random.Generator) -> CgaResult:
    population = [meta_fitness(ParamVector.random(rng), spec, rng) for _ in range(cfg.population)]
    elite = max(population, key=lambda member: member.value)
    result = CgaResult(best=elite)
    result.generation_best.append(elite.value)
    result.evaluations = sum(member.evaluations for member in population)
    result.seeds.extend(member.seeds for member in population)

    for generation in range(cfg.generations):
        offspring = [
            meta_fitness(ParamVector.from_array(genes), spec, rng)
            for genes in _breed(population, cfg, rng)
        ]
        result.evaluations += sum(member.evaluations for member in offspring)
        result.seeds.extend(member.seeds for member in offspring)

        challenger = max(offspring, key=lambda member: member.value)
        if challenger.value > elite.value:
            elite = challenger
        worst = min(range(len(offspring)), key=lambda i: offspring[i].value)
        offspring[worst] = elite
        population = offspring

        generation_best = max(member.value for member in population)
        result.generation_best.append(generation_best)
        logger.info("CGA generation %d: best mfit %.3f", generation + 1, generation_best)

    result.best = elite
    return result
