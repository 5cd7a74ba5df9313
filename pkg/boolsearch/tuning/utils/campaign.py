"""
Meta-optimization campaigns: M independent LUS or CGA runs on one inner
search configuration, reported as rows of mean, max and meta-fitness.
"""
import logging
import time
from typing import List, Optional

from boolfun.utils.config import CampaignConfig
from boolfun.utils.reports import ReportWriter
from swarm.utils.pso import make_rng

from .cga import CgaConfig, cga_optimize
from .lus import LusConfig, lus_optimize
from .meta import MetaEvaluation, MetaFitnessSpec

logger = logging.getLogger(__name__)


def meta_spec(config: CampaignConfig) -> MetaFitnessSpec:
    return MetaFitnessSpec(
        kind=config.fitness,
        n=config.n[0],
        swarm_size=config.particles,
        iterations=config.iterations,
        runs=config.runs,
        hc_budget=config.hc_budget,
        workers=config.workers,
    )


def _row(method: str, config: CampaignConfig, run: int, seed: int, best: MetaEvaluation,
         evaluations: int, trace: List[float]) -> dict:
    record = {
        "record": "meta",
        "method": method,
        "fitness": config.fitness.value,
        "n": config.n[0],
        "run": run,
        "seed": seed,
        "mean_g": best.mean,
        "max_g": best.best,
        "mfit": best.value,
    }
    record.update(best.params.as_record())
    record["evaluations"] = evaluations
    record["trace"] = trace
    return record


def optimize_once(config: CampaignConfig, run: int, seed: int) -> dict:
    spec = meta_spec(config)
    rng = make_rng(seed)
    if config.meta == "lus":
        cfg = LusConfig(**config.lus.model_dump())
        result = lus_optimize(cfg, spec, rng)
        return _row("lus", config, run, seed, result.best, result.evaluations, result.accepted_trace)
    cfg = CgaConfig(**config.cga.model_dump())
    result = cga_optimize(cfg, spec, rng)
    return _row("cga", config, run, seed, result.best, result.evaluations, result.generation_best)


def _save(record: dict, wall_time: Optional[float]) -> None:
    from tuning.models import MetaRun

    MetaRun.objects.create(
        method=record["method"],
        fitness=record["fitness"],
        n=record["n"],
        seed=record["seed"],
        mean_g=record["mean_g"],
        max_g=record["max_g"],
        mfit=record["mfit"],
        w=record["w"],
        phi=record["phi"],
        psi=record["psi"],
        v_max=record["v_max"],
        evaluations=record["evaluations"],
        wall_time=wall_time,
    )


def run_meta_campaign(config: CampaignConfig, writer: ReportWriter) -> dict:
    """Run M meta-optimizations with seeds seed, seed+1, ... and report the best."""
    logger.info("meta %s on %s n=%d: %d runs of N=%d, I=%d, R=%d",
                config.meta, config.fitness, config.n[0], config.meta_runs,
                config.particles, config.iterations, config.runs)
    rows = []
    for run in range(config.meta_runs):
        seed = config.seed + run
        started = time.perf_counter()
        record = optimize_once(config, run, seed)
        elapsed = time.perf_counter() - started
        if config.timings:
            record["wall_time"] = round(elapsed, 3)
        writer.write(record)
        if config.record:
            _save(record, elapsed)
        logger.info("meta run %d: mfit %.3f", run, record["mfit"])
        rows.append(record)

    best = max(rows, key=lambda row: row["mfit"])
    summary = {key: value for key, value in best.items() if key not in ("trace", "wall_time")}
    summary["record"] = "summary"
    summary["runs"] = len(rows)
    writer.write(summary)
    return summary
