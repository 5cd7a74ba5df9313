"""
Search campaigns: R seeded swarm runs per n, one record per completed run and
a best-of-campaign summary per n shaped like the best-solution tables.
"""
import logging
from typing import Dict, Iterator, List, Optional

from joblib import Parallel, delayed

from boolfun.utils.config import CampaignConfig
from boolfun.utils.properties import SIEGENTHALER, PropertyReport, bound_violations, check_bounds, property_report
from boolfun.utils.reports import ReportWriter

from .pso import PsoParams, RunResult, pso_run

logger = logging.getLogger(__name__)

REPORT_K_MAX = 2
REPORT_L_MAX = 1


def campaign_params(config: CampaignConfig) -> PsoParams:
    velocity = config.velocity_params()
    return PsoParams(
        w=velocity.w,
        phi=velocity.phi,
        psi=velocity.psi,
        v_max=velocity.v_max,
        swarm_size=config.particles,
        iterations=config.iterations,
        shared_r=config.shared_r,
    )


def _properties(record: dict, report: PropertyReport) -> None:
    record["nl"] = report.nonlinearity
    record["deg"] = report.degree
    for k, value in sorted(report.cidev.items()):
        record[f"cidev_{k}"] = value
    for l, value in sorted(report.pcdev.items()):
        record[f"pcdev_{l}"] = value
    record["ac_max"] = report.absolute_indicator
    record["resiliency"] = report.resiliency_order
    record["pc_order"] = report.pc_order


def run_record(result: RunResult, report: PropertyReport, timings: bool = True) -> dict:
    record = {
        "record": "run",
        "fitness": result.kind.value,
        "n": result.global_best.n,
        "seed": result.seed,
        "best_fitness": result.global_best_fitness,
        "table": result.global_best.to_hex(),
    }
    _properties(record, report)
    record["evaluations"] = result.evaluations
    if timings:
        record["wall_time"] = round(result.wall_time, 3)
    return record


def _class_best(pairs, predicate) -> Optional[int]:
    values = [report.nonlinearity for _, report in pairs if predicate(report)]
    return max(values) if values else None


def summary_record(pairs: List[tuple], config: CampaignConfig, n: int) -> dict:
    """Best run of the campaign plus the best nonlinearity per property class."""
    best_result, best_report = max(pairs, key=lambda pair: pair[0].global_best_fitness)
    fitnesses = [result.global_best_fitness for result, _ in pairs]
    record = {
        "record": "summary",
        "fitness": config.fitness.value,
        "n": n,
        "runs": len(pairs),
        "best_fitness": best_result.global_best_fitness,
        "mean_fitness": sum(fitnesses) / len(fitnesses),
        "seed": best_result.seed,
        "table": best_result.global_best.to_hex(),
    }
    _properties(record, best_report)

    def resilient(report, k):
        return report.resiliency_order is not None and report.resiliency_order >= k

    record["ci1_nl"] = _class_best(pairs, lambda r: resilient(r, 1))
    record["ci1_pc1_nl"] = _class_best(pairs, lambda r: resilient(r, 1) and (r.pc_order or 0) >= 1)
    record["ci2_nl"] = _class_best(pairs, lambda r: resilient(r, 2))
    record["min_cidev_2"] = min(report.cidev[2] for _, report in pairs)
    record["min_ac_max"] = min(report.absolute_indicator for _, report in pairs)
    record["siegenthaler_tight"] = sum(
        1 for _, report in pairs
        if any(f.bound == SIEGENTHALER and f.tight and (report.resiliency_order or 0) >= 1
               for f in check_bounds(report))
    )
    record["bound_violations"] = sum(len(bound_violations(report)) for _, report in pairs)
    record["evaluations"] = sum(result.evaluations for result, _ in pairs)
    return record


def _runs(config: CampaignConfig, n: int, params: PsoParams) -> Iterator[RunResult]:
    jobs = (
        delayed(pso_run)(n, config.fitness, params, config.hc_budget, seed)
        for seed in config.run_seeds()
    )
    return Parallel(n_jobs=config.workers, return_as="generator")(jobs)


def _save(result: RunResult, report: PropertyReport, params: PsoParams) -> None:
    from swarm.models import SearchRun

    SearchRun.objects.create(
        fitness=result.kind.value,
        n=result.global_best.n,
        seed=result.seed,
        particles=params.swarm_size,
        iterations=params.iterations,
        best_fitness=result.global_best_fitness,
        best_table=result.global_best.to_hex(),
        nonlinearity=report.nonlinearity,
        degree=report.degree,
        cidev={str(k): v for k, v in report.cidev.items()},
        pcdev={str(l): v for l, v in report.pcdev.items()},
        ac_max=report.absolute_indicator,
        evaluations=result.evaluations,
        wall_time=result.wall_time,
    )


def run_search_campaign(config: CampaignConfig, writer: ReportWriter) -> Dict[int, dict]:
    params = campaign_params(config)
    summaries = {}
    for n in config.n:
        logger.info("search %s n=%d: %d runs, N=%d, I=%d, params %s",
                    config.fitness, n, config.runs, params.swarm_size, params.iterations, params.velocity)
        pairs = []
        for result in _runs(config, n, params):
            report = property_report(result.global_best, REPORT_K_MAX, REPORT_L_MAX)
            violations = bound_violations(report)
            if violations:
                logger.error("seed %d produced a bound violation: %s", result.seed, violations)
            writer.write(run_record(result, report, config.timings))
            if config.record:
                _save(result, report, params)
            pairs.append((result, report))
        summaries[n] = summary_record(pairs, config, n)
        writer.write(summaries[n])
    return summaries
