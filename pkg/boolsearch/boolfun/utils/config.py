"""
Campaign configuration: a YAML file mirroring the command-line flags,
validated with pydantic. Flags override the file; anything left unset falls
back to settings.BOOLSEARCH for the selected mode.
"""
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from django.conf import settings
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
import yaml

from .errors import ConfigError
from .fitness import FitnessKind
from .truth_table import MAX_VARIABLES

Mode = Literal["analyze", "search", "meta"]
OutputFormat = Literal["json", "csv"]


def _defaults() -> Dict[str, Any]:
    return settings.BOOLSEARCH


class VelocityParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    w: float = Field(ge=0)
    phi: float = Field(ge=0)
    psi: float = Field(ge=0)
    v_max: float = Field(ge=0)

    @model_validator(mode="before")
    @classmethod
    def _from_sequence(cls, value):
        if isinstance(value, str):
            value = [part for part in value.replace(" ", "").split(",") if part]
        if isinstance(value, (list, tuple)):
            if len(value) != 4:
                raise ValueError("params needs exactly four values: w,phi,psi,vmax")
            return dict(zip(("w", "phi", "psi", "v_max"), value))
        return value


class LusSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    beta: float = Field(default_factory=lambda: _defaults()["LUS"]["beta"], gt=0, lt=1)
    tau: float = Field(default_factory=lambda: _defaults()["LUS"]["tau"], gt=0)
    initial_range: float = Field(default_factory=lambda: _defaults()["LUS"]["initial_range"], gt=0)


class CgaSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    population: int = Field(default_factory=lambda: _defaults()["CGA"]["population"], ge=2)
    generations: int = Field(default_factory=lambda: _defaults()["CGA"]["generations"], ge=0)
    crossover_prob: float = Field(default_factory=lambda: _defaults()["CGA"]["crossover_prob"], ge=0, le=1)
    mutation_prob: float = Field(default_factory=lambda: _defaults()["CGA"]["mutation_prob"], ge=0, le=1)

    @field_validator("population")
    @classmethod
    def _even(cls, value):
        if value % 2:
            raise ValueError("population must be even")
        return value


class CampaignConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mode: Mode
    n: List[int] = Field(default_factory=list)
    fitness: FitnessKind = FitnessKind.FIT1
    params: Optional[VelocityParams] = None
    runs: Optional[int] = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0)
    seeds: Optional[List[int]] = None
    particles: Optional[int] = Field(default=None, ge=1)
    iterations: Optional[int] = Field(default=None, ge=0)
    hc_budget: int = Field(default_factory=lambda: _defaults()["HC_BUDGET"], ge=0)
    shared_r: bool = False
    workers: int = Field(default_factory=lambda: _defaults()["WORKERS"], ge=1)

    input: Optional[Path] = None
    k_max: int = Field(default_factory=lambda: _defaults()["ANALYZE_ORDERS"]["k_max"], ge=1)
    l_max: int = Field(default_factory=lambda: _defaults()["ANALYZE_ORDERS"]["l_max"], ge=1)
    anf: bool = False

    meta: Literal["lus", "cga"] = "cga"
    meta_runs: int = Field(default_factory=lambda: _defaults()["META_RUNS"], ge=1)
    lus: LusSection = Field(default_factory=LusSection)
    cga: CgaSection = Field(default_factory=CgaSection)

    out: Optional[Path] = None
    format: OutputFormat = Field(default_factory=lambda: _defaults()["OUTPUT_FORMAT"])
    timings: bool = True
    record: bool = False

    @field_validator("n", mode="before")
    @classmethod
    def _parse_n(cls, value):
        if value is None:
            return []
        if isinstance(value, int):
            return [value]
        if isinstance(value, str):
            values = []
            for part in value.replace(" ", "").split(","):
                if not part:
                    continue
                if "-" in part:
                    low, high = part.split("-", 1)
                    values.extend(range(int(low), int(high) + 1))
                else:
                    values.append(int(part))
            return values
        return value

    @field_validator("n")
    @classmethod
    def _check_n(cls, values):
        for n in values:
            if not 2 <= n <= MAX_VARIABLES:
                raise ValueError(f"n={n} outside supported range [2, {MAX_VARIABLES}]")
        return values

    @field_validator("fitness", mode="before")
    @classmethod
    def _parse_fitness(cls, value):
        return FitnessKind.parse(value)

    @model_validator(mode="after")
    def _fill_mode_defaults(self):
        defaults = _defaults()
        if self.mode == "search":
            self.n = self.n or [7]
            self.runs = self.runs or defaults["RUNS"]
            self.particles = self.particles or defaults["SWARM_SIZE"]
            if self.iterations is None:
                self.iterations = defaults["ITERATIONS"]
            if self.seeds is not None and len(self.seeds) != self.runs:
                if "runs" in self.model_fields_set:
                    raise ValueError(f"{len(self.seeds)} seeds given for {self.runs} runs")
                self.runs = len(self.seeds)
        elif self.mode == "meta":
            inner = defaults["META_SPEC"]
            self.n = self.n or [inner["n"]]
            if len(self.n) != 1:
                raise ValueError("meta-optimization tunes one n at a time")
            self.runs = self.runs or inner["runs"]
            self.particles = self.particles or inner["particles"]
            if self.iterations is None:
                self.iterations = inner["iterations"]
        elif self.mode == "analyze" and self.input is None:
            raise ValueError("analyze needs an input truth-table file")
        return self

    def velocity_params(self) -> VelocityParams:
        if self.params is not None:
            return self.params
        return VelocityParams(**_defaults()["PSO_PARAMS"][self.fitness.value])

    def run_seeds(self) -> List[int]:
        """Explicit seeds, or master seed + run index."""
        if self.seeds is not None:
            return list(self.seeds)
        return [self.seed + index for index in range(self.runs)]


def _read_file(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must be a mapping")
    return data


def load_config(path: Optional[Path] = None, **overrides) -> CampaignConfig:
    data = _read_file(Path(path)) if path else {}
    for key in ("input", "out"):
        if isinstance(data.get(key), str):
            # files named in a config are relative to the config
            data[key] = Path(path).parent / data[key]
    data.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return CampaignConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc
