"""
Cryptographic properties of Boolean functions and the bounds relating them.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from .errors import OrderOutOfRangeError
from .spectra import (
    AutocorrelationSpectrum,
    WalshSpectrum,
    algebraic_degree,
    autocorrelation_from_walsh,
    mask_weights,
    mobius_transform,
    walsh_transform_fast,
)
from .truth_table import BooleanFunction


def _check_order(order: int, n: int, name: str) -> None:
    if not 1 <= order <= n:
        raise OrderOutOfRangeError(f"{name}={order} outside 1..{n}")


def _low_weight_max(values: np.ndarray, n: int, order: int) -> int:
    weights = mask_weights(n)
    selected = values[(weights >= 1) & (weights <= order)]
    return int(np.abs(selected).max())


def nonlinearity(spectrum: WalshSpectrum) -> int:
    return (1 << (spectrum.n - 1)) - spectrum.max_abs // 2


def absolute_indicator(ac: AutocorrelationSpectrum) -> int:
    if ac.values.size < 2:
        return 0
    return int(np.abs(ac.values[1:]).max())


def cidev(spectrum: WalshSpectrum, k: int) -> int:
    """Deviation from k-th order correlation immunity; 0 iff CI(k)."""
    _check_order(k, spectrum.n, "k")
    return _low_weight_max(spectrum.values, spectrum.n, k)


def pcdev(ac: AutocorrelationSpectrum, l: int) -> int:
    """Deviation from the propagation criterion of degree l; 0 iff PC(l)."""
    _check_order(l, ac.n, "l")
    return _low_weight_max(ac.values, ac.n, l)


def _first_nonzero_weight(values: np.ndarray, n: int) -> Optional[int]:
    """Smallest weight w >= 1 of an index with nonzero value, or None."""
    weights = mask_weights(n)
    hits = weights[(weights >= 1) & (values != 0)]
    return int(hits.min()) if hits.size else None


@dataclass(frozen=True)
class PropertyReport:
    n: int
    balanced: bool
    weight: int
    nonlinearity: int
    degree: int
    cidev: Dict[int, int]
    pcdev: Dict[int, int]
    absolute_indicator: int
    resiliency_order: Optional[int]
    pc_order: Optional[int]

    def as_record(self) -> dict:
        record = {
            "n": self.n,
            "balanced": self.balanced,
            "nl": self.nonlinearity,
            "deg": self.degree,
        }
        for k in sorted(self.cidev):
            record[f"cidev_{k}"] = self.cidev[k]
        for l in sorted(self.pcdev):
            record[f"pcdev_{l}"] = self.pcdev[l]
        record["ac_max"] = self.absolute_indicator
        record["resiliency"] = self.resiliency_order
        record["pc_order"] = self.pc_order
        return record


def property_report(f: BooleanFunction, k_max: int = 2, l_max: int = 1) -> PropertyReport:
    spectrum = walsh_transform_fast(f)
    ac = autocorrelation_from_walsh(spectrum)
    k_max = min(k_max, f.n)
    l_max = min(l_max, f.n)

    balanced = int(spectrum.values[0]) == 0
    if balanced:
        first = _first_nonzero_weight(spectrum.values, f.n)
        # Parseval keeps some coefficient nonzero, so first is never None here
        resiliency = first - 1
    else:
        resiliency = None
    first_ac = _first_nonzero_weight(ac.values, f.n)
    pc = f.n if first_ac is None else first_ac - 1
    pc_order = pc if pc >= 1 else None

    return PropertyReport(
        n=f.n,
        balanced=balanced,
        weight=f.weight,
        nonlinearity=nonlinearity(spectrum),
        degree=algebraic_degree(mobius_transform(f)),
        cidev={k: cidev(spectrum, k) for k in range(1, k_max + 1)},
        pcdev={l: pcdev(ac, l) for l in range(1, l_max + 1)},
        absolute_indicator=absolute_indicator(ac),
        resiliency_order=resiliency,
        pc_order=pc_order,
    )


SIEGENTHALER = "siegenthaler"
SARKAR_MAITRA = "sarkar_maitra"
CI_PC = "ci_pc"

PASS = "pass"
VIOLATION = "violation"
NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class BoundFinding:
    bound: str
    status: str
    value: int
    limit: int
    detail: str = ""

    @property
    def tight(self) -> bool:
        return self.status == PASS and self.value == self.limit


def check_bounds(report: PropertyReport) -> List[BoundFinding]:
    n = report.n
    k = report.resiliency_order
    findings = []

    if k is None:
        findings.append(BoundFinding(SIEGENTHALER, NOT_APPLICABLE, report.degree, n, "unbalanced"))
        findings.append(BoundFinding(SARKAR_MAITRA, NOT_APPLICABLE, report.nonlinearity, 0, "unbalanced"))
    elif k > n - 2:
        # only the sum of all n variables is (n-1)-resilient
        findings.append(BoundFinding(SIEGENTHALER, NOT_APPLICABLE, report.degree, 1, f"k={k}"))
        findings.append(BoundFinding(SARKAR_MAITRA, NOT_APPLICABLE, report.nonlinearity, 0, f"k={k}"))
    else:
        limit = n - 1 - k
        status = PASS if report.degree <= limit else VIOLATION
        findings.append(BoundFinding(SIEGENTHALER, status, report.degree, limit, f"k={k}"))
        # Walsh values of a k-resilient function are multiples of 2^(k+2)
        limit = (1 << (n - 1)) - (1 << (k + 1))
        status = PASS if report.nonlinearity <= limit else VIOLATION
        findings.append(BoundFinding(SARKAR_MAITRA, status, report.nonlinearity, limit, f"k={k}"))

    l = report.pc_order
    if k is None or l is None:
        findings.append(BoundFinding(CI_PC, NOT_APPLICABLE, 0, n - 1))
    else:
        status = PASS if k + l <= n - 1 else VIOLATION
        findings.append(BoundFinding(CI_PC, status, k + l, n - 1, f"k={k}, l={l}"))
    return findings


def bound_violations(report: PropertyReport) -> List[BoundFinding]:
    return [finding for finding in check_bounds(report) if finding.status == VIOLATION]
