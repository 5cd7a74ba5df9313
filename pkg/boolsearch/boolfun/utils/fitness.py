"""
Fitness functions maximized by the swarm search.

fit1: Nl - cidev_1/4 - pcdev_1/8
fit2: Nl - cidev_2
fit3: Nl - AC_max
"""
from enum import Enum
from typing import Optional

from .errors import UnbalancedFunctionError
from .properties import absolute_indicator, cidev, nonlinearity, pcdev
from .spectra import (
    AutocorrelationSpectrum,
    WalshSpectrum,
    autocorrelation_from_walsh,
    walsh_transform_fast,
)
from .truth_table import BooleanFunction


class FitnessKind(Enum):
    FIT1 = "fit1"
    FIT2 = "fit2"
    FIT3 = "fit3"

    @classmethod
    def parse(cls, value) -> "FitnessKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown fitness kind {value!r}, expected fit1, fit2 or fit3") from None

    @property
    def ci_order(self) -> Optional[int]:
        """Order k of the Nl-Ci(k) hill climber paired with this fitness, None for Nl-only."""
        return {FitnessKind.FIT1: 1, FitnessKind.FIT2: 2, FitnessKind.FIT3: None}[self]

    def __str__(self):
        return self.value


def evaluate_spectra(kind: FitnessKind, spectrum: WalshSpectrum,
                     ac: Optional[AutocorrelationSpectrum] = None) -> float:
    if spectrum.values[0] != 0:
        raise UnbalancedFunctionError("fitness is only defined for balanced functions")
    nl = nonlinearity(spectrum)
    if kind is FitnessKind.FIT2:
        return float(nl - cidev(spectrum, min(2, spectrum.n)))
    if ac is None:
        ac = autocorrelation_from_walsh(spectrum)
    if kind is FitnessKind.FIT1:
        return nl - cidev(spectrum, 1) / 4 - pcdev(ac, 1) / 8
    return float(nl - absolute_indicator(ac))


def evaluate(kind: FitnessKind, f: BooleanFunction) -> float:
    if not f.is_balanced:
        raise UnbalancedFunctionError(f"fitness requested for unbalanced function (weight {f.weight})")
    return evaluate_spectra(kind, walsh_transform_fast(f))
