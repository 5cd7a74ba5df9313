"""
Swap-based hill climbing on balanced truth tables.

Every move exchanges a 1-bit u with a 0-bit v, which changes each Walsh value
by 2[(-1)^(a.u) - (-1)^(a.v)] in {-4, 0, 4}. A pass shuffles both bit sets,
scans the (u, v) pairs in that order and accepts the first improving swap;
the next pass starts from the updated function.

Only two groups of Walsh coefficients can decide whether a swap improves:
the ones within 8 of the current maximum (they alone can reach or keep the
maximum) and, for Nl-Ci(k), the ones of weight 1..k.
"""
from dataclasses import dataclass
import logging
from typing import Optional

import numpy as np

from .errors import OrderOutOfRangeError, UnbalancedFunctionError
from .spectra import WalshSpectrum, characters, mask_weights, walsh_swap_delta, walsh_transform_fast
from .truth_table import BooleanFunction

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 50

# entries per candidate block (pairs x columns)
_BLOCK_ENTRIES = 1 << 21


@dataclass(frozen=True)
class ClimbOutcome:
    function: BooleanFunction
    spectrum: WalshSpectrum
    swaps: int
    evaluations: int


class _Climber:
    def __init__(self, f: BooleanFunction, k: Optional[int], spectrum: Optional[WalshSpectrum]):
        self.n = f.n
        self.function = f
        self.spectrum = spectrum if spectrum is not None else walsh_transform_fast(f)
        weights = mask_weights(f.n)
        self.low = None if k is None else np.flatnonzero((weights >= 1) & (weights <= k))
        self._refresh()

    @property
    def values(self) -> np.ndarray:
        return self.spectrum.values

    def _refresh(self):
        magnitudes = np.abs(self.values)
        self.wmax = int(magnitudes.max())
        self.critical = np.flatnonzero(magnitudes > self.wmax - 8)
        self.dev = None if self.low is None else int(magnitudes[self.low].max())

    def first_improving(self, ones: np.ndarray, zeros: np.ndarray):
        """First improving (u, v) in scan order and the number of pairs examined."""
        n_crit = self.critical.size
        cols = self.critical if self.low is None else np.concatenate([self.critical, self.low])
        base = self.values[cols].astype(np.int32)
        chi_v = 2 * characters(self.n, zeros, cols, dtype=np.int32)
        rows = max(1, _BLOCK_ENTRIES // (zeros.size * cols.size))
        scanned = 0
        for start in range(0, ones.size, rows):
            us = ones[start:start + rows]
            chi_u = 2 * characters(self.n, us, cols, dtype=np.int32)
            cand = np.abs(base[None, None, :] + chi_u[:, None, :] - chi_v[None, :, :])
            top = cand[:, :, :n_crit].max(axis=2)
            nl_up = top < self.wmax
            if self.low is None:
                improving = nl_up
            else:
                nl_keep = top <= self.wmax
                dev = cand[:, :, n_crit:].max(axis=2)
                improving = ((dev < self.dev) & nl_keep) | ((dev <= self.dev) & nl_up)
            hits = np.flatnonzero(improving.ravel())
            if hits.size:
                i, j = divmod(int(hits[0]), zeros.size)
                return (int(us[i]), int(zeros[j])), scanned + int(hits[0]) + 1
            scanned += improving.size
        return None, scanned

    def apply(self, u: int, v: int):
        self.spectrum = walsh_swap_delta(self.spectrum, self.function, u, v)
        self.function = self.function.swapped(u, v)
        self._refresh()


def climb(f: BooleanFunction, k: Optional[int], budget: int, rng: np.random.Generator,
          spectrum: Optional[WalshSpectrum] = None) -> ClimbOutcome:
    """Nl-Hc when k is None, Nl-Ci(k)-Hc otherwise; at most budget accepted swaps."""
    if not f.is_balanced:
        raise UnbalancedFunctionError(f"hill climbing needs a balanced function (weight {f.weight})")
    if k is not None and not 1 <= k <= f.n:
        raise OrderOutOfRangeError(f"k={k} outside 1..{f.n}")
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")

    climber = _Climber(f, k, spectrum)
    swaps = evaluations = 0
    while swaps < budget:
        ones = rng.permutation(np.flatnonzero(climber.function.table == 1))
        zeros = rng.permutation(np.flatnonzero(climber.function.table == 0))
        found, scanned = climber.first_improving(ones, zeros)
        evaluations += scanned
        if found is None:
            break
        climber.apply(*found)
        swaps += 1

    logger.debug("climb k=%s: %d swaps, %d candidates", k, swaps, evaluations)
    return ClimbOutcome(
        function=climber.function,
        spectrum=climber.spectrum,
        swaps=swaps,
        evaluations=evaluations,
    )


def nl_hc(f: BooleanFunction, budget: int = DEFAULT_BUDGET,
          rng: Optional[np.random.Generator] = None) -> BooleanFunction:
    return climb(f, None, budget, rng if rng is not None else np.random.default_rng()).function


def nl_ci_hc(f: BooleanFunction, k: int, budget: int = DEFAULT_BUDGET,
             rng: Optional[np.random.Generator] = None) -> BooleanFunction:
    if not 1 <= k <= f.n:
        raise OrderOutOfRangeError(f"k={k} outside 1..{f.n}")
    return climb(f, k, budget, rng if rng is not None else np.random.default_rng()).function
