"""
Walsh, autocorrelation and Moebius transforms of Boolean functions.

All fast transforms are in-place butterflies over a (blocks, 2, half) view of
the vector and run in O(n 2^n). The naive variants are O(4^n) test oracles.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SwapPreconditionError, UnsupportedSizeError
from .truth_table import BooleanFunction

NAIVE_MAX_VARIABLES = 12
_NAIVE_BLOCK_ROWS = 512


def _frozen(values: np.ndarray) -> np.ndarray:
    values.flags.writeable = False
    return values


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    n: int
    values: np.ndarray

    @property
    def max_abs(self) -> int:
        return int(np.abs(self.values).max())

    def __eq__(self, other):
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)


@dataclass(frozen=True, eq=False)
class AutocorrelationSpectrum:
    n: int
    values: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, AutocorrelationSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)


@dataclass(frozen=True, eq=False)
class AnfPolynomial:
    n: int
    coefficients: np.ndarray

    def monomials(self):
        return np.flatnonzero(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, AnfPolynomial):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coefficients, other.coefficients)


def _butterfly(values: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform of a copy of values."""
    out = np.array(values, dtype=np.int64)
    m = out.size
    h = 1
    while h < m:
        view = out.reshape(-1, 2, h)
        low = view[:, 0, :].copy()
        view[:, 0, :] += view[:, 1, :]
        view[:, 1, :] = low - view[:, 1, :]
        h <<= 1
    return out


def mask_weights(n: int) -> np.ndarray:
    """Hamming weight of every index in F2^n."""
    return _mask_weights(n)


@lru_cache(maxsize=None)
def _mask_weights(n: int) -> np.ndarray:
    return _frozen(np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.int64))


def characters(n: int, points, masks=None, dtype=np.int64) -> np.ndarray:
    """Rows (-1)^(a.u), one row per point u, one column per mask a (all masks by default)."""
    points = np.atleast_1d(np.asarray(points, dtype=np.uint32))
    if masks is None:
        masks = np.arange(1 << n, dtype=np.uint32)
    else:
        masks = np.asarray(masks, dtype=np.uint32)
    parity = np.bitwise_count(points[:, None] & masks[None, :]) & 1
    return (1 - 2 * parity.astype(np.int64)).astype(dtype, copy=False)


def walsh_transform_fast(f: BooleanFunction) -> WalshSpectrum:
    return WalshSpectrum(f.n, _frozen(_butterfly(f.signs)))


def walsh_transform_naive(f: BooleanFunction) -> WalshSpectrum:
    if f.n > NAIVE_MAX_VARIABLES:
        raise UnsupportedSizeError(
            f"naive transform limited to n <= {NAIVE_MAX_VARIABLES}, got n={f.n}"
        )
    signs = f.signs
    values = np.empty(f.size, dtype=np.int64)
    for start in range(0, f.size, _NAIVE_BLOCK_ROWS):
        rows = np.arange(start, min(start + _NAIVE_BLOCK_ROWS, f.size))
        values[rows] = characters(f.n, rows) @ signs
    return WalshSpectrum(f.n, _frozen(values))


def autocorrelation(f: BooleanFunction) -> AutocorrelationSpectrum:
    return autocorrelation_from_walsh(walsh_transform_fast(f))


def autocorrelation_from_walsh(spectrum: WalshSpectrum) -> AutocorrelationSpectrum:
    # Wiener-Khinchin: r = H(W^2) / 2^n
    values = _butterfly(spectrum.values * spectrum.values) >> spectrum.n
    return AutocorrelationSpectrum(spectrum.n, _frozen(values))


def autocorrelation_naive(f: BooleanFunction) -> AutocorrelationSpectrum:
    if f.n > NAIVE_MAX_VARIABLES:
        raise UnsupportedSizeError(
            f"naive autocorrelation limited to n <= {NAIVE_MAX_VARIABLES}, got n={f.n}"
        )
    signs = f.signs
    idx = np.arange(f.size)
    values = np.array([int(signs @ signs[idx ^ s]) for s in range(f.size)], dtype=np.int64)
    return AutocorrelationSpectrum(f.n, _frozen(values))


def mobius_transform(f: BooleanFunction) -> AnfPolynomial:
    coefficients = _mobius(f.table)
    return AnfPolynomial(f.n, _frozen(coefficients))


def _mobius(table: np.ndarray) -> np.ndarray:
    out = np.array(table, dtype=np.uint8)
    m = out.size
    h = 1
    while h < m:
        view = out.reshape(-1, 2, h)
        view[:, 1, :] ^= view[:, 0, :]
        h <<= 1
    return out


def anf_truth_table(anf: AnfPolynomial) -> BooleanFunction:
    """The Moebius transform is an involution, so this inverts mobius_transform."""
    return BooleanFunction.from_bits(_mobius(anf.coefficients))


def algebraic_degree(anf: AnfPolynomial) -> int:
    monomials = anf.monomials()
    if monomials.size == 0:
        return 0
    return int(mask_weights(anf.n)[monomials].max())


def anf_to_string(anf: AnfPolynomial) -> str:
    terms = []
    for mask in anf.monomials():
        if mask == 0:
            terms.append("1")
            continue
        terms.append("".join(
            f"x{i}" for i in range(1, anf.n + 1) if (mask >> (anf.n - i)) & 1
        ))
    return " + ".join(terms) if terms else "0"


def walsh_swap_delta(spectrum: WalshSpectrum, f: BooleanFunction, u: int, v: int) -> WalshSpectrum:
    """Spectrum of f with the 1-bit at u and the 0-bit at v exchanged."""
    if f.n != spectrum.n:
        raise SwapPreconditionError("spectrum and function disagree on n")
    if f.table[u] != 1 or f.table[v] != 0:
        raise SwapPreconditionError(f"swap needs f({u})=1 and f({v})=0")
    chi = characters(spectrum.n, [u, v])
    values = spectrum.values + 2 * (chi[0] - chi[1])
    return WalshSpectrum(spectrum.n, _frozen(values))
