"""
Truth-table representation of Boolean functions.

Input x = (x1, ..., xn) maps to index sum(x_i * 2**(n - i)), so x1 is the most
significant index bit and the table is in lexicographic order.
"""
from dataclasses import dataclass
import re

import numpy as np

from .errors import TruthTableFormatError, UnsupportedSizeError

MAX_VARIABLES = 16

_WHITESPACE = re.compile(r"\s+")
_HEX = re.compile(r"[0-9a-fA-F]*")
_NIBBLE_SHIFTS = np.array([3, 2, 1, 0], dtype=np.uint8)


def check_variables(n: int, low: int = 1, high: int = MAX_VARIABLES) -> int:
    if not low <= n <= high:
        raise UnsupportedSizeError(f"n={n} outside supported range [{low}, {high}]")
    return n


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    n: int
    table: np.ndarray
    weight: int

    @classmethod
    def from_bits(cls, bits) -> "BooleanFunction":
        table = np.array(bits, dtype=np.uint8).ravel()
        m = table.size
        if m < 2 or m & (m - 1):
            raise UnsupportedSizeError(f"table length {m} is not a power of two")
        if np.any(table > 1):
            raise TruthTableFormatError("table entries must be 0 or 1")
        n = check_variables(m.bit_length() - 1)
        table.flags.writeable = False
        return cls(n=n, table=table, weight=int(table.sum(dtype=np.int64)))

    @classmethod
    def from_hex(cls, text: str) -> "BooleanFunction":
        return parse_truth_table(text)

    @property
    def size(self) -> int:
        return self.table.size

    @property
    def is_balanced(self) -> bool:
        return 2 * self.weight == self.size

    @property
    def signs(self) -> np.ndarray:
        """(-1)^f(x) as int64."""
        return 1 - 2 * self.table.astype(np.int64)

    def to_hex(self) -> str:
        if self.n < 2:
            raise UnsupportedSizeError("hex serialization needs n >= 2")
        nibbles = self.table.reshape(-1, 4).astype(np.uint8) << _NIBBLE_SHIFTS
        return "".join(f"{v:x}" for v in nibbles.sum(axis=1))

    def swapped(self, u: int, v: int) -> "BooleanFunction":
        table = self.table.copy()
        table[u], table[v] = table[v], table[u]
        return BooleanFunction.from_bits(table)

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        body = self.to_hex() if self.n >= 2 else "".join(map(str, self.table))
        return f"BooleanFunction(n={self.n}, weight={self.weight}, table={body})"


def parse_truth_table(text: str, line: int = None) -> BooleanFunction:
    digits = _WHITESPACE.sub("", text)
    if not _HEX.fullmatch(digits):
        raise TruthTableFormatError(f"non-hex character in {text.strip()!r}", line)
    bits = 4 * len(digits)
    if bits < 4 or bits & (bits - 1):
        raise TruthTableFormatError(f"{len(digits)} hex digits is not a power-of-two bit count", line)
    n = bits.bit_length() - 1
    if n > MAX_VARIABLES:
        raise TruthTableFormatError(f"n={n} exceeds the supported maximum {MAX_VARIABLES}", line)
    nibbles = np.array([int(c, 16) for c in digits], dtype=np.uint8)
    table = (nibbles[:, None] >> _NIBBLE_SHIFTS) & 1
    return BooleanFunction.from_bits(table)


def constant(n: int, value: int = 0) -> BooleanFunction:
    check_variables(n)
    return BooleanFunction.from_bits(np.full(1 << n, value & 1, dtype=np.uint8))


def variable(n: int, i: int) -> BooleanFunction:
    """Projection f(x) = x_i for 1 <= i <= n."""
    check_variables(n)
    if not 1 <= i <= n:
        raise UnsupportedSizeError(f"variable index {i} outside 1..{n}")
    idx = np.arange(1 << n)
    return BooleanFunction.from_bits((idx >> (n - i)) & 1)


def from_callable(n: int, func) -> BooleanFunction:
    """Tabulate func(x1, ..., xn) over F2^n in lexicographic order."""
    check_variables(n)
    idx = np.arange(1 << n)
    xs = [(idx >> (n - i)) & 1 for i in range(1, n + 1)]
    return BooleanFunction.from_bits(np.asarray(func(*xs), dtype=np.uint8) & 1)


def random_balanced(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniformly random balanced table as a writable uint8 array."""
    check_variables(n)
    m = 1 << n
    table = np.zeros(m, dtype=np.uint8)
    table[: m // 2] = 1
    return rng.permutation(table)


def hamming_distance(x, y) -> int:
    return int(np.count_nonzero(np.asarray(x) != np.asarray(y)))
