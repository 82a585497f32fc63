"""Linear codes over GF(3): validation, duality, LCD tests, weight enumeration.

A code is represented by a validated full-rank generator matrix.  Weight
enumeration is exact and exhaustive over all 3^k codewords, guarded by a
configurable budget; the MacWilliams transform provides an independent
cross-check through the dual code.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import BudgetExceededError, DimensionError, NotABasisError
from .gf3 import GF3Matrix, _nullspace_array, _rank_array, mat_mul

#: Largest k for which 3^k codewords are enumerated (3^16 ~ 43M).
DEFAULT_ENUMERATION_EXPONENT = 16

#: Rows of the codeword table built in one vectorized block; the remaining
#: message digits are looped.  3^12 rows of length <= ~120 stay around 60 MB.
_TABLE_EXPONENT = 12


class LinearCode:
    """A validated [n, k] linear code over GF(3).

    The generator is k x n with rank k; this is enforced at construction.
    Instances are immutable values.
    """

    __slots__ = ("_g",)

    def __init__(self, generator: GF3Matrix):
        if not isinstance(generator, GF3Matrix):
            generator = GF3Matrix(generator)
        k, n = generator.shape
        if k < 1:
            raise DimensionError("generator must have at least one row")
        if k > n:
            raise DimensionError(f"dimension {k} exceeds length {n}")
        r = _rank_array(generator.array)
        if r != k:
            raise NotABasisError(
                f"generator rows do not form a basis: rank {r} < {k}")
        object.__setattr__(self, "_g", generator)

    @property
    def generator(self) -> GF3Matrix:
        return self._g

    @property
    def n(self) -> int:
        return self._g.cols

    @property
    def k(self) -> int:
        return self._g.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self._g == other._g

    def __hash__(self) -> int:
        return hash(self._g)

    def __repr__(self) -> str:
        return f"<LinearCode [{self.n},{self.k}]>"


def make_code(g: GF3Matrix | list) -> LinearCode:
    """Validate ``g`` as a generator matrix and wrap it as a code."""
    return LinearCode(g)


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact codeword counts A_0..A_n by Hamming weight."""

    counts: tuple[int, ...]

    def __post_init__(self):
        c = self.counts
        if not c or c[0] != 1:
            raise ValueError("A_0 must be 1")
        if any(x < 0 for x in c):
            raise ValueError("counts must be non-negative")
        total = sum(c)
        k = 0
        t = total
        while t % 3 == 0:
            t //= 3
            k += 1
        if t != 1:
            raise ValueError(f"counts sum to {total}, not a power of 3")
        if any(x % 2 for x in c[1:]):
            raise ValueError("A_i must be even for i >= 1 (codeword/negative pairs)")
        object.__setattr__(self, "_k", k)

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def dimension(self) -> int:
        """k with sum(counts) = 3^k."""
        return self._k

    @property
    def min_weight(self) -> int | None:
        for i, c in enumerate(self.counts[1:], start=1):
            if c:
                return i
        return None

    def nonzero(self) -> dict[int, int]:
        """{weight: count} for the nonzero weights."""
        return {i: c for i, c in enumerate(self.counts) if c and i > 0}

    def polynomial(self) -> str:
        terms = ["1"] + [f"{c}z^{i}" for i, c in enumerate(self.counts) if c and i > 0]
        return " + ".join(terms)


@dataclass(frozen=True)
class GramReport:
    """G*G^T together with the LCD verdict it implies."""

    gram: GF3Matrix
    gram_rank: int
    hull_dim: int
    is_lcd: bool


def gram_report(c: LinearCode) -> GramReport:
    """Compute G*G^T; the code is LCD iff the Gram matrix is nonsingular."""
    g = c.generator
    gram = mat_mul(g, g.t)
    r = _rank_array(gram.array)
    return GramReport(gram=gram, gram_rank=r, hull_dim=c.k - r, is_lcd=(r == c.k))


def dual(c: LinearCode) -> LinearCode:
    """The [n, n-k] dual code; rejects k = n (zero code unsupported)."""
    if c.k == c.n:
        raise DimensionError("dual of a full-space code has dimension 0")
    return LinearCode(GF3Matrix._wrap(_nullspace_array(c.generator.array)))


def _weight_counts(g: np.ndarray) -> np.ndarray:
    """Histogram of codeword weights over all 3^k messages (int64, length n+1).

    Builds the codeword table of the first rows in one vectorized block and
    sweeps the remaining message digits; equal to the naive enumeration.
    """
    k, n = g.shape
    t = min(k, _TABLE_EXPONENT)
    table = np.zeros((1, n), dtype=np.int8)
    for i in range(t):
        row = g[i]
        table = np.concatenate([table, (table + row) % 3, (table + 2 * row) % 3])
    counts = np.zeros(n + 1, dtype=np.int64)
    rest = g[t:]
    if rest.shape[0] == 0:
        w = np.count_nonzero(table, axis=1)
        return np.bincount(w, minlength=n + 1).astype(np.int64)
    digits = np.zeros(rest.shape[0], dtype=np.int8)
    offset = np.zeros(n, dtype=np.int8)
    for _ in range(3 ** rest.shape[0]):
        w = np.count_nonzero((table + offset) % 3, axis=1)
        counts += np.bincount(w, minlength=n + 1)
        # advance the base-3 counter over the remaining rows
        for pos in range(len(digits) - 1, -1, -1):
            digits[pos] = (digits[pos] + 1) % 3
            offset = (offset + rest[pos]) % 3
            if digits[pos] != 0:
                break
    return counts


def _check_budget(k: int, max_exponent: int):
    if k > max_exponent:
        raise BudgetExceededError(
            f"enumerating 3^{k} codewords exceeds the budget of 3^{max_exponent}; "
            "raise max_exponent explicitly if this is intended")


def weight_enumerator(c: LinearCode,
                      max_exponent: int = DEFAULT_ENUMERATION_EXPONENT) -> WeightEnumerator:
    """Exact weight enumerator by exhaustive enumeration of all 3^k codewords."""
    _check_budget(c.k, max_exponent)
    counts = _weight_counts(c.generator.array)
    return WeightEnumerator(tuple(int(x) for x in counts))


def min_distance(c: LinearCode,
                 max_exponent: int = DEFAULT_ENUMERATION_EXPONENT) -> int:
    """Smallest nonzero codeword weight, by exhaustive enumeration."""
    _check_budget(c.k, max_exponent)
    counts = _weight_counts(c.generator.array)
    nz = np.flatnonzero(counts[1:])
    return int(nz[0]) + 1


def krawtchouk_table(n: int) -> np.ndarray:
    """K[j, i] = K_j(i), the q=3 Krawtchouk values, exact in int64."""
    K = np.zeros((n + 1, n + 1), dtype=np.int64)
    for j in range(n + 1):
        for i in range(n + 1):
            K[j, i] = sum((-1) ** s * 2 ** (j - s) * comb(i, s) * comb(n - i, j - s)
                          for s in range(min(i, j) + 1))
    return K


def macwilliams_dual_enumerator(w: WeightEnumerator, n: int, k: int) -> WeightEnumerator:
    """Weight enumerator of the dual code via the MacWilliams transform.

    B_j = 3^-k * sum_i A_i K_j(i), computed in exact integer arithmetic.
    Used as an independent cross-check of direct dual enumeration.
    """
    if w.n != n:
        raise DimensionError(f"enumerator length {w.n} != n = {n}")
    if w.dimension != k:
        raise DimensionError(f"enumerator sums to 3^{w.dimension}, not 3^{k}")
    a = list(w.counts)
    scale = 3 ** k
    out = []
    for j in range(n + 1):
        total = sum(a[i] * _kraw(j, i, n) for i in range(n + 1))
        q, r = divmod(total, scale)
        if r:
            raise ValueError("MacWilliams transform produced a non-integer count")
        out.append(q)
    return WeightEnumerator(tuple(out))


def _kraw(j: int, i: int, n: int) -> int:
    return sum((-1) ** s * 2 ** (j - s) * comb(i, s) * comb(n - i, j - s)
               for s in range(min(i, j) + 1))


def min_distance_via_dual(c: LinearCode,
                          max_exponent: int = DEFAULT_ENUMERATION_EXPONENT) -> int:
    """Minimum distance computed from the dual side plus MacWilliams.

    Lets high-rate codes (k > budget) be verified by enumerating only the
    3^(n-k) dual codewords.
    """
    _check_budget(c.n - c.k, max_exponent)
    dcounts = _weight_counts(_nullspace_array(c.generator.array))
    dw = WeightEnumerator(tuple(int(x) for x in dcounts))
    primal = macwilliams_dual_enumerator(dw, c.n, c.n - c.k)
    md = primal.min_weight
    if md is None:
        raise ValueError("zero code has no minimum distance")
    return md


def verified_min_distance(c: LinearCode,
                          max_exponent: int = DEFAULT_ENUMERATION_EXPONENT) -> int:
    """Minimum distance through whichever side fits the enumeration budget."""
    if c.k <= max_exponent:
        return min_distance(c, max_exponent)
    return min_distance_via_dual(c, max_exponent)


def enumerator_auto(c: LinearCode,
                    max_exponent: int = DEFAULT_ENUMERATION_EXPONENT) -> WeightEnumerator:
    """Weight enumerator, routed through the dual when k exceeds the budget."""
    if c.k <= max_exponent:
        return weight_enumerator(c, max_exponent)
    _check_budget(c.n - c.k, max_exponent)
    dcounts = _weight_counts(_nullspace_array(c.generator.array))
    dw = WeightEnumerator(tuple(int(x) for x in dcounts))
    return macwilliams_dual_enumerator(dw, c.n, c.n - c.k)
