"""Partitions in a rectangle: complements, hooks, jumping sequences, counts.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros (normal form).  The empty partition is ``()``.
A rectangle is the pair ``(rows, cols)``.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DoesNotFit, InvalidDimensions

Partition = tuple[int, ...]
Rectangle = tuple[int, int]


def normalize(parts) -> Partition:
    """Drop trailing zeros and return the canonical tuple form."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def fits(lam: Partition, rect: Rectangle) -> bool:
    rows, cols = rect
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def contains(lam: Partition, mu: Partition) -> bool:
    """Young-diagram containment mu ⊆ lam."""
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def padded(lam: Partition, rows: int) -> tuple[int, ...]:
    return lam + (0,) * (rows - len(lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def complement_in_rectangle(lam: Partition, rect: Rectangle) -> Partition:
    """Complement of lam inside rect, rotated 180 degrees."""
    rows, cols = rect
    if not fits(lam, rect):
        raise DoesNotFit(f"{lam} does not fit in {rows}x{cols}")
    full = padded(lam, rows)
    return normalize(cols - p for p in reversed(full))


def hook(r: int, n: int) -> Partition:
    """The hook partition (n-r, 1, ..., 1) with r-1 ones."""
    if r < 1 or r >= n:
        raise InvalidDimensions(f"need 1 <= r <= n-1, got r={r}, n={n}")
    return normalize((n - r,) + (1,) * (r - 1))


def hook_complement(r: int, n: int) -> Partition:
    """Complement of the hook in the r x (n-r) rectangle: an (r-1) x (n-r-1) rectangle."""
    return complement_in_rectangle(hook(r, n), (r, n - r))


def jumping_sequence(lam: Partition, rect: Rectangle) -> tuple[int, ...]:
    """The strictly increasing sequence j_i = (n-r) + i - lam_i, values in [1, n]."""
    rows, cols = rect
    if not fits(lam, rect):
        raise DoesNotFit(f"{lam} does not fit in {rows}x{cols}")
    full = padded(lam, rows)
    return tuple(cols + i + 1 - full[i] for i in range(rows))


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths of all boxes, row-major order."""
    conj = conjugate(lam)
    return [
        lam[i] - (j + 1) + conj[j] - i
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    if not lam:
        return 1
    count = Fraction(factorial(size(lam)))
    for hl in hook_lengths(lam):
        count /= hl
    assert count.denominator == 1
    return count.numerator


def schur_at_ones(lam: Partition, k: int) -> int:
    """Principal specialization s_lam(1^k): semistandard tableaux with entries <= k.

    Hook-content product; exact, returns 0 when lam has more than k rows.
    """
    if not lam:
        return 1
    if len(lam) > k:
        return 0
    conj = conjugate(lam)
    value = Fraction(1)
    for i in range(len(lam)):
        for j in range(lam[i]):
            content = (j + 1) - (i + 1)
            hl = lam[i] - (j + 1) + conj[j] - i
            value *= Fraction(k + content, hl)
    assert value.denominator == 1
    return value.numerator


@lru_cache(maxsize=None)
def partitions_in_rectangle(rect: Rectangle, weight: int | None = None) -> tuple[Partition, ...]:
    """All partitions fitting in rect, optionally restricted to |lam| = weight."""
    rows, cols = rect

    def gen(rows_left, max_part, budget):
        yield ()
        if rows_left == 0 or budget == 0:
            return
        for first in range(1, min(max_part, budget) + 1):
            for rest in gen(rows_left - 1, first, budget - first):
                yield (first,) + rest

    budget = rows * cols if weight is None else weight
    out = [lam for lam in gen(rows, cols, budget)
           if weight is None or sum(lam) == weight]
    return tuple(out)


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
