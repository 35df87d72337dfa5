"""Integer-partition kernel.

A partition of d is a weakly decreasing tuple of positive integers summing
to d.  This module owns enumeration, the absolute length N(lam) = d - #parts,
the stabilization map lam -> lam + (1), disjoint union of cycle types inside
an ambient degree, hook decomposition, and the refinement order.

Text format: comma-separated parts, e.g. "4,1,1"; the empty partition is "".
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: Sequence[int], d: int | None = None) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    if d is not None and sum(parts) != d:
        raise ValueError(f"{parts} is not a partition of {d}")
    return parts


def parse_partition(text: str, d: int | None = None) -> Partition:
    text = text.strip()
    parts = tuple(int(tok) for tok in text.split(",") if tok.strip()) if text else ()
    return check_partition(parts, d)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def enumerate_partitions(d: int) -> Iterator[Partition]:
    """All partitions of d, each once, in reverse lexicographic order.

    Reverse lex starts at (d) and ends at (1,...,1); for d = 0 the single
    empty partition is produced.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")

    def gen(n: int, cap: int) -> Iterator[Partition]:
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first):
                yield (first, *rest)

    yield from gen(d, d)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence.

    Independent of enumerate_partitions; used as the oracle for stable
    Betti numbers.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def absolute_length_p(lam: Partition) -> int:
    """N(lam) = d - (number of parts); matches absolute_length on any
    representative of the class."""
    return sum(lam) - len(lam)


def add_one(lam: Partition) -> Partition:
    """Append a part equal to 1: a partition of d+1 with the same N."""
    out = list(lam)
    out.append(1)
    out.sort(reverse=True)
    return tuple(out)


def support_size(lam: Partition) -> int:
    """Sum of the parts >= 2: the number of points moved by any
    representative."""
    return sum(p for p in lam if p >= 2)


def disjoint_union(lam: Partition, mu: Partition, d: int) -> Partition | None:
    """Cycle type of pi o sigma for disjoint-support representatives of lam
    and mu inside S_d, or None when their supports cannot be disjoint.

    Representability depends on the ambient degree: the moved points of the
    two classes must fit side by side in {1,...,d}.
    """
    check_partition(lam, d)
    check_partition(mu, d)
    big = [p for p in lam if p >= 2] + [p for p in mu if p >= 2]
    if sum(big) > d:
        return None
    big.sort(reverse=True)
    return tuple(big) + (1,) * (d - sum(big))


def hook_decomposition(lam: Partition) -> list[Partition]:
    """The hooks (lam_i, 1^{d-lam_i}) for each part lam_i >= 2, as a
    multiset (list sorted by decreasing part).  Folding disjoint_union over
    the result re-assembles lam."""
    d = sum(lam)
    return [(p,) + (1,) * (d - p) for p in lam if p >= 2]


def refines(fine: Partition, coarse: Partition) -> bool:
    """True iff the parts of `fine` can be grouped so the group sums are
    exactly the parts of `coarse`.

    The finer partition is the first argument: refines((2,1,1), (2,2)) is
    True.  This is the closure order of the boundary-monodromy
    stratification.
    """
    if sum(fine) != sum(coarse):
        raise ValueError(f"degree mismatch: {sum(fine)} != {sum(coarse)}")

    parts = sorted(fine, reverse=True)
    residual = sorted(coarse, reverse=True)

    def place(idx: int) -> bool:
        if idx == len(parts):
            return all(r == 0 for r in residual)
        p = parts[idx]
        tried = set()
        for j, r in enumerate(residual):
            # equal residuals are interchangeable; try each value once
            if r < p or r in tried:
                continue
            tried.add(r)
            residual[j] = r - p
            if place(idx + 1):
                residual[j] = r
                return True
            residual[j] = r
        return False

    return place(0)
