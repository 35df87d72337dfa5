"""The orbicell complex of local branched covers of the disk.

One cell per partition lam of d, of real dimension 2*N(lam), with isotropy
group of order prod_k k^{a_k} * a_k!.  Every cell is even-dimensional and
orientable, so the rational cellular differential vanishes identically and
the chain complex is its own homology: Betti numbers are cell counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .partitions import (
    Partition,
    absolute_length_p,
    add_one,
    enumerate_partitions,
    partition_count,
)
from .permcore import centralizer_order, class_size


@dataclass(frozen=True)
class CellDescriptor:
    lam: Partition
    dim: int
    isotropy_order: int
    orientable: bool = True


def cell_list(d: int) -> list[CellDescriptor]:
    """One descriptor per partition of d."""
    if d < 1:
        raise ValueError("d must be positive")
    return [
        CellDescriptor(lam, 2 * absolute_length_p(lam), centralizer_order(lam))
        for lam in enumerate_partitions(d)
    ]


def betti(d: int) -> dict[int, int]:
    """b_{2m} = #{lam of d with N(lam) = m}; odd Betti numbers vanish."""
    if d < 1:
        raise ValueError("d must be positive")
    out: dict[int, int] = {}
    for lam in enumerate_partitions(d):
        k = 2 * absolute_length_p(lam)
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))


def stable_betti(m: int) -> int:
    """The stable value p(m), by the pentagonal-number recurrence; agrees
    with betti(d)[2m] whenever 2m <= d."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return partition_count(m)


def stability_check(d: int) -> dict:
    """Verify the stabilization mechanism from degree d to d+1.

    Checks that lam -> lam + (1) injects the cells of degree d into those
    of degree d+1 preserving dimension, that the cells not hit are exactly
    the partitions of d+1 with no 1-part, that the smallest N among those
    is ceil((d+1)/2), and that Betti numbers agree strictly below
    2*ceil((d+1)/2).
    """
    cells_d = list(enumerate_partitions(d))
    cells_d1 = set(enumerate_partitions(d + 1))
    image = {add_one(lam) for lam in cells_d}
    report: dict = {"d": d, "ok": True, "failures": []}

    def fail(msg: str) -> None:
        report["ok"] = False
        report["failures"].append(msg)

    if len(image) != len(cells_d):
        fail("add_one is not injective")
    if not image <= cells_d1:
        fail("add_one does not land in partitions of d+1")
    for lam in cells_d:
        if absolute_length_p(add_one(lam)) != absolute_length_p(lam):
            fail(f"add_one changes dimension at {lam}")
    complement = cells_d1 - image
    if any(1 in lam for lam in complement):
        fail("complement contains a partition with a 1-part")
    if any(1 not in lam for lam in cells_d1 - complement):
        fail("image misses a partition with a 1-part")
    min_n = min(absolute_length_p(lam) for lam in complement)
    bound = (d + 2) // 2  # ceil((d+1)/2)
    report["new_cells"] = sorted(complement, reverse=True)
    report["min_new_n"] = min_n
    report["expected_min_new_n"] = bound
    if min_n != bound:
        fail(f"minimal N over new cells is {min_n}, expected {bound}")
    b_d, b_d1 = betti(d), betti(d + 1)
    for k in range(0, 2 * bound, 2):
        if b_d.get(k, 0) != b_d1.get(k, 0):
            fail(f"betti mismatch in degree {k} below the stable range")
    return report


def euler_characteristic(d: int) -> int:
    """All cells are even-dimensional, so chi equals the number of cells,
    which is p(d)."""
    return sum(betti(d).values())


def cell_consistency_check(d: int) -> bool:
    """Centralizer identity: isotropy_order * class size = d! per cell."""
    return all(
        c.isotropy_order * class_size(c.lam) == factorial(d) for c in cell_list(d)
    )
