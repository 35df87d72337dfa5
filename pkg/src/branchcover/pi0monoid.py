"""The monoid of branched-cover components of the square.

Elements are component signatures (pi, F, g); the product glues two covers
side by side along the trivialized boundary, crossing the left factor's
branch points first.  The genus of a glued component comes from additivity
of the Euler characteristic: chi(glued) = chi(left parts) + chi(right
parts) - |S|, with chi = 2 - 2g - #(boundary circles).
"""

from __future__ import annotations

import random
from typing import Literal

from .cover import ComponentSignature, InvalidCoverError, SetPartition, realize
from .permcore import (
    DegreeMismatchError,
    Perm,
    compose,
    conjugate,
    cycle_type,
)

GenusRule = Literal["euler", "simplified"]


def unit(d: int) -> ComponentSignature:
    """The trivial degree-d cover: identity monodromy, singleton sheets."""
    return ComponentSignature(d, Perm.identity(d), SetPartition.singletons(d), (0,) * d)


def _cycles_in(p: Perm, block: frozenset[int]) -> int:
    return sum(1 for c in p.cycles() if c[0] in block)


def multiply(
    a: ComponentSignature,
    b: ComponentSignature,
    genus_rule: GenusRule = "euler",
) -> ComponentSignature:
    """The monoid product: a's branch points are crossed first.

    genus_rule="euler" is the Euler-characteristic bookkeeping (the
    default, validated against the realization oracle).  "simplified" drops
    the boundary-circle correction terms, i.e. uses
    g(S) - 1 = |S| + sum(g(T) - 1) + sum(g'(T') - 1); it disagrees with the
    oracle already when two copies of the two-sheeted disk cover branched
    over one point are glued, and is exposed only for comparison.
    """
    if a.d != b.d:
        raise DegreeMismatchError(f"degrees {a.d} and {b.d}")
    pi = compose(b.pi, a.pi)
    F = a.F.join(b.F)
    genus = []
    for S in F.blocks:
        a_blocks = [i for i, T in enumerate(a.F.blocks) if T <= S]
        b_blocks = [i for i, T in enumerate(b.F.blocks) if T <= S]
        sum_g = sum(a.g[i] - 1 for i in a_blocks) + sum(b.g[i] - 1 for i in b_blocks)
        if genus_rule == "simplified":
            g = 1 + len(S) + sum_g
        else:
            circles_a = sum(_cycles_in(a.pi, a.F.blocks[i]) for i in a_blocks)
            circles_b = sum(_cycles_in(b.pi, b.F.blocks[i]) for i in b_blocks)
            circles_out = _cycles_in(pi, S)
            twice = len(S) + circles_a + circles_b - circles_out
            if twice % 2 != 0:
                raise InvalidCoverError(f"non-integral genus on block {set(S)}")
            g = 1 + twice // 2 + sum_g
        if g < 0:
            raise InvalidCoverError(f"negative genus on block {set(S)}")
        genus.append(g)
    return ComponentSignature(a.d, pi, F, tuple(genus))


def monodromy(a: ComponentSignature) -> Perm:
    """The boundary-monodromy homomorphism out of the monoid."""
    return a.pi


def conjugate_component(a: ComponentSignature, tau: Perm) -> ComponentSignature:
    """Relabel the sheets of a through tau (change of trivialization)."""
    if tau.d != a.d:
        raise DegreeMismatchError(f"degrees {tau.d} and {a.d}")
    new_blocks = [frozenset(tau(x) for x in block) for block in a.F.blocks]
    F = SetPartition(a.d, new_blocks)
    genus = {frozenset(tau(x) for x in block): g for block, g in zip(a.F.blocks, a.g)}
    return ComponentSignature(a.d, conjugate(a.pi, tau), F, genus)


def commutation_check(a: ComponentSignature, b: ComponentSignature) -> bool:
    """a * b == b * a^{monodromy(b)}; always true in this monoid."""
    return multiply(a, b) == multiply(b, conjugate_component(a, monodromy(b)))


def stabilize(a: ComponentSignature, d_new: int) -> ComponentSignature:
    """Add d_new - d trivial sheets: new fixed points of pi, new singleton
    blocks of genus 0."""
    if d_new < a.d:
        raise ValueError(f"cannot stabilize from degree {a.d} down to {d_new}")
    if d_new == a.d:
        return a
    pi = Perm(tuple(a.pi.images) + tuple(range(a.d + 1, d_new + 1)))
    blocks = list(a.F.blocks) + [frozenset({x}) for x in range(a.d + 1, d_new + 1)]
    genus = {b: g for b, g in zip(a.F.blocks, a.g)}
    genus.update({frozenset({x}): 0 for x in range(a.d + 1, d_new + 1)})
    return ComponentSignature(d_new, pi, SetPartition(d_new, blocks), genus)


def is_good(a: ComponentSignature) -> bool:
    """Connected covers whose boundary monodromy is a d-cycle, with
    d > 2g - 1; these components are the cofinal family carrying the
    stable moduli of curves."""
    if cycle_type(a.pi) != (a.d,):
        return False
    return a.d > 2 * a.g[0] - 1


def _disk_cover(pi: Perm) -> ComponentSignature:
    """The union-of-disks signature with boundary monodromy pi: one disk
    per cycle."""
    blocks = [frozenset(c) for c in pi.cycles()]
    return ComponentSignature(pi.d, pi, SetPartition(pi.d, blocks), (0,) * len(blocks))


def make_good(
    s: ComponentSignature,
) -> tuple[ComponentSignature, ComponentSignature, ComponentSignature]:
    """Witnesses (v, w, result) with result = (stabilized s*v) * w good.

    v is the union-of-disks cover whose boundary monodromy turns the
    product into the canonical d-cycle (1 2 ... d), so s*v is connected.
    If s*v is not yet good (d <= 2g - 1), w is the degree-2g
    union-of-disks cover with boundary monodromy (d, d+1, ..., 2g), and
    result = stabilize(s*v, 2g) * w has a 2g-cycle boundary and genus g.
    """
    d = s.d
    alpha = Perm.from_cycles([tuple(range(1, d + 1))], d)
    v = _disk_cover(compose(alpha, s.pi.inverse()))
    sv = multiply(s, v)
    g = sv.g[0]
    if d > 2 * g - 1:
        w = unit(d)
        result = sv
    else:
        w = _disk_cover(Perm.from_cycles([tuple(range(d, 2 * g + 1))], 2 * g))
        result = multiply(stabilize(sv, 2 * g), w)
    assert is_good(result), f"make_good produced a non-good component for {s}"
    return v, w, result


def ore_witness_1(
    s: ComponentSignature, t: ComponentSignature
) -> tuple[ComponentSignature, ComponentSignature]:
    """(u, v) with s*u == t*v, read off from the commutation law:
    u = t and v = s conjugated by the boundary monodromy of t."""
    if s.d != t.d:
        raise DegreeMismatchError(f"degrees {s.d} and {t.d}")
    return t, conjugate_component(s, monodromy(t))


def ore_witness_2(
    r: ComponentSignature, s: ComponentSignature, t: ComponentSignature
) -> ComponentSignature:
    """Given r*s == r*t, a single u with s*u == t*u: the connected
    union-of-disks cover with d-cycle boundary monodromy."""
    if multiply(r, s) != multiply(r, t):
        raise ValueError("rs != rt")
    d = s.d
    alpha = Perm.from_cycles([tuple(range(1, d + 1))], d)
    return _disk_cover(alpha)


def random_signature(rng: random.Random, d: int, max_genus: int = 3) -> ComponentSignature:
    """A uniform-ish random valid signature, for seeded property suites:
    random boundary monodromy, random coarsening of its cycles into
    components, random small genera (singletons pinned to 0)."""
    images = list(range(1, d + 1))
    rng.shuffle(images)
    pi = Perm(images)
    cycles = [frozenset(c) for c in pi.cycles()]
    labels = [rng.randrange(len(cycles)) for _ in cycles]
    grouped: dict[int, set[int]] = {}
    for cyc, lab in zip(cycles, labels):
        grouped.setdefault(lab, set()).update(cyc)
    F = SetPartition(d, grouped.values())
    genus = {b: (0 if len(b) == 1 else rng.randint(0, max_genus)) for b in F.blocks}
    return ComponentSignature(d, pi, F, genus)


def oracle_multiply(a: ComponentSignature, b: ComponentSignature) -> ComponentSignature:
    """Independent route for the product: realize both factors as branch
    tuples, concatenate, and read the signature back off the tuple."""
    from .cover import BranchTuple, component_signature

    ta, tb = realize(a), realize(b)
    return component_signature(BranchTuple(a.d, ta.branches + tb.branches))
