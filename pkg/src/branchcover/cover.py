"""Combinatorial branched covers of the disk.

A cover with branch points z_1, ..., z_k and local monodromies
sigma_1, ..., sigma_k is recorded, at the level of connected components,
by the tuple of non-identity permutations alone; the positions of the
branch points never matter here.  The boundary monodromy is the product
crossing sigma_1 first.  Each cover determines a component signature
(pi, F, g): the boundary monodromy, the set-partition of sheets into
connected components, and the genus of each component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .permcore import (
    DegreeMismatchError,
    Perm,
    absolute_length,
    compose,
    compose_all,
    orbits,
)


class InvalidCoverError(ValueError):
    """Raised when cover data violates its structural invariants."""


def _canon_blocks(blocks: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(b) for b in blocks), key=min))


@dataclass(frozen=True)
class SetPartition:
    """Disjoint nonempty blocks covering {1,...,d}, sorted by minimum."""

    d: int
    blocks: tuple[frozenset[int], ...]

    def __init__(self, d: int, blocks: Iterable[Iterable[int]]):
        blocks = _canon_blocks(frozenset(b) for b in blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise InvalidCoverError("empty block")
            if b & seen:
                raise InvalidCoverError("blocks are not disjoint")
            seen |= b
        if seen != set(range(1, d + 1)):
            raise InvalidCoverError(f"blocks do not cover {{1,...,{d}}}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def singletons(cls, d: int) -> "SetPartition":
        return cls(d, [{x} for x in range(1, d + 1)])

    def block_of(self, x: int) -> frozenset[int]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def join(self, other: "SetPartition") -> "SetPartition":
        """Join in the partition lattice (finest common coarsening)."""
        if self.d != other.d:
            raise DegreeMismatchError(f"degrees {self.d} and {other.d}")
        parent = list(range(self.d + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for part in (self, other):
            for b in part.blocks:
                root = find(min(b))
                for x in b:
                    parent[find(x)] = root
        merged: dict[int, set[int]] = {}
        for x in range(1, self.d + 1):
            merged.setdefault(find(x), set()).add(x)
        return SetPartition(self.d, merged.values())


@dataclass(frozen=True)
class BranchTuple:
    """An ordered sequence of non-identity local monodromies in S_d."""

    d: int
    branches: tuple[Perm, ...]

    def __init__(self, d: int, branches: Sequence[Perm]):
        branches = tuple(branches)
        for s in branches:
            if s.d != d:
                raise DegreeMismatchError(f"branch degree {s.d} != {d}")
            if absolute_length(s) == 0:
                raise InvalidCoverError("identity entries are not branch points")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "branches", branches)

    def __str__(self) -> str:
        return "; ".join([f"d={self.d}", *map(str, self.branches)])

    @classmethod
    def parse(cls, text: str) -> "BranchTuple":
        """Parse "d=3; (1 2); (1 3)"."""
        pieces = [p.strip() for p in text.split(";")]
        if not pieces or not pieces[0].startswith("d="):
            raise ValueError("branch tuple text must start with 'd=<degree>'")
        d = int(pieces[0][2:])
        return cls(d, [Perm.parse(p, d) for p in pieces[1:] if p])

    def to_json(self) -> str:
        return json.dumps(
            {
                "d": self.d,
                "branches": [[list(c) for c in s.cycles() if len(c) > 1] for s in self.branches],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "BranchTuple":
        obj = json.loads(text)
        d = obj["d"]
        return cls(d, [Perm.from_cycles(cycles, d) for cycles in obj["branches"]])


@dataclass(frozen=True)
class ComponentSignature:
    """The label (pi, F, g) of a connected component of the moduli of
    branched covers of the disk: boundary monodromy, sheet partition into
    connected components, and per-component genus."""

    d: int
    pi: Perm
    F: SetPartition
    g: tuple[int, ...]  # aligned with F.blocks

    def __init__(self, d: int, pi: Perm, F: SetPartition, g: Mapping[frozenset[int], int] | Sequence[int]):
        if pi.d != d or F.d != d:
            raise DegreeMismatchError("degree mismatch in signature")
        if isinstance(g, Mapping):
            gvals = tuple(g[b] for b in F.blocks)
        else:
            gvals = tuple(g)
            if len(gvals) != len(F.blocks):
                raise InvalidCoverError("one genus per block required")
        cycle_supports = [frozenset(c) for c in pi.cycles()]
        for block in F.blocks:
            if not all(c <= block or not (c & block) for c in cycle_supports):
                raise InvalidCoverError(f"block {set(block)} is not a union of cycles of pi")
        for block, gv in zip(F.blocks, gvals):
            if gv < 0:
                raise InvalidCoverError("negative genus")
            if len(block) == 1 and gv != 0:
                raise InvalidCoverError("singleton blocks must have genus 0")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "g", gvals)

    def genus_of(self, block: frozenset[int]) -> int:
        return self.g[self.F.blocks.index(block)]

    def __str__(self) -> str:
        blocks = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.F.blocks)
        return f"(pi={self.pi}, F=[{blocks}], g={list(self.g)})"

    def to_json(self) -> str:
        return json.dumps(
            {
                "d": self.d,
                "pi": [list(c) for c in self.pi.cycles() if len(c) > 1],
                "F": [sorted(b) for b in self.F.blocks],
                "g": list(self.g),
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "ComponentSignature":
        obj = json.loads(text)
        d = obj["d"]
        return cls(
            d,
            Perm.from_cycles(obj["pi"], d),
            SetPartition(d, obj["F"]),
            tuple(obj["g"]),
        )


def boundary_monodromy(t: BranchTuple) -> Perm:
    """The product of the local monodromies, crossing sigma_1 first."""
    return compose_all(t.branches, t.d)


def _restricted_length(s: Perm, block: frozenset[int]) -> int:
    """N of the restriction of s to an invariant block: |block| minus the
    number of cycles of s inside the block."""
    in_block = sum(1 for c in s.cycles() if c[0] in block)
    return len(block) - in_block


def component_signature(t: BranchTuple) -> ComponentSignature:
    """Extract (pi, F, g) from a branch tuple.

    F is the orbit partition of the monodromy group (unmoved sheets are
    singletons); the genus of each block comes from the Euler
    characteristic 2 - 2g - #(boundary circles) = |block| - sum of local N.
    """
    pi = boundary_monodromy(t)
    F = SetPartition(t.d, orbits(t.d, t.branches))
    genus: dict[frozenset[int], int] = {}
    for block in F.blocks:
        b = sum(1 for c in pi.cycles() if c[0] in block)
        total_n = sum(_restricted_length(s, block) for s in t.branches)
        twice_g = 2 - b - len(block) + total_n
        if twice_g % 2 != 0:
            raise InvalidCoverError(f"non-integral genus on block {set(block)}")
        g = twice_g // 2
        if g < 0:
            raise InvalidCoverError(f"negative genus on block {set(block)}")
        genus[block] = g
    return ComponentSignature(t.d, pi, F, genus)


def is_local(t: BranchTuple) -> bool:
    """True iff every connected component of the cover is a disk.

    Two equivalent characterizations are computed and cross-asserted:
    sum N(sigma_i) = d - r (r = number of components) and
    sum N(sigma_i) = N(boundary monodromy).
    """
    total_n = sum(absolute_length(s) for s in t.branches)
    r = len(orbits(t.d, t.branches))
    by_components = total_n == t.d - r
    by_boundary = total_n == absolute_length(boundary_monodromy(t))
    assert by_components == by_boundary, f"local-cover criteria disagree on {t}"
    return by_components


def realize(sig: ComponentSignature) -> BranchTuple:
    """A branch tuple whose component signature is sig.

    Per block: start from the restriction of pi (one entry, if nontrivial),
    then append pairs of equal transpositions; b-1 pairs chain the b cycles
    of pi inside the block into one orbit, and g more pairs of a fixed
    transposition add the genus.  Each pair cancels in the boundary
    monodromy, and g = #pairs - b + 1 by Euler characteristic.
    """
    entries: list[Perm] = []
    d = sig.d
    for block, g in zip(sig.F.blocks, sig.g):
        cycles_in = [c for c in sig.pi.cycles() if c[0] in block]
        restricted = Perm.from_cycles(cycles_in, d)
        if not restricted.is_identity():
            entries.append(restricted)
        minima = sorted(min(c) for c in cycles_in)
        for a, b in zip(minima, minima[1:]):
            tau = Perm.from_cycles([(a, b)], d)
            entries.extend([tau, tau])
        if g > 0:
            lo = sorted(block)[:2]
            tau = Perm.from_cycles([tuple(lo)], d)
            entries.extend([tau, tau] * g)
    return BranchTuple(d, entries)


def validate_hurwitz_point(t: BranchTuple, target_pi: Perm, target_g: int) -> tuple[bool, str]:
    """Check the four conditions for (t, target_pi, target_g) to be a point
    of the framed Hurwitz space of connected genus-g covers with boundary
    monodromy target_pi.  Returns (ok, diagnosis); the diagnosis names the
    first failing condition."""
    if target_pi.d != t.d:
        raise DegreeMismatchError(f"degrees {target_pi.d} and {t.d}")
    if boundary_monodromy(t) != target_pi:
        return False, "condition (i): boundary monodromy differs from target"
    # condition (ii), no unbranched entries, holds by the BranchTuple invariant
    total_n = sum(absolute_length(s) for s in t.branches)
    if 2 * target_g - 2 != -2 * t.d + total_n + absolute_length(target_pi):
        return False, "condition (iii): genus formula fails"
    if len(orbits(t.d, t.branches)) != 1:
        return False, "condition (iv): monodromy group is not transitive"
    return True, "valid"


def hurwitz_move(t: BranchTuple, i: int) -> BranchTuple:
    """The elementary move swapping branch points i and i+1 (0-based):
    (s_i, s_{i+1}) -> (s_{i+1}, s_{i+1}^{-1} s_i s_{i+1}).  Preserves the
    component signature."""
    s = list(t.branches)
    a, b = s[i], s[i + 1]
    s[i] = b
    # with the first-listed entry acting first, the conjugate that keeps
    # the boundary product fixed is b o a o b^{-1}
    s[i + 1] = compose(b, compose(a, b.inverse()))
    return BranchTuple(t.d, s)
