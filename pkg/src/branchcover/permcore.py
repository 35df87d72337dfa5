"""Exact permutation arithmetic for the symmetric group S_d.

Permutations are bijections of {1, ..., d}, stored in one-line notation.
The composition convention is fixed once and for all: ``compose(p, q)``
applies q first, then p.  Points are 1-indexed throughout.
"""

from __future__ import annotations

import itertools
import re
from functools import reduce
from math import factorial
from typing import Iterable, Iterator, Sequence


class DegreeMismatchError(ValueError):
    """Raised when permutations of different degrees are combined."""


class Perm:
    """An element of S_d, immutable and hashable.

    The degree d is part of the value: permutations of different degrees
    never compare equal and cannot be composed.
    """

    __slots__ = ("images", "d", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        d = len(images)
        if d < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError(f"not a bijection of {{1,...,{d}}}: {images}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    def __reduce__(self):
        return (Perm, (self.images,))

    @classmethod
    def identity(cls, d: int) -> "Perm":
        return cls(range(1, d + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], d: int) -> "Perm":
        images = list(range(1, d + 1))
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= d:
                    raise ValueError(f"point {x} out of range for degree {d}")
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {tuple(cyc)}")
            for a, b in zip(cyc, cyc[1:]):
                images[a - 1] = b
            if len(cyc) > 1:
                images[cyc[-1] - 1] = cyc[0]
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError("cycles are not disjoint")
        return cls(images)

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> "Perm":
        """Parse cycle notation "(1 2)(3 4)" or one-line "2 1 4 3 5".

        Cycle notation requires an explicit degree; "()" is the identity.
        """
        text = text.strip()
        if text.startswith("(") or text == "()":
            if d is None:
                raise ValueError("cycle notation needs an explicit degree")
            cycles = []
            for body in re.findall(r"\(([^()]*)\)", text):
                pts = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
                if pts:
                    cycles.append(pts)
            return cls.from_cycles(cycles, d)
        images = [int(tok) for tok in re.split(r"[,\s]+", text) if tok]
        if d is not None and len(images) != d:
            raise DegreeMismatchError(f"one-line word has length {len(images)}, expected {d}")
        return cls(images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Perm.parse({str(self)!r}, d={self.d})"

    def __str__(self) -> str:
        """Canonical cycle notation, fixed points omitted, "()" for id."""
        cycs = [c for c in self.cycles() if len(c) > 1]
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.d + 1))

    def inverse(self) -> "Perm":
        inv = [0] * self.d
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Perm(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (including fixed points), each starting at its
        minimum, sorted by minimum."""
        seen = [False] * (self.d + 1)
        out = []
        for start in range(1, self.d + 1):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        seen = [False] * (self.d + 1)
        n = 0
        for start in range(1, self.d + 1):
            if seen[start]:
                continue
            n += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = self(x)
        return n


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation x -> p(q(x)): apply q first, then p."""
    if p.d != q.d:
        raise DegreeMismatchError(f"cannot compose degrees {p.d} and {q.d}")
    qi = q.images
    pi = p.images
    return Perm(tuple(pi[y - 1] for y in qi))


def compose_all(perms: Sequence[Perm], d: int) -> Perm:
    """Compose so the first listed permutation acts first."""
    return reduce(lambda acc, s: compose(s, acc), perms, Perm.identity(d))


def conjugate(p: Perm, t: Perm) -> Perm:
    """t * p * t^{-1}, the relabeling of p through t."""
    return compose(t, compose(p, t.inverse()))


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths of p sorted decreasingly, fixed points included."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def absolute_length(p: Perm) -> int:
    """d minus the number of cycles: the minimal number of transpositions
    whose product is p.  A class function."""
    return p.d - p.cycle_count()


def orbits(d: int, gens: Sequence[Perm]) -> frozenset[frozenset[int]]:
    """Orbits of {1,...,d} under the group generated by gens.

    Union-find over the edges x -> g(x); the group need not be constructed.
    """
    for g in gens:
        if g.d != d:
            raise DegreeMismatchError(f"generator degree {g.d} != {d}")
    parent = list(range(d + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(1, d + 1):
            rx, ry = find(x), find(g(x))
            if rx != ry:
                parent[ry] = rx
    blocks: dict[int, set[int]] = {}
    for x in range(1, d + 1):
        blocks.setdefault(find(x), set()).add(x)
    return frozenset(frozenset(b) for b in blocks.values())


def canonical_representative(lam: Sequence[int]) -> Perm:
    """Cycles of lengths lam_1 >= lam_2 >= ... on consecutive integers
    starting from 1, e.g. (3,2) -> (1 2 3)(4 5)."""
    parts = tuple(lam)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(p < 1 for p in parts):
        raise ValueError(f"not a partition: {parts}")
    d = sum(parts)
    cycles = []
    nxt = 1
    for part in parts:
        cycles.append(list(range(nxt, nxt + part)))
        nxt += part
    return Perm.from_cycles(cycles, d)


def centralizer_order(lam: Sequence[int]) -> int:
    """z_lambda = prod_k k^{a_k} * a_k!, the centralizer order of the class."""
    z = 1
    for k, grp in itertools.groupby(lam):
        a = len(list(grp))
        z *= k**a * factorial(a)
    return z


def class_size(lam: Sequence[int]) -> int:
    """Number of permutations of cycle type lam: d!/z_lambda."""
    return factorial(sum(lam)) // centralizer_order(lam)


def class_enumerate(lam: Sequence[int]) -> Iterator[Perm]:
    """Yield every permutation of cycle type lam exactly once.

    The smallest remaining point always leads the next cycle built, which
    kills the cyclic-rotation redundancy within a cycle; branching over the
    *distinct* sizes still available kills the redundancy of reordering
    equal parts.  Each k-cycle then contributes its (k-1)! tails.
    """
    d = sum(lam)
    if d == 0:
        return
    size_mult: dict[int, int] = {}
    for k in lam:
        size_mult[k] = size_mult.get(k, 0) + 1

    def build(remaining: frozenset[int], mult: dict[int, int], cycles: list[list[int]]) -> Iterator[Perm]:
        if not remaining:
            yield Perm.from_cycles(cycles, d)
            return
        lead = min(remaining)
        rest = sorted(remaining - {lead})
        for k in sorted(mult):
            if mult[k] == 0:
                continue
            mult[k] -= 1
            for tail in itertools.permutations(rest, k - 1):
                cycles.append([lead, *tail])
                yield from build(remaining - {lead, *tail}, mult, cycles)
                cycles.pop()
            mult[k] += 1

    yield from build(frozenset(range(1, d + 1)), size_mult, [])
