"""Exact class algebra of S_d.

Factorization counts -- in how many ways does a fixed representative of
the class lam factor as a product of a permutation of type mu and one of
type nu -- are computed along two independent routes: brute-force
enumeration of the smaller conjugacy class, and the classical character
formula evaluated on an integer character table built by the
Murnaghan-Nakayama recursion.  Everything is exact; there is no floating
point anywhere in this package.
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Iterator, NamedTuple

from .partitions import Partition, check_partition, enumerate_partitions
from .permcore import (
    Perm,
    canonical_representative,
    class_enumerate,
    class_size,
    compose,
    cycle_type,
)

SCHEMA_VERSION = 1
CACHE_ENV_VAR = "BRANCHCOVER_CACHE_DIR"
DEFAULT_MAX_D = 12

_tables: dict[int, "CharTable"] = {}
_tables_lock = threading.Lock()


class FactorizationKey(NamedTuple):
    d: int
    mu: Partition
    nu: Partition
    lam: Partition


class CharTable:
    """Integer character table of S_d.

    Rows are irreducible representations, columns conjugacy classes, both
    indexed by partitions of d in reverse lexicographic order.
    """

    def __init__(self, d: int, values: list[list[int]]):
        self.d = d
        self.index = list(enumerate_partitions(d))
        self.pos = {lam: i for i, lam in enumerate(self.index)}
        if len(values) != len(self.index) or any(len(row) != len(self.index) for row in values):
            raise ValueError("character table has the wrong shape")
        self.values = values

    def char(self, irrep: Partition, cls: Partition) -> int:
        return self.values[self.pos[irrep]][self.pos[cls]]

    def dimension(self, irrep: Partition) -> int:
        return self.char(irrep, (1,) * self.d)

    def check_orthogonality(self) -> bool:
        n = len(self.index)
        sizes = [class_size(lam) for lam in self.index]
        fact = factorial(self.d)
        for i in range(n):
            for j in range(i, n):
                dot = sum(self.values[i][k] * self.values[j][k] * sizes[k] for k in range(n))
                if dot != (fact if i == j else 0):
                    return False
        return all(self.values[i][self.pos[(1,) * self.d]] > 0 for i in range(n))

    def check_burnside(self) -> bool:
        return sum(self.dimension(lam) ** 2 for lam in self.index) == factorial(self.d)

    def to_json(self) -> str:
        return json.dumps(
            {"schema": SCHEMA_VERSION, "d": self.d, "values": self.values},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "CharTable":
        obj = json.loads(text)
        if obj.get("schema") != SCHEMA_VERSION:
            raise ValueError("cache schema mismatch")
        return cls(obj["d"], obj["values"])


def _beta_set(shape: Partition, length: int) -> list[int]:
    padded = list(shape) + [0] * (length - len(shape))
    return [padded[i] + (length - 1 - i) for i in range(length)]


def _shape_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [beta[i] - (length - 1 - i) for i in range(length)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: Partition, cls: Partition) -> int:
    """Murnaghan-Nakayama: remove a border strip of length cls[0] in every
    possible way, with the sign of its height."""
    if not cls:
        return 1 if not shape else 0
    k = cls[0]
    rest = cls[1:]
    length = max(len(shape), 1)
    beta = _beta_set(shape, length)
    beta_set = set(beta)
    total = 0
    for b in beta:
        if b < k or (b - k) in beta_set:
            continue
        height = sum(1 for c in beta if b - k < c < b)
        new_beta = [c for c in beta if c != b] + [b - k]
        total += (-1) ** height * _mn(_shape_from_beta(new_beta), rest)
    return total


def char_table(d: int, cache_dir: Path | str | None = None, use_cache: bool = True,
               max_d: int = DEFAULT_MAX_D) -> CharTable:
    """The character table of S_d, memoized in memory and optionally on
    disk.  A cached file failing the orthogonality re-check is discarded
    and recomputed."""
    if not 1 <= d <= max_d:
        raise ValueError(f"d={d} outside the configured range 1..{max_d}")
    with _tables_lock:
        if d in _tables:
            return _tables[d]
        table = None
        path = _cache_path(d, cache_dir) if use_cache else None
        if path is not None and path.exists():
            try:
                table = CharTable.from_json(path.read_text())
                if table.d != d or not table.check_orthogonality():
                    table = None
            except (ValueError, KeyError, json.JSONDecodeError):
                table = None
        if table is None:
            index = list(enumerate_partitions(d))
            values = [[_mn(irrep, cls) for cls in index] for irrep in index]
            table = CharTable(d, values)
            if not table.check_orthogonality():
                raise AssertionError(f"character table of S_{d} fails orthogonality")
            if path is not None:
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(table.to_json())
        _tables[d] = table
        return table


def _cache_path(d: int, cache_dir: Path | str | None) -> Path:
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV_VAR)
    if cache_dir is None:
        cache_dir = Path.home() / ".cache" / "branchcover"
    return Path(cache_dir) / f"chartable_v{SCHEMA_VERSION}_d{d}.json"


def clear_memory_cache() -> None:
    with _tables_lock:
        _tables.clear()


def _check_key(key: FactorizationKey) -> FactorizationKey:
    d = key.d
    return FactorizationKey(
        d,
        check_partition(key.mu, d),
        check_partition(key.nu, d),
        check_partition(key.lam, d),
    )


def factorization_count_brute(key: FactorizationKey, reverse: bool = False) -> int:
    """#{(sigma, tau) : [sigma]=mu, [tau]=nu, sigma o tau = rep(lam)},
    where "o" applies tau first.

    Only the smaller of the two classes is enumerated; the cofactor is
    forced.  With reverse=True the opposite composition convention (sigma
    first) is counted instead; the two always agree.
    """
    key = _check_key(key)
    rep = canonical_representative(key.lam)
    if reverse:
        # sigma first: tau o sigma = rep <=> sigma^(-1) o tau^(-1) = rep^(-1),
        # counted directly to keep the route independent
        count = 0
        if class_size(key.mu) <= class_size(key.nu):
            for sigma in class_enumerate(key.mu):
                if cycle_type(compose(rep, sigma.inverse())) == key.nu:
                    count += 1
        else:
            for tau in class_enumerate(key.nu):
                if cycle_type(compose(tau.inverse(), rep)) == key.mu:
                    count += 1
        return count
    count = 0
    if class_size(key.mu) <= class_size(key.nu):
        for sigma in class_enumerate(key.mu):
            if cycle_type(compose(sigma.inverse(), rep)) == key.nu:
                count += 1
    else:
        for tau in class_enumerate(key.nu):
            if cycle_type(compose(rep, tau.inverse())) == key.mu:
                count += 1
    return count


def brute_counts_by_nu(d: int, mu: Partition, lam: Partition) -> dict[Partition, int]:
    """One sweep over the class of mu, tallying the cofactor type: the
    counts for every nu at once."""
    rep = canonical_representative(check_partition(lam, d))
    counts: dict[Partition, int] = {}
    for sigma in class_enumerate(check_partition(mu, d)):
        nu = cycle_type(compose(sigma.inverse(), rep))
        counts[nu] = counts.get(nu, 0) + 1
    return counts


def factorization_count_char(
    key: FactorizationKey,
    table: CharTable | None = None,
    cache_dir: Path | str | None = None,
    use_cache: bool = True,
) -> int:
    """The same count via characters:
    (|C_mu| * |C_nu| / d!) * sum_chi chi(mu) chi(nu) chi(lam) / chi(id).

    Valid because all characters of S_d are rational (so the class of the
    inverse equals the class itself).  Exact rationals throughout; the
    result is asserted to be a nonnegative integer.
    """
    key = _check_key(key)
    if table is None:
        table = char_table(key.d, cache_dir=cache_dir, use_cache=use_cache)
    total = Fraction(0)
    for irrep in table.index:
        dim = table.dimension(irrep)
        total += Fraction(
            table.char(irrep, key.mu) * table.char(irrep, key.nu) * table.char(irrep, key.lam),
            dim,
        )
    result = Fraction(class_size(key.mu) * class_size(key.nu), factorial(key.d)) * total
    if result.denominator != 1 or result < 0:
        raise AssertionError(f"character formula gave a non-integer count {result} for {key}")
    return int(result)


def all_keys(d: int) -> Iterator[FactorizationKey]:
    parts = list(enumerate_partitions(d))
    for mu in parts:
        for nu in parts:
            for lam in parts:
                yield FactorizationKey(d, mu, nu, lam)
