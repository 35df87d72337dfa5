"""The rational cohomology ring of the space of branched covers of the
disk, in the cell basis {t_lam}.

|t_lam| = 2*N(lam), and the cup product is the class-algebra product
truncated to the N-additive part:
t_mu . t_nu = sum over lam with N(lam) = N(mu) + N(nu) of c_{mu,nu}^lam t_lam,
where c is the factorization count.  Terms of smaller N are discarded and
larger N never occurs, by subadditivity of N.  Coefficients use the crude
fundamental class: raw counts, no isotropy-order division.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Literal

from . import classalg
from .cells import betti
from .classalg import FactorizationKey
from .partitions import (
    Partition,
    absolute_length_p,
    check_partition,
    disjoint_union,
    enumerate_partitions,
    format_partition,
)
from .permcore import centralizer_order

Method = Literal["chars", "brute"]


class RingElement:
    """A finite rational combination of basis classes t_lam, lam of d."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: dict[Partition, Fraction] | None = None):
        self.d = d
        clean: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            check_partition(lam, d)
            c = Fraction(c)
            if c != 0:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, lam: Partition, d: int) -> "RingElement":
        return cls(d, {check_partition(lam, d): Fraction(1)})

    @classmethod
    def zero(cls, d: int) -> "RingElement":
        return cls(d)

    @classmethod
    def unit(cls, d: int) -> "RingElement":
        return cls.basis((1,) * d, d)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement) and self.d == other.d and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.d, frozenset(self.coeffs.items())))

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.d != other.d:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return RingElement(self.d, out)

    def scale(self, c) -> "RingElement":
        c = Fraction(c)
        return RingElement(self.d, {lam: c * v for lam, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_homogeneous(self) -> bool:
        degs = {absolute_length_p(lam) for lam in self.coeffs}
        return len(degs) <= 1

    def degree(self) -> int | None:
        """Cohomological degree 2m of a homogeneous element, None for 0."""
        degs = {absolute_length_p(lam) for lam in self.coeffs}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return 2 * degs.pop()

    def orbifold_view(self) -> "RingElement":
        """The same class in the orbifold-normalized basis, where each
        t_lam is scaled by its isotropy order."""
        return RingElement(
            self.d, {lam: c * centralizer_order(lam) for lam, c in self.coeffs.items()}
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam in sorted(self.coeffs, key=lambda l: (absolute_length_p(l), l), reverse=True):
            c = self.coeffs[lam]
            terms.append(f"{c}*t_({format_partition(lam)})")
        return " + ".join(terms)

    def to_jsonable(self) -> dict:
        items = sorted(self.coeffs.items())
        return {
            "d": self.d,
            "coeffs": [{"lam": format_partition(lam), "c": str(c)} for lam, c in items],
        }


def _count(key: FactorizationKey, method: Method) -> int:
    if method == "brute":
        return classalg.factorization_count_brute(key)
    return classalg.factorization_count_char(key)


def cup_basis(mu: Partition, nu: Partition, d: int, method: Method = "chars") -> RingElement:
    """t_mu . t_nu as an element of the ring."""
    mu = check_partition(mu, d)
    nu = check_partition(nu, d)
    n_target = absolute_length_p(mu) + absolute_length_p(nu)
    out: dict[Partition, Fraction] = {}
    for lam in enumerate_partitions(d):
        if absolute_length_p(lam) != n_target:
            continue
        c = _count(FactorizationKey(d, mu, nu, lam), method)
        if c:
            out[lam] = Fraction(c)
    return RingElement(d, out)


def cup(x: RingElement, y: RingElement, method: Method = "chars") -> RingElement:
    """Bilinear extension of the basis product."""
    if x.d != y.d:
        raise ValueError(f"degree mismatch: {x.d} != {y.d}")
    out = RingElement.zero(x.d)
    for mu, a in x.coeffs.items():
        for nu, b in y.coeffs.items():
            out = out + cup_basis(mu, nu, x.d, method).scale(a * b)
    return out


def leading_term_check(mu: Partition, nu: Partition, d: int, method: Method = "chars") -> dict:
    """For a representable pair, verify the triangular shape of the
    product: positive coefficient on t_{mu u nu}, and every other term has
    strictly more 1-parts."""
    mu = check_partition(mu, d)
    nu = check_partition(nu, d)
    union = disjoint_union(mu, nu, d)
    if union is None:
        raise ValueError(f"{mu} and {nu} have no disjoint representatives in S_{d}")
    product = cup_basis(mu, nu, d, method)
    lead = product.coeffs.get(union, Fraction(0))
    ones = union.count(1)
    report = {
        "mu": mu,
        "nu": nu,
        "union": union,
        "leading_coefficient": lead,
        "ok": lead > 0,
        "failures": [],
    }
    if lead <= 0:
        report["failures"].append("leading coefficient is not positive")
    for lam in product.coeffs:
        if lam != union and lam.count(1) <= ones:
            report["ok"] = False
            report["failures"].append(f"term {lam} does not have more 1-parts than {union}")
    return report


def hook_generator(k: int, d: int) -> RingElement:
    """The polynomial generator t_k = t_{(k, 1^{d-k})}, for 2 <= k <= d."""
    if not 2 <= k <= d:
        raise ValueError(f"generator index {k} outside 2..{d}")
    return RingElement.basis((k,) + (1,) * (d - k), d)


def monomial_expand(ks: Iterable[int], d: int, method: Method = "chars") -> RingElement:
    """The product of hook generators t_k over the multiset ks, expanded in
    the cell basis.  The factors are multiplied in sorted-descending order;
    any order gives the same element (commutativity and associativity)."""
    out = RingElement.unit(d)
    for k in sorted(ks, reverse=True):
        out = cup(out, hook_generator(k, d), method)
    return out


def _monomials_of_degree(m: int) -> list[tuple[int, ...]]:
    """Multisets {k_i >= 2} with sum (k_i - 1) = m: partitions of m shifted
    up by one in every part."""
    from .partitions import enumerate_partitions as enum

    return [tuple(p + 1 for p in lam) for lam in enum(m)]


def _rank(rows: list[dict[Partition, Fraction]], columns: list[Partition]) -> int:
    """Exact rank by fraction-free-enough Gaussian elimination over Q."""
    matrix = [[row.get(col, Fraction(0)) for col in columns] for row in rows]
    rank = 0
    col = 0
    n_rows = len(matrix)
    n_cols = len(columns)
    while rank < n_rows and col < n_cols:
        pivot = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        pv = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            if matrix[r][col] != 0:
                factor = matrix[r][col] / pv
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        col += 1
    return rank


def verify_polynomial(d: int, method: Method = "chars") -> dict:
    """Check that in every even degree 2m <= d the monomials in the hook
    generators are linearly independent and as numerous as the Betti
    number, hence a basis: the ring agrees with a polynomial algebra on one
    generator per positive even degree, up to degree d."""
    if d < 1:
        raise ValueError("d must be positive")
    betti_d = betti(d)
    report: dict = {"d": d, "ok": True, "degrees": [], "failures": []}
    for m in range(0, d // 2 + 1):
        monomials = _monomials_of_degree(m)
        expansions = [monomial_expand(ks, d, method) for ks in monomials]
        columns = [lam for lam in enumerate_partitions(d) if absolute_length_p(lam) == m]
        rank = _rank([e.coeffs for e in expansions], columns)
        entry = {
            "degree": 2 * m,
            "monomials": len(monomials),
            "rank": rank,
            "betti": betti_d.get(2 * m, 0),
        }
        report["degrees"].append(entry)
        if rank != len(monomials) or len(monomials) != entry["betti"]:
            report["ok"] = False
            report["failures"].append(
                f"degree {2*m}: rank {rank}, {len(monomials)} monomials, betti {entry['betti']}"
            )
    return report
