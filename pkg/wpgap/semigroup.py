"""
Exact numerical semigroups and their elementary calculus.

A semigroup is stored by its gap list plus an integer bitmask of gaps; every
quantity the verification pipelines need (weights, parity statistics, the
halved even part) only ever inspects the window [0, 2g].
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import config
from wpgap.errors import (
    GapTooLarge, InvalidGapList, LengthMismatch, NotCoclosed, NotCoprime,
    PreconditionViolated,
)

log = logging.getLogger(__name__)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with binomial(n, k) = 0 whenever n < k or k < 0."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def _mask_from_indices(indices: Iterable[int]) -> int:
    result = 0
    for i in indices:
        result |= (1 << i)
    return result


@dataclass(frozen=True)
class NumericalSemigroup:
    """Immutable numerical semigroup identified by its gap set G(P)."""

    gaps: tuple[int, ...]
    gap_mask: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        if not self.gap_mask and self.gaps:
            object.__setattr__(self, "gap_mask", _mask_from_indices(self.gaps))

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def gap_set(self) -> tuple[int, ...]:
        return self.gaps

    @property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 0

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the full monoid of naturals."""
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        # Gaps always start 1, 2, ..., m-1, so m is the first index that breaks the run.
        for i, gap in enumerate(self.gaps, start=1):
            if gap != i:
                return i
        return self.genus + 1

    def __contains__(self, x: int) -> bool:
        return contains(self, x)

    def nongaps_upto(self, limit: int) -> list[int]:
        """Positive non-gaps m with m <= limit, ascending."""
        return [m for m in range(1, limit + 1) if not (self.gap_mask >> m) & 1]

    def gap_sequence(self) -> "GapSequence":
        return GapSequence(self.gaps)

    def is_ordinary(self) -> bool:
        return self.gaps == tuple(range(1, self.genus + 1))

    def is_hyperelliptic(self) -> bool:
        return self.genus >= 1 and self.gaps == tuple(range(1, 2 * self.genus, 2))


@dataclass(frozen=True)
class GapSequence:
    """Gap sequence l_1 < ... < l_g; l_{j+1} = eps_j + 1 links it to the order sequence."""

    gaps: tuple[int, ...]

    def __post_init__(self):
        g = len(self.gaps)
        for i, gap in enumerate(self.gaps, start=1):
            if gap < i:
                raise InvalidGapList(f"l_{i} = {gap} is below its index {i}")
        if g and self.gaps[-1] > 2 * g - 1:
            raise GapTooLarge(f"l_g = {self.gaps[-1]} exceeds 2g - 1 = {2 * g - 1}")

    def __len__(self) -> int:
        return len(self.gaps)

    def order_sequence(self, characteristic: int = 0) -> "OrderSequence":
        return OrderSequence(tuple(gap - 1 for gap in self.gaps), characteristic)

    def to_semigroup(self) -> NumericalSemigroup:
        return from_gaps(self.gaps)


@dataclass(frozen=True)
class OrderSequence:
    """Hermitian invariants eps_0 < eps_1 < ... of a linear system, with the field characteristic."""

    orders: tuple[int, ...]
    characteristic: int = 0

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.orders, self.orders[1:])):
            raise PreconditionViolated(f"orders must be strictly increasing: {self.orders}")
        if self.orders and self.orders[0] < 0:
            raise PreconditionViolated("orders must be nonnegative")

    @classmethod
    def classical(cls, length: int, characteristic: int = 0) -> "OrderSequence":
        """Generic sequence eps_i = i."""
        return cls(tuple(range(length)), characteristic)

    def __len__(self) -> int:
        return len(self.orders)

    def is_classical(self) -> bool:
        return self.orders == tuple(range(len(self.orders)))


def _validate_gap_list(gaps: Sequence[int]) -> tuple[int, ...]:
    gaps = tuple(int(x) for x in gaps)
    if any(x <= 0 for x in gaps):
        raise InvalidGapList(f"gaps must be positive: {list(gaps)}")
    if any(b <= a for a, b in zip(gaps, gaps[1:])):
        raise InvalidGapList(f"gaps must be strictly increasing: {list(gaps)}")
    return gaps


def from_gaps(gaps: Sequence[int]) -> NumericalSemigroup:
    """Builds the semigroup whose gap set is exactly `gaps`.

    Raises NotCoclosed when the complement is not additively closed, and
    GapTooLarge when some gap exceeds 2g - 1.
    """
    gaps = _validate_gap_list(gaps)
    gap_mask = _mask_from_indices(gaps)
    conductor = gaps[-1] + 1 if gaps else 0
    below = (1 << conductor) - 1
    members = below & ~gap_mask
    # For every positive non-gap a below the conductor, (members shifted by a) must miss all gaps.
    for a in range(1, conductor):
        if (members >> a) & 1 and (members << a) & gap_mask:
            witness = next(b for b in range(conductor) if (members >> b) & 1
                           and (gap_mask >> (a + b)) & 1)
            raise NotCoclosed(f"{a} + {witness} = {a + witness} is a gap")
    if gaps and gaps[-1] > 2 * len(gaps) - 1:
        raise GapTooLarge(f"gap {gaps[-1]} exceeds 2g - 1 = {2 * len(gaps) - 1}")
    return NumericalSemigroup(gaps, gap_mask)


def from_generators(gens: Sequence[int]) -> NumericalSemigroup:
    """Smallest additive monoid containing 0 and every generator."""
    gens = sorted(set(int(x) for x in gens))
    if not gens or gens[0] <= 0:
        raise PreconditionViolated(f"generators must be positive: {gens}")
    if reduce(math.gcd, gens) != 1:
        raise NotCoprime(f"gcd of {gens} is {reduce(math.gcd, gens)}")

    smallest = gens[0]
    member = [True]
    gaps = []
    run = 1  # length of the current run of consecutive members
    x = 0
    while run < smallest:
        x += 1
        is_member = any(x >= s and member[x - s] for s in gens)
        member.append(is_member)
        if is_member:
            run += 1
        else:
            gaps.append(x)
            run = 0
    return NumericalSemigroup(tuple(gaps))


def contains(S: NumericalSemigroup, x: int) -> bool:
    """Membership test; always true from the conductor on."""
    if x < 0:
        return False
    return not (S.gap_mask >> x) & 1


def gap_weight(S: NumericalSemigroup) -> int:
    """Weight as sum(l_i - i)."""
    return sum(gap - i for i, gap in enumerate(S.gaps, start=1))


def weight(S: NumericalSemigroup) -> int:
    """Weierstrass weight (3g^2 + g)/2 - sum of non-gaps in [1, 2g]."""
    g = S.genus
    return (3 * g * g + g) // 2 - sum(S.nongaps_upto(2 * g))


def oliveira_check(S: NumericalSemigroup) -> bool:
    """True iff l_i <= 2i - 2 for i = 2..g-1 and l_g <= 2g - 1 (needs m_1 >= 3, g >= 2)."""
    g = S.genus
    if g < 2 or S.multiplicity < 3:
        raise PreconditionViolated(f"needs m_1 >= 3 and g >= 2, got m_1 = {S.multiplicity}, g = {g}")
    for i in range(2, g):
        if S.gaps[i - 1] > 2 * i - 2:
            log.debug(f"l_{i} = {S.gaps[i - 1]} breaks l_i <= 2i - 2 for {S.gaps}")
            return False
    return S.gaps[g - 1] <= 2 * g - 1


def even_gap_count(S: NumericalSemigroup) -> int:
    return sum(1 for gap in S.gaps if gap % 2 == 0)


def halved_even_part(S: NumericalSemigroup) -> NumericalSemigroup:
    """{h/2 : h in S, h even}; its gaps are exactly the halves of the even gaps of S."""
    return NumericalSemigroup(tuple(gap // 2 for gap in S.gaps if gap % 2 == 0))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _exact_determinant(rows: list[list[int]]) -> int:
    """Determinant by fraction-exact Gaussian elimination."""
    matrix = [[Fraction(v) for v in row] for row in rows]
    n = len(matrix)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if matrix[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            det = -det
        det *= matrix[col][col]
        for r in range(col + 1, n):
            factor = matrix[r][col] / matrix[col][col]
            if factor:
                for c in range(col, n):
                    matrix[r][c] -= factor * matrix[col][c]
    return int(det)


def wronskian_matrix(point_orders: Sequence[int], generic_orders: Sequence[int]) -> list[list[int]]:
    return [[binomial(e_p, e) for e in generic_orders] for e_p in point_orders]


def wronskian_det_condition(point_orders, generic_orders, p: int | None = None) -> bool:
    """True iff det(binomial(eps_i(P), eps_j)) is nonzero (p = 0) or nonzero mod p.

    Accepts OrderSequence values or plain integer sequences; when p is None the
    characteristic of `point_orders` is used.
    """
    if p is None:
        p = getattr(point_orders, "characteristic", 0)
    point = tuple(getattr(point_orders, "orders", point_orders))
    generic = tuple(getattr(generic_orders, "orders", generic_orders))
    if len(point) != len(generic):
        raise LengthMismatch(f"{len(point)} point orders vs {len(generic)} generic orders")
    if p > config.MAX_CHARACTERISTIC:
        raise PreconditionViolated(f"characteristic {p} exceeds {config.MAX_CHARACTERISTIC}")
    if p != 0 and not _is_prime(p):
        raise PreconditionViolated(f"characteristic must be 0 or prime, got {p}")
    det = _exact_determinant(wronskian_matrix(point, generic))
    log.debug(f"Wronskian determinant for {point} over {generic}: {det}")
    return det != 0 if p == 0 else det % p != 0


def hermitian_weight(point_orders, generic_orders) -> int:
    """Lower bound sum_{i>=1}(eps_i(P) - eps_i) on the weight of a point; exact under the determinant condition."""
    point = tuple(getattr(point_orders, "orders", point_orders))
    generic = tuple(getattr(generic_orders, "orders", generic_orders))
    if len(point) != len(generic):
        raise LengthMismatch(f"{len(point)} point orders vs {len(generic)} generic orders")
    return sum(a - b for a, b in zip(point[1:], generic[1:]))
