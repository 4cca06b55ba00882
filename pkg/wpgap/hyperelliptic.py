"""
Candidate semigroups of points on double coverings of a genus-gamma curve.

A ramified point has exactly gamma even gaps and its halved even part is the
semigroup of the image point (type I when that image is a Weierstrass point,
type II otherwise). An unramified point whose semigroup is not the pullback of
one downstairs has multiplicity at least g - 2*gamma + 1 (type III), split into
case (a) or (b) by whether a gap falls in [g - 2*gamma + 1, g].

Every class here is a candidate class: a superset of what is realized on
actual curves. Checks over these classes are one-sided.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional

from wpgap.enumeration import EnumerationFilter, enumerate_filtered
from wpgap.errors import GammaMismatch, PreconditionViolated
from wpgap.semigroup import (
    GapSequence, NumericalSemigroup, even_gap_count, halved_even_part, weight,
)

log = logging.getLogger(__name__)


class RamifiedClass(Enum):
    TYPE_I = "I"
    TYPE_II = "II"


class UnramifiedCase(Enum):
    CASE_A = "a"
    CASE_B = "b"


class LemmaClass(Enum):
    """Point classes whose weights are bounded separately."""
    TYPE_I = "I"
    TYPE_II = "II"
    CASE_A = "a"
    CASE_B = "b"
    ALL_TYPE3 = "III"


@dataclass(frozen=True)
class CoveringProfile:
    """A double covering of a genus-gamma curve by a genus-g curve."""

    g: int
    gamma: int
    r: int = field(init=False)
    t_max: int = field(init=False)

    def __post_init__(self):
        if self.gamma < 0:
            raise PreconditionViolated(f"gamma must be nonnegative, got {self.gamma}")
        if self.g < 2 * self.gamma:
            raise PreconditionViolated(f"a double covering needs g >= 2*gamma, got g={self.g}, gamma={self.gamma}")
        r = 2 * self.g - 4 * self.gamma + 2
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "t_max", min(self.gamma ** 3 - self.gamma, r))


def covering_profile(g: int, gamma: int) -> CoveringProfile:
    return CoveringProfile(g, gamma)


@dataclass(frozen=True)
class OddNongapProfile:
    """Odd non-gaps u_1 > ... > u_gamma in [1, 2g - 1]."""

    u: tuple[int, ...]

    def __post_init__(self):
        if any(x % 2 == 0 for x in self.u):
            raise PreconditionViolated(f"odd non-gap profile holds an even entry: {self.u}")
        if any(b >= a for a, b in zip(self.u, self.u[1:])):
            raise PreconditionViolated(f"odd non-gap profile must be strictly decreasing: {self.u}")

    def __len__(self) -> int:
        return len(self.u)

    @property
    def total(self) -> int:
        return sum(self.u)

    @property
    def smallest(self) -> Optional[int]:
        return self.u[-1] if self.u else None


class OddSumBounds(NamedTuple):
    general: int  # applies when u_gamma <= 2g - 2*gamma - 3
    high: int  # applies when u_gamma >= 2g - 2*gamma - 1


def _require_gamma(S: NumericalSemigroup, gamma: int):
    actual = even_gap_count(S)
    if actual != gamma:
        raise GammaMismatch(f"semigroup {S.gaps} has {actual} even gaps, not {gamma}")

# --- Ramified points ---

def classify_ramified(S: NumericalSemigroup, gamma: int) -> RamifiedClass:
    _require_gamma(S, gamma)
    if weight(halved_even_part(S)) > 0:
        return RamifiedClass.TYPE_I
    return RamifiedClass.TYPE_II


def min_even_nongap_check(S: NumericalSemigroup, gamma: int) -> bool:
    """True iff the smallest positive even non-gap is at most 2*gamma + 2."""
    _require_gamma(S, gamma)
    h = 2
    while (S.gap_mask >> h) & 1:
        h += 2
    return h <= 2 * gamma + 2


def odd_nongap_profile(S: NumericalSemigroup, gamma: int) -> OddNongapProfile:
    _require_gamma(S, gamma)
    g = S.genus
    u = tuple(x for x in range(2 * g - 1, 0, -2) if not (S.gap_mask >> x) & 1)
    return OddNongapProfile(u)


def even_nongap_sum(S: NumericalSemigroup) -> int:
    """Sum of the even non-gaps in (0, 2g]."""
    return sum(h for h in range(2, 2 * S.genus + 1, 2) if not (S.gap_mask >> h) & 1)


def star_identity_value(g: int, gamma: int) -> int:
    """g^2 + g - gamma^2 - gamma: the even non-gap sum of every type II candidate."""
    return g * g + g - gamma * gamma - gamma


def odd_sum_bounds(g: int, gamma: int) -> OddSumBounds:
    return OddSumBounds(general=2 * gamma * g - gamma * gamma - 4 * gamma + 4,
                        high=2 * gamma * g - gamma * gamma - 2 * gamma)


def exact_min_odd_sum(g: int, gamma: int) -> int:
    """Floor for sum(u_i) over type II candidates.

    Packs s odd non-gaps at the bottom of their window and the rest at the
    top; the minimum over s is attained at s = floor((gamma - 1) / 2).
    """
    if gamma <= 0:
        return 0
    lo, hi = (gamma - 1) // 2, gamma // 2
    return 2 * gamma * g - gamma * gamma - 2 * gamma - 2 * lo * hi


def ramified_points_are_weierstrass(g: int, gamma: int) -> bool:
    """Whether g >= 2*gamma + 2, which rules out an ordinary semigroup with gamma even gaps."""
    return g >= 2 * gamma + 2

# --- Unramified points ---

def is_type3_candidate(S: NumericalSemigroup, gamma: int) -> bool:
    g = S.genus
    if g < 2 * gamma:
        raise PreconditionViolated(f"type III needs g >= 2*gamma, got g={g}, gamma={gamma}")
    return S.multiplicity >= g - 2 * gamma + 1


def classify_unramified(S: NumericalSemigroup, gamma: int) -> UnramifiedCase:
    if not is_type3_candidate(S, gamma):
        raise PreconditionViolated(f"{S.gaps} has multiplicity {S.multiplicity} < g - 2*gamma + 1")
    g = S.genus
    if any(g - 2 * gamma + 1 <= gap <= g for gap in S.gaps):
        return UnramifiedCase.CASE_A
    return UnramifiedCase.CASE_B


def tail_weight(S: NumericalSemigroup, gamma: int) -> int:
    """sum(l_i - i) over the last 2*gamma gaps; equals the weight for type III candidates."""
    g = S.genus
    if g < 2 * gamma:
        raise PreconditionViolated(f"tail weight needs g >= 2*gamma, got g={g}, gamma={gamma}")
    return sum(S.gaps[i - 1] - i for i in range(g - 2 * gamma + 1, g + 1))


def extremal_caseB_gapset(g: int, gamma: int) -> GapSequence:
    """{1, ..., g - 2*gamma} with {2g - 6*gamma + 2, ..., 2g - 4*gamma + 1}: the heaviest case (b) candidate."""
    if gamma < 0 or g < 6 * gamma - 1:
        raise PreconditionViolated(f"extremal case (b) gap set needs g >= 6*gamma - 1, got g={g}, gamma={gamma}")
    low = tuple(range(1, g - 2 * gamma + 1))
    high = tuple(range(2 * g - 6 * gamma + 2, 2 * g - 4 * gamma + 2))
    return GapSequence(low + high)

# --- Class membership ---

def in_lemma_class(S: NumericalSemigroup, gamma: int, lemma_class: LemmaClass) -> bool:
    """Membership of S in one candidate class; meant to be bound with functools.partial."""
    if lemma_class in (LemmaClass.TYPE_I, LemmaClass.TYPE_II):
        if even_gap_count(S) != gamma:
            return False
        expected = RamifiedClass.TYPE_I if lemma_class is LemmaClass.TYPE_I else RamifiedClass.TYPE_II
        return classify_ramified(S, gamma) is expected
    if not is_type3_candidate(S, gamma):
        return False
    if lemma_class is LemmaClass.ALL_TYPE3:
        return True
    expected = UnramifiedCase.CASE_A if lemma_class is LemmaClass.CASE_A else UnramifiedCase.CASE_B
    return classify_unramified(S, gamma) is expected

# --- Property report ---

@dataclass(frozen=True)
class Finding:
    """A candidate semigroup breaking one of the structural properties."""

    check: str
    g: int
    gamma: int
    gaps: tuple[int, ...]
    observed: int
    expected: int

    def to_dict(self) -> dict:
        return {"check": self.check, "g": self.g, "gamma": self.gamma, "gaps": list(self.gaps),
                "observed": self.observed, "expected": self.expected}


def _check_semigroup(S: NumericalSemigroup, gamma: int) -> list[Finding]:
    g = S.genus
    findings = []

    def report(check, observed, expected):
        findings.append(Finding(check, g, gamma, S.gaps, observed, expected))

    profile = odd_nongap_profile(S, gamma)
    if len(profile) != gamma:
        report("parity_count", len(profile), gamma)
    smallest = profile.smallest
    if smallest is not None and smallest < 2 * g - 4 * gamma + 1:
        report("odd_nongap_floor", smallest, 2 * g - 4 * gamma + 1)
    if not min_even_nongap_check(S, gamma):
        h = next(x for x in range(2, 2 * g + 2, 2) if not (S.gap_mask >> x) & 1)
        report("min_even_nongap", h, 2 * gamma + 2)
    if ramified_points_are_weierstrass(g, gamma) and weight(S) == 0:
        report("ramified_weight_positive", 0, 1)

    if classify_ramified(S, gamma) is RamifiedClass.TYPE_II:
        star = even_nongap_sum(S)
        if star != star_identity_value(g, gamma):
            report("even_nongap_sum", star, star_identity_value(g, gamma))
        if gamma >= 1 and smallest is not None:
            bounds = odd_sum_bounds(g, gamma)
            if smallest >= 2 * g - 2 * gamma - 1 and profile.total < bounds.high:
                report("odd_sum_high", profile.total, bounds.high)
            elif smallest <= 2 * g - 2 * gamma - 3 and profile.total < bounds.general:
                report("odd_sum_general", profile.total, bounds.general)
    return findings


def property_report(g_range: tuple[int, int], gamma_range: tuple[int, int], jobs: Optional[int] = None,
                    cache_dir: Optional[str] = None) -> list[Finding]:
    """Checks every gamma-even-gap candidate of every genus in range; returns the violations found."""
    findings = []
    for g in range(g_range[0], g_range[1] + 1):
        for gamma in range(gamma_range[0], gamma_range[1] + 1):
            checked = 0
            f = EnumerationFilter(even_gap_count=gamma)
            for S in enumerate_filtered(g, f, jobs=jobs, cache_dir=cache_dir, sort=True):
                findings.extend(_check_semigroup(S, gamma))
                checked += 1
            log.info(f"Checked {checked} candidates at g={g}, gamma={gamma}")
    if findings:
        log.warning(f"Property report found {len(findings)} violations")
    return findings
