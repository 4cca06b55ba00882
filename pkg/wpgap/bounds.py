"""
Closed-form weight bounds, Weierstrass-point counts and the verification pipelines.

Everything is exact: integers throughout, Fraction where a closed form is a
rational, ceiling division where a count is bounded from below.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Optional

from wpgap.enumeration import EnumerationFilter, scan_max_weight
from wpgap.errors import PreconditionViolated, ZeroDenominator
from wpgap.hyperelliptic import LemmaClass, in_lemma_class
from wpgap.semigroup import binomial
from wpgap.utils import rational_to_json

log = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)

# --- Pluricanonical counts ---

def pluricanonical_dimension(g: int, n: int) -> int:
    """N(n): projective dimension of the n-canonical system, g - 1 for n = 1."""
    if g < 2 or n < 1:
        raise PreconditionViolated(f"needs g >= 2 and n >= 1, got g={g}, n={n}")
    if n == 1:
        return g - 1
    return (2 * n - 1) * (g - 1) - 1


def is_classical_regime(g: int, n: int, p: int) -> bool:
    """Characteristic 0 or p > n(2g - 2), where generic orders are 0, 1, 2, ..."""
    return p == 0 or p > n * (2 * g - 2)


def pflaum_N(g: int, n: int) -> int:
    """Number of n-Weierstrass points above which the constellation determines the curve."""
    if g < 2 or n < 1:
        raise PreconditionViolated(f"needs g >= 2 and n >= 1, got g={g}, n={n}")
    if n >= 2:
        return 4 * n * (g - 1)
    if g == 6:
        return 25
    return max(3 * g + 6, 4 * g - 4)


def omega(g: int, n: int) -> int:
    """Degree of the n-Weierstrass divisor for classical orders eps_i = i."""
    N = pluricanonical_dimension(g, n)
    return (2 * g - 2) * sum(range(N + 1)) + n * (2 * g - 2) * (N + 1)


def homma_ommori_lower_Wn(g: int, n: int) -> int:
    """ceil(omega_n / (g(g+1)/2)): fewest distinct n-Weierstrass points compatible with the valuation cap."""
    if n < 2 or g < 2:
        raise PreconditionViolated(f"needs n >= 2 and g >= 2, got g={g}, n={n}")
    return _ceil_div(2 * omega(g, n), g * (g + 1))

# --- Weight bounds ---

def c1_bound(g: int, gamma: int) -> int:
    return binomial(g - 2 * gamma, 2) + 2 * gamma * gamma


def c2_bound(g: int, gamma: int) -> int:
    return binomial(g - 2 * gamma, 2) + 4 * gamma - 4


def caseA_bound(g: int, gamma: int) -> int:
    return (2 * gamma - 1) * g - (gamma - 1) * (2 * gamma + 1)


def caseB_bound(g: int, gamma: int) -> int:
    return 2 * gamma * (g - 4 * gamma + 1)


def c3_bound(g: int, gamma: int) -> tuple[int, str]:
    """max of the two case bounds, with the branch taken; a tie reports "second"."""
    first, second = caseA_bound(g, gamma), caseB_bound(g, gamma)
    if first > second:
        return first, "first"
    return second, "second"


@dataclass(frozen=True)
class BoundSet:
    g: int
    gamma: int
    n: int
    c1: int
    c2: int
    c3: int
    c3_branch: str
    N_g_n: int
    omega_n: int

    def to_dict(self) -> dict:
        return {"g": self.g, "gamma": self.gamma, "n": self.n, "c1": self.c1, "c2": self.c2, "c3": self.c3,
                "c3_branch": self.c3_branch, "N": self.N_g_n, "omega_n": self.omega_n}


def bound_set(g: int, gamma: int, n: int = 1) -> BoundSet:
    if g < 2 or gamma < 0 or n < 1:
        raise PreconditionViolated(f"needs g >= 2, gamma >= 0, n >= 1, got g={g}, gamma={gamma}, n={n}")
    if g < 2 * gamma:
        raise PreconditionViolated(f"c3 needs g >= 2*gamma, got g={g}, gamma={gamma}")
    c3, branch = c3_bound(g, gamma)
    return BoundSet(g, gamma, n, c1_bound(g, gamma), c2_bound(g, gamma), c3, branch, pflaum_N(g, n), omega(g, n))

# --- Theorem pipeline ---

class TPolicy(Enum):
    """How many ramified points are assumed to be of type I."""
    PAPER = "paper"  # t = 2g - 4*gamma + 2
    MIN = "min"  # t = min(gamma^3 - gamma, 2g - 4*gamma + 2)


@dataclass(frozen=True)
class CriterionReport:
    g: int
    gamma: int
    t_policy: TPolicy
    t_used: int
    r: int
    numerator: int
    c3: int
    c3_branch: str
    W1_lower: int
    N_g_1: int
    holds: bool
    nonpositive_bound: bool
    exact_quotient: Fraction
    closed_form_value: Optional[Fraction]

    def to_dict(self) -> dict:
        return {
            "g": self.g, "gamma": self.gamma, "t_policy": self.t_policy.value, "t_used": self.t_used,
            "r": self.r, "numerator": self.numerator, "c3": self.c3, "c3_branch": self.c3_branch,
            "W1_lower": self.W1_lower, "N": self.N_g_1, "holds": self.holds,
            "nonpositive_bound": self.nonpositive_bound,
            "exact_quotient": rational_to_json(self.exact_quotient),
            "closed_form_value": None if self.closed_form_value is None else rational_to_json(self.closed_form_value),
        }


def w1_polynomial(g: int, gamma: int) -> int:
    """6*gamma*g^2 - 16*gamma^2*g + 16*gamma^3 - 4*gamma^2 - 2*gamma."""
    return 6 * gamma * g * g - 16 * gamma * gamma * g + 16 * gamma ** 3 - 4 * gamma * gamma - 2 * gamma


def theorem_pipeline(g: int, gamma: int, t_policy: TPolicy = TPolicy.MIN) -> CriterionReport:
    """Lower bound on the number W1 of distinct Weierstrass points of a double covering.

    Every one of the g^3 - g units of weight sits at some point: t ramified
    points of type I weigh at most c1, the other ramified ones at most c2, and
    the rest at most c3. Solving for W1 gives the bound compared against N(g, 1).
    """
    if gamma < 3:
        raise PreconditionViolated(f"needs gamma >= 3, got {gamma}")
    if g < 2 * gamma + 2:
        raise PreconditionViolated(f"needs g >= 2*gamma + 2, got g={g}, gamma={gamma}")
    r = 2 * g - 4 * gamma + 2
    t = r if t_policy is TPolicy.PAPER else min(gamma ** 3 - gamma, r)
    c1, c2 = c1_bound(g, gamma), c2_bound(g, gamma)
    c3, branch = c3_bound(g, gamma)
    numerator = g ** 3 - g - (c1 - c2) * t - r * c2
    N = pflaum_N(g, 1)

    nonpositive = numerator <= 0
    if nonpositive:
        log.warning(f"Nonpositive bound at g={g}, gamma={gamma}: numerator {numerator}")
        W1_lower = r
    else:
        W1_lower = r + _ceil_div(numerator, c3)
    closed_form = large_g_closed_form(g, gamma) if g >= 6 * gamma * gamma - gamma + 1 else None

    log.debug(f"g={g} gamma={gamma} t={t} numerator={numerator} c3={c3} W1>={W1_lower} N={N}")
    return CriterionReport(g, gamma, t_policy, t, r, numerator, c3, branch, W1_lower, N,
                           holds=not nonpositive and W1_lower > N, nonpositive_bound=nonpositive,
                           exact_quotient=r + Fraction(numerator, c3), closed_form_value=closed_form)


def genus_threshold(gamma: int) -> int:
    """Smallest g with g >= 9*gamma - 17 + (43*gamma - 20)/(2*gamma^2 + gamma - 1)."""
    if gamma < 3:
        raise PreconditionViolated(f"needs gamma >= 3, got {gamma}")
    return math.ceil(9 * gamma - 17 + Fraction(43 * gamma - 20, 2 * gamma * gamma + gamma - 1))


def exact_min_genus(gamma: int, g_max: int, t_policy: TPolicy = TPolicy.MIN) -> Optional[int]:
    """Smallest g such that the pipeline holds on all of [g, g_max]; None if it fails at g_max."""
    if gamma < 3:
        raise PreconditionViolated(f"needs gamma >= 3, got {gamma}")
    lowest = 2 * gamma + 2
    if g_max < lowest or not theorem_pipeline(g_max, gamma, t_policy).holds:
        return None
    g = g_max
    while g - 1 >= lowest and theorem_pipeline(g - 1, gamma, t_policy).holds:
        g -= 1
    return g


def branch2_inequality(g: int, gamma: int) -> Fraction:
    """Sufficient quantity for W1 > N(g, 1) while c3 takes its first argument; positive means the criterion holds."""
    if gamma < 3:
        raise PreconditionViolated(f"needs gamma >= 3, got {gamma}")
    denominator = (2 * gamma - 1) * g - (2 * gamma * gamma - gamma - 1)
    if denominator <= 0:
        raise ZeroDenominator(f"denominator {denominator} at g={g}, gamma={gamma}")
    linear = (2 * gamma - 1) * (2 * gamma + 2) * g - (36 * gamma ** 3 - 50 * gamma ** 2 + 34 * gamma - 6)
    return linear + Fraction(24 * gamma ** 5 - 40 * gamma ** 4 + 22 * gamma ** 3 + 4 * gamma, denominator)


def large_g_closed_form(g: int, gamma: int) -> Fraction:
    """5g - 1 + (24*gamma^2 - 10*gamma - 4)/(g - 4*gamma + 1), valid once c3 takes its second argument."""
    if g < 6 * gamma * gamma - gamma + 1:
        raise PreconditionViolated(f"needs g >= 6*gamma^2 - gamma + 1, got g={g}, gamma={gamma}")
    return 5 * g - 1 + Fraction(24 * gamma * gamma - 10 * gamma - 4, g - 4 * gamma + 1)

# --- Lemma verification ---

@dataclass(frozen=True)
class LemmaVerdict:
    lemma_class: LemmaClass
    g: int
    gamma: int
    bound: int
    max_observed: Optional[int]
    class_size: int
    holds: bool
    witness: Optional[tuple[int, ...]]

    @property
    def class_empty(self) -> bool:
        return self.class_size == 0

    def to_dict(self) -> dict:
        return {"class": self.lemma_class.value, "g": self.g, "gamma": self.gamma, "bound": self.bound,
                "max_observed": self.max_observed, "class_empty": self.class_empty,
                "class_size": self.class_size, "holds": self.holds,
                "witness": None if self.witness is None else list(self.witness)}


def _lemma_bound(g: int, gamma: int, lemma_class: LemmaClass) -> int:
    if lemma_class is LemmaClass.TYPE_I:
        return c1_bound(g, gamma)
    if lemma_class is LemmaClass.TYPE_II:
        return c2_bound(g, gamma)
    if lemma_class is LemmaClass.CASE_A:
        return caseA_bound(g, gamma)
    if lemma_class is LemmaClass.CASE_B:
        return caseB_bound(g, gamma)
    return c3_bound(g, gamma)[0]


def _lemma_filter(g: int, gamma: int, lemma_class: LemmaClass) -> EnumerationFilter:
    """Pruning clauses implied by the class; membership itself is decided by in_lemma_class."""
    if lemma_class in (LemmaClass.TYPE_I, LemmaClass.TYPE_II):
        return EnumerationFilter(even_gap_count=gamma)
    window = (g - 2 * gamma + 1, g) if gamma >= 1 else None
    if lemma_class is LemmaClass.CASE_B:
        return EnumerationFilter(min_multiplicity=g - 2 * gamma + 1, required_interval=window)
    if lemma_class is LemmaClass.CASE_A:
        return EnumerationFilter(min_multiplicity=g - 2 * gamma + 1, required_gap_in=window)
    return EnumerationFilter(min_multiplicity=g - 2 * gamma + 1)


def verify_lemma(g: int, gamma: int, lemma_class: LemmaClass, jobs: Optional[int] = None,
                 cache_dir: Optional[str] = None) -> LemmaVerdict:
    """Exhaustively compares the heaviest candidate of a class against its weight bound."""
    if g < 2 or gamma < 0:
        raise PreconditionViolated(f"needs g >= 2 and gamma >= 0, got g={g}, gamma={gamma}")
    ramified = lemma_class in (LemmaClass.TYPE_I, LemmaClass.TYPE_II)
    if not ramified and g < 2 * gamma:
        raise PreconditionViolated(f"type III classes need g >= 2*gamma, got g={g}, gamma={gamma}")
    if ramified and g < 2 * gamma + 2:
        log.warning(f"g={g} is below 2*gamma + 2 = {2 * gamma + 2}; outside the regime of the ramified bounds")

    bound = _lemma_bound(g, gamma, lemma_class)
    predicate = partial(in_lemma_class, gamma=gamma, lemma_class=lemma_class)
    stats = scan_max_weight(g, _lemma_filter(g, gamma, lemma_class), predicate=predicate,
                            jobs=jobs, cache_dir=cache_dir)
    holds = stats.class_empty or stats.max_weight_seen <= bound
    if not holds:
        log.warning(f"Class {lemma_class.value} at g={g}, gamma={gamma}: weight {stats.max_weight_seen} "
                    f"exceeds bound {bound} at {stats.argmax_gap_set}")
    return LemmaVerdict(lemma_class, g, gamma, bound, stats.max_weight_seen, stats.filtered_count, holds,
                        stats.argmax_gap_set)
