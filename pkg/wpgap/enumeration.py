"""
Exhaustive enumeration of numerical semigroups by genus.

The search walks the semigroup tree rooted at the naturals: the children of S
are S minus {x} for every minimal generator x larger than the Frobenius number
of S. Each semigroup of genus g is reached exactly once, at depth g. The tree
is cut at a configurable depth into independent subtree tasks which are run
through the shared concurrency helper and merged associatively, so counts,
maxima and witnesses never depend on the number of workers.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
import os
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import config
from wpgap.errors import GenusTooLarge, InvalidFilter, PreconditionViolated, WpgapError
from wpgap.semigroup import NumericalSemigroup, from_gaps, weight
from wpgap.utils import (
    format_gap_line, parse_gap_line, process_items_concurrently,
    read_file_content, write_text_atomic,
)

log = logging.getLogger(__name__)

CACHE_MAGIC = "wpgap-cache"

# A tree node: (gap_mask, frobenius, multiplicity, genus). The root is the naturals,
# entered with frobenius 0 so that 1 is its single child candidate.
Node = tuple[int, int, int, int]
ROOT: Node = (0, 0, 1, 0)


@dataclass(frozen=True)
class EnumerationFilter:
    """Candidate-class clauses; unset clauses do not constrain."""

    min_multiplicity: Optional[int] = None
    even_gap_count: Optional[int] = None
    required_interval: Optional[tuple[int, int]] = None
    required_gap_in: Optional[tuple[int, int]] = None

    def validate(self, g: int):
        if self.min_multiplicity is not None and self.min_multiplicity < 1:
            raise InvalidFilter(f"min_multiplicity must be positive, got {self.min_multiplicity}")
        if self.even_gap_count is not None and self.even_gap_count < 0:
            raise InvalidFilter(f"even_gap_count must be nonnegative, got {self.even_gap_count}")
        for name in ("required_interval", "required_gap_in"):
            interval = getattr(self, name)
            if interval is None:
                continue
            a, b = interval
            if a > b or a < 1 or b > 2 * g - 1:
                raise InvalidFilter(f"{name} {a}:{b} must be nonempty and inside [1, {2 * g - 1}]")

    def canonical(self) -> str:
        """Stable text encoding used in cache keys and headers."""
        parts = []
        if self.min_multiplicity is not None:
            parts.append(f"min_mult={self.min_multiplicity}")
        if self.even_gap_count is not None:
            parts.append(f"even_gaps={self.even_gap_count}")
        if self.required_interval is not None:
            parts.append("interval={}:{}".format(*self.required_interval))
        if self.required_gap_in is not None:
            parts.append("gap_in={}:{}".format(*self.required_gap_in))
        return ";".join(parts) if parts else "none"

    def matches(self, S: NumericalSemigroup) -> bool:
        return _leaf_ok(self, S.gap_mask, S.multiplicity)


NO_FILTER = EnumerationFilter()


@dataclass(frozen=True)
class EnumerationStats:
    """Aggregate over one (genus, filter) class.

    total_count counts genus-g semigroups meeting every filter clause;
    filtered_count those that also satisfy the extra predicate, if any.
    """

    genus: int
    total_count: int
    filtered_count: int
    max_weight_seen: Optional[int]
    argmax_gap_set: Optional[tuple[int, ...]]

    @property
    def class_empty(self) -> bool:
        return self.filtered_count == 0

    def merge(self, other: "EnumerationStats") -> "EnumerationStats":
        """Associative-commutative merge; ties on weight keep the lexicographically smallest witness."""
        best_weight, best_gaps = self.max_weight_seen, self.argmax_gap_set
        if other.max_weight_seen is not None:
            if (best_weight is None or other.max_weight_seen > best_weight
                    or (other.max_weight_seen == best_weight and other.argmax_gap_set < best_gaps)):
                best_weight, best_gaps = other.max_weight_seen, other.argmax_gap_set
        return EnumerationStats(self.genus, self.total_count + other.total_count,
                                self.filtered_count + other.filtered_count, best_weight, best_gaps)


def empty_stats(g: int) -> EnumerationStats:
    return EnumerationStats(g, 0, 0, None, None)

# --- Tree primitives ---

def _even_gaps(gap_mask: int) -> int:
    return bin(_even_bits(gap_mask)).count('1')


def _even_bits(gap_mask: int) -> int:
    """Gap bits sitting at even positions."""
    pattern = int("01" * ((gap_mask.bit_length() + 1) // 2 + 1), 2)
    return gap_mask & pattern


def _interval_mask(a: int, b: int) -> int:
    return ((1 << (b + 1)) - 1) & ~((1 << a) - 1)


def _children(node: Node) -> Iterator[Node]:
    """Children in increasing order of the removed generator."""
    gap_mask, frob, mult, genus = node
    for x in range(frob + 1, frob + mult + 1):
        decomposable = False
        for a in range(mult, x // 2 + 1):
            if not (gap_mask >> a) & 1 and not (gap_mask >> (x - a)) & 1:
                decomposable = True
                break
        if decomposable:
            continue
        child_mult = mult + 1 if x == mult else mult
        yield (gap_mask | (1 << x), x, child_mult, genus + 1)


def _prunable(f: EnumerationFilter, node: Node) -> bool:
    """True when no descendant of `node` can satisfy the monotone clauses of `f`."""
    gap_mask, frob, mult, _ = node
    # Multiplicity is frozen once it sits below the Frobenius number.
    if f.min_multiplicity is not None and mult < f.min_multiplicity and mult < frob:
        return True
    # Gaps only accumulate along a path.
    if f.even_gap_count is not None and _even_gaps(gap_mask) > f.even_gap_count:
        return True
    if f.required_interval is not None and gap_mask & _interval_mask(*f.required_interval):
        return True
    # New gaps are always above the Frobenius number.
    if f.required_gap_in is not None:
        a, b = f.required_gap_in
        if frob >= b and not gap_mask & _interval_mask(a, b):
            return True
    return False


def _leaf_ok(f: EnumerationFilter, gap_mask: int, mult: int) -> bool:
    if f.min_multiplicity is not None and mult < f.min_multiplicity:
        return False
    if f.even_gap_count is not None and _even_gaps(gap_mask) != f.even_gap_count:
        return False
    if f.required_interval is not None and gap_mask & _interval_mask(*f.required_interval):
        return False
    if f.required_gap_in is not None and not gap_mask & _interval_mask(*f.required_gap_in):
        return False
    return True


def _gaps_of(gap_mask: int) -> tuple[int, ...]:
    gaps = []
    bit = 0
    while gap_mask:
        if gap_mask & 1:
            gaps.append(bit)
        gap_mask >>= 1
        bit += 1
    return tuple(gaps)


def _walk(node: Node, target: int, f: EnumerationFilter) -> Iterator[Node]:
    """Depth-first walk yielding the surviving genus-`target` nodes below `node`."""
    stack = [node]
    while stack:
        current = stack.pop()
        if _prunable(f, current):
            continue
        if current[3] == target:
            yield current
            continue
        # Reverse so that the smallest generator is expanded first.
        stack.extend(reversed(list(_children(current))))


def _frontier(target: int, f: EnumerationFilter, split_depth: int) -> list[Node]:
    depth = min(split_depth, target)
    return list(_walk(ROOT, depth, f))

# --- Subtree tasks (module level so they pickle into worker processes) ---

def _collect_subtree(task) -> list[tuple[int, ...]]:
    node, target, f, predicate = task
    found = []
    for leaf in _walk(node, target, f):
        if not _leaf_ok(f, leaf[0], leaf[2]):
            continue
        S = NumericalSemigroup(_gaps_of(leaf[0]), leaf[0])
        if predicate is None or predicate(S):
            found.append(S.gaps)
    return found


def _scan_subtree(task) -> EnumerationStats:
    node, target, f, predicate = task
    stats = empty_stats(target)
    for leaf in _walk(node, target, f):
        if not _leaf_ok(f, leaf[0], leaf[2]):
            continue
        stats = stats.merge(_leaf_stats(NumericalSemigroup(_gaps_of(leaf[0]), leaf[0]), predicate))
    return stats


def _leaf_stats(S: NumericalSemigroup, predicate) -> EnumerationStats:
    if predicate is not None and not predicate(S):
        return EnumerationStats(S.genus, 1, 0, None, None)
    return EnumerationStats(S.genus, 1, 1, weight(S), S.gaps)


def _check_genus(g: int):
    if g < 0:
        raise PreconditionViolated(f"genus must be nonnegative, got {g}")
    if g > config.GENUS_CAP:
        raise GenusTooLarge(f"genus {g} exceeds the configured cap {config.GENUS_CAP}")


def _tasks(g: int, f: EnumerationFilter, predicate, split_depth: Optional[int]):
    split = config.SPLIT_DEPTH if split_depth is None else split_depth
    frontier = _frontier(g, f, split)
    log.debug(f"Genus {g}: {len(frontier)} subtree tasks at depth {min(split, g)}")
    return [(node, g, f, predicate) for node in frontier]

# --- Cache ---

def cache_path(cache_dir: str, g: int, f: EnumerationFilter) -> str:
    key = f"{g}|{f.canonical()}|{config.CACHE_FORMAT_VERSION}"
    digest = hashlib.sha256(key.encode('utf-8')).hexdigest()[:16]
    return os.path.join(cache_dir, f"genus{g}-{digest}.txt")


def write_cache(cache_dir: str, g: int, f: EnumerationFilter, gap_sets: list[tuple[int, ...]]) -> str:
    header = (f"{CACHE_MAGIC} v{config.CACHE_FORMAT_VERSION} genus={g} "
              f"filter={f.canonical()} count={len(gap_sets)}")
    body = "".join(format_gap_line(gaps) + "\n" for gaps in gap_sets)
    path = cache_path(cache_dir, g, f)
    write_text_atomic(header + "\n" + body, path)
    log.info(f"Cached {len(gap_sets)} semigroups of genus {g} to {path}")
    return path


def read_cache(cache_dir: str, g: int, f: EnumerationFilter) -> Optional[list[tuple[int, ...]]]:
    """Cached gap sets for (g, f), or None when absent or inconsistent."""
    path = cache_path(cache_dir, g, f)
    content = read_file_content(path)
    if content is None:
        return None
    lines = content.split("\n")
    expected = (f"{CACHE_MAGIC} v{config.CACHE_FORMAT_VERSION} genus={g} "
                f"filter={f.canonical()} count=")
    if not lines or not lines[0].startswith(expected) or lines[-1] != "":
        log.warning(f"Ignoring cache file with unexpected header: {path}")
        return None
    try:
        count = int(lines[0][len(expected):])
        gap_sets = [tuple(parse_gap_line(line)) for line in lines[1:-1]]
    except ValueError as e:
        log.warning(f"Ignoring unreadable cache file {path}: {e}")
        return None
    if len(gap_sets) != count:
        log.warning(f"Ignoring truncated cache file {path}: {len(gap_sets)} of {count} records")
        return None
    log.info(f"Loaded {count} semigroups of genus {g} from cache {path}")
    return gap_sets

# --- Public operations ---

def enumerate_filtered(g: int, f: Optional[EnumerationFilter] = None, predicate: Optional[Callable] = None,
                       jobs: Optional[int] = None, cache_dir: Optional[str] = None,
                       split_depth: Optional[int] = None, sort: bool = False) -> Iterator[NumericalSemigroup]:
    """Semigroups of genus g meeting all clauses of `f` (and `predicate`, when given).

    Arguments are validated on the call; the semigroups themselves are produced lazily.
    """
    f = f or NO_FILTER
    _check_genus(g)
    f.validate(g)
    if g < config.CACHE_MIN_GENUS:
        cache_dir = None
    jobs = config.DEFAULT_JOBS if jobs is None else jobs
    return _iter_filtered(g, f, predicate, jobs, cache_dir, split_depth, sort)


def _iter_filtered(g, f, predicate, jobs, cache_dir, split_depth, sort) -> Iterator[NumericalSemigroup]:
    gap_sets = None
    if cache_dir:
        gap_sets = read_cache(cache_dir, g, f)
    if gap_sets is None and jobs <= 1 and not cache_dir and not sort:
        # Lazy streaming path.
        for leaf in _walk(ROOT, g, f):
            if _leaf_ok(f, leaf[0], leaf[2]):
                S = NumericalSemigroup(_gaps_of(leaf[0]), leaf[0])
                if predicate is None or predicate(S):
                    yield S
        return
    if gap_sets is None:
        # Cache entries always hold the unpredicated class.
        results = process_items_concurrently(_tasks(g, f, None, split_depth), _collect_subtree, max_workers=jobs)
        gap_sets = list(itertools.chain.from_iterable(results))
        if cache_dir:
            write_cache(cache_dir, g, f, gap_sets)
    if sort:
        gap_sets = sorted(gap_sets)
    for gaps in gap_sets:
        S = NumericalSemigroup(tuple(gaps))
        if predicate is None or predicate(S):
            yield S


def enumerate_genus(g: int, jobs: Optional[int] = None, sort: bool = False, **kwargs) -> Iterator[NumericalSemigroup]:
    """Yields every numerical semigroup of genus exactly g, each once."""
    return enumerate_filtered(g, NO_FILTER, jobs=jobs, sort=sort, **kwargs)


def count_genus(g: int, jobs: Optional[int] = None, split_depth: Optional[int] = None) -> int:
    return scan_max_weight(g, NO_FILTER, jobs=jobs, split_depth=split_depth).filtered_count


def scan_max_weight(g: int, f: Optional[EnumerationFilter] = None, predicate: Optional[Callable] = None,
                    jobs: Optional[int] = None, cache_dir: Optional[str] = None,
                    split_depth: Optional[int] = None) -> EnumerationStats:
    """Count and maximum weight over the filtered class; an empty class is flagged, never reported as 0."""
    f = f or NO_FILTER
    _check_genus(g)
    f.validate(g)
    jobs = config.DEFAULT_JOBS if jobs is None else jobs
    if g < config.CACHE_MIN_GENUS:
        cache_dir = None

    if cache_dir:
        stats = empty_stats(g)
        for S in enumerate_filtered(g, f, jobs=jobs, cache_dir=cache_dir, split_depth=split_depth):
            stats = stats.merge(_leaf_stats(S, predicate))
        return stats

    results = process_items_concurrently(_tasks(g, f, predicate, split_depth), _scan_subtree, max_workers=jobs)
    stats = empty_stats(g)
    for partial in results:
        stats = stats.merge(partial)
    log.info(f"Genus {g} [{f.canonical()}]: {stats.filtered_count}/{stats.total_count} in class, "
             f"max weight {stats.max_weight_seen}")
    return stats

# --- Brute-force oracle ---

def enumerate_genus_naive(g: int) -> Iterator[NumericalSemigroup]:
    """Closure-checks every g-subset of [1, 2g-1] that contains 1; slow, for cross-checking only."""
    if g == 0:
        yield NumericalSemigroup(())
        return
    for rest in itertools.combinations(range(2, 2 * g), g - 1):
        try:
            yield from_gaps((1,) + rest)
        except WpgapError:
            continue
