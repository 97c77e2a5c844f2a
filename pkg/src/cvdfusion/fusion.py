"""Aggregation, credibility weighting, weighted fusion and source selection.

The aggregate of r sources is their unweighted entrywise mean; its squared
norm expands to exactly the aggregate_quality sum, which is what makes the
mean the natural combination.  Credibility weights are derived from the
sources' average pairwise compatibility (the only inter-source signal the
measures define), normalized to sum to 1, with a uniform fallback when all
sources are mutually orthogonal.  Selection searches for the subset of
sources whose aggregate quality is highest, either exhaustively or greedily.

Convex combinations preserve all CvD constraints (nonnegative real parts,
moduli bounded by 1 via the triangle inequality, complex sum 1 + 0i), so
fusion outputs are valid vectors without renormalization.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .core import CvdVector, SourceSet
from .errors import (
    BadMinSizeError,
    InvalidWeightsError,
    TooManySourcesForExhaustiveError,
    WeightLengthMismatchError,
)
from .measures import aggregate_quality, information_quality, pairwise_matrix

WEIGHT_SUM_TOL = 1e-9

# 2^15 - 1 = 32767 subsets keeps exhaustive selection well under a second.
EXHAUSTIVE_MAX_SOURCES = 15


@dataclass(frozen=True)
class CredibilityWeights:
    """Per-source convex weights, aligned with the source-set order."""

    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class SelectionResult:
    """Outcome of a source-selection search."""

    chosen: tuple[int, ...]
    achieved_quality: float
    strategy: str


def _weighted_entry_sum(
    vectors: Sequence[CvdVector], weights: Sequence[float]
) -> tuple[complex, ...]:
    # Ascending source order per entry; mean_aggregate and fuse share this
    # path so uniform-weight fusion is bit-identical to the mean.
    n = vectors[0].n
    out = []
    for j in range(n):
        acc = 0j
        for w, v in zip(weights, vectors):
            acc += w * v.entries[j]
        out.append(acc)
    return tuple(out)


def mean_aggregate(s: SourceSet) -> CvdVector:
    """Entrywise mean of the r sources: entry j is (1/r) sum_k c_kj.

    information_quality of the result equals aggregate_quality(s) up to
    rounding (the squared norm of the mean expands into exactly that sum).
    """
    r = len(s)
    return CvdVector(s.space, _weighted_entry_sum(s.vectors, (1.0 / r,) * r))


def credibility_weights(s: SourceSet) -> CredibilityWeights:
    """Support-based weights from average pairwise compatibility.

    support(k) is the mean compatibility of source k with every other
    source; weights are supports normalized to sum to 1.  A single source
    gets weight 1; mutually orthogonal sources (all supports zero) fall
    back to uniform weights.
    """
    r = len(s)
    if r == 1:
        return CredibilityWeights((1.0,))

    matrix = pairwise_matrix(s, "compatibility")
    supports = [
        sum(matrix.values[k][h] for h in range(r) if h != k) / (r - 1)
        for k in range(r)
    ]
    total = sum(supports)
    if total > 0.0:
        return CredibilityWeights(tuple(sp / total for sp in supports))
    return CredibilityWeights((1.0 / r,) * r)


def fuse(s: SourceSet, w: CredibilityWeights) -> CvdVector:
    """Convex combination of the sources: entry j is sum_k w_k * c_kj.

    Weights must align with the source order, be nonnegative and sum to 1
    within 1e-9; raises WeightLengthMismatchError or InvalidWeightsError
    otherwise.  With uniform weights this equals mean_aggregate(s)
    bit-for-bit.
    """
    values = tuple(w.values)
    if len(values) != len(s):
        raise WeightLengthMismatchError(
            f"got {len(values)} weights for {len(s)} sources"
        )
    if any(v < 0.0 for v in values):
        raise InvalidWeightsError("weights must be nonnegative")
    total = sum(values)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise InvalidWeightsError(f"weights sum to {total!r}, expected 1")

    return CvdVector(s.space, _weighted_entry_sum(s.vectors, values))


def _subset_quality(s: SourceSet, indices: Sequence[int]) -> float:
    return aggregate_quality(s.subset(indices))


def _select_exhaustive(s: SourceSet, min_size: int) -> SelectionResult:
    r = len(s)
    if r > EXHAUSTIVE_MAX_SOURCES:
        raise TooManySourcesForExhaustiveError(
            f"exhaustive selection supports at most {EXHAUSTIVE_MAX_SOURCES} "
            f"sources, got {r}"
        )
    best: tuple[int, ...] | None = None
    best_quality = 0.0
    # Size-ascending, lexicographic enumeration with strict improvement:
    # ties resolve to the smallest, lexicographically lowest subset.
    for size in range(min_size, r + 1):
        for subset in combinations(range(r), size):
            quality = _subset_quality(s, subset)
            if best is None or quality > best_quality:
                best = subset
                best_quality = quality
    assert best is not None
    return SelectionResult(best, best_quality, "exhaustive")


def _select_greedy(s: SourceSet, min_size: int) -> SelectionResult:
    r = len(s)
    qualities = [information_quality(v) for v in s.vectors]
    start = 0
    for k in range(1, r):
        if qualities[k] > qualities[start]:
            start = k

    chosen = [start]
    best: tuple[int, ...] | None = None
    best_quality = 0.0
    while True:
        current = _subset_quality(s, chosen)
        if len(chosen) >= min_size and (best is None or current > best_quality):
            best = tuple(chosen)
            best_quality = current

        remaining = [k for k in range(r) if k not in chosen]
        if not remaining:
            break
        candidate = remaining[0]
        candidate_quality = _subset_quality(s, chosen + [candidate])
        for k in remaining[1:]:
            quality = _subset_quality(s, chosen + [k])
            if quality > candidate_quality:
                candidate = k
                candidate_quality = quality

        # Below min_size additions are forced; past it, only improvements.
        if len(chosen) < min_size or candidate_quality > current:
            chosen.append(candidate)
        else:
            break

    assert best is not None
    return SelectionResult(best, best_quality, "greedy")


def select_sources(
    s: SourceSet, strategy: str = "greedy", min_size: int = 1
) -> SelectionResult:
    """Pick the subset of sources maximizing aggregate quality.

    ``exhaustive`` evaluates every subset of size >= min_size (r <= 15);
    ``greedy`` seeds with the highest-quality single source, keeps adding
    the source with the largest quality gain, and returns the best prefix
    of size >= min_size.  All ties break to the lowest source index, so
    identical inputs always yield identical results.
    """
    r = len(s)
    if not 1 <= min_size <= r:
        raise BadMinSizeError(f"min_size must be in 1..{r}, got {min_size}")
    if strategy == "exhaustive":
        return _select_exhaustive(s, min_size)
    if strategy == "greedy":
        return _select_greedy(s, min_size)
    raise ValueError(f"unknown strategy {strategy!r}, expected exhaustive|greedy")
