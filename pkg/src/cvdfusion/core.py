"""Core data model: outcome spaces, complex-valued distribution vectors, source sets.

A complex-valued distribution (CvD) over an outcome space of size n is a
vector of n complex entries c_j = x_j + y_j*i with

    x_j >= 0,
    sqrt(x_j^2 + y_j^2) <= 1,
    sum_j c_j = 1 + 0i   (real parts sum to 1, imaginary parts cancel).

``make_cvd`` / ``make_source_set`` are the validating constructors and the
only supported way to build these values; everything downstream assumes the
constraints hold.  All types are immutable after construction and safe to
share across threads.

Validation uses a tolerance ``tol`` (default 1e-9) because file inputs are
decimal floats: real parts in [-tol, 0) are clamped to exactly 0, moduli may
exceed 1 by at most tol, and the entry sum may deviate from 1 + 0i by at
most tol per component.  Entries are otherwise stored exactly as given;
nothing is ever renormalized silently.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import (
    CvdError,
    DuplicateNameError,
    InvalidOutcomeSpaceError,
    LengthMismatchError,
    ModulusExceedsOneError,
    NegativeRealPartError,
    NonFiniteError,
    SumNotUnityError,
)

DEFAULT_TOL = 1e-9

RawEntry = tuple[float, float]


@dataclass(frozen=True)
class OutcomeSpace:
    """Ordered, fixed set of distinct outcome labels.

    Entry j of every vector on this space refers to ``labels[j]``; order is
    significant.  Two spaces compare equal iff their label sequences match.
    """

    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) < 1:
            raise InvalidOutcomeSpaceError("outcome space needs at least one label")
        for j, label in enumerate(self.labels):
            if not isinstance(label, str) or not label:
                raise InvalidOutcomeSpaceError(
                    f"label at position {j} must be a non-empty string, got {label!r}"
                )
        if len(set(self.labels)) != len(self.labels):
            raise InvalidOutcomeSpaceError("outcome labels must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class CvdVector:
    """A validated complex-valued distribution over an outcome space.

    Build through :func:`make_cvd`; the dataclass itself does not re-check
    the constraints.
    """

    space: OutcomeSpace
    entries: tuple[complex, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_pairs(self) -> list[RawEntry]:
        """Entries as (re, im) pairs, in outcome order."""
        return [(c.real, c.imag) for c in self.entries]


@dataclass(frozen=True)
class SourceSet:
    """Named, ordered collection of CvD vectors sharing one outcome space."""

    space: OutcomeSpace
    sources: tuple[tuple[str, CvdVector], ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.sources)

    @property
    def vectors(self) -> tuple[CvdVector, ...]:
        return tuple(dist for _, dist in self.sources)

    def __len__(self) -> int:
        return len(self.sources)

    def subset(self, indices: Sequence[int]) -> "SourceSet":
        """Sub-set with the given source indices, preserving the given order."""
        return SourceSet(self.space, tuple(self.sources[i] for i in indices))


def make_cvd(
    space: OutcomeSpace,
    raw: Sequence[Sequence[float]],
    tol: float = DEFAULT_TOL,
) -> CvdVector:
    """Validate (re, im) pairs against the CvD constraints and build a vector.

    Checks, in order: entry count equals the space size; every component is
    finite; real parts are >= -tol (values in [-tol, 0) are clamped to 0);
    every modulus is <= 1 + tol; and the post-clamp complex sum is within
    tol of 1 + 0i in both components.  Input order is preserved.

    Raises LengthMismatchError, NonFiniteError, NegativeRealPartError,
    ModulusExceedsOneError or SumNotUnityError accordingly.
    """
    n = space.size
    if len(raw) != n:
        raise LengthMismatchError(
            f"expected {n} entries for the outcome space, got {len(raw)}"
        )

    entries: list[complex] = []
    for j, pair in enumerate(raw):
        re, im = pair
        re = float(re)
        im = float(im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise NonFiniteError(f"entry {j} ({space.labels[j]!r}) is not finite")
        if re < -tol:
            raise NegativeRealPartError(
                f"entry {j} ({space.labels[j]!r}) has real part {re!r} < -{tol!r}"
            )
        if re < 0.0:
            re = 0.0
        modulus = math.hypot(re, im)
        if modulus > 1.0 + tol:
            raise ModulusExceedsOneError(
                f"entry {j} ({space.labels[j]!r}) has modulus {modulus!r} > 1"
            )
        entries.append(complex(re, im))

    re_sum = sum(c.real for c in entries)
    im_sum = sum(c.imag for c in entries)
    if abs(re_sum - 1.0) > tol or abs(im_sum) > tol:
        raise SumNotUnityError(
            f"entry sum is {re_sum!r} + {im_sum!r}i, expected 1 + 0i (tol {tol!r})"
        )

    return CvdVector(space, tuple(entries))


def make_source_set(
    space: OutcomeSpace,
    named_raws: Sequence[tuple[str, Sequence[Sequence[float]]]],
    tol: float = DEFAULT_TOL,
) -> SourceSet:
    """Validate every named raw vector and assemble a SourceSet.

    Names must be pairwise distinct; any per-vector validation error is
    re-raised annotated with the offending source name.
    """
    if len(named_raws) < 1:
        raise CvdError("a source set needs at least one source")

    seen: set[str] = set()
    sources: list[tuple[str, CvdVector]] = []
    for name, raw in named_raws:
        if name in seen:
            raise DuplicateNameError(f"duplicate source name {name!r}")
        seen.add(name)
        try:
            dist = make_cvd(space, raw, tol=tol)
        except CvdError as err:
            err.source = name
            raise
        sources.append((name, dist))

    return SourceSet(space, tuple(sources))
