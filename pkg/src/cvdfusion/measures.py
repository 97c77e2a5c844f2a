"""Scalar measures on complex-valued distribution vectors.

All operations are pure functions on immutable inputs.  For vectors a, b on
the same outcome space:

    inner_product(a, b)    = sum_j a_j * conj(b_j)        (complex)
    norm(a)                = sqrt(Re inner_product(a, a))
    cosine_angle(a, b)     = Re<a,b> / (||a|| ||b||)      in [-1, 1]
    compatibility(a, b)    = |Re<a,b>| / (||a|| ||b||)    in [0, 1]
    conflict(a, b)         = 1 - compatibility(a, b)
    information_quality(a) = ||a||^2

The cosine/compatibility numerators are the Hermitian-symmetric average
(<a,b> + <b,a>) / 2, which equals Re<a,b>; they are computed via the real
part directly.  Valid vectors have norm >= 1/sqrt(n) > 0, so the divisions
cannot degenerate; a defensive assertion fires if a norm underflows 1e-15,
which would mean an invalid value escaped construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import CvdVector, SourceSet
from .errors import SpaceMismatchError

_NORM_FLOOR = 1e-15


def _require_same_space(a: CvdVector, b: CvdVector) -> None:
    if a.space != b.space:
        raise SpaceMismatchError(
            f"operands live on different outcome spaces: "
            f"{a.space.labels} vs {b.space.labels}"
        )


def inner_product(a: CvdVector, b: CvdVector) -> complex:
    """Hermitian inner product sum_j a_j * conj(b_j), ascending j."""
    _require_same_space(a, b)
    total = 0j
    for x, y in zip(a.entries, b.entries):
        total += x * y.conjugate()
    return total


def _self_product(a: CvdVector) -> float:
    ip = inner_product(a, a)
    assert abs(ip.imag) <= 1e-12, "self inner product must be real"
    return ip.real


def norm(a: CvdVector) -> float:
    """Vector norm sqrt(<a,a>).  Always >= 1/sqrt(n) for valid vectors."""
    return math.sqrt(_self_product(a))


def _norm_product(a: CvdVector, b: CvdVector) -> float:
    na = norm(a)
    nb = norm(b)
    assert na > _NORM_FLOOR and nb > _NORM_FLOOR, (
        "norm underflow: an invalid vector escaped construction"
    )
    return na * nb


def cosine_angle(a: CvdVector, b: CvdVector) -> float:
    """Cosine of the angle between a and b, clamped into [-1, 1]."""
    _require_same_space(a, b)
    c = inner_product(a, b).real / _norm_product(a, b)
    return min(1.0, max(-1.0, c))


def compatibility(a: CvdVector, b: CvdVector) -> float:
    """Compatibility degree |Re<a,b>| / (||a|| ||b||), clamped into [0, 1].

    1 means the vectors are identical, 0 means (at least) disjoint support.
    Equals abs(cosine_angle(a, b)).
    """
    _require_same_space(a, b)
    c = abs(inner_product(a, b).real) / _norm_product(a, b)
    return min(1.0, c)


def conflict(a: CvdVector, b: CvdVector) -> float:
    """Conflict degree 1 - compatibility(a, b), in [0, 1]."""
    return 1.0 - compatibility(a, b)


def information_quality(a: CvdVector) -> float:
    """Squared norm ||a||^2.

    For a real-valued (probability) vector p this is sum_j p_j^2, i.e.
    1 - Gini(p): bounded in [1/n, 1].  Complex entries can push it up to n.
    """
    return _self_product(a)


def aggregate_quality(s: SourceSet) -> float:
    """Quality of the unweighted combination of the r sources.

    Computed as (1/r^2) [ sum_k ||C_k||^2 + 2 sum_{k<h} Re<C_k, C_h> ],
    summed in ascending k then ascending h for reproducibility.  Equals
    information_quality(mean_aggregate(s)) up to rounding.
    """
    vectors = s.vectors
    r = len(vectors)
    quality_sum = 0.0
    for v in vectors:
        quality_sum += information_quality(v)
    cross_sum = 0.0
    for k in range(r):
        for h in range(k + 1, r):
            cross_sum += inner_product(vectors[k], vectors[h]).real
    return (quality_sum + 2.0 * cross_sum) / (r * r)


@dataclass(frozen=True)
class PairwiseMatrix:
    """Symmetric r x r table of a pairwise measure over a source set.

    The diagonal is exactly 1.0 for compatibility/cosine and 0.0 for
    conflict; each off-diagonal unordered pair is computed once and
    mirrored, so symmetry is bit-exact.
    """

    kind: str
    size: int
    values: tuple[tuple[float, ...], ...]

    def row(self, k: int) -> tuple[float, ...]:
        return self.values[k]


_MATRIX_KINDS = {
    "compatibility": (compatibility, 1.0),
    "conflict": (conflict, 0.0),
    "cosine": (cosine_angle, 1.0),
}


def pairwise_matrix(s: SourceSet, kind: str) -> PairwiseMatrix:
    """Tabulate compatibility, conflict or cosine over all source pairs."""
    try:
        op, diagonal = _MATRIX_KINDS[kind]
    except KeyError:
        raise ValueError(
            f"unknown matrix kind {kind!r}, expected one of {sorted(_MATRIX_KINDS)}"
        ) from None

    vectors = s.vectors
    r = len(vectors)
    grid = [[0.0] * r for _ in range(r)]
    for k in range(r):
        grid[k][k] = diagonal
        for h in range(k + 1, r):
            value = op(vectors[k], vectors[h])
            grid[k][h] = value
            grid[h][k] = value
    return PairwiseMatrix(kind, r, tuple(tuple(row) for row in grid))
