"""Joint eigenvectors of the adjoint shifts and the eigenvalue-region
machinery: the coefficient formula, residual verification, the level-sum
convergence series, hereditary domination, the ellipse lower bound, and the
region-sampling harness with its CSV emission."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, TextIO

import numpy as np

from .words import EMPTY, BasisEnumeration, Word, prepend
from .weights import WeightSystem
from .fock import DENSE_LIMIT, TruncatedFock, weighted_left_shift

MAX_DP_WORDS = 1 << 21

INSIDE = "inside"
OUTSIDE = "outside"
INCONCLUSIVE = "inconclusive"

PARTIAL_SUM_OVERFLOW = 1e18


@dataclass(frozen=True)
class EigenCandidate:
    """The joint-eigenvector candidate at a point of complex n-space: the
    vector whose coefficient at w is conj(w(point)) / W(e,w), normalized to 1
    at the vacuum."""

    point: tuple[complex, ...]
    depth: int
    coeffs: dict[Word, complex]


def eigenvector_coeffs(ws: WeightSystem, point: Sequence[complex], depth: int) -> EigenCandidate:
    """Coefficients conj(w(point)) W(e,w)^{-1}, built level by level."""
    if len(point) != ws.n:
        raise ValueError(f"expected {ws.n} coordinates, got {len(point)}")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    point = tuple(complex(z) for z in point)
    coeffs: dict[Word, complex] = {EMPTY: 1.0}
    frontier: dict[Word, complex] = {EMPTY: 1.0}
    for _ in range(depth):
        nxt: dict[Word, complex] = {}
        for w, value in frontier.items():
            for i in range(1, ws.n + 1):
                nxt[prepend(i, w)] = value * point[i - 1].conjugate() / ws.lambda_of(i, w)
        coeffs.update(nxt)
        frontier = nxt
    return EigenCandidate(point, depth, coeffs)


@dataclass(frozen=True)
class ResidualReport:
    per_letter: tuple[float, ...]
    level_cap: int

    @property
    def max_residual(self) -> float:
        return max(self.per_letter)


def eigen_residual(
    ws: WeightSystem,
    space: TruncatedFock,
    point: Sequence[complex],
    coeffs: dict[Word, complex] | None = None,
) -> ResidualReport:
    """Max over i of ||(T_i* - conj(point_i)) nu|| on levels <= depth-1, where
    the top level is excluded because the compression cannot see it."""
    if coeffs is None:
        coeffs = eigenvector_coeffs(ws, point, space.depth).coeffs
    vec = space.vector_from_coeffs(coeffs)
    keep = space.levels() <= space.depth - 1
    residuals = []
    for i in range(1, space.n + 1):
        t_i = weighted_left_shift(space, ws, i)
        res = t_i.adjoint().apply(vec) - complex(point[i - 1]).conjugate() * vec
        residuals.append(float(np.linalg.norm(res[keep])))
    return ResidualReport(tuple(residuals), space.depth - 1)


def joint_eigenspace_dim(
    ws: WeightSystem,
    space: TruncatedFock,
    point: Sequence[complex],
    rtol: float = 1e-8,
) -> int:
    """Numerical dimension of the joint eigenspace at a point: the nullity of
    the stacked operators (T_i* - conj(point_i)) restricted to levels <= depth-1."""
    if space.dimension > DENSE_LIMIT:
        raise ValueError(f"eigenspace check needs the dense fallback (dimension <= {DENSE_LIMIT})")
    keep = space.levels() <= space.depth - 1
    blocks = []
    for i in range(1, space.n + 1):
        t_star = weighted_left_shift(space, ws, i).adjoint().to_dense()
        block = t_star - complex(point[i - 1]).conjugate() * np.eye(space.dimension)
        blocks.append(block[keep, :])
    stacked = np.vstack(blocks)
    singular = np.linalg.svd(stacked, compute_uv=False)
    scale = singular[0] if singular[0] > 0 else 1.0
    rank = int(np.sum(singular > rtol * scale))
    return stacked.shape[1] - rank


# ---------------------------------------------------------------------------
# the convergence series
# ---------------------------------------------------------------------------


def level_sums(ws: WeightSystem, moduli: Sequence[float], depth: int) -> np.ndarray:
    """sigma_k = sum over |w| = k of (r(w) / W(e,w))^2 for k = 0..depth.

    The series deciding eigenvalue membership depends only on coordinate
    moduli.  Terms are tracked in log space, one per word, so geometric decay
    of the weights cannot overflow the partial sums prematurely.
    """
    if len(moduli) != ws.n:
        raise ValueError(f"expected {ws.n} moduli, got {len(moduli)}")
    moduli = [float(r) for r in moduli]
    if any(r < 0 for r in moduli):
        raise ValueError("moduli must be nonnegative")
    total_words = sum(ws.n**k for k in range(depth + 1))
    if total_words > MAX_DP_WORDS:
        raise ValueError(f"level enumeration of {total_words} words exceeds the {MAX_DP_WORDS} guard")
    log_moduli = [math.log(r) if r > 0 else -math.inf for r in moduli]

    sums = np.empty(depth + 1)
    sums[0] = 1.0
    frontier: list[tuple[Word, float]] = [(EMPTY, 0.0)]  # (word, log r(w)/W(e,w))
    for k in range(1, depth + 1):
        nxt: list[tuple[Word, float]] = []
        for w, log_term in frontier:
            for i in range(1, ws.n + 1):
                step = log_moduli[i - 1] - ws.log_lambda_of(i, w)
                nxt.append((prepend(i, w), log_term + step))
        frontier = nxt
        logs = np.array([2.0 * t for _, t in frontier])
        peak = np.max(logs)
        if peak == -math.inf:
            sums[k] = 0.0
        else:
            sums[k] = math.exp(peak) * float(np.sum(np.exp(logs - peak)))
    return sums


def membership_verdict(sums: Sequence[float], epsilon: float) -> tuple[str, float]:
    """Judge the series from its level sums: inside when the last quartile of
    consecutive ratios is uniformly below 1 - epsilon, outside when uniformly
    above 1 + epsilon or the partial sum has overflowed, else inconclusive.

    Returns (verdict, tail ratio).  The raw sums stay with the caller, who can
    always re-judge; the boundary is genuinely undecidable from finite data.
    """
    sums = np.asarray(sums, dtype=float)
    if sums.size < 4:
        raise ValueError("need at least 4 level sums")
    ratios = np.empty(sums.size - 1)
    for k in range(sums.size - 1):
        ratios[k] = sums[k + 1] / sums[k] if sums[k] > 0 else 0.0
    window = ratios[-max(1, ratios.size // 4):]
    tail_ratio = float(window[-1])
    partial = float(np.sum(sums))
    if not math.isfinite(partial) or partial > PARTIAL_SUM_OVERFLOW:
        return OUTSIDE, tail_ratio
    if np.all(window <= 1.0 - epsilon):
        return INSIDE, tail_ratio
    if np.all(window >= 1.0 + epsilon):
        return OUTSIDE, tail_ratio
    return INCONCLUSIVE, tail_ratio


@dataclass(frozen=True)
class RegionSample:
    moduli: tuple[float, ...]
    sums: tuple[float, ...]
    partial_sum: float
    tail_ratio: float
    verdict: str


def sample_point(ws: WeightSystem, moduli: Sequence[float], depth: int, epsilon: float) -> RegionSample:
    sums = level_sums(ws, moduli, depth)
    verdict, tail_ratio = membership_verdict(sums, epsilon)
    return RegionSample(
        tuple(float(r) for r in moduli),
        tuple(float(s) for s in sums),
        float(np.sum(sums)),
        tail_ratio,
        verdict,
    )


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    step: float

    def __post_init__(self):
        if self.lo < 0 or self.hi < self.lo or self.step <= 0:
            raise ValueError("grid requires 0 <= lo <= hi and step > 0")

    def values(self) -> list[float]:
        count = int(math.floor((self.hi - self.lo) / self.step + 1e-9)) + 1
        return [self.lo + j * self.step for j in range(count)]

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid spec {text!r} is not of the form lo:hi:step")
        return cls(float(parts[0]), float(parts[1]), float(parts[2]))


def _grid_points(grid: GridSpec, n: int) -> Iterator[tuple[float, ...]]:
    values = grid.values()
    point = [0] * n
    while True:
        yield tuple(values[j] for j in point)
        axis = n - 1
        while axis >= 0 and point[axis] == len(values) - 1:
            point[axis] = 0
            axis -= 1
        if axis < 0:
            return
        point[axis] += 1


def region_sample(
    ws: WeightSystem,
    grid: GridSpec,
    depth: int,
    epsilon: float,
    workers: int = 1,
) -> list[RegionSample]:
    """One RegionSample per grid point over moduli space, in lexicographic
    grid order regardless of how the evaluation was scheduled."""
    points = list(_grid_points(grid, ws.n))
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(lambda p: sample_point(ws, p, depth, epsilon), points))
    else:
        samples = [sample_point(ws, p, depth, epsilon) for p in points]
    samples.sort(key=lambda s: s.moduli)
    return samples


def write_region_csv(samples: Sequence[RegionSample], stream: TextIO) -> None:
    """CSV schema: r1,...,rn,levels,partial_sum,tail_ratio,verdict with floats
    at 17 significant digits."""
    if not samples:
        return
    n = len(samples[0].moduli)
    header = ",".join(f"r{j + 1}" for j in range(n)) + ",levels,partial_sum,tail_ratio,verdict"
    stream.write(header + "\n")
    for s in samples:
        cells = [f"{r:.17g}" for r in s.moduli]
        cells.append(str(len(s.sums)))
        cells.append(f"{s.partial_sum:.17g}")
        cells.append(f"{s.tail_ratio:.17g}")
        cells.append(s.verdict)
        stream.write(",".join(cells) + "\n")


# ---------------------------------------------------------------------------
# hereditary domination and the ellipse bound
# ---------------------------------------------------------------------------


def hereditary_check(
    ws: WeightSystem,
    moduli: Sequence[float],
    dominated: Sequence[float],
    depth: int,
) -> bool:
    """Level sums at a dominated point never exceed those of the dominating
    point: the series inherits convergence downward in every coordinate."""
    if any(rp > r for rp, r in zip(dominated, moduli)):
        raise ValueError("second point must be dominated coordinatewise by the first")
    upper = level_sums(ws, moduli, depth)
    lower = level_sums(ws, dominated, depth)
    slack = 1e-12
    return bool(np.all(lower <= upper * (1.0 + slack) + slack))


@dataclass(frozen=True)
class EllipseReport:
    inside: bool
    axes: tuple[float, ...]


def ellipse_predicate(ws: WeightSystem, moduli: Sequence[float], depth_for_inf: int) -> EllipseReport:
    """Whether sum_i (r_i / c_i)^2 < 1 for c_i the per-letter weight infimum.

    The infimum is exact for the structured families (their attained values
    stabilize by a known depth); otherwise it is a minimum over base words of
    length <= depth_for_inf.  Weights must stay away from zero on the range
    inspected.
    """
    if len(moduli) != ws.n:
        raise ValueError(f"expected {ws.n} moduli, got {len(moduli)}")
    axes = []
    for i in range(1, ws.n + 1):
        exact = ws.exact_min_weight(i)
        if exact is not None:
            c_i = exact
        else:
            basis = BasisEnumeration(ws.n, depth_for_inf)
            c_i = min(ws.lambda_of(i, w) for w in basis.words())
        if c_i <= 1e-12:
            raise ValueError(f"weight infimum for letter {i} vanishes within tolerance")
        axes.append(c_i)
    value = sum((float(r) / c) ** 2 for r, c in zip(moduli, axes))
    return EllipseReport(value < 1.0, tuple(axes))
