"""Truncated Fock-space operator models.

Operators live on the span of the basis vectors for words of length <= depth
and are stored sparse.  Raising operators are compressed: their columns at
the top level are zero, so every identity below is checked on the levels
where the compressed statement is exact, making defects true zeros instead
of truncation noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np
import scipy.sparse as sp

from .words import BasisEnumeration, Word, append, prepend
from .weights import (
    CommutantMu,
    ConstantWeights,
    MuSystem,
    WeightSystem,
    require_bounded_mu,
)

DENSE_LIMIT = 4096

LEFT_WEIGHTED = "left_weighted"
RIGHT_WEIGHTED = "right_weighted"
LEFT_UNWEIGHTED = "left_unweighted"
RIGHT_UNWEIGHTED = "right_unweighted"


class TruncatedFock:
    """The span of the Fock basis vectors for words of length <= depth."""

    def __init__(self, n: int, depth: int):
        self.basis = BasisEnumeration(n, depth)
        self.n = n
        self.depth = depth
        self.dimension = self.basis.dimension
        levels = np.empty(self.dimension, dtype=np.int64)
        for k in range(depth + 1):
            levels[self.basis.level_slice(k)] = k
        self._levels = levels

    def levels(self) -> np.ndarray:
        """Per-index word length, as an array aligned with the basis."""
        return self._levels

    def level_slice(self, k: int) -> slice:
        return self.basis.level_slice(k)

    def index_of(self, w: Word) -> int:
        return self.basis.index_of(w)

    def word_at(self, index: int) -> Word:
        return self.basis.word_at(index)

    def basis_vector(self, w: Word) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=complex)
        vec[self.basis.index_of(w)] = 1.0
        return vec

    def vector_from_coeffs(self, coeffs: Mapping[Word, complex]) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=complex)
        for w, value in coeffs.items():
            vec[self.basis.index_of(w)] = value
        return vec

    def coeffs_from_vector(self, vec: np.ndarray, tol: float = 0.0) -> dict[Word, complex]:
        out: dict[Word, complex] = {}
        for idx in np.nonzero(np.abs(vec) > tol)[0]:
            out[self.basis.word_at(int(idx))] = complex(vec[idx])
        return out

    def __repr__(self) -> str:
        return f"TruncatedFock(n={self.n}, depth={self.depth}, dim={self.dimension})"


class GradedOperator:
    """A sparse operator on the truncated basis, carrying its level-band support.

    Band j holds the entries mapping level k+j into level k, so left and right
    shifts occupy band -1 and their adjoints band +1.
    """

    def __init__(self, space: TruncatedFock, mat):
        self.space = space
        self.mat = sp.csr_array(mat, dtype=complex)
        if self.mat.shape != (space.dimension, space.dimension):
            raise ValueError(f"matrix shape {self.mat.shape} does not match dimension {space.dimension}")

    @classmethod
    def from_entries(cls, space: TruncatedFock, rows, cols, values) -> "GradedOperator":
        mat = sp.coo_array(
            (np.asarray(values, dtype=complex), (rows, cols)),
            shape=(space.dimension, space.dimension),
        )
        return cls(space, mat.tocsr())

    @classmethod
    def identity(cls, space: TruncatedFock) -> "GradedOperator":
        return cls(space, sp.eye_array(space.dimension, dtype=complex, format="csr"))

    @classmethod
    def zero(cls, space: TruncatedFock) -> "GradedOperator":
        return cls(space, sp.csr_array((space.dimension, space.dimension), dtype=complex))

    @property
    def bands(self) -> frozenset[int]:
        coo = self.mat.tocoo()
        levels = self.space.levels()
        mask = coo.data != 0
        return frozenset((levels[coo.col[mask]] - levels[coo.row[mask]]).tolist())

    def adjoint(self) -> "GradedOperator":
        return GradedOperator(self.space, self.mat.conj().T.tocsr())

    def apply(self, vec: np.ndarray) -> np.ndarray:
        return self.mat @ vec

    def column(self, w: Word) -> np.ndarray:
        return self.mat[:, [self.space.index_of(w)]].toarray().ravel()

    def to_dense(self) -> np.ndarray:
        if self.space.dimension > DENSE_LIMIT:
            raise ValueError(f"dense fallback capped at dimension {DENSE_LIMIT}")
        return self.mat.toarray()

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        return GradedOperator(self.space, self.mat @ other.mat)

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        return GradedOperator(self.space, self.mat + other.mat)

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        return GradedOperator(self.space, self.mat - other.mat)

    def __mul__(self, scalar: complex) -> "GradedOperator":
        return GradedOperator(self.space, self.mat * scalar)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"GradedOperator(dim={self.space.dimension}, nnz={self.mat.nnz})"


def weighted_left_shift(space: TruncatedFock, ws: WeightSystem, i: int) -> GradedOperator:
    """The compressed i-th weighted left shift: xi_w -> lambda_{i,w} xi_{i*w}."""
    ws._check_letter(i)
    rows, cols, values = [], [], []
    for k in range(space.depth):
        for w in space.basis.level_words(k):
            cols.append(space.index_of(w))
            rows.append(space.index_of(prepend(i, w)))
            values.append(ws.lambda_of(i, w))
    return GradedOperator.from_entries(space, rows, cols, values)


def weighted_right_shift(space: TruncatedFock, mu: MuSystem, i: int) -> GradedOperator:
    """The compressed i-th weighted right shift: xi_w -> mu_{i,w} xi_{w*i}."""
    if isinstance(mu, CommutantMu):
        require_bounded_mu(mu.weights)
    rows, cols, values = [], [], []
    for k in range(space.depth):
        for w in space.basis.level_words(k):
            cols.append(space.index_of(w))
            rows.append(space.index_of(append(w, i)))
            values.append(mu.mu_of(i, w))
    return GradedOperator.from_entries(space, rows, cols, values)


def left_creation(space: TruncatedFock, i: int) -> GradedOperator:
    return weighted_left_shift(space, ConstantWeights(space.n, 1.0), i)


def right_creation(space: TruncatedFock, i: int) -> GradedOperator:
    rows, cols, values = [], [], []
    for k in range(space.depth):
        for w in space.basis.level_words(k):
            cols.append(space.index_of(w))
            rows.append(space.index_of(append(w, i)))
            values.append(1.0)
    return GradedOperator.from_entries(space, rows, cols, values)


def build_shift(space: TruncatedFock, kind: str, i: int, weights=None) -> GradedOperator:
    """Dispatch on the four shift kinds.

    ``weights`` is a WeightSystem for ``left_weighted``, a MuSystem (or a
    WeightSystem, whose commutant weights are then taken) for
    ``right_weighted``, and ignored for the unweighted kinds.
    """
    if kind == LEFT_WEIGHTED:
        return weighted_left_shift(space, weights, i)
    if kind == RIGHT_WEIGHTED:
        mu = CommutantMu(weights) if isinstance(weights, WeightSystem) else weights
        return weighted_right_shift(space, mu, i)
    if kind == LEFT_UNWEIGHTED:
        return left_creation(space, i)
    if kind == RIGHT_UNWEIGHTED:
        return right_creation(space, i)
    raise ValueError(f"unknown shift kind {kind!r}")


def adjoint(x: GradedOperator) -> GradedOperator:
    """Conjugate transpose; an involution."""
    return x.adjoint()


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CommutationReport:
    max_defect: float
    witness: tuple[int, int, Word] | None
    level_cap: int


def commutation_defect(space: TruncatedFock, ws: WeightSystem, mu: MuSystem | None = None) -> CommutationReport:
    """Max over i, j and |w| <= depth-2 of ||(T_i S_j - S_j T_i) xi_w||.

    Both products stay within the truncation on those columns, so the defect
    vanishes exactly when mu carries the commutant weights of ws.
    """
    if mu is None:
        mu = CommutantMu(ws)
    levels = space.levels()
    cap = space.depth - 2
    col_mask = levels <= cap
    worst = 0.0
    witness = None
    lefts = [weighted_left_shift(space, ws, i) for i in range(1, space.n + 1)]
    rights = [weighted_right_shift(space, mu, j) for j in range(1, space.n + 1)]
    for i, t_i in enumerate(lefts, start=1):
        for j, s_j in enumerate(rights, start=1):
            diff = (t_i @ s_j - s_j @ t_i).mat
            col_norms = np.sqrt(np.asarray(abs(diff).power(2).sum(axis=0)).ravel())
            col_norms[~col_mask] = 0.0
            idx = int(np.argmax(col_norms))
            if col_norms[idx] > worst:
                worst = float(col_norms[idx])
                witness = (i, j, space.word_at(idx))
    return CommutationReport(worst, witness, cap)


def spectral_norm(op: GradedOperator, tol: float = 1e-10, max_iter: int = 10_000) -> float:
    """Operator norm by power iteration on X*X with a deterministic start."""
    dim = op.space.dimension
    vec = np.ones(dim, dtype=complex) / math.sqrt(dim)
    mat = op.mat
    mat_h = mat.conj().T
    estimate = 0.0
    for _ in range(max_iter):
        nxt = mat_h @ (mat @ vec)
        norm = float(np.linalg.norm(nxt))
        if norm == 0.0:
            return 0.0
        vec = nxt / norm
        if abs(norm - estimate) <= tol * max(norm, 1.0):
            estimate = norm
            break
        estimate = norm
    return math.sqrt(estimate)


@dataclass(frozen=True)
class NormReport:
    letter: int
    operator_norm: float
    weight_sup: float

    @property
    def gap(self) -> float:
        return abs(self.operator_norm - self.weight_sup)


def norm_check(space: TruncatedFock, ws: WeightSystem) -> list[NormReport]:
    """Compare ||T_i|| (power iteration) with sup of lambda_{i,w} over the
    columns the compression keeps (|w| < depth)."""
    reports = []
    for i in range(1, space.n + 1):
        op = weighted_left_shift(space, ws, i)
        sup = 0.0
        for k in range(space.depth):
            for w in space.basis.level_words(k):
                sup = max(sup, ws.lambda_of(i, w))
        reports.append(NormReport(i, spectral_norm(op), sup))
    return reports


@dataclass(frozen=True)
class VacuumReport:
    joint_kernel_dim: int
    projection_defect: float | None


def vacuum_kernel_check(space: TruncatedFock, ws: WeightSystem) -> VacuumReport:
    """The joint kernel of the adjoint shifts is the vacuum line.

    Verified by the rank of the stacked adjoints; for the unweighted system
    the vacuum projection identity I - sum_i L_i L_i* = P_e is also checked
    on levels <= depth-1.
    """
    if space.dimension > DENSE_LIMIT:
        raise ValueError(f"rank check needs the dense fallback (dimension <= {DENSE_LIMIT})")
    stacked = np.vstack(
        [weighted_left_shift(space, ws, i).adjoint().to_dense() for i in range(1, space.n + 1)]
    )
    rank = np.linalg.matrix_rank(stacked)
    kernel_dim = space.dimension - int(rank)

    projection_defect = None
    if isinstance(ws, ConstantWeights) and ws.value == 1.0:
        total = np.zeros((space.dimension, space.dimension), dtype=complex)
        for i in range(1, space.n + 1):
            l_i = left_creation(space, i).to_dense()
            total += l_i @ l_i.conj().T
        vacuum = np.zeros_like(total)
        vacuum[0, 0] = 1.0
        diff = np.eye(space.dimension) - total - vacuum
        keep = space.levels() <= space.depth - 1
        projection_defect = float(np.max(np.abs(diff[np.ix_(keep, keep)])))
    return VacuumReport(kernel_dim, projection_defect)
