"""One-shot quantum perceptron.

Training takes a set of (input, target) state pairs, accumulates the
rank-one maps |target><input| into a single weight matrix, and replaces
that matrix by its unitary polar factor: with w = u diag(sigma) v_dag,
every singular value is forced to one and the learned operator is
u @ v_dag.  There is no update loop; one SVD is the whole of training.

For a consistent training set (one whose pairs preserve pairwise inner
products, i.e. could have come from some unitary) the learned operator
reproduces every target exactly on the span of the inputs.  When the
inputs span the whole space the generating unitary itself is recovered.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, InconsistentTrainingSet, ValidationError
from .linalg import Matrix, StateVector, apply, inner, matmul, max_abs_diff, outer
from .svd import DEFAULT_RANK_TOL, svd

# Pairwise inner-product preservation slack accepted by train().
CONSISTENCY_TOL = 1e-8

# Default tolerance used by fidelity() in exact (phase-sensitive) mode.
FIDELITY_TOL = 1e-9


class Completeness(enum.Enum):
    """How the training inputs sit in the state space."""

    LESS_COMPLETE = "LessComplete"     # inputs span a proper subspace
    COMPLETE = "Complete"              # exactly dim pairs spanning everything
    OVER_COMPLETE = "OverComplete"     # more than dim pairs, full span

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TrainingPair:
    """An (input, target) pair of equal-dimension states."""

    input: StateVector
    target: StateVector

    def __post_init__(self):
        if self.input.dim != self.target.dim:
            raise DimensionMismatch(
                "pair mixes dim %d input with dim %d target"
                % (self.input.dim, self.target.dim)
            )


class TrainingSet:
    """A non-empty collection of equal-dimension training pairs.

    The completeness class is computed once at construction from the
    numerical rank of the matrix whose columns are the inputs.
    """

    def __init__(self, pairs: Iterable[TrainingPair], rank_tol: float = DEFAULT_RANK_TOL):
        pairs = tuple(pairs)
        if not pairs:
            raise ValidationError("training set needs at least one pair")
        dim = pairs[0].input.dim
        for k, p in enumerate(pairs):
            if p.input.dim != dim:
                raise DimensionMismatch(
                    "pair %d has dim %d, expected %d" % (k, p.input.dim, dim)
                )
        self._pairs = pairs
        self._dim = dim
        self._completeness = classify_set(pairs, rank_tol)

    @property
    def pairs(self) -> Tuple[TrainingPair, ...]:
        return self._pairs

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def completeness(self) -> Completeness:
        return self._completeness

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self):
        return iter(self._pairs)

    def __repr__(self) -> str:
        return "TrainingSet(dim=%d, pairs=%d, %s)" % (
            self._dim, len(self._pairs), self._completeness.value,
        )


@dataclass(frozen=True)
class ConsistencyReport:
    """Worst pairwise inner-product violation over a training set.

    ok is True when every |<x_i|x_j> - <y_i|y_j>| is within tolerance;
    worst_pair holds the offending (i, j) indices (None for a single
    pair, where there is nothing to compare).
    """

    ok: bool
    worst_pair: Optional[Tuple[int, int]]
    violation: float
    tol: float


@dataclass(frozen=True)
class PerceptronModel:
    """The trained operator together with its SVD diagnostics.

    f and w_new are the unitary factors of the accumulated weight
    matrix (w_new stored conjugate-transposed, so the accumulated
    weight is f @ diag(sigma) @ w_new); unitary = f @ w_new is the
    operator actually used for prediction.
    """

    dim: int
    f: Matrix
    sigma: Tuple[float, ...]
    w_new: Matrix
    unitary: Matrix
    rank: int
    rank_tol: float


def pair_weight(p: TrainingPair) -> Matrix:
    """The rank-one weight |target><input| contributed by one pair."""
    return outer(p.target, p.input)


def total_weight(s: TrainingSet) -> Matrix:
    """Sum of the per-pair weights of a training set."""
    w = np.zeros((s.dim, s.dim), dtype=complex)
    for p in s:
        w = w + pair_weight(p).array
    return Matrix(w)


def classify_set(pairs: Sequence[TrainingPair], rank_tol: float = DEFAULT_RANK_TOL) -> Completeness:
    """Classify input coverage as less-complete, complete or over-complete.

    The rank of the input family is the number of significant singular
    values of the matrix with the inputs as columns (zero-padded to
    square, which leaves singular values untouched).
    """
    pairs = tuple(pairs)
    if not pairs:
        raise ValidationError("cannot classify an empty set of pairs")
    dim = pairs[0].input.dim
    count = len(pairs)
    n = max(dim, count)
    x = np.zeros((n, n), dtype=complex)
    for j, p in enumerate(pairs):
        x[:dim, j] = p.input.amps
    r = svd(Matrix(x), rank_tol=rank_tol).rank
    if r < dim:
        return Completeness.LESS_COMPLETE
    if count == dim:
        return Completeness.COMPLETE
    return Completeness.OVER_COMPLETE


def consistency_check(s: TrainingSet, tol: float = CONSISTENCY_TOL) -> ConsistencyReport:
    """Check that the pairs could all have come from one unitary map.

    A unitary preserves inner products, so for every i, j the inputs
    and targets must satisfy <x_i|x_j> = <y_i|y_j> within tol.  The
    report carries the worst violating pair and its magnitude.
    """
    worst = 0.0
    worst_pair = None
    ps = s.pairs
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            d = abs(inner(ps[i].input, ps[j].input) - inner(ps[i].target, ps[j].target))
            if d > worst:
                worst = d
                worst_pair = (i, j)
    return ConsistencyReport(ok=worst <= tol, worst_pair=worst_pair, violation=worst, tol=tol)


def train(
    s: TrainingSet,
    rank_tol: float = DEFAULT_RANK_TOL,
    force: bool = False,
    consistency_tol: float = CONSISTENCY_TOL,
) -> PerceptronModel:
    """Learn a unitary operator from the training set in one shot.

    Accumulates the total weight, takes its SVD once, and sets every
    singular value to one.  Raises InconsistentTrainingSet when the
    pairs cannot come from a single unitary (override with force=True
    to fit the polar factor of the contradictory weight anyway).

    Parameters
    ----------
    s : TrainingSet
    rank_tol : float
        Passed through to the SVD rank decision.
    force : bool
        Train even if the consistency check fails.
    consistency_tol : float
        Slack allowed on inner-product preservation.

    Returns
    -------
    PerceptronModel
    """
    report = consistency_check(s, consistency_tol)
    if not report.ok and not force:
        raise InconsistentTrainingSet(report)
    w = total_weight(s)
    r = svd(w, rank_tol=rank_tol)
    return PerceptronModel(
        dim=s.dim,
        f=r.u,
        sigma=r.sigma,
        w_new=r.v_dag,
        unitary=matmul(r.u, r.v_dag),
        rank=r.rank,
        rank_tol=r.rank_tol,
    )


def predict(model: PerceptronModel, x: StateVector) -> StateVector:
    """Apply the learned unitary to a state."""
    if x.dim != model.dim:
        raise DimensionMismatch("model dim %d, state dim %d" % (model.dim, x.dim))
    return apply(model.unitary, x)


def fidelity(a: StateVector, b: StateVector, phase_invariant: bool = False, tol: float = FIDELITY_TOL) -> float:
    """Agreement score between two states in [0, 1].

    With phase_invariant=True this is |<a|b>|^2, blind to a global
    phase.  Otherwise the comparison is exact and entrywise: 1.0 when
    the largest amplitude difference is within tol, else 1 - min(d, 1)
    where d is that difference.
    """
    if phase_invariant:
        return float(abs(inner(a, b)) ** 2)
    d = max_abs_diff(a, b)
    if d <= tol:
        return 1.0
    return 1.0 - min(d, 1.0)
