"""Singular value decomposition of square complex matrices by one-sided
Jacobi rotations, written from scratch on top of plain array arithmetic.

The decomposition is m = U diag(sigma) V†.  One-sided Jacobi works on
the columns of a copy B of m: for every column pair (p, q) it applies a
unitary 2x2 rotation on the right that makes the two columns orthogonal,
and accumulates the same rotations into V.  When a full sweep over all
pairs performs no rotation the columns of B are mutually orthogonal, so
B = U diag(sigma) with sigma the column norms and U the normalized
columns.  Rotations only ever act on the right, hence U's columns stay
inside the column space of m; columns of B that end up numerically zero
get their U direction filled in from canonical basis vectors instead.

The output is made deterministic: singular values are sorted in
descending order (stable towards the original column order on ties) and
each column of U is rotated so that its largest-modulus entry is real
and positive, with the paired V column absorbing the opposite phase so
the product U diag(sigma) V† is untouched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotSquare, NumericalFailure
from .linalg import Matrix

# A column pair is rotated only while |<b_p|b_q>| exceeds this fraction
# both of ||b_p|| * ||b_q|| and of the (unit, after pre-scaling)
# Frobenius norm of the whole matrix.  The relative part stops us from
# chasing roundoff on healthy pairs; the absolute part lets columns
# that have collapsed to rounding noise rest, since their coupling can
# never drop below the relative threshold alone.
ORTH_TOL = 1e-14

# One-sided Jacobi converges quadratically once sorted; a handful of
# sweeps suffices in practice and hitting this cap signals a pathology.
MAX_SWEEPS = 100

DEFAULT_RANK_TOL = 1e-10


@dataclass(frozen=True)
class SvdResult:
    """Factors of m = u @ diag(sigma) @ v_dag.

    Attributes
    ----------
    u, v_dag : Matrix
        Unitary factors; ``v_dag`` is stored already conjugate-transposed.
    sigma : tuple of float
        Singular values, descending, one per column of u.
    rank : int
        Number of singular values above ``rank_tol * max(1, sigma[0])``.
    rank_tol : float
        The relative threshold used for ``rank``.
    """

    u: Matrix
    sigma: tuple
    v_dag: Matrix
    rank: int
    rank_tol: float


def _jacobi_orthogonalize(a: np.ndarray, max_sweeps: int):
    """Right-multiply a by plane rotations until its columns are
    mutually orthogonal.  Expects a pre-scaled to unit Frobenius norm.
    Returns (a, v) with a_out = a_in @ v and v unitary."""
    n = a.shape[1]
    v = np.eye(n, dtype=complex)
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                ap = a[:, p]
                aq = a[:, q]
                alpha = float(np.vdot(ap, ap).real)
                beta = float(np.vdot(aq, aq).real)
                gamma = complex(np.vdot(ap, aq))
                g = abs(gamma)
                if g <= ORTH_TOL or g <= ORTH_TOL * math.sqrt(alpha * beta):
                    continue
                # Factor out the phase of gamma, then the 2x2 Gram
                # matrix [[alpha, g], [g, beta]] is real symmetric and
                # a real Givens rotation with tan(2t) = 2g/(beta-alpha)
                # zeroes the coupling.  Smaller-angle root for
                # stability.
                phase = gamma / g
                if alpha == beta:
                    t = 1.0
                else:
                    tau = (beta - alpha) / (2.0 * g)
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                rp = c * ap - s * phase.conjugate() * aq
                rq = s * phase * ap + c * aq
                a[:, p] = rp
                a[:, q] = rq
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * phase.conjugate() * vq
                v[:, q] = s * phase * vp + c * vq
                rotated = True
        if not rotated:
            return a, v
    raise NumericalFailure(
        "Jacobi SVD did not converge within %d sweeps" % max_sweeps
    )


def _complete_null_columns(u: np.ndarray, filled: np.ndarray) -> None:
    """Fill the columns of u marked False in `filled` with unit vectors
    orthogonal to everything already present, by Gram-Schmidt over the
    canonical basis in index order."""
    n = u.shape[0]
    next_basis = 0
    for i in range(n):
        if filled[i]:
            continue
        while True:
            if next_basis >= n:  # cannot happen for consistent input
                raise NumericalFailure("failed to complete orthonormal basis")
            cand = np.zeros(n, dtype=complex)
            cand[next_basis] = 1.0
            next_basis += 1
            for j in range(n):
                if j == i or filled[j]:
                    cand -= np.vdot(u[:, j], cand) * u[:, j]
            r = np.linalg.norm(cand)
            if r > 0.5:
                u[:, i] = cand / r
                filled[i] = True
                break


def svd(m: Matrix, rank_tol: float = DEFAULT_RANK_TOL, max_sweeps: int = MAX_SWEEPS) -> SvdResult:
    """Decompose a square complex matrix as u @ diag(sigma) @ v_dag.

    Parameters
    ----------
    m : Matrix
        Square input.  Raises NotSquare otherwise.
    rank_tol : float
        Relative cutoff for counting a singular value as nonzero.
    max_sweeps : int
        Rotation sweep cap; exceeding it raises NumericalFailure.

    Returns
    -------
    SvdResult
        With u, v_dag unitary (to working precision), sigma descending
        and real nonnegative, and the numerical rank.
    """
    if m.rows != m.cols:
        raise NotSquare("svd here is restricted to square matrices, got %dx%d" % m.shape)
    n = m.rows
    # Work at unit Frobenius norm so the convergence thresholds are
    # scale free and column products cannot underflow.
    fro = float(np.linalg.norm(m.array))
    scale = fro if fro > 0.0 else 1.0
    b, v = _jacobi_orthogonalize(m.array.astype(complex, copy=True) / scale, max_sweeps)

    norms = np.linalg.norm(b, axis=0)
    order = np.argsort(-norms, kind="stable")
    b = b[:, order]
    v = v[:, order]
    norms = norms[order]

    # Columns below this are directionless noise; their U direction is
    # completed from the canonical basis instead of normalized.
    null_tol = n * np.finfo(float).eps * (norms[0] if norms[0] > 0.0 else 1.0)
    u = np.zeros((n, n), dtype=complex)
    filled = np.zeros(n, dtype=bool)
    for i in range(n):
        if norms[i] > null_tol:
            u[:, i] = b[:, i] / norms[i]
            filled[i] = True
    _complete_null_columns(u, filled)

    # Phase convention: largest-modulus entry of every u column made
    # real positive; the paired v column absorbs the conjugate phase
    # whenever its singular value is nonzero so the product is kept.
    for i in range(n):
        k = int(np.argmax(np.abs(u[:, i])))
        z = u[k, i]
        if abs(z) > 0.0:
            ph = z / abs(z)
            u[:, i] *= ph.conjugate()
            if norms[i] > null_tol:
                v[:, i] *= ph.conjugate()

    values = norms * scale
    sigma_max = float(values[0])
    rank = int(np.sum(values > rank_tol * max(1.0, sigma_max)))
    sigma = tuple(float(x) for x in values)
    return SvdResult(
        u=Matrix(u),
        sigma=sigma,
        v_dag=Matrix(v.conj().T),
        rank=rank,
        rank_tol=float(rank_tol),
    )


def polar_unitary(m: Matrix, rank_tol: float = DEFAULT_RANK_TOL):
    """The unitary polar factor u @ v_dag of m, plus m's numerical rank.

    For full-rank m this is the unique nearest unitary in the Frobenius
    sense; when m is rank deficient the factor is still unitary and
    still maps every right-singular direction with nonzero singular
    value exactly where m/sigma does, while the completion on the null
    space follows the deterministic convention of :func:`svd`.
    """
    r = svd(m, rank_tol=rank_tol)
    return Matrix(r.u.array @ r.v_dag.array), r.rank
