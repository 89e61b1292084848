"""Reference gate library and circuit helpers.

Basis ordering is most-significant-bit first: qubit 0 is the leftmost
symbol of a ket label, so |q0 q1> has index 2*q0 + q1.  A gate placed
at qubit offset p inside an n-qubit register is lifted to the full
space as I(2^p) (x) g (x) I(rest).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import BadTableLength, PlacementOutOfRange, UnknownGate, ValidationError
from .linalg import Matrix, StateVector, apply, is_unitary, tensor
from .perceptron import TrainingPair, TrainingSet

# GateSpec construction rejects anything farther from unitarity than this.
GATE_UNITARY_TOL = 1e-12

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class GateSpec:
    """A named unitary acting on a fixed number of qubits."""

    name: str
    qubits: int
    matrix: Matrix

    def __post_init__(self):
        dim = 2 ** self.qubits
        if self.matrix.shape != (dim, dim):
            raise ValidationError(
                "gate %r on %d qubit(s) needs a %dx%d matrix, got %dx%d"
                % ((self.name, self.qubits, dim, dim) + self.matrix.shape)
            )
        if not is_unitary(self.matrix, GATE_UNITARY_TOL):
            raise ValidationError("gate %r matrix is not unitary" % self.name)

    @property
    def dim(self) -> int:
        return 2 ** self.qubits


def _hadamard() -> Matrix:
    return Matrix(np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / _SQRT2)


def _phase_s() -> Matrix:
    return Matrix(np.diag([1.0, 1.0j]))


def _phase_t() -> Matrix:
    return Matrix(np.diag([1.0, np.exp(1j * np.pi / 4.0)]))


def _cnot() -> Matrix:
    # control on qubit 0 (most significant), target on qubit 1
    m = np.eye(4, dtype=complex)
    m[[2, 3]] = m[[3, 2]]
    return Matrix(m)


def _toffoli() -> Matrix:
    # controls on qubits 0 and 1, target on qubit 2
    m = np.eye(8, dtype=complex)
    m[[6, 7]] = m[[7, 6]]
    return Matrix(m)


def _fredkin() -> Matrix:
    # control on qubit 0, swap of qubits 1 and 2
    m = np.eye(8, dtype=complex)
    m[[5, 6]] = m[[6, 5]]
    return Matrix(m)


_STANDARD = {
    "i": ("I", 1, lambda: Matrix.identity(2)),
    "x": ("X", 1, lambda: Matrix(np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex))),
    "h": ("H", 1, _hadamard),
    "s": ("S", 1, _phase_s),
    "t": ("T", 1, _phase_t),
    "cnot": ("CNOT", 2, _cnot),
    "toffoli": ("Toffoli", 3, _toffoli),
    "fredkin": ("Fredkin", 3, _fredkin),
}


def standard_gate(name: str) -> GateSpec:
    """Look up a gate by name (case-insensitive).  Raises UnknownGate.

    Available: I, X, H, S, T, CNOT, Toffoli, Fredkin, composite.
    """
    key = name.strip().lower()
    if key == "composite":
        return composite_gate()
    if key not in _STANDARD:
        raise UnknownGate(
            "no gate named %r (try one of: %s, composite)"
            % (name, ", ".join(canon for canon, _, _ in _STANDARD.values()))
        )
    canon, qubits, build = _STANDARD[key]
    return GateSpec(canon, qubits, build())


def oracle_uf(table: Sequence[int]) -> GateSpec:
    """The reversible oracle |x, y> -> |x, y XOR f(x)> for a boolean f
    given as its truth table (length must be a power of two, entries 0
    or 1).  The result acts on n+1 qubits, with y the last qubit.
    """
    size = len(table)
    if size < 1 or size & (size - 1) != 0:
        raise BadTableLength("truth table length %d is not a power of two" % size)
    if any(v not in (0, 1) for v in table):
        raise BadTableLength("truth table entries must be 0 or 1")
    n_in = size.bit_length() - 1
    dim = 2 * size
    m = np.zeros((dim, dim), dtype=complex)
    for x in range(size):
        for y in (0, 1):
            m[2 * x + (y ^ table[x]), 2 * x + y] = 1.0
    bits = "".join(str(v) for v in table)
    return GateSpec("Uf[%s]" % bits, n_in + 1, Matrix(m))


def compose(placed: Sequence[Tuple[GateSpec, int]], qubits: int = 0) -> GateSpec:
    """Chain gates into one: first listed acts first.

    Each entry is (gate, offset) with offset the topmost qubit the gate
    touches.  qubits fixes the register width; left at 0 it becomes the
    smallest width that fits every placement.  Raises
    PlacementOutOfRange when a gate sticks out of the register.
    """
    placed = list(placed)
    if not placed:
        raise ValidationError("compose needs at least one placed gate")
    needed = max(off + g.qubits for g, off in placed)
    width = qubits if qubits else needed
    total = np.eye(2 ** width, dtype=complex)
    for g, off in placed:
        if off < 0 or off + g.qubits > width:
            raise PlacementOutOfRange(
                "gate %s at offset %d does not fit in %d qubit(s)"
                % (g.name, off, width)
            )
        lifted = g.matrix
        if off > 0:
            lifted = tensor(Matrix.identity(2 ** off), lifted)
        tail = width - off - g.qubits
        if tail > 0:
            lifted = tensor(lifted, Matrix.identity(2 ** tail))
        total = lifted.array @ total
    name = " ; ".join("%s@%d" % (g.name, off) for g, off in placed)
    return GateSpec(name, width, Matrix(total))


def composite_gate() -> GateSpec:
    """A fixed two-qubit benchmark gate, defined by its basis images.

    Columns are the images of |00>, |01>, |10>, |11>; w = exp(3i*pi/4)
    is the phase picked up by the swapped component.  The same operator
    factors as the circuit H@0 ; CNOT ; T@0 ; S@0.
    """
    w = np.exp(3j * np.pi / 4.0)
    m = np.array(
        [
            [1.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 1.0],
            [0.0, w, 0.0, -w],
            [w, 0.0, -w, 0.0],
        ],
        dtype=complex,
    ) / _SQRT2
    return GateSpec("composite", 2, Matrix(m))


def complete_training_set(g: GateSpec) -> TrainingSet:
    """One pair (|k>, g|k>) per computational basis state, ascending k."""
    dim = g.dim
    pairs = []
    for k in range(dim):
        x = StateVector.basis(dim, k)
        pairs.append(TrainingPair(x, apply(g.matrix, x)))
    return TrainingSet(pairs)


def generate_set(g: GateSpec, mode: str, seed: int = 0) -> TrainingSet:
    """Build a training set of the requested completeness for a gate.

    mode "complete" is one pair per basis state; "over" adds a pair for
    a random unit vector on top of that; "less" uses dim//4 random
    basis states plus one two-state superposition, which keeps the
    input span strictly short of the full space.  Deterministic for a
    given seed.
    """
    rng = np.random.default_rng(seed)
    dim = g.dim
    if mode == "complete":
        return complete_training_set(g)
    if mode == "over":
        pairs = list(complete_training_set(g).pairs)
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        x = StateVector(v / np.linalg.norm(v))
        pairs.append(TrainingPair(x, apply(g.matrix, x)))
        return TrainingSet(pairs)
    if mode == "less":
        k = dim // 4
        pairs = []
        for idx in sorted(rng.choice(dim, size=k, replace=False)):
            x = StateVector.basis(dim, int(idx))
            pairs.append(TrainingPair(x, apply(g.matrix, x)))
        a, b = rng.choice(dim, size=2, replace=False)
        coeff = rng.uniform(0.25, 1.0, size=2) * rng.choice((-1.0, 1.0), size=2)
        v = np.zeros(dim, dtype=complex)
        v[int(a)], v[int(b)] = coeff[0], coeff[1]
        x = StateVector(v / np.linalg.norm(v))
        pairs.append(TrainingPair(x, apply(g.matrix, x)))
        return TrainingSet(pairs)
    raise ValidationError("mode must be one of: complete, less, over (got %r)" % mode)
