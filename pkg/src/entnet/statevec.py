"""Dense state-vector simulator for registers of mixed-dimension sites.

Registers hold qubits and qutrits side by side as a flat complex amplitude
vector.  The module provides exactly the machinery the entanglement
protocols need: basis-state construction, a small gate set, Born-rule
measurement driven by an injected random generator, tensor products,
discarding of unentangled sites, and comparison up to global phase.

Registers are immutable values; every operation returns a new register.
All randomness flows through the generator handed in by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, sin, sqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EntangledSiteError,
    InternalError,
    InvalidGateError,
    InvalidInputError,
)

NORM_TOL = 1e-10
MAX_STATE_DIM = 1 << 22  # hard cap: 22 qubits-equivalent

_SQRT2_INV = 1.0 / sqrt(2.0)

X_MATRIX = np.array([[0, 1], [1, 0]], dtype=complex)
Y_MATRIX = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z_MATRIX = np.array([[1, 0], [0, -1]], dtype=complex)
H_MATRIX = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
CNOT_MATRIX = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
SWAP_MATRIX = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


@dataclass(frozen=True, eq=False)
class Register:
    """Pure state over sites with per-site dimensions ``dims``."""

    dims: tuple[int, ...]
    amps: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        amps = np.asarray(self.amps, dtype=complex).reshape(-1)
        object.__setattr__(self, "amps", amps)
        total = 1
        for d in self.dims:
            if d < 2:
                raise InvalidInputError(f"site dimension {d} < 2")
            total *= d
        if total > MAX_STATE_DIM:
            raise InvalidInputError(f"state dimension {total} exceeds cap {MAX_STATE_DIM}")
        if amps.shape != (total,):
            raise InvalidInputError(
                f"amplitude length {amps.shape[0]} != product of dims {total}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-8:
            raise InvalidInputError(f"register norm {norm} != 1")

    @property
    def n_sites(self) -> int:
        return len(self.dims)

    def check_norm(self) -> "Register":
        if abs(np.linalg.norm(self.amps) - 1.0) > NORM_TOL:
            raise InternalError("statevector norm drifted")
        return self


@dataclass(frozen=True)
class Outcome:
    """Result of a single-site measurement."""

    value: int
    basis: str  # "computational" | "diagonal"


@dataclass(frozen=True, eq=False)
class Gate:
    """A unitary with the register sites it acts on (first target = most significant)."""

    name: str
    matrix: np.ndarray
    targets: tuple[int, ...]


def x(site: int) -> Gate:
    return Gate("X", X_MATRIX, (site,))


def y(site: int) -> Gate:
    return Gate("Y", Y_MATRIX, (site,))


def z(site: int) -> Gate:
    return Gate("Z", Z_MATRIX, (site,))


def h(site: int) -> Gate:
    return Gate("H", H_MATRIX, (site,))


def cnot(control: int, target: int) -> Gate:
    return Gate("CNOT", CNOT_MATRIX, (control, target))


def qutrit_permutation(site: int, perm: Sequence[int]) -> Gate:
    """Permutation of a d-level site's basis states: |k> -> |perm[k]>."""
    d = len(perm)
    if sorted(perm) != list(range(d)):
        raise InvalidGateError(f"{perm} is not a permutation")
    m = np.zeros((d, d), dtype=complex)
    for k, pk in enumerate(perm):
        m[pk, k] = 1.0
    return Gate("QutritPermutation", m, (site,))


def partial_swap(site_a: int, site_b: int, angle: float) -> Gate:
    """cos(angle)*I + i*sin(angle)*SWAP on two qubits."""
    m = cos(angle) * np.eye(4, dtype=complex) + 1j * sin(angle) * SWAP_MATRIX
    return Gate("PartialSwap", m, (site_a, site_b))


def custom(matrix: np.ndarray, targets: Sequence[int], name: str = "Custom") -> Gate:
    return Gate(name, np.asarray(matrix, dtype=complex), tuple(targets))


def basis_state(dims: Sequence[int], labels: Sequence[int]) -> Register:
    """Computational basis state |labels> over sites of the given dimensions."""
    dims = tuple(int(d) for d in dims)
    labels = tuple(int(v) for v in labels)
    if len(dims) != len(labels):
        raise InvalidInputError("dims and labels must have equal length")
    for d, v in zip(dims, labels):
        if not 0 <= v < d:
            raise InvalidInputError(f"label {v} out of range for dimension {d}")
    total = int(np.prod(dims)) if dims else 1
    amps = np.zeros(total, dtype=complex)
    idx = 0
    for d, v in zip(dims, labels):
        idx = idx * d + v
    amps[idx] = 1.0
    return Register(dims, amps)


def _check_targets(reg: Register, targets: tuple[int, ...]) -> None:
    if len(set(targets)) != len(targets):
        raise InvalidInputError(f"duplicate gate targets {targets}")
    for t in targets:
        if not 0 <= t < reg.n_sites:
            raise InvalidInputError(f"site {t} out of range for {reg.n_sites} sites")


def _check_unitary(matrix: np.ndarray, dim: int) -> None:
    if matrix.shape != (dim, dim):
        raise InvalidGateError(f"matrix shape {matrix.shape} != ({dim}, {dim})")
    if np.max(np.abs(matrix.conj().T @ matrix - np.eye(dim))) > NORM_TOL:
        raise InvalidGateError("matrix is not unitary within 1e-10")


def apply(reg: Register, gate: Gate) -> Register:
    """Apply a gate's unitary, embedded at its target sites."""
    _check_targets(reg, gate.targets)
    dim = 1
    for t in gate.targets:
        dim *= reg.dims[t]
    _check_unitary(gate.matrix, dim)
    n = reg.n_sites
    tensor = reg.amps.reshape(reg.dims)
    rest = [i for i in range(n) if i not in gate.targets]
    tensor = np.moveaxis(tensor, gate.targets, range(len(gate.targets)))
    block = tensor.reshape(dim, -1)
    block = gate.matrix @ block
    tensor = block.reshape([reg.dims[t] for t in gate.targets] + [reg.dims[i] for i in rest])
    tensor = np.moveaxis(tensor, range(len(gate.targets)), gate.targets)
    return Register(reg.dims, tensor.reshape(-1)).check_norm()


def site_probabilities(reg: Register, site: int) -> np.ndarray:
    """Born-rule outcome probabilities for one site."""
    _check_targets(reg, (site,))
    tensor = np.abs(reg.amps.reshape(reg.dims)) ** 2
    axes = tuple(i for i in range(reg.n_sites) if i != site)
    return tensor.sum(axis=axes) if axes else tensor


def collapse(reg: Register, site: int, value: int, basis: str = "computational") -> tuple[float, Register]:
    """Project one site onto an outcome and renormalize; returns (probability, state).

    Forcing a numerically impossible outcome raises InternalError.
    """
    _check_targets(reg, (site,))
    if basis == "diagonal":
        if reg.dims[site] != 2:
            raise InvalidInputError("diagonal basis is defined only for 2-dimensional sites")
        prob, out = collapse(apply(reg, h(site)), site, value)
        return prob, apply(out, h(site))
    if basis != "computational":
        raise InvalidInputError(f"unknown basis {basis!r}")
    if not 0 <= value < reg.dims[site]:
        raise InvalidInputError(f"outcome {value} out of range for dimension {reg.dims[site]}")
    tensor = reg.amps.reshape(reg.dims).copy()
    idx = [slice(None)] * reg.n_sites
    for v in range(reg.dims[site]):
        if v != value:
            idx[site] = v
            tensor[tuple(idx)] = 0.0
    branch = tensor.reshape(-1)
    prob = float(np.linalg.norm(branch) ** 2)
    if prob < NORM_TOL:
        raise InternalError(f"zero-norm branch forced: site {site} outcome {value}")
    return prob, Register(reg.dims, branch / sqrt(prob))


def measure(
    reg: Register,
    site: int,
    rng: np.random.Generator,
    basis: str = "computational",
) -> tuple[Outcome, Register]:
    """Measure one site; the outcome is sampled from the supplied generator.

    The diagonal basis {(|0>+|1>)/sqrt2, (|0>-|1>)/sqrt2} is available for
    qubit sites only; the post-measurement state is the corresponding
    eigenstate.
    """
    if basis == "diagonal":
        if reg.dims[site] != 2:
            raise InvalidInputError("diagonal basis is defined only for 2-dimensional sites")
        rotated = apply(reg, h(site))
        out, collapsed = measure(rotated, site, rng)
        return Outcome(out.value, "diagonal"), apply(collapsed, h(site))
    if basis != "computational":
        raise InvalidInputError(f"unknown basis {basis!r}")
    probs = site_probabilities(reg, site)
    u = rng.random()
    value = int(np.searchsorted(np.cumsum(probs), u, side="right"))
    value = min(value, reg.dims[site] - 1)
    _, collapsed = collapse(reg, site, value)
    return Outcome(value, "computational"), collapsed


def tensor(a: Register, b: Register) -> Register:
    """Tensor product: a's sites first, then b's."""
    return Register(a.dims + b.dims, np.kron(a.amps, b.amps))


def permute_sites(reg: Register, perm: Sequence[int]) -> Register:
    """Reorder sites so that new site i is old site perm[i]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(reg.n_sites)):
        raise InvalidInputError(f"{perm} is not a site permutation")
    tensor_ = reg.amps.reshape(reg.dims)
    tensor_ = np.transpose(tensor_, perm)
    return Register(tuple(reg.dims[p] for p in perm), tensor_.reshape(-1))


def swap_sites(reg: Register, i: int, j: int) -> Register:
    perm = list(range(reg.n_sites))
    perm[i], perm[j] = perm[j], perm[i]
    return permute_sites(reg, perm)


def reduced_density_matrix(reg: Register, sites: Sequence[int]) -> np.ndarray:
    """Partial trace down to the given sites (in the given order)."""
    sites = tuple(sites)
    _check_targets(reg, sites)
    tensor_ = reg.amps.reshape(reg.dims)
    tensor_ = np.moveaxis(tensor_, sites, range(len(sites)))
    dim = 1
    for s in sites:
        dim *= reg.dims[s]
    block = tensor_.reshape(dim, -1)
    return block @ block.conj().T


def discard_sites(reg: Register, sites: Iterable[int]) -> Register:
    """Drop sites that are jointly unentangled from the rest of the register."""
    sites = sorted(set(sites))
    _check_targets(reg, tuple(sites))
    if len(sites) == reg.n_sites:
        raise InvalidInputError("cannot discard every site")
    keep = [i for i in range(reg.n_sites) if i not in sites]
    tensor_ = reg.amps.reshape(reg.dims)
    tensor_ = np.moveaxis(tensor_, sites, range(len(sites)))
    dropped_dim = 1
    for s in sites:
        dropped_dim *= reg.dims[s]
    block = tensor_.reshape(dropped_dim, -1)
    u, s, vh = np.linalg.svd(block, full_matrices=False)
    probs = s**2
    purity = float((probs**2).sum())
    if abs(purity - 1.0) > NORM_TOL:
        raise EntangledSiteError(f"sites {sites} are entangled (purity {purity:.3g})")
    rest = vh[0]
    return Register(tuple(reg.dims[i] for i in keep), rest / np.linalg.norm(rest))


def discard_site(reg: Register, site: int) -> Register:
    """Drop one unentangled site (partial trace of a pure factor)."""
    return discard_sites(reg, (site,))


def fidelity(a: Register, b: Register) -> float:
    """|<a|b>|^2; zero when the site dimensions differ."""
    if a.dims != b.dims:
        return 0.0
    return float(abs(np.vdot(a.amps, b.amps)) ** 2)


def equal_up_to_global_phase(a: Register, b: Register, tol: float = 1e-10) -> bool:
    """True iff a == c*b for some unit complex c, within ||a - c*b|| <= tol.

    The phase is read off the largest-magnitude amplitude of b.
    """
    if a.dims != b.dims:
        return False
    j = int(np.argmax(np.abs(b.amps)))
    if abs(b.amps[j]) < 1e-12 or abs(a.amps[j]) < 1e-12:
        return bool(np.linalg.norm(a.amps - b.amps) <= tol)
    c = a.amps[j] / b.amps[j]
    c /= abs(c)
    return bool(np.linalg.norm(a.amps - c * b.amps) <= tol)


def support(reg: Register, tol: float = 1e-12) -> list[tuple[tuple[int, ...], complex]]:
    """Basis labels and amplitudes of all non-negligible terms."""
    out = []
    for flat in np.nonzero(np.abs(reg.amps) > tol)[0]:
        labels = []
        rem = int(flat)
        for d in reversed(reg.dims):
            labels.append(rem % d)
            rem //= d
        out.append((tuple(reversed(labels)), complex(reg.amps[flat])))
    return out


def cat_state(n: int) -> Register:
    """(|0...0> + |1...1>)/sqrt2 over n qubit sites."""
    if n < 1:
        raise InvalidInputError("cat state needs at least one site")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = _SQRT2_INV
    amps[-1] = _SQRT2_INV
    return Register((2,) * n, amps)


def bell_state() -> Register:
    """(|00> + |11>)/sqrt2."""
    return cat_state(2)
