"""Qubit evolution channels: unitary, phase-damping and amplitude-damping.

A :class:`Channel` bundles the evolution kind, the dimensionless evolution
time ``tau``, the dimensionless decoherence time ``t_dec`` and the energy
eigenbasis of the underlying two-level Hamiltonian
H = (omega/2) * (|e><e| - |g><g|), with hbar = omega = 1 throughout.

The channel map is

    rho -> U(tau) [E0 rho E0^dag + E1 rho E1^dag] U(tau)^dag

with U(tau) the Hamiltonian propagator and {E0, E1} the Kraus pair of the
noise kind. :func:`apply_channel` evaluates the equivalent closed form
componentwise in the energy eigenbasis, which is both cheaper and an
independent target for the Kraus-form evaluation used in the tests:

    phase damping:      diagonal preserved,
                        off-diagonal gains exp(-tau/t_dec) * exp(-+i*tau)
    amplitude damping:  excited population decays by exp(-2*tau/t_dec),
                        same off-diagonal factor
    noiseless:          the t_dec = inf limit of either
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg

NOISE_KINDS = ("noiseless", "pdn", "adn")


@dataclass(frozen=True, eq=False)
class EnergyBasis:
    """Orthonormal excited/ground eigenpair of the qubit Hamiltonian.

    Both states are complex vectors of shape (2,) in the computational
    basis; ``omega`` is the dimensionless level splitting (fixed to 1 in
    all bundled experiments).
    """

    excited: np.ndarray
    ground: np.ndarray
    omega: float = 1.0

    def __post_init__(self):
        excited = np.asarray(self.excited, dtype=complex).copy()
        ground = np.asarray(self.ground, dtype=complex).copy()
        if excited.shape != (2,) or ground.shape != (2,):
            raise ValueError("basis states must be complex vectors of shape (2,)")
        if not (linalg.is_normalized(excited) and linalg.is_normalized(ground)):
            raise ValueError("basis states must be normalized")
        if abs(np.vdot(excited, ground)) > linalg.ATOL:
            raise ValueError("excited and ground states must be orthogonal")
        excited.setflags(write=False)
        ground.setflags(write=False)
        object.__setattr__(self, "excited", excited)
        object.__setattr__(self, "ground", ground)
        matrix = np.column_stack([excited, ground])
        matrix.setflags(write=False)
        object.__setattr__(self, "_transform", matrix)

    def transform(self) -> np.ndarray:
        """Matrix with columns (excited, ground): maps eigen to computational basis."""
        return self._transform


def default_energy_basis() -> EnergyBasis:
    """Eigenbasis used by all bundled experiments.

    Excited state (|0> + sqrt(3)|1>)/2 and ground state (-sqrt(3)|0> + |1>)/2,
    the eigenpair of H = (omega/4) * (sqrt(3) X - Z).
    """
    half_root3 = math.sqrt(3.0) / 2.0
    return EnergyBasis(
        excited=np.array([0.5, half_root3], dtype=complex),
        ground=np.array([-half_root3, 0.5], dtype=complex),
    )


@dataclass(frozen=True, eq=False)
class Channel:
    """Immutable evolution descriptor.

    ``kind`` is one of 'noiseless', 'pdn' (phase damping) or 'adn'
    (amplitude damping). ``tau`` is the dimensionless evolution time per
    step (> 0) and ``t_dec`` the dimensionless decoherence time (> 0,
    ``math.inf`` allowed). A noiseless channel always carries
    ``t_dec = inf``; a damping kind with ``t_dec = inf`` behaves
    identically to the noiseless one.
    """

    kind: str
    tau: float
    t_dec: float = math.inf
    basis: EnergyBasis = field(default_factory=default_energy_basis)

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise ValueError(f"unknown channel kind {self.kind!r}, expected one of {NOISE_KINDS}")
        if not (math.isfinite(self.tau) and self.tau > 0.0):
            raise ValueError(f"tau must be positive and finite, got {self.tau}")
        if math.isnan(self.t_dec) or self.t_dec <= 0.0:
            raise ValueError(f"t_dec must be positive (inf allowed), got {self.t_dec}")
        if self.kind == "noiseless":
            object.__setattr__(self, "t_dec", math.inf)

    def decay_factor(self) -> float:
        """Coherence survival exp(-tau/t_dec) over one evolution step."""
        return math.exp(-self.tau / self.t_dec)


def hamiltonian_unitary(basis: EnergyBasis, tau: float) -> np.ndarray:
    """Propagator exp(-i H tau) in the computational basis.

    Evaluates exp(-i*omega*tau/2)|e><e| + exp(+i*omega*tau/2)|g><g| by
    eigen-decomposition; tau may be any finite real, including 0.
    """
    if not math.isfinite(tau):
        raise ValueError(f"tau must be finite, got {tau}")
    phase = np.exp(-0.5j * basis.omega * tau)
    excited_proj = np.outer(basis.excited, basis.excited.conj())
    ground_proj = np.outer(basis.ground, basis.ground.conj())
    return phase * excited_proj + phase.conjugate() * ground_proj


def kraus_pair(channel: Channel) -> tuple[np.ndarray, np.ndarray]:
    """Kraus operators (E0, E1) of the channel's noise part.

    For both damping kinds E0 = |g><g| + exp(-tau/t_dec)|e><e|; phase
    damping has E1 = sqrt(1 - exp(-2 tau/t_dec)) |e><e| while amplitude
    damping has E1 = sqrt(1 - exp(-2 tau/t_dec)) |g><e|. A noiseless
    channel returns (I, 0) by convention. The pair always satisfies
    E0^dag E0 + E1^dag E1 = I.
    """
    basis = channel.basis
    excited_proj = np.outer(basis.excited, basis.excited.conj())
    ground_proj = np.outer(basis.ground, basis.ground.conj())
    survive = channel.decay_factor()
    jump = math.sqrt(1.0 - survive * survive)
    first = ground_proj + survive * excited_proj
    if channel.kind == "adn":
        second = jump * np.outer(basis.ground, basis.excited.conj())
    else:
        # noiseless degenerates to jump = 0 here, i.e. (I, 0)
        second = jump * excited_proj
    return first, second


def apply_channel(channel: Channel, rho: np.ndarray) -> np.ndarray:
    """Evolve a density matrix through one step of the channel.

    Closed-form evaluation in the energy eigenbasis; assumes ``rho`` is a
    valid unit-trace density matrix.
    """
    basis = channel.basis
    eig_to_comp = basis.transform()
    rho_eig = eig_to_comp.conj().T @ rho @ eig_to_comp

    survive = channel.decay_factor()
    rotation = np.exp(-1j * basis.omega * channel.tau)
    off = survive * rotation * rho_eig[0, 1]
    excited_pop = rho_eig[0, 0].real
    if channel.kind == "adn":
        excited_pop *= survive * survive
        ground_pop = 1.0 - excited_pop
    else:
        ground_pop = rho_eig[1, 1].real

    evolved_eig = np.array(
        [[excited_pop, off], [off.conjugate(), ground_pop]], dtype=complex
    )
    return eig_to_comp @ evolved_eig @ eig_to_comp.conj().T


def measurement_prob_zero(channel: Channel, rho: np.ndarray) -> float:
    """Probability of outcome 0 when the protocol measures after evolution.

    Returns Tr[rho * apply_channel(channel, rho)], clamped into [0, 1].
    A raw value outside [-1e-12, 1 + 1e-12] indicates a broken channel or
    an invalid state and raises instead of being clamped.
    """
    evolved = apply_channel(channel, rho)
    # Tr[rho evolved] as a conjugated elementwise sum; rho is Hermitian.
    raw = np.vdot(rho, evolved).real
    if raw < -linalg.ATOL or raw > 1.0 + linalg.ATOL:
        raise ValueError(
            f"measurement probability {raw!r} outside tolerance band; "
            "channel or input state is invalid"
        )
    return min(max(raw, 0.0), 1.0)
