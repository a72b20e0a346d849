"""Single-realization reinforcement-learning loop.

The agent owns a unitary ``transform`` (the accumulated preparation
operator) and an exploration parameter ``w``. Each iteration prepares
rho = transform |b><b| transform^dag from a computational basis bit b,
evolves it through the channel, and simulates the protocol's
invert-and-measure step analytically through the outcome probability
P(0) = Tr[rho * E(rho)]. Outcome 0 rewards the agent (w shrinks by the
reward rate, transform unchanged); outcome 1 punishes it (w grows by the
punishment rate, capped at 1) and kicks the transform by a random
rotation whose Euler angles are uniform on [-w*pi, w*pi].

Random draws come from a numpy Generator and are consumed in a frozen,
documented order so that seeded runs are reproducible: one uniform on
[0, 1] for the measurement, then, only on punishment, the three angles
alpha (X), beta (Y), gamma (Z) in that order, each uniform on
[-w*pi, w*pi] with the pre-update w.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .channels import Channel, measurement_prob_zero
from .linalg import IDENTITY, axis_rotation, density_from_pure, overlap_magnitude


@dataclass
class AlgorithmParams:
    """Learning-rule parameters of a realization.

    ``reward_rate`` in (0, 1) shrinks w on outcome 0, ``punish_rate`` > 1
    grows it on outcome 1, ``iterations`` is the number of loop steps and
    ``basis_bit`` the computational basis state the preparation starts
    from. The reward/punishment rates are not fixed by the protocol; the
    defaults (0.9, 1.5) are this package's own choice.
    """

    reward_rate: float = 0.9
    punish_rate: float = 1.5
    iterations: int = 500
    basis_bit: int = 0

    def __post_init__(self):
        if not 0.0 < self.reward_rate < 1.0:
            raise ValueError(f"reward_rate must be in (0, 1), got {self.reward_rate}")
        if not self.punish_rate > 1.0:
            raise ValueError(f"punish_rate must be > 1, got {self.punish_rate}")
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")
        if self.basis_bit not in (0, 1):
            raise ValueError(f"basis_bit must be 0 or 1, got {self.basis_bit}")


@dataclass
class AgentState:
    """Mutable loop state: accumulated unitary, exploration parameter, step count."""

    transform: np.ndarray = field(default_factory=lambda: IDENTITY.copy())
    w: float = 1.0
    k: int = 0


@dataclass
class IterationRecord:
    """Per-iteration observables, indexed by the post-update step count k.

    ``f_e`` and ``f_g`` are the overlap magnitudes of the prepared state
    with the excited and ground eigenstates, ``f_max`` their maximum, and
    ``p_zero`` the outcome-0 probability the measurement draw used. The
    ``*_b1`` fidelities describe the state prepared from the flipped
    basis bit and are filled only when a run asks for them.
    """

    k: int
    outcome: int
    w: float
    f_e: float
    f_g: float
    f_max: float
    p_zero: float
    f_e_b1: float | None = None
    f_g_b1: float | None = None


def init_agent() -> AgentState:
    """Fresh agent: identity transform, exploration parameter 1, step 0."""
    return AgentState()


def random_rotation(transform: np.ndarray, w: float, rng: np.random.Generator) -> np.ndarray:
    """Random exploration rotation conjugated into the agent's frame.

    Draws alpha, beta, gamma uniformly on [-w*pi, w*pi] (in that order)
    and returns
    transform @ Ry(beta) @ Rz(gamma) @ Rx(alpha) @ transform^dag.
    At w = 0 this is the identity.
    """
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"exploration parameter must be in [0, 1], got {w}")
    kick = _exploration_kick(w, rng)
    return transform @ kick @ transform.conj().T


def _exploration_kick(w: float, rng: np.random.Generator) -> np.ndarray:
    """Ry(beta) Rz(gamma) Rx(alpha) with angles drawn alpha, beta, gamma."""
    half_width = w * math.pi
    alpha = rng.uniform(-half_width, half_width)
    beta = rng.uniform(-half_width, half_width)
    gamma = rng.uniform(-half_width, half_width)
    return axis_rotation("Y", beta) @ axis_rotation("Z", gamma) @ axis_rotation("X", alpha)


def step(
    state: AgentState,
    channel: Channel,
    params: AlgorithmParams,
    rng: np.random.Generator,
) -> tuple[AgentState, IterationRecord]:
    """Advance the loop by one iteration.

    Returns the successor state and the record of this iteration. The
    record's fidelities describe the post-update transform, i.e. the
    state the next iteration will prepare.
    """
    rho = density_from_pure(state.transform[:, params.basis_bit])
    p_zero = measurement_prob_zero(channel, rho)
    chi = rng.uniform(0.0, 1.0)

    if chi <= p_zero:
        outcome = 0
        w_next = params.reward_rate * state.w
        transform_next = state.transform
    else:
        outcome = 1
        w_next = min(params.punish_rate * state.w, 1.0)
        # Angle interval uses the pre-update w.
        transform_next = state.transform @ _exploration_kick(state.w, rng)

    basis = channel.basis
    f_e = overlap_magnitude(basis.excited, transform_next, params.basis_bit)
    f_g = overlap_magnitude(basis.ground, transform_next, params.basis_bit)
    record = IterationRecord(
        k=state.k + 1,
        outcome=outcome,
        w=w_next,
        f_e=f_e,
        f_g=f_g,
        f_max=max(f_e, f_g),
        p_zero=p_zero,
    )
    return AgentState(transform_next, w_next, state.k + 1), record


def run_realization(
    channel: Channel,
    params: AlgorithmParams,
    seed: int,
    *,
    dual_basis: bool = False,
) -> list[IterationRecord]:
    """Run one full realization and return its iteration records.

    Fully deterministic for a given seed. With ``dual_basis`` the records
    also carry the fidelities of the state prepared from the flipped
    basis bit.
    """
    rng = np.random.default_rng(seed)
    state = init_agent()
    flipped = 1 - params.basis_bit
    records = []
    for _ in range(params.iterations):
        state, record = step(state, channel, params, rng)
        if dual_basis:
            record.f_e_b1 = overlap_magnitude(channel.basis.excited, state.transform, flipped)
            record.f_g_b1 = overlap_magnitude(channel.basis.ground, state.transform, flipped)
        records.append(record)
    return records
