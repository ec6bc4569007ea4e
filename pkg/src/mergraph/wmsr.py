"""Discrete-time resilient consensus with trimming, plus adversary models.

Agents hold scalar states and update synchronously.  A normal agent running
the trimmed update sorts the values received from its neighbors, discards up
to F of them strictly above its own state (the largest ones) and up to F
strictly below (the smallest ones), then moves to the uniform average of its
own state and the retained values.  With F = 0 this degenerates to plain
uniform averaging.

Misbehaving agents never follow the update.  A malicious agent broadcasts a
single forged value per step to all neighbors; a Byzantine agent may send a
different value to every receiver.  Misbehavior models are value-level:
rounds are synchronous and lossless, so no message objects are needed.

Determinism: given an identical configuration (seed included) a run produces
a bit-identical trajectory.  Randomness enters only through seeded initial
states drawn from numpy's PCG64 generator, whose stream is stable across
platforms; regression data should still store full trajectories rather than
just seeds.

Trajectory CSV format: header ``t,node_0,...,node_{n-1}``, one row per step
including t = 0, values rendered with 17 significant digits (lossless for
float64).  The role sidecar is ``{"roles": [...], "F": <int>}``.  A
Byzantine agent has no single state, so its logged value at each step is the
one it sends to its lowest-indexed neighbor.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .graph_core import Graph


class AgentRole(str, Enum):
    NORMAL = "normal"
    MALICIOUS = "malicious"
    BYZANTINE = "byzantine"


# -- update rules --------------------------------------------------------------

def nominal_step(own: float, neighbor_values: Sequence[float]) -> float:
    """Uniform-weight convex combination of own state and all neighbor values."""
    total = own + sum(neighbor_values)
    return total / (1 + len(neighbor_values))


def wmsr_retained(own: float, neighbor_values: Sequence[float], f: int) -> list[float]:
    """Neighbor values surviving the trim: drop up to ``f`` strictly above own
    (largest first) and up to ``f`` strictly below (smallest first).

    The survivors keep their input order, so with f = 0 the subsequent
    average reproduces :func:`nominal_step` bit-for-bit.  Ties among equal
    extremes are broken by dropping earlier-positioned duplicates first; any
    consistent rule leaves the same retained multiset.
    """
    if f < 0:
        raise ValueError("f must be non-negative")
    above = sorted(v for v in neighbor_values if v > own)
    below = sorted(v for v in neighbor_values if v < own)
    drop: dict[float, int] = {}
    for v in above[max(0, len(above) - f):]:
        drop[v] = drop.get(v, 0) + 1
    for v in below[: min(f, len(below))]:
        drop[v] = drop.get(v, 0) + 1
    kept = []
    for v in neighbor_values:
        if drop.get(v, 0) > 0:
            drop[v] -= 1
            continue
        kept.append(v)
    return kept


def wmsr_step(own: float, neighbor_values: Sequence[float], f: int) -> float:
    """One trimmed-consensus update; result lies in [min, max] of own + retained."""
    kept = wmsr_retained(own, neighbor_values, f)
    return (own + sum(kept)) / (1 + len(kept))


# -- adversary scope models ------------------------------------------------------

def is_f_total(roles: Sequence[AgentRole], f: int) -> bool:
    """True iff at most ``f`` agents misbehave in total."""
    return sum(1 for role in roles if role is not AgentRole.NORMAL) <= f


def is_f_local(g: Graph, s: Iterable[int], f: int) -> bool:
    """True iff every node outside ``s`` has at most ``f`` neighbors inside it."""
    mask = g.subset_mask(s)
    for i in range(g.n):
        if mask >> i & 1:
            continue
        if (g.adjacency[i] & mask).bit_count() > f:
            return False
    return True


# -- adversary strategies --------------------------------------------------------

def trig_malicious_value(agent: int, t: int) -> float:
    """Forged broadcast: 1080*cos(t/5) for even agents, 1080*sin(t/5) for odd."""
    phase = t / 5
    return 1080.0 * (math.cos(phase) if agent % 2 == 0 else math.sin(phase))


def byzantine_split_value(
    agent: int, receiver: int, n: int, t: int, scenario: str
) -> float:
    """Per-receiver Byzantine values for the two packaged attack scenarios.

    ``"gamma"``: send 100 to receivers with index <= ceil(n/2) and 0 to the
    rest.  ``"gamma_gamma"``: agent 3 sends 100 to everyone, the other
    misbehaving agents send 0 (Byzantine by role, constant by choice).
    """
    if scenario == "gamma":
        return 100.0 if receiver <= (n + 1) // 2 else 0.0
    if scenario == "gamma_gamma":
        return 100.0 if agent == 3 else 0.0
    raise ValueError(f"unknown scenario {scenario!r}")


@dataclass(frozen=True)
class TrigMalicious:
    """Trig-wave broadcast attack; one common value per step."""

    def malicious_value(self, agent: int, t: int) -> float:
        return trig_malicious_value(agent, t)


@dataclass(frozen=True)
class SplitByzantine:
    """Send 100 to low-indexed receivers, 0 to the rest."""

    n: int

    def byzantine_value(self, agent: int, receiver: int, t: int) -> float:
        return byzantine_split_value(agent, receiver, self.n, t, "gamma")


@dataclass(frozen=True)
class ConstByzantine:
    """Agent 3 pushes 100, other misbehaving agents push 0."""

    def byzantine_value(self, agent: int, receiver: int, t: int) -> float:
        return byzantine_split_value(agent, receiver, 0, t, "gamma_gamma")


# -- configuration and trajectories ----------------------------------------------

@dataclass(frozen=True)
class SimConfig:
    """Everything one run depends on; two equal configs give identical runs."""

    graph: Graph
    roles: tuple[AgentRole, ...]
    f: int
    steps: int
    seed: int
    initial_states: tuple[float, ...]
    weight_rule: str = "uniform"
    alpha_floor: float = 0.0

    def __post_init__(self) -> None:
        n = self.graph.n
        if len(self.roles) != n:
            raise ValueError("roles must cover every node")
        if len(self.initial_states) != n:
            raise ValueError("initial_states must cover every node")
        if self.f < 0:
            raise ValueError("f must be non-negative")
        if self.steps < 1:
            raise ValueError("steps must be positive")
        if self.weight_rule != "uniform":
            raise ValueError("only the uniform weight rule is implemented")
        if not (0.0 <= self.alpha_floor < 1.0):
            raise ValueError("alpha_floor must lie in [0, 1)")

    @property
    def adversaries(self) -> tuple[int, ...]:
        return tuple(
            i for i, role in enumerate(self.roles) if role is not AgentRole.NORMAL
        )

    def claims_f_total(self) -> bool:
        return is_f_total(self.roles, self.f)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Per-agent states over time, with roles attached for interpretation."""

    states: np.ndarray  # shape (steps+1, n)
    roles: tuple[AgentRole, ...]
    f: int

    @property
    def steps(self) -> int:
        return self.states.shape[0] - 1

    @property
    def n(self) -> int:
        return self.states.shape[1]

    @property
    def normal_indices(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r is AgentRole.NORMAL)

    def normal_states(self) -> np.ndarray:
        idx = self.normal_indices
        if not idx:
            raise ValueError("trajectory has no normal agents")
        return self.states[:, list(idx)]

    def spread(self, t: int) -> float:
        row = self.normal_states()[t]
        return float(row.max() - row.min())

    def spreads(self) -> np.ndarray:
        rows = self.normal_states()
        return rows.max(axis=1) - rows.min(axis=1)

    def hull_bounds(self) -> tuple[float, float]:
        """(m0, M0): min and max of the normal agents' initial states."""
        row = self.normal_states()[0]
        return float(row.min()), float(row.max())

    def converged(self, tol: float = 1e-6) -> bool:
        return self.spread(self.steps) < tol


def run_simulation(config: SimConfig, adversary: object | None = None) -> Trajectory:
    """Run synchronous rounds: everyone emits, then normal agents trim-average.

    Normal agents emit their current state; malicious agents emit their
    strategy's broadcast value; Byzantine agents emit per-receiver values.
    The strategy object must provide ``malicious_value(agent, t)`` and/or
    ``byzantine_value(agent, receiver, t)`` for the roles present, otherwise
    the role/strategy pairing is rejected.
    """
    g = config.graph
    n = g.n
    roles = config.roles
    if any(r is AgentRole.MALICIOUS for r in roles) and not hasattr(
        adversary, "malicious_value"
    ):
        raise ValueError("malicious roles present but strategy has no malicious_value")
    if any(r is AgentRole.BYZANTINE for r in roles) and not hasattr(
        adversary, "byzantine_value"
    ):
        raise ValueError("byzantine roles present but strategy has no byzantine_value")

    neighbor_lists = [sorted(g.neighbors(i)) for i in range(n)]

    def sent(j: int, receiver: int, t: int, x: list[float]) -> float:
        role = roles[j]
        if role is AgentRole.NORMAL:
            return x[j]
        if role is AgentRole.MALICIOUS:
            return adversary.malicious_value(j, t)
        return adversary.byzantine_value(j, receiver, t)

    states = np.empty((config.steps + 1, n), dtype=np.float64)
    x = [float(v) for v in config.initial_states]
    for t in range(config.steps + 1):
        for i in range(n):
            if roles[i] is AgentRole.NORMAL:
                states[t, i] = x[i]
            elif neighbor_lists[i]:
                states[t, i] = sent(i, neighbor_lists[i][0], t, x)
            else:
                states[t, i] = 0.0
        if t == config.steps:
            break
        new_x = list(x)
        for i in range(n):
            if roles[i] is not AgentRole.NORMAL:
                continue
            received = [sent(j, i, t, x) for j in neighbor_lists[i]]
            kept = wmsr_retained(x[i], received, config.f)
            weight = 1.0 / (1 + len(kept))
            if weight < config.alpha_floor:
                raise ValueError(
                    f"uniform weight {weight} fell below alpha_floor {config.alpha_floor}"
                )
            new_x[i] = (x[i] + sum(kept)) * weight
        x = new_x
    return Trajectory(states=states, roles=roles, f=config.f)


# -- scenario presets --------------------------------------------------------------

SCENARIO_TRIG_MALICIOUS = "viiA-malicious"
SCENARIO_BYZ_SPLIT = "viiB-gamma"
SCENARIO_BYZ_CONST = "viiB-gammagamma"
SCENARIO_NONE = "none"
SCENARIOS = (
    SCENARIO_TRIG_MALICIOUS,
    SCENARIO_BYZ_SPLIT,
    SCENARIO_BYZ_CONST,
    SCENARIO_NONE,
)

# Demonstration single-edge removals per (scenario, n); each reduces the
# matching construction's robustness below what the scenario's F requires.
DEFAULT_REMOVAL_EDGES = {
    (SCENARIO_BYZ_SPLIT, 9): (3, 8),
    (SCENARIO_BYZ_SPLIT, 10): (4, 9),
    (SCENARIO_BYZ_CONST, 9): (7, 8),
    (SCENARIO_BYZ_CONST, 10): (0, 2),
}


def scenario_default_f(scenario: str) -> int | None:
    if scenario == SCENARIO_BYZ_SPLIT:
        return 2
    if scenario == SCENARIO_BYZ_CONST:
        return 4
    if scenario == SCENARIO_NONE:
        return 0
    if scenario == SCENARIO_TRIG_MALICIOUS:
        return None  # depends on the graph; must be given explicitly
    raise ValueError(f"unknown scenario {scenario!r}")


def scenario_roles(n: int, scenario: str, f: int) -> tuple[AgentRole, ...]:
    roles = [AgentRole.NORMAL] * n
    if scenario == SCENARIO_TRIG_MALICIOUS:
        if not (1 <= f < n):
            raise ValueError("trig-malicious scenario needs 1 <= f < n")
        for i in range(f):
            roles[i] = AgentRole.MALICIOUS
    elif scenario == SCENARIO_BYZ_SPLIT:
        for i in (0, 1):
            roles[i] = AgentRole.BYZANTINE
    elif scenario == SCENARIO_BYZ_CONST:
        for i in (0, 1, 2, 3):
            roles[i] = AgentRole.BYZANTINE
    elif scenario != SCENARIO_NONE:
        raise ValueError(f"unknown scenario {scenario!r}")
    return tuple(roles)


def initial_states(n: int, scenario: str, seed: int) -> np.ndarray:
    """Seeded per-node initial states for a scenario.

    Draws are consumed in ascending node order, one per drawn node, so the
    values are reproducible.  Nodes whose role the scenario fixes as
    misbehaving get a cosmetic 0.0 (their entries never influence a run:
    trajectories log their emitted values instead).
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    out = np.zeros(n, dtype=np.float64)
    if scenario in (SCENARIO_TRIG_MALICIOUS, SCENARIO_NONE):
        out[:] = rng.uniform(-1000.0, 1000.0, size=n)
        return out
    if scenario == SCENARIO_BYZ_SPLIT:
        if n < 8:
            raise ValueError("split-Byzantine scenario needs n >= 8")
        for i in range(2, n):
            if i == n - 1:
                lo, hi = 8.0, 14.0
            elif i <= 5:
                lo, hi = 15.0, 100.0
            else:
                lo, hi = 0.0, 7.0
            out[i] = rng.uniform(lo, hi)
        return out
    if scenario == SCENARIO_BYZ_CONST:
        if n < 6:
            raise ValueError("constant-Byzantine scenario needs n >= 6")
        for i in range(4, n):
            lo, hi = (50.0, 100.0) if i <= n - 2 else (1.0, 50.0)
            out[i] = rng.uniform(lo, hi)
        return out
    raise ValueError(f"unknown scenario {scenario!r}")


def scenario_strategy(n: int, scenario: str):
    if scenario == SCENARIO_TRIG_MALICIOUS:
        return TrigMalicious()
    if scenario == SCENARIO_BYZ_SPLIT:
        return SplitByzantine(n)
    if scenario == SCENARIO_BYZ_CONST:
        return ConstByzantine()
    if scenario == SCENARIO_NONE:
        return None
    raise ValueError(f"unknown scenario {scenario!r}")


def build_scenario(
    graph: Graph, scenario: str, f: int | None = None, steps: int = 30, seed: int = 0
) -> tuple[SimConfig, object | None]:
    """Assemble a config + strategy for one of the packaged scenarios."""
    if f is None:
        f = scenario_default_f(scenario)
        if f is None:
            raise ValueError(f"scenario {scenario!r} needs an explicit f")
    roles = scenario_roles(graph.n, scenario, f)
    if sum(1 for r in roles if r is not AgentRole.NORMAL) > f:
        raise ValueError("scenario claims f-total misbehavior but has more adversaries than f")
    config = SimConfig(
        graph=graph,
        roles=roles,
        f=f,
        steps=steps,
        seed=seed,
        initial_states=tuple(float(v) for v in initial_states(graph.n, scenario, seed)),
        alpha_floor=1.0 / graph.n,
    )
    return config, scenario_strategy(graph.n, scenario)


# -- serialization ------------------------------------------------------------------

def trajectory_to_csv(traj: Trajectory) -> str:
    header = "t," + ",".join(f"node_{i}" for i in range(traj.n))
    lines = [header]
    for t in range(traj.steps + 1):
        rendered = ",".join(format(v, ".17g") for v in traj.states[t])
        lines.append(f"{t},{rendered}")
    return "\n".join(lines) + "\n"


def trajectory_states_from_csv(text: str) -> np.ndarray:
    lines = [ln for ln in text.strip().splitlines() if ln]
    if not lines or not lines[0].startswith("t,"):
        raise ValueError("not a trajectory CSV")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        rows.append([float(c) for c in cells[1:]])
    return np.asarray(rows, dtype=np.float64)


def roles_to_json(traj: Trajectory) -> str:
    payload = {"roles": [r.value for r in traj.roles], "F": traj.f}
    return json.dumps(payload) + "\n"


def trajectory_metrics(traj: Trajectory, tol: float = 1e-6) -> dict:
    spreads = traj.spreads()
    m0, big_m0 = traj.hull_bounds()
    initial = float(spreads[0])
    final = float(spreads[-1])
    normal = traj.normal_states()
    metrics = {
        "f": traj.f,
        "steps": traj.steps,
        "hull": [m0, big_m0],
        "spread": [float(v) for v in spreads],
        "spread_initial": initial,
        "spread_final": final,
        "spread_ratio": (final / initial) if initial > 0 else None,
        "within_hull": bool((normal >= m0).all() and (normal <= big_m0).all()),
        "tol": tol,
        "converged": final < tol,
    }
    return metrics
