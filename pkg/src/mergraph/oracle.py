"""Exact robustness decisions by exhaustive subset-pair enumeration.

A nonempty node set S is r-reachable when some member has at least r
neighbors outside S.  A graph is r-robust when, for every pair of disjoint
nonempty node sets, at least one of the two is r-reachable.  The (r, s)
variant counts, per set, the members with >= r outside neighbors
(``reachable_count``) and requires for every pair that one set consists
entirely of such members or that the two counts sum to at least s.

Everything here is decided exactly.  Per-subset reachable counts are
tabulated once over all 2^n subsets (vectorized with numpy), the yes/no
decision is then made with a subset-sum transform instead of walking all
~3^n/2 pairs, and only failing graphs pay for a scan to recover the first
counterexample in canonical enumeration order.

Canonical enumeration order: each node gets a digit in {0 = unassigned,
1 = S1, 2 = S2}; digit vectors are compared lexicographically with node 0
most significant, and the lowest-indexed assigned node is required to sit in
S1 (the definitions are symmetric in S1/S2, so this halves the space).
Witnesses are the first failing pair in this order, making failures
reproducible across runs and platforms.

Node counts above ``EXACT_ENUMERATION_CAP`` are rejected: the subset tables
and worst-case witness scans grow as 2^n and 3^n, so exhaustive checking is
a desk-scale tool by nature.  Single-node graphs are degenerate: no disjoint
nonempty pair exists, so every check holds vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Literal

import numpy as np

from .graph_core import CapExceededError, Edge, Graph

EXACT_ENUMERATION_CAP = 16


@dataclass(frozen=True)
class SubsetPair:
    """A disjoint pair of nonempty node sets; the unit the definitions quantify over."""

    s1: frozenset[int]
    s2: frozenset[int]

    def __post_init__(self) -> None:
        if not self.s1 or not self.s2:
            raise ValueError("both subsets must be nonempty")
        if self.s1 & self.s2:
            raise ValueError("subsets must be disjoint")


@dataclass(frozen=True)
class RobustnessVerdict:
    """Outcome of an exact check; carries a counterexample iff it failed."""

    holds: bool
    r: int
    s: int | None = None
    witness: SubsetPair | None = None


@dataclass(frozen=True)
class MinimalitySweep:
    """Per-edge verdicts for single-edge removals against a fixed target."""

    kind: str
    r: int
    s: int | None
    entries: tuple[tuple[Edge, RobustnessVerdict], ...]

    @property
    def minimal(self) -> bool:
        return all(not verdict.holds for _, verdict in self.entries)


def _check_cap(g: Graph) -> None:
    if g.n > EXACT_ENUMERATION_CAP:
        raise CapExceededError(
            f"exact robustness check infeasible for n={g.n}"
            f" (cap is {EXACT_ENUMERATION_CAP} nodes)"
        )


def _subset_mask(g: Graph, s: Iterable[int]) -> int:
    mask = g.subset_mask(s)
    if mask == 0:
        raise ValueError("subset must be nonempty")
    return mask


def reachable_count(g: Graph, s: Iterable[int], r: int) -> int:
    """Number of nodes in ``s`` with at least ``r`` neighbors outside ``s``."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    mask = _subset_mask(g, s)
    outside = ((1 << g.n) - 1) ^ mask
    count = 0
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        if (g.adjacency[i] & outside).bit_count() >= r:
            count += 1
        m &= m - 1
    return count


def is_r_reachable(g: Graph, s: Iterable[int], r: int) -> bool:
    """True iff some node of ``s`` has at least ``r`` neighbors outside ``s``."""
    return reachable_count(g, s, r) >= 1


# -- per-subset tables and pair-existence transforms --------------------------

def _x_count_table(g: Graph, r: int) -> np.ndarray:
    """``x[S]`` = number of nodes in subset ``S`` with >= r neighbors outside S."""
    n = g.n
    idx = np.arange(1 << n, dtype=np.uint64)
    one = np.uint64(1)
    x = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        a = np.uint64(g.adjacency[i])
        outside_deg = np.bitwise_count(a & ~idx)
        member = ((idx >> np.uint64(i)) & one).astype(bool)
        x += (member & (outside_deg >= r)).astype(np.int64)
    return x


def _subset_or(flags: np.ndarray, n: int) -> np.ndarray:
    """``out[M]`` = OR of ``flags[S]`` over all subsets S of M (zeta transform)."""
    f = flags.copy()
    for i in range(n):
        step = 1 << i
        fr = f.reshape(-1, 2 * step)
        fr[:, step:] |= fr[:, :step]
    return f


def _subset_min(vals: np.ndarray, n: int) -> np.ndarray:
    """``out[M]`` = min of ``vals[S]`` over all subsets S of M."""
    v = vals.copy()
    for i in range(n):
        step = 1 << i
        vr = v.reshape(-1, 2 * step)
        vr[:, step:] = np.minimum(vr[:, step:], vr[:, :step])
    return v


_UNCONSTRAINED = np.int64(1) << 40


def _r_robust_decision(g: Graph, r: int) -> bool:
    """Fast yes/no: does some disjoint nonempty pair have both sets non-reachable?"""
    x = _x_count_table(g, r)
    nonreach = x == 0
    nonreach[0] = False
    if not nonreach.any():
        return True
    reachable_free = _subset_or(nonreach, g.n)
    full = (1 << g.n) - 1
    bad = np.nonzero(nonreach)[0]
    return not bool(reachable_free[full ^ bad].any())


def _rs_tables(g: Graph, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Reachable counts plus the deficiency flag (some member lacks r outside)."""
    x = _x_count_table(g, r)
    sizes = np.bitwise_count(np.arange(1 << g.n, dtype=np.uint64)).astype(np.int64)
    deficient = x < sizes
    return x, deficient


def _min_partner_sum(g: Graph, x: np.ndarray, deficient: np.ndarray) -> int | None:
    """Smallest ``x[S1] + x[S2]`` over disjoint pairs with both sets deficient.

    Returns None when no such pair exists (every pair then satisfies one of
    the two all-members conditions).
    """
    if not deficient.any():
        return None
    partner_min = _subset_min(np.where(deficient, x, _UNCONSTRAINED), g.n)
    full = (1 << g.n) - 1
    ds = np.nonzero(deficient)[0]
    partner = partner_min[full ^ ds]
    valid = partner < _UNCONSTRAINED
    if not valid.any():
        return None
    return int((x[ds][valid] + partner[valid]).min())


# -- canonical pair enumeration ----------------------------------------------

def subset_pair_assignments(n: int) -> Iterator[tuple[int, int]]:
    """Yield ``(s1_mask, s2_mask)`` for every disjoint nonempty unordered pair.

    Pairs appear exactly once, in the canonical lexicographic order described
    in the module docstring.
    """

    def rec(i: int, m1: int, m2: int) -> Iterator[tuple[int, int]]:
        if i == n:
            if m1 and m2:
                yield (m1, m2)
            return
        bit = 1 << i
        yield from rec(i + 1, m1, m2)
        yield from rec(i + 1, m1 | bit, m2)
        if m1:
            yield from rec(i + 1, m1, m2 | bit)

    return rec(0, 0, 0)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        out.add((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return frozenset(out)


def _pair_from_masks(m1: int, m2: int) -> SubsetPair:
    return SubsetPair(_mask_to_set(m1), _mask_to_set(m2))


def _first_failing_r(g: Graph, r: int) -> SubsetPair:
    x = _x_count_table(g, r)
    reach = (x >= 1).tolist()
    for m1, m2 in subset_pair_assignments(g.n):
        if not reach[m1] and not reach[m2]:
            return _pair_from_masks(m1, m2)
    raise AssertionError("decision said not robust but no failing pair found")


def _first_failing_rs(g: Graph, r: int, s: int) -> SubsetPair:
    x_arr, deficient_arr = _rs_tables(g, r)
    x = x_arr.tolist()
    deficient = deficient_arr.tolist()
    for m1, m2 in subset_pair_assignments(g.n):
        if deficient[m1] and deficient[m2] and x[m1] + x[m2] <= s - 1:
            return _pair_from_masks(m1, m2)
    raise AssertionError("decision said not robust but no failing pair found")


# -- public checks -------------------------------------------------------------

def is_r_robust(g: Graph, r: int) -> RobustnessVerdict:
    """Exact r-robustness check with a counterexample witness on failure."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    _check_cap(g)
    if _r_robust_decision(g, r):
        return RobustnessVerdict(True, r)
    return RobustnessVerdict(False, r, witness=_first_failing_r(g, r))


def max_r_robustness(g: Graph) -> int:
    """Largest r >= 1 for which the graph is r-robust, else 0.

    Descends linearly from ceil(n/2), the largest value any graph on n nodes
    can achieve; 0 signals "not even 1-robust" (disconnected or edgeless).
    """
    _check_cap(g)
    gamma = (g.n + 1) // 2
    for r in range(gamma, 0, -1):
        if _r_robust_decision(g, r):
            return r
    return 0


def is_rs_robust(g: Graph, r: int, s: int) -> RobustnessVerdict:
    """Exact (r, s)-robustness check with a counterexample witness on failure."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    if not (1 <= s <= g.n):
        raise ValueError(f"s must lie in [1, {g.n}]")
    _check_cap(g)
    x, deficient = _rs_tables(g, r)
    worst = _min_partner_sum(g, x, deficient)
    if worst is None or worst >= s:
        return RobustnessVerdict(True, r, s=s)
    return RobustnessVerdict(False, r, s=s, witness=_first_failing_rs(g, r, s))


def max_s_given_r(g: Graph, r: int) -> int:
    """Largest s in [1, n] with the graph (r, s)-robust; 0 if not even (r, 1).

    (r, s)-robustness is monotone in s, so the answer is the smallest
    reachable-count sum over pairs where neither set has all members
    reachable, capped at n.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    _check_cap(g)
    x, deficient = _rs_tables(g, r)
    worst = _min_partner_sum(g, x, deficient)
    if worst is None:
        return g.n
    return min(worst, g.n)


def minimality_sweep(
    g: Graph,
    kind: Literal["r", "rs"],
    r: int,
    s: int | None = None,
) -> MinimalitySweep:
    """Re-check the target robustness after each single-edge removal.

    The input graph must satisfy the target; the sweep then reports, edge by
    edge in lexicographic order, whether the removal breaks it.  ``minimal``
    is True when every removal does.
    """
    if kind not in ("r", "rs"):
        raise ValueError("kind must be 'r' or 'rs'")
    if kind == "rs":
        if s is None:
            raise ValueError("kind 'rs' needs a target s")
        baseline = is_rs_robust(g, r, s)
    else:
        if s is not None:
            raise ValueError("kind 'r' takes no s")
        baseline = is_r_robust(g, r)
    if not baseline.holds:
        raise ValueError("graph does not satisfy the target robustness to begin with")
    entries = []
    for e in sorted(g.edges):
        h = g.remove_edge(*e)
        verdict = is_rs_robust(h, r, s) if kind == "rs" else is_r_robust(h, r)
        entries.append((e, verdict))
    return MinimalitySweep(kind, r, s, tuple(entries))


def all_disjoint_pairs(n: int) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """Unordered disjoint nonempty pairs via itertools, for small-n cross-checks.

    Independent of :func:`subset_pair_assignments`; tests use it to confirm
    the canonical enumerator is complete and duplicate-free.
    """
    nodes = list(range(n))
    seen = set()
    for k1 in range(1, n + 1):
        for s1 in combinations(nodes, k1):
            rest = [v for v in nodes if v not in s1]
            for k2 in range(1, len(rest) + 1):
                for s2 in combinations(rest, k2):
                    key = frozenset((frozenset(s1), frozenset(s2)))
                    if key in seen:
                        continue
                    seen.add(key)
                    yield frozenset(s1), frozenset(s2)
