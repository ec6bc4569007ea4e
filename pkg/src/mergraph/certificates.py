"""Closed-form necessary conditions for maximally robust graphs.

For a graph on n nodes, gamma = ceil(n/2) is the largest achievable
r-robustness.  Several cheap structural conditions are necessary at that
level, and they are collected here as certificate checks:

* edge-count floors for gamma-robustness (odd and even n) and their
  generalization to arbitrary r, which also yield a fast upper bound on any
  graph's robustness from its edge count alone;
* minimum-degree and edge floors for (r, r)-robustness;
* clique-size floors, including the one obtained by combining the
  (gamma, gamma) edge floor with exact Turán numbers;
* a dense-induced-subgraph requirement for even n;
* an exact if-and-only-if test for (gamma, gamma)-robustness via the
  complement (see :func:`prop1_gamma_gamma_check`).

All checks except the last are necessary only: passing never proves
robustness, failing always disproves it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Literal

from .graph_core import CapExceededError, Graph, complement, max_clique_size

Parity = Literal["odd", "even", "unknown"]


def gamma_of(n: int) -> int:
    """ceil(n/2), the maximum r-robustness achievable on n nodes."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n + 1) // 2


def edge_lb_gamma_odd(gamma: int) -> int:
    """Minimum edges of a gamma-robust graph on n = 2*gamma - 1 (odd) nodes."""
    if gamma < 1:
        raise ValueError("gamma must be positive")
    return 3 * gamma * (gamma - 1) // 2


def edge_lb_gamma_even(gamma: int) -> int:
    """Minimum edges of a gamma-robust graph on n = 2*gamma (even) nodes."""
    if gamma < 1:
        raise ValueError("gamma must be positive")
    return (gamma * (3 * gamma - 2) + 2) // 2


def edge_lb_any_r(r: int, parity: Parity = "unknown") -> int:
    """Edge floor for any r-robust graph; the even-n form is strictly stronger."""
    if r < 1:
        raise ValueError("r must be positive")
    if parity == "even":
        return edge_lb_gamma_even(r)
    return edge_lb_gamma_odd(r)


def r_upper_bound_from_edges(n: int, m: int) -> int:
    """Largest r whose edge floor fits in m edges, clamped to ceil(n/2).

    A quick upper bound on robustness from counting alone: any r-robust graph
    must carry the r-level edge floor, so levels whose floor exceeds m are
    ruled out.  Returns 0 when even the r = 1 floor fails.
    """
    if m < 0:
        raise ValueError("edge count must be non-negative")
    parity: Parity = "even" if n % 2 == 0 else "odd"
    best = 0
    for r in range(1, gamma_of(n) + 1):
        if edge_lb_any_r(r, parity) <= m:
            best = r
        else:
            break
    return best


def min_degree_lb_rs(r: int, s: int) -> int:
    """Minimum-degree floor for (r, s)-robust graphs."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    return 2 * r - 2 if s >= r else r + s - 1


def edge_lb_gamma_gamma(n: int) -> int:
    """Minimum edges of a (gamma, gamma)-robust graph on n nodes.

    Odd n forces the complete graph; even n needs 2*gamma*(gamma-1) edges
    from the degree floor plus ceil(gamma/2) more.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    gamma = gamma_of(n)
    if n % 2 == 1:
        return (gamma - 1) * (2 * gamma - 1)
    return 2 * gamma * (gamma - 1) + (gamma + 1) // 2


def turan_number(n: int, k: int) -> int:
    """Maximum edges of an n-node graph with no k-clique (k >= 2).

    Realized by the complete (k-1)-partite graph with balanced parts; counted
    exactly rather than through the quadratic upper-bound form, which is loose
    whenever k - 1 does not divide n.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    parts = k - 1
    if parts >= n:
        return n * (n - 1) // 2
    q, rem = divmod(n, parts)
    internal = rem * comb(q + 1, 2) + (parts - rem) * comb(q, 2)
    return comb(n, 2) - internal


def turan_clique_threshold(gamma: int) -> int:
    """Clique size every (gamma, gamma)-robust even-n graph must contain.

    Largest k such that the (gamma, gamma) edge floor strictly exceeds the
    exact Turán number for k-clique-free graphs on n = 2*gamma nodes; every
    graph meeting the floor is then forced to contain a k-clique.  Evaluates
    to 2*gamma - floor(gamma/2), which the minimal constructions attain with
    equality, and is never below the coarser floor(4*gamma/3) + 1 estimate.
    """
    if gamma < 1:
        raise ValueError("gamma must be positive")
    n = 2 * gamma
    floor_edges = edge_lb_gamma_gamma(n)
    best = 2
    for k in range(2, n + 1):
        if floor_edges > turan_number(n, k):
            best = k
        else:
            break
    return best


def necessary_clique_size(n: int) -> int:
    """Clique size every gamma-robust graph on n nodes must contain."""
    if n < 2:
        raise ValueError("n must be at least 2")
    gamma = gamma_of(n)
    if n % 2 == 1:
        return gamma + 1
    return (gamma + 4) // 2


def lemma4_dense_subgraph_holds(g: Graph, *, max_subsets: int = 2_000_000) -> bool:
    """Even-n check: some (gamma+1)-node subset induces >= floor((gamma^2+2)/2) edges.

    Necessary for gamma-robustness on even n.  Enumerates candidate subsets
    directly, so it rejects inputs where C(n, gamma+1) exceeds the budget.
    """
    if g.n % 2 != 0:
        raise ValueError("dense-subgraph condition applies to even n only")
    gamma = g.n // 2
    k = gamma + 1
    if comb(g.n, k) > max_subsets:
        raise CapExceededError(
            f"C({g.n}, {k}) subsets exceed the enumeration budget {max_subsets}"
        )
    need = (gamma * gamma + 2) // 2
    adj = g.adjacency
    for subset in combinations(range(g.n), k):
        mask = 0
        for i in subset:
            mask |= 1 << i
        edges = sum((adj[i] & mask).bit_count() for i in subset) // 2
        if edges >= need:
            return True
    return False


def prop1_gamma_gamma_check(g: Graph) -> bool:
    """Exact (gamma, gamma)-robustness test, if and only if.

    Odd n: true exactly for the complete graph.  Even n: true exactly when
    the complement has maximum degree <= 1 and at most floor(gamma/2) edges.
    The even case works because the minimal (gamma, gamma)-robust graphs on
    2*gamma nodes are precisely the complements of matchings with
    floor(gamma/2) edges, and a graph contains one of them as a spanning
    subgraph iff its complement is a sub-matching of that size (any smaller
    matching extends: at least two vertices stay uncovered while fewer than
    floor(gamma/2) edges are placed).  Agrees with the exhaustive oracle on
    every input.
    """
    if g.n < 2:
        raise ValueError("n must be at least 2")
    if g.n % 2 == 1:
        return len(g.edges) == comb(g.n, 2)
    gamma = g.n // 2
    comp = complement(g)
    if len(comp.edges) > gamma // 2:
        return False
    return all(comp.degree(i) <= 1 for i in range(comp.n))


# -- aggregated report ---------------------------------------------------------

@dataclass(frozen=True)
class CertificateCheck:
    """One named necessary-condition verdict with its threshold attached."""

    name: str
    passed: bool | None  # None = not evaluated (over the combinatorial budget)
    required: int | None
    observed: int | None
    scope: str  # which robustness claim the condition is necessary for

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "required": self.required,
            "observed": self.observed,
            "scope": self.scope,
        }


@dataclass(frozen=True)
class CertificateReport:
    """All certificate verdicts for one graph plus the implied robustness cap."""

    n: int
    gamma: int
    edge_count: int
    checks: tuple[CertificateCheck, ...]
    implied_r_upper_bound: int
    prop1_gamma_gamma: bool
    flags: tuple[str, ...]

    def check(self, name: str) -> CertificateCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "gamma": self.gamma,
            "edge_count": self.edge_count,
            "checks": [c.to_dict() for c in self.checks],
            "implied_r_upper_bound": self.implied_r_upper_bound,
            "prop1_gamma_gamma": self.prop1_gamma_gamma,
            "flags": list(self.flags),
            "note": "all checks except prop1_gamma_gamma are necessary only",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def certificate_report(g: Graph, *, max_clique_nodes: int = 40) -> CertificateReport:
    """Evaluate every certificate on one graph.

    Clique-based and dense-subgraph checks are skipped (verdict None) above
    their budgets; the closed-form counting checks always run.
    """
    n = g.n
    gamma = gamma_of(n)
    m = len(g.edges)
    parity: Parity = "even" if n % 2 == 0 else "odd"
    checks: list[CertificateCheck] = []

    gamma_edge_floor = edge_lb_any_r(gamma, parity)
    checks.append(
        CertificateCheck(
            "edge_floor_gamma", m >= gamma_edge_floor, gamma_edge_floor, m,
            scope=f"{gamma}-robust",
        )
    )

    if n >= 2:
        gg_floor = edge_lb_gamma_gamma(n)
        checks.append(
            CertificateCheck(
                "edge_floor_gamma_gamma", m >= gg_floor, gg_floor, m,
                scope=f"({gamma},{gamma})-robust",
            )
        )
        degree_floor = min_degree_lb_rs(gamma, gamma)
        min_degree = min(g.degree(i) for i in range(n))
        checks.append(
            CertificateCheck(
                "min_degree_gamma_gamma", min_degree >= degree_floor,
                degree_floor, min_degree, scope=f"({gamma},{gamma})-robust",
            )
        )

    clique: int | None = None
    if n <= max_clique_nodes:
        clique = max_clique_size(g)
    if n >= 2:
        need_clique = necessary_clique_size(n)
        checks.append(
            CertificateCheck(
                "clique_gamma", None if clique is None else clique >= need_clique,
                need_clique, clique, scope=f"{gamma}-robust",
            )
        )
    if n % 2 == 0:
        turan_clique = turan_clique_threshold(gamma)
        checks.append(
            CertificateCheck(
                "clique_gamma_gamma_turan",
                None if clique is None else clique >= turan_clique,
                turan_clique, clique, scope=f"({gamma},{gamma})-robust",
            )
        )
        dense_need = (gamma * gamma + 2) // 2
        try:
            dense_ok = lemma4_dense_subgraph_holds(g)
        except CapExceededError:
            dense_ok = None
        checks.append(
            CertificateCheck(
                "dense_subgraph_gamma", dense_ok, dense_need, None,
                scope=f"{gamma}-robust",
            )
        )

    implied = r_upper_bound_from_edges(n, m)
    flags = []
    if implied < gamma:
        flags.append(f"cannot be {gamma}-robust: edge count {m} is below the floor")
    prop1 = prop1_gamma_gamma_check(g) if n >= 2 else False
    return CertificateReport(
        n=n,
        gamma=gamma,
        edge_count=m,
        checks=tuple(checks),
        implied_r_upper_bound=implied,
        prop1_gamma_gamma=prop1,
        flags=tuple(flags),
    )
