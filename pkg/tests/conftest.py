"""Shared test helpers: random graphs and independent brute-force oracles.

The brute-force functions below check definitions directly over explicit
subset enumerations (itertools-based, no bitmask tricks) so they stay
independent of the code paths they validate.
"""

from __future__ import annotations

import random
from itertools import combinations

from mergraph import Graph, new_graph
from mergraph.oracle import all_disjoint_pairs


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return new_graph(n, edges)


def brute_outside_degree(g: Graph, node: int, s: frozenset[int]) -> int:
    return sum(1 for j in g.neighbors(node) if j not in s)


def brute_reachable_count(g: Graph, s: frozenset[int], r: int) -> int:
    return sum(1 for i in s if brute_outside_degree(g, i, s) >= r)


def brute_is_r_robust(g: Graph, r: int) -> bool:
    for s1, s2 in all_disjoint_pairs(g.n):
        if brute_reachable_count(g, s1, r) == 0 and brute_reachable_count(g, s2, r) == 0:
            return False
    return True


def brute_is_rs_robust(g: Graph, r: int, s: int) -> bool:
    for s1, s2 in all_disjoint_pairs(g.n):
        x1 = brute_reachable_count(g, s1, r)
        x2 = brute_reachable_count(g, s2, r)
        if x1 == len(s1) or x2 == len(s2) or x1 + x2 >= s:
            continue
        return False
    return True


def brute_max_clique(g: Graph) -> int:
    best = 1
    for k in range(2, g.n + 1):
        found = False
        for subset in combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
                found = True
                break
        if found:
            best = k
        else:
            break
    return best
