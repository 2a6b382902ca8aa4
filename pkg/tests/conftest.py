"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's code paths: cycle
enumeration by DFS, cover triviality by explicit preimage components,
distances by dict-based BFS.  Acceptance and agreement tests compare
library results against these.
"""

from __future__ import annotations

import time
from collections import deque

import pytest

import systola as sy


# -- fixture complexes -------------------------------------------------------

@pytest.fixture(scope="session")
def rp2():
    return sy.gen_named("rp2-six")


@pytest.fixture(scope="session")
def torus7():
    return sy.gen_named("torus-seven")


@pytest.fixture(scope="session")
def rp2_class(rp2):
    return sy.h1_basis(rp2)[0]


@pytest.fixture(scope="session")
def torus_classes(torus7):
    return sy.h1_basis(torus7)


@pytest.fixture(scope="session")
def quotient23():
    return sy.gen_projective_space(2, 3)


@pytest.fixture(scope="session")
def grid_report():
    """The full verification grid, measured once per session."""
    t0 = time.monotonic()
    report = sy.verify_grid(4, 8, seed=0)
    elapsed = time.monotonic() - t0
    return report, elapsed


# -- independent oracles -----------------------------------------------------

def simple_cycles(adjacency, members=None):
    """All simple cycles of an undirected graph, as vertex lists.

    Each cycle is produced once, rooted at its smallest vertex with its
    two directions deduplicated.
    """
    if members is None:
        members = set(adjacency)
    members = set(members)
    cycles = []

    def dfs(root, u, path, on_path):
        for w in adjacency.get(u, ()):
            if w not in members:
                continue
            if w == root and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(list(path))
            elif w > root and w not in on_path:
                on_path.add(w)
                path.append(w)
                dfs(root, w, path, on_path)
                path.pop()
                on_path.remove(w)

    for root in sorted(members):
        dfs(root, root, [root], {root})
    return cycles


def cycle_holonomy(cochain, cycle, modulus=2):
    total = 0
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        total += cochain.value(a, b)
    return total % modulus


def brute_restriction_is_zero(cochain, W):
    """Oracle: a cocycle restricts to a coboundary iff every simple cycle
    inside the induced subcomplex evaluates to zero."""
    adj = cochain.complex.adjacency()
    for cycle in simple_cycles(adj, W):
        if cycle_holonomy(cochain, cycle):
            return False
    return True


def brute_cover_trivial_over(cover, W):
    """Oracle for pi-inessentiality: build the preimage subgraph explicitly
    and require every component to project injectively."""
    W = set(W)
    N = cover.fiber
    xi = cover.cocycle
    adj = {}
    for u, v in cover.base.faces(1):
        if u in W and v in W:
            for s in range(N):
                t = (s + xi.value(u, v)) % N
                adj.setdefault((u, s), []).append((v, t))
                adj.setdefault((v, t), []).append((u, s))
    seen = set()
    for v in W:
        for s in range(N):
            start = (v, s)
            if start in seen:
                continue
            comp = {start}
            seen.add(start)
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adj.get(x, ()):
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            projected = {p[0] for p in comp}
            if len(projected) != len(comp):
                return False
    return True


def brute_homotopy_radius(cover):
    """Oracle radius: scan balls by brute force with the preimage check."""
    X = cover.base
    r = 0
    while True:
        grew = False
        for x in X.vertices:
            b = sy.ball(X, x, r)
            if not brute_cover_trivial_over(cover, b):
                return r - 1
            if len(sy.ball(X, x, r + 1)) > len(b):
                grew = True
        if not grew:
            return sy.INFINITY
        r += 1


def graph_girth(X):
    """Shortest cycle length of a graph complex, inf if a forest."""
    best = sy.INFINITY
    adj = X.adjacency()
    for root in X.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
