"""Combinatorial essentiality via partitions into inessential vertex sets.

Two decidable inessentiality tests are supported: the forest criterion
for 1-dimensional complexes (a subgraph maps trivially to the ambient
fundamental group iff every component is a tree) and cover-relative
triviality for an explicitly supplied covering.  Exhaustive search
enumerates set partitions as restricted-growth strings; the heuristic
search only ever produces witnesses, never essentiality claims.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .covers import Cover, is_pi_inessential
from .errors import CapacityError, DimensionError, ParameterError, UnknownVertexError

MAX_EXHAUSTIVE_VERTICES = 14


@dataclass(frozen=True)
class VertexPartition:
    """An ordered partition of a vertex set into nonempty disjoint blocks."""

    blocks: tuple

    def __post_init__(self):
        seen = set()
        for b in self.blocks:
            if not b:
                raise ParameterError("empty partition block")
            if seen & b:
                raise ParameterError("partition blocks overlap")
            seen |= b

    def covered(self) -> frozenset:
        out = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class EssentialityVerdict:
    """Outcome of an essentiality decision.

    ``essential`` is True or False for a completed exhaustive search;
    a heuristic search that finds no witness reports None, read as
    "not disproved".  A witness is present exactly when essential is
    False.
    """

    essential: bool | None
    witness: VertexPartition | None
    method: str
    exhaustive_complete: bool

    def __post_init__(self):
        if (self.witness is not None) != (self.essential is False):
            raise ParameterError("witness must be present iff essential is False")

    @property
    def status(self) -> str:
        if self.essential is True:
            return "essential"
        if self.essential is False:
            return "not-essential"
        return "not-disproved"


def _forest(adjacency, members) -> bool:
    members = set(members)
    seen = set()
    for root in members:
        if root in seen:
            continue
        seen.add(root)
        n_vertices = 1
        n_half_edges = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adjacency.get(x, ()):
                if y not in members:
                    continue
                n_half_edges += 1
                if y not in seen:
                    seen.add(y)
                    n_vertices += 1
                    queue.append(y)
        if n_half_edges // 2 != n_vertices - 1:
            return False
    return True


def is_inessential_graph(X: SimplicialComplex, W) -> bool:
    """Forest criterion: true iff every component of <W> is a tree.

    Only valid for complexes of dimension at most 1, where subgraph
    inclusions inject fundamental groups.
    """
    if X.dim > 1:
        raise DimensionError("forest criterion applies to 1-dimensional complexes")
    W = frozenset(W)
    for v in W:
        if not X.has_vertex(v):
            raise UnknownVertexError(f"{v!r} is not a vertex of the complex")
    return _forest(X.adjacency(), W)


def subdivision_vertex_lower_bound(n: int) -> int:
    """Vertex lower bound (n+1)(n+2)/2 attached to an n-essential subdivision."""
    if n < 1:
        raise ParameterError("n must be at least 1")
    return (n + 1) * (n + 2) // 2


def _block_test(X, cover):
    if cover is not None:
        if not isinstance(cover, Cover):
            raise ParameterError("cover must be a Cover instance")
        return lambda block: is_pi_inessential(cover, block), False
    if X.dim <= 1:
        adjacency = X.adjacency()
        return lambda block: _forest(adjacency, block), True
    raise ParameterError(
        "essentiality for complexes of dimension > 1 needs an explicit cover")


def _exhaustive(vertices, n, test, prune_partial):
    m = len(vertices)
    blocks: list[set] = []

    def rec(i):
        if i == m:
            if all(test(b) for b in blocks):
                return [frozenset(b) for b in blocks]
            return None
        v = vertices[i]
        limit = min(len(blocks) + 1, n)
        for j in range(limit):
            fresh = j == len(blocks)
            if fresh:
                blocks.append({v})
            else:
                blocks[j].add(v)
            ok = not prune_partial or test(blocks[j])
            if ok:
                found = rec(i + 1)
                if found is not None:
                    return found
            if fresh:
                blocks.pop()
            else:
                blocks[j].remove(v)
        return None

    return rec(0)


def _heuristic(vertices, n, test, rng, deadline, max_rounds):
    m = len(vertices)
    rounds = 0
    while rounds < max_rounds and time.monotonic() < deadline:
        rounds += 1
        assign = [rng.randrange(n) for _ in range(m)]
        for _ in range(4 * m):
            groups = {}
            for v, a in zip(vertices, assign):
                groups.setdefault(a, set()).add(v)
            bad = [a for a, b in groups.items() if not test(b)]
            if not bad:
                return [frozenset(b) for b in groups.values()]
            a = rng.choice(bad)
            movers = [i for i in range(m) if assign[i] == a]
            assign[rng.choice(movers)] = rng.randrange(n)
            if time.monotonic() >= deadline:
                break
    return None


def combinatorial_essentiality(X: SimplicialComplex, n: int,
                               cover: Cover | None = None,
                               mode: str = "exhaustive",
                               budget_ms: int = 1000,
                               seed: int = 0) -> EssentialityVerdict:
    """Decide whether V(X) can be split into at most n inessential blocks.

    Exhaustive mode enumerates restricted-growth partitions (capped at
    14 vertices) and is a proof either way; heuristic mode searches for
    a witness within the time budget and never claims essentiality.
    For the forest criterion, partial blocks are pruned as soon as they
    acquire a cycle; cover-relative blocks are tested once complete.
    """
    if n < 1:
        raise ParameterError("n must be at least 1")
    if cover is not None and cover.base is not X:
        raise ParameterError("cover does not cover this complex")
    test, prune_partial = _block_test(X, cover)
    vertices = list(X.vertices)
    if mode == "exhaustive":
        if len(vertices) > MAX_EXHAUSTIVE_VERTICES:
            raise CapacityError(
                f"exhaustive search capped at {MAX_EXHAUSTIVE_VERTICES} vertices "
                f"({len(vertices)} given); use the heuristic mode")
        found = _exhaustive(vertices, n, test, prune_partial)
        if found is None:
            return EssentialityVerdict(True, None, "exhaustive", True)
        witness = VertexPartition(tuple(found))
        if not all(test(b) for b in witness.blocks):
            raise ParameterError("internal error: unsound witness")
        return EssentialityVerdict(False, witness, "exhaustive", True)
    if mode == "heuristic":
        rng = random.Random(seed)
        deadline = time.monotonic() + budget_ms / 1000.0
        found = _heuristic(vertices, n, test, rng, deadline, max_rounds=10_000)
        if found is None:
            return EssentialityVerdict(None, None, "heuristic", False)
        witness = VertexPartition(tuple(found))
        if not all(test(b) for b in witness.blocks):
            raise ParameterError("internal error: unsound witness")
        return EssentialityVerdict(False, witness, "heuristic", False)
    raise ParameterError(f"unknown mode {mode!r}")
