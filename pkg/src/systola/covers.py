"""Covering complexes built from 1-cocycles, and the edge metric.

A cocycle with values in Z2 (or the integers, reduced mod N) prescribes
sheet transitions along edges; the cocycle condition makes every face
lift consistently, so the total space is again a simplicial complex with
vertices ``(v, sheet)``.

BFS utilities (:func:`edge_distance`, :func:`ball`, :func:`sphere`) are
plain Python.  The systole and triviality-radius scans run one search
per base vertex; those are routed through scipy's compiled graph
routines since the verification grids make thousands of such calls.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components, dijkstra

from .cochains import RING_Z, RING_Z2, Cochain1, is_cocycle
from .complexes import SimplicialComplex
from .errors import CocycleError, ParameterError, UnknownVertexError

INFINITY = math.inf

_BFS_CHUNK = 512


@dataclass(frozen=True)
class BallProfile:
    """Ball and sphere sizes around a centre, per radius."""

    center: object
    radii: tuple
    ball_sizes: tuple
    sphere_sizes: tuple


class Cover:
    """A double or cyclic covering complex with its deck action."""

    __slots__ = ("base", "cocycle", "fiber", "kind", "total_complex", "universal",
                 "_arrays", "_base_dists")

    def __init__(self, base, cocycle, fiber, total_complex, universal=False):
        self.base = base
        self.cocycle = cocycle
        self.fiber = fiber
        self.kind = "double" if fiber == 2 else "cyclic"
        self.total_complex = total_complex
        self.universal = universal
        self._arrays = None
        self._base_dists = None

    def project(self, vertex):
        return vertex[0]

    def lift(self, v, sheet: int = 0):
        if not self.base.has_vertex(v):
            raise UnknownVertexError(f"{v!r} is not a vertex of the base")
        return (v, sheet % self.fiber)

    def deck(self, vertex, shift: int = 1):
        v, s = vertex
        return (v, (s + shift) % self.fiber)

    def lift_face(self, face, sheet: int = 0):
        """Lift a base face by placing its minimal vertex on ``sheet``."""
        face = tuple(sorted(face))
        v0 = face[0]
        out = [(v0, sheet % self.fiber)]
        for v in face[1:]:
            out.append((v, (sheet + self.cocycle.value(v0, v)) % self.fiber))
        return tuple(sorted(out))

    def __repr__(self):
        return f"Cover({self.kind}, fiber={self.fiber}, base={self.base!r})"

    # -- compiled-graph plumbing ----------------------------------------

    def _edge_arrays(self):
        """Index arrays for base edges and their fiber lifts.

        Cover edges come in fiber-size groups aligned with the base edge
        list, so a mask on base edges expands with ``np.repeat``.
        """
        if self._arrays is not None:
            return self._arrays
        F = self.fiber
        vidx = self.base.vertex_index()
        nv = len(vidx)
        base_edges = sorted(self.base.faces(1))
        eu = np.fromiter((vidx[e[0]] for e in base_edges), dtype=np.int64,
                         count=len(base_edges))
        ev = np.fromiter((vidx[e[1]] for e in base_edges), dtype=np.int64,
                         count=len(base_edges))
        shift = np.fromiter((self.cocycle.value(*e) % F for e in base_edges),
                            dtype=np.int64, count=len(base_edges))
        sheets = np.arange(F, dtype=np.int64)
        cu = (eu[:, None] * F + sheets[None, :]).ravel()
        cv = (ev[:, None] * F + (sheets[None, :] + shift[:, None]) % F).ravel()
        total = sparse.coo_matrix(
            (np.ones(len(cu), dtype=np.int8), (cu, cv)), shape=(nv * F, nv * F)
        ).tocsr()
        base_csr = sparse.coo_matrix(
            (np.ones(len(eu), dtype=np.int8), (eu, ev)), shape=(nv, nv)
        ).tocsr()
        self._arrays = (eu, ev, cu, cv, base_csr, total)
        return self._arrays

    def _base_distance_matrix(self):
        if self._base_dists is None:
            _, _, _, _, base_csr, _ = self._edge_arrays()
            self._base_dists = _all_pairs_distances(base_csr)
        return self._base_dists


def build_cover(X: SimplicialComplex, xi: Cochain1, fiber: int = 2,
                universal: bool = False) -> Cover:
    """Build the covering complex prescribed by the cocycle xi.

    ``fiber=2`` gives the double cover of a Z2 cocycle; ``fiber=N`` with
    an integer cocycle gives the N-fold cyclic cover.  The cover is
    trivial (disjoint copies of the base) exactly when xi is a
    coboundary.  When N must avoid torsion orders, choosing it is the
    caller's responsibility.
    """
    if fiber < 2:
        raise ParameterError("fiber size must be at least 2")
    if xi.complex is not X:
        raise ParameterError("cocycle lives on a different complex")
    if fiber > 2 and xi.ring != RING_Z:
        raise ParameterError("cyclic covers with fiber > 2 need integer values")
    if not is_cocycle(xi):
        raise CocycleError("sheet transitions require a cocycle")
    total_facets = []
    for f in X.facets:
        v0 = f[0]
        shifts = [xi.value(v0, v) % fiber for v in f]
        for s in range(fiber):
            total_facets.append(tuple(sorted(
                (v, (s + d) % fiber) for v, d in zip(f, shifts))))
    total = SimplicialComplex(total_facets)
    return Cover(X, xi, fiber, total, universal=universal)


# -- plain BFS metric ----------------------------------------------------

def _require_vertex(X, x):
    if not X.has_vertex(x):
        raise UnknownVertexError(f"{x!r} is not a vertex of the complex")


def _bfs(X, x, cutoff=None):
    adj = X.adjacency()
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if cutoff is not None and dist[u] >= cutoff:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def edge_distance(X: SimplicialComplex, x, y):
    """BFS distance in the 1-skeleton; inf across components."""
    _require_vertex(X, x)
    _require_vertex(X, y)
    d = _bfs(X, x).get(y)
    return INFINITY if d is None else d


def ball(X: SimplicialComplex, x, i: int) -> frozenset:
    """Vertices at edge-distance at most i from x."""
    _require_vertex(X, x)
    return frozenset(_bfs(X, x, cutoff=i))


def sphere(X: SimplicialComplex, x, i: int) -> frozenset:
    """Vertices at edge-distance exactly i from x."""
    _require_vertex(X, x)
    return frozenset(v for v, d in _bfs(X, x, cutoff=i).items() if d == i)


def ball_profile(X: SimplicialComplex, x, r_max: int | None = None) -> BallProfile:
    """Ball/sphere growth around x until stabilization (or r_max)."""
    _require_vertex(X, x)
    dist = _bfs(X, x)
    top = max(dist.values())
    if r_max is not None:
        top = min(top, r_max)
    sphere_sizes = [0] * (top + 1)
    for d in dist.values():
        if d <= top:
            sphere_sizes[d] += 1
    ball_sizes = []
    acc = 0
    for s in sphere_sizes:
        acc += s
        ball_sizes.append(acc)
    return BallProfile(x, tuple(range(top + 1)), tuple(ball_sizes), tuple(sphere_sizes))


# -- systole and triviality radii ----------------------------------------

def _all_pairs_distances(csgraph):
    n = csgraph.shape[0]
    out = np.empty((n, n), dtype=np.float32)
    for start in range(0, n, _BFS_CHUNK):
        idx = np.arange(start, min(start + _BFS_CHUNK, n))
        out[idx] = dijkstra(csgraph, directed=False, unweighted=True, indices=idx)
    return out


def cover_systole(C: Cover):
    """Shortest loop in the base with a nontrivial deck holonomy.

    Equals the minimum, over base vertices v and nonzero fiber shifts g,
    of the total-space distance between (v, 0) and (v, g).  This equals
    the edge-path systole of the base whenever the cover is universal;
    in general it is only an upper bound for it.  A trivial cover yields
    inf.
    """
    F = C.fiber
    nv = C.base.num_vertices
    if nv == 0:
        return INFINITY
    _, _, _, _, _, total = C._edge_arrays()
    best = INFINITY
    sources = np.arange(nv, dtype=np.int64) * F
    for start in range(0, nv, _BFS_CHUNK):
        chunk = sources[start:start + _BFS_CHUNK]
        dists = dijkstra(total, directed=False, unweighted=True, indices=chunk)
        for g in range(1, F):
            vals = dists[np.arange(len(chunk)), chunk + g]
            m = vals.min() if len(vals) else INFINITY
            if m < best:
                best = m
    return int(best) if math.isfinite(best) else INFINITY


def loop_norm(X: SimplicialComplex, xi: Cochain1, fiber: int = 2):
    """Shortest edge loop on which xi evaluates nontrivially (mod fiber).

    Infinite exactly when xi is a coboundary.
    """
    return cover_systole(build_cover(X, xi, fiber))


def _mask_mixes_fibers(C: Cover, base_mask) -> bool:
    """Does the cover restricted over the masked vertex set connect sheets?

    The masked subgraph is deck-invariant, so it suffices to compare each
    vertex's sheet-0 component label with its other sheets.
    """
    eu, ev, cu, cv, _, _ = C._edge_arrays()
    F = C.fiber
    nv = C.base.num_vertices
    kept = base_mask[eu] & base_mask[ev]
    if not kept.any():
        return False
    ke = np.repeat(kept, F)
    u, v = cu[ke], cv[ke]
    g = sparse.coo_matrix((np.ones(len(u), dtype=np.int8), (u, v)),
                          shape=(nv * F, nv * F))
    _, labels = connected_components(g, directed=False)
    lab = labels.reshape(nv, F)
    mixed = (lab[:, 1:] == lab[:, :1]).any(axis=1)
    return bool((mixed & base_mask).any())


def is_pi_inessential(C: Cover, W) -> bool:
    """True iff the cover restricts trivially over the subcomplex induced by W.

    Over every connected component of the induced subcomplex the preimage
    must split into fiber-many sheets, each projecting bijectively; for a
    cyclic deck action this is exactly the absence of sheet-mixing paths.
    """
    vidx = C.base.vertex_index()
    mask = np.zeros(C.base.num_vertices, dtype=bool)
    for v in W:
        i = vidx.get(v)
        if i is None:
            raise UnknownVertexError(f"{v!r} is not a vertex of the base")
        mask[i] = True
    return not _mask_mixes_fibers(C, mask)


def homotopy_triviality_radius(C: Cover):
    """Largest r such that every ball B(x, r) is inessential for the cover.

    Returns inf for a trivial cover.  The scan never fails at r = 0
    (single-vertex balls span no edges), so the nominal -1 return is
    unreachable for simplicial covers.
    """
    nv = C.base.num_vertices
    if nv == 0:
        return INFINITY
    dists = C._base_distance_matrix()
    finite = dists[np.isfinite(dists)]
    ecc = int(finite.max()) if finite.size else 0
    r = 0
    while True:
        for x in range(nv):
            if _mask_mixes_fibers(C, dists[x] <= r):
                return r - 1
        if r >= ecc:
            return INFINITY
        r += 1


def homology_triviality_radius(X: SimplicialComplex, classes):
    """Largest r with every class restricting to zero on every B(x, r).

    A degree-1 Z2 class restricts to zero on an induced subcomplex
    exactly when its double cover is trivial over it, so this is the
    minimum of the per-class cover radii.  All-zero classes give inf.
    """
    classes = list(classes)
    if not classes:
        raise ParameterError("at least one cohomology class is required")
    best = INFINITY
    for xi in classes:
        if xi.ring != RING_Z2:
            raise ParameterError("homology triviality radius works over Z2 classes")
        r = homotopy_triviality_radius(build_cover(X, xi, 2))
        if r < best:
            best = r
    return best
