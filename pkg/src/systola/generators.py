"""Generators for named complexes and layered symmetric spheres.

The sphere family is built inductively: start from a 2s-gon, then join
(s-1) copies of the previous sphere by prism cylinders and cap the two
ends with cones.  Prisms are triangulated by the staircase rule in the
order of the signed vertex labels; because the antipodal involution
negates labels, it reverses that order and therefore maps staircase
simplices to staircase simplices, so the involution stays simplicial
and free.  The antipodal quotient is a projective-space triangulation
with edge systole exactly s, and the sheet-transition cocycle of the
quotient reconstructs the sphere as its double cover.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .cochains import RING_Z2, Cochain1
from .complexes import SimplicialComplex
from .errors import ParameterError, QuotientError


@dataclass(frozen=True)
class SymmetricComplex:
    """A complex with a free simplicial involution and signed labels.

    Antipodal vertices carry labels of equal absolute value and opposite
    sign, so ordering by label is reversed by the involution.
    """

    complex: SimplicialComplex
    involution: dict
    labels: dict


def _polygon_sphere(s: int) -> SymmetricComplex:
    rim = 2 * s
    facets = [tuple(sorted((i, (i + 1) % rim))) for i in range(rim)]
    involution = {i: (i + s) % rim for i in range(rim)}
    labels = {i: (i + 1 if i < s else -(i - s + 1)) for i in range(rim)}
    return SymmetricComplex(SimplicialComplex(facets), involution, labels)


def _add_layers(sc: SymmetricComplex, s: int) -> SymmetricComplex:
    """One suspension step: (s-1) layers, staircase cylinders, two cones."""
    X, tau, lab = sc.complex, sc.involution, sc.labels
    m = X.num_vertices
    vid = {}
    k = 0
    for layer in range(1, s):
        for v in X.vertices:
            vid[(layer, v)] = k
            k += 1
    south, north = k, k + 1
    k += 2

    facets = set()
    for layer in range(1, s - 1):
        for f in X.facets:
            ws = sorted(f, key=lab.__getitem__)
            for j in range(1, len(ws) + 1):
                cell = [vid[(layer, w)] for w in ws[:j]]
                cell += [vid[(layer + 1, w)] for w in ws[j - 1:]]
                facets.add(tuple(sorted(cell)))
    for f in X.facets:
        facets.add(tuple(sorted([south] + [vid[(1, w)] for w in f])))
        facets.add(tuple(sorted([north] + [vid[(s - 1, w)] for w in f])))

    involution = {south: north, north: south}
    for layer in range(1, s):
        for v in X.vertices:
            involution[vid[(layer, v)]] = vid[(s - layer, tau[v])]
    labels = {}
    nxt = 1
    for v in range(k):
        if v not in labels:
            labels[v] = nxt
            labels[involution[v]] = -nxt
            nxt += 1
    return SymmetricComplex(SimplicialComplex(facets), involution, labels)


def gen_symmetric_sphere(n: int, s: int) -> SymmetricComplex:
    """Centrally symmetric n-sphere with antipodal edge-distance at least s.

    Vertex count is (s-1) * |V(previous)| + 2 per step, at most 2 s^n.
    """
    if n < 1:
        raise ParameterError("dimension must be at least 1")
    if s < 3:
        raise ParameterError("s < 3 would identify edge endpoints in the quotient")
    sc = _polygon_sphere(s)
    for _ in range(n - 1):
        sc = _add_layers(sc, s)
    return sc


def quotient(sc: SymmetricComplex):
    """Antipodal quotient plus the classifying sheet-transition cocycle.

    Returns ``(Q, xi)`` where the double cover of Q built from xi is
    isomorphic to the original sphere.  Raises QuotientError whenever an
    identification would not be simplicial.
    """
    X, tau, lab = sc.complex, sc.involution, sc.labels
    edges_up = X.faces(1)
    for v in X.vertices:
        if tau[tau[v]] != v or tau[v] == v:
            raise QuotientError("involution is not a free order-2 map")
        if tuple(sorted((v, tau[v]))) in edges_up:
            raise QuotientError(f"antipodal vertices {v!r}, {tau[v]!r} share an edge")

    rep = {v: (v if lab[v] > 0 else tau[v]) for v in X.vertices}
    reps = sorted(set(rep.values()))
    qid = {}
    for i, rv in enumerate(reps):
        qid[rv] = i
        qid[tau[rv]] = i

    counts = Counter()
    for f in X.facets:
        q = tuple(sorted(qid[v] for v in f))
        if len(set(q)) != len(f):
            raise QuotientError(f"facet {f!r} collapses in the quotient")
        counts[q] += 1
    bad = {q: c for q, c in counts.items() if c != 2}
    if bad:
        raise QuotientError(f"identification conflict on {len(bad)} facets")
    Q = SimplicialComplex(counts.keys())

    section = {i: rv for i, rv in enumerate(reps)}
    values = {}
    for a, b in Q.faces(1):
        va, vb = section[a], section[b]
        same = tuple(sorted((va, vb))) in edges_up
        flip = tuple(sorted((va, tau[vb]))) in edges_up
        if same == flip:
            raise QuotientError(f"edge ({a}, {b}) lifts ambiguously")
        if flip:
            values[(a, b)] = 1
    return Q, Cochain1(Q, values, RING_Z2)


def gen_projective_space(n: int, s: int):
    """Convenience wrapper: sphere, its quotient and the classifying cocycle."""
    sc = gen_symmetric_sphere(n, s)
    Q, xi = quotient(sc)
    return Q, xi, sc


# -- fixture complexes -----------------------------------------------------

RP2_SIX_FACETS = (
    (1, 2, 3), (1, 2, 6), (1, 3, 4), (1, 4, 5), (1, 5, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
)

TORUS_SEVEN_FACETS = tuple(sorted(
    {tuple(sorted((i % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)}
    | {tuple(sorted((i % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)}
))

_NAME_RE = re.compile(r"^(complete|polygon)-(\d+)$")


def gen_complete_graph(k: int) -> SimplicialComplex:
    if k < 2:
        raise ParameterError("complete graph needs at least 2 vertices")
    return SimplicialComplex(combinations(range(1, k + 1), 2))


def gen_polygon(m: int) -> SimplicialComplex:
    if m < 3:
        raise ParameterError("polygon needs at least 3 vertices")
    return SimplicialComplex(tuple(sorted((i, (i + 1) % m))) for i in range(m))


def gen_named(name: str) -> SimplicialComplex:
    """Fixture complexes by name.

    Known names: ``rp2-six``, ``torus-seven``, ``complete-<k>`` and
    ``polygon-<m>``.
    """
    if name == "rp2-six":
        return SimplicialComplex(RP2_SIX_FACETS)
    if name == "torus-seven":
        return SimplicialComplex(TORUS_SEVEN_FACETS)
    m = _NAME_RE.match(name)
    if m:
        kind, num = m.group(1), int(m.group(2))
        return gen_complete_graph(num) if kind == "complete" else gen_polygon(num)
    raise ParameterError(f"unknown complex name {name!r}")
