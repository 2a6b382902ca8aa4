"""Cochain algebra: cocycle tests, H^1 over Z2, cup products, restrictions.

Degree-1 cochains carry either Z2 or integer values (integers are only
needed to build cyclic covers); cup products and class-nontriviality
tests work over Z2.
"""

from __future__ import annotations

from collections import deque

from . import gf2
from .complexes import InducedSubcomplex, SimplicialComplex, induced
from .errors import DimensionError, DomainError, ParameterError

RING_Z2 = "Z2"
RING_Z = "Z"


class Cochain1:
    """A 1-cochain: values on sorted edges, absent edges are 0.

    Over Z2 the orientation is irrelevant; over the integers the stored
    value belongs to the edge oriented from its smaller to its larger
    vertex.
    """

    __slots__ = ("complex", "values", "ring")

    def __init__(self, complex: SimplicialComplex, values, ring: str = RING_Z2):
        if ring not in (RING_Z2, RING_Z):
            raise ParameterError(f"unknown coefficient ring {ring!r}")
        edge_set = complex.faces(1)
        vals = {}
        for e, v in values.items():
            e = tuple(sorted(e))
            if e not in edge_set:
                raise DomainError(f"{e!r} is not an edge of the complex")
            v = int(v) % 2 if ring == RING_Z2 else int(v)
            if v:
                vals[e] = v
        self.complex = complex
        self.values = vals
        self.ring = ring

    def value(self, u, v) -> int:
        """Value on the oriented edge u -> v."""
        if u < v:
            return self.values.get((u, v), 0)
        x = self.values.get((v, u), 0)
        return x if self.ring == RING_Z2 else -x

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "Cochain1") -> "Cochain1":
        if self.complex is not other.complex or self.ring != other.ring:
            raise ParameterError("cochains live on different complexes or rings")
        out = dict(self.values)
        for e, v in other.values.items():
            out[e] = out.get(e, 0) + v
        return Cochain1(self.complex, out, self.ring)

    def __eq__(self, other):
        if not isinstance(other, Cochain1):
            return NotImplemented
        return (self.complex is other.complex and self.ring == other.ring
                and self.values == other.values)

    __hash__ = None

    def __repr__(self):
        return f"Cochain1({self.ring}, support={len(self.values)} edges)"


class CochainK:
    """A Z2 cochain of degree k, stored as its support set of k-faces."""

    __slots__ = ("complex", "degree", "support")

    def __init__(self, complex: SimplicialComplex, degree: int, support):
        faces = complex.faces(degree)
        supp = set()
        for f in support:
            f = tuple(sorted(f))
            if f not in faces:
                raise DomainError(f"{f!r} is not a {degree}-face of the complex")
            supp.add(f)
        self.complex = complex
        self.degree = degree
        self.support = frozenset(supp)

    def value(self, face) -> int:
        return 1 if tuple(sorted(face)) in self.support else 0

    def is_zero(self) -> bool:
        return not self.support

    def __repr__(self):
        return f"CochainK(degree={self.degree}, support={len(self.support)})"


def vertex_coboundary(X: SimplicialComplex, g, ring: str = RING_Z2) -> Cochain1:
    """The coboundary of a 0-cochain g (a dict vertex -> value)."""
    vals = {}
    for u, v in X.faces(1):
        a, b = g.get(u, 0), g.get(v, 0)
        vals[(u, v)] = (a + b) % 2 if ring == RING_Z2 else b - a
    return Cochain1(X, vals, ring)


def is_cocycle(c: Cochain1) -> bool:
    """True iff the coboundary of c vanishes on every 2-face."""
    X = c.complex
    if c.ring == RING_Z2:
        for a, b, d in X.faces(2):
            if (c.value(a, b) + c.value(b, d) + c.value(a, d)) % 2:
                return False
    else:
        for a, b, d in X.faces(2):
            if c.value(a, b) + c.value(b, d) - c.value(a, d):
                return False
    return True


def coboundary(c: CochainK) -> CochainK:
    """Z2 coboundary, one degree up."""
    X = c.complex
    k = c.degree
    out = set()
    for f in X.faces(k + 1):
        parity = 0
        for i in range(k + 2):
            if f[:i] + f[i + 1:] in c.support:
                parity ^= 1
        if parity:
            out.add(f)
    return CochainK(X, k + 1, out)


def cup_power(classes, X: SimplicialComplex | None = None) -> CochainK:
    """Alexander-Whitney product of degree-1 Z2 cocycles.

    On an n-face v_0 < ... < v_n the value is the product of the k-th
    class on the edge (v_{k-1}, v_k).  With a single input class the
    result is that class, repackaged in degree 1.
    """
    if not classes:
        raise ParameterError("at least one class required")
    X = X if X is not None else classes[0].complex
    n = len(classes)
    for c in classes:
        if c.complex is not X:
            raise ParameterError("all classes must live on the same complex")
        if c.ring != RING_Z2:
            raise ParameterError("cup products are computed over Z2 only")
    if n > X.dim:
        raise DimensionError(f"product of degree {n} exceeds complex dimension {X.dim}")
    support = set()
    for f in X.faces(n):
        bit = 1
        for k in range(1, n + 1):
            if not classes[k - 1].value(f[k - 1], f[k]):
                bit = 0
                break
        if bit:
            support.add(f)
    return CochainK(X, n, support)


def class_is_nonzero(c: CochainK) -> bool:
    """True iff c, assumed a cocycle, is not a Z2 coboundary.

    Decided by solvability of the sparse linear system over the
    (k-1)-cochains, with deterministic lowest-bit pivoting.
    """
    if c.degree < 1:
        raise DimensionError("degree must be at least 1")
    if not c.support:
        return False
    X = c.complex
    k = c.degree
    kfaces = sorted(X.faces(k))
    fidx = {f: i for i, f in enumerate(kfaces)}
    target = 0
    for f in c.support:
        target |= 1 << fidx[f]
    columns = {}
    for f in kfaces:
        bit = 1 << fidx[f]
        for i in range(k + 1):
            columns.setdefault(f[:i] + f[i + 1:], 0)
            columns[f[:i] + f[i + 1:]] |= bit
    cols = [columns[t] for t in sorted(columns)]
    return not gf2.in_span(cols, target)


def h1_basis(X: SimplicialComplex) -> list[Cochain1]:
    """Cocycles whose classes form a basis of H^1(X; Z2).

    Computed as ker(delta^1) modulo im(delta^0) by bitset elimination;
    deterministic for a fixed complex.
    """
    edges = sorted(X.faces(1))
    m = len(edges)
    eidx = {e: i for i, e in enumerate(edges)}
    constraints = []
    for a, b, d in sorted(X.faces(2)):
        constraints.append((1 << eidx[(a, b)]) | (1 << eidx[(b, d)]) | (1 << eidx[(a, d)]))
    kernel = gf2.kernel_basis(constraints, m)
    stars = gf2.Echelon()
    for v in X.vertices:
        bits = 0
        for u in X.adjacency()[v]:
            bits |= 1 << eidx[tuple(sorted((u, v)))]
        stars.insert(bits)
    reps = gf2.Echelon()
    reps.rows.update(stars.rows)
    out = []
    for vec in kernel:
        residual = reps.insert(vec)
        if residual:
            out.append(residual)
    basis = []
    for bits in out:
        vals = {edges[i]: 1 for i in range(m) if bits >> i & 1}
        basis.append(Cochain1(X, vals, RING_Z2))
    return basis


def restriction_is_zero(c: Cochain1, S) -> bool:
    """True iff c restricted to the induced subcomplex S is a coboundary.

    Decided per connected component by spanning-tree holonomy: propagate
    a potential along a BFS tree and check every remaining edge.
    """
    if isinstance(S, InducedSubcomplex):
        sub = S
    else:
        sub = induced(c.complex, S)
    w = sub.vertex_subset
    adj = {v: [u for u in c.complex.adjacency().get(v, ()) if u in w] for v in w}
    potential = {}
    z2 = c.ring == RING_Z2
    for root in sorted(w):
        if root in potential:
            continue
        potential[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in potential:
                    step = c.value(x, y)
                    potential[y] = (potential[x] + step) % 2 if z2 else potential[x] + step
                    queue.append(y)
    for u, v in sub.edges():
        want = potential[v] - potential[u]
        if z2:
            if c.value(u, v) != want % 2:
                return False
        elif c.value(u, v) != want:
            return False
    return True
