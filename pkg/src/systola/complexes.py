"""Finite abstract simplicial complexes.

A complex is given by its maximal faces (facets).  Vertices are opaque
orderable labels; generators and the file format use integers, covering
complexes use ``(vertex, sheet)`` pairs.  Every face is kept as a strictly
increasing tuple in the single global vertex order, and faces of
intermediate dimension are derived lazily from the facets, so large
complexes never pay for dimensions nobody asks about.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import DimensionError, MalformedFaceError, UnknownVertexError

Face = tuple


def canonical_face(face) -> Face:
    out = tuple(sorted(face))
    if not out:
        raise MalformedFaceError("empty face")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise MalformedFaceError(f"face {tuple(face)!r} repeats vertex {a!r}")
    return out


class SimplicialComplex:
    """Immutable abstract simplicial complex.

    Construct through :func:`build_complex`, which validates, deduplicates
    and maximality-reduces arbitrary face lists.  The constructor itself
    assumes canonical, pairwise non-nested facets.
    """

    __slots__ = ("facets", "vertices", "_faces", "_adjacency", "_facet_sets", "_vertex_facets")

    def __init__(self, facets):
        self.facets = tuple(sorted(facets, key=lambda f: (len(f), f)))
        seen = set()
        for f in self.facets:
            seen.update(f)
        self.vertices = tuple(sorted(seen))
        self._faces = {}
        self._adjacency = None
        self._facet_sets = None
        self._vertex_facets = None

    # -- basic queries -------------------------------------------------

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def faces(self, k: int) -> frozenset:
        """All k-dimensional faces, derived from the facets (cached)."""
        if k < 0:
            return frozenset()
        if k not in self._faces:
            acc = set()
            for f in self.facets:
                if len(f) >= k + 1:
                    acc.update(combinations(f, k + 1))
            self._faces[k] = frozenset(acc)
        return self._faces[k]

    def edges(self) -> frozenset:
        return self.faces(1)

    def all_faces(self):
        for k in range(self.dim + 1):
            yield from self.faces(k)

    def has_vertex(self, v) -> bool:
        return bool(self._facets_of().get(v))

    def has_face(self, face) -> bool:
        face = canonical_face(face)
        byv = self._facets_of()
        lists = [byv.get(v) for v in face]
        if any(lst is None for lst in lists):
            return False
        probe = min(lists, key=len)
        sets = self._facet_set_list()
        fs = set(face)
        return any(fs <= sets[i] for i in probe)

    def adjacency(self) -> dict:
        """Vertex -> sorted tuple of neighbours in the 1-skeleton."""
        if self._adjacency is None:
            nbr = {v: set() for v in self.vertices}
            for u, v in self.faces(1):
                nbr[u].add(v)
                nbr[v].add(u)
            self._adjacency = {v: tuple(sorted(s)) for v, s in nbr.items()}
        return self._adjacency

    def components(self) -> list:
        """Connected components of the 1-skeleton as frozensets of vertices."""
        adj = self.adjacency()
        seen = set()
        out = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            queue = deque([root])
            seen.add(root)
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            out.append(frozenset(comp))
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(self.faces(k)) for k in range(self.dim + 1))

    def vertex_index(self) -> dict:
        """Label -> position in the sorted vertex tuple."""
        return {v: i for i, v in enumerate(self.vertices)}

    # -- internals -----------------------------------------------------

    def _facet_set_list(self):
        if self._facet_sets is None:
            self._facet_sets = [set(f) for f in self.facets]
        return self._facet_sets

    def _facets_of(self):
        if self._vertex_facets is None:
            byv = {}
            for i, f in enumerate(self.facets):
                for v in f:
                    byv.setdefault(v, []).append(i)
            self._vertex_facets = byv
        return self._vertex_facets

    # -- dunder --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    __hash__ = None

    def __repr__(self):
        return (f"SimplicialComplex(dim={self.dim}, vertices={self.num_vertices}, "
                f"facets={len(self.facets)})")


def build_complex(facets) -> SimplicialComplex:
    """Validate and build a complex from an arbitrary list of faces.

    Duplicates are removed and non-maximal input faces are absorbed
    silently; faces must not repeat a vertex.
    """
    canon = {canonical_face(f) for f in facets}
    if not canon:
        return SimplicialComplex(())
    lengths = {len(f) for f in canon}
    if len(lengths) == 1:
        return SimplicialComplex(canon)
    kept = []
    kept_sets = []
    byv = {}
    for f in sorted(canon, key=len, reverse=True):
        fs = set(f)
        probe = min((byv.get(v, ()) for v in f), key=len)
        if any(fs <= kept_sets[i] for i in probe):
            continue
        idx = len(kept)
        kept.append(f)
        kept_sets.append(fs)
        for v in f:
            byv.setdefault(v, []).append(idx)
    return SimplicialComplex(kept)


class InducedSubcomplex:
    """The subcomplex spanned by a vertex subset of a parent complex.

    Its faces are exactly the parent faces all of whose vertices lie in
    the subset.
    """

    __slots__ = ("parent", "vertex_subset", "_complex")

    def __init__(self, parent: SimplicialComplex, vertex_subset):
        self.parent = parent
        self.vertex_subset = frozenset(vertex_subset)
        self._complex = None

    def as_complex(self) -> SimplicialComplex:
        if self._complex is None:
            w = self.vertex_subset
            pieces = []
            for f in self.parent.facets:
                cut = tuple(v for v in f if v in w)
                if cut:
                    pieces.append(cut)
            self._complex = build_complex(pieces)
        return self._complex

    @property
    def facets(self):
        return self.as_complex().facets

    def faces(self, k: int) -> frozenset:
        return self.as_complex().faces(k)

    def edges(self) -> frozenset:
        w = self.vertex_subset
        return frozenset(e for e in self.parent.faces(1) if e[0] in w and e[1] in w)

    def adjacency(self) -> dict:
        w = self.vertex_subset
        out = {v: () for v in w if self.parent.has_vertex(v)}
        for v in out:
            out[v] = tuple(u for u in self.parent.adjacency()[v] if u in w)
        return out

    def __eq__(self, other):
        if not isinstance(other, InducedSubcomplex):
            return NotImplemented
        return (self.vertex_subset == other.vertex_subset
                and self.as_complex() == other.as_complex())

    __hash__ = None

    def __repr__(self):
        return f"InducedSubcomplex({len(self.vertex_subset)} vertices of {self.parent!r})"


def induced(X: SimplicialComplex, W) -> InducedSubcomplex:
    """The subcomplex of X induced by the vertex subset W."""
    W = frozenset(W)
    unknown = [v for v in W if not X.has_vertex(v)]
    if unknown:
        raise UnknownVertexError(f"vertices not in complex: {sorted(unknown)!r}")
    return InducedSubcomplex(X, W)


@dataclass(frozen=True)
class FVector:
    """Face counts per dimension, f_0 .. f_dim."""

    counts: tuple

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, k):
        return self.counts[k]

    def __len__(self):
        return len(self.counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.counts))


def f_vector(X: SimplicialComplex) -> FVector:
    return FVector(tuple(len(X.faces(k)) for k in range(X.dim + 1)))


def skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    """The k-skeleton: all faces of dimension at most k."""
    if not 0 <= k <= X.dim:
        raise DimensionError(f"skeleton dimension {k} out of range 0..{X.dim}")
    facets = set(X.faces(k))
    facets.update(f for f in X.facets if len(f) <= k)
    return SimplicialComplex(facets)


def barycentric_subdivision(X: SimplicialComplex) -> SimplicialComplex:
    """Barycentric subdivision; new vertices are the faces of X.

    New vertex labels are consecutive integers, assigned in (dimension,
    face) order, so |V(sd X)| equals the total face count of X.  Facets
    are the maximal chains of the face poset, one per ordering of each
    facet's vertices.
    """
    order = []
    for k in range(X.dim + 1):
        order.extend(sorted(X.faces(k)))
    label = {}
    for i, face in enumerate(order):
        label[face] = i
    new_facets = []
    for f in X.facets:
        for perm in permutations(f):
            chain = tuple(label[tuple(sorted(perm[: j + 1]))] for j in range(len(f)))
            new_facets.append(tuple(sorted(chain)))
    return SimplicialComplex(set(new_facets))
