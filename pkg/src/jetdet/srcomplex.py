"""Stanley-Reisner complexes of square-free monomial ideals and the facets of Delta_0.

Vertex sets are ints used as bit-vectors.  Vertex ``i`` of the complex's
vertex order sits at bit ``N - 1 - i``, so comparing two masks as integers is
the lexicographic comparison of membership vectors with the first vertex most
significant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapExceeded, UsageError

FAMILY_TAGS = ("A", "C", "D", "E", "F")


@dataclass
class SimplicialComplexFacets:
    vertices: list  # vertex names in priority order
    forbidden: list  # masks of the minimal non-faces
    facets: list = field(default_factory=list)
    tags: list = field(default_factory=list)  # parallel to facets when known

    @property
    def size(self):
        return len(self.vertices)

    @property
    def full(self):
        return (1 << len(self.vertices)) - 1

    def bit(self, name):
        return 1 << (len(self.vertices) - 1 - self.vertices.index(name))

    def mask(self, names):
        out = 0
        for name in names:
            out |= self.bit(name)
        return out

    def names(self, mask):
        N = len(self.vertices)
        return [v for i, v in enumerate(self.vertices) if mask >> (N - 1 - i) & 1]


def star_vertex_order(n):
    """x11 > ... > x2n > y11 > ... > y2n > z11 > ... > z2n."""
    return [f"{letter}[{i},{j}]" for letter in "xyz" for i in (1, 2) for j in range(1, n + 1)]


def sr_complex_from_ideal(ideal, vertex_order=None):
    """Complex whose minimal non-faces are the generator supports."""
    table = ideal.table
    names = table.names()
    if vertex_order is None:
        vertex_order = names
    elif sorted(vertex_order) != sorted(names):
        raise UsageError("vertex order must list every variable exactly once")
    C = SimplicialComplexFacets(list(vertex_order), [])
    for g in ideal.monomials():
        if not g.is_squarefree():
            raise UsageError(f"generator {g} is not square-free")
        C.forbidden.append(C.mask(names[i] for i in g.sparse))
    return C


def is_face(S, C):
    return all(S & e != e for e in C.forbidden)


def is_facet(S, C):
    if not is_face(S, C):
        return False
    N = C.size
    for i in range(N):
        b = 1 << i
        if not S & b and is_face(S | b, C):
            return False
    return True


def minimal_transversals(edges, universe_size, max_sets=2_000_000):
    """Berge's incremental dualization of a hypergraph given by masks."""
    if any(e == 0 for e in edges):
        return []
    # small edges first keeps the intermediate families small
    edges = sorted(set(edges), key=lambda e: (bin(e).count("1"), e))
    # drop edges that contain another edge; they never constrain a transversal
    reduced = []
    for e in edges:
        if not any(f & e == f for f in reduced):
            reduced.append(e)
    transversals = [0]
    for e in reduced:
        hit = [t for t in transversals if t & e]
        miss = [t for t in transversals if not t & e]
        candidates = set(hit)
        bits = [1 << i for i in range(universe_size) if e >> i & 1]
        for t in miss:
            for b in bits:
                candidates.add(t | b)
        # a candidate from ``miss`` survives unless it contains some other candidate
        hit_set = set(hit)
        ordered = sorted(candidates, key=lambda t: bin(t).count("1"))
        kept = []
        for t in ordered:
            if t in hit_set:
                kept.append(t)
                continue
            if not any(s & t == s for s in kept):
                kept.append(t)
        transversals = kept
        if len(transversals) > max_sets:
            raise CapExceeded(f"transversal family grew beyond {max_sets}", transversals)
    return transversals


def enumerate_facets_bruteforce(C, max_universe=64):
    """Facets as complements of the minimal vertex covers of the non-faces."""
    if C.size > max_universe:
        raise CapExceeded(f"universe of {C.size} vertices exceeds cap {max_universe}")
    full = C.full
    facets = sorted(full ^ t for t in minimal_transversals(C.forbidden, C.size))
    return facets


def exhaustive_facets(C):
    """Maximal independent sets by scanning every subset; only for tiny universes."""
    faces = [S for S in range(1 << C.size) if is_face(S, C)]
    face_set = set(faces)
    return sorted(S for S in faces if not any((S | (1 << i)) in face_set for i in range(C.size) if not S >> i & 1))


# the five facet families of Delta_0 -------------------------------------------


@dataclass(frozen=True)
class FacetFamilyParams:
    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILY_TAGS:
            raise UsageError(f"unknown facet family {self.family!r}")


def family_params(family, n):
    rng = range(1, n + 1)
    if family == "A":
        return [(a1, a2, ar) for a1 in rng for a2 in rng if a1 < a2 for ar in rng if a1 <= ar]
    if family == "C":
        return [(c1, c2, c3) for c1 in rng for c2 in rng for c3 in rng if c1 <= c2 <= c3]
    if family == "D":
        return [(d1, d2, d3) for d1 in rng for d2 in rng for d3 in rng if d1 < d2 <= d3]
    if family == "E":
        return [(e1, e2, e3) for e1 in rng for e2 in rng for e3 in rng if e1 <= e2 < e3]
    if family == "F":
        return [(f1, f2, f3) for f1, f2, f3 in combinations(rng, 3)]
    raise UsageError(f"unknown facet family {family!r}")


def _rows(letter, *segments):
    out = []
    for row, lo, hi in segments:
        out.extend(f"{letter}[{row},{j}]" for j in range(lo, hi + 1))
    return out


def family_vertices(family, params, n):
    """Vertex names of the facet with the given family and parameters."""
    if family == "A":
        a1, a2, ar = params
        x = _rows("x", (1, a1, ar), (2, ar, n))
        y = _rows("y", (1, 1, a1), (1, a2, n))
        z = _rows("z", (1, 1, n), (2, 1, a2))
    elif family == "C":
        c1, c2, c3 = params
        x = _rows("x", (1, c2, c3), (2, c3, n))
        y = _rows("y", (1, 1, c1), (2, c1, c2))
        z = _rows("z", (1, 1, n), (2, 1, n))
    elif family == "D":
        d1, d2, d3 = params
        x = _rows("x", (2, d1, n))
        y = _rows("y", (1, 1, d1), (1, d2, d3), (2, d3, n))
        z = _rows("z", (1, 1, n), (2, 1, d2))
    elif family == "E":
        e1, e2, e3 = params
        x = _rows("x", (2, e2, n))
        y = _rows("y", (1, 1, e1), (2, e1, e2), (2, e3, n))
        z = _rows("z", (1, 1, n), (2, 1, e3))
    elif family == "F":
        f1, f2, f3 = params
        x = _rows("x", (2, f1, n))
        y = _rows("y", (2, 1, f1), (2, f2, n))
        z = _rows("z", (1, 1, f3), (2, f3, n), (2, 1, f2))
    else:
        raise UsageError(f"unknown facet family {family!r}")
    return sorted(set(x + y + z), key=star_vertex_order(n).index)


def enumerate_facets_families(n):
    """(FacetFamilyParams, vertex-name list) for every admissible parameter tuple."""
    if n < 2:
        raise UsageError(f"need n >= 2, got {n}")
    out = []
    for family in FAMILY_TAGS:
        for params in family_params(family, n):
            out.append((FacetFamilyParams(family, params), family_vertices(family, params, n)))
    return out


def delta0(n, gamma=None):
    """Delta_0 with forbidden sets from the leading monomials of the explicit basis."""
    from .groebner import leading_ideal
    from .jets import gamma_basis

    G = gamma or gamma_basis(n)
    return sr_complex_from_ideal(leading_ideal(G.polynomials()), star_vertex_order(n))


def tagged_delta0_facets(n, C=None):
    """Family facets of Delta_0 as (tag, params, mask), sorted by the *-ordering."""
    C = C or SimplicialComplexFacets(star_vertex_order(n), [])
    rank = {tag: i for i, tag in enumerate(("F", "E", "D", "C", "A"))}
    out = [(p.family, p.params, C.mask(names)) for p, names in enumerate_facets_families(n)]
    out.sort(key=lambda rec: (rank[rec[0]], rec[2]))
    return out
