"""Simplicial complexes on an indexed vertex universe, as bitmask face sets.

The void complex (no faces) and the irrelevant complex {emptyset} are
distinct values.  Universe elements that are not faces ("ghost vertices")
are allowed; they arise from degree-1 monomial generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import Graph, GuardError, bits, mask_of
from .monomials import MonomialIdeal

CLIQUE_COMPLEX_LIMIT = 24
NONFACE_SCAN_LIMIT = 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face collection; ``faces`` holds every face mask."""

    n: int
    faces: frozenset[int]

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        for f in self.faces:
            if f & ~full:
                raise ValueError("face outside the vertex universe")
        if self.faces and 0 not in self.faces:
            raise ValueError("a non-void complex must contain the empty face")

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset())

    @classmethod
    def irrelevant(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset({0}))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[int]) -> "SimplicialComplex":
        """Downward closure of the given face masks (plus the empty face)."""
        closed: set[int] = {0}
        stack = list(faces)
        while stack:
            f = stack.pop()
            if f in closed:
                continue
            closed.add(f)
            for b in bits(f):
                stack.append(f ^ (1 << b))
        return cls(n, frozenset(closed))

    @property
    def is_void(self) -> bool:
        return not self.faces

    def dim(self) -> int:
        """-1 for {emptyset}; raises on the void complex."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.faces) - 1

    def faces_by_size(self) -> list[list[int]]:
        """Face masks grouped by vertex count, each group sorted."""
        if self.is_void:
            return []
        grouped: list[list[int]] = [[] for _ in range(self.dim() + 2)]
        for f in self.faces:
            grouped[f.bit_count()].append(f)
        for group in grouped:
            group.sort()
        return grouped

    def has_face(self, mask: int) -> bool:
        return mask in self.faces

    def dump(self) -> str:
        """Debug format: one face per line, 1-based, grouped by dimension."""
        lines = []
        for k, group in enumerate(self.faces_by_size()):
            for f in group:
                lines.append(" ".join(str(v + 1) for v in bits(f)) if k else "()")
        return "\n".join(lines) + "\n"


def clique_complex(g: Graph) -> SimplicialComplex:
    """All cliques of g, including the empty face and all singletons."""
    if g.n > CLIQUE_COMPLEX_LIMIT:
        raise GuardError(f"clique complex limited to n <= {CLIQUE_COMPLEX_LIMIT}")
    faces = [0]

    def expand(clique: int, cand: int) -> None:
        for v in bits(cand):
            ext = clique | 1 << v
            faces.append(ext)
            expand(ext, cand & g.adj[v] & ~((1 << (v + 1)) - 1))

    expand(0, g.full_mask)
    return SimplicialComplex(g.n, frozenset(faces))


def restrict(c: SimplicialComplex, w: int) -> SimplicialComplex:
    """Faces contained in w, re-indexed to the universe w."""
    verts = tuple(bits(w))
    index = {v: i for i, v in enumerate(verts)}
    out = set()
    for f in c.faces:
        if f & ~w == 0:
            out.add(mask_of(index[v] for v in bits(f)))
    return SimplicialComplex(len(verts), frozenset(out))


def link(c: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Faces disjoint from sigma whose union with sigma is a face."""
    if sigma not in c.faces:
        raise ValueError("link of a non-face")
    out = frozenset(f ^ sigma for f in c.faces if f & sigma == sigma)
    return SimplicialComplex(c.n, out)


def is_cone(c: SimplicialComplex) -> Optional[int]:
    """Smallest apex vertex (sigma + apex is a face for every face), if any."""
    for v in range(c.n):
        b = 1 << v
        if all((f | b) in c.faces for f in c.faces):
            return v
    return None


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal generated by the minimal non-faces."""
    if c.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    if c.n > NONFACE_SCAN_LIMIT:
        raise GuardError(f"non-face scan limited to n <= {NONFACE_SCAN_LIMIT}")
    gens = []
    for size in range(1, c.n + 1):
        for combo in itertools.combinations(range(c.n), size):
            m = mask_of(combo)
            if m in c.faces:
                continue
            if all((m ^ (1 << v)) in c.faces for v in combo):
                gens.append(m)
    return MonomialIdeal.from_squarefree_masks(c.n, gens)


def complex_from_squarefree_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Faces are the squarefree monomials outside the ideal.

    Inverse of ``stanley_reisner_ideal``; degree-1 generators produce ghost
    vertices.
    """
    if ideal.is_unit():
        raise ValueError("the unit ideal corresponds to no complex")
    if not ideal.is_squarefree():
        raise ValueError("ideal is not squarefree")
    n = ideal.num_vars
    if n > NONFACE_SCAN_LIMIT:
        raise GuardError(f"face enumeration limited to n <= {NONFACE_SCAN_LIMIT}")
    gen_masks = ideal.support_masks()
    nonface = bytearray(1 << n)
    for m in gen_masks:
        nonface[m] = 1
    for m in range(1 << n):
        if nonface[m]:
            continue
        for v in bits(m):
            if nonface[m ^ (1 << v)]:
                nonface[m] = 1
                break
    return SimplicialComplex(n, frozenset(m for m in range(1 << n) if not nonface[m]))
