"""
Coset digraphs Cos(G, H, g).

Vertices are the right cosets of H in G (vertex 0 is H itself); the base arc
is H -> Hg and the arc set is its orbit under right multiplication, so the
out-neighbours of H are the cosets Hgh (h in H).
"""

from typing import List, Optional, Tuple

import numpy as np

from arcfact.core.errors import DegenerateDigraphError, InvalidArgumentError, NotADigraphError
from arcfact.perm import CosetTable, PermGroup, Permutation, Subgroup


def _h_orbit_with_words(table: CosetTable, start: int, H: PermGroup) -> dict:
    """coset -> t in H with coset(start) * t = coset."""
    words = {start: H.identity()}
    queue = [start]
    for c in queue:
        for h in H.generators:
            d = table.act(c, h)
            if d not in words:
                words[d] = words[c] * h
                queue.append(d)
    return words


class CosetDigraph:
    """Arc-transitive digraph on the right cosets of H, with base arc (H, Hg)."""

    def __init__(self, G: PermGroup, H: Subgroup, g: Permutation, table: CosetTable):
        self.group = G
        self.subgroup = H
        self.g = g
        self.table = table
        self.order = table.index  # number of vertices

        self._g_index = table.index_of(g)
        out_words = _h_orbit_with_words(table, self._g_index, H)
        self.out0: List[int] = sorted(out_words)
        self.in0: List[int] = table.orbit_of(table.index_of(g.inverse()), H.generators)

        overlap = set(self.out0) & set(self.in0)
        if overlap:
            # Hg^-1 = Hgt for some t in H, hence g^-1 = h g t with h = g^-1 t^-1 g^-1
            t = out_words[table.index_of(g.inverse())]
            h = g.inverse() * t.inverse() * g.inverse()
            raise NotADigraphError(
                f"g^-1 lies in HgH: h g h' = g^-1 for h = {h.to_cycle_string()}, h' = {t.to_cycle_string()}",
                h=h,
                h2=t,
            )

        self.valency = len(self.out0)
        self.in_valency = len(self.in0)
        self.connected = PermGroup(G.degree, list(H.generators) + [g]).order == G.order
        self._out: Optional[np.ndarray] = None

    @property
    def out(self) -> np.ndarray:
        """out[i, t] = t-th out-neighbour of vertex i (right translate of vertex 0's list)."""
        if self._out is None:
            n, k = self.order, self.valency
            reps = self.table.representatives
            out = np.empty((n, k), dtype=np.int64)
            for i in range(n):
                for t, c in enumerate(self.out0):
                    out[i, t] = self.table.index_of(reps[c] * reps[i])
            self._out = out
        return self._out

    def in_degrees(self) -> np.ndarray:
        return np.bincount(self.out.ravel(), minlength=self.order)

    def in_neighbours(self, v: int) -> List[int]:
        """Vertices u with an arc u -> v, read off the out-neighbour array."""
        return [int(u) for u in np.nonzero((self.out == v).any(axis=1))[0]]

    def is_antisymmetric(self) -> bool:
        """No vertex is both an out- and an in-neighbour of vertex 0, checked in the vertex action."""
        return not set(int(u) for u in self.out[0]) & set(self.in_neighbours(0))

    def vertex_of(self, x: Permutation) -> int:
        """Vertex Hx."""
        return self.table.index_of(x)

    def canonical_arc(self, s: int) -> Tuple[int, ...]:
        """The s-arc H, Hg, Hg^2, ..., Hg^s."""
        return tuple(self.table.index_of(self.g ** j) for j in range(s + 1))

    def action(self) -> PermGroup:
        """G acting on the vertices."""
        return self.table.action()

    def is_faithful(self) -> bool:
        return self.action().order == self.group.order

    def as_dict(self) -> dict:
        return {
            "vertices": self.order,
            "valency": self.valency,
            "in_valency": self.in_valency,
            "connected": self.connected,
            "antisymmetric": self.is_antisymmetric(),
            "group_order": self.group.order,
            "stabilizer_order": self.subgroup.order,
            "g": self.g.to_cycle_string(),
        }

    def __repr__(self) -> str:
        return f"CosetDigraph(vertices={self.order}, valency={self.valency}, connected={self.connected})"


def build(G: PermGroup, H: PermGroup, g: Permutation, bound: Optional[int] = None) -> CosetDigraph:
    """
    Build Cos(G, H, g).

    Args:
        G: Group
        H: Vertex stabilizer, a subgroup of G
        g: Connecting element, g in G and g not in H
        bound: Vertex bound (defaults to the points bound)

    Returns:
        CosetDigraph

    Raises:
        DegenerateDigraphError: g in H
        NotADigraphError: g^-1 in HgH, carrying h, h' with h g h' = g^-1
    """
    if g.degree != G.degree or not G.contains(g):
        raise InvalidArgumentError(f"{g.to_cycle_string()} is not in G")
    if not isinstance(H, Subgroup) or H.ambient is not G:
        if H.degree != G.degree or not H.is_subgroup_of(G):
            raise InvalidArgumentError("H is not a subgroup of G")
        H = Subgroup(G, H.generators, _chain=H.chain)
    if H.contains(g):
        raise DegenerateDigraphError(f"g = {g.to_cycle_string()} lies in H: the base arc is a loop")
    table = CosetTable(G, H, bound=bound)
    return CosetDigraph(G, H, g, table)
