"""Edge-colored graph model: validation, residues, bipartiteness, canonical forms.

A colored graph here is a loopless multigraph on vertices 0..p-1 whose edge
set is one perfect matching per color 0..d.  Each matching is stored as a
fixed-point-free involution array (vertex -> partner), which makes residue
walks and face tracing O(1) per step.  Parallel edges between the same vertex
pair in different colors are legal; they show up as bigons in embedding
analysis but are valid graphs (the two-vertex graph with every color joining
its vertices is the smallest example).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

PairList = Sequence[tuple[int, int]]

# Defect kinds reported by validation.
LOOP_EDGE = "LoopEdge"
NOT_A_MATCHING = "NotAMatching"
ODD_VERTEX_COUNT = "OddVertexCount"
COLOR_GAP = "ColorGap"


@dataclass(frozen=True)
class GraphDefect:
    """One violation found while validating raw pairing data."""

    kind: str
    color: int | None = None
    vertex: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        parts = [self.kind]
        if self.color is not None:
            parts.append(f"color={self.color}")
        if self.vertex is not None:
            parts.append(f"vertex={self.vertex}")
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


class GemValidationError(ValueError):
    """Raised by :func:`validate`; carries the complete defect list."""

    def __init__(self, defects: list[GraphDefect]):
        self.defects = list(defects)
        super().__init__("; ".join(str(d) for d in self.defects))


@dataclass(frozen=True)
class ColoredGraph:
    """A (d+1)-regular properly edge-colored loopless multigraph.

    ``pairings[c][v]`` is the partner of vertex ``v`` under color ``c``.
    Instances are immutable and assumed valid; construct them through
    :func:`validate` or :meth:`from_involutions`.
    """

    color_count: int
    vertex_count: int
    pairings: tuple[tuple[int, ...], ...]

    @classmethod
    def from_involutions(cls, involutions: Sequence[Sequence[int]]) -> "ColoredGraph":
        invs = tuple(tuple(row) for row in involutions)
        if not invs:
            raise GemValidationError([GraphDefect(COLOR_GAP, detail="no colors given")])
        return validate(len(invs), len(invs[0]), [_involution_pairs(row) for row in invs])

    @property
    def colors(self) -> range:
        return range(self.color_count)

    def partner(self, color: int, vertex: int) -> int:
        return self.pairings[color][vertex]

    def pairs(self, color: int) -> list[tuple[int, int]]:
        """Edges of one color as sorted (low, high) pairs."""
        inv = self.pairings[color]
        return sorted((v, inv[v]) for v in range(self.vertex_count) if v < inv[v])

    def __str__(self) -> str:
        body = "; ".join(
            f"{c}:" + " ".join(f"{a}-{b}" for a, b in self.pairs(c)) for c in self.colors
        )
        return f"ColoredGraph(p={self.vertex_count}, {body})"


def _involution_pairs(row: Sequence[int]) -> list[tuple[int, int]]:
    # v == row[v] is kept so that loops surface as LoopEdge defects
    return [(v, row[v]) for v in range(len(row)) if v <= row[v]]


def validation_defects(
    color_count: int,
    vertex_count: int,
    pairings: Mapping[int, PairList] | Sequence[PairList],
) -> list[GraphDefect]:
    """Collect every violation in raw pairing data (empty list means valid)."""
    defects: list[GraphDefect] = []
    if color_count < 2:
        defects.append(
            GraphDefect(COLOR_GAP, detail=f"need at least 2 colors, got {color_count}")
        )
    if vertex_count < 2 or vertex_count % 2:
        defects.append(
            GraphDefect(
                ODD_VERTEX_COUNT,
                detail=f"vertex count must be a positive even number, got {vertex_count}",
            )
        )

    if isinstance(pairings, Mapping):
        given = set(pairings)
        expected = set(range(color_count))
        for c in sorted(expected - given):
            defects.append(GraphDefect(COLOR_GAP, color=c, detail="color has no pairing"))
        for c in sorted(given - expected):
            defects.append(
                GraphDefect(COLOR_GAP, color=c, detail="color outside 0..color_count-1")
            )
        by_color = {c: pairings[c] for c in sorted(given & expected)}
    else:
        if len(pairings) != color_count:
            defects.append(
                GraphDefect(
                    COLOR_GAP,
                    detail=f"{len(pairings)} pairing lists for {color_count} colors",
                )
            )
        by_color = {c: pairs for c, pairs in enumerate(pairings) if c < color_count}

    for c, pairs in by_color.items():
        seen: dict[int, int] = {}
        for a, b in pairs:
            for v in (a, b):
                if not 0 <= v < vertex_count:
                    defects.append(
                        GraphDefect(
                            NOT_A_MATCHING,
                            color=c,
                            vertex=v,
                            detail=f"vertex id outside 0..{vertex_count - 1}",
                        )
                    )
            if a == b:
                defects.append(GraphDefect(LOOP_EDGE, color=c, vertex=a))
                continue
            for v in (a, b):
                if 0 <= v < vertex_count:
                    if v in seen:
                        defects.append(
                            GraphDefect(
                                NOT_A_MATCHING,
                                color=c,
                                vertex=v,
                                detail="vertex paired more than once",
                            )
                        )
                    else:
                        seen[v] = 1
        for v in range(vertex_count):
            if v not in seen:
                defects.append(
                    GraphDefect(
                        NOT_A_MATCHING, color=c, vertex=v, detail="vertex left unpaired"
                    )
                )
    return defects


def validate(
    color_count: int,
    vertex_count: int,
    pairings: Mapping[int, PairList] | Sequence[PairList],
) -> ColoredGraph:
    """Build a :class:`ColoredGraph` from raw pairing data or raise with all defects."""
    defects = validation_defects(color_count, vertex_count, pairings)
    if defects:
        raise GemValidationError(defects)
    if isinstance(pairings, Mapping):
        by_color = [pairings[c] for c in range(color_count)]
    else:
        by_color = list(pairings)
    involutions = []
    for pairs in by_color:
        inv = [-1] * vertex_count
        for a, b in pairs:
            inv[a] = b
            inv[b] = a
        involutions.append(tuple(inv))
    return ColoredGraph(color_count, vertex_count, tuple(involutions))


def relabel(graph: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """Rename vertices by ``perm`` (old id -> new id); colors are untouched."""
    p = graph.vertex_count
    if sorted(perm) != list(range(p)):
        raise ValueError("perm is not a permutation of the vertex set")
    new = []
    for inv in graph.pairings:
        out = [-1] * p
        for v in range(p):
            out[perm[v]] = perm[inv[v]]
        new.append(tuple(out))
    return ColoredGraph(graph.color_count, p, tuple(new))


def permute_colors(graph: ColoredGraph, sigma: Sequence[int]) -> ColoredGraph:
    """Rename colors by ``sigma`` (old color -> new color)."""
    n = graph.color_count
    if sorted(sigma) != list(range(n)):
        raise ValueError("sigma is not a permutation of the color set")
    new: list[tuple[int, ...]] = [()] * n
    for c in range(n):
        new[sigma[c]] = graph.pairings[c]
    return ColoredGraph(n, graph.vertex_count, tuple(new))


def residue_components(
    graph: ColoredGraph, colors: Iterable[int]
) -> list[tuple[int, ...]]:
    """Connected components of the subgraph using only ``colors``.

    The empty color set yields one singleton class per vertex.  Classes are
    returned as sorted vertex tuples, ordered by least vertex.
    """
    subset = sorted(set(colors))
    for c in subset:
        if not 0 <= c < graph.color_count:
            raise ValueError(f"color {c} outside 0..{graph.color_count - 1}")
    invs = [graph.pairings[c] for c in subset]
    p = graph.vertex_count
    seen = bytearray(p)
    classes = []
    for start in range(p):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = 1
        for v in comp:
            for inv in invs:
                u = inv[v]
                if not seen[u]:
                    seen[u] = 1
                    comp.append(u)
        classes.append(tuple(sorted(comp)))
    return classes


def connected_components(graph: ColoredGraph) -> list[tuple[int, ...]]:
    return residue_components(graph, graph.colors)


def is_connected(graph: ColoredGraph) -> bool:
    return len(connected_components(graph)) == 1


@dataclass(frozen=True)
class ResidueStats:
    """Component counts of color-subset residues, keyed by sorted color tuple.

    Holds every subset of size 2 and 3, the full color set, and (when built
    with ``include_quadruples``) all subsets of size 4.
    """

    counts: Mapping[tuple[int, ...], int]

    def count(self, colors: Iterable[int]) -> int:
        key = tuple(sorted(colors))
        return self.counts[key]


def residue_stats(graph: ColoredGraph, include_quadruples: bool = False) -> ResidueStats:
    """Component counts for all 2- and 3-color residues (plus the full set)."""
    sizes = {2, 3, graph.color_count}
    if include_quadruples and graph.color_count >= 4:
        sizes.add(4)
    counts: dict[tuple[int, ...], int] = {}
    for size in sorted(sizes):
        if size > graph.color_count:
            continue
        for subset in itertools.combinations(range(graph.color_count), size):
            counts[subset] = len(residue_components(graph, subset))
    return ResidueStats(counts)


def is_bipartite(graph: ColoredGraph) -> bool:
    """Whether the underlying multigraph admits a proper 2-coloring of vertices."""
    p = graph.vertex_count
    side = [-1] * p
    for start in range(p):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = [start]
        for v in queue:
            for inv in graph.pairings:
                u = inv[v]
                if side[u] < 0:
                    side[u] = side[v] ^ 1
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# Canonical form
#
# Exact canonical labeling by exhaustive base-vertex choice: a breadth-first
# walk from a base vertex, visiting colors in ascending order, assigns labels
# in discovery order.  The walk depends only on the colored-graph structure,
# so isomorphic graphs produce the same set of candidate labelings; the
# lexicographic minimum of the relabeled involution arrays is therefore a
# complete invariant.  Intended scale is p <= ~50.
# ---------------------------------------------------------------------------


def _component_key(pairings, vertices):
    """Lex-least serialized labeling of one connected component."""
    n_colors = len(pairings)
    best = None
    for start in vertices:
        label = {start: 0}
        order = [start]
        for v in order:
            for inv in pairings:
                u = inv[v]
                if u not in label:
                    label[u] = len(order)
                    order.append(u)
        key = tuple(
            label[pairings[c][order[i]]]
            for c in range(n_colors)
            for i in range(len(order))
        )
        if best is None or key < best:
            best = key
    return best


def canonical_form(graph: ColoredGraph) -> ColoredGraph:
    """A canonical representative of the color-preserving isomorphism class."""
    comps = connected_components(graph)
    keys = sorted(
        ((len(c),) + _component_key(graph.pairings, c) for c in comps)
    )
    involutions = [[-1] * graph.vertex_count for _ in graph.colors]
    offset = 0
    for key in keys:
        size = key[0]
        flat = key[1:]
        for c in graph.colors:
            for i in range(size):
                involutions[c][offset + i] = offset + flat[c * size + i]
        offset += size
    return ColoredGraph(
        graph.color_count, graph.vertex_count, tuple(tuple(row) for row in involutions)
    )


def canonical_code(graph: ColoredGraph, color_classes: bool = False) -> str:
    """Text token identifying the graph up to color-preserving relabeling.

    With ``color_classes`` the code is additionally invariant under color
    permutations that preserve the cyclic color order up to rotation and
    reflection (the dihedral symmetries of the color cycle).
    """
    if color_classes:
        n = graph.color_count
        variants = []
        for k in range(n):
            rot = [(c + k) % n for c in range(n)]
            variants.append(rot)
            variants.append([(k - c) % n for c in range(n)])
        code = min(canonical_code(permute_colors(graph, s)) for s in variants)
        return code
    g = canonical_form(graph)
    body = ";".join(",".join(map(str, inv)) for inv in g.pairings)
    return f"{g.color_count}:{g.vertex_count}:{body}"


def residue_subgraph(
    graph: ColoredGraph, colors: Sequence[int], vertices: Iterable[int]
) -> ColoredGraph:
    """Induced subgraph on a residue component, relabeled to dense ids.

    ``vertices`` must be closed under the involutions of ``colors`` (true for
    any union of residue components).  Vertices are renumbered in sorted
    order; colors are renumbered preserving their relative order.
    """
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    subset = sorted(set(colors))
    involutions = []
    for c in subset:
        inv = graph.pairings[c]
        row = []
        for v in verts:
            u = inv[v]
            if u not in index:
                raise ValueError(f"vertex set not closed under color {c}")
            row.append(index[u])
        involutions.append(tuple(row))
    return ColoredGraph(len(subset), len(verts), tuple(involutions))
