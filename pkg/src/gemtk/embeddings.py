"""Regular embeddings: bi-colored face tracing and surface invariants.

For a cyclic order eps of the colors, the faces of the regular embedding are
exactly the bi-colored cycles of consecutive colors (eps_i, eps_{i+1}).
Tracing them gives V, E, F and hence the Euler characteristic of the carrier
surface; bipartiteness decides orientability.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .census import TypeSequence, normalize
from .graphs import ColoredGraph, is_bipartite, is_connected


@dataclass(frozen=True, order=True)
class CyclicOrder:
    """A cyclic order of the colors, canonicalized up to rotation/reflection.

    The stored permutation starts with color 0 and, for three or more colors,
    its second entry is smaller than its last.
    """

    order: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq, color_count: int | None = None) -> "CyclicOrder":
        order = tuple(int(c) for c in seq)
        n = len(order)
        if color_count is not None and n != color_count:
            raise ValueError(f"cyclic order has {n} entries for {color_count} colors")
        if sorted(order) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {order}")
        k = order.index(0)
        rot = order[k:] + order[:k]
        if n > 2 and rot[1] > rot[-1]:
            rot = (0,) + rot[1:][::-1]
        return cls(rot)

    @classmethod
    def identity(cls, color_count: int) -> "CyclicOrder":
        return cls(tuple(range(color_count)))

    @property
    def color_count(self) -> int:
        return len(self.order)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Consecutive color pairs (eps_i, eps_{i+1}), indices mod the length."""
        n = len(self.order)
        return tuple((self.order[i], self.order[(i + 1) % n]) for i in range(n))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.order)) + ")"


def _bicolored_cycles(graph: ColoredGraph, a: int, b: int) -> tuple[tuple[int, ...], ...]:
    """Cycles of the {a, b}-residue; each starts at its least vertex and steps
    along the smaller color first, which makes the output deterministic."""
    lo, hi = (a, b) if a < b else (b, a)
    inv_lo = graph.pairings[lo]
    inv_hi = graph.pairings[hi]
    p = graph.vertex_count
    seen = bytearray(p)
    cycles = []
    for start in range(p):
        if seen[start]:
            continue
        cyc = []
        v = start
        take_lo = True
        while True:
            cyc.append(v)
            seen[v] = 1
            v = inv_lo[v] if take_lo else inv_hi[v]
            take_lo = not take_lo
            if v == start and take_lo:
                break
        cycles.append(tuple(cyc))
    return tuple(cycles)


@dataclass(frozen=True)
class FaceTrace:
    """Per consecutive color pair, the bi-colored cycles bounding the faces."""

    eps: CyclicOrder
    cycles: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def face_count(self) -> int:
        return sum(len(c) for c in self.cycles)

    def class_lengths(self, i: int) -> list[int]:
        return sorted(len(c) for c in self.cycles[i])


def trace_faces(graph: ColoredGraph, eps: CyclicOrder | None = None) -> FaceTrace:
    """Trace all faces of the regular embedding for cyclic order ``eps``."""
    if eps is None:
        eps = CyclicOrder.identity(graph.color_count)
    if eps.color_count != graph.color_count:
        raise ValueError("cyclic order length does not match the color count")
    cycles = tuple(_bicolored_cycles(graph, a, b) for a, b in eps.pairs())
    return FaceTrace(eps, cycles)


@dataclass(frozen=True)
class SeType:
    """Semi-equivelar face-size data: the eps-aligned raw sequence plus its
    rotation/reflection class."""

    raw: tuple[int, ...]
    canonical: TypeSequence


@dataclass(frozen=True)
class EmbeddingReport:
    """Surface invariants of one regular embedding."""

    eps: CyclicOrder
    vertex_count: int
    edge_count: int
    face_count: int
    chi: int
    orientable: bool
    genus: int  # genus when orientable, crosscap number otherwise
    has_bigons: bool
    se_type: SeType | None

    def surface(self) -> str:
        if self.orientable:
            return f"orientable genus {self.genus}"
        return f"non-orientable crosscap {self.genus}"


def semi_equivelar_type(
    graph: ColoredGraph, eps: CyclicOrder | None = None
) -> SeType | None:
    """The common face-size sequence, if the embedding is semi-equivelar.

    Returns None when some face class mixes cycle lengths, when any face is a
    bigon (face sizes below 4 carry no type), or with fewer than 3 colors.
    """
    trace = trace_faces(graph, eps)
    return _se_type_of(trace)


def _se_type_of(trace: FaceTrace) -> SeType | None:
    raw = []
    for per_class in trace.cycles:
        lengths = {len(c) for c in per_class}
        if len(lengths) != 1:
            return None
        (q,) = lengths
        if q < 4:
            return None
        raw.append(q)
    if len(raw) < 3:
        return None
    return SeType(tuple(raw), normalize(raw))


def embedding_report(
    graph: ColoredGraph, eps: CyclicOrder | None = None
) -> EmbeddingReport:
    """Surface invariants for one cyclic order; rejects disconnected graphs."""
    if not is_connected(graph):
        raise ValueError("embedding reports need a connected graph")
    trace = trace_faces(graph, eps)
    p = graph.vertex_count
    e = p * graph.color_count // 2
    f = trace.face_count
    chi = p - e + f
    orientable = is_bipartite(graph)
    genus = (2 - chi) // 2 if orientable else 2 - chi
    has_bigons = any(len(c) == 2 for per_class in trace.cycles for c in per_class)
    return EmbeddingReport(
        eps=trace.eps,
        vertex_count=p,
        edge_count=e,
        face_count=f,
        chi=chi,
        orientable=orientable,
        genus=genus,
        has_bigons=has_bigons,
        se_type=_se_type_of(trace),
    )


def all_embeddings(graph: ColoredGraph) -> dict[CyclicOrder, EmbeddingReport]:
    """One report per rotation/reflection class of cyclic orders.

    There are d!/2 classes for d+1 >= 3 colors and a single class for 2.
    """
    n = graph.color_count
    reports: dict[CyclicOrder, EmbeddingReport] = {}
    if n == 2:
        eps = CyclicOrder.identity(2)
        reports[eps] = embedding_report(graph, eps)
        return reports
    for rest in itertools.permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        eps = CyclicOrder((0,) + rest)
        reports[eps] = embedding_report(graph, eps)
    return dict(sorted(reports.items()))
