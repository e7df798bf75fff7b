"""Backtracking search for colored graphs with a prescribed face-size sequence.

The search fixes color 0 to the pairing (0,1)(2,3)... (every isomorphism
class has such a representative) and assigns the remaining colors in order,
one edge at a time, always extending the least unpaired vertex.  While a
color c is being built, the bi-colored paths of the class {c-1, c} (and of
{d, 0} when c is the last color) are tracked incrementally: closing a cycle
of the wrong length, or growing a path beyond the target length, prunes the
branch.  Only consecutive color pairs are constrained; the remaining classes
are free.  Expensive filters (residue criteria, connectivity) run on complete
candidates only, and every emitted solution is re-verified through the public
validation, face-tracing and filter code paths rather than search state.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .complexes import check_3manifold, check_residues_sphere
from .embeddings import semi_equivelar_type
from .graphs import ColoredGraph, canonical_code, is_bipartite, is_connected, validate


class InfeasibleSpecError(ValueError):
    """The spec admits no graph at all (bad sizes, parity, divisibility)."""


class SearchBudgetExceeded(RuntimeError):
    """An exact count was requested but the time budget ran out."""


@dataclass(frozen=True)
class SearchSpec:
    """Target face-size sequence (aligned to the color order 0,1,...,d),
    vertex count, filters and limits for one search run."""

    seq: tuple[int, ...]
    vertex_count: int
    require_bipartite: bool = False
    require_3manifold: bool = False
    require_residues_sphere: bool = False
    require_connected: bool = True
    max_solutions: int | None = None
    budget_seconds: float | None = None
    dedup: bool = True

    @property
    def color_count(self) -> int:
        return len(self.seq)


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: dict[str, int] = field(default_factory=dict)
    candidates: int = 0  # complete assignments before filtering
    elapsed_seconds: float = 0.0
    exhausted: bool = False


@dataclass
class SearchOutcome:
    spec: SearchSpec
    solutions: list[ColoredGraph]
    stats: SearchStats


def check_spec(spec: SearchSpec) -> None:
    """Reject specs that cannot have solutions, before any search work."""
    problems = []
    n = spec.color_count
    p = spec.vertex_count
    if n < 3:
        problems.append(f"need at least 3 colors, got {n}")
    if p < 4 or p % 2:
        problems.append(f"vertex count must be even and >= 4, got {p}")
    for t in spec.seq:
        if t % 2 or t < 4:
            problems.append(f"face size {t} must be even and >= 4")
        elif t > p:
            problems.append(f"face size {t} exceeds the vertex count {p}")
        elif p % t:
            problems.append(
                f"face size {t} does not divide {p}; its cycles cannot partition the vertices"
            )
    if spec.require_3manifold and n != 4:
        problems.append("the 3-manifold filter needs exactly 4 colors")
    if spec.require_residues_sphere and n != 5:
        problems.append("the residue sphere filter needs exactly 5 colors")
    if problems:
        raise InfeasibleSpecError("; ".join(problems))


class _Stop(Exception):
    pass


class _Budget(Exception):
    pass


def search_gems(spec: SearchSpec, keep=None) -> SearchOutcome:
    """Run the search; ``keep`` optionally post-filters complete solutions.

    ``max_solutions`` counts solutions that survive every filter (and
    ``keep``); the run is flagged exhausted only when the whole space was
    explored.
    """
    check_spec(spec)
    n = spec.color_count
    p = spec.vertex_count
    seq = spec.seq
    stats = SearchStats()
    if spec.max_solutions is not None and spec.max_solutions <= 0:
        return SearchOutcome(spec, [], stats)
    prunes = {
        "wrong_cycle_length": 0,
        "path_too_long": 0,
        "odd_cycle": 0,
        "not_connected": 0,
        "criterion_3manifold": 0,
        "criterion_residues": 0,
        "duplicate": 0,
        "keep_rejected": 0,
    }
    solutions: list[ColoredGraph] = []
    seen_codes: set[str] = set()

    inv = [[-1] * p for _ in range(n)]
    for v in range(0, p, 2):
        inv[0][v] = v + 1
        inv[0][v + 1] = v

    # union-find with parity for incremental bipartiteness
    bip = spec.require_bipartite
    parent = list(range(p))
    rank_ = [0] * p
    par = [0] * p  # parity of the edge to the parent

    def find(v: int) -> tuple[int, int]:
        x = 0
        while parent[v] != v:
            x ^= par[v]
            v = parent[v]
        return v, x

    def union(a: int, b: int):
        """Join a,b on opposite sides; returns undo token or None on conflict."""
        ra, xa = find(a)
        rb, xb = find(b)
        if ra == rb:
            return None if xa == xb else ()
        if rank_[ra] > rank_[rb]:
            ra, rb = rb, ra
            xa, xb = xb, xa
        parent[ra] = rb
        par[ra] = xa ^ xb ^ 1
        bumped = rank_[ra] == rank_[rb]
        if bumped:
            rank_[rb] += 1
        return (ra, rb, bumped)

    def undo_union(token):
        if token:
            ra, rb, bumped = token
            parent[ra] = ra
            par[ra] = 0
            if bumped:
                rank_[rb] -= 1

    if bip:
        for v in range(0, p, 2):
            union(v, v + 1)

    deadline = (
        time.monotonic() + spec.budget_seconds if spec.budget_seconds else None
    )
    budget_mask = 0x3FF

    def finalize():
        stats.candidates += 1
        graph = validate(n, p, [_pairs_of(inv[c]) for c in range(n)])
        se = semi_equivelar_type(graph)
        if se is None or se.raw != seq:
            raise RuntimeError(f"search produced a non-conforming graph: {graph}")
        if spec.require_connected and not is_connected(graph):
            prunes["not_connected"] += 1
            return
        if bip and not is_bipartite(graph):
            raise RuntimeError("bipartite propagation let a non-bipartite graph through")
        if spec.require_3manifold and not check_3manifold(graph).holds:
            prunes["criterion_3manifold"] += 1
            return
        if spec.require_residues_sphere and not check_residues_sphere(graph).holds:
            prunes["criterion_residues"] += 1
            return
        if spec.dedup:
            code = canonical_code(graph)
            if code in seen_codes:
                prunes["duplicate"] += 1
                return
            seen_codes.add(code)
        if keep is not None and not keep(graph):
            prunes["keep_rejected"] += 1
            return
        solutions.append(graph)
        if spec.max_solutions is not None and len(solutions) >= spec.max_solutions:
            raise _Stop

    def assign_color(c: int):
        if c == n:
            finalize()
            return
        pend1 = list(inv[c - 1])
        plen1 = [2] * p
        target1 = seq[c - 1]
        if c == n - 1:
            pend2 = list(inv[0])
            plen2 = [2] * p
            target2 = seq[n - 1]
        else:
            pend2 = plen2 = None
            target2 = 0
        place(c, inv[c], pend1, plen1, target1, pend2, plen2, target2, 0)

    def place(c, invc, pend1, plen1, target1, pend2, plen2, target2, hint):
        v = hint
        while v < p and invc[v] >= 0:
            v += 1
        if v == p:
            assign_color(c + 1)
            return
        stats.nodes += 1
        if deadline is not None and (stats.nodes & budget_mask) == 0:
            if time.monotonic() > deadline:
                raise _Budget
        last = c == n - 1
        for u in range(v + 1, p):
            if invc[u] >= 0:
                continue

            e1 = pend1[v]
            if e1 == u:
                if plen1[v] != target1:
                    prunes["wrong_cycle_length"] += 1
                    continue
                merged1 = None
            else:
                length = plen1[v] + plen1[u]
                if length > target1:
                    prunes["path_too_long"] += 1
                    continue
                merged1 = (e1, pend1[u], length, plen1[v], plen1[u])

            merged2 = None
            if last:
                e2 = pend2[v]
                if e2 == u:
                    if plen2[v] != target2:
                        prunes["wrong_cycle_length"] += 1
                        continue
                else:
                    length2 = plen2[v] + plen2[u]
                    if length2 > target2:
                        prunes["path_too_long"] += 1
                        continue
                    merged2 = (e2, pend2[u], length2, plen2[v], plen2[u])

            token = None
            if bip:
                token = union(v, u)
                if token is None:
                    prunes["odd_cycle"] += 1
                    continue

            invc[v] = u
            invc[u] = v
            if merged1 is not None:
                a, b, length, la, lb = merged1
                pend1[a] = b
                pend1[b] = a
                plen1[a] = length
                plen1[b] = length
            if merged2 is not None:
                a2, b2, length2, la2, lb2 = merged2
                pend2[a2] = b2
                pend2[b2] = a2
                plen2[a2] = length2
                plen2[b2] = length2

            place(c, invc, pend1, plen1, target1, pend2, plen2, target2, v + 1)

            if merged2 is not None:
                a2, b2, length2, la2, lb2 = merged2
                pend2[a2] = v
                pend2[b2] = u
                plen2[a2] = la2
                plen2[b2] = lb2
            if merged1 is not None:
                a, b, length, la, lb = merged1
                pend1[a] = v
                pend1[b] = u
                plen1[a] = la
                plen1[b] = lb
            invc[v] = -1
            invc[u] = -1
            if bip:
                undo_union(token)

    start = time.monotonic()
    exhausted = True
    try:
        assign_color(1)
    except _Stop:
        exhausted = False
    except _Budget:
        exhausted = False
    stats.elapsed_seconds = time.monotonic() - start
    stats.exhausted = exhausted
    stats.prunes = {k: v for k, v in prunes.items() if v}
    return SearchOutcome(spec, solutions, stats)


def _pairs_of(involution):
    return [(v, u) for v, u in enumerate(involution) if v <= u]


def count_nonisomorphic(spec: SearchSpec) -> int:
    """Number of solutions up to color-preserving isomorphism, by exhaustion.

    Raises :class:`SearchBudgetExceeded` when the budget stopped the run, so
    an aborted count is never mistaken for zero.
    """
    full = SearchSpec(
        seq=spec.seq,
        vertex_count=spec.vertex_count,
        require_bipartite=spec.require_bipartite,
        require_3manifold=spec.require_3manifold,
        require_residues_sphere=spec.require_residues_sphere,
        require_connected=spec.require_connected,
        max_solutions=None,
        budget_seconds=spec.budget_seconds,
        dedup=True,
    )
    outcome = search_gems(full)
    if not outcome.stats.exhausted:
        raise SearchBudgetExceeded(
            f"budget exhausted after {outcome.stats.elapsed_seconds:.1f}s "
            f"with {len(outcome.solutions)} classes found"
        )
    return len(outcome.solutions)
