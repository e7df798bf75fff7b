"""Shared builders and independent oracles for the test suite.

Oracles here deliberately avoid the library's own algorithms: determinants
via Bareiss, invariant factors via minor gcds, isomorphism via brute-force
relabeling, and type search via full matching enumeration.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from gemtk import (
    ColoredGraph,
    canonical_code,
    check_3manifold,
    is_bipartite,
    is_connected,
    semi_equivelar_type,
    validate,
)


# ---------------------------------------------------------------------------
# Graph builders
# ---------------------------------------------------------------------------


def theta_graph() -> ColoredGraph:
    return validate(3, 2, [[(0, 1)], [(0, 1)], [(0, 1)]])


def cube_graph() -> ColoredGraph:
    return ColoredGraph.from_involutions(
        [[v ^ (1 << c) for v in range(8)] for c in range(3)]
    )


def k4_graph() -> ColoredGraph:
    return validate(3, 4, [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]])


def random_matching(rng: random.Random, p: int) -> list[int]:
    order = list(range(p))
    rng.shuffle(order)
    inv = [0] * p
    for i in range(0, p, 2):
        a, b = order[i], order[i + 1]
        inv[a] = b
        inv[b] = a
    return inv


def random_colored_graph(rng: random.Random, p: int, colors: int) -> ColoredGraph:
    return ColoredGraph.from_involutions(
        [random_matching(rng, p) for _ in range(colors)]
    )


def random_connected_graph(rng: random.Random, p: int, colors: int) -> ColoredGraph:
    while True:
        g = random_colored_graph(rng, p, colors)
        if is_connected(g):
            return g


# ---------------------------------------------------------------------------
# Matching enumeration and the naive search oracle
# ---------------------------------------------------------------------------


def perfect_matchings(vertices: tuple[int, ...]):
    """All perfect matchings of a vertex tuple, as involution dicts."""
    if not vertices:
        yield {}
        return
    first = vertices[0]
    rest = vertices[1:]
    for i, other in enumerate(rest):
        for sub in perfect_matchings(rest[:i] + rest[i + 1 :]):
            sub = dict(sub)
            sub[first] = other
            sub[other] = first
            yield sub


def all_matchings(p: int) -> list[list[int]]:
    out = []
    for m in perfect_matchings(tuple(range(p))):
        out.append([m[v] for v in range(p)])
    return out


def naive_type_search(
    seq: tuple[int, ...],
    p: int,
    require_bipartite: bool = False,
    require_connected: bool = True,
    require_3manifold: bool = False,
    fix_color0: bool = True,
) -> set[str]:
    """Canonical codes of all graphs with the given face-size sequence.

    Enumerates every combination of perfect matchings (color 0 fixed to the
    standard pairing unless ``fix_color0`` is false) and filters through the
    public verification functions only.
    """
    n = len(seq)
    matchings = all_matchings(p)
    standard = [v ^ 1 for v in range(p)]
    first = [standard] if fix_color0 else matchings
    codes = set()
    for combo in itertools.product(first, *([matchings] * (n - 1))):
        graph = ColoredGraph(n, p, tuple(tuple(m) for m in combo))
        se = semi_equivelar_type(graph)
        if se is None or se.raw != tuple(seq):
            continue
        if require_connected and not is_connected(graph):
            continue
        if require_bipartite and not is_bipartite(graph):
            continue
        if require_3manifold and not check_3manifold(graph).holds:
            continue
        codes.add(canonical_code(graph))
    return codes


# ---------------------------------------------------------------------------
# Exact linear algebra oracles
# ---------------------------------------------------------------------------


def det_bareiss(matrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def rank_over_rationals(matrix) -> int:
    """Row-reduction rank with exact fractions (independent of the SNF path)."""
    a = [[Fraction(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    col = 0
    for col in range(n):
        pivot = next((i for i in range(rank, m) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def minor_gcd_invariant_factors(matrix) -> tuple[int, ...]:
    """Invariant factors via gcds of k x k minors (independent SNF oracle)."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    gcds = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                sub = [[matrix[i][j] for j in cols] for i in rows]
                g = math.gcd(g, det_bareiss(sub))
        if g == 0:
            break
        gcds.append(g)
    return tuple(gcds[k] // gcds[k - 1] for k in range(1, len(gcds)))


# ---------------------------------------------------------------------------
# Brute-force isomorphism
# ---------------------------------------------------------------------------


def brute_force_isomorphic(g1: ColoredGraph, g2: ColoredGraph) -> bool:
    """Color-preserving isomorphism test by trying every vertex relabeling."""
    if (g1.color_count, g1.vertex_count) != (g2.color_count, g2.vertex_count):
        return False
    p = g1.vertex_count
    for perm in itertools.permutations(range(p)):
        if all(
            perm[g1.pairings[c][v]] == g2.pairings[c][perm[v]]
            for c in g1.colors
            for v in range(p)
        ):
            return True
    return False


def counting_relation_holds(seq: tuple[int, ...], chi: int, p: int) -> bool:
    total = 1 - Fraction(len(seq), 2) + sum(Fraction(1, q) for q in seq)
    return total == Fraction(chi, p)
