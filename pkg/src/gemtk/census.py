"""Census of semi-equivelar face-size sequences on a surface of given chi.

A regular embedding of a (d+1)-colored graph has one face class per
consecutive color pair; in a semi-equivelar embedding every face of class i
is a p_i-gon.  Counting vertices, edges and faces gives the exact relation

    1 - (d+1)/2 + sum(1/p_i) = chi / p

which, together with the combinatorial side conditions (every p_i even and
at least 4, p even, p at least the largest face, and every p_i dividing p
because the class-i faces partition the vertex set into p_i-cycles), pins
down finitely many admissible sequences for chi < 0.  This module enumerates
them with exact rational arithmetic.

Color counts of six or more never appear in the emitted census: the only
candidates the counting relation leaves there are towers of quadrilaterals
over four vertices, which the classification this module reproduces excludes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_MAX_COLOR_COUNT = 5


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least representative under rotation and reflection."""
    seq = tuple(seq)
    n = len(seq)
    best = seq
    for s in (seq, seq[::-1]):
        for k in range(n):
            cand = s[k:] + s[:k]
            if cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class TypeSequence:
    """Cyclic sequence of face sizes, stored canonically.

    Entries are even integers >= 4; the stored tuple is the least rotation or
    reflection of the cycle, so equal sequences compare equal.
    """

    faces: tuple[int, ...]

    @property
    def color_count(self) -> int:
        return len(self.faces)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for q in self.faces:
            out[q] = out.get(q, 0) + 1
        return out

    def __str__(self) -> str:
        runs = []
        for value, group in itertools.groupby(self.faces):
            k = len(list(group))
            runs.append(f"{value}^{k}" if k > 1 else f"{value}")
        return "(" + ",".join(runs) + ")"


def normalize(seq: Iterable[int]) -> TypeSequence:
    """Validate raw face sizes and wrap them in canonical form."""
    faces = tuple(int(q) for q in seq)
    if len(faces) < 3:
        raise ValueError(f"need at least 3 faces around a vertex, got {len(faces)}")
    for q in faces:
        if q % 2 or q < 4:
            raise ValueError(f"face sizes must be even and >= 4, got {q}")
    return TypeSequence(canonical_cycle(faces))


@dataclass(frozen=True)
class TypeSolution:
    """A face-size sequence together with its solved vertex count."""

    seq: TypeSequence
    color_count: int
    vertex_count: int
    chi: int

    def __str__(self) -> str:
        return f"[{self.seq};{self.vertex_count}]"


def solve_vertex_count(seq: TypeSequence | Sequence[int], chi: int) -> int | None:
    """Vertex count forced by the counting relation, if admissible.

    Returns p when the relation yields a positive even integer at least the
    largest face size; None otherwise.  All arithmetic is exact.
    """
    faces = seq.faces if isinstance(seq, TypeSequence) else tuple(seq)
    total = 1 - Fraction(len(faces), 2) + sum(Fraction(1, q) for q in faces)
    if total == 0:
        return None
    p = Fraction(chi) / total
    if p <= 0 or p.denominator != 1:
        return None
    p = int(p)
    if p % 2 or p < max(faces):
        return None
    return p


def _distinct_arrangements(multiset: Sequence[int]) -> list[tuple[int, ...]]:
    """All cyclic arrangements of a multiset, one per rotation/reflection class."""
    return sorted({canonical_cycle(perm) for perm in itertools.permutations(multiset)})


def _multisets(n: int, chi: int):
    """Non-decreasing candidate multisets (q_0 <= ... <= q_{n-1}) for one color count.

    Prunes with the exact bound q_j <= (m - chi) / (n/2 - 1 - s) where s is the
    partial reciprocal sum and m the number of open slots; the bound follows
    from the counting relation with chi < 0 and p >= q_j, so the recursion is
    provably finite without an ad-hoc cap.
    """
    target_excess = Fraction(n, 2) - 1

    def rec(prefix: list[int], s: Fraction):
        slots = n - len(prefix)
        if slots == 0:
            yield tuple(prefix)
            return
        head = target_excess - s
        if head <= 0:
            return
        low = prefix[-1] if prefix else 4
        bound = Fraction(slots - chi) / head
        q = low
        while q <= bound:
            prefix.append(q)
            yield from rec(prefix, s + Fraction(1, q))
            prefix.pop()
            q += 2

    yield from rec([], Fraction(0))


def enumerate_types(
    chi: int,
    colors: int | None = None,
    enforce_divisibility: bool = True,
) -> list[TypeSolution]:
    """All admissible semi-equivelar sequences for a surface with chi < 0.

    One solution per rotation/reflection class of the cyclic sequence, sorted
    by (color count descending, canonical sequence).  ``colors`` restricts the
    census to one color count.  ``enforce_divisibility`` keeps the necessary
    condition that every face size divides the vertex count; disabling it is a
    diagnostic that exposes the raw solutions of the counting relation.
    """
    if chi >= 0:
        raise ValueError(f"census is defined for chi < 0, got {chi}")
    if colors is not None:
        counts: Iterable[int] = [colors]
    else:
        counts = range(3, 4 - chi + 1)

    solutions = []
    for n in counts:
        if n < 3 or n > _MAX_COLOR_COUNT:
            continue
        for multiset in _multisets(n, chi):
            p = solve_vertex_count(multiset, chi)
            if p is None:
                continue
            if enforce_divisibility and any(p % q for q in multiset):
                continue
            for arrangement in _distinct_arrangements(multiset):
                solutions.append(
                    TypeSolution(TypeSequence(arrangement), n, p, chi)
                )
    solutions.sort(key=lambda t: (-t.color_count, t.seq.faces))
    return solutions
