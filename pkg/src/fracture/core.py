"""Complete uniform hypergraphs, edge colorings, and the two central metrics.

The complete r-uniform hypergraph on n vertices has every r-subset of
{0, ..., n-1} as an edge.  Edges are identified with their rank in
colexicographic order, so a coloring is just a flat tuple of color
indices.  Two quantities are measured per color class:

* the number of connected components the class induces (vertices touched
  by no edge of the class never count), and
* the fraction of the n vertices incident with at least one edge of the
  class.

``f_value`` is the minimum component count over the nonempty classes;
``z_value`` is the maximum incidence fraction.  Empty classes are ignored
by both.

Invariants:
    - edge_rank and edge_unrank are mutual inverses on valid inputs.
    - components <= incident_vertices // r for every class.
    - class edge counts over a coloring sum to C(n, r).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class FractureError(Exception):
    """Base error for invalid shapes, colorings, or desk-size caps."""


@dataclass(frozen=True)
class HypergraphShape:
    """Shape (n, r) of a complete r-uniform hypergraph."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise FractureError(f"uniformity must be >= 2, got r={self.r}")
        if self.n < self.r:
            raise FractureError(f"need n >= r, got n={self.n}, r={self.r}")

    @property
    def edge_count(self) -> int:
        return comb(self.n, self.r)

    def edges(self) -> Iterable[tuple[int, ...]]:
        """All edges in colexicographic order."""
        for rank in range(self.edge_count):
            yield edge_unrank(rank, self)


def edge_rank(vertices: Sequence[int], shape: HypergraphShape) -> int:
    """Colexicographic rank of an edge, rank(S) = sum over i of C(v_i, i+1).

    ``vertices`` must be strictly increasing and inside range(shape.n).
    """
    vs = tuple(vertices)
    if len(vs) != shape.r:
        raise FractureError(f"edge needs {shape.r} vertices, got {len(vs)}")
    prev = -1
    rank = 0
    for i, v in enumerate(vs):
        if v <= prev:
            raise FractureError(f"vertices must be strictly increasing: {vs}")
        if not 0 <= v < shape.n:
            raise FractureError(f"vertex {v} out of range for n={shape.n}")
        prev = v
        rank += comb(v, i + 1)
    return rank


def edge_unrank(rank: int, shape: HypergraphShape) -> tuple[int, ...]:
    """Inverse of edge_rank: the edge with the given colex rank."""
    if not 0 <= rank < shape.edge_count:
        raise FractureError(f"rank {rank} out of range for {shape}")
    out: list[int] = []
    rem = rank
    v = shape.n - 1
    for i in range(shape.r, 0, -1):
        # largest v with C(v, i) <= rem
        while comb(v, i) > rem:
            v -= 1
        out.append(v)
        rem -= comb(v, i)
        v -= 1
    out.reverse()
    return tuple(out)


@dataclass(frozen=True)
class Coloring:
    """An assignment of one of k colors to every edge, immutable.

    ``assignment[rank]`` is the color of the edge with that colex rank.
    Colors need not all be used; empty classes are ignored by the metric
    functions.
    """

    shape: HypergraphShape
    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.shape.edge_count
        if len(self.assignment) != m:
            raise FractureError(
                f"assignment length {len(self.assignment)} != edge count {m}"
            )
        if not 1 <= self.k <= m:
            raise FractureError(f"need 1 <= k <= C(n,r)={m}, got k={self.k}")
        for c in self.assignment:
            if not 0 <= c < self.k:
                raise FractureError(f"color {c} out of range for k={self.k}")

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def r(self) -> int:
        return self.shape.r

    def class_edges(self, color: int) -> list[tuple[int, ...]]:
        """Edges of one color class, in colex order."""
        return [
            edge_unrank(i, self.shape)
            for i, c in enumerate(self.assignment)
            if c == color
        ]

    def used_colors(self) -> list[int]:
        return sorted(set(self.assignment))


@dataclass(frozen=True)
class ColorClassStats:
    """Per-class summary: size, component count, incident vertex count."""

    color: int
    edge_count: int
    components: int
    incident_vertices: int


def edge_list_stats(edges: Sequence[Sequence[int]], n_vertices: int) -> tuple[int, int]:
    """(components, incident vertex count) of an edge list via union-find.

    Vertices touched by no edge are ignored.  Union by size, no path
    splitting tricks; n stays desk sized.
    """
    parent = [-1] * n_vertices
    size = [0] * n_vertices
    comps = 0
    incident = 0

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    for e in edges:
        for v in e:
            if parent[v] == -1:
                parent[v] = v
                size[v] = 1
                comps += 1
                incident += 1
        a = find(e[0])
        for v in e[1:]:
            b = find(v)
            if a != b:
                if size[a] < size[b] or (size[a] == size[b] and a > b):
                    a, b = b, a
                parent[b] = a
                size[a] += size[b]
                comps -= 1
    return comps, incident


def class_stats(coloring: Coloring) -> list[ColorClassStats]:
    """Stats for every nonempty color class, ordered by color index."""
    shape = coloring.shape
    buckets: dict[int, list[tuple[int, ...]]] = {}
    for rank, c in enumerate(coloring.assignment):
        buckets.setdefault(c, []).append(edge_unrank(rank, shape))
    out = []
    for c in sorted(buckets):
        edges = buckets[c]
        comps, incident = edge_list_stats(edges, shape.n)
        out.append(ColorClassStats(c, len(edges), comps, incident))
    return out


def f_value(coloring: Coloring) -> int:
    """Minimum component count over the nonempty color classes."""
    return min(s.components for s in class_stats(coloring))


def z_value(coloring: Coloring) -> Fraction:
    """Maximum incidence fraction over the nonempty color classes."""
    return max(
        Fraction(s.incident_vertices, coloring.n) for s in class_stats(coloring)
    )


def relabel_canonical(assignment: Sequence[int]) -> tuple[int, ...]:
    """Renumber colors by first appearance so label choices are canonical."""
    mapping: dict[int, int] = {}
    out = []
    for c in assignment:
        if c not in mapping:
            mapping[c] = len(mapping)
        out.append(mapping[c])
    return tuple(out)


def fraction_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den if den else 1))


def coloring_to_dict(coloring: Coloring) -> dict:
    return {
        "n": coloring.n,
        "r": coloring.r,
        "k": coloring.k,
        "colors": list(coloring.assignment),
    }


def coloring_from_dict(d: dict) -> Coloring:
    try:
        shape = HypergraphShape(int(d["n"]), int(d["r"]))
        return Coloring(shape, int(d["k"]), tuple(int(c) for c in d["colors"]))
    except KeyError as exc:
        raise FractureError(f"coloring JSON missing key {exc}") from exc


def coloring_to_json(coloring: Coloring) -> str:
    return json.dumps(coloring_to_dict(coloring), sort_keys=True)


def coloring_from_json(text: str) -> Coloring:
    return coloring_from_dict(json.loads(text))


def report_dict(coloring: Coloring) -> dict:
    """The evaluation report emitted next to a serialized coloring."""
    stats = class_stats(coloring)
    return {
        "f": min(s.components for s in stats),
        "z": fraction_str(max(Fraction(s.incident_vertices, coloring.n) for s in stats)),
        "per_class": [
            {
                "color": s.color,
                "edges": s.edge_count,
                "components": s.components,
                "incident_vertices": s.incident_vertices,
            }
            for s in stats
        ],
    }


def all_edges(n: int, r: int) -> list[tuple[int, ...]]:
    """All r-subsets of range(n) in colex order (helper for constructions)."""
    shape = HypergraphShape(n, r)
    return [edge_unrank(i, shape) for i in range(shape.edge_count)]
