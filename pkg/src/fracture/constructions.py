"""Explicit colorings: small optimal bases, blow-ups, and matching splits.

A *base coloring* is a small complete-graph or triple-system coloring with
a verified maximum incidence fraction.  The blow-up lifts a base on t
vertices to any n by splitting the vertex set into t near-equal parts:
edges meeting several parts inherit the base color of the smallest base
edge covering their part pattern, while edges inside part i are used to
plant one maximum matching for every color that avoids base vertex i
(those isolated matchings are what push the component count up), with
leftovers dumped on a color already present at i.

The remaining constructors realize exact optimum colorings for special
parameter families: one color per (near-)factor for k = n-1 and k = n,
equal matchings of size t when k*t = C(n, 2), splits of a complete
r-uniform factorization, and near-equal matchings when k is at least the
edge count minus the count of edges disjoint from a fixed edge.

Every claimed value is recomputed from class stats before being returned;
no constructor is trusted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb

from .core import (
    Coloring,
    FractureError,
    HypergraphShape,
    all_edges,
    class_stats,
    edge_list_stats,
    edge_rank,
    edge_unrank,
    f_value,
    fraction_str,
    relabel_canonical,
    z_value,
)
from . import designs
from .designs import (
    affine_plane,
    baranyai,
    boolean_sqs,
    decomposition_to_coloring_edges,
    disjoint_max_matchings,
    hamiltonian_decomposition,
    inversive_plane,
    k4minus_decomposition,
    near_one_factorization,
    one_factorization,
    projective_plane,
)


@dataclass(frozen=True)
class BaseColoring:
    """A named coloring together with its verified incidence fraction."""

    name: str
    coloring: Coloring
    realized_z: Fraction


_EXPLICIT_BASES = ("rainbow-triangle", "k5-four", "k9-five", "k6r3-six")


def base_registry_names() -> list[str]:
    return list(_EXPLICIT_BASES) + [
        "trivial(n,r)",
        "diamond(10)",
        "diamond(11)",
        "design(pg(q)|ag(q)|sqs(m)|inversive(q))",
    ]


def _coloring_from_classes(n: int, r: int, classes: list[list[tuple[int, ...]]]) -> Coloring:
    assignment = decomposition_to_coloring_edges(n, r, classes)
    return Coloring(HypergraphShape(n, r), len(classes), tuple(assignment))


def _rainbow_triangle() -> Coloring:
    return Coloring(HypergraphShape(3, 2), 3, (0, 1, 2))


def _k5_four() -> Coloring:
    shape = HypergraphShape(5, 2)
    assignment = [0] * shape.edge_count
    for i in range(3):
        assignment[edge_rank((i, 3), shape)] = i
        assignment[edge_rank((i, 4), shape)] = i
    for e in ((0, 1), (0, 2), (1, 2)):
        assignment[edge_rank(e, shape)] = 3
    assignment[edge_rank((3, 4), shape)] = 0
    return Coloring(shape, 4, tuple(assignment))


def _k9_five() -> Coloring:
    shape = HypergraphShape(9, 2)
    assignment = [-1] * shape.edge_count

    def put(edges, c):
        for e in edges:
            assignment[edge_rank(tuple(sorted(e)), shape)] = c

    low = range(0, 5)
    high = range(4, 9)
    put([(a, b) for a in low for b in low if a < b], 0)
    put([(a, b) for a in high for b in high if a < b], 1)
    put([(0, b) for b in (5, 6, 7, 8)], 2)
    put([(a, b) for a in (1, 2, 3) for b in (5, 6)], 3)
    put([(a, b) for a in (1, 2, 3) for b in (7, 8)], 4)
    return Coloring(shape, 5, tuple(assignment))


def _k6r3_six() -> Coloring:
    classes = [
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
        [(0, 1, 4), (0, 1, 5), (0, 4, 5), (1, 4, 5)],
        [(0, 2, 4), (0, 2, 5), (2, 4, 5)],
        [(1, 2, 4), (1, 3, 4), (2, 3, 4)],
        [(0, 3, 4), (0, 3, 5), (3, 4, 5)],
        [(1, 2, 5), (1, 3, 5), (2, 3, 5)],
    ]
    return _coloring_from_classes(6, 3, classes)


def trivial_coloring(n: int, r: int) -> Coloring:
    """Every edge its own color: k = C(n, r), incidence fraction r/n."""
    shape = HypergraphShape(n, r)
    return Coloring(shape, shape.edge_count, tuple(range(shape.edge_count)))


def design_coloring(design: designs.Design) -> Coloring:
    """One color per block: each strength-subset is colored by its block.

    Valid because the blocks cover every strength-subset exactly once, so
    the classes partition the edges of the complete strength-uniform
    hypergraph; each class touches block_size vertices.
    """
    r = design.strength
    classes = []
    from itertools import combinations as _comb

    for block in design.blocks:
        classes.append([tuple(sorted(sub)) for sub in _comb(block, r)])
    return _coloring_from_classes(design.v, r, classes)


_DESIGN_NAME = re.compile(r"^design\((pg|ag|sqs|inversive)\((\d+)\)\)$")
_TRIVIAL_NAME = re.compile(r"^trivial\((\d+),\s*(\d+)\)$")
_DIAMOND_NAME = re.compile(r"^diamond\((\d+)\)$")


def diamond_coloring(n: int) -> Coloring:
    """One color per diamond in a decomposition of K_n into copies of the
    four-vertex five-edge graph; every class touches 4 vertices."""
    groups = [list(g) for g in k4minus_decomposition(n)]
    return _coloring_from_classes(n, 2, groups)

_EXPECTED_Z = {
    "rainbow-triangle": Fraction(2, 3),
    "k5-four": Fraction(3, 5),
    "k9-five": Fraction(5, 9),
    "k6r3-six": Fraction(2, 3),
}


def base_registry(name: str) -> BaseColoring:
    """Look up a base coloring by name.

    Explicit entries: rainbow-triangle, k5-four, k9-five, k6r3-six.
    Parameterized entries: ``trivial(n,r)`` and ``design(...)`` where the
    inner constructor is one of pg(q), ag(q), sqs(m), inversive(q).
    """
    if name == "rainbow-triangle":
        coloring = _rainbow_triangle()
    elif name == "k5-four":
        coloring = _k5_four()
    elif name == "k9-five":
        coloring = _k9_five()
    elif name == "k6r3-six":
        coloring = _k6r3_six()
    else:
        m = _TRIVIAL_NAME.match(name)
        if m:
            coloring = trivial_coloring(int(m.group(1)), int(m.group(2)))
        elif _DIAMOND_NAME.match(name):
            nn = int(_DIAMOND_NAME.match(name).group(1))
            coloring = diamond_coloring(nn)
            realized = z_value(coloring)
            if realized != Fraction(4, nn):
                raise FractureError(f"{name}: z {realized} != 4/{nn}")
            return BaseColoring(name, coloring, realized)
        else:
            m = _DESIGN_NAME.match(name)
            if m is None:
                raise FractureError(f"unknown base coloring {name!r}")
            ctor = {
                "pg": projective_plane,
                "ag": affine_plane,
                "sqs": boolean_sqs,
                "inversive": inversive_plane,
            }[m.group(1)]
            design = ctor(int(m.group(2)))
            coloring = design_coloring(design)
            expected = Fraction(design.block_size, design.v)
            realized = z_value(coloring)
            if realized != expected:
                raise FractureError(f"{name}: z {realized} != expected {expected}")
            return BaseColoring(name, coloring, realized)
    realized = z_value(coloring)
    expected = _EXPECTED_Z.get(name, Fraction(coloring.r, coloring.n) if name.startswith("trivial") else None)
    if name in _EXPECTED_Z and realized != _EXPECTED_Z[name]:
        raise FractureError(f"{name}: z {realized} != expected {_EXPECTED_Z[name]}")
    if name.startswith("trivial") and realized != Fraction(coloring.r, coloring.n):
        raise FractureError(f"{name}: z {realized} != {coloring.r}/{coloring.n}")
    return BaseColoring(name, coloring, realized)


def equitable_parts(n: int, t: int) -> list[range]:
    """t contiguous parts of size ceil(n/t) or floor(n/t), big parts first."""
    big = n % t
    size = n // t
    parts = []
    start = 0
    for i in range(t):
        s = size + 1 if i < big else size
        parts.append(range(start, start + s))
        start += s
    return parts


def _colex_smallest_superset(u: tuple[int, ...], t: int, r: int) -> tuple[int, ...]:
    """The colex-smallest r-subset of range(t) containing u: fill with the
    smallest vertices outside u."""
    fill = [x for x in range(t) if x not in u]
    return tuple(sorted(list(u) + fill[: r - len(u)]))


def blow_up(base: BaseColoring, n: int) -> Coloring:
    """Lift a base coloring on t vertices to a coloring of K_n^r.

    Vertices split into t near-equal contiguous parts.  An edge meeting
    parts U (|U| >= 2) takes the base color of the colex-smallest base
    edge containing U.  Inside part i, every color missing at base vertex
    i plants one maximum matching (matchings pairwise edge-disjoint), and
    leftover inside edges take the smallest color present at i.

    Guarantee, checked before returning: the produced coloring has
    f_value >= floor(n/(r*t)) * ceil(t * (1 - realized_z)) + 1.
    """
    t = base.coloring.n
    r = base.coloring.r
    k = base.coloring.k
    if n < t:
        raise FractureError(f"blow-up needs n >= t = {t}, got n = {n}")
    shape = HypergraphShape(n, r)
    parts = equitable_parts(n, t)
    part_of = [0] * n
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i

    colors_at = [set() for _ in range(t)]
    base_shape = base.coloring.shape
    for rank, c in enumerate(base.coloring.assignment):
        for v in edge_unrank(rank, base_shape):
            colors_at[v].add(c)
    absent = [sorted(set(range(k)) - colors_at[i]) for i in range(t)]

    assignment = [-1] * shape.edge_count
    for rank in range(shape.edge_count):
        f = edge_unrank(rank, shape)
        u = tuple(sorted({part_of[v] for v in f}))
        if len(u) >= 2:
            e = _colex_smallest_superset(u, t, r)
            assignment[rank] = base.coloring.assignment[edge_rank(e, base_shape)]

    for i in range(t):
        part = list(parts[i])
        size = len(part)
        inside_ranks = [
            rank
            for rank in range(shape.edge_count)
            if assignment[rank] == -1
            and all(part_of[v] == i for v in _unrank_cached(rank, shape))
        ]
        if size < r:
            continue
        # constructive feasibility: the matchings must actually exist
        dec = disjoint_max_matchings(size, r, len(absent[i]))
        offset = part[0]
        fallback = min(colors_at[i])
        placed = set()
        for color, factor in zip(absent[i], dec.factors):
            for e in factor:
                ge = tuple(v + offset for v in e)
                rank = edge_rank(ge, shape)
                assignment[rank] = color
                placed.add(rank)
        for rank in inside_ranks:
            if rank not in placed:
                assignment[rank] = fallback

    if -1 in assignment:
        raise FractureError("blow-up left an edge uncolored")
    out = Coloring(shape, k, tuple(assignment))
    guarantee = (n // (r * t)) * _ceil_frac(t * (1 - base.realized_z)) + 1
    got = f_value(out)
    if got < guarantee:
        raise FractureError(
            f"blow-up produced f={got}, below guaranteed {guarantee}"
        )
    return out


_unrank_memo: dict[tuple[int, int, int], tuple[int, ...]] = {}


def _unrank_cached(rank: int, shape: HypergraphShape) -> tuple[int, ...]:
    key = (shape.n, shape.r, rank)
    got = _unrank_memo.get(key)
    if got is None:
        got = edge_unrank(rank, shape)
        _unrank_memo[key] = got
    return got


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def coloring_nminus1(n: int) -> Coloring:
    """A (n-1)-coloring of K_n with every class splitting into floor(n/2)
    components: perfect matchings for even n; for odd n each Hamiltonian
    cycle contributes a maximum matching and its complement."""
    if n < 3:
        raise FractureError(f"need n >= 3, got {n}")
    classes: list[list[tuple[int, ...]]] = []
    if n % 2 == 0:
        classes = [list(f) for f in one_factorization(n).factors]
    else:
        for cycle in hamiltonian_decomposition(n):
            matching = [cycle[i] for i in range(0, n - 2, 2)]
            rest = [e for e in cycle if e not in set(matching)]
            classes.append(matching)
            classes.append(rest)
    out = _coloring_from_classes(n, 2, classes)
    out = Coloring(out.shape, out.k, relabel_canonical(out.assignment))
    expected = n // 2
    if f_value(out) != expected:
        raise FractureError(f"(n-1)-coloring of K_{n} has f != {expected}")
    return out


def coloring_n(n: int) -> Coloring:
    """An n-coloring of K_n with every class splitting into
    floor((n-1)/2) components: a near-one-factorization for odd n; for
    even n, delete the extra vertex from the (n+1)-vertex coloring."""
    if n < 3:
        raise FractureError(f"need n >= 3, got {n}")
    if n % 2 == 1:
        classes = [list(f) for f in near_one_factorization(n).factors]
        out = _coloring_from_classes(n, 2, classes)
    else:
        bigger = coloring_nminus1(n + 1)
        big_shape = bigger.shape
        classes = [[] for _ in range(bigger.k)]
        for rank, c in enumerate(bigger.assignment):
            e = _unrank_cached(rank, big_shape)
            if n not in e:
                classes[c].append(e)
        if any(not cl for cl in classes):
            raise FractureError("vertex deletion emptied a class")
        out = _coloring_from_classes(n, 2, classes)
    out = Coloring(out.shape, out.k, relabel_canonical(out.assignment))
    expected = (n - 1) // 2
    if f_value(out) != expected:
        raise FractureError(f"n-coloring of K_{n} has f != {expected}")
    return out


def _kempe_swap_path(
    n: int, hi: list[tuple[int, int]], lo: list[tuple[int, int]]
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Move one edge's worth of weight from matching hi to matching lo.

    The union of two matchings splits into paths and even cycles whose
    edges alternate between the two; when |hi| > |lo| some path carries
    one more hi edge than lo edges, and exchanging colors along it keeps
    both sides matchings while shrinking the imbalance.
    """
    incident: dict[int, list[tuple[tuple[int, int], bool]]] = {}
    for e in hi:
        for v in e:
            incident.setdefault(v, []).append((e, True))
    for e in lo:
        for v in e:
            incident.setdefault(v, []).append((e, False))
    seen: set[tuple[int, int]] = set()
    for start in sorted(incident):
        if len(incident[start]) != 1:
            continue
        first_edge, first_is_hi = incident[start][0]
        if first_edge in seen or not first_is_hi:
            continue
        # walk the path; only a path also ending on a hi edge has excess
        comp: list[tuple[int, int]] = []
        v, prev = start, None
        last_is_hi = first_is_hi
        while True:
            step = [(e, h) for (e, h) in incident.get(v, ()) if e != prev]
            if not step:
                break
            e, h = step[0]
            comp.append(e)
            last_is_hi = h
            prev = e
            v = e[0] if e[1] == v else e[1]
        seen.update(comp)
        if last_is_hi:
            comp_set = set(comp)
            new_hi = sorted(
                [e for e in hi if e not in comp_set] + [e for e in lo if e in comp_set]
            )
            new_lo = sorted(
                [e for e in lo if e not in comp_set] + [e for e in hi if e in comp_set]
            )
            return new_hi, new_lo
    raise FractureError("no alternating path with excess found")


def _equalize_matchings(
    n: int, k: int, factors: list[list[tuple[int, int]]]
) -> list[list[tuple[int, int]]]:
    """Spread the matchings of a proper edge coloring over k classes so
    the sizes differ by at most one, via alternating-path swaps."""
    if len(factors) > k:
        raise FractureError(f"cannot equalize {len(factors)} matchings into {k} classes")
    classes = [list(f) for f in factors] + [[] for _ in range(k - len(factors))]
    guard = 0
    while True:
        sizes = [len(c) for c in classes]
        hi = max(range(k), key=lambda c: (sizes[c], -c))
        lo = min(range(k), key=lambda c: (sizes[c], c))
        if sizes[hi] - sizes[lo] <= 1:
            return classes
        guard += 1
        if guard > k * len(factors) * n:
            raise FractureError("matching equalization failed to converge")
        classes[hi], classes[lo] = _kempe_swap_path(n, classes[hi], classes[lo])


def coloring_tk2(n: int, k: int) -> Coloring:
    """k classes, each a matching of exactly t = C(n,2)/k edges.

    Preference order: slice a one-factorization (n even, t divides n/2),
    slice a near-one-factorization (n odd, t divides (n-1)/2), slice
    Hamiltonian cycles by stride (n odd, t divides n), else equalize the
    factorization over k classes by alternating-path swaps.
    """
    m = comb(n, 2)
    if k < n - 1:
        raise FractureError(f"need k >= n - 1, got k={k}")
    if m % k:
        raise FractureError(f"k={k} does not divide C({n},2)={m}")
    if n > 14:
        raise FractureError(f"n={n} above desk cap 14")
    t = m // k
    classes: list[list[tuple[int, int]]] = []
    if n % 2 == 0 and (n // 2) % t == 0:
        for factor in one_factorization(n).factors:
            for j in range(0, len(factor), t):
                classes.append(list(factor[j : j + t]))
    elif n % 2 == 1 and ((n - 1) // 2) % t == 0:
        for factor in near_one_factorization(n).factors:
            for j in range(0, len(factor), t):
                classes.append(list(factor[j : j + t]))
    elif n % 2 == 1 and n % t == 0 and n // t >= 2:
        stride = n // t
        for cycle in hamiltonian_decomposition(n):
            for j in range(stride):
                classes.append([cycle[i] for i in range(j, n, stride)])
    else:
        base = one_factorization(n) if n % 2 == 0 else near_one_factorization(n)
        classes = _equalize_matchings(n, k, [list(f) for f in base.factors])
    for cl in classes:
        used = set()
        if len(cl) != t:
            raise FractureError("class has wrong size")
        for e in cl:
            if used.intersection(e):
                raise FractureError("class is not a matching")
            used.update(e)
    out = _coloring_from_classes(n, 2, classes)
    out = Coloring(out.shape, k, relabel_canonical(out.assignment))
    if f_value(out) != t:
        raise FractureError(f"matching split has f != {t}")
    return out


def coloring_baranyai_split(n: int, r: int, t: int) -> Coloring:
    """Split every perfect-matching factor of K_n^r into t equal groups;
    each group is one color with exactly n/(r*t) components."""
    if n % r:
        raise FractureError(f"need r | n, got n={n}, r={r}")
    per_factor = n // r
    if t < 1 or per_factor % t:
        raise FractureError(f"t={t} must divide factor size {per_factor}")
    group = per_factor // t
    classes = []
    for factor in baranyai(n, r).factors:
        for j in range(0, per_factor, group):
            classes.append(list(factor[j : j + group]))
    out = _coloring_from_classes(n, r, classes)
    out = Coloring(out.shape, out.k, relabel_canonical(out.assignment))
    expected = n // (r * t)
    if f_value(out) != expected:
        raise FractureError(f"factor split has f != {expected}")
    return out


def coloring_equitable(n: int, r: int, k: int) -> Coloring:
    """k classes, each a matching of floor(m/k) or ceil(m/k) edges where
    m = C(n, r); needs k >= m - C(n-r, r) so a free class always exists.

    Greedy colex pass choosing the emptiest compatible class, then local
    moves until sizes are within one of each other.
    """
    m = comb(n, r)
    if m > 2000:
        raise FractureError(f"C({n},{r})={m} above desk cap 2000")
    need = m - comb(n - r, r)
    if k < need:
        raise FractureError(f"need k >= {need}, got k={k}")
    if k > m:
        raise FractureError(f"need k <= C(n,r)={m}, got k={k}")
    edges = all_edges(n, r)
    classes: list[list[tuple[int, ...]]] = [[] for _ in range(k)]
    used: list[set[int]] = [set() for _ in range(k)]
    for e in edges:
        best = None
        for c in range(k):
            if not used[c].intersection(e):
                if best is None or len(classes[c]) < len(classes[best]):
                    best = c
        if best is None:
            raise FractureError("greedy pass found no compatible class")
        classes[best].append(e)
        used[best].update(e)

    def sizes():
        return [len(cl) for cl in classes]

    for _ in range(4 * m):
        sz = sizes()
        if max(sz) - min(sz) <= 1:
            break
        moved = False
        large = max(range(k), key=lambda c: (sz[c], -c))
        for e in list(classes[large]):
            targets = [
                c
                for c in range(k)
                if sz[c] <= sz[large] - 2 and not used[c].intersection(e)
            ]
            if targets:
                small = min(targets, key=lambda c: (sz[c], c))
                classes[large].remove(e)
                used[large].difference_update(e)
                classes[small].append(e)
                used[small].update(e)
                moved = True
                break
        if not moved:
            # two-step: push any edge of the largest class through a middle class
            for e in list(classes[large]):
                done = False
                for mid in range(k):
                    if mid == large or used[mid].intersection(e):
                        continue
                    for e2 in list(classes[mid]):
                        targets = [
                            c
                            for c in range(k)
                            if c != mid
                            and sz[c] <= sz[large] - 2
                            and not used[c].intersection(e2)
                        ]
                        if targets:
                            small = min(targets, key=lambda c: (sz[c], c))
                            classes[mid].remove(e2)
                            used[mid].difference_update(e2)
                            classes[small].append(e2)
                            used[small].update(e2)
                            classes[large].remove(e)
                            used[large].difference_update(e)
                            classes[mid].append(e)
                            used[mid].update(e)
                            done = True
                            break
                    if done:
                        break
                if done:
                    moved = True
                    break
            if not moved:
                raise FractureError("equitable repair is stuck")
    sz = sizes()
    if max(sz) - min(sz) > 1 or min(sz) != m // k:
        raise FractureError(f"sizes {sorted(sz)} not equitable for m={m}, k={k}")
    out = _coloring_from_classes(n, r, classes)
    out = Coloring(out.shape, k, relabel_canonical(out.assignment))
    if f_value(out) != m // k:
        raise FractureError(f"equitable coloring has f != {m // k}")
    return out


@dataclass(frozen=True)
class BipartiteColoring:
    """A coloring of the n x n cross edges between sides A and B; the edge
    (a_i, b_j) sits at index i*n + j."""

    n: int
    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.assignment) != self.n * self.n:
            raise FractureError("assignment length != n^2")
        for c in self.assignment:
            if not 0 <= c < self.k:
                raise FractureError(f"color {c} out of range")

    def class_edge_lists(self) -> dict[int, list[tuple[int, int]]]:
        """Edges per color over vertex ids a_i = i, b_j = n + j."""
        out: dict[int, list[tuple[int, int]]] = {}
        for idx, c in enumerate(self.assignment):
            i, j = divmod(idx, self.n)
            out.setdefault(c, []).append((i, self.n + j))
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": 2,
            "k": self.k,
            "bipartite": True,
            "colors": list(self.assignment),
        }


def bipartite_class_stats(bc: BipartiteColoring):
    from .core import ColorClassStats

    out = []
    for c, edges in sorted(bc.class_edge_lists().items()):
        comps, incident = edge_list_stats(edges, 2 * bc.n)
        out.append(ColorClassStats(c, len(edges), comps, incident))
    return out


def bipartite_min_components(bc: BipartiteColoring) -> int:
    return min(s.components for s in bipartite_class_stats(bc))


def bipartite_z_value(bc: BipartiteColoring) -> Fraction:
    return max(
        Fraction(s.incident_vertices, 2 * bc.n) for s in bipartite_class_stats(bc)
    )


def bipartite_report_dict(bc: BipartiteColoring) -> dict:
    """Same shape as the complete-graph report: f, z, and per-class rows."""
    stats = bipartite_class_stats(bc)
    return {
        "f": min(s.components for s in stats),
        "z": fraction_str(bipartite_z_value(bc)),
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


def bipartite_from_clique(base: Coloring) -> BipartiteColoring:
    """Transfer a complete-graph coloring to the complete bipartite double
    cover: (a_i, b_j) copies the color of {i, j}, and each diagonal
    (a_i, b_i) takes the smallest color already incident with i, so every
    color touches exactly twice as many vertices as before."""
    if base.r != 2:
        raise FractureError("bipartite transfer needs a graph coloring")
    n = base.n
    shape = base.shape
    smallest_at = [None] * n
    for rank, c in enumerate(base.assignment):
        for v in _unrank_cached(rank, shape):
            if smallest_at[v] is None or c < smallest_at[v]:
                smallest_at[v] = c
    assignment = []
    for i in range(n):
        for j in range(n):
            if i == j:
                assignment.append(smallest_at[i])
            else:
                assignment.append(base.assignment[edge_rank((min(i, j), max(i, j)), shape)])
    out = BipartiteColoring(n, base.k, tuple(assignment))
    base_inc = {s.color: s.incident_vertices for s in class_stats(base)}
    for s in bipartite_class_stats(out):
        if s.incident_vertices != 2 * base_inc[s.color]:
            raise FractureError("bipartite transfer failed to double incidence")
    return out


def bipartite_blow_up(base: BaseColoring, n: int) -> BipartiteColoring:
    """Blow up a graph base coloring to K_{n,n}.

    Both sides split into the same t near-equal groups.  Edges between
    group i on side A and group j != i on side B copy the base color of
    {i, j}.  Inside the square pair (i, i), every color absent at base
    vertex i takes one perfect matching (cyclic Latin shifts), leftovers
    take the smallest color present at i.

    Checked guarantee: every color splits into at least
    floor(n/t) * ceil(t * (1 - realized_z)) - t + 1 components.
    """
    if base.coloring.r != 2:
        raise FractureError("bipartite blow-up needs a graph base")
    t = base.coloring.n
    k = base.coloring.k
    if n < t:
        raise FractureError(f"need n >= t = {t}")
    base_shape = base.coloring.shape
    parts = equitable_parts(n, t)
    part_of = [0] * n
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    colors_at = [set() for _ in range(t)]
    for rank, c in enumerate(base.coloring.assignment):
        for v in _unrank_cached(rank, base_shape):
            colors_at[v].add(c)
    absent = [sorted(set(range(k)) - colors_at[i]) for i in range(t)]
    for i in range(t):
        if len(absent[i]) > len(parts[i]):
            raise FractureError(
                f"group {i} of size {len(parts[i])} cannot host "
                f"{len(absent[i])} disjoint perfect matchings"
            )

    assignment = [-1] * (n * n)
    for a in range(n):
        for b in range(n):
            i, j = part_of[a], part_of[b]
            if i != j:
                e = (min(i, j), max(i, j))
                assignment[a * n + b] = base.coloring.assignment[edge_rank(e, base_shape)]
    for i in range(t):
        group = list(parts[i])
        g = len(group)
        fallback = min(colors_at[i])
        for ell, color in enumerate(absent[i]):
            for x in range(g):
                a = group[x]
                b = group[(x + ell) % g]
                assignment[a * n + b] = color
        for a in group:
            for b in group:
                if assignment[a * n + b] == -1:
                    assignment[a * n + b] = fallback
    out = BipartiteColoring(n, k, tuple(assignment))
    guarantee = (n // t) * _ceil_frac(t * (1 - base.realized_z)) - t + 1
    got = bipartite_min_components(out)
    if got < guarantee:
        raise FractureError(
            f"bipartite blow-up produced min components {got} < {guarantee}"
        )
    return out
