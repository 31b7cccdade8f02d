"""Independent reference implementations used as test oracles.

Everything here is written from the definitions, on purpose without
reusing the library's union-find, ranking, or pruning code, so that a
bug in the package cannot hide behind the same bug in the tests.
DFS instead of union-find, dict grouping instead of rank arrays, and
plain itertools enumeration instead of canonical search.
"""

from fractions import Fraction
from itertools import combinations, product


def components_dfs(n, edge_list):
    """Connected components of the subhypergraph, isolated vertices ignored."""
    adj = {}
    for edge in edge_list:
        for v in edge:
            adj.setdefault(v, set()).update(edge)
    seen = set()
    count = 0
    for start in adj:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def colex_edges(n, r):
    """All r-subsets in colex order: sort by reversed tuple."""
    return sorted(combinations(range(n), r), key=lambda e: tuple(reversed(e)))


def classes_of(n, r, colors):
    edges = colex_edges(n, r)
    assert len(edges) == len(colors)
    by_color = {}
    for edge, c in zip(edges, colors):
        by_color.setdefault(c, []).append(edge)
    return by_color


def f_of(n, r, colors):
    """Minimum component count over nonempty color classes."""
    by_color = classes_of(n, r, colors)
    return min(components_dfs(n, cls) for cls in by_color.values())


def z_of(n, r, colors):
    """Maximum fraction of vertices incident with one color."""
    by_color = classes_of(n, r, colors)
    best = 0
    for cls in by_color.values():
        incident = set()
        for edge in cls:
            incident.update(edge)
        best = max(best, len(incident))
    return Fraction(best, n)


def brute_force_max_f(n, k, r):
    """max_c f(c) over all k-colorings by full enumeration.  Tiny inputs only."""
    m = len(list(combinations(range(n), r)))
    assert k**m <= 10**6, "oracle is exponential; keep it tiny"
    best = 0
    for colors in product(range(k), repeat=m):
        best = max(best, f_of(n, r, colors))
    return best


def brute_force_min_z(n, k, r):
    """min_c z(c) over all k-colorings by full enumeration.  Tiny inputs only."""
    m = len(list(combinations(range(n), r)))
    assert k**m <= 10**6, "oracle is exponential; keep it tiny"
    best = Fraction(2)
    for colors in product(range(k), repeat=m):
        best = min(best, z_of(n, r, colors))
    return best


def subset_coverage(blocks, t):
    """How many blocks contain each t-subset of the points seen."""
    cover = {}
    for block in blocks:
        for sub in combinations(sorted(block), t):
            cover[sub] = cover.get(sub, 0) + 1
    return cover


def is_matching(edges):
    seen = set()
    for edge in edges:
        for v in edge:
            if v in seen:
                return False
            seen.add(v)
    return True


def bipartite_components(n, pairs):
    """Component count of a set of (left, right) pairs of K_{n,n}."""
    return components_dfs(2 * n, [(a, n + b) for a, b in pairs])


def sqrt_rate_vs(k, x):
    """Compare v = 1/2 - 1/(2*sqrt(k)) with rational x: -1, 0, or 1.

    v < x  iff  1/2 - x < 1/(2*sqrt(k))  iff  4k(1/2-x)^2 < 1 when
    1/2 - x is positive; if 1/2 - x <= 0 then v < 1/2 <= x.  Integer
    arithmetic only.
    """
    a = Fraction(1, 2) - Fraction(x)
    if a <= 0:
        return -1
    lhs = 4 * k * a * a
    if lhs < 1:
        return -1
    if lhs > 1:
        return 1
    return 0
