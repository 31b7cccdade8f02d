"""Block designs and matching decompositions used by the colorings.

Everything here is constructed explicitly and deterministically at desk
scale: finite fields up to order 64 (tables built from the smallest
irreducible polynomial), projective and affine planes of order q <= 8,
Boolean quadruple systems, small inversive planes, one-factorizations
and Hamiltonian decompositions of complete graphs, factorizations of
complete r-uniform hypergraphs into perfect matchings, and decompositions
of small complete graphs into copies of the diamond K4 minus an edge.

Invariants:
    - every Design has each strength-subset in exactly one block,
    - every MatchingDecomposition has edge-disjoint factors of pairwise
      disjoint edges, covering all of C(n, r) when complete,
    - all constructors are deterministic: same input, same output.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import FractureError, all_edges, edge_rank, HypergraphShape

DESK_FIELD_CAP = 64
DESK_PLANE_CAP = 8
BARANYAI_BACKTRACK_CAP = 200


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True


def prime_power_decompose(q: int) -> tuple[int, int] | None:
    """(p, m) with q = p**m and p prime, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        m = 0
        x = q
        while x % p == 0:
            x //= p
            m += 1
        if x == 1:
            return p, m
    return None


@dataclass(frozen=True)
class FiniteField:
    """GF(p**m) with elements 0..q-1 encoded as base-p coefficient vectors.

    Element a encodes the polynomial sum(digit_i(a) * x**i); arithmetic is
    modulo the stored irreducible polynomial.  Tables are tiny (q <= 64).
    """

    p: int
    m: int
    q: int
    modulus: tuple[int, ...]  # monic, coefficients low to high, length m+1
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg(b)]

    def neg(self, a: int) -> int:
        digits = _to_digits(a, self.p, self.m)
        return _from_digits([(-d) % self.p for d in digits], self.p)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        for b in range(1, self.q):
            if self.mul_table[a][b] == 1:
                return b
        raise FractureError("field table corrupt: no inverse found")

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out


def _to_digits(a: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(a % p)
        a //= p
    return out


def _from_digits(digits: list[int], p: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


def _poly_mul_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = a[:]
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    while len(a) < dm:
        a.append(0)
    return a


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = _to_digits(enc, p, d) + [1]
            # long division remainder
            rem = _poly_mod(poly[:], div, p)
            # _poly_mod reduces to deg < len(div)-1 ... need remainder of poly by div
            if all(c == 0 for c in rem):
                return False
    return True


@functools.lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    """The finite field of order q, for prime powers q <= 64.

    For composite q the modulus is the irreducible monic polynomial of
    degree m whose coefficient encoding sum(c_i * p**i) is smallest.
    """
    if q > DESK_FIELD_CAP:
        raise FractureError(f"field order {q} above desk cap {DESK_FIELD_CAP}")
    pm = prime_power_decompose(q)
    if pm is None:
        raise FractureError(f"{q} is not a prime power")
    p, m = pm
    if m == 1:
        modulus = [0, 1]  # x, unused for prime fields
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
        return FiniteField(p, m, q, tuple(modulus), add, mul)
    modulus = None
    for enc in range(p**m):
        cand = _to_digits(enc, p, m) + [1]
        if _is_irreducible(cand, p):
            modulus = cand
            break
    if modulus is None:
        raise FractureError(f"no irreducible polynomial found for GF({q})")
    add_rows = []
    mul_rows = []
    for a in range(q):
        da = _to_digits(a, p, m)
        add_rows.append(
            tuple(
                _from_digits(
                    [(x + y) % p for x, y in zip(da, _to_digits(b, p, m))], p
                )
                for b in range(q)
            )
        )
        row = []
        for b in range(q):
            prod = _poly_mul_mod_p(da, _to_digits(b, p, m), p)
            row.append(_from_digits(_poly_mod(prod, modulus, p), p))
        mul_rows.append(tuple(row))
    return FiniteField(p, m, q, tuple(modulus), tuple(add_rows), tuple(mul_rows))


@dataclass(frozen=True)
class Design:
    """A t-(v, block_size, 1) design: blocks of a fixed size on v points
    such that every strength-subset of points lies in exactly one block."""

    v: int
    strength: int
    block_size: int
    blocks: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        seen: set[tuple[int, ...]] = set()
        for block in self.blocks:
            if len(block) != self.block_size or list(block) != sorted(set(block)):
                raise FractureError(f"malformed block {block}")
            if not all(0 <= x < self.v for x in block):
                raise FractureError(f"block {block} out of range")
            for sub in combinations(block, self.strength):
                if sub in seen:
                    raise FractureError(f"subset {sub} covered twice")
                seen.add(sub)
        if len(seen) != comb(self.v, self.strength):
            raise FractureError(
                f"covered {len(seen)} subsets, expected {comb(self.v, self.strength)}"
            )

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "strength": self.strength,
            "block_size": self.block_size,
            "blocks": [list(b) for b in self.blocks],
        }


def _sorted_blocks(blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@functools.lru_cache(maxsize=None)
def projective_plane(q: int) -> Design:
    """Points and lines of the projective plane of order q (q <= 8).

    Points are the 1-dimensional subspaces of GF(q)^3, normalized so the
    first nonzero coordinate is 1 and ordered lexicographically; lines are
    the 2-dimensional subspaces.
    """
    if q > DESK_PLANE_CAP:
        raise FractureError(f"plane order {q} above desk cap {DESK_PLANE_CAP}")
    F = gf(q)
    reps = []
    for x0 in range(q):
        for x1 in range(q):
            for x2 in range(q):
                v = (x0, x1, x2)
                if v == (0, 0, 0):
                    continue
                first = next(c for c in v if c != 0)
                if first == 1:
                    reps.append(v)
    assert len(reps) == q * q + q + 1
    index = {v: i for i, v in enumerate(reps)}
    blocks = []
    for a in reps:  # line coefficients, same normalization
        line = []
        for v, i in index.items():
            s = 0
            for av, vv in zip(a, v):
                s = F.add(s, F.mul(av, vv))
            if s == 0:
                line.append(i)
        blocks.append(tuple(sorted(line)))
    design = Design(q * q + q + 1, 2, q + 1, _sorted_blocks(blocks))
    design.validate()
    return design


@functools.lru_cache(maxsize=None)
def affine_plane(q: int) -> Design:
    """Points and lines of the affine plane of order q (q <= 8).

    Point (x, y) gets index x*q + y; lines are y = m*x + b plus verticals.
    """
    if q > DESK_PLANE_CAP:
        raise FractureError(f"plane order {q} above desk cap {DESK_PLANE_CAP}")
    F = gf(q)
    blocks = []
    for m in range(q):
        for b in range(q):
            blocks.append(tuple(sorted(x * q + F.add(F.mul(m, x), b) for x in range(q))))
    for c in range(q):
        blocks.append(tuple(sorted(c * q + y for y in range(q))))
    design = Design(q * q, 2, q, _sorted_blocks(blocks))
    design.validate()
    return design


@functools.lru_cache(maxsize=None)
def boolean_sqs(m: int) -> Design:
    """The quadruple system on 2**m points whose blocks are the 4-sets
    with XOR zero (m >= 2); a 3-(2**m, 4, 1) design."""
    if not 2 <= m <= 5:
        raise FractureError(f"need 2 <= m <= 5 for the desk cap, got {m}")
    v = 2**m
    blocks = [
        quad
        for quad in combinations(range(v), 4)
        if quad[0] ^ quad[1] ^ quad[2] ^ quad[3] == 0
    ]
    design = Design(v, 3, 4, _sorted_blocks(blocks))
    design.validate()
    return design


@functools.lru_cache(maxsize=None)
def inversive_plane(q: int) -> Design:
    """The 3-(q**2 + 1, q + 1, 1) design on the projective line over
    GF(q**2): blocks are the images of the subline GF(q) + infinity under
    all fractional-linear maps.  Desk cap q in {2, 3}."""
    if q not in (2, 3):
        raise FractureError(f"inversive plane implemented for q in {{2, 3}}, got {q}")
    F = gf(q * q)
    infinity = F.q  # point index q^2 is the point at infinity
    subfield = [x for x in range(F.q) if F.pow(x, q) == x]
    base = tuple(sorted(subfield + [infinity]))

    def moebius(a: int, b: int, c: int, d: int, z: int) -> int:
        if z == infinity:
            if c == 0:
                return infinity
            return F.div(a, c)
        den = F.add(F.mul(c, z), d)
        if den == 0:
            return infinity
        return F.div(F.add(F.mul(a, z), b), den)

    blocks: set[tuple[int, ...]] = set()
    for a in range(F.q):
        for b in range(F.q):
            for c in range(F.q):
                for d in range(F.q):
                    if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
                        continue
                    blocks.add(tuple(sorted(moebius(a, b, c, d, z) for z in base)))
    design = Design(q * q + 1, 3, q + 1, _sorted_blocks(blocks))
    design.validate()
    return design


@dataclass(frozen=True)
class MatchingDecomposition:
    """Edge-disjoint factors of K_n^r, each factor a set of pairwise
    disjoint edges.  ``complete`` means the factors cover every edge."""

    n: int
    r: int
    factors: tuple[tuple[tuple[int, ...], ...], ...]
    complete: bool

    def validate(self) -> None:
        seen: set[tuple[int, ...]] = set()
        for factor in self.factors:
            used: set[int] = set()
            for e in factor:
                if len(e) != self.r or list(e) != sorted(set(e)):
                    raise FractureError(f"malformed edge {e}")
                if not all(0 <= v < self.n for v in e):
                    raise FractureError(f"edge {e} out of range")
                if e in seen:
                    raise FractureError(f"edge {e} in two factors")
                seen.add(e)
                if used.intersection(e):
                    raise FractureError(f"factor not a matching at {e}")
                used.update(e)
        if self.complete and len(seen) != comb(self.n, self.r):
            raise FractureError(
                f"covered {len(seen)} edges, expected {comb(self.n, self.r)}"
            )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "complete": self.complete,
            "factors": [[list(e) for e in f] for f in self.factors],
        }


def _normalize_factor(edges) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(e)) for e in edges), key=lambda e: tuple(reversed(e))))


@functools.lru_cache(maxsize=None)
def one_factorization(n: int) -> MatchingDecomposition:
    """Perfect matchings partitioning K_n, n even, by the circle method:
    round i pairs the hub n-1 with i and j-rotations around the circle."""
    if n < 2 or n % 2:
        raise FractureError(f"one-factorization needs even n >= 2, got {n}")
    factors = []
    for i in range(n - 1):
        edges = [(n - 1, i)]
        for j in range(1, n // 2):
            edges.append(((i + j) % (n - 1), (i - j) % (n - 1)))
        factors.append(_normalize_factor(edges))
    dec = MatchingDecomposition(n, 2, tuple(factors), complete=True)
    dec.validate()
    return dec


@functools.lru_cache(maxsize=None)
def near_one_factorization(n: int) -> MatchingDecomposition:
    """n maximum matchings partitioning K_n for odd n; matching i misses
    exactly vertex i."""
    if n < 3 or n % 2 == 0:
        raise FractureError(f"near-one-factorization needs odd n >= 3, got {n}")
    factors = []
    for i in range(n):
        edges = [((i + j) % n, (i - j) % n) for j in range(1, (n + 1) // 2)]
        factors.append(_normalize_factor(edges))
    dec = MatchingDecomposition(n, 2, tuple(factors), complete=True)
    dec.validate()
    return dec


@functools.lru_cache(maxsize=None)
def hamiltonian_decomposition(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """(n-1)/2 Hamiltonian cycles partitioning K_n for odd n.

    Cycle j walks the zigzag j, j+1, j-1, j+2, j-2, ... through Z_{n-1}
    and closes through the hub n-1.  Edges are returned in cycle order.
    """
    if n < 3 or n % 2 == 0:
        raise FractureError(f"Hamiltonian decomposition needs odd n >= 3, got {n}")
    hub = n - 1
    ring = n - 1
    cycles = []
    for j in range((n - 1) // 2):
        path = [j]
        for i in range(1, ring):
            step = (i + 1) // 2 if i % 2 else i // 2
            if i % 2:
                path.append((j + step) % ring)
            else:
                path.append((j - step) % ring)
        verts = [hub] + path + [hub]
        cycles.append(
            tuple(
                (min(a, b), max(a, b)) for a, b in zip(verts, verts[1:])
            )
        )
    # partition check
    seen: set[tuple[int, int]] = set()
    for cyc in cycles:
        for e in cyc:
            if e in seen:
                raise FractureError(f"cycle construction repeated edge {e}")
            seen.add(e)
    if len(seen) != comb(n, 2):
        raise FractureError("cycle construction did not cover K_n")
    return tuple(cycles)


def _max_flow(num_nodes: int, caps: dict[tuple[int, int], int], source: int, sink: int) -> dict[tuple[int, int], int]:
    """Edmonds-Karp with deterministic sorted adjacency; returns flows."""
    adj: dict[int, list[int]] = {u: [] for u in range(num_nodes)}
    cap = dict(caps)
    for (u, v) in caps:
        adj[u].append(v)
        adj[v].append(u)
        cap.setdefault((v, u), 0)
    for u in adj:
        adj[u] = sorted(set(adj[u]))
    flow = {e: 0 for e in cap}
    while True:
        # BFS for shortest augmenting path
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for u in queue:
                for v in adj[u]:
                    if v not in prev and cap[(u, v)] - flow[(u, v)] > 0:
                        prev[v] = u
                        nxt.append(v)
            queue = nxt
        if sink not in prev:
            return flow
        # bottleneck along path
        path = []
        v = sink
        while v != source:
            u = prev[v]
            path.append((u, v))
            v = u
        aug = min(cap[e] - flow[e] for e in path)
        for e in path:
            flow[e] += aug
            flow[(e[1], e[0])] -= aug


def _baranyai_flow(n: int, r: int) -> list[tuple[tuple[int, ...], ...]]:
    """Vertex-by-vertex factorization of K_n^r into perfect matchings.

    Each factor holds a multiset of partial edges (traces on the vertices
    placed so far).  Adding vertex i means choosing, per factor, exactly
    one trace to extend; the global quota for extending copies of trace A
    is C(n-i-1, r-|A|-1).  A fractional solution always exists, so an
    integral one is recovered from a max flow at every stage.
    """
    num_factors = comb(n - 1, r - 1)
    factors: list[dict[tuple[int, ...], int]] = [
        {(): n // r} for _ in range(num_factors)
    ]
    for i in range(n):
        types = sorted({t for fac in factors for t in fac if len(t) < r})
        type_index = {t: idx for idx, t in enumerate(types)}
        source = 0
        fac_base = 1
        type_base = 1 + num_factors
        sink = type_base + len(types)
        caps: dict[tuple[int, int], int] = {}
        for j, fac in enumerate(factors):
            caps[(source, fac_base + j)] = 1
            for t in fac:
                if len(t) < r and fac[t] > 0:
                    caps[(fac_base + j, type_base + type_index[t])] = 1
        for t in types:
            quota = comb(n - i - 1, r - len(t) - 1)
            if quota > 0:
                caps[(type_base + type_index[t], sink)] = quota
        flow = _max_flow(sink + 1, caps, source, sink)
        pushed = sum(flow[(source, fac_base + j)] for j in range(num_factors))
        if pushed != num_factors:
            raise FractureError(
                f"stage {i}: integral flow {pushed} < {num_factors}"
            )
        for j, fac in enumerate(factors):
            chosen = None
            for t in fac:
                if len(t) < r and flow.get((fac_base + j, type_base + type_index[t]), 0) == 1:
                    chosen = t
                    break
            if chosen is None:
                raise FractureError(f"stage {i}: factor {j} extended no trace")
            fac[chosen] -= 1
            if fac[chosen] == 0:
                del fac[chosen]
            grown = tuple(sorted(chosen + (i,)))
            fac[grown] = fac.get(grown, 0) + 1
    out = []
    for fac in factors:
        edges = []
        for t, mult in fac.items():
            if len(t) != r or mult != 1:
                raise FractureError("factorization left a partial trace")
            edges.append(t)
        out.append(_normalize_factor(edges))
    return out


def _baranyai_backtrack(n: int, r: int) -> list[tuple[tuple[int, ...], ...]] | None:
    """Factor-by-factor search: complete the colex-smallest uncovered edge
    into a perfect matching of uncovered edges, recurse, backtrack."""
    edges = all_edges(n, r)
    uncovered = set(edges)

    def edge_key(e: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(reversed(e))

    def perfect_matchings(avail: set[tuple[int, ...]], missing: frozenset[int]):
        if not missing:
            yield []
            return
        v = min(missing)
        cands = sorted(
            (e for e in avail if v in e and missing.issuperset(e)), key=edge_key
        )
        for e in cands:
            for rest in perfect_matchings(avail, missing - frozenset(e)):
                yield [e] + rest

    def solve() -> list[tuple[tuple[int, ...], ...]] | None:
        if not uncovered:
            return []
        anchor = min(uncovered, key=edge_key)
        full = frozenset(range(n))
        for matching in perfect_matchings(uncovered, full - frozenset(anchor)):
            factor = [anchor] + matching
            for e in factor:
                uncovered.discard(e)
            rest = solve()
            if rest is not None:
                return [_normalize_factor(factor)] + rest
            uncovered.update(factor)
        return None

    return solve()


@functools.lru_cache(maxsize=None)
def baranyai(n: int, r: int) -> MatchingDecomposition:
    """Partition of all of K_n^r into C(n-1, r-1) perfect matchings, r | n.

    Small instances (C(n, r) <= 200) go through plain backtracking; larger
    ones use the stage-by-stage integral-flow construction.
    """
    if r < 2 or n < r:
        raise FractureError(f"invalid ({n}, {r})")
    if n % r:
        raise FractureError(f"factorization needs r | n, got n={n}, r={r}")
    if comb(n, r) > 3000:
        raise FractureError(f"C({n},{r}) above desk cap 3000")
    if comb(n, r) <= BARANYAI_BACKTRACK_CAP:
        factors = _baranyai_backtrack(n, r)
        if factors is None:
            raise FractureError(f"backtracking failed on ({n}, {r})")
    else:
        factors = _baranyai_flow(n, r)
    dec = MatchingDecomposition(n, r, tuple(factors), complete=True)
    dec.validate()
    if len(dec.factors) != comb(n - 1, r - 1):
        raise FractureError("wrong factor count")
    return dec


def disjoint_max_matchings(n: int, r: int, t: int) -> MatchingDecomposition:
    """t pairwise edge-disjoint maximum matchings (floor(n/r) edges each).

    For graphs this is sliced from a (near-)one-factorization and exists
    whenever n >= t + 1.  For r >= 3 with r | n it is sliced from the
    complete factorization; otherwise a greedy backtracking construction
    is attempted and failure reported honestly.
    """
    if t < 0:
        raise FractureError(f"need t >= 0, got {t}")
    if t == 0:
        return MatchingDecomposition(n, r, (), complete=False)
    if r == 2:
        # n >= t + 1 always suffices; odd n = t also works (n maximum matchings)
        limit = n - 1 if n % 2 == 0 else n
        if t > limit:
            raise FractureError(
                f"K_{n} has at most {limit} disjoint maximum matchings, asked for {t}"
            )
        base = one_factorization(n) if n % 2 == 0 else near_one_factorization(n)
        dec = MatchingDecomposition(n, 2, base.factors[:t], complete=False)
        dec.validate()
        return dec
    if n % r == 0 and t <= comb(n - 1, r - 1):
        base = baranyai(n, r)
        dec = MatchingDecomposition(n, r, base.factors[:t], complete=False)
        dec.validate()
        return dec
    factors = _disjoint_matchings_backtrack(n, r, t)
    if factors is None:
        raise FractureError(
            f"could not build {t} disjoint maximum matchings in K_{n}^{r}"
        )
    dec = MatchingDecomposition(n, r, tuple(factors), complete=False)
    dec.validate()
    return dec


def _disjoint_matchings_backtrack(n: int, r: int, t: int):
    size = n // r
    edges = all_edges(n, r)

    def edge_key(e):
        return tuple(reversed(e))

    used: set[tuple[int, ...]] = set()

    def build_matching(chosen: list, free: set[int], avail: list):
        if len(chosen) == size:
            return list(chosen)
        v = min(free)
        for e in avail:
            if v in e and all(u in free for u in e):
                chosen.append(e)
                res = build_matching(chosen, free - set(e), avail)
                if res is not None:
                    return res
                chosen.pop()
        # v may stay unmatched only if enough slack remains
        if len(free) - 1 >= (size - len(chosen)) * r:
            res = build_matching(chosen, free - {v}, avail)
            if res is not None:
                return res
        return None

    def solve(count: int):
        if count == t:
            return []
        avail = sorted((e for e in edges if e not in used), key=edge_key)
        matching = build_matching([], set(range(n)), avail)
        if matching is None:
            return None
        used.update(matching)
        rest = solve(count + 1)
        if rest is not None:
            return [_normalize_factor(matching)] + rest
        used.difference_update(matching)
        return None

    return solve(0)


DIAMOND_COUNTS = {10: 9, 11: 11}


@functools.lru_cache(maxsize=None)
def k4minus_decomposition(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Partition of E(K_n) into copies of the diamond (K_4 minus an edge),
    found by backtracking; 9 copies for n = 10, 11 copies for n = 11.

    The search anchors on an uncovered edge with the most depleted
    endpoints and prunes on local vertex feasibility: a vertex of
    uncovered degree 1 is stuck, a vertex of degree 2 needs its two
    neighbors still adjacent (it will sit opposite the missing edge), a
    vertex of degree 3 needs two uncovered pairs among its neighbors (it
    must be a hub of one copy).
    """
    if n not in DIAMOND_COUNTS:
        raise FractureError(f"diamond decomposition implemented for n in 10..11, got {n}")
    uncovered: set[tuple[int, int]] = set()
    adj: list[set[int]] = [set() for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            uncovered.add((a, b))
            adj[a].add(b)
            adj[b].add(a)

    def pair_key(e):
        return tuple(reversed(e))

    def candidates(anchor: tuple[int, int]):
        """Diamonds containing anchor with all five edges uncovered."""
        u, v = anchor
        others = [x for x in range(n) if x != u and x != v]
        out = []
        for y, z in combinations(others, 2):
            quad = sorted((u, v, y, z))
            pairs = [tuple(sorted(p)) for p in combinations(quad, 2)]
            for missing in pairs:
                if missing == anchor:
                    continue
                five = [p for p in pairs if p != missing]
                if all(p in uncovered for p in five):
                    out.append(tuple(sorted(five, key=pair_key)))
        return out

    def place(copy):
        for a, b in copy:
            uncovered.discard((a, b))
            adj[a].discard(b)
            adj[b].discard(a)

    def unplace(copy):
        for a, b in copy:
            uncovered.add((a, b))
            adj[a].add(b)
            adj[b].add(a)

    def feasible() -> bool:
        for v in range(n):
            d = len(adj[v])
            if d == 1:
                return False
            if d == 2:
                a, b = sorted(adj[v])
                if (a, b) not in uncovered:
                    return False
            elif d == 3:
                a, b, c = sorted(adj[v])
                cnt = (
                    ((a, b) in uncovered)
                    + ((a, c) in uncovered)
                    + ((b, c) in uncovered)
                )
                if cnt < 2:
                    return False
        return True

    def solve():
        if not uncovered:
            return []
        anchor = min(
            uncovered, key=lambda e: (len(adj[e[0]]) + len(adj[e[1]]), pair_key(e))
        )
        for copy in candidates(anchor):
            place(copy)
            if feasible():
                rest = solve()
                if rest is not None:
                    return [copy] + rest
            unplace(copy)
        return None

    copies = solve()
    if copies is None:
        raise FractureError(f"no diamond decomposition found for n={n}")
    if len(copies) != DIAMOND_COUNTS[n]:
        raise FractureError("unexpected copy count")
    return tuple(copies)


def decomposition_to_coloring_edges(n: int, r: int, groups) -> list[int]:
    """Color assignment (colex order) giving group i color i; groups must
    partition all edges."""
    shape = HypergraphShape(n, r)
    assignment = [-1] * shape.edge_count
    for color, group in enumerate(groups):
        for e in group:
            rank = edge_rank(tuple(sorted(e)), shape)
            if assignment[rank] != -1:
                raise FractureError(f"edge {e} colored twice")
            assignment[rank] = color
    if -1 in assignment:
        raise FractureError("groups do not cover all edges")
    return assignment
