"""Exact optimization drivers over the kernel layer.

The exhaustive searches enumerate colorings canonically (colors appear
in first-use order) and split the tree at a fixed depth into prefix
subtrees.  Each subtree gets an equal share of the node budget and runs
independently, so the merged result is identical whether subtrees run on
one thread or many; the thread count is a throughput knob, never a
semantics knob.  FRACTURE_THREADS overrides the thread hint.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import _kernels
from .bounds import f_upper_counting
from .core import (
    Coloring,
    FractureError,
    HypergraphShape,
    all_edges,
    class_stats,
    f_value,
    z_value,
)

_UNLIMITED = 2**62
_PREFIX_DEPTH = 4


@dataclass(frozen=True)
class SearchOptions:
    node_budget: int | None = None
    thread_hint: int | None = None


@dataclass(frozen=True)
class SearchResult:
    """value is exact when exhausted is True, otherwise a best-found."""

    value: object
    witness: Coloring | None
    exhausted: bool
    nodes: int


@dataclass(frozen=True)
class ExhaustiveCheck:
    holds: bool
    checked: int
    counterexample: Coloring | None


def _thread_count(options: SearchOptions | None) -> int:
    env = os.environ.get("FRACTURE_THREADS")
    if env is not None:
        return max(1, int(env))
    if options is not None and options.thread_hint is not None:
        return max(1, options.thread_hint)
    return 1


def _edges_flat(shape: HypergraphShape) -> np.ndarray:
    return np.array(
        [v for e in all_edges(shape.n, shape.r) for v in e], dtype=np.int64
    )


def _canonical_prefixes(m: int, k: int, depth: int) -> list[tuple[int, ...]]:
    """All first-use-canonical color tuples of the given length."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], u: int) -> None:
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        for c in range(min(u, k - 1) + 1):
            prefix.append(c)
            rec(prefix, u + 1 if c == u else u)
            prefix.pop()

    rec([], 0)
    return out


def _run_subtrees(kernel, all_args, threads):
    """Run one kernel call per prepared argument tuple, optionally on a
    thread pool; results come back indexed so merge order is fixed."""
    if threads <= 1 or len(all_args) <= 1:
        return [kernel(*a) for a in all_args]
    results = [None] * len(all_args)
    with ThreadPoolExecutor(max_workers=min(threads, len(all_args))) as pool:
        futures = {pool.submit(kernel, *a): i for i, a in enumerate(all_args)}
        for fut, i in futures.items():
            results[i] = fut.result()
    return results


def exact_f(n: int, k: int, r: int = 2, options: SearchOptions | None = None) -> SearchResult:
    """The largest achievable minimum component count over colorings of
    the complete r-uniform hypergraph on n vertices with at most k
    colors, with a witness coloring.

    Exhaustive over canonical colorings; exact when exhausted is True.
    The witness is rechecked through the plain evaluator before being
    returned.
    """
    shape = HypergraphShape(n, r)
    m = shape.edge_count
    if not 1 <= k <= m:
        raise FractureError(f"need 1 <= k <= {m}, got k={k}")
    cap = min(n // r, int(f_upper_counting(n, k, r).value))
    ef = _edges_flat(shape)
    depth = min(m, _PREFIX_DEPTH)
    prefixes = _canonical_prefixes(m, k, depth)
    total_budget = _UNLIMITED if options is None or options.node_budget is None else options.node_budget
    per_budget = max(1, total_budget // len(prefixes)) if total_budget < _UNLIMITED else _UNLIMITED
    witnesses = [np.full(m, -1, dtype=np.int64) for _ in prefixes]
    all_args = [
        (n, r, k, m, ef, np.array(p, dtype=np.int64), per_budget, cap, witnesses[i])
        for i, p in enumerate(prefixes)
    ]
    raw = _run_subtrees(_kernels.search_f_kernel, all_args, _thread_count(options))
    best = 0
    best_i = -1
    nodes = 0
    all_exhausted = True
    for i, (val, exh, nd, found) in enumerate(raw):
        nodes += int(nd)
        if not exh:
            all_exhausted = False
        if found and int(val) > best:
            best = int(val)
            best_i = i
    if best_i < 0:
        raise FractureError("search found no leaf; budget too small")
    witness = Coloring(shape, k, tuple(int(x) for x in witnesses[best_i]))
    if f_value(witness) != best:
        raise FractureError("witness does not evaluate to the reported value")
    exhausted = all_exhausted or best == cap
    return SearchResult(best, witness, exhausted, nodes)


def exact_z(n: int, k: int, r: int = 2, options: SearchOptions | None = None) -> SearchResult:
    """The smallest achievable maximum incidence fraction over colorings
    with at most k colors, as an exact Fraction, with witness."""
    shape = HypergraphShape(n, r)
    m = shape.edge_count
    if not 1 <= k <= m:
        raise FractureError(f"need 1 <= k <= {m}, got k={k}")
    ef = _edges_flat(shape)
    depth = min(m, _PREFIX_DEPTH)
    prefixes = _canonical_prefixes(m, k, depth)
    total_budget = _UNLIMITED if options is None or options.node_budget is None else options.node_budget
    per_budget = max(1, total_budget // len(prefixes)) if total_budget < _UNLIMITED else _UNLIMITED
    witnesses = [np.full(m, -1, dtype=np.int64) for _ in prefixes]
    all_args = [
        (n, r, k, m, ef, np.array(p, dtype=np.int64), per_budget, witnesses[i])
        for i, p in enumerate(prefixes)
    ]
    raw = _run_subtrees(_kernels.search_z_kernel, all_args, _thread_count(options))
    best = n + 1
    best_i = -1
    nodes = 0
    all_exhausted = True
    for i, (val, exh, nd, found) in enumerate(raw):
        nodes += int(nd)
        if not exh:
            all_exhausted = False
        if found and int(val) < best:
            best = int(val)
            best_i = i
    if best_i < 0:
        raise FractureError("search found no leaf; budget too small")
    witness = Coloring(shape, k, tuple(int(x) for x in witnesses[best_i]))
    if z_value(witness) != Fraction(best, n):
        raise FractureError("witness does not evaluate to the reported value")
    exhausted = all_exhausted or best == r
    return SearchResult(Fraction(best, n), witness, exhausted, nodes)


def verify_k_le_r(n: int, k: int, r: int = 2, limit: int = 10**7) -> ExhaustiveCheck:
    """Check by raw enumeration that with at most r colors, every
    coloring has a class that is connected and spans all n vertices.

    This is the exhaustive ground truth behind treating f as 1 whenever
    k <= r; it refuses instances beyond the enumeration cap.
    """
    if k > r:
        raise FractureError(f"claim only holds for k <= r, got k={k} > r={r}")
    shape = HypergraphShape(n, r)
    m = shape.edge_count
    if k**m > limit:
        raise FractureError(f"{k}^{m} colorings exceed the cap {limit}")
    cx = np.full(m, -1, dtype=np.int64)
    holds, checked = _kernels.verify_kler_kernel(n, r, k, m, _edges_flat(shape), cx)
    counterexample = None
    if not holds:
        counterexample = Coloring(shape, k, tuple(int(x) for x in cx))
    return ExhaustiveCheck(bool(holds), int(checked), counterexample)


def bulk_eval(n: int, r: int, k: int, colorings: np.ndarray) -> np.ndarray:
    """Rows of (min components, max incident count), one per coloring in
    the (num, C(n,r)) int array."""
    shape = HypergraphShape(n, r)
    m = shape.edge_count
    if colorings.ndim != 2 or colorings.shape[1] != m:
        raise FractureError(f"colorings must be (num, {m})")
    arr = np.ascontiguousarray(colorings, dtype=np.int64)
    out = np.zeros((arr.shape[0], 2), dtype=np.int64)
    _kernels.bulk_eval_kernel(n, r, k, m, _edges_flat(shape), arr, out)
    return out


def _objective(coloring: Coloring) -> tuple[int, int]:
    stats = class_stats(coloring)
    return min(s.components for s in stats), sum(s.components for s in stats)


def randomized_improve(
    n: int,
    k: int,
    r: int = 2,
    seed: int = 0,
    restarts: int = 20,
    steps: int = 2000,
) -> SearchResult:
    """Seeded stochastic hill climb on (min components, total components).

    Each restart draws a uniform coloring and repeatedly recolors one
    random edge, keeping the move when the objective does not drop.
    Deterministic for a fixed seed; never claims exactness.
    """
    shape = HypergraphShape(n, r)
    m = shape.edge_count
    if not 1 <= k <= m:
        raise FractureError(f"need 1 <= k <= {m}, got k={k}")
    rng = np.random.Generator(np.random.PCG64(seed))
    best_obj = (-1, -1)
    best_assign: tuple[int, ...] | None = None
    evals = 0
    for _ in range(restarts):
        assign = rng.integers(0, k, size=m).tolist()
        cur = _objective(Coloring(shape, k, tuple(assign)))
        evals += 1
        for _ in range(steps):
            e = int(rng.integers(0, m))
            c = int(rng.integers(0, k))
            if assign[e] == c:
                continue
            old = assign[e]
            assign[e] = c
            cand = _objective(Coloring(shape, k, tuple(assign)))
            evals += 1
            if cand >= cur:
                cur = cand
            else:
                assign[e] = old
        if cur > best_obj:
            best_obj = cur
            best_assign = tuple(assign)
    assert best_assign is not None
    witness = Coloring(shape, k, best_assign)
    return SearchResult(best_obj[0], witness, False, evals)
