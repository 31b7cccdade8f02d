"""Hot search and verification loops, written once and run either as
plain Python or compiled by numba.

The environment variable FRACTURE_NUMBA picks the active backend:
unset or "1" compiles when numba is importable, "0" forces the pure
interpreter.  Both backends live in IMPLS so the benchmark can race one
against the other on identical inputs.

Kernel state is flat int64 arrays.  Union-find is by size with no path
compression so every merge is a single reversible write; an undo log of
(kind, color, a, b) records rewinds one edge assignment exactly.  The
apply/undo blocks are inlined rather than factored into inner functions:
the jit compiler mishandles branching closures that mutate enclosing
state, producing silently wrong counts, and flat bodies compile the same
as they interpret.
"""

from __future__ import annotations

import os

import numpy as np


def _search_f_impl(n, r, k, m, edges_flat, prefix, budget, cap, witness_out):
    """Maximize the minimum component count over canonical colorings.

    Colors are introduced in first-use order (an edge may use color c
    only if colors below c already appear earlier), which enumerates one
    representative per color-relabeling class in lexicographic order.
    Returns (best, exhausted, nodes, found); the lexicographically
    smallest maximizing assignment is copied into witness_out.

    Prune: a color with comp components and inc incident vertices ends
    with at most comp + (n - inc) // r components, and unused colors can
    only pull the minimum down, so the minimum over used colors bounds
    every completion of the current partial coloring.
    """
    parent = np.full(k * n, -1, np.int64)
    size = np.zeros(k * n, np.int64)
    comp = np.zeros(k, np.int64)
    inc = np.zeros(k, np.int64)

    log_cap = (m + 1) * (2 * r + 2)
    log_kind = np.zeros(log_cap, np.int64)
    log_c = np.zeros(log_cap, np.int64)
    log_a = np.zeros(log_cap, np.int64)
    log_b = np.zeros(log_cap, np.int64)
    log_len = 0

    mark = np.zeros(m + 1, np.int64)
    used = np.zeros(m + 2, np.int64)
    cursor = np.zeros(m + 1, np.int64)
    assign = np.full(m, -1, np.int64)

    best = np.int64(0)
    found = np.int64(0)
    exhausted = np.int64(1)
    nodes = np.int64(0)
    p = prefix.shape[0]

    u = np.int64(0)
    for d in range(p):
        c = prefix[d]
        mark[d] = log_len
        base = d * r
        for j in range(r):
            idx = c * n + edges_flat[base + j]
            if parent[idx] == -1:
                parent[idx] = idx
                size[idx] = 1
                comp[c] += 1
                inc[c] += 1
                log_kind[log_len] = 0
                log_c[log_len] = c
                log_a[log_len] = idx
                log_len += 1
        ra = c * n + edges_flat[base]
        while parent[ra] != ra:
            ra = parent[ra]
        for j in range(1, r):
            rb = c * n + edges_flat[base + j]
            while parent[rb] != rb:
                rb = parent[rb]
            while parent[ra] != ra:
                ra = parent[ra]
            if rb != ra:
                if size[ra] < size[rb]:
                    ra, rb = rb, ra
                parent[rb] = ra
                size[ra] += size[rb]
                comp[c] -= 1
                log_kind[log_len] = 1
                log_c[log_len] = c
                log_a[log_len] = rb
                log_b[log_len] = ra
                log_len += 1
        assign[d] = c
        if c == u:
            u += 1

    depth = p
    used[depth] = u
    cursor[depth] = 0
    while True:
        do_undo = False
        if depth == m:
            val = np.int64(2**62)
            for cc in range(used[depth]):
                if comp[cc] < val:
                    val = comp[cc]
            if val > best:
                best = val
                found = 1
                for i in range(m):
                    witness_out[i] = assign[i]
            if depth == p:
                break
            depth -= 1
            do_undo = True
        else:
            limit = used[depth]
            if limit > k - 1:
                limit = k - 1
            c = cursor[depth]
            if c > limit:
                if depth == p:
                    break
                depth -= 1
                do_undo = True
            else:
                cursor[depth] += 1
                nodes += 1
                if nodes > budget:
                    exhausted = 0
                    break
                mark[depth] = log_len
                base = depth * r
                for j in range(r):
                    idx = c * n + edges_flat[base + j]
                    if parent[idx] == -1:
                        parent[idx] = idx
                        size[idx] = 1
                        comp[c] += 1
                        inc[c] += 1
                        log_kind[log_len] = 0
                        log_c[log_len] = c
                        log_a[log_len] = idx
                        log_len += 1
                ra = c * n + edges_flat[base]
                while parent[ra] != ra:
                    ra = parent[ra]
                for j in range(1, r):
                    rb = c * n + edges_flat[base + j]
                    while parent[rb] != rb:
                        rb = parent[rb]
                    while parent[ra] != ra:
                        ra = parent[ra]
                    if rb != ra:
                        if size[ra] < size[rb]:
                            ra, rb = rb, ra
                        parent[rb] = ra
                        size[ra] += size[rb]
                        comp[c] -= 1
                        log_kind[log_len] = 1
                        log_c[log_len] = c
                        log_a[log_len] = rb
                        log_b[log_len] = ra
                        log_len += 1
                assign[depth] = c
                newu = used[depth]
                if c == newu:
                    newu += 1
                bound = cap
                for cc in range(newu):
                    ub = comp[cc] + (n - inc[cc]) // r
                    if ub < bound:
                        bound = ub
                if bound <= best:
                    do_undo = True
                else:
                    depth += 1
                    used[depth] = newu
                    cursor[depth] = 0
        if do_undo:
            to_mark = mark[depth]
            while log_len > to_mark:
                log_len -= 1
                uc = log_c[log_len]
                ua = log_a[log_len]
                if log_kind[log_len] == 0:
                    parent[ua] = -1
                    size[ua] = 0
                    comp[uc] -= 1
                    inc[uc] -= 1
                else:
                    ub2 = log_b[log_len]
                    size[ub2] -= size[ua]
                    parent[ua] = ua
                    comp[uc] += 1
    return best, exhausted, nodes, found


def _search_z_impl(n, r, k, m, edges_flat, prefix, budget, witness_out):
    """Minimize the maximum incident-vertex count over canonical
    colorings; same enumeration and undo machinery as the f search.

    Prune: incident counts only grow as edges are added, so the current
    maximum already bounds every completion from below.
    """
    parent = np.full(k * n, -1, np.int64)
    size = np.zeros(k * n, np.int64)
    comp = np.zeros(k, np.int64)
    inc = np.zeros(k, np.int64)

    log_cap = (m + 1) * (2 * r + 2)
    log_kind = np.zeros(log_cap, np.int64)
    log_c = np.zeros(log_cap, np.int64)
    log_a = np.zeros(log_cap, np.int64)
    log_b = np.zeros(log_cap, np.int64)
    log_len = 0

    mark = np.zeros(m + 1, np.int64)
    used = np.zeros(m + 2, np.int64)
    cursor = np.zeros(m + 1, np.int64)
    assign = np.full(m, -1, np.int64)

    best = np.int64(n + 1)
    found = np.int64(0)
    exhausted = np.int64(1)
    nodes = np.int64(0)
    p = prefix.shape[0]

    u = np.int64(0)
    for d in range(p):
        c = prefix[d]
        mark[d] = log_len
        base = d * r
        for j in range(r):
            idx = c * n + edges_flat[base + j]
            if parent[idx] == -1:
                parent[idx] = idx
                size[idx] = 1
                comp[c] += 1
                inc[c] += 1
                log_kind[log_len] = 0
                log_c[log_len] = c
                log_a[log_len] = idx
                log_len += 1
        ra = c * n + edges_flat[base]
        while parent[ra] != ra:
            ra = parent[ra]
        for j in range(1, r):
            rb = c * n + edges_flat[base + j]
            while parent[rb] != rb:
                rb = parent[rb]
            while parent[ra] != ra:
                ra = parent[ra]
            if rb != ra:
                if size[ra] < size[rb]:
                    ra, rb = rb, ra
                parent[rb] = ra
                size[ra] += size[rb]
                comp[c] -= 1
                log_kind[log_len] = 1
                log_c[log_len] = c
                log_a[log_len] = rb
                log_b[log_len] = ra
                log_len += 1
        assign[d] = c
        if c == u:
            u += 1

    depth = p
    used[depth] = u
    cursor[depth] = 0
    while True:
        do_undo = False
        if depth == m:
            val = np.int64(0)
            for cc in range(used[depth]):
                if inc[cc] > val:
                    val = inc[cc]
            if val < best:
                best = val
                found = 1
                for i in range(m):
                    witness_out[i] = assign[i]
            if depth == p:
                break
            depth -= 1
            do_undo = True
        else:
            limit = used[depth]
            if limit > k - 1:
                limit = k - 1
            c = cursor[depth]
            if c > limit:
                if depth == p:
                    break
                depth -= 1
                do_undo = True
            else:
                cursor[depth] += 1
                nodes += 1
                if nodes > budget:
                    exhausted = 0
                    break
                mark[depth] = log_len
                base = depth * r
                for j in range(r):
                    idx = c * n + edges_flat[base + j]
                    if parent[idx] == -1:
                        parent[idx] = idx
                        size[idx] = 1
                        comp[c] += 1
                        inc[c] += 1
                        log_kind[log_len] = 0
                        log_c[log_len] = c
                        log_a[log_len] = idx
                        log_len += 1
                ra = c * n + edges_flat[base]
                while parent[ra] != ra:
                    ra = parent[ra]
                for j in range(1, r):
                    rb = c * n + edges_flat[base + j]
                    while parent[rb] != rb:
                        rb = parent[rb]
                    while parent[ra] != ra:
                        ra = parent[ra]
                    if rb != ra:
                        if size[ra] < size[rb]:
                            ra, rb = rb, ra
                        parent[rb] = ra
                        size[ra] += size[rb]
                        comp[c] -= 1
                        log_kind[log_len] = 1
                        log_c[log_len] = c
                        log_a[log_len] = rb
                        log_b[log_len] = ra
                        log_len += 1
                assign[depth] = c
                newu = used[depth]
                if c == newu:
                    newu += 1
                cur = np.int64(0)
                for cc in range(newu):
                    if inc[cc] > cur:
                        cur = inc[cc]
                if cur >= best:
                    do_undo = True
                else:
                    depth += 1
                    used[depth] = newu
                    cursor[depth] = 0
        if do_undo:
            to_mark = mark[depth]
            while log_len > to_mark:
                log_len -= 1
                uc = log_c[log_len]
                ua = log_a[log_len]
                if log_kind[log_len] == 0:
                    parent[ua] = -1
                    size[ua] = 0
                    comp[uc] -= 1
                    inc[uc] -= 1
                else:
                    ub2 = log_b[log_len]
                    size[ub2] -= size[ua]
                    parent[ua] = ua
                    comp[uc] += 1
    return best, exhausted, nodes, found


def _eval_impl(n, r, k, m, edges_flat, assign, parent):
    """(min components over nonempty classes, max incident count) of one
    assignment; parent is scratch of length n."""
    best_f = np.int64(2**62)
    max_inc = np.int64(0)
    for c in range(k):
        for v in range(n):
            parent[v] = -1
        comps = np.int64(0)
        incident = np.int64(0)
        for e in range(m):
            if assign[e] != c:
                continue
            base = e * r
            for j in range(r):
                v = edges_flat[base + j]
                if parent[v] == -1:
                    parent[v] = v
                    comps += 1
                    incident += 1
            ra = edges_flat[base]
            while parent[ra] != ra:
                ra = parent[ra]
            for j in range(1, r):
                rb = edges_flat[base + j]
                while parent[rb] != rb:
                    rb = parent[rb]
                while parent[ra] != ra:
                    ra = parent[ra]
                if ra != rb:
                    parent[rb] = ra
                    comps -= 1
        if incident > 0:
            if comps < best_f:
                best_f = comps
            if incident > max_inc:
                max_inc = incident
    return best_f, max_inc


def _verify_kler_impl(n, r, k, m, edges_flat, counterexample_out):
    """Check that every one of the k^m colorings has a class that is
    connected and touches all n vertices.  Returns (holds, checked); on
    failure the offending assignment is copied out."""
    assign = np.zeros(m, np.int64)
    parent = np.empty(n, np.int64)
    checked = np.int64(0)
    while True:
        good = False
        for c in range(k):
            for v in range(n):
                parent[v] = -1
            comps = 0
            incident = 0
            for e in range(m):
                if assign[e] != c:
                    continue
                base = e * r
                for j in range(r):
                    v = edges_flat[base + j]
                    if parent[v] == -1:
                        parent[v] = v
                        comps += 1
                        incident += 1
                ra = edges_flat[base]
                while parent[ra] != ra:
                    ra = parent[ra]
                for j in range(1, r):
                    rb = edges_flat[base + j]
                    while parent[rb] != rb:
                        rb = parent[rb]
                    while parent[ra] != ra:
                        ra = parent[ra]
                    if ra != rb:
                        parent[rb] = ra
                        comps -= 1
            if comps == 1 and incident == n:
                good = True
                break
        checked += 1
        if not good:
            for e in range(m):
                counterexample_out[e] = assign[e]
            return np.int64(0), checked
        pos = m - 1
        while pos >= 0:
            assign[pos] += 1
            if assign[pos] < k:
                break
            assign[pos] = 0
            pos -= 1
        if pos < 0:
            return np.int64(1), checked


def _bulk_eval_impl(n, r, k, m, edges_flat, colorings, out):
    """Row i of out becomes (min components, max incident count) for
    colorings[i]."""
    parent = np.empty(n, np.int64)
    for i in range(colorings.shape[0]):
        f, z = _eval_impl(n, r, k, m, edges_flat, colorings[i], parent)
        out[i, 0] = f
        out[i, 1] = z


_PY_IMPLS = {
    "search_f": _search_f_impl,
    "search_z": _search_z_impl,
    "verify_kler": _verify_kler_impl,
    "bulk_eval": _bulk_eval_impl,
}

IMPLS: dict[str, dict] = {"python": _PY_IMPLS}

try:
    from numba import njit as _njit

    _HAVE_NUMBA = True
except ImportError:
    _HAVE_NUMBA = False

if _HAVE_NUMBA:
    _jit = _njit(cache=True, nogil=True)
    _nb_eval = _jit(_eval_impl)

    def _bulk_eval_nb_src(n, r, k, m, edges_flat, colorings, out):
        parent = np.empty(n, np.int64)
        for i in range(colorings.shape[0]):
            f, z = _nb_eval(n, r, k, m, edges_flat, colorings[i], parent)
            out[i, 0] = f
            out[i, 1] = z

    IMPLS["numba"] = {
        "search_f": _jit(_search_f_impl),
        "search_z": _jit(_search_z_impl),
        "verify_kler": _jit(_verify_kler_impl),
        "bulk_eval": _jit(_bulk_eval_nb_src),
    }

NUMBA_ENABLED = _HAVE_NUMBA and os.environ.get("FRACTURE_NUMBA", "1") != "0"

ACTIVE = IMPLS["numba"] if NUMBA_ENABLED else IMPLS["python"]

search_f_kernel = ACTIVE["search_f"]
search_z_kernel = ACTIVE["search_z"]
verify_kler_kernel = ACTIVE["verify_kler"]
bulk_eval_kernel = ACTIVE["bulk_eval"]
