"""Array kernels for the hot loops.

Everything here operates on plain integer numpy arrays so that it compiles
under numba.  The wrappers in the public modules own the arrays; nothing in
this file knows about ``MultiGraph``.

Pebble-game state layout, shared by every pebble kernel:

``eu, ev``
    endpoints of each edge id.
``tail``
    tail vertex of each accepted edge, ``-1`` otherwise.
``out``
    ``(n, k)`` table of out-edges per vertex, rows kept sorted by
    ``(head, edge id)`` and padded with ``-1``.
``outdeg, pebbles``
    per-vertex counts; ``outdeg[v] + pebbles[v] == k`` always.
"""

import numpy as np

from ._jit import njit

TIGHT = 0
SPARSE = 1
NOT_SPARSE = 2


# --------------------------------------------------------------------------
# pebble game
# --------------------------------------------------------------------------

@njit
def _out_add(out, outdeg, eu, ev, x, e):
    head = eu[e] + ev[e] - x
    j = outdeg[x]
    while j > 0:
        f = out[x, j - 1]
        fh = eu[f] + ev[f] - x
        if fh < head or (fh == head and f < e):
            break
        out[x, j] = f
        j -= 1
    out[x, j] = e
    outdeg[x] += 1


@njit
def _out_remove(out, outdeg, x, e):
    d = outdeg[x]
    j = 0
    while out[x, j] != e:
        j += 1
    while j < d - 1:
        out[x, j] = out[x, j + 1]
        j += 1
    out[x, d - 1] = -1
    outdeg[x] = d - 1


@njit
def _flip(eu, ev, tail, out, outdeg, e):
    t = tail[e]
    h = eu[e] + ev[e] - t
    _out_remove(out, outdeg, t, e)
    _out_add(out, outdeg, eu, ev, h, e)
    tail[e] = h


@njit
def _collect(x, u, v, eu, ev, tail, out, outdeg, pebbles,
             seen, stack_v, stack_i, parent, flips, nflips):
    """Depth-first search from ``x`` for a free pebble off ``{u, v}``.

    On success the path is reversed, the pebble moves to ``x``, and the
    flipped edges are appended to ``flips``.  Returns ``(w, nflips)`` with
    ``w`` the donor vertex, or ``w == -1``.
    """
    n = pebbles.shape[0]
    for i in range(n):
        seen[i] = False
    seen[u] = True
    seen[v] = True
    top = 0
    stack_v[0] = x
    stack_i[0] = 0
    found = -1
    while top >= 0:
        y = stack_v[top]
        i = stack_i[top]
        if i < outdeg[y]:
            stack_i[top] = i + 1
            e = out[y, i]
            w = eu[e] + ev[e] - y
            if not seen[w]:
                seen[w] = True
                parent[w] = e
                if pebbles[w] > 0:
                    found = w
                    break
                top += 1
                stack_v[top] = w
                stack_i[top] = 0
        else:
            top -= 1
    if found < 0:
        return -1, nflips
    cur = found
    while cur != x:
        e = parent[cur]
        prev = eu[e] + ev[e] - cur
        _flip(eu, ev, tail, out, outdeg, e)
        flips[nflips] = e
        nflips += 1
        cur = prev
    pebbles[found] -= 1
    pebbles[x] += 1
    return found, nflips


@njit
def _reach(u, v, eu, ev, out, outdeg, mark, queue):
    n = mark.shape[0]
    for i in range(n):
        mark[i] = False
    mark[u] = True
    mark[v] = True
    queue[0] = u
    qt = 1
    if v != u:
        queue[1] = v
        qt = 2
    qh = 0
    while qh < qt:
        y = queue[qh]
        qh += 1
        for i in range(outdeg[y]):
            e = out[y, i]
            w = eu[e] + ev[e] - y
            if not mark[w]:
                mark[w] = True
                queue[qt] = w
                qt += 1


@njit
def pebble_insert(eu, ev, tail, out, outdeg, pebbles, k, ell, u, v, eid,
                  commit, witness):
    """Try to insert edge ``uv`` with id ``eid``.

    Returns True when ``ell + 1`` pebbles can be gathered on the endpoints.
    With ``commit`` the edge is then accepted and the gathering reversals
    are kept; otherwise (and always on failure) the state is restored
    exactly.  On failure ``witness`` marks the violating vertex set, taken
    at the moment the search gave up.
    """
    n = pebbles.shape[0]
    need = ell + 1
    if u == v and need > k:
        for i in range(n):
            witness[i] = False
        witness[u] = True
        return False

    seen = np.zeros(n, dtype=np.bool_)
    stack_v = np.empty(n, dtype=np.int64)
    stack_i = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    flips = np.empty(n * need + 1, dtype=np.int64)
    moves = np.empty((need, 2), dtype=np.int64)
    nflips = 0
    nmoves = 0

    ok = True
    while True:
        have = pebbles[u] if u == v else pebbles[u] + pebbles[v]
        if have >= need:
            break
        w = -1
        if pebbles[u] < k:
            w, nflips = _collect(u, u, v, eu, ev, tail, out, outdeg, pebbles,
                                 seen, stack_v, stack_i, parent, flips, nflips)
            if w >= 0:
                moves[nmoves, 0] = u
                moves[nmoves, 1] = w
                nmoves += 1
        if w < 0 and u != v and pebbles[v] < k:
            w, nflips = _collect(v, u, v, eu, ev, tail, out, outdeg, pebbles,
                                 seen, stack_v, stack_i, parent, flips, nflips)
            if w >= 0:
                moves[nmoves, 0] = v
                moves[nmoves, 1] = w
                nmoves += 1
        if w < 0:
            ok = False
            break

    if ok and commit:
        if u == v:
            t = u
        elif pebbles[u] > 0 and pebbles[v] > 0:
            t = min(u, v)
        elif pebbles[u] > 0:
            t = u
        else:
            t = v
        pebbles[t] -= 1
        tail[eid] = t
        _out_add(out, outdeg, eu, ev, t, eid)
        return True

    if not ok:
        _reach(u, v, eu, ev, out, outdeg, witness, stack_v)
    for j in range(nflips - 1, -1, -1):
        _flip(eu, ev, tail, out, outdeg, flips[j])
    for j in range(nmoves):
        pebbles[moves[j, 0]] -= 1
        pebbles[moves[j, 1]] += 1
    return ok


@njit
def pebble_run(eu, ev, m, n, k, ell, tail, witness):
    """Insert edges ``0..m-1`` in order; returns ``(class, first_rejected)``.

    ``tail`` receives the final orientation (``-1`` for rejected edges) and
    ``witness`` the violating set of the first rejection.
    """
    out = np.full((n, k), -1, dtype=np.int64)
    outdeg = np.zeros(n, dtype=np.int64)
    pebbles = np.full(n, k, dtype=np.int64)
    scratch = np.zeros(n, dtype=np.bool_)
    for e in range(m):
        tail[e] = -1
    first_bad = -1
    for e in range(m):
        if first_bad < 0:
            accepted = pebble_insert(eu, ev, tail, out, outdeg, pebbles, k, ell,
                                     eu[e], ev[e], e, True, witness)
        else:
            accepted = pebble_insert(eu, ev, tail, out, outdeg, pebbles, k, ell,
                                     eu[e], ev[e], e, True, scratch)
        if not accepted and first_bad < 0:
            first_bad = e
    if first_bad >= 0:
        return NOT_SPARSE, first_bad
    if m == k * n - ell:
        return TIGHT, -1
    return SPARSE, -1


@njit
def pebble_classify_batch(eus, evs, ms, n, k, ell):
    """Pebble-game classification of a batch of graphs on ``n`` vertices."""
    b = eus.shape[0]
    result = np.empty(b, dtype=np.int8)
    width = max(eus.shape[1], 1)
    tail = np.empty(width, dtype=np.int64)
    witness = np.zeros(max(n, 1), dtype=np.bool_)
    for g in range(b):
        cls, _ = pebble_run(eus[g], evs[g], ms[g], n, k, ell, tail, witness)
        result[g] = cls
    return result


# --------------------------------------------------------------------------
# brute force
# --------------------------------------------------------------------------

@njit
def first_violating_subset(eu, ev, m, masks, sizes, k, ell):
    """Index of the first mask whose span breaks the sparsity count, else -1.

    Subsets spanning no edge are never violations.
    """
    for i in range(masks.shape[0]):
        mask = masks[i]
        cnt = 0
        for e in range(m):
            if (mask >> eu[e]) & 1 and (mask >> ev[e]) & 1:
                cnt += 1
        if cnt >= 1 and cnt > k * sizes[i] - ell:
            return i
    return -1


@njit
def bruteforce_classify_batch(eus, evs, ms, n, k, ell, masks, sizes):
    b = eus.shape[0]
    result = np.empty(b, dtype=np.int8)
    for g in range(b):
        m = ms[g]
        if first_violating_subset(eus[g], evs[g], m, masks, sizes, k, ell) >= 0:
            result[g] = NOT_SPARSE
        elif m == k * n - ell:
            result[g] = TIGHT
        else:
            result[g] = SPARSE
    return result


@njit
def orient_exact(eu, ev, m, n, k, tails):
    """Backtracking search for an orientation with out-degree exactly ``k``.

    Requires ``m == k * n``; every partial assignment keeps out-degrees at
    most ``k``, so a complete one has all out-degrees equal to ``k``.
    """
    if m != k * n:
        return False
    if m == 0:
        return True
    outdeg = np.zeros(n, dtype=np.int64)
    choice = np.full(m, -1, dtype=np.int64)
    j = 0
    while j >= 0:
        if j == m:
            for e in range(m):
                tails[e] = eu[e] if choice[e] == 0 else ev[e]
            return True
        c = choice[j]
        if c >= 0:
            outdeg[eu[j] if c == 0 else ev[j]] -= 1
        limit = 1 if eu[j] == ev[j] else 2
        c += 1
        while c < limit and outdeg[eu[j] if c == 0 else ev[j]] >= k:
            c += 1
        if c >= limit:
            choice[j] = -1
            j -= 1
            continue
        choice[j] = c
        outdeg[eu[j] if c == 0 else ev[j]] += 1
        j += 1
    return False


@njit
def orient_exact_batch(eus, evs, ms, n, k):
    b = eus.shape[0]
    result = np.empty(b, dtype=np.bool_)
    tails = np.empty(max(eus.shape[1], 1), dtype=np.int64)
    for g in range(b):
        result[g] = orient_exact(eus[g], evs[g], ms[g], n, k, tails)
    return result


# --------------------------------------------------------------------------
# bipartite matching
# --------------------------------------------------------------------------

@njit
def hopcroft_karp(indptr, indices, n_left, n_right):
    """Maximum matching; returns ``(match_left, match_right)`` with -1 = free."""
    inf = n_left + 1
    match_l = np.full(n_left, -1, dtype=np.int64)
    match_r = np.full(n_right, -1, dtype=np.int64)
    dist = np.empty(n_left, dtype=np.int64)
    queue = np.empty(n_left, dtype=np.int64)
    it = np.empty(n_left, dtype=np.int64)
    stack = np.empty(n_left, dtype=np.int64)
    while True:
        qh = 0
        qt = 0
        for l in range(n_left):
            if match_l[l] == -1:
                dist[l] = 0
                queue[qt] = l
                qt += 1
            else:
                dist[l] = inf
        found = False
        while qh < qt:
            l = queue[qh]
            qh += 1
            for p in range(indptr[l], indptr[l + 1]):
                l2 = match_r[indices[p]]
                if l2 == -1:
                    found = True
                elif dist[l2] == inf:
                    dist[l2] = dist[l] + 1
                    queue[qt] = l2
                    qt += 1
        if not found:
            break
        for l in range(n_left):
            it[l] = indptr[l]
        for l0 in range(n_left):
            if match_l[l0] != -1:
                continue
            top = 0
            stack[0] = l0
            while top >= 0:
                l = stack[top]
                if it[l] < indptr[l + 1]:
                    r = indices[it[l]]
                    l2 = match_r[r]
                    if l2 == -1:
                        for t in range(top, -1, -1):
                            ll = stack[t]
                            rr = indices[it[ll]]
                            match_r[rr] = ll
                            match_l[ll] = rr
                        break
                    elif dist[l2] == dist[l] + 1:
                        top += 1
                        stack[top] = l2
                    else:
                        it[l] += 1
                else:
                    dist[l] = inf
                    top -= 1
                    if top >= 0:
                        it[stack[top]] += 1
    return match_l, match_r


@njit
def alternating_reach(indptr, indices, match_r, start, n_left):
    """Left vertices reachable from ``start`` by alternating paths."""
    reached = np.zeros(n_left, dtype=np.bool_)
    queue = np.empty(n_left, dtype=np.int64)
    reached[start] = True
    queue[0] = start
    qh = 0
    qt = 1
    while qh < qt:
        l = queue[qh]
        qh += 1
        for p in range(indptr[l], indptr[l + 1]):
            l2 = match_r[indices[p]]
            if l2 >= 0 and not reached[l2]:
                reached[l2] = True
                queue[qt] = l2
                qt += 1
    return reached
