"""Pure-Python search kernels.

This module is the reference implementation of the kernel contract; the
compiled twin ``_kernels_c`` must reproduce it exactly, including the node
counter, so results and reports never depend on which kernel was selected.

Kernel contract
---------------

``search(degrees, forbidden, budget, visit, pattern_rows, pattern_order,
first_only)`` enumerates every simple labeled graph on vertices ``0..n-1``
whose degree vector equals ``degrees`` and that uses no pair marked in
``forbidden``. Rows are assigned in vertex order; within a row, neighbor sets
are tried in increasing lexicographic order, so the visit order (and hence any
witness) is deterministic. After each completed row the residual degree vector
is tested with the Erdős–Gallai criterion and infeasible branches are cut;
with forbidden pairs present the test is merely necessary, so it only prunes.

``nodes`` counts search effort: +1 on entering each row and +1 per neighbor-set
extension step (including the step that closes a row). The count is exact and
identical across kernels. When ``nodes`` would exceed ``budget`` the search
stops; the caller sees ``complete=False`` with no witness and must treat the
run as unanswered.

Exactly one halting sink may be supplied:

* ``pattern_rows``/``pattern_order``: stop at the first enumerated graph that
  contains the pattern as a subgraph (embedding tried in ``pattern_order``).
* ``visit``: a callable fed each graph's adjacency rows; truthy return stops.
* ``first_only=True``: stop at the first enumerated graph.

Returns ``(visited, nodes, complete, witness)`` where ``visited`` is the
number of graphs enumerated, ``complete`` is True iff the space was exhausted
(neither halted nor out of budget) and ``witness`` is the adjacency-row tuple
of the halting graph, if any.

``find_embedding(host_rows, pattern_rows, order)`` returns the first injective
subgraph embedding (a tuple mapping pattern vertex -> host vertex) or None,
scanning host candidates in increasing index for each pattern vertex taken in
``order``. Embedding work is not charged to any node budget.
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence

__all__ = ["IMPLEMENTATION", "MAX_SEARCH_VERTICES", "search", "find_embedding"]

IMPLEMENTATION = "py"

# The enumeration kernel keeps per-vertex state in fixed-size arrays in the
# compiled twin, so both twins enforce the same cap.
MAX_SEARCH_VERTICES = 16


def _eg_feasible(res: list[int], start: int, n: int) -> bool:
    """Erdős–Gallai test on the residual degrees res[start:n]."""
    vals = sorted(res[start:n], reverse=True)
    m = len(vals)
    if m == 0:
        return True
    if sum(vals) % 2:
        return False
    prefix = 0
    for k in range(1, m + 1):
        prefix += vals[k - 1]
        bound = k * (k - 1)
        for i in range(k, m):
            bound += vals[i] if vals[i] < k else k
        if prefix > bound:
            return False
    return True


def find_embedding(
    host_rows: Sequence[int],
    pattern_rows: Sequence[int],
    order: Sequence[int],
) -> Optional[tuple[int, ...]]:
    hn = len(host_rows)
    pn = len(pattern_rows)
    if pn > hn:
        return None
    hdeg = [row.bit_count() for row in host_rows]
    pdeg = [row.bit_count() for row in pattern_rows]
    assign = [-1] * pn

    def rec(idx: int, used: int) -> Optional[tuple[int, ...]]:
        if idx == pn:
            return tuple(assign)
        p = order[idx]
        # host image must dominate the already-assigned pattern neighbors
        need = 0
        nb = pattern_rows[p]
        while nb:
            q = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if assign[q] >= 0:
                need |= 1 << assign[q]
        for h in range(hn):
            if used >> h & 1:
                continue
            if hdeg[h] < pdeg[p]:
                continue
            if host_rows[h] & need != need:
                continue
            assign[p] = h
            found = rec(idx + 1, used | (1 << h))
            if found is not None:
                return found
            assign[p] = -1
        return None

    return rec(0, 0)


class _OutOfBudget(Exception):
    pass


def search(
    degrees: Sequence[int],
    forbidden: Optional[Sequence[int]],
    budget: int,
    visit: Optional[Callable[[tuple[int, ...]], object]],
    pattern_rows: Optional[Sequence[int]],
    pattern_order: Optional[Sequence[int]],
    first_only: bool,
) -> tuple[int, int, bool, Optional[tuple[int, ...]]]:
    n = len(degrees)
    if n > MAX_SEARCH_VERTICES:
        raise ValueError(f"search kernel supports at most {MAX_SEARCH_VERTICES} vertices")
    if budget < 1:
        raise ValueError("budget must be positive")
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be nonnegative")
    res = list(degrees)
    adj = [0] * n
    forb = list(forbidden) if forbidden is not None else [0] * n
    state = {"visited": 0, "nodes": 0, "witness": None}

    def on_complete() -> bool:
        state["visited"] += 1
        if pattern_rows is not None:
            if find_embedding(adj, pattern_rows, pattern_order) is not None:
                state["witness"] = tuple(adj)
                return True
            return False
        if visit is not None:
            if visit(tuple(adj)):
                state["witness"] = tuple(adj)
                return True
            return False
        if first_only:
            state["witness"] = tuple(adj)
            return True
        return False

    def rec(u: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _OutOfBudget
        if u == n:
            return on_complete()
        if res[u] == 0:
            return rec(u + 1)
        return choose(u, u + 1, res[u])

    def choose(u: int, start: int, need: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _OutOfBudget
        if need == 0:
            if _eg_feasible(res, u + 1, n):
                return rec(u + 1)
            return False
        avail = 0
        for v in range(start, n):
            if res[v] > 0 and not forb[u] >> v & 1:
                avail += 1
        if avail < need:
            return False
        for v in range(start, n):
            if res[v] <= 0 or forb[u] >> v & 1:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            res[v] -= 1
            halted = choose(u, v + 1, need - 1)
            res[v] += 1
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            if halted:
                return True
            avail -= 1
            if avail < need:
                break
        return False

    if not _eg_feasible(res, 0, n):
        return (0, 0, True, None)
    try:
        halted = rec(0)
    except _OutOfBudget:
        return (state["visited"], state["nodes"], False, None)
    return (state["visited"], state["nodes"], not halted, state["witness"])
