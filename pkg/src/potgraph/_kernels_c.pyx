# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled search kernels: exact twin of ``_kernels_py``.

See the pure-Python module's docstring for the full contract. Node counts,
visit order, witnesses and return shapes are identical by construction; the
parity is enforced by tests that run both kernels on the same inputs.
"""

__all__ = ["IMPLEMENTATION", "MAX_SEARCH_VERTICES", "search", "find_embedding"]

IMPLEMENTATION = "c"
MAX_SEARCH_VERTICES = 16


cdef inline int _popcount64(unsigned long long x) noexcept:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _ctz64(unsigned long long x) noexcept:
    # x must be nonzero
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef bint _eg_feasible(int *res, int start, int n) noexcept:
    # Erdos-Gallai test on res[start:n]; insertion sort is fine at n <= 16.
    cdef int vals[16]
    cdef int m = 0, i, j, k, key, total = 0, prefix, bound
    for i in range(start, n):
        vals[m] = res[i]
        total += res[i]
        m += 1
    if m == 0:
        return True
    if total & 1:
        return False
    for i in range(1, m):
        key = vals[i]
        j = i - 1
        while j >= 0 and vals[j] < key:
            vals[j + 1] = vals[j]
            j -= 1
        vals[j + 1] = key
    prefix = 0
    for k in range(1, m + 1):
        prefix += vals[k - 1]
        bound = k * (k - 1)
        for i in range(k, m):
            bound += vals[i] if vals[i] < k else k
        if prefix > bound:
            return False
    return True


cdef bint _embed(unsigned long long *host, int hn, int *hdeg,
                 unsigned long long *prow, int *pdeg, int *porder, int pn,
                 int *assign, int idx, unsigned long long used) noexcept:
    cdef int p, q, h
    cdef unsigned long long need, nb, one = 1
    if idx == pn:
        return True
    p = porder[idx]
    need = 0
    nb = prow[p]
    while nb:
        q = _ctz64(nb)
        nb &= nb - 1
        if assign[q] >= 0:
            need |= one << assign[q]
    for h in range(hn):
        if used >> h & 1:
            continue
        if hdeg[h] < pdeg[p]:
            continue
        if host[h] & need != need:
            continue
        assign[p] = h
        if _embed(host, hn, hdeg, prow, pdeg, porder, pn, assign, idx + 1,
                  used | (one << h)):
            return True
        assign[p] = -1
    return False


cdef class _Search:
    cdef int n, pn
    cdef long long budget, nodes, visited
    cdef bint first_only, budget_hit, has_pattern
    cdef object visit
    cdef tuple witness
    cdef int res[16]
    cdef unsigned int adj[16]
    cdef unsigned int forb[16]
    cdef unsigned long long prow[16]
    cdef int pdeg[16]
    cdef int porder[16]

    cdef tuple _rows(self):
        cdef int i
        return tuple([self.adj[i] for i in range(self.n)])

    cdef int on_complete(self) except -1:
        cdef unsigned long long host[16]
        cdef int hdeg[16]
        cdef int assign[16]
        cdef int i
        cdef object result
        cdef tuple rows
        self.visited += 1
        if self.has_pattern:
            if self.pn > self.n:
                return 0
            for i in range(self.n):
                host[i] = self.adj[i]
                hdeg[i] = _popcount64(host[i])
            for i in range(self.pn):
                assign[i] = -1
            if _embed(host, self.n, hdeg, self.prow, self.pdeg, self.porder,
                      self.pn, assign, 0, 0):
                self.witness = self._rows()
                return 1
            return 0
        if self.visit is not None:
            rows = self._rows()
            result = self.visit(rows)
            if result:
                self.witness = rows
                return 1
            return 0
        if self.first_only:
            self.witness = self._rows()
            return 1
        return 0

    cdef int rec(self, int u) except -1:
        self.nodes += 1
        if self.nodes > self.budget:
            self.budget_hit = True
            return 1
        if u == self.n:
            return self.on_complete()
        if self.res[u] == 0:
            return self.rec(u + 1)
        return self.choose(u, u + 1, self.res[u])

    cdef int choose(self, int u, int start, int need) except -1:
        cdef int v, avail, halted
        cdef unsigned int one = 1
        self.nodes += 1
        if self.nodes > self.budget:
            self.budget_hit = True
            return 1
        if need == 0:
            if _eg_feasible(self.res, u + 1, self.n):
                return self.rec(u + 1)
            return 0
        avail = 0
        for v in range(start, self.n):
            if self.res[v] > 0 and not (self.forb[u] >> v & 1):
                avail += 1
        if avail < need:
            return 0
        for v in range(start, self.n):
            if self.res[v] <= 0 or (self.forb[u] >> v & 1):
                continue
            self.adj[u] |= one << v
            self.adj[v] |= one << u
            self.res[v] -= 1
            halted = self.choose(u, v + 1, need - 1)
            self.res[v] += 1
            self.adj[u] &= ~(one << v)
            self.adj[v] &= ~(one << u)
            if halted:
                return 1
            avail -= 1
            if avail < need:
                break
        return 0


def search(degrees, forbidden, budget, visit, pattern_rows, pattern_order,
           first_only):
    cdef _Search s = _Search()
    cdef int n = len(degrees)
    cdef int i, halted
    if n > MAX_SEARCH_VERTICES:
        raise ValueError(
            f"search kernel supports at most {MAX_SEARCH_VERTICES} vertices")
    if budget < 1:
        raise ValueError("budget must be positive")
    s.n = n
    s.budget = budget
    s.nodes = 0
    s.visited = 0
    s.visit = visit
    s.first_only = bool(first_only)
    s.budget_hit = False
    s.witness = None
    for i in range(n):
        if degrees[i] < 0:
            raise ValueError("degrees must be nonnegative")
        s.res[i] = degrees[i]
        s.adj[i] = 0
        s.forb[i] = forbidden[i] if forbidden is not None else 0
    s.has_pattern = pattern_rows is not None
    if s.has_pattern:
        s.pn = len(pattern_rows)
        if s.pn > 16:
            raise ValueError("pattern is limited to 16 vertices")
        for i in range(s.pn):
            s.prow[i] = pattern_rows[i]
            s.pdeg[i] = _popcount64(s.prow[i])
            s.porder[i] = pattern_order[i]
    else:
        s.pn = 0
    if not _eg_feasible(s.res, 0, n):
        return (0, 0, True, None)
    halted = s.rec(0)
    if s.budget_hit:
        return (s.visited, s.nodes, False, None)
    if halted:
        return (s.visited, s.nodes, False, s.witness)
    return (s.visited, s.nodes, True, None)


def find_embedding(host_rows, pattern_rows, order):
    cdef int hn = len(host_rows)
    cdef int pn = len(pattern_rows)
    cdef unsigned long long host[64]
    cdef int hdeg[64]
    cdef unsigned long long prow[16]
    cdef int pdeg[16]
    cdef int porder[16]
    cdef int assign[16]
    cdef int i
    if pn > hn:
        return None
    if hn > 64:
        raise ValueError("host is limited to 64 vertices")
    if pn > 16:
        raise ValueError("pattern is limited to 16 vertices")
    for i in range(hn):
        host[i] = host_rows[i]
        hdeg[i] = _popcount64(host[i])
    for i in range(pn):
        prow[i] = pattern_rows[i]
        pdeg[i] = _popcount64(prow[i])
        porder[i] = order[i]
        assign[i] = -1
    if _embed(host, hn, hdeg, prow, pdeg, porder, pn, assign, 0, 0):
        return tuple([assign[i] for i in range(pn)])
    return None
