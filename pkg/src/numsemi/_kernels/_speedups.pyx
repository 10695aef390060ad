# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Semantics match ``pykernels`` exactly (same canonical enumeration order,
same errors); only the constant factor differs.  All arithmetic is done
in signed 64-bit with explicit overflow guards.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64

cdef i64 I64_MAX = 9223372036854775807


cdef i64 _c_gcd(i64 a, i64 b) noexcept:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef class _Heap:
    """Binary min-heap of (key, node) pairs backed by C arrays."""
    cdef i64* keys
    cdef Py_ssize_t* nodes
    cdef Py_ssize_t size, cap

    def __cinit__(self, Py_ssize_t cap):
        self.cap = cap if cap > 0 else 16
        self.keys = <i64*>malloc(self.cap * sizeof(i64))
        self.nodes = <Py_ssize_t*>malloc(self.cap * sizeof(Py_ssize_t))
        self.size = 0
        if self.keys == NULL or self.nodes == NULL:
            raise MemoryError()

    def __dealloc__(self):
        if self.keys != NULL:
            free(self.keys)
        if self.nodes != NULL:
            free(self.nodes)

    cdef int push(self, i64 key, Py_ssize_t node) except -1:
        cdef Py_ssize_t i, parent
        cdef i64* nk
        cdef Py_ssize_t* nn
        if self.size == self.cap:
            self.cap *= 2
            nk = <i64*>malloc(self.cap * sizeof(i64))
            nn = <Py_ssize_t*>malloc(self.cap * sizeof(Py_ssize_t))
            if nk == NULL or nn == NULL:
                if nk != NULL:
                    free(nk)
                if nn != NULL:
                    free(nn)
                raise MemoryError()
            for i in range(self.size):
                nk[i] = self.keys[i]
                nn[i] = self.nodes[i]
            free(self.keys)
            free(self.nodes)
            self.keys = nk
            self.nodes = nn
        i = self.size
        self.size += 1
        while i > 0:
            parent = (i - 1) >> 1
            if self.keys[parent] <= key:
                break
            self.keys[i] = self.keys[parent]
            self.nodes[i] = self.nodes[parent]
            i = parent
        self.keys[i] = key
        self.nodes[i] = node
        return 0

    cdef int pop(self, i64* key_out, Py_ssize_t* node_out) noexcept:
        cdef Py_ssize_t i, child
        cdef i64 key
        cdef Py_ssize_t node
        if self.size == 0:
            return 0
        key_out[0] = self.keys[0]
        node_out[0] = self.nodes[0]
        self.size -= 1
        if self.size == 0:
            return 1
        key = self.keys[self.size]
        node = self.nodes[self.size]
        i = 0
        while True:
            child = 2 * i + 1
            if child >= self.size:
                break
            if child + 1 < self.size and self.keys[child + 1] < self.keys[child]:
                child += 1
            if self.keys[child] >= key:
                break
            self.keys[i] = self.keys[child]
            self.nodes[i] = self.nodes[child]
            i = child
        self.keys[i] = key
        self.nodes[i] = node
        return 1


def apery_levels(m, gens):
    """Least monoid element in each residue class mod ``m`` (Dijkstra)."""
    cdef Py_ssize_t M = m
    if M < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    uniq = sorted({int(g) for g in gens})
    if uniq and uniq[0] < 1:
        raise ValueError("generators must be positive")
    arc_list = [g for g in uniq if g % M != 0]
    cdef Py_ssize_t na = len(arc_list)
    cdef Py_ssize_t i, r, nr
    cdef i64 d, nd, g
    cdef i64* arcs = <i64*>malloc((na if na > 0 else 1) * sizeof(i64))
    cdef i64* dist = <i64*>malloc(M * sizeof(i64))
    if arcs == NULL or dist == NULL:
        if arcs != NULL:
            free(arcs)
        if dist != NULL:
            free(dist)
        raise MemoryError()
    for i in range(na):
        arcs[i] = arc_list[i]
    for i in range(M):
        dist[i] = -1
    dist[0] = 0
    cdef _Heap heap = _Heap(M + 1)
    try:
        heap.push(0, 0)
        while heap.pop(&d, &r):
            if d != dist[r]:
                continue
            for i in range(na):
                g = arcs[i]
                if d > I64_MAX - g:
                    raise OverflowError(
                        f"Apery element exceeds the 64-bit range near residue {r}"
                    )
                nd = d + g
                nr = (r + <Py_ssize_t>(g % M)) % M
                if dist[nr] < 0 or nd < dist[nr]:
                    dist[nr] = nd
                    heap.push(nd, nr)
        out = [0] * M
        for i in range(M):
            if dist[i] < 0:
                raise ValueError("unreachable residue class (generators not coprime)")
            out[i] = dist[i]
        return out
    finally:
        free(arcs)
        free(dist)


cdef int _load_gens(object gens, i64** gens_out, i64** pg_out, Py_ssize_t* e_out) except -1:
    cdef Py_ssize_t e = len(gens), i
    cdef i64* cg = <i64*>malloc(e * sizeof(i64))
    cdef i64* pg = <i64*>malloc(e * sizeof(i64))
    if cg == NULL or pg == NULL:
        if cg != NULL:
            free(cg)
        if pg != NULL:
            free(pg)
        raise MemoryError()
    cdef i64 acc = 0
    try:
        for i in range(e):
            cg[i] = gens[i]
            if cg[i] < 1:
                raise ValueError("generators must be positive")
            acc = _c_gcd(acc, cg[i])
            pg[i] = acc
    except BaseException:
        free(cg)
        free(pg)
        raise
    gens_out[0] = cg
    pg_out[0] = pg
    e_out[0] = e
    return 0


cdef bint _rep_dfs(i64 rem, i64* cg, i64* pg, i64* coeffs, Py_ssize_t i) noexcept:
    cdef i64 g, c, top
    if rem % pg[i] != 0:
        return 0
    if i == 0:
        coeffs[0] = rem / cg[0]
        return 1
    g = cg[i]
    top = rem / g
    for c in range(top + 1):
        coeffs[i] = c
        if _rep_dfs(rem - c * g, cg, pg, coeffs, i - 1):
            return 1
    coeffs[i] = 0
    return 0


def min_representation(x, gens):
    """Canonical representation of ``x`` over ``gens``, or None."""
    cdef i64 rem
    if x < 0:
        return None
    rem = x
    cdef i64* cg
    cdef i64* pg
    cdef Py_ssize_t e, i
    _load_gens(gens, &cg, &pg, &e)
    cdef i64* coeffs = <i64*>malloc(e * sizeof(i64))
    if coeffs == NULL:
        free(cg)
        free(pg)
        raise MemoryError()
    try:
        for i in range(e):
            coeffs[i] = 0
        if _rep_dfs(rem, cg, pg, coeffs, e - 1):
            return tuple(coeffs[i] for i in range(e))
        return None
    finally:
        free(cg)
        free(pg)
        free(coeffs)


def is_representable(x, gens):
    """True iff ``x`` is a non-negative integer combination of ``gens``."""
    return min_representation(x, gens) is not None


cdef int _fact_dfs(i64 rem, i64* cg, i64* pg, i64* coeffs,
                   Py_ssize_t i, Py_ssize_t e, list out) except -1:
    cdef i64 g, c, top
    cdef Py_ssize_t j
    if rem % pg[i] != 0:
        return 0
    if i == 0:
        coeffs[0] = rem / cg[0]
        out.append(tuple(coeffs[j] for j in range(e)))
        return 0
    g = cg[i]
    top = rem / g
    for c in range(top + 1):
        coeffs[i] = c
        _fact_dfs(rem - c * g, cg, pg, coeffs, i - 1, e, out)
    coeffs[i] = 0
    return 0


def factorizations_of(x, gens):
    """All representations of ``x`` over ``gens`` in canonical order."""
    cdef i64 rem
    if x < 0:
        return []
    rem = x
    cdef i64* cg
    cdef i64* pg
    cdef Py_ssize_t e, i
    _load_gens(gens, &cg, &pg, &e)
    cdef i64* coeffs = <i64*>malloc(e * sizeof(i64))
    if coeffs == NULL:
        free(cg)
        free(pg)
        raise MemoryError()
    out: list = []
    try:
        for i in range(e):
            coeffs[i] = 0
        _fact_dfs(rem, cg, pg, coeffs, e - 1, e, out)
        return out
    finally:
        free(cg)
        free(pg)
        free(coeffs)
