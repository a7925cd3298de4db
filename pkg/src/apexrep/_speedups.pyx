# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.  Same signatures, same results."""

from libc.stdlib cimport malloc, free


cdef inline int _imin(int a, int b) nogil:
    return a if a < b else b


cdef struct LRState:
    int n
    int E
    int *height
    int *parent_edge
    int *src
    int *dst
    int *lowpt
    int *lowpt2
    int *nesting
    int *ref
    int *lowpt_edge
    int *stack_bottom
    # conflict-pair stack
    int top
    int *sll
    int *slh
    int *srl
    int *srh


cdef inline bint _conflicting(LRState *s, int high, int b) nogil:
    return high != -1 and s.lowpt[high] > s.lowpt[b]


cdef inline int _lowest(LRState *s, int k) nogil:
    if s.sll[k] == -1:
        return s.lowpt[s.srl[k]]
    if s.srl[k] == -1:
        return s.lowpt[s.sll[k]]
    return _imin(s.lowpt[s.sll[k]], s.lowpt[s.srl[k]])


cdef inline void _push(LRState *s, int ll, int lh, int rl, int rh) nogil:
    s.sll[s.top] = ll
    s.slh[s.top] = lh
    s.srl[s.top] = rl
    s.srh[s.top] = rh
    s.top += 1


cdef bint _add_constraints(LRState *s, int ei, int e) nogil:
    cdef int pll = -1, plh = -1, prl = -1, prh = -1
    cdef int qll, qlh, qrl, qrh, t
    while True:
        s.top -= 1
        qll = s.sll[s.top]; qlh = s.slh[s.top]; qrl = s.srl[s.top]; qrh = s.srh[s.top]
        if qll != -1:
            t = qll; qll = qrl; qrl = t
            t = qlh; qlh = qrh; qrh = t
        if qll != -1:
            return False
        if s.lowpt[qrl] > s.lowpt[e]:
            if prl == -1:
                prh = qrh
            else:
                s.ref[prl] = qrh
            prl = qrl
        else:
            s.ref[qrl] = s.lowpt_edge[e]
        if s.top == s.stack_bottom[ei]:
            break
    while s.top > 0 and (_conflicting(s, s.slh[s.top - 1], ei) or _conflicting(s, s.srh[s.top - 1], ei)):
        s.top -= 1
        qll = s.sll[s.top]; qlh = s.slh[s.top]; qrl = s.srl[s.top]; qrh = s.srh[s.top]
        if _conflicting(s, qrh, ei):
            t = qll; qll = qrl; qrl = t
            t = qlh; qlh = qrh; qrh = t
        if _conflicting(s, qrh, ei):
            return False
        if prl != -1:
            s.ref[prl] = qrh
        if qrl != -1:
            prl = qrl
        if pll == -1:
            plh = qlh
        else:
            s.ref[pll] = qlh
        pll = qll
    if pll != -1 or plh != -1 or prl != -1 or prh != -1:
        _push(s, pll, plh, prl, prh)
    return True


cdef bint _integrate(LRState *s, int ei, bint first) nogil:
    cdef int v = s.src[ei]
    cdef int e
    if s.lowpt[ei] < s.height[v]:
        e = s.parent_edge[v]
        if first:
            s.lowpt_edge[e] = s.lowpt_edge[ei]
        else:
            return _add_constraints(s, ei, e)
    return True


cdef void _remove_back_edges(LRState *s, int e) nogil:
    cdef int u = s.src[e]
    cdef int k, hl, hr
    while s.top > 0 and _lowest(s, s.top - 1) == s.height[u]:
        s.top -= 1
    if s.top > 0:
        k = s.top - 1
        while s.slh[k] != -1 and s.dst[s.slh[k]] == u:
            s.slh[k] = s.ref[s.slh[k]]
        if s.slh[k] == -1 and s.sll[k] != -1:
            s.ref[s.sll[k]] = s.srl[k]
            s.sll[k] = -1
        while s.srh[k] != -1 and s.dst[s.srh[k]] == u:
            s.srh[k] = s.ref[s.srh[k]]
        if s.srh[k] == -1 and s.srl[k] != -1:
            s.ref[s.srl[k]] = s.sll[k]
            s.srl[k] = -1
    if s.lowpt[e] < s.height[u]:
        hl = s.slh[s.top - 1]
        hr = s.srh[s.top - 1]
        if hl != -1 and (hr == -1 or s.lowpt[hl] > s.lowpt[hr]):
            s.ref[e] = hl
        else:
            s.ref[e] = hr


cdef inline void _finish(LRState *s, int eid) nogil:
    cdef int v = s.src[eid]
    cdef int e
    s.nesting[eid] = 2 * s.lowpt[eid] + (1 if s.lowpt2[eid] < s.height[v] else 0)
    e = s.parent_edge[v]
    if e == -1:
        return
    if s.lowpt[eid] < s.lowpt[e]:
        s.lowpt2[e] = _imin(s.lowpt[e], s.lowpt2[eid])
        s.lowpt[e] = s.lowpt[eid]
    elif s.lowpt[eid] > s.lowpt[e]:
        s.lowpt2[e] = _imin(s.lowpt2[e], s.lowpt[eid])
    else:
        s.lowpt2[e] = _imin(s.lowpt2[e], s.lowpt2[eid])


cdef bint _lr_core(int n, int m, int *eu, int *ev) nogil:
    cdef LRState s
    cdef int i, v, w, hw, eid, r, sp, d, b, total
    cdef bint ok = True
    cdef int *deg = <int *> malloc((n + 1) * sizeof(int))
    cdef int *off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *nbr = <int *> malloc((2 * m + 1) * sizeof(int))
    cdef int *vstack = <int *> malloc((n + 1) * sizeof(int))
    cdef int *istack = <int *> malloc((n + 1) * sizeof(int))
    cdef int *roots = <int *> malloc((n + 1) * sizeof(int))
    cdef int nroots = 0
    cdef int *outdeg = <int *> malloc((n + 1) * sizeof(int))
    cdef int *outoff = <int *> malloc((n + 1) * sizeof(int))
    cdef int *outs = <int *> malloc((m + 1) * sizeof(int))
    cdef int *bucket = <int *> malloc((2 * n + 3) * sizeof(int))
    cdef int *order = <int *> malloc((m + 1) * sizeof(int))

    s.n = n
    s.E = 0
    s.top = 0
    s.height = <int *> malloc((n + 1) * sizeof(int))
    s.parent_edge = <int *> malloc((n + 1) * sizeof(int))
    s.src = <int *> malloc((m + 1) * sizeof(int))
    s.dst = <int *> malloc((m + 1) * sizeof(int))
    s.lowpt = <int *> malloc((m + 1) * sizeof(int))
    s.lowpt2 = <int *> malloc((m + 1) * sizeof(int))
    s.nesting = <int *> malloc((m + 1) * sizeof(int))
    s.ref = <int *> malloc((m + 1) * sizeof(int))
    s.lowpt_edge = <int *> malloc((m + 1) * sizeof(int))
    s.stack_bottom = <int *> malloc((m + 1) * sizeof(int))
    s.sll = <int *> malloc((m + 2) * sizeof(int))
    s.slh = <int *> malloc((m + 2) * sizeof(int))
    s.srl = <int *> malloc((m + 2) * sizeof(int))
    s.srh = <int *> malloc((m + 2) * sizeof(int))

    # undirected adjacency in CSR form, neighbours in input order
    for v in range(n + 1):
        deg[v] = 0
    for i in range(m):
        deg[eu[i]] += 1
        deg[ev[i]] += 1
    off[0] = 0
    for v in range(n):
        off[v + 1] = off[v] + deg[v]
        deg[v] = 0
    for i in range(m):
        nbr[off[eu[i]] + deg[eu[i]]] = ev[i]
        deg[eu[i]] += 1
        nbr[off[ev[i]] + deg[ev[i]]] = eu[i]
        deg[ev[i]] += 1

    for v in range(n):
        s.height[v] = -1
        s.parent_edge[v] = -1
        outdeg[v] = 0

    # phase 1: orientation
    for r in range(n):
        if s.height[r] != -1:
            continue
        s.height[r] = 0
        roots[nroots] = r
        nroots += 1
        sp = 0
        vstack[0] = r
        istack[0] = 0
        while sp >= 0:
            v = vstack[sp]
            i = istack[sp]
            if i < off[v + 1] - off[v]:
                istack[sp] = i + 1
                w = nbr[off[v] + i]
                hw = s.height[w]
                if hw != -1 and hw >= s.height[v] - 1:
                    continue
                eid = s.E
                s.E += 1
                s.src[eid] = v
                s.dst[eid] = w
                s.lowpt[eid] = s.height[v]
                s.lowpt2[eid] = s.height[v]
                s.nesting[eid] = 0
                outdeg[v] += 1
                if hw == -1:
                    s.parent_edge[w] = eid
                    s.height[w] = s.height[v] + 1
                    sp += 1
                    vstack[sp] = w
                    istack[sp] = 0
                else:
                    s.lowpt[eid] = hw
                    _finish(&s, eid)
            else:
                sp -= 1
                if s.parent_edge[v] != -1:
                    _finish(&s, s.parent_edge[v])

    # outgoing edges per vertex, sorted by nesting depth (counting sort)
    for d in range(2 * n + 3):
        bucket[d] = 0
    for eid in range(s.E):
        bucket[s.nesting[eid] + 1] += 1
    for d in range(1, 2 * n + 3):
        bucket[d] += bucket[d - 1]
    for eid in range(s.E):
        b = s.nesting[eid]
        order[bucket[b]] = eid
        bucket[b] += 1
    outoff[0] = 0
    for v in range(n):
        outoff[v + 1] = outoff[v] + outdeg[v]
        outdeg[v] = 0
    for i in range(s.E):
        eid = order[i]
        v = s.src[eid]
        outs[outoff[v] + outdeg[v]] = eid
        outdeg[v] += 1

    for eid in range(s.E):
        s.ref[eid] = -1
        s.lowpt_edge[eid] = -1
        s.stack_bottom[eid] = 0

    # phase 2: constraint testing
    for i in range(nroots):
        if not ok:
            break
        r = roots[i]
        sp = 0
        vstack[0] = r
        istack[0] = 0
        while sp >= 0:
            v = vstack[sp]
            d = istack[sp]
            if d < outdeg[v]:
                istack[sp] = d + 1
                eid = outs[outoff[v] + d]
                w = s.dst[eid]
                s.stack_bottom[eid] = s.top
                if eid == s.parent_edge[w]:
                    sp += 1
                    vstack[sp] = w
                    istack[sp] = 0
                    continue
                s.lowpt_edge[eid] = eid
                _push(&s, -1, -1, eid, eid)
                if not _integrate(&s, eid, d == 0):
                    ok = False
                    break
            else:
                sp -= 1
                eid = s.parent_edge[v]
                if eid != -1:
                    _remove_back_edges(&s, eid)
                    if not _integrate(&s, eid, istack[sp] == 1):
                        ok = False
                        break

    free(deg); free(off); free(nbr); free(vstack); free(istack); free(roots)
    free(outdeg); free(outoff); free(outs); free(bucket); free(order)
    free(s.height); free(s.parent_edge); free(s.src); free(s.dst)
    free(s.lowpt); free(s.lowpt2); free(s.nesting); free(s.ref)
    free(s.lowpt_edge); free(s.stack_bottom)
    free(s.sll); free(s.slh); free(s.srl); free(s.srh)
    return ok


def lr_is_planar(int n, edges):
    cdef int m = len(edges)
    cdef int i
    cdef int *eu
    cdef int *ev
    cdef bint result
    if m < 9:
        return True
    if n >= 3 and m > 3 * n - 6:
        return False
    eu = <int *> malloc(m * sizeof(int))
    ev = <int *> malloc(m * sizeof(int))
    if eu == NULL or ev == NULL:
        free(eu); free(ev)
        raise MemoryError()
    for i in range(m):
        eu[i] = edges[i][0]
        ev[i] = edges[i][1]
    with nogil:
        result = _lr_core(n, m, eu, ev)
    free(eu)
    free(ev)
    return bool(result)


def hv_contacts(const signed char[:] orient, const long long[:] fixed,
                const long long[:] lo, const long long[:] hi):
    cdef Py_ssize_t count = orient.shape[0]
    cdef Py_ssize_t i, j
    cdef signed char oi
    cdef long long fi, li, hi_i
    crossing = []
    parallel = []
    for i in range(count):
        oi = orient[i]
        fi = fixed[i]
        li = lo[i]
        hi_i = hi[i]
        for j in range(i + 1, count):
            if orient[j] != oi:
                if li <= fixed[j] <= hi_i and lo[j] <= fi <= hi[j]:
                    crossing.append((i, j))
            elif fixed[j] == fi and li <= hi[j] and lo[j] <= hi_i:
                parallel.append((i, j))
    return crossing, parallel
