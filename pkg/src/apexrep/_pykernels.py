"""Pure-Python hot kernels.  ``_speedups.pyx`` mirrors these signatures.

Both functions take plain integer data; the wrappers in ``planarity`` and
``verifier`` do the translation from labelled objects.
"""

# Left-right planarity test (de Fraysseix-Rosenstiehl criterion, following
# Brandes' formulation).  Testing only: the side/embedding phase is skipped.
# Both DFS passes are iterative so large gadgets do not hit the recursion limit.
# Conflict pairs are 4-lists [L.low, L.high, R.low, R.high]; -1 means "none".


def lr_is_planar(n, edges):
    m = len(edges)
    if m < 9:
        return True
    if n >= 3 and m > 3 * n - 6:
        return False

    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    height = [-1] * n
    parent_edge = [-1] * n
    src = []
    dst = []
    lowpt = []
    lowpt2 = []
    nesting = []
    out = [[] for _ in range(n)]
    roots = []

    def finish(eid):
        v = src[eid]
        nesting[eid] = 2 * lowpt[eid] + (1 if lowpt2[eid] < height[v] else 0)
        e = parent_edge[v]
        if e == -1:
            return
        if lowpt[eid] < lowpt[e]:
            lowpt2[e] = min(lowpt[e], lowpt2[eid])
            lowpt[e] = lowpt[eid]
        elif lowpt[eid] > lowpt[e]:
            lowpt2[e] = min(lowpt2[e], lowpt[eid])
        else:
            lowpt2[e] = min(lowpt2[e], lowpt2[eid])

    # phase 1: orientation, lowpoints, nesting depth
    for r in range(n):
        if height[r] != -1:
            continue
        height[r] = 0
        roots.append(r)
        stack = [r]
        idx = [0]
        while stack:
            v = stack[-1]
            i = idx[-1]
            if i < len(adj[v]):
                idx[-1] = i + 1
                w = adj[v][i]
                hw = height[w]
                # parent, or a descendant whose back edge is already oriented
                if hw != -1 and hw >= height[v] - 1:
                    continue
                eid = len(src)
                src.append(v)
                dst.append(w)
                lowpt.append(height[v])
                lowpt2.append(height[v])
                nesting.append(0)
                out[v].append(eid)
                if hw == -1:
                    parent_edge[w] = eid
                    height[w] = height[v] + 1
                    stack.append(w)
                    idx.append(0)
                else:
                    lowpt[eid] = hw
                    finish(eid)
            else:
                stack.pop()
                idx.pop()
                if parent_edge[v] != -1:
                    finish(parent_edge[v])

    for v in range(n):
        out[v].sort(key=nesting.__getitem__)

    E = len(src)
    ref = [-1] * E
    lowpt_edge = [-1] * E
    stack_bottom = [0] * E
    S = []

    def conflicting(low, high, b):
        return high != -1 and lowpt[high] > lowpt[b]

    def lowest(P):
        if P[0] == -1:
            return lowpt[P[2]]
        if P[2] == -1:
            return lowpt[P[0]]
        return min(lowpt[P[0]], lowpt[P[2]])

    def add_constraints(ei, e):
        P = [-1, -1, -1, -1]
        while True:
            Q = S.pop()
            if Q[0] != -1:
                Q = [Q[2], Q[3], Q[0], Q[1]]
            if Q[0] != -1:
                return False
            if lowpt[Q[2]] > lowpt[e]:
                if P[2] == -1:
                    P[3] = Q[3]
                else:
                    ref[P[2]] = Q[3]
                P[2] = Q[2]
            else:
                ref[Q[2]] = lowpt_edge[e]
            if len(S) == stack_bottom[ei]:
                break
        while S and (conflicting(S[-1][0], S[-1][1], ei) or conflicting(S[-1][2], S[-1][3], ei)):
            Q = S.pop()
            if conflicting(Q[2], Q[3], ei):
                Q = [Q[2], Q[3], Q[0], Q[1]]
            if conflicting(Q[2], Q[3], ei):
                return False
            if P[2] != -1:
                ref[P[2]] = Q[3]
            if Q[2] != -1:
                P[2] = Q[2]
            if P[0] == -1:
                P[1] = Q[1]
            else:
                ref[P[0]] = Q[1]
            P[0] = Q[0]
        if P != [-1, -1, -1, -1]:
            S.append(P)
        return True

    def integrate(ei, first):
        v = src[ei]
        if lowpt[ei] < height[v]:
            e = parent_edge[v]
            if first:
                lowpt_edge[e] = lowpt_edge[ei]
            else:
                return add_constraints(ei, e)
        return True

    def remove_back_edges(e):
        u = src[e]
        while S and lowest(S[-1]) == height[u]:
            S.pop()
        if S:
            P = S.pop()
            while P[1] != -1 and dst[P[1]] == u:
                P[1] = ref[P[1]]
            if P[1] == -1 and P[0] != -1:
                ref[P[0]] = P[2]
                P[0] = -1
            while P[3] != -1 and dst[P[3]] == u:
                P[3] = ref[P[3]]
            if P[3] == -1 and P[2] != -1:
                ref[P[2]] = P[0]
                P[2] = -1
            S.append(P)
        if lowpt[e] < height[u]:
            hl, hr = S[-1][1], S[-1][3]
            if hl != -1 and (hr == -1 or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    # phase 2: constraint testing
    for r in roots:
        stack = [r]
        idx = [0]
        while stack:
            v = stack[-1]
            i = idx[-1]
            outs = out[v]
            if i < len(outs):
                idx[-1] = i + 1
                ei = outs[i]
                w = dst[ei]
                stack_bottom[ei] = len(S)
                if ei == parent_edge[w]:
                    stack.append(w)
                    idx.append(0)
                    continue
                lowpt_edge[ei] = ei
                S.append([-1, -1, ei, ei])
                if not integrate(ei, i == 0):
                    return False
            else:
                stack.pop()
                idx.pop()
                e = parent_edge[v]
                if e != -1:
                    remove_back_edges(e)
                    if not integrate(e, idx[-1] == 1):
                        return False
    return True


def hv_contacts(orient, fixed, lo, hi):
    """All contacts among axis-parallel closed segments.

    ``orient[i]`` is 0 for horizontal (``fixed`` is y) and 1 for vertical
    (``fixed`` is x); ``lo``/``hi`` bound the varying coordinate.  Returns
    ``(crossing, parallel)``: index pairs i < j of perpendicular segments that
    meet, and of same-orientation segments that touch or overlap.
    """
    count = len(orient)
    crossing = []
    parallel = []
    for i in range(count):
        oi, fi, li, hi_i = orient[i], fixed[i], lo[i], hi[i]
        for j in range(i + 1, count):
            if orient[j] != oi:
                if li <= fixed[j] <= hi_i and lo[j] <= fi <= hi[j]:
                    crossing.append((i, j))
            elif fixed[j] == fi and li <= hi[j] and lo[j] <= hi_i:
                parallel.append((i, j))
    return crossing, parallel
