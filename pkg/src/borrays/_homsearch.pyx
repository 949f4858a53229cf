# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for homomorphism search.

Semantics are identical to the pure-Python twin in ``_homsearch_py``:
depth-first assignment in a fixed order, relators checked as soon as fully
assigned, and a relator with exactly one unassigned occurrence of one
generator solved directly.  Propagation is incremental via per-relator
unassigned-occurrence counters and per-generator occurrence lists.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

from .errors import BudgetExceededError

__all__ = ["search_homs"]

ctypedef unsigned long long u64

cdef struct Ctx:
    int n
    int num_gens
    int num_rel
    int num_cand
    int total_letters
    int *cand          # num_cand * n
    u64 *cand_keys     # sorted, parallel to cand (cand sorted lex)
    int *rel_off       # num_rel + 1
    int *rel_gen       # letters
    int *rel_exp
    int *occ_off       # num_gens + 1
    int *occ_rel       # total_letters; relator index per occurrence
    int *unassigned    # num_rel; unassigned letter occurrences
    int *images        # num_gens * n
    char *assigned     # num_gens
    char *sat          # num_rel
    int *order
    int order_len
    int *gen_trail     # num_gens
    int *sat_trail     # num_rel
    int *rel_queue     # total_letters + num_rel
    int queue_len
    int gen_used       # length of gen_trail currently in force
    int sat_used       # length of sat_trail currently in force
    long long nodes
    long long budget
    int budget_hit


cdef inline u64 perm_key(int *p, int n) noexcept:
    cdef u64 k = 0
    cdef int i
    for i in range(n):
        k = (k << 5) | <u64>p[i]
    return k


cdef inline int key_index(Ctx *c, u64 key) noexcept:
    cdef int lo = 0, hi = c.num_cand - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if c.cand_keys[mid] < key:
            lo = mid + 1
        elif c.cand_keys[mid] > key:
            hi = mid - 1
        else:
            return mid
    return -1


cdef void eval_range(Ctx *c, int ri, int start, int stop, int *out) noexcept:
    """Product of letters [start, stop) of relator ri into out."""
    cdef int i, j, g, e, n = c.n
    cdef int tmp[32]
    cdef int inv[32]
    for i in range(n):
        out[i] = i
    for j in range(c.rel_off[ri] + start, c.rel_off[ri] + stop):
        g = c.rel_gen[j]
        e = c.rel_exp[j]
        if e > 0:
            # out = out o p : out[i] = out_old[p[i]]
            for i in range(n):
                tmp[i] = out[c.images[g * n + i]]
        else:
            for i in range(n):
                inv[c.images[g * n + i]] = i
            for i in range(n):
                tmp[i] = out[inv[i]]
        for i in range(n):
            out[i] = tmp[i]


cdef void assign(Ctx *c, int g, int *val, int *n_gen_trail) noexcept:
    cdef int i, k, ri, n = c.n
    for i in range(n):
        c.images[g * n + i] = val[i]
    c.assigned[g] = 1
    c.gen_trail[n_gen_trail[0]] = g
    n_gen_trail[0] += 1
    for k in range(c.occ_off[g], c.occ_off[g + 1]):
        ri = c.occ_rel[k]
        c.unassigned[ri] -= 1
        if not c.sat[ri] and c.unassigned[ri] <= 1:
            c.rel_queue[c.queue_len] = ri
            c.queue_len += 1


cdef int handle(Ctx *c, int ri, int *n_gen_trail, int *n_sat_trail) noexcept:
    """Check or solve relator ri; 0 on contradiction."""
    cdef int i, j, g, e, n = c.n
    cdef int length = c.rel_off[ri + 1] - c.rel_off[ri]
    cdef int n_open = 0, open_pos = -1
    cdef int pre[32]
    cdef int post[32]
    cdef int val[32]
    cdef int tmp[32]
    for j in range(length):
        if not c.assigned[c.rel_gen[c.rel_off[ri] + j]]:
            n_open += 1
            open_pos = j
    if n_open == 0:
        eval_range(c, ri, 0, length, val)
        for i in range(n):
            if val[i] != i:
                return 0
        c.sat[ri] = 1
        c.sat_trail[n_sat_trail[0]] = ri
        n_sat_trail[0] += 1
    elif n_open == 1:
        g = c.rel_gen[c.rel_off[ri] + open_pos]
        e = c.rel_exp[c.rel_off[ri] + open_pos]
        eval_range(c, ri, 0, open_pos, pre)
        eval_range(c, ri, open_pos + 1, length, post)
        # pre * g^e * post = id  =>  g^e = inv(post o pre)
        for i in range(n):
            tmp[post[pre[i]]] = i      # tmp = inv(post o pre)
        if e == -1:
            for i in range(n):
                val[tmp[i]] = i
        else:
            for i in range(n):
                val[i] = tmp[i]
        if key_index(c, perm_key(val, n)) < 0:
            return 0
        c.sat[ri] = 1
        c.sat_trail[n_sat_trail[0]] = ri
        n_sat_trail[0] += 1
        assign(c, g, val, n_gen_trail)
    return 1


cdef int propagate(Ctx *c, int *n_gen_trail, int *n_sat_trail) noexcept:
    cdef int ri
    while c.queue_len > 0:
        c.queue_len -= 1
        ri = c.rel_queue[c.queue_len]
        if c.sat[ri] or c.unassigned[ri] > 1:
            continue
        if not handle(c, ri, n_gen_trail, n_sat_trail):
            c.queue_len = 0
            return 0
    return 1


cdef void undo(Ctx *c, int gen_base, int n_gen, int sat_base, int n_sat) noexcept:
    cdef int i, k, g
    for i in range(gen_base, n_gen):
        g = c.gen_trail[i]
        c.assigned[g] = 0
        for k in range(c.occ_off[g], c.occ_off[g + 1]):
            c.unassigned[c.occ_rel[k]] += 1
    for i in range(sat_base, n_sat):
        c.sat[c.sat_trail[i]] = 0


cdef long long dfs(Ctx *c, int pos, list homs):
    cdef long long count = 0
    cdef int g, ci, i, n = c.n
    cdef int n_gen_trail, n_sat_trail, gen_base, sat_base
    while pos < c.order_len and c.assigned[c.order[pos]]:
        pos += 1
    if pos == c.order_len:
        if homs is not None:
            homs.append(tuple(
                tuple(c.images[g * n + i] for i in range(n))
                for g in range(c.num_gens)
            ))
        return 1
    g = c.order[pos]
    for ci in range(c.num_cand):
        c.nodes += 1
        if c.nodes > c.budget:
            c.budget_hit = 1
            return count
        # Trails are global; remember where this node's entries start.
        gen_base = c.gen_used
        sat_base = c.sat_used
        n_gen_trail = gen_base
        n_sat_trail = sat_base
        c.queue_len = 0
        assign(c, g, &c.cand[ci * n], &n_gen_trail)
        if propagate(c, &n_gen_trail, &n_sat_trail):
            c.gen_used = n_gen_trail
            c.sat_used = n_sat_trail
            count += dfs(c, pos + 1, homs)
            c.gen_used = gen_base
            c.sat_used = sat_base
        undo(c, gen_base, n_gen_trail, sat_base, n_sat_trail)
        if c.budget_hit:
            return count
    return count


def search_homs(int n, int num_gens, relators, order, candidates, fixed,
                budget, bint collect):
    """See ``borrays._homsearch_py.search_homs``; identical contract."""
    if n > 16:
        raise ValueError("compiled kernel supports degree up to 16")
    cdef Ctx c
    memset(&c, 0, sizeof(Ctx))
    c.n = n
    c.num_gens = num_gens
    c.budget = <long long>budget

    cand = sorted(candidates)
    c.num_cand = len(cand)
    c.num_rel = len(relators)
    c.order_len = len(order)

    cdef int total_letters = 0
    for rel in relators:
        total_letters += len(rel)
    c.total_letters = total_letters

    c.cand = <int *>malloc(sizeof(int) * max(1, c.num_cand * n))
    c.cand_keys = <u64 *>malloc(sizeof(u64) * max(1, c.num_cand))
    c.rel_off = <int *>malloc(sizeof(int) * (c.num_rel + 1))
    c.rel_gen = <int *>malloc(sizeof(int) * max(1, total_letters))
    c.rel_exp = <int *>malloc(sizeof(int) * max(1, total_letters))
    c.occ_off = <int *>malloc(sizeof(int) * (num_gens + 1))
    c.occ_rel = <int *>malloc(sizeof(int) * max(1, total_letters))
    c.unassigned = <int *>malloc(sizeof(int) * max(1, c.num_rel))
    c.images = <int *>malloc(sizeof(int) * max(1, num_gens * n))
    c.assigned = <char *>malloc(max(1, num_gens))
    c.sat = <char *>malloc(max(1, c.num_rel))
    c.order = <int *>malloc(sizeof(int) * max(1, c.order_len))
    c.gen_trail = <int *>malloc(sizeof(int) * max(1, num_gens))
    c.sat_trail = <int *>malloc(sizeof(int) * max(1, c.num_rel))
    c.rel_queue = <int *>malloc(sizeof(int) * max(1, total_letters + c.num_rel))

    cdef list homs = [] if collect else None
    cdef int i, j, off, ri, g
    cdef int pval[32]
    cdef long long count = 0
    cdef int ok = 1
    cdef int n_gen_trail = 0, n_sat_trail = 0
    try:
        if (c.cand == NULL or c.cand_keys == NULL or c.rel_off == NULL
                or c.rel_gen == NULL or c.rel_exp == NULL or c.occ_off == NULL
                or c.occ_rel == NULL or c.unassigned == NULL or c.images == NULL
                or c.assigned == NULL or c.sat == NULL or c.order == NULL
                or c.gen_trail == NULL or c.sat_trail == NULL
                or c.rel_queue == NULL):
            raise MemoryError()
        for i, p in enumerate(cand):
            for j in range(n):
                c.cand[i * n + j] = p[j]
            c.cand_keys[i] = perm_key(&c.cand[i * n], n)
        off = 0
        for i, rel in enumerate(relators):
            c.rel_off[i] = off
            for (gg, ee) in rel:
                c.rel_gen[off] = gg
                c.rel_exp[off] = ee
                off += 1
        c.rel_off[c.num_rel] = off
        memset(c.assigned, 0, max(1, num_gens))
        memset(c.sat, 0, max(1, c.num_rel))
        # Occurrence lists, bucketed by generator.
        for g in range(num_gens + 1):
            c.occ_off[g] = 0
        for i in range(total_letters):
            c.occ_off[c.rel_gen[i] + 1] += 1
        for g in range(num_gens):
            c.occ_off[g + 1] += c.occ_off[g]
        counters = [c.occ_off[g] for g in range(num_gens)]
        for ri in range(c.num_rel):
            for i in range(c.rel_off[ri], c.rel_off[ri + 1]):
                g = c.rel_gen[i]
                c.occ_rel[counters[g]] = ri
                counters[g] += 1
        for ri in range(c.num_rel):
            c.unassigned[ri] = c.rel_off[ri + 1] - c.rel_off[ri]
        for i, g in enumerate(order):
            c.order[i] = g

        c.queue_len = 0
        for ri in range(c.num_rel):
            if c.unassigned[ri] <= 1:
                c.rel_queue[c.queue_len] = ri
                c.queue_len += 1
        for (g, p) in fixed:
            p = tuple(p)
            if key_index(&c, perm_key_py(p, n)) < 0:
                ok = 0
                break
            for j in range(n):
                pval[j] = p[j]
            assign(&c, <int>g, pval, &n_gen_trail)
        if ok:
            ok = propagate(&c, &n_gen_trail, &n_sat_trail)
        if ok:
            c.gen_used = n_gen_trail
            c.sat_used = n_sat_trail
            count = dfs(&c, 0, homs)
        undo(&c, 0, n_gen_trail, 0, n_sat_trail)
        if c.budget_hit:
            raise BudgetExceededError(budget)
        return count, homs, c.nodes
    finally:
        free(c.cand)
        free(c.cand_keys)
        free(c.rel_off)
        free(c.rel_gen)
        free(c.rel_exp)
        free(c.occ_off)
        free(c.occ_rel)
        free(c.unassigned)
        free(c.images)
        free(c.assigned)
        free(c.sat)
        free(c.order)
        free(c.gen_trail)
        free(c.sat_trail)
        free(c.rel_queue)


cdef u64 perm_key_py(p, int n):
    cdef u64 k = 0
    cdef int i
    for i in range(n):
        k = (k << 5) | <u64>(<int>p[i])
    return k
