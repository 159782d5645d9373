# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Exact mirror of ``pure.py``: same traversal order, pruning rules, memo
policy, and node accounting.  Any observable divergence between the two
backends is a bug; the parity tests compare them directly.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

FOUND = 0
EXHAUSTED = 1
BUDGET = 2

MEMO_LIMIT = 1 << 22
MEMO_MAX_BITS = 63

cdef int C_FOUND = 0
cdef int C_EXHAUSTED = 1
cdef int C_BUDGET = 2


cdef int _bitlen(long long v) noexcept:
    cdef int n = 0
    while v > 0:
        v >>= 1
        n += 1
    return n if n > 0 else 1


cdef int* _copy_ints(object seq, Py_ssize_t* out_len) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef int* buf = <int*> malloc(max(n, 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    out_len[0] = n
    return buf


# ---------------------------------------------------------------------------
# dead-state memo: open-addressing hash set of packed uint64 keys

cdef struct Memo:
    unsigned long long* keys
    unsigned char* full
    size_t mask
    size_t entries
    size_t limit

cdef size_t MEMO_MAX_SLOTS = (<size_t> 1) << 23

cdef int _memo_init(Memo* mm, size_t limit) except -1:
    cdef size_t size = (<size_t> 1) << 12
    mm.keys = <unsigned long long*> malloc(size * sizeof(unsigned long long))
    mm.full = <unsigned char*> calloc(size, 1)
    if mm.keys == NULL or mm.full == NULL:
        raise MemoryError()
    mm.mask = size - 1
    mm.entries = 0
    mm.limit = limit
    return 0

cdef void _memo_free(Memo* mm) noexcept:
    if mm.keys != NULL:
        free(mm.keys)
        mm.keys = NULL
    if mm.full != NULL:
        free(mm.full)
        mm.full = NULL

cdef inline size_t _memo_slot(Memo* mm, unsigned long long key) noexcept:
    cdef size_t h = <size_t> (key * <unsigned long long> 0x9E3779B97F4A7C15ULL)
    cdef size_t i = (h >> 17) & mm.mask
    while mm.full[i] and mm.keys[i] != key:
        i = (i + 1) & mm.mask
    return i

cdef bint _memo_has(Memo* mm, unsigned long long key) noexcept:
    return mm.full[_memo_slot(mm, key)]

cdef int _memo_grow(Memo* mm) except -1:
    cdef size_t old_size = mm.mask + 1
    cdef size_t new_size = old_size << 1
    cdef unsigned long long* old_keys = mm.keys
    cdef unsigned char* old_full = mm.full
    mm.keys = <unsigned long long*> malloc(new_size * sizeof(unsigned long long))
    mm.full = <unsigned char*> calloc(new_size, 1)
    if mm.keys == NULL or mm.full == NULL:
        mm.keys = old_keys
        mm.full = old_full
        raise MemoryError()
    mm.mask = new_size - 1
    cdef size_t i, j
    for i in range(old_size):
        if old_full[i]:
            j = _memo_slot(mm, old_keys[i])
            mm.keys[j] = old_keys[i]
            mm.full[j] = 1
    free(old_keys)
    free(old_full)
    return 0

cdef int _memo_add(Memo* mm, unsigned long long key) except -1:
    if mm.entries >= mm.limit:
        return 0
    cdef size_t size = mm.mask + 1
    if (mm.entries + 1) * 2 > size and size < MEMO_MAX_SLOTS:
        _memo_grow(mm)
    cdef size_t i = _memo_slot(mm, key)
    if not mm.full[i]:
        mm.keys[i] = key
        mm.full[i] = 1
        mm.entries += 1
    return 0


# ---------------------------------------------------------------------------
# chain kernel

cdef struct Chain:
    int m
    int s
    int* add_t
    int* slot_cap
    int* slot_floor
    int* dcap
    int* dfloor
    bint start_singleton
    bint end_singleton
    bint cyclic
    int* assign
    int* scount
    int* dcount
    int* ncomp
    int* comps            # 2 per slot
    int* remaining_at
    int sdef
    int ddef
    long long nodes
    long long budget
    bint memo_on
    int bits_pos
    int bits_lab
    int bits_sc
    int bits_dc
    Memo memo


cdef inline unsigned long long _chain_pack(Chain* ch, int j, int prev) noexcept:
    cdef unsigned long long key = <unsigned long long> j
    key = (key << ch.bits_lab) | <unsigned long long> prev
    if ch.cyclic:
        key = (key << ch.bits_lab) | <unsigned long long> ch.assign[0]
    cdef int a
    for a in range(ch.m):
        key = (key << ch.bits_sc) | <unsigned long long> ch.scount[a]
    for a in range(ch.m):
        key = (key << ch.bits_dc) | <unsigned long long> ch.dcount[a]
    return key


cdef int _chain_place(Chain* ch, int i, int x) noexcept:
    if ch.scount[x] >= ch.slot_cap[x]:
        return -1
    cdef int* comps = ch.comps + 2 * i
    cdef int n = 0
    if i == 0:
        if ch.start_singleton:
            comps[0] = x
            n = 1
    else:
        comps[0] = ch.add_t[ch.assign[i - 1] * ch.m + x]
        n = 1
    if i == ch.s - 1:
        if ch.cyclic:
            comps[n] = ch.add_t[x * ch.m + ch.assign[0]]
            n += 1
        if ch.end_singleton:
            comps[n] = x
            n += 1
    cdef int applied = 0
    cdef int t, c
    for t in range(n):
        c = comps[t]
        if ch.dcount[c] >= ch.dcap[c]:
            break
        ch.dcount[c] += 1
        if ch.dcount[c] <= ch.dfloor[c]:
            ch.ddef -= 1
        applied += 1
    if applied < n:
        for t in range(applied - 1, -1, -1):
            c = comps[t]
            if ch.dcount[c] <= ch.dfloor[c]:
                ch.ddef += 1
            ch.dcount[c] -= 1
        return -1
    ch.scount[x] += 1
    if ch.scount[x] <= ch.slot_floor[x]:
        ch.sdef -= 1
    ch.assign[i] = x
    ch.ncomp[i] = n
    if ch.sdef > ch.s - i - 1 or ch.ddef > ch.remaining_at[i + 1]:
        _chain_unplace(ch, i, x)
        return -1
    return n


cdef void _chain_unplace(Chain* ch, int i, int x) noexcept:
    if ch.scount[x] <= ch.slot_floor[x]:
        ch.sdef += 1
    ch.scount[x] -= 1
    ch.assign[i] = -1
    cdef int* comps = ch.comps + 2 * i
    cdef int t, c
    for t in range(ch.ncomp[i] - 1, -1, -1):
        c = comps[t]
        if ch.dcount[c] <= ch.dfloor[c]:
            ch.ddef += 1
        ch.dcount[c] -= 1


cdef int _chain_dfs(Chain* ch, int i) except -2:
    if i == ch.s:
        return C_FOUND
    cdef int x, r
    cdef unsigned long long key
    cdef bint have_key
    for x in range(ch.m):
        if ch.budget >= 0 and ch.nodes >= ch.budget:
            return C_BUDGET
        ch.nodes += 1
        if _chain_place(ch, i, x) < 0:
            continue
        have_key = 0
        key = 0
        if ch.memo_on and i + 1 < ch.s:
            key = _chain_pack(ch, i + 1, x)
            have_key = 1
            if _memo_has(&ch.memo, key):
                _chain_unplace(ch, i, x)
                continue
        r = _chain_dfs(ch, i + 1)
        if r == C_FOUND:
            return C_FOUND
        _chain_unplace(ch, i, x)
        if r == C_BUDGET:
            return C_BUDGET
        if have_key:
            _memo_add(&ch.memo, key)
    return C_EXHAUSTED


def solve_chain(
    int m,
    object add_t,
    int num_slots,
    object slot_cap,
    object slot_floor,
    object dcap,
    object dfloor,
    bint start_singleton,
    bint end_singleton,
    bint cyclic,
    object prefix,
    long long budget,
    long long memo_limit=MEMO_LIMIT,
):
    if num_slots < 1:
        raise ValueError("chain instances need at least one slot")
    if cyclic and (start_singleton or end_singleton or num_slots < 3):
        raise ValueError("cyclic chains exclude singletons and need 3+ slots")

    cdef Chain ch
    memset(&ch, 0, sizeof(Chain))
    ch.m = m
    ch.s = num_slots
    ch.start_singleton = start_singleton
    ch.end_singleton = end_singleton
    ch.cyclic = cyclic
    ch.budget = budget
    ch.nodes = 0

    cdef Py_ssize_t tmp
    cdef int j, done, scap_max, dcap_max, total_bits, total_derived
    cdef int status = C_EXHAUSTED
    cdef Py_ssize_t p = len(prefix)
    if p > num_slots:
        raise ValueError("prefix longer than the slot list")

    ch.add_t = _copy_ints(add_t, &tmp)
    try:
        ch.slot_cap = _copy_ints(slot_cap, &tmp)
        ch.slot_floor = _copy_ints(slot_floor, &tmp)
        ch.dcap = _copy_ints(dcap, &tmp)
        ch.dfloor = _copy_ints(dfloor, &tmp)
        ch.assign = <int*> malloc(num_slots * sizeof(int))
        ch.scount = <int*> calloc(m, sizeof(int))
        ch.dcount = <int*> calloc(m, sizeof(int))
        ch.ncomp = <int*> calloc(num_slots, sizeof(int))
        ch.comps = <int*> calloc(2 * num_slots, sizeof(int))
        ch.remaining_at = <int*> malloc((num_slots + 1) * sizeof(int))
        if (ch.assign == NULL or ch.scount == NULL or ch.dcount == NULL
                or ch.ncomp == NULL or ch.comps == NULL or ch.remaining_at == NULL):
            raise MemoryError()
        for j in range(num_slots):
            ch.assign[j] = -1

        ch.sdef = 0
        ch.ddef = 0
        for j in range(m):
            ch.sdef += ch.slot_floor[j]
            ch.ddef += ch.dfloor[j]

        total_derived = (num_slots - 1)
        if start_singleton:
            total_derived += 1
        if end_singleton:
            total_derived += 1
        if cyclic:
            total_derived += 1
        for j in range(num_slots + 1):
            done = j - 1 if j >= 1 else 0
            if start_singleton and j >= 1:
                done += 1
            if j == num_slots:
                done += (1 if end_singleton else 0) + (1 if cyclic else 0)
            ch.remaining_at[j] = total_derived - done

        scap_max = 0
        dcap_max = 0
        for j in range(m):
            if ch.slot_cap[j] > scap_max:
                scap_max = ch.slot_cap[j]
            if ch.dcap[j] > dcap_max:
                dcap_max = ch.dcap[j]
        ch.bits_pos = _bitlen(num_slots)
        ch.bits_lab = _bitlen(m - 1)
        ch.bits_sc = _bitlen(scap_max)
        ch.bits_dc = _bitlen(dcap_max)
        total_bits = (ch.bits_pos + ch.bits_lab
                      + (ch.bits_lab if cyclic else 0)
                      + m * (ch.bits_sc + ch.bits_dc))
        ch.memo_on = total_bits <= MEMO_MAX_BITS
        _memo_init(&ch.memo, <size_t> memo_limit)

        for j in range(p):
            if _chain_place(&ch, j, prefix[j]) < 0:
                return (EXHAUSTED, None, 0)
        status = _chain_dfs(&ch, <int> p)
        if status == C_FOUND:
            return (FOUND, [ch.assign[j] for j in range(num_slots)], ch.nodes)
        return (status, None, ch.nodes)
    finally:
        _memo_free(&ch.memo)
        free(ch.add_t)
        free(ch.slot_cap)
        free(ch.slot_floor)
        free(ch.dcap)
        free(ch.dfloor)
        free(ch.assign)
        free(ch.scount)
        free(ch.dcount)
        free(ch.ncomp)
        free(ch.comps)
        free(ch.remaining_at)


# ---------------------------------------------------------------------------
# generic kernel

cdef struct Generic:
    int m
    int s
    int num_derived
    int* add_t
    int* neg_t
    int* slot_cap
    int* slot_floor
    int* dcap
    int* dfloor
    int* sd_ptr
    int* sd_ids
    int* comp_ptr
    int* comp_ids
    int* assign
    int* psum
    int* scount
    int* dcount
    int* remaining_at
    int sdef
    int ddef
    long long nodes
    long long budget


cdef bint _gen_place(Generic* g, int i, int x) noexcept:
    if g.scount[x] >= g.slot_cap[x]:
        return 0
    cdef int t, d, v
    for t in range(g.sd_ptr[i], g.sd_ptr[i + 1]):
        d = g.sd_ids[t]
        g.psum[d] = g.add_t[g.psum[d] * g.m + x]
    cdef int applied = g.comp_ptr[i]
    cdef bint ok = 1
    for t in range(g.comp_ptr[i], g.comp_ptr[i + 1]):
        v = g.psum[g.comp_ids[t]]
        if g.dcount[v] >= g.dcap[v]:
            ok = 0
            break
        g.dcount[v] += 1
        if g.dcount[v] <= g.dfloor[v]:
            g.ddef -= 1
        applied = t + 1
    if not ok:
        for t in range(applied - 1, g.comp_ptr[i] - 1, -1):
            v = g.psum[g.comp_ids[t]]
            if g.dcount[v] <= g.dfloor[v]:
                g.ddef += 1
            g.dcount[v] -= 1
        for t in range(g.sd_ptr[i + 1] - 1, g.sd_ptr[i] - 1, -1):
            d = g.sd_ids[t]
            g.psum[d] = g.add_t[g.psum[d] * g.m + g.neg_t[x]]
        return 0
    g.scount[x] += 1
    if g.scount[x] <= g.slot_floor[x]:
        g.sdef -= 1
    g.assign[i] = x
    if g.sdef > g.s - i - 1 or g.ddef > g.remaining_at[i + 1]:
        _gen_unplace(g, i, x)
        return 0
    return 1


cdef void _gen_unplace(Generic* g, int i, int x) noexcept:
    if g.scount[x] <= g.slot_floor[x]:
        g.sdef += 1
    g.scount[x] -= 1
    g.assign[i] = -1
    cdef int t, d, v
    for t in range(g.comp_ptr[i + 1] - 1, g.comp_ptr[i] - 1, -1):
        v = g.psum[g.comp_ids[t]]
        if g.dcount[v] <= g.dfloor[v]:
            g.ddef += 1
        g.dcount[v] -= 1
    for t in range(g.sd_ptr[i + 1] - 1, g.sd_ptr[i] - 1, -1):
        d = g.sd_ids[t]
        g.psum[d] = g.add_t[g.psum[d] * g.m + g.neg_t[x]]


cdef int _gen_dfs(Generic* g, int i) except -2:
    if i == g.s:
        return C_FOUND
    cdef int x, r
    for x in range(g.m):
        if g.budget >= 0 and g.nodes >= g.budget:
            return C_BUDGET
        g.nodes += 1
        if not _gen_place(g, i, x):
            continue
        r = _gen_dfs(g, i + 1)
        if r == C_FOUND:
            return C_FOUND
        _gen_unplace(g, i, x)
        if r == C_BUDGET:
            return C_BUDGET
    return C_EXHAUSTED


def solve_generic(
    int m,
    object add_t,
    object neg_t,
    int num_slots,
    object slot_cap,
    object slot_floor,
    object dcap,
    object dfloor,
    int num_derived,
    object sd_ptr,
    object sd_ids,
    object comp_ptr,
    object comp_ids,
    object prefix,
    long long budget,
):
    cdef Generic g
    memset(&g, 0, sizeof(Generic))
    g.m = m
    g.s = num_slots
    g.num_derived = num_derived
    g.budget = budget
    g.nodes = 0

    cdef Py_ssize_t tmp
    cdef int j
    cdef int status = C_EXHAUSTED
    cdef Py_ssize_t p = len(prefix)
    if p > num_slots:
        raise ValueError("prefix longer than the slot list")

    g.add_t = _copy_ints(add_t, &tmp)
    try:
        g.neg_t = _copy_ints(neg_t, &tmp)
        g.slot_cap = _copy_ints(slot_cap, &tmp)
        g.slot_floor = _copy_ints(slot_floor, &tmp)
        g.dcap = _copy_ints(dcap, &tmp)
        g.dfloor = _copy_ints(dfloor, &tmp)
        g.sd_ptr = _copy_ints(sd_ptr, &tmp)
        g.sd_ids = _copy_ints(sd_ids, &tmp)
        g.comp_ptr = _copy_ints(comp_ptr, &tmp)
        g.comp_ids = _copy_ints(comp_ids, &tmp)
        g.assign = <int*> malloc(max(num_slots, 1) * sizeof(int))
        g.psum = <int*> calloc(max(num_derived, 1), sizeof(int))
        g.scount = <int*> calloc(m, sizeof(int))
        g.dcount = <int*> calloc(m, sizeof(int))
        g.remaining_at = <int*> calloc(num_slots + 1, sizeof(int))
        if (g.assign == NULL or g.psum == NULL or g.scount == NULL
                or g.dcount == NULL or g.remaining_at == NULL):
            raise MemoryError()
        for j in range(num_slots):
            g.assign[j] = -1

        g.sdef = 0
        g.ddef = 0
        for j in range(m):
            g.sdef += g.slot_floor[j]
            g.ddef += g.dfloor[j]
        g.remaining_at[num_slots] = 0
        for j in range(num_slots - 1, -1, -1):
            g.remaining_at[j] = g.remaining_at[j + 1] + (g.comp_ptr[j + 1] - g.comp_ptr[j])

        for j in range(p):
            if not _gen_place(&g, j, prefix[j]):
                return (EXHAUSTED, None, 0)
        status = _gen_dfs(&g, <int> p)
        if status == C_FOUND:
            return (FOUND, [g.assign[j] for j in range(num_slots)], g.nodes)
        return (status, None, g.nodes)
    finally:
        free(g.add_t)
        free(g.neg_t)
        free(g.slot_cap)
        free(g.slot_floor)
        free(g.dcap)
        free(g.dfloor)
        free(g.sd_ptr)
        free(g.sd_ids)
        free(g.comp_ptr)
        free(g.comp_ids)
        free(g.assign)
        free(g.psum)
        free(g.scount)
        free(g.dcount)
        free(g.remaining_at)


# ---------------------------------------------------------------------------
# sequencing kernel

cdef struct RStar:
    int m
    int length
    int* add_t
    int* neg_t
    int* seq
    unsigned char* used
    unsigned char* dused
    long long nodes
    long long budget
    int star_at


cdef int _rstar_dfs(RStar* r, int i) except -2:
    cdef int x, d, idx, a, b, res, d0
    if i == r.length:
        d0 = r.add_t[r.seq[0] * r.m + r.neg_t[r.seq[r.length - 1]]]
        if r.dused[d0]:
            return C_EXHAUSTED
        for idx in range(r.length):
            a = r.seq[(idx - 1 + r.length) % r.length]
            b = r.seq[(idx + 1) % r.length]
            if r.add_t[a * r.m + b] == r.seq[idx]:
                r.star_at = idx
                return C_FOUND
        return C_EXHAUSTED
    for x in range(1, r.m):
        if r.budget >= 0 and r.nodes >= r.budget:
            return C_BUDGET
        r.nodes += 1
        if r.used[x]:
            continue
        d = -1
        if i >= 1:
            d = r.add_t[x * r.m + r.neg_t[r.seq[i - 1]]]
            if r.dused[d]:
                continue
            r.dused[d] = 1
        r.used[x] = 1
        r.seq[i] = x
        res = _rstar_dfs(r, i + 1)
        if res == C_FOUND:
            return C_FOUND
        r.used[x] = 0
        r.seq[i] = -1
        if d >= 0:
            r.dused[d] = 0
        if res == C_BUDGET:
            return C_BUDGET
    return C_EXHAUSTED


def solve_rstar(int m, object add_t, object neg_t, object prefix, long long budget):
    cdef RStar r
    memset(&r, 0, sizeof(RStar))
    r.m = m
    r.length = m - 1
    r.budget = budget
    r.nodes = 0
    r.star_at = -1

    cdef Py_ssize_t tmp
    cdef int i, x, d
    cdef int status = C_EXHAUSTED
    cdef Py_ssize_t p = len(prefix)
    if p > r.length:
        raise ValueError("prefix longer than the sequence")

    r.add_t = _copy_ints(add_t, &tmp)
    try:
        r.neg_t = _copy_ints(neg_t, &tmp)
        r.seq = <int*> malloc(max(r.length, 1) * sizeof(int))
        r.used = <unsigned char*> calloc(m, 1)
        r.dused = <unsigned char*> calloc(m, 1)
        if r.seq == NULL or r.used == NULL or r.dused == NULL:
            raise MemoryError()
        for i in range(r.length):
            r.seq[i] = -1

        for i in range(p):
            x = prefix[i]
            if x < 1 or x >= m or r.used[x]:
                return (EXHAUSTED, None, -1, 0)
            if i >= 1:
                d = r.add_t[x * r.m + r.neg_t[r.seq[i - 1]]]
                if r.dused[d]:
                    return (EXHAUSTED, None, -1, 0)
                r.dused[d] = 1
            r.used[x] = 1
            r.seq[i] = x
        status = _rstar_dfs(&r, <int> p)
        if status == C_FOUND:
            return (FOUND, [r.seq[i] for i in range(r.length)], r.star_at, r.nodes)
        return (status, None, -1, r.nodes)
    finally:
        free(r.add_t)
        free(r.neg_t)
        free(r.seq)
        free(r.used)
        free(r.dused)


# ---------------------------------------------------------------------------
# maximum-distinct-sums kernel

cdef struct Sigma:
    int m
    int* add_t
    int* order
    int* scount
    int* best_cycle
    unsigned char* used
    int distinct
    int best
    bint have_best
    long long nodes
    long long budget


cdef int _sigma_dfs(Sigma* sg, int i) except -2:
    cdef int x, s_new, nd, d, r, j
    if i == sg.m:
        s_new = sg.add_t[sg.order[sg.m - 1] * sg.m + sg.order[0]]
        d = sg.distinct + (0 if sg.scount[s_new] else 1)
        if d > sg.best:
            sg.best = d
            sg.have_best = 1
            for j in range(sg.m):
                sg.best_cycle[j] = sg.order[j]
        return C_EXHAUSTED
    for x in range(1, sg.m):
        if sg.budget >= 0 and sg.nodes >= sg.budget:
            return C_BUDGET
        sg.nodes += 1
        if sg.used[x]:
            continue
        if i == sg.m - 1 and x < sg.order[1]:
            continue
        s_new = sg.add_t[sg.order[i - 1] * sg.m + x]
        nd = sg.distinct + (0 if sg.scount[s_new] else 1)
        if nd + (sg.m - i) <= sg.best:
            continue
        sg.used[x] = 1
        sg.order[i] = x
        sg.scount[s_new] += 1
        d = sg.distinct
        sg.distinct = nd
        r = _sigma_dfs(sg, i + 1)
        sg.scount[s_new] -= 1
        sg.distinct = d
        sg.used[x] = 0
        if r == C_BUDGET:
            return C_BUDGET
    return C_EXHAUSTED


def solve_sigma(int m, object add_t, long long budget):
    if m == 2:
        return (FOUND, 1, [0, 1], 0)
    cdef Sigma sg
    memset(&sg, 0, sizeof(Sigma))
    sg.m = m
    sg.budget = budget
    sg.nodes = 0
    sg.best = 0
    sg.distinct = 0
    sg.have_best = 0

    cdef Py_ssize_t tmp
    cdef int status
    cdef int j
    sg.add_t = _copy_ints(add_t, &tmp)
    try:
        sg.order = <int*> calloc(m, sizeof(int))
        sg.scount = <int*> calloc(m, sizeof(int))
        sg.best_cycle = <int*> calloc(m, sizeof(int))
        sg.used = <unsigned char*> calloc(m, 1)
        if (sg.order == NULL or sg.scount == NULL or sg.best_cycle == NULL
                or sg.used == NULL):
            raise MemoryError()
        sg.used[0] = 1
        status = _sigma_dfs(&sg, 1)
        final = FOUND if status == C_EXHAUSTED else BUDGET
        cycle = [sg.best_cycle[j] for j in range(m)] if sg.have_best else None
        return (final, sg.best, cycle, sg.nodes)
    finally:
        free(sg.add_t)
        free(sg.order)
        free(sg.scount)
        free(sg.best_cycle)
        free(sg.used)
