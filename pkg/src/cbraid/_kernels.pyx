# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the reduction kernels in _kernels_py (same signatures, same results)."""
from heapq import heappop, heappush

cdef bytes _INV = bytes(range(255, -1, -1))


def heap_key(bytes w):
    return (-len(w), w.translate(_INV))


cdef inline object _find(bytes w, dict rules, tuple lengths):
    cdef Py_ssize_t L = len(w), ln, i
    cdef bytes sub
    for ln in lengths:
        if ln > L:
            break
        for i in range(L - ln + 1):
            sub = w[i:i + ln]
            if sub in rules:
                return (i, sub)
    return None


def find_reducer(bytes w, dict rules, tuple lengths):
    return _find(w, rules, lengths)


def reduce_mod_p(dict poly, dict rules, tuple lengths, long long p):
    cdef dict pend = dict(poly)
    cdef list heap = [(heap_key(w), w) for w in pend]
    cdef dict out = {}
    cdef bytes w, nw, left, right, lm, tw
    cdef long long c, tc, v
    cdef Py_ssize_t i
    cdef object hit, old
    heap.sort()
    while heap:
        w = heappop(heap)[1]
        old = pend.pop(w, None)
        if old is None:
            continue
        c = old
        if c == 0:
            continue
        hit = _find(w, rules, lengths)
        if hit is None:
            out[w] = c
            continue
        i = hit[0]
        lm = hit[1]
        left = w[:i]
        right = w[i + len(lm):]
        for tw, tco in rules[lm]:
            tc = tco
            nw = left + tw + right
            old = pend.get(nw)
            if old is None:
                v = (-c * tc) % p
                if v < 0:
                    v += p
                pend[nw] = v
                heappush(heap, (heap_key(nw), nw))
            else:
                v = (<long long>old - c * tc) % p
                if v < 0:
                    v += p
                if v:
                    pend[nw] = v
                else:
                    del pend[nw]
    return out


def reduce_exact(dict poly, dict rules, tuple lengths):
    cdef dict pend = dict(poly)
    cdef list heap = [(heap_key(w), w) for w in pend]
    cdef dict out = {}
    cdef bytes w, nw, left, right, lm, tw
    cdef Py_ssize_t i
    cdef object hit, old, c, v, tc
    heap.sort()
    while heap:
        w = heappop(heap)[1]
        c = pend.pop(w, 0)
        if not c:
            continue
        hit = _find(w, rules, lengths)
        if hit is None:
            out[w] = c
            continue
        i = hit[0]
        lm = hit[1]
        left = w[:i]
        right = w[i + len(lm):]
        for tw, tc in rules[lm]:
            nw = left + tw + right
            old = pend.get(nw)
            if old is None:
                pend[nw] = -c * tc
                heappush(heap, (heap_key(nw), nw))
            else:
                v = old - c * tc
                if v:
                    pend[nw] = v
                else:
                    del pend[nw]
    return out
