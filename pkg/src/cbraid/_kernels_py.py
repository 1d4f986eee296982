"""Pure-Python reduction kernels; the compiled module mirrors these signatures.

Words are ``bytes`` (one byte per generator index).  A rule table maps a
leading word to the tuple of ``(word, coeff)`` tail terms of its monic
polynomial, so that ``lm = -sum(tail)`` modulo the ideal.
"""
from heapq import heappop, heappush

_INV = bytes(range(255, -1, -1))


def heap_key(w: bytes):
    # deglex, largest first
    return (-len(w), w.translate(_INV))


def find_reducer(w: bytes, rules: dict, lengths: tuple):
    """First (position, leading word) of a rule occurring in w, or None."""
    L = len(w)
    for ln in lengths:
        if ln > L:
            break
        for i in range(L - ln + 1):
            sub = w[i:i + ln]
            if sub in rules:
                return i, sub
    return None


def reduce_mod_p(poly: dict, rules: dict, lengths: tuple, p: int) -> dict:
    """Full reduction of poly (word -> int mod p) by the rules."""
    pend = dict(poly)
    heap = [(heap_key(w), w) for w in pend]
    heap.sort()
    out = {}
    while heap:
        _, w = heappop(heap)
        c = pend.pop(w, 0)
        if not c:
            continue
        hit = find_reducer(w, rules, lengths)
        if hit is None:
            out[w] = c
            continue
        i, lm = hit
        left, right = w[:i], w[i + len(lm):]
        for tw, tc in rules[lm]:
            nw = left + tw + right
            old = pend.get(nw)
            if old is None:
                pend[nw] = (-c * tc) % p
                heappush(heap, (heap_key(nw), nw))
            else:
                v = (old - c * tc) % p
                if v:
                    pend[nw] = v
                else:
                    del pend[nw]
    return out


def reduce_exact(poly: dict, rules: dict, lengths: tuple) -> dict:
    """Full reduction over an exact field whose elements support + - * natively."""
    pend = dict(poly)
    heap = [(heap_key(w), w) for w in pend]
    heap.sort()
    out = {}
    while heap:
        _, w = heappop(heap)
        c = pend.pop(w, 0)
        if not c:
            continue
        hit = find_reducer(w, rules, lengths)
        if hit is None:
            out[w] = c
            continue
        i, lm = hit
        left, right = w[:i], w[i + len(lm):]
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
