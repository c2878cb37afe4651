# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense coefficient kernels, compiled twin of _kernels_py.

Coefficients stay Python ints (arbitrary precision is non-negotiable:
central q-binomials at the optional sweep scale exceed machine words by
hundreds of bits); the win over the pure twin is compiled index loops.
"""


def mul_dense(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai, bj
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


def add_shifted_scaled(list a, list b, Py_ssize_t shift, object scale):
    cdef Py_ssize_t na = len(a), nb = len(b), j
    cdef Py_ssize_t n = na if na > shift + nb else shift + nb
    cdef list out = list(a) + [0] * (n - na)
    cdef object bj
    for j in range(nb):
        bj = b[j]
        if bj:
            out[shift + j] = out[shift + j] + scale * bj
    return out


def acc_scaled(list out, list b, Py_ssize_t offset, object scale):
    cdef Py_ssize_t j, nb = len(b)
    cdef object bj
    for j in range(nb):
        bj = b[j]
        if bj:
            out[offset + j] = out[offset + j] + scale * bj


def mul_two_term(list a, Py_ssize_t e, object c):
    return add_shifted_scaled(a, a, e, c)


def divexact_two_term(list a, Py_ssize_t e, object c):
    cdef Py_ssize_t n = len(a), i, cut
    if n == 0:
        return []
    cdef list out = [0] * n
    cdef object v, prev
    for i in range(n):
        v = a[i]
        if i >= e:
            prev = out[i - e]
            if prev:
                v = v - c * prev
        out[i] = v
    cut = n - e
    if cut < 0:
        cut = 0
    for i in range(cut, n):
        if out[i]:
            return None
    del out[cut:]
    return out


def divexact_dense(list num, list den):
    cdef Py_ssize_t nn = len(num), dn = len(den), k, j, qn
    if nn == 0:
        return []
    if nn < dn:
        return None
    cdef object lead = den[dn - 1]
    qn = nn - dn + 1
    cdef list rem = list(num)
    cdef list out = [0] * qn
    cdef object v, q, dj
    for k in range(qn - 1, -1, -1):
        v = rem[k + dn - 1]
        if v:
            if v % lead:
                return None
            q = v // lead
            out[k] = q
            for j in range(dn):
                dj = den[j]
                if dj:
                    rem[k + j] = rem[k + j] - q * dj
    for j in range(nn):
        if rem[j]:
            return None
    return out


def series_div_binomial(list a, Py_ssize_t step, object scale, Py_ssize_t out_len):
    cdef list out = [0] * out_len
    cdef Py_ssize_t m = len(a), i
    if m > out_len:
        m = out_len
    for i in range(m):
        out[i] = a[i]
    cdef object prev
    for i in range(step, out_len):
        prev = out[i - step]
        if prev:
            out[i] = out[i] + scale * prev
    return out


def unimodal_violation(list a):
    cdef Py_ssize_t i, n = len(a)
    cdef bint descending = False
    for i in range(1, n):
        if a[i] < a[i - 1]:
            descending = True
        elif descending and a[i] > a[i - 1]:
            return i
    return -1


def first_negative(list a):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] < 0:
            return i
    return -1
