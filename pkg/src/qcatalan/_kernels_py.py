"""Dense coefficient kernels, pure-Python implementation.

Every hot loop of the toolkit bottoms out here: the functions operate on
plain Python lists of arbitrary-precision ints (dense coefficient vectors;
exponent offsets are the caller's business). `qcatalan._kernels_cy` is the
compiled twin with identical semantics; `qcatalan.kernels` picks one at
import time.

Division helpers return None instead of raising so the callers can attach
their own exception types without a circular import.
"""


def mul_dense(a, b):
    """Schoolbook product of two dense coefficient vectors."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def add_shifted_scaled(a, b, shift, scale):
    """a + scale * q^shift * b with shift >= 0."""
    n = max(len(a), shift + len(b))
    out = list(a) + [0] * (n - len(a))
    for j, bj in enumerate(b):
        if bj:
            out[shift + j] += scale * bj
    return out


def acc_scaled(out, b, offset, scale):
    """In-place out[offset+j] += scale * b[j]; caller guarantees room."""
    for j, bj in enumerate(b):
        if bj:
            out[offset + j] += scale * bj


def mul_two_term(a, e, c):
    """a * (1 + c*q^e) with e >= 1."""
    return add_shifted_scaled(a, a, e, c)


def divexact_two_term(a, e, c):
    """a / (1 + c*q^e) if the quotient is exact, else None; e >= 1."""
    n = len(a)
    if n == 0:
        return []
    out = [0] * n
    for i in range(n):
        v = a[i]
        if i >= e:
            prev = out[i - e]
            if prev:
                v = v - c * prev
        out[i] = v
    cut = max(0, n - e)
    for i in range(cut, n):
        if out[i]:
            return None
    del out[cut:]
    return out


def divexact_dense(num, den):
    """Exact division of dense vectors; den is trimmed at both ends.

    Returns the quotient or None when no exact integer quotient exists.
    """
    if not num:
        return []
    dn = len(den)
    nn = len(num)
    if nn < dn:
        return None
    lead = den[dn - 1]
    qn = nn - dn + 1
    rem = list(num)
    out = [0] * qn
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
                    rem[k + j] -= q * dj
    for v in rem:
        if v:
            return None
    return out


def series_div_binomial(a, step, scale, out_len):
    """Truncation of a / (1 - scale*q^step) to out_len entries; step >= 1."""
    out = [0] * out_len
    m = min(len(a), out_len)
    out[:m] = a[:m]
    for i in range(step, out_len):
        prev = out[i - step]
        if prev:
            out[i] += scale * prev
    return out


def unimodal_violation(a):
    """Index of the first ascent after a strict descent, or -1 if unimodal."""
    descending = False
    for i in range(1, len(a)):
        if a[i] < a[i - 1]:
            descending = True
        elif descending and a[i] > a[i - 1]:
            return i
    return -1


def first_negative(a):
    """Index of the first negative entry, or -1."""
    for i, v in enumerate(a):
        if v < 0:
            return i
    return -1
