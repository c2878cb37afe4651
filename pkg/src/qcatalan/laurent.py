"""Exact sparse Laurent-polynomial arithmetic in one variable q.

The module houses the ring itself (LaurentPoly), the three part-extraction
operators (positive / constant / negative exponents), the substitution
q -> 1/q, the centering normalization P(q) -> P(q^2) q^{-deg P}, symmetry
classification, and the unimodality predicates together with the witness
polynomials whose sign patterns certify them.

All values are immutable after construction and all operations are pure
functions, so everything here is safe to call from any number of threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from qcatalan import kernels
from qcatalan.errors import InexactDivisionError

#: Above this schoolbook cost estimate, dense multiplication falls back to
#: the sparse dict loop (only matters for huge supports with huge gaps).
_DENSE_MUL_LIMIT = 64_000_000


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    Stored as a sparse map from exponent (possibly negative) to nonzero
    arbitrary-precision integer coefficient.

    >>> p = LaurentPoly({-1: 1, 0: 2, 3: 1})
    >>> str(p)
    'q^-1 + 2 + q^3'
    >>> str(p * p)
    'q^-2 + 4*q^-1 + 4 + 2*q^2 + 4*q^3 + 4*q^4 + q^6'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms} if terms else {}
        self._terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # Internal: terms must already be zero-free; skips re-filtering.
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def from_dense(cls, offset: int, coeffs) -> "LaurentPoly":
        return cls._raw({offset + i: c for i, c in enumerate(coeffs) if c})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Optional[int]:
        """Top exponent, or None for the zero polynomial (never a sentinel)."""
        return max(self._terms) if self._terms else None

    def low_degree(self) -> Optional[int]:
        """Bottom exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def support(self) -> list[int]:
        return sorted(self._terms)

    def terms_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def to_dense(self) -> tuple[int, list[int]]:
        """(offset, coefficient list) with no leading/trailing zeros."""
        if not self._terms:
            return 0, []
        lo = min(self._terms)
        hi = max(self._terms)
        out = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            out[e - lo] = c
        return lo, out

    def dense_coeffs(self) -> list[int]:
        """Coefficients 0..degree; requires nonnegative support."""
        if not self._terms:
            return []
        if min(self._terms) < 0:
            raise ValueError("negative support")
        out = [0] * (max(self._terms) + 1)
        for e, c in self._terms.items():
            out[e] = c
        return out

    def evaluate(self, v: int = 1) -> int:
        """Value at an integer point; negative exponents need v in {1, -1}."""
        lo = self.low_degree()
        if lo is not None and lo < 0 and v not in (1, -1):
            raise ValueError("negative exponents: evaluation only at 1 or -1")
        if v == 1:
            return sum(self._terms.values())
        return sum(c * v ** (e & 1) if v == -1 else c * v**e
                   for e, c in self._terms.items())

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: other * c for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly._raw({})
        span_a = max(a) - min(a) + 1
        span_b = max(b) - min(b) + 1
        if span_a * span_b <= _DENSE_MUL_LIMIT:
            lo_a, da = self.to_dense()
            lo_b, db = other.to_dense()
            return LaurentPoly.from_dense(lo_a + lo_b, kernels.mul_dense(da, db))
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / den.

        Raises InexactDivisionError when no Laurent-polynomial quotient
        exists (the remainder test is what flags non-polynomial rational
        q-Catalan quotients for non-coprime pairs).
        """
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        lo_n, dn = self.to_dense()
        lo_d, dd = den.to_dense()
        q = kernels.divexact_dense(dn, dd)
        if q is None:
            raise InexactDivisionError("inexact division")
        return LaurentPoly.from_dense(lo_n - lo_d, q)

    # -- comparisons / rendering ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "q") -> str:
        """Canonical ascending-exponent rendering, e.g. '1 + q^2 + 2*q^4'."""
        if not self._terms:
            return "0"
        chunks = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                body = pw if mag == 1 else f"{mag}*{pw}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)


def _coerce(v) -> "LaurentPoly":
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, int):
        return LaurentPoly(v)
    return NotImplemented


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NEITHER = "neither"


# -- operators -----------------------------------------------------------

def extract(p: LaurentPoly, region: str) -> LaurentPoly:
    """Sub-polynomial on exponents > 0, == 0 or < 0.

    The three parts always sum back to p.

    >>> str(extract(LaurentPoly({-1: 1, 0: 2, 3: 1}), "positive"))
    'q^3'
    """
    if region == "positive":
        keep = lambda e: e > 0
    elif region == "zero":
        keep = lambda e: e == 0
    elif region == "negative":
        keep = lambda e: e < 0
    else:
        raise ValueError(f"unknown region {region!r}")
    return LaurentPoly._raw({e: c for e, c in p._terms.items() if keep(e)})


def reciprocal_subst(p: LaurentPoly) -> LaurentPoly:
    """The substitution q -> 1/q (an involution)."""
    return LaurentPoly._raw({-e: c for e, c in p._terms.items()})


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Center a genuine polynomial: P(q) -> P(q^2) * q^(-deg P); 0 -> 0.

    The result is invariant under q -> 1/q exactly when p is symmetric,
    and the map is multiplicative.
    """
    if p.is_zero():
        return ZERO
    lo = p.low_degree()
    if lo is not None and lo < 0:
        raise ValueError("negative support")
    n = p.degree()
    return LaurentPoly._raw({2 * e - n: c for e, c in p._terms.items()})


def symmetry_class(p: LaurentPoly) -> str:
    """'symmetric', 'antisymmetric' or 'neither' under q -> 1/q.

    The zero polynomial reports symmetric.
    """
    if p.is_zero():
        return SYMMETRIC
    sym = True
    anti = True
    for e, c in p._terms.items():
        mirror = p._terms.get(-e, 0)
        if mirror != c:
            sym = False
        if mirror != -c:
            anti = False
        if not sym and not anti:
            return NEITHER
    if sym:
        return SYMMETRIC
    return ANTISYMMETRIC if anti else NEITHER


def is_symmetric_poly(p: LaurentPoly) -> bool:
    """Symmetry in the coefficient-sequence sense: a_i == a_{deg-i}."""
    if p.is_zero():
        return True
    if p.low_degree() < 0:
        raise ValueError("negative support")
    return symmetry_class(normalize(p)) == SYMMETRIC


def is_unimodal(p: LaurentPoly) -> tuple[bool, Optional[int]]:
    """Rise-then-fall test on the dense coefficient sequence.

    Internal zeros count: a degree-n polynomial is read as exactly n+1
    entries (so 1 + q^2 is *not* unimodal). The zero polynomial is
    vacuously unimodal. On failure the second component is the smallest
    exponent witnessing an ascent after a strict descent.

    >>> is_unimodal(LaurentPoly({0: 1, 2: 1}))
    (False, 2)
    """
    seq = p.dense_coeffs()
    i = kernels.unimodal_violation(seq)
    return (True, None) if i < 0 else (False, i)


def is_parity_unimodal(p: LaurentPoly) -> tuple[bool, Optional[int]]:
    """Both the even- and odd-exponent coefficient subsequences unimodal.

    On failure the reported index is the smallest witnessing exponent in
    the original indexing.
    """
    seq = p.dense_coeffs()
    viols = []
    for start in (0, 1):
        i = kernels.unimodal_violation(seq[start::2])
        if i >= 0:
            viols.append(2 * i + start)
    if viols:
        return False, min(viols)
    return True, None


def lemma5_witnesses(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Witness pair (w1, w2) for a symmetric polynomial p.

    w1 = positive part of normalize((q-1)*p) and w2 = positive part of
    (q^2 - q^-2)*normalize(p). w1 is coefficientwise nonnegative iff p is
    unimodal; w2 iff p is parity-unimodal.
    """
    if not is_symmetric_poly(p):
        raise ValueError("not symmetric")
    if p.is_zero():
        return ZERO, ZERO
    w1 = extract(normalize((Q - 1) * p), "positive")
    npoly = normalize(p)
    w2 = extract(npoly.shift(2) - npoly.shift(-2), "positive")
    return w1, w2


def has_nonneg_coeffs(p: LaurentPoly) -> bool:
    return all(c >= 0 for c in p._terms.values())


@dataclass(frozen=True)
class UnimodalityReport:
    """Verdict for one polynomial; subject is (m, n) or a single n."""

    subject: tuple[int, int] | int
    degree: int
    symmetric: bool
    parity_unimodal: bool
    first_violation: Optional[int] = None

    def __post_init__(self):
        if self.parity_unimodal and self.first_violation is not None:
            raise ValueError("parity_unimodal reports cannot carry a violation")
