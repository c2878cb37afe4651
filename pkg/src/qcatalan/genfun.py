"""Truncated bivariate series machinery.

Everything needed to expand binomial-denominator rational functions in the
working field where 0 < x < q < 1 (x infinitesimally smaller than every
power of q), to realize the positive-part operator on series bounded below
in q, to slice x-exponents along residue classes, and to compare computed
series against transcribed closed forms.

Exactness model. A QSeries knows its coefficients exactly on the exponent
window [floor, ceiling): nothing is supported below floor, and nothing is
claimed at or above ceiling (math.inf ceiling = fully exact value). The
negative-exponent part of any series with a finite floor is therefore
always exact, which is what makes the reflected positive-part operator an
exact operation rather than a truncated one. Any query that would touch
the unknown region raises ExactnessError instead of silently truncating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from qcatalan import kernels
from qcatalan.errors import ExactnessError
from qcatalan.laurent import LaurentPoly
from qcatalan.qseries import _cbar_dense

EXACT = math.inf

#: Monomial = (coefficient, x-exponent, q-exponent).
Monomial = tuple[int, int, int]


def default_q_ceiling(m: int, x_order: int) -> int:
    """Ceiling policy for the m-indexed generating functions."""
    return 4 * x_order * m + 8


# ---------------------------------------------------------------------------
# QSeries: Laurent series in q, exact on [floor, ceiling)


class QSeries:
    """One q-coefficient of a bivariate series.

    coeffs[i] is the coefficient of q^(floor + i); exponents below floor
    are exactly zero, exponents at or above ceiling are unknown.
    """

    __slots__ = ("floor", "ceiling", "coeffs")

    def __init__(self, floor: int, coeffs, ceiling=EXACT):
        if coeffs and ceiling != EXACT and floor + len(coeffs) > ceiling:
            coeffs = coeffs[: int(ceiling) - floor]
        i = 0
        n = len(coeffs)
        while i < n and not coeffs[i]:
            i += 1
        j = n
        while j > i and not coeffs[j - 1]:
            j -= 1
        self.coeffs = list(coeffs[i:j])
        self.floor = floor + i if self.coeffs else min(floor, ceiling)
        self.ceiling = ceiling

    @classmethod
    def zero(cls, ceiling=EXACT) -> "QSeries":
        return cls(0, [], ceiling)

    @classmethod
    def unknown(cls) -> "QSeries":
        """A value with an empty exactness window (nothing may be read)."""
        return cls(0, [], float("-inf"))

    @classmethod
    def from_poly(cls, p: LaurentPoly, ceiling=EXACT) -> "QSeries":
        lo, dense = p.to_dense()
        return cls(lo, dense, ceiling)

    def is_known_zero(self) -> bool:
        return not self.coeffs

    def known(self, e: int) -> bool:
        return e < self.ceiling

    def coeff(self, e: int) -> int:
        if not e < self.ceiling:
            raise ExactnessError(f"beyond ceiling: q^{e} (ceiling {self.ceiling})")
        i = e - self.floor
        if i < 0 or i >= len(self.coeffs):
            return 0
        return self.coeffs[i]

    def terms(self) -> dict[int, int]:
        """Map view of the known nonzero terms."""
        return {
            self.floor + i: c for i, c in enumerate(self.coeffs) if c
        }

    def max_known_exp(self):
        """Top exponent of the stored support, or None."""
        return self.floor + len(self.coeffs) - 1 if self.coeffs else None

    # -- arithmetic -------------------------------------------------------

    def add(self, other: "QSeries") -> "QSeries":
        ceiling = min(self.ceiling, other.ceiling)
        if self.is_known_zero():
            return QSeries(other.floor, other.coeffs, ceiling)
        if other.is_known_zero():
            return QSeries(self.floor, self.coeffs, ceiling)
        floor = min(self.floor, other.floor)
        out = [0] * (
            max(
                self.floor + len(self.coeffs),
                other.floor + len(other.coeffs),
            )
            - floor
        )
        kernels.acc_scaled(out, self.coeffs, self.floor - floor, 1)
        kernels.acc_scaled(out, other.coeffs, other.floor - floor, 1)
        return QSeries(floor, out, ceiling)

    def neg(self) -> "QSeries":
        return QSeries(self.floor, [-c for c in self.coeffs], self.ceiling)

    def sub(self, other: "QSeries") -> "QSeries":
        return self.add(other.neg())

    def scale(self, c: int) -> "QSeries":
        if c == 1:
            return self
        if c == 0:
            return QSeries(0, [], self.ceiling)
        return QSeries(self.floor, [c * v for v in self.coeffs], self.ceiling)

    def shift(self, k: int) -> "QSeries":
        if k == 0:
            return self
        return QSeries(self.floor + k, self.coeffs, self.ceiling + k)

    def add_scaled_shift(self, other: "QSeries", c: int, k: int) -> "QSeries":
        """self + c * q^k * other (the inner step of every factor recurrence)."""
        return self.add(other.shift(k).scale(c))

    def mul(self, other: "QSeries") -> "QSeries":
        if (self.is_known_zero() and self.ceiling == EXACT) or (
            other.is_known_zero() and other.ceiling == EXACT
        ):
            return QSeries(0, [], EXACT)
        # A known-zero factor contributes no support below its own ceiling.
        fa = self.floor if self.coeffs else self.ceiling
        fb = other.floor if other.coeffs else other.ceiling
        ceiling = min(fa + other.ceiling, fb + self.ceiling)
        if not self.coeffs or not other.coeffs:
            return QSeries(0, [], ceiling)
        return QSeries(
            fa + fb,
            kernels.mul_dense(self.coeffs, other.coeffs),
            ceiling,
        )

    def mul_poly(self, p: LaurentPoly) -> "QSeries":
        return self.mul(QSeries.from_poly(p))

    def div_one_minus(self, scale: int, step: int, q_ceiling) -> "QSeries":
        """self / (1 - scale*q^step) with step >= 1, truncated at q_ceiling."""
        if step < 1:
            raise ValueError("pure-q geometric ratio must have positive exponent")
        ceiling = min(self.ceiling, q_ceiling)
        if ceiling == EXACT:
            raise ExactnessError("infinite geometric q-series needs a finite ceiling")
        if self.is_known_zero():
            return QSeries(0, [], ceiling)
        out_len = int(ceiling) - self.floor
        if out_len <= 0:
            return QSeries(0, [], ceiling)
        out = kernels.series_div_binomial(self.coeffs, step, scale, out_len)
        return QSeries(self.floor, out, ceiling)

    def negative_part(self) -> LaurentPoly:
        """The (always exact) part supported on exponents < 0."""
        if self.ceiling < 0:
            raise ExactnessError(
                "negative part reaches the ceiling: series unbounded knowledge below 0"
            )
        stop = min(len(self.coeffs), -self.floor)
        if self.floor >= 0 or stop <= 0:
            return LaurentPoly(0)
        return LaurentPoly.from_dense(self.floor, self.coeffs[:stop])

    def to_poly(self) -> LaurentPoly:
        if self.ceiling != EXACT:
            raise ExactnessError("value is ceiling-truncated, not a polynomial")
        return LaurentPoly.from_dense(self.floor, self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, QSeries)
            and self.floor == other.floor
            and self.ceiling == other.ceiling
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"QSeries(floor={self.floor}, ceiling={self.ceiling}, terms={self.terms()!r})"


# ---------------------------------------------------------------------------
# XSeries: power series in x with QSeries coefficients


class XSeries:
    """Power series in x truncated at a fixed order, coefficients QSeries."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[QSeries]):
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int, ceiling=EXACT) -> "XSeries":
        return cls([QSeries.zero(ceiling) for _ in range(order + 1)])

    @classmethod
    def from_monomials(cls, monomials, order: int) -> "XSeries":
        """Exact polynomial given as (coeff, x-exp, q-exp) triples."""
        buckets: dict[int, dict[int, int]] = {}
        for c, xe, qe in monomials:
            if xe < 0:
                raise ValueError("x-exponents must be nonnegative")
            if xe <= order:
                d = buckets.setdefault(xe, {})
                d[qe] = d.get(qe, 0) + c
        out = []
        for n in range(order + 1):
            d = buckets.get(n)
            out.append(
                QSeries.from_poly(LaurentPoly(d)) if d else QSeries.zero()
            )
        return cls(out)

    def coeff(self, n: int) -> QSeries:
        return self.coeffs[n]

    def add(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        return XSeries(
            [self.coeffs[n].add(other.coeffs[n]) for n in range(order + 1)]
        )

    def sub(self, other: "XSeries") -> "XSeries":
        return self.add(other.neg())

    def neg(self) -> "XSeries":
        return XSeries([c.neg() for c in self.coeffs])

    def scale(self, c: int) -> "XSeries":
        return XSeries([s.scale(c) for s in self.coeffs])

    def shift_q(self, k: int) -> "XSeries":
        return XSeries([s.shift(k) for s in self.coeffs])

    def mul_qpoly(self, p: LaurentPoly) -> "XSeries":
        """Coefficientwise multiplication by an exact Laurent polynomial."""
        return XSeries([s.mul_poly(p) for s in self.coeffs])

    def shift_x(self, k: int) -> "XSeries":
        """Multiply by x^k (k may be negative if the low part is known zero)."""
        if k == 0:
            return self
        if k > 0:
            pad = [QSeries.zero() for _ in range(min(k, self.order + 1))]
            return XSeries((pad + self.coeffs)[: self.order + 1])
        for n in range(min(-k, self.order + 1)):
            if not self.coeffs[n].is_known_zero():
                raise ValueError(
                    f"x^{k} shift would create a pole: x^{n} coefficient is nonzero"
                )
        return XSeries(self.coeffs[-k:])

    def mul_one_minus_mono(self, mono: Monomial) -> "XSeries":
        """Multiply by (1 - c x^a q^b); exact, used for numerator recovery."""
        c, a, b = mono
        out = []
        for n in range(self.order + 1):
            s = self.coeffs[n]
            if a == 0:
                out.append(s.add_scaled_shift(s, -c, b))
            elif n >= a:
                out.append(s.add_scaled_shift(self.coeffs[n - a], -c, b))
            else:
                out.append(s)
        return XSeries(out)

    def __repr__(self):
        return f"XSeries(order={self.order})"


# ---------------------------------------------------------------------------
# Closed forms and their working-field expansion


@dataclass(frozen=True)
class ClosedForm:
    """Numerator over a product of two-monomial binomial factors (A - B)."""

    numerator: tuple[Monomial, ...]
    factors: tuple[tuple[Monomial, Monomial], ...]
    name: str = ""

    def __post_init__(self):
        for a, b in self.factors:
            if a[1:] == b[1:] and a[0] == b[0]:
                raise ValueError(f"{self.name}: denominator factor A - B with A == B")


def monomial_dominates(a: Monomial, b: Monomial) -> bool:
    """True when a is the asymptotically larger monomial as 0 < x << q << 1.

    Smaller x-exponent wins; ties fall to the smaller q-exponent.
    Coefficients never matter; equal exponent vectors are incomparable.
    """
    if a[1:] == b[1:]:
        raise ValueError(f"incomparable monomials: {a} vs {b}")
    if a[1] != b[1]:
        return a[1] < b[1]
    return a[2] < b[2]


def expand_closed_form(cf: ClosedForm, x_order: int, q_ceiling) -> XSeries:
    """The unique working-field expansion, truncated at x_order / q_ceiling.

    Each factor (A - B) with A dominant contributes A^-1 sum_k (B/A)^k,
    realized as an in-place geometric recurrence; pure-q ratios introduce
    the finite ceiling, x-carrying ratios are exact.
    """
    series = XSeries.from_monomials(cf.numerator, x_order)
    sign = 1
    x_shift = 0
    q_shift = 0
    ratios: list[Monomial] = []
    for a, b in cf.factors:
        if not monomial_dominates(a, b):
            a, b = b, a
            sign = -sign
        ca, xa, qa = a
        if ca not in (1, -1):
            raise ValueError(
                f"{cf.name or 'closed form'}: dominant coefficient {ca} is not a unit"
            )
        sign *= ca
        x_shift -= xa
        q_shift -= qa
        ratios.append((b[0] * ca, b[1] - xa, b[2] - qa))
    # Pure-q ratios first: they set ceilings while coefficients are narrow.
    ratios.sort(key=lambda r: (r[1] != 0,))
    coeffs = list(series.coeffs)
    for rc, rx, rq in ratios:
        if rx == 0:
            coeffs = [s.div_one_minus(rc, rq, q_ceiling) for s in coeffs]
        else:
            for n in range(rx, len(coeffs)):
                coeffs[n] = coeffs[n].add_scaled_shift(coeffs[n - rx], rc, rq)
    out = XSeries(coeffs)
    if sign != 1:
        out = out.scale(sign)
    if q_shift:
        out = out.shift_q(q_shift)
    if x_shift:
        out = out.shift_x(x_shift)
    return out


# ---------------------------------------------------------------------------
# The m-indexed generating functions


def _f_product_form(m: int) -> ClosedForm:
    # (q^2 - q^-2)(q - q^-1) / ((q^m - q^-m) prod_i (1 - x q^(1-m+2i)))
    numerator = ((1, 0, 3), (-1, 0, 1), (-1, 0, -1), (1, 0, -3))
    factors = [((1, 0, m), (1, 0, -m))]
    for i in range(m):
        factors.append(((1, 0, 0), (1, 1, 1 - m + 2 * i)))
    return ClosedForm(numerator, tuple(factors), name=f"product form m={m}")


def f_product(m: int, x_order: int, q_ceiling=None) -> XSeries:
    """Expansion of the product formula for the m-th generating function."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if q_ceiling is None:
        q_ceiling = default_q_ceiling(m, x_order)
    return expand_closed_form(_f_product_form(m), x_order, q_ceiling)


def f_direct(m: int, x_order: int, q_ceiling=None) -> XSeries:
    """Coefficientwise build: x^n carries (q^2 - q^-2) * centered C_{m,n}.

    For coprime (m, n) the coefficient is an exact Laurent polynomial; for
    gcd d > 1 it is the positive-q-power expansion of the cbar-based
    quotient, truncated at the ceiling. The x^0 slot is deliberately left
    with an empty exactness window (the n = 0 term is owned by the product
    formula); compare from x^1 on.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if q_ceiling is None:
        q_ceiling = default_q_ceiling(m, x_order)
    coeffs = [QSeries.unknown()]
    for n in range(1, x_order + 1):
        d, cb = _cbar_dense(m, n)
        deg = (m - 1) * (n - 1)
        spread = [0] * (2 * (len(cb) - 1) + 1)
        for i, c in enumerate(cb):
            spread[2 * i] = c
        # (q^2 - q^-2) * cbar(q^2) * q^(-deg), all exact
        num = QSeries(-deg - 2, spread).add(QSeries(-deg + 2, spread).neg()).neg()
        if d == 1:
            coeffs.append(num)
        else:
            # divide by [d](q^2) = (1 - q^(2d)) / (1 - q^2)
            num = num.add_scaled_shift(num, -1, 2)
            coeffs.append(num.div_one_minus(1, 2 * d, q_ceiling))
    return XSeries(coeffs)


def pt_prime(s: XSeries) -> XSeries:
    """Positive-part operator for series bounded below in q.

    Coefficientwise: take the exact negative-exponent part, substitute
    q -> 1/q, negate. The output is exact (infinite ceiling) and supported
    on strictly positive q-exponents.
    """
    out = []
    for qs in s.coeffs:
        neg = qs.negative_part()
        out.append(
            QSeries.from_poly(
                LaurentPoly({-e: -c for e, c in neg.terms_dict().items()})
            )
        )
    return XSeries(out)


def x_section(m: int, r: int, s: XSeries) -> XSeries:
    """Keep x-exponents congruent to r mod m and reindex them to 0, 1, ..."""
    if not 0 <= r < m:
        raise ValueError("need 0 <= r < m")
    if r > s.order:
        raise ValueError(f"series order {s.order} has no x^{r} term to section")
    picked = [s.coeffs[k * m + r] for k in range((s.order - r) // m + 1)]
    return XSeries(picked)


def h_series(m: int, d: int, x_order: int, q_ceiling=None) -> XSeries:
    """pt_prime of (q^(d-1) + q^(d-3) + ... + q^(1-d)) times the product form.

    d must divide m; d = gcd(m, r) in the conjecture checks.
    """
    if d < 1 or m % d:
        raise ValueError("d must be a positive divisor of m")
    base = f_product(m, x_order, q_ceiling)
    if d > 1:
        prefactor = LaurentPoly({1 - d + 2 * i: 1 for i in range(d)})
        base = base.mul_qpoly(prefactor)
    return pt_prime(base)


def q_slice(s: XSeries, i: int) -> LaurentPoly:
    """The q^i coefficient across all x-orders, as a polynomial in x."""
    out = {}
    for n, qs in enumerate(s.coeffs):
        c = qs.coeff(i)  # raises ExactnessError beyond the ceiling
        if c:
            out[n] = c
    return LaurentPoly(out)


def series_equal(
    a: XSeries,
    b: XSeries,
    x_order: int,
    q_window: tuple[int, int],
    x_start: int = 0,
):
    """Compare on x-exponents x_start..x_order and q-exponents lo..hi.

    Both inputs must be exact on the window (ExactnessError otherwise).
    Returns (True, None) or (False, (x_exp, q_exp, value_a, value_b)).
    """
    lo, hi = q_window
    if x_order > min(a.order, b.order):
        raise ExactnessError(
            f"window exceeds exactness: x-order {x_order} beyond "
            f"{min(a.order, b.order)}"
        )
    for n in range(x_start, x_order + 1):
        ca, cb = a.coeffs[n], b.coeffs[n]
        for qs in (ca, cb):
            if hi >= qs.ceiling:
                raise ExactnessError(
                    f"window exceeds exactness: q^{hi} at x^{n} "
                    f"(ceiling {qs.ceiling})"
                )
        start = max(lo, min(ca.floor, cb.floor))
        stop = min(
            hi,
            max(
                ca.floor + len(ca.coeffs) - 1,
                cb.floor + len(cb.coeffs) - 1,
            ),
        )
        for e in range(start, stop + 1):
            va = ca.coeff(e)
            vb = cb.coeff(e)
            if va != vb:
                return False, (n, e, va, vb)
    return True, None


def nonneg_check(s: XSeries, x_order: int):
    """Scan every known coefficient up to x_order for a negative entry.

    Returns (True, None) or (False, (x_exp, q_exp)).
    """
    for n in range(min(x_order, s.order) + 1):
        qs = s.coeffs[n]
        i = kernels.first_negative(qs.coeffs)
        if i >= 0:
            return False, (n, qs.floor + i)
    return True, None
