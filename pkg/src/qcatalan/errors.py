"""Exception types shared across the toolkit."""


class InexactDivisionError(ArithmeticError):
    """No exact Laurent-polynomial quotient exists.

    This is a meaningful outcome, not just a guard: it is what detects the
    non-polynomiality of the rational q-Catalan quotient for non-coprime
    pairs.
    """


class NonCoprimeError(ValueError):
    """A coprime (m, n) pair was required; use the cbar variant instead."""


class ExactnessError(ValueError):
    """A truncated-series query reached beyond the guaranteed-exact region."""
