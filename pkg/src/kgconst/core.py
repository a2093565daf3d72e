"""Precision management and the fundamental constants pi, L = ln(1+sqrt(2)),
and the Grothendieck-Krivine constant K_G = pi / (2 L).

Every operation in the package takes a :class:`PrecisionContext` and performs
all intermediate arithmetic at ``digits + guard_digits`` decimal digits.  The
returned values are plain ``mpmath.mpf`` instances (aliased ``BigReal``) and
are immutable, so they are safe to share between tasks.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import InvalidPrecision

# BigReal is a semantic alias: an arbitrary-precision real scalar.
BigReal = mpf

MIN_DIGITS = 10
MIN_GUARD_DIGITS = 10


@dataclass(frozen=True)
class PrecisionContext:
    """Requested output precision plus the guard-digit and tolerance policy.

    ``tolerance`` defaults to 10**(-digits) and is the residual threshold
    used by every identity check and convergence test.
    """

    digits: int = 30
    guard_digits: int = MIN_GUARD_DIGITS
    tolerance: BigReal = None  # type: ignore[assignment]  # filled in __post_init__

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < MIN_DIGITS:
            raise InvalidPrecision(f"digits must be an integer >= {MIN_DIGITS}, got {self.digits}")
        if not isinstance(self.guard_digits, int) or self.guard_digits < MIN_GUARD_DIGITS:
            raise InvalidPrecision(
                f"guard_digits must be an integer >= {MIN_GUARD_DIGITS}, got {self.guard_digits}"
            )
        if self.tolerance is None:
            with mp.workdps(self.working_dps):
                object.__setattr__(self, "tolerance", mpf(10) ** (-self.digits))
        else:
            tol = mpf(self.tolerance)
            if not (tol > 0):
                raise InvalidPrecision("tolerance must be positive")
            object.__setattr__(self, "tolerance", tol)

    @property
    def working_dps(self) -> int:
        """Decimal digits used for all intermediate arithmetic."""
        return self.digits + self.guard_digits

    def workprec(self):
        """Context manager switching mpmath to this context's working precision."""
        return mp.workdps(self.working_dps)


def const_pi(ctx: PrecisionContext) -> BigReal:
    """pi, correct to ctx.digits significant digits."""
    with ctx.workprec():
        return +mp.pi


def const_sqrt2(ctx: PrecisionContext) -> BigReal:
    """sqrt(2) at working precision."""
    with ctx.workprec():
        return mp.sqrt(2)


def const_L(ctx: PrecisionContext) -> BigReal:
    """L = ln(1 + sqrt(2)), the value of the a0 coefficient integral up to 8/pi.

    Defining property: sinh(L) = 1, i.e. L = arcsinh(1).
    """
    with ctx.workprec():
        return mp.log(1 + mp.sqrt(2))


def const_KG(ctx: PrecisionContext) -> BigReal:
    """Grothendieck-Krivine constant K_G = pi / (2 ln(1 + sqrt(2)))."""
    with ctx.workprec():
        return mp.pi / (2 * mp.log(1 + mp.sqrt(2)))
