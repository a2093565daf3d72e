"""Complete elliptic integrals K and E via the arithmetic-geometric mean,
their imaginary-modulus values K(i) and E(i), Haagerup's bound
1/(2K(i) - E(i)), and the bracketed root solve for the complex-case
Krivine equation

    pi (x+1) / 8 = (1/x) [ E(x) - (1 - x^2) K(x) ].

All operations use the modulus k (not the parameter m = k^2).  The defining
integrals, evaluated with the quadrature module, serve as independent
cross-checks of every AGM-based value.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf

from .core import BigReal, PrecisionContext
from .errors import BracketFailure, DomainError, NoConvergence
from . import quadrature

# below this distance from k = 1, E falls back to the defining integral to
# avoid cancellation in the AGM companion sequence
E_QUADRATURE_WINDOW = mpf("1e-5")

ROOT_BRACKET = (mpf("0.01"), mpf("0.99"))


@dataclass(frozen=True)
class EllipticPair:
    k: BigReal
    K_val: BigReal
    E_val: BigReal
    imaginary_modulus: bool = False


@dataclass(frozen=True)
class RootResult:
    x0: BigReal
    residual: BigReal
    iterations: int
    bracket: tuple


def _agm(a, b):
    while abs(a - b) > abs(a) * mpf(10) ** (-(mp.dps - 2)):
        a, b = (a + b) / 2, mp.sqrt(a * b)
    return (a + b) / 2


def ellip_K(k, ctx: PrecisionContext) -> BigReal:
    """K(k) = integral of 1/sqrt(1 - k^2 sin^2(t)) over (0, pi/2), via the AGM."""
    with ctx.workprec():
        k = mpf(k)
        if not (0 <= k < 1):
            raise DomainError(f"ellip_K requires 0 <= k < 1, got {k}")
        return mp.pi / (2 * _agm(mpf(1), mp.sqrt(1 - k * k)))


def ellip_E(k, ctx: PrecisionContext) -> BigReal:
    """E(k) = integral of sqrt(1 - k^2 sin^2(t)) over (0, pi/2).

    AGM companion iteration E = K (1 - sum 2^{n-1} c_n^2); near k = 1 the
    companion sequence cancels, so the defining integral is used instead.
    E(1) = 1 exactly.
    """
    with ctx.workprec():
        k = mpf(k)
        if not (0 <= k <= 1):
            raise DomainError(f"ellip_E requires 0 <= k <= 1, got {k}")
        if k == 1:
            return mpf(1)
        if 1 - k < E_QUADRATURE_WINDOW:
            return ellip_E_quadrature(k, ctx)
        a, b, c = mpf(1), mp.sqrt(1 - k * k), k
        csum = c * c / 2
        power = mpf(1)
        eps = mpf(10) ** (-(mp.dps - 2))
        while abs(c) > eps:
            a, b, c = (a + b) / 2, mp.sqrt(a * b), (a - b) / 2
            csum += power * c * c
            power *= 2
        K = mp.pi / (2 * a)
        return K * (1 - csum)


def ellip_K_quadrature(k, ctx: PrecisionContext) -> BigReal:
    """Defining-integral route for K(k) (independent oracle)."""
    with ctx.workprec():
        k = mpf(k)
        half_pi = mp.pi / 2
        res = quadrature.integrate(lambda t: 1 / mp.sqrt(1 - (k * mp.sin(t)) ** 2),
                                   mpf(0), half_pi, ctx)
        return res.value


def ellip_E_quadrature(k, ctx: PrecisionContext) -> BigReal:
    """Defining-integral route for E(k) (independent oracle)."""
    with ctx.workprec():
        k = mpf(k)
        half_pi = mp.pi / 2
        res = quadrature.integrate(lambda t: mp.sqrt(1 - (k * mp.sin(t)) ** 2),
                                   mpf(0), half_pi, ctx)
        return res.value


def ellip_K_imag(ctx: PrecisionContext) -> BigReal:
    """K(i) = integral of 1/sqrt(1 + sin^2(t)) over (0, pi/2).

    Computed by the reciprocal-modulus reduction K(i) = K(1/sqrt(2))/sqrt(2).
    """
    with ctx.workprec():
        return ellip_K(1 / mp.sqrt(2), ctx) / mp.sqrt(2)


def ellip_E_imag(ctx: PrecisionContext) -> BigReal:
    """E(i) = integral of sqrt(1 + sin^2(t)) over (0, pi/2) = sqrt(2) E(1/sqrt(2))."""
    with ctx.workprec():
        return mp.sqrt(2) * ellip_E(1 / mp.sqrt(2), ctx)


def ellip_K_imag_quadrature(ctx: PrecisionContext) -> BigReal:
    with ctx.workprec():
        half_pi = mp.pi / 2
        return quadrature.integrate(lambda t: 1 / mp.sqrt(1 + mp.sin(t) ** 2),
                                    mpf(0), half_pi, ctx).value


def ellip_E_imag_quadrature(ctx: PrecisionContext) -> BigReal:
    with ctx.workprec():
        half_pi = mp.pi / 2
        return quadrature.integrate(lambda t: mp.sqrt(1 + mp.sin(t) ** 2),
                                    mpf(0), half_pi, ctx).value


def legendre_residual(k, ctx: PrecisionContext) -> BigReal:
    """|E(k)K(k') + E(k')K(k) - K(k)K(k') - pi/2| with k' = sqrt(1-k^2).

    The Legendre relation is an independent correctness certificate for the
    AGM implementation.
    """
    with ctx.workprec():
        k = mpf(k)
        kp = mp.sqrt(1 - k * k)
        K, Kp = ellip_K(k, ctx), ellip_K(kp, ctx)
        E, Ep = ellip_E(k, ctx), ellip_E(kp, ctx)
        return abs(E * Kp + Ep * K - K * Kp - mp.pi / 2)


def haagerup_bound(ctx: PrecisionContext) -> BigReal:
    """Haagerup's suggested complex upper limit 1/(2K(i) - E(i))."""
    with ctx.workprec():
        return 1 / (2 * ellip_K_imag(ctx) - ellip_E_imag(ctx))


def haagerup_bound_quadrature(ctx: PrecisionContext) -> BigReal:
    """Independent route: reciprocal of the integral of cos^2(t)/sqrt(1+sin^2(t))."""
    with ctx.workprec():
        half_pi = mp.pi / 2
        integral = quadrature.integrate(
            lambda t: mp.cos(t) ** 2 / mp.sqrt(1 + mp.sin(t) ** 2),
            mpf(0), half_pi, ctx).value
        return 1 / integral


def krivine_complex_f(x, ctx: PrecisionContext) -> BigReal:
    """f(x) = (1/x)[E(x) - (1-x^2)K(x)] - pi(x+1)/8, whose root is x0."""
    with ctx.workprec():
        x = mpf(x)
        if not (0 < x < 1):
            raise DomainError(f"krivine_complex_f requires 0 < x < 1, got {x}")
        return (ellip_E(x, ctx) - (1 - x * x) * ellip_K(x, ctx)) / x - mp.pi * (x + 1) / 8


def krivine_complex_middle(x, ctx: PrecisionContext) -> BigReal:
    """Middle expression x * integral of cos^2(t)/sqrt(1-x^2 sin^2(t)) (oracle)."""
    with ctx.workprec():
        x = mpf(x)
        if not (0 < x < 1):
            raise DomainError(f"middle expression requires 0 < x < 1, got {x}")
        half_pi = mp.pi / 2
        res = quadrature.integrate(
            lambda t: mp.cos(t) ** 2 / mp.sqrt(1 - (x * mp.sin(t)) ** 2),
            mpf(0), half_pi, ctx)
        return x * res.value


def _brent(f, a, b, fa, fb, xtol, max_iter):
    """Classic Brent root finder on a sign-changing bracket."""
    c, fc = a, fa
    d = e = b - a
    for it in range(1, max_iter + 1):
        if fb * fc > 0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2 * mp.eps * abs(b) + xtol / 2
        xm = (c - b) / 2
        if abs(xm) <= tol1 or fb == 0:
            return b, fb, it
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2 * xm * s
                q = 1 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2 * xm * q * (q - r) - (b - a) * (r - 1))
                q = (q - 1) * (r - 1) * (s - 1)
            if p > 0:
                q = -q
            p = abs(p)
            if 2 * p < min(3 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        else:
            b += tol1 if xm > 0 else -tol1
        fb = f(b)
    raise NoConvergence(f"Brent did not converge within {max_iter} iterations")


def solve_x0(ctx: PrecisionContext) -> RootResult:
    """Root of krivine_complex_f on the bracket (0.01, 0.99).

    Endpoint signs are verified before iterating; the solve is bracketed and
    derivative-free (Brent), with |f(x0)| < ctx.tolerance on success.
    """
    with ctx.workprec():
        lo, hi = ROOT_BRACKET
        f = lambda x: krivine_complex_f(x, ctx)
        flo, fhi = f(lo), f(hi)
        if not (flo * fhi < 0):
            raise BracketFailure(
                f"no sign change on ({lo}, {hi}): f(lo)={flo}, f(hi)={fhi}"
            )
        xtol = mpf(10) ** (-(mp.dps - 3))
        x0, fx0, iterations = _brent(f, lo, hi, flo, fhi, xtol, 20 * mp.dps)
        residual = abs(fx0)
        if residual >= ctx.tolerance:
            raise NoConvergence(
                f"root residual {residual} did not reach tolerance {ctx.tolerance}"
            )
        return RootResult(x0=x0, residual=residual, iterations=iterations,
                          bracket=(lo, hi))


def kc_upper(ctx: PrecisionContext) -> BigReal:
    """Krivine's complex-case upper limit 8 / (pi (x0 + 1))."""
    with ctx.workprec():
        return 8 / (mp.pi * (solve_x0(ctx).x0 + 1))
