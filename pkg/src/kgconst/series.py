"""The alternating quarter-integer series, its inner tails, the Fourier
coefficients of 1/cos(x/4), and the double series

    sum_{n>=1} [ sum_{k>n} (-1)^k (1/(4k-1) - 1/(4k-3)) ]^2
        = pi/16 - ln^2(1+sqrt(2))/4.

Sign conventions
----------------
The inner term t_k = (-1)^k (1/(4k-1) - 1/(4k-3)) satisfies
S_n = sum_{k<=n} t_k and T_n = S - S_n = sum_{k>n} t_k, so T_1 < 0 and
sign(T_n) = sign(t_{n+1}).  The Fourier coefficients are
a_0 = (8/pi) L and a_n = (8 sqrt(2)/pi) T_n for n >= 1.

Outer-tail evaluation
---------------------
|T_n| <= |t_{n+1}| = 2/((4n+1)(4n+3)), so T_n^2 <= 4/(4n+1)^4 and the outer
tail beyond N is bounded by 1/(3 (4N+1)^3) (integral comparison).  Pure
truncation therefore needs
~10^9 terms for 30-digit tolerances; by default the tail beyond a fixed
explicit range is evaluated with an Euler-Maclaurin correction built on the
exact digamma representation

    |T_n| = I(n) = (1/8) [ psi((n+5/4)/2) - psi((n+1/4)/2)
                         - psi((n+7/4)/2) + psi((n+3/4)/2) ],

which extends T_n^2 = I(n)^2 to a smooth, completely monotone function of n.
Set ``accelerate=False`` to force pure truncation (raises MaxTermsExceeded
when the required N exceeds the cap).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp, mpf

from .core import BigReal, PrecisionContext
from .errors import DomainError, MaxTermsExceeded, NoConvergence
from . import quadrature

MAX_OUTER_TERMS = 10_000_000
# pure truncation is used whenever it needs at most this many outer terms
EM_SWITCH_TERMS = 20_000
# explicit outer terms ahead of the Euler-Maclaurin tail
EM_EXPLICIT_TERMS = 1_000
EM_MAX_CORRECTIONS = 16


@dataclass(frozen=True)
class SeriesResult:
    value: BigReal
    terms_used: int
    tail_bound: BigReal
    converged: bool


@dataclass(frozen=True)
class FourierCoefficient:
    n: int
    value: BigReal


def inner_term(k: int, ctx: PrecisionContext) -> BigReal:
    """t_k = (-1)^k (1/(4k-1) - 1/(4k-3)), the k-th inner series term."""
    if k < 1:
        raise DomainError(f"inner term index starts at 1, got {k}")
    with ctx.workprec():
        sign = 1 if k % 2 == 0 else -1
        return sign * (mpf(1) / (4 * k - 1) - mpf(1) / (4 * k - 3))


def inner_term_magnitude(k: int, ctx: PrecisionContext) -> BigReal:
    """|t_k| = 2/((4k-3)(4k-1))."""
    if k < 1:
        raise DomainError(f"inner term index starts at 1, got {k}")
    with ctx.workprec():
        return mpf(2) / ((4 * k - 3) * (4 * k - 1))


def partial_sum_S(n: int, ctx: PrecisionContext) -> BigReal:
    """S_n = sum_{k=1}^{n} (-1)^{k-1} (1/(4k-3) - 1/(4k-1)); S_0 = 0.

    Summed in ascending k with exact (error-free) accumulation.
    """
    if n < 0:
        raise DomainError(f"partial sum index must be >= 0, got {n}")
    with ctx.workprec():
        if n == 0:
            return mpf(0)
        return mp.fsum(inner_term(k, ctx) for k in range(1, n + 1))


def limit_S(ctx: PrecisionContext) -> BigReal:
    """S = lim S_n = (sqrt(2)/2) ln(1 + sqrt(2))."""
    with ctx.workprec():
        return mp.sqrt(2) / 2 * mp.log(1 + mp.sqrt(2))


def inner_tail(n: int, ctx: PrecisionContext, *, method: str = "closed",
               max_terms: int = MAX_OUTER_TERMS) -> SeriesResult:
    """T_n = sum_{k>n} t_k = S - S_n.

    method="closed" evaluates the difference of the closed-form limit and the
    partial sum (tail bound 0 at working precision).  method="direct" sums
    the tail term by term until the alternating remainder bound drops below
    ctx.tolerance; it exists as an independent cross-check route.
    """
    if n < 0:
        raise DomainError(f"tail index must be >= 0, got {n}")
    with ctx.workprec():
        if method == "closed":
            value = limit_S(ctx) - partial_sum_S(n, ctx)
            return SeriesResult(value=value, terms_used=max(n, 1),
                                tail_bound=mpf(0), converged=True)
        if method == "direct":
            tol = ctx.tolerance
            acc = mpf(0)
            k = n + 1
            used = 0
            while True:
                acc += inner_term(k, ctx)
                used += 1
                bound = inner_term_magnitude(k + 1, ctx)
                if bound < tol:
                    return SeriesResult(value=acc, terms_used=used,
                                        tail_bound=bound, converged=True)
                if used >= max_terms:
                    raise MaxTermsExceeded(
                        f"direct tail for n={n} needs more than {max_terms} terms "
                        f"to reach tolerance {tol}"
                    )
                k += 1
        raise DomainError(f"unknown inner_tail method {method!r}")


def smooth_tail_magnitude(n, ctx: PrecisionContext) -> BigReal:
    """I(n) = |T_n| as a smooth function of (real) n, via digamma values."""
    with ctx.workprec():
        n = mpf(n)
        a1 = n + mpf(1) / 4
        a2 = n + mpf(3) / 4
        return (mp.psi(0, (a1 + 1) / 2) - mp.psi(0, a1 / 2)
                - mp.psi(0, (a2 + 1) / 2) + mp.psi(0, a2 / 2)) / 8


def _smooth_tail_derivative(n, order: int) -> mpf:
    """order-th derivative of I at n (order 0 gives I itself)."""
    n = mpf(n)
    a1 = n + mpf(1) / 4
    a2 = n + mpf(3) / 4
    scale = mpf(2) ** (-order) / 8
    return scale * (mp.psi(order, (a1 + 1) / 2) - mp.psi(order, a1 / 2)
                    - mp.psi(order, (a2 + 1) / 2) + mp.psi(order, a2 / 2))


def fourier_a(n: int, ctx: PrecisionContext) -> FourierCoefficient:
    """Fourier cosine coefficient a_n of 1/cos(x/4) on [-pi, pi].

    a_0 = (8/pi) ln(1+sqrt(2)); a_n = (8 sqrt(2)/pi) T_n for n >= 1.
    """
    if n < 0:
        raise DomainError(f"coefficient index must be >= 0, got {n}")
    with ctx.workprec():
        if n == 0:
            value = 8 / mp.pi * mp.log(1 + mp.sqrt(2))
        else:
            value = 8 * mp.sqrt(2) / mp.pi * inner_tail(n, ctx).value
        return FourierCoefficient(n=n, value=value)


def fourier_a_quadrature(n: int, ctx: PrecisionContext) -> FourierCoefficient:
    """Independent route: a_n = (8/pi) * integral of cos(4nt)/cos(t) over (0, pi/4)."""
    if n < 0:
        raise DomainError(f"coefficient index must be >= 0, got {n}")
    with ctx.workprec():
        quarter_pi = mp.pi / 4
        res = quadrature.integrate(lambda t: mp.cos(4 * n * t) / mp.cos(t),
                                   mpf(0), quarter_pi, ctx)
        return FourierCoefficient(n=n, value=8 / mp.pi * res.value)


def recurrence_check(n: int, ctx: PrecisionContext) -> BigReal:
    """|a_n - a_{n-1} - (8 sqrt(2)/pi)(-1)^n (1/(4n-3) - 1/(4n-1))|.

    The relation is algebraically exact, so the residual must stay below
    ctx.tolerance for every n >= 1.
    """
    if n < 1:
        raise DomainError(f"recurrence index must be >= 1, got {n}")
    with ctx.workprec():
        sign = 1 if n % 2 == 0 else -1
        expected = 8 * mp.sqrt(2) / mp.pi * sign * (mpf(1) / (4 * n - 3) - mpf(1) / (4 * n - 1))
        return abs(fourier_a(n, ctx).value - fourier_a(n - 1, ctx).value - expected)


def outer_tail_bound(N: int, ctx: PrecisionContext) -> BigReal:
    """Rigorous truncation bound sum_{n>N} T_n^2 <= 1/(3 (4N+1)^3)."""
    with ctx.workprec():
        return mpf(1) / (3 * (4 * N + 1) ** 3)


def _pure_truncation_N(tol: mpf) -> int:
    """Smallest N with 1/(3 (4N+1)^3) < tol."""
    N = int(mp.ceil(((1 / (3 * tol)) ** (mpf(1) / 3) - 1) / 4))
    N = max(N, 1)
    while mpf(1) / (3 * (4 * N + 1) ** 3) >= tol:
        N += 1
    while N > 1 and mpf(1) / (3 * (4 * (N - 1) + 1) ** 3) < tol:
        N -= 1
    return N


def double_series_partial(N: int, ctx: PrecisionContext) -> BigReal:
    """Brute-force partial sum sum_{n=1}^{N} T_n^2 with closed-route tails.

    The independent cross-check route for double_series: ascending n with
    compensated accumulation, each T_n updated incrementally from T_{n-1}.
    """
    if N < 1:
        raise DomainError(f"partial sum length must be >= 1, got {N}")
    with ctx.workprec():
        tail = limit_S(ctx)  # T_0 = S
        acc = mpf(0)
        comp = mpf(0)
        for n in range(1, N + 1):
            sign = 1 if n % 2 == 0 else -1
            tail -= sign * (mpf(1) / (4 * n - 1) - mpf(1) / (4 * n - 3))
            term = tail * tail
            y = term - comp  # Kahan step
            t = acc + y
            comp = (t - acc) - y
            acc = t
        return acc


def _euler_maclaurin_tail(start: int, tol: mpf, ctx: PrecisionContext):
    """sum_{n>=start} I(n)^2 via Euler-Maclaurin, with an error bound.

    I^2 is completely monotone, so the remainder after each Bernoulli
    correction is bounded by the first omitted correction term.
    Returns (tail_value, tail_bound).
    """
    a = mpf(start)
    quad_tol = tol / 1000

    def integrand(u):
        return smooth_tail_magnitude(1 / u, ctx) ** 2 / u ** 2

    # integral of I(n)^2 over (start, inf) via n = 1/u
    quad_res = quadrature.integrate(integrand, mpf(0), 1 / a, ctx, tolerance=quad_tol)
    tail = quad_res.value

    # derivatives of f = I^2 at a, by Leibniz over the digamma derivatives
    max_order = 2 * EM_MAX_CORRECTIONS
    ideriv = [_smooth_tail_derivative(a, k) for k in range(max_order)]

    def f_derivative(m):
        return mp.fsum(mp.binomial(m, j) * ideriv[j] * ideriv[m - j] for j in range(m + 1))

    tail += ideriv[0] ** 2 / 2
    threshold = tol / 1000
    bound = None
    for j in range(1, EM_MAX_CORRECTIONS):
        term = mp.bernoulli(2 * j) / mp.factorial(2 * j) * f_derivative(2 * j - 1)
        tail -= term
        if abs(term) < threshold:
            bound = 10 * abs(term) + quad_res.error_estimate
            break
    if bound is None:
        raise NoConvergence(
            f"Euler-Maclaurin tail corrections did not reach {threshold} "
            f"within {EM_MAX_CORRECTIONS} orders"
        )
    return tail, bound


@lru_cache(maxsize=None)
def double_series(ctx: PrecisionContext, *, max_terms: int = MAX_OUTER_TERMS,
                  accelerate: bool = True) -> SeriesResult:
    """V = sum_{n>=1} T_n^2, the double-series value (= pi/16 - L^2/4)."""
    with ctx.workprec():
        tol = ctx.tolerance
        N_pure = _pure_truncation_N(tol)
        if not accelerate or N_pure <= EM_SWITCH_TERMS:
            if N_pure > max_terms:
                raise MaxTermsExceeded(
                    f"pure truncation needs {N_pure} outer terms for tolerance "
                    f"{tol}, cap is {max_terms}"
                )
            value = double_series_partial(N_pure, ctx)
            bound = outer_tail_bound(N_pure, ctx)
            return SeriesResult(value=value, terms_used=N_pure,
                                tail_bound=bound, converged=bool(bound < tol))
        N0 = EM_EXPLICIT_TERMS
        explicit = double_series_partial(N0, ctx)
        tail, bound = _euler_maclaurin_tail(N0 + 1, tol, ctx)
        return SeriesResult(value=explicit + tail, terms_used=N0,
                            tail_bound=bound, converged=bool(bound < tol))


def parseval_closure(ctx: PrecisionContext, *, max_terms: int = MAX_OUTER_TERMS) -> SeriesResult:
    """a_0^2/2 + sum_{n>=1} a_n^2, which must equal 8/pi.

    Uses the same outer truncation discipline as double_series via the exact
    substitution a_n = (8 sqrt(2)/pi) T_n.
    """
    with ctx.workprec():
        ds = double_series(ctx, max_terms=max_terms)
        a0 = fourier_a(0, ctx).value
        scale = 128 / mp.pi ** 2
        return SeriesResult(value=a0 ** 2 / 2 + scale * ds.value,
                            terms_used=ds.terms_used,
                            tail_bound=scale * ds.tail_bound,
                            converged=ds.converged)
