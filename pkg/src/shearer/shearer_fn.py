"""Shearer's occupancy function f and its derivative.

f is the continuous extension of x -> ((1-x) + x*ln(x)) / (x-1)^2 to
[0, inf), with f(0) = 1 and f(1) = 1/2. It is strictly decreasing, convex,
and satisfies x(x-1)f'(x) + (x+1)f(x) = 1 for x > 0. Near the removable
singularity at x = 1 the closed form cancels catastrophically, so the
implementation switches to the alternating series

    f(1+t) = sum_{j>=0} (-1)^j t^j / ((j+1)(j+2)),

obtained by substituting the Mercator-type expansion of (1+t)ln(1+t)
into the closed form.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

# Window around x = 1 where the series path is used. The closed form loses
# roughly 2*|log10|x-1|| digits inside it.
SERIES_WINDOW = 1e-3

_SERIES_CUTOFF = 1e-17


def _check_arg(x, allow_zero: bool) -> float:
    if isinstance(x, Fraction):
        x = float(x)
    if not isinstance(x, (int, float)):
        raise DomainError(f"expected a real number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    if x < 0 or (x == 0 and not allow_zero):
        raise DomainError(f"argument must be {'>= 0' if allow_zero else '> 0'}, got {x!r}")
    return x


def _series_f(t: float) -> float:
    # f(1+t), |t| <= 2*SERIES_WINDOW
    total = 0.0
    term = 0.5  # j = 0: 1/(1*2)
    power = 1.0
    j = 0
    while abs(term) >= _SERIES_CUTOFF:
        total += term
        j += 1
        power *= -t
        term = power / ((j + 1) * (j + 2))
    return total


def _series_f_prime(t: float) -> float:
    # f'(1+t) from term-wise differentiation, |t| <= 2*SERIES_WINDOW
    total = 0.0
    power = 1.0  # (-t)^(j-1) * sign bookkeeping folded in below
    j = 1
    term = -1.0 / 6.0  # j = 1: (-1)^1 * 1 / (2*3)
    while abs(term) >= _SERIES_CUTOFF:
        total += term
        j += 1
        power *= -t
        term = -power * j / ((j + 1) * (j + 2))
    return total


def _closed_form(x: float) -> float:
    return ((1.0 - x) + x * math.log(x)) / (x - 1.0) ** 2


def shearer_f(x) -> float:
    """Evaluate f(x) for x >= 0 to about 1e-12 relative accuracy.

    f(0) = 1 and f(1) = 0.5 are returned exactly.
    """
    x = _check_arg(x, allow_zero=True)
    if x == 0.0:
        return 1.0
    t = x - 1.0
    if abs(t) <= SERIES_WINDOW:
        return _series_f(t)
    return _closed_form(x)


def shearer_f_prime(x) -> float:
    """Evaluate f'(x) for x > 0 (negative everywhere).

    Uses the series derivative near x = 1 and the rearranged differential
    equation f'(x) = (1 - (x+1)f(x)) / (x(x-1)) elsewhere.
    """
    x = _check_arg(x, allow_zero=False)
    t = x - 1.0
    if abs(t) <= SERIES_WINDOW:
        return _series_f_prime(t)
    return (1.0 - (x + 1.0) * shearer_f(x)) / (x * t)


def _independent_derivative(x: float) -> float:
    # Derivative path that never consults the differential equation, so the
    # ODE residual check below is not circular: series near 1, central
    # finite differences elsewhere.
    t = x - 1.0
    if abs(t) <= SERIES_WINDOW:
        return _series_f_prime(t)
    h = 1e-5 * x
    # keep the stencil away from the domain boundary at 0
    h = min(h, 0.5 * x)
    return (shearer_f(x + h) - shearer_f(x - h)) / (2.0 * h)


def ode_residual(x) -> float:
    """Residual of x(x-1)f'(x) + (x+1)f(x) - 1 using a non-ODE derivative.

    Expected magnitude below 1e-8 across (0, inf); large values indicate an
    implementation bug in either evaluation path.
    """
    x = _check_arg(x, allow_zero=False)
    fp = _independent_derivative(x)
    return x * (x - 1.0) * fp + (x + 1.0) * shearer_f(x) - 1.0


def f_rational_floor(x, denominator: int = 10**12) -> Fraction:
    """A rational lower bound on f(x), on a grid of the given denominator.

    f is transcendental away from x = 0, so exact-arithmetic LP runs cannot
    use f itself as a target. This gives a certified slightly-smaller
    rational stand-in: the float evaluation is accurate to ~1e-12 relative,
    and we floor after subtracting a few ulps of margin.
    """
    if isinstance(x, Fraction) and x == 0:
        return Fraction(1)
    value = shearer_f(x)
    guarded = value - 4.0 * abs(value) * 1e-12 - 1e-15
    floor = Fraction(math.floor(guarded * denominator), denominator)
    return max(floor, Fraction(0))
