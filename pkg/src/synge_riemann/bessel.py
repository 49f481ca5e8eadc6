"""Modified Bessel functions of the second kind K_0..K_3 and their ratios.

Self-contained evaluation: a compensated small-argument series below
gamma = 16 and the large-argument asymptotic expansion above, with K_2 and
K_3 produced through the upward recurrence K_{j+1} = 2j K_j / gamma + K_{j-1}
(stable for K, whose values grow with the order).  Certified relative error
is below 1e-12 on the window gamma in [1e-6, 1e4]; outside the window the
code still evaluates but emits :class:`AccuracyWindowWarning`.

`oracle_quadrature` is an independent adaptive-quadrature route used by the
test suite only; it must not share code with the main path.
"""

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

from ._ddcore import SERIES_SWITCH, k01  # noqa: F401  (SERIES_SWITCH re-exported for tests)
from .errors import AccuracyWindowWarning, ConvergenceError, DomainError

WINDOW = (1e-6, 1e4)
ORACLE_WINDOW = (1e-3, 500.0)

K0_OVER_K1 = "K0_over_K1"
K1_OVER_K2 = "K1_over_K2"


@dataclass(frozen=True)
class BesselEval:
    """One evaluation of K_j: unscaled value, e^gamma-scaled value, argument."""

    value: float
    scaled: float
    gamma: float


def _check_gamma(gamma):
    if not gamma > 0.0:
        raise DomainError(f"gamma must be positive, got {gamma!r}")
    if not WINDOW[0] <= gamma <= WINDOW[1]:
        warnings.warn(
            f"gamma={gamma!r} outside the documented accuracy window {WINDOW}",
            AccuracyWindowWarning,
            stacklevel=3,
        )


def _check_order(order):
    if order not in (0, 1, 2, 3):
        raise DomainError(f"order must be one of 0..3, got {order!r}")


@lru_cache(maxsize=4096)
def _k01_cached(gamma):
    return k01(gamma)


def _k_all_scaled(gamma):
    """(K0, K1, K2, K3) all scaled by e^gamma, via the upward recurrence."""
    _, k0s, _, k1s = _k01_cached(gamma)
    k2s = 2.0 * k1s / gamma + k0s
    k3s = 4.0 * k2s / gamma + k1s
    return k0s, k1s, k2s, k3s


def bessel_k(order, gamma):
    """K_order(gamma).  Underflows to 0 for gamma > ~705 (use the scaled form)."""
    _check_order(order)
    _check_gamma(gamma)
    k0, k0s, k1, k1s = _k01_cached(gamma)
    if order == 0:
        return k0
    if order == 1:
        return k1
    k2 = 2.0 * k1 / gamma + k0
    if order == 2:
        return k2
    return 4.0 * k2 / gamma + k1


def bessel_k_scaled(order, gamma):
    """e^gamma * K_order(gamma); finite over the whole window."""
    _check_order(order)
    _check_gamma(gamma)
    return _k_all_scaled(gamma)[order]


def evaluate(order, gamma):
    """Both forms of K_order(gamma) as a :class:`BesselEval`."""
    return BesselEval(bessel_k(order, gamma), bessel_k_scaled(order, gamma), gamma)


def ratio(kind, gamma):
    """Stable Bessel ratios in (0, 1).

    ``K0_over_K1`` is K0/K1; ``K1_over_K2`` is evaluated as
    K1 / (2 K1/gamma + K0) so both stay accurate where the unscaled values
    underflow.
    """
    _check_gamma(gamma)
    _, k0s, _, k1s = _k01_cached(gamma)
    if kind == K0_OVER_K1:
        return k0s / k1s
    if kind == K1_OVER_K2:
        return k1s / (2.0 * k1s / gamma + k0s)
    raise DomainError(f"unknown ratio kind {kind!r}")


def k0_over_k1(gamma):
    _check_gamma(gamma)
    _, k0s, _, k1s = _k01_cached(gamma)
    return k0s / k1s


def k1_over_k2(gamma):
    _check_gamma(gamma)
    _, k0s, _, k1s = _k01_cached(gamma)
    return k1s / (2.0 * k1s / gamma + k0s)


def asymptotic_coefficient(order, m):
    """Coefficient of gamma^-m in the large-gamma expansion of
    sqrt(2 gamma/pi) e^gamma K_order(gamma)."""
    if m == 0:
        return 1.0
    num = 1.0
    mu = 4.0 * order * order
    for i in range(1, m + 1):
        num *= mu - (2.0 * i - 1.0) ** 2
    return num / (math.factorial(m) * 8.0**m)


def asymptotic_remainder_bound(order, n, gamma):
    """Bound on the magnitude of the n-th remainder coefficient: the absolute
    error of the n-term truncation is at most this times gamma^-n."""
    return 2.0 * math.exp((order * order - 0.25) / gamma) * abs(asymptotic_coefficient(order, n))


def oracle_quadrature(order, gamma):
    """Independent evaluation of K_order by adaptive quadrature of

        K_j(gamma) = (2^j j!/(2j)!) gamma^-j
                     * integral_gamma^inf e^-t (t^2 - gamma^2)^(j-1/2) dt.

    The endpoint is regularized by t = gamma + u^2, which removes the
    integrable singularity (j = 0) and the square-root derivative kink
    (j >= 1).  Tests-only; target relative error 1e-13.
    """
    from scipy.integrate import quad

    _check_order(order)
    if not gamma > 0.0:
        raise DomainError(f"gamma must be positive, got {gamma!r}")
    if not ORACLE_WINDOW[0] <= gamma <= ORACLE_WINDOW[1]:
        warnings.warn(
            f"gamma={gamma!r} outside the oracle window {ORACLE_WINDOW}",
            AccuracyWindowWarning,
            stacklevel=2,
        )

    j = order
    prefac = (2.0**j) * math.factorial(j) / math.factorial(2 * j) / gamma**j
    a = max(1.0, gamma)  # split point t = gamma + a

    def near(u):
        # t = gamma + u^2: e^-t (t^2-g^2)^{j-1/2} dt = 2 e^{-g-u^2} u^{2j} (u^2+2g)^{j-1/2} du
        return 2.0 * math.exp(-gamma - u * u) * u ** (2 * j) * (u * u + 2.0 * gamma) ** (j - 0.5)

    def far(t):
        return math.exp(-t) * (t * t - gamma * gamma) ** (j - 0.5)

    i1, e1 = quad(near, 0.0, math.sqrt(a), epsabs=0.0, epsrel=1e-13, limit=300)
    i2, e2 = quad(far, gamma + a, math.inf, epsabs=0.0, epsrel=1e-13, limit=300)
    total = prefac * (i1 + i2)
    err = prefac * (e1 + e2)
    if not total > 0.0 or err > 5e-12 * total:
        raise ConvergenceError(
            f"oracle quadrature for K_{j}({gamma}) missed tolerance: value={total!r}, err={err!r}"
        )
    return total
