"""Reduced q-expansions of the Jacobi theta function and its z-derivatives.

With ``gamma = -2 cos(2 alpha)`` and ``q`` the nome,

    theta(z) = 2 q^(1/8) sum_{n>=0} (-1)^n q^(n(n+1)/2) sin((2n+1) z).

Differentiating ``k`` times in ``z`` and evaluating at ``z = alpha`` gives

    theta^(k)(alpha) = eps(k) * 2 q^(1/8) * trig(k) * reduced(k)

where ``reduced(k) = sum (-1)^n (2n+1)^k m_n q^(n(n+1)/2)`` and

    ====  ========  ==========  =========================================
    k%4   eps(k)    trig(k)     m_n
    ====  ========  ==========  =========================================
    0     +1        sin(alpha)  P_n = sin((2n+1)alpha) / sin(alpha)
    1     +1        cos(alpha)  Q_n = cos((2n+1)alpha) / cos(alpha)
    2     -1        sin(alpha)  P_n
    3     -1        cos(alpha)  Q_n
    ====  ========  ==========  =========================================

At ``z = 0`` only odd ``k`` survive, with ``m_n = 1`` and ``trig = 1``.
``P_n`` and ``Q_n`` are polynomials in ``gamma`` (see :func:`cheb_P`), so every
reduced series lives in Q[gamma][[q]] and the prefactors cancel in all the
ratios used by :mod:`sixvertex.genfun`.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .coeffring import GAMMA, QQ, GammaPoly, Ring, ring_of_value
from .errors import ParityMismatch
from .series import TruncSeries


class ThetaKind(Enum):
    S = "S"  # sine type: even derivative at alpha
    C = "C"  # cosine type: odd derivative at alpha
    Z = "Z"  # odd derivative at z = 0


# (sign, trig factor) relating theta^(k)(alpha) to the reduced series
PREFACTOR_TABLE = {
    0: (+1, "sin"),
    1: (+1, "cos"),
    2: (-1, "sin"),
    3: (-1, "cos"),
}


@lru_cache(maxsize=None)
def _cheb(n: int, first: GammaPoly) -> GammaPoly:
    if n == 0:
        return GammaPoly((1,))
    if n == 1:
        return first
    g = GammaPoly.gen()
    return -(g * _cheb(n - 1, first)) - _cheb(n - 2, first)


def cheb_P(n: int) -> GammaPoly:
    """``sin((2n+1) alpha) / sin(alpha)`` as a polynomial in gamma."""
    return _cheb(n, GammaPoly((1, -1)))


def cheb_Q(n: int) -> GammaPoly:
    """``cos((2n+1) alpha) / cos(alpha)`` as a polynomial in gamma."""
    return _cheb(n, GammaPoly((-1, -1)))


def reduced_theta(kind: ThetaKind | str, k: int, K: int, gamma=None) -> TruncSeries:
    """Reduced theta series of the given kind and derivative order, to ``O(q^K)``.

    ``gamma=None`` keeps gamma symbolic (coefficients in Q[gamma]); otherwise
    the multipliers ``P_n``, ``Q_n`` are evaluated at ``gamma`` and the series
    is over the ring of that value.
    """
    kind = ThetaKind(kind)
    if kind is ThetaKind.S and k % 2:
        raise ParityMismatch(f"S-type needs an even derivative order, got {k}")
    if kind in (ThetaKind.C, ThetaKind.Z) and k % 2 == 0:
        raise ParityMismatch(f"{kind.value}-type needs an odd derivative order, got {k}")
    ring = _ring_for(kind, gamma)
    coeffs = [ring.zero] * K
    n = 0
    while n * (n + 1) // 2 < K:
        if kind is ThetaKind.S:
            m = cheb_P(n)
        elif kind is ThetaKind.C:
            m = cheb_Q(n)
        else:
            m = GammaPoly((1,))
        if gamma is not None or kind is ThetaKind.Z:
            m = ring.coerce(m(gamma) if gamma is not None else m.coeffs[0])
        sign = -1 if n % 2 else 1
        coeffs[n * (n + 1) // 2] = m * (sign * (2 * n + 1) ** k)
        n += 1
    return TruncSeries(ring, coeffs, 0, K)


def _ring_for(kind: ThetaKind, gamma) -> Ring:
    if gamma is None:
        return QQ if kind is ThetaKind.Z else GAMMA
    return ring_of_value(gamma)
