"""Closed-form generating functions in stripped theta form.

Writing ``S_k``, ``C_k``, ``Z_k`` for the reduced theta series of
:mod:`sixvertex.theta` and using ``sin^2(alpha) = (gamma+2)/4``, the
trigonometric prefactors in the closed-form solution reduce to

    t(q)    = (S0*C3/C1^2 - S2/C1) / (16 (gamma+2))
    R(q)    = (S0/C1)^2 (C3/C1 - Z3/Z1) / (24 (gamma+2))
    Ahat(q) = tan(alpha) * theta'(alpha)/theta(alpha) = C1/S0
    S(q)    = 2 (gamma+2) Ahat^2 / D R               (D = q d/dq)

and then ``q(t)`` is the reversion of ``t(q)``, ``R(t) = R(q(t))`` and

    Q(t) = (t - (gamma+2) t^2 - R(t)) / ((gamma+2) t^2).

Every division by ``gamma+2`` is exact in Q[gamma]; in symbolic mode a
remainder raises :class:`~sixvertex.errors.CancellationFailure`.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

from .coeffring import GAMMA, GammaPoly, QuadExtSqrt5, ring_of_value, to_rational
from .errors import CancellationFailure
from .series import TruncSeries, ps_compose, ps_d_by, ps_inv, ps_qlogderiv, ps_revert
from .theta import ThetaKind, reduced_theta

SERIES_NAMES = ("t(q)", "R(q)", "q(t)", "R(t)", "Q(t)", "Ahat(q)", "S(q)")

SYMBOLIC = None


def parse_gamma(text: str):
    """``"symbolic"`` -> None, ``"golden-ratio"`` -> (1+sqrt5)/2, else a rational."""
    text = text.strip()
    if text == "symbolic":
        return SYMBOLIC
    if text in ("golden-ratio", "golden", "phi"):
        return QuadExtSqrt5.golden_ratio()
    return to_rational(text)


def gamma_label(gamma) -> str:
    if gamma is None:
        return "symbolic"
    if isinstance(gamma, QuadExtSqrt5):
        return "golden-ratio" if gamma == QuadExtSqrt5.golden_ratio() else str(gamma)
    return str(gamma)


def _gamma_plus_2(gamma):
    if gamma is None:
        return GammaPoly((2, 1))
    return gamma + 2


def _check_gamma(gamma):
    if gamma is not None and _gamma_plus_2(gamma) == 0:
        raise ValueError("gamma = -2 is not allowed in rational mode")


def _div_gamma_plus_2(f: TruncSeries, gamma, scale: int = 1) -> TruncSeries:
    """Exact division of every coefficient by ``scale * (gamma + 2)``."""
    d = _gamma_plus_2(gamma) * scale
    if gamma is None:
        return f.map_coeffs(lambda c: c.divexact(d))
    inv = f.ring.inverse(f.ring.coerce(d))
    return f * inv


def _lift(f: TruncSeries, gamma) -> TruncSeries:
    """Move a rational series into the ring of the current gamma mode."""
    ring = ring_of_value(gamma)
    if f.ring is ring:
        return f
    return f.map_coeffs(ring.coerce, ring)


@lru_cache(maxsize=32)
def _thetas(gamma, K: int) -> dict[str, TruncSeries]:
    return {
        "S0": reduced_theta(ThetaKind.S, 0, K, gamma),
        "S2": reduced_theta(ThetaKind.S, 2, K, gamma),
        "C1": reduced_theta(ThetaKind.C, 1, K, gamma),
        "C3": reduced_theta(ThetaKind.C, 3, K, gamma),
        "Z1": _lift(reduced_theta(ThetaKind.Z, 1, K), gamma),
        "Z3": _lift(reduced_theta(ThetaKind.Z, 3, K), gamma),
    }


def _require_order(K: int):
    if K < 2:
        raise ValueError(f"order must be at least 2, got {K}")


def t_of_q(gamma, K: int) -> TruncSeries:
    _require_order(K)
    _check_gamma(gamma)
    th = _thetas(gamma, K)
    inv_c1 = ps_inv(th["C1"])
    inner = th["S0"] * th["C3"] * inv_c1 * inv_c1 - th["S2"] * inv_c1
    return _div_gamma_plus_2(inner, gamma, 16)


def R_of_q(gamma, K: int) -> TruncSeries:
    _require_order(K)
    _check_gamma(gamma)
    th = _thetas(gamma, K)
    inv_c1 = ps_inv(th["C1"])
    ratio = th["S0"] * inv_c1
    diff = th["C3"] * inv_c1 - th["Z3"] * ps_inv(th["Z1"])
    return _div_gamma_plus_2(ratio * ratio * diff, gamma, 24)


def q_of_t(gamma, K: int) -> TruncSeries:
    return ps_revert(t_of_q(gamma, K)).rename("t")


def R_of_t(gamma, K: int) -> TruncSeries:
    return ps_compose(R_of_q(gamma, K), q_of_t(gamma, K))


def Q_from_R(R_t: TruncSeries, gamma) -> TruncSeries:
    """``(t - (gamma+2) t^2 - R) / ((gamma+2) t^2)`` with exactness checks."""
    ring = R_t.ring
    g2 = ring.coerce(_gamma_plus_2(gamma))
    t = TruncSeries.gen(ring, R_t.order, "t")
    num = t - t * t * g2 - R_t
    if num.valuation < 3:
        raise CancellationFailure(
            f"numerator of Q has valuation {num.valuation} < 3; R(t) is inconsistent"
        )
    return _div_gamma_plus_2(num.shift(-2), gamma)


def Q_of_t(gamma, K: int) -> TruncSeries:
    """The generating function Q(t, gamma) of rooted quartic Eulerian orientations.

    The result is known to ``O(t^(K-2))`` because of the division by ``t^2``.
    """
    _check_gamma(gamma)
    return Q_from_R(R_of_t(gamma, K), gamma)


def Ahat_of_q(gamma, K: int) -> TruncSeries:
    _require_order(K)
    th = _thetas(gamma, K)
    return th["C1"] * ps_inv(th["S0"])


def S_of_q(gamma, K: int) -> TruncSeries:
    return GenFunBundle(gamma, K).S_q


class GenFunBundle:
    """All closed-form series for one gamma mode and order, computed on demand."""

    def __init__(self, gamma, K: int):
        _require_order(K)
        _check_gamma(gamma)
        self.gamma = gamma
        self.K = K

    @cached_property
    def t_q(self) -> TruncSeries:
        return t_of_q(self.gamma, self.K)

    @cached_property
    def R_q(self) -> TruncSeries:
        return R_of_q(self.gamma, self.K)

    @cached_property
    def q_t(self) -> TruncSeries:
        return ps_revert(self.t_q).rename("t")

    @cached_property
    def R_t(self) -> TruncSeries:
        return ps_compose(self.R_q, self.q_t)

    @cached_property
    def Q_t(self) -> TruncSeries:
        return Q_from_R(self.R_t, self.gamma)

    @cached_property
    def Ahat_q(self) -> TruncSeries:
        return Ahat_of_q(self.gamma, self.K)

    @cached_property
    def S_reduced(self) -> TruncSeries:
        """``S / (2 (gamma+2)) = Ahat^2 / D R``, which has a unit leading coefficient."""
        return self.Ahat_q * self.Ahat_q * ps_inv(ps_qlogderiv(self.R_q))

    @cached_property
    def S_q(self) -> TruncSeries:
        g2 = self.S_reduced.ring.coerce(_gamma_plus_2(self.gamma))
        return self.S_reduced * (g2 * 2)

    def named(self, name: str) -> TruncSeries:
        attr = {
            "t(q)": "t_q",
            "R(q)": "R_q",
            "q(t)": "q_t",
            "R(t)": "R_t",
            "Q(t)": "Q_t",
            "Ahat(q)": "Ahat_q",
            "S(q)": "S_q",
        }[name]
        return getattr(self, attr)


def compute_bundle(gamma, K: int) -> GenFunBundle:
    return GenFunBundle(gamma, K)


def series_by_name(name: str, gamma, K: int) -> TruncSeries:
    if name not in SERIES_NAMES:
        raise KeyError(f"unknown series {name!r}; choose from {', '.join(SERIES_NAMES)}")
    return compute_bundle(gamma, K).named(name)


def check_ode_t(gamma, K: int, bundle: GenFunBundle | None = None) -> TruncSeries:
    """Residual of ``d^2 t / dR^2 - S t``, all as series in q."""
    b = bundle or compute_bundle(gamma, K)
    d1 = ps_d_by(b.t_q, b.R_q)
    d2 = ps_d_by(d1, b.R_q)
    return d2 - b.S_q * b.t_q


def check_ode_A(gamma, K: int, bundle: GenFunBundle | None = None) -> TruncSeries:
    """Residual of ``d^2 A/dR^2 - T dA/dR - S A`` with ``T = (dS/dR)/S``, for ``A = Ahat``.

    The equation is linear and homogeneous, so the constant factor between
    ``A`` and ``Ahat`` does not matter.
    """
    b = bundle or compute_bundle(gamma, K)
    dA = ps_d_by(b.Ahat_q, b.R_q)
    d2A = ps_d_by(dA, b.R_q)
    # T is a logarithmic derivative, so the constant 2(gamma+2) in S drops out
    T = ps_d_by(b.S_reduced, b.R_q) * ps_inv(b.S_reduced)
    return d2A - T * dA - b.S_q * b.Ahat_q


def dt_dR(bundle: GenFunBundle) -> TruncSeries:
    return ps_d_by(bundle.t_q, bundle.R_q)


def specialize(f: TruncSeries, value) -> TruncSeries:
    """Evaluate the gamma-polynomial coefficients of ``f`` at ``value``."""
    if f.ring is not GAMMA:
        raise TypeError("specialize expects a series over Q[gamma]")
    ring = ring_of_value(value)
    return f.map_coeffs(lambda c: c(value), ring)


__all__ = [
    "SERIES_NAMES",
    "SYMBOLIC",
    "GenFunBundle",
    "Ahat_of_q",
    "Q_of_t",
    "Q_from_R",
    "R_of_q",
    "R_of_t",
    "S_of_q",
    "check_ode_A",
    "check_ode_t",
    "compute_bundle",
    "dt_dR",
    "gamma_label",
    "parse_gamma",
    "q_of_t",
    "series_by_name",
    "specialize",
    "t_of_q",
]
