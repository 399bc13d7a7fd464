"""Order-by-order solution of the Tutte-style functional equations.

The series ``W(x)`` and ``H(x, y)`` (coefficients Laurent polynomials in
``omega``) are the unique solutions of

    W(x)   = 1 + t x^2 W(x)^2 + omega t x H(x,0) + omega^-1 t x H(0,x)
    H(x,y) = W(x) W(y) + omega^-1 (H(x,y) - H(x,0)) / y
                       + omega    (H(x,y) - H(0,y)) / x.

Extracting ``[t^k x^(r+1) y^(s+1)]`` of ``x y`` times the second equation
gives the descending recursion

    h_{r,s} = [x^r y^s] (W(x)W(y))_k + omega^-1 h_{r,s+1} + omega h_{r+1,s}

which fills slice ``k`` from the largest ``r+s`` (at most ``2k``) downwards.
``C(t, omega) = H(0, 0)`` then equals ``1 + Q(t, omega^2 + omega^-2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeffring import OMEGA, GammaPoly, OmegaLaurent, omega_to_gamma
from .errors import VerificationFailure
from .series import TruncSeries

W_OMEGA = OmegaLaurent({1: 1})
W_OMEGA_INV = OmegaLaurent({-1: 1})
_ZERO = OmegaLaurent()
_ONE = OmegaLaurent({0: 1})


@dataclass
class WSlice:
    k: int
    poly: list[OmegaLaurent]  # index = power of x

    def coeff(self, r: int) -> OmegaLaurent:
        return self.poly[r] if 0 <= r < len(self.poly) else _ZERO


@dataclass
class HSlice:
    k: int
    poly: dict[tuple[int, int], OmegaLaurent] = field(default_factory=dict)

    def coeff(self, r: int, s: int) -> OmegaLaurent:
        return self.poly.get((r, s), _ZERO)


def _ww_coeff(W: list[WSlice], k: int, r: int, s: int) -> OmegaLaurent:
    """``[t^k x^r y^s] W(x) W(y)``."""
    acc = _ZERO
    for j in range(k + 1):
        a = W[j].coeff(r)
        if a:
            b = W[k - j].coeff(s)
            if b:
                acc = acc + a * b
    return acc


def _next_W(W: list[WSlice], H: list[HSlice], k: int) -> WSlice:
    prev = k - 1
    poly = [_ZERO] * (2 * k + 1)
    # x^2 W(x)^2 at t^(k-1)
    for j in range(k):
        for r1, a in enumerate(W[j].poly):
            if not a:
                continue
            for r2, b in enumerate(W[prev - j].poly):
                if b:
                    poly[r1 + r2 + 2] = poly[r1 + r2 + 2] + a * b
    # omega x H(x,0) + omega^-1 x H(0,x) at t^(k-1)
    for (r, s), h in H[prev].poly.items():
        if s == 0:
            poly[r + 1] = poly[r + 1] + W_OMEGA * h
        if r == 0:
            poly[s + 1] = poly[s + 1] + W_OMEGA_INV * h
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    return WSlice(k, poly)


def _next_H(W: list[WSlice], k: int) -> HSlice:
    top = 2 * k
    h: dict[tuple[int, int], OmegaLaurent] = {}
    for total in range(top, -1, -1):
        for r in range(total + 1):
            s = total - r
            val = _ww_coeff(W, k, r, s)
            up_s = h.get((r, s + 1))
            if up_s:
                val = val + W_OMEGA_INV * up_s
            up_r = h.get((r + 1, s))
            if up_r:
                val = val + W_OMEGA * up_r
            if val:
                h[(r, s)] = val
    return HSlice(k, h)


def iterate_WH(K: int, verify: bool = True) -> tuple[list[WSlice], list[HSlice]]:
    """Slices ``[t^k] W`` for ``k <= K + 1`` and ``[t^k] H`` for ``k <= K``.

    One extra W slice is produced because ``[x^1] W`` at ``t^(K+1)`` encodes
    ``C`` at ``t^K``.  With ``verify`` both equations are re-checked by
    back-substitution.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    W = [WSlice(0, [_ONE])]
    H = [_next_H(W, 0)]
    for k in range(1, K + 1):
        W.append(_next_W(W, H, k))
        H.append(_next_H(W, k))
    W.append(_next_W(W, H, K + 1))
    if verify:
        verify_back_substitution(W, H)
    return W, H


def verify_back_substitution(W: list[WSlice], H: list[HSlice]) -> None:
    """Substitute the slices into both equations and compare every coefficient."""
    KH = len(H) - 1
    # W equation at every available W order
    for k in range(len(W)):
        lhs: dict[int, OmegaLaurent] = {r: c for r, c in enumerate(W[k].poly) if c}
        rhs: dict[int, OmegaLaurent] = {}
        if k == 0:
            rhs[0] = _ONE
        else:
            for j in range(k):
                for r1, a in enumerate(W[j].poly):
                    for r2, b in enumerate(W[k - 1 - j].poly):
                        if a and b:
                            rhs[r1 + r2 + 2] = rhs.get(r1 + r2 + 2, _ZERO) + a * b
            for (r, s), h in H[k - 1].poly.items():
                if s == 0:
                    rhs[r + 1] = rhs.get(r + 1, _ZERO) + W_OMEGA * h
                if r == 0:
                    rhs[s + 1] = rhs.get(s + 1, _ZERO) + W_OMEGA_INV * h
        rhs = {r: c for r, c in rhs.items() if c}
        if lhs != rhs:
            raise VerificationFailure(f"W equation fails at t^{k}")
        if len(W[k].poly) - 1 > 2 * k:
            raise VerificationFailure(f"x-degree of W slice {k} exceeds {2 * k}")
    # x y H = x y W(x)W(y) + omega^-1 x (H - H(x,0)) + omega y (H - H(0,y))
    for k in range(KH + 1):
        hk = H[k].poly
        lhs = {(r + 1, s + 1): c for (r, s), c in hk.items()}
        rhs: dict[tuple[int, int], OmegaLaurent] = {}

        def add(key, val):
            rhs[key] = rhs.get(key, _ZERO) + val

        for j in range(k + 1):
            for r, a in enumerate(W[j].poly):
                for s, b in enumerate(W[k - j].poly):
                    if a and b:
                        add((r + 1, s + 1), a * b)
        for (r, s), c in hk.items():
            if s > 0:
                add((r + 1, s), W_OMEGA_INV * c)
            if r > 0:
                add((r, s + 1), W_OMEGA * c)
        rhs = {key: c for key, c in rhs.items() if c}
        if lhs != rhs:
            raise VerificationFailure(f"H equation fails at t^{k}")
        for (r, s), c in hk.items():
            if r + s > 2 * k:
                raise VerificationFailure(f"H slice {k} has a term beyond degree {2 * k}")
            if H[k].coeff(s, r) != c.conj():
                raise VerificationFailure(f"H slice {k} breaks the x<->y, omega<->1/omega symmetry")


def C_of_t(K: int, slices: tuple[list[WSlice], list[HSlice]] | None = None) -> TruncSeries:
    """``C(t, omega) = H(0,0)`` to ``O(t^(K+1))``, cross-checked against ``[x^1]W``."""
    W, H = slices or iterate_WH(K)
    via_h = [H[k].coeff(0, 0) for k in range(K + 1)]
    denom = W_OMEGA + W_OMEGA_INV
    via_w = [W[k + 1].coeff(1).divexact(denom) for k in range(K + 1)]
    if via_h != via_w:
        bad = next(k for k in range(K + 1) if via_h[k] != via_w[k])
        raise VerificationFailure(f"H(0,0) and [x^1]W/(t(omega+1/omega)) differ at t^{bad}")
    return TruncSeries(OMEGA, via_h, 0, K + 1, "t")


@dataclass
class TutteComparison:
    order: int
    match: bool
    first_mismatch: int | None
    C_gamma: list[GammaPoly]
    one_plus_Q: list[GammaPoly]


def compare_C_Q(K: int) -> TutteComparison:
    """Check ``omega_to_gamma(C) = 1 + Q(t, gamma)`` through ``t^K`` in symbolic gamma."""
    from .genfun import Q_of_t

    C = C_of_t(K)
    Cg = [omega_to_gamma(C[k]) for k in range(K + 1)]
    Q = Q_of_t(None, K + 3)
    one_Q = [(Q[k] + (1 if k == 0 else 0)) for k in range(K + 1)]
    mismatch = next((k for k in range(K + 1) if Cg[k] != one_Q[k]), None)
    return TutteComparison(K, mismatch is None, mismatch, Cg, one_Q)


def slices_to_json(W: list[WSlice], H: list[HSlice]) -> dict:
    return {
        "W": [{"k": s.k, "poly": [c.to_json() for c in s.poly]} for s in W],
        "H": [
            {"k": s.k, "poly": [{"r": r, "s": t, "c": c.to_json()} for (r, t), c in sorted(s.poly.items())]}
            for s in H
        ],
    }
