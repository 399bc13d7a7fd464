"""Truncated Laurent series over an exact coefficient ring.

A :class:`TruncSeries` stores the coefficients of exponents
``valuation .. order-1`` of a series in one formal variable.  Everything at
exponent ``order`` and beyond is unknown; asking for it raises
:class:`~sixvertex.errors.TruncationError` instead of returning zero.  Every
operation returns the largest truncation order justified by its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .coeffring import Ring
from .errors import (
    BadValuation,
    NonUnitLeading,
    PositiveValuationRequired,
    TruncationError,
)


def _conv(a: Sequence, b: Sequence, n: int, zero) -> list:
    """First ``n`` coefficients of the product of two coefficient lists."""
    out = []
    la, lb = len(a), len(b)
    for k in range(n):
        acc = zero
        lo = max(0, k - lb + 1)
        hi = min(k, la - 1)
        for i in range(lo, hi + 1):
            x = a[i]
            if x:
                y = b[k - i]
                if y:
                    acc = acc + x * y
        out.append(acc)
    return out


class TruncSeries:
    """Truncated Laurent series ``sum_{n=valuation}^{order-1} c_n var^n + O(var^order)``."""

    __slots__ = ("ring", "valuation", "coeffs", "order", "var")

    def __init__(
        self,
        ring: Ring,
        coeffs: Sequence,
        valuation: int = 0,
        order: int | None = None,
        var: str = "q",
    ):
        cs = [ring.coerce(c) for c in coeffs]
        if order is None:
            order = valuation + len(cs)
        if order < valuation + len(cs):
            cs = cs[: max(order - valuation, 0)]
        else:
            cs.extend([ring.zero] * (order - valuation - len(cs)))
        self._set(ring, cs, valuation, order, var)

    def _set(self, ring, cs, valuation, order, var):
        # trim leading zeros so coeffs[0] is nonzero unless the series is O(var^order)
        i = 0
        while i < len(cs) and not cs[i]:
            i += 1
        self.ring = ring
        self.coeffs = cs[i:]
        self.valuation = valuation + i if self.coeffs else order
        self.order = order
        self.var = var

    @classmethod
    def _raw(cls, ring, cs, valuation, order, var) -> "TruncSeries":
        obj = object.__new__(cls)
        obj._set(ring, cs, valuation, order, var)
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def gen(cls, ring: Ring, order: int, var: str = "q") -> "TruncSeries":
        """The variable itself, known to ``order``."""
        return cls(ring, [ring.one], 1, order, var)

    @classmethod
    def constant(cls, ring: Ring, c, order: int, var: str = "q") -> "TruncSeries":
        return cls(ring, [c], 0, order, var)

    @classmethod
    def zero(cls, ring: Ring, order: int, var: str = "q") -> "TruncSeries":
        return cls(ring, [], order, order, var)

    @classmethod
    def from_function(
        cls, ring: Ring, f: Callable[[int], object], order: int, valuation: int = 0, var: str = "q"
    ) -> "TruncSeries":
        return cls(ring, [f(n) for n in range(valuation, order)], valuation, order, var)

    # -- access --------------------------------------------------------------

    def __getitem__(self, n: int):
        if n >= self.order:
            raise TruncationError(f"coefficient of {self.var}^{n} unknown (order {self.order})")
        if n < self.valuation:
            return self.ring.zero
        return self.coeffs[n - self.valuation]

    def coefficient_list(self, start: int = 0, stop: int | None = None) -> list:
        """Coefficients for exponents ``start .. stop-1`` (default: up to order)."""
        stop = self.order if stop is None else stop
        return [self[n] for n in range(start, stop)]

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    @property
    def precision(self) -> int:
        """Number of known coefficients past the valuation."""
        return self.order - self.valuation

    def __repr__(self) -> str:
        return f"TruncSeries({self})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                n = self.valuation + i
                mono = "" if n == 0 else (self.var if n == 1 else f"{self.var}^{n}")
                cs = str(c)
                if mono:
                    terms.append(f"({cs})*{mono}" if cs != "1" else mono)
                else:
                    terms.append(f"({cs})")
        terms.append(f"O({self.var}^{self.order})")
        return " + ".join(terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.valuation == other.valuation
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def agrees_with(self, other: "TruncSeries") -> bool:
        """Coefficient equality up to the smaller of the two orders."""
        return (self - other).is_zero()

    # -- structural -----------------------------------------------------------

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        n = max(order - self.valuation, 0)
        return TruncSeries._raw(self.ring, self.coeffs[:n], self.valuation, order, self.var)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``var**k``."""
        return TruncSeries._raw(self.ring, list(self.coeffs), self.valuation + k, self.order + k, self.var)

    def rename(self, var: str) -> "TruncSeries":
        return TruncSeries._raw(self.ring, list(self.coeffs), self.valuation, self.order, var)

    def map_coeffs(self, f: Callable, ring: Ring | None = None) -> "TruncSeries":
        """Apply ``f`` to every coefficient, e.g. to specialise gamma."""
        ring = ring or self.ring
        return TruncSeries._raw(
            ring, [ring.coerce(f(c)) for c in self.coeffs], self.valuation, self.order, self.var
        )

    def _dense(self, start: int, stop: int) -> list:
        """Coefficients for ``start .. stop-1`` without order checks (zeros outside)."""
        z = self.ring.zero
        out = []
        for n in range(start, stop):
            i = n - self.valuation
            out.append(self.coeffs[i] if 0 <= i < len(self.coeffs) else z)
        return out

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            c = self.ring.coerce(other)
            if self.order <= 0:
                return self
            v = min(self.valuation, 0)
            cs = self._dense(v, self.order)
            cs[-v] = cs[-v] + c
            return TruncSeries._raw(self.ring, cs, v, self.order, self.var)
        order = min(self.order, other.order)
        v = min(self.valuation, other.valuation, order)
        a = self._dense(v, order)
        b = other._dense(v, order)
        return TruncSeries._raw(self.ring, [x + y for x, y in zip(a, b)], v, order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.ring, [-c for c in self.coeffs], self.valuation, self.order, self.var)

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            return self + (-other)
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            if isinstance(other, (int, Fraction)):
                c = other
            else:
                c = self.ring.coerce(other)
            return TruncSeries._raw(
                self.ring, [x * c for x in self.coeffs], self.valuation, self.order, self.var
            )
        return ps_mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        return ps_inv(self)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return ps_mul(self, ps_inv(other))
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return self * self.ring.inverse(self.ring.coerce(other))

    def __rtruediv__(self, other):
        return ps_inv(self) * other

    def __pow__(self, n: int):
        if n < 0:
            return ps_inv(self) ** (-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else ps_mul(result, base)
            n >>= 1
            if n:
                base = ps_mul(base, base)
        if result is None:
            return TruncSeries.constant(self.ring, self.ring.one, self.order - self.valuation, self.var)
        return result

    # -- calculus --------------------------------------------------------------

    def qderiv(self) -> "TruncSeries":
        return ps_qlogderiv(self)

    def compose(self, g: "TruncSeries") -> "TruncSeries":
        return ps_compose(self, g)

    def revert(self) -> "TruncSeries":
        return ps_revert(self)

    def d_by(self, g: "TruncSeries") -> "TruncSeries":
        return ps_d_by(self, g)

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "var": self.var,
            "valuation": self.valuation,
            "order": self.order,
            "coeffs": [self.ring.to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, ring: Ring, data: dict) -> "TruncSeries":
        return cls(
            ring,
            [ring.from_json(c) for c in data["coeffs"]],
            int(data["valuation"]),
            int(data["order"]),
            data.get("var", "q"),
        )


def ps_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Exact product; valuations add, order is the tighter of the two bounds."""
    v = f.valuation + g.valuation
    order = min(f.order + g.valuation, g.order + f.valuation)
    n = max(order - v, 0)
    cs = _conv(f.coeffs, g.coeffs, n, f.ring.zero)
    return TruncSeries._raw(f.ring, cs, v, order, f.var)


def ps_inv(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the lowest coefficient must be a unit."""
    if f.is_zero():
        raise NonUnitLeading("cannot invert a series with no known nonzero coefficient")
    ring = f.ring
    a = f.coeffs
    n = f.precision
    inv0 = ring.inverse(a[0])
    b = [inv0]
    for k in range(1, n):
        acc = ring.zero
        for i in range(1, min(k, len(a) - 1) + 1):
            x = a[i]
            if x:
                acc = acc + x * b[k - i]
        b.append(-(acc * inv0))
    return TruncSeries._raw(ring, b, -f.valuation, -f.valuation + n, f.var)


def ps_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """``f(g)`` for ``g`` without constant term.

    Negative valuation in ``f`` is allowed when the leading coefficient of
    ``g`` is invertible: ``f = var^v * f0`` gives ``f(g) = g^v * f0(g)``.
    """
    vg = g.valuation
    if vg < 1:
        raise PositiveValuationRequired(f"inner series has valuation {vg} < 1")
    ring = f.ring
    vf = f.valuation
    if f.is_zero():
        return TruncSeries.zero(ring, f.order * vg, g.var)
    if vf < 0:
        f0 = f.shift(-vf)
        return ps_mul(ps_compose(f0, g), ps_inv(g) ** (-vf))
    order = min(f.order * vg, g.order + (max(vf, 1) - 1) * vg)
    G = g._dense(0, order)
    acc = [ring.zero] * order
    for k in range(f.order - 1, -1, -1):
        acc = _conv(acc, G, order, ring.zero)
        if order:
            acc[0] = acc[0] + f[k]
    return TruncSeries._raw(ring, acc, 0, order, g.var)


def ps_revert(f: TruncSeries) -> TruncSeries:
    """Compositional inverse by Lagrange inversion.

    ``[x^n] g = (1/n) [z^(n-1)] (z / f(z))^n``.
    """
    if f.valuation != 1:
        raise BadValuation(f"reversion needs valuation 1, got {f.valuation}")
    ring = f.ring
    n_terms = f.order  # g known to the same absolute order
    h = ps_inv(f.shift(-1))  # z / f(z), valuation 0
    H = h._dense(0, n_terms - 1)
    power = list(H)
    out = [ring.zero]
    for n in range(1, n_terms):
        out.append(power[n - 1] * Fraction(1, n))
        if n + 1 < n_terms:
            power = _conv(power, H, n_terms - 1, ring.zero)
    return TruncSeries._raw(ring, out, 0, n_terms, f.var)


def ps_qlogderiv(f: TruncSeries) -> TruncSeries:
    """The operator ``D = var * d/dvar``: coefficient at ``n`` times ``n``."""
    v = f.valuation
    return TruncSeries._raw(f.ring, [c * (v + i) for i, c in enumerate(f.coeffs)], v, f.order, f.var)


def ps_d_by(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """``df/dg`` for two series in the same variable, computed as ``D f / D g``."""
    return ps_mul(ps_qlogderiv(f), ps_inv(ps_qlogderiv(g)))
