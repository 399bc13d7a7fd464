"""Exact coefficient rings.

Four coefficient types are used throughout the package:

* :class:`fractions.Fraction` (aliased :data:`Rational`) for plain rationals,
* :class:`GammaPoly`, dense polynomials in the weight ``gamma``,
* :class:`OmegaLaurent`, sparse Laurent polynomials in ``omega`` where
  ``gamma = omega**2 + omega**-2``,
* :class:`QuadExtSqrt5`, elements ``a + b*sqrt(5)`` of Q(sqrt 5).

Each type has a matching :class:`Ring` descriptor (``QQ``, ``GAMMA``,
``OMEGA``, ``QQ_SQRT5``) which the series code uses for zero, one, unit
inversion and JSON serialization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import CancellationFailure, NonUnitLeading, NotExpressible

Rational = Fraction

_SCALARS = (int, Fraction)


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rational_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Polynomials in gamma
# ---------------------------------------------------------------------------


class GammaPoly:
    """Dense univariate polynomial in gamma over Q, ascending coefficients.

    Instances are immutable; trailing zeros are trimmed on construction so
    ``len(p.coeffs) - 1`` is the degree (``-1`` for the zero polynomial).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else to_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "GammaPoly":
        # coeffs already Fractions; only trimming needed
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def gen(cls) -> "GammaPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "GammaPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, GammaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            return self.coeffs == GammaPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"GammaPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other):
        if isinstance(other, GammaPoly):
            return other
        if isinstance(other, _SCALARS):
            return GammaPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return GammaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return GammaPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return GammaPoly._raw([])
            return GammaPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, GammaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return GammaPoly._raw([])
        if len(a) == 1:
            return other * a[0]
        if len(b) == 1:
            return self * b[0]
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return GammaPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = GammaPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "GammaPoly") -> tuple["GammaPoly", "GammaPoly"]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        quot = [Fraction(0)] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(rem) - len(d), -1, -1):
            c = rem[k + len(d) - 1] / lead
            quot[k] = c
            if c:
                for j, dj in enumerate(d):
                    rem[k + j] -= c * dj
        return GammaPoly._raw(quot), GammaPoly._raw(rem[: len(d) - 1])

    def divexact(self, other) -> "GammaPoly":
        """Exact quotient; raises :class:`CancellationFailure` on a remainder."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide GammaPoly by {other!r}")
        q, r = self.divmod(o)
        if r:
            raise CancellationFailure(f"({self}) is not divisible by ({o})")
        return q

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / Fraction(other))
        if isinstance(other, GammaPoly):
            return self.divexact(other)
        return NotImplemented

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def inverse(self) -> "GammaPoly":
        if not self.is_unit():
            raise NonUnitLeading(f"{self} is not a unit in Q[gamma]")
        return GammaPoly._raw([1 / self.coeffs[0]])

    def __call__(self, g):
        """Horner evaluation at any ring value (Fraction, QuadExtSqrt5, ...)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc if self.coeffs else Fraction(0)

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs] or ["0/1"]

    @classmethod
    def from_json(cls, data: list[str]) -> "GammaPoly":
        return cls(to_rational(s) for s in data)


def gamma_eval(p: GammaPoly, g) -> Fraction:
    """Exact evaluation of ``p`` at ``gamma = g``."""
    return p(g)


# ---------------------------------------------------------------------------
# Laurent polynomials in omega
# ---------------------------------------------------------------------------


class OmegaLaurent:
    """Sparse Laurent polynomial in omega with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = to_rational(c)
                if c:
                    self.terms[int(e)] = c

    @classmethod
    def _raw(cls, terms: dict) -> "OmegaLaurent":
        obj = object.__new__(cls)
        obj.terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "OmegaLaurent":
        return cls({exponent: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, OmegaLaurent):
            return self.terms == other.terms
        if isinstance(other, _SCALARS):
            return self.terms == OmegaLaurent({0: other}).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"OmegaLaurent({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "" if e == 0 else ("w" if e == 1 else f"w^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other):
        if isinstance(other, OmegaLaurent):
            return other
        if isinstance(other, _SCALARS):
            return OmegaLaurent({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return OmegaLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return OmegaLaurent._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return OmegaLaurent._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, OmegaLaurent):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return OmegaLaurent._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise NonUnitLeading("only monomials have Laurent inverses")
            ((e, c),) = self.terms.items()
            return OmegaLaurent({e * n: c**n})
        result = OmegaLaurent({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "OmegaLaurent":
        """Multiply by omega**k."""
        return OmegaLaurent._raw({e + k: c for e, c in self.terms.items()})

    def conj(self) -> "OmegaLaurent":
        """Substitute omega -> 1/omega."""
        return OmegaLaurent._raw({-e: c for e, c in self.terms.items()})

    def divexact(self, other: "OmegaLaurent") -> "OmegaLaurent":
        """Exact quotient by long division from the top exponent."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return OmegaLaurent()
        top = max(other.terms)
        lead = other.terms[top]
        qmin = min(self.terms) - min(other.terms)
        rem = dict(self.terms)
        quot: dict[int, Fraction] = {}
        while rem and max(rem) - top >= qmin:
            e = max(rem)
            c = rem[e] / lead
            shift = e - top
            quot[shift] = c
            for oe, oc in other.terms.items():
                k = oe + shift
                v = rem.get(k, 0) - c * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise CancellationFailure(f"({self}) is not divisible by ({other})")
        return OmegaLaurent._raw(quot)

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "OmegaLaurent":
        if not self.is_unit():
            raise NonUnitLeading(f"{self} is not a unit in Q[omega, 1/omega]")
        return self**-1

    def to_json(self) -> dict[str, str]:
        return {str(e): rational_to_str(c) for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "OmegaLaurent":
        return cls({int(e): to_rational(c) for e, c in data.items()})


_OMEGA_GAMMA = OmegaLaurent({2: 1, -2: 1})


def gamma_to_omega(p: GammaPoly) -> OmegaLaurent:
    """Substitute gamma = omega**2 + omega**-2."""
    acc = OmegaLaurent()
    for c in reversed(p.coeffs):
        acc = acc * _OMEGA_GAMMA + c
    return acc


def omega_to_gamma(p: OmegaLaurent) -> GammaPoly:
    """Inverse of :func:`gamma_to_omega` on its image.

    Raises :class:`NotExpressible` if ``p`` has odd exponents or is not
    symmetric under omega -> 1/omega.
    """
    for e, c in p.terms.items():
        if e % 2:
            raise NotExpressible(f"odd omega exponent {e} in {p}")
        if p.terms.get(-e) != c:
            raise NotExpressible(f"{p} is not symmetric under omega -> 1/omega")
    rem = p
    out: dict[int, Fraction] = {}
    while rem:
        top = max(rem.terms)
        if top < 0 or top % 2:
            raise NotExpressible(f"{p} is not a polynomial in omega^2 + omega^-2")
        k = top // 2
        c = rem.terms[top]
        out[k] = c
        rem = rem - _OMEGA_GAMMA**k * c
    deg = max(out, default=-1)
    return GammaPoly([out.get(i, 0) for i in range(deg + 1)])


# ---------------------------------------------------------------------------
# Q(sqrt 5)
# ---------------------------------------------------------------------------


class QuadExtSqrt5:
    """Element ``a + b*sqrt(5)`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = to_rational(a)
        self.b = to_rational(b)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction) -> "QuadExtSqrt5":
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        return obj

    @classmethod
    def sqrt5(cls) -> "QuadExtSqrt5":
        return cls(0, 1)

    @classmethod
    def golden_ratio(cls) -> "QuadExtSqrt5":
        return cls(Fraction(1, 2), Fraction(1, 2))

    def __repr__(self) -> str:
        return f"QuadExtSqrt5({self.a}, {self.b})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt5"
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*sqrt5"

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExtSqrt5):
            return self.a == other.a and self.b == other.b
        if isinstance(other, _SCALARS):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if not self.b else hash((self.a, self.b))

    def _coerce(self, other):
        if isinstance(other, QuadExtSqrt5):
            return other
        if isinstance(other, _SCALARS):
            return QuadExtSqrt5._raw(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtSqrt5._raw(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtSqrt5._raw(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtSqrt5._raw(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return QuadExtSqrt5._raw(self.a * other, self.b * other)
        if not isinstance(other, QuadExtSqrt5):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadExtSqrt5._raw(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExtSqrt5(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QuadExtSqrt5":
        return QuadExtSqrt5._raw(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def is_unit(self) -> bool:
        return bool(self)

    def inverse(self) -> "QuadExtSqrt5":
        n = self.norm()
        if not n:
            raise NonUnitLeading("zero is not invertible in Q(sqrt5)")
        return QuadExtSqrt5._raw(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def to_json(self) -> list[str]:
        return [rational_to_str(self.a), rational_to_str(self.b)]

    @classmethod
    def from_json(cls, data) -> "QuadExtSqrt5":
        return cls(to_rational(data[0]), to_rational(data[1]))


# ---------------------------------------------------------------------------
# Ring descriptors
# ---------------------------------------------------------------------------


class Ring:
    """Descriptor bundling the structure a series needs from its coefficients."""

    name = "abstract"

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def inverse(self, c):
        raise NotImplementedError

    def to_json(self, c):
        raise NotImplementedError

    def from_json(self, data):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<ring {self.name}>"


class RationalField(Ring):
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return to_rational(x)

    def inverse(self, c):
        if not c:
            raise NonUnitLeading("zero is not invertible")
        return 1 / Fraction(c)

    def to_json(self, c):
        return rational_to_str(Fraction(c))

    def from_json(self, data):
        return to_rational(data)


class GammaRing(Ring):
    name = "QQ[gamma]"
    zero = GammaPoly()
    one = GammaPoly((1,))

    def coerce(self, x):
        return x if isinstance(x, GammaPoly) else GammaPoly((x,))

    def inverse(self, c):
        return self.coerce(c).inverse()

    def to_json(self, c):
        return c.to_json()

    def from_json(self, data):
        return GammaPoly.from_json(data)


class OmegaRing(Ring):
    name = "QQ[omega, 1/omega]"
    zero = OmegaLaurent()
    one = OmegaLaurent({0: 1})

    def coerce(self, x):
        return x if isinstance(x, OmegaLaurent) else OmegaLaurent({0: x})

    def inverse(self, c):
        return self.coerce(c).inverse()

    def to_json(self, c):
        return c.to_json()

    def from_json(self, data):
        return OmegaLaurent.from_json(data)


class Sqrt5Field(Ring):
    name = "QQ(sqrt5)"
    zero = QuadExtSqrt5(0)
    one = QuadExtSqrt5(1)

    def coerce(self, x):
        return x if isinstance(x, QuadExtSqrt5) else QuadExtSqrt5(x)

    def inverse(self, c):
        return self.coerce(c).inverse()

    def to_json(self, c):
        return self.coerce(c).to_json()

    def from_json(self, data):
        return QuadExtSqrt5.from_json(data)


QQ = RationalField()
GAMMA = GammaRing()
OMEGA = OmegaRing()
QQ_SQRT5 = Sqrt5Field()


def ring_of_value(gamma) -> Ring:
    """Coefficient ring for a gamma mode: ``None`` means symbolic gamma."""
    if gamma is None:
        return GAMMA
    if isinstance(gamma, QuadExtSqrt5):
        return QQ_SQRT5
    if isinstance(gamma, (int, Fraction)):
        return QQ
    raise TypeError(f"unsupported gamma value {gamma!r}")
