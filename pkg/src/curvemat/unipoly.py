"""Univariate polynomials in t over Q(i), and their fraction field.

Coefficients are stored densely, lowest power first, with no trailing zeros.
RatFunc keeps the denominator monic and coprime to the numerator, so equality
is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, gaussian_integer_divisors, UNITS


def _as_scalar(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


class UniPoly:
    """Polynomial sum(coeffs[k] * t^k); the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if not isinstance(coeffs, (tuple, list)):
            s = _as_scalar(coeffs)
            if s is None:
                raise TypeError(f"cannot build a polynomial from {coeffs!r}")
            coeffs = (s,)
        cs = []
        for c in coeffs:
            s = _as_scalar(c)
            cs.append(s if s is not None else c)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def t(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with the usual convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GaussianRational(0)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        s = _as_scalar(other)
        if s is not None:
            return UniPoly((s,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly(out)

    __radd__ = __add__

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

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [GaussianRational(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        return UniPoly(tuple(a * c for a in self.coeffs))

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [GaussianRational(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        inv_lead = GaussianRational(1) / other.lead()
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv_lead
            q[k - d] = f
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] = rem[k - d + j] - f * b
        return UniPoly(q), UniPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(GaussianRational(1) / self.lead())

    def __call__(self, x):
        """Evaluate by Horner; x may live in any field containing the coefficients."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result if self.coeffs else GaussianRational(0) * x

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k; k must be nonnegative."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return self
        return UniPoly((GaussianRational(0),) * k + self.coeffs)

    def lowest_power(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(f"{c!r}")
            elif k == 1:
                parts.append(f"({c!r})*t")
            else:
                parts.append(f"({c!r})*t^{k}")
        return " + ".join(parts)


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_from_roots(roots) -> UniPoly:
    p = UniPoly((1,))
    for r in roots:
        p = p * UniPoly((-(_as_scalar(r) or r), 1))
    return p


def gaussian_roots(p: UniPoly) -> list[GaussianRational]:
    """All roots of p lying in Q(i), with multiplicity.

    Clears denominators and runs the rational-root test in Z[i]: a root u/v
    has u dividing the trailing and v the leading Gaussian-integer
    coefficient, up to units. Roots outside Q(i) are not reported.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots: list[GaussianRational] = []
    low = p.lowest_power()
    if low:
        roots.extend(GaussianRational(0) for _ in range(low))
        p = UniPoly(p.coeffs[low:])
    while p.degree >= 1:
        den = 1
        for c in p.coeffs:
            den = den * c.re.denominator // _gcd_int(den, c.re.denominator)
            den = den * c.im.denominator // _gcd_int(den, c.im.denominator)
        q = p.scale(GaussianRational(den))
        trailing = q.coeffs[0]
        leading = q.lead()
        found = None
        for u in gaussian_integer_divisors(trailing):
            for v in gaussian_integer_divisors(leading):
                for unit in UNITS:
                    cand = u * unit / v
                    if not p(cand):
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        p = p // UniPoly((-found, 1))
    return roots


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


class RatFunc:
    """Element of Q(i)(t): num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("cannot re-wrap a RatFunc with a denominator")
            object.__setattr__(self, "num", num.num)
            object.__setattr__(self, "den", num.den)
            return
        n = num if isinstance(num, UniPoly) else UniPoly((num,)) if _as_scalar(num) is not None else None
        if n is None:
            raise TypeError(f"cannot interpret {num!r} as a rational function")
        if den is None:
            d = UniPoly((1,))
        else:
            d = den if isinstance(den, UniPoly) else UniPoly((den,))
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        if n.is_zero():
            n, d = UniPoly(), UniPoly((1,))
        else:
            g = poly_gcd(n, d)
            if g.degree > 0:
                n, d = n // g, d // g
            lead = d.lead()
            if lead != GaussianRational(1):
                inv = GaussianRational(1) / lead
                n, d = n.scale(inv), d.scale(inv)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(UniPoly.t())

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly) or _as_scalar(other) is not None:
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __pow__(self, n: int):
        if n < 0:
            return (RatFunc(1) / self) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_unipoly(self) -> UniPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not polynomial in t")
        return self.num

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x) / d

    def __repr__(self):
        if self.den == UniPoly((1,)):
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"
