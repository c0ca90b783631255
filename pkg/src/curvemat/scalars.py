"""Exact scalars: Gaussian rationals and a dual-number extension.

Every computation in this package runs over the field Q(i) of Gaussian
rationals (complex numbers with rational real and imaginary parts), so
conjugation, signatures and "for all t" statements can be decided exactly.
There is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class GaussianRational:
    """An element re + im*i of Q(i), stored as two Fractions in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im != 0:
                raise TypeError("cannot add an imaginary part to a complex value")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- ring structure -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return (GaussianRational(1) / self) ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and helpers -----------------------------------------

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|z|^2 as a rational number."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor, convenient in tests and fixtures."""
    return GaussianRational(re, im)


class DualNumber:
    """a + eps*b with eps^2 = 0, over Q(i); used for exact first derivatives."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a if isinstance(a, GaussianRational) else GaussianRational(a))
        object.__setattr__(self, "b", b if isinstance(b, GaussianRational) else GaussianRational(b))

    def __setattr__(self, name, value):
        raise AttributeError("DualNumber is immutable")

    def _coerce(self, other):
        if isinstance(other, DualNumber):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return DualNumber(GaussianRational(other) if not isinstance(other, GaussianRational) else other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.a:
            raise ZeroDivisionError("dual number with nilpotent leading part is not invertible")
        inv_a = GaussianRational(1) / o.a
        return DualNumber(self.a * inv_a, (self.b * o.a - self.a * o.b) * inv_a * inv_a)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return DualNumber(-self.a, -self.b)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a!r}) + eps*({self.b!r})"


# -- Gaussian integer divisors (used for exact root finding) ------------


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    divisors = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            divisors.append(d)
            if d != n // d:
                divisors.append(n // d)
        d += 1
    return sorted(divisors)


def gaussian_integer_divisors(z: GaussianRational) -> list[GaussianRational]:
    """All Gaussian-integer divisors of a Gaussian integer, up to units.

    Divisors of z in Z[i] have norm dividing N(z); enumerate sums of two
    squares for each norm divisor and keep those dividing z exactly.
    """
    a, b = z.re, z.im
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError("input must be a Gaussian integer")
    n = int(a * a + b * b)
    if n == 0:
        return []
    found = []
    for m in _int_divisors(n):
        x = 0
        while x * x <= m:
            y2 = m - x * x
            y = int(y2 ** 0.5)
            while y * y < y2:
                y += 1
            if y * y == y2:
                for cand in {(x, y), (y, x)}:
                    w = GaussianRational(cand[0], cand[1])
                    if not w:
                        continue
                    q = z / w
                    if q.re.denominator == 1 and q.im.denominator == 1:
                        found.append(w)
            x += 1
    return found


UNITS = (GaussianRational(1), GaussianRational(-1), GaussianRational(0, 1), GaussianRational(0, -1))
