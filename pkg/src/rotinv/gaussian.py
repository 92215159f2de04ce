"""Exact complex scalars with rational real and imaginary parts.

Every coefficient produced by the eigenform construction is a Gaussian
integer, and every coefficient met while expanding or differentiating
invariants stays inside Q(i), so this one scalar type carries all of the
symbolic arithmetic in the package.
"""
from __future__ import annotations

import re as _re
from fractions import Fraction


class GaussianRational:
    """A complex number ``re + im*i`` with exact ``Fraction`` parts.

    Values are immutable in practice (nothing in the package mutates them)
    and hashable, so they can key dictionaries and be shared freely.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- ring / field operations -------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

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
        n2 = o.re * o.re + o.im * o.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n2,
            (self.im * o.re - self.re * o.im) / n2,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (ONE / self) ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    # -- predicates and conversions ----------------------------------

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        """Canonical text form ``p/q+r/s*i`` (parts omitted when zero)."""
        if self.im == 0:
            return str(self.re)
        mag = "i" if abs(self.im) == 1 else f"{abs(self.im)}*i"
        if self.re == 0:
            return ("-" + mag) if self.im < 0 else mag
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{mag}"

    _PATTERN = _re.compile(
        r"^(?P<re>[+-]?\d+(?:/\d+)?)?"
        r"(?P<im>(?:(?<=\d)[+-]|^[+-]?)(?:\d+(?:/\d+)?\*)?i)?$"
    )

    @classmethod
    def from_string(cls, text):
        """Parse the canonical text form produced by ``str``."""
        s = text.strip().replace(" ", "")
        m = cls._PATTERN.match(s)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"not a Gaussian rational: {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_txt = m.group("im")
        if im_txt is None:
            return cls(re_part)
        body = im_txt[:-1].rstrip("*")
        if body in ("", "+"):
            im_part = Fraction(1)
        elif body == "-":
            im_part = Fraction(-1)
        else:
            im_part = Fraction(body)
        return cls(re_part, im_part)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def i_power(j):
    """i**j for any integer j, as an exact Gaussian rational."""
    return (ONE, I, GaussianRational(-1), GaussianRational(0, -1))[j % 4]
