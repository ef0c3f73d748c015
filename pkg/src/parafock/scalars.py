"""Exact scalars: rational complex numbers.

All coefficients in this package live in Q(i): complex numbers whose real and
imaginary parts are both rational.  The ladder actions themselves have integer
coefficients, the bracket tables introduce halves, canonicalization introduces
1/p, and user-supplied representation matrices may be genuinely complex.
Staying inside Q(i) keeps every comparison an exact equality; no tolerance
appears anywhere in the package.

Values render as a pair of "num/den" strings so reports are byte-stable.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


class GaussianRational:
    """Immutable complex number re + im*i with Fraction parts.

    Arithmetic accepts int and Fraction on either side; they embed as purely
    real values.  Instances hash and compare by value.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if isinstance(re, Fraction) else Fraction(re))
        object.__setattr__(self, "im", im if isinstance(im, Fraction) else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        # __setattr__ is blocked, so pickle must go through the constructor
        return (GaussianRational, (self.re, self.im))

    # -- constructors ------------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as an exact scalar")

    @classmethod
    def parse(cls, re: str, im: str = "0") -> "GaussianRational":
        """Parse "num/den" strings (plain "num" is accepted too)."""
        return cls(Fraction(re), Fraction(im))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other).__sub__(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        other = GaussianRational.coerce(other)
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re / other, self.im / other)
        other = GaussianRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero scalar")
        return self * GaussianRational(other.re / norm, -other.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates / protocol --------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    # -- rendering ---------------------------------------------------------

    def as_strings(self) -> tuple[str, str]:
        """("num/den", "num/den") for the real and imaginary parts."""
        return (render_fraction(self.re), render_fraction(self.im))

    def __str__(self):
        re_s, im_s = self.as_strings()
        if not self.im:
            return re_s
        return f"{re_s}+{im_s}i" if self.im > 0 else f"{re_s}{im_s}i"


def render_fraction(q: Fraction) -> str:
    """Canonical "num/den" form, denominator always present ("3/1", "-1/2")."""
    return f"{q.numerator}/{q.denominator}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
HALF = GaussianRational(Fraction(1, 2))
