"""Exact scalars: rational and Gaussian-rational numbers.

A Gaussian rational a/d + (b/d)*i is stored as a reduced integer triple
(a, b, d) with d > 0 and gcd(a, b, d) == 1.  This is faster than carrying
two Fraction objects and keeps hashing/equality trivial.
"""

from fractions import Fraction
from math import gcd


class GaussianRational:
    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0, _raw=None):
        if _raw is not None:
            # internal fast path: already-reduced triple
            self.a, self.b, self.d = _raw
            return
        fre = Fraction(re)
        fim = Fraction(im)
        d = fre.denominator * fim.denominator // gcd(fre.denominator,
                                                     fim.denominator)
        a = fre.numerator * (d // fre.denominator)
        b = fim.numerator * (d // fim.denominator)
        g = gcd(gcd(a, b), d)
        self.a, self.b, self.d = a // g, b // g, d // g

    @staticmethod
    def _make(a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        return GaussianRational(_raw=(a, b, d))

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        other = as_scalar(other)
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __add__(self, other):
        other = as_scalar(other)
        return GaussianRational._make(self.a * other.d + other.a * self.d,
                                      self.b * other.d + other.b * self.d,
                                      self.d * other.d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(_raw=(-self.a, -self.b, self.d))

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        return GaussianRational._make(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        n = other.a * other.a + other.b * other.b
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        # multiply by conjugate over the norm
        return GaussianRational._make(
            (self.a * other.a + self.b * other.b) * other.d,
            (self.b * other.a - self.a * other.b) * other.d,
            self.d * n)

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def conjugate(self):
        return GaussianRational(_raw=(self.a, -self.b, self.d))

    def is_rational(self):
        return self.b == 0

    def __repr__(self):
        return "GaussianRational(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
I = GaussianRational(0, 1)


def as_scalar(x):
    """Coerce ints, Fractions or GaussianRationals to GaussianRational."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational(_raw=(x, 0, 1))
    if isinstance(x, Fraction):
        return GaussianRational(_raw=(x.numerator, 0, x.denominator))
    raise TypeError("cannot interpret %r as an exact scalar" % (x,))


def format_scalar(x):
    """Serialize as 'p/q' (rational) or 'p/q+r/s*i'."""
    x = as_scalar(x)
    re = Fraction(x.a, x.d)
    if x.b == 0:
        return _fmt_frac(re)
    im = Fraction(x.b, x.d)
    sign = "+" if im >= 0 else "-"
    return "%s%s%s*i" % (_fmt_frac(re), sign, _fmt_frac(abs(im)))


def _fmt_frac(f):
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_scalar(s):
    """Parse the formats produced by format_scalar."""
    if isinstance(s, int):
        return as_scalar(s)
    s = s.strip().replace(" ", "")
    if s.endswith("*i") or s.endswith("i"):
        body = s[:-2] if s.endswith("*i") else s[:-1]
        # split off the imaginary coefficient: find the sign separating
        # the real part from the imaginary part (not inside a fraction)
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/*":
                re_part, im_part = body[:k], body[k:]
                if im_part in ("+", "-"):
                    im_part += "1"
                return GaussianRational(Fraction(re_part), Fraction(im_part))
        if body in ("", "+", "-"):
            body += "1"
        return GaussianRational(0, Fraction(body))
    return GaussianRational(Fraction(s))


def sqrt_scalar(x):
    """Exact square root of a Gaussian rational when one exists in Q(i).

    Handles the cases needed for normalizing odd endomorphisms: x real
    (positive perfect square -> rational root; negative -> i * root), and
    purely imaginary x with square-root of the form c*(1+i).  Returns None
    when no square root exists in Q(i).
    """
    x = as_scalar(x)
    if not x:
        return ZERO
    if x.b == 0:
        f = Fraction(x.a, x.d)
        r = _frac_sqrt(abs(f))
        if r is None:
            return None
        return GaussianRational(r) if f > 0 else GaussianRational(0, r)
    if x.a == 0:
        # (c + c*i)^2 = 2*c^2*i,  (c - c*i)^2 = -2*c^2*i
        f = Fraction(x.b, x.d)
        c2 = _frac_sqrt(abs(f) / 2)
        if c2 is None:
            return None
        return GaussianRational(c2, c2 if f > 0 else -c2)
    # general a+bi: sqrt exists iff norm is a square and the usual
    # half-angle components are rational; rarely needed, do it directly.
    n = _frac_sqrt(x.re * x.re + x.im * x.im)
    if n is None:
        return None
    re2 = (n + x.re) / 2
    re = _frac_sqrt(re2)
    if re is None or re == 0:
        return None
    im = x.im / (2 * re)
    cand = GaussianRational(re, im)
    return cand if cand * cand == x else None


def _frac_sqrt(f):
    if f < 0:
        return None
    num, den = f.numerator, f.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None
