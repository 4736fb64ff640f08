"""Exact scalars: arbitrary-precision rationals and prime-field residues.

A Field object knows how to build, parse and print scalars.  Rational
scalars are stdlib Fractions (always reduced, positive denominator);
prime-field scalars are ModP residues stored in [0, p).  Both kinds
support +, -, *, / and truthiness (nonzero test), so all linear-algebra
code upstream is field-agnostic.
"""

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class ModP:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return (other.numerator * pow(other.denominator, -1, self.p)) % self.p
        return NotImplemented

    def __add__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return ModP(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return ModP(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return ModP(w - self.v, self.p)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return ModP(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return ModP(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


class Field:
    """The ground field: rationals (p is None) or GF(p)."""

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise ValueError("%r is not prime" % (p,))
        self.p = p
        self.zero = ModP(0, p) if p else Fraction(0)
        self.one = ModP(1, p) if p else Fraction(1)

    @property
    def kind(self):
        return "PrimeField" if self.p else "Rationals"

    @property
    def char(self):
        return self.p if self.p else 0

    def of(self, x):
        """Coerce an int, Fraction, ModP or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError("cannot coerce %r into the rationals" % (x,))
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError("wrong modulus")
            return x
        if isinstance(x, int):
            return ModP(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise TypeError("cannot coerce %r into GF(%d)" % (x, self.p))

    def parse(self, s):
        """Scalar grammar: "n" or "n/d" over the rationals, "r" over GF(p)."""
        s = s.strip()
        if self.p is None:
            if "/" in s:
                num, den = s.split("/", 1)
                f = Fraction(int(num), int(den))
            else:
                f = Fraction(int(s))
            return f
        if "/" in s:
            raise ValueError("no fraction syntax in GF(%d): %r" % (self.p, s))
        v = int(s)
        if not 0 <= v < self.p:
            raise ValueError("residue %r outside [0,%d)" % (s, self.p))
        return ModP(v, self.p)

    def show(self, x):
        if self.p is None:
            if x.denominator == 1:
                return str(x.numerator)
            return "%d/%d" % (x.numerator, x.denominator)
        return str(x.v)

    def to_json(self):
        if self.p is None:
            return {"kind": "Rationals"}
        return {"kind": "PrimeField", "p": self.p}

    @staticmethod
    def from_json(d):
        if d["kind"] == "Rationals":
            return Field()
        if d["kind"] == "PrimeField":
            return Field(d["p"])
        raise ValueError("unknown field kind %r" % (d.get("kind"),))

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return "QQ" if self.p is None else "GF(%d)" % self.p


QQ = Field()


def GF(p):
    return Field(p)
