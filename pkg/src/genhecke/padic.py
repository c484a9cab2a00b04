"""A monomial model of p-adic integers: unit times a rational power of phi(q).

Scalars are either zero or a pair ``(val, unit)``: a rational valuation
(measured so that the chosen non-unit ``phi(q)`` has valuation
``val(phi(q))``) and a multiplicative-unit residue in a fixed F_{p^k}.
Multiplication is total and exact.  Addition is deliberately partial:

* different valuations: the smaller-valuation operand wins, exactly as
  an element of the graded ring;
* equal valuations with non-cancelling residues: keep the valuation, add
  the residues -- this is only the leading graded piece, so the result
  is marked inexact;
* equal valuations with cancelling residues: if both operands are exact
  monomials the sum is exactly zero; otherwise the leading terms cancel
  and nothing is known about the remainder, which raises
  :class:`~genhecke.errors.PrecisionError`.

Everything the lifting construction and the integral-structure checks
need stays inside this model; a PrecisionError is the model telling you
a computation left it, rather than silently lying.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigError, NonIntegralEntry, PrecisionError
from .finitefield import FFElement, FiniteField


class MonomialPadic:
    """Zero, or ``unit * pi**val`` with ``unit`` a residue in F_{p^k}."""

    __slots__ = ("field", "val", "unit", "exact")

    def __init__(self, field: FiniteField, val, unit, exact: bool = True):
        self.field = field
        if unit is None:
            self.val = None
            self.unit = None
            self.exact = True
        else:
            if unit.is_zero():
                raise ValueError("unit residue must be nonzero; use zero()")
            self.val = Fraction(val)
            self.unit = unit
            self.exact = exact

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero_of(cls, field) -> "MonomialPadic":
        return cls(field, None, None)

    @classmethod
    def from_unit(cls, unit: FFElement) -> "MonomialPadic":
        """The Teichmueller-style unit with the given residue."""
        return cls(unit.field, 0, unit)

    @classmethod
    def uniformizer_power(cls, field, val) -> "MonomialPadic":
        """``pi**val`` with unit residue 1."""
        return cls(field, val, field.one)

    @classmethod
    def integer(cls, field, n: int) -> "MonomialPadic":
        """The image of an ordinary integer with unit reduction (p does not divide n)."""
        u = field.integer(n)
        if u.is_zero():
            if n == 0:
                return cls.zero_of(field)
            raise PrecisionError(
                "integer %d is divisible by p; it has no monomial representation" % n
            )
        return cls(field, 0, u)

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return self.unit is None

    def is_integral(self) -> bool:
        return self.is_zero() or self.val >= 0

    def valuation(self):
        """Rational valuation, or ``None`` for zero."""
        return self.val

    # -- ring operations ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MonomialPadic) or other.field is not self.field:
            return NotImplemented
        return other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return MonomialPadic.zero_of(self.field)
        return MonomialPadic(
            self.field,
            self.val + other.val,
            self.unit * other.unit,
            self.exact and other.exact,
        )

    def __neg__(self):
        if self.is_zero():
            return self
        return MonomialPadic(self.field, self.val, -self.unit, self.exact)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.val < other.val:
            return MonomialPadic(self.field, self.val, self.unit, False)
        if other.val < self.val:
            return MonomialPadic(self.field, other.val, other.unit, False)
        s = self.unit + other.unit
        if not s.is_zero():
            return MonomialPadic(self.field, self.val, s, False)
        if self.exact and other.exact:
            return MonomialPadic.zero_of(self.field)
        raise PrecisionError(
            "cancelling sum at valuation %s of inexact terms; "
            "the result is outside the monomial model" % self.val
        )

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def inv(self) -> "MonomialPadic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0")
        return MonomialPadic(self.field, -self.val, self.unit.inv(), self.exact)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n: int):
        if self.is_zero():
            if n <= 0:
                raise ZeroDivisionError("0 ** nonpositive")
            return self
        return MonomialPadic(self.field, self.val * n, self.unit**n, self.exact)

    def root(self, n: int) -> "MonomialPadic":
        """An n-th root: valuation divides by n, residue root in F_{p^k}."""
        if self.is_zero():
            return self
        return MonomialPadic(
            self.field, self.val / n, self.unit.nth_root(n), self.exact
        )

    def pow_fraction(self, e: Fraction) -> "MonomialPadic":
        e = Fraction(e)
        return (self ** e.numerator).root(e.denominator)

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.val == other.val and self.unit == other.unit

    def __hash__(self):
        return hash((id(self.field), self.val, self.unit))

    # -- reduction -----------------------------------------------------------

    def reduce(self) -> FFElement:
        """Residue in F_{p^k}: zero above valuation 0, the unit at valuation 0."""
        if self.is_zero():
            return self.field.zero
        if self.val > 0:
            return self.field.zero
        if self.val == 0:
            return self.unit
        raise NonIntegralEntry(
            "cannot reduce an element of negative valuation %s" % self.val
        )

    # -- serialization --------------------------------------------------------

    def to_json(self):
        if self.is_zero():
            return "0"
        return {
            "val": "%d/%d" % (self.val.numerator, self.val.denominator),
            "unit": self.unit.to_json(),
        }

    @classmethod
    def from_json(cls, field, data) -> "MonomialPadic":
        if data == "0":
            return cls.zero_of(field)
        num, _, den = str(data["val"]).partition("/")
        val = Fraction(int(num), int(den or 1))
        return cls(field, val, field.from_json(data["unit"]))

    def __repr__(self):
        if self.is_zero():
            return "0"
        tag = "" if self.exact else "~"
        return "%s%r*pi^(%s)" % (tag, list(self.unit.coeffs), self.val)


class PadicRing:
    """Ring handle for :class:`MonomialPadic` scalars over a fixed field."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.zero = MonomialPadic.zero_of(field)
        self.one = MonomialPadic.from_unit(field.one)

    def integer(self, n: int) -> MonomialPadic:
        return MonomialPadic.integer(self.field, n)

    def is_zero(self, a: MonomialPadic) -> bool:
        return a.is_zero()

    def invert(self, a: MonomialPadic) -> MonomialPadic:
        return a.inv()

    def __repr__(self):
        return "PadicRing(%r)" % self.field


def padic_sqrt_specialization(ring: PadicRing, phiq_roots):
    """Helper for building specializations with chosen square roots (see modules)."""
    from .laurent import Specialization

    return Specialization(ring, phiq_roots)
