"""Integer Laurent polynomials in the half-parameters of a generic weight.

The generic Hecke algebra of a based root datum has one indeterminate
``q_c`` per conjugacy class ``c`` of simple affine reflections, and most
of its structure theory happens after adjoining square roots.  We work
once and for all in ``Z[v_0^{±1}, ..., v_{k-1}^{±1}]`` where
``v_c**2 = q_c``: an exponent vector counts powers of the ``v_c``, so an
element lies in ``Z[q_*]`` exactly when every exponent is even and
nonnegative (see :meth:`HalfLaurent.is_polynomial_in_q`).

Values are immutable; all arithmetic returns fresh objects.  There is no
floating point anywhere and no hidden normalization: zero coefficients
are simply never stored.
"""

from __future__ import annotations

from .errors import DivisionError, SpecializationError

try:  # compiled kernels, if the optional extension was built
    from . import _termops_cy as _ops
except ImportError:  # pragma: no cover - depends on build environment
    from . import _termops as _ops

add_terms = _ops.add_terms
sub_terms = _ops.sub_terms
neg_terms = _ops.neg_terms
scale_terms = _ops.scale_terms
mul_terms = _ops.mul_terms

KERNEL_BACKEND = _ops.BACKEND


class HalfLaurent:
    """A Laurent polynomial in the ``v_c`` with integer coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = terms or {}
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "HalfLaurent":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "HalfLaurent":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def integer(cls, nvars: int, n: int) -> "HalfLaurent":
        if n == 0:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: n})

    @classmethod
    def monomial(cls, nvars: int, exps, coef: int = 1) -> "HalfLaurent":
        exps = tuple(exps)
        if len(exps) != nvars:
            raise ValueError("exponent vector has wrong length")
        if coef == 0:
            return cls.zero(nvars)
        return cls(nvars, {exps: coef})

    @classmethod
    def v(cls, nvars: int, c: int, power: int = 1) -> "HalfLaurent":
        """The half-parameter ``v_c**power``."""
        e = [0] * nvars
        e[c] = power
        return cls.monomial(nvars, e)

    @classmethod
    def q(cls, nvars: int, c: int, power: int = 1) -> "HalfLaurent":
        """The parameter ``q_c**power = v_c**(2*power)``."""
        return cls.v(nvars, c, 2 * power)

    # -- ring structure -----------------------------------------------

    def _coerce(self, other) -> "HalfLaurent":
        if isinstance(other, HalfLaurent):
            if other.nvars != self.nvars:
                raise ValueError("mixed parameter counts")
            return other
        if isinstance(other, int):
            return HalfLaurent.integer(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfLaurent(self.nvars, add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfLaurent(self.nvars, sub_terms(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfLaurent(self.nvars, sub_terms(other.terms, self.terms))

    def __neg__(self):
        return HalfLaurent(self.nvars, neg_terms(self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfLaurent(self.nvars, scale_terms(self.terms, other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfLaurent(self.nvars, mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse_monomial() ** (-n)
        out = HalfLaurent.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == HalfLaurent.integer(self.nvars, other).terms
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- predicates and pieces ----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self):
        """Return ``(coef, exps)`` if this is a single term, else ``None``."""
        if len(self.terms) != 1:
            return None
        ((e, c),) = self.terms.items()
        return c, e

    def is_monic_monomial(self):
        """Return the exponent vector if this is a single term with coefficient 1."""
        m = self.is_monomial()
        if m is None or m[0] != 1:
            return None
        return m[1]

    def is_unit(self) -> bool:
        m = self.is_monomial()
        return m is not None and m[0] in (1, -1)

    def is_polynomial_in_q(self) -> bool:
        """Membership in ``Z[q_*]``: every exponent even and nonnegative."""
        return all(
            e >= 0 and e % 2 == 0 for exps in self.terms for e in exps
        )

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    # -- division ------------------------------------------------------

    def inverse_monomial(self) -> "HalfLaurent":
        m = self.is_monomial()
        if m is None or m[0] not in (1, -1):
            raise DivisionError("only unit monomials are invertible")
        c, e = m
        return HalfLaurent(self.nvars, {tuple(-x for x in e): c})

    def div_exact(self, other) -> "HalfLaurent":
        """Divide by a monomial, exactly.

        Raises :class:`DivisionError` when ``other`` is not a monomial or
        its coefficient does not divide every coefficient here.
        """
        other = self._coerce(other)
        m = other.is_monomial()
        if m is None:
            raise DivisionError("divisor is not a monomial")
        c, e = m
        out = {}
        for exps, coef in self.terms.items():
            q, r = divmod(coef, c)
            if r:
                raise DivisionError("coefficient %d not divisible by %d" % (coef, c))
            out[tuple(x - y for x, y in zip(exps, e))] = q
        return HalfLaurent(self.nvars, out)

    def sqrt_monomial(self) -> "HalfLaurent":
        """Square root of a monic monomial with even exponents."""
        e = self.is_monic_monomial()
        if e is None or any(x % 2 for x in e):
            raise DivisionError("not the square of a monic monomial")
        return HalfLaurent(self.nvars, {tuple(x // 2 for x in e): 1})

    def divides_monomial(self, other: "HalfLaurent") -> bool:
        """Exponentwise divisibility of monic monomials (self | other in Z[q_*])."""
        a = self.is_monic_monomial()
        b = other.is_monic_monomial()
        if a is None or b is None:
            return False
        return all(x <= y for x, y in zip(a, b))

    # -- specialization -------------------------------------------------

    def specialize(self, spec):
        """Apply a ring morphism sending each ``v_c`` to ``spec.root(c)``.

        ``spec`` is any object with ``root(c)``, ``ring.zero``, ``ring.one``,
        and whose scalars support ``+``/``*``; negative exponents require the
        root to be invertible through ``spec.invert_root(c)``.
        """
        acc = None
        for exps, coef in sorted(self.terms.items()):
            val = spec.ring.integer(coef)
            for c, e in enumerate(exps):
                if e == 0:
                    continue
                if e > 0:
                    base = spec.root(c)
                else:
                    base = spec.invert_root(c)
                    e = -e
                for _ in range(e):
                    val = val * base
            acc = val if acc is None else acc + val
        return spec.ring.zero if acc is None else acc

    # -- serialization ---------------------------------------------------

    def to_json(self):
        return [
            {"exps": list(e), "coef": c}
            for e, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, nvars: int, data) -> "HalfLaurent":
        terms = {}
        for item in data:
            e = tuple(int(x) for x in item["exps"])
            c = int(item["coef"])
            if len(e) != nvars:
                raise ValueError("exponent vector has wrong length")
            if c:
                terms[e] = terms.get(e, 0) + c
        return cls(nvars, {e: c for e, c in terms.items() if c})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, coef in sorted(self.terms.items()):
            mono = "*".join(
                "v%d^%d" % (i, e) for i, e in enumerate(exps) if e
            )
            if mono:
                bits.append("%+d*%s" % (coef, mono))
            else:
                bits.append("%+d" % coef)
        return "".join(bits).lstrip("+")


class LaurentRing:
    """Ring handle used by generic linear algebra and specializations."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.zero = HalfLaurent.zero(nvars)
        self.one = HalfLaurent.one(nvars)

    def integer(self, n: int) -> HalfLaurent:
        return HalfLaurent.integer(self.nvars, n)

    def is_zero(self, a: HalfLaurent) -> bool:
        return a.is_zero()

    def invert(self, a: HalfLaurent) -> HalfLaurent:
        return a.inverse_monomial()

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and self.nvars == other.nvars

    def __hash__(self):
        return hash(("LaurentRing", self.nvars))

    def __repr__(self):
        return "LaurentRing(%d)" % self.nvars


class GenericSpecialization:
    """The identity specialization ``v_c -> v_c`` (keeps everything generic)."""

    def __init__(self, nvars: int):
        self.ring = LaurentRing(nvars)

    def root(self, c: int) -> HalfLaurent:
        return HalfLaurent.v(self.ring.nvars, c)

    def invert_root(self, c: int) -> HalfLaurent:
        return HalfLaurent.v(self.ring.nvars, c, -1)


class Specialization:
    """A ring morphism ``Z[q_*^{1/2}] -> R`` given by chosen roots of the weights.

    ``roots[c]`` is the image of ``v_c``; the image of ``q_c`` is its square.
    """

    def __init__(self, ring, roots):
        self.ring = ring
        self.roots = list(roots)

    def root(self, c: int):
        return self.roots[c]

    def invert_root(self, c: int):
        r = self.roots[c]
        try:
            return self.ring.invert(r)
        except (ZeroDivisionError, DivisionError) as exc:
            raise SpecializationError(
                "parameter class %d specializes to a non-invertible value" % c
            ) from exc

    def q_value(self, c: int):
        return self.roots[c] * self.roots[c]
