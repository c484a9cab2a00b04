"""Arithmetic in F_{p^k} with a fixed, deterministically chosen modulus.

The algebraic closure of F_p is modeled by a single finite extension per
session: large enough for the roots and eigenvalues a computation needs,
and loud (:class:`~genhecke.errors.ConfigError`) when it is not.  Elements
are coefficient tuples over F_p in the polynomial basis for the
lexicographically smallest monic irreducible of the requested degree, so
two runs always agree on the representation.

Root extraction goes through a discrete-log table on a fixed generator
of the multiplicative group; fields here are small by design (p^k up to
a few tens of thousands), so the table is built once and kept.
"""

from __future__ import annotations

import functools
import itertools

from .errors import ConfigError


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _poly_divmod(out, mod, p)[1]


def _poly_divmod(a, b, p):
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = (a[i + len(b) - 1] * binv) % p
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_powmod(a, n, mod, p):
    out = [1]
    base = _poly_divmod(a, mod, p)[1]
    while n:
        if n & 1:
            out = _poly_mulmod(out, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        n >>= 1
    return out


def _is_irreducible(f, p):
    """Check a monic polynomial over F_p for irreducibility (x^{p^d} gcd test)."""
    k = len(f) - 1
    x = [0, 1]
    # f irreducible iff x^{p^k} == x mod f and gcd(x^{p^{k/r}} - x, f) = 1
    # for every prime r | k.
    u = _poly_powmod(x, p**k, f, p)
    if _poly_trim(list(u)) != _poly_trim(list(x)):
        return False
    for r in range(2, k + 1):
        if k % r or any(r % s == 0 for s in range(2, r)):
            continue
        u = _poly_powmod(x, p ** (k // r), f, p)
        diff = [(a - b) % p for a, b in itertools.zip_longest(u, x, fillvalue=0)]
        if _poly_gcd(diff, f, p) != [1]:
            return False
    return True


def _poly_gcd(a, b, p):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _find_modulus(p, k):
    if k == 1:
        return (0, 1)  # x, so the quotient is F_p itself
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FFElement:
    """An element of a :class:`FiniteField`, immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if isinstance(other, int):
            return self.field.integer(other)
        if not isinstance(other, FFElement) or other.field is not self.field:
            return NotImplemented
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FFElement(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        prod = _poly_mulmod(list(self.coeffs), list(other.coeffs), list(f.modulus), f.p)
        return FFElement(f, f._pad(prod))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        f = self.field
        out = _poly_powmod(list(self.coeffs), n, list(f.modulus), f.p)
        return FFElement(f, f._pad(out))

    def inv(self) -> "FFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in F_{p^k}")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.integer(other)
        return (
            isinstance(other, FFElement)
            and other.field is self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def frobenius(self) -> "FFElement":
        return self ** self.field.p

    def nth_root(self, n: int) -> "FFElement":
        """A deterministic n-th root, or :class:`ConfigError` if none exists."""
        return self.field.nth_root(self, n)

    def sqrt(self) -> "FFElement":
        return self.nth_root(2)

    def to_json(self):
        return list(self.coeffs)

    def __repr__(self):
        return "FF(%s; p=%d,k=%d)" % (list(self.coeffs), self.field.p, self.field.k)


class FiniteField:
    """The field F_{p^k}; construct through the cached factory :func:`GF`."""

    def __init__(self, p: int, k: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ConfigError("p = %d is not prime" % p)
        if k < 1:
            raise ConfigError("k must be >= 1")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = _find_modulus(p, k) if k > 1 else (0, 1)
        self.zero = FFElement(self, (0,) * k)
        self.one = self._pad_elem([1])
        self._log = None
        self._gen = None

    def _pad(self, coeffs):
        return tuple(list(coeffs) + [0] * (self.k - len(coeffs)))

    def _pad_elem(self, coeffs):
        return FFElement(self, self._pad(coeffs))

    def integer(self, n: int) -> FFElement:
        return self._pad_elem([n % self.p])

    def element(self, coeffs) -> FFElement:
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.k and any(coeffs[self.k :]):
            raise ValueError("coefficient list too long for F_{p^%d}" % self.k)
        return self._pad_elem(coeffs[: self.k])

    def is_zero(self, a: FFElement) -> bool:
        return a.is_zero()

    def invert(self, a: FFElement) -> FFElement:
        return a.inv()

    def elements(self):
        """All field elements, in a fixed order (zero first)."""
        for tup in itertools.product(range(self.p), repeat=self.k):
            yield FFElement(self, tup)

    def units(self):
        return (x for x in self.elements() if not x.is_zero())

    def generator(self) -> FFElement:
        """A fixed generator of the multiplicative group."""
        if self._gen is None:
            n = self.order - 1
            primes = _prime_factors(n)
            for x in self.units():
                if all((x ** (n // r)) != self.one for r in primes):
                    self._gen = x
                    break
        return self._gen

    def _log_table(self):
        if self._log is None:
            g = self.generator()
            table = {}
            acc = self.one
            for i in range(self.order - 1):
                table[acc.coeffs] = i
                acc = acc * g
            self._log = table
        return self._log

    def dlog(self, x: FFElement) -> int:
        if x.is_zero():
            raise ZeroDivisionError("log of 0")
        return self._log_table()[x.coeffs]

    def nth_root(self, x: FFElement, n: int) -> FFElement:
        """Solve y**n = x, deterministically, or raise :class:`ConfigError`."""
        if n <= 0:
            raise ValueError("root index must be positive")
        if x.is_zero():
            return self.zero
        N = self.order - 1
        L = self.dlog(x)
        import math

        g = math.gcd(n, N)
        if L % g:
            raise ConfigError(
                "no %d-th root of the given unit exists in F_{%d^%d}; "
                "enlarge k" % (n, self.p, self.k)
            )
        # smallest nonnegative solution of n*y = L (mod N)
        n1, L1, N1 = n // g, L // g, N // g
        y = (L1 * pow(n1, -1, N1)) % N1
        return self.generator() ** y

    def from_json(self, data) -> FFElement:
        return self.element([int(c) for c in data])

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.k)


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def GF(p: int, k: int) -> FiniteField:
    """Cached field factory, so elements of equal (p, k) share one field object."""
    return FiniteField(p, k)
