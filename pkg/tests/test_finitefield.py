"""Field axioms, roots, and the Frobenius on small extensions."""

import pytest

from genhecke import GF
from genhecke.errors import ConfigError


def test_prime_field():
    F = GF(5, 1)
    a = F.integer(3)
    assert a + F.integer(2) == F.zero
    assert a * a.inv() == F.one
    assert len(list(F.elements())) == 5


def test_extension_field_axioms():
    F = GF(5, 2)
    els = list(F.elements())
    assert len(els) == 25
    # spot-check associativity / distributivity on a few triples
    for a, b, c in [(els[3], els[7], els[11]), (els[24], els[1], els[13])]:
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
    for x in els:
        if not x.is_zero():
            assert x * x.inv() == F.one


def test_generator_und_dlog():
    F = GF(5, 2)
    g = F.generator()
    seen = set()
    acc = F.one
    for _ in range(24):
        seen.add(acc.coeffs)
        acc = acc * g
    assert len(seen) == 24
    assert acc == F.one
    for x in list(F.units())[:8]:
        assert g ** F.dlog(x) == x


def test_frobenius_is_automorphism():
    F = GF(5, 2)
    els = list(F.elements())
    for a in els[::5]:
        for b in els[::7]:
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    # Frobenius fixes exactly the prime field
    fixed = [a for a in els if a.frobenius() == a]
    assert len(fixed) == 5


def test_nth_roots():
    F = GF(5, 2)
    g = F.generator()
    x = g**6
    r = x.nth_root(2)
    assert r * r == x
    r3 = (g**9).nth_root(3)
    assert r3**3 == g**9
    # a non-square: odd discrete log
    with pytest.raises(ConfigError):
        g.nth_root(2)
    assert F.zero.nth_root(2) == F.zero


def test_modulus_deterministic():
    assert GF(5, 2).modulus == GF(5, 2).modulus
    F1 = GF(5, 2)
    assert F1 is GF(5, 2)


def test_json_roundtrip():
    F = GF(7, 2)
    x = F.element([3, 5])
    assert F.from_json(x.to_json()) == x
