"""Weyl-group combinatorics: lengths, words, splits, Bruhat order, covers.

The exhaustive radius-3 batteries live in the acceptance suite; here we
keep the targeted unit checks and the independent oracles (reduced-word
search vs. the root-counting formula, subword closure vs. the descent
recursion for the Bruhat order).
"""

import itertools

import pytest

from genhecke import rootdata as rd
from genhecke.errors import NotInWaff


@pytest.fixture(scope="module")
def gl2():
    return rd.gln_datum(2)


@pytest.fixture(scope="module")
def gl3():
    return rd.gln_datum(3)


class TestGlnDatum:
    def test_gl2_shape(self, gl2):
        assert gl2.rank == 2
        assert len(gl2.positive) == 1
        # (omega_1, alpha_1^) = 1
        assert gl2.pair((0, 1), gl2.base[0]) == 1
        assert [gl2.roots[i] for i in gl2.minimal_coroot_indices()] == [(1, -1)]

    def test_gl3_shape(self, gl3):
        assert len(gl3.positive) == 3
        assert gl3.translation((0, 1, 1)).length == 2  # l(e^{omega_1}) = 1*(3-1)
        assert gl3.translation((0, 0, 1)).length == 2  # l(e^{omega_2}) = 2*(3-2)

    def test_dominance(self, gl3):
        assert gl3.is_dominant((0, 1, 2))
        assert not gl3.is_dominant((1, 0, 0))

    def test_validation_rejects_bad_pairing(self):
        with pytest.raises(ValueError):
            rd.BasedRootDatum(1, [(1,)], [(1,)], [0])

    def test_json_roundtrip(self, gl3):
        d2 = rd.BasedRootDatum.from_json(gl3.to_json())
        assert d2.roots == gl3.roots and d2.base == gl3.base
        w = gl3.simple_reflection(0) * gl3.translation((1, 0, -1))
        w2 = gl3.element_from_json(w.to_json())
        assert w2.mat == w.mat and w2.trans == w.trans


class TestElements:
    def test_product_law(self, gl3):
        # (u e^x)(v e^y) = uv e^{v^-1(x) + y}
        u = gl3.simple_reflection(0)
        v = gl3.simple_reflection(1)
        x, y = (1, 0, -2), (0, 3, 1)
        lhs = (u * gl3.translation(x)) * (v * gl3.translation(y))
        vinv_x = v.inverse().act_linear(x)
        rhs = (u * v) * gl3.translation(tuple(a + b for a, b in zip(vinv_x, y)))
        assert lhs == rhs

    def test_inverse(self, gl3):
        w = gl3.simple_reflection(1) * gl3.translation((2, -1, 0))
        assert (w * w.inverse()).is_identity()
        assert (w.inverse() * w).is_identity()
        assert w.length == w.inverse().length

    def test_length_zero_iff_omega(self, gl2):
        for u in rd.omega_window(gl2, 2):
            assert u.length == 0
        assert gl2.simple_reflection(0).length == 1

    def test_finite_element_validation(self, gl2):
        m = ((0, 1), (1, 0))
        w = gl2.finite_element(m)
        assert w == gl2.simple_reflection(0)
        with pytest.raises(ValueError):
            gl2.finite_element(((1, 1), (0, 1)))  # shear, not in W_o


class TestLengthFormula:
    def test_gl2_reference_values(self, gl2):
        assert gl2.translation((1, 0)).length == 1
        assert gl2.translation((1, 1)).length == 0
        assert gl2.translation((2, 0)).length == 2

    def test_gln_fundamental_weights(self, gl3):
        for i in (1, 2):
            x = rd.gln_fundamental_weight(3, i)
            assert gl3.translation(x).length == i * (3 - i)

    def test_formula_vs_reduced_word(self, gl3):
        # independent oracle: word length of the W_aff part
        for x in itertools.product(range(-2, 3), repeat=3):
            w = gl3.simple_reflection(0) * gl3.translation(x)
            u, aff, word = rd.omega_split(w)
            assert w.length == len(word)
            assert rd.word_product(gl3, word) == aff
            assert (u * aff) == w
            assert u.length == 0


class TestOmegaSplit:
    def test_waff_element_fixed(self, gl2):
        s = gl2.simple_reflection(0)
        u, aff, word = rd.omega_split(s)
        assert u.is_identity() and aff == s and word == (0,)

    def test_omega_element(self, gl2):
        t = gl2.omega_generators()[0]
        u, aff, word = rd.omega_split(t)
        assert u == t and aff.is_identity() and word == ()

    def test_gl2_omega_weight(self, gl2):
        u, aff, _ = rd.omega_split(gl2.translation((0, 1)))
        assert u.length == 0 and aff.length == 1

    def test_omega_generates_quotient(self, gl2):
        # t^2 is the central translation by (1, 1)
        t = gl2.omega_generators()[0]
        sq = t * t
        assert sq.is_translation()
        assert tuple(abs(a) for a in sq.trans) == (1, 1)


class TestReducedWord:
    def test_identity_and_generators(self, gl3):
        assert rd.reduced_word(gl3.identity()) == ()
        for g in gl3.affine_generators():
            assert rd.reduced_word(g.element) == (g.index,)

    def test_translation_by_root(self, gl2):
        alpha = gl2.roots[gl2.base[0]]
        w = gl2.translation(alpha)
        word = rd.reduced_word(w)
        assert len(word) == 2
        assert rd.word_product(gl2, word) == w

    def test_not_in_waff(self, gl2):
        with pytest.raises(NotInWaff):
            rd.reduced_word(gl2.translation((1, 0)))

    def test_deterministic_tiebreak(self, gl3):
        w = gl3.translation((-1, 0, 1))
        assert rd.reduced_word(w) == rd.reduced_word(w)


class TestBruhat:
    def test_reflexive_and_identity(self, gl2):
        for w in rd.weyl_ball(gl2, 3, window=1):
            assert rd.bruhat_leq(w, w)
            u, aff, _ = rd.omega_split(w)
            assert rd.bruhat_leq(u, w)

    def test_distinct_omega_parts(self, gl2):
        t = gl2.omega_generators()[0]
        s = gl2.simple_reflection(0)
        assert not rd.bruhat_leq(t * s, s)
        assert not rd.bruhat_leq(s, t * s)

    def test_vs_subword_closure(self, gl3):
        # oracle: w' <= w iff w' appears in the subword closure of w
        ball = rd.weyl_ball(gl3, 3, window=1)
        for w in ball[:40]:
            lower = set(rd.bruhat_lower_set(w))
            for wp in ball:
                assert rd.bruhat_leq(wp, w) == (wp in lower)

    def test_length_monotone_and_inverse(self, gl2):
        ball = rd.weyl_ball(gl2, 4, window=1)
        for w in ball:
            for wp in ball:
                if rd.bruhat_leq(wp, w):
                    assert wp.length <= w.length
                    assert rd.bruhat_leq(wp.inverse(), w.inverse())


class TestDominantConjugator:
    def test_dominant_input(self, gl3):
        u, ell = rd.dominant_conjugator(gl3, (0, 1, 2))
        assert u.is_identity() and ell == 0

    def test_gl2_single_step(self, gl2):
        u, ell = rd.dominant_conjugator(gl2, (1, 0))
        assert ell == 1 and u.length == 1
        assert u.act_linear((1, 0)) == (0, 1)

    def test_length_identity(self, gl3):
        for x in itertools.product(range(-2, 3), repeat=3):
            u, ell = rd.dominant_conjugator(gl3, x)
            assert u.length == ell
            assert gl3.is_dominant(u.act_linear(x))
            ex = gl3.translation(x)
            assert (u * ex).length == ex.length - ell


class TestParamClasses:
    def test_gln_single_class(self, gl2, gl3):
        assert len(gl2.param_classes()) == 1
        assert len(gl3.param_classes()) == 1
        # GL(2): the identification requires Omega conjugation
        assert set(gl2.param_classes()[0].members) == {0, 1}

    def test_even_bond_rank_one(self):
        # A1 x A1-style datum inside Z^4: no odd bonds, trivial Omega-effect
        roots = [(1, -1, 0, 0), (-1, 1, 0, 0), (0, 0, 1, -1), (0, 0, -1, 1)]
        datum = rd.BasedRootDatum(4, roots, list(roots), [0, 2], name="a1a1")
        classes = datum.param_classes()
        by_kind = {}
        for g in datum.affine_generators():
            by_kind.setdefault(g.kind, []).append(g.index)
        # each finite generator pairs with its own affine partner or stays alone,
        # but the two A1 factors never merge
        factor = lambda g: 0 if any(datum.roots[g.root_index][:2]) else 1
        for cls in classes:
            kinds = {factor(datum.affine_generators()[i]) for i in cls.members}
            assert len(kinds) == 1


class TestMinusculeCover:
    def test_identity_base_point(self, gl2):
        cover = rd.minuscule_cover(gl2, gl2.identity(), 3)
        patterns = {spec.nonneg: x for x, spec in cover}
        assert patterns[(True,)] == (0, 0)

    def test_gl2_nontrivial(self, gl2):
        w = gl2.simple_reflection(0)
        cover = rd.minuscule_cover(gl2, w, 3)
        assert len(cover) == 2  # one region per side of the wall

    def test_cover_verifies_everywhere(self, gl3):
        for w in gl3.weyl_group():
            cover = rd.minuscule_cover(gl3, w, 2)
            for x in rd.box_vectors(3, 2):
                specs = [bp for bp, spec in cover if spec.contains(gl3, x)]
                assert specs, "box point %r not covered" % (x,)


class TestAppendixIdentities:
    def test_ap1a(self, gl3):
        # l(u) + l(v) - l(uv) = 2 #{a > 0 : v(a) < 0, uv(a) > 0}
        W = gl3.weyl_group()
        pos = set(gl3.positive)
        for u in W:
            for v in W:
                count = 0
                for i in gl3.positive:
                    va = v.act_linear(gl3.roots[i])
                    if gl3._index[va] in gl3._positive_set:
                        continue
                    uva = u.act_linear(va)
                    if gl3._index[uva] in gl3._positive_set:
                        count += 1
                assert u.length + v.length - (u * v).length == 2 * count

    def test_double_translation(self, gl2):
        for x in itertools.product(range(-3, 4), repeat=2):
            for w in gl2.weyl_group():
                lhs = (w * gl2.translation(tuple(2 * a for a in x))).length
                rhs = (w * gl2.translation(x)).length + gl2.translation(x).length
                assert lhs == rhs

    def test_dominant_parity_and_pairing(self, gl3):
        two_rho = gl3.two_rho_coroot()
        for x in itertools.product(range(0, 4), repeat=3):
            if not gl3.is_dominant(x):
                continue
            ell = gl3.translation(x).length
            assert ell % 2 == 0
            assert ell == sum(a * b for a, b in zip(x, two_rho))
