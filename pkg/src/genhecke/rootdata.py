"""Based root data and their extended affine Weyl groups.

A datum is the quintuple (X, X^, R, R^, B): dual lattices Z^d paired by
the dot product, finite root/coroot sets in bijection with (alpha,
alpha^) = 2, and a base B of simple roots.  The extended affine Weyl
group is W = W_o e^X; it decomposes as Omega W_aff where W_aff is the
Coxeter group on S = {simple reflections} u {s_a e^a : a in R_m} and
Omega is the subgroup of length-zero elements.

Elements are stored as a pair (integer matrix acting on X, translation
vector).  The length function is evaluated by the root-counting formula

    len(w_o e^x) = sum_{a>0, w_o(a)>0} |(x, a^)|
                 + sum_{a>0, w_o(a)<0} |1 + (x, a^)|

and everything else (reduced words, the Omega/W_aff split, the Bruhat
order, dominant conjugators, length-additive covers of X) is built on
top of it.
"""

from __future__ import annotations

import functools
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, CoverFailure, NotInWaff
from .linalg import smith_normal_form

_ORDER_CAP = 64  # product order beyond this counts as infinite (never odd)


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def _tup(v):
    return tuple(int(a) for a in v)


def _mat_vec(m, x):
    return tuple(_dot(row, x) for row in m)


def _mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(_dot(row, col) for col in bt) for row in a)


def _identity(d):
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


class WeylElement:
    """An element ``w_o e^x`` of the extended affine Weyl group."""

    __slots__ = ("datum", "mat", "matinv", "trans", "_len", "_split", "_hash")

    def __init__(self, datum, mat, matinv, trans):
        self.datum = datum
        self.mat = mat
        self.matinv = matinv
        self.trans = trans
        self._len = None
        self._split = None
        self._hash = None

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.datum is not self.datum:
            raise ValueError("elements of different data")
        trans = tuple(
            a + b for a, b in zip(_mat_vec(other.matinv, self.trans), other.trans)
        )
        return WeylElement(
            self.datum,
            _mat_mul(self.mat, other.mat),
            _mat_mul(other.matinv, self.matinv),
            trans,
        )

    def inverse(self):
        return WeylElement(
            self.datum,
            self.matinv,
            self.mat,
            tuple(-a for a in _mat_vec(self.mat, self.trans)),
        )

    def act_linear(self, x):
        """The finite part applied to a lattice vector."""
        return _mat_vec(self.mat, x)

    def is_identity(self):
        return self.mat == _identity(self.datum.rank) and not any(self.trans)

    def is_translation(self):
        return self.mat == _identity(self.datum.rank)

    @property
    def length(self):
        if self._len is None:
            self._len = self.datum._length(self)
        return self._len

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and other.datum is self.datum
            and other.mat == self.mat
            and other.trans == self.trans
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.mat, self.trans))
        return self._hash

    def sort_key(self):
        return (self.length, self.trans, self.mat)

    def to_json(self):
        return {"finite": [list(r) for r in self.mat], "trans": list(self.trans)}

    def __repr__(self):
        return "W(%s; e^%s)" % (list(map(list, self.mat)), list(self.trans))


@dataclass(frozen=True)
class ParamClass:
    """A W-conjugacy class of simple affine reflections."""

    id: int
    members: tuple  # generator indices into datum.affine_generators()


@dataclass(frozen=True)
class AffineGenerator:
    """A simple reflection of (W_aff, S)."""

    index: int  # position in the generator list
    kind: str  # "finite" or "affine"
    root_index: int  # index into datum.roots
    element: WeylElement

    @property
    def param_class(self):
        return self.element.datum.class_of_generator(self.index)


@dataclass(frozen=True)
class RegionSpec:
    """A sign-pattern region: per positive root, whether (x, a^) >= 0."""

    coroot_indices: tuple
    nonneg: tuple  # booleans, aligned with coroot_indices

    def contains(self, datum, x):
        for ci, sign in zip(self.coroot_indices, self.nonneg):
            if (_dot(x, datum.coroots[ci]) >= 0) != sign:
                return False
        return True

    def to_json(self):
        return {"coroots": list(self.coroot_indices), "nonneg": list(self.nonneg)}


class BasedRootDatum:
    """A reduced based root datum with the standard dot-product pairing."""

    def __init__(self, rank, roots, coroots, base, name=None, dominant_gens=None):
        self.rank = rank
        self.roots = [_tup(r) for r in roots]
        self.coroots = [_tup(c) for c in coroots]
        self.base = tuple(base)
        self.name = name or "custom"
        self._dominant_gens = dominant_gens
        self._lock = threading.RLock()  # builders call other cached builders
        self._caches = {}
        self._validate()
        self._index = {r: i for i, r in enumerate(self.roots)}
        self.positive = tuple(
            i for i, r in enumerate(self.roots) if self._is_positive(r)
        )
        self._positive_set = frozenset(self.positive)

    # -- validation ------------------------------------------------------

    def _validate(self):
        if len(self.roots) != len(self.coroots):
            raise ValueError("roots and coroots must be in bijection")
        for r, c in zip(self.roots, self.coroots):
            if _dot(r, c) != 2:
                raise ValueError("pairing (alpha, alpha^) must be 2: %r" % (r,))
        root_set = set(self.roots)
        for r in self.roots:
            if tuple(2 * a for a in r) in root_set:
                raise ValueError("root system must be reduced")
        for b in self.base:
            if not 0 <= b < len(self.roots):
                raise ValueError("base index out of range")
        # each simple reflection must permute the roots and coroots
        for b in self.base:
            m = self._reflection_matrix(b)
            for r in self.roots:
                if _mat_vec(m, r) not in root_set:
                    raise ValueError("reflection does not permute the roots")
            mc = self._coreflection_matrix(b)
            coroot_set = set(self.coroots)
            for c in self.coroots:
                if _mat_vec(mc, c) not in coroot_set:
                    raise ValueError("reflection does not permute the coroots")
        for r in self.roots:
            if self._base_coordinates(r) is None:
                raise ValueError("root %r is not a signed base combination" % (r,))

    def _reflection_matrix(self, root_index):
        a = self.roots[root_index]
        c = self.coroots[root_index]
        d = self.rank
        return tuple(
            tuple(int(i == j) - a[i] * c[j] for j in range(d)) for i in range(d)
        )

    def _coreflection_matrix(self, root_index):
        a = self.roots[root_index]
        c = self.coroots[root_index]
        d = self.rank
        return tuple(
            tuple(int(i == j) - c[i] * a[j] for j in range(d)) for i in range(d)
        )

    def _base_coordinates(self, root):
        """Coordinates of a root in the base, or None; must be all >=0 or all <=0."""
        basis = [self.roots[b] for b in self.base]
        coords = _solve_rational(basis, root)
        if coords is None:
            return None
        if any(c.denominator != 1 for c in coords):
            return None
        ints = [int(c) for c in coords]
        if all(c >= 0 for c in ints) or all(c <= 0 for c in ints):
            return ints
        return None

    def _is_positive(self, root):
        coords = self._base_coordinates(root)
        return coords is not None and all(c >= 0 for c in coords) and any(coords)

    # -- cache plumbing -----------------------------------------------------

    def _cached(self, key, builder):
        with self._lock:
            if key not in self._caches:
                self._caches[key] = builder()
            return self._caches[key]

    # -- element constructors --------------------------------------------------

    def identity(self):
        i = _identity(self.rank)
        return WeylElement(self, i, i, (0,) * self.rank)

    def translation(self, x):
        i = _identity(self.rank)
        return WeylElement(self, i, i, _tup(x))

    def simple_reflection(self, base_pos):
        """The finite simple reflection for base position ``base_pos``."""
        m = self._reflection_matrix(self.base[base_pos])
        return WeylElement(self, m, m, (0,) * self.rank)

    def finite_element(self, mat):
        """Wrap a matrix known to lie in W_o (validated by descent reduction)."""
        mat = tuple(_tup(r) for r in mat)
        w = WeylElement(self, mat, mat, (0,) * self.rank)  # matinv fixed below
        word = self._finite_descent_word(mat)
        inv = _identity(self.rank)
        for b in word:
            inv = _mat_mul(inv, self._reflection_matrix(self.base[b]))
        # mat = product of reflections along reversed(word); inverse is the
        # product in word order
        return WeylElement(self, mat, inv, (0,) * self.rank)

    def _finite_descent_word(self, mat):
        """Reduce a finite matrix to the identity by right descents.

        Returns the word (base positions) with mat * s_{b1} * ... * s_{bk} = 1;
        raises ValueError if the matrix is not in W_o.
        """
        d = self.rank
        word = []
        cur = mat
        guard = len(self.positive) + 1
        while cur != _identity(d):
            for pos, b in enumerate(self.base):
                img = _mat_vec(cur, self.roots[b])

                idx = self._index.get(img)
                if idx is not None and idx not in self._positive_set:
                    cur = _mat_mul(cur, self._reflection_matrix(b))
                    word.append(pos)
                    break
            else:
                raise ValueError("matrix is not in the finite Weyl group")
            guard -= 1
            if guard < 0:
                raise ValueError("matrix is not in the finite Weyl group")
        return word

    # -- basic numerics -----------------------------------------------------------

    def pair(self, x, coroot_index):
        return _dot(x, self.coroots[coroot_index])

    def is_dominant(self, x):
        return all(_dot(x, self.coroots[b]) >= 0 for b in self.base)

    def two_rho_coroot(self):
        acc = [0] * self.rank
        for i in self.positive:
            acc = [a + b for a, b in zip(acc, self.coroots[i])]
        return tuple(acc)

    def ell_x(self, x):
        """Number of positive roots with (x, a^) < 0 (the Ap.2 count)."""
        return sum(1 for i in self.positive if _dot(x, self.coroots[i]) < 0)

    def _length(self, w):
        tot = 0
        for i in self.positive:
            p = _dot(w.trans, self.coroots[i])
            img = _mat_vec(w.mat, self.roots[i])
            if self._index[img] in self._positive_set:
                tot += abs(p)
            else:
                tot += abs(1 + p)
        return tot

    # -- the generator set S -------------------------------------------------------

    def minimal_coroot_indices(self):
        """Indices of roots whose coroots are minimal for the dominance order."""

        def builder():
            simple_coroots = [self.coroots[b] for b in self.base]
            out = []
            for i, c in enumerate(self.coroots):
                minimal = True
                for j, c2 in enumerate(self.coroots):
                    if i == j:
                        continue
                    diff = [a - b for a, b in zip(c, c2)]
                    coords = _solve_rational(simple_coroots, diff)
                    if coords is not None and all(
                        x.denominator == 1 and x >= 0 for x in coords
                    ):
                        minimal = False
                        break
                if minimal:
                    out.append(i)
            return tuple(out)

        return self._cached("R_m", builder)

    def affine_generators(self):
        """The simple reflections of (W_aff, S): finite ones, then affine ones."""

        def builder():
            gens = []
            for pos, b in enumerate(self.base):
                gens.append(
                    AffineGenerator(len(gens), "finite", b, self.simple_reflection(pos))
                )
            for i in self.minimal_coroot_indices():
                m = self._reflection_matrix(i)
                elem = WeylElement(self, m, m, (0,) * self.rank) * self.translation(
                    self.roots[i]
                )
                gens.append(AffineGenerator(len(gens), "affine", i, elem))
            return tuple(gens)

        return self._cached("S", builder)

    def generator_by_element(self, elem):
        table = self._cached(
            "S_by_elem", lambda: {g.element: g for g in self.affine_generators()}
        )
        return table.get(elem)

    # -- Omega, the length-zero subgroup ----------------------------------------------

    def root_lattice_snf(self):
        def builder():
            if not self.roots:
                rows = [[0] * self.rank]
            else:
                rows = [list(r) for r in self.roots]
            return smith_normal_form(rows)

        return self._cached("snf", builder)

    def in_root_lattice(self, x):
        d_mat, _u, v, _vinv = self.root_lattice_snf()
        y = [_dot(x, col) for col in zip(*v)]  # x @ V
        r = min(len(d_mat), len(d_mat[0]) if d_mat else 0)
        for i in range(len(y)):
            di = d_mat[i][i] if i < r else 0
            if di:
                if y[i] % di:
                    return False
            elif y[i]:
                return False
        return True

    def quotient_representatives(self):
        """Lattice vectors generating X / Q(R)."""
        d_mat, _u, _v, vinv = self.root_lattice_snf()
        r = min(len(d_mat), len(d_mat[0]) if d_mat else 0)
        reps = []
        for i in range(self.rank):
            di = d_mat[i][i] if i < r else 0
            if di == 1:
                continue
            reps.append(_tup(vinv[i]))
        return reps

    def omega_generators(self):
        """Length-zero parts of translations by quotient generators."""

        def builder():
            out = []
            seen = set()
            for x in self.quotient_representatives():
                u, _aff, _word = omega_split(self.translation(x))
                for cand in (u, u.inverse()):
                    if not cand.is_identity() and cand not in seen:
                        seen.add(cand)
                        out.append(cand)
            return tuple(out)

        return self._cached("omega_gens", builder)

    # -- parameter classes ----------------------------------------------------------------

    def param_classes(self):
        """Partition of S into W-conjugacy classes."""

        def builder():
            gens = self.affine_generators()
            n = len(gens)
            parent = list(range(n))

            def find(i):
                while parent[i] != i:
                    parent[i] = parent[parent[i]]
                    i = parent[i]
                return i

            def union(i, j):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

            for i in range(n):
                for j in range(i + 1, n):
                    m = _product_order(gens[i].element, gens[j].element)
                    if m is not None and m % 2 == 1:
                        union(i, j)
            for u in self.omega_generators():
                uinv = u.inverse()
                for i, g in enumerate(gens):
                    conj = u * g.element * uinv
                    tgt = self.generator_by_element(conj)
                    if tgt is None:
                        raise AssertionError(
                            "length-zero conjugation left the generator set"
                        )
                    union(i, tgt.index)
            buckets = {}
            for i in range(n):
                buckets.setdefault(find(i), []).append(i)
            classes = []
            for cid, root in enumerate(sorted(buckets)):
                classes.append(ParamClass(cid, tuple(buckets[root])))
            return tuple(classes)

        return self._cached("classes", builder)

    def nclasses(self):
        return len(self.param_classes())

    def class_of_generator(self, gen_index):
        table = self._cached(
            "class_by_gen",
            lambda: {
                i: cls for cls in self.param_classes() for i in cls.members
            },
        )
        return table[gen_index]

    # -- the finite Weyl group -----------------------------------------------------------

    def weyl_group(self):
        """All of W_o as elements (BFS over simple reflections)."""

        def builder():
            gens = [self.simple_reflection(p) for p in range(len(self.base))]
            seen = {self.identity()}
            frontier = [self.identity()]
            while frontier:
                nxt = []
                for w in frontier:
                    for s in gens:
                        ws = w * s
                        if ws not in seen:
                            seen.add(ws)
                            nxt.append(ws)
                frontier = nxt
                if len(seen) > 4.1e4:
                    raise ConfigError("finite Weyl group too large to enumerate")
            return tuple(sorted(seen, key=WeylElement.sort_key))

        return self._cached("W_o", builder)

    def weyl_orbit(self, x):
        """The W_o-orbit of a lattice vector, sorted."""
        orbit = {_tup(x)}
        frontier = [_tup(x)]
        refl = [self._reflection_matrix(b) for b in self.base]
        while frontier:
            nxt = []
            for v in frontier:
                for m in refl:
                    img = _mat_vec(m, v)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        return sorted(orbit)

    # -- dominance helpers ------------------------------------------------------------------

    def dominant_regular(self):
        """A dominant vector with all simple pairings > 0 (for theta padding)."""

        def builder():
            if not self.base:
                return (0,) * self.rank
            for radius in range(1, 8):
                best = None
                for x in box_vectors(self.rank, radius):
                    if all(_dot(x, self.coroots[b]) > 0 for b in self.base):
                        key = (sum(abs(a) for a in x), x)
                        if best is None or key < best[0]:
                            best = (key, x)
                if best:
                    return best[1]
            raise ConfigError("no dominant regular vector found in search box")

        return self._cached("dom_reg", builder)

    def dominant_monoid_generators(self):
        """A finite generating set of the dominant monoid X_dom."""

        def builder():
            if self._dominant_gens is not None:
                return tuple(_tup(g) for g in self._dominant_gens)
            # generic fallback: irreducible dominant vectors in a small box,
            # plus +/- generators of the pairing-zero sublattice
            radius = 2
            dom = [
                x
                for x in box_vectors(self.rank, radius)
                if any(x) and self.is_dominant(x)
            ]
            dom_set = set(dom)
            gens = []
            for x in sorted(dom, key=lambda v: (sum(abs(a) for a in v), v)):
                reducible = False
                for a in dom_set:
                    b = tuple(p - q for p, q in zip(x, a))
                    if a != x and any(a) and b in dom_set and any(b):
                        reducible = True
                        break
                if not reducible:
                    gens.append(x)
            return tuple(gens)

        return self._cached("M_dom", builder)

    def translation_generators(self):
        """M_X: the W_o-orbit closure of the dominant monoid generators."""

        def builder():
            out = []
            seen = set()
            for g in self.dominant_monoid_generators():
                for v in self.weyl_orbit(g):
                    if v not in seen and any(v):
                        seen.add(v)
                        out.append(v)
            return tuple(sorted(seen))

        return self._cached("M_X", builder)

    # -- serialization --------------------------------------------------------------------------

    def to_json(self):
        return {
            "rank": self.rank,
            "roots": [list(r) for r in self.roots],
            "coroots": [list(c) for c in self.coroots],
            "base": list(self.base),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            int(data["rank"]),
            data["roots"],
            data["coroots"],
            data["base"],
            name=data.get("name"),
        )

    def element_from_json(self, data):
        mat = tuple(_tup(r) for r in data["finite"])
        trans = _tup(data["trans"])
        w = self.finite_element(mat)
        return w * self.translation(trans)

    def __repr__(self):
        return "BasedRootDatum(%s, rank=%d, roots=%d)" % (
            self.name,
            self.rank,
            len(self.roots),
        )


# ---------------------------------------------------------------------------
# free functions on elements


def length(w: WeylElement) -> int:
    return w.length


def omega_split(w: WeylElement):
    """Split ``w = u * w_aff`` with ``len(u) = 0``.

    Returns ``(u, w_aff, word)`` where ``word`` is a reduced word of
    ``w_aff`` as a tuple of generator indices (leftmost letter first),
    found by greedy right-descent with the lowest index winning ties.
    """
    if w._split is None:
        datum = w.datum
        gens = datum.affine_generators()
        cur = w
        rev = []
        while cur.length > 0:
            for g in gens:
                if (cur * g.element).length < cur.length:
                    cur = cur * g.element
                    rev.append(g.index)
                    break
            else:
                raise AssertionError("positive-length element with no descent")
        word = tuple(reversed(rev))
        waff = cur.inverse() * w
        w._split = (cur, waff, word)
    return w._split


def reduced_word(w_aff: WeylElement):
    """Reduced word of an element of W_aff (generator index tuple)."""
    datum = w_aff.datum
    if not datum.in_root_lattice(w_aff.trans):
        raise NotInWaff("translation part %r is not in the root lattice" % (w_aff.trans,))
    u, aff, word = omega_split(w_aff)
    if not u.is_identity():
        raise NotInWaff("element has a nontrivial length-zero part")
    return word


def word_product(datum, word):
    acc = datum.identity()
    gens = datum.affine_generators()
    for i in word:
        acc = acc * gens[i].element
    return acc


def bruhat_leq(w: WeylElement, wp: WeylElement) -> bool:
    """Chevalley-Bruhat order on W: equal length-zero parts, subword on W_aff."""
    u1, a1, _ = omega_split(w)
    u2, a2, _ = omega_split(wp)
    if u1 != u2:
        return False
    return _bruhat_leq_aff(w.datum, a1, a2)


def _bruhat_leq_aff(datum, a, b):
    cache = datum._cached("bruhat", dict)
    gens = datum.affine_generators()
    stack = [(a, b)]
    # iterative evaluation of the standard descent recursion, memoized
    def solve(a, b):
        pending = [(a, b)]
        while pending:
            x, y = pending[-1]
            key = (x, y)
            if key in cache:
                pending.pop()
                continue
            if x == y:
                cache[key] = True
                pending.pop()
                continue
            if x.length >= y.length:
                cache[key] = False
                pending.pop()
                continue
            # lowest-index right descent of y
            g = next(
                g for g in gens if (y * g.element).length < y.length
            )
            ys = y * g.element
            xs = x * g.element
            child = (xs, ys) if xs.length < x.length else (x, ys)
            if child in cache:
                cache[key] = cache[child]
                pending.pop()
            else:
                pending.append(child)
        return cache[(a, b)]

    return solve(a, b)


def bruhat_lower_set(w: WeylElement):
    """All elements <= w, via subwords of one reduced word (plus the Omega part)."""
    datum = w.datum
    u, aff, word = omega_split(w)
    gens = datum.affine_generators()
    seen = {datum.identity()}
    out = {datum.identity()}
    # dynamic subword closure: grow letter by letter
    for i in word:
        s = gens[i].element
        new = set(out)
        for x in out:
            new.add(x * s)
        out = new
    return sorted((u * x for x in out), key=WeylElement.sort_key)


def dominant_conjugator(datum, x):
    """The minimal ``u`` in W_o with ``u(x)`` dominant, and ``ell(x)``.

    Built by the greedy simple-descent loop; ``len(u)`` equals the number
    of positive roots with ``(x, a^) < 0``.
    """
    x = _tup(x)
    ellx = datum.ell_x(x)
    u = datum.identity()
    cur = x
    while True:
        for pos, b in enumerate(datum.base):
            if _dot(cur, datum.coroots[b]) < 0:
                s = datum.simple_reflection(pos)
                cur = s.act_linear(cur)
                u = s * u
                break
        else:
            break
    if u.length != ellx:
        raise AssertionError("descent loop produced a non-minimal conjugator")
    return u, ellx


def minuscule_cover(datum, w_o: WeylElement, radius: int):
    """Base points realizing length-additivity on sign-pattern regions.

    Returns a list of ``(x_i, RegionSpec)`` such that for every ``x`` in
    the radius box, the region containing ``x`` satisfies
    ``len(w_o e^x) == len(w_o e^{x_i}) + len(e^{x - x_i})``.  Every pair is
    verified by direct length evaluation; a failure raises
    :class:`CoverFailure`.
    """
    pos = list(datum.positive)
    eps = []
    for i in pos:
        img = _mat_vec(w_o.mat, datum.roots[i])
        eps.append(1 if datum._index[img] in datum._positive_set else -1)

    box = list(box_vectors(datum.rank, radius))
    patterns = {}
    for x in box:
        sig = tuple(_dot(x, datum.coroots[i]) >= 0 for i in pos)
        patterns.setdefault(sig, []).append(x)

    def ell_we(x):
        return (w_o * datum.translation(x)).length

    def ell_t(x):
        return datum.translation(x).length

    out = []
    for sig in sorted(patterns):
        region = patterns[sig]
        allowed = []
        for e, s in zip(eps, sig):
            if s:  # (x, a^) >= 0 on the region
                allowed.append((0,) if e > 0 else (0, -1))
            else:  # (x, a^) <= -1 on the region
                allowed.append((0, -1) if e > 0 else (-1,))
        candidates = []
        for z in box_vectors(datum.rank, min(radius, 2)):
            vals = [_dot(z, datum.coroots[i]) for i in pos]
            if all(v in a for v, a in zip(vals, allowed)):
                candidates.append(z)
        candidates.sort(key=lambda v: (sum(abs(a) for a in v), v))
        # fall back to region points themselves if no certified point exists
        candidates.extend(sorted(region, key=lambda v: (sum(abs(a) for a in v), v)))
        base_point = None
        for z in candidates:
            lz = ell_we(z)
            if all(
                ell_we(x) == lz + ell_t(tuple(a - b for a, b in zip(x, z)))
                for x in region
            ):
                base_point = z
                break
        if base_point is None:
            raise CoverFailure(
                "no additive base point for sign pattern %r of %r" % (sig, w_o)
            )
        out.append((base_point, RegionSpec(tuple(pos), sig)))
    return out


# ---------------------------------------------------------------------------
# enumeration helpers


def box_vectors(rank, radius):
    """All integer vectors with coordinates in [-radius, radius]."""
    return (
        tuple(v) for v in itertools.product(range(-radius, radius + 1), repeat=rank)
    )


def affine_ball(datum, max_length):
    """All of W_aff with length <= max_length (BFS), sorted."""
    gens = datum.affine_generators()
    seen = {datum.identity()}
    frontier = [datum.identity()]
    while frontier:
        nxt = []
        for w in frontier:
            if w.length >= max_length:
                continue
            for g in gens:
                ws = w * g.element
                if ws.length == w.length + 1 and ws not in seen:
                    seen.add(ws)
                    nxt.append(ws)
        frontier = nxt
    return sorted(seen, key=WeylElement.sort_key)


def omega_window(datum, window):
    """Products of length-zero generators with exponents in [-window, window]."""
    gens = datum.omega_generators()
    out = {datum.identity()}
    for g in gens:
        powers = [datum.identity()]
        p = g
        for _ in range(window):
            powers.append(p)
            powers.append(p.inverse())
            p = p * g
        out = {a * b for a in out for b in powers}
    return sorted(out, key=WeylElement.sort_key)


def weyl_ball(datum, max_length, window=1):
    """Elements u * w_aff with len <= max_length and u in an Omega window."""
    out = []
    for u in omega_window(datum, window):
        for a in affine_ball(datum, max_length):
            out.append(u * a)
    return sorted(set(out), key=WeylElement.sort_key)


def _product_order(a, b):
    prod = a * b
    acc = prod
    for n in range(1, _ORDER_CAP + 1):
        if acc.is_identity():
            return n
        acc = acc * prod
    return None


def _solve_rational(basis_rows, target):
    """Solve sum c_i basis_i = target over Q; None when inconsistent."""
    if not basis_rows:
        return None if any(target) else []
    ncols = len(target)
    aug = [
        [Fraction(b[j]) for b in basis_rows] + [Fraction(target[j])]
        for j in range(ncols)
    ]
    n = len(basis_rows)
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(aug)):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * n
    for row, p in zip(aug[:r], pivots):
        sol[p] = row[-1]
    for row in aug[r:]:
        if row[-1] != 0:
            return None
    # verify (handles inconsistent overdetermined systems)
    for j in range(ncols):
        if sum(sol[i] * basis_rows[i][j] for i in range(n)) != target[j]:
            return None
    return sol


# ---------------------------------------------------------------------------
# the general-linear datum


@functools.lru_cache(maxsize=None)
def gln_datum(n: int) -> BasedRootDatum:
    """The based root datum of GL(n): X = Z^n, roots ``e_j - e_i``.

    Simple roots are ``a_i = e_{i+1} - e_i`` (so dominant means weakly
    increasing coordinates), fundamental weights are ``(0^i, 1^{n-i})``,
    and the dominant monoid is generated by them together with
    ``+/-(1, ..., 1)``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    roots = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v = [0] * n
            v[j] = 1
            v[i] = -1
            roots.append(tuple(v))
    base = []
    for i in range(n - 1):
        v = [0] * n
        v[i + 1] = 1
        v[i] = -1
        base.append(roots.index(tuple(v)))
    omega = [tuple([0] * i + [1] * (n - i)) for i in range(1, n)]
    ones = (1,) * n
    dominant_gens = omega + [ones, tuple(-1 for _ in range(n))]
    return BasedRootDatum(
        n, roots, list(roots), base, name="gln%d" % n, dominant_gens=dominant_gens
    )


def gln_fundamental_weight(n: int, i: int):
    """``omega_i = (0^i, 1^{n-i})`` for 0 <= i <= n (with omega_0 all ones)."""
    if not 0 <= i <= n:
        raise ValueError("fundamental weight index out of range")
    return tuple([0] * i + [1] * (n - i))
