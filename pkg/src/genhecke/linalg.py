"""Small exact linear algebra over the package's scalar rings.

Everything here is deliberately naive: matrices are lists of lists, and
dimensions stay in the single or low double digits.  A "ring handle" is
any object with attributes ``zero``/``one`` and methods ``integer``,
``is_zero``, and (for fields) ``invert``; the scalar objects themselves
carry ``+``, ``-``, ``*``.
"""

from __future__ import annotations


# ---------------------------------------------------------------------------
# integer Smith normal form (with transforms), used for lattice quotients


def smith_normal_form(rows):
    """Diagonalize an integer matrix: returns ``(D, U, V, Vinv)`` with
    ``U @ A @ V == D``, ``U`` and ``V`` unimodular, and the invariant
    factors ``D[i][i]`` successively dividing each other."""
    a = [list(r) for r in rows]
    m = len(a)
    d = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(d)] for i in range(d)]
    vinv = [[int(i == j) for j in range(d)] for i in range(d)]

    def row_op(i, j, c):  # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_op(i, j, c):  # col_i += c * col_j ; Vinv gets the inverse op
        for r in a:
            r[i] += c * r[j]
        for r in v:
            r[i] += c * r[j]
        vinv[j] = [x - c * y for x, y in zip(vinv[j], vinv[i])]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_neg(i):
        for r in a:
            r[i] = -r[i]
        for r in v:
            r[i] = -r[i]
        vinv[i] = [-x for x in vinv[i]]

    t = 0
    while t < min(m, d):
        # find a pivot
        piv = None
        for i in range(t, m):
            for j in range(t, d):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear column t with row ops, column t with col ops
            again = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        again = True
            for j in range(t + 1, d):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        again = True
            if not again:
                break
        if a[t][t] < 0:
            col_neg(t)
        t += 1

    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(min(m, d) - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if x and y % x:
                # standard trick: add col i+1 to col i, then re-reduce
                col_op(i, i + 1, 1)
                _gcd_reduce(a, u, v, vinv, i)
                changed = True
    return a, u, v, vinv


def _gcd_reduce(a, u, v, vinv, t):
    """Re-diagonalize the trailing block after a divisibility fixup."""
    m, d = len(a), len(a[0])

    def row_op(i, j, c):
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, c):
        for r in a:
            r[i] += c * r[j]
        for r in v:
            r[i] += c * r[j]
        vinv[j] = [x - c * y for x, y in zip(vinv[j], vinv[i])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    while True:
        again = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, -q)
                if a[i][t]:
                    row_swap(t, i)
                    again = True
        for j in range(t + 1, d):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_op(j, t, -q)
                if a[t][j]:
                    col_swap(t, j)
                    again = True
        if not again:
            return


# ---------------------------------------------------------------------------
# generic matrices over a ring handle


def identity_matrix(ring, n):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def zero_matrix(ring, rows, cols):
    return [[ring.zero for _ in range(cols)] for _ in range(rows)]


def mat_mul(ring, A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if k else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero
            for t in range(k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(ring, A, x):
    out = []
    for row in A:
        acc = ring.zero
        for a, b in zip(row, x):
            acc = acc + a * b
        out.append(acc)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * a for a in row] for row in A]


def mat_eq(ring, A, B):
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if not ring.is_zero(a - b):
                return False
    return True


def transpose(A):
    return [list(col) for col in zip(*A)]


def charpoly(ring, A):
    """Characteristic polynomial of ``A`` by the division-free Berkowitz
    algorithm; returns coefficients ``[c_0, ..., c_n]`` with
    ``det(x*I - A) = sum c_j x^j`` and ``c_n = 1``."""
    n = len(A)
    if n == 0:
        return [ring.one]
    vec = [ring.one, -A[0][0]]
    for i in range(1, n):
        r = A[i][:i]
        c = [A[j][i] for j in range(i)]
        sub = [row[:i] for row in A[:i]]
        col = [ring.one, -A[i][i]]
        cur = c
        for _ in range(i):
            acc = ring.zero
            for x, y in zip(r, cur):
                acc = acc + x * y
            col.append(-acc)
            cur = mat_vec(ring, sub, cur)
        newvec = []
        for row_i in range(i + 2):
            acc = ring.zero
            for col_i in range(min(row_i, len(vec) - 1) + 1):
                if row_i - col_i < len(col):
                    acc = acc + col[row_i - col_i] * vec[col_i]
            newvec.append(acc)
        vec = newvec
    # vec[j] is the coefficient of x^(n-j)
    return list(reversed(vec))


# ---------------------------------------------------------------------------
# elimination over a field handle (needs ``invert``)


def rref(ring, rows):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if not ring.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.invert(rows[r][c])
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not ring.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(ring, rows):
    return len(rref(ring, rows)[0])


def nullspace(ring, A):
    """Basis of the right kernel of ``A`` (list of vectors)."""
    if not A:
        return []
    ncols = len(A[0])
    rows, pivots = rref(ring, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [ring.zero] * ncols
        vec[f] = ring.one
        for r, p in zip(rows, pivots):
            vec[p] = -r[f]
        basis.append(vec)
    return basis


def eigenspace(ring, M, lam):
    n = len(M)
    A = [[M[i][j] - (lam if i == j else ring.zero) for j in range(n)] for i in range(n)]
    return nullspace(ring, A)


def poly_eval(ring, coeffs, x):
    acc = ring.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def charpoly_roots_in_field(field, coeffs):
    """All roots (with multiplicity ignored) of a monic polynomial in F_{p^k}."""
    return [x for x in field.elements() if poly_eval(field, coeffs, x).is_zero()]


# ---------------------------------------------------------------------------
# fractions over an integral domain (for rank work over Laurent rings)


class FracElement:
    __slots__ = ("ring", "num", "den")

    def __init__(self, ring, num, den):
        self.ring = ring
        self.num = num
        self.den = den

    def _lift(self, other):
        if isinstance(other, FracElement):
            return other
        return FracElement(self.ring, other, self.ring.base.one)

    def __add__(self, other):
        other = self._lift(other)
        return FracElement(
            self.ring, self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        other = self._lift(other)
        return FracElement(
            self.ring, self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return FracElement(self.ring, -self.num, self.den)

    def __mul__(self, other):
        other = self._lift(other)
        return FracElement(self.ring, self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        other = self._lift(other)
        return self.ring.base.is_zero(self.num * other.den - other.num * self.den)

    def __repr__(self):
        return "(%r)/(%r)" % (self.num, self.den)


class FractionField:
    """Fractions of an integral domain, without normalization.

    Only suitable for short computations (ranks, small solves); numerators
    and denominators grow, but every comparison is exact.
    """

    def __init__(self, base_ring):
        self.base = base_ring
        self.zero = FracElement(self, base_ring.zero, base_ring.one)
        self.one = FracElement(self, base_ring.one, base_ring.one)

    def integer(self, n):
        return FracElement(self, self.base.integer(n), self.base.one)

    def embed(self, a):
        return FracElement(self, a, self.base.one)

    def is_zero(self, a):
        return self.base.is_zero(a.num)

    def invert(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero fraction")
        return FracElement(self, a.den, a.num)


class RationalRing:
    """Handle for stdlib :class:`fractions.Fraction` scalars."""

    def __init__(self):
        from fractions import Fraction

        self.zero = Fraction(0)
        self.one = Fraction(1)

    def integer(self, n):
        from fractions import Fraction

        return Fraction(n)

    def is_zero(self, a):
        return a == 0

    def invert(self, a):
        return 1 / a
