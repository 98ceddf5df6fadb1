"""Exact rational linear algebra.

Everything here works on lists of :class:`fractions.Fraction` (ints are
accepted and promoted).  Matrices are lists of rows.
"""
from fractions import Fraction
from math import gcd


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(m):
    """Reduced row echelon form.  Returns ``(rref, pivot_columns)``."""
    m = to_fractions(m)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                ri = m[i]
                rr = m[r]
                m[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(m):
    return len(row_echelon(m)[1])


def nullspace(m, n_cols=None):
    """Basis of ``{x : m x = 0}`` as a list of vectors."""
    if not m:
        if n_cols is None:
            raise ValueError("need n_cols for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    n_cols = len(m[0])
    rref, pivots = row_echelon(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution of ``a x = b`` or ``None`` when inconsistent."""
    n_cols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rref, pivots = row_echelon(aug)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for row, pc in zip(rref, pivots):
        x[pc] = row[-1]
    return x


def determinant(m):
    m = to_fractions(m)
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def transpose(m):
    return [list(col) for col in zip(*m)]


class Coordinates:
    """Coordinates with respect to a fixed family of independent vectors.

    ``Coordinates(vectors)(v)`` returns the coefficient list ``c`` with
    ``v == sum(c_i * vectors_i)`` or raises ``ValueError`` if ``v`` is not
    in their span.
    """

    def __init__(self, vectors):
        self.vectors = [[Fraction(x) for x in v] for v in vectors]
        k = len(self.vectors)
        if k == 0:
            self._pivots, self._inverse = [], []
            self.dim = 0
            return
        self.dim = len(self.vectors[0])
        cols = transpose(self.vectors)  # dim x k
        rref, pivots = row_echelon(transpose(cols))  # row space of the vectors
        if len(pivots) != k:
            raise ValueError("vectors are linearly dependent")
        self._pivots = pivots
        sub = [[cols[p][j] for j in range(k)] for p in pivots]
        self._inverse = inverse(sub)

    def __call__(self, v):
        v = [Fraction(x) for x in v]
        k = len(self.vectors)
        if k == 0:
            if any(v):
                raise ValueError("vector not in span")
            return []
        rhs = [v[p] for p in self._pivots]
        c = [sum((self._inverse[i][j] * rhs[j] for j in range(k)), Fraction(0)) for i in range(k)]
        for i in range(self.dim):
            if sum((c[j] * self.vectors[j][i] for j in range(k)), Fraction(0)) != v[i]:
                raise ValueError("vector not in span")
        return c


def inverse(m):
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    rref, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rref]


def primitive(v):
    """Positive rescaling of a rational vector to a primitive integer vector."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


class Infeasible(Exception):
    pass


def strict_cone_point(constraints, dim):
    """Find ``x`` with ``a . x > 0`` for every ``a`` in ``constraints``.

    Fourier-Motzkin elimination over the rationals.  Constraints are kept
    as primitive integer directions, so duplicated combinations collapse.
    Raises :class:`Infeasible` when the open cone is empty.
    """
    system = {primitive(a) for a in constraints}
    if any(not any(a) for a in system):
        raise Infeasible("zero constraint")
    levels = []
    for k in range(dim):
        levels.append(system)
        pos = [a for a in system if a[k] > 0]
        neg = [a for a in system if a[k] < 0]
        nxt = {a for a in system if a[k] == 0}
        for p in pos:
            for q in neg:
                comb = tuple(p[i] * -q[k] + q[i] * p[k] for i in range(dim))
                if not any(comb):
                    raise Infeasible("contradiction while eliminating coordinate %d" % k)
                nxt.add(primitive(comb))
        system = nxt
    x = [Fraction(0)] * dim
    for k in reversed(range(dim)):
        lo = hi = None
        for a in levels[k]:
            if a[k] == 0:
                continue
            rest = sum((a[i] * x[i] for i in range(k + 1, dim)), Fraction(0))
            bound = -rest / a[k]
            if a[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            if not lo < hi:
                raise Infeasible("empty interval in back substitution")
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = Fraction(int(lo // 1) + 1)
        elif hi is not None:
            x[k] = Fraction(-int((-hi) // 1) - 1)
    return x
