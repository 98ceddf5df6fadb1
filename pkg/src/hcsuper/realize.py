"""Supermatrix realizations of gl(m|n), sl(m|n) and osp(M|2n).

Root vectors are found as ad-h eigenvectors by solving the defining linear
conditions weight by weight; nothing is tabulated by hand.
"""
import json
from fractions import Fraction
from itertools import product

from .linalg import Coordinates, inverse, nullspace, rank
from .rootsys import FamilyError, Root, build_root_system, coroot_pair, fmt, pairing, sub

ZERO = Fraction(0)


class SuperMatrix:
    """Sparse ``(m|n)`` block matrix with rational entries."""

    __slots__ = ("m", "n", "entries")

    def __init__(self, m, n, entries=None):
        self.m, self.n = m, n
        self.entries = {k: Fraction(v) for k, v in (entries or {}).items() if v}

    @classmethod
    def unit(cls, m, n, i, j, c=1):
        return cls(m, n, {(i, j): c})

    @property
    def size(self):
        return self.m + self.n

    def _par(self, i):
        return 0 if i < self.m else 1

    @property
    def parity(self):
        """0 (even), 1 (odd) or ``None`` for a mixed matrix; zero counts as even."""
        ps = {self._par(i) ^ self._par(j) for i, j in self.entries}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def __add__(self, other):
        e = dict(self.entries)
        for k, v in other.entries.items():
            e[k] = e.get(k, ZERO) + v
        return SuperMatrix(self.m, self.n, e)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = Fraction(c)
        return SuperMatrix(self.m, self.n, {k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("block sizes differ")
        rows = {}
        for (i, k), a in other.entries.items():
            rows.setdefault(i, []).append((k, a))
        out = {}
        for (i, j), a in self.entries.items():
            for k, b in rows.get(j, ()):
                out[(i, k)] = out.get((i, k), ZERO) + a * b
        return SuperMatrix(self.m, self.n, out)

    def __eq__(self, other):
        return isinstance(other, SuperMatrix) and (self.m, self.n) == (other.m, other.n) and \
            self.entries == other.entries

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.entries.items())))

    def is_zero(self):
        return not self.entries

    def supertrace(self):
        return sum((v if i < self.m else -v for (i, j), v in self.entries.items() if i == j), ZERO)

    def rows(self):
        s = self.size
        return [[self.entries.get((i, j), ZERO) for j in range(s)] for i in range(s)]

    def flat(self):
        s = self.size
        return [self.entries.get((i, j), ZERO) for i in range(s) for j in range(s)]

    def __repr__(self):
        return "SuperMatrix(%d|%d, %r)" % (self.m, self.n, self.rows())


def supercommutator(x, y):
    px, py = x.parity, y.parity
    if px is None or py is None:
        raise ValueError("supercommutator needs homogeneous arguments")
    sign = -1 if px and py else 1
    return (x @ y) - (y @ x).scaled(sign)


def str_form(x, y):
    return (x @ y).supertrace()


class Realization:
    """A matrix realization with a weight-graded basis.

    ``cartan`` is a list of diagonal matrices; ``cartan_coords[i]`` is the
    vector ``c`` with ``mu(h_i) = sum_k mu_k c_k`` in family coordinates.
    ``root_vectors`` maps root coordinates to a spanning matrix of the root space.
    """

    def __init__(self, family, m, n, vec_weights, cartan, cartan_coords, root_vectors):
        self.family = family
        self.m, self.n = m, n
        self.vec_weights = vec_weights
        self.cartan = cartan
        self.cartan_coords = cartan_coords
        self.root_vectors = root_vectors
        self.sys = build_root_system(family)
        self.roots = sorted(root_vectors)
        self.basis = [("h", i) for i in range(len(cartan))] + [("x", r) for r in self.roots]
        self.index = {b: i for i, b in enumerate(self.basis)}
        self._hco = Coordinates(cartan_coords)
        self._table = None

    @property
    def dim(self):
        return len(self.basis)

    @property
    def rank(self):
        return len(self.cartan)

    def matrix(self, i):
        kind, key = self.basis[i]
        return self.cartan[key] if kind == "h" else self.root_vectors[key]

    def parity(self, i):
        kind, key = self.basis[i]
        return 0 if kind == "h" else int(self.sys.root(key).odd)

    def weight_of(self, i):
        kind, key = self.basis[i]
        return tuple([ZERO] * self.family.dim) if kind == "h" else key

    def cartan_element(self, coords):
        """The Cartan matrix whose coordinate vector is ``coords``."""
        c = self._hco(coords)
        out = SuperMatrix(self.m, self.n)
        for ci, h in zip(c, self.cartan):
            if ci:
                out = out + h.scaled(ci)
        return out

    def decompose(self, x):
        """Coordinates of a matrix in the basis, as a sparse dict."""
        out = {}
        diag = {}
        rest = {}
        for (i, j), v in x.entries.items():
            if i == j:
                diag[i] = v
            else:
                rest[(i, j)] = v
        if diag:
            coords = _diag_to_coords(self, diag)
            for i, c in enumerate(self._hco(coords)):
                if c:
                    out[i] = c
        # group off-diagonal entries by weight
        by_weight = {}
        for (i, j), v in rest.items():
            w = sub(self.vec_weights[i], self.vec_weights[j])
            by_weight.setdefault(w, {})[(i, j)] = v
        for w, ents in by_weight.items():
            if w not in self.root_vectors:
                raise ValueError("matrix has a component of non-root weight %r" % (w,))
            rv = self.root_vectors[w]
            k, v0 = next(iter(rv.entries.items()))
            c = ents.get(k, ZERO) / v0
            if rv.scaled(c).entries != ents:
                raise ValueError("matrix not in the realized algebra")
            out[self.index[("x", w)]] = c
        return out

    @property
    def table(self):
        """``table[i][j]`` is the sparse decomposition of ``[b_i, b_j]``."""
        if self._table is None:
            mats = [self.matrix(i) for i in range(self.dim)]
            self._table = [[self.decompose(supercommutator(a, b)) for b in mats] for a in mats]
        return self._table

    def bracket(self, i, j):
        return self.table[i][j]

    def to_json(self):
        triples = []
        for a in range(self.dim):
            for b in range(self.dim):
                out = self.table[a][b]
                if out:
                    triples.append({"a": a, "b": b,
                                    "out": [{"idx": k, "coeff": fmt(v)} for k, v in sorted(out.items())]})
        return json.dumps(triples, sort_keys=True)


def _diag_to_coords(real, diag):
    d = real.family.dim
    coords = [ZERO] * d
    for i, v in diag.items():
        w = real.vec_weights[i]
        nz = [k for k in range(d) if w[k]]
        if len(nz) == 1 and w[nz[0]] > 0:
            coords[nz[0]] = v
    return coords


def _vector_data(family):
    t = family.tag
    d = family.dim
    unit = lambda k, s=1: tuple(Fraction(s) if i == k else ZERO for i in range(d))  # noqa: E731
    if t == "A":
        M, N = family.m + 1, family.n + 1
        return M, N, [unit(k) for k in range(M + N)], None
    ne = family.n_eps
    nd = d - ne
    even = [unit(i) for i in range(ne)] + [unit(i, -1) for i in range(ne)]
    if t == "B":
        even.append(tuple([ZERO] * d))
    odd = [unit(ne + j) for j in range(nd)] + [unit(ne + j, -1) for j in range(nd)]
    M, N = len(even), len(odd)
    # invariant form: symmetric on the even block, skew on the odd block
    form = {}
    for i in range(ne):
        form[(i, ne + i)] = form[(ne + i, i)] = Fraction(1)
    if t == "B":
        form[(2 * ne, 2 * ne)] = Fraction(1)
    for j in range(nd):
        a, b = M + j, M + nd + j
        form[(a, b)] = Fraction(1)
        form[(b, a)] = Fraction(-1)
    return M, N, even + odd, form


def _solve_space(M, N, weights, form, p, w, traceless=False):
    """Matrices of parity ``p`` and weight ``w`` in the algebra."""
    s = M + N
    par = lambda i: 0 if i < M else 1  # noqa: E731
    unknowns = [(i, j) for i in range(s) for j in range(s)
                if par(i) ^ par(j) == p and sub(weights[i], weights[j]) == w]
    if not unknowns:
        return []
    col = {u: k for k, u in enumerate(unknowns)}
    rows = []
    if form is None:
        if p == 0 and not any(w) and traceless:
            rows.append([Fraction(1 if i < M else -1) if i == j else ZERO for (i, j) in unknowns])
    else:
        bcols = {}
        for (a, b), v in form.items():
            bcols.setdefault(a, []).append((b, v))
        brows = {}
        for (a, b), v in form.items():
            brows.setdefault(b, []).append((a, v))
        for u, v in product(range(s), repeat=2):
            row = [ZERO] * len(unknowns)
            # B(Xu, v) = sum_a X[a,u] B[a,v]
            for a, bv in brows.get(v, ()):
                k = col.get((a, u))
                if k is not None:
                    row[k] += bv
            # (-1)^{p|u|} B(u, Xv) = sum_b B[u,b] X[b,v]
            sign = -1 if (p and par(u)) else 1
            for b, bv in bcols.get(u, ()):
                k = col.get((b, v))
                if k is not None:
                    row[k] += sign * bv
            if any(row):
                rows.append(row)
    sols = nullspace(rows, len(unknowns)) if rows else nullspace([], len(unknowns))
    out = []
    for vec in sols:
        piv = next(x for x in vec if x)
        out.append(SuperMatrix(M, N, {u: x / piv for u, x in zip(unknowns, vec) if x}))
    return out


def realize_algebra(family, gl=False):
    """Realize ``family`` (A/B/C/D) and return a :class:`Realization`."""
    if not family.realized:
        raise FamilyError("%s has no matrix realization here" % family.label())
    M, N, weights, form = _vector_data(family)
    sys = build_root_system(family)
    zero = tuple([ZERO] * family.dim)
    if gl:
        if family.tag != "A":
            raise FamilyError("gl only applies to type A")
        cartan = [SuperMatrix.unit(M, N, k, k) for k in range(M + N)]
    else:
        cartan = _solve_space(M, N, weights, form, 0, zero, traceless=family.tag == "A")
    # candidate weights: differences of vector weights
    cand = {sub(weights[i], weights[j]) for i in range(M + N) for j in range(M + N)} - {zero}
    root_vectors = {}
    for w in sorted(cand):
        for p in (0, 1):
            sols = _solve_space(M, N, weights, form, p, w)
            if len(sols) > 1:
                raise AssertionError("root space %r has dimension %d" % (w, len(sols)))
            if sols:
                if w in root_vectors:
                    raise AssertionError("weight %r occurs in both parities" % (w,))
                root_vectors[w] = sols[0]
    real_cartan = []
    for h in cartan:
        if any(i != j for i, j in h.entries):
            raise AssertionError("non-diagonal zero-weight element")
        real_cartan.append(h)
    r = Realization(family, M, N, weights, real_cartan, [], root_vectors)
    r.cartan_coords = [_diag_to_coords(r, {i: v for (i, j), v in h.entries.items()}) for h in real_cartan]
    r._hco = Coordinates(r.cartan_coords)
    # diagonal matrices are determined by their coordinate vectors
    for h, c in zip(real_cartan, r.cartan_coords):
        rebuilt = {}
        for i, w in enumerate(weights):
            v = sum((a * b for a, b in zip(w, c)), ZERO)
            if v:
                rebuilt[(i, i)] = v
        if rebuilt != h.entries:
            raise AssertionError("Cartan element is not determined by its weights")
    if set(root_vectors) != {x.coords for x in sys.roots}:
        raise AssertionError("realized roots differ from the root system")
    for w, x in root_vectors.items():
        if x.parity != int(sys.root(w).odd):
            raise AssertionError("parity mismatch at %r" % (w,))
    return r


def eval_on_cartan(mu, coords):
    return sum((a * b for a, b in zip(mu, coords)), ZERO)


def coroot_coords(sys, alpha):
    """Coordinate vector of ``H_alpha`` (so ``mu(H_alpha) = coroot_pair(mu, alpha)``)."""
    a = alpha.coords if isinstance(alpha, Root) else tuple(alpha)
    d = sys.dim
    ga = [sum((sys.gram[i][k] * a[k] for k in range(d)), ZERO) for i in range(d)]
    nn = pairing(sys, a, a)
    if nn:
        ga = [2 * x / nn for x in ga]
    return tuple(ga)


def cartan_matrix(sys, simple):
    """``a_ij = alpha_j(H_i)``; isotropic rows are cleared of denominators."""
    simple = [s.coords if isinstance(s, Root) else tuple(s) for s in simple]
    if rank([list(s) for s in simple]) != len(simple):
        raise ValueError("simple roots are linearly dependent")
    out = []
    for ai in simple:
        row = [coroot_pair(sys, aj, ai) for aj in simple]
        if pairing(sys, ai, ai) == 0:
            den = 1
            for x in row:
                den = den * x.denominator // _gcd(den, x.denominator)
            row = [x * den for x in row]
        if any(x.denominator != 1 for x in row):
            raise ValueError("non-integral Cartan matrix row %r" % (row,))
        out.append([int(x) for x in row])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def chevalley_generators(real, simple):
    """``(e_i, f_i, h_i)`` matrices with ``[e_i, f_i] = h_i = H_{alpha_i}``."""
    gens = []
    for a in simple:
        a = a.coords if isinstance(a, Root) else tuple(a)
        e = real.root_vectors[a]
        f0 = real.root_vectors[tuple(-x for x in a)]
        h = real.cartan_element(coroot_coords(real.sys, a))
        b = supercommutator(e, f0)
        k, v = next(iter(h.entries.items()))
        t = v / b.entries[k]
        f = f0.scaled(t)
        if supercommutator(e, f) != h:
            raise AssertionError("[e, f] is not proportional to H_alpha")
        gens.append((e, f, h))
    return gens


def check_generator_relations(real, simple):
    """``[e_i,f_j] = delta_ij h_i``, ``[h_i,h_j] = 0``, ``[h_i,e_j] = a_ij e_j``, ``[h_i,f_j] = -a_ij f_j``."""
    simple = [simple_coords(s) for s in simple]
    gens = chevalley_generators(real, simple)
    for i, (ei, fi, hi) in enumerate(gens):
        for j, (ej, fj, hj) in enumerate(gens):
            aij = coroot_pair(real.sys, simple[j], simple[i])
            ef = supercommutator(ei, fj)
            if (ef != hi) if i == j else not ef.is_zero():
                return False
            if not supercommutator(hi, hj).is_zero():
                return False
            if supercommutator(hi, ej) != ej.scaled(aij) or supercommutator(hi, fj) != fj.scaled(-aij):
                return False
    return True


def simple_coords(s):
    return s.coords if isinstance(s, Root) else tuple(s)


def borel_dimension_check(family, P, real=None):
    """Whether ``h + n+(P)`` has dimension ``(dim g + dim h) / 2``."""
    real = real or realize_algebra(family)
    roots = [r.coords if isinstance(r, Root) else tuple(r) for r in P]
    mats = [h.flat() for h in real.cartan]
    for r in roots:
        if r not in real.root_vectors:
            return False
        mats.append(real.root_vectors[r].flat())
    dim_b = rank(mats)
    return 2 * dim_b == real.dim + real.rank


def is_subalgebra(real, coords_list, with_cartan=True):
    """Whether the span of the listed root spaces (plus ``h``) is bracket closed."""
    keep = {real.index[("x", tuple(c))] for c in coords_list}
    if with_cartan:
        keep |= {real.index[("h", i)] for i in range(real.rank)}
    for a in keep:
        for b in keep:
            if any(k not in keep for k in real.bracket(a, b)):
                return False
    return True


def super_jacobi_failures(real):
    """Number of basis triples violating the super Jacobi identity."""
    t = real.table
    n = real.dim
    par = [real.parity(i) for i in range(n)]

    def br(x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in t[i][j].items():
                    out[k] = out.get(k, ZERO) + a * b * c
        return {k: v for k, v in out.items() if v}

    bad = 0
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            sab = -1 if par[a] and par[b] else 1
            for c in range(n):
                lhs = br({a: 1}, t[b][c])
                rhs = br(ab, {c: 1})
                extra = br({b: 1}, t[a][c])
                for k, v in extra.items():
                    rhs[k] = rhs.get(k, ZERO) + sab * v
                rhs = {k: v for k, v in rhs.items() if v}
                if lhs != rhs:
                    bad += 1
    return bad


def super_antisymmetry_failures(real):
    n = real.dim
    bad = 0
    for a in range(n):
        for b in range(n):
            s = -1 if real.parity(a) and real.parity(b) else 1
            x = real.table[a][b]
            y = {k: -s * v for k, v in real.table[b][a].items()}
            if x != y:
                bad += 1
    return bad


def matrix_algebra_dimension(family):
    """``dim sl(M|N) = (M+N)^2 - 1`` and ``dim osp(M|2n) = M(M-1)/2 + n(2n+1) + 2Mn``."""
    M, N, _, _ = _vector_data(family)
    if family.tag == "A":
        return (M + N) ** 2 - 1
    n = N // 2
    return M * (M - 1) // 2 + n * (2 * n + 1) + M * N


def h_alpha(real, alpha):
    """The Cartan matrix ``h_a`` with ``str(h_a h) = a(h)`` for every ``h`` in ``h``."""
    hs = real.cartan
    if getattr(real, "_str_inverse", None) is None:
        real._str_inverse = inverse([[str_form(a, b) for b in hs] for a in hs])
    rhs = [eval_on_cartan(alpha, c) for c in real.cartan_coords]
    c = [sum((x * y for x, y in zip(row, rhs)), ZERO) for row in real._str_inverse]
    out = SuperMatrix(real.m, real.n)
    for ci, h in zip(c, hs):
        out = out + h.scaled(ci)
    return out


def structural_checks(real):
    """Items of the root-space structure theorem, checked in the realization.

    Returns a dict ``name -> bool``.
    """
    sys = real.sys
    roots = real.roots
    rootset = set(roots)
    zero = tuple([ZERO] * sys.dim)
    out = {}
    # (1), (2): h plus one-dimensional root spaces exhaust the algebra
    span = rank([real.matrix(i).flat() for i in range(real.dim)])
    out["decomposition"] = span == real.dim == matrix_algebra_dimension(real.family)
    out["root_spaces_one_dimensional"] = all(
        len(_solve_space(real.m, real.n, real.vec_weights, _vector_data(real.family)[3], int(sys.root(r).odd), r)) == 1
        for r in roots)
    # (3)
    ok = True
    for a in roots:
        for b in roots:
            s = tuple(x + y for x, y in zip(a, b))
            br = real.bracket(real.index[("x", a)], real.index[("x", b)])
            if s == zero:
                continue
            if s in rootset:
                ok = ok and set(br) == {real.index[("x", s)]}
            else:
                ok = ok and not br
    out["root_brackets"] = ok
    # (4)
    out["negation_closed"] = all(tuple(-x for x in r) in rootset for r in roots)
    # (5): str-form pairs g_a with g_-a only; nondegenerate on h
    ok = True
    for a in roots:
        xa = real.root_vectors[a]
        for b in roots:
            v = str_form(xa, real.root_vectors[b])
            if (v != 0) != (tuple(-x for x in b) == a):
                ok = False
        for h in real.cartan:
            if str_form(xa, h) != 0:
                ok = False
    hs = real.cartan
    ok = ok and rank([[str_form(a, b) for b in hs] for a in hs]) == len(hs)
    out["form_pairing"] = ok
    # (6)
    ok = True
    for a in roots:
        xa, xm = real.root_vectors[a], real.root_vectors[tuple(-x for x in a)]
        ok = ok and supercommutator(xa, xm) == h_alpha(real, a).scaled(str_form(xa, xm))
    out["bracket_is_h_alpha"] = ok
    # (7): induced form on h* is the root-system form up to one scalar, and W-invariant
    ratio = None
    ok = True
    for a in roots:
        ha = h_alpha(real, a)
        for b in roots:
            v = str_form(ha, h_alpha(real, b))
            w = pairing(sys, a, b)
            if (v == 0) != (w == 0):
                ok = False
            elif w:
                ratio = v / w if ratio is None else ratio
                ok = ok and v / w == ratio
    from .weyl import reflection_matrix
    for r in sys.even:
        s = reflection_matrix(sys, r)
        for a in roots:
            for b in roots:
                sa = tuple(sum((s[i][j] * a[j] for j in range(sys.dim)), ZERO) for i in range(sys.dim))
                sb = tuple(sum((s[i][j] * b[j] for j in range(sys.dim)), ZERO) for i in range(sys.dim))
                ok = ok and pairing(sys, sa, sb) == pairing(sys, a, b)
    out["form_matches_and_invariant"] = ok
    out["form_scalar"] = ratio
    # (8)
    out["doubling_law"] = doubling_law(sys)
    return out


def doubling_law(sys):
    roots = {r.coords: r for r in sys.roots}
    for c, r in roots.items():
        multiples = [k for k in (-4, -3, -2, 2, 3, 4) if tuple(k * x for x in c) in roots]
        nonisotropic_odd = r.odd and pairing(sys, c, c) != 0
        if nonisotropic_odd:
            if sorted(multiples) != [-2, 2]:
                return False
        elif multiples:
            return False
    for c in roots:
        for k in (Fraction(1, 2), Fraction(-1, 2)):
            h = tuple(k * x for x in c)
            if h in roots and not (roots[h].odd and pairing(sys, h, h) != 0):
                return False
    return True
