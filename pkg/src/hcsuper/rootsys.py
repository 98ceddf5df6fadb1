"""Root systems of the basic classical Lie superalgebras.

Weights are tuples of :class:`~fractions.Fraction` in a family-fixed basis:

* ``A(m,n)`` (that is ``sl(m+1|n+1)``): ``eps_1..eps_{m+1}, delta_1..delta_{n+1}``
* ``B(m,n)``, ``D(m,n)``: ``eps_1..eps_m, delta_1..delta_n``
* ``C(n)`` (``osp(2|2n-2)``): ``eps, delta_1..delta_{n-1}``
* ``D(2,1;alpha)``: ``eps_1, eps_2, eps_3``
* ``F(4)``: ``eps_1, eps_2, eps_3, delta``
* ``G(3)``: ``eps_1, eps_2, delta`` with ``eps_3 = -eps_1 - eps_2``
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .linalg import determinant

FAMILY_TAGS = ("A", "B", "C", "D", "D21a", "F4", "G3")


class FamilyError(ValueError):
    pass


def frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def fmt(x):
    """Canonical ``p/q`` string of a rational."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def weight(*coords):
    return tuple(frac(c) for c in coords)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def neg(u):
    return tuple(-a for a in u)


def scale(c, u):
    c = Fraction(c)
    return tuple(c * a for a in u)


def is_zero(u):
    return not any(u)


@dataclass(frozen=True)
class Family:
    tag: str
    m: int = 0
    n: int = 0
    alpha: Fraction = None

    def __post_init__(self):
        t, m, n = self.tag, self.m, self.n
        if t not in FAMILY_TAGS:
            raise FamilyError("unknown family %r" % (t,))
        if t == "A":
            if m < 0 or n < 0:
                raise FamilyError("A(m,n) needs m, n >= 0")
            if m == n:
                raise FamilyError("A(n,n) is excluded")
        elif t == "B":
            if m < 0 or n < 1:
                raise FamilyError("B(m,n) needs m >= 0, n >= 1")
        elif t == "C":
            if n < 2:
                raise FamilyError("C(n) needs n >= 2")
        elif t == "D":
            if m < 2 or n < 1:
                raise FamilyError("D(m,n) needs m >= 2, n >= 1")
        elif t == "D21a":
            if self.alpha is None:
                raise FamilyError("D(2,1;alpha) needs alpha")
            a = frac(self.alpha)
            object.__setattr__(self, "alpha", a)
            if a in (0, -1):
                raise FamilyError("D(2,1;alpha) needs alpha not in {0, -1}")
        if t != "D21a" and self.alpha is not None:
            raise FamilyError("alpha only applies to D(2,1;alpha)")

    @property
    def dim(self):
        t = self.tag
        if t == "A":
            return self.m + self.n + 2
        if t in ("B", "D"):
            return self.m + self.n
        if t == "C":
            return self.n
        if t == "D21a":
            return 3
        if t == "F4":
            return 4
        return 3

    @property
    def params(self):
        if self.tag in ("A", "B", "D"):
            return [self.m, self.n]
        if self.tag == "C":
            return [self.n]
        return []

    @property
    def realized(self):
        return self.tag in ("A", "B", "C", "D")

    @property
    def n_eps(self):
        """Number of epsilon coordinates (the rest are delta coordinates)."""
        t = self.tag
        if t == "A":
            return self.m + 1
        if t in ("B", "D"):
            return self.m
        if t == "C":
            return 1
        if t == "D21a":
            return 3
        if t == "F4":
            return 3
        return 2

    def label(self):
        t = self.tag
        if t in ("A", "B", "D"):
            return "%s(%d,%d)" % (t, self.m, self.n)
        if t == "C":
            return "C(%d)" % self.n
        if t == "D21a":
            return "D(2,1;%s)" % fmt(self.alpha)
        return {"F4": "F(4)", "G3": "G(3)"}[t]

    def coordinate_names(self):
        t = self.tag
        if t == "C":
            return ["e"] + ["d%d" % j for j in range(1, self.n)]
        if t == "F4":
            return ["e1", "e2", "e3", "d"]
        if t == "G3":
            return ["e1", "e2", "d"]
        return ["e%d" % i for i in range(1, self.n_eps + 1)] + [
            "d%d" % j for j in range(1, self.dim - self.n_eps + 1)
        ]

    def normalize(self, coords):
        """Parse user coordinates; G(3) also accepts ``(e1, e2, e3, d)``."""
        coords = [frac(c) for c in coords]
        if self.tag == "G3" and len(coords) == 4:
            a1, a2, a3, b = coords
            coords = [a1 - a3, a2 - a3, b]
        if len(coords) != self.dim:
            raise FamilyError("%s weights have %d coordinates, got %d" % (self.label(), self.dim, len(coords)))
        return tuple(coords)


def parse_family(tag, m=0, n=0, alpha=None):
    return Family(tag, int(m), int(n), None if alpha is None else frac(alpha))


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple
    odd: bool = False

    @property
    def parity(self):
        return "odd" if self.odd else "even"

    def __neg__(self):
        return Root(neg(self.coords), self.odd)


def _gram(family):
    d = family.dim
    g = [[Fraction(0)] * d for _ in range(d)]
    t = family.tag
    if t in ("A", "B", "C", "D"):
        ne = family.n_eps
        for i in range(d):
            g[i][i] = Fraction(1 if i < ne else -1)
    elif t == "D21a":
        a = family.alpha
        g[0][0], g[1][1], g[2][2] = -(1 + a), Fraction(1), a
    elif t == "F4":
        for i in range(3):
            g[i][i] = Fraction(1)
        g[3][3] = Fraction(-3)
    else:
        g[0][0] = g[1][1] = Fraction(2)
        g[0][1] = g[1][0] = Fraction(-1)
        g[2][2] = Fraction(-2)
    return tuple(tuple(row) for row in g)


def _unit(d, i, c=1):
    v = [Fraction(0)] * d
    v[i] = Fraction(c)
    return v


def _combo(d, *terms):
    v = [Fraction(0)] * d
    for c, i in terms:
        v[i] += Fraction(c)
    return tuple(v)


def _roots(family):
    t, d = family.tag, family.dim
    even, odd = set(), set()
    if t == "A":
        M = family.m + 1
        N = family.n + 1
        for i, j in product(range(M), repeat=2):
            if i != j:
                even.add(_combo(d, (1, i), (-1, j)))
        for i, j in product(range(N), repeat=2):
            if i != j:
                even.add(_combo(d, (1, M + i), (-1, M + j)))
        for i, j in product(range(M), range(N)):
            odd.add(_combo(d, (1, i), (-1, M + j)))
            odd.add(_combo(d, (-1, i), (1, M + j)))
    elif t in ("B", "C", "D"):
        ne = family.n_eps
        nd = d - ne
        eps = range(ne)
        dl = [ne + j for j in range(nd)]
        if t != "C":
            for i, j in combinations(eps, 2):
                for si, sj in product((1, -1), repeat=2):
                    even.add(_combo(d, (si, i), (sj, j)))
            if t == "B":
                for i in eps:
                    for s in (1, -1):
                        even.add(_combo(d, (s, i)))
        for i, j in combinations(dl, 2):
            for si, sj in product((1, -1), repeat=2):
                even.add(_combo(d, (si, i), (sj, j)))
        for i in dl:
            for s in (1, -1):
                even.add(_combo(d, (2 * s, i)))
        for i in eps:
            for j in dl:
                for si, sj in product((1, -1), repeat=2):
                    odd.add(_combo(d, (si, i), (sj, j)))
        if t == "B":
            for j in dl:
                for s in (1, -1):
                    odd.add(_combo(d, (s, j)))
    elif t == "D21a":
        for i in range(3):
            for s in (1, -1):
                even.add(_combo(d, (2 * s, i)))
        for signs in product((1, -1), repeat=3):
            odd.add(_combo(d, *zip(signs, range(3))))
    elif t == "F4":
        for i, j in combinations(range(3), 2):
            for si, sj in product((1, -1), repeat=2):
                even.add(_combo(d, (si, i), (sj, j)))
        for i in range(3):
            for s in (1, -1):
                even.add(_combo(d, (s, i)))
        for s in (1, -1):
            even.add(_combo(d, (s, 3)))
        half = Fraction(1, 2)
        for signs in product((half, -half), repeat=4):
            odd.add(_combo(d, *zip(signs, range(4))))
    else:
        # G(3): eps_3 = -eps_1 - eps_2
        e = [_combo(d, (1, 0)), _combo(d, (1, 1)), _combo(d, (-1, 0), (-1, 1))]
        dd = _combo(d, (1, 2))
        for v in e:
            even.add(v)
            even.add(neg(v))
        for i, j in product(range(3), repeat=2):
            if i != j:
                even.add(sub(e[i], e[j]))
        even.add(scale(2, dd))
        even.add(scale(-2, dd))
        for s in (1, -1):
            odd.add(scale(s, dd))
            for v in e:
                odd.add(add(scale(s, dd), v))
                odd.add(add(scale(s, dd), neg(v)))
    overlap = even & odd
    assert not overlap, overlap
    return frozenset(Root(v, False) for v in even) | frozenset(Root(v, True) for v in odd)


@dataclass(frozen=True)
class SuperRootSystem:
    family: Family
    gram: tuple
    roots: frozenset
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {r.coords: r for r in self.roots})

    @property
    def dim(self):
        return self.family.dim

    @property
    def even(self):
        return frozenset(r for r in self.roots if not r.odd)

    @property
    def odd(self):
        return frozenset(r for r in self.roots if r.odd)

    def root(self, coords):
        """The root with the given coordinates, or ``None``."""
        return self._index.get(tuple(coords))

    def __contains__(self, coords):
        if isinstance(coords, Root):
            return self._index.get(coords.coords) == coords
        return tuple(coords) in self._index

    def sorted_roots(self):
        return sorted(self.roots, key=lambda r: (r.odd, r.coords))

    def isotropic_roots(self):
        return sorted(r for r in self.roots if is_isotropic(self, r))


def build_root_system(family):
    return SuperRootSystem(family, _gram(family), _roots(family))


def pairing(sys, lam, mu):
    d = sys.dim
    if len(lam) != d or len(mu) != d:
        raise ValueError("weight dimension mismatch: expected %d" % d)
    g = sys.gram
    return sum((lam[i] * g[i][j] * mu[j] for i in range(d) for j in range(d) if g[i][j]), Fraction(0))


def _as_root(sys, gamma):
    coords = gamma.coords if isinstance(gamma, Root) else tuple(gamma)
    r = sys.root(coords)
    if r is None:
        raise ValueError("%r is not a root of %s" % (coords, sys.family.label()))
    return r


def coroot_pair(sys, lam, gamma):
    """``lam(H_gamma)``; for isotropic ``gamma`` this is ``(lam, gamma)``."""
    r = _as_root(sys, gamma)
    nn = pairing(sys, r.coords, r.coords)
    p = pairing(sys, lam, r.coords)
    if nn == 0:
        return p
    return 2 * p / nn


def is_isotropic(sys, gamma):
    r = _as_root(sys, gamma)
    return pairing(sys, r.coords, r.coords) == 0


def is_isotropic_combinatorial(sys, gamma):
    r = _as_root(sys, gamma)
    return r.odd and scale(2, r.coords) not in sys


def gram_determinant(sys):
    return determinant([list(row) for row in sys.gram])


def to_json(sys):
    fam = sys.family
    out = {"family": fam.tag, "params": fam.params}
    if fam.tag == "D21a":
        out["alpha"] = fmt(fam.alpha)
    out["gram"] = [[fmt(x) for x in row] for row in sys.gram]
    out["roots"] = [{"coords": [fmt(x) for x in r.coords], "parity": r.parity} for r in sys.sorted_roots()]
    return out


def from_json(data):
    tag = data["family"]
    params = data.get("params", [])
    if tag in ("A", "B", "D"):
        fam = Family(tag, params[0], params[1])
    elif tag == "C":
        fam = Family(tag, 0, params[0])
    else:
        fam = Family(tag, alpha=frac(data["alpha"]) if "alpha" in data else None)
    gram = tuple(tuple(frac(x) for x in row) for row in data["gram"])
    roots = frozenset(Root(tuple(frac(x) for x in r["coords"]), r["parity"] == "odd") for r in data["roots"])
    return SuperRootSystem(fam, gram, roots)
