"""Sparse multivariate polynomials with rational coefficients."""
from fractions import Fraction


class SymPoly:
    """Polynomial in ``nvars`` variables, stored as ``{exponents: coeff}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for k, v in (terms or {}).items():
            v = Fraction(v)
            if v:
                self.terms[tuple(k)] = v

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {tuple([0] * nvars): c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs, const=0):
        n = len(coeffs)
        p = cls.const(n, const)
        for i, c in enumerate(coeffs):
            if c:
                p = p + cls.var(n, i) * c
        return p

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.const(self.nvars, other)
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other):
        return other if isinstance(other, SymPoly) else SymPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return SymPoly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            c = Fraction(other)
            return SymPoly(self.nvars, {k: v * c for k, v in self.terms.items()})
        t = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                t[k] = t.get(k, 0) + va * vb
        return SymPoly(self.nvars, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = SymPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, point):
        total = Fraction(0)
        for k, v in self.terms.items():
            term = v
            for x, e in zip(point, k):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def substitute(self, images):
        """Replace variable ``i`` by the polynomial ``images[i]`` (all in one ring)."""
        n = images[0].nvars
        out = SymPoly(n)
        powers = [{0: SymPoly.const(n, 1)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        for k, v in self.terms.items():
            term = SymPoly.const(n, v)
            for i, e in enumerate(k):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def linear_change(self, mat):
        """``x -> mat x``: the polynomial ``lam -> self(mat lam)``."""
        n = self.nvars
        support = [[j for j, c in enumerate(row) if c] for row in mat]
        if all(len(sp) == 1 for sp in support) and len({sp[0] for sp in support}) == n:
            # signed permutation: move exponents, no expansion needed
            t = {}
            for e, v in self.terms.items():
                new = [0] * n
                c = v
                for i, ei in enumerate(e):
                    if ei:
                        j = support[i][0]
                        new[j] += ei
                        c *= Fraction(mat[i][j]) ** ei
                t[tuple(new)] = t.get(tuple(new), 0) + c
            return SymPoly(n, t)
        images = [SymPoly.linear(list(row)) for row in mat]
        return self.substitute(images) if images else SymPoly(n, dict(self.terms))

    def derivative(self, i):
        t = {}
        for k, v in self.terms.items():
            if k[i]:
                e = list(k)
                e[i] -= 1
                t[tuple(e)] = v * k[i]
        return SymPoly(self.nvars, t)

    def directional_derivative(self, v):
        out = SymPoly(self.nvars)
        for i, c in enumerate(v):
            if c:
                out = out + self.derivative(i) * c
        return out

    def eliminate(self, k, coeffs):
        """Substitute ``x_k = sum_j coeffs[j] x_j`` (``coeffs[k]`` ignored)."""
        lin = SymPoly.linear([Fraction(0) if j == k else Fraction(c) for j, c in enumerate(coeffs)])
        powers = [SymPoly.const(self.nvars, 1)]
        out = {}
        for e, v in self.terms.items():
            p = e[k]
            while len(powers) <= p:
                powers.append(powers[-1] * lin)
            rest = list(e)
            rest[k] = 0
            for pe, pv in powers[p].terms.items():
                key = tuple(a + b for a, b in zip(rest, pe))
                out[key] = out.get(key, 0) + v * pv
        return SymPoly(self.nvars, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def __repr__(self):
        return "SymPoly(%d, %r)" % (self.nvars, dict(self.sorted_terms()))
