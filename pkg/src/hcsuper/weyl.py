"""Finite reflection groups acting on weight coordinates."""
from collections import deque
from fractions import Fraction

from .rootsys import Root, pairing


def reflection_matrix(sys, alpha):
    """Matrix of ``x -> x - 2(x,a)/(a,a) a`` acting on coordinate columns."""
    a = alpha.coords if isinstance(alpha, Root) else tuple(alpha)
    nn = pairing(sys, a, a)
    if nn == 0:
        raise ValueError("cannot reflect in an isotropic root")
    d = sys.dim
    ga = [sum((sys.gram[j][k] * a[k] for k in range(d)), Fraction(0)) for j in range(d)]
    return tuple(
        tuple(Fraction(int(i == j)) - 2 * a[i] * ga[j] / nn for j in range(d)) for i in range(d)
    )


def apply(mat, v):
    return tuple(sum((row[j] * v[j] for j in range(len(v)) if row[j]), Fraction(0)) for row in mat)


def compose(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)) for i in range(n)
    )


def identity(d):
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


class WeylGroup:
    """Group generated by reflections in ``generators`` (a list of roots).

    Elements are enumerated breadth first, so ``sign(w)`` (the determinant)
    is the parity of the word length at which ``w`` is first reached.
    """

    def __init__(self, sys, generators, limit=100000):
        self.sys = sys
        self.roots = [g.coords if isinstance(g, Root) else tuple(g) for g in generators]
        self.gens = [reflection_matrix(sys, r) for r in self.roots]
        e = identity(sys.dim)
        self.elements = [e]
        self.length = {e: 0}
        queue = deque([e])
        while queue:
            w = queue.popleft()
            for s in self.gens:
                sw = compose(s, w)
                if sw not in self.length:
                    self.length[sw] = self.length[w] + 1
                    self.elements.append(sw)
                    queue.append(sw)
                    if len(self.elements) > limit:
                        raise RuntimeError("reflection group larger than %d" % limit)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def sign(self, w):
        return -1 if self.length[w] % 2 else 1

    def orbit(self, v):
        v = tuple(v)
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for s in self.gens:
                y = apply(s, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def stabilizer_order(self, v):
        v = tuple(v)
        return sum(1 for w in self.elements if apply(w, v) == v)

    def longest_element(self, positive):
        """The element mapping the positive system ``positive`` onto its negative."""
        pos = {r.coords if isinstance(r, Root) else tuple(r) for r in positive}
        target = {tuple(-x for x in r) for r in pos}
        for w in self.elements:
            if {apply(w, r) for r in pos} == target:
                return w
        raise ValueError("no element sends the positive system to its negative")


def even_weyl_group(sys):
    """Weyl group of the even part, generated by all even reflections."""
    gens = sorted({r.coords for r in sys.even if r.coords > tuple(-x for x in r.coords)})
    return WeylGroup(sys, gens)
