"""Normal ordering in U(g) and modules induced from a subalgebra.

A module ``U(g) (x)_{U(q)} F`` with ``g = lower + q`` is modelled on
PBW monomials in an ordered basis ``y_1..y_L`` of ``lower``.  An element is
a dict ``{(monomial, f): coeff}`` with ``monomial`` an exponent tuple and
``f`` an index into a basis of ``F``.  Odd exponents never exceed 1 because
``y^2 = [y, y] / 2`` for odd ``y``.
"""
from fractions import Fraction

ZERO = Fraction(0)


def _accumulate(out, key, c):
    v = out.get(key, ZERO) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class PBWEngine:
    """Rewriting rules for a subalgebra ``lower`` spanned by basis elements.

    ``real`` supplies the bracket table; ``lower`` lists basis indices of
    the realization in PBW order.  ``lower`` must be closed under brackets,
    and brackets must increase the PBW position (true for height orderings).
    """

    def __init__(self, real, lower):
        self.real = real
        self.lower = list(lower)
        self.pos = {g: i for i, g in enumerate(self.lower)}
        self.L = len(self.lower)
        self.odd = [real.parity(g) for g in self.lower]
        self.parity = [real.parity(i) for i in range(real.dim)]
        self._lmul = {}
        self._act = {}
        self.unit = tuple([0] * self.L)

    def weight(self, mono):
        d = self.real.family.dim
        w = [ZERO] * d
        for k, a in enumerate(mono):
            if a:
                wk = self.real.weight_of(self.lower[k])
                for i in range(d):
                    w[i] += a * wk[i]
        return tuple(w)

    def lmul(self, k, mono):
        """``y_k * mono`` as ``{monomial: coeff}``."""
        key = (k, mono)
        hit = self._lmul.get(key)
        if hit is not None:
            return hit
        first = next((i for i, a in enumerate(mono) if a), self.L)
        out = {}
        if first > k or (first == k and not self.odd[k]):
            m = list(mono)
            m[k] += 1
            out[tuple(m)] = Fraction(1)
        elif first == k:
            # odd y_k: y_k y_k rest = 1/2 [y_k, y_k] rest
            rest = list(mono)
            rest[k] -= 1
            rest = tuple(rest)
            for z, c in self.real.bracket(self.lower[k], self.lower[k]).items():
                for m2, c2 in self.lmul(self.pos[z], rest).items():
                    _accumulate(out, m2, c * c2 / 2)
        else:
            i = first
            rest = list(mono)
            rest[i] -= 1
            rest = tuple(rest)
            # y_k y_i rest = [y_k, y_i] rest + (-1)^{|k||i|} y_i (y_k rest)
            for z, c in self.real.bracket(self.lower[k], self.lower[i]).items():
                for m2, c2 in self.lmul(self.pos[z], rest).items():
                    _accumulate(out, m2, c * c2)
            sign = -1 if self.odd[k] and self.odd[i] else 1
            for m1, c1 in self.lmul(k, rest).items():
                for m2, c2 in self.lmul(i, m1).items():
                    _accumulate(out, m2, sign * c1 * c2)
        self._lmul[key] = out
        return out

    def act(self, x, mono):
        """``x * mono`` for a basis index ``x`` of g, as ``{(monomial, z): coeff}``.

        ``z`` is a basis index of q (to be applied to F afterwards) or ``None``
        for the identity.
        """
        key = (x, mono)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        out = {}
        if x in self.pos:
            for m, c in self.lmul(self.pos[x], mono).items():
                out[(m, None)] = c
        else:
            first = next((i for i, a in enumerate(mono) if a), None)
            if first is None:
                out[(mono, x)] = Fraction(1)
            else:
                y = self.lower[first]
                rest = list(mono)
                rest[first] -= 1
                rest = tuple(rest)
                for z, c in self.real.bracket(x, y).items():
                    for key2, c2 in self.act(z, rest).items():
                        _accumulate(out, key2, c * c2)
                sign = -1 if self.parity[x] and self.parity[y] else 1
                for (m1, z1), c1 in self.act(x, rest).items():
                    for m2, c2 in self.lmul(first, m1).items():
                        _accumulate(out, (m2, z1), sign * c1 * c2)
        self._act[key] = out
        return out


class BaseModule:
    """A finite-dimensional q-module: weights of basis vectors and sparse action.

    ``action[x][j]`` is ``{i: coeff}`` giving ``x . f_j``; basis indices of q
    absent from ``action`` act by zero, Cartan elements act by the weight.
    """

    def __init__(self, real, weights, action):
        self.real = real
        self.weights = list(weights)
        self.action = action

    def __len__(self):
        return len(self.weights)

    def apply(self, z, j):
        if z is None:
            return {j: Fraction(1)}
        kind, key = self.real.basis[z]
        if kind == "h":
            c = sum((a * b for a, b in zip(self.weights[j], self.real.cartan_coords[key])), ZERO)
            return {j: c} if c else {}
        return self.action.get(z, {}).get(j, {})


class InducedModule:
    """``U(g) (x)_{U(q)} F`` with ``lower`` a complement of ``q``."""

    def __init__(self, real, lower, base, height):
        self.real = real
        self.engine = PBWEngine(real, lower)
        self.base = base
        self.height = height  # function: weight difference -> height

    def act_vector(self, x, vec):
        out = {}
        for (m, f), c in vec.items():
            for (m2, z), c2 in self.engine.act(x, m).items():
                for f2, c3 in self.base.apply(z, f).items():
                    _accumulate(out, (m2, f2), c * c2 * c3)
        return out

    def weight(self, m, f):
        return tuple(a + b for a, b in zip(self.engine.weight(m), self.base.weights[f]))


def monomials_up_to(engine, heights, depth):
    """PBW monomials (odd exponents <= 1) with total height <= depth, grouped by height."""
    L = engine.L
    out = []

    def rec(k, mono, h):
        if k == L:
            out.append((h, tuple(mono)))
            return
        cap = 1 if engine.odd[k] else depth
        a = 0
        while a <= cap and h + a * heights[k] <= depth:
            mono.append(a)
            rec(k + 1, mono, h + a * heights[k])
            mono.pop()
            a += 1

    rec(0, [], 0)
    return out
