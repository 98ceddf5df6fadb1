"""Highest-weight Harish-Chandra modules ``U^lam = U(g) (x)_{U(k + p+)} F_lam``."""
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .induced import BaseModule, InducedModule, PBWEngine, monomials_up_to
from .linalg import Coordinates, nullspace, row_echelon
from .possys import NotAdmissible, is_admissible, simple_roots, split
from .realize import realize_algebra
from .rootsys import add, coroot_pair, fmt, is_isotropic, neg, pairing, scale, sub
from .weyl import WeylGroup, apply

ZERO = Fraction(0)
DEFAULT_SLICE_BUDGET = 200000


class NotDominant(ValueError):
    pass


class Unsupported(ValueError):
    pass


def _half_sum(d, roots):
    s = [ZERO] * d
    for r in roots:
        c = r.coords if hasattr(r, "coords") else r
        for i in range(d):
            s[i] += c[i]
    return tuple(x / 2 for x in s)


def rho(P):
    """``rho = rho_0 - rho_1``: half sums over even and odd positive roots."""
    d = P.sys.dim
    return sub(_half_sum(d, P.even), _half_sum(d, P.odd))


def rho_parts(pair, P):
    d = P.sys.dim
    pk, pn0, pn1 = split(pair, P)
    return {
        "rho": rho(P),
        "rho_0": _half_sum(d, P.even),
        "rho_1": _half_sum(d, P.odd),
        "rho_k": _half_sum(d, pk),
        "rho_n0": _half_sum(d, pn0),
    }


def compact_simple_roots(pair, P):
    pk = {r.coords for r in split(pair, P)[0]}
    dec = {add(a, b) for a in pk for b in pk}
    return sorted(c for c in pk if c not in dec)


@dataclass
class HighestWeight:
    lam: tuple
    pair: object
    P: object
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.lam = tuple(Fraction(x) for x in self.lam)
        if len(self.lam) != self.sys.dim:
            raise ValueError("weight has %d coordinates, expected %d" % (len(self.lam), self.sys.dim))
        if not is_admissible(self.pair, self.P):
            raise NotAdmissible("the positive system is not admissible")
        for a in split(self.pair, self.P)[0]:
            v = coroot_pair(self.sys, self.lam, a)
            if v.denominator != 1 or v < 0:
                raise NotDominant("lam(H_a) = %s is not a non-negative integer for compact a = %r"
                                  % (fmt(v), [fmt(x) for x in a.coords]))

    @property
    def sys(self):
        return self.pair.sys

    def simple(self):
        if "simple" not in self._cache:
            self._cache["simple"] = [r.coords for r in simple_roots(self.P)]
        return self._cache["simple"]

    def simple_coords(self):
        if "co" not in self._cache:
            self._cache["co"] = Coordinates(self.simple())
        return self._cache["co"]

    def height(self, nu):
        """Height of ``nu`` in the simple roots of ``P`` (raises if not integral)."""
        c = self.simple_coords()(nu)
        if any(x.denominator != 1 for x in c):
            raise ValueError("not in the root lattice")
        return int(sum(c))

    def depth_vector(self, mu):
        """``lam - mu`` in simple-root coordinates, as integers."""
        c = self.simple_coords()(sub(self.lam, mu))
        if any(x.denominator != 1 for x in c):
            raise ValueError("lam - mu is not in the root lattice")
        return tuple(int(x) for x in c)

    def from_depth_vector(self, c):
        mu = list(self.lam)
        for ci, s in zip(c, self.simple()):
            if ci:
                for i in range(len(mu)):
                    mu[i] -= ci * s[i]
        return tuple(mu)


def compact_weyl_group(hw):
    return WeylGroup(hw.sys, compact_simple_roots(hw.pair, hw.P))


# --- the k-module F --------------------------------------------------------


def _sign(sys, a):
    return 1 if pairing(sys, a, a) > 0 else -1


def freudenthal(hw):
    """Weight multiplicities of ``F_lam`` over ``k`` by Freudenthal's recursion.

    Uses the invariant form with its sign flipped on each simple factor of
    ``k`` where it is negative definite.
    """
    sys = hw.sys
    pk = [r.coords for r in split(hw.pair, hw.P)[0]]
    simple = compact_simple_roots(hw.pair, hw.P)
    rk = rho_parts(hw.pair, hw.P)["rho_k"]
    lr = add(hw.lam, rk)
    sgn = {a: _sign(sys, a) for a in pk}

    def prod(x, a):  # <x, a>' for a compact positive root
        return sgn[a] * pairing(sys, x, a)

    co = Coordinates(simple) if simple else None
    ssgn = [_sign(sys, s) for s in simple]

    def lhs(mu):
        nu = sub(hw.lam, mu)
        n = co(nu)
        a = 2 * sum((ni * ssgn[i] * pairing(sys, lr, simple[i]) for i, ni in enumerate(n)), ZERO)
        b = sum((ni * nj * ssgn[i] * pairing(sys, simple[i], simple[j])
                 for i, ni in enumerate(n) for j, nj in enumerate(n) if ni and nj), ZERO)
        return a - b

    mult = {hw.lam: 1}
    level = [hw.lam]
    while level:
        cand = sorted({sub(mu, s) for mu in level for s in simple})
        nxt = []
        for mu in cand:
            depth = hw.height(sub(hw.lam, mu))
            num = ZERO
            for a in pk:
                ha = hw.height(a)
                for j in range(1, depth // ha + 1):
                    w = add(mu, scale(j, a))
                    m = mult.get(w)
                    if m:
                        num += m * prod(w, a)
            den = lhs(mu)
            if den == 0:
                if num:
                    raise ArithmeticError("Freudenthal denominator vanished at %r" % (mu,))
                continue
            m = 2 * num / den
            if m.denominator != 1 or m < 0:
                raise ArithmeticError("non-integral multiplicity %s at %r" % (m, mu))
            if m:
                mult[mu] = int(m)
                nxt.append(mu)
        level = nxt
    return mult


def weyl_dimension(hw):
    pk = [r.coords for r in split(hw.pair, hw.P)[0]]
    rk = rho_parts(hw.pair, hw.P)["rho_k"]
    lr = add(hw.lam, rk)
    d = Fraction(1)
    for a in pk:
        d *= pairing(hw.sys, lr, a) / pairing(hw.sys, rk, a)
    return d


@dataclass
class KModule:
    highest: tuple
    multiplicities: dict
    base: object = None  # BaseModule with the action, for realized families

    @property
    def dim(self):
        return sum(self.multiplicities.values())


def _height_order(hw, indices, real):
    def key(g):
        w = real.weight_of(g)
        return (abs(hw.height(w)), w)
    return sorted(indices, key=key)


def _realization(hw):
    if "real" not in hw._cache:
        if not hw.sys.family.realized:
            raise Unsupported("%s has no matrix realization" % hw.sys.family.label())
        hw._cache["real"] = realize_algebra(hw.sys.family)
    return hw._cache["real"]


def _quotient_maps(module, monos_by_weight, raising, order):
    """Projections onto the irreducible quotient of a highest weight module.

    ``order`` lists weights from the top down; the top weight must be first
    and one-dimensional.  A vector vanishes in the quotient iff every raising
    operator sends it to something that vanishes there.  Returns
    ``{weight: (rref_rows, pivots)}`` where ``rref_rows`` maps monomial
    coordinates to coordinates on the pivot monomials.
    """
    Q = {}
    top = order[0]
    Q[top] = ([[Fraction(1)]], [0])
    pos = {w: {m: i for i, m in enumerate(ms)} for w, ms in monos_by_weight.items()}
    for w in order[1:]:
        basis = monos_by_weight[w]
        rows = []
        for x, a in raising:
            tgt = add(w, a)
            if tgt not in Q:
                continue
            qrows, _ = Q[tgt]
            if not qrows:
                continue
            cols = []
            for m in basis:
                v = module.act_vector(x, {m: Fraction(1)})
                cols.append(v)
            tpos = pos[tgt]
            for qr in qrows:
                row = []
                for v in cols:
                    row.append(sum((c * qr[tpos[m]] for m, c in v.items()), ZERO))
                rows.append(row)
        if rows:
            rref, piv = row_echelon(rows)
        else:
            rref, piv = [], []
        Q[w] = (rref, piv)
    return Q


def build_k_module(hw, with_action=None):
    """``F_lam`` as weight multiplicities and, for realized families, an action.

    The multiplicities come from Freudenthal's formula and are checked
    against the Weyl dimension formula.  The action is built on the
    irreducible quotient of the k-Verma module and must agree with them.
    """
    mult = freudenthal(hw)
    dim = sum(mult.values())
    if Fraction(dim) != weyl_dimension(hw):
        raise ArithmeticError("Freudenthal dimension %d differs from Weyl dimension %s" % (dim, weyl_dimension(hw)))
    if with_action is None:
        with_action = hw.sys.family.realized
    if not with_action:
        return KModule(hw.lam, mult)
    real = _realization(hw)
    pk = [r.coords for r in split(hw.pair, hw.P)[0]]
    lower = _height_order(hw, [real.index[("x", neg(a))] for a in pk], real)
    trivial = BaseModule(real, [hw.lam], {})
    verma = InducedModule(real, lower, trivial, hw.height)
    eng = verma.engine
    heights = [hw.height(neg(real.weight_of(g))) for g in lower]
    top_depth = max(hw.height(sub(hw.lam, mu)) for mu in mult)
    monos = {}
    for h, m in monos_up(eng, heights, top_depth):
        monos.setdefault(add(hw.lam, eng.weight(m)), []).append((m, 0))
    order = sorted(monos, key=lambda w: (hw.height(sub(hw.lam, w)), w))
    raising = [(real.index[("x", s)], s) for s in compact_simple_roots(hw.pair, hw.P)]
    Q = _quotient_maps(verma, monos, raising, order)
    weights, basis_of = [], {}
    for w in order:
        rref, piv = Q[w]
        if len(piv) != mult.get(w, 0):
            raise ArithmeticError("quotient dimension %d at %r, Freudenthal says %d"
                                  % (len(piv), w, mult.get(w, 0)))
        for p in piv:
            basis_of[(w, p)] = len(weights)
            weights.append(w)
    pos = {w: {m: i for i, m in enumerate(ms)} for w, ms in monos.items()}
    action = {}
    compact_all = pk + [neg(a) for a in pk]
    for a in compact_all:
        x = real.index[("x", a)]
        table = {}
        for w in order:
            rref, piv = Q[w]
            tgt = add(w, a)
            if tgt not in Q or not Q[tgt][1]:
                continue
            trows, tpiv = Q[tgt]
            for p in piv:
                v = verma.act_vector(x, {monos[w][p]: Fraction(1)})
                col = {}
                for r, row in enumerate(trows):
                    c = sum((cv * row[pos[tgt][m]] for m, cv in v.items()), ZERO)
                    if c:
                        col[basis_of[(tgt, tpiv[r])]] = c
                if col:
                    table[basis_of[(w, p)]] = col
        action[x] = table
    base = BaseModule(real, weights, action)
    return KModule(hw.lam, mult, base)


def monos_up(engine, heights, depth):
    return monomials_up_to(engine, heights, depth)


# --- characters -------------------------------------------------------------


@dataclass
class FormalCharacter:
    base: tuple
    height_bound: int
    simple: list
    coeffs: dict  # depth vector (ints in simple-root coordinates) -> multiplicity

    @property
    def terms(self):
        out = {}
        for c, m in self.coeffs.items():
            mu = list(self.base)
            for ci, s in zip(c, self.simple):
                for i in range(len(mu)):
                    mu[i] -= ci * s[i]
            out[tuple(mu)] = m
        return out

    def __eq__(self, other):
        return (self.base, self.height_bound, self.coeffs) == (other.base, other.height_bound, other.coeffs)

    def to_json(self):
        terms = sorted(self.terms.items(), key=lambda kv: (sum(self._depth(kv[0])), kv[0]))
        return {
            "base": [fmt(x) for x in self.base],
            "heightBound": self.height_bound,
            "terms": [{"mu": [fmt(x) for x in mu], "mult": m} for mu, m in terms],
        }

    def _depth(self, mu):
        return tuple(Coordinates(self.simple)(sub(self.base, mu)))


def _series_mul(a, b, depth):
    out = {}
    for ka, va in a.items():
        ha = sum(ka)
        for kb, vb in b.items():
            if ha + sum(kb) > depth:
                continue
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _geometric(c, depth, r):
    h = sum(c)
    out = {tuple([0] * r): 1}
    k = 1
    while h * k <= depth:
        out[tuple(k * x for x in c)] = 1
        k += 1
    return out


def _root_depth(hw, beta):
    c = hw.simple_coords()(beta)
    return tuple(int(x) for x in c)


def character_formula(hw, depth):
    """Truncated ``ch U^lam`` from the alternating sum over ``W_k``.

    ``sum_s eps(s) e^{s(lam+rho_0)-rho_0} prod_{P_0}(1-e^{-a})^{-1} prod_{P_n1}(1+e^{-b})``.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    r = len(hw.simple())
    parts = rho_parts(hw.pair, hw.P)
    rho0 = parts["rho_0"]
    W = compact_weyl_group(hw)
    lr = add(hw.lam, rho0)
    num = {}
    for s in W:
        mu = sub(apply(s, lr), rho0)
        c = hw.depth_vector(mu)
        if sum(c) <= depth:
            num[c] = num.get(c, 0) + W.sign(s)
    ch = {k: v for k, v in num.items() if v}
    for a in sorted(hw.P.even):
        ch = _series_mul(ch, _geometric(_root_depth(hw, a.coords), depth, r), depth)
    for b in sorted(split(hw.pair, hw.P)[2]):
        one = tuple([0] * r)
        ch = _series_mul(ch, {one: 1, _root_depth(hw, b.coords): 1}, depth)
    return FormalCharacter(hw.lam, depth, hw.simple(), ch)


def character_bruteforce(hw, depth, kmod=None):
    """Truncated ``ch U^lam`` by counting PBW monomials in ``p^-`` against ``ch F``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    kmod = kmod or KModule(hw.lam, freudenthal(hw))
    _, pn0, pn1 = split(hw.pair, hw.P)
    gens = [(_root_depth(hw, r.coords), False) for r in pn0] + [(_root_depth(hw, r.coords), True) for r in pn1]
    r = len(hw.simple())
    pbw = {tuple([0] * r): 1}
    for c, odd in gens:
        h = sum(c)
        nxt = {}
        for k, v in pbw.items():
            hk = sum(k)
            e = 0
            while hk + e * h <= depth and (not odd or e <= 1):
                kk = tuple(x + e * y for x, y in zip(k, c))
                nxt[kk] = nxt.get(kk, 0) + v
                e += 1
        pbw = nxt
    chf = {}
    for mu, m in kmod.multiplicities.items():
        c = hw.depth_vector(mu)
        if sum(c) <= depth:
            chf[c] = chf.get(c, 0) + m
    return FormalCharacter(hw.lam, depth, hw.simple(), _series_mul(pbw, chf, depth))


def weyl_numerator_identity(hw, kmod=None):
    """``(lhs, rhs)`` Laurent polynomials in weights for
    ``e^{rho_k} prod_{P_k}(1 - e^{-a}) ch F = sum_s eps(s) e^{s(lam + rho_k)}``."""
    kmod = kmod or KModule(hw.lam, freudenthal(hw))
    rk = rho_parts(hw.pair, hw.P)["rho_k"]
    lhs = {add(mu, rk): m for mu, m in kmod.multiplicities.items()}
    for a in split(hw.pair, hw.P)[0]:
        nxt = {}
        for w, m in lhs.items():
            nxt[w] = nxt.get(w, 0) + m
            w2 = sub(w, a.coords)
            nxt[w2] = nxt.get(w2, 0) - m
        lhs = {k: v for k, v in nxt.items() if v}
    W = compact_weyl_group(hw)
    rhs = {}
    lr = add(hw.lam, rk)
    for s in W:
        w = apply(s, lr)
        rhs[w] = rhs.get(w, 0) + W.sign(s)
    rhs = {k: v for k, v in rhs.items() if v}
    return lhs, rhs


# --- slices of U^lam and singular vectors ------------------------------------


def slice_budget():
    return int(os.environ.get("HCSUPER_SLICE_BUDGET", DEFAULT_SLICE_BUDGET))


class ModuleSlice:
    """The part of ``U^lam`` of height at most ``depth``, on the PBW basis.

    ``basis[mu]`` lists pairs ``(monomial, f)`` of weight ``mu``.
    """

    def __init__(self, hw, depth, kmod=None, budget=None):
        self.hw = hw
        self.depth = depth
        real = _realization(hw)
        self.real = real
        self.kmod = kmod or build_k_module(hw, with_action=True)
        _, pn0, pn1 = split(hw.pair, hw.P)
        pn = [r.coords for r in pn0 + pn1]
        lower = _height_order(hw, [real.index[("x", neg(b))] for b in pn], real)
        self.module = InducedModule(real, lower, self.kmod.base, hw.height)
        eng = self.module.engine
        heights = [hw.height(neg(real.weight_of(g))) for g in lower]
        fheights = [hw.height(sub(hw.lam, w)) for w in self.kmod.base.weights]
        budget = slice_budget() if budget is None else budget
        self.basis = {}
        count = 0
        for h, m in monomials_up_to(eng, heights, depth):
            wm = eng.weight(m)
            for f, fw in enumerate(self.kmod.base.weights):
                if h + fheights[f] <= depth:
                    mu = add(wm, fw)
                    self.basis.setdefault(mu, []).append((m, f))
                    count += 1
                    if count > budget:
                        raise RuntimeError("slice larger than budget %d" % budget)
        self.weights = sorted(self.basis, key=lambda w: (hw.height(sub(hw.lam, w)), w))

    def dim_at(self, mu):
        return len(self.basis.get(tuple(mu), ()))

    def raising(self):
        return [(self.real.index[("x", s)], s) for s in self.hw.simple()]

    def action_matrix(self, x, mu, target):
        """Matrix of ``x`` from weight ``mu`` to ``target`` in the PBW basis."""
        tb = {b: i for i, b in enumerate(self.basis.get(target, ()))}
        cols = []
        for b in self.basis[mu]:
            v = self.module.act_vector(x, {b: Fraction(1)})
            col = [ZERO] * len(tb)
            for k, c in v.items():
                if k not in tb:
                    raise ValueError("image leaves the slice")
                col[tb[k]] += c
            cols.append(col)
        return [[cols[j][i] for j in range(len(cols))] for i in range(len(tb))]

    def singular_vectors(self, mu):
        rows = []
        for x, a in self.raising():
            tgt = add(mu, a)
            if tgt not in self.basis:
                continue
            rows.extend(self.action_matrix(x, mu, tgt))
        n = len(self.basis[mu])
        return nullspace(rows, n) if rows else nullspace([], n)


def find_singular_vectors(hw, depth, budget=None):
    """Singular vectors of ``U^lam`` of weight ``mu != lam`` with height of ``lam - mu`` at most ``depth``."""
    sl = ModuleSlice(hw, depth, budget=budget)
    out = []
    for mu in sl.weights:
        if mu == hw.lam:
            continue
        for v in sl.singular_vectors(mu):
            vec = {b: c for b, c in zip(sl.basis[mu], v) if c}
            out.append((mu, vec))
    return out


def check_irreducibility_criterion(hw):
    """``(lam + rho)(H_g) <= 0`` on non-compact positive ``g``, strict when ``g`` is isotropic."""
    lr = add(hw.lam, rho(hw.P))
    for g in hw.P.roots:
        if hw.pair.is_compact(g):
            continue
        v = coroot_pair(hw.sys, lr, g)
        if is_isotropic(hw.sys, g):
            if v >= 0:
                return False
        elif v > 0:
            return False
    return True


def is_hc_module_slice(sl):
    """``U(k)(1 (x) f_lam)`` is ``1 (x) F`` and an irreducible k-module."""
    hw = sl.hw
    base = sl.kmod.base
    real = sl.real
    unit = sl.module.engine.unit
    top = [f for f, w in enumerate(base.weights) if w == hw.lam]
    if len(top) != 1:
        return False
    pk = [r.coords for r in split(hw.pair, hw.P)[0]]
    kgens = [real.index[("x", a)] for a in pk] + [real.index[("x", neg(a))] for a in pk]
    kgens += [real.index[("h", i)] for i in range(real.rank)]
    # span of U(k) v by closure
    span_rows = []
    frontier = [{(unit, top[0]): Fraction(1)}]
    seen_rank = 0
    keys = [(unit, f) for f in range(len(base))]
    kidx = {k: i for i, k in enumerate(keys)}
    while frontier:
        nxt = []
        for v in frontier:
            for x in kgens:
                w = sl.module.act_vector(x, v)
                if any(k not in kidx for k in w):
                    return False
                row = [ZERO] * len(keys)
                for k, c in w.items():
                    row[kidx[k]] = c
                trial = span_rows + [row]
                r = len(row_echelon(trial)[1]) if trial else 0
                if r > seen_rank:
                    span_rows.append(row)
                    seen_rank = r
                    nxt.append(w)
        frontier = nxt
    start = [ZERO] * len(keys)
    start[kidx[(unit, top[0])]] = Fraction(1)
    if len(row_echelon(span_rows + [start])[1]) != len(base):
        return False
    # irreducible: the only vectors killed by the compact raising operators lie on the top line
    for mu in set(base.weights):
        fs = [f for f, w in enumerate(base.weights) if w == mu]
        rows = []
        for s in compact_simple_roots(hw.pair, hw.P):
            x = real.index[("x", s)]
            tgt = [f for f, w in enumerate(base.weights) if w == add(mu, s)]
            tpos = {f: i for i, f in enumerate(tgt)}
            block = [[ZERO] * len(fs) for _ in tgt]
            for j, f in enumerate(fs):
                for k, c in sl.module.act_vector(x, {(unit, f): Fraction(1)}).items():
                    if k[1] not in tpos:
                        return False
                    block[tpos[k[1]]][j] += c
            rows.extend(block)
        ker = len(nullspace(rows, len(fs))) if rows else len(fs)
        if ker != (1 if mu == hw.lam else 0):
            return False
    return True


def character_to_json(ch):
    return json.dumps(ch.to_json(), sort_keys=True)
