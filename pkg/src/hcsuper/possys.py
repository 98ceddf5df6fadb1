"""Positive systems, Hermitian pairs and admissibility."""
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Coordinates, Infeasible, strict_cone_point
from .rootsys import Family, Root, add, build_root_system, coroot_pair, neg, scale, weight
from .weyl import WeylGroup, apply

DEFAULT_BUDGET = 20000


class NotAdmissible(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class StructureViolation(AssertionError):
    pass


def enumeration_budget():
    return int(os.environ.get("HCSUPER_BUDGET", DEFAULT_BUDGET))


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _key(coords):
    return tuple(coords)


@dataclass(frozen=True)
class PositiveSystem:
    sys: object = field(compare=False, hash=False, repr=False)
    roots: frozenset

    @classmethod
    def of(cls, sys, coords_iter):
        rs = set()
        for c in coords_iter:
            r = sys.root(c.coords if isinstance(c, Root) else c)
            if r is None:
                raise ValueError("%r is not a root" % (c,))
            rs.add(r)
        return cls(sys, frozenset(rs))

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.roots)

    def __contains__(self, x):
        c = x.coords if isinstance(x, Root) else tuple(x)
        r = self.sys.root(c)
        return r is not None and r in self.roots

    def sorted(self):
        return sorted(self.roots, key=lambda r: r.coords)

    @property
    def coords(self):
        return frozenset(r.coords for r in self.roots)

    @property
    def even(self):
        return frozenset(r for r in self.roots if not r.odd)

    @property
    def odd(self):
        return frozenset(r for r in self.roots if r.odd)

    def negated(self):
        return PositiveSystem(self.sys, frozenset(-r for r in self.roots))

    def transformed(self, w):
        return PositiveSystem.of(self.sys, [apply(w, r.coords) for r in self.roots])


def is_abstract_positive(sys, P):
    coords = {r.coords if isinstance(r, Root) else tuple(r) for r in P}
    for c in coords:
        if c not in sys:
            raise ValueError("%r is not a root" % (c,))
    if any(neg(c) in coords for c in coords):
        return False
    if len(coords) * 2 != len(sys.roots):
        return False
    for a in coords:
        for b in coords:
            s = add(a, b)
            if s in sys and s not in coords:
                return False
    return True


def positivity_functional(sys, P):
    """A rational ``l`` with ``l . a > 0`` for every ``a`` in ``P``."""
    try:
        return tuple(strict_cone_point([r.coords for r in P.roots], sys.dim))
    except Infeasible as exc:
        raise RuntimeError("abstract positive system without a witness: %s" % exc)


def positive_system_from_functional(sys, ell):
    roots = frozenset(r for r in sys.roots if dot(ell, r.coords) > 0)
    if len(roots) * 2 != len(sys.roots):
        raise ValueError("functional vanishes on a root")
    return PositiveSystem(sys, roots)


def positive_system_from_simple(sys, simple):
    """All roots that are non-negative integral combinations of ``simple``."""
    simple = [s.coords if isinstance(s, Root) else tuple(s) for s in simple]
    coords_of = Coordinates(simple)
    pos = set()
    for r in sys.roots:
        c = coords_of(r.coords)
        if all(x >= 0 for x in c):
            if any(x.denominator != 1 for x in c):
                raise ValueError("root %r is not integral in the simple system" % (r.coords,))
            pos.add(r)
    P = PositiveSystem(sys, frozenset(pos))
    if len(pos) * 2 != len(sys.roots):
        raise ValueError("the given roots are not a simple system")
    return P


def simple_roots(P):
    """The indecomposable roots of ``P`` in lexicographic order."""
    coords = P.coords
    decomposable = set()
    for a in coords:
        for b in coords:
            s = add(a, b)
            if s in coords:
                decomposable.add(s)
    return [r for r in P.sorted() if r.coords not in decomposable]


def simple_coordinates(simple):
    return Coordinates([s.coords if isinstance(s, Root) else s for s in simple])


def regenerates(P, simple):
    """Every root of ``P`` is a non-negative integral combination of ``simple``."""
    co = simple_coordinates(simple)
    for r in P.roots:
        c = co(r.coords)
        if any(x < 0 or x.denominator != 1 for x in c):
            return False
    return True


def height(P_simple_coords, coords):
    return sum(P_simple_coords(coords))


def _opposite_pairs(sys):
    reps = sorted(r.coords for r in sys.roots if r.coords > neg(r.coords))
    return reps


def enumerate_positive_systems(sys, budget=None):
    """All positive systems, i.e. chambers ``{a : l . a > 0}`` of generic ``l``.

    Exact backtracking over sign choices; each partial choice is kept only
    if the open cone it defines is non-empty (Fourier-Motzkin witness).
    """
    budget = enumeration_budget() if budget is None else budget
    reps = _opposite_pairs(sys)
    out = []
    calls = [0]

    def rec(i, chosen, witness):
        if i == len(reps):
            out.append(PositiveSystem.of(sys, chosen))
            if len(out) > budget:
                raise BudgetExceeded("more than %d positive systems" % budget)
            return
        for cand in (reps[i], neg(reps[i])):
            trial = chosen + [cand]
            if witness is not None and dot(witness, cand) > 0:
                rec(i + 1, trial, witness)
                continue
            calls[0] += 1
            if calls[0] > 50 * budget:
                raise BudgetExceeded("feasibility budget exhausted")
            try:
                w = strict_cone_point(trial, sys.dim)
            except Infeasible:
                continue
            rec(i + 1, trial, tuple(w))

    rec(0, [], None)
    return sorted(out, key=lambda P: sorted(P.coords))


def enumerate_abstract_positive_systems(sys, budget=None):
    """All sets satisfying the three combinatorial axioms (no functional used)."""
    budget = enumeration_budget() if budget is None else budget
    reps = _opposite_pairs(sys)
    out = []

    def consistent(chosen_set, c):
        for b in chosen_set:
            s = add(b, c)
            if s in sys and neg(s) in chosen_set:
                return False
        d = scale(2, c)
        if d in sys and neg(d) in chosen_set:
            return False
        return True

    def rec(i, chosen):
        if i == len(reps):
            if is_abstract_positive(sys, chosen):
                out.append(PositiveSystem.of(sys, chosen))
                if len(out) > budget:
                    raise BudgetExceeded("more than %d abstract positive systems" % budget)
            return
        for cand in (reps[i], neg(reps[i])):
            if consistent(chosen, cand):
                chosen.add(cand)
                rec(i + 1, chosen)
                chosen.discard(cand)

    rec(0, set())
    return sorted(out, key=lambda P: sorted(P.coords))


# --- Hermitian pairs ---------------------------------------------------------

FORM_TAGS = {
    "A": ("su-su",),
    "B": ("so2-sp", "so-sp"),
    "B0": ("sp",),
    "C": ("so2-sp",),
    "D": ("so2-sp", "sostar-sp", "so-sp"),
    "D21a": ("sl2x3", "su2x2+sl2"),
    "F4": ("sl2+so7", "su2+so25"),
    "G3": ("sl2+g2",),
}

FORM_LABELS = {
    ("A", "su-su"): "su(p,q)+su(r,s)+u(1)",
    ("B", "so2-sp"): "so(2,2m-1)+sp(n,R)",
    ("B", "so-sp"): "so(2m+1)+sp(n,R)",
    ("B0", "sp"): "sp(n,R)",
    ("C", "so2-sp"): "so(2)+sp(n-1,R)",
    ("D", "so2-sp"): "so(2,2m-2)+sp(n,R)",
    ("D", "sostar-sp"): "so*(2m)+sp(n,R)",
    ("D", "so-sp"): "so(2m)+sp(n,R)",
    ("D21a", "sl2x3"): "sl2(R)+sl2(R)+sl2(R)",
    ("D21a", "su2x2+sl2"): "sl2(R)+su(2)+su(2)",
    ("F4", "sl2+so7"): "sl2(R)+so(7)",
    ("F4", "su2+so25"): "su(2)+so(2,5)",
    ("G3", "sl2+g2"): "sl2(R)+G2",
}


def family_key(family):
    if family.tag == "B" and family.m == 0:
        return "B0"
    return family.tag


@dataclass(frozen=True)
class HermitianPair:
    family: Family
    tag: str
    params: tuple
    simple: tuple  # the reference simple system, as coordinate tuples
    noncompact_simple: frozenset
    compact: frozenset  # coordinates of all compact roots (both signs)
    sys: object = field(compare=False, hash=False, repr=False)

    @property
    def label(self):
        return FORM_LABELS[(family_key(self.family), self.tag)]

    def is_compact(self, r):
        return (r.coords if isinstance(r, Root) else tuple(r)) in self.compact

    def standard_positive_system(self):
        return positive_system_from_simple(self.sys, self.simple)

    def compact_weyl_group(self, P=None):
        gens = sorted(c for c in self.compact if c > neg(c))
        return WeylGroup(self.sys, gens)


def _unit(d, *terms):
    v = [Fraction(0)] * d
    for c, i in terms:
        v[i] += Fraction(c)
    return tuple(v)


def reference_simple_system(family, tag, params=()):
    """The simple system and its non-compact members for each pair."""
    d = family.dim
    t = family.tag
    key = family_key(family)
    if tag not in FORM_TAGS.get(key, ()):
        raise NotAdmissible("%s does not carry the real form %r (available: %s)"
                            % (family.label(), tag, ", ".join(FORM_TAGS.get(key, ()))))
    e = lambda i: _unit(d, (1, i))  # noqa: E731
    if t == "A":
        M, N = family.m + 1, family.n + 1
        p, q, r, s = params
        if p + q != M or r + s != N or min(params) < 0:
            raise NotAdmissible("su(p,q)+su(r,s) needs p+q=%d and r+s=%d" % (M, N))
        simple = [_unit(d, (1, i), (-1, i + 1)) for i in range(M - 1)]
        simple.append(_unit(d, (1, M - 1), (-1, M)))
        simple += [_unit(d, (1, M + j), (-1, M + j + 1)) for j in range(N - 1)]
        nc = [_unit(d, (1, M - 1), (-1, M))]
        if 0 < p < M:
            nc.append(_unit(d, (1, p - 1), (-1, p)))
        if 0 < r < N:
            nc.append(_unit(d, (1, M + r - 1), (-1, M + r)))
    elif t in ("B", "D") and key != "B0":
        m, n = family.m, family.n
        simple = [_unit(d, (1, i), (-1, i + 1)) for i in range(m - 1)]
        if t == "B":
            simple.append(e(m - 1))
        else:
            simple.append(_unit(d, (1, m - 2), (1, m - 1)))
        simple += [_unit(d, (1, m + j), (-1, m + j + 1)) for j in range(n - 1)]
        odd_simple = _unit(d, (1, m + n - 1), (-1, 0))
        simple.append(odd_simple)
        nc = [odd_simple]
        if tag == "so2-sp":
            nc.append(_unit(d, (1, 0), (-1, 1)) if m >= 2 else e(0))
            if t == "D" and m == 2:
                nc.append(_unit(d, (1, 0), (1, 1)))
        elif tag == "sostar-sp":
            nc.append(_unit(d, (1, m - 2), (1, m - 1)))
    elif key == "B0":
        n = family.n
        simple = [_unit(d, (1, j), (-1, j + 1)) for j in range(n - 1)] + [e(n - 1)]
        nc = [e(n - 1)]
    elif t == "C":
        n = family.n
        simple = [_unit(d, (1, 0), (-1, 1))]
        simple += [_unit(d, (1, j), (-1, j + 1)) for j in range(1, n - 1)]
        simple.append(_unit(d, (2, n - 1)))
        nc = [simple[0], simple[-1]]
    elif t == "D21a":
        simple = [_unit(d, (1, 0), (1, 1), (1, 2)), _unit(d, (-2, 1)), _unit(d, (-2, 2))]
        nc = list(simple) if tag == "sl2x3" else [simple[0]]
    elif t == "F4":
        h = Fraction(1, 2)
        simple = [_unit(d, (h, 0), (h, 1), (h, 2), (h, 3)), _unit(d, (-1, 0)),
                  _unit(d, (1, 0), (-1, 1)), _unit(d, (1, 1), (-1, 2))]
        if tag == "sl2+so7":
            nc = [simple[0]]
        else:
            sys = build_root_system(family)
            w = f4_weyl_element(sys)
            simple = [apply(w, s) for s in simple]
            nc = [simple[0], _unit(d, (1, 0), (-1, 1))]
    else:
        # G(3): eps_3 = -eps_1 - eps_2
        simple = [_unit(d, (1, 2), (1, 0)), _unit(d, (1, 1)), _unit(d, (-1, 0), (-2, 1))]
        nc = [simple[0]]
    return [tuple(s) for s in simple], [tuple(s) for s in nc]


def f4_untransformed_simple(family):
    d = family.dim
    h = Fraction(1, 2)
    return [_unit(d, (h, 0), (h, 1), (h, 2), (h, 3)), _unit(d, (-1, 0)),
            _unit(d, (1, 0), (-1, 1)), _unit(d, (1, 1), (-1, 2))]


def f4_weyl_element(sys):
    """The Weyl element fixing ``delta`` and sending the B3 simple roots
    ``{-e1, e1-e2, e2-e3}`` onto ``{e3, e1-e2, e2-e3}``."""
    from .weyl import even_weyl_group
    source = {weight(-1, 0, 0, 0), weight(1, -1, 0, 0), weight(0, 1, -1, 0)}
    target = {weight(0, 0, 1, 0), weight(1, -1, 0, 0), weight(0, 1, -1, 0)}
    delta = weight(0, 0, 0, 1)
    hits = [w for w in even_weyl_group(sys) if {apply(w, s) for s in source} == target]
    fixing = [w for w in hits if apply(w, delta) == delta]
    if len(fixing) != 1:
        raise StructureViolation("expected a unique Weyl element, found %d" % len(fixing))
    return fixing[0]


def build_hermitian_pair(family, tag, params=()):
    sys = build_root_system(family)
    params = tuple(params) if family.tag == "A" else ()
    simple, nc = reference_simple_system(family, tag, params)
    co = Coordinates(simple)
    nc_idx = [simple.index(c) for c in nc]
    compact = set()
    for r in sys.roots:
        if r.odd:
            continue
        c = co(r.coords)
        if all(c[i] == 0 for i in nc_idx):
            compact.add(r.coords)
    return HermitianPair(family, tag, params, tuple(simple), frozenset(nc), frozenset(compact), sys)


def split(pair, P):
    """``(P_k, P_n0, P_n1)`` as sorted lists of roots."""
    pk = sorted((r for r in P.roots if pair.is_compact(r)), key=lambda r: r.coords)
    pn0 = sorted((r for r in P.roots if not r.odd and not pair.is_compact(r)), key=lambda r: r.coords)
    pn1 = sorted((r for r in P.roots if r.odd), key=lambda r: r.coords)
    return pk, pn0, pn1


def is_admissible(pair, P):
    sys = pair.sys
    noncompact_pos = [r.coords for r in P.roots if not pair.is_compact(r)]
    ncp = set(noncompact_pos)
    for a in pair.compact:
        for b in noncompact_pos:
            s = add(a, b)
            if s in sys and s not in ncp:
                return False
    for b in noncompact_pos:
        for c in noncompact_pos:
            s = add(b, c)
            if s in sys and s not in ncp:
                return False
    return True


def enumerate_admissible(pair, budget=None):
    return [P for P in enumerate_positive_systems(pair.sys, budget) if is_admissible(pair, P)]


def flip_noncompact(pair, P):
    if not is_admissible(pair, P):
        raise NotAdmissible("flip_noncompact needs an admissible system")
    roots = frozenset(r if pair.is_compact(r) else -r for r in P.roots)
    return PositiveSystem(pair.sys, roots)


def maximal_weights(pair, P, weights):
    """Weights ``mu`` of the list with ``mu + a`` outside it for every compact ``a`` in ``P``."""
    ws = {r.coords if isinstance(r, Root) else tuple(r) for r in weights}
    pk = [r.coords for r in P.roots if pair.is_compact(r)]
    return sorted(mu for mu in ws if all(add(mu, a) not in ws for a in pk))


def count_p1_components(pair, P):
    if not is_admissible(pair, P):
        raise NotAdmissible("component count needs an admissible system")
    return len(maximal_weights(pair, P, split(pair, P)[2]))


def even_simple_roots(P):
    even = {r.coords for r in P.even}
    dec = {add(a, b) for a in even for b in even}
    return sorted(r for r in P.even if r.coords not in dec)


def simple_system_facts(pair, P):
    """Check the structure of simple systems of ``P``, ``P_0`` and ``P_0^-``.

    Returns a report dict; raises :class:`StructureViolation` if any clause fails.
    """
    if not is_admissible(pair, P):
        raise NotAdmissible("simple_system_facts needs an admissible system")
    S = simple_roots(P)
    S0 = even_simple_roots(P)
    comp_S = sorted(r.coords for r in S if pair.is_compact(r))
    comp_S0 = sorted(r.coords for r in S0 if pair.is_compact(r))
    if comp_S != comp_S0:
        raise StructureViolation("compact simple roots differ: %r vs %r" % (comp_S, comp_S0))
    betas = sorted(r.coords for r in S0 if not pair.is_compact(r))
    _, pn0, _ = split(pair, P)
    beta_primes = maximal_weights(pair, P, pn0)
    if len(beta_primes) != len(betas):
        raise StructureViolation("%d non-compact simple roots but %d highest weights in p0+"
                             % (len(betas), len(beta_primes)))
    P_minus = flip_noncompact(pair, P)
    S0_minus = sorted(r.coords for r in even_simple_roots(P_minus))
    claimed = sorted(comp_S0 + [neg(b) for b in beta_primes])
    if S0_minus != claimed:
        raise StructureViolation("simple system of P0^- is %r, expected %r" % (S0_minus, claimed))
    # each highest weight is a non-compact simple root plus compact simple roots
    pairing_found = {}
    if comp_S0:
        co = Coordinates(comp_S0)
    for bp in beta_primes:
        match = None
        for b in betas:
            diff = tuple(x - y for x, y in zip(bp, b))
            if not any(diff):
                match = (b, [0] * len(comp_S0))
                break
            if not comp_S0:
                continue
            try:
                c = co(diff)
            except ValueError:
                continue
            if all(x >= 0 and x.denominator == 1 for x in c):
                match = (b, [int(x) for x in c])
                break
        if match is None:
            raise StructureViolation("highest weight %r is not beta + compact roots" % (bp,))
        pairing_found[bp] = match
    return {
        "a": len(comp_S),
        "A": len(comp_S0),
        "compact_simple": comp_S,
        "noncompact_even_simple": betas,
        "beta_prime": beta_primes,
        "S0_minus": S0_minus,
        "decompositions": pairing_found,
    }


def coroot_nonneg_integer(sys, lam, alpha):
    v = coroot_pair(sys, lam, alpha)
    return v.denominator == 1 and v >= 0
