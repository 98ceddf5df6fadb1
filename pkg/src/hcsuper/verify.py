"""Invariant suite over small instances of every module."""
import random
import time
from fractions import Fraction

from . import hciso, hwmod, possys, realize
from .rootsys import Family, build_root_system, gram_determinant, is_isotropic, is_isotropic_combinatorial, neg
from .weyl import even_weyl_group

SMALL_FAMILIES = [
    Family("A", 1, 0), Family("A", 0, 1), Family("A", 2, 1), Family("A", 0, 2), Family("A", 3, 1),
    Family("B", 0, 1), Family("B", 0, 2), Family("B", 1, 1), Family("B", 2, 1), Family("B", 1, 2),
    Family("C", 0, 2), Family("C", 0, 3), Family("D", 2, 1), Family("D", 3, 1),
    Family("D21a", alpha=Fraction(1, 2)), Family("D21a", alpha=Fraction(-3, 7)), Family("F4"), Family("G3"),
]

STANDARD_PAIRS = [
    (Family("A", 1, 0), "su-su", (1, 1, 1, 0)), (Family("A", 1, 0), "su-su", (2, 0, 1, 0)),
    (Family("A", 2, 1), "su-su", (2, 1, 1, 1)), (Family("A", 2, 1), "su-su", (2, 1, 2, 0)),
    (Family("B", 0, 1), "sp", ()), (Family("B", 0, 2), "sp", ()), (Family("B", 1, 1), "so2-sp", ()),
    (Family("B", 2, 1), "so2-sp", ()), (Family("B", 2, 1), "so-sp", ()), (Family("C", 0, 2), "so2-sp", ()),
    (Family("C", 0, 3), "so2-sp", ()), (Family("D", 2, 1), "so2-sp", ()), (Family("D", 3, 1), "sostar-sp", ()),
    (Family("D21a", alpha=Fraction(1, 2)), "sl2x3", ()), (Family("D21a", alpha=Fraction(1, 2)), "su2x2+sl2", ()),
    (Family("F4"), "sl2+so7", ()), (Family("F4"), "su2+so25", ()), (Family("G3"), "sl2+g2", ()),
]


def check_root_axioms(fam):
    sys = build_root_system(fam)
    coords = {r.coords for r in sys.roots}
    ok = all(neg(c) in coords for c in coords)
    ok = ok and all(is_isotropic(sys, r) == is_isotropic_combinatorial(sys, r) for r in sys.roots)
    ok = ok and realize.doubling_law(sys)
    ok = ok and gram_determinant(sys) != 0
    if fam.realized:
        ok = ok and len(sys.roots) == realize.matrix_algebra_dimension(fam) - sys.dim + (1 if fam.tag == "A" else 0)
    return ok


def check_structure(fam):
    real = realize.realize_algebra(fam)
    rep = realize.structural_checks(real)
    ok = all(v for k, v in rep.items() if k != "form_scalar")
    return ok and realize.super_jacobi_failures(real) == 0 and realize.super_antisymmetry_failures(real) == 0


def check_positive_systems(fam):
    sys = build_root_system(fam)
    func = possys.enumerate_positive_systems(sys)
    ok = all(possys.is_abstract_positive(sys, P.roots) for P in func)
    if len(sys.roots) <= 40:
        ok = ok and possys.enumerate_abstract_positive_systems(sys) == func
    for P in func:
        ell = possys.positivity_functional(sys, P)
        ok = ok and all(possys.dot(ell, r.coords) > 0 for r in P.roots)
        S = possys.simple_roots(P)
        ok = ok and possys.regenerates(P, S)
    return ok


def check_pair(fam, tag, params):
    pair = possys.build_hermitian_pair(fam, tag, params)
    P = pair.standard_positive_system()
    ok = possys.is_admissible(pair, P)
    comp = pair.compact
    ok = ok and all(neg(c) in comp for c in comp)
    ok = ok and all(not pair.sys.root(c).odd for c in comp)
    adm = possys.enumerate_admissible(pair)
    ok = ok and bool(adm)
    for Q in adm:
        flipped = possys.flip_noncompact(pair, Q)
        ok = ok and possys.is_abstract_positive(pair.sys, flipped.roots)
        ok = ok and possys.flip_noncompact(pair, flipped) == Q
        pn0 = [r.coords for r in possys.split(pair, Q)[1]]
        ok = ok and not any(tuple(a + b for a, b in zip(x, y)) in pair.sys for x in pn0 for y in pn0)
        possys.simple_system_facts(pair, Q)
    if fam.realized:
        real = realize.realize_algebra(fam)
        for Q in possys.enumerate_positive_systems(pair.sys):
            ok = ok and possys.is_admissible(pair, Q) == admissible_by_brackets(real, pair, Q)
    return ok


def admissible_by_brackets(real, pair, P):
    """``k + p+`` is a subalgebra with ``p+`` an ideal, read off the bracket table."""
    pplus = {real.index[("x", r.coords)] for r in P.roots if not pair.is_compact(r)}
    kk = {real.index[("x", c)] for c in pair.compact} | {real.index[("h", i)] for i in range(real.rank)}
    for a in kk | pplus:
        for b in pplus:
            if any(k not in pplus for k in real.bracket(a, b)):
                return False
    return True


def random_dominant(pair, P, rng, tries=2000):
    d = pair.sys.dim
    half = pair.family.tag in ("B", "D", "F4")
    for _ in range(tries):
        if half:
            lam = tuple(Fraction(rng.randint(-6, 6), 2) for _ in range(d))
        else:
            lam = tuple(Fraction(rng.randint(-4, 4)) for _ in range(d))
        try:
            return hwmod.HighestWeight(lam, pair, P)
        except (hwmod.NotDominant, ValueError):
            continue
    raise RuntimeError("no dominant weight found")


def check_characters(fam, tag, params, rng, depth=5):
    pair = possys.build_hermitian_pair(fam, tag, params)
    ok = True
    for P in possys.enumerate_admissible(pair)[:3]:
        hw = random_dominant(pair, P, rng)
        k = hwmod.build_k_module(hw)
        ok = ok and hwmod.character_formula(hw, depth) == hwmod.character_bruteforce(hw, depth, k)
        lhs, rhs = hwmod.weyl_numerator_identity(hw, k)
        ok = ok and lhs == rhs
    return ok


def check_criterion(fam, tag, params, lam, depth):
    pair = possys.build_hermitian_pair(fam, tag, params)
    hw = hwmod.HighestWeight(lam, pair, pair.standard_positive_system())
    if not hwmod.check_irreducibility_criterion(hw):
        return False
    return not hwmod.find_singular_vectors(hw, depth)


def check_isotropic_translation(fam, rng, count=3):
    sys = build_root_system(fam)
    W = even_weyl_group(sys)
    g = hciso.g_polynomial(sys)
    ok = hciso.is_W_invariant(W, g)
    for _ in range(count):
        v = tuple(Fraction(rng.randint(-3, 3)) for _ in range(sys.dim))
        psi = hciso.orbit_power_sum(sys, W, v, 2) * rng.randint(1, 4) + hciso.orbit_power_sum(sys, W, v, 1)
        ok = ok and hciso.in_I_h(sys, W, g * psi + rng.randint(-5, 5))
    return ok


def run(seed=0):
    """Run the suite; returns a list of ``(name, passed, seconds)``."""
    rng = random.Random(seed)
    results = []

    def record(name, fn, *args):
        t = time.time()
        try:
            ok = bool(fn(*args))
        except Exception as exc:  # a raised structure violation counts as a failure
            ok = False
            name = "%s (%s: %s)" % (name, type(exc).__name__, exc)
        results.append((name, ok, round(time.time() - t, 3)))

    for fam in SMALL_FAMILIES:
        record("root axioms %s" % fam.label(), check_root_axioms, fam)
        if fam.dim <= 3:
            record("positive systems %s" % fam.label(), check_positive_systems, fam)
    for fam in SMALL_FAMILIES:
        if fam.realized:
            record("structure %s" % fam.label(), check_structure, fam)
    for fam, tag, params in STANDARD_PAIRS:
        record("pair %s %s %s" % (fam.label(), tag, params), check_pair, fam, tag, params)
        record("characters %s %s %s" % (fam.label(), tag, params), check_characters, fam, tag, params, rng)
    record("criterion B(0,1)", check_criterion, Family("B", 0, 1), "sp", (), (-1,), 8)
    record("criterion B(0,2)", check_criterion, Family("B", 0, 2), "sp", (), (-2, -3), 6)
    record("criterion A(1,0)", check_criterion, Family("A", 1, 0), "su-su", (1, 1, 1, 0), (-3, -1, 0), 6)
    for fam in (Family("A", 1, 0), Family("A", 2, 1), Family("B", 0, 2)):
        record("isotropic translation %s" % fam.label(), check_isotropic_translation, fam, rng)
    return results


__all__ = ["run", "admissible_by_brackets", "SMALL_FAMILIES", "STANDARD_PAIRS"]
