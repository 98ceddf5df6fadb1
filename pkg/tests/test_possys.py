from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import golden
from hcsuper import possys
from hcsuper.possys import (BudgetExceeded, NotAdmissible, PositiveSystem, build_hermitian_pair, count_p1_components,
                            enumerate_abstract_positive_systems, enumerate_admissible, enumerate_positive_systems,
                            flip_noncompact, is_abstract_positive, is_admissible, positive_system_from_functional,
                            positive_system_from_simple, positivity_functional, simple_roots, simple_system_facts,
                            split)
from hcsuper.realize import realize_algebra
from hcsuper.rootsys import Family, build_root_system, weight
from hcsuper.verify import admissible_by_brackets
from hcsuper.hwmod import compact_simple_roots
from hcsuper.weyl import WeylGroup, apply

H = Fraction(1, 2)


def a10_standard():
    sys = build_root_system(Family("A", 1, 0))
    return sys, positive_system_from_simple(sys, [weight(1, -1, 0), weight(0, 1, -1)])


@pytest.mark.parametrize("case", golden.cases(), ids=lambda c: c[0])
def test_golden_tables(case):
    _, fam, tag, params, (fn, args) = case
    pair = build_hermitian_pair(fam, tag, params)
    assert golden.computed_tables(pair) == tuple(fn(*args))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (3, 2)])
def test_compact_so_pair_table(m, n):
    pair = build_hermitian_pair(Family("B", m, n), "so-sp")
    assert golden.computed_tables(pair) == golden.type_b_so(m, n)


def test_abstract_positive_examples():
    sys, P = a10_standard()
    assert set(P.coords) == {weight(1, -1, 0), weight(1, 0, -1), weight(0, 1, -1)}
    assert is_abstract_positive(sys, P.roots)
    assert not is_abstract_positive(sys, sys.roots)
    assert not is_abstract_positive(sys, [r for r in P.roots if r.coords != weight(0, 1, -1)])
    with pytest.raises(ValueError):
        is_abstract_positive(sys, [weight(3, 0, 0)])


def test_positivity_functional_examples():
    sys, P = a10_standard()
    ell = weight(2, 1, 0)
    assert all(possys.dot(ell, r.coords) > 0 for r in P.roots)
    w = positivity_functional(sys, P)
    assert all(possys.dot(w, r.coords) > 0 for r in P.roots)
    assert all(possys.dot(w, r.coords) < 0 for r in P.negated().roots)


def test_simple_root_examples():
    _, P = a10_standard()
    assert sorted(r.coords for r in simple_roots(P)) == sorted([weight(1, -1, 0), weight(0, 1, -1)])
    b = build_root_system(Family("B", 0, 1))
    assert [r.coords for r in simple_roots(positive_system_from_simple(b, [weight(1)]))] == [weight(1)]
    f4 = build_hermitian_pair(Family("F4"), "sl2+so7")
    expected = {weight(H, H, H, H), weight(-1, 0, 0, 0), weight(1, -1, 0, 0), weight(0, 1, -1, 0)}
    assert {r.coords for r in simple_roots(f4.standard_positive_system())} == expected


@pytest.mark.parametrize("fam,count", [
    (Family("A", 1, 0), 6), (Family("B", 0, 2), 8), (Family("C", 0, 3), 40),
    (Family("D21a", alpha=H), 32), (Family("G3"), 96), (Family("B", 2, 1), 48),
], ids=lambda x: x.label() if isinstance(x, Family) else str(x))
def test_positive_system_counts(fam, count):
    # |W_0| times the number of odd-reflection classes, counted independently as abstract systems below
    assert len(enumerate_positive_systems(build_root_system(fam))) == count


@pytest.mark.parametrize("fam", [Family("A", 1, 0), Family("A", 0, 2), Family("B", 0, 2), Family("B", 1, 1),
                                 Family("C", 0, 3), Family("D21a", alpha=Fraction(2)), Family("G3")],
                         ids=lambda f: f.label())
def test_abstract_equals_functional(fam):
    sys = build_root_system(fam)
    func = enumerate_positive_systems(sys)
    assert enumerate_abstract_positive_systems(sys) == func
    for P in func:
        assert possys.regenerates(P, simple_roots(P))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        enumerate_positive_systems(build_root_system(Family("C", 0, 3)), budget=5)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=4, max_size=4))
def test_generic_functional_gives_positive_system(ell):
    sys = build_root_system(Family("F4"))
    if any(possys.dot(ell, r.coords) == 0 for r in sys.roots):
        return
    P = positive_system_from_functional(sys, ell)
    assert is_abstract_positive(sys, P.roots)
    assert len(P) * 2 == len(sys.roots)


def test_hermitian_pair_examples():
    b = build_hermitian_pair(Family("B", 2, 1), "so2-sp")
    assert b.compact == {weight(0, 1, 0), weight(0, -1, 0)}
    d = build_hermitian_pair(Family("D21a", alpha=H), "sl2x3")
    assert d.compact == frozenset()
    g = build_hermitian_pair(Family("G3"), "sl2+g2")
    assert g.compact == {r.coords for r in g.sys.even if r.coords[2] == 0}
    assert len(g.compact) == 12
    with pytest.raises(NotAdmissible):
        build_hermitian_pair(Family("B", 2, 1), "sostar-sp")
    with pytest.raises(NotAdmissible):
        build_hermitian_pair(Family("A", 2, 1), "su-su", (2, 2, 1, 1))


@pytest.mark.parametrize("fam,tag,params", [
    (Family("A", 1, 0), "su-su", (1, 1, 1, 0)), (Family("A", 2, 1), "su-su", (2, 1, 1, 1)),
    (Family("A", 2, 1), "su-su", (2, 1, 2, 0)), (Family("B", 0, 1), "sp", ()), (Family("B", 0, 2), "sp", ()),
    (Family("B", 1, 1), "so2-sp", ()), (Family("B", 2, 1), "so2-sp", ()), (Family("B", 2, 1), "so-sp", ()),
    (Family("C", 0, 2), "so2-sp", ()), (Family("C", 0, 3), "so2-sp", ()), (Family("D", 2, 1), "so2-sp", ()),
    (Family("D", 3, 1), "sostar-sp", ()), (Family("D21a", alpha=H), "sl2x3", ()),
    (Family("D21a", alpha=H), "su2x2+sl2", ()), (Family("F4"), "sl2+so7", ()), (Family("F4"), "su2+so25", ()),
    (Family("G3"), "sl2+g2", ()),
], ids=lambda x: x.label() if isinstance(x, Family) else str(x))
def test_pair_invariants(fam, tag, params):
    pair = build_hermitian_pair(fam, tag, params)
    sys = pair.sys
    assert all(tuple(-x for x in c) in pair.compact for c in pair.compact)
    assert all(not sys.root(c).odd for c in pair.compact)
    # compact roots are closed under addition inside the root system
    for a in pair.compact:
        for b in pair.compact:
            s = tuple(x + y for x, y in zip(a, b))
            if s in sys:
                assert s in pair.compact
    P = pair.standard_positive_system()
    assert is_admissible(pair, P)
    adm = enumerate_admissible(pair)
    assert P in adm
    for Q in adm:
        flipped = flip_noncompact(pair, Q)
        assert is_abstract_positive(sys, flipped.roots)
        assert flip_noncompact(pair, flipped) == Q
        pn0 = [r.coords for r in split(pair, Q)[1]]
        assert not any(tuple(a + b for a, b in zip(x, y)) in sys for x in pn0 for y in pn0)
        simple_system_facts(pair, Q)


@pytest.mark.parametrize("fam,tag,params", [
    (Family("A", 1, 0), "su-su", (1, 1, 1, 0)), (Family("A", 2, 1), "su-su", (2, 1, 1, 1)),
    (Family("B", 0, 2), "sp", ()), (Family("B", 1, 1), "so2-sp", ()), (Family("C", 0, 2), "so2-sp", ()),
    (Family("D", 2, 1), "so2-sp", ()),
], ids=lambda x: x.label() if isinstance(x, Family) else str(x))
def test_admissibility_matches_bracket_closure(fam, tag, params):
    pair = build_hermitian_pair(fam, tag, params)
    real = realize_algebra(fam)
    for Q in enumerate_positive_systems(pair.sys):
        assert is_admissible(pair, Q) == admissible_by_brackets(real, pair, Q)


def test_admissible_count_matches_flip_orbit():
    # su(1,1)+u(1) on sl(2|1) has no compact roots, so both conditions are vacuous
    pair = build_hermitian_pair(Family("A", 1, 0), "su-su", (1, 1, 1, 0))
    adm = enumerate_admissible(pair)
    assert len(adm) == len(enumerate_positive_systems(pair.sys)) == 6
    assert {flip_noncompact(pair, Q) for Q in adm} == set(adm)
    # with su(2) compact the flip pairs up admissible systems
    pair = build_hermitian_pair(Family("A", 1, 0), "su-su", (2, 0, 1, 0))
    adm = enumerate_admissible(pair)
    assert {flip_noncompact(pair, Q) for Q in adm} == set(adm)
    assert all(flip_noncompact(pair, Q) != Q for Q in adm)


def test_single_noncompact_sign_flip_breaks_admissibility():
    pair = build_hermitian_pair(Family("C", 0, 3), "so2-sp")
    P = pair.standard_positive_system()
    broken = 0
    for r in P.roots:
        if pair.is_compact(r):
            continue
        Q = (P.roots - {r}) | {-r}
        if is_abstract_positive(pair.sys, Q) and not is_admissible(pair, PositiveSystem(pair.sys, frozenset(Q))):
            broken += 1
    assert broken > 0


def test_f4_untransformed_system_not_admissible():
    fam = Family("F4")
    pair = build_hermitian_pair(fam, "su2+so25")
    P0 = positive_system_from_simple(pair.sys, possys.f4_untransformed_simple(fam))
    assert not is_admissible(pair, P0)
    assert is_admissible(pair, pair.standard_positive_system())


def test_flip_examples():
    pair = build_hermitian_pair(Family("B", 0, 1), "sp")
    P = pair.standard_positive_system()
    assert set(flip_noncompact(pair, P).coords) == {weight(-2), weight(-1)}
    # all even roots compact: only the odd roots change sign
    a = build_hermitian_pair(Family("A", 1, 0), "su-su", (2, 0, 1, 0))
    P = a.standard_positive_system()
    F = flip_noncompact(a, P)
    assert {r.coords for r in F.even} == {r.coords for r in P.even}
    assert {r.coords for r in F.odd} == {tuple(-x for x in r.coords) for r in P.odd}


@pytest.mark.parametrize("fam,tag,params", [
    (Family("A", 2, 1), "su-su", (2, 1, 1, 1)), (Family("B", 2, 1), "so2-sp", ()), (Family("C", 0, 3), "so2-sp", ()),
    (Family("D", 3, 1), "so2-sp", ()), (Family("G3"), "sl2+g2", ()),
], ids=lambda x: x.label() if isinstance(x, Family) else str(x))
def test_flip_is_minus_longest_compact_element(fam, tag, params):
    pair = build_hermitian_pair(fam, tag, params)
    P = pair.standard_positive_system()
    pk = [r.coords for r in split(pair, P)[0]]
    s0 = WeylGroup(pair.sys, compact_simple_roots(pair, P)).longest_element(pk)
    expected = {tuple(-x for x in apply(s0, r.coords)) for r in P.roots}
    assert expected == set(flip_noncompact(pair, P).coords)


@pytest.mark.parametrize("fam,tag,params,count", [
    (Family("A", 2, 1), "su-su", (2, 1, 1, 1), 4), (Family("A", 2, 1), "su-su", (2, 1, 2, 0), 2),
    (Family("C", 0, 2), "so2-sp", (), 2), (Family("C", 0, 3), "so2-sp", (), 2),
    (Family("B", 2, 1), "so2-sp", (), 3), (Family("B", 1, 2), "so2-sp", (), 3), (Family("B", 2, 1), "so-sp", (), 1),
    (Family("B", 0, 2), "sp", (), 1), (Family("D", 3, 1), "so2-sp", (), 3), (Family("D", 3, 1), "sostar-sp", (), 2),
    (Family("D", 3, 1), "so-sp", (), 1), (Family("D21a", alpha=H), "sl2x3", (), 4),
    (Family("D21a", alpha=H), "su2x2+sl2", (), 1), (Family("F4"), "sl2+so7", (), 1), (Family("G3"), "sl2+g2", (), 1),
    # so(2,2) is not simple, so the p0+ part splits and the odd part has four components
    (Family("D", 2, 1), "so2-sp", (), 4),
    # su(2,0) factor is compact: p1+ is one irreducible k-module
    (Family("A", 2, 1), "su-su", (3, 0, 2, 0), 1),
], ids=lambda x: x.label() if isinstance(x, Family) else str(x))
def test_component_counts(fam, tag, params, count):
    pair = build_hermitian_pair(fam, tag, params)
    assert count_p1_components(pair, pair.standard_positive_system()) == count


def test_f4_so25_component_count_is_two():
    # the odd roots all carry +delta/2 and split by the sign of eps_1 under so(2) + so(5)
    pair = build_hermitian_pair(Family("F4"), "su2+so25")
    P = pair.standard_positive_system()
    assert count_p1_components(pair, P) == 2
    tops = possys.maximal_weights(pair, P, split(pair, P)[2])
    assert sorted(t[0] for t in tops) == [-H, H]


def test_component_count_needs_admissible():
    fam = Family("F4")
    pair = build_hermitian_pair(fam, "su2+so25")
    P0 = positive_system_from_simple(pair.sys, possys.f4_untransformed_simple(fam))
    with pytest.raises(NotAdmissible):
        count_p1_components(pair, P0)
    with pytest.raises(NotAdmissible):
        flip_noncompact(pair, P0)


def test_simple_system_facts_examples():
    rep = simple_system_facts(*_std(Family("B", 2, 1), "so2-sp"))
    assert rep["a"] == rep["A"]
    rep = simple_system_facts(*_std(Family("D21a", alpha=H), "sl2x3"))
    assert rep["a"] == 0 and rep["compact_simple"] == []
    rep = simple_system_facts(*_std(Family("A", 2, 1), "su-su", (2, 1, 1, 1)))
    for bp, (b, mult) in rep["decompositions"].items():
        assert all(m >= 0 for m in mult)


def _std(fam, tag, params=()):
    pair = build_hermitian_pair(fam, tag, params)
    return pair, pair.standard_positive_system()
