import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcsuper.rootsys import (Family, FamilyError, Root, build_root_system, coroot_pair, from_json, gram_determinant,
                             is_isotropic, is_isotropic_combinatorial, pairing, parse_family, to_json, weight)


def coords(sys, odd):
    return {r.coords for r in sys.roots if r.odd == odd}


def test_a10_roots():
    s = build_root_system(Family("A", 1, 0))
    assert coords(s, False) == {weight(1, -1, 0), weight(-1, 1, 0)}
    assert coords(s, True) == {weight(1, 0, -1), weight(-1, 0, 1), weight(0, 1, -1), weight(0, -1, 1)}


def test_b01_roots():
    s = build_root_system(Family("B", 0, 1))
    assert coords(s, False) == {weight(2), weight(-2)}
    assert coords(s, True) == {weight(1), weight(-1)}


def test_d21a_roots():
    s = build_root_system(Family("D21a", alpha=Fraction(1, 2)))
    assert len(coords(s, False)) == 6
    assert coords(s, True) == {weight(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)}


@pytest.mark.parametrize("fam,count", [
    # dim g - rank: F(4) 40 - 4, G(3) 31 - 3, osp(5|2) 23 - 3, osp(2|4) 19 - 3, osp(4|2) 17 - 3
    (Family("F4"), 36), (Family("G3"), 28), (Family("B", 2, 1), 20), (Family("C", 0, 3), 16),
    (Family("D", 2, 1), 14),
])
def test_root_counts(fam, count):
    assert len(build_root_system(fam).roots) == count


def test_pairing_examples():
    s = build_root_system(Family("A", 1, 0))
    assert pairing(s, weight(1, 0, 0), weight(1, 0, 0)) == 1
    assert pairing(s, weight(0, 0, 1), weight(0, 0, 1)) == -1
    assert pairing(s, weight(3, 1, 2), weight(0, 0, 0)) == 0
    with pytest.raises(ValueError):
        pairing(s, weight(1, 0), weight(1, 0, 0))
    d = build_root_system(Family("D21a", alpha=Fraction(5, 3)))
    for r in d.odd:
        assert pairing(d, r.coords, r.coords) == 0


def test_coroot_examples():
    a = build_root_system(Family("A", 1, 0))
    assert coroot_pair(a, weight(1, -1, 0), weight(1, -1, 0)) == 2
    assert coroot_pair(a, weight(1, 0, 0), weight(1, 0, -1)) == 1
    b = build_root_system(Family("B", 0, 1))
    assert coroot_pair(b, weight(1), weight(2)) == 1
    with pytest.raises(ValueError):
        coroot_pair(b, weight(1), weight(3))


def test_isotropy_examples():
    a = build_root_system(Family("A", 1, 0))
    assert is_isotropic(a, weight(1, 0, -1))
    assert not is_isotropic(a, weight(1, -1, 0))
    b = build_root_system(Family("B", 0, 1))
    assert not is_isotropic(b, weight(1))


def all_small_families():
    out = []
    for m in range(0, 4):
        for n in range(0, 4):
            if m != n and m + n <= 4:
                out.append(Family("A", m, n))
    out += [Family("B", m, n) for m in range(0, 4) for n in range(1, 4) if m + n <= 4]
    out += [Family("C", 0, n) for n in range(2, 5)]
    out += [Family("D", m, n) for m in range(2, 4) for n in range(1, 3)]
    out += [Family("D21a", alpha=a) for a in (Fraction(1), Fraction(1, 2), Fraction(-3, 7), Fraction(2))]
    out += [Family("F4"), Family("G3")]
    return out


@pytest.mark.parametrize("fam", all_small_families(), ids=lambda f: f.label())
def test_root_system_invariants(fam):
    s = build_root_system(fam)
    cs = {r.coords: r for r in s.roots}
    for c, r in cs.items():
        assert tuple(-x for x in c) in cs
        assert is_isotropic(s, r) == is_isotropic_combinatorial(s, r)
        if is_isotropic(s, r):
            assert r.odd
        for k in (-3, -2, 2, 3):
            kc = tuple(k * x for x in c)
            assert (kc in cs) == (r.odd and pairing(s, c, c) != 0 and abs(k) == 2)
    assert gram_determinant(s) != 0
    g = s.gram
    assert all(g[i][j] == g[j][i] for i in range(s.dim) for j in range(s.dim))


@settings(max_examples=40, deadline=None)
@given(st.fractions().filter(lambda a: a not in (0, -1) and abs(a.numerator) < 10 ** 6 and a.denominator < 10 ** 6))
def test_d21a_form_nondegenerate(alpha):
    s = build_root_system(Family("D21a", alpha=alpha))
    assert gram_determinant(s) != 0
    assert all(pairing(s, r.coords, r.coords) == 0 for r in s.odd)


def test_rejected_families():
    with pytest.raises(FamilyError):
        Family("A", 1, 1)
    with pytest.raises(FamilyError):
        Family("D21a", alpha=Fraction(-1))
    with pytest.raises(FamilyError):
        Family("D21a", alpha=Fraction(0))
    with pytest.raises(FamilyError):
        Family("C", 0, 1)
    with pytest.raises(FamilyError):
        Family("Q", 1, 1)


def test_g3_accepts_three_eps_coordinates():
    fam = Family("G3")
    assert fam.normalize([1, 0, -1, 2]) == weight(2, 1, 2)
    assert fam.normalize([1, 1, 0]) == weight(1, 1, 0)
    with pytest.raises(FamilyError):
        fam.normalize([1, 2])


@pytest.mark.parametrize("fam", [Family("A", 2, 1), Family("D21a", alpha=Fraction(-2, 3)), Family("G3"),
                                 Family("B", 0, 2)], ids=lambda f: f.label())
def test_json_round_trip(fam):
    s = build_root_system(fam)
    data = json.loads(json.dumps(to_json(s)))
    assert from_json(data) == s
    assert all("/" in x or x.lstrip("-").isdigit() for r in data["roots"] for x in r["coords"])


def test_parse_family_and_labels():
    assert parse_family("D21a", alpha="1/2").label() == "D(2,1;1/2)"
    assert parse_family("C", 0, 3).label() == "C(3)"
    assert Root(weight(1, 0), True).parity == "odd"
