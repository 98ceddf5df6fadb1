import json
from fractions import Fraction

import pytest

from hcsuper import possys
from hcsuper.realize import (SuperMatrix, borel_dimension_check, cartan_matrix, check_generator_relations,
                             is_subalgebra, matrix_algebra_dimension, realize_algebra, str_form, structural_checks,
                             super_antisymmetry_failures, super_jacobi_failures, supercommutator)
from hcsuper.rootsys import Family, build_root_system, weight
from hcsuper.linalg import determinant

E = SuperMatrix.unit


def test_odd_anticommutator_in_gl21():
    x, y = E(2, 1, 0, 2), E(2, 1, 2, 0)
    assert x.parity == 1 and y.parity == 1
    assert supercommutator(x, y) == E(2, 1, 0, 0) + E(2, 1, 2, 2)


def test_even_self_bracket_vanishes():
    x = E(2, 1, 0, 1) + E(2, 1, 1, 0).scaled(3)
    assert supercommutator(x, x).is_zero()


def test_cartan_acts_diagonally():
    h = E(2, 1, 0, 0).scaled(5) + E(2, 1, 1, 1).scaled(-2) + E(2, 1, 2, 2).scaled(7)
    for i in range(3):
        for j in range(3):
            if i != j:
                x = E(2, 1, i, j)
                d = [5, -2, 7]
                assert supercommutator(h, x) == x.scaled(d[i] - d[j])


def test_mixed_parity_rejected():
    mixed = E(2, 1, 0, 0) + E(2, 1, 0, 2)
    assert mixed.parity is None
    with pytest.raises(ValueError):
        supercommutator(mixed, E(2, 1, 0, 0))


def test_supertrace_form():
    assert str_form(E(2, 1, 2, 2), E(2, 1, 2, 2)) == -1
    assert str_form(E(2, 1, 0, 2), E(2, 1, 2, 0)) == 1


def test_dimensions():
    # sl(2|1) has dimension 3^2 - 1 = 8 with a 2-dimensional Cartan subalgebra
    a10 = realize_algebra(Family("A", 1, 0))
    assert a10.dim == 8 and a10.rank == 2
    b01 = realize_algebra(Family("B", 0, 1))
    assert b01.dim == 5 and b01.rank == 1 and len(b01.sys.roots) == 4


def test_exceptional_rejected():
    with pytest.raises(ValueError):
        realize_algebra(Family("G3"))


REALIZED = [Family("A", m, n) for m in range(4) for n in range(4) if m != n and m + n <= 4]
REALIZED += [Family("B", m, n) for m in range(3) for n in range(1, 3) if m + n <= 3]
REALIZED += [Family("C", 0, n) for n in (2, 3)] + [Family("D", 2, 1), Family("D", 3, 1), Family("D", 2, 2)]


@pytest.mark.parametrize("fam", REALIZED, ids=lambda f: f.label())
def test_roots_match_root_system(fam):
    real = realize_algebra(fam)
    assert set(real.root_vectors) == {r.coords for r in build_root_system(fam).roots}
    assert real.dim == matrix_algebra_dimension(fam)


@pytest.mark.parametrize("fam", REALIZED[:8] + [Family("B", 1, 1), Family("C", 0, 2), Family("D", 2, 1)],
                         ids=lambda f: f.label())
def test_structural_items(fam):
    rep = structural_checks(realize_algebra(fam))
    assert all(v for k, v in rep.items() if k != "form_scalar"), rep


def test_form_scalar_per_family():
    assert structural_checks(realize_algebra(Family("A", 1, 0)))["form_scalar"] == 1
    assert structural_checks(realize_algebra(Family("B", 0, 1)))["form_scalar"] == Fraction(1, 2)


@pytest.mark.parametrize("fam", [Family("A", 1, 0), Family("B", 0, 1), Family("B", 1, 1), Family("C", 0, 2)],
                         ids=lambda f: f.label())
def test_super_jacobi_and_antisymmetry(fam):
    real = realize_algebra(fam)
    assert super_jacobi_failures(real) == 0
    assert super_antisymmetry_failures(real) == 0


def test_cartan_matrix_examples():
    a = build_root_system(Family("A", 1, 0))
    assert cartan_matrix(a, [weight(1, -1, 0), weight(0, 1, -1)]) == [[2, -1], [-1, 0]]
    b = build_root_system(Family("B", 0, 1))
    assert cartan_matrix(b, [weight(1)]) == [[2]]
    with pytest.raises(ValueError):
        cartan_matrix(a, [weight(1, -1, 0), weight(-1, 1, 0)])


@pytest.mark.parametrize("fam", REALIZED[:6] + [Family("B", 1, 1), Family("C", 0, 3), Family("D", 2, 1)],
                         ids=lambda f: f.label())
def test_generator_relations_all_positive_systems(fam):
    sys = build_root_system(fam)
    real = realize_algebra(fam)
    for P in possys.enumerate_positive_systems(sys)[:12]:
        S = possys.simple_roots(P)
        assert check_generator_relations(real, S)
        assert determinant(cartan_matrix(sys, S)) != 0


def test_borel_examples():
    fam = Family("A", 1, 0)
    sys = build_root_system(fam)
    P = possys.positive_system_from_simple(sys, [weight(1, -1, 0), weight(0, 1, -1)])
    assert borel_dimension_check(fam, P.roots)
    assert not borel_dimension_check(fam, list(P.roots)[1:])
    b = Family("B", 0, 1)
    assert borel_dimension_check(b, [weight(2), weight(1)])


def test_subalgebra_of_positive_roots():
    fam = Family("B", 1, 1)
    sys = build_root_system(fam)
    real = realize_algebra(fam)
    P = possys.enumerate_positive_systems(sys)[0]
    assert is_subalgebra(real, P.coords)
    assert not is_subalgebra(real, [r.coords for r in sys.roots if r.odd])


def test_json_dump_shape():
    data = json.loads(realize_algebra(Family("B", 0, 1)).to_json())
    assert isinstance(data, list) and data
    first = data[0]
    assert set(first) == {"a", "b", "out"}
    assert all(set(o) == {"idx", "coeff"} for o in first["out"])
