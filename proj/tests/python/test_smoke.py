import os

import pytest

import lchain


def test_l_group_tables():
    quad = [lchain.l_group_name(lchain.Flavor.quadratic, n) for n in range(8)]
    sym = [lchain.l_group_name(lchain.Flavor.symmetric, n) for n in range(8)]
    assert quad == ["Z", "0", "Z/2", "0"] * 2
    assert sym == ["Z", "Z/2", "0", "0"] * 2


def test_exact_integers_survive_the_boundary():
    big = 10**40
    m = lchain.IntMatrix([[big]])
    assert m.rows() == [[big]]
    assert lchain.signature(m) == 1
    assert lchain.signature(lchain.IntMatrix([[-big]])) == -1
    assert lchain.signature(lchain.e8_matrix()) == 8


def test_homology_and_q_groups():
    cone2 = lchain.ChainComplex(0, [1, 1], {1: lchain.IntMatrix([[2]])})
    assert lchain.homology(cone2, 0) == lchain.AbelianGroup(0, [2])
    assert lchain.homology(cone2, 1).trivial()

    pt = lchain.ChainComplex.point()
    groups = [lchain.q_group(pt, n, lchain.Flavor.quadratic) for n in range(4)]
    assert groups[0] == lchain.AbelianGroup(1, [])
    assert groups[1] == lchain.AbelianGroup(0, [2])
    assert groups[2].trivial()
    assert groups[3] == lchain.AbelianGroup(0, [2])


def test_l_classes_and_products():
    e8 = lchain.e8_quadratic()
    assert lchain.verify_poincare(e8)
    c = lchain.l_class(e8)
    assert (c.group, c.value) == ("Z", 1)

    assert lchain.l_class(lchain.hyperbolic_quadratic()).value == 0
    assert lchain.l_class(lchain.arf_quadratic()).value == 1
    assert not lchain.verify_poincare(lchain.det2_symmetric())

    square = lchain.l_class(lchain.product(e8, e8))
    assert (square.group, square.value) == ("Z", 8)


def test_sphere_arithmetic():
    a = lchain.TElem(4, 4, 1, 2, 0)
    b = lchain.TElem(4, 4, 3, 4, 5)
    assert lchain.whitney(a, b) == lchain.TElem(4, 4, 4, 6, 15)
    assert lchain.whitney(a, lchain.whitney_inverse(a)) == lchain.TElem.zero(4, 4)
    assert lchain.nonadditivity_demo(3, 5) == (0, 30)
    f = lchain.SElem(4, 4, 2, 7)
    g = lchain.SElem(4, 4, -2, -7)
    lhs, rhs, ok = lchain.reconcile_check(f, g)
    assert ok and lhs == rhs
    with pytest.raises(ValueError):
        lchain.TElem(3, 4, 1, 0, 0)  # nonzero slot in a trivial group


def test_spaces_and_assembly():
    s2 = lchain.boundary_of_simplex(3)
    assert s2.dimension() == 2 and lchain.certified_simply_connected(s2)

    d = lchain.dual_cells(s2, 2)
    counts = {}
    for s in s2.simplices():
        k = d.cell_dimension(s)
        counts[k] = counts.get(k, 0) + 1
    assert counts == {0: 4, 1: 6, 2: 4}
    assert sum(d.top_simplex_census().values()) == 24


def test_fixture_files_roundtrip():
    fixtures = os.environ.get("LCHAIN_FIXTURES", "fixtures")
    doc = lchain.load_json_file(os.path.join(fixtures, "e8.json"))
    e8 = lchain.poincare_from_json(doc)
    assert lchain.l_class(e8).value == 1
    again = lchain.poincare_from_json(lchain.to_json(e8))
    assert lchain.l_class(again).value == 1


def test_acceptance_suite_is_green():
    failures, report = lchain.run_acceptance()
    assert failures == 0, report
    assert report.count("[PASS]") == 9
