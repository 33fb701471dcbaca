import pytest
from fractions import Fraction

from spinchar import (
    Character,
    InvalidDescriptor,
    NotClosed,
    SubsystemDatum,
    Weight,
    build_root_system,
    casimir_check,
    decompose,
    enumerate_weyl,
    equal_rank_pair,
    grading_catalog,
    inner_grading,
    inner_gradings,
    kac_marks,
    minimal_coset_reps,
    outer_grading,
    spin_g1,
    verify_tau_identity,
)
from spinchar.charring import skew_product, weyl_denominator


def test_kac_marks():
    assert kac_marks(build_root_system("A3")) == (1, 1, 1)
    assert kac_marks(build_root_system("B3")) == (1, 2, 2)
    assert kac_marks(build_root_system("C3")) == (2, 2, 1)
    assert kac_marks(build_root_system("D4")) == (1, 2, 1, 1)
    assert kac_marks(build_root_system("G2")) == (3, 2)
    assert kac_marks(build_root_system("F4")) == (2, 4, 3, 2)


def test_high_mark_pivot_rejected():
    with pytest.raises(InvalidDescriptor):
        inner_grading(build_root_system("G2"), 1)  # mark 3
    with pytest.raises(InvalidDescriptor):
        inner_grading(build_root_system("F4"), 2)  # mark 4


def test_b2_inner_grading_even_part():
    grading = inner_grading(build_root_system("B2"), 2)
    assert grading.metadata["mark"] == 2
    assert not grading.metadata["hermitian"]
    assert grading.g0.descriptor() == "A1xA1"
    assert grading.delta1.dimension() == 4
    assert grading.delta1.zero_mult == 0


def test_rank_one_grading_torus_case():
    grading = inner_grading(build_root_system("A1"), 1)
    assert grading.metadata["hermitian"]
    assert grading.g0.rank == 0
    sp = spin_g1(grading)
    assert len(sp) == 2
    assert sp.total_dimension() == 2
    h = Fraction(1, 2)
    assert sorted(s.lam.coords for s in sp.summands) == [(-h, h), (h, -h)]


def test_hermitian_grading_metadata():
    grading = inner_grading(build_root_system("B2"), 1)
    assert grading.metadata["hermitian"]
    assert grading.g0.rank == 1


def test_spin_g1_bn_dn():
    for n in (2, 3, 4):
        grading = inner_grading(build_root_system("B", n), n)
        sp = spin_g1(grading)
        assert len(sp) == 2
        assert sp.total_dimension() == 2 ** n
        h = Fraction(1, 2)
        expected = {tuple([h] * (n - 1) + [s * h]) for s in (1, -1)}
        assert {s.lam.coords for s in sp.summands} == expected


def test_spin_g1_f4_so9():
    grading = inner_grading(build_root_system("F4"), 1)
    assert grading.g0.descriptor() == "B4"
    sp = spin_g1(grading)
    got = {(tuple(int(c) for c in grading.g0.fw_coefficients(s.lam)), s.dimension)
           for s in sp.summands}
    assert got == {((2, 0, 0, 0), 44), ((0, 0, 1, 0), 84), ((1, 0, 0, 1), 128)}
    lam_id = Weight((2, 0, 0, 0))
    assert lam_id == grading.ambient.rho - grading.rho0
    assert casimir_check(grading, sp) == 18


def test_all_rank_le_3_inner_gradings_are_multiplicity_free():
    for desc in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"]:
        rs = build_root_system(desc)
        for grading in inner_gradings(rs):
            sp = spin_g1(grading)
            assert sp.is_multiplicity_free()
            group = enumerate_weyl(rs)
            assert len(sp) * len(grading.sub.group) == len(group)


def test_outer_sl4_so4():
    grading = outer_grading("sl_even", 2)
    assert grading.delta1.zero_mult == 1
    sp = spin_g1(grading)
    assert {s.lam.coords for s in sp.summands} == {
        (Fraction(2), Fraction(1)), (Fraction(2), Fraction(-1))}
    assert sp.total_dimension() == 16


@pytest.fixture(scope="module")
def e6_grading_and_spin():
    grading = outer_grading("e6_sp8")
    return grading, spin_g1(grading)


def test_outer_e6_sp8_data_matches_standard_presentation(e6_grading_and_spin):
    grading, sp = e6_grading_and_spin
    h = Fraction(1, 2)
    simple = [s.coords for s in grading.g0.simple_roots]
    assert simple == [
        (0, 1, 0, 0), (h, -h, -h, -h), (0, 0, 0, 1), (0, 0, 1, -1)]
    fw = [w.coords for w in grading.g0.fundamental_weights]
    assert fw == [
        (h, h, 0, 0), (1, 0, 0, 0), (1, 0, h, h), (1, 0, 1, 0)]
    # the coset section acts by the permutations (23) and (432) on the
    # epsilon basis, the latter sending eps4 to eps3
    perms = set()
    for s in sp.summands:
        images = tuple(
            tuple(s.rep.apply(Weight([1 if j == i else 0 for j in range(4)])).coords)
            for i in range(4))
        perms.add(images)
    e = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(4))
         for i in range(4)]
    id_action = tuple(e)
    swap23 = (e[0], e[2], e[1], e[3])
    cycle432 = (e[0], e[3], e[1], e[2])
    assert perms == {id_action, swap23, cycle432}


def test_outer_e6_sp8_weights(e6_grading_and_spin):
    grading, sp = e6_grading_and_spin
    got = {tuple(int(c) for c in grading.g0.fw_coefficients(s.lam))
           for s in sp.summands}
    assert got == {(5, 1, 1, 0), (3, 1, 1, 1), (1, 1, 3, 0)}
    assert sp.total_dimension() == 2 ** 20
    rho0 = grading.rho0
    fw1 = grading.g0.fundamental_weights[0]
    assert (rho0 + 2 * fw1).coords in {s.lam.coords for s in sp.summands}


def test_outer_family_validation():
    with pytest.raises(InvalidDescriptor):
        outer_grading("sl_even", 1)
    with pytest.raises(InvalidDescriptor):
        outer_grading("nonsense")
    with pytest.raises(InvalidDescriptor):
        outer_grading("so_odd_odd", 0, 1)


def test_tau_identity_trivial_partition():
    # empty odd part: the identity degenerates to the Weyl denominator
    rs = build_root_system("B2")
    sub = SubsystemDatum(rs, rs.positive_roots)
    assert verify_tau_identity(rs, sub, [])
    assert weyl_denominator(rs) == skew_product(rs, rs.positive_roots)


def test_tau_identity_inner_and_negative_control():
    rs = build_root_system("B2")
    grading = inner_grading(rs, 2)
    d1p = [w for w, _ in grading.delta1.canonical_half()]
    assert verify_tau_identity(rs, grading.sub, d1p)
    # breaking the odd part must break the identity
    broken = [d1p[0], d1p[0]]
    assert not verify_tau_identity(rs, grading.sub, broken)


def test_equal_rank_requires_closed_generators():
    rs = build_root_system("B2")
    shorts = [r for r in rs.positive_roots if rs.inner(r, r) == 1]
    with pytest.raises(NotClosed):
        equal_rank_pair(rs, shorts)


def test_equal_rank_requires_full_rank():
    rs = build_root_system("B2")
    theta = rs.highest_root()
    with pytest.raises(InvalidDescriptor):
        equal_rank_pair(rs, [theta])


def test_symmetric_pair_through_equal_rank_interface():
    rs = build_root_system("B2")
    longs = [r for r in rs.positive_roots if rs.inner(r, r) == 2]
    report = equal_rank_pair(rs, longs)
    assert report["condition_ii"] and report["condition_iii"]
    assert report["condition_iv"]
    assert report["casimir_expected"] == Fraction(3, 2)
    assert report["casimir_on_dg"] == [Fraction(3, 2)]


def test_g2_a2_pair_fails_symmetric_conditions():
    rs = build_root_system("G2")
    longs = [r for r in rs.positive_roots if rs.inner(r, r) == 2]
    report = equal_rank_pair(rs, longs)
    assert report["n_wh"] == 2
    assert report["invariant_total"] > 2
    assert not report["condition_ii"]
    assert not report["condition_iii"]
    assert not report["condition_iv"]
    assert report["casimir_scalar_on_dg"]


def test_casimir_value_so5_so4():
    rs = build_root_system("B2")
    grading = inner_grading(rs, 2)
    value = casimir_check(grading)
    rho, rho0 = rs.rho, grading.rho0
    assert value == rs.inner(rho, rho) - rs.inner(rho0, rho0)
    assert value == Fraction(3, 2)


def test_catalog_queries():
    catalog = grading_catalog()
    assert "F4/B4" in catalog
    assert "E6/C4" in catalog
    grading = catalog["F4/B4"]()
    assert grading.g0.descriptor() == "B4"
    grading = catalog["E6/C4"]()
    assert grading.kind == "outer"
    assert "AIII(1,2)" in catalog


def test_hermitian_exterior_heads():
    # one A-type Hermitian grading: the heads of the exterior algebra of
    # the negative half are the shifted minimal-coset images of rho
    rs = build_root_system("A2")
    grading = inner_grading(rs, 1)
    wminus = [-w for w, _ in grading.delta1.canonical_half()]
    ext = Character.one(rs)
    zero = Weight((0,) * rs.space_dim)
    for mu in wminus:
        ext = ext * Character.from_weights(rs, [(zero, 1), (mu, 1)])
    dec = decompose(ext, grading.g0)
    heads = sorted(l.coords for l, _ in dec)
    group = enumerate_weyl(rs)
    reps = minimal_coset_reps(rs, grading.sub)
    expected = sorted((group.invert(r).apply(rs.rho) - rs.rho).coords
                      for r in reps)
    assert heads == expected
