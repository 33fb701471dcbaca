import pytest

from spinchar import (
    InvalidDescriptor,
    build_root_system,
    bourbaki_numbering,
    dual_root_system,
    parse_descriptor,
    special_elements,
)
from spinchar.rootsys import root_system_from_json


POSITIVE_COUNTS = [
    ("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9), ("B4", 16),
    ("C2", 4), ("C3", 9), ("D3", 6), ("D4", 12), ("G2", 6), ("F4", 24),
    ("E6", 36),
]


@pytest.mark.parametrize("desc,count", POSITIVE_COUNTS)
def test_positive_root_counts(desc, count):
    rs = build_root_system(desc)
    assert len(rs.positive_roots) == count


RANK_LE_6 = (["A%d" % n for n in range(1, 7)] + ["B%d" % n for n in range(2, 7)]
             + ["C%d" % n for n in range(2, 7)] + ["D%d" % n for n in range(3, 7)]
             + ["G2", "F4", "E6"])


@pytest.mark.parametrize("desc", RANK_LE_6)
def test_rho_pairs_to_one_on_simples(desc):
    rs = build_root_system(desc)
    for a in rs.simple_roots:
        assert rs.pairing(rs.rho, a) == 1


def test_rho_is_sum_of_fundamental_weights():
    for desc in ["B3", "F4", "A2", "G2"]:
        rs = build_root_system(desc)
        assert rs.rho == rs.weight(*([1] * rs.rank))


def test_highest_root_normalization():
    for desc in ["A2", "B3", "C3", "D4", "G2", "F4", "E6"]:
        rs = build_root_system(desc)
        theta = rs.highest_root()
        assert rs.inner(theta, theta) == 2


def test_f4_distinguished_weights():
    # F4 numbering puts the short simple roots first
    rs = build_root_system("F4")
    se = special_elements(rs)
    assert rs.fw_coefficients(se.theta) == (0, 0, 0, 1)
    assert rs.fw_coefficients(se.theta_s) == (1, 0, 0, 0)
    assert rs.fw_coefficients(se.rho_s) == (1, 1, 0, 0)
    assert se.coxeter_number == 12
    assert bourbaki_numbering(rs) == [4, 3, 2, 1]


def test_c_family_distinguished_weights():
    for n in (2, 3, 4):
        rs = build_root_system("C", n)
        se = special_elements(rs)
        assert rs.fw_coefficients(se.theta) == (2,) + (0,) * (n - 1)
        assert rs.fw_coefficients(se.theta_s) == (0, 1) + (0,) * (n - 2)
        assert rs.fw_coefficients(se.rho_s) == (1,) * (n - 1) + (0,)
        assert se.coxeter_number == 2 * n


def test_b_family_distinguished_weights():
    for n in (3, 4):
        rs = build_root_system("B", n)
        se = special_elements(rs)
        assert rs.fw_coefficients(se.theta) == (0, 1) + (0,) * (n - 2)
        assert rs.fw_coefficients(se.theta_s) == (1,) + (0,) * (n - 1)
        assert rs.fw_coefficients(se.rho_s) == (0,) * (n - 1) + (1,)
    # rank 2 is the known exception: the highest root is twice the
    # spinor fundamental weight
    b2 = build_root_system("B2")
    se = special_elements(b2)
    assert b2.fw_coefficients(se.theta) == (0, 2)
    assert b2.fw_coefficients(se.theta_s) == (1, 0)
    assert se.coxeter_number == 4


def test_simply_laced_short_conventions():
    rs = build_root_system("A3")
    se = special_elements(rs)
    assert se.rho_s.is_zero()
    assert se.simple_short == ()
    assert se.theta_s == se.theta


@pytest.mark.parametrize("desc", ["B2", "B3", "B4", "C2", "C3", "C4", "F4"])
def test_even_pairing_on_short_coroots(desc):
    # (rho + rho_s, mu~) is even for every short root mu when the squared
    # length ratio is 2
    rs = build_root_system(desc)
    se = special_elements(rs)
    shifted = rs.rho + se.rho_s
    for mu in rs.short_roots():
        value = rs.pairing(shifted, mu)
        assert value.denominator == 1 and int(value) % 2 == 0


def test_dual_system_of_b_is_c():
    b3 = build_root_system("B3")
    dual, mapping = dual_root_system(b3)
    c3 = build_root_system("C3")
    assert dual.cartan_matrix == c3.cartan_matrix
    assert dual.type_label == (("C", 3),)
    # long roots fixed, short roots doubled
    for root, image in mapping.items():
        if b3.inner(root, root) == 2:
            assert image == root
        else:
            assert image == 2 * root


def test_dual_system_involution_on_cartan():
    for desc in ["B2", "C3", "F4", "G2"]:
        rs = build_root_system(desc)
        dual, _ = dual_root_system(rs)
        again, _ = dual_root_system(dual)
        assert again.cartan_matrix == rs.cartan_matrix


def test_dual_rho_shift():
    for desc, factor in [("B3", 1), ("C3", 1), ("F4", 1), ("G2", 2)]:
        rs = build_root_system(desc)
        se = special_elements(rs)
        dual, _ = dual_root_system(rs)
        assert dual.rho == rs.rho + factor * se.rho_s


def test_short_dominant_coroot_is_dual_highest_root():
    for desc in ["B3", "C4", "F4", "G2"]:
        rs = build_root_system(desc)
        se = special_elements(rs)
        dual, mapping = dual_root_system(rs)
        assert mapping[se.theta_s] == dual.highest_root()
        assert rs.pairing(rs.rho, se.theta_s) == se.coxeter_number - 1


def test_simply_laced_dual_is_isomorphic():
    a2 = build_root_system("A2")
    dual, _ = dual_root_system(a2)
    assert dual.cartan_matrix == a2.cartan_matrix


def test_parse_descriptors():
    assert parse_descriptor("B2") == [("B", 2)]
    assert parse_descriptor("A1xA1") == [("A", 1), ("A", 1)]
    assert parse_descriptor("so5") == [("B", 2)]
    assert parse_descriptor("so6") == [("D", 3)]
    assert parse_descriptor("sp6") == [("C", 3)]
    assert parse_descriptor("sl4") == [("A", 3)]
    assert parse_descriptor("e6") == [("E", 6)]


@pytest.mark.parametrize("bad", ["H3", "B1", "D2", "F5", "G3", "E5", "", "B0"])
def test_invalid_descriptors_rejected(bad):
    with pytest.raises(InvalidDescriptor):
        build_root_system(bad)


def test_rank_limit_rejection():
    with pytest.raises(InvalidDescriptor):
        build_root_system("B99")


def test_product_system():
    rs = build_root_system("A1xB2")
    assert rs.type_label == (("A", 1), ("B", 2))
    assert len(rs.positive_roots) == 5
    assert rs.space_dim == 4
    # block-diagonal form keeps factors orthogonal
    assert rs.inner(rs.simple_roots[0], rs.simple_roots[1]) == 0


def test_root_lattice_membership():
    b2 = build_root_system("B2")
    assert b2.in_root_lattice(b2.weight(1, 0))       # the short root e1
    assert not b2.in_root_lattice(b2.weight(0, 1))   # the spinor weight
    assert b2.in_root_lattice(b2.weight(0, 2))


def test_dominant_representative():
    b2 = build_root_system("B2")
    lam = b2.weight(1, 1)
    w = -lam
    dom = b2.dominant_representative(w)
    assert b2.is_dominant(dom)
    assert dom == lam  # -1 is in the Weyl group of B2


def test_json_round_trip():
    rs = build_root_system("G2")
    data = rs.to_json()
    back = root_system_from_json(data)
    assert back.cartan_matrix == rs.cartan_matrix
    assert back.type_label == rs.type_label
    assert [w.coords for w in back.fundamental_weights] == [
        w.coords for w in rs.fundamental_weights]
