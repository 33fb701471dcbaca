import pytest

from spinchar import (
    BudgetExceeded,
    Character,
    GradedPoincare,
    NonModuleCharacter,
    Weight,
    WeightSystem,
    build_root_system,
    decompose,
    exterior_powers,
    freudenthal_weights,
    invariant_poincare,
    irreducible_character,
    multiplicity_of,
    special_elements,
    weyl_denominator,
    weyl_dimension,
)
from spinchar.charring import exact_divide


def a1_char(d):
    rs = build_root_system("A1")
    return irreducible_character(rs, rs.weight(d))


def test_rank_one_rho_character():
    rs = build_root_system("A1")
    ch = irreducible_character(rs, rs.rho)
    assert ch.dimension() == 2
    assert ch.coefficient(rs.rho) == 1
    assert ch.coefficient(-rs.rho) == 1


def test_b2_dimension_64():
    # hand value: the four positive-root factors are 2, 3, 8/3 and 4
    rs = build_root_system("B2")
    lam = rs.weight(1, 3)
    assert weyl_dimension(rs, lam) == 64
    assert irreducible_character(rs, lam).dimension() == 64


def test_f4_spin_dimension_4096():
    rs = build_root_system("F4")
    lam = rs.weight(1, 1, 0, 0)
    assert weyl_dimension(rs, lam) == 2 ** ((26 - 2) // 2)


def test_division_remainder_raises():
    rs = build_root_system("B2")
    bogus = 3 * Character.one(rs)
    with pytest.raises(NonModuleCharacter):
        exact_divide(bogus, weyl_denominator(rs), rs)


def test_nondominant_weight_rejected():
    rs = build_root_system("B2")
    from spinchar import InvalidDescriptor
    with pytest.raises(InvalidDescriptor):
        irreducible_character(rs, -rs.weight(1, 0))


def test_freudenthal_adjoint_structure():
    rs = build_root_system("B2")
    ws = freudenthal_weights(rs, rs.weight(0, 2))
    assert ws.zero_mult == rs.rank
    roots = {r.coords for r in rs.positive_roots}
    roots |= {(-r).coords for r in rs.positive_roots}
    from spinchar.charring import key_weight
    assert {key_weight(rs, k).coords for k in ws.nonzero} == roots
    assert all(m == 1 for m in ws.nonzero.values())


@pytest.mark.parametrize("desc", ["B3", "C3", "F4", "G2"])
def test_little_adjoint_zero_weight_count(desc):
    rs = build_root_system(desc)
    se = special_elements(rs)
    ws = freudenthal_weights(rs, se.theta_s)
    assert ws.zero_mult == len(se.simple_short)
    assert ws.dimension() == (se.coxeter_number + 1) * ws.zero_mult


def test_freudenthal_matches_weyl_character():
    cases = [("B2", (1, 1)), ("A2", (2, 1)), ("C3", (0, 1, 0)), ("G2", (1, 0))]
    for desc, coeffs in cases:
        rs = build_root_system(desc)
        lam = rs.weight(*coeffs)
        ws = freudenthal_weights(rs, lam)
        assert ws.character() == irreducible_character(rs, lam)


def test_decompose_irreducible_is_identity():
    rs = build_root_system("C3")
    lam = rs.weight(1, 0, 1)
    dec = decompose(irreducible_character(rs, lam))
    assert dec.summands == ((lam, 1),)


def naive_clebsch_gordan(a, b):
    """Independent oracle: peel weight multiset of R_a x R_b by hand."""
    weights = []
    for i in range(-a, a + 1, 2):
        for j in range(-b, b + 1, 2):
            weights.append(i + j)
    out = []
    while weights:
        top = max(weights)
        out.append(top)
        for w in range(-top, top + 1, 2):
            weights.remove(w)
    return sorted(out)


def test_clebsch_gordan_against_naive_oracle():
    rs = build_root_system("A1")
    for a, b in [(2, 3), (1, 1), (4, 2), (3, 3)]:
        dec = decompose(a1_char(a) * a1_char(b))
        got = sorted(int(rs.fw_coefficients(lam)[0]) for lam, m in dec
                     for _ in range(m))
        assert got == naive_clebsch_gordan(a, b)


def test_spin_r6_decomposition():
    rs = build_root_system("A1")
    ws = freudenthal_weights(rs, rs.weight(6))
    from spinchar import spin0_character
    dec = decompose(spin0_character(ws))
    heads = sorted(int(rs.fw_coefficients(l)[0]) for l, _ in dec)
    assert heads == [0, 6]


def test_multiplicity_queries():
    rs = build_root_system("B2")
    lam = rs.weight(1, 1)
    ch = irreducible_character(rs, lam)
    assert multiplicity_of(ch, lam) == 1
    assert multiplicity_of(ch, rs.weight(3, 3)) == 0
    assert multiplicity_of(ch + ch, lam) == 2


def test_noninvariant_character_rejected():
    rs = build_root_system("B2")
    with pytest.raises(NonModuleCharacter):
        decompose(Character.monomial(rs, rs.weight(1, 0)))


def test_exterior_powers_of_rank_one_adjoint():
    rs = build_root_system("A1")
    ws = WeightSystem.adjoint(rs)
    powers = exterior_powers(ws)
    assert [p.dimension() for p in powers] == [1, 3, 3, 1]
    # top power is the trivial character for a semisimple algebra
    assert powers[3] == Character.one(rs)
    zero = Weight((0, 0))
    assert [multiplicity_of(p, zero) for p in powers] == [1, 0, 0, 1]


def test_exterior_methods_agree():
    rs = build_root_system("C2")
    ws = freudenthal_weights(rs, rs.weight(0, 1))
    newton = exterior_powers(ws, method="newton")
    product = exterior_powers(ws, method="product")
    assert all(a.terms == b.terms for a, b in zip(newton, product))
    assert sum(p.dimension() for p in newton) == 2 ** ws.dimension()


def test_invariant_poincare_table_values():
    c2 = build_root_system("C2")
    gp = invariant_poincare(freudenthal_weights(c2, c2.weight(0, 1)))
    assert gp == GradedPoincare([1, 0, 0, 0, 0, 1])
    assert gp.factored() == [5]
    b2 = build_root_system("B2")
    gp = invariant_poincare(freudenthal_weights(b2, b2.weight(2, 0)))
    assert gp.factored() == [5, 9]
    aa = build_root_system("A1xA1")
    gp = invariant_poincare(freudenthal_weights(aa, aa.weight(1, 1)))
    assert gp.factored() == [4]
    assert str(gp) == "(1+t^4)"


def test_poincare_factoring_edge_cases():
    assert GradedPoincare([1, 0, 0, 1]).factored() == [3]
    assert GradedPoincare([1, 1, 1]).factored() is None
    assert GradedPoincare([1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1]
                          ).factored() == [5, 9]
    assert GradedPoincare([2, 0, 2]).factored() is None


def test_little_adjoint_product_identity():
    # ch V_{rho_s} equals the product over the positive short roots
    for desc in ["B2", "C2", "C3"]:
        rs = build_root_system(desc)
        se = special_elements(rs)
        from spinchar import plus_product
        lhs = irreducible_character(rs, se.rho_s)
        rhs = plus_product(rs, [(r, 1) for r in rs.short_roots()], ambient=rs)
        assert lhs == rhs


def test_product_budget_guard():
    rs = build_root_system("B2")
    big = irreducible_character(rs, rs.weight(2, 2))
    with pytest.raises(BudgetExceeded):
        big.__mul__(big, 10)


def test_character_serialization_shape():
    rs = build_root_system("A1")
    data = a1_char(2).to_json()
    assert data["denom"] == rs.denom
    assert all(len(pair) == 2 for pair in data["terms"])
    assert sum(c for _, c in data["terms"]) == 3
