import pytest
from fractions import Fraction

from spinchar import (
    BudgetExceeded,
    Character,
    InvalidDescriptor,
    NotSelfDual,
    Weight,
    WeightSystem,
    build_root_system,
    enumerate_dominant_halves,
    extreme_weights,
    frobenius_schur,
    freudenthal_weights,
    irreducible_character,
    is_coprimary,
    is_decomposably_generated,
    multiplicity_of,
    orthogonality_type,
    special_elements,
    spin0_character,
    spin_character,
    spin_scalar,
)
from spinchar.spinmod import classify_candidate, classify_coprimary


def test_orthogonality_types():
    b2 = build_root_system("B2")
    assert orthogonality_type(b2, b2.weight(0, 2)) == "orthogonal"   # adjoint
    assert orthogonality_type(b2, b2.weight(0, 1)) == "symplectic"   # spinor
    c3 = build_root_system("C3")
    assert orthogonality_type(c3, c3.weight(1, 0, 0)) == "symplectic"
    a2 = build_root_system("A2")
    assert orthogonality_type(a2, a2.weight(1, 0)) == "neither"


def test_frobenius_schur_agrees_with_square_split():
    # dual route: dim(S^2 V)^g - dim(L^2 V)^g from the squared character
    cases = [("B2", (1, 0)), ("C2", (1, 0)), ("A2", (1, 1)), ("A1", (2,))]
    zero2 = None
    for desc, coeffs in cases:
        rs = build_root_system(desc)
        lam = rs.weight(*coeffs)
        ch = irreducible_character(rs, lam)
        square = ch * ch
        doubled = ch.stretch(2)
        zero = Weight((0,) * rs.space_dim)
        sym = decompose_free_multiplicity(square + doubled, rs, zero)
        alt = decompose_free_multiplicity(square - doubled, rs, zero)
        assert sym % 2 == alt % 2 == 0
        assert frobenius_schur(rs, lam) == (sym - alt) // 2


def decompose_free_multiplicity(ch, rs, lam):
    return multiplicity_of(ch, lam, rs)


def test_spin0_of_adjoint_is_rho_module():
    for desc in ["A2", "B2", "C3"]:
        rs = build_root_system(desc)
        ws = WeightSystem.adjoint(rs)
        assert spin0_character(ws) == irreducible_character(rs, rs.rho)
        assert spin_scalar(ws) == 2 ** (rs.rank // 2)


def test_spin_rank_one_series_entry():
    rs = build_root_system("A1")
    ws = freudenthal_weights(rs, rs.weight(4))
    assert ws.zero_mult == 1
    spin = spin_character(ws)
    assert spin == irreducible_character(rs, rs.weight(3))


def test_spin_of_w_plus_wstar():
    # A2 with W the defining module: Spin is the exterior algebra of W
    rs = build_root_system("A2")
    w_weights = freudenthal_weights(rs, rs.weight(1, 0))
    pairs = []
    for k, m in w_weights.nonzero.items():
        from spinchar.charring import key_weight
        mu = key_weight(rs, k)
        pairs.append((mu, m))
        pairs.append((-mu, m))
    ws = WeightSystem(rs, pairs, 0)
    spin = spin0_character(ws)
    expected = (2 * Character.one(rs)     # degrees 0 and 3 of the exterior algebra
                + irreducible_character(rs, rs.weight(1, 0))
                + irreducible_character(rs, rs.weight(0, 1)))
    assert spin == expected  # weight sum of W vanishes, so no central shift


def test_spin0_multiplies_over_direct_sums():
    rs = build_root_system("A1")
    w1 = freudenthal_weights(rs, rs.weight(2))
    w2 = freudenthal_weights(rs, rs.weight(4))
    combined = w1.direct_sum(w2)
    assert spin0_character(combined) == spin0_character(w1) * spin0_character(w2)


def test_spin_character_verifies_exterior_identity():
    rs = build_root_system("B2")
    ws = WeightSystem.adjoint(rs)
    spin = spin_character(ws, verify=True)
    assert spin.dimension() == 2 ** (ws.zero_mult // 2) * 2 ** (
        (ws.dimension() - ws.zero_mult) // 2)


def test_non_self_dual_rejected():
    rs = build_root_system("A2")
    pairs = [(r, 1) for r in rs.positive_roots]  # only one half present
    with pytest.raises((NotSelfDual, InvalidDescriptor)):
        spin0_character(WeightSystem(rs, pairs, 0))


def test_zero_weight_in_nonzero_part_rejected():
    rs = build_root_system("A1")
    with pytest.raises(InvalidDescriptor):
        WeightSystem(rs, [(Weight((0, 0)), 1)], 0)


def test_unique_half_when_weights_on_root_lines():
    rs = build_root_system("A1")
    ws = freudenthal_weights(rs, rs.weight(4))
    halves = enumerate_dominant_halves(ws)
    assert len(halves) == 1
    ext = extreme_weights(ws)
    assert len(ext) == 1
    # the half-sum (2 eps + 4 eps)/2 is the highest weight of R3
    assert ext[0] == Fraction(3, 2) * rs.simple_roots[0]


def test_adjoint_extreme_weight_is_rho():
    rs = build_root_system("B2")
    ws = WeightSystem.adjoint(rs)
    assert extreme_weights(ws) == [rs.rho]


def test_halves_of_the_even_split_module():
    # B3 restricted to its even part: the defining module has two halves
    from spinchar import inner_grading
    grading = inner_grading(build_root_system("B3"), 3)
    halves = enumerate_dominant_halves(grading.delta1)
    assert len(halves) == 2
    ext = extreme_weights(grading.delta1)
    h = Fraction(1, 2)
    assert sorted(w.coords for w in ext) == [(h, h, -h), (h, h, h)]


def test_f4_so9_extreme_weights():
    from spinchar import inner_grading
    grading = inner_grading(build_root_system("F4"), 1)
    halves = enumerate_dominant_halves(grading.delta1)
    assert len(halves) == 3
    ext = extreme_weights(grading.delta1)
    h = Fraction(1, 2)
    expected = {
        (Fraction(2), Fraction(0), Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(1), Fraction(1), Fraction(0)),
        (3 * h, h, h, h),
    }
    assert {w.coords for w in ext} == expected


def test_hyperplane_budget_refusal():
    rs = build_root_system("B2")
    ws = WeightSystem.adjoint(rs)
    with pytest.raises(BudgetExceeded):
        enumerate_dominant_halves(ws, hyperplane_budget=1)


def test_witness_certifies_half():
    rs = build_root_system("B2")
    ws = WeightSystem.adjoint(rs)
    for half in enumerate_dominant_halves(ws):
        for a in rs.simple_roots:
            assert rs.inner(half.witness, a) > 0
        for mu, _ in half.half:
            assert rs.inner(half.witness, mu) > 0


def test_coprimary_examples():
    for desc in ["A1", "A2", "B2", "C3", "D3", "G2", "F4"]:
        rs = build_root_system(desc)
        flag, dec = is_coprimary(WeightSystem.adjoint(rs))
        assert flag, f"{desc} adjoint"
        assert dec.summands[0][0] == rs.rho
    g2 = build_root_system("G2")
    se = special_elements(g2)
    flag, dec = is_coprimary(freudenthal_weights(g2, se.theta_s))
    assert not flag
    c2 = build_root_system("C2")
    flag, dec = is_coprimary(freudenthal_weights(c2, c2.weight(0, 1)))
    assert flag
    assert dec.summands[0][0] == special_elements(c2).rho_s


def test_decomposably_generated_examples():
    a1 = build_root_system("A1")
    assert is_decomposably_generated(freudenthal_weights(a1, a1.weight(4)))
    b2 = build_root_system("B2")
    assert is_decomposably_generated(WeightSystem.adjoint(b2))
    # the G2 little adjoint has the trivial summand, which is not extreme
    g2 = build_root_system("G2")
    se = special_elements(g2)
    assert not is_decomposably_generated(freudenthal_weights(g2, se.theta_s))


def test_symplectic_module_has_invariant_two_form():
    # a symplectic module always carries an invariant in degree two, which
    # is what rules its exterior invariants out of the free list
    rs = build_root_system("C2")
    ws = freudenthal_weights(rs, rs.weight(1, 0))
    from spinchar import exterior_powers
    zero = Weight((0, 0))
    powers = exterior_powers(ws)
    assert multiplicity_of(powers[2], zero, rs) == 1


def test_classify_rank_one():
    records = classify_coprimary(1, 8)
    found = sorted(r["weight"] for r in records if r["coprimary"])
    assert found == [["2"], ["4"]]
    r6 = next(r for r in records if r["weight"] == ["6"])
    assert r6["filter"] == "spin0-reducible"


def test_classify_filters():
    b2 = build_root_system("B2")
    # twice the highest root fails on the weight level, not at the top
    rec = classify_candidate(b2, b2.weight(0, 4))
    assert rec["filter"] == "weights-off-root-lines"
    rec = classify_candidate(b2, b2.weight(0, 1))
    assert rec["filter"] == "zero-weight"      # spinor: not in the root lattice
    a2 = build_root_system("A2")
    rec = classify_candidate(a2, a2.weight(1, 0))
    assert rec["filter"] == "not-self-dual"
    c3 = build_root_system("C3")
    rec = classify_candidate(c3, c3.weight(1, 0, 0))
    assert rec["filter"] in ("zero-weight", "symplectic",
                             "highest-weight-off-root-line")
