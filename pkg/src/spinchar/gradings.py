"""Symmetric-pair gradings and Spin of the isotropy module.

Inner gradings split the roots by parity of the coefficient at a pivot
simple root (possible exactly when the pivot's coefficient in the highest
root is 1 or 2). Outer gradings are data: each of the four families below
carries its restricted-root system, realized in the standard coordinates
of the associated diagram subalgebra, where all the character computations
then take place.

For every grading, Spin(g1) is computed twice: from the closed formula
(highest weights w^{-1} rho - rho0 over the minimal coset section) and by
decomposing the reduced Spin character of the isotropy weights. The two
routes must agree exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidDescriptor, NotClosed
from .charring import (
    Character,
    DEFAULT_TERM_BUDGET,
    WeightSystem,
    decompose,
    exterior_powers,
    multiplicity_of,
    plus_product,
    skew_product,
    weight_key,
    weyl_dimension,
)
from .rootsys import RootSystem, Weight, build_root_system, special_elements
from .spinmod import enumerate_dominant_halves, spin0_character
from .weyl import (
    DEFAULT_WEYL_BUDGET,
    SubsystemDatum,
    cunning_parity,
    enumerate_weyl,
    minimal_coset_reps,
)

HALF = Fraction(1, 2)


class Z2Grading:
    """A symmetric-pair datum on a common Cartan coordinate space.

    ``ambient``: the root system whose Weyl group drives the coset section
    (the full algebra for inner type, the associated diagram subalgebra in
    the restricted coordinates for outer type). ``sub`` realizes the
    positive roots of g0 there; ``delta1`` is the weight system of g1 over
    the realized g0.
    """

    def __init__(self, kind, label, ambient, delta0_plus, delta1_pairs,
                 zero_mult, rho_effective, metadata=None,
                 budget=DEFAULT_WEYL_BUDGET):
        self.kind = kind
        self.label = label
        self.ambient = ambient
        self.sub = SubsystemDatum(ambient, delta0_plus, budget)
        self.g0 = self.sub.system
        self.delta1 = WeightSystem(self.g0, delta1_pairs, zero_mult)
        self.rho_effective = rho_effective
        self.metadata = metadata or {}

    @property
    def rho0(self) -> Weight:
        return self.g0.rho

    def delta1_plus(self):
        return self.delta1.canonical_half()

    def __repr__(self):
        return f"Z2Grading({self.label}, {self.kind})"


# ---------------------------------------------------------------------------
# inner gradings


def kac_marks(rs: RootSystem):
    """Coefficients of the highest root over the simple roots."""
    theta = rs.highest_root()
    return rs.root_coords(theta)


def _parity_condition(rs: RootSystem, parity):
    """Root sums must respect the Z/2 split: checked over all pairs."""
    roots = {}
    for r in rs.positive_roots:
        roots[r.coords] = parity(r)
        roots[(-r).coords] = parity(r)
    items = list(roots.items())
    index = dict(items)
    for c1, p1 in items:
        for c2, p2 in items:
            s = tuple(a + b for a, b in zip(c1, c2))
            if s in index and index[s] != (p1 + p2) % 2:
                raise InvalidDescriptor("parity condition fails on a root sum")


def inner_grading(rs: RootSystem, pivot: int,
                  budget: int = DEFAULT_WEYL_BUDGET) -> Z2Grading:
    """The inner grading splitting roots by coefficient parity at a pivot.

    ``pivot`` is 1-based. Marks 1 and 2 are the only involutive cases; a
    mark-1 pivot leaves a one-dimensional centre (Hermitian case), a
    mark-2 pivot a semisimple fixed subalgebra.
    """
    if not rs.is_simple():
        raise InvalidDescriptor("inner gradings are built per simple factor")
    if not 1 <= pivot <= rs.rank:
        raise InvalidDescriptor(f"pivot {pivot} out of range")
    mark = kac_marks(rs)[pivot - 1]
    if mark > 2:
        raise InvalidDescriptor(
            f"pivot {pivot} has mark {mark}; no involution there")

    def parity(root: Weight) -> int:
        return rs.root_coords(root)[pivot - 1] % 2

    _parity_condition(rs, parity)
    delta0_plus = [r for r in rs.positive_roots if parity(r) == 0]
    delta1_plus = [r for r in rs.positive_roots if parity(r) == 1]
    delta1_pairs = [(r, 1) for r in delta1_plus] + [(-r, 1) for r in delta1_plus]
    grading = Z2Grading(
        kind="inner",
        label=f"{rs.descriptor()}/alpha{pivot}",
        ambient=rs,
        delta0_plus=delta0_plus,
        delta1_pairs=delta1_pairs,
        zero_mult=0,
        rho_effective=rs.rho,
        metadata={"pivot": pivot, "mark": int(mark)},
        budget=budget,
    )
    span_rank = grading.g0.rank
    if mark == 2 and span_rank != rs.rank:
        raise InvalidDescriptor("mark-2 grading should have full-rank Delta0")
    if mark == 1 and span_rank != rs.rank - 1:
        raise InvalidDescriptor("mark-1 grading should leave a 1-dim centre")
    grading.metadata["hermitian"] = (mark == 1)
    grading.metadata["g0"] = grading.g0.descriptor() + ("xT1" if mark == 1 else "")
    return grading


def inner_gradings(rs: RootSystem, budget: int = DEFAULT_WEYL_BUDGET):
    """All inner gradings of a simple system (pivots of mark 1 or 2)."""
    out = []
    for i, mark in enumerate(kac_marks(rs), start=1):
        if mark <= 2:
            out.append(inner_grading(rs, i, budget))
    return out


# ---------------------------------------------------------------------------
# outer gradings (restricted-root data per family)


def _eps_weight(dim, *pairs) -> Weight:
    v = [Fraction(0)] * dim
    for i, c in pairs:
        v[i] = Fraction(c)
    return Weight(v)


def _outer_sl_even(n: int):
    """(sl_{2n}, so_{2n}): restricted roots in the standard sp_{2n} space."""
    if n < 2:
        raise InvalidDescriptor("sl_even family needs n >= 2")
    ambient = build_root_system("C", n)
    delta0_plus = [r for r in ambient.positive_roots
                   if ambient.inner(r, r) == 1]  # the D_n part {e_i +- e_j}
    delta1_pairs = [(r, 1) for r in ambient.positive_roots]
    delta1_pairs += [(-r, 1) for r in ambient.positive_roots]
    return {
        "label": f"SL{2*n}/SO{2*n}",
        "g": f"sl{2*n}", "g0": f"so{2*n}",
        "ambient": ambient,
        "delta0_plus": delta0_plus,
        "delta1_pairs": delta1_pairs,
        "zero_mult": n - 1,
        "count_roots_g": 2 * n * (2 * n - 1),
        "diagram": {"g0bar": f"sp{2*n}", "g1bar": "little adjoint V_w2"},
    }


def _outer_so_odd_odd(n: int, m: int):
    """(so_{2n+2m+2}, so_{2n+1} + so_{2m+1}) in the standard B_{n+m} space."""
    if n < 1 or m < 1:
        raise InvalidDescriptor("so_odd_odd family needs n, m >= 1")
    ambient = build_root_system("B", n + m)
    dim = ambient.space_dim
    first = range(n)
    second = range(n, n + m)
    delta0_plus = []
    for block in (first, second):
        idx = list(block)
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                delta0_plus.append(_eps_weight(dim, (idx[a], 1), (idx[b], 1)))
                delta0_plus.append(_eps_weight(dim, (idx[a], 1), (idx[b], -1)))
            delta0_plus.append(_eps_weight(dim, (idx[a], 1)))
    delta1_half = []
    for i in first:
        for k in second:
            for s in (1, -1):
                delta1_half.append(_eps_weight(dim, (i, 1), (k, s)))
    for i in first:
        delta1_half.append(_eps_weight(dim, (i, 1)))
    for k in second:
        delta1_half.append(_eps_weight(dim, (k, 1)))
    delta1_pairs = [(w, 1) for w in delta1_half] + [(-w, 1) for w in delta1_half]
    return {
        "label": f"SO{2*n+2*m+2}/SO{2*n+1}xSO{2*m+1}",
        "g": f"so{2*n+2*m+2}", "g0": f"so{2*n+1}+so{2*m+1}",
        "ambient": ambient,
        "delta0_plus": delta0_plus,
        "delta1_pairs": delta1_pairs,
        "zero_mult": 1,
        "count_roots_g": 2 * (n + m + 1) * (n + m),
        "diagram": {"g0bar": f"so{2*(n+m)+1}", "g1bar": "little adjoint V_w1"},
    }


def _outer_e6_sp8():
    """(e6, sp8): restricted roots in the standard F4 coordinates."""
    ambient = build_root_system("F", 4)
    dim = 4
    long_in_h = []
    for (i, j) in ((0, 1), (2, 3)):
        for s in (1, -1):
            long_in_h.append(_eps_weight(dim, (i, 1), (j, s)))
    shorts_plus = [r for r in ambient.positive_roots if ambient.inner(r, r) == 1]
    delta0_plus = shorts_plus + long_in_h
    long_in_h_set = {w.coords for w in long_in_h} | {(-w).coords for w in long_in_h}
    delta1_half = list(shorts_plus)
    for r in ambient.positive_roots:
        if ambient.inner(r, r) == 2 and r.coords not in long_in_h_set:
            delta1_half.append(r)
    delta1_pairs = [(w, 1) for w in delta1_half] + [(-w, 1) for w in delta1_half]
    return {
        "label": "E6/C4",
        "g": "e6", "g0": "sp8",
        "ambient": ambient,
        "delta0_plus": delta0_plus,
        "delta1_pairs": delta1_pairs,
        "zero_mult": 2,
        "count_roots_g": 72,
        "diagram": {"g0bar": "f4", "g1bar": "little adjoint V_w1"},
    }


def _outer_sl_odd(n: int):
    """(sl_{2n+1}, so_{2n+1}): the isolated diagram case, W' = {id}."""
    if n < 2:
        raise InvalidDescriptor("sl_odd family needs n >= 2 in this realization")
    ambient = build_root_system("B", n)
    se = special_elements(ambient)
    delta0_plus = list(ambient.positive_roots)
    delta1_half = list(ambient.positive_roots)
    delta1_half += [2 * r for r in se.rs.short_roots()]
    delta1_pairs = [(w, 1) for w in delta1_half] + [(-w, 1) for w in delta1_half]
    return {
        "label": f"SL{2*n+1}/SO{2*n+1}",
        "g": f"sl{2*n+1}", "g0": f"so{2*n+1}",
        "ambient": ambient,
        "delta0_plus": delta0_plus,
        "delta1_pairs": delta1_pairs,
        "zero_mult": n,
        "count_roots_g": 2 * n * (2 * n + 1),
        "diagram": {"g0bar": f"so{2*n+1}", "g1bar": "V_{2w1}"},
    }


OUTER_FAMILIES = {
    "sl_even": _outer_sl_even,
    "so_odd_odd": _outer_so_odd_odd,
    "e6_sp8": _outer_e6_sp8,
    "sl_odd": _outer_sl_odd,
}


def outer_grading(family: str, *params,
                  budget: int = DEFAULT_WEYL_BUDGET) -> Z2Grading:
    """Build one of the four outer families from its restricted-root data.

    The data is validated against the root-count bookkeeping
    #Delta = #Delta0 + #Delta1, the relation rho = rho0 + rho1 in the
    restricted space, and the zero multiplicity rk g - rk g0.
    """
    if family not in OUTER_FAMILIES:
        raise InvalidDescriptor(f"unknown outer family {family!r}")
    data = OUTER_FAMILIES[family](*params)
    ambient = data["ambient"]
    n_delta0 = 2 * len(data["delta0_plus"])
    n_delta1 = len(data["delta1_pairs"])
    if n_delta0 + n_delta1 != data["count_roots_g"]:
        raise InvalidDescriptor(
            f"{data['label']}: #Delta0 + #Delta1 = {n_delta0}+{n_delta1}"
            f" != #Delta = {data['count_roots_g']}")
    se = special_elements(ambient)
    rho_eff = ambient.rho + se.rho_s if family != "sl_odd" else None
    grading = Z2Grading(
        kind="outer",
        label=data["label"],
        ambient=ambient,
        delta0_plus=data["delta0_plus"],
        delta1_pairs=data["delta1_pairs"],
        zero_mult=data["zero_mult"],
        rho_effective=rho_eff,  # recomputed below as rho0 + rho1
        metadata={"family": family, "params": params, "g": data["g"],
                  "g0": data["g0"], "diagram": data["diagram"]},
        budget=budget,
    )
    # rho1 = half-sum of a half of Delta1, multiplicities included
    total = Weight((0,) * ambient.space_dim)
    for w, m in grading.delta1.canonical_half():
        total = total + Fraction(m) * w
    rho1 = HALF * total
    rho01 = grading.rho0 + rho1
    if grading.rho_effective is None:
        grading.rho_effective = rho01
    elif grading.rho_effective != rho01:
        raise InvalidDescriptor(
            f"{data['label']}: rho0 + rho1 != rho(g0bar) + rho_s(g0bar)")
    return grading


# ---------------------------------------------------------------------------
# Spin(g1)


class SpinSummand:
    def __init__(self, rep, lam, dimension):
        self.rep = rep          # WeylElement of the ambient group (or None)
        self.lam = lam          # highest weight, ambient coordinates
        self.dimension = dimension

    def to_json(self, grading):
        g0 = grading.g0
        return {
            "lambda": [str(c) for c in self.lam.coords],
            "fw": [str(c) for c in g0.fw_coefficients(self.lam)],
            "dimension": self.dimension,
            "w_action": None if self.rep is None else
                [[str(x) for x in row] for row in self.rep.matrix],
        }


class SpinDecomposition:
    def __init__(self, grading, summands, decomposition):
        self.grading = grading
        self.summands = summands
        self.decomposition = decomposition

    def total_dimension(self):
        return sum(s.dimension for s in self.summands)

    def weights(self):
        return sorted(s.lam.coords for s in self.summands)

    def is_multiplicity_free(self):
        return self.decomposition.is_multiplicity_free()

    def __len__(self):
        return len(self.summands)


def spin_g1(grading: Z2Grading, budget: int = DEFAULT_WEYL_BUDGET,
            term_budget: int = DEFAULT_TERM_BUDGET) -> SpinDecomposition:
    """Spin of the isotropy module, by the coset formula and by decomposing
    the reduced Spin character; a mismatch raises."""
    ambient = grading.ambient
    reps = minimal_coset_reps(ambient, grading.sub, budget)
    group = enumerate_weyl(ambient, budget)
    rho_eff = grading.rho_effective
    rho0 = grading.rho0
    summands = []
    seen = set()
    for rep in reps:
        inv = group.invert(rep)
        lam = inv.apply(rho_eff) - rho0
        if not grading.g0.is_dominant(lam):
            raise InvalidDescriptor(f"coset weight {lam} is not dominant for g0")
        if lam.coords in seen:
            raise InvalidDescriptor(f"coset weight {lam} repeats")
        seen.add(lam.coords)
        summands.append(SpinSummand(rep, lam, weyl_dimension(grading.g0, lam)))
    spin0 = spin0_character(grading.delta1, term_budget=term_budget)
    dec = decompose(spin0, grading.g0, budget)
    formula = sorted(s.lam.coords for s in summands)
    direct = sorted(lam.coords for lam, _ in dec)
    if formula != direct or not dec.is_multiplicity_free():
        raise InvalidDescriptor(
            f"{grading.label}: coset formula and character decomposition disagree:"
            f" {formula} vs {direct}")
    result = SpinDecomposition(grading, summands, dec)
    expected_dim = 2 ** ((grading.delta1.dimension() - grading.delta1.zero_mult) // 2)
    if result.total_dimension() != expected_dim:
        raise InvalidDescriptor(
            f"{grading.label}: Spin0 dimensions sum to {result.total_dimension()},"
            f" expected {expected_dim}")
    return result


def verify_tau_identity(rs: RootSystem, sub: SubsystemDatum, delta1_plus,
                        budget: int = DEFAULT_WEYL_BUDGET,
                        term_budget: int = DEFAULT_TERM_BUDGET,
                        rho: Weight = None) -> bool:
    """Exact two-sided expansion of the twisted denominator identity.

    Left side: sum over W of tau(w) e^{w rho}. Right side: the skew product
    over Delta0+ times the plus product over Delta1+. For partitions of a
    restricted system, pass the restricted rho = rho0 + rho1; the default
    is the system's own Weyl vector, which is the inner-type case.
    """
    rho = rho if rho is not None else rs.rho
    group = enumerate_weyl(rs, budget)
    terms = {}
    for w in group:
        tau, _ = cunning_parity(rs, sub, w)
        k = weight_key(rs, w.apply(rho))
        terms[k] = terms.get(k, 0) + tau
    lhs = Character(rs, terms)
    rhs = skew_product(rs, [w for w in sub.delta0_plus], ambient=rs)
    pairs = [(w, 1) for w in delta1_plus] if delta1_plus and not isinstance(
        delta1_plus[0], tuple) else delta1_plus
    rhs = rhs.__mul__(plus_product(rs, pairs, ambient=rs), term_budget)
    return lhs == rhs


def casimir_check(grading: Z2Grading, spin: SpinDecomposition = None,
                  budget: int = DEFAULT_WEYL_BUDGET) -> Fraction:
    """The quadratic Casimir of g0 acts on every Spin summand by the same
    scalar (rho, rho) - (rho0, rho0); returns that value after checking."""
    ambient = grading.ambient
    if spin is None:
        spin = spin_g1(grading, budget)
    rho_eff = grading.rho_effective
    rho0 = grading.rho0
    expected = ambient.inner(rho_eff, rho_eff) - ambient.inner(rho0, rho0)
    for s in spin.summands:
        value = ambient.inner(s.lam + 2 * rho0, s.lam)
        if value != expected:
            raise InvalidDescriptor(
                f"{grading.label}: Casimir value {value} on {s.lam},"
                f" expected {expected}")
    return expected


# ---------------------------------------------------------------------------
# equal-rank non-symmetric pairs


def equal_rank_pair(rs: RootSystem, generators,
                    budget: int = DEFAULT_WEYL_BUDGET,
                    term_budget: int = DEFAULT_TERM_BUDGET) -> dict:
    """Isotropy data for a closed full-rank subsystem h in g.

    Reports the invariant dimensions of the exterior algebra of m, the
    extreme-weight structure of its reduced Spin, and which of the
    symmetric-pair equivalences hold: (ii) dim invariants = #W^h,
    (iii) Spin0(m) generated by its extreme weights, (iv) the twisted
    denominator identity.
    """
    delta_h_plus = [w if isinstance(w, Weight) else Weight(w) for w in generators]
    pos_set = {r.coords for r in rs.positive_roots}
    h_set = {r.coords for r in delta_h_plus}
    if not h_set <= pos_set:
        raise InvalidDescriptor("generators must be positive roots of g")
    full_h = h_set | {tuple(-x for x in c) for c in h_set}
    all_roots = pos_set | {tuple(-x for x in c) for c in pos_set}
    for a in full_h:
        for b in full_h:
            s = tuple(x + y for x, y in zip(a, b))
            if s in all_roots and s not in full_h:
                raise NotClosed(f"subsystem not closed: {a} + {b}")
    sub = SubsystemDatum(rs, delta_h_plus, budget)
    if sub.system.rank != rs.rank:
        raise InvalidDescriptor("subsystem is not full rank")
    h = sub.system
    m_plus = [r for r in rs.positive_roots if r.coords not in h_set]
    m_pairs = [(r, 1) for r in m_plus] + [(-r, 1) for r in m_plus]
    ws = WeightSystem(h, m_pairs, 0)

    group = enumerate_weyl(rs, budget)
    reps = minimal_coset_reps(rs, sub, budget)
    n_wh = len(reps)
    lam_ws = []
    for rep in reps:
        inv = group.invert(rep)
        lam = inv.apply(rs.rho) - h.rho
        lam_ws.append(lam)
    spin0 = spin0_character(ws, term_budget=term_budget)
    dec = decompose(spin0, h, budget)
    dg_set = sorted(l.coords for l in lam_ws)
    dec_set = sorted(l.coords for l, _ in dec)
    halves = enumerate_dominant_halves(ws)
    powers = exterior_powers(ws, method="product", term_budget=term_budget)
    zero = Weight((0,) * rs.space_dim)
    inv_dims = [multiplicity_of(p, zero, h, budget) for p in powers]
    identity_ok = verify_tau_identity(rs, sub, m_plus, budget, term_budget)
    casimir_expected = rs.inner(rs.rho, rs.rho) - rs.inner(h.rho, h.rho)
    casimir_values = sorted({rs.inner(l + 2 * h.rho, l) for l in lam_ws})
    return {
        "g": rs.descriptor(),
        "h": h.descriptor(),
        "n_wh": n_wh,
        "extreme_count": len(halves),
        "dg_weights": dg_set,
        "spin0_weights": dec_set,
        "spin0_multiplicity_free": dec.is_multiplicity_free(),
        "invariant_dims": inv_dims,
        "invariant_total": sum(inv_dims),
        "condition_ii": sum(inv_dims) == n_wh,
        "condition_iii": dg_set == dec_set and dec.is_multiplicity_free(),
        "condition_iv": identity_ok,
        "casimir_on_dg": casimir_values,
        "casimir_expected": casimir_expected,
        "casimir_scalar_on_dg": casimir_values == [casimir_expected],
    }


# ---------------------------------------------------------------------------
# catalog


def grading_catalog(max_rank: int = 4):
    """Named constructors for the gradings the library knows how to build."""
    catalog = {}
    for fam, rank in [(f, r) for r in range(1, max_rank + 1)
                      for f in "ABCDFG" if _valid(f, r)]:
        rs = build_root_system(fam, rank)
        for i, mark in enumerate(kac_marks(rs), start=1):
            if mark > 2:
                continue
            def make(rs=rs, i=i):
                return inner_grading(rs, i)
            g = make()
            name = f"{rs.descriptor()}/{g.metadata['g0']}"
            if name in catalog:
                name = f"{name}@alpha{i}"
            catalog[name] = make
            if rs.type_label[0][0] == "A" and mark == 1:
                p, q = i, rs.rank + 1 - i
                catalog.setdefault(f"AIII({p},{q})", make)
    outer_specs = [
        ("sl_even", (2,)), ("sl_even", (3,)),
        ("so_odd_odd", (1, 1)), ("so_odd_odd", (2, 1)),
        ("e6_sp8", ()), ("sl_odd", (2,)),
    ]
    for family, params in outer_specs:
        def make(family=family, params=params):
            return outer_grading(family, *params)
        data = OUTER_FAMILIES[family](*params)
        catalog[data["label"]] = make
    return catalog


def _valid(fam, rank):
    from .rootsys import _VALID_RANKS
    return fam in _VALID_RANKS and _VALID_RANKS[fam](rank)
