"""The group algebra of the weight lattice: exact sparse characters.

A Character is a finite integer combination of formal exponentials e^mu.
Keys are coordinate tuples scaled by the ambient system's ``denom`` so that
every expression in sight (including half-weights e^{mu/2}) has integer
keys. Products, the Weyl character formula, Freudenthal multiplicities,
exterior powers and decomposition into irreducibles are all exact; any
division that fails to be exact raises instead of rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import BudgetExceeded, InvalidDescriptor, NonModuleCharacter
from .linalg import lcm_denoms, matvec, scale_to_int
from .rootsys import RootSystem, Weight
from .weyl import DEFAULT_WEYL_BUDGET, WeylElement, enumerate_weyl

DEFAULT_TERM_BUDGET = 5 * 10**6


def weight_key(rs: RootSystem, w: Weight):
    return scale_to_int(w.coords, rs.denom)


def key_weight(rs: RootSystem, key) -> Weight:
    return Weight(tuple(Fraction(k, rs.denom) for k in key))


def key_action(rs: RootSystem, matrix):
    """Compile a Weyl matrix into an exact integer action on keys."""
    q = lcm_denoms(matrix)
    rows = [tuple(int(x * q) for x in row) for row in matrix]

    def act(key):
        out = []
        for row in rows:
            v = sum(a * b for a, b in zip(row, key))
            if v % q:
                raise ValueError("Weyl action leaves the key lattice")
            out.append(v // q)
        return tuple(out)

    return act


class Character:
    """A sparse integer-valued function on (half of) the weight lattice."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms=None):
        self.rs = rs
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, rs):
        return cls(rs, {(0,) * rs.space_dim: 1})

    @classmethod
    def monomial(cls, rs, w: Weight, coeff=1):
        return cls(rs, {weight_key(rs, w): coeff})

    @classmethod
    def from_weights(cls, rs, pairs):
        terms = {}
        for w, c in pairs:
            k = weight_key(rs, w)
            terms[k] = terms.get(k, 0) + c
        return cls(rs, terms)

    def coefficient(self, w: Weight) -> int:
        try:
            return self.terms.get(weight_key(self.rs, w), 0)
        except ValueError:
            return 0

    def dimension(self) -> int:
        return sum(self.terms.values())

    def support(self):
        return [key_weight(self.rs, k) for k in sorted(self.terms)]

    def _compatible(self, other):
        if self.rs.space_dim != other.rs.space_dim or self.rs.denom != other.rs.denom:
            raise InvalidDescriptor("characters live in different coordinate lattices")

    def __add__(self, other):
        self._compatible(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return Character(self.rs, terms)

    def __sub__(self, other):
        self._compatible(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) - v
        return Character(self.rs, terms)

    def __rmul__(self, c: int):
        return Character(self.rs, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other, term_budget: int = DEFAULT_TERM_BUDGET):
        self._compatible(other)
        if len(self.terms) * len(other.terms) > 4 * term_budget:
            raise BudgetExceeded(
                f"product with {len(self.terms)} x {len(other.terms)} terms"
                f" exceeds the term budget {term_budget}",
                required=len(self.terms) * len(other.terms), budget=term_budget)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        if len(out) > term_budget:
            raise BudgetExceeded(
                f"product support {len(out)} exceeds the term budget {term_budget}",
                required=len(out), budget=term_budget)
        return Character(self.rs, out)

    def __eq__(self, other):
        return isinstance(other, Character) and self.terms == other.terms

    def conjugate(self):
        return Character(self.rs, {tuple(-x for x in k): v for k, v in self.terms.items()})

    def stretch(self, n: int):
        """e^mu -> e^{n mu}."""
        return Character(self.rs, {tuple(n * x for x in k): v for k, v in self.terms.items()})

    def apply(self, w: WeylElement):
        act = key_action(self.rs, w.matrix)
        return Character(self.rs, {act(k): v for k, v in self.terms.items()})

    def is_invariant(self, rs: RootSystem = None) -> bool:
        """W-invariance, checked on the simple reflections of rs."""
        rs = rs or self.rs
        geom = rs.key_geometry()
        if geom.denom != self.rs.denom:
            raise InvalidDescriptor("characters live in different coordinate lattices")
        for i in range(len(geom.simple_keys)):
            n = geom.simple_n[i]
            a = geom.simple_keys[i]
            for k, v in self.terms.items():
                num = geom.pairing_num(k, i)
                if num % n:
                    return False
                c = num // n
                image = tuple(x - c * y for x, y in zip(k, a))
                if self.terms.get(image, 0) != v:
                    return False
        return True

    def to_json(self):
        return {
            "denom": self.rs.denom,
            "terms": [[list(k), v] for k, v in sorted(self.terms.items())],
        }

    def __repr__(self):
        n = len(self.terms)
        return f"Character({n} terms, dim {self.dimension()})"


# ---------------------------------------------------------------------------
# Weyl machinery


def weyl_denominator(rs: RootSystem, budget: int = DEFAULT_WEYL_BUDGET) -> Character:
    """The alternating sum over W of e^{w rho} (cached per system)."""
    if rs._denominator_cache is None:
        group = enumerate_weyl(rs, budget)
        terms = {}
        for w in group:
            k = weight_key(rs, w.apply(rs.rho))
            terms[k] = terms.get(k, 0) + w.sign
        rs._denominator_cache = Character(rs, terms)
    return rs._denominator_cache


def skew_product(rs: RootSystem, roots, ambient: RootSystem = None) -> Character:
    """Expand prod (e^{a/2} - e^{-a/2}) over the given roots."""
    ambient = ambient or rs
    out = Character.one(ambient)
    for a in roots:
        half = Fraction(1, 2) * a
        factor = Character.from_weights(ambient, [(half, 1), (-half, -1)])
        out = out * factor
    return out


def plus_product(rs: RootSystem, weights_with_mult, ambient: RootSystem = None) -> Character:
    """Expand prod (e^{mu/2} + e^{-mu/2})^{m(mu)}."""
    ambient = ambient or rs
    out = Character.one(ambient)
    for mu, m in weights_with_mult:
        half = Fraction(1, 2) * mu
        factor = Character.from_weights(ambient, [(half, 1), (-half, 1)])
        for _ in range(m):
            out = out * factor
    return out


def _order_key(rs: RootSystem):
    """Total order on keys: inner product with rho first, then lex."""
    fr = matvec(rs.form, rs.rho.coords)
    q = lcm_denoms([fr])
    fri = tuple(int(x * q) for x in fr)

    def key(k):
        return (sum(a * b for a, b in zip(fri, k)), k)

    return key


def exact_divide(num: Character, den: Character, order_rs: RootSystem) -> Character:
    """Exact division in the group algebra by leading-term elimination.

    The term order is (inner product with order_rs.rho, lex); a nonzero
    remainder means the input was not divisible and raises. A lazy max-heap
    tracks the leading term of the shrinking remainder.
    """
    import heapq

    okey = _order_key(order_rs)
    if not den.terms:
        raise ZeroDivisionError("division by the zero character")
    if not num.terms:
        return Character(num.rs, {})
    den_lead = max(den.terms, key=okey)
    den_lead_coeff = den.terms[den_lead]
    rem = dict(num.terms)
    quot = {}
    den_items = list(den.terms.items())
    # in a group algebra the minimal terms of an exact product multiply,
    # so every quotient shift stays at or above this floor
    floor = (min(okey(k)[0] for k in num.terms)
             - min(okey(k)[0] for k in den.terms))

    def heap_entry(k):
        h, _ = okey(k)
        return (-h, tuple(-x for x in k), k)

    heap = [heap_entry(k) for k in rem]
    heapq.heapify(heap)
    while heap:
        _, _, lead = heapq.heappop(heap)
        c = rem.get(lead, 0)
        if not c:
            continue
        if c % den_lead_coeff:
            raise NonModuleCharacter("division is not exact (coefficient)")
        q = c // den_lead_coeff
        shift = tuple(a - b for a, b in zip(lead, den_lead))
        if okey(shift)[0] < floor:
            raise NonModuleCharacter("division is not exact (support floor)")
        quot[shift] = quot.get(shift, 0) + q
        for k, v in den_items:
            kk = tuple(a + b for a, b in zip(shift, k))
            old = rem.get(kk, 0)
            nv = old - q * v
            if nv:
                if not old:
                    heapq.heappush(heap, heap_entry(kk))
                rem[kk] = nv
            else:
                rem.pop(kk, None)
    if any(rem.values()):
        raise NonModuleCharacter("division left a nonzero remainder")
    return Character(num.rs, quot)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible with highest weight lam (exact product)."""
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= rs.inner(lam + rs.rho, a) / rs.inner(rs.rho, a)
    if num.denominator != 1:
        raise InvalidDescriptor(f"Weyl dimension for {lam} not integral")
    return int(num)


def irreducible_character(rs: RootSystem, lam: Weight,
                          budget: int = DEFAULT_WEYL_BUDGET) -> Character:
    """Weyl character formula, computed by exact division in the group algebra."""
    if not rs.is_dominant(lam):
        raise InvalidDescriptor(f"{lam} is not dominant")
    if not rs.is_integral(lam):
        raise InvalidDescriptor(f"{lam} is not integral")
    if rs.rank == 0:
        return Character.monomial(rs, lam)
    group = enumerate_weyl(rs, budget)
    target = lam + rs.rho
    terms = {}
    for w in group:
        k = weight_key(rs, w.apply(target))
        terms[k] = terms.get(k, 0) + w.sign
    num = Character(rs, terms)
    ch = exact_divide(num, weyl_denominator(rs, budget), rs)
    if ch.dimension() != weyl_dimension(rs, lam):
        raise NonModuleCharacter(
            f"character of {lam} has dimension {ch.dimension()},"
            f" Weyl formula gives {weyl_dimension(rs, lam)}")
    return ch


def multiplicity_of(ch: Character, lam: Weight, rs: RootSystem = None,
                    budget: int = DEFAULT_WEYL_BUDGET) -> int:
    """Multiplicity of the irreducible V_lam in ch, by alternating sum."""
    rs = rs or ch.rs
    if rs.rank == 0:
        return ch.coefficient(lam)
    group = enumerate_weyl(rs, budget)
    total = 0
    target = lam + rs.rho
    for w in group:
        shifted = w.apply(target) - rs.rho
        total += w.sign * ch.coefficient(shifted)
    return total


# ---------------------------------------------------------------------------
# weight systems


class WeightSystem:
    """The multiset of weights of a finite-dimensional module."""

    def __init__(self, rs: RootSystem, nonzero, zero_mult: int = 0):
        self.rs = rs
        self.nonzero = {}
        for w, m in (nonzero.items() if isinstance(nonzero, dict) else nonzero):
            if m <= 0:
                raise InvalidDescriptor("weight multiplicities must be positive")
            k = w if isinstance(w, tuple) else weight_key(rs, w)
            if all(x == 0 for x in k):
                raise InvalidDescriptor("zero weight passed in the nonzero part")
            self.nonzero[k] = self.nonzero.get(k, 0) + m
        self.zero_mult = zero_mult

    def dimension(self) -> int:
        return self.zero_mult + sum(self.nonzero.values())

    def weights(self):
        return [(key_weight(self.rs, k), m) for k, m in sorted(self.nonzero.items())]

    def weight_sum(self) -> Weight:
        total = (0,) * self.rs.space_dim
        for k, m in self.nonzero.items():
            total = tuple(t + m * x for t, x in zip(total, k))
        return Weight(tuple(Fraction(x, self.rs.denom) for x in total))

    def is_self_dual(self) -> bool:
        return all(self.nonzero.get(tuple(-x for x in k)) == m
                   for k, m in self.nonzero.items())

    def character(self) -> Character:
        terms = dict(self.nonzero)
        if self.zero_mult:
            terms[(0,) * self.rs.space_dim] = self.zero_mult
        return Character(self.rs, terms)

    def canonical_half(self):
        """One weight from each +-pair (lexicographically positive side)."""
        half = []
        for k, m in sorted(self.nonzero.items()):
            if k > tuple(-x for x in k):
                half.append((key_weight(self.rs, k), m))
        return half

    def direct_sum(self, other: "WeightSystem") -> "WeightSystem":
        if other.rs is not self.rs:
            raise InvalidDescriptor("direct sum needs a common acting algebra")
        merged = dict(self.nonzero)
        for k, m in other.nonzero.items():
            merged[k] = merged.get(k, 0) + m
        return WeightSystem(self.rs, merged, self.zero_mult + other.zero_mult)

    @classmethod
    def adjoint(cls, rs: RootSystem) -> "WeightSystem":
        pairs = [(r, 1) for r in rs.positive_roots] + [(-r, 1) for r in rs.positive_roots]
        return cls(rs, pairs, zero_mult=rs.rank)

    def __repr__(self):
        return f"WeightSystem(dim {self.dimension()}, m(0)={self.zero_mult})"


def weyl_orbit_keys(rs: RootSystem, key):
    """The Weyl orbit of a key, by closure under simple reflections."""
    geom = rs.key_geometry()
    orbit = {key}
    frontier = [key]
    while frontier:
        nxt = []
        for k in frontier:
            for i in range(len(geom.simple_keys)):
                v = geom.reflect_key(k, i)
                if v not in orbit:
                    orbit.add(v)
                    nxt.append(v)
        frontier = nxt
    return orbit


def freudenthal_weights(rs: RootSystem, lam: Weight) -> WeightSystem:
    """Full weight multiset of the irreducible V_lam via Freudenthal's
    recursion, cross-checked against the Weyl dimension formula."""
    if not rs.is_dominant(lam) or not rs.is_integral(lam):
        raise InvalidDescriptor(f"{lam} is not dominant integral")
    if rs.rank == 0:
        return WeightSystem(rs, [(lam, 1)] if not lam.is_zero() else [],
                            1 if lam.is_zero() else 0)
    geom = rs.key_geometry()
    rho_k = geom.rho_key
    lam_k = weight_key(rs, lam)

    def shifted_norm(k):
        s = tuple(a + b for a, b in zip(k, rho_k))
        return geom.inner_keys(s, s)

    top = shifted_norm(lam_k)

    # all ball points of lam - Q+ reachable by positive-root steps
    seen = {lam_k}
    frontier = [lam_k]
    while frontier:
        nxt = []
        for k in frontier:
            for a in geom.positive_keys:
                v = tuple(x - y for x, y in zip(k, a))
                if v not in seen and shifted_norm(v) <= top:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    dominant = [k for k in seen if geom.is_dominant_key(k)]
    rho_w = geom._matvec(rho_k)
    dominant.sort(key=lambda k: (sum(a * b for a, b in zip(rho_w, lam_k))
                                 - sum(a * b for a, b in zip(rho_w, k)), k))
    mult = {}

    def lookup(k) -> int:
        return mult.get(geom.dominant_key(k), 0)

    for mu in dominant:
        if mu == lam_k:
            mult[mu] = 1
            continue
        denom = top - shifted_norm(mu)  # scaled by geom.scale, like the sums below
        assert denom != 0, "Freudenthal denominator vanished on a dominant weight"
        total = 0
        for a in geom.positive_keys:
            fa = geom._matvec(a)
            k = 1
            w = tuple(x + y for x, y in zip(mu, a))
            while shifted_norm(w) <= top:
                m = lookup(w)
                if m:
                    total += 2 * m * sum(x * y for x, y in zip(w, fa))
                k += 1
                w = tuple(x + y for x, y in zip(w, a))
        if total % denom:
            raise NonModuleCharacter("Freudenthal recursion gave a non-integer")
        value = total // denom
        if value:
            mult[mu] = value

    # expand dominant multiplicities over Weyl orbits
    nonzero = {}
    zero_mult = 0
    total_dim = 0
    zero_key = (0,) * rs.space_dim
    for mu, m in mult.items():
        orbit = weyl_orbit_keys(rs, mu)
        total_dim += m * len(orbit)
        for k in orbit:
            if k == zero_key:
                zero_mult += m
            else:
                nonzero[k] = m
    if total_dim != weyl_dimension(rs, lam):
        raise NonModuleCharacter(
            f"Freudenthal weights of {lam} sum to {total_dim},"
            f" Weyl formula gives {weyl_dimension(rs, lam)}")
    return WeightSystem(rs, nonzero, zero_mult)


# ---------------------------------------------------------------------------
# decomposition


class Decomposition:
    """Multiset of (highest weight, multiplicity) with dimension bookkeeping."""

    def __init__(self, rs: RootSystem, summands):
        self.rs = rs
        self.summands = tuple(sorted(summands, key=lambda t: t[0].coords))

    def total_dimension(self) -> int:
        return sum(m * weyl_dimension(self.rs, lam) for lam, m in self.summands)

    def highest_weights(self):
        return [lam for lam, _ in self.summands]

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for _, m in self.summands)

    def to_json(self):
        return [
            {"weight": [str(c) for c in lam.coords],
             "fw": [str(c) for c in self.rs.fw_coefficients(lam)],
             "multiplicity": m,
             "dimension": weyl_dimension(self.rs, lam)}
            for lam, m in self.summands
        ]

    def __eq__(self, other):
        return self.summands == other.summands

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __repr__(self):
        parts = [f"{m} x V_{self.rs.format_weight(lam)}" for lam, m in self.summands]
        return "Decomposition(" + " + ".join(parts) + ")"


def decompose(ch: Character, rs: RootSystem = None,
              budget: int = DEFAULT_WEYL_BUDGET) -> Decomposition:
    """Greedy decomposition of a W-invariant character into irreducibles.

    Repeatedly picks the maximal weight of the support (inner product with
    rho first, lexicographic tiebreak), which W-invariance forces to be a
    dominant highest weight, and subtracts that full irreducible character.
    Fails loudly on any negative multiplicity.
    """
    rs = rs or ch.rs
    if not ch.is_invariant(rs):
        raise NonModuleCharacter("character is not Weyl-invariant")
    if rs.rank == 0:
        return Decomposition(rs, [(w, c) for w, c in
                                  ((key_weight(ch.rs, k), v) for k, v in ch.terms.items())])
    okey = _order_key(rs)
    rem = dict(ch.terms)
    summands = []
    while rem:
        lead = max(rem, key=okey)
        mult = rem[lead]
        lam = key_weight(ch.rs, lead)
        if mult < 0 or not rs.is_dominant(lam):
            raise NonModuleCharacter(
                f"maximal weight {lam} has multiplicity {mult} and cannot head a module")
        part = irreducible_character(rs, lam, budget)
        for k, v in part.terms.items():
            nv = rem.get(k, 0) - mult * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
        summands.append((lam, mult))
    return Decomposition(rs, summands)


# ---------------------------------------------------------------------------
# exterior powers


def _binomial_factor_update(graded, key, m, max_degree, term_budget):
    """Multiply a degree-graded dict list by (1 + t e^mu)^m in place.

    Degrees are updated from the top down so each update only reads
    lower-degree slices that still hold the previous partial product.
    """
    shifts = [(comb(m, j), tuple(j * x for x in key)) for j in range(1, m + 1)]
    for deg in range(max_degree, 0, -1):
        dst = graded[deg]
        for j, (c, shift) in enumerate(shifts, start=1):
            if j > deg:
                break
            for k, v in graded[deg - j].items():
                kk = tuple(a + b for a, b in zip(k, shift))
                nv = dst.get(kk, 0) + c * v
                if nv:
                    dst[kk] = nv
                else:
                    dst.pop(kk, None)
    size = sum(len(d) for d in graded)
    if size > term_budget:
        raise BudgetExceeded(
            f"graded exterior support {size} exceeds the term budget {term_budget}",
            required=size, budget=term_budget)


def exterior_powers(ws: WeightSystem, max_degree: int = None, method: str = "newton",
                    term_budget: int = DEFAULT_TERM_BUDGET):
    """Characters of the exterior powers of a module, degree-indexed.

    ``newton`` uses the recursion i e_i = sum_{k<=i} (-1)^{k-1} p_k e_{i-k}
    with exact division by i; ``product`` expands prod (1 + t e^mu)^{m(mu)}
    degree by degree. The two must agree, and tests check that they do.
    """
    n = ws.dimension()
    if max_degree is None:
        max_degree = n
    max_degree = min(max_degree, n)
    rs = ws.rs
    if method == "product":
        graded = [dict() for _ in range(max_degree + 1)]
        graded[0][(0,) * rs.space_dim] = 1
        if ws.zero_mult:
            _binomial_factor_update(graded, (0,) * rs.space_dim, ws.zero_mult,
                                    max_degree, term_budget)
        for key, m in sorted(ws.nonzero.items()):
            _binomial_factor_update(graded, key, m, max_degree, term_budget)
        out = [Character(rs, g) for g in graded]
    elif method == "newton":
        powers = []
        for k in range(1, max_degree + 1):
            terms = {}
            for key, m in ws.nonzero.items():
                kk = tuple(k * x for x in key)
                terms[kk] = terms.get(kk, 0) + m
            zk = (0,) * rs.space_dim
            terms[zk] = terms.get(zk, 0) + ws.zero_mult
            powers.append(Character(rs, terms))
        out = [Character.one(rs)]
        for i in range(1, max_degree + 1):
            acc = Character(rs, {})
            for k in range(1, i + 1):
                term = powers[k - 1].__mul__(out[i - k], term_budget)
                acc = acc + term if k % 2 else acc - term
            terms = {}
            for key, v in acc.terms.items():
                if v % i:
                    raise NonModuleCharacter("exterior power recursion not divisible")
                terms[key] = v // i
            out.append(Character(rs, terms))
    else:
        raise ValueError(f"unknown method {method!r}")
    if max_degree == n:
        total = sum(ch.dimension() for ch in out)
        if total != 2**n:
            raise NonModuleCharacter(
                f"exterior powers sum to {total}, expected 2^{n}")
        if ws.weight_sum().is_zero():
            for i in range(n + 1):
                if out[i].terms != out[n - i].terms:
                    raise NonModuleCharacter("exterior powers are not mirror-symmetric")
    return out


class GradedPoincare:
    """Coefficients of the Poincare polynomial of graded invariants."""

    def __init__(self, coefficients):
        self.coefficients = list(coefficients)

    def dimension(self) -> int:
        return sum(self.coefficients)

    def factored(self):
        """Factorization into (1 + t^k) terms by trial division, or None.

        In any such factorization the lowest nonconstant degree is forced
        to be a factor, so the division order is determined.
        """
        poly = list(self.coefficients)
        while poly and poly[-1] == 0:
            poly.pop()
        if poly[:1] != [1]:
            return None
        factors = []
        while len(poly) > 1:
            k = next(i for i in range(1, len(poly)) if poly[i])
            quot, ok = _divide_poly(poly, k)
            if not ok:
                return None
            factors.append(k)
            poly = quot
        if poly == [1] and factors:
            return sorted(factors)
        return None

    def __str__(self):
        factors = self.factored()
        if factors is not None:
            return "".join(f"(1+t^{k})" for k in factors)
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                prefix = "" if c == 1 else f"{c}*"
                parts.append(f"{prefix}t^{i}")
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other):
        a = list(self.coefficients)
        b = list(other.coefficients) if isinstance(other, GradedPoincare) else list(other)
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        return a == b


def _divide_poly(poly, k):
    """Divide a coefficient list by 1 + t^k within nonnegative-coefficient
    polynomials; returns (quotient, exact?)."""
    if len(poly) <= k:
        return poly, False
    rem = list(poly)
    quot = [0] * (len(poly) - k)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + k]
        quot[i] = c
        rem[i + k] = 0
        rem[i] -= c
    if any(rem) or any(c < 0 for c in quot):
        return poly, False
    return quot, True


def invariant_poincare(ws: WeightSystem, budget: int = DEFAULT_WEYL_BUDGET,
                       term_budget: int = DEFAULT_TERM_BUDGET) -> GradedPoincare:
    """Graded dimensions of the invariants in the exterior algebra.

    Coefficient i is the multiplicity of the zero weight module inside the
    i-th exterior power. When the weights sum to zero the grading is
    mirror-symmetric, so only half the degrees are expanded.
    """
    n = ws.dimension()
    symmetric = ws.weight_sum().is_zero()
    top = n // 2 if symmetric else n
    powers = exterior_powers(ws, max_degree=top, method="product",
                             term_budget=term_budget)
    rs = ws.rs
    zero = Weight((0,) * rs.space_dim)
    coeffs = [multiplicity_of(powers[i], zero, rs, budget) for i in range(top + 1)]
    if symmetric:
        mirrored = [0] * (n + 1)
        for i in range(top + 1):
            mirrored[i] = coeffs[i]
            mirrored[n - i] = coeffs[i]
        coeffs = mirrored
    if any(c < 0 for c in coeffs):
        raise NonModuleCharacter("negative invariant dimension")
    if symmetric and coeffs != coeffs[::-1]:
        raise NonModuleCharacter("invariant Poincare polynomial is not symmetric")
    return GradedPoincare(coeffs)
