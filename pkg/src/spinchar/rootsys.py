"""Root systems of the simple Lie algebras, realized with exact arithmetic.

Every system lives in a fixed rational coordinate space ("epsilon
coordinates") carrying an exact symmetric positive-definite bilinear form,
normalized so the highest root of each simple factor has squared length 2.
Subsystems cut out of a bigger system (closed or not) reuse the ambient
space and form, which is what makes characters of a subalgebra and of the
full algebra directly comparable.

Simple-root numbering: A, B, C, D, G2 and the E family follow the Bourbaki
order; F4 is numbered with the short roots first (alpha1, alpha2 short,
alpha3, alpha4 long), so that the highest root is the fourth fundamental
weight. ``bourbaki_numbering`` translates back.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import factorial

from .errors import InvalidDescriptor
from .linalg import (
    block_diag,
    frac,
    inverse,
    lcm_denoms,
    matvec,
    scale_to_int,
    solve,
    vadd,
    vneg,
    vscale,
    vsub,
    vzero,
)

HALF = Fraction(1, 2)


class Weight:
    """An exact rational coordinate vector in a system's ambient space."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(frac(x) for x in coords)

    def __add__(self, other):
        return Weight(vadd(self.coords, other.coords))

    def __sub__(self, other):
        return Weight(vsub(self.coords, other.coords))

    def __neg__(self):
        return Weight(vneg(self.coords))

    def __rmul__(self, c):
        return Weight(vscale(c, self.coords))

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def __repr__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


def _wsum(weights, dim):
    total = vzero(dim)
    for w in weights:
        total = vadd(total, w.coords)
    return Weight(total)


def format_coeffs(coeffs) -> str:
    parts = [str(int(c)) if frac(c).denominator == 1 else str(c) for c in coeffs]
    return "(" + ",".join(parts) + ")"


# ---------------------------------------------------------------------------
# standard realizations


def _eps(n, *pairs):
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] = frac(c)
    return tuple(v)


def _simple_roots_classical(family: str, rank: int, dim: int):
    e = lambda i, c=1: _eps(dim, (i, c))
    chain = [vsub(e(i), e(i + 1)) for i in range(rank - 1)]
    if family == "A":
        return [vsub(e(i), e(i + 1)) for i in range(rank)]
    if family == "B":
        return chain + [e(rank - 1)]
    if family == "C":
        return chain + [e(rank - 1, 2)]
    if family == "D":
        return chain + [vadd(e(rank - 2), e(rank - 1))]
    raise InvalidDescriptor(f"unknown family {family}")


def _simple_roots_exceptional(family: str, rank: int):
    if family == "G":
        # rank 2 in the sum-zero plane of Q^3; alpha1 short
        a1 = _eps(3, (0, 1), (1, -1))
        a2 = _eps(3, (0, -2), (1, 1), (2, 1))
        return [a1, a2], 3, Fraction(1, 3)
    if family == "F":
        # short roots first: alpha1, alpha2 short; alpha3, alpha4 long
        a1 = _eps(4, (0, HALF), (1, -HALF), (2, -HALF), (3, -HALF))
        a2 = _eps(4, (3, 1))
        a3 = _eps(4, (2, 1), (3, -1))
        a4 = _eps(4, (1, 1), (2, -1))
        return [a1, a2, a3, a4], 4, Fraction(1)
    if family == "E":
        # Bourbaki realization inside Q^8
        a1 = _eps(8, (0, HALF), (7, HALF), (1, -HALF), (2, -HALF), (3, -HALF),
                  (4, -HALF), (5, -HALF), (6, -HALF))
        a2 = _eps(8, (0, 1), (1, 1))
        rest = [_eps(8, (i, -1), (i + 1, 1)) for i in range(rank - 2)]
        return ([a1, a2] + rest)[:rank], 8, Fraction(1)
    raise InvalidDescriptor(f"unknown family {family}")


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,  # D2 is not simple; spell it A1xA1
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_WEYL_ORDERS = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2**n * factorial(n),
    "C": lambda n: 2**n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n) if n > 1 else 2,
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

# exponents m_1 <= ... <= m_rank of each simple family
EXPONENTS = {
    "A": lambda n: list(range(1, n + 1)),
    "B": lambda n: list(range(1, 2 * n, 2)),
    "C": lambda n: list(range(1, 2 * n, 2)),
    "D": lambda n: sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]),
    "E": lambda n: {6: [1, 4, 5, 7, 8, 11],
                    7: [1, 5, 7, 9, 11, 13, 17],
                    8: [1, 7, 11, 13, 17, 19, 23, 29]}[n],
    "F": lambda n: [1, 5, 7, 11],
    "G": lambda n: [1, 5],
}

# translation from this library's numbering to Bourbaki's
_TO_BOURBAKI = {
    "F": {1: 4, 2: 3, 3: 2, 4: 1},
}


def _close_positive_roots(simples, inner):
    """Enumerate positive roots by closure from the simple roots.

    beta + alpha_i is a root iff the alpha_i-string through beta does not
    stop, i.e. p - <beta, alpha_i~> > 0 where p is the largest k with
    beta - k alpha_i already enumerated.
    """
    def pairing(x, a):
        return 2 * inner(x, a) / inner(a, a)

    known = {s: [0] * len(simples) for i, s in enumerate(simples)}
    for i, s in enumerate(simples):
        known[s][i] = 1
    layer = list(simples)
    while layer:
        new_layer = []
        for beta in layer:
            for i, alpha in enumerate(simples):
                p = 0
                prev = vsub(beta, alpha)
                while prev in known:
                    p += 1
                    prev = vsub(prev, alpha)
                if p - pairing(beta, alpha) > 0:
                    gamma = vadd(beta, alpha)
                    if gamma not in known:
                        coords = list(known[beta])
                        coords[i] += 1
                        known[gamma] = coords
                        new_layer.append(gamma)
        layer = new_layer
    order = sorted(known, key=lambda v: (sum(known[v]), v))
    return order, {v: tuple(known[v]) for v in order}


class RootSystem:
    """A (possibly reducible) root system realized in rational coordinates.

    Fields follow the realization: ``simple_roots`` and ``positive_roots``
    are Weight vectors in the ambient space, ``form`` is the exact bilinear
    form matrix, ``cartan_matrix[i][j]`` is the pairing of alpha_i with the
    coroot of alpha_j, and ``fundamental_weights`` live in the span of the
    roots. All values are immutable after construction.
    """

    def __init__(self, simple_roots, form, type_label=None, denom=None):
        self.form = tuple(tuple(frac(x) for x in row) for row in form)
        self.space_dim = len(form)
        self.simple_roots = tuple(Weight(s) for s in simple_roots)
        self.rank = len(self.simple_roots)

        raw, coords = _close_positive_roots(
            [s.coords for s in self.simple_roots], self._inner_raw)
        self.positive_roots = tuple(Weight(v) for v in raw)
        self._root_coords = {Weight(v): c for v, c in coords.items()}

        self.cartan_matrix = tuple(
            tuple(int(self.pairing(a, b)) for b in self.simple_roots)
            for a in self.simple_roots
        )
        self.fundamental_weights = self._fundamental_weights()
        self.rho = HALF * _wsum(self.positive_roots, self.space_dim)

        self.type_label = tuple(type_label) if type_label else self._classify()
        self.denom = denom if denom is not None else 2 * lcm_denoms(
            [w.coords for w in self.fundamental_weights]
            + [r.coords for r in self.positive_roots]
        )
        self._check_invariants()
        self._weyl_cache = None
        self._denominator_cache = None
        self._keygeom = None

    def key_geometry(self):
        """Compiled integer-arithmetic view of the key lattice (cached)."""
        if self._keygeom is None:
            self._keygeom = KeyGeometry(self)
        return self._keygeom

    # -- exact geometry ----------------------------------------------------

    def _inner_raw(self, a, b):
        fb = matvec(self.form, b)
        return sum(x * y for x, y in zip(a, fb))

    def inner(self, a: Weight, b: Weight) -> Fraction:
        return self._inner_raw(a.coords, b.coords)

    def pairing(self, x: Weight, alpha: Weight) -> Fraction:
        """<x, alpha~> = 2 (x, alpha) / (alpha, alpha)."""
        return 2 * self.inner(x, alpha) / self.inner(alpha, alpha)

    def coroot(self, alpha: Weight) -> Weight:
        return (2 / self.inner(alpha, alpha)) * alpha

    def is_dominant(self, x: Weight) -> bool:
        return all(self.pairing(x, a) >= 0 for a in self.simple_roots)

    def is_integral(self, x: Weight) -> bool:
        return all(self.pairing(x, a).denominator == 1 for a in self.simple_roots)

    def reflect(self, alpha: Weight, x: Weight) -> Weight:
        return x - self.pairing(x, alpha) * alpha

    def dominant_representative(self, x: Weight, with_sign=False):
        """The dominant element of W.x (and the sign of the word used)."""
        sign = 1
        moved = True
        while moved:
            moved = False
            for a in self.simple_roots:
                if self.pairing(x, a) < 0:
                    x = self.reflect(a, x)
                    sign = -sign
                    moved = True
        return (x, sign) if with_sign else x

    def weight(self, *fw_coeffs) -> Weight:
        """Weight from coefficients in the fundamental-weight basis."""
        if len(fw_coeffs) == 1 and isinstance(fw_coeffs[0], (list, tuple)):
            fw_coeffs = fw_coeffs[0]
        if len(fw_coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients")
        total = vzero(self.space_dim)
        for c, w in zip(fw_coeffs, self.fundamental_weights):
            total = vadd(total, vscale(c, w.coords))
        return Weight(total)

    def fw_coefficients(self, x: Weight) -> tuple:
        return tuple(self.pairing(x, a) for a in self.simple_roots)

    def format_weight(self, x: Weight) -> str:
        """Render the fundamental-weight coefficients compactly."""
        return format_coeffs(self.fw_coefficients(x))

    def root_coords(self, root: Weight) -> tuple:
        return self._root_coords[root]

    def in_root_lattice(self, x: Weight) -> bool:
        """Whether x is an integer combination of the simple roots."""
        basis = [a.coords for a in self.simple_roots]
        gram = tuple(tuple(self._inner_raw(a, b) for b in basis) for a in basis)
        rhs = tuple(self._inner_raw(x.coords, a) for a in basis)
        try:
            sol = solve(gram, rhs)
        except ValueError:
            return False
        if any(c.denominator != 1 for c in sol):
            return False
        recon = vzero(self.space_dim)
        for c, a in zip(sol, basis):
            recon = vadd(recon, vscale(c, a))
        return recon == x.coords

    # -- derived structure ---------------------------------------------------

    def _fundamental_weights(self):
        if self.rank == 0:
            return ()
        inv = inverse(tuple(tuple(frac(x) for x in row) for row in self.cartan_matrix))
        out = []
        for i in range(self.rank):
            total = vzero(self.space_dim)
            for k in range(self.rank):
                total = vadd(total, vscale(inv[i][k], self.simple_roots[k].coords))
            out.append(Weight(total))
        return tuple(out)

    def _check_invariants(self):
        for i, a in enumerate(self.simple_roots):
            if self.inner(a, a) <= 0:
                raise InvalidDescriptor("form is not positive on the roots")
            if self.rank and self.pairing(self.rho, a) != 1:
                raise InvalidDescriptor("rho is not the sum of the fundamental weights")
        for root in self.positive_roots:
            if any(c < 0 for c in self._root_coords[root]):
                raise InvalidDescriptor("positive root with negative coordinates")

    def _components(self):
        """Connected components of the Dynkin diagram, as index lists."""
        n = self.rank
        adj = [[j for j in range(n) if j != i and self.cartan_matrix[i][j] != 0]
               for i in range(n)]
        seen, comps = set(), []
        for i in range(n):
            if i in seen:
                continue
            comp, stack = [], [i]
            while stack:
                k = stack.pop()
                if k in seen:
                    continue
                seen.add(k)
                comp.append(k)
                stack.extend(adj[k])
            comps.append(sorted(comp))
        return comps, adj

    def _classify(self):
        comps, adj = self._components()
        label = []
        for comp in comps:
            label.append(self._classify_component(comp, adj))
        return tuple(sorted(label))

    def _classify_component(self, comp, adj):
        k = len(comp)
        norms = {i: self.inner(self.simple_roots[i], self.simple_roots[i]) for i in comp}
        ratio = max(norms.values()) / min(norms.values())
        degrees = {i: len([j for j in adj[i] if j in comp]) for i in comp}
        branched = any(d >= 3 for d in degrees.values())
        if k == 1:
            return ("A", 1)
        if ratio == 3:
            return ("G", 2)
        if ratio == 2:
            short = min(norms.values())
            n_short = sum(1 for i in comp if norms[i] == short)
            if k == 4 and n_short == 2:
                return ("F", 4)
            if k == 2:
                # one short, one long: B2 when the short root comes last
                return ("B", 2) if norms[comp[-1]] == short else ("C", 2)
            if n_short == 1:
                return ("B", k)
            return ("C", k)
        if not branched:
            return ("A", k)
        legs = sorted(self._branch_legs(comp, adj)[1])
        if legs[0] == 1 and legs[1] == 1:
            return ("D", k)
        return ("E", k)

    def _branch_legs(self, comp, adj):
        branch = next(i for i in comp if len([j for j in adj[i] if j in comp]) >= 3)
        legs = []
        for start in adj[branch]:
            if start not in comp:
                continue
            length, prev, cur = 1, branch, start
            while True:
                nxt = [j for j in adj[cur] if j in comp and j != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            legs.append(length)
        return branch, legs

    # -- distinguished elements ----------------------------------------------

    def is_simple(self) -> bool:
        return len(self.type_label) == 1

    def highest_root(self) -> Weight:
        cands = [r for r in self.positive_roots if self.is_dominant(r)]
        norm = max(self.inner(r, r) for r in cands)
        longs = [r for r in cands if self.inner(r, r) == norm]
        if len(longs) != 1:
            raise InvalidDescriptor("no unique highest root; system not simple")
        return longs[0]

    def short_roots(self):
        if not self.is_simple():
            raise InvalidDescriptor("short/long split needs a simple system")
        norms = {self.inner(r, r) for r in self.positive_roots}
        if len(norms) == 1:
            return ()
        short = min(norms)
        return tuple(r for r in self.positive_roots if self.inner(r, r) == short)

    def long_roots(self):
        shorts = set(self.short_roots())
        return tuple(r for r in self.positive_roots if r not in shorts)

    def weyl_order(self) -> int:
        n = 1
        for fam, r in self.type_label:
            n *= _WEYL_ORDERS[fam](r)
        return n

    def exponents(self):
        out = []
        for fam, r in self.type_label:
            out.extend(EXPONENTS[fam](r))
        return sorted(out)

    # -- serialization ---------------------------------------------------------

    def descriptor(self) -> str:
        return "x".join(f"{fam}{r}" for fam, r in self.type_label)

    def to_json(self) -> dict:
        return {
            "type": self.descriptor(),
            "space_dim": self.space_dim,
            "simple_roots": [[str(c) for c in a.coords] for a in self.simple_roots],
            "positive_roots": [[str(c) for c in a.coords] for a in self.positive_roots],
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "bilinear_form": [[str(c) for c in row] for row in self.form],
            "fundamental_weights": [[str(c) for c in w.coords] for w in self.fundamental_weights],
            "bourbaki_numbering": bourbaki_numbering(self),
        }

    def __repr__(self):
        return f"RootSystem({self.descriptor()})"


class KeyGeometry:
    """Integer-only geometry on denom-scaled coordinate keys.

    Inner products come back scaled by a fixed positive integer, which is
    harmless for the comparisons and exact divisions they feed.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.denom = rs.denom
        fq = lcm_denoms(rs.form)
        self.form_int = tuple(tuple(int(x * fq) for x in row) for row in rs.form)
        self.scale = fq * rs.denom * rs.denom  # (x, y) = inner_keys / scale
        self.simple_keys = tuple(scale_to_int(a.coords, rs.denom) for a in rs.simple_roots)
        self.positive_keys = tuple(scale_to_int(r.coords, rs.denom) for r in rs.positive_roots)
        self.rho_key = scale_to_int(rs.rho.coords, rs.denom)
        # pairing(x, alpha_i) = 2 dot(key, w_i) / n_i, both integers
        self.simple_w = tuple(self._matvec(k) for k in self.simple_keys)
        self.simple_n = tuple(
            sum(a * b for a, b in zip(k, w))
            for k, w in zip(self.simple_keys, self.simple_w))

    def _matvec(self, key):
        return tuple(sum(r * k for r, k in zip(row, key)) for row in self.form_int)

    def inner_keys(self, k1, k2) -> int:
        w = self._matvec(k2)
        return sum(a * b for a, b in zip(k1, w))

    def pairing_num(self, key, i) -> int:
        """Numerator of <key, alpha_i~> over simple_n[i]/2."""
        return 2 * sum(a * b for a, b in zip(key, self.simple_w[i]))

    def is_dominant_key(self, key) -> bool:
        return all(self.pairing_num(key, i) >= 0 for i in range(len(self.simple_keys)))

    def reflect_key(self, key, i):
        num = self.pairing_num(key, i)
        n = self.simple_n[i]
        if num % n:
            raise ValueError("reflection leaves the key lattice")
        c = num // n
        a = self.simple_keys[i]
        return tuple(x - c * y for x, y in zip(key, a))

    def dominant_key(self, key):
        moved = True
        while moved:
            moved = False
            for i in range(len(self.simple_keys)):
                if self.pairing_num(key, i) < 0:
                    key = self.reflect_key(key, i)
                    moved = True
        return key


def bourbaki_numbering(rs: RootSystem) -> list:
    """For each simple root, its index in Bourbaki's numbering (per factor)."""
    out = []
    offset = 0
    comps, _ = rs._components()
    for comp, (fam, r) in zip(comps, rs.type_label):
        table = _TO_BOURBAKI.get(fam, {})
        for pos, _ in enumerate(comp, start=1):
            out.append(offset + table.get(pos, pos))
        offset += r
    return out


# ---------------------------------------------------------------------------
# constructors


MAX_BUILD_RANK = 24


def _build_simple(family: str, rank: int) -> RootSystem:
    if family not in _VALID_RANKS or not _VALID_RANKS[family](rank):
        raise InvalidDescriptor(f"{family}{rank} is not a valid simple type")
    if rank > MAX_BUILD_RANK:
        raise InvalidDescriptor(
            f"{family}{rank}: rank exceeds the construction limit"
            f" {MAX_BUILD_RANK}")
    if family in "ABCD":
        dim = rank + 1 if family == "A" else rank
        simples = _simple_roots_classical(family, rank, dim)
        scale = Fraction(1, 2) if family == "C" else Fraction(1)
    else:
        simples, dim, scale = _simple_roots_exceptional(family, rank)
    form = tuple(
        tuple(scale if i == j else Fraction(0) for j in range(dim)) for i in range(dim)
    )
    rs = RootSystem(simples, form, type_label=[(family, rank)])
    expected = _POSITIVE_COUNTS[family](rank)
    if len(rs.positive_roots) != expected:
        raise InvalidDescriptor(
            f"closure enumeration for {family}{rank} gave {len(rs.positive_roots)}"
            f" positive roots, expected {expected}")
    theta = rs.highest_root()
    if rs.inner(theta, theta) != 2:
        raise InvalidDescriptor(f"{family}{rank}: highest root not normalized")
    return rs


_ALIASES = [
    (re.compile(r"^sl(\d+)$"), lambda n: ("A", n - 1)),
    (re.compile(r"^su(\d+)$"), lambda n: ("A", n - 1)),
    (re.compile(r"^so(\d+)$"), lambda n: ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)),
    (re.compile(r"^sp(\d+)$"), lambda n: ("C", n // 2)),
    (re.compile(r"^([a-g])(\d+)$"), None),
]


def _parse_factor(token: str):
    token = token.strip().lower()
    for pattern, translate in _ALIASES:
        m = pattern.match(token)
        if not m:
            continue
        if translate is not None:
            fam, rank = translate(int(m.group(1)))
        else:
            fam, rank = m.group(1).upper(), int(m.group(2))
        if fam not in _VALID_RANKS or not _VALID_RANKS[fam](rank):
            raise InvalidDescriptor(f"{token!r} is not a valid simple type")
        return fam, rank
    raise InvalidDescriptor(f"cannot parse root-system descriptor {token!r}")


def parse_descriptor(text: str):
    """Parse "B2", "A1xA1", "so5", "F4" ... into a list of (family, rank)."""
    parts = re.split(r"[x+*]", text)
    if not parts or not all(p.strip() for p in parts):
        raise InvalidDescriptor(f"cannot parse root-system descriptor {text!r}")
    return [_parse_factor(p) for p in parts]


_BUILD_CACHE = {}


def build_root_system(descriptor, rank=None) -> RootSystem:
    """Build a root system from a descriptor string or (family, rank).

    Products are concatenations of simple factors with block-diagonal form,
    e.g. ``build_root_system("A1xA1")``. Instances are cached per type so
    enumerated Weyl groups are shared.
    """
    if rank is not None:
        factors = [(str(descriptor).upper(), int(rank))]
    else:
        factors = parse_descriptor(descriptor)
    cache_key = tuple(factors)
    if cache_key in _BUILD_CACHE:
        return _BUILD_CACHE[cache_key]
    rs = _build_uncached(factors)
    _BUILD_CACHE[cache_key] = rs
    return rs


def _build_uncached(factors) -> RootSystem:
    systems = [_build_simple(fam, r) for fam, r in factors]
    if len(systems) == 1:
        return systems[0]
    form = block_diag([s.form for s in systems])
    simples = []
    offset = 0
    total = sum(s.space_dim for s in systems)
    for s in systems:
        for a in s.simple_roots:
            simples.append(vzero(offset) + a.coords + vzero(total - offset - s.space_dim))
        offset += s.space_dim
    return RootSystem(simples, form, type_label=[t for s in systems for t in s.type_label])


# ---------------------------------------------------------------------------
# special elements of a simple system


class SpecialElements:
    """Highest root, short dominant root, rho-type sums, Coxeter number."""

    def __init__(self, rs: RootSystem):
        if not rs.is_simple():
            raise InvalidDescriptor("special elements need a simple system")
        self.rs = rs
        self.theta = rs.highest_root()
        shorts = rs.short_roots()
        self.two_lengths = bool(shorts)
        self.rho = rs.rho
        dim = rs.space_dim
        if shorts:
            dominant_short = [r for r in shorts if rs.is_dominant(r)]
            assert len(dominant_short) == 1
            self.theta_s = dominant_short[0]
            self.rho_s = HALF * _wsum(shorts, dim)
            self.rho_l = HALF * _wsum(rs.long_roots(), dim)
            self.simple_short = tuple(
                i for i, a in enumerate(rs.simple_roots) if a in set(shorts))
        else:
            # single length: every root counted long
            self.theta_s = self.theta
            self.rho_s = Weight(vzero(dim))
            self.rho_l = rs.rho
            self.simple_short = ()
        self.simple_long = tuple(
            i for i in range(rs.rank) if i not in self.simple_short)
        # rho_s must equal the sum of the short fundamental weights
        expected = _wsum([rs.fundamental_weights[i] for i in self.simple_short], dim)
        assert self.rho_s == expected, "rho_s != sum of short fundamental weights"
        self.coxeter_number = int(rs.pairing(rs.rho, self.theta_s)) + 1

    def as_dict(self):
        rs = self.rs
        return {
            "theta": rs.fw_coefficients(self.theta),
            "theta_s": rs.fw_coefficients(self.theta_s),
            "rho": rs.fw_coefficients(self.rho),
            "rho_s": rs.fw_coefficients(self.rho_s),
            "rho_l": rs.fw_coefficients(self.rho_l),
            "coxeter_number": self.coxeter_number,
            "simple_short": self.simple_short,
            "simple_long": self.simple_long,
        }


def special_elements(rs: RootSystem) -> SpecialElements:
    return SpecialElements(rs)


def dual_root_system(rs: RootSystem):
    """The dual system, realized as long roots plus r-times the short ones.

    Returns the dual RootSystem and the map root -> coroot image. The form
    is rescaled by 1/r so the new highest root again has squared length 2;
    the underlying vectors stay in the original coordinate space.
    """
    if not rs.is_simple():
        raise InvalidDescriptor("dual system needs a simple system")
    se = special_elements(rs)
    if not se.two_lengths:
        dual = RootSystem([a.coords for a in rs.simple_roots], rs.form,
                          type_label=rs.type_label, denom=rs.denom)
        return dual, {r: r for r in rs.positive_roots}
    r = rs.inner(se.theta, se.theta) / rs.inner(se.theta_s, se.theta_s)
    assert r in (2, 3)
    shorts = set(rs.short_roots())
    dual_simple = [
        (r * a).coords if a in shorts else a.coords for a in rs.simple_roots
    ]
    scaled_form = tuple(tuple(x / r for x in row) for row in rs.form)
    dual = RootSystem(dual_simple, scaled_form, denom=rs.denom)
    mapping = {
        root: (r * root if root in shorts else root) for root in rs.positive_roots
    }
    expected = rs.rho + (r - 1) * se.rho_s
    assert dual.rho == expected, "dual rho != rho + (r-1) rho_s"
    return dual, mapping


# ---------------------------------------------------------------------------
# realized subsystems


def _order_component(rs: RootSystem, comp, adj, norms):
    """Order one Dynkin component of a realized subsystem canonically."""
    if len(comp) == 1:
        return list(comp)
    degrees = {i: len([j for j in adj[i] if j in comp]) for i in comp}
    branch = [i for i in comp if degrees[i] >= 3]
    if not branch:
        ends = [i for i in comp if degrees[i] == 1]
        chains = []
        for start in ends:
            chain, prev, cur = [start], None, start
            while len(chain) < len(comp):
                nxt = [j for j in adj[cur] if j in comp and j != prev]
                prev, cur = cur, nxt[0]
                chain.append(cur)
            chains.append(chain)
        ratio = max(norms[i] for i in comp) / min(norms[i] for i in comp)
        short = min(norms[i] for i in comp)

        def preference(chain):
            key = [rs.simple_roots[i].coords for i in chain]
            if ratio == 1:
                return (0, key)
            n_short = sum(1 for i in comp if norms[i] == short)
            if ratio == 3:                      # G2: short root first
                return (0 if norms[chain[0]] == short else 1, key)
            if n_short == 2 and len(comp) == 4:  # F4 pattern: shorts first
                return (0 if norms[chain[0]] == short else 1, key)
            if n_short == 1:                    # B: short root last
                return (0 if norms[chain[-1]] == short else 1, key)
            return (0 if norms[chain[-1]] != short else 1, key)  # C: long last
        return min(chains, key=preference)
    # branched: D/E. Walk the longest leg first, fork legs last.
    b = branch[0]
    legs = []
    for start in adj[b]:
        if start not in comp:
            continue
        leg, prev, cur = [start], b, start
        while True:
            nxt = [j for j in adj[cur] if j in comp and j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            leg.append(cur)
        legs.append(leg)
    legs.sort(key=lambda leg: (-len(leg), [rs.simple_roots[i].coords for i in leg]))
    lengths = sorted(len(l) for l in legs)
    if lengths[:2] == [1, 1]:
        # D family: long chain toward the fork, then the two short legs
        main = legs[0]
        ordered = list(reversed(main)) + [b]
        tails = sorted((legs[1][0], legs[2][0]),
                       key=lambda i: rs.simple_roots[i].coords)
        return ordered + list(tails)
    # E family, Bourbaki style: legs of length 2, 1, and k
    two = next(l for l in legs if len(l) == 2)
    one = next(l for l in legs if len(l) == 1)
    rest = next(l for l in legs if l is not two and l is not one)
    return [two[1], one[0], two[0], b] + rest


def subsystem(rs: RootSystem, positive_subset) -> RootSystem:
    """Realize a subset of positive roots (a root system in its own right,
    not necessarily closed in the ambient system) as a RootSystem sharing
    the ambient space, form and key scaling."""
    pos = [w if isinstance(w, Weight) else Weight(w) for w in positive_subset]
    pos_set = set(pos)
    if len(pos_set) != len(pos):
        raise InvalidDescriptor("duplicate roots in subsystem data")
    full = pos_set | {-r for r in pos_set}
    for a in pos_set:
        for b in full:
            img = b - rs.pairing(b, a) * a
            if img not in full:
                raise InvalidDescriptor(
                    f"subset not stable under its own reflections: s_{a}({b})")
    simples = [
        a for a in pos
        if not any(a == b + c for b in pos_set for c in pos_set)
    ]
    if not simples:
        return RootSystem([], rs.form, type_label=(), denom=rs.denom)
    sub = RootSystem([a.coords for a in simples], rs.form, denom=rs.denom)
    comps, adj = sub._components()
    norms = {i: sub.inner(sub.simple_roots[i], sub.simple_roots[i])
             for i in range(sub.rank)}
    ordered = []
    keyed = []
    for comp in comps:
        order = _order_component(sub, comp, adj, norms)
        fam_rank = sub._classify_component(comp, adj)
        keyed.append((fam_rank, [sub.simple_roots[i].coords for i in order], order))
    keyed.sort(key=lambda t: (t[0], t[1]))
    for _, _, order in keyed:
        ordered.extend(order)
    final = RootSystem([sub.simple_roots[i].coords for i in ordered], rs.form,
                       denom=rs.denom)
    if set(final.positive_roots) != pos_set:
        raise InvalidDescriptor(
            "subset is not the positive system generated by its simple roots")
    return final


def root_system_from_json(data) -> RootSystem:
    if isinstance(data, str):
        data = json.loads(data)
    simples = [tuple(Fraction(c) for c in row) for row in data["simple_roots"]]
    form = tuple(tuple(Fraction(c) for c in row) for row in data["bilinear_form"])
    return RootSystem(simples, form)
