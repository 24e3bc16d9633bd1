"""Exact split-octonion arithmetic over the basis (1, j1, j2, j3, I, J1, J2, J3).

Unit squares are J_n^2 = +1, j_n^2 = -1, I^2 = +1; all seven hyper-complex
units anticommute pairwise.  Coefficients may be int, Fraction (identity
sweeps run exactly) or float.  The coefficient order matches the component
order of the 8-dimensional vectors and chiral spinors, so coefficient k of
an octonion corresponds to component x_k.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .report import VerificationReport

UNIT_NAMES = ("1", "j1", "j2", "j3", "I", "J1", "J2", "J3")
SCALAR, J1, J2, J3 = 0, 5, 6, 7
IDX_I = 4
HYPER = tuple(range(1, 8))

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)


class ConstructionError(Exception):
    """Basis generation from the J_n failed to close on 8 units."""


def epsilon(m: int, n: int, k: int) -> int:
    """Totally antisymmetric symbol on {1,2,3} with epsilon(1,2,3) = +1."""
    if {m, n, k} != {1, 2, 3}:
        return 0
    return 1 if (m, n, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def delta(m: int, n: int) -> int:
    return 1 if m == n else 0


def _build_table():
    # tab[a][b] = (index, sign) with e_a * e_b = sign * e_index
    tab = [[None] * 8 for _ in range(8)]
    for b in range(8):
        tab[0][b] = (b, 1)
        tab[b][0] = (b, 1)
    for m in range(1, 4):
        for n in range(1, 4):
            if m == n:
                tab[m][n] = (0, -1)          # j_n j_n = -1
                tab[4 + m][4 + n] = (0, 1)   # J_n J_n = +1
                tab[m][4 + n] = (4, -1)      # j_n J_n = -I
                tab[4 + m][n] = (4, 1)       # J_n j_n = +I
            else:
                k = 6 - m - n
                e = epsilon(m, n, k)
                tab[m][n] = (k, e)               # j_m j_n = eps j_k
                tab[4 + m][4 + n] = (k, e)       # J_m J_n = eps j_k
                tab[m][4 + n] = (4 + k, -e)      # j_m J_n = -eps J_k
                tab[4 + m][n] = (4 + k, -e)      # J_m j_n = -eps J_k
    for n in range(1, 4):
        tab[n][4] = (4 + n, 1)     # j_n I = J_n
        tab[4][n] = (4 + n, -1)    # I j_n = -J_n
        tab[4 + n][4] = (n, 1)     # J_n I = j_n
        tab[4][4 + n] = (n, -1)    # I J_n = -j_n
    tab[4][4] = (0, 1)             # I^2 = 1
    return tuple(tuple(row) for row in tab)


_TABLE = _build_table()


class SplitOctonion:
    """Immutable split octonion; supports +, -, * (octonion or scalar)."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = tuple(coeffs)
        if len(c) != 8:
            raise ValueError("need 8 coefficients")
        object.__setattr__(self, "c", c)

    def __setattr__(self, *a):
        raise AttributeError("SplitOctonion is immutable")

    @classmethod
    def zero(cls):
        return cls((0,) * 8)

    @classmethod
    def scalar(cls, v):
        return cls((v, 0, 0, 0, 0, 0, 0, 0))

    @classmethod
    def unit(cls, k):
        if isinstance(k, str):
            k = UNIT_NAMES.index(k)
        c = [0] * 8
        c[k] = 1
        return cls(c)

    # field views of Eq-style naming: omega, x^n (on j_n), t (on I), lambda^n (on J_n)
    @property
    def w(self):
        return self.c[0]

    @property
    def x(self):
        return self.c[1:4]

    @property
    def t(self):
        return self.c[4]

    @property
    def lam(self):
        return self.c[5:8]

    def __eq__(self, other):
        return isinstance(other, SplitOctonion) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        return SplitOctonion(tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other):
        return SplitOctonion(tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return SplitOctonion(tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, SplitOctonion):
            return mul(self, other)
        return SplitOctonion(tuple(a * other for a in self.c))

    def __rmul__(self, other):
        return SplitOctonion(tuple(other * a for a in self.c))

    def conj(self) -> "SplitOctonion":
        """Negate the seven hyper-complex coefficients, fix the scalar."""
        return SplitOctonion((self.c[0],) + tuple(-a for a in self.c[1:]))

    def norm_sq(self):
        """omega^2 - lambda^2 + x^2 - t^2 (the split (4,4) interval)."""
        c = self.c
        return (c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]
                - c[4] * c[4] - c[5] * c[5] - c[6] * c[6] - c[7] * c[7])

    def scalar_part(self):
        return self.c[0]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.c)

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            terms.append(f"{a}" if k == 0 else f"{a}*{UNIT_NAMES[k]}")
        return " + ".join(terms) if terms else "0"


def mul(a: SplitOctonion, b: SplitOctonion) -> SplitOctonion:
    """Bilinear extension of the unit multiplication table."""
    out = [0] * 8
    for i, ai in enumerate(a.c):
        if not ai:
            continue
        row = _TABLE[i]
        for j, bj in enumerate(b.c):
            if not bj:
                continue
            k, s = row[j]
            out[k] += ai * bj if s > 0 else -(ai * bj)
    return SplitOctonion(out)


def conj(s: SplitOctonion) -> SplitOctonion:
    return s.conj()


def norm_sq(s: SplitOctonion):
    return s.norm_sq()


def inner(a: SplitOctonion, b: SplitOctonion):
    """(conj(a)b + conj(b)a)/2, a pure scalar; inner(s,s) == norm_sq(s)."""
    p = mul(a.conj(), b)
    q = mul(b.conj(), a)
    return _HALF * (p.c[0] + q.c[0])


def commutator(x: SplitOctonion, y: SplitOctonion) -> SplitOctonion:
    """[x,y] = (xy - yx)/2; equals the plain product on anticommuting units."""
    return _HALF * (mul(x, y) - mul(y, x))


def associator(x: SplitOctonion, y: SplitOctonion, z: SplitOctonion) -> SplitOctonion:
    """((xy)z - x(yz))/2, totally antisymmetric on the hyper-complex units."""
    return _HALF * (mul(mul(x, y), z) - mul(x, mul(y, z)))


def jacobiator(x: SplitOctonion, y: SplitOctonion, z: SplitOctonion) -> SplitOctonion:
    """((xy)z + (yz)x + (zx)y)/3 with the algebra product."""
    return _THIRD * (mul(mul(x, y), z) + mul(mul(y, z), x) + mul(mul(z, x), y))


def malcev_jacobiator(x: SplitOctonion, y: SplitOctonion, z: SplitOctonion) -> SplitOctonion:
    """Jacobiator of the commutator algebra: ([[x,y],z] + [[y,z],x] + [[z,x],y])/3.

    This is the Jacobiator of the Malcev product [x,y]; on triples of
    pairwise-anticommuting units it coincides with the plain-product form.
    """
    return _THIRD * (commutator(commutator(x, y), z)
                     + commutator(commutator(y, z), x)
                     + commutator(commutator(z, x), y))


def malcev_derivation(x: SplitOctonion, y: SplitOctonion, t: SplitOctonion) -> SplitOctonion:
    """D_{x,y}(t) = 2[[x,y],t] - 3 J(x,y,t): a derivation of the Malcev algebra."""
    two = commutator(commutator(x, y), t)
    return 2 * two - 3 * malcev_jacobiator(x, y, t)


def is_timelike_vector_part(s: SplitOctonion) -> bool:
    """t^2 + sum(lambda^2) > sum(x^2), strictly."""
    lam2 = sum(a * a for a in s.lam)
    x2 = sum(a * a for a in s.x)
    return s.t * s.t + lam2 > x2


# ---------------------------------------------------------------------------
# structure constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureConstants:
    """The 8x8 unit product table e_a e_b = sign * e_index."""

    table: tuple

    def __post_init__(self):
        for b in range(8):
            if self.table[0][b] != (b, 1) or self.table[b][0] != (b, 1):
                raise ConstructionError("scalar unit is not a two-sided identity")
        for k, sq in ((1, -1), (2, -1), (3, -1), (4, 1), (5, 1), (6, 1), (7, 1)):
            if self.table[k][k] != (0, sq):
                raise ConstructionError(f"unit {UNIT_NAMES[k]} has wrong square")
        for a in HYPER:
            for b in HYPER:
                if a != b:
                    ia, sa = self.table[a][b]
                    ib, sb = self.table[b][a]
                    if ia != ib or sa != -sb:
                        raise ConstructionError("anticommutativity violated")

    @classmethod
    def standard(cls) -> "StructureConstants":
        return cls(_TABLE)

    def product(self, a: int, b: int):
        return self.table[a][b]

    def to_json(self) -> list:
        return [[{"unit": UNIT_NAMES[idx], "sign": sign} for idx, sign in row]
                for row in self.table]


# ---------------------------------------------------------------------------
# expected associator table (the six non-vanishing families)
# ---------------------------------------------------------------------------

def _kron(a, b):
    return 1 if a == b else 0


def _family_value(kinds, idx):
    """Associator of a canonically ordered triple (j's, then J's, then I)."""
    U = SplitOctonion.unit
    Z = SplitOctonion.zero()
    if kinds == ("j", "j", "J"):
        n, m, k = idx
        out = Z
        if epsilon(n, m, k):
            out = out - epsilon(n, m, k) * U(IDX_I)
        if _kron(n, k):
            out = out - U(4 + m)
        if _kron(m, k):
            out = out + U(4 + n)
        return out
    if kinds == ("j", "j", "I"):
        n, m = idx
        out = Z
        for k in (1, 2, 3):
            e = epsilon(n, m, k)
            if e:
                out = out + e * U(4 + k)
        return out
    if kinds == ("j", "J", "J"):
        n, m, k = idx
        out = Z
        if _kron(n, m):
            out = out + U(k)
        if _kron(n, k):
            out = out - U(m)
        return out
    if kinds == ("j", "J", "I"):
        n, m = idx
        out = Z
        for k in (1, 2, 3):
            e = epsilon(n, m, k)
            if e:
                out = out - e * U(k)
        return out
    if kinds == ("J", "J", "J"):
        n, m, k = idx
        if epsilon(n, m, k):
            return -epsilon(n, m, k) * U(IDX_I)
        return Z
    if kinds == ("J", "J", "I"):
        n, m = idx
        out = Z
        for k in (1, 2, 3):
            e = epsilon(n, m, k)
            if e:
                out = out + e * U(4 + k)
        return out
    return Z


_KIND_ORDER = {"j": 0, "J": 1, "I": 2}


def _unit_kind(k: int):
    if 1 <= k <= 3:
        return "j", k
    if 5 <= k <= 7:
        return "J", k - 4
    return "I", 0


def expected_associator(a: int, b: int, c: int) -> SplitOctonion:
    """Associator of hyper-complex units predicted by the six families,
    extended to every ordering by total antisymmetry; zero elsewhere."""
    if a == b or b == c or a == c:
        # repeated argument: antisymmetry forces zero
        return SplitOctonion.zero()
    items = [_unit_kind(k) for k in (a, b, c)]
    order = sorted(range(3), key=lambda i: _KIND_ORDER[items[i][0]])
    # permutation sign of the sort
    sign = 1
    perm = list(order)
    for i in range(3):
        for jj in range(i + 1, 3):
            if perm[i] > perm[jj]:
                sign = -sign
    kinds = tuple(items[i][0] for i in order)
    idx = tuple(items[i][1] for i in order if items[i][0] != "I")
    val = _family_value(kinds, idx)
    return sign * val


# ---------------------------------------------------------------------------
# identity sweeps
# ---------------------------------------------------------------------------

def verify_table() -> VerificationReport:
    """All 64 unit products against the hard-coded structure constants,
    plus squares and anticommutativity."""
    rep = VerificationReport("octonion-table")
    sc = StructureConstants.standard()
    for a in range(8):
        for b in range(8):
            idx, sign = sc.product(a, b)
            got = mul(SplitOctonion.unit(a), SplitOctonion.unit(b))
            want = sign * SplitOctonion.unit(idx)
            rep.record_case(got == want, f"{UNIT_NAMES[a]}*{UNIT_NAMES[b]}")
    for k, sq in ((5, 1), (6, 1), (7, 1), (1, -1), (2, -1), (3, -1), (4, 1)):
        got = mul(SplitOctonion.unit(k), SplitOctonion.unit(k))
        rep.record_case(got == SplitOctonion.scalar(sq), f"{UNIT_NAMES[k]}^2")
    for a in HYPER:
        for b in HYPER:
            if a < b:
                x, y = SplitOctonion.unit(a), SplitOctonion.unit(b)
                rep.record_case(mul(x, y) == -mul(y, x),
                                f"anticommute {UNIT_NAMES[a]},{UNIT_NAMES[b]}")
    return rep


def verify_moufang() -> VerificationReport:
    """Flexible Moufang identities on all 343 unit triples and the mild
    associative laws on all 49 pairs, exactly."""
    rep = VerificationReport("moufang")
    units = [SplitOctonion.unit(k) for k in range(8)]
    for a, b, c in itertools.product(HYPER, repeat=3):
        x, y, z = units[a], units[b], units[c]
        name = f"({UNIT_NAMES[a]},{UNIT_NAMES[b]},{UNIT_NAMES[c]})"
        rep.record_case(mul(mul(x, y), mul(z, x)) == mul(mul(x, mul(y, z)), x),
                        f"(xy)(zx)=x(yz)x {name}")
        rep.record_case(mul(mul(mul(z, y), z), x) == mul(z, mul(y, mul(z, x))),
                        f"(zyz)x=z(y(zx)) {name}")
        rep.record_case(mul(x, mul(mul(y, z), y)) == mul(mul(mul(x, y), z), y),
                        f"x(yzy)=((xy)z)y {name}")
    for a, b in itertools.product(HYPER, repeat=2):
        x, y = units[a], units[b]
        name = f"({UNIT_NAMES[a]},{UNIT_NAMES[b]})"
        rep.record_case(mul(mul(x, y), y) == mul(x, mul(y, y)), f"(xy)y=xy^2 {name}")
        rep.record_case(mul(x, mul(x, y)) == mul(mul(x, x), y), f"x(xy)=x^2y {name}")
        rep.record_case(mul(mul(x, y), x) == mul(x, mul(y, x)), f"(xy)x=x(yx) {name}")
    return rep


def verify_malcev() -> VerificationReport:
    """Malcev relation plus the 4- and 5-element Jacobiator identities
    of the commutator algebra, exactly.

    Products inside the sweep are Malcev products [x,y] = (xy-yx)/2; on
    pairwise-anticommuting units these equal the plain products, but the
    identities hold on ALL tuples (repeats included) only for the
    commutator algebra.  The 4- and 5-element identities carry their
    derivation-defect terms:

        J([x,y],z,w) + J([y,z],x,w) + J([z,x],y,w) = 2[J(x,y,z),w]
        J(x,y,[z,w]) = [J(x,y,z),w] + [z,J(x,y,w)] - 2 J([x,y],z,w)
        D(J(z,u,v)) = J(Dz,u,v) + J(z,Du,v) + J(z,u,Dv),
            D = D_{x,y} = 2 ad_[x,y] - 3 J(x,y,.)
    """
    rep = VerificationReport("malcev")
    units = [SplitOctonion.unit(k) for k in range(8)]

    for a, b, c in itertools.product(HYPER, repeat=3):
        x, y, z = units[a], units[b], units[c]
        name = f"({UNIT_NAMES[a]},{UNIT_NAMES[b]},{UNIT_NAMES[c]})"
        lhs = commutator(commutator(x, y), commutator(x, z))
        rhs = (commutator(commutator(commutator(x, y), z), x)
               + commutator(commutator(commutator(y, z), x), x)
               + commutator(commutator(commutator(z, x), x), y))
        rep.record_case(lhs == rhs, f"malcev {name}")
        lhs = malcev_jacobiator(x, y, commutator(x, z))
        rhs = commutator(malcev_jacobiator(x, y, z), x)
        rep.record_case(lhs == rhs, f"J(x,y,xz)=J(x,y,z)x {name}")

    # precomputed tables keep the 7^4 and 7^5 sweeps linear-time per case
    ctab = {(a, b): commutator(units[a], units[b])
            for a in HYPER for b in HYPER}
    jtab = {(a, b, c): malcev_jacobiator(units[a], units[b], units[c])
            for a in HYPER for b in HYPER for c in HYPER}

    def j_lin(pos, i1, i2, w):
        out = SplitOctonion.zero()
        for k in HYPER:
            wk = w.c[k]
            if not wk:
                continue
            key = (k, i1, i2) if pos == 0 else (i1, k, i2) if pos == 1 else (i1, i2, k)
            out = out + wk * jtab[key]
        return out

    for a, b, c, d in itertools.product(HYPER, repeat=4):
        name = f"({UNIT_NAMES[a]},{UNIT_NAMES[b]},{UNIT_NAMES[c]},{UNIT_NAMES[d]})"
        lhs = (j_lin(0, c, d, ctab[(a, b)])
               + j_lin(0, a, d, ctab[(b, c)])
               + j_lin(0, b, d, ctab[(c, a)]))
        rhs = 2 * commutator(jtab[(a, b, c)], units[d])
        rep.record_case(lhs == rhs, f"4-elem cyclic {name}")
        lhs = j_lin(2, a, b, ctab[(c, d)])
        rhs = (commutator(jtab[(a, b, c)], units[d])
               + commutator(units[c], jtab[(a, b, d)])
               - 2 * j_lin(0, c, d, ctab[(a, b)]))
        rep.record_case(lhs == rhs, f"4-elem leibniz {name}")

    def dop(a, b, t):
        out = -3 * j_lin(2, a, b, t)
        ab = ctab[(a, b)]
        for k in HYPER:
            ak = ab.c[k]
            if not ak:
                continue
            for m in HYPER:
                tm = t.c[m]
                if tm:
                    out = out + (2 * ak * tm) * ctab[(k, m)]
        return out

    dtab = {(a, b, z): dop(a, b, units[z])
            for a in HYPER for b in HYPER for z in HYPER}

    for a, b in itertools.product(HYPER, repeat=2):
        for z, u, v in itertools.product(HYPER, repeat=3):
            lhs = dop(a, b, jtab[(z, u, v)])
            rhs = (j_lin(0, u, v, dtab[(a, b, z)])
                   + j_lin(1, z, v, dtab[(a, b, u)])
                   + j_lin(2, z, u, dtab[(a, b, v)]))
            rep.record_case(
                lhs == rhs,
                f"5-elem ({UNIT_NAMES[a]},{UNIT_NAMES[b]},{UNIT_NAMES[z]},"
                f"{UNIT_NAMES[u]},{UNIT_NAMES[v]})")
    return rep


def verify_associators() -> VerificationReport:
    """The six non-vanishing associator families, total antisymmetry, the
    full 343-triple closure against the family-predicted table, and the
    associator-commutator bridge."""
    rep = VerificationReport("associators")
    units = [SplitOctonion.unit(k) for k in range(8)]

    for n, m in itertools.product((1, 2, 3), repeat=2):
        jn, jm = units[n], units[m]
        Jn, Jm = units[4 + n], units[4 + m]
        I = units[IDX_I]
        rep.record_case(associator(jn, jm, I) == _family_value(("j", "j", "I"), (n, m)),
                        f"A(j{n},j{m},I)")
        rep.record_case(associator(jn, Jm, I) == _family_value(("j", "J", "I"), (n, m)),
                        f"A(j{n},J{m},I)")
        rep.record_case(associator(Jn, Jm, I) == _family_value(("J", "J", "I"), (n, m)),
                        f"A(J{n},J{m},I)")
        for k in (1, 2, 3):
            rep.record_case(
                associator(jn, jm, units[4 + k]) == _family_value(("j", "j", "J"), (n, m, k)),
                f"A(j{n},j{m},J{k})")
            rep.record_case(
                associator(jn, Jm, units[4 + k]) == _family_value(("j", "J", "J"), (n, m, k)),
                f"A(j{n},J{m},J{k})")
            rep.record_case(
                associator(Jn, Jm, units[4 + k]) == _family_value(("J", "J", "J"), (n, m, k)),
                f"A(J{n},J{m},J{k})")

    for a, b, c in itertools.product(HYPER, repeat=3):
        x, y, z = units[a], units[b], units[c]
        got = associator(x, y, z)
        name = f"({UNIT_NAMES[a]},{UNIT_NAMES[b]},{UNIT_NAMES[c]})"
        rep.record_case(got == -associator(y, x, z) and got == -associator(x, z, y),
                        f"antisymmetry {name}")
        rep.record_case(got == expected_associator(a, b, c), f"table closure {name}")
        bridge = _THIRD * (commutator(commutator(x, y), z)
                           + commutator(commutator(y, z), x)
                           + commutator(commutator(z, x), y))
        rep.record_case(got == bridge, f"commutator bridge {name}")
    return rep


# ---------------------------------------------------------------------------
# basis generation from the three J_n (independent Zorn-matrix model)
# ---------------------------------------------------------------------------

class _Zorn:
    """Zorn vector matrix [[a, v], [w, b]]; an independent faithful model of
    the split octonions used to certify the generated table."""

    __slots__ = ("a", "v", "w", "b")

    def __init__(self, a, v, w, b):
        self.a, self.v, self.w, self.b = a, tuple(v), tuple(w), b

    def __eq__(self, other):
        return (self.a, self.v, self.w, self.b) == (other.a, other.v, other.w, other.b)

    def __hash__(self):
        return hash((self.a, self.v, self.w, self.b))

    def __add__(self, other):
        return _Zorn(self.a + other.a,
                     tuple(p + q for p, q in zip(self.v, other.v)),
                     tuple(p + q for p, q in zip(self.w, other.w)),
                     self.b + other.b)

    def __neg__(self):
        return _Zorn(-self.a, tuple(-p for p in self.v), tuple(-p for p in self.w), -self.b)

    def scale(self, c):
        return _Zorn(c * self.a, tuple(c * p for p in self.v),
                     tuple(c * p for p in self.w), c * self.b)

    def __mul__(self, other):
        dot = lambda p, q: sum(x * y for x, y in zip(p, q))
        cross = lambda p, q: (p[1] * q[2] - p[2] * q[1],
                              p[2] * q[0] - p[0] * q[2],
                              p[0] * q[1] - p[1] * q[0])
        a = self.a * other.a + dot(self.v, other.w)
        v = tuple(self.a * x + other.b * y - z
                  for x, y, z in zip(other.v, self.v, cross(self.w, other.w)))
        w = tuple(other.a * x + self.b * y + z
                  for x, y, z in zip(self.w, other.w, cross(self.v, other.v)))
        b = self.b * other.b + dot(self.w, other.v)
        return _Zorn(a, v, w, b)


def generate_basis_from_J() -> StructureConstants:
    """Recover the full table from the three J_n alone.

    The J_n are modelled as independent anticommuting square-one elements;
    j_n is built as (1/2) eps_nmk J^m J^k, I as J_1 j_1, and the table is
    closed by breadth-first products canonicalized to +/- a known unit.
    The result must match the hard-coded constants byte for byte.
    """
    e3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    Jg = {n: _Zorn(0, e3[n - 1], e3[n - 1], 0) for n in (1, 2, 3)}

    one = Jg[1] * Jg[1]
    for n in (1, 2, 3):
        if Jg[n] * Jg[n] != one:
            raise ConstructionError("J_n^2 != 1 in the generator model")
        for m in (1, 2, 3):
            if m != n and Jg[m] * Jg[n] != -(Jg[n] * Jg[m]):
                raise ConstructionError("J_m J_n != -J_n J_m in the generator model")

    jg = {}
    for n in (1, 2, 3):
        acc = _Zorn(0, (0, 0, 0), (0, 0, 0), 0)
        for m in (1, 2, 3):
            for k in (1, 2, 3):
                e = epsilon(n, m, k)
                if e:
                    acc = acc + (Jg[m] * Jg[k]).scale(Fraction(e, 2))
        jg[n] = acc
    Ig = Jg[1] * jg[1]

    # I must coincide with -J(J1,J2,J3) built from plain products
    jac = (Jg[1] * Jg[2]) * Jg[3] + (Jg[2] * Jg[3]) * Jg[1] + (Jg[3] * Jg[1]) * Jg[2]
    if Ig != jac.scale(Fraction(-1, 3)):
        raise ConstructionError("I != -J(J1,J2,J3) in the generator model")
    for n in (2, 3):
        if Jg[n] * jg[n] != Ig:
            raise ConstructionError(f"J_{n} j_{n} != I in the generator model")

    basis = [one, jg[1], jg[2], jg[3], Ig, Jg[1], Jg[2], Jg[3]]
    if len(set(basis)) != 8:
        raise ConstructionError("closure produced fewer than 8 distinct units")

    frontier = list(range(8))
    table = [[None] * 8 for _ in range(8)]
    while frontier:
        a = frontier.pop()
        for b in range(8):
            for lhs, rhs, slot in ((a, b, (a, b)), (b, a, (b, a))):
                if table[slot[0]][slot[1]] is not None:
                    continue
                prod = basis[lhs] * basis[rhs]
                match = None
                for idx, u in enumerate(basis):
                    if prod == u:
                        match = (idx, 1)
                        break
                    if prod == -u:
                        match = (idx, -1)
                        break
                if match is None:
                    raise ConstructionError(
                        f"product of units {lhs},{rhs} is not +/- a basis unit")
                table[slot[0]][slot[1]] = match
    return StructureConstants(tuple(tuple(row) for row in table))
