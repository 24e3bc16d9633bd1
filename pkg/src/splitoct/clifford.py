"""Complex matrix representation of the (4,4) geometric algebra.

The eight 8x8 alpha matrices are data (entries in {0, +-1, +-i}); the
16x16 generators are Gamma_mu = A_mu for mu<4 and i*A_mu for mu>=4, with
A_mu = [[0, alpha], [alpha^dagger, 0]].  Exact work runs on Gaussian
integers held as paired int64 arrays; continuous-angle work runs on
complex128.  The module also owns the grade-4 element B = -G1 G3 G5 G7,
the spinor basis-change matrix and everything built on them (rotors,
invariants, the trilinear form).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .report import VerificationReport

METRIC = (1, 1, 1, 1, -1, -1, -1, -1)


class ChiralityError(ValueError):
    """Spinor argument has nonzero components in the wrong chiral block."""


class NotGrade1Error(ValueError):
    """Matrix is not in the span of the grade-1 generators."""


class GMat:
    """Dense matrix of Gaussian integers (exact), as paired int64 arrays."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = np.asarray(re, dtype=np.int64)
        self.im = np.zeros_like(self.re) if im is None else np.asarray(im, dtype=np.int64)

    @classmethod
    def eye(cls, n):
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, shape):
        return cls(np.zeros(shape, dtype=np.int64))

    def __matmul__(self, other):
        return GMat(self.re @ other.re - self.im @ other.im,
                    self.re @ other.im + self.im @ other.re)

    def __add__(self, other):
        return GMat(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GMat(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GMat(-self.re, -self.im)

    def scale(self, k: int):
        return GMat(k * self.re, k * self.im)

    def times_i(self):
        return GMat(-self.im, self.re)

    @property
    def T(self):
        return GMat(self.re.T, self.im.T)

    def conj_t(self):
        return GMat(self.re.T, -self.im.T)

    def __eq__(self, other):
        return np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im)

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def is_real(self) -> bool:
        return not self.im.any()

    def to_complex(self) -> np.ndarray:
        return self.re.astype(np.complex128) + 1j * self.im.astype(np.complex128)

    def to_json(self, exact: bool = True) -> list:
        if exact:
            return [[{"re": str(int(self.re[r, c])), "im": str(int(self.im[r, c]))}
                     for c in range(self.re.shape[1])] for r in range(self.re.shape[0])]
        return [[{"re": float(self.re[r, c]), "im": float(self.im[r, c])}
                 for c in range(self.re.shape[1])] for r in range(self.re.shape[0])]


def _alpha_tables():
    # (row, col, re, im) entry quadruples; the tables are data, validated below
    data = [
        [(k, k, v, 0) for k, v in enumerate((-1, 1, 1, 1, -1, -1, -1, 1))],
        [(k, k, 0, 1) for k in range(8)],
        [(0, 1, 1, 0), (1, 0, 1, 0), (2, 4, -1, 0), (3, 5, -1, 0),
         (4, 2, -1, 0), (5, 3, -1, 0), (6, 7, 1, 0), (7, 6, 1, 0)],
        [(0, 1, 0, -1), (1, 0, 0, 1), (2, 4, 0, 1), (3, 5, 0, 1),
         (4, 2, 0, -1), (5, 3, 0, -1), (6, 7, 0, -1), (7, 6, 0, 1)],
        [(0, 2, 1, 0), (1, 4, 1, 0), (2, 0, 1, 0), (3, 6, -1, 0),
         (4, 1, 1, 0), (5, 7, -1, 0), (6, 3, -1, 0), (7, 5, -1, 0)],
        [(0, 2, 0, 1), (1, 4, 0, 1), (2, 0, 0, -1), (3, 6, 0, -1),
         (4, 1, 0, -1), (5, 7, 0, -1), (6, 3, 0, 1), (7, 5, 0, 1)],
        [(0, 3, 1, 0), (1, 5, 1, 0), (2, 6, 1, 0), (3, 0, 1, 0),
         (4, 7, 1, 0), (5, 1, 1, 0), (6, 2, 1, 0), (7, 4, 1, 0)],
        [(0, 3, 0, -1), (1, 5, 0, -1), (2, 6, 0, -1), (3, 0, 0, 1),
         (4, 7, 0, -1), (5, 1, 0, 1), (6, 2, 0, 1), (7, 4, 0, 1)],
    ]
    out = []
    for entries in data:
        re = np.zeros((8, 8), dtype=np.int64)
        im = np.zeros((8, 8), dtype=np.int64)
        for r, c, vr, vi in entries:
            re[r, c] = vr
            im[r, c] = vi
        re.flags.writeable = False
        im.flags.writeable = False
        out.append(GMat(re, im))
    return out


_ALPHA = _alpha_tables()


def _big_a(mu: int) -> GMat:
    out = GMat.zeros((16, 16))
    a = _ALPHA[mu]
    out.re[0:8, 8:16] = a.re
    out.im[0:8, 8:16] = a.im
    adag = a.conj_t()
    out.re[8:16, 0:8] = adag.re
    out.im[8:16, 0:8] = adag.im
    return out


def _freeze(m: GMat) -> GMat:
    m.re.flags.writeable = False
    m.im.flags.writeable = False
    return m


_GAMMA = [_freeze(_big_a(mu) if mu < 4 else _big_a(mu).times_i()) for mu in range(8)]
_B = _freeze(-(_GAMMA[1] @ _GAMMA[3] @ _GAMMA[5] @ _GAMMA[7]))
_GAMMA_C = [g.to_complex() for g in _GAMMA]
_B_C = _B.to_complex()
for _m in _GAMMA_C:
    _m.flags.writeable = False
_B_C.flags.writeable = False


def alpha(mu: int) -> GMat:
    if not 0 <= mu <= 7:
        raise ValueError(f"alpha index {mu} out of range 0..7")
    return _ALPHA[mu]


def gamma(mu: int) -> GMat:
    if not 0 <= mu <= 7:
        raise ValueError(f"gamma index {mu} out of range 0..7")
    return _GAMMA[mu]


def gamma_complex(mu: int) -> np.ndarray:
    return np.array(_GAMMA_C[mu])


def b_matrix() -> GMat:
    return _B


def b_matrix_complex() -> np.ndarray:
    return np.array(_B_C)


def verify_clifford() -> VerificationReport:
    """Gamma_mu Gamma_nu + Gamma_nu Gamma_mu == 2 g_munu Id, all 64 pairs, exact."""
    rep = VerificationReport("clifford")
    ident = GMat.eye(16)
    for mu in range(8):
        for nu in range(8):
            anti = _GAMMA[mu] @ _GAMMA[nu] + _GAMMA[nu] @ _GAMMA[mu]
            want = ident.scale(2 * METRIC[mu]) if mu == nu else GMat.zeros((16, 16))
            ok = anti == want
            if not ok:
                bad = np.argwhere((anti.re != want.re) | (anti.im != want.im))[0]
                rep.record_case(False, f"pair ({mu},{nu}) entry {tuple(bad)}")
            else:
                rep.record_case(True)
    return rep


# validated at import: the tabulated entries must satisfy the algebra
_startup = verify_clifford()
if not _startup.passed:
    raise AssertionError(f"alpha-table data broken: {_startup.failure_details}")


# ---------------------------------------------------------------------------
# spinor basis change (fixed 16-row definition)
# ---------------------------------------------------------------------------

def _xi_matrix() -> GMat:
    rows = [
        (0, ((2, -1, 0), (3, 0, 1))),
        (1, ((0, 1, 0), (1, 0, -1))),
        (2, ((7, -1, 0), (6, 0, -1))),
        (3, ((5, -1, 0), (4, 0, 1))),
        (4, ((5, -1, 0), (4, 0, -1))),
        (5, ((7, 1, 0), (6, 0, -1))),
        (6, ((0, -1, 0), (1, 0, -1))),
        (7, ((2, -1, 0), (3, 0, -1))),
        (8, ((10, 1, 0), (11, 0, -1))),
        (9, ((8, -1, 0), (9, 0, -1))),
        (10, ((15, -1, 0), (14, 0, -1))),
        (11, ((13, -1, 0), (12, 0, 1))),
        (12, ((13, 1, 0), (12, 0, 1))),
        (13, ((15, -1, 0), (14, 0, 1))),
        (14, ((8, -1, 0), (9, 0, 1))),
        (15, ((10, -1, 0), (11, 0, -1))),
    ]
    re = np.zeros((16, 16), dtype=np.int64)
    im = np.zeros((16, 16), dtype=np.int64)
    for r, entries in rows:
        for c, vr, vi in entries:
            re[r, c] = vr
            im[r, c] = vi
    return GMat(re, im)


# xi = (1/sqrt2) XI_M @ eta; the sqrt2 is tracked symbolically, so every
# exactness statement below is about XI_M itself.
XI_M = _freeze(_xi_matrix())
_XI_BLOCK_PHI = GMat(XI_M.re[0:8, 0:8], XI_M.im[0:8, 0:8])
_XI_BLOCK_PSI = GMat(XI_M.re[8:16, 8:16], XI_M.im[8:16, 8:16])

if not (XI_M @ XI_M.conj_t() == GMat.eye(16).scale(2)):
    raise AssertionError("xi basis-change matrix is not sqrt2-unitary")

# quadratic form of the spinor invariant in real components:
# eta^T B eta evaluated as xi^T B xi = eta^T (M^T B M) eta / 2
_Q_SPINOR_2 = XI_M.T @ _B @ XI_M     # = 2 * quadratic-form matrix, exact
if not _Q_SPINOR_2.is_real():
    raise AssertionError("spinor quadratic form is not real")
_Q_SPINOR = _Q_SPINOR_2.re / 2.0      # float copy for float-mode inputs


def _real_bivector_rep(mu: int, nu: int) -> np.ndarray:
    """Action of Gamma_mu Gamma_nu on real spinor components: M^dag G G M / 2."""
    prod = XI_M.conj_t() @ (_GAMMA[mu] @ _GAMMA[nu]) @ XI_M
    if not prod.is_real() or (prod.re % 2).any():
        raise AssertionError(f"bivector ({mu},{nu}) is not real-integral in the spinor basis")
    return (prod.re // 2).astype(np.float64)


_BIV_REP = {}


def real_bivector_rep(mu: int, nu: int) -> np.ndarray:
    if (mu, nu) not in _BIV_REP:
        _BIV_REP[(mu, nu)] = _real_bivector_rep(mu, nu)
    return np.array(_BIV_REP[(mu, nu)])


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vector_to_matrix(x) -> np.ndarray:
    """X = sum_mu x_mu Gamma_mu as complex128."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (8,):
        raise ValueError("vector needs 8 components")
    out = np.zeros((16, 16), dtype=np.complex128)
    for mu in range(8):
        if x[mu]:
            out += x[mu] * _GAMMA_C[mu]
    return out


def vector_to_matrix_exact(x) -> GMat:
    """Same linear combination on integer components, exact."""
    out = GMat.zeros((16, 16))
    for mu in range(8):
        k = int(x[mu])
        if k != x[mu]:
            raise ValueError("exact mode needs integer components")
        if k:
            out = out + _GAMMA[mu].scale(k)
    return out


def matrix_to_vector(X, tol: float = 1e-10):
    """Recover x_mu by the trace pairing x_mu = g_mumu tr(Gamma_mu X)/16.

    Raises NotGrade1Error when the residual X - sum x_mu Gamma_mu exceeds
    the tolerance (exactly nonzero, for exact input).
    """
    if isinstance(X, GMat):
        coeffs = []
        for mu in range(8):
            prod = _GAMMA[mu] @ X
            if int(np.trace(prod.im)) != 0:
                raise NotGrade1Error("trace pairing is not real")
            coeffs.append(Fraction(METRIC[mu] * int(np.trace(prod.re)), 16))
        recon = GMat.zeros((16, 16))
        scaled = [c * 16 for c in coeffs]
        if any(s.denominator != 1 for s in scaled):
            raise NotGrade1Error("non-integral trace pairing")
        for mu in range(8):
            recon = recon + _GAMMA[mu].scale(int(scaled[mu]))
        if not (X.scale(16) - recon).is_zero():
            raise NotGrade1Error("matrix has components outside grade 1")
        return tuple(coeffs)
    Xc = np.asarray(X, dtype=np.complex128)
    x = np.empty(8)
    for mu in range(8):
        c = METRIC[mu] * np.trace(_GAMMA_C[mu] @ Xc) / 16
        if abs(c.imag) > tol:
            raise NotGrade1Error("trace pairing is not real")
        x[mu] = c.real
    resid = Xc - vector_to_matrix(x)
    if np.max(np.abs(resid)) > tol:
        raise NotGrade1Error(f"grade-1 residual {np.max(np.abs(resid)):.3e} exceeds {tol}")
    return x


def quadratic_form(x) -> float:
    x = np.asarray(x, dtype=np.float64)
    return float(np.sum(x[:4] ** 2) - np.sum(x[4:] ** 2))


# ---------------------------------------------------------------------------
# rotors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rotor:
    """L_mu_nu(theta) = exp(-theta/2 Gamma_mu Gamma_nu) in closed form.

    (Gamma_mu Gamma_nu)^2 = -g_mumu g_nunu, so compact planes exponentiate
    through cos/sin and mixed-signature planes through cosh/sinh.
    """

    mu: int
    nu: int
    theta: float
    compact: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "compact", METRIC[self.mu] * METRIC[self.nu] > 0)

    def half_coeffs(self):
        h = self.theta / 2.0
        if self.compact:
            return math.cos(h), math.sin(h)
        return math.cosh(h), math.sinh(h)

    def matrix(self) -> np.ndarray:
        c, s = self.half_coeffs()
        return c * np.eye(16, dtype=np.complex128) - s * (_GAMMA_C[self.mu] @ _GAMMA_C[self.nu])

    def inverse(self) -> "Rotor":
        return Rotor(self.nu, self.mu, self.theta)


def rotor(mu: int, nu: int, theta: float) -> Rotor:
    if not (0 <= mu <= 7 and 0 <= nu <= 7):
        raise ValueError("plane indices must be in 0..7")
    if mu == nu:
        raise ValueError("rotor plane needs two distinct indices")
    return Rotor(mu, nu, float(theta))


def rotate_vector(x, r: Rotor) -> np.ndarray:
    """x' from X' = L X L^{-1}; preserves the quadratic form."""
    X = vector_to_matrix(x)
    L = r.matrix()
    Linv = r.inverse().matrix()
    return matrix_to_vector(L @ X @ Linv, tol=1e-8)


def rotate_spinor(eta, r: Rotor) -> np.ndarray:
    """eta' = L eta on real spinor components; chiral blocks never mix.

    The bivector representation is block-diagonal with exactly integral
    entries, so the wrong-chirality block of the output is exactly zero
    whenever it is zero on input.
    """
    eta = np.asarray(eta, dtype=np.float64)
    if eta.shape != (16,):
        raise ValueError("spinor needs 16 components")
    c, s = r.half_coeffs()
    return c * eta - s * (real_bivector_rep(r.mu, r.nu) @ eta)


# ---------------------------------------------------------------------------
# spinors, invariant, trilinear form
# ---------------------------------------------------------------------------

def embed_phi(phi) -> np.ndarray:
    out = np.zeros(16)
    out[0:8] = phi
    return out


def embed_psi(psi) -> np.ndarray:
    out = np.zeros(16)
    out[8:16] = psi
    return out


def _is_integral(seq) -> bool:
    return all(float(v).is_integer() for v in seq)


def spinor_invariant(eta):
    """eta^T B eta under the pinned transpose evaluation; exact on integers.

    The two chiral contributions are computed independently and summed,
    which is also how the invariance splits.
    """
    eta = np.asarray(eta, dtype=np.float64)
    if eta.shape != (16,):
        raise ValueError("spinor needs 16 components")
    if _is_integral(eta):
        e = eta.astype(np.int64)
        phi_part = e[0:8] @ _Q_SPINOR_2.re[0:8, 0:8] @ e[0:8]
        psi_part = e[8:16] @ _Q_SPINOR_2.re[8:16, 8:16] @ e[8:16]
        total = int(phi_part + psi_part)
        if total % 2:
            raise AssertionError("spinor form lost exactness")
        return total // 2
    phi_part = eta[0:8] @ _Q_SPINOR[0:8, 0:8] @ eta[0:8]
    psi_part = eta[8:16] @ _Q_SPINOR[8:16, 8:16] @ eta[8:16]
    return float(phi_part + psi_part)


def _chiral_8(arg, block: str):
    a = np.asarray(arg, dtype=np.float64)
    if a.shape == (16,):
        lo, hi = (0, 8) if block == "phi" else (8, 16)
        wrong = a[8:16] if block == "phi" else a[0:8]
        if wrong.any():
            raise ChiralityError(f"nonzero {('psi' if block == 'phi' else 'phi')}-block "
                                 f"components in a pure-{block} argument")
        return a[lo:hi]
    if a.shape == (8,):
        return a
    raise ValueError("spinor argument needs 8 or 16 components")


def _trilinear_slices():
    """K_b = (M_phi)^T B_11 (Gamma_b)_12 M_psi, entries verified real-even."""
    b11 = GMat(_B.re[0:8, 0:8], _B.im[0:8, 0:8])
    slices = []
    for b in range(8):
        g12 = GMat(_GAMMA[b].re[0:8, 8:16], _GAMMA[b].im[0:8, 8:16])
        k = _XI_BLOCK_PHI.T @ b11 @ g12 @ _XI_BLOCK_PSI
        if not k.is_real() or (k.re % 2).any():
            raise AssertionError(f"trilinear slice {b} is not real-even")
        half = (k.re // 2).copy()
        half.flags.writeable = False
        slices.append(half)
    return slices


_TRI_SLICES = _trilinear_slices()


def trilinear_matrix(phi, x, psi):
    """F(phi, X, psi) = phi^T B X psi in the pinned spinor evaluation.

    Trilinear, real-valued; exact (int/Fraction-free int) when every
    component is an integer.  phi must be pure left-chirality and psi pure
    right-chirality (8 components, or 16 with the wrong block zero).
    """
    p = _chiral_8(phi, "phi")
    s = _chiral_8(psi, "psi")
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (8,):
        raise ValueError("vector needs 8 components")
    if _is_integral(p) and _is_integral(s) and _is_integral(x):
        pi = p.astype(np.int64)
        si = s.astype(np.int64)
        return int(sum(int(x[b]) * (pi @ _TRI_SLICES[b] @ si)
                       for b in range(8) if x[b]))
    return float(sum(x[b] * (p @ _TRI_SLICES[b].astype(np.float64) @ s)
                     for b in range(8) if x[b]))


def trilinear_slice(b: int) -> np.ndarray:
    """Integer matrix K_b with F(phi, e_b, psi) = phi^T K_b psi."""
    return np.array(_TRI_SLICES[b])
