"""Raked trigonometric and raked self-inversive polynomials.

A raked trigonometric polynomial of degree 2k-1 is

    A(t) = c + sum_j a_j sin((2j-1)t) + sum_j b_j cos((2j-1)t),   j = 1..k,

i.e. an affine function restricted to the symmetric moment curve.  With
z = exp(it) one has A(t) = z^(1-2k) D(z) where D has degree 4k-2, satisfies
D(z) = z^m conj(D(1/conj z)) and has no odd coefficients except the middle one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import comb

from .curve import frequencies
from .roots import aberth, cluster, trim

CLUSTER_RADIUS = 1e-6
CIRCLE_TOL = 1e-8


@dataclass(frozen=True)
class RakedTrigPoly:
    """Coefficients of A(t); ``a`` multiplies the sines, ``b`` the cosines."""

    k: int
    c: float
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.a, dtype=float).reshape(-1)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        if self.k < 1 or a.size != self.k or b.size != self.k:
            raise ValueError("a and b must both have length k >= 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", float(self.c))

    @classmethod
    def from_vector(cls, k: int, x) -> "RakedTrigPoly":
        """Inverse of :meth:`vector`."""
        x = np.asarray(x, dtype=float)
        return cls(k, x[0], x[1 : k + 1], x[k + 1 :])

    @classmethod
    def from_affine(cls, k: int, alpha) -> "RakedTrigPoly":
        """The restriction of alpha_0 + <alpha_1.., SM_2k(t)> to the curve."""
        alpha = np.asarray(alpha, dtype=float)
        return cls(k, alpha[0], alpha[2::2], alpha[1::2])

    @classmethod
    def one_minus_cos(cls, k: int) -> "RakedTrigPoly":
        """1 - cos((2k-1)t), the polynomial of the simplicial face Delta_0."""
        b = np.zeros(k)
        b[-1] = -1.0
        return cls(k, 1.0, np.zeros(k), b)

    def vector(self) -> np.ndarray:
        """Coefficients stacked as (c, a_1..a_k, b_1..b_k)."""
        return np.concatenate([[self.c], self.a, self.b])

    def affine(self) -> np.ndarray:
        """(alpha_0, ..., alpha_2k) so that A(t) = alpha_0 + <alpha, SM_2k(t)>."""
        out = np.empty(2 * self.k + 1)
        out[0] = self.c
        out[1::2] = self.b
        out[2::2] = self.a
        return out

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        ph = t[..., None] * frequencies(self.k)
        return self.c + np.sin(ph) @ self.a + np.cos(ph) @ self.b

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        m = frequencies(self.k)
        ph = t[..., None] * m
        return np.cos(ph) @ (m * self.a) - np.sin(ph) @ (m * self.b)

    def rotated(self, tau: float) -> "RakedTrigPoly":
        """The polynomial t -> A(t - tau), whose zeros are shifted by +tau."""
        m = frequencies(self.k)
        cs, sn = np.cos(m * tau), np.sin(m * tau)
        # a sin(m(t-tau)) + b cos(m(t-tau))
        a = self.a * cs + self.b * sn
        b = self.b * cs - self.a * sn
        return RakedTrigPoly(self.k, self.c, a, b)


def trig_eval(A: RakedTrigPoly, t):
    return A(t)


def design_rows(k: int, t) -> np.ndarray:
    """Rows r(t) with A(t) = r(t) @ A.vector()."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    ph = np.outer(t, frequencies(k))
    return np.hstack([np.ones((t.size, 1)), np.sin(ph), np.cos(ph)])


def derivative_rows(k: int, t) -> np.ndarray:
    """Rows r'(t) with A'(t) = r'(t) @ A.vector()."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    m = frequencies(k)
    ph = np.outer(t, m)
    return np.hstack([np.zeros((t.size, 1)), m * np.cos(ph), -m * np.sin(ph)])


@dataclass(frozen=True)
class SelfInvPoly:
    """A complex polynomial stored by ascending coefficients d_0..d_m."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=complex).reshape(-1)
        if c.size < 1 or c[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        return np.polyval(self.coeffs[::-1], z)

    def reflected(self) -> np.ndarray:
        """Coefficients of z^m conj(D(1/conj z)), i.e. reversed conjugates."""
        return np.conj(self.coeffs[::-1])

    def unimodular_factor(self) -> complex:
        """Best omega with |omega| = 1 and D ~ omega * reflected(D)."""
        d, r = self.coeffs, self.reflected()
        w = np.vdot(r, d)
        return w / abs(w) if abs(w) > 0 else 1.0 + 0j

    def self_inversive_residual(self) -> float:
        """Relative distance of D from omega * reflected(D) for the best omega."""
        d = self.coeffs
        return float(np.abs(d - self.unimodular_factor() * self.reflected()).max() / np.abs(d).max())

    def normalized(self) -> "SelfInvPoly":
        """Rotate the phase so that d_{m-p} = conj(d_p) holds exactly in form.

        Among the two valid rotations, the one making the middle (or else the
        largest) coefficient have nonnegative real part is chosen.
        """
        omega = self.unimodular_factor()
        # D = omega R(D); for D' = u D we need u^2 = conj(omega)
        u = np.sqrt(np.conj(omega))
        d = u * self.coeffs
        mid = d[self.degree // 2] if self.degree % 2 == 0 else 0.0
        ref = mid if abs(mid) > 1e-12 * np.abs(d).max() else d[np.argmax(np.abs(d))]
        if ref.real < 0:
            d = -d
        d = 0.5 * (d + np.conj(d[::-1]))
        return SelfInvPoly(d)

    def raked_residual(self) -> float:
        """Largest odd coefficient other than the middle one, relative to max |d|."""
        m = self.degree
        odd = [p for p in range(1, m, 2) if 2 * p != m]
        if not odd:
            return 0.0
        return float(np.abs(self.coeffs[odd]).max() / np.abs(self.coeffs).max())


def trig_to_selfinv(A: RakedTrigPoly) -> SelfInvPoly:
    """The polynomial D with A(t) = exp(-i(2k-1)t) D(exp(it))."""
    k = A.k
    if A.c == 0 and not np.any(A.a) and not np.any(A.b):
        raise ValueError("the zero polynomial has no self-inversive image")
    m = 4 * k - 2
    d = np.zeros(m + 1, dtype=complex)
    d[2 * k - 1] = A.c
    for j in range(1, k + 1):
        d[2 * j + 2 * k - 2] += (A.b[j - 1] - 1j * A.a[j - 1]) / 2
        d[2 * k - 2 * j] += (A.b[j - 1] + 1j * A.a[j - 1]) / 2
    if d[-1] == 0:
        # top frequency absent: keep the formal degree by refusing a silent drop
        raise ValueError("A has no degree-(2k-1) term; project to a smaller k first")
    return SelfInvPoly(d)


def selfinv_to_trig(D: SelfInvPoly, tol: float = 1e-9) -> RakedTrigPoly:
    """Inverse of :func:`trig_to_selfinv`, after phase normalization."""
    m = D.degree
    if m % 4 != 2:
        raise ValueError(f"degree must be 4k-2, got {m}")
    k = (m + 2) // 4
    Dn = D.normalized()
    if D.self_inversive_residual() > tol:
        raise ValueError("polynomial is not self-inversive")
    if Dn.raked_residual() > tol:
        raise ValueError("polynomial is not raked")
    d = Dn.coeffs
    b = np.array([2 * d[2 * j + 2 * k - 2].real for j in range(1, k + 1)])
    a = np.array([-2 * d[2 * j + 2 * k - 2].imag for j in range(1, k + 1)])
    return RakedTrigPoly(k, d[2 * k - 1].real, a, b)


@dataclass(frozen=True)
class RootMultiset:
    """Distinct complex roots with multiplicities."""

    values: np.ndarray
    mult: np.ndarray = field(default=None)

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=complex).reshape(-1)
        m = np.ones(v.size, dtype=int) if self.mult is None else np.asarray(self.mult, dtype=int)
        if m.shape != v.shape or np.any(m < 1):
            raise ValueError("multiplicities must be positive and match the values")
        if np.any(v == 0):
            raise ValueError("a root multiset of a self-inversive polynomial excludes 0")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "mult", m)

    @classmethod
    def from_list(cls, roots, radius: float = CLUSTER_RADIUS) -> "RootMultiset":
        vals, sizes = cluster(np.asarray(roots, dtype=complex), radius)
        return cls(vals, sizes)

    @property
    def size(self) -> int:
        return int(self.mult.sum())

    def expanded(self) -> np.ndarray:
        return np.repeat(self.values, self.mult)

    def on_circle(self, tol: float = CIRCLE_TOL) -> np.ndarray:
        return np.abs(np.abs(self.values) - 1.0) < tol

    def circle_angles(self, tol: float = CIRCLE_TOL) -> tuple[np.ndarray, np.ndarray]:
        """Angles in [0, 2pi) and multiplicities of the roots of modulus one."""
        mask = self.on_circle(tol)
        ang = np.mod(np.angle(self.values[mask]), 2 * math.pi)
        return ang, self.mult[mask]

    def matches(self, other: "RootMultiset", tol: float = 1e-8) -> bool:
        """Equality as multisets, values compared within ``tol``."""
        a = sorted(self.expanded(), key=lambda z: (round(z.real, 6), round(z.imag, 6)))
        b = list(other.expanded())
        if len(a) != len(b):
            return False
        for z in a:
            j = int(np.argmin([abs(z - w) for w in b]))
            if abs(z - b[j]) > tol:
                return False
            b.pop(j)
        return True

    def is_closed_under(self, f, tol: float = 1e-7) -> bool:
        """Whether the multiset is invariant under ``f`` (values within ``tol``)."""
        image = RootMultiset(f(self.values), self.mult)
        return self.matches(image, tol)

    def inversion_symmetric(self, tol: float = 1e-7) -> bool:
        """conj(M) == M^-1, the self-inversive pairing."""
        return self.is_closed_under(lambda v: 1.0 / np.conj(v), tol)


def selfinv_roots(
    D: SelfInvPoly,
    radius: float = CLUSTER_RADIUS,
    max_iter: int = 200,
) -> RootMultiset:
    """Roots of D with multiplicities (clusters of radius ``radius`` merged).

    Raises :class:`bicyclic.roots.RootFindingError` on non-convergence.
    """
    if D.degree < 1:
        raise ValueError("degree must be at least 1")
    c, nzero = trim(D.coeffs)
    if nzero:
        raise ValueError("D(0) = 0 is not allowed for a self-inversive polynomial")
    return RootMultiset.from_list(aberth(c, max_iter=max_iter), radius)


def power_sums(M: RootMultiset, powers) -> np.ndarray:
    z = M.expanded()
    return np.array([np.sum(z**p) for p in powers])


def power_sum_check(M: RootMultiset, k: int) -> np.ndarray:
    """Odd power sums s_1, s_3, ..., s_{2k-3}; all vanish iff M is raked."""
    if M.size != 4 * k - 2:
        raise ValueError(f"multiset has size {M.size}, expected {4 * k - 2}")
    return power_sums(M, [2 * j - 1 for j in range(1, k)])


def newton_power_sums(coeffs, count: int) -> np.ndarray:
    """Power sums s_1..s_count of the roots, from coefficients via Newton's identities.

    Uses p d_{m-p} + sum_{j=1}^{p} s_j d_{m-p+j} = 0 with ascending ``coeffs``.
    """
    d = np.asarray(coeffs, dtype=complex)
    m = d.size - 1

    def coef(i):
        return d[i] if 0 <= i <= m else 0.0

    s = np.zeros(count + 1, dtype=complex)
    for p in range(1, count + 1):
        acc = p * coef(m - p)
        for j in range(1, p):
            acc += s[j] * coef(m - p + j)
        s[p] = -acc / d[m]
    return s[1:]


def odd_power_expansion(n: int) -> dict[int, int]:
    """Coefficients in (x + 1/x)^(2n-1) = sum_m C(2n-1, n+m-1) (x^(2m-1) + x^(1-2m))."""
    return {m: int(comb(2 * n - 1, n + m - 1, exact=True)) for m in range(1, n + 1)}


def _pairs(M: RootMultiset, tol: float) -> list[tuple[complex, int]]:
    """Split M = M^-1 into unordered pairs {zeta, 1/zeta}; returns (zeta + 1/zeta, count)."""
    vals = list(M.values)
    mult = list(M.mult)
    used = [False] * len(vals)
    out = []
    for i, z in enumerate(vals):
        if used[i]:
            continue
        used[i] = True
        inv = 1.0 / z
        if abs(z - inv) < tol:
            if mult[i] % 2:
                raise ValueError(f"root {z:.6g} = +-1 must have even multiplicity")
            out.append((z + inv, mult[i] // 2))
            continue
        cands = [j for j in range(len(vals)) if not used[j]]
        if not cands:
            raise ValueError("multiset is not closed under inversion")
        j = min(cands, key=lambda j: abs(vals[j] - inv))
        if abs(vals[j] - inv) > tol * max(1.0, abs(inv)) or mult[j] != mult[i]:
            raise ValueError("multiset is not closed under inversion")
        used[j] = True
        w = 0.5 * (z + inv + vals[j] + 1.0 / vals[j])
        out.append((w, mult[i]))
    return out


def deform(M: RootMultiset, lam: float, tol: float = 1e-6) -> RootMultiset:
    """Replace every pair {zeta, 1/zeta} by the roots of z^2 - lam (zeta + 1/zeta) z + 1."""
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    roots = []
    for w, count in _pairs(M, tol):
        w = lam * w
        s = np.sqrt(complex(w * w - 4.0))
        z1 = (w + s) / 2 if abs(w + s) >= abs(w - s) else (w - s) / 2
        roots.extend([z1, 1.0 / z1] * count)
    return RootMultiset.from_list(roots)


def poly_from_multiset(M: RootMultiset, tol: float = 1e-7) -> SelfInvPoly:
    """Monic polynomial with zero multiset M (requires conj(M) = M^-1).

    When M is also closed under conjugation the coefficients are real and the
    imaginary round-off is dropped.
    """
    if not M.inversion_symmetric(tol):
        raise ValueError("multiset violates the pairing conj(M) = M^-1")
    d = np.poly(M.expanded())[::-1].astype(complex)
    if M.is_closed_under(np.conj, tol):
        scale = np.abs(d).max()
        if np.abs(d.imag).max() < 1e-10 * scale:
            d = d.real.astype(complex)
    return SelfInvPoly(d)


def root_localization_check(
    A: RakedTrigPoly, start: float, length: float, circle_tol: float = 1e-4
) -> bool | None:
    """Whether every root of A on the circle outside the arc [start, start+length]
    lies in the antipodal arc.

    Only meaningful when A has exactly 2k distinct roots in the arc and the arc
    is shorter than pi; otherwise ``None`` (not applicable) is returned.
    Tightly packed roots are ill-conditioned and may leave the circle by more
    than rounding, so on-circle membership uses the loose ``circle_tol`` and
    the partners z, 1/conj(z) are merged by angle.
    """
    if not 0 < length < math.pi:
        return None
    z = aberth(trig_to_selfinv(A).coeffs)
    near = z[np.abs(np.abs(z) - 1.0) < circle_tol]
    centres, _ = cluster(near / np.abs(near), circle_tol)
    ang = np.mod(np.angle(centres), 2 * math.pi)
    slack = 1e-7
    rel = np.mod(ang - start + slack, 2 * math.pi) - slack
    inside = rel <= length + slack
    if int(inside.sum()) != 2 * A.k:
        return None
    rest = rel[~inside]
    opp = rest - math.pi
    return bool(np.all((opp >= -slack) & (opp <= length + slack)))
