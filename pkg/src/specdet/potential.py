"""Polynomial potential model: conjugate rotations, large-q expansion of the
classical momentum, renormalized-action constants, and heat-trace data.

Conventions.  A potential is monic of degree N with V(0)=0, i.e.
V(q) = q^N + sum_{1<=m<N} a_m q^m.  The half-line operators carry a Neumann
(+) or Dirichlet (-) condition at q=0; per-parity heat coefficients are half
the classical ones except for the boundary term +-1/4 at rho=0.
"""
from __future__ import annotations

import cmath
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

_SQRT_PI = math.sqrt(math.pi)


def _as_scalar(c):
    c = complex(c)
    return c.real if c.imag == 0.0 else c


@dataclass(frozen=True)
class PolynomialPotential:
    """Monic polynomial potential with V(0)=0; coefficients may be complex
    (conjugate rotations produce them)."""

    degree: int
    coeffs: Mapping[int, complex] = field(default_factory=dict)
    symmetric: bool | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        clean = {}
        for m, a in self.coeffs.items():
            m = int(m)
            if not 1 <= m <= self.degree:
                raise ValueError(f"coefficient power {m} outside 1..{self.degree}")
            if m == self.degree and abs(a - 1.0) > 1e-14:
                raise ValueError("leading coefficient must be 1 (monic)")
            if m < self.degree and a != 0:
                clean[m] = _as_scalar(a)
        object.__setattr__(self, "coeffs", clean)
        sym = self.degree % 2 == 0 and all(m % 2 == 0 for m in clean)
        if self.symmetric is None:
            object.__setattr__(self, "symmetric", sym)
        elif self.symmetric and not sym:
            raise ValueError("symmetric flag set but odd powers present")

    # -- basic values ----------------------------------------------------

    def __call__(self, q):
        v = q ** self.degree
        for m, a in self.coeffs.items():
            v = v + a * q**m
        return v

    @property
    def is_real(self) -> bool:
        return all(complex(a).imag == 0.0 for a in self.coeffs.values())

    def dense_coeffs(self, lam: complex = 0.0) -> np.ndarray:
        """[lam, a_1, ..., a_{N-1}, 1] for Q(q) = V(q) + lam."""
        c = np.zeros(self.degree + 1, dtype=complex)
        c[0] = lam
        c[self.degree] = 1.0
        for m, a in self.coeffs.items():
            c[m] += a
        return c

    @property
    def growth_order(self) -> Fraction:
        return Fraction(1, 2) + Fraction(1, self.degree)

    @property
    def conjugate_count(self) -> int:
        return self.degree // 2 + 1 if self.symmetric else self.degree + 2

    @property
    def phi(self) -> float:
        return 4.0 * math.pi / (self.degree + 2)

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        parts = [f"q^{self.degree}"]
        for m in sorted(self.coeffs, reverse=True):
            a = self.coeffs[m]
            term = "q" if m == 1 else f"q^{m}"
            if isinstance(a, complex):
                parts.append(f"+ ({a})*{term}")
            else:
                parts.append(f"{'-' if a < 0 else '+'} {abs(a)}*{term}")
        return " ".join(parts)

    def to_json(self) -> str:
        return json.dumps(
            {
                "degree": self.degree,
                "coeffs": {str(m): a if not isinstance(a, complex) else [a.real, a.imag]
                           for m, a in self.coeffs.items()},
                "symmetric": self.symmetric,
            }
        )


_TERM_RE = re.compile(
    r"""^\s*
    (?P<coef>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?   # optional coefficient
    \s*\*?\s*
    q(?:\s*\^\s*(?P<pow>\d+))?
    \s*$""",
    re.VERBOSE,
)


def parse_potential(text: str) -> PolynomialPotential:
    """Parse 'q^N + a*q^m + ...' or the JSON form."""
    text = text.strip()
    if text.startswith("{"):
        d = json.loads(text)
        coeffs = {}
        for m, a in d.get("coeffs", {}).items():
            coeffs[int(m)] = complex(a[0], a[1]) if isinstance(a, list) else float(a)
        coeffs[int(d["degree"])] = 1.0
        return PolynomialPotential(int(d["degree"]), coeffs, d.get("symmetric"))
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    coeffs: dict[int, complex] = {}
    for t in terms:
        m = _TERM_RE.match(t)
        if not m:
            raise ValueError(f"cannot parse potential term {t!r}")
        p = int(m.group("pow") or 1)
        craw = m.group("coef")
        c = float(craw) if craw not in (None, "", "+", "-") else (-1.0 if craw == "-" else 1.0)
        coeffs[p] = coeffs.get(p, 0.0) + c
    if not coeffs:
        raise ValueError("empty potential")
    n = max(coeffs)
    return PolynomialPotential(n, coeffs)


# -- conjugate rotations --------------------------------------------------


def _unit_phase(frac_of_pi: Fraction) -> complex:
    """exp(i*pi*frac_of_pi) with exact values on the quarter lattice."""
    r = frac_of_pi % 2
    table = {
        Fraction(0): 1.0,
        Fraction(1, 2): 1j,
        Fraction(1): -1.0,
        Fraction(3, 2): -1j,
    }
    if r in table:
        return table[r]
    return cmath.exp(1j * math.pi * float(r))


def conjugate(p: PolynomialPotential, ell: int) -> tuple[PolynomialPotential, complex]:
    """ell-th conjugate potential and the spectral-variable rotation.

    V^[ell](q) = e^{-i ell phi} V(e^{-i ell phi/2} q), phi = 4 pi/(N+2); the
    returned rotation e^{-i ell phi} multiplies the spectral parameter.
    """
    L = p.conjugate_count
    if not 0 <= ell < L:
        raise ValueError(f"conjugate index {ell} outside 0..{L - 1}")
    n = p.degree
    coeffs: dict[int, complex] = {n: 1.0}
    for m, a in p.coeffs.items():
        # phase exponent: -ell*phi*(1 + m/2) = -pi * 2*ell*(2+m)/(N+2)
        ph = _unit_phase(Fraction(-2 * ell * (2 + m), n + 2))
        coeffs[m] = _as_scalar(a * ph)
    rot = _unit_phase(Fraction(-4 * ell, n + 2))
    return PolynomialPotential(n, coeffs), rot


# -- beta expansion of (V+lambda)^{-s+1/2} --------------------------------


def _binom_ppoly(k: int) -> np.ndarray:
    """binom(p, k) as ascending polynomial coefficients in p."""
    poly = np.array([1.0])
    for i in range(k):
        poly = np.polynomial.polynomial.polymul(poly, np.array([-i, 1.0]))
    return poly / math.factorial(k)


@dataclass(frozen=True)
class BetaExpansion:
    """Large-q expansion (V+lam)^{-s+1/2} ~ sum_sigma beta_sigma(s) q^{sigma - N s}.

    Coefficients are stored as polynomials in p = 1/2 - s (ascending); the
    sigma = -1 coefficient drives the log term of the renormalized action.
    """

    potential: PolynomialPotential
    lam: complex
    order: int
    terms: tuple[tuple[Fraction, tuple[complex, ...]], ...]

    def coefficient_poly(self, sigma) -> np.ndarray:
        sigma = Fraction(sigma)
        for sg, c in self.terms:
            if sg == sigma:
                return np.array(c)
        return np.array([0.0])

    def coefficient(self, sigma, s: complex = 0.0) -> complex:
        ppoly = self.coefficient_poly(sigma)
        p = 0.5 - s
        return complex(np.polynomial.polynomial.polyval(p, ppoly))

    @property
    def beta_minus1_poly(self) -> np.ndarray:
        return self.coefficient_poly(-1)

    def beta_minus1(self, s: complex = 0.0) -> complex:
        return self.coefficient(-1, s)

    def value(self, q: float, s: complex) -> complex:
        """Evaluate the truncated series at q (for validation)."""
        n = self.potential.degree
        tot = 0.0 + 0j
        for sg, c in self.terms:
            coef = complex(np.polynomial.polynomial.polyval(0.5 - s, np.array(c)))
            tot += coef * q ** complex(float(sg) - n * s)
        return tot


def beta_expansion(p: PolynomialPotential, lam: complex = 0.0, order: int | None = None) -> BetaExpansion:
    """Multinomial expansion of (V+lam)^{-s+1/2} in descending powers of q.

    `order` counts sigma levels below the leading N/2; the default reaches
    sigma = -3 (two guard terms past the log threshold at sigma = -1).
    """
    n = p.degree
    if order is None:
        order = n // 2 + 3 + n  # down to sigma = -3 - n/2 margin
    if order < n + 2:
        order = n + 2
    # u has entries at negative integer exponents m-N (and -N for lam)
    u: dict[int, complex] = {}
    for m, a in p.coeffs.items():
        u[m - n] = u.get(m - n, 0.0) + complex(a)
    if lam != 0:
        u[-n] = u.get(-n, 0.0) + complex(lam)
    emin = -order  # offsets from sigma = N/2 kept down to this
    acc: dict[int, np.ndarray] = {0: np.array([1.0 + 0j])}
    uk: dict[int, complex] = {0: 1.0 + 0j}
    for k in range(1, order + 2):
        new: dict[int, complex] = {}
        for e1, c1 in uk.items():
            for e2, c2 in u.items():
                e = e1 + e2
                if e >= emin:
                    new[e] = new.get(e, 0.0) + c1 * c2
        uk = new
        if not uk:
            break
        bp = _binom_ppoly(k).astype(complex)
        for e, c in uk.items():
            cur = acc.get(e, np.array([0.0 + 0j]))
            acc[e] = np.polynomial.polynomial.polyadd(cur, bp * c)
    terms = []
    for e in sorted(acc, reverse=True):
        sigma = Fraction(n, 2) + e
        terms.append((sigma, tuple(complex(x) for x in acc[e])))
    return BetaExpansion(p, complex(lam), order, tuple(terms))


# -- renormalized action ---------------------------------------------------


@dataclass(frozen=True)
class ActionNormalization:
    """Data fixing the recessive solution's normalization at large q."""

    S_terms: tuple[tuple[Fraction, complex], ...]  # (exponent of q, coefficient) of S_lam
    beta_minus1_at_0: complex
    C: complex

    def S(self, q) -> complex:
        return sum(c * q ** float(e) for e, c in self.S_terms)


def _c_from_ppoly(bpoly, n: int) -> complex:
    """C = (1/N)(-2 log2 beta_{-1}(0) + d/ds[beta_{-1}(s)/(1-2s)]_{s=0}) from
    the p-polynomial of beta_{-1} (p = 1/2 - s, so 1 - 2s = 2p)."""
    b0 = complex(np.polynomial.polynomial.polyval(0.5, np.asarray(bpoly)))
    dds = 0.0 + 0j
    for j, a in enumerate(bpoly):
        dds += -complex(a) * (j - 1) * 0.5 ** (j - 2) / 2.0
    return (-2.0 * math.log(2.0) * b0 + dds) / n


def beta_minus1_ppoly(p: PolynomialPotential, lam: complex) -> np.ndarray:
    """p-polynomial of beta_{-1}(s) alone (targeted; no full expansion)."""
    n = p.degree
    u: dict[int, complex] = {}
    for m, a in p.coeffs.items():
        u[m - n] = u.get(m - n, 0.0) + complex(a)
    if lam != 0:
        u[-n] = u.get(-n, 0.0) + complex(lam)
    target = -1 - n // 2 if n % 2 == 0 else None
    # sigma = N/2 + e hits -1 only when e = -1 - N/2 is an integer (N even)
    if target is None or not u:
        return np.array([0.0 + 0j])
    acc = np.array([0.0 + 0j])
    uk: dict[int, complex] = {0: 1.0 + 0j}
    for k in range(1, 2 * n + 6):
        new: dict[int, complex] = {}
        for e1, c1 in uk.items():
            for e2, c2 in u.items():
                e = e1 + e2
                if e >= target:
                    new[e] = new.get(e, 0.0) + c1 * c2
        uk = new
        if not uk:
            break
        ct = uk.get(target, 0.0)
        if ct != 0:
            acc = np.polynomial.polynomial.polyadd(acc, _binom_ppoly(k).astype(complex) * ct)
    return acc


def recessive_constant(p: PolynomialPotential, lam: complex) -> complex:
    """Normalization constant of the recessive solution (0 whenever the
    momentum expansion never produces a 1/q term)."""
    return _c_from_ppoly(beta_minus1_ppoly(p, lam), p.degree)


def action_normalization(p: PolynomialPotential, lam: complex = 0.0,
                         expansion: BetaExpansion | None = None) -> ActionNormalization:
    """Truncated action S_lam (terms sigma > -1) and the constant fixing the
    recessive normalization.

    The constant is (1/N)(-2 log2 beta_{-1}(0) + d/ds[beta_{-1}(s)/(1-2s)] at
    s=0); for potentials whose expansion never hits sigma = -1 it vanishes.
    """
    n = p.degree
    bx = expansion or beta_expansion(p, lam)
    sterms = []
    for sigma, cpoly in bx.terms:
        if sigma > -1:
            c0 = complex(np.polynomial.polynomial.polyval(0.5, np.array(cpoly)))
            if c0 != 0:
                sterms.append((sigma + 1, c0 / float(sigma + 1)))
    bpoly = bx.beta_minus1_poly
    b0 = complex(np.polynomial.polynomial.polyval(0.5, bpoly))
    return ActionNormalization(tuple(sterms), b0, _c_from_ppoly(bpoly, n))


# -- heat-trace and Bohr-Sommerfeld coefficients ---------------------------


@dataclass(frozen=True)
class HeatCoefficient:
    rho: Fraction
    c_plus: complex
    c_minus: complex

    @property
    def total(self) -> complex:
        return self.c_plus + self.c_minus


def heat_coefficients(p: PolynomialPotential, count: int | None = None) -> list[HeatCoefficient]:
    """Small-t expansion coefficients of the classical partition function,
    split per parity (the rho=0 boundary term contributes +-1/4).

    Exact Gamma-integral expansion of (pi t)^{-1/2} int_0^inf e^{-V t} dq;
    valid against the quantum trace for rho <= 0, which is all that the
    Euler-Maclaurin tails consume.
    """
    if not p.is_real:
        raise ValueError("heat coefficients require a real potential")
    n = p.degree
    w = {m: float(a.real if isinstance(a, complex) else a) for m, a in p.coeffs.items()}
    # rho(k, j) = k - 1/2 - (j+1)/N for the W^k q^j term
    acc: dict[Fraction, float] = {}
    wk = {0: 1.0}
    k = 0
    kfact = 1.0
    while True:
        for j, c in wk.items():
            rho = k - Fraction(1, 2) - Fraction(j + 1, n)
            if rho <= 0:
                val = ((-1) ** k / kfact) * c * math.gamma((j + 1) / n) / (n * _SQRT_PI)
                acc[rho] = acc.get(rho, 0.0) + val
        k += 1
        kfact *= k
        if w:
            new: dict[int, float] = {}
            for j, c in wk.items():
                for m, a in w.items():
                    new[j + m] = new.get(j + m, 0.0) + c * a
            wk = {j: c for j, c in new.items()
                  if k - Fraction(1, 2) - Fraction(j + 1, n) <= 0}
        else:
            wk = {}
        if not wk:
            break
    out = []
    for rho in sorted(acc):
        tot = acc[rho]
        if rho == 0:
            out.append(HeatCoefficient(rho, tot / 2 + 0.25, tot / 2 - 0.25))
        else:
            out.append(HeatCoefficient(rho, tot / 2, tot / 2))
    if Fraction(0) not in acc:
        out.append(HeatCoefficient(Fraction(0), 0.25, -0.25))
        out.sort(key=lambda h: h.rho)
    if count is not None:
        out = out[:count]
    return out


@dataclass(frozen=True)
class BSCoefficient:
    rho: Fraction            # <= 0; the counting term is b * E^{-rho}
    b_plus: float
    b_minus: float


def bs_coefficients(heat: list[HeatCoefficient]) -> list[BSCoefficient]:
    """Bohr-Sommerfeld counting coefficients from heat data:
    b_{-rho}/2 = c_rho/Gamma(1-rho) for rho != 0, and b_0 = c_0^+ + c_0^-."""
    out = []
    for h in heat:
        if h.rho > 0:
            continue
        if h.rho == 0:
            b = float((h.c_plus + h.c_minus).real)
            out.append(BSCoefficient(h.rho, b, b))
        else:
            g = math.gamma(1.0 - float(h.rho))
            out.append(BSCoefficient(h.rho, 2 * float(h.c_plus.real) / g,
                                     2 * float(h.c_minus.real) / g))
    return sorted(out, key=lambda b: b.rho)


def z0_pair(p: PolynomialPotential, lam: complex = 0.0) -> tuple[complex, complex]:
    """Leading trace identity Z^{+-}(0, lam) = sum_{0<=n<=mu} c_{-n} (-lam)^n / n!."""
    mu = p.growth_order
    zp = zm = 0.0 + 0j
    for h in heat_coefficients(p):
        if h.rho <= 0 and h.rho.denominator == 1:
            nn = -int(h.rho)
            if nn <= mu:
                zp += h.c_plus * (-lam) ** nn / math.factorial(nn)
                zm += h.c_minus * (-lam) ** nn / math.factorial(nn)
    return _as_scalar(zp), _as_scalar(zm)
