"""Machine-checkable certification of the identities behind the kernels.

Each check evaluates one identity two independent ways (closed form vs
quadrature, series vs kernel sum, composed vs direct law) and returns a
VerificationReport with the observed maximum absolute error against a stated
tolerance. Default tolerances: 1e-8 for quadrature-backed checks, 1e-10 for
series-only checks, 1e-12 for algebraically exact reductions; the spectral
integral check runs at 1e-9.

Validity guards are hard: the Gegenbauer and Watson product formulas are
rejected (not attempted) outside nu >= -1/2 and nu > -1/2 respectively, and
infinite integrals are cut where the integrand envelope drops below 1e-16 of
its peak.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels as kn
from .hypergroup import (
    BesselKingmanParams,
    ContinuousPoint,
    DiscretePoint,
    FanPoint,
    HeisPoint,
    LaguerreParams,
    _first_kind_char,
    _second_kind_char,
    bk_character,
    bk_gaussian_gram,
    bk_translate,
    jacobi_eigenvalues,
    lag_character,
    lag_translate,
    psi_heis,
)
from .quadrature import QuadratureSpec, gauss_jacobi, integrate
from .specfun import (
    bessel_i_norm,
    bessel_j_norm,
    hyp1f1,
    laguerre_L,
    laguerre_L_all,
    log_gamma,
    pochhammer,
)

__all__ = [
    "VerificationReport",
    "weber_schafheitlin_check",
    "glowne3_check",
    "bk_spectral_check",
    "laguerre_identity_suite",
    "gegenbauer_check",
    "watson_check",
    "bk_multiplicativity_check",
    "lag_multiplicativity_check",
    "psd_gram_check",
    "chapman_kolmogorov_check",
    "normalization_check",
    "run_suite",
    "SUITE_NAMES",
    "report_to_dict",
    "report_from_dict",
]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check; passed is defined as err <= tol."""

    check_name: str
    params: tuple
    max_abs_err: float
    tol: float
    passed: bool
    notes: str = field(default="", compare=False)

    def __post_init__(self):
        if not (np.isfinite(self.max_abs_err) and self.max_abs_err >= 0.0):
            raise ValueError("max_abs_err must be finite and >= 0")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.passed != (self.max_abs_err <= self.tol):
            raise ValueError("pass flag inconsistent with max_abs_err <= tol")


def _report(name, params: dict, err: float, tol: float, notes: str = "") -> VerificationReport:
    err = float(err)
    return VerificationReport(check_name=name, params=tuple(sorted(params.items())),
                              max_abs_err=err, tol=tol, passed=err <= tol, notes=notes)


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "check": report.check_name,
        "params": dict(report.params),
        "max_abs_err": report.max_abs_err,
        "tol": report.tol,
        "pass": report.passed,
    }


def report_from_dict(data: dict) -> VerificationReport:
    return VerificationReport(check_name=data["check"],
                              params=tuple(sorted(data["params"].items())),
                              max_abs_err=data["max_abs_err"], tol=data["tol"],
                              passed=data["pass"])


def _fan_label(point: FanPoint) -> str:
    if isinstance(point, DiscretePoint):
        return f"tau={point.tau:g},k={point.k}"
    return f"y1={point.y1:g}"


# ---------------------------------------------------------------------------
# integral identity for the BES identification


def weber_schafheitlin_check(nu: float, alpha: float, beta: float, gamma_: float,
                             q: QuadratureSpec | None = None,
                             tol: float = 1e-9) -> VerificationReport:
    """int_0^inf e^{-alpha v^2} i_nu(beta v) j_nu(gamma v) v^(2nu+1) / (2^nu Gamma(nu+1)) dv
    against the closed form (2 alpha)^-(nu+1) e^{(beta^2-gamma^2)/(4 alpha)} j_nu(beta gamma / (2 alpha)).
    """
    if not nu > -1.0:
        raise ValueError("weber_schafheitlin_check requires nu > -1")
    if not alpha > 0.0:
        raise ValueError("weber_schafheitlin_check requires alpha > 0")
    if beta < 0.0 or gamma_ < 0.0:
        raise ValueError("weber_schafheitlin_check requires beta, gamma >= 0")
    q = q or QuadratureSpec(abs_tol=1e-12)

    log_pref = -nu * math.log(2.0) - log_gamma(nu + 1.0)

    def integrand(vs):
        with np.errstate(divide="ignore"):
            log_env = -alpha * vs * vs + (2.0 * nu + 1.0) * np.log(vs) + log_pref
        i_part = np.exp(log_env + (np.log(bessel_i_norm(nu, beta * vs))
                                   if beta > 0.0 else 0.0))
        return i_part * bessel_j_norm(nu, gamma_ * vs)

    # cutoff: grow until the exponential envelope is 1e-16 of its peak
    peak_v = max((beta + math.sqrt(beta * beta + 4.0 * alpha * (2.0 * nu + 1.0 + 1.0)))
                 / (2.0 * alpha), 1.0)
    cut = peak_v + math.sqrt(50.0 / alpha) + beta / alpha
    while (-alpha * cut * cut + beta * cut + abs(2.0 * nu + 1.0) * math.log(1.0 + cut)
           ) > (-alpha * peak_v * peak_v + beta * peak_v - 37.0 * math.log(10.0)):
        cut *= 1.25

    lhs = integrate(integrand, 0.0, cut, q)
    rhs = ((2.0 * alpha) ** -(nu + 1.0)
           * math.exp((beta * beta - gamma_ * gamma_) / (4.0 * alpha))
           * bessel_j_norm(nu, beta * gamma_ / (2.0 * alpha)))
    return _report("weber_schafheitlin",
                   {"nu": nu, "alpha": alpha, "beta": beta, "gamma": gamma_},
                   abs(lhs - rhs), tol)


# ---------------------------------------------------------------------------
# the QBES spectral identity: exp(t psi) chi_x(x, -w) = sum chi_y q_t(x, dy)


def glowne3_check(start: FanPoint, a: HeisPoint, t: float, delta: float,
                  trunc_eps: float = 1e-12, q: QuadratureSpec | None = None,
                  tol: float = 1e-8) -> VerificationReport:
    """QBES generator identity at order alpha = delta - 1.

    Certified for delta >= 1 (the hypergroup regime); smaller delta > 0 is
    accepted for informative runs since the kernel itself extends there.
    """
    if not delta > 0.0:
        raise ValueError("glowne3_check requires delta > 0")
    q = q or QuadratureSpec(abs_tol=1e-12)
    al = delta - 1.0
    x, w_inv = a.x, -a.w

    if isinstance(start, DiscretePoint):
        chi_start = _first_kind_char(al, start.tau, start.k, x, w_inv)
    else:
        chi_start = _second_kind_char(al, start.y1, x)
    lhs = np.exp(t * psi_heis(a)) * chi_start

    law = kn.qbes_transition(start, t, delta, trunc_eps)
    rhs = 0.0 + 0.0j
    if law.atoms:
        levels = np.array([atom.k for atom, _ in law.atoms])
        probs = np.array([p for _, p in law.atoms])
        tau = law.atoms[0][0].tau
        arg = abs(tau) * x * x
        l_max = int(levels.max())
        lag_vals = laguerre_L_all(l_max, al, arg)[levels]
        log_pref = log_gamma(levels + 1.0) + log_gamma(al + 1.0) - log_gamma(levels + al + 1.0)
        chis = np.exp(log_pref) * np.exp(1j * tau * w_inv - 0.5 * arg) * lag_vals
        rhs += np.sum(probs * chis)
    if law.gamma_ray is not None:
        g = law.gamma_ray
        cut = g.scale * (g.shape + 45.0 + 12.0 * math.sqrt(g.shape + 1.0))

        def integrand(ys):
            return g.pdf(ys) * _second_kind_char(al, 1.0, x * np.sqrt(ys))

        # chi_(0,y)(x, .) = j_al(2 x sqrt(y)); reuse the y1=1 form scaled
        rhs += integrate(integrand, 0.0, cut, q)

    return _report("glowne3",
                   {"start": _fan_label(start), "x": a.x, "w": a.w, "t": t, "delta": delta},
                   abs(lhs - rhs), tol)


def bk_spectral_check(u: float, x: float, t: float, delta: float,
                      q: QuadratureSpec | None = None,
                      tol: float = 1e-8) -> VerificationReport:
    """BES spectral identity: e^{-t x^2/2} eta_u(x) = int eta_v(x) p_t(u, dv)."""
    if u < 0.0 or x < 0.0 or t <= 0.0:
        raise ValueError("bk_spectral_check requires u, x >= 0 and t > 0")
    q = q or QuadratureSpec(abs_tol=1e-12)
    p = BesselKingmanParams(delta)
    lhs = math.exp(-0.5 * t * x * x) * bk_character(u, x, p)
    density = kn.BesDensity(delta, t, u)
    cut = u + 12.0 * math.sqrt(t) + 1.0

    def integrand(vs):
        return bk_character(vs, x, p) * kn.bes_density(density, vs)

    rhs = integrate(integrand, 0.0, cut, q)
    return _report("bk_spectral", {"u": u, "x": x, "t": t, "delta": delta},
                   abs(lhs - rhs), tol)


# ---------------------------------------------------------------------------
# Laguerre-side identities used in the QBES identification


def _identity_i(alpha, j, v, tau, tol):
    """Generating identity: sum_i (i+j)!/(i! j!) L_{i+j}(v) tau^i."""
    m_max = 420
    lag = laguerre_L_all(j + m_max, alpha, v)
    coef = 1.0
    total = 0.0
    tp = 1.0
    for i in range(m_max):
        term = coef * lag[i + j] * tp
        total += term
        if abs(term) <= 1e-18 * max(1.0, abs(total)) and i > 8:
            break
        coef *= (i + j + 1.0) / (i + 1.0)
        tp *= tau
    rhs = ((1.0 - tau) ** (-alpha - 1.0 - j)
           * math.exp(-v * tau / (1.0 - tau))
           * laguerre_L(j, alpha, v / (1.0 - tau)))
    return abs(total - rhs)


def _identity_ii(alpha, k, u, q):
    """Integral form: k! L_k(u) = u^{-alpha/2} int e^{u-v} v^{k+alpha/2} J_alpha(2 sqrt(uv)) dv.

    Compared as L_k(u) vs e^u / (k! Gamma(alpha+1)) int e^{-v} v^{k+alpha}
    j_alpha(2 sqrt(uv)) dv, integrated under v = w^4 so the v^alpha endpoint
    stays differentiable even at k = 0, alpha < 0.
    """
    lhs = laguerre_L(k, alpha, u)
    log_norm = u - log_gamma(k + 1.0) - log_gamma(alpha + 1.0)
    cut = (k + alpha + 50.0 + 12.0 * math.sqrt(k + alpha + 1.0)) ** 0.25

    def integrand(ws):
        vs = ws ** 4
        with np.errstate(divide="ignore"):
            log_f = -vs + (k + alpha) * np.log(vs) + np.log(4.0 * ws ** 3)
        return np.exp(log_f + log_norm) * bessel_j_norm(alpha, 2.0 * np.sqrt(u * vs))

    rhs = integrate(integrand, 0.0, cut, q)
    return abs(lhs - rhs)


def _identity_iii(alpha, c, v, tau):
    """Pochhammer-ratio sum vs its Kummer-transformed hypergeometric form."""
    m_max = 420
    lag = laguerre_L_all(m_max, alpha, v)
    coef = 1.0
    total = 0.0
    tp = 1.0
    for l in range(m_max):
        term = coef * lag[l] * tp
        total += term
        if abs(term) <= 1e-18 * max(1.0, abs(total)) and l > 8:
            break
        coef *= (c + l) / (alpha + 1.0 + l)
        tp *= tau
    w = v * tau / (1.0 - tau)
    rhs = (1.0 - tau) ** (-c) * math.exp(-w) * hyp1f1(alpha + 1.0 - c, alpha + 1.0, w)
    return abs(total - rhs)


def _identity_iv(alpha, v, tau):
    """sum_l L_l(v) tau^l / (alpha+1)_l = e^tau j_alpha(2 sqrt(v tau))."""
    m_max = 420
    lag = laguerre_L_all(m_max, alpha, v)
    denom = 1.0
    total = 0.0
    tp = 1.0
    for l in range(m_max):
        term = lag[l] * tp / denom
        total += term
        if abs(term) <= 1e-18 * max(1.0, abs(total)) and l > 8:
            break
        denom *= alpha + 1.0 + l
        tp *= tau
    rhs = math.exp(tau) * bessel_j_norm(alpha, 2.0 * math.sqrt(v * tau))
    return abs(total - rhs)


def _identity_v(alpha, k, c, v):
    """Dilation: L_k(c v) = (alpha+1)_k sum_l c^l (1-c)^{k-l} / ((k-l)! (alpha+1)_l) L_l(v)."""
    lhs = laguerre_L(k, alpha, c * v)
    lag = laguerre_L_all(k, alpha, v)
    total = 0.0
    for l in range(k + 1):
        total += (c ** l * (1.0 - c) ** (k - l)
                  / (math.factorial(k - l) * pochhammer(alpha + 1.0, l)) * lag[l])
    return abs(lhs - pochhammer(alpha + 1.0, k) * total)


def laguerre_identity_suite(alpha: float, k_max: int = 10,
                            q: QuadratureSpec | None = None,
                            tols: dict | None = None) -> list[VerificationReport]:
    """The five Laguerre/Bessel identities behind the kernel identification.

    Per-identity default tolerances: (i) 1e-10, (ii) 1e-8 (quadrature),
    (iii) 1e-10, (iv) 1e-10, (v) 1e-12 (finite, exact in exact arithmetic).
    """
    if not alpha > -1.0:
        raise ValueError("laguerre_identity_suite requires alpha > -1")
    q = q or QuadratureSpec(abs_tol=1e-12)
    tols = {**{"i": 1e-10, "ii": 1e-8, "iii": 1e-10, "iv": 1e-10, "v": 1e-12},
            **(tols or {})}
    ks = sorted({0, 1, min(3, k_max), min(7, k_max), k_max})
    reports = []

    err = max(_identity_i(alpha, j, v, tau, tols["i"])
              for j in ks for v in (0.5, 2.1) for tau in (0.3, -0.4))
    reports.append(_report("laguerre_identity_i", {"alpha": alpha}, err, tols["i"]))

    err = max(_identity_ii(alpha, k, u, q) for k in ks for u in (0.5, 2.0))
    reports.append(_report("laguerre_identity_ii", {"alpha": alpha}, err, tols["ii"]))

    err = max(_identity_iii(alpha, c, v, tau)
              for c in (alpha + 1.0, alpha + 1.0 + k_max, 1.7)
              for v in (1.2, 2.1) for tau in (0.35,))
    reports.append(_report("laguerre_identity_iii", {"alpha": alpha}, err, tols["iii"]))

    err = max(_identity_iv(alpha, v, tau) for v in (0.8, 3.0) for tau in (0.4, 2.5))
    reports.append(_report("laguerre_identity_iv", {"alpha": alpha}, err, tols["iv"]))

    err = max(_identity_v(alpha, k, c, 1.7) for k in ks for c in (1.0, 0.35, 1.4))
    reports.append(_report("laguerre_identity_v", {"alpha": alpha}, err, tols["v"]))
    return reports


# ---------------------------------------------------------------------------
# product formulas


def gegenbauer_check(nu: float, x: float, y: float,
                     q: QuadratureSpec | None = None,
                     tol: float = 1e-8) -> VerificationReport:
    """Gegenbauer's product formula in normalized form for nu > -1/2:

        j_nu(x) j_nu(y) = Gamma(nu+1) / (Gamma(nu+1/2) sqrt(pi))
                          * int_0^pi j_nu(sqrt(x^2+y^2-2xy cos th)) sin^(2nu) th dth;

    at nu = -1/2 it degenerates to cos x cos y = (cos(x+y) + cos(x-y)) / 2.
    """
    if nu < -0.5:
        raise ValueError("Gegenbauer product formula requires nu >= -1/2")
    if x <= 0.0 or y <= 0.0:
        raise ValueError("gegenbauer_check requires x, y > 0")
    q = q or QuadratureSpec()
    if nu == -0.5:
        lhs = math.cos(x) * math.cos(y)
        rhs = 0.5 * (math.cos(x + y) + math.cos(x - y))
        return _report("gegenbauer", {"nu": nu, "x": x, "y": y}, abs(lhs - rhs), tol,
                       notes="degenerate cosine product")
    lhs = bessel_j_norm(nu, x) * bessel_j_norm(nu, y)
    us, ws = gauss_jacobi(q.nodes, nu - 0.5, nu - 0.5)
    radii = np.sqrt(np.maximum(x * x + y * y - 2.0 * x * y * us, 0.0))
    pref = math.exp(log_gamma(nu + 1.0) - log_gamma(nu + 0.5)) / math.sqrt(math.pi)
    rhs = pref * float(np.sum(ws * bessel_j_norm(nu, radii)))
    return _report("gegenbauer", {"nu": nu, "x": x, "y": y}, abs(lhs - rhs), tol)


def watson_check(nu: float, x: float, y: float, k: int,
                 q: QuadratureSpec | None = None,
                 tol: float = 1e-8) -> VerificationReport:
    """Watson's product formula for Laguerre polynomials, Re nu > -1/2:

        L_k(x^2) L_k(y^2) = Gamma(nu+k+1) / (Gamma(k+1) Gamma(nu+1/2) sqrt(pi))
            * int_0^pi e^{xy cos th} j_(nu-1/2)(xy sin th)
              L_k(x^2+y^2-2xy cos th) sin^(2nu) th dth.
    """
    if not nu > -0.5:
        raise ValueError("Watson product formula requires nu > -1/2")
    if k != int(k) or k < 0:
        raise ValueError("watson_check requires integer k >= 0")
    q = q or QuadratureSpec()
    k = int(k)
    lhs = laguerre_L(k, nu, x * x) * laguerre_L(k, nu, y * y)
    us, ws = gauss_jacobi(q.nodes, nu - 0.5, nu - 0.5)
    sins = np.sqrt(np.maximum(1.0 - us * us, 0.0))
    args = x * x + y * y - 2.0 * x * y * us
    vals = (np.exp(x * y * us)
            * bessel_j_norm(nu - 0.5, abs(x * y) * sins)
            * laguerre_L(k, nu, args))
    pref = math.exp(log_gamma(nu + k + 1.0) - log_gamma(k + 1.0)
                    - log_gamma(nu + 0.5)) / math.sqrt(math.pi)
    rhs = pref * float(np.sum(ws * vals))
    return _report("watson", {"nu": nu, "x": x, "y": y, "k": k}, abs(lhs - rhs), tol)


def bk_multiplicativity_check(u: float, x: float, xp: float, alpha: float,
                              q: QuadratureSpec | None = None,
                              tol: float = 1e-6) -> VerificationReport:
    """Translation of a character equals the product of its values."""
    p = BesselKingmanParams(alpha)
    q = q or QuadratureSpec()
    lhs = bk_translate(lambda r: bk_character(u, r, p), x, xp, p, q)
    rhs = bk_character(u, x, p) * bk_character(u, xp, p)
    return _report("bk_multiplicativity", {"u": u, "x": x, "xp": xp, "alpha": alpha},
                   abs(lhs - rhs), tol)


def lag_multiplicativity_check(c: FanPoint, a: HeisPoint, b: HeisPoint, alpha: float,
                               q: QuadratureSpec | None = None,
                               tol: float = 1e-6) -> VerificationReport:
    p = LaguerreParams(alpha)
    q = q or QuadratureSpec()
    if isinstance(c, DiscretePoint):
        fn = lambda xs, ws: _first_kind_char(alpha, c.tau, c.k, xs, ws)
    else:
        fn = lambda xs, ws: _second_kind_char(alpha, c.y1, xs) + 0.0j * ws
    lhs = lag_translate(fn, a, b, p, q)
    rhs = lag_character(c, a, p) * lag_character(c, b, p)
    return _report("lag_multiplicativity",
                   {"chi": _fan_label(c), "ax": a.x, "aw": a.w, "bx": b.x, "bw": b.w,
                    "alpha": alpha},
                   abs(lhs - rhs), tol)


def psd_gram_check(points, t: float, delta: float,
                   q: QuadratureSpec | None = None,
                   tol: float = 1e-8) -> VerificationReport:
    """Bochner positivity: the Gram matrix of exp(t psi) must be PSD."""
    q = q or QuadratureSpec()
    gram = bk_gaussian_gram(points, t, BesselKingmanParams(delta), q)
    min_eig = float(jacobi_eigenvalues(gram)[0])
    err = max(0.0, -min_eig)
    return _report("psd_gram",
                   {"n": len(points), "t": t, "delta": delta},
                   err, tol, notes=f"min_eig={min_eig:.3e}")


def chapman_kolmogorov_check(start: FanPoint, t1: float, t2: float, delta: float,
                             trunc_eps: float = 1e-12,
                             q: QuadratureSpec | None = None,
                             tol: float = 1e-8) -> VerificationReport:
    err = kn.chapman_kolmogorov_qbes(start, t1, t2, delta, trunc_eps,
                                     q or QuadratureSpec(abs_tol=1e-12))
    return _report("chapman_kolmogorov",
                   {"start": _fan_label(start), "t1": t1, "t2": t2, "delta": delta},
                   err, tol)


def _random_scenario(rng, case: int):
    delta = float(rng.uniform(0.3, 5.0))
    k = int(rng.integers(0, 6))
    if case == 1:
        s = -float(rng.uniform(0.5, 3.0))
        return DiscretePoint(s, k), -s * float(rng.uniform(0.05, 0.9)), delta
    if case == 2:
        s = -float(rng.uniform(0.5, 3.0))
        return DiscretePoint(s, k), -s, delta
    if case == 3:
        s = -float(rng.uniform(0.5, 3.0))
        return DiscretePoint(s, k), -s * float(rng.uniform(1.05, 4.0)), delta
    if case == 4:
        return ContinuousPoint(float(rng.uniform(0.0, 8.0))), float(rng.uniform(0.2, 3.0)), delta
    return DiscretePoint(float(rng.uniform(0.1, 3.0)), k), float(rng.uniform(0.2, 3.0)), delta


def normalization_check(n: int = 200, seed: int = 20240 + 1,
                        trunc_eps: float = 1e-12,
                        tol: float = 1e-12) -> VerificationReport:
    """Sweep random laws through all five kernel cases; report the worst
    deviation of total mass from 1 (tail sizes recorded in the notes)."""
    rng = np.random.default_rng(seed)
    worst_mass = 0.0
    worst_tail = 0.0
    for i in range(n):
        start, t, delta = _random_scenario(rng, i % 5 + 1)
        law = kn.qbes_transition(start, t, delta, trunc_eps)
        worst_mass = max(worst_mass, abs(law.total_mass() - 1.0))
        worst_tail = max(worst_tail, law.tail_mass)
    return _report("normalization", {"n": n, "seed": seed}, worst_mass, tol,
                   notes=f"max_tail={worst_tail:.3e}")


# ---------------------------------------------------------------------------
# the standard suite


SUITE_NAMES = (
    "weber-schafheitlin",
    "glowne3",
    "bk-spectral",
    "laguerre-identities",
    "gegenbauer",
    "watson",
    "multiplicativity",
    "psd-gram",
    "chapman-kolmogorov",
    "normalization",
)


def _suite_weber(q, tol):
    reports = []
    for nu in (-0.5, 0.5, 1.5):
        for (al, be, ga) in ((0.5, 0.0, 1.0), (1.0, 1.0, 1.0),
                             (0.7, 0.5, 1.5), (2.0, 1.2, 0.3)):
            reports.append(weber_schafheitlin_check(nu, al, be, ga, q, tol or 1e-9))
    return reports


def _suite_glowne3(q, tol):
    reports = []
    heis = (HeisPoint(0.8, 0.3), HeisPoint(2.0, -1.1))
    for delta in (1.0, 1.5, 2.0, 3.7):
        for a in heis:
            for start, t in (
                (DiscretePoint(-1.0, 2), 0.4),   # case 1
                (DiscretePoint(-1.0, 2), 1.0),   # case 2
                (DiscretePoint(-1.0, 2), 1.6),   # case 3
                (ContinuousPoint(0.7), 0.9),     # case 4
                (DiscretePoint(1.0, 3), 0.7),    # case 5
            ):
                reports.append(glowne3_check(start, a, t, delta, 1e-12, q, tol or 1e-8))
    return reports


def _suite_bk_spectral(q, tol):
    return [bk_spectral_check(u, x, t, delta, q, tol or 1e-8)
            for delta in (1.0, 2.0, 2.5, 4.0)
            for (u, x, t) in ((1.0, 1.3, 0.7), (0.0, 0.9, 1.2), (2.0, 0.5, 0.4))]


def _suite_laguerre(q, tol):
    reports = []
    for alpha in (-0.3, 0.0, 0.5, 2.1):
        tols = None if tol is None else {k: tol for k in ("i", "ii", "iii", "iv", "v")}
        reports.extend(laguerre_identity_suite(alpha, 10, q, tols))
    return reports


def _suite_gegenbauer(q, tol):
    return [gegenbauer_check(nu, x, y, q, tol or 1e-8)
            for nu in (-0.5, 0.75, 2.0)
            for (x, y) in ((1.3, 0.7), (3.0, 0.1), (0.4, 2.2))]


def _suite_watson(q, tol):
    return [watson_check(nu, x, y, k, q, tol or 1e-8)
            for nu in (0.5, 1.4)
            for k in (0, 2, 5)
            for (x, y) in ((1.0, 1.0), (0.0, 1.3), (1.7, 0.6))]


def _suite_multiplicativity(q, tol):
    rng = np.random.default_rng(777)
    reports = []
    for _ in range(25):
        alpha = float(rng.uniform(1.0, 4.0))
        u, x, xp = (float(v) for v in rng.uniform(0.1, 2.5, size=3))
        reports.append(bk_multiplicativity_check(u, x, xp, alpha, q, tol or 1e-6))
    for i in range(25):
        alpha = float(rng.uniform(0.0, 3.0))
        a = HeisPoint(float(rng.uniform(0.0, 2.0)), float(rng.uniform(-2.0, 2.0)))
        b = HeisPoint(float(rng.uniform(0.0, 2.0)), float(rng.uniform(-2.0, 2.0)))
        if i % 3 == 2:
            c: FanPoint = ContinuousPoint(float(rng.uniform(0.0, 3.0)))
        else:
            c = DiscretePoint(float(rng.uniform(0.2, 2.0)) * (-1.0 if i % 2 else 1.0),
                              int(rng.integers(0, 5)))
        reports.append(lag_multiplicativity_check(c, a, b, alpha, q, tol or 1e-6))
    return reports


def _suite_psd(q, tol):
    points = np.linspace(0.3, 2.7, 10)
    return [psd_gram_check(points, t, delta, q, tol or 1e-8)
            for t in (0.1, 1.0, 5.0) for delta in (1.0, 2.5)]


def _suite_ck(q, tol):
    scenarios = (
        (DiscretePoint(-2.0, 0), 0.5, 0.5, 1.7, 1e-10),  # within case 1
        (DiscretePoint(-1.0, 1), 0.4, 1.0, 2.3, 1e-8),   # case 1 -> case 3
        (DiscretePoint(-1.0, 1), 1.0, 1.0, 2.3, 1e-8),   # gamma intermediate
        (DiscretePoint(-2.0, 1), 1.2, 0.8, 1.5, 1e-8),   # gamma endpoint
        (DiscretePoint(1.0, 3), 0.4, 0.6, 0.9, 1e-12),   # exact binomial
        (ContinuousPoint(0.7), 0.6, 0.9, 2.0, 1e-12),    # Poisson thinning
    )
    return [chapman_kolmogorov_check(start, t1, t2, delta, 1e-12, q, tol or base_tol)
            for (start, t1, t2, delta, base_tol) in scenarios]


def _suite_normalization(q, tol):
    return [normalization_check(200, tol=tol or 1e-12)]


_SUITES = {
    "weber-schafheitlin": _suite_weber,
    "glowne3": _suite_glowne3,
    "bk-spectral": _suite_bk_spectral,
    "laguerre-identities": _suite_laguerre,
    "gegenbauer": _suite_gegenbauer,
    "watson": _suite_watson,
    "multiplicativity": _suite_multiplicativity,
    "psd-gram": _suite_psd,
    "chapman-kolmogorov": _suite_ck,
    "normalization": _suite_normalization,
}


def run_suite(suite: str | None = None, q: QuadratureSpec | None = None,
              tol: float | None = None) -> list[VerificationReport]:
    """Run one named suite or all of them; reports come back in canonical
    order (check name, then parameters)."""
    if suite is not None and suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    names = (suite,) if suite is not None else SUITE_NAMES
    reports = []
    for name in names:
        reports.extend(_SUITES[name](q, tol))
    reports.sort(key=lambda r: (r.check_name, repr(r.params)))
    return reports
