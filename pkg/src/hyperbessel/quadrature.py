"""Quadrature engines shared by the hypergroup and verification modules.

Fixed-order Gauss-Legendre, weight-matched Gauss-Jacobi nodes (for the
sin^a theta convolution weights), and an adaptive bisection scheme on
Gauss-Legendre panels. Integrands are called with a numpy array of nodes and
must return an array (real or complex) of the same length.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi

__all__ = [
    "QuadratureSpec",
    "QuadratureError",
    "gauss_legendre",
    "gauss_jacobi",
    "integrate",
    "integrate_fixed",
]


class QuadratureError(RuntimeError):
    """Adaptive bisection exhausted its depth budget."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Quadrature controls: nodes per axis, scheme, and adaptive tolerance."""

    nodes: int = 64
    kind: str = "adaptive"  # "gauss" (fixed order) or "adaptive" (bisection)
    abs_tol: float = 1e-10
    max_depth: int = 20

    def __post_init__(self):
        if self.nodes < 16:
            raise ValueError("QuadratureSpec.nodes must be >= 16")
        if self.kind not in ("gauss", "adaptive"):
            raise ValueError("QuadratureSpec.kind must be 'gauss' or 'adaptive'")
        if not self.abs_tol > 0.0:
            raise ValueError("QuadratureSpec.abs_tol must be positive")
        if self.max_depth < 1:
            raise ValueError("QuadratureSpec.max_depth must be >= 1")


DEFAULT_SPEC = QuadratureSpec()


@lru_cache(maxsize=64)
def gauss_legendre(n: int):
    """Nodes and weights on [-1, 1]."""
    return leggauss(n)


@lru_cache(maxsize=256)
def gauss_jacobi(n: int, a: float, b: float):
    """Nodes and weights for the weight (1-x)^a (1+x)^b on [-1, 1]."""
    return roots_jacobi(n, a, b)


def integrate_fixed(f, a: float, b: float, n: int):
    """Single Gauss-Legendre panel of order n on [a, b]."""
    x, w = gauss_legendre(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * np.sum(w * f(mid + half * x))


def integrate(f, a: float, b: float, spec: QuadratureSpec | None = None):
    """Integrate f over [a, b] with the scheme selected by spec.kind.

    The adaptive scheme greedily bisects the panel with the largest error
    estimate (Gauss pair of order n and 2n) until the summed estimate drops
    below abs_tol, and raises QuadratureError once a panel would have to be
    split beyond max_depth while the budget is still unmet.
    """
    spec = spec or DEFAULT_SPEC
    if b < a:
        raise ValueError("integrate requires a <= b")
    if b == a:
        return 0.0
    if spec.kind == "gauss":
        return integrate_fixed(f, a, b, spec.nodes)
    order = min(spec.nodes, 16)
    err0, val0 = _panel(f, a, b, order)
    # (neg_err, pa, pb, depth, value); pa is unique per panel, so comparisons
    # never reach the (possibly complex) value slot
    heap = [(-err0, a, b, 0, val0)]
    total_err, total_val = err0, val0
    n_panels = 1
    while total_err > spec.abs_tol:
        neg_err, pa, pb, depth, v_old = heapq.heappop(heap)
        if depth >= spec.max_depth or n_panels >= 16384:
            raise QuadratureError(
                f"adaptive quadrature exhausted on [{pa:g}, {pb:g}]: "
                f"total residual {total_err:.3e} > {spec.abs_tol:.3e}")
        mid = 0.5 * (pa + pb)
        e1, v1 = _panel(f, pa, mid, order)
        e2, v2 = _panel(f, mid, pb, order)
        total_err += e1 + e2 + neg_err
        total_val += v1 + v2 - v_old
        heapq.heappush(heap, (-e1, pa, mid, depth + 1, v1))
        heapq.heappush(heap, (-e2, mid, pb, depth + 1, v2))
        n_panels += 1
    return total_val


def _panel(f, a, b, order):
    coarse = integrate_fixed(f, a, b, order)
    fine = integrate_fixed(f, a, b, 2 * order)
    return abs(fine - coarse), fine
