"""Exact samplers for the kernel building blocks and path simulation.

Randomness comes from a counter-based 64-bit generator (splitmix-style
avalanche over a Weyl sequence). Per-path streams are derived from
(master_seed, path_id) through the same mixing function, so a batch of paths
is bit-reproducible regardless of scheduling or thread count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .hypergroup import ContinuousPoint, DiscretePoint, FanPoint
from .kernels import TransitionLaw, qbes_transition

__all__ = [
    "RngState",
    "PathSample",
    "sample_law",
    "sample_gamma",
    "sample_poisson",
    "sample_qbes_path",
    "sample_bes",
    "sample_bes_path",
]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class RngState:
    """Seed-derived counter state; identical seeds produce identical streams."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = _mix64(int(seed))

    @classmethod
    def for_path(cls, master_seed: int, path_id: int) -> "RngState":
        """Stream for one path of a batch; independent of scheduling order."""
        if path_id < 0:
            raise ValueError("path_id must be >= 0")
        rng = cls.__new__(cls)
        rng._state = _mix64(int(master_seed)) ^ _mix64((path_id + 1) * _GOLDEN)
        return rng

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def uniform(self) -> float:
        """Uniform on the open interval (0, 1)."""
        return ((self.next_u64() >> 11) + 0.5) * 2.0 ** -53

    def normal(self) -> float:
        u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


def sample_gamma(rng: RngState, shape: float, scale: float) -> float:
    """Gamma variate: Marsaglia-Tsang squeeze for shape >= 1, boost below."""
    if shape <= 0.0 or scale <= 0.0:
        raise ValueError("sample_gamma requires positive shape and scale")
    if shape < 1.0:
        u = rng.uniform()
        return sample_gamma(rng, shape + 1.0, scale) * u ** (1.0 / shape)
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    while True:
        x = rng.normal()
        v = 1.0 + c * x
        if v <= 0.0:
            continue
        v = v * v * v
        u = rng.uniform()
        if u < 1.0 - 0.0331 * x ** 4:
            return scale * d * v
        if math.log(u) < 0.5 * x * x + d * (1.0 - v + math.log(v)):
            return scale * d * v


def sample_poisson(rng: RngState, rate: float) -> int:
    """Poisson variate by product inversion, split for large rates."""
    if rate < 0.0:
        raise ValueError("sample_poisson requires rate >= 0")
    if rate == 0.0:
        return 0
    if rate > 500.0:
        half = rate / 2.0
        return sample_poisson(rng, half) + sample_poisson(rng, rate - half)
    limit = math.exp(-rate)
    k = 0
    prod = rng.uniform()
    while prod > limit:
        k += 1
        prod *= rng.uniform()
    return k


def sample_law(law: TransitionLaw, rng: RngState) -> FanPoint:
    """Draw a fan point from a one-step law by inverse CDF over its atoms.

    Mass landing beyond the stored atoms resumes the underlying negative
    binomial / Poisson series via its pmf ratio recurrence; a gamma-ray law
    draws Gamma(shape, scale) onto the continuous branch.
    """
    u = rng.uniform()
    cum = 0.0
    last_prob = 0.0
    last_atom = None
    for atom, prob in law.atoms:
        cum += prob
        last_prob, last_atom = prob, atom
        if u <= cum:
            return atom
    if law.gamma_ray is not None:
        return ContinuousPoint(sample_gamma(rng, law.gamma_ray.shape, law.gamma_ray.scale))
    ext = law.extension
    if ext is None or last_atom is None:
        return last_atom if last_atom is not None else ContinuousPoint(0.0)
    # resume the series one pmf ratio at a time
    m = last_atom.k - ext.base_level
    prob = last_prob
    for _ in range(10_000_000):
        if ext.kind == "negbin":
            prob *= ext.q * (ext.r + m) / (m + 1.0)
        else:
            prob *= ext.q / (m + 1.0)
        m += 1
        cum += prob
        if u <= cum:
            break
    return DiscretePoint(ext.tau, ext.base_level + m)


@dataclass(frozen=True)
class PathSample:
    """A simulated trajectory on a strictly increasing time grid."""

    times: tuple
    states: tuple
    path_id: int = 0

    def __post_init__(self):
        if len(self.times) != len(self.states):
            raise ValueError("times and states must have equal length")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        if self.path_id < 0:
            raise ValueError("path_id must be >= 0")


def sample_qbes_path(start: FanPoint, time_grid, delta: float, rng: RngState,
                     trunc_eps: float = 1e-12, path_id: int = 0) -> PathSample:
    """Iterate one-step QBES kernels over the grid increments (grid from time 0).

    The first coordinate advances uniformly to the right, so the continuous
    branch is visited only if the grid contains the exact crossing time of the
    starting ray.
    """
    times = tuple(float(t) for t in time_grid)
    if not times or times[0] <= 0.0:
        raise ValueError("time grid must start after 0")
    state = start
    t_prev = 0.0
    states = []
    for t_next in times:
        law = qbes_transition(state, t_next - t_prev, delta, trunc_eps)
        state = sample_law(law, rng)
        states.append(state)
        t_prev = t_next
    return PathSample(times=times, states=tuple(states), path_id=path_id)


def sample_bes(x0: float, t: float, delta: float, rng: RngState) -> float:
    """Exact BES(delta) transition draw from x0 over time t.

    Y^2 ~ t * noncentral chi-square(delta, x0^2/t), realized through the
    Poisson mixture: N ~ Poisson(x0^2 / 2t), Y^2 ~ Gamma(delta/2 + N, 2t).
    """
    if x0 < 0.0:
        raise ValueError("sample_bes requires x0 >= 0")
    if t <= 0.0 or delta <= 0.0:
        raise ValueError("sample_bes requires t > 0 and delta > 0")
    n = sample_poisson(rng, x0 * x0 / (2.0 * t))
    y_sq = sample_gamma(rng, 0.5 * delta + n, 2.0 * t)
    return math.sqrt(y_sq)


def sample_bes_path(x0: float, time_grid, delta: float, rng: RngState,
                    path_id: int = 0) -> PathSample:
    """Markov iteration of exact BES transitions over the grid increments."""
    times = tuple(float(t) for t in time_grid)
    if not times or times[0] <= 0.0:
        raise ValueError("time grid must start after 0")
    state = float(x0)
    t_prev = 0.0
    states = []
    for t_next in times:
        state = sample_bes(state, t_next - t_prev, delta, rng)
        states.append(state)
        t_prev = t_next
    return PathSample(times=times, states=tuple(states), path_id=path_id)
