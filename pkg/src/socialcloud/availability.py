"""Closeness, local/global resource availability and expected payoff.

Closeness is always exact (a ``Fraction``). Availabilities follow the type of
the sharing constant ``c = p(1-q)``: pass ``Fraction`` probabilities for exact
rational results, floats for binary64 results.

The local availability of consumer ``i`` from provider ``j`` is

    alpha_ij = c / (d_ij * Phi_j)

where ``Phi_j`` is the *provider's* harmonic closeness, so each provider
spreads the mass ``c`` over everyone it can reach. Unreachable pairs have
``alpha_ij = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Mapping, Union

from .graph import UNREACHABLE, DistanceMatrix, Network, distances, reciprocal

__all__ = [
    "FLOAT_TOL",
    "PayoffParams",
    "Profile",
    "SharingParams",
    "closeness",
    "closeness_all",
    "global_availability",
    "local_availability",
    "profile",
    "utility",
]

Number = Union[int, float, Fraction]

#: Absolute tolerance for float comparisons of closeness-derived quantities.
FLOAT_TOL = 1e-12


def _check_probability(name: str, value: Number) -> None:
    if not isinstance(value, Real) or not 0 <= value <= 1:
        raise ValueError(f"{name} must be a probability in [0, 1], got {value!r}")


def _exact(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class SharingParams:
    """Probability ``p`` of holding a spare resource and ``q`` of needing one."""

    p: Number
    q: Number

    def __post_init__(self) -> None:
        _check_probability("p", self.p)
        _check_probability("q", self.q)

    @property
    def c(self) -> Number:
        """Probability that an agent acts as a provider, ``p(1-q)``."""
        return self.p * (1 - self.q)

    @classmethod
    def with_constant(cls, c: Number) -> "SharingParams":
        """Params whose sharing constant is ``c`` (``p = c``, ``q = 0``)."""
        return cls(c, Fraction(0) if isinstance(c, Fraction) else 0)

    def exact(self) -> "SharingParams":
        """The same params as exact rationals (floats converted bit-exactly)."""
        return SharingParams(_exact(self.p), _exact(self.q))


@dataclass(frozen=True)
class PayoffParams:
    """Task benefit ``theta``, provision benefit ``xi`` and per-link cost ``sigma``.

    ``theta_by_agent`` / ``xi_by_agent`` override the scalar for listed agents.
    """

    theta: Number
    xi: Number
    sigma: Number
    theta_by_agent: Mapping[int, Number] = field(default_factory=dict)
    xi_by_agent: Mapping[int, Number] = field(default_factory=dict)

    def __post_init__(self) -> None:
        values = [("theta", self.theta), ("xi", self.xi), ("sigma", self.sigma)]
        values += [(f"theta[{k}]", v) for k, v in self.theta_by_agent.items()]
        values += [(f"xi[{k}]", v) for k, v in self.xi_by_agent.items()]
        for name, v in values:
            if not isinstance(v, Real) or v < 0:
                raise ValueError(f"{name} must be a nonnegative number, got {v!r}")

    def theta_of(self, i: int) -> Number:
        return self.theta_by_agent.get(i, self.theta)

    def xi_of(self, i: int) -> Number:
        return self.xi_by_agent.get(i, self.xi)

    def exact(self) -> "PayoffParams":
        return PayoffParams(
            _exact(self.theta),
            _exact(self.xi),
            _exact(self.sigma),
            {k: _exact(v) for k, v in self.theta_by_agent.items()},
            {k: _exact(v) for k, v in self.xi_by_agent.items()},
        )


def _closeness_from(dm: DistanceMatrix, i: int) -> Fraction:
    row = dm.row(i)
    return sum((reciprocal(row[j]) for j in range(dm.n) if j != i), Fraction(0))


def closeness(g: Network, i: int) -> Fraction:
    """Harmonic closeness: sum of ``1/d_ij`` over reachable ``j != i``."""
    if not 0 <= i < g.n:
        raise ValueError(f"agent {i} out of range for n={g.n}")
    return _closeness_from(distances(g), i)


def closeness_all(g: Network) -> tuple[Fraction, ...]:
    dm = distances(g)
    return tuple(_closeness_from(dm, i) for i in range(g.n))


def _alpha(c: Number, d, phi_j: Fraction) -> Number:
    if d is UNREACHABLE:
        return c * 0
    return c / (d * phi_j)


def local_availability(g: Network, params: SharingParams, i: int, j: int) -> Number:
    """Probability that consumer ``i`` obtains the resource from provider ``j``."""
    if i == j:
        raise ValueError("local availability needs two distinct agents")
    dm = distances(g)
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError(f"agents ({i}, {j}) out of range for n={g.n}")
    d = dm[i, j]
    if d is UNREACHABLE:
        return params.c * 0
    return _alpha(params.c, d, _closeness_from(dm, j))


def _gamma_from(alphas, one) -> Number:
    miss = one
    for a in alphas:
        miss *= 1 - a
    return one - miss


def global_availability(g: Network, params: SharingParams, i: int) -> Number:
    """Probability that ``i`` obtains the resource from at least one provider."""
    return profile(g, params).gamma[i]


def utility(g: Network, sharing: SharingParams, payoff: PayoffParams, i: int) -> Number:
    """Expected payoff ``p(1-q)xi + q[p + (1-p)gamma]theta - sigma*|eta|``."""
    return profile(g, sharing).utility(payoff, i)


@dataclass(frozen=True)
class Profile:
    """Every availability quantity of one network under one parameter set.

    ``alpha[i][j]`` is ``None`` on the diagonal.
    """

    network: Network
    params: SharingParams
    dist: DistanceMatrix
    closeness: tuple[Fraction, ...]
    alpha: tuple[tuple, ...]
    gamma: tuple

    def utility(self, payoff: PayoffParams, i: int) -> Number:
        p, q = self.params.p, self.params.q
        degree = len(self.network.adjacency[i])
        return (
            p * (1 - q) * payoff.xi_of(i)
            + q * (p + (1 - p) * self.gamma[i]) * payoff.theta_of(i)
            - payoff.sigma * degree
        )

    def utilities(self, payoff: PayoffParams) -> tuple:
        return tuple(self.utility(payoff, i) for i in range(self.network.n))


def profile(g: Network, params: SharingParams) -> Profile:
    """Compute distances, closeness, the alpha matrix and gamma for ``g``."""
    dm = distances(g)
    phi = tuple(_closeness_from(dm, i) for i in range(g.n))
    c = params.c
    one = 1.0 if isinstance(c, float) else Fraction(1)
    alpha = []
    for i in range(g.n):
        row = dm.row(i)
        alpha.append(
            tuple(None if j == i else _alpha(c, row[j], phi[j]) for j in range(g.n))
        )
    gamma = tuple(
        _gamma_from((a for a in alpha[i] if a is not None), one) for i in range(g.n)
    )
    return Profile(g, params, dm, phi, tuple(alpha), gamma)
