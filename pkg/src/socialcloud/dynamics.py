"""What-if analysis of a single link addition or deletion.

Spillover signs are decided by comparing each agent's global availability
before and after the change in exact rational arithmetic; utility deltas are
carried along for reporting only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .availability import (
    Number,
    PayoffParams,
    Profile,
    SharingParams,
    profile,
)
from .graph import UNREACHABLE, Network, add_link, delete_link, distances

__all__ = [
    "AgentRow",
    "ChangeKind",
    "LinkChange",
    "NeighborCase",
    "SpilloverReport",
    "SpilloverSign",
    "ThirdPartyCase",
    "aggregate_neighbor_availability",
    "apply_change",
    "local_delta",
    "neighbor_case",
    "spillover",
    "third_party_alpha_case",
]


class ChangeKind(enum.Enum):
    ADD = "add"
    DELETE = "del"


@dataclass(frozen=True)
class LinkChange:
    kind: ChangeKind
    i: int
    j: int

    @classmethod
    def add(cls, i: int, j: int) -> "LinkChange":
        return cls(ChangeKind.ADD, i, j)

    @classmethod
    def delete(cls, i: int, j: int) -> "LinkChange":
        return cls(ChangeKind.DELETE, i, j)

    def validate(self, g: Network) -> None:
        if self.i == self.j:
            raise ValueError(f"link change on a single agent {self.i}")
        for a in (self.i, self.j):
            if not 0 <= a < g.n:
                raise ValueError(f"agent {a} out of range for n={g.n}")
        present = g.has_link(self.i, self.j)
        if self.kind is ChangeKind.ADD and present:
            raise ValueError(f"cannot add existing link ({self.i}, {self.j})")
        if self.kind is ChangeKind.DELETE and not present:
            raise ValueError(f"cannot delete missing link ({self.i}, {self.j})")

    def __str__(self) -> str:
        return f"{self.kind.value} <{self.i},{self.j}>"


class SpilloverSign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONE = "none"

    @classmethod
    def of(cls, delta) -> "SpilloverSign":
        if delta > 0:
            return cls.POSITIVE
        if delta < 0:
            return cls.NEGATIVE
        return cls.NONE


class NeighborCase(enum.Enum):
    COMMON_NEIGHBOR = "common_neighbor"
    TWO_HOPS = "two_hops"
    FAR = "far"


def apply_change(g: Network, change: LinkChange) -> Network:
    change.validate(g)
    if change.kind is ChangeKind.ADD:
        return add_link(g, change.i, change.j)
    return delete_link(g, change.i, change.j)


def local_delta(g: Network, params: SharingParams, change: LinkChange) -> tuple:
    """``(delta alpha_ij, delta alpha_ji)`` for the pair whose link changes."""
    before = profile(g, params)
    after = profile(apply_change(g, change), params)
    i, j = change.i, change.j
    return (
        after.alpha[i][j] - before.alpha[i][j],
        after.alpha[j][i] - before.alpha[j][i],
    )


def _without_link(g: Network, i: int, j: int) -> Network:
    return delete_link(g, i, j) if g.has_link(i, j) else g


def neighbor_case(g: Network, i: int, j: int, k: int) -> NeighborCase:
    """Classify neighbour ``k`` of ``i`` relative to ``j`` for a change of ``<ij>``.

    The classification is made on the network *without* ``<ij>``: ``g`` itself
    for an addition, ``g - <ij>`` for a deletion. With ``<ij>`` present every
    neighbour of ``i`` is within two hops of ``j``, so the far case could never
    arise on ``g`` for a deletion.

    ``FAR`` means ``alpha_ik`` strictly drops on addition (rises on deletion);
    the other two cases leave it unchanged.
    """
    if len({i, j, k}) != 3:
        raise ValueError("i, j and k must be distinct")
    if k not in g.adjacency[i]:
        raise ValueError(f"agent {k} is not a neighbour of {i}")
    base = _without_link(g, i, j)
    if k in base.adjacency[j]:
        return NeighborCase.COMMON_NEIGHBOR
    d = distances(base)[k, j]
    if d == 2:
        return NeighborCase.TWO_HOPS
    return NeighborCase.FAR


def aggregate_neighbor_availability(
    g: Network, params: SharingParams, i: int, exclude: Optional[int] = None
) -> Number:
    """Product of ``alpha_ik`` over neighbours ``k`` of ``i`` (``exclude`` skipped)."""
    prof = profile(g, params)
    result = Fraction(1) if not isinstance(params.c, float) else 1.0
    for k in sorted(g.adjacency[i]):
        if k != exclude:
            result *= prof.alpha[i][k]
    return result


@dataclass(frozen=True)
class AgentRow:
    agent: int
    principal: bool
    closeness_before: Fraction
    closeness_after: Fraction
    gamma_before: Number
    gamma_after: Number
    utility_before: Number
    utility_after: Number
    sign: SpilloverSign
    # False when the gamma coefficient q(1-p)theta_k vanishes, so the sign on
    # gamma no longer implies the sign on utility.
    utility_equivalent: bool

    @property
    def delta_closeness(self) -> Fraction:
        return self.closeness_after - self.closeness_before

    @property
    def delta_gamma(self) -> Number:
        return self.gamma_after - self.gamma_before

    @property
    def delta_utility(self) -> Number:
        return self.utility_after - self.utility_before


@dataclass(frozen=True)
class SpilloverReport:
    change: LinkChange
    before: Network
    after: Network
    rows: tuple[AgentRow, ...]
    alpha_ij: tuple[Number, Number]
    alpha_ji: tuple[Number, Number]

    @property
    def bystanders(self) -> tuple[AgentRow, ...]:
        return tuple(r for r in self.rows if not r.principal)

    @property
    def degenerate(self) -> bool:
        return not all(r.utility_equivalent for r in self.rows)

    def sign_of(self, k: int) -> SpilloverSign:
        return self.rows[k].sign


def spillover(
    g: Network, sharing: SharingParams, payoff: PayoffParams, change: LinkChange
) -> SpilloverReport:
    """Per-agent closeness, gamma and utility deltas with spillover signs.

    Principals ``i`` and ``j`` are included and flagged; their sign is that of
    their own gamma change. Values are exact rationals (float params are
    converted bit-exactly).
    """
    after_g = apply_change(g, change)
    sharing = sharing.exact()
    payoff = payoff.exact()
    before: Profile = profile(g, sharing)
    after: Profile = profile(after_g, sharing)
    coeff = sharing.q * (1 - sharing.p)
    rows = []
    for k in range(g.n):
        rows.append(
            AgentRow(
                agent=k,
                principal=k in (change.i, change.j),
                closeness_before=before.closeness[k],
                closeness_after=after.closeness[k],
                gamma_before=before.gamma[k],
                gamma_after=after.gamma[k],
                utility_before=before.utility(payoff, k),
                utility_after=after.utility(payoff, k),
                sign=SpilloverSign.of(after.gamma[k] - before.gamma[k]),
                utility_equivalent=coeff * payoff.theta_of(k) > 0,
            )
        )
    i, j = change.i, change.j
    return SpilloverReport(
        change=change,
        before=g,
        after=after_g,
        rows=tuple(rows),
        alpha_ij=(before.alpha[i][j], after.alpha[i][j]),
        alpha_ji=(before.alpha[j][i], after.alpha[j][i]),
    )


@dataclass(frozen=True)
class ThirdPartyCase:
    """How ``alpha_ij`` moves when a third-party link ``<kl>`` is added.

    ``case`` is one of ``"1a"`` (distance and provider closeness unchanged),
    ``"1b"`` (distance unchanged, provider closeness up), ``"2a"`` / ``"2b"``
    (distance down; distance ratio above / below the closeness ratio),
    ``"2-tie"`` (distance down, ratios equal) or ``"unreachable"`` (no path
    before or after). ``ordering`` is the sign of ``after - before``.
    """

    case: str
    ordering: int
    alpha_before: Fraction
    alpha_after: Fraction


def third_party_alpha_case(g: Network, i: int, j: int, k: int, l: int) -> ThirdPartyCase:
    if len({i, j, k, l}) != 4:
        raise ValueError("i, j, k and l must be distinct")
    after_g = add_link(g, k, l)
    params = SharingParams(Fraction(1), Fraction(0))
    pb, pa = profile(g, params), profile(after_g, params)
    a0, a1 = pb.alpha[i][j], pa.alpha[i][j]
    d0, d1 = pb.dist[i, j], pa.dist[i, j]
    phi0, phi1 = pb.closeness[j], pa.closeness[j]
    if d1 is UNREACHABLE:
        case = "unreachable"
    elif d0 == d1:
        case = "1a" if phi0 == phi1 else "1b"
    elif d0 is UNREACHABLE:
        # d'/d is 0 here, below any closeness ratio
        case = "2b"
    else:
        ratio_d = Fraction(d1, d0)
        ratio_phi = phi0 / phi1
        if ratio_d > ratio_phi:
            case = "2a"
        elif ratio_d < ratio_phi:
            case = "2b"
        else:
            case = "2-tie"
    ordering = (a1 > a0) - (a1 < a0)
    return ThirdPartyCase(case, ordering, a0, a1)
