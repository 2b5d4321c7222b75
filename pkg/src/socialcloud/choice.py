"""Partner choice for link addition, driven by local availability.

An agent adding one link gains the most local availability from the new
partner whose closeness *after* the addition is smallest, since the new
partner sits at distance 1. :func:`best_partner` ranks candidates that way;
:func:`prefers` compares two candidates by the *gain* in local availability,
which also accounts for what the agent already received from each of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .availability import Number, SharingParams, profile
from .graph import (
    UNREACHABLE,
    Distance,
    Network,
    add_link,
    ring_network,
)

__all__ = [
    "AlphaDistanceCheck",
    "Candidate",
    "PartnerRanking",
    "Preference",
    "RingRow",
    "RingScenario",
    "alpha_vs_distance_check",
    "best_partner",
    "preference_theorem_items",
    "prefers",
    "ring_closeness_closed_form",
    "ring_scenario",
]


def _dkey(d: Distance) -> tuple[int, int]:
    return (1, 0) if d is UNREACHABLE else (0, d)


@dataclass(frozen=True)
class ProviderView:
    provider: int
    distance: Distance
    closeness: Fraction
    alpha: Number


@dataclass(frozen=True)
class AlphaDistanceCheck:
    """Providers of ``chooser`` ranked by alpha, plus any ordering violations."""

    chooser: int
    providers: tuple[ProviderView, ...]
    violations: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def alpha_vs_distance_check(
    g: Network, params: SharingParams, i: int
) -> AlphaDistanceCheck:
    """Check how alpha from each provider depends on distance and closeness.

    Verified orderings (all strict, skipped when ``c = 0``):

    * one provider moved one hop further would give less;
    * of two providers with equal closeness, the nearer gives more;
    * of two providers at equal distance, the less close one gives more;
    * unreachable providers give 0 and rank last.
    """
    prof = profile(g, params)
    c = params.c
    views = [
        ProviderView(j, prof.dist[i, j], prof.closeness[j], prof.alpha[i][j])
        for j in range(g.n)
        if j != i
    ]
    views.sort(key=lambda v: (-v.alpha, _dkey(v.distance), v.provider))
    violations = []
    if c != 0:
        for v in views:
            if v.distance is UNREACHABLE:
                if v.alpha != 0:
                    violations.append(f"unreachable provider {v.provider} gives {v.alpha}")
                continue
            further = c / ((v.distance + 1) * v.closeness)
            if not v.alpha > further:
                violations.append(f"provider {v.provider}: alpha not decreasing in distance")
        reachable = [v for v in views if v.distance is not UNREACHABLE]
        for a in reachable:
            for b in reachable:
                if a.closeness == b.closeness and a.distance > b.distance:
                    if not a.alpha < b.alpha:
                        violations.append(
                            f"equal closeness: provider {a.provider} is further than "
                            f"{b.provider} but gives at least as much"
                        )
                if a.distance == b.distance and b.closeness < a.closeness:
                    if not b.alpha > a.alpha:
                        violations.append(
                            f"equal distance: provider {b.provider} is less close than "
                            f"{a.provider} but gives no more"
                        )
        first_unreachable = len(reachable)
        if any(v.distance is not UNREACHABLE for v in views[first_unreachable:]):
            violations.append("unreachable providers not ranked last")
    return AlphaDistanceCheck(i, tuple(views), tuple(violations))


@dataclass(frozen=True)
class Candidate:
    partner: int
    closeness_after: Fraction
    alpha_after: Number
    # informational only; never used for ranking
    gamma_after: Number


@dataclass(frozen=True)
class PartnerRanking:
    chooser: int
    candidates: tuple[Candidate, ...]

    @property
    def is_empty(self) -> bool:
        return not self.candidates

    @property
    def top(self) -> Optional[Candidate]:
        return self.candidates[0] if self.candidates else None


def best_partner(g: Network, params: SharingParams, i: int) -> PartnerRanking:
    """Rank every non-neighbour ``j`` of ``i`` as a partner for a new link.

    Candidates are ordered by ascending closeness of ``j`` in ``g + <ij>``
    (equivalently descending ``alpha_ij`` there), ties by lowest id. An agent
    already linked to everyone gets an empty ranking (check ``is_empty``).
    """
    if not 0 <= i < g.n:
        raise ValueError(f"agent {i} out of range for n={g.n}")
    out = []
    for j in range(g.n):
        if j == i or g.has_link(i, j):
            continue
        prof = profile(add_link(g, i, j), params)
        out.append(Candidate(j, prof.closeness[j], prof.alpha[i][j], prof.gamma[i]))
    out.sort(key=lambda cand: (cand.closeness_after, cand.partner))
    return PartnerRanking(i, tuple(out))


@dataclass(frozen=True)
class Preference:
    """Outcome of comparing partners ``j`` and ``k`` for chooser ``i``.

    ``lemma_lhs > lemma_rhs`` is the closed-form criterion; ``gain_j > gain_k``
    is the direct comparison of local availability gains. Both agree.
    """

    prefers: bool
    lemma_lhs: Number
    lemma_rhs: Number
    gain_j: Number
    gain_k: Number


def _cross_difference(c, a: Number, b: Number) -> Number:
    """``c * (b - a) / (a * b)`` with ``a, b`` denominators of reciprocal terms.

    A zero denominator stands for a vanished availability term (unreachable
    provider), whose reciprocal counts as 0.
    """
    if a and b:
        return c * (b - a) / (a * b)
    inv_a = 1 / a if a else 0
    inv_b = 1 / b if b else 0
    return c * (inv_a - inv_b)


def _scaled_distance_closeness(d: Distance, phi: Fraction) -> Number:
    return 0 if d is UNREACHABLE else d * phi


def prefers(
    g: Network, params: SharingParams, i: int, j: int, k: int
) -> Preference:
    """Whether ``i`` gains more local availability by linking to ``j`` than to ``k``."""
    if len({i, j, k}) != 3:
        raise ValueError("i, j and k must be distinct")
    if g.has_link(i, j) or g.has_link(i, k):
        raise ValueError("i must be linked to neither candidate")
    params = params.exact()
    c = params.c
    base = profile(g, params)
    with_j = profile(add_link(g, i, j), params)
    with_k = profile(add_link(g, i, k), params)

    gain_j = with_j.alpha[i][j] - base.alpha[i][j]
    gain_k = with_k.alpha[i][k] - base.alpha[i][k]

    lhs = _cross_difference(c, with_j.closeness[j], with_k.closeness[k])
    rhs = _cross_difference(
        c,
        _scaled_distance_closeness(base.dist[i, j], base.closeness[j]),
        _scaled_distance_closeness(base.dist[i, k], base.closeness[k]),
    )
    verdict = lhs > rhs
    if verdict != (gain_j > gain_k):
        raise ArithmeticError("closed-form preference disagrees with availability gains")
    return Preference(verdict, lhs, rhs, gain_j, gain_k)


def preference_theorem_items(g: Network, i: int, j: int, k: int) -> tuple[int, ...]:
    """Which of the three sufficient conditions for preferring ``j`` hold.

    1. equal closeness and distance in ``g``; ``j`` less close after linking;
    2. equal closeness in ``g`` and after linking; ``j`` further from ``i``;
    3. equal closeness after linking and equal distance; ``j`` less close in ``g``.

    Condition 3 actually implies the *opposite* preference (``k`` over ``j``):
    with the post-link terms equal, the smaller prior availability from ``k``
    makes ``k`` the larger gain.
    """
    base = profile(g, SharingParams(Fraction(1), Fraction(0)))
    phi_j_after = profile(add_link(g, i, j), base.params).closeness[j]
    phi_k_after = profile(add_link(g, i, k), base.params).closeness[k]
    phi_j, phi_k = base.closeness[j], base.closeness[k]
    d_j, d_k = base.dist[i, j], base.dist[i, k]
    items = []
    if phi_j == phi_k and d_j == d_k and phi_j_after < phi_k_after:
        items.append(1)
    if phi_j_after == phi_k_after and phi_j == phi_k and _dkey(d_j) > _dkey(d_k):
        items.append(2)
    if phi_j_after == phi_k_after and d_j == d_k and phi_j < phi_k:
        items.append(3)
    return tuple(items)


def ring_closeness_closed_form(n: int) -> Fraction:
    """Closeness of any agent on an ``n``-ring from harmonic numbers.

    With ``N = n // 2`` the largest ring distance: two agents sit at each
    distance below ``N``; at ``N`` there are two for odd ``n`` and one (the
    antipode) for even ``n``.
    """
    if n < 3:
        raise ValueError("a ring needs at least three agents")
    big_n = n // 2
    if n % 2:
        return 2 * sum((Fraction(1, m) for m in range(1, big_n + 1)), Fraction(0))
    return 2 * sum((Fraction(1, m) for m in range(1, big_n)), Fraction(0)) + Fraction(1, big_n)


@dataclass(frozen=True)
class RingRow:
    distance: int
    partner: int
    closeness_after: Fraction
    alpha_after: Number
    gamma_after: Number


@dataclass(frozen=True)
class RingScenario:
    n: int
    rows: tuple[RingRow, ...]

    @staticmethod
    def _strictly_increasing(values) -> bool:
        return all(a < b for a, b in zip(values, values[1:]))

    @property
    def alpha_increasing(self) -> bool:
        return self._strictly_increasing([r.alpha_after for r in self.rows])

    @property
    def gamma_increasing(self) -> bool:
        return self._strictly_increasing([r.gamma_after for r in self.rows])


def ring_scenario(n: int, params: SharingParams) -> RingScenario:
    """Agent 0 on an ``n``-ring links to the agent at each distance ``2..n//2``.

    Each row reports the new partner's closeness, ``alpha_0j`` and ``gamma_0``
    in the augmented ring. Monotonicity in distance is exposed through
    ``alpha_increasing`` / ``gamma_increasing`` rather than enforced.
    """
    if n < 4:
        raise ValueError("ring scenario needs n >= 4 for a non-adjacent partner")
    g = ring_network(n)
    rows = []
    for d in range(2, n // 2 + 1):
        prof = profile(add_link(g, 0, d), params)
        rows.append(RingRow(d, d, prof.closeness[d], prof.alpha[0][d], prof.gamma[0]))
    return RingScenario(n, tuple(rows))

