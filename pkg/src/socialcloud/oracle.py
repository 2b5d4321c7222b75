"""Brute-force verification of the model's claims on small labelled graphs.

The oracle keeps its own evaluator (Floyd-Warshall distances and direct
formulas, all in ``Fraction``) and checks the library's operations against it
on every labelled graph up to ``n = 5``. Larger ``n`` are covered by seeded
sampling.

Universal claims pass with zero counterexamples; existence claims pass with
at least one witness.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from . import choice, dynamics
from .availability import PayoffParams, SharingParams, profile
from .graph import Network

__all__ = [
    "DEFAULT_PARAMS",
    "DEFAULT_SEED",
    "FitResult",
    "Instance",
    "PropertyId",
    "StarPendantCheck",
    "VerificationReport",
    "enumerate_graphs",
    "fit_sharing_constant",
    "floyd_warshall",
    "graph_from_mask",
    "star_pendant",
    "star_pendant_check",
    "verify",
]

#: Sharing params used when none are given: p = q = 1/2, so c = 1/4.
DEFAULT_PARAMS = SharingParams(Fraction(1, 2), Fraction(1, 2))
#: Alternative sharing constant for the sign-table comparison.
ALT_CONSTANT = Fraction(3, 4)
#: Seed of the sampled sweeps at n = 6, 7.
DEFAULT_SEED = 20201
DEFAULT_SAMPLE_SIZE = 100_000
MAX_N = 7
FULL_N = 5

# payoff for classifier calls; only gamma drives the sign
_PAYOFF = PayoffParams(Fraction(1), Fraction(1), Fraction(0))


class PropertyId(enum.Enum):
    ADD_INCREASES_ALPHA = "ADD_INCREASES_ALPHA"
    DEL_DECREASES_ALPHA = "DEL_DECREASES_ALPHA"
    NEIGHBOR_CASES_ADD = "NEIGHBOR_CASES_ADD"
    NEIGHBOR_CASES_DEL = "NEIGHBOR_CASES_DEL"
    TWO_DIAM_NEGATIVE = "TWO_DIAM_NEGATIVE"
    UNCHANGED_PHI_NEGATIVE = "UNCHANGED_PHI_NEGATIVE"
    UNCHANGED_PHI_POSITIVE_DEL = "UNCHANGED_PHI_POSITIVE_DEL"
    NO_SPILLOVER_IMPOSSIBLE_CONNECTED = "NO_SPILLOVER_IMPOSSIBLE_CONNECTED"
    THREE_COMPONENT_ZERO_SPILLOVER = "THREE_COMPONENT_ZERO_SPILLOVER"
    PHI_INCREASE_NOT_SUFFICIENT = "PHI_INCREASE_NOT_SUFFICIENT"
    BEST_PARTNER_ARGMAX = "BEST_PARTNER_ARGMAX"
    PREFERS_EQUIVALENCE = "PREFERS_EQUIVALENCE"
    DISTANCE_CLOSENESS_LEMMA = "DISTANCE_CLOSENESS_LEMMA"
    IFF_ALPHA_ORDERING = "IFF_ALPHA_ORDERING"
    GAMMA_DELETION_CAN_BENEFIT = "GAMMA_DELETION_CAN_BENEFIT"
    CLOSENESS_MONOTONE_ADD = "CLOSENESS_MONOTONE_ADD"
    THIRD_PARTY_ALPHA_CASES = "THIRD_PARTY_ALPHA_CASES"
    AGGREGATE_NEIGHBOR_PRODUCT = "AGGREGATE_NEIGHBOR_PRODUCT"
    PREFERS_THEOREM = "PREFERS_THEOREM"
    SIGNS_C_INDEPENDENT = "SIGNS_C_INDEPENDENT"

    @property
    def universal(self) -> bool:
        return self not in _EXISTENCE

    @classmethod
    def parse(cls, name: str) -> "PropertyId":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown property {name!r}") from None


_EXISTENCE = frozenset(
    {PropertyId.PHI_INCREASE_NOT_SUFFICIENT, PropertyId.GAMMA_DELETION_CAN_BENEFIT}
)


# ---------------------------------------------------------------- enumeration


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Network:
    """The labelled graph whose link set is bit ``b`` of ``mask`` per pair ``b``.

    Pairs are numbered in lexicographic order ``(0,1), (0,2), ...``.
    """
    pairs = _pairs(n)
    return Network(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def enumerate_graphs(n: int) -> Iterator[Network]:
    """All ``2**(n choose 2)`` labelled simple graphs on ``n`` agents."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_N}, got {n}")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


# ---------------------------------------------------------- independent maths


def floyd_warshall(g: Network) -> list[list[Optional[int]]]:
    """All-pairs hop counts, ``None`` for unreachable pairs."""
    n = g.n
    inf = n + 1
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.links:
        d[u][v] = d[v][u] = 1
    for m in range(n):
        dm = d[m]
        for i in range(n):
            dim = d[i][m]
            if dim == inf:
                continue
            di = d[i]
            for j in range(n):
                if dim + dm[j] < di[j]:
                    di[j] = dim + dm[j]
    return [[None if x == inf else x for x in row] for row in d]


@dataclass
class _State:
    g: Network
    dist: list[list[Optional[int]]]
    phi: list[Fraction]
    alpha: list[list[Fraction]]
    gamma: list[Fraction]
    comp: list[int]
    ncomp: int

    def diameter_two(self) -> bool:
        if self.ncomp != 1 or self.g.n < 3:
            return False
        return max(max(row) for row in self.dist) == 2


def _state(g: Network, c: Fraction) -> _State:
    n = g.n
    dist = floyd_warshall(g)
    phi = [sum((Fraction(1, x) for x in row if x), Fraction(0)) for row in dist]
    alpha = [
        [
            Fraction(0) if i == j or dist[i][j] is None else c / (dist[i][j] * phi[j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    gamma = []
    for i in range(n):
        miss = Fraction(1)
        for j in range(n):
            if j != i:
                miss *= 1 - alpha[i][j]
        gamma.append(1 - miss)
    comp = [-1] * n
    ncomp = 0
    for s in range(n):
        if comp[s] < 0:
            for v in range(n):
                if dist[s][v] is not None:
                    comp[v] = ncomp
            ncomp += 1
    return _State(g, dist, phi, alpha, gamma, comp, ncomp)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ------------------------------------------------------------------- reports


@dataclass(frozen=True, order=True)
class Instance:
    """One graph plus the agents involved and a short description."""

    n: int
    links: tuple[tuple[int, int], ...]
    roles: tuple[tuple[str, int], ...]
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "links": [list(p) for p in self.links],
            "agents": dict(self.roles),
            "note": self.note,
        }


def _instance(g: Network, note: str = "", **roles: int) -> Instance:
    return Instance(g.n, tuple(g.sorted_links()), tuple(sorted(roles.items())), note)


@dataclass
class VerificationReport:
    property: PropertyId
    n_max: int
    instances: int = 0
    counterexamples: list[Instance] = field(default_factory=list)
    witnesses: list[Instance] = field(default_factory=list)
    counterexample_count: int = 0
    exact: bool = True
    sampled: dict[int, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def universal(self) -> bool:
        return self.property.universal

    @property
    def passed(self) -> bool:
        if self.universal:
            return self.counterexample_count == 0
        return bool(self.witnesses)

    def to_dict(self) -> dict:
        return {
            "property": self.property.name,
            "kind": "universal" if self.universal else "existence",
            "n_max": self.n_max,
            "passed": self.passed,
            "exact": self.exact,
            "instances": self.instances,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [x.to_dict() for x in self.counterexamples],
            "witnesses": [x.to_dict() for x in self.witnesses],
            "sampled": {str(k): v for k, v in sorted(self.sampled.items())},
            "notes": list(self.notes),
        }


class _Ctx:
    def __init__(self, report: VerificationReport, c: Fraction, params: SharingParams,
                 max_examples: int):
        self.report = report
        self.c = c
        self.params = params
        self.max_examples = max_examples
        self._cache: dict[tuple[int, frozenset], _State] = {}

    def state(self, g: Network) -> _State:
        key = (g.n, g.links)
        st = self._cache.get(key)
        if st is None:
            st = self._cache[key] = _state(g, self.c)
        return st

    def check(self, ok: bool, g: Network, note: str = "", **roles: int) -> None:
        self.report.instances += 1
        if not ok:
            self.report.counterexample_count += 1
            if len(self.report.counterexamples) < self.max_examples:
                self.report.counterexamples.append(_instance(g, note, **roles))

    def witness(self, g: Network, note: str = "", **roles: int) -> None:
        self.report.instances += 1
        if len(self.report.witnesses) < self.max_examples:
            self.report.witnesses.append(_instance(g, note, **roles))

    @property
    def done(self) -> bool:
        return (not self.report.universal) and len(self.report.witnesses) >= self.max_examples


def _non_links(g: Network) -> list[tuple[int, int]]:
    return [p for p in _pairs(g.n) if p not in g.links]


def _plus(g: Network, i: int, j: int) -> Network:
    return Network(g.n, g.links | {(min(i, j), max(i, j))})


def _minus(g: Network, i: int, j: int) -> Network:
    return Network(g.n, g.links - {(min(i, j), max(i, j))})


# ----------------------------------------------------------------- checkers


def _check_add_alpha(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for i, j in _non_links(g):
        t = ctx.state(_plus(g, i, j))
        ctx.check(t.alpha[i][j] > s.alpha[i][j], g, "alpha_ij not increased", i=i, j=j)
        ctx.check(t.alpha[j][i] > s.alpha[j][i], g, "alpha_ji not increased", i=i, j=j)


def _check_del_alpha(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for i, j in g.sorted_links():
        t = ctx.state(_minus(g, i, j))
        ctx.check(t.alpha[i][j] < s.alpha[i][j], g, "alpha_ij not decreased", i=i, j=j)
        ctx.check(t.alpha[j][i] < s.alpha[j][i], g, "alpha_ji not decreased", i=i, j=j)


def _expected_case(base: _State, j: int, k: int) -> dynamics.NeighborCase:
    d = base.dist[k][j]
    if d == 1:
        return dynamics.NeighborCase.COMMON_NEIGHBOR
    if d == 2:
        return dynamics.NeighborCase.TWO_HOPS
    return dynamics.NeighborCase.FAR


def _neighbor_cases(ctx: _Ctx, g: Network, adding: bool) -> None:
    s = ctx.state(g)
    pairs = _non_links(g) if adding else g.sorted_links()
    for a, b in pairs:
        other = _plus(g, a, b) if adding else _minus(g, a, b)
        t = ctx.state(other)
        base = s if adding else t
        for i, j in ((a, b), (b, a)):
            for k in sorted(g.adjacency[i] - {j}):
                case = dynamics.neighbor_case(g, i, j, k)
                ctx.check(case == _expected_case(base, j, k), g,
                          f"classified {case.value}", i=i, j=j, k=k)
                before, after = s.alpha[i][k], t.alpha[i][k]
                if case is dynamics.NeighborCase.FAR:
                    ok = after < before if adding else after > before
                else:
                    ok = after == before
                ctx.check(ok, g, f"alpha_ik moved wrongly for {case.value}", i=i, j=j, k=k)


def _signs(ctx: _Ctx, g: Network, change: dynamics.LinkChange) -> list[dynamics.SpilloverSign]:
    rep = dynamics.spillover(g, ctx.params, _PAYOFF, change)
    return [r.sign for r in rep.rows]


def _all_changes(g: Network) -> Iterator[tuple[dynamics.LinkChange, Network]]:
    for i, j in _pairs(g.n):
        if g.has_link(i, j):
            yield dynamics.LinkChange.delete(i, j), _minus(g, i, j)
        else:
            yield dynamics.LinkChange.add(i, j), _plus(g, i, j)


def _check_classifier(ctx: _Ctx, g: Network, change, signs, s: _State, t: _State) -> None:
    for k in range(g.n):
        expect = dynamics.SpilloverSign.of(t.gamma[k] - s.gamma[k])
        if signs[k] is not expect:
            ctx.check(False, g, "classifier disagrees with oracle gamma",
                      i=change.i, j=change.j, k=k)


def _check_two_diam(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    if not s.diameter_two():
        return
    for i, j in _non_links(g):
        change = dynamics.LinkChange.add(i, j)
        t = ctx.state(_plus(g, i, j))
        signs = _signs(ctx, g, change)
        _check_classifier(ctx, g, change, signs, s, t)
        for k in range(g.n):
            if k not in (i, j):
                ok = signs[k] is dynamics.SpilloverSign.NEGATIVE and t.gamma[k] < s.gamma[k]
                ctx.check(ok, g, f"sign {signs[k].value}", i=i, j=j, k=k)


def _check_unchanged_phi(ctx: _Ctx, g: Network, adding: bool) -> None:
    s = ctx.state(g)
    want = dynamics.SpilloverSign.NEGATIVE if adding else dynamics.SpilloverSign.POSITIVE
    pairs = _non_links(g) if adding else g.sorted_links()
    for i, j in pairs:
        other = _plus(g, i, j) if adding else _minus(g, i, j)
        t = ctx.state(other)
        change = (dynamics.LinkChange.add if adding else dynamics.LinkChange.delete)(i, j)
        signs = None
        for k in range(g.n):
            if k in (i, j) or s.phi[k] != t.phi[k]:
                continue
            # bystanders that reach neither endpoint keep every alpha and are excluded
            if s.comp[k] not in (s.comp[i], s.comp[j]):
                continue
            if signs is None:
                signs = _signs(ctx, g, change)
                _check_classifier(ctx, g, change, signs, s, t)
            ctx.check(signs[k] is want, g, f"sign {signs[k].value}", i=i, j=j, k=k)


def _check_no_spillover_connected(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    if s.ncomp != 1 or g.n < 3:
        return
    for change, other in _all_changes(g):
        t = ctx.state(other)
        signs = _signs(ctx, g, change)
        _check_classifier(ctx, g, change, signs, s, t)
        for k in range(g.n):
            if k not in (change.i, change.j):
                ctx.check(signs[k] is not dynamics.SpilloverSign.NONE, g,
                          f"{change}: no spillover", i=change.i, j=change.j, k=k)


def _check_three_component(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    if s.ncomp < 2:
        return
    for i, j in _non_links(g):
        if s.comp[i] == s.comp[j]:
            continue
        change = dynamics.LinkChange.add(i, j)
        t = ctx.state(_plus(g, i, j))
        signs = _signs(ctx, g, change)
        _check_classifier(ctx, g, change, signs, s, t)
        for k in range(g.n):
            if k in (i, j):
                continue
            outside = s.comp[k] not in (s.comp[i], s.comp[j])
            is_none = signs[k] is dynamics.SpilloverSign.NONE
            if s.ncomp >= 3:
                ctx.check(is_none == outside, g,
                          f"{s.ncomp} components, sign {signs[k].value}", i=i, j=j, k=k)
            else:
                ctx.check(not is_none, g, "two components merged, no spillover",
                          i=i, j=j, k=k)


def _search_phi_not_sufficient(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for i, j in _non_links(g):
        t = ctx.state(_plus(g, i, j))
        for k in range(g.n):
            if k in (i, j) or not t.phi[k] > s.phi[k] or not t.gamma[k] < s.gamma[k]:
                continue
            signs = _signs(ctx, g, dynamics.LinkChange.add(i, j))
            if signs[k] is dynamics.SpilloverSign.NEGATIVE:
                ctx.witness(
                    g,
                    f"closeness {s.phi[k]} -> {t.phi[k]}, gamma {float(s.gamma[k]):.6f} -> "
                    f"{float(t.gamma[k]):.6f}",
                    i=i, j=j, k=k,
                )
                if ctx.done:
                    return


def _search_deletion_benefit(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for i, j in g.sorted_links():
        t = ctx.state(_minus(g, i, j))
        for a, b in ((i, j), (j, i)):
            if t.gamma[a] > s.gamma[a]:
                ctx.witness(
                    g,
                    f"deleter gamma {float(s.gamma[a]):.6f} -> {float(t.gamma[a]):.6f}",
                    deleter=a, partner=b,
                )
                if ctx.done:
                    return


def _check_best_partner(ctx: _Ctx, g: Network) -> None:
    for i in range(g.n):
        cands = [j for j in range(g.n) if j != i and not g.has_link(i, j)]
        if not cands:
            ctx.check(choice.best_partner(g, ctx.params, i).is_empty, g,
                      "expected empty ranking", i=i)
            continue
        best = None
        for j in cands:
            a = ctx.state(_plus(g, i, j)).alpha[i][j]
            if best is None or a > best[0]:
                best = (a, j)
        top = choice.best_partner(g, ctx.params, i).top
        ctx.check(top.partner == best[1], g, f"ranked {top.partner} first", i=i, j=best[1])


def _check_prefers(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for i in range(g.n):
        cands = [j for j in range(g.n) if j != i and not g.has_link(i, j)]
        gains = {j: ctx.state(_plus(g, i, j)).alpha[i][j] - s.alpha[i][j] for j in cands}
        for j, k in itertools.permutations(cands, 2):
            try:
                verdict = choice.prefers(g, ctx.params, i, j, k).prefers
            except ArithmeticError:
                ctx.check(False, g, "closed form and gains disagree", i=i, j=j, k=k)
                continue
            ctx.check(verdict == (gains[j] > gains[k]), g, "wrong preference", i=i, j=j, k=k)


def _check_prefers_theorem(ctx: _Ctx, g: Network) -> None:
    for i in range(g.n):
        cands = [j for j in range(g.n) if j != i and not g.has_link(i, j)]
        for j, k in itertools.permutations(cands, 2):
            items = choice.preference_theorem_items(g, i, j, k)
            if not items:
                continue
            verdict = choice.prefers(g, ctx.params, i, j, k).prefers
            for item in items:
                ctx.check(verdict, g, f"condition {item} holds but j not preferred",
                          i=i, j=j, k=k)


def _check_distance_closeness(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    missing = _non_links(g)
    for k, l in missing:
        t = ctx.state(_plus(g, k, l))
        for i, j in missing:
            if {i, j} & {k, l}:
                continue
            d0, d1 = s.dist[i][j], t.dist[i][j]
            shrunk = d1 is not None and (d0 is None or d1 < d0)
            if shrunk:
                ok = t.phi[i] > s.phi[i] and t.phi[j] > s.phi[j]
                ctx.check(ok, g, "closeness did not rise", i=i, j=j, k=k, l=l)


def _check_closeness_monotone(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for i, j in _non_links(g):
        t = ctx.state(_plus(g, i, j))
        ok = t.phi[i] > s.phi[i] and t.phi[j] > s.phi[j]
        ok = ok and all(t.phi[k] >= s.phi[k] for k in range(g.n))
        ctx.check(ok, g, "closeness not monotone", i=i, j=j)


def _partial_sum(st: _State, i: int, j: int) -> Fraction:
    return sum(
        (Fraction(1, st.dist[j][k]) for k in range(st.g.n)
         if k not in (i, j) and st.dist[j][k] is not None),
        Fraction(0),
    )


def _check_iff_ordering(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for a, b in _non_links(g):
        t = ctx.state(_plus(g, a, b))
        for i, j in itertools.permutations(range(g.n), 2):
            if s.dist[i][j] is None or t.dist[i][j] is None:
                continue
            lhs_s = s.dist[i][j] * _partial_sum(s, i, j)
            lhs_t = t.dist[i][j] * _partial_sum(t, i, j)
            ctx.check((s.alpha[i][j] > t.alpha[i][j]) == (lhs_t > lhs_s), g,
                      "ordering g > g'", i=i, j=j, k=a, l=b)
            ctx.check((t.alpha[i][j] > s.alpha[i][j]) == (lhs_s > lhs_t), g,
                      "ordering g' > g", i=i, j=j, k=a, l=b)


_CASE_ORDER = {"1a": 0, "1b": -1, "2a": -1, "2b": 1, "2-tie": 0, "unreachable": 0}


def _check_third_party(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)
    for k, l in _non_links(g):
        t = ctx.state(_plus(g, k, l))
        for i, j in itertools.permutations(range(g.n), 2):
            if {i, j} & {k, l}:
                continue
            res = dynamics.third_party_alpha_case(g, i, j, k, l)
            actual = _sign(t.alpha[i][j] - s.alpha[i][j])
            ctx.check(res.ordering == actual == _CASE_ORDER[res.case], g,
                      f"case {res.case}", i=i, j=j, k=k, l=l)


def _check_aggregate(ctx: _Ctx, g: Network) -> None:
    s = ctx.state(g)

    def prod(st: _State, i: int, skip: Optional[int]) -> Fraction:
        out = Fraction(1)
        for k in st.g.adjacency[i]:
            if k != skip:
                out *= st.alpha[i][k]
        return out

    for a, b in _pairs(g.n):
        adding = not g.has_link(a, b)
        other = _plus(g, a, b) if adding else _minus(g, a, b)
        t = ctx.state(other)
        base = s if adding else t
        for i, j in ((a, b), (b, a)):
            lib_before = dynamics.aggregate_neighbor_availability(
                g, ctx.params, i, exclude=None if adding else j)
            lib_after = dynamics.aggregate_neighbor_availability(
                other, ctx.params, i, exclude=j if adding else None)
            before = prod(s, i, None if adding else j)
            after = prod(t, i, j if adding else None)
            ctx.check(lib_before == before and lib_after == after, g,
                      "library product disagrees", i=i, j=j)
            far = any(base.dist[k][j] is None or base.dist[k][j] > 2
                      for k in base.g.adjacency[i] if k != j)
            if not far:
                ok = after == before
            else:
                ok = after < before if adding else after > before
            ctx.check(ok, g, f"product moved wrongly (far neighbour: {far})", i=i, j=j)


def _check_sign_tables(ctx: _Ctx, g: Network, alt: SharingParams) -> None:
    for change, _ in _all_changes(g):
        a = dynamics.spillover(g, ctx.params, _PAYOFF, change)
        b = dynamics.spillover(g, alt, _PAYOFF, change)
        for ra, rb in zip(a.bystanders, b.bystanders):
            ctx.check(ra.sign is rb.sign, g,
                      f"{change}: {ra.sign.value} at c={ctx.c}, {rb.sign.value} at c={alt.c}",
                      i=change.i, j=change.j, k=ra.agent)


_CHECKERS: dict[PropertyId, Callable[[_Ctx, Network], None]] = {
    PropertyId.ADD_INCREASES_ALPHA: _check_add_alpha,
    PropertyId.DEL_DECREASES_ALPHA: _check_del_alpha,
    PropertyId.NEIGHBOR_CASES_ADD: lambda c, g: _neighbor_cases(c, g, True),
    PropertyId.NEIGHBOR_CASES_DEL: lambda c, g: _neighbor_cases(c, g, False),
    PropertyId.TWO_DIAM_NEGATIVE: _check_two_diam,
    PropertyId.UNCHANGED_PHI_NEGATIVE: lambda c, g: _check_unchanged_phi(c, g, True),
    PropertyId.UNCHANGED_PHI_POSITIVE_DEL: lambda c, g: _check_unchanged_phi(c, g, False),
    PropertyId.NO_SPILLOVER_IMPOSSIBLE_CONNECTED: _check_no_spillover_connected,
    PropertyId.THREE_COMPONENT_ZERO_SPILLOVER: _check_three_component,
    PropertyId.PHI_INCREASE_NOT_SUFFICIENT: _search_phi_not_sufficient,
    PropertyId.BEST_PARTNER_ARGMAX: _check_best_partner,
    PropertyId.PREFERS_EQUIVALENCE: _check_prefers,
    PropertyId.DISTANCE_CLOSENESS_LEMMA: _check_distance_closeness,
    PropertyId.IFF_ALPHA_ORDERING: _check_iff_ordering,
    PropertyId.GAMMA_DELETION_CAN_BENEFIT: _search_deletion_benefit,
    PropertyId.CLOSENESS_MONOTONE_ADD: _check_closeness_monotone,
    PropertyId.THIRD_PARTY_ALPHA_CASES: _check_third_party,
    PropertyId.AGGREGATE_NEIGHBOR_PRODUCT: _check_aggregate,
    PropertyId.PREFERS_THEOREM: _check_prefers_theorem,
}

_NOTES = {
    PropertyId.UNCHANGED_PHI_NEGATIVE:
        "bystanders in a component containing neither endpoint are excluded",
    PropertyId.UNCHANGED_PHI_POSITIVE_DEL:
        "bystanders in a component containing neither endpoint are excluded",
    PropertyId.NEIGHBOR_CASES_DEL:
        "distance d_kj is measured in g - <ij>",
    PropertyId.AGGREGATE_NEIGHBOR_PRODUCT:
        "the product moves only when a neighbour of i is more than two hops from j",
}


def _sample_masks(n: int, count: int, seed: int) -> list[int]:
    total = 1 << (n * (n - 1) // 2)
    if count >= total:
        return list(range(total))
    rng = random.Random(seed * 1000 + n)
    return sorted(rng.sample(range(total), count))


def verify(
    prop: PropertyId | str,
    n_max: int = FULL_N,
    params: SharingParams = DEFAULT_PARAMS,
    *,
    n_min: int = 1,
    sample_size: int = DEFAULT_SAMPLE_SIZE,
    seed: int = DEFAULT_SEED,
    max_examples: int = 10,
    alt_params: Optional[SharingParams] = None,
    connected_only: bool = False,
) -> VerificationReport:
    """Check one claim over every labelled graph with ``n_min <= n <= n_max``.

    Sizes above 5 are sampled: ``sample_size`` distinct graphs per size drawn
    with ``random.Random(seed * 1000 + n)``. Existence searches stop once
    ``max_examples`` witnesses are found. ``SIGNS_C_INDEPENDENT`` compares
    spillover signs under ``params`` and ``alt_params`` (default ``c = 3/4``).
    """
    if isinstance(prop, str):
        prop = PropertyId.parse(prop)
    if not 1 <= n_min <= n_max <= MAX_N:
        raise ValueError(f"need 1 <= n_min <= n_max <= {MAX_N}")
    params = params.exact()
    c = params.c
    if c <= 0:
        raise ValueError("verification needs a positive sharing constant")
    report = VerificationReport(prop, n_max)
    if prop in _NOTES:
        report.notes.append(_NOTES[prop])
    ctx = _Ctx(report, c, params, max_examples)
    if prop is PropertyId.SIGNS_C_INDEPENDENT:
        alt = (alt_params or SharingParams.with_constant(ALT_CONSTANT)).exact()
        report.notes.append(f"c = {c} vs c = {alt.c}")
        checker = lambda cx, g: _check_sign_tables(cx, g, alt)  # noqa: E731
    else:
        checker = _CHECKERS[prop]
    for n in range(n_min, n_max + 1):
        if n <= FULL_N:
            masks: Sequence[int] = range(1 << (n * (n - 1) // 2))
        else:
            masks = _sample_masks(n, sample_size, seed)
            report.sampled[n] = len(masks)
        for mask in masks:
            g = graph_from_mask(n, mask)
            if connected_only and ctx.state(g).ncomp != 1:
                continue
            checker(ctx, g)
            if ctx.done:
                break
        # keep memory bounded across sizes
        ctx._cache.clear()
        if ctx.done:
            break
    report.counterexamples.sort()
    report.witnesses.sort()
    return report


# -------------------------------------------------------------- constructions


STAR_HUB = 0
STAR_INTERMEDIARY = 1


def star_pendant(n: int) -> Network:
    """Hub 0 linked to agents ``1..n-2``; pendant ``n-1`` hangs off agent 1.

    The hub and the pendant are two hops apart through intermediary 1.
    """
    if n < 4:
        raise ValueError("star-pendant construction needs n >= 4")
    links = [(STAR_HUB, v) for v in range(1, n - 1)] + [(STAR_INTERMEDIARY, n - 1)]
    return Network(n, frozenset(links))


@dataclass(frozen=True)
class StarPendantCheck:
    n: int
    pendant_closeness: Fraction
    pendant_closeness_linked: Fraction
    partial_sum: Fraction
    partial_sum_linked: Fraction

    @property
    def holds(self) -> bool:
        n = self.n
        return (
            self.pendant_closeness == Fraction(2 * n + 3, 6)
            and self.pendant_closeness_linked == Fraction(n + 1, 2)
            and self.partial_sum == Fraction(n, 3)
            and self.partial_sum_linked == Fraction(n - 1, 2)
            # worst case of the addition inequality: 2 * n/3 against (n-1)/2
            and 2 * self.partial_sum > 1 * self.partial_sum_linked
        )


def star_pendant_check(n: int) -> StarPendantCheck:
    """Closeness figures of the pendant before and after it links to the hub."""
    g = star_pendant(n)
    pendant = n - 1
    s = _state(g, Fraction(1))
    t = _state(_plus(g, STAR_HUB, pendant), Fraction(1))
    return StarPendantCheck(
        n,
        s.phi[pendant],
        t.phi[pendant],
        _partial_sum(s, STAR_HUB, pendant),
        _partial_sum(t, STAR_HUB, pendant),
    )


# ----------------------------------------------------------------- fitting


@dataclass(frozen=True)
class Residual:
    network: int
    agent: int
    target: float
    fitted: float

    @property
    def error(self) -> float:
        return self.fitted - self.target


@dataclass(frozen=True)
class FitResult:
    c: float
    residuals: tuple[Residual, ...]
    excluded: tuple[tuple[int, int], ...]

    @property
    def max_error(self) -> float:
        return max((abs(r.error) for r in self.residuals), default=0.0)


def fit_sharing_constant(
    targets: Sequence[tuple[Network, int, float]], *, iterations: int = 200
) -> FitResult:
    """Fit one ``c`` in ``[0, 1]`` minimising the largest gamma error.

    Each target is ``(network, agent, gamma)``. Isolated agents have gamma 0
    for every ``c``; they are excluded when their target is 0 and rejected
    otherwise. For the rest gamma rises strictly with ``c``, so the largest
    positive error rises and the largest negative error falls; bisection finds
    where they balance.
    """
    live = []
    excluded = []
    nets: list[Network] = []
    for g, agent, value in targets:
        if not 0 <= value < 1:
            raise ValueError(f"gamma target {value} outside [0, 1)")
        idx = next((x for x, h in enumerate(nets) if h == g), None)
        if idx is None:
            nets.append(g)
            idx = len(nets) - 1
        if not g.adjacency[agent]:
            if value != 0:
                raise ValueError(f"isolated agent {agent} cannot reach gamma {value}")
            excluded.append((idx, agent))
            continue
        live.append((idx, agent, float(value)))
    if not live:
        raise ValueError("no fittable targets")

    def errors(c: float) -> list[float]:
        profs = [profile(h, SharingParams.with_constant(c)) for h in nets]
        return [profs[idx].gamma[a] - t for idx, a, t in live]

    def balance(c: float) -> float:
        e = errors(c)
        return max(e) + min(e)

    lo, hi = 0.0, 1.0
    if balance(hi) <= 0:
        c = hi
    elif balance(lo) >= 0:
        c = lo
    else:
        for _ in range(iterations):
            mid = (lo + hi) / 2
            if mid in (lo, hi):
                break
            if balance(mid) < 0:
                lo = mid
            else:
                hi = mid
        c = (lo + hi) / 2
    fitted = errors(c)
    residuals = tuple(
        Residual(idx, a, t, t + e) for (idx, a, t), e in zip(live, fitted)
    )
    return FitResult(c, residuals, tuple(excluded))
