"""Report builders behind the command-line tool.

Each builder returns a plain ``dict`` whose key order is fixed, ready for
:func:`socialcloud.io.report_to_json`. Per-agent tables live under ``rows`` so
the CSV projection has a single place to look.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .availability import PayoffParams, SharingParams, profile
from .choice import best_partner, ring_closeness_closed_form, ring_scenario
from .datasets import (
    FLORENTINE_FAMILIES,
    FLORENTINE_REFERENCE,
    florentine_index,
    florentine_network,
)
from .dynamics import ChangeKind, LinkChange, spillover
from .graph import Network, add_link, ring_network
from .oracle import PropertyId, fit_sharing_constant, verify

__all__ = [
    "REFERENCE_TOLERANCE",
    "change_from",
    "choose_report",
    "florentine_report",
    "metrics_report",
    "params_dict",
    "resolve_agent",
    "ring_report",
    "verify_report",
    "whatif_report",
]

# Published values carry two or three decimals.
REFERENCE_TOLERANCE = 0.005

Labels = Mapping[int, str]


def _label(labels: Labels, i: int) -> str:
    return labels.get(i, str(i))


def params_dict(sharing: SharingParams, payoff: PayoffParams) -> dict:
    return {
        "p": sharing.p,
        "q": sharing.q,
        "c": sharing.c,
        "theta": payoff.theta,
        "xi": payoff.xi,
        "sigma": payoff.sigma,
        "theta_by_agent": {str(k): v for k, v in sorted(payoff.theta_by_agent.items())},
        "xi_by_agent": {str(k): v for k, v in sorted(payoff.xi_by_agent.items())},
    }


def metrics_report(
    g: Network, labels: Labels, sharing: SharingParams, payoff: PayoffParams
) -> dict:
    prof = profile(g, sharing)
    rows = [
        {
            "agent": i,
            "label": _label(labels, i),
            "degree": len(g.adjacency[i]),
            "closeness": prof.closeness[i],
            "gamma": prof.gamma[i],
            "utility": prof.utility(payoff, i),
        }
        for i in range(g.n)
    ]
    return {
        "command": "metrics",
        "params": params_dict(sharing, payoff),
        "n": g.n,
        "links": [list(p) for p in g.sorted_links()],
        "rows": rows,
        "alpha": [list(r) for r in prof.alpha],
    }


def whatif_report(
    g: Network,
    labels: Labels,
    sharing: SharingParams,
    payoff: PayoffParams,
    change: LinkChange,
) -> dict:
    rep = spillover(g, sharing, payoff, change)
    rows = [
        {
            "agent": r.agent,
            "label": _label(labels, r.agent),
            "principal": r.principal,
            "closeness_before": r.closeness_before,
            "closeness_after": r.closeness_after,
            "closeness_delta": r.delta_closeness,
            "gamma_before": r.gamma_before,
            "gamma_after": r.gamma_after,
            "gamma_delta": r.delta_gamma,
            "utility_before": r.utility_before,
            "utility_after": r.utility_after,
            "utility_delta": r.delta_utility,
            "sign": r.sign.value,
        }
        for r in rep.rows
    ]
    return {
        "command": "whatif",
        "change": {"kind": change.kind.value, "i": change.i, "j": change.j},
        "params": params_dict(sharing, payoff),
        "alpha_ij": {"before": rep.alpha_ij[0], "after": rep.alpha_ij[1]},
        "alpha_ji": {"before": rep.alpha_ji[0], "after": rep.alpha_ji[1]},
        # gamma signs carry over to utility only when q(1-p)theta_k > 0
        "utility_equivalent": not rep.degenerate,
        "rows": rows,
    }


def choose_report(
    g: Network, labels: Labels, sharing: SharingParams, payoff: PayoffParams, i: int
) -> dict:
    ranking = best_partner(g, sharing, i)
    rows = [
        {
            "rank": rank,
            "partner": cand.partner,
            "label": _label(labels, cand.partner),
            "closeness_after": cand.closeness_after,
            "alpha_after": cand.alpha_after,
            "gamma_after": cand.gamma_after,
        }
        for rank, cand in enumerate(ranking.candidates, start=1)
    ]
    return {
        "command": "choose",
        "chooser": i,
        "label": _label(labels, i),
        "params": params_dict(sharing, payoff),
        "empty": ranking.is_empty,
        "top": ranking.top.partner if ranking.top else None,
        "rows": rows,
    }


def verify_report(prop: PropertyId, n_max: int, sharing: SharingParams, **kwargs) -> dict:
    rep = verify(prop, n_max, sharing, **kwargs)
    return {"command": "verify", "c": sharing.c, **rep.to_dict()}


def ring_report(n: int, sharing: SharingParams) -> dict:
    scen = ring_scenario(n, sharing)
    closed = ring_closeness_closed_form(n)
    bfs = profile(ring_network(n), SharingParams(Fraction(1), Fraction(0))).closeness[0]
    rows = [
        {
            "distance": r.distance,
            "partner": r.partner,
            "closeness_after": r.closeness_after,
            "alpha_after": r.alpha_after,
            "gamma_after": r.gamma_after,
        }
        for r in scen.rows
    ]
    return {
        "command": "scenario",
        "scenario": "ring",
        "n": n,
        "c": sharing.c,
        "closeness_closed_form": closed,
        "closeness_bfs": bfs,
        "closed_form_matches": closed == bfs,
        "alpha_increasing": scen.alpha_increasing,
        "gamma_increasing": scen.gamma_increasing,
        "rows": rows,
    }


def _compare(reference: tuple[float, float], computed: tuple) -> dict:
    errors = [float(c) - r for r, c in zip(reference, computed)]
    return {
        "reference_before": reference[0],
        "reference_after": reference[1],
        "computed_before": computed[0],
        "computed_after": computed[1],
        "max_abs_error": max(abs(e) for e in errors),
        "within_tolerance": all(abs(e) <= REFERENCE_TOLERANCE for e in errors),
    }


def florentine_report() -> dict:
    """Closeness and fitted-gamma tables for the Medici-Strozzi addition."""
    g = florentine_network()
    a, b = (florentine_index(x) for x in FLORENTINE_REFERENCE["change"])
    h = add_link(g, a, b)
    unit = SharingParams(Fraction(1), Fraction(0))
    phi_g, phi_h = profile(g, unit).closeness, profile(h, unit).closeness

    closeness_table = {
        name: _compare(ref, (phi_g[florentine_index(name)], phi_h[florentine_index(name)]))
        for name, ref in FLORENTINE_REFERENCE["closeness"].items()
    }

    targets = []
    for name, (before, after) in FLORENTINE_REFERENCE["gamma"].items():
        k = florentine_index(name)
        targets += [(g, k, before), (h, k, after)]
    fit = fit_sharing_constant(targets)
    fitted = SharingParams.with_constant(fit.c)
    gam_g, gam_h = profile(g, fitted).gamma, profile(h, fitted).gamma

    gamma_table = {}
    for name, ref in FLORENTINE_REFERENCE["gamma"].items():
        k = florentine_index(name)
        entry = _compare(ref, (gam_g[k], gam_h[k]))
        if ref == (0.0, 0.0):
            entry["exact_zero"] = gam_g[k] == 0 and gam_h[k] == 0
            entry["within_tolerance"] = entry["within_tolerance"] and entry["exact_zero"]
        gamma_table[name] = entry

    network_names = ("before", "after")
    residuals = [
        {
            "network": network_names[r.network],
            "family": FLORENTINE_FAMILIES[r.agent],
            "target": r.target,
            "fitted": r.fitted,
            "error": r.error,
        }
        for r in fit.residuals
    ]
    rows = [
        {
            "agent": k,
            "label": name,
            "closeness_before": phi_g[k],
            "closeness_after": phi_h[k],
            "gamma_before": gam_g[k],
            "gamma_after": gam_h[k],
            "gamma_delta": gam_h[k] - gam_g[k],
        }
        for k, name in enumerate(FLORENTINE_FAMILIES)
    ]
    closeness_ok = all(e["within_tolerance"] for e in closeness_table.values())
    gamma_ok = all(e["within_tolerance"] for e in gamma_table.values())
    return {
        "command": "scenario",
        "scenario": "florentine",
        "dataset_variant": "marriage",
        "variant_matches_closeness": closeness_ok,
        "change": list(FLORENTINE_REFERENCE["change"]),
        "tolerance": REFERENCE_TOLERANCE,
        "closeness": closeness_table,
        "fitted_c": fit.c,
        "fit_max_error": fit.max_error,
        "fit_within_tolerance": gamma_ok,
        "fit_residuals": residuals,
        "gamma": gamma_table,
        "rows": rows,
    }


def change_from(kind: str, i: int, j: int) -> LinkChange:
    return LinkChange(ChangeKind(kind), i, j)


def resolve_agent(token: str, n: int, labels: Labels) -> int:
    """An agent given by integer id or by label."""
    by_label = {v: k for k, v in labels.items()}
    if token in by_label:
        return by_label[token]
    try:
        agent = int(token)
    except ValueError:
        raise ValueError(f"unknown agent {token!r}") from None
    if not 0 <= agent < n:
        raise ValueError(f"agent {agent} out of range for n={n}")
    return agent

