"""Closeness-based resource availability in social-cloud sharing networks."""

from .availability import (
    PayoffParams,
    Profile,
    SharingParams,
    closeness,
    closeness_all,
    global_availability,
    local_availability,
    profile,
    utility,
)
from .choice import (
    PartnerRanking,
    Preference,
    RingScenario,
    alpha_vs_distance_check,
    best_partner,
    prefers,
    ring_closeness_closed_form,
    ring_scenario,
)
from .dynamics import (
    LinkChange,
    NeighborCase,
    SpilloverReport,
    SpilloverSign,
    neighbor_case,
    spillover,
)
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Network,
    add_link,
    build_network,
    components,
    delete_link,
    diameter,
    distances,
    is_connected,
    neighbors,
    radius,
)
from .oracle import (
    PropertyId,
    VerificationReport,
    fit_sharing_constant,
    star_pendant_check,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "DistanceMatrix",
    "LinkChange",
    "NeighborCase",
    "Network",
    "PartnerRanking",
    "PayoffParams",
    "Preference",
    "Profile",
    "PropertyId",
    "RingScenario",
    "SharingParams",
    "SpilloverReport",
    "SpilloverSign",
    "VerificationReport",
    "add_link",
    "alpha_vs_distance_check",
    "best_partner",
    "build_network",
    "closeness",
    "closeness_all",
    "components",
    "delete_link",
    "diameter",
    "distances",
    "fit_sharing_constant",
    "global_availability",
    "is_connected",
    "local_availability",
    "neighbor_case",
    "neighbors",
    "prefers",
    "profile",
    "radius",
    "ring_closeness_closed_form",
    "ring_scenario",
    "spillover",
    "star_pendant_check",
    "utility",
    "verify",
]
