"""Whom should an agent on a ring link to?

Agent 0 on a ten-agent ring adds one link to the agent at distance d. The
new partner's local availability falls slightly with d (far partners are
more central once linked), while global availability rises because the
shortcut shortens many more paths.
"""

from fractions import Fraction

from socialcloud import SharingParams, best_partner, ring_scenario
from socialcloud.graph import ring_network

params = SharingParams(Fraction(1, 2), Fraction(1, 2))
scen = ring_scenario(10, params)

print(" d   phi_j(g+ij)   alpha_0j   gamma_0")
for r in scen.rows:
    print(f"{r.distance:2d}   {float(r.closeness_after):11.4f}   {float(r.alpha_after):8.5f}"
          f"   {float(r.gamma_after):7.5f}")
print(f"alpha increasing: {scen.alpha_increasing}; gamma increasing: {scen.gamma_increasing}")

ranking = best_partner(ring_network(10), params, 0)
print("\nranking by local availability:", [c.partner for c in ranking.candidates])
