"""A pendant two hops from a star's hub, before and after linking to it.

Closeness values follow simple formulas in n, checked here in exact
arithmetic; the last column is the margin in the addition inequality.
"""

from socialcloud.oracle import star_pendant_check

print("  n   phi_j      phi_j(g+ij)  sum_m 1/d_jm  margin")
for n in (4, 5, 6, 10, 20, 50):
    chk = star_pendant_check(n)
    margin = 2 * chk.partial_sum - chk.partial_sum_linked
    print(f"{n:3d}   {str(chk.pendant_closeness):9}  {str(chk.pendant_closeness_linked):11}"
          f"  {str(chk.partial_sum):12}  {margin}  {'ok' if chk.holds else 'MISMATCH'}")
