"""Medici and Strozzi marry: who gains, who loses?

Run with ``python demos/florentine_spillover.py``. Prints the closeness and
global availability of every family before and after the new tie, using the
sharing constant fitted to the published availability figures.
"""

from socialcloud import LinkChange, PayoffParams, SharingParams, spillover
from socialcloud.datasets import FLORENTINE_FAMILIES, florentine_index, florentine_network
from socialcloud.reports import florentine_report

report = florentine_report()
c = report["fitted_c"]
print(f"fitted sharing constant c = {c:.4f} (max residual {report['fit_max_error']:.5f})")

g = florentine_network()
change = LinkChange.add(florentine_index("Medici"), florentine_index("Strozzi"))
rep = spillover(g, SharingParams.with_constant(c), PayoffParams(1, 1, 0), change)

print(f"\n{'family':<13}{'phi':>7}{'phi*':>7}{'gamma':>9}{'gamma*':>9}  sign")
for row in rep.rows:
    name = FLORENTINE_FAMILIES[row.agent]
    print(
        f"{name:<13}{float(row.closeness_before):7.2f}{float(row.closeness_after):7.2f}"
        f"{float(row.gamma_before):9.4f}{float(row.gamma_after):9.4f}  "
        f"{'(principal)' if row.principal else row.sign.value}"
    )

# Albizzi move closer to everyone yet end up with less: the families they
# rely on become more central and spread their spare capacity more thinly.
albizzi = rep.rows[florentine_index("Albizzi")]
assert albizzi.delta_closeness > 0 and albizzi.delta_gamma < 0
