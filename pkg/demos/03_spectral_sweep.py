"""
Spectra across sign configurations
==================================

The braid matrix R-hat = P R has a spectrum that depends only on the diagonal
sign choices, never on the twist. A Hecke-type (Wess-Zumino style) calculus
needs a real spectrum with exactly one negative eigenvalue.
"""

from qtwist import all_configs, build_boldR, evaluate, standard_data
from qtwist.spectral import rhat, spectral_report

data = standard_data(1.3)

for s in (1, 2, 3):
    print(f"--- s = {s}")
    for config in all_configs(s):
        rep = spectral_report(rhat(evaluate(build_boldR(config), data), s))
        values = ", ".join(f"{e.real:+.4f}^{m}" for e, m in rep.eigenvalues)
        print(f"{config}:  {values}   feasible={rep.wz_feasible}")

# For s = 2 only diag ++ and -- give a single negative eigenvalue (-1, sixfold).
# Mixed diagonals give both -q^2 and -q^-2, and s = 3 always gives two or more.
