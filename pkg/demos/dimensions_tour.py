"""Walk through dimensions of mixed commuting varieties in sl_3.

Run with ``python3 demos/dimensions_tour.py``.  Each line pairs a closed-form
value with an independent Groebner computation.
"""

from commvar import dim_Cijm, is_irreducible_Cijm
from commvar.checks import cijm_report

for ijm in [(0, 0, 2), (0, 2, 0), (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1), (2, 1, 0)]:
    rep = cijm_report(*ijm, groebner=True)
    tag = "irreducible" if is_irreducible_Cijm(*ijm) else "reducible"
    print(f"C_{ijm}: closed form {dim_Cijm(*ijm)}, Groebner {rep.groebner_dim} ({tag})")
