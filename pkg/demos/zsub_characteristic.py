"""How the centralizer of a subregular nilpotent behaves when p divides n.

Over F_7 the r-fold commuting variety of z_sub in sl_3 has dimension 2r + 2.
Over F_3 one structure constant vanishes and the dimension jumps to 3r + 1.
"""

from commvar.groebner import krull_dimension
from commvar.lie import MixedSpec, commuting_ideal

for p in (7, 3):
    for r in (1, 2, 3):
        d = krull_dimension(commuting_ideal(MixedSpec.of(["z_sub"] * r, 3, p)))
        print(f"p={p} r={r}: dim C_r(z_sub) = {d}")
