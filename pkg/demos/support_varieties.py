"""Support varieties of a few simple SL_3 modules for Frobenius kernels G_r."""

from commvar.support import WeightA2, support_variety

for c1, c2, r in [(6, 0, 1), (6, 0, 2), (6 + 6 * 7, 0, 2), (3, 2, 2), (0, 0, 3), (6, 6 * 7, 3)]:
    rep = support_variety(WeightA2(c1, c2), 7, r)
    kind = "irreducible" if rep.irreducible else "reducible"
    print(f"L({c1},{c2}) r={r}: a={rep.a} b={rep.b}, dim {rep.dim}, {kind}")
