"""Estimate dimensions from F_q point counts and compare with exact values."""

from commvar.lie import MixedSpec
from commvar.pointcount import count_points, dimension_slope

for kinds, expect in [(["nilpotent_cone"] * 2, 8), (["subreg_closure"] * 2, 6), (["z_sub"] * 2, 6)]:
    spec = MixedSpec.of(kinds, 3)
    counts = {q: count_points(spec, q).count for q in (2, 3, 5)}
    slope = dimension_slope(spec, (2, 3, 5), counts=counts)
    print(f"{spec}: counts {counts}, slope {slope:.3f}, exact {expect}")
