import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from commvar.lie import MixedSpec, VarietySpec, jordan_nilpotent
from commvar.pointcount import (CountBudgetExceeded, count_points, dimension_slope, membership,
                                rank_at_most_count)
from oracles import (brute_commuting_count, is_nilpotent, matmul, is_zero, trace_zero_matrices,
                     zsub_elements)


def scal(M):
    return [[int(M[i, j].constant_value()) for j in range(M.n)] for i in range(M.n)]


def test_membership_examples():
    Z = np.zeros((3, 3), dtype=int)
    for kind in ("full_sl", "nilpotent_cone", "subreg_closure", "z_sub", "V1", "V2"):
        assert membership(Z, VarietySpec(kind, 3, 7))
    assert not membership(scal(jordan_nilpotent([3])), VarietySpec("subreg_closure", 3, 7))
    assert membership(scal(jordan_nilpotent([2, 1])), VarietySpec("subreg_closure", 3, 7))
    assert not membership(np.eye(3, dtype=int), VarietySpec("full_sl", 3, 7))
    assert membership([[1, 0, 0], [2, 1, 3], [4, 0, 5]], VarietySpec("z_sub", 3, 7))  # -2 = 5 mod 7
    with pytest.raises(ValueError):
        membership(np.zeros((2, 2), dtype=int), VarietySpec("full_sl", 3, 7))


def test_count_examples():
    assert count_points(MixedSpec.of("full_sl", 3), 2).count == 256
    assert count_points(MixedSpec.of("nilpotent_cone", 3), 3).count == 729
    assert rank_at_most_count(3, 2, 1, 2) == 22
    with pytest.raises(ValueError):
        count_points(MixedSpec.of("full_sl", 3), 4)


def test_nilpotent_count_against_enumeration():
    assert sum(is_nilpotent(A, 3) for A in trace_zero_matrices(3, 3)) == 729


def test_pair_counts_against_brute_force():
    nil2 = [A for A in trace_zero_matrices(3, 2) if is_nilpotent(A, 2)]
    sq2 = [A for A in trace_zero_matrices(3, 2) if is_zero(matmul(A, A, 2))]
    assert count_points(MixedSpec.of("nilpotent_cone,nilpotent_cone", 3), 2).count == \
        brute_commuting_count([nil2, nil2], 2) == 400
    assert count_points(MixedSpec.of("subreg_closure,subreg_closure", 3), 2).count == \
        brute_commuting_count([sq2, sq2], 2)
    assert count_points(MixedSpec.of("subreg_closure,nilpotent_cone", 3), 2).count == \
        brute_commuting_count([sq2, nil2], 2)
    for q in (2, 3):
        zs = list(zsub_elements(q))
        assert count_points(MixedSpec.of("z_sub,z_sub", 3), q).count == brute_commuting_count([zs, zs], q)


def test_frozen_zsub_counts():
    assert [count_points(MixedSpec.of("z_sub,z_sub", 3), q).count for q in (2, 3, 5)] == [88, 2673, 18625]


@pytest.mark.parametrize("q", [2, 5])
def test_product_structure_of_counts(q):
    # C_2(z_sub) = D_2(3 x 2) x k^{(n-2) r}
    assert count_points(MixedSpec.of("z_sub,z_sub", 3), q).count == rank_at_most_count(3, 2, 1, q) * q ** 2


def test_factor_order_does_not_matter():
    a = count_points(MixedSpec.of("full_sl,subreg_closure", 3), 3).count
    b = count_points(MixedSpec.of("subreg_closure,full_sl", 3), 3).count
    assert a == b


@pytest.mark.parametrize("kinds", ["nilpotent_cone,full_sl", "subreg_closure,subreg_closure", "z_sub,V1"])
@pytest.mark.parametrize("q", [2, 3])
def test_zero_factor_lower_bound(kinds, q):
    spec = MixedSpec.of(kinds, 3)
    dropped = MixedSpec.of(kinds.split(",")[1:], 3)
    assert count_points(spec, q).count >= count_points(dropped, q).count >= 1


def test_count_is_conjugation_invariant():
    # conjugating by a permutation matrix permutes the sl_3 loci onto themselves
    q = 2
    P = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    Pt = [list(r) for r in zip(*P)]
    sq = [A for A in trace_zero_matrices(3, q) if is_zero(matmul(A, A, q))]
    conj = [matmul(matmul(P, A, q), Pt, q) for A in sq]
    assert sorted(map(str, conj)) == sorted(map(str, sq))
    assert brute_commuting_count([conj, sq], q) == count_points(MixedSpec.of("subreg_closure,subreg_closure", 3), q).count


def test_budget_refusal():
    with pytest.raises(CountBudgetExceeded, match="exceeds budget"):
        count_points(MixedSpec.of("full_sl,full_sl,full_sl", 3), 5)


def test_branch_annotation():
    assert count_points(MixedSpec.of("z_sub", 3), 3).branch == "q | n"
    assert count_points(MixedSpec.of("z_sub", 3), 2).branch == "q ∤ n"


@given(st.lists(st.sampled_from([2, 3, 5, 7]), min_size=2, max_size=3, unique=True))
def test_slope_of_linear_space_is_exact(qs):
    assert abs(dimension_slope(MixedSpec.of("full_sl", 3), qs) - 8) < 1e-9
    assert abs(dimension_slope(MixedSpec.of("z_sub", 3), qs) - 4) < 1e-9


def test_slopes_near_dimension():
    assert abs(dimension_slope(MixedSpec.of("subreg_closure,subreg_closure", 3), (2, 3, 5)) - 6) <= 0.75
    with pytest.raises(ValueError):
        dimension_slope(MixedSpec.of("full_sl", 3), [2])
