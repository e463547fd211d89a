import pytest

from g2heights.curve import Genus2Curve, jacobian_counts
from g2heights.kedlaya import (frobenius_charpoly, frobenius_matrix,
                               is_ordinary, jacobian_order_kedlaya,
                               unit_root_b_matrix)
from g2heights.rat import QQ, rat_val

C56 = Genus2Curve([-2, 1, 0, 0, 1])


def digits(x, n):
    d = dict((k, v) for v, k in x.digits())
    return [d.get(i, 0) for i in range(n)]


@pytest.mark.parametrize("b", [[0, 0, 3, -2, 1], [0, 0, 0, -1, 1],
                               [-2, 1, 0, 0, 1]])
@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_charpoly_against_point_counts(b, p):
    C = Genus2Curve(b)
    if not C.has_good_reduction(p):
        pytest.skip("bad reduction")
    a1k, a2k = frobenius_charpoly(C, p)
    a1c, a2c, nj = jacobian_counts(C, p)
    assert (a1k, a2k) == (a1c, a2c)
    assert jacobian_order_kedlaya(C, p) == nj


def test_weil_bounds():
    for p in (7, 11, 13):
        a1, a2 = frobenius_charpoly(C56, p)
        assert abs(a1) <= 4 * p ** QQ(1, 2) + 1
        assert abs(a2) <= 6 * p + 1


def test_holomorphic_columns_divisible_by_p():
    p, prec = 7, 6
    m = frobenius_matrix(C56, p, prec)
    for i in range(4):
        for j in (0, 1):
            assert rat_val(QQ(m[i][j]), p) >= 1


def test_diagonal_frobenius_for_cm_curve():
    # y^2 = x^5 - 1 at p = 11 = 1 mod 10
    C = Genus2Curve([0, 0, 0, 0, -1])
    m = frobenius_matrix(C, 11, 4)
    for i in range(4):
        for j in range(4):
            if i != j:
                assert m[i][j] == 0 or rat_val(QQ(m[i][j]), 11) >= 4


def test_cm_curve_has_zero_b_matrix():
    C = Genus2Curve([0, 0, 0, 0, -1])
    b11, b12, b22 = unit_root_b_matrix(C, 11, 6)
    assert b11.is_zeroish() and b12.is_zeroish() and b22.is_zeroish()


def test_published_b_matrix_digits():
    b11, b12, b22 = unit_root_b_matrix(C56, 11, 10)
    assert digits(b11, 10) == [6, 6, 3, 0, 6, 2, 10, 1, 6, 9]
    assert digits(b12, 10) == [3, 10, 10, 0, 1, 1, 5, 1, 3, 4]
    assert digits(b22, 10) == [4, 3, 6, 6, 9, 10, 4, 5, 2, 2]


def test_b_matrix_stability_in_precision():
    lo = unit_root_b_matrix(C56, 11, 6)
    hi = unit_root_b_matrix(C56, 11, 8)
    for a, b in zip(lo, hi):
        assert (a - b.with_prec(6)).is_zeroish()


def test_ordinary_flag_matches_counts():
    for b, p in [([0, 0, 3, -2, 1], 7), ([-2, 1, 0, 0, 1], 11),
                 ([0, 0, 0, -1, 1], 13)]:
        C = Genus2Curve(b)
        _, a2 = frobenius_charpoly(C, p)
        assert is_ordinary(C, p) == (a2 % p != 0)


def test_bad_inputs_rejected():
    with pytest.raises(ValueError):
        frobenius_matrix(C56, 3, 4)
    with pytest.raises(ValueError):
        frobenius_matrix(C56, 53, 4)  # 53 divides the discriminant
