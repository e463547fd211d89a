"""Frozen reference data used by the test suite.

golden_sigma_degree8 returns the closed-form expansion of the sigma
function sigma^(c) through total degree 8, as a dict mapping exponent
pairs (i, j) for T1^i T2^j to exact rational coefficients, for given
numeric curve coefficients b = (b1..b5) and a symmetric matrix
c = (c11, c12, c22).
"""

from g2heights.rat import QQ


def golden_sigma_degree8(b, c):
    b1, b2, b3, b4, b5 = [QQ(x) for x in b]
    c11, c12, c22 = [QQ(x) for x in c]
    out = {}

    out[(1, 0)] = QQ(1)

    out[(3, 0)] = QQ(1, 2) * b3 + QQ(1, 2) * c11
    out[(2, 1)] = c12
    out[(1, 2)] = QQ(1, 2) * c22

    out[(5, 0)] = (QQ(3, 8) * b3 ** 2 + QQ(5, 12) * b2 * b4 - QQ(5, 3) * b1 * b5
                   + QQ(7, 12) * b3 * c11 + QQ(1, 8) * c11 ** 2 + QQ(1, 3) * b4 * c12)
    out[(4, 1)] = (QQ(5, 6) * b3 * c12 + QQ(1, 2) * c11 * c12 + QQ(1, 3) * b4 * c22
                   - QQ(10, 3) * b5)
    out[(3, 2)] = (QQ(1, 2) * c12 ** 2 + QQ(1, 4) * b3 * c22 + QQ(1, 4) * c11 * c22
                   - QQ(1, 2) * b4)
    out[(2, 3)] = (-QQ(2, 3) * b1 * c12 + QQ(1, 2) * c12 * c22 + QQ(1, 3) * c11)
    out[(1, 4)] = (-QQ(2, 3) * b1 * c22 + QQ(1, 8) * c22 ** 2 - QQ(1, 12) * b2
                   + QQ(1, 3) * c12)

    out[(7, 0)] = (QQ(5, 16) * b3 ** 3 + QQ(391, 360) * b2 * b3 * b4
                   + QQ(13, 30) * b1 * b4 ** 2 + QQ(13, 30) * b2 ** 2 * b5
                   - QQ(547, 90) * b1 * b3 * b5 + QQ(439, 720) * b3 ** 2 * c11
                   + QQ(73, 120) * b2 * b4 * c11 - QQ(73, 30) * b1 * b5 * c11
                   + QQ(11, 48) * b3 * c11 ** 2 + QQ(1, 48) * c11 ** 3
                   + QQ(61, 90) * b3 * b4 * c12 - QQ(3, 5) * b2 * b5 * c12
                   + QQ(1, 6) * b4 * c11 * c12 + QQ(1, 18) * b4 ** 2 * c22
                   - QQ(113, 90) * b4 * b5)
    out[(6, 1)] = (QQ(89, 120) * b3 ** 2 * c12 + QQ(49, 60) * b2 * b4 * c12
                   - QQ(79, 15) * b1 * b5 * c12 + QQ(3, 4) * b3 * c11 * c12
                   + QQ(1, 8) * c11 ** 2 * c12 + QQ(1, 3) * b4 * c12 ** 2
                   + QQ(17, 30) * b3 * b4 * c22 - QQ(3, 5) * b2 * b5 * c22
                   + QQ(1, 6) * b4 * c11 * c22 + QQ(4, 5) * b4 ** 2
                   - QQ(181, 15) * b3 * b5 - QQ(14, 3) * b5 * c11)
    out[(5, 2)] = (-b1 * b4 * c12 + QQ(7, 12) * b3 * c12 ** 2
                   + QQ(1, 4) * c11 * c12 ** 2 + QQ(3, 16) * b3 ** 2 * c22
                   + QQ(5, 24) * b2 * b4 * c22 - QQ(17, 6) * b1 * b5 * c22
                   + QQ(7, 24) * b3 * c11 * c22 + QQ(1, 16) * c11 ** 2 * c22
                   + QQ(1, 2) * b4 * c12 * c22 - QQ(3, 4) * b3 * b4
                   - QQ(5, 2) * b2 * b5 - QQ(1, 4) * b4 * c11
                   - QQ(34, 3) * b5 * c12)
    out[(4, 3)] = (-QQ(5, 9) * b1 * b3 * c12 - QQ(1, 3) * b1 * c11 * c12
                   + QQ(1, 6) * c12 ** 3 - QQ(11, 9) * b1 * b4 * c22
                   + QQ(5, 12) * b3 * c12 * c22 + QQ(1, 4) * c11 * c12 * c22
                   + QQ(1, 6) * b4 * c22 ** 2 - QQ(1, 9) * b2 * b4
                   + QQ(5, 18) * b3 * c11 + QQ(1, 6) * c11 ** 2
                   - QQ(43, 18) * b4 * c12 - QQ(20, 3) * b5 * c22)
    out[(3, 4)] = (-QQ(2, 3) * b1 * c12 ** 2 - QQ(1, 3) * b1 * b3 * c22
                   - QQ(1, 3) * b1 * c11 * c22 + QQ(1, 4) * c12 ** 2 * c22
                   + QQ(1, 16) * b3 * c22 ** 2 + QQ(1, 16) * c11 * c22 ** 2
                   - QQ(1, 24) * b2 * b3 + QQ(1, 2) * b1 * b4
                   - QQ(1, 24) * b2 * c11 - QQ(5, 6) * b3 * c12
                   + QQ(1, 2) * c11 * c12 - QQ(9, 4) * b4 * c22
                   - QQ(3, 2) * b5)
    out[(2, 5)] = (QQ(6, 5) * b1 ** 2 * c12 - b1 * c12 * c22
                   + QQ(1, 8) * c12 * c22 ** 2 - QQ(3, 5) * b1 * c11
                   - QQ(41, 60) * b2 * c12 + QQ(1, 3) * c12 ** 2
                   - b3 * c22 + QQ(1, 6) * c11 * c22 - QQ(1, 5) * b4)
    out[(1, 6)] = (QQ(64, 45) * b1 ** 2 * c22 - QQ(1, 3) * b1 * c22 ** 2
                   + QQ(1, 48) * c22 ** 3 + QQ(19, 90) * b1 * b2
                   - QQ(37, 45) * b1 * c12 - QQ(77, 120) * b2 * c22
                   + QQ(1, 6) * c12 * c22 - QQ(1, 15) * b3 + QQ(1, 18) * c11)

    return {k: v for k, v in out.items() if v != 0}
