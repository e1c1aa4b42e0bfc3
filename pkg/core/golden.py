"""
Reference tables for the five worked examples.

Binary matrices are tuples of row strings. Field elements are powers of the
named field's generator alpha, with None for zero.
"""

# ----------------------------------------------------------------------------
# ex1: (4 x 4, 2^4, 4) Gabidulin code over F_{2^4}, p(x) = x^4 + x + 1
# ----------------------------------------------------------------------------

EX1_MODULUS = (1, 1, 0, 0, 1)  # constant term first
EX1_BASIS = (0, 1, 2, 3)
EX1_DUAL_BASIS = (14, 2, 1, 0)
EX1_BETAS = (1, 2, 3, 4)

# messages u = 0, 1, alpha, ..., alpha^14
EX1_MESSAGES = (None,) + tuple(range(15))

EX1_VECTOR_CODE = (
    (None, None, None, None),
    (1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6), (4, 5, 6, 7), (5, 6, 7, 8),
    (6, 7, 8, 9), (7, 8, 9, 10), (8, 9, 10, 11), (9, 10, 11, 12), (10, 11, 12, 13),
    (11, 12, 13, 14), (12, 13, 14, 0), (13, 14, 0, 1), (14, 0, 1, 2), (0, 1, 2, 3),
)

EX1_MATRIX_CODE = (
    ("0000", "0000", "0000", "0000"),
    ("0010", "0100", "1001", "0011"),
    ("0100", "1001", "0011", "0110"),
    ("1001", "0011", "0110", "1101"),
    ("0011", "0110", "1101", "1010"),
    ("0110", "1101", "1010", "0101"),
    ("1101", "1010", "0101", "1011"),
    ("1010", "0101", "1011", "0111"),
    ("0101", "1011", "0111", "1111"),
    ("1011", "0111", "1111", "1110"),
    ("0111", "1111", "1110", "1100"),
    ("1111", "1110", "1100", "1000"),
    ("1110", "1100", "1000", "0001"),
    ("1100", "1000", "0001", "0010"),
    ("1000", "0001", "0010", "0100"),
    ("0001", "0010", "0100", "1001"),
)

# the dual-basis table prints identically
EX1_COUNTERPART_CODE = (
    ("0000", "0000", "0000", "0000"),
    ("0010", "0100", "1001", "0011"),
    ("0100", "1001", "0011", "0110"),
    ("1001", "0011", "0110", "1101"),
    ("0011", "0110", "1101", "1010"),
    ("0110", "1101", "1010", "0101"),
    ("1101", "1010", "0101", "1011"),
    ("1010", "0101", "1011", "0111"),
    ("0101", "1011", "0111", "1111"),
    ("1011", "0111", "1111", "1110"),
    ("0111", "1111", "1110", "1100"),
    ("1111", "1110", "1100", "1000"),
    ("1110", "1100", "1000", "0001"),
    ("1100", "1000", "0001", "0010"),
    ("1000", "0001", "0010", "0100"),
    ("0001", "0010", "0100", "1001"),
)

# ----------------------------------------------------------------------------
# ex2 / ex3: (6 x 3, 2^6, 3) codes, q = 2, L = 7, k = 1, exponents 0, 1, 2
# ----------------------------------------------------------------------------

EX2_L = 7
EX2_EXPONENTS = (0, 1, 2)
EX2_G = ("1000001", "0100001", "0010001", "0001001", "0000101", "0000011")
EX2_H = ("100000", "010000", "001000", "000100", "000010", "000001", "000000")

# codewords of the unit messages 000001, 000010, ..., 100000
EX2_GENERATORS = (
    ("011", "001", "000", "000", "000", "100"),
    ("010", "001", "000", "000", "100", "010"),
    ("010", "001", "000", "100", "010", "001"),
    ("010", "001", "100", "010", "001", "000"),
    ("010", "101", "010", "001", "000", "000"),
    ("110", "011", "001", "000", "000", "000"),
)

EX3_G = ("1000000", "0100000", "0010000", "0001000", "0000100", "0000010")

EX3_GENERATORS = (
    ("011", "001", "000", "000", "000", "100"),
    ("001", "000", "000", "000", "100", "110"),
    ("000", "000", "000", "100", "110", "011"),
    ("000", "000", "100", "110", "011", "001"),
    ("000", "100", "110", "011", "001", "000"),
    ("100", "110", "011", "001", "000", "000"),
)

EX23_MIN_RANK = 3

# ----------------------------------------------------------------------------
# ex4: q = 2, L = 5, k = 1, exponents 0..3, F_{2^4} with p(x) = x^4 + x + 1
# ----------------------------------------------------------------------------

EX4_L = 5
EX4_EXPONENTS = (0, 1, 2, 3)
EX4_MODULUS = (1, 1, 0, 0, 1)
EX4_G = ("10001", "01001", "00101", "00011")
EX4_H = ("1000", "0100", "0010", "0001", "0000")

EX4_U1 = (11, 10, 4, 8)
EX4_T = ("1001", "0010", "1000", "1101")
EX4_B_PRIME = (1, 4, 7, 10)
# Gabidulin generator [1 beta beta^2 beta^3] with beta = alpha^3
EX4_BETAS = (0, 3, 6, 9)

EX4_VECTOR_CODE = (
    (None, None, None, None),
    (0, 3, 6, 9), (1, 4, 7, 10), (2, 5, 8, 11), (3, 6, 9, 12), (4, 7, 10, 13),
    (5, 8, 11, 14), (6, 9, 12, 0), (7, 10, 13, 1), (8, 11, 14, 2), (9, 12, 0, 3),
    (10, 13, 1, 4), (11, 14, 2, 5), (12, 0, 3, 6), (13, 1, 4, 7), (14, 2, 5, 8),
)

# messages 0000, 0001, ..., 1111
EX4_C1 = (
    ("0000", "0000", "0000", "0000"),
    ("0110", "0011", "0001", "1000"),
    ("0101", "0010", "1001", "0100"),
    ("0011", "0001", "1000", "1100"),
    ("0100", "1010", "0101", "0010"),
    ("0010", "1001", "0100", "1010"),
    ("0001", "1000", "1100", "0110"),
    ("0111", "1011", "1101", "1110"),
    ("1100", "0110", "0011", "0001"),
    ("1010", "0101", "0010", "1001"),
    ("1001", "0100", "1010", "0101"),
    ("1111", "0111", "1011", "1101"),
    ("1000", "1100", "0110", "0011"),
    ("1110", "1111", "0111", "1011"),
    ("1101", "1110", "1111", "0111"),
    ("1011", "1101", "1110", "1111"),
)

EX4_C2 = (
    ("0000", "0000", "0000", "0000"),
    ("1110", "0001", "0110", "1101"),
    ("0001", "1001", "0101", "0011"),
    ("1111", "1000", "0011", "1110"),
    ("0110", "0101", "0100", "1100"),
    ("1000", "0100", "0010", "0001"),
    ("0111", "1100", "0001", "1111"),
    ("1001", "1101", "0111", "0010"),
    ("1101", "0011", "1100", "1011"),
    ("0011", "0010", "1010", "0110"),
    ("1100", "1010", "1001", "1000"),
    ("0010", "1011", "1111", "0101"),
    ("1011", "0110", "1000", "0111"),
    ("0101", "0111", "1110", "1010"),
    ("1010", "1111", "1101", "0100"),
    ("0100", "1110", "1011", "1001"),
)

# expansion of EX4_VECTOR_CODE over u_1^T, same order
EX4_M1 = (
    ("0000", "0000", "0000", "0000"),
    ("0111", "1011", "1101", "1110"),
    ("0010", "1001", "0100", "1010"),
    ("0001", "1000", "1100", "0110"),
    ("1111", "0111", "1011", "1101"),
    ("0101", "0010", "1001", "0100"),
    ("0011", "0001", "1000", "1100"),
    ("1110", "1111", "0111", "1011"),
    ("1010", "0101", "0010", "1001"),
    ("0110", "0011", "0001", "1000"),
    ("1101", "1110", "1111", "0111"),
    ("0100", "1010", "0101", "0010"),
    ("1100", "0110", "0011", "0001"),
    ("1011", "1101", "1110", "1111"),
    ("1001", "0100", "1010", "0101"),
    ("1000", "1100", "0110", "0011"),
)

# expansion of EX4_VECTOR_CODE over B', same order
EX4_M2 = (
    ("0000", "0000", "0000", "0000"),
    ("1001", "1101", "0111", "0010"),
    ("1000", "0100", "0010", "0001"),
    ("0111", "1100", "0001", "1111"),
    ("0010", "1011", "1111", "0101"),
    ("0001", "1001", "0101", "0011"),
    ("1111", "1000", "0011", "1110"),
    ("0101", "0111", "1110", "1010"),
    ("0011", "0010", "1010", "0110"),
    ("1110", "0001", "0110", "1101"),
    ("1010", "1111", "1101", "0100"),
    ("0110", "0101", "0100", "1100"),
    ("1101", "0011", "1100", "1011"),
    ("0100", "1110", "1011", "1001"),
    ("1100", "1010", "1001", "1000"),
    ("1011", "0110", "1000", "0111"),
)

# ----------------------------------------------------------------------------
# ex5: generalized Gabidulin code, q = 2, L = 7, m_L = 3, cosets {1,2,4}, {3,5,6}
# ----------------------------------------------------------------------------

EX5_REPRESENTATIVES = (1, 3)
# beta exponents of B_{i,s}, keyed by 0-based (i, s)
EX5_BASES = {
    (0, 0): (0, 6, 12),
    (0, 1): (0, 4, 8),
    (1, 0): (18, 24, 30),
    (1, 1): (12, 16, 20),
}
EX5_EVALUATION_SETS = ((0, 1, 2), (0, 3, 6))

# [M_{1,1}; M_{2,1}] and [M_{1,2}; M_{2,2}], zero codeword first
EX5_COSET_CODES = (
    (
        ("000", "000", "000", "000", "000", "000"),
        ("100", "110", "111", "011", "101", "010"),
        ("001", "100", "110", "111", "011", "101"),
        ("010", "001", "100", "110", "111", "011"),
        ("101", "010", "001", "100", "110", "111"),
        ("011", "101", "010", "001", "100", "110"),
        ("111", "011", "101", "010", "001", "100"),
        ("110", "111", "011", "101", "010", "001"),
    ),
    (
        ("000", "000", "000", "000", "000", "000"),
        ("111", "011", "001", "100", "010", "101"),
        ("001", "100", "010", "101", "110", "111"),
        ("010", "101", "110", "111", "011", "001"),
        ("110", "111", "011", "001", "100", "010"),
        ("011", "001", "100", "010", "101", "110"),
        ("100", "010", "101", "110", "111", "011"),
        ("101", "110", "111", "011", "001", "100"),
    ),
)

# F_2 combinations of the ex2 generators A_0..A_5: column i lists the
# coefficients of the i-th target codeword
EX3_FROM_EX2 = (
    "110000",
    "011000",
    "001100",
    "000110",
    "000011",
    "000001",
)
EX5_COSET1_FROM_EX2 = (
    "0101110",
    "1011100",
    "0111001",
    "1110010",
    "1100101",
    "1001011",
)
EX5_COSET2_FROM_EX2 = (
    "1100101",
    "0101110",
    "1110010",
    "0010111",
    "0111001",
    "1001011",
)

# ----------------------------------------------------------------------------
# C1/C2 over L = 7 that no generalized Gabidulin code describes
# F_{2^3} with p(x) = x^3 + x + 1
# ----------------------------------------------------------------------------

NONREP_L = 7
NONREP_EXPONENTS = (0, 1, 2)
NONREP_MODULUS = (1, 1, 0, 1)
NONREP_G = ("1000001", "0100001", "0010000", "0001000", "0000100", "0000010")
NONREP_H = ("011111", "101111", "001000", "000100", "000010", "000001", "111111")

# [u'_j] and [u_{L-j}] over the coprime set, alpha exponents
NONREP_U_PRIME = (
    (5, 3, 6, 6, 3, 5),
    (3, 6, 1, 5, 4, 2),
    (0, 0, 4, 0, 2, 1),
    (None, None, 3, None, 5, 6),
    (6, 5, None, 3, None, None),
    (1, 2, 0, 4, 0, 0),
)
NONREP_U_MIRRORED = (
    (3, 6, 1, 5, 4, 2),
    (5, 3, 6, 6, 3, 5),
    (5, 3, 1, 6, 4, 2),
    (4, 1, 5, 2, 6, 3),
    (3, 6, 2, 5, 1, 4),
    (2, 4, 6, 1, 3, 5),
)
