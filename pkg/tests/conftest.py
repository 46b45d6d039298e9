from fractions import Fraction

import pytest


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose the call-phase outcome to teardown fixtures (acceptance reporting)
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)

# Sequence generated by 4x^6 + 5x^5 + 6x^4 + 7x^3 + 8x^2 + 9x + 10 on x = 0..7
SEQ_START_ZERO = [10, 49, 628, 4915, 23662, 83005, 235144, 571903]
DIAG_START_ZERO = [10, 39, 540, 3168, 7584, 7800, 2880, 0]
COEFFS_START_ZERO = [10, 9, 8, 7, 6, 5, 4]

# Sequence generated by 2x^6 + 3x^5 + 5x^4 + 7x^3 + 11x^2 + 13x + 17 on x = 1..8
SEQ_START_ONE = [58, 447, 2936, 13237, 44982, 125123, 300772, 647481]
DIAG_START_ONE = [58, 389, 2100, 5712, 7920, 5400, 1440, 0]
COEFFS_START_ONE = [17, 13, 11, 7, 5, 3, 2]

# Sequence generated by 3x^5 + x^4 + 4x^3 + x^2 + 5x + 9 on x = 3.3, 3.4, ..., 3.9
SEQ_DECIMAL = [
    "1472.79189", "1691.47232", "1935.96875", "2208.53088",
    "2511.53681", "2847.49664", "3219.05607",
]
COEFFS_DECIMAL_X = [9, 5, 1, 4, 1, 3]
COEFFS_DECIMAL_G = [
    Fraction(147279189, 100000), Fraction(20649095, 100000), Fraction(118405, 10000),
    Fraction(3439, 10000), Fraction(505, 100000), Fraction(3, 100000),
]

# 9x9 grids including zeros, rows n = 1..9, columns k = 1..9
MWNT_TABLE = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 3, 2, 0, 0, 0, 0, 0, 0],
    [1, 7, 12, 6, 0, 0, 0, 0, 0],
    [1, 15, 50, 60, 24, 0, 0, 0, 0],
    [1, 31, 180, 390, 360, 120, 0, 0, 0],
    [1, 63, 602, 2100, 3360, 2520, 720, 0, 0],
    [1, 127, 1932, 10206, 25200, 31920, 20160, 5040, 0],
    [1, 255, 6050, 46620, 166824, 317520, 332640, 181440, 40320],
]

AWNT_TABLE = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 0, 0, 0, 0, 0, 0, 0],
    [1, 6, 6, 0, 0, 0, 0, 0, 0],
    [1, 14, 36, 24, 0, 0, 0, 0, 0],
    [1, 30, 150, 240, 120, 0, 0, 0, 0],
    [1, 62, 540, 1560, 1800, 720, 0, 0, 0],
    [1, 126, 1806, 8400, 16800, 15120, 5040, 0, 0],
    [1, 254, 5796, 40824, 126000, 191520, 141120, 40320, 0],
    [1, 510, 18150, 186480, 834120, 1905120, 2328480, 1451520, 362880],
]


@pytest.fixture
def seq_start_zero():
    return [Fraction(v) for v in SEQ_START_ZERO]


@pytest.fixture
def seq_start_one():
    return [Fraction(v) for v in SEQ_START_ONE]


@pytest.fixture
def seq_decimal():
    from seqfit import parse_scalar

    return [parse_scalar(v) for v in SEQ_DECIMAL]
