import random

import pytest

from gl2surgery import IntMat2

ACCEPTANCE_LINES = []


def naive_mul(x, y):
    """Row-by-column product on nested lists; independent of IntMat2.__matmul__."""
    return [[sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def naive_product(mats):
    out = [[1, 0], [0, 1]]
    for m in mats:
        out = naive_mul(out, m.to_list() if isinstance(m, IntMat2) else m)
    return IntMat2.from_rows(out)


GL2_GENERATORS = [
    IntMat2(0, -1, 1, 0),
    IntMat2(1, 1, 0, 1),
    IntMat2(1, -1, 0, 1),
    IntMat2(1, 0, 0, -1),
]
SL2_GENERATORS = [IntMat2(0, -1, 1, 0), IntMat2(0, 1, -1, 0), IntMat2(1, 1, 0, 1), IntMat2(1, -1, 0, 1)]
H4_GENERATORS = [IntMat2(1, 2, 0, 1), IntMat2(1, -2, 0, 1), IntMat2(1, 0, 2, 1), IntMat2(1, 0, -2, 1)]
H2_GENERATORS = H4_GENERATORS + [IntMat2(-1, 0, 0, 1), IntMat2(1, 0, 0, -1)]


def random_word_matrix(rng, gens, max_len):
    return naive_product(rng.choice(gens) for _ in range(rng.randint(0, max_len)))


def random_h1(rng, max_len=12):
    mats = []
    for _ in range(rng.randint(0, max_len)):
        if rng.random() < 0.5:
            mats.append(IntMat2(rng.choice((1, -1)), rng.randint(-9, 9), 0, rng.choice((1, -1))))
        else:
            mats.append(rng.choice((IntMat2(1, 0, 2, 1), IntMat2(1, 0, -2, 1))))
    return naive_product(mats)


@pytest.fixture
def rng():
    return random.Random(20260101)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
