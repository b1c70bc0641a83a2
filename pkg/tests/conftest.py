import sys
import itertools

import pytest

from hypsemi import validate_table

# T1 = {1, e, f, θ} written out by hand: ef = f, fe = e, e² = e, f² = f
T1_TABLE = [
    [0, 1, 2, 3],
    [1, 1, 2, 3],
    [2, 1, 2, 3],
    [3, 3, 3, 3],
]
T1_NAMES = ["1", "e", "f", "θ"]


def brute_force_associative(table):
    n = len(table)
    return all(
        table[table[i][j]][k] == table[i][table[j][k]]
        for i, j, k in itertools.product(range(n), repeat=3)
    )


def brute_force_isomorphic(A, B):
    if A.order != B.order:
        return False
    n = A.order
    for perm in itertools.permutations(range(n)):
        if all(perm[A.table[a][b]] == B.table[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return True
    return False


@pytest.fixture
def t1():
    return validate_table(T1_TABLE, names=T1_NAMES)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
