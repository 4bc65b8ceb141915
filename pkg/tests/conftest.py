import itertools

import pytest

from fittinglike.catalog import get_entry
from fittinglike.group import Group
from fittinglike.memo import memo_scope
from fittinglike.perm import Permutation


def perm(text, degree):
    return Permutation.from_cycles(text, degree)


def grp(degree, *cycles):
    return Group([perm(c, degree) for c in cycles], degree)


def sub(g, *cycles):
    return g.subgroup([perm(c, g.degree) for c in cycles])


def cat(name):
    return get_entry(name).load()


def brute_cayley(elements):
    """Multiplication table of a list of image tuples, by direct composition."""
    pos = {e: i for i, e in enumerate(elements)}
    return [[pos[tuple(b[a[i]] for i in range(len(a)))] for b in elements] for a in elements]


def all_permutations(n):
    return [tuple(p) for p in itertools.permutations(range(n))]


@pytest.fixture(autouse=True)
def fresh_cache():
    with memo_scope():
        yield


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
