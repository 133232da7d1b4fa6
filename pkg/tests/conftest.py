import random
import sys
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from crosssections.matrices import Mat
from crosssections.scalar import ONE, ZERO, Scalar

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(Scalar, small_rationals, small_rationals)
nonzero_scalars = scalars.filter(bool)


def mats(m, n, elements=scalars):
    return st.lists(elements, min_size=m * n, max_size=m * n).map(lambda xs: Mat(xs, cols=n))


def seeded_mats(m, n):
    """Large random matrices drawn from a seed; cheaper than drawing each entry."""
    return st.integers(0, 2**32).map(lambda seed: Sampler(seed).matrix(m, n))


def sparse_mats(m, n):
    """Matrices with many zeros and repeated entries, to exercise rank deficiency."""
    entries = st.sampled_from([ZERO, ZERO, ONE, Scalar(-1), Scalar(2), Scalar(0, 1), Scalar(Fraction(1, 2))])
    return mats(m, n, entries)


def leibniz_det(m: Mat) -> Scalar:
    """Permutation-expansion determinant; independent of the elimination code."""
    n = m.rows
    total = ZERO
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * m[i, j]
        total = total - term if inversions % 2 else total + term
    return total


def minor_rank(m: Mat) -> int:
    """Largest k with a nonzero k x k minor, by enumeration."""
    for k in range(min(m.rows, m.cols), 0, -1):
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                sub = Mat([[m[i, j] for j in cols] for i in rows])
                if leibniz_det(sub):
                    return k
    return 0


class Sampler:
    """Seeded source of exact random data for loops over many instances."""

    def __init__(self, seed):
        self.rng = random.Random(seed)

    def rational(self, height=9):
        return Fraction(self.rng.randint(-height, height), self.rng.randint(1, height))

    def scalar(self, height=9, complex_=True):
        return Scalar(self.rational(height), self.rational(height) if complex_ else 0)

    def nonzero(self, height=9, complex_=True):
        while True:
            s = self.scalar(height, complex_)
            if s:
                return s

    def distinct_nonzero(self, k, height=9, complex_=True, avoid=()):
        out = []
        seen = set(avoid)
        while len(out) < k:
            s = self.nonzero(height, complex_)
            if s not in seen:
                seen.add(s)
                out.append(s)
        return out

    def matrix(self, m, n, height=9):
        return Mat([self.scalar(height) for _ in range(m * n)], cols=n)

    def nonzero_matrix(self, m, n, height=9):
        return Mat([self.nonzero(height) for _ in range(m * n)], cols=n)


@pytest.fixture
def sampler():
    return Sampler(20261018)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
