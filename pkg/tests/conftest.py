import itertools
import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings

from superweyl import CharacterPoly, HalfWeight, build_group, polarize

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def hw(*coords):
    return HalfWeight.of(coords)


def poly(rank, terms):
    """``terms`` maps integer (or Fraction) exponent tuples to coefficients."""
    out = {}
    for exp, c in terms.items():
        key = tuple(int(2 * Fraction(e)) for e in exp)
        out[key] = out.get(key, 0) + c
    return CharacterPoly(out, rank)


def tableaux_schur(partition, nvars, offset=0, rank=None):
    """Schur polynomial by enumerating semistandard tableaux.

    Negative parts are handled by shifting the whole partition, which
    multiplies by a power of ``t_1 ... t_k``.
    """
    rank = nvars if rank is None else rank
    parts = list(partition) + [0] * (nvars - len(partition))
    shift = min(parts) if parts else 0
    shape = [x - shift for x in parts if x - shift > 0]
    counts = {}

    def rows(i, prev, content):
        if i == len(shape):
            counts[tuple(content)] = counts.get(tuple(content), 0) + 1
            return
        for row in itertools.combinations_with_replacement(range(nvars), shape[i]):
            if prev is not None and any(row[c] <= prev[c] for c in range(len(row))):
                continue
            new = list(content)
            for v in row:
                new[v] += 1
            rows(i + 1, row, new)

    rows(0, None, [0] * nvars)
    terms = {}
    for content, c in counts.items():
        exp = [0] * rank
        for v in range(nvars):
            exp[offset + v] = 2 * (content[v] + shift)
        terms[tuple(exp)] = c
    return CharacterPoly(terms, rank)


def random_dominant_gl(rng, m, n, lo=-3, hi=3):
    a = sorted((rng.randint(lo, hi) for _ in range(m)), reverse=True)
    b = sorted((rng.randint(lo, hi) for _ in range(n)), reverse=True)
    return HalfWeight.of(a + b)


def random_dominant_typea(rng, n, lo=-3, hi=3):
    return HalfWeight.of(sorted((rng.randint(lo, hi) for _ in range(n)), reverse=True))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def gl21():
    return polarize(build_group("gl:2,1"))


@pytest.fixture(scope="session")
def p2():
    return polarize(build_group("p:2"))


@pytest.fixture(scope="session")
def p3():
    return polarize(build_group("p:3"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        status, title = mod.RESULTS[number]
        terminalreporter.write_line(f"{status}  AC{number:02d} {title}")
