from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from selfdual import catalog, gf2, shadowlab
from selfdual.autom import Permutation, apply_code

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def golden_dir():
    return GOLDEN


@st.composite
def codes(draw, max_n=12, max_k=None):
    """Arbitrary binary linear codes given by random generator rows."""
    n = draw(st.integers(1, max_n))
    kmax = n if max_k is None else min(n, max_k)
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=kmax))
    return gf2.LinearCode(n, tuple(rows))


@st.composite
def permutations(draw, n):
    return Permutation(tuple(draw(st.permutations(range(n)))))


@st.composite
def self_dual_codes(draw, max_half=8):
    """Self-dual codes reached from i2^m by a random permutation and neighbor steps."""
    m = draw(st.integers(1, max_half))
    n = 2 * m
    code = catalog.i_n(n)
    if n >= 8 and draw(st.booleans()):
        code = gf2.direct_sum(catalog.e8(), catalog.i_n(n - 8)) if n > 8 else catalog.e8()
    code = apply_code(code, draw(permutations(n)))
    for _ in range(draw(st.integers(0, 3))):
        u = draw(st.integers(0, (1 << n) - 1))
        if u.bit_count() % 2 or gf2.contains(code, u):
            continue
        code = shadowlab.neighbor(code, u)
    return code


def brute_words(code):
    return list(code.codewords())


def brute_min_weight(code):
    ws = [w.bit_count() for w in code.codewords() if w]
    return min(ws) if ws else None


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
