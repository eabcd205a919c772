import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_min_weight, codes, self_dual_codes
from selfdual import catalog, gf2
from selfdual.gf2 import LinearCode


def brute_span(rows):
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return span


def brute_dual(code):
    return {v for v in range(1 << code.n) if all(gf2.dot(v, r) == 0 for r in code.rows)}


# -- rref ------------------------------------------------------------------------------


def test_rref_examples():
    assert gf2.rref([[1, 1], [1, 0]]) == ([[1, 0], [0, 1]], 2)
    assert gf2.rref([[1, 1], [1, 1]]) == ([[1, 1]], 1)
    assert gf2.rref([[0, 0, 0], [0, 0, 0]]) == ([], 0)


def test_rref_rejects_non_binary():
    with pytest.raises(ValueError):
        gf2.rref([[1, 2]])


@given(st.lists(st.lists(st.integers(0, 1), min_size=6, max_size=6), max_size=8))
def test_rref_preserves_row_space(matrix):
    red, rank = gf2.rref(matrix)
    pack = lambda m: [sum(b << i for i, b in enumerate(r)) for r in m]  # noqa: E731
    assert rank == len(red)
    assert brute_span(pack(red)) == brute_span(pack(matrix))
    pivots = [r.index(1) for r in red]
    assert pivots == sorted(set(pivots))


@given(codes())
def test_canonical_form_is_unique(code):
    # any other basis of the same space yields the identical value
    rows = list(code.rows)
    for i in range(1, len(rows)):
        rows[i] ^= rows[i - 1]
    assert LinearCode(code.n, tuple(reversed(rows))) == code
    assert hash(LinearCode(code.n, tuple(rows))) == hash(code)


# -- dual and friends ---------------------------------------------------------------------


def test_dual_examples():
    assert gf2.dual(LinearCode(5)) == LinearCode.full_space(5)
    assert gf2.dual(catalog.i2()) == catalog.i2()
    g = catalog.golay24()
    assert gf2.dual(g) == g
    m = g.matrix().astype(int)
    assert not ((m @ m.T) % 2).any()


@given(codes(max_n=10))
def test_dual_matches_brute_force(code):
    d = gf2.dual(code)
    assert d.k + code.k == code.n
    assert brute_span(d.rows) == brute_dual(code)
    assert gf2.dual(d) == code


@given(codes(max_n=9), codes(max_n=9))
def test_sum_intersection_dimensions(a, b):
    if a.n != b.n:
        with pytest.raises(ValueError):
            gf2.code_sum(a, b)
        return
    s, i = gf2.code_sum(a, b), gf2.intersect(a, b)
    assert a.k + b.k == s.k + i.k
    assert brute_span(i.rows) == brute_span(a.rows) & brute_span(b.rows)


def test_intersect_with_zero():
    assert gf2.intersect(catalog.i2(), LinearCode(2)) == LinearCode(2)


def test_contains_all_ones():
    assert gf2.contains(catalog.golay24(), (1 << 24) - 1)
    assert gf2.contains(catalog.golay24(), gf2.BitVector.from_str("1" * 24))
    assert not gf2.contains(catalog.golay24(), 1)


@given(self_dual_codes())
def test_self_dual_properties(code):
    assert gf2.is_self_dual(code)
    assert code.k == code.n // 2
    assert gf2.contains(code, (1 << code.n) - 1)
    m = code.matrix().astype(int)
    assert not ((m @ m.T) % 2).any()


def test_puncture_and_shorten():
    g = catalog.golay24()
    assert gf2.puncture(g, [23]).k == 12
    s = gf2.shorten(g, [23])
    assert (s.n, s.k) == (23, 11)
    with pytest.raises(ValueError):
        gf2.puncture(g, [24])
    with pytest.raises(ValueError):
        gf2.puncture(g, [3, 3])


def test_golay_child_by_hand():
    g = catalog.golay24()
    sub = gf2.subcode_kernel(g, [((r >> 22) ^ (r >> 23)) & 1 for r in g.rows])
    child = gf2.puncture(sub, [22, 23])
    assert gf2.is_self_dual(child)
    assert (child.n, child.k, gf2.min_distance(child)) == (22, 11, 6)


# -- doubly-even subcode -------------------------------------------------------------------


def test_doubly_even_subcode_examples():
    assert gf2.doubly_even_subcode(catalog.i2()).k == 0
    assert gf2.doubly_even_subcode(catalog.golay24()) == catalog.golay24()
    assert gf2.doubly_even_subcode(catalog.b12()).k == 5
    with pytest.raises(ValueError):
        gf2.doubly_even_subcode(LinearCode(4, (0b11,)))


@given(self_dual_codes())
def test_doubly_even_subcode_brute(code):
    c0 = gf2.doubly_even_subcode(code)
    assert brute_span(c0.rows) == {w for w in code.codewords() if w.bit_count() % 4 == 0}
    assert c0.k in (code.k, code.k - 1)
    assert (c0 == code) == gf2.is_doubly_even(code)


# -- enumeration and distance ----------------------------------------------------------------


def test_weight_distribution_examples():
    assert gf2.weight_distribution(catalog.golay24()).as_ints() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    assert gf2.weight_distribution(catalog.i2()).as_ints() == {0: 1, 2: 1}
    assert gf2.weight_distribution(catalog.e8()).as_ints() == {0: 1, 4: 14, 8: 1}


def test_weight_distribution_limit():
    with pytest.raises(gf2.EnumerationLimitError):
        gf2.weight_distribution(catalog.golay24(), limit=10)


@given(codes(max_n=14))
def test_weight_distribution_brute(code):
    W = gf2.weight_distribution(code)
    counts = np.bincount([w.bit_count() for w in code.codewords()], minlength=code.n + 1)
    assert [int(c) for c in W.coeffs] == counts.tolist()
    assert W.total() == 2 ** code.k


@given(self_dual_codes())
def test_self_dual_enumerator_symmetric(code):
    W = gf2.weight_distribution(code)
    assert all(W[i] == W[code.n - i] for i in range(code.n + 1))


def test_wide_vectors_enumerate():
    # golay words repeated across three 24-bit blocks: 72 coordinates, two packed words
    g = catalog.golay24()
    code = LinearCode(72, tuple(r | r << 24 | r << 48 for r in g.rows))
    W = gf2.weight_distribution(code)
    assert W.as_ints() == {0: 1, 24: 759, 36: 2576, 48: 759, 72: 1}
    assert gf2.min_distance(code, limit=4) == 24


def test_min_distance_examples():
    assert gf2.min_distance(catalog.golay24()) == 8
    assert gf2.distance_below(catalog.golay24(), 8) is None
    assert gf2.min_distance(catalog.i2()) == 2
    with pytest.raises(gf2.ZeroCodeError):
        gf2.min_distance(LinearCode(4))


@given(codes(max_n=16, max_k=12), st.integers(1, 8))
def test_distance_below_matches_exhaustive(code, w):
    truth = brute_min_weight(code)
    if truth is None:
        return
    assert gf2.min_distance(code) == truth
    wit = gf2.distance_below(code, w)
    if truth < w:
        assert wit is not None and 0 < wit.bit_count() < w and gf2.contains(code, wit)
    else:
        assert wit is None


def test_information_set_search_beyond_limit():
    # force the information-set path by lowering the exhaustive limit
    code = gf2.direct_sum(catalog.golay24(), catalog.golay24(), catalog.e8())
    assert gf2.min_distance(code, limit=6) == 4
    assert gf2.distance_below(code, 4, limit=6) is None
    g2 = gf2.direct_sum(catalog.golay24(), catalog.golay24())
    assert gf2.min_distance(g2, limit=4) == 8


@given(self_dual_codes(max_half=10))
def test_min_distance_paths_agree(code):
    assert gf2.min_distance(code, limit=3) == brute_min_weight(code)


# -- text format ---------------------------------------------------------------------------------


@given(codes())
def test_code_text_round_trip(code):
    assert gf2.parse_code(gf2.format_code(code)) == code


def test_parse_code_comments_and_errors():
    text = "# a comment\n\n4 2\n1100\n# inside\n0011\n"
    assert gf2.parse_code(text) == LinearCode.from_strings(["1100", "0011"])
    for bad in ["4 2\n1100\n", "4 2\n1100\n1100\n", "4 1\n110\n", "x y\n", "", "2 1\n12\n"]:
        with pytest.raises(ValueError):
            gf2.parse_code(bad)


def test_vector_helpers():
    v = gf2.BitVector.from_str("0110")
    assert (v.length, v.weight, v.support()) == (4, 2, [1, 2])
    assert str(gf2.parse_vector("0110\n")) == "0110"
    with pytest.raises(ValueError):
        gf2.parse_vector("0110", 5)
    assert all(gf2.vec_from_str(gf2.vec_to_str(x, 5)) == x for x in range(32))


@given(st.integers(1, 6))
def test_full_space(n):
    assert {w for w in LinearCode.full_space(n).codewords()} == set(range(1 << n))
