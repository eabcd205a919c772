from collections import Counter
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfdual import catalog, gf2, shadowlab
from selfdual.designs import (
    Design,
    assmus_mattson,
    assmus_mattson_enum,
    block_lambda,
    code_of_design,
    design_from_codewords,
    format_design,
    incidence_matrix,
    lambda_vector,
    parse_design,
    shadow_divisibility,
    verify_t_design,
)
from selfdual.polyalg import WeightEnum, macwilliams, restrict_residue
from selfdual.tables import t1, t2


@st.composite
def designs(draw, max_v=8):
    v = draw(st.integers(2, max_v))
    k = draw(st.integers(1, v))
    subsets = draw(st.lists(st.sets(st.integers(0, v - 1), min_size=k, max_size=k),
                            min_size=1, max_size=12, unique_by=frozenset))
    return Design.from_subsets(v, subsets)


def brute_is_design(design, t):
    counts = Counter()
    for s in combinations(range(design.v), t):
        m = sum(1 << x for x in s)
        counts[sum(1 for b in design.blocks if b & m == m)] += 1
    return len(counts) == 1


# -- parameters -------------------------------------------------------------------------------


def test_lambda_vector_golay():
    p = lambda_vector(5, 24, 8, 1)
    assert p.lambdas == (759, 253, 77, 21, 5, 1)
    assert p.integral and "integral" in str(p)


def test_lambda_vector_for_120():
    p = lambda_vector(5, 120, 24, 8855)
    assert p.lambdas[4] == 51359
    assert p.lambdas[0] == 39703755
    assert p.integral


def test_lambda_vector_non_integral():
    p = lambda_vector(2, 10, 4, 1)
    assert not p.integral
    assert p.non_integral() == [0]
    with pytest.raises(ValueError):
        lambda_vector(3, 8, 9, 1)
    with pytest.raises(ValueError):
        lambda_vector(2, 8, 4, 0)


def test_block_lambda():
    assert block_lambda(1534767, 118, 22, 3) == 8855
    assert block_lambda(759, 24, 8, 5) == 1
    assert block_lambda(7, 7, 3, 2) == 1
    assert block_lambda(5, 7, 3, 2) == Fraction(5, 7)


# -- designs from codes -------------------------------------------------------------------------------


def test_golay_octads_form_5_design():
    D = design_from_codewords(catalog.golay24(), 8)
    assert (D.v, D.b, D.k) == (24, 759, 8)
    chk = verify_t_design(D, 5)
    assert chk.ok and chk.lam == 1 and chk.checked == 42504
    assert verify_t_design(D, 2).lam == 77
    assert code_of_design(D) == catalog.golay24()


def test_e8_words_form_3_design():
    D = design_from_codewords(catalog.e8(), 4)
    assert verify_t_design(D, 3).lam == 1
    assert not verify_t_design(D, 4).ok


def test_sample_mode():
    D = design_from_codewords(catalog.golay24(), 12)
    a = verify_t_design(D, 5, "sample", samples=200, seed=7)
    b = verify_t_design(D, 5, "sample", samples=200, seed=7)
    assert a == b and a.ok and a.lam == 48
    assert "seed 7" in a.describe()
    with pytest.raises(ValueError):
        verify_t_design(D, 5, "sample")
    with pytest.raises(ValueError):
        verify_t_design(D, 5, "guess")


def test_exact_mode_refuses_huge_checks():
    D = design_from_codewords(catalog.golay24(), 8)
    with pytest.raises(ValueError):
        verify_t_design(D, 5, bound=1000)


def test_non_design_certificate():
    D = Design.from_subsets(4, [{0, 1}, {1, 2}])
    chk = verify_t_design(D, 1)
    assert not chk.ok
    a, ca, b, cb = chk.certificate
    assert ca != cb
    assert "not a design" in chk.describe()


def test_no_words_of_weight():
    with pytest.raises(ValueError):
        design_from_codewords(catalog.golay24(), 10)


@given(designs(), st.integers(0, 4))
def test_exact_verification_matches_brute(design, t):
    if t > design.v:
        return
    assert verify_t_design(design, t).ok == brute_is_design(design, t)


@given(designs())
def test_design_text_round_trip(design):
    assert parse_design(format_design(design)) == design
    m = incidence_matrix(design)
    assert m.shape == (design.b, design.v)
    assert (m.sum(axis=1) == design.k).all()


def test_small_design_codes():
    one = Design.from_subsets(6, [{0, 1, 2}])
    assert code_of_design(one).rows == (0b111,)
    pair = Design.from_subsets(6, [{0, 1, 2}, {3, 4, 5}])
    assert code_of_design(pair).k <= 2


def test_design_validation():
    with pytest.raises(ValueError):
        Design(4, (0b11, 0b11))
    with pytest.raises(ValueError):
        Design(4, (0b11, 0b111))
    with pytest.raises(ValueError):
        Design(2, (0b100,))
    with pytest.raises(ValueError):
        parse_design("4 2 2\n1100\n")


# -- Assmus-Mattson -----------------------------------------------------------------------------------


def test_assmus_mattson_golay():
    am = assmus_mattson(catalog.golay24(), 5)
    assert am.applicable and am.s == 3
    assert am.code_weights == [8, 12, 16, 24]
    assert "5-designs" in am.describe()
    assert not assmus_mattson(catalog.golay24(), 6).applicable


def test_assmus_mattson_doubly_even_subcode_118():
    # C0 holds the weights 0 mod 4 of the [118, 59, 22] code; its dual is C plus the shadow
    w_c0 = restrict_residue(t1(), 0, 4)
    w_dual = t1() + t2()
    assert w_dual.total() == 4 * w_c0.total()
    am = assmus_mattson_enum(w_dual, w_c0, 3)
    assert am.s == 19 and am.d == 22 and am.applicable
    # the full code alone does not qualify
    assert not assmus_mattson_enum(t1(), t1(), 3).applicable


def test_assmus_mattson_not_applicable():
    am = assmus_mattson(catalog.b12(), 2)
    assert not am.applicable and "s =" in am.reason
    with pytest.raises(ValueError):
        assmus_mattson_enum(WeightEnum.zero(4), WeightEnum.zero(6), 1)


@pytest.mark.parametrize("name,t", [("e8", 3), ("golay24", 5), ("b12", 1)])
def test_assmus_mattson_designs_hold(name, t):
    code = catalog.get(name).code()
    am = assmus_mattson(code, t)
    assert am.applicable
    for w in am.code_weights:
        if 0 < w < code.n:
            D = design_from_codewords(code, w)
            chk = verify_t_design(D, t)
            assert chk.ok
            # two paths: the predicted lambda vector matches subset counts for every i <= t
            pred = lambda_vector(t, code.n, w, chk.lam)
            for i in range(t + 1):
                assert verify_t_design(D, i).lam == pred.lambdas[i]


# -- shadow design divisibility -------------------------------------------------------------


def test_shadow_divisibility_golay_child():
    ws = shadowlab.shadow(catalog.golay_child()).enumerator
    rep = shadow_divisibility(ws, 22, 1)
    assert rep.ok
    assert rep.rows[7][0] == ws[7]


def test_shadow_divisibility_failure():
    rep = shadow_divisibility(WeightEnum.from_dict(10, {5: 7}), 10, 1)
    assert rep.failures == [(5, 1)]
    assert rep.rows[5][1] == Fraction(7, 2)
    rep = shadow_divisibility(WeightEnum.from_dict(10, {3: 5}), 10, 2)
    assert not rep.ok and (3, 1) in rep.failures
    assert "failure" in rep.describe()
    with pytest.raises(ValueError):
        shadow_divisibility(WeightEnum.from_dict(10, {3: 5}), 2, 1)


@given(st.integers(1, 8).flatmap(lambda n: st.lists(st.integers(0, (1 << n) - 1), max_size=n).map(
    lambda rows: gf2.LinearCode(n, tuple(rows)))))
def test_macwilliams_involution(code):
    w = gf2.weight_distribution(code)
    assert macwilliams(macwilliams(w, code.k), code.n - code.k) == w
    assert np.isclose(float(macwilliams(w, code.k).total()), 2 ** (code.n - code.k))
