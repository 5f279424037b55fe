from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtwist.linalg import LegSpace, inverse, perm_matrix, rel_diff
from qtwist.rword import RFactor, RWord, compose, evaluate, expand_slots, invert, parse_word, relabel, word
from qtwist.twist import TwistConfig, build_boldR, build_F
from qtwist.uqsl2 import contracted_rep, universal_r
from qtwist.verify import ybe_residual

EQ2 = "R[4,1]^-1 R[1,3] R[4,2]^-1 R[2,3]"


@st.composite
def words(draw, num_slots=4, max_len=6):
    n = draw(st.integers(0, max_len))
    factors = []
    for _ in range(n):
        a, b = draw(st.lists(st.integers(1, num_slots), min_size=2, max_size=2, unique=True))
        factors.append(RFactor(draw(st.sampled_from((1, -1))), a, b))
    return RWord(num_slots, tuple(factors))


def test_factor_validation():
    with pytest.raises(ValueError):
        RFactor(1, 2, 2)
    with pytest.raises(ValueError):
        RFactor(0, 1, 2)
    with pytest.raises(ValueError):
        RWord(2, (RFactor(1, 1, 3),))


def test_text_form_round_trip():
    w = parse_word(EQ2)
    assert w == word(4, (-1, 4, 1), (1, 1, 3), (-1, 4, 2), (1, 2, 3))
    assert str(w) == EQ2
    assert str(RWord(3)) == "1" and parse_word("1", 3) == RWord(3)


@given(words())
def test_text_round_trip_property(w):
    assert parse_word(str(w), w.num_slots) == w


def test_compose_and_invert_basics(data13):
    w = parse_word(EQ2)
    assert compose(w, RWord(4)) == w
    assert np.allclose(evaluate(compose(w, invert(w)), data13), np.eye(16), atol=1e-12)
    assert invert(RWord(2)) == RWord(2)
    assert invert(word(2, (1, 1, 2))) == word(2, (-1, 1, 2))
    with pytest.raises(ValueError):
        compose(RWord(2), RWord(3))


def test_evaluate_halves_of_eq2(data13):
    w = parse_word(EQ2)
    a, b = RWord(4, w.factors[:2]), RWord(4, w.factors[2:])
    assert rel_diff(evaluate(w, data13), evaluate(a, data13) @ evaluate(b, data13)) < 1e-12


def test_invert_matches_numeric_inverse(data13):
    f = build_F(TwistConfig.standard(3))
    assert rel_diff(evaluate(invert(f), data13), inverse(evaluate(f, data13))) < 1e-10


@settings(max_examples=40, deadline=None)
@given(words(), words())
def test_evaluate_is_homomorphism(a, b):
    from qtwist.uqsl2 import standard_data

    data = standard_data(1.3)
    lhs = evaluate(compose(a, b), data)
    assert rel_diff(lhs, evaluate(a, data) @ evaluate(b, data)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(words(), st.permutations(range(1, 5)))
def test_relabel_is_conjugation(w, perm):
    from qtwist.uqsl2 import standard_data

    data = standard_data(0.7)
    p = perm_matrix(perm, LegSpace(4, 2))
    assert rel_diff(evaluate(relabel(w, perm), data), p @ evaluate(w, data) @ p.T) < 1e-12


def test_relabel_examples():
    w = parse_word(EQ2)
    assert relabel(w, (1, 2, 3, 4)) == w
    swap = (3, 4, 1, 2)
    assert relabel(relabel(w, swap), swap) == w
    f = build_F(TwistConfig.standard(2))
    assert relabel(f, swap) == word(4, (1, 1, 4))
    with pytest.raises(ValueError):
        relabel(w, (1, 1, 2, 3))


def test_evaluate_trivial_cases(data13):
    from qtwist.uqsl2 import standard_data

    assert np.array_equal(evaluate(RWord(2), data13), np.eye(4))
    assert np.allclose(evaluate(word(2, (1, 1, 2)), standard_data(1.0)), np.eye(4))


def test_eq2_word_satisfies_ybe(data13):
    assert ybe_residual(evaluate(parse_word(EQ2), data13)) < 1e-10


def test_evaluate_size_limit(data13):
    with pytest.raises(ValueError):
        evaluate(RWord(13), data13)


def test_expand_identity_profile():
    w = parse_word(EQ2)
    assert expand_slots(w, (1, 1, 1, 1)) is w


def test_expand_examples():
    r12 = word(2, (1, 1, 2))
    assert expand_slots(r12, (2, 1)) == word(3, (1, 1, 3), (1, 2, 3))
    assert expand_slots(r12, (1, 2)) == word(3, (1, 1, 3), (1, 1, 2))
    assert expand_slots(r12, (0, 1)) == RWord(1)
    assert expand_slots(word(2, (-1, 1, 2)), (2, 1)) == word(3, (-1, 2, 3), (-1, 1, 3))
    with pytest.raises(ValueError):
        expand_slots(r12, (1, 1, 1))


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("profile", [(2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (3, 2), (0, 2), (2, 0)])
@pytest.mark.parametrize("q", [0.7, 1.3])
def test_hexagon_soundness(sign, profile, q):
    """Expanded words against the universal R-matrix paired with contracted reps."""
    from qtwist.uqsl2 import standard_data

    data = standard_data(q)
    expanded = expand_slots(word(2, (sign, 1, 2)), profile)
    direct = universal_r(q, contracted_rep(q, profile[0]), contracted_rep(q, profile[1]))
    if sign < 0:
        direct = np.linalg.inv(direct)
    assert rel_diff(evaluate(expanded, data, sum(profile)), direct) < 1e-11


def test_hexagon_soundness_reversed_factor(data13):
    # R_21 with slot 1 split: the oracle acts on (slot 2, slot 1 copies) order
    expanded = expand_slots(word(2, (1, 2, 1)), (2, 1))
    direct = universal_r(1.3, contracted_rep(1.3, 1), contracted_rep(1.3, 2))
    p = perm_matrix((3, 1, 2), LegSpace(3, 2))
    assert rel_diff(evaluate(expanded, data13), p @ direct @ p.T) < 1e-11


def test_expand_then_evaluate_bold_r(data13):
    w = expand_slots(build_boldR(TwistConfig.parse("s=2 diag=+- twist=-")), (2, 1, 2, 1))
    assert w.num_slots == 6
    assert ybe_residual(evaluate(w, data13)) < 1e-10
