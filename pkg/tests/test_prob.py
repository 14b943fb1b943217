import math

import pytest
from hypothesis import given, settings, strategies as st

from lmpe import prob


def symbols(k):
    return st.builds(
        lambda cuts: tuple(b - a for a, b in zip((0,) + cuts, cuts + (k,))),
        st.tuples(*(st.integers(0, k) for _ in range(3))).map(sorted).map(tuple))


def test_alphabet_size():
    for k in (1, 4, 12, 19):
        xs = list(prob.alphabet(k))
        assert len(xs) == math.comb(k + 3, 3)
        assert prob.alphabet_size(k) == len(xs)
        assert all(sum(x) == k and min(x) >= 0 for x in xs)
    assert xs == sorted(xs)  # lexicographic


def test_lmpe_validity():
    assert prob.lmpe_is_valid((0, 0, 0, 0), 1)
    assert prob.lmpe_is_valid((1, -1, 0, 0), 1)
    assert not prob.lmpe_is_valid((1, 1, -1, -1), 1)  # magnitude 2 > l=1
    assert prob.lmpe_is_valid((1, 1, -1, -1), 2)
    assert not prob.lmpe_is_valid((1, 1, -2, 0), 1)
    assert not prob.lmpe_is_valid((1, 0, 0, 0), 1)     # nonzero sum
    assert prob.lmpe_is_valid((2, -1, -1, 0), 2)
    assert prob.magnitude((1, 1, -1, -1)) == 2


# brute-force oracle: |B(x)| for an interior symbol is E(l), and at a
# corner (0,0,0,k) it is E_min(l)
def _e_interior(l):
    return (10 * l ** 3 + 15 * l ** 2 + 11 * l) // 3 + 1


def _e_corner(l):
    return sum(math.comb(i + 2, 2) for i in range(l + 1))


@pytest.mark.parametrize("l", [1, 2, 3])
def test_symbol_ball_sizes(l):
    k = 4 * l + 4
    corner = (0, 0, 0, k)
    interior = (l, l, l, k - 3 * l)
    assert len(prob.symbol_error_ball(corner, l, k)) == _e_corner(l)
    assert len(prob.symbol_error_ball(interior, l, k)) == _e_interior(l)


def test_symbol_ball_vectors_match_errors():
    x = (3, 3, 3, 3)
    errs = prob.symbol_error_ball(x, 1, 12)
    vecs = prob.symbol_ball_vectors(x, 1, 12)
    assert vecs == [prob.apply_error(x, e) for e in errs]
    assert x in vecs
    assert len(set(vecs)) == len(vecs)


def test_ball_symmetry():
    # e valid implies -e valid, so membership is symmetric
    k, l = 8, 1
    for x in prob.alphabet(k):
        for y in prob.symbol_ball_vectors(x, l, k):
            assert x in prob.symbol_ball_vectors(y, l, k)


def test_apply_error():
    assert prob.apply_error((3, 3, 3, 3), (1, -1, 0, 0)) == (4, 2, 3, 3)
    # errors leaving the alphabet are filtered by symbol_error_ball
    assert (-1, 1, 0, 0) not in prob.symbol_error_ball((0, 0, 0, 12), 1)


def test_word_error_ball_size_is_product_free_union():
    x = [(3, 3, 3, 3), (0, 0, 0, 12)]
    n1 = len(prob.symbol_error_ball(x[0], 1, 12)) - 1
    n2 = len(prob.symbol_error_ball(x[1], 1, 12)) - 1
    # t=1: identity + single-position errors
    assert prob.word_error_ball_size(x, 1, 1) == 1 + n1 + n2


def test_geodesic_distance_and_ball():
    x = ((3, 3, 3, 3),)
    y = ((5, 1, 3, 3),)
    assert prob.geodesic_distance(x, x, 1) == 0
    assert prob.geodesic_distance(x, y, 1) == 2
    ball = prob.geodesic_ball(x, 1, 1)
    assert x in ball
    assert len(ball) == len(prob.symbol_error_ball((3, 3, 3, 3), 1, 12))


@settings(max_examples=50, deadline=None)
@given(symbols(12), st.integers(0, 2 ** 31))
def test_sample_lmpe_is_valid_and_deterministic(x, seed):
    word = [x, (3, 3, 3, 3)]
    e1 = prob.sample_lmpe(word, 1, 1, seed=seed)
    e2 = prob.sample_lmpe(word, 1, 1, seed=seed)
    assert e1 == e2
    corrupted = sum(1 for e in e1 if any(e))
    assert corrupted <= 1
    for xi, ei in zip(word, e1):
        assert prob.lmpe_is_valid(ei, 1)
        assert all(0 <= v <= 12 for v in prob.apply_error(xi, ei))


def test_word_format_roundtrip():
    w = ((3, 3, 3, 3), (2, 4, 3, 3))
    line = prob.format_word(w)
    assert line == "3,3,3,3;2,4,3,3"
    assert prob.parse_word(line, 12) == w
    with pytest.raises(ValueError):
        prob.parse_word("1,2,3", 12)
    with pytest.raises(ValueError):
        prob.parse_word("1,2,3,4", 12)  # wrong sum
