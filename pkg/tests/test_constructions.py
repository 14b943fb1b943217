import math
import random

import pytest

from lmpe import DecodeFailure, LmpeCodeSpec, Message, build, prob
from lmpe.classify import class_index, remainder_error_patterns, split
from lmpe.constructions import quotient_rank, quotient_unrank


def mapped_alphabet(code):
    return [x for x in prob.alphabet(code.k)
            if class_index(split(x, code.l).remainder, code.cmap) is not None]


def single_error_cases(code, word, patterns=None):
    """Yield (received, position) for every nonzero single-symbol LMPE."""
    k = code.k
    for pos, x in enumerate(word):
        for e in prob.symbol_error_ball(tuple(x), code.l, k):
            if not any(e):
                continue
            if patterns is not None:
                b_err = tuple(v % (2 * code.l + 1) for v in e)
                if b_err not in patterns:
                    continue
            rec = list(word)
            rec[pos] = prob.apply_error(tuple(x), e)
            yield rec, pos


def test_quotient_rank_roundtrip():
    for s in range(7):
        count = math.comb(s + 3, 3)
        vecs = [quotient_unrank(i, s) for i in range(count)]
        assert vecs == sorted(vecs)  # lexicographic
        assert all(sum(v) == s for v in vecs)
        assert [quotient_rank(v) for v in vecs] == list(range(count))


EX1 = LmpeCodeSpec(variant="remainder", k=12, l=1, t=1, q=27, r=2)


def test_example1_shape_and_rate():
    code = build(EX1)
    assert (code.n, code.m) == (28, 26)
    assert code.rate == pytest.approx(0.9554, abs=1e-3)
    assert code.quotient_messages == 10


def test_example1_fig3_scenario():
    code = build(EX1)
    msg = Message([(3, 3, 3, 3)] * 26, [0, 0])
    word = code.encode(msg)
    # all-(3,3,3,3) info is class 0 everywhere, so the parity classes are 0
    assert [class_index(split(word[p], 1).remainder, code.cmap)
            for p in (26, 27)] == [0, 0]
    rec = list(word)
    rec[2] = (2, 4, 3, 3)
    res = code.decode(rec)
    assert res.word == [tuple(v) for v in word]
    assert res.corrected_positions == [2]
    assert res.message.info_symbols == msg.info_symbols
    assert res.message.parity_quotients == [0, 0]


def test_example1_exhaustive_single_errors():
    code = build(EX1)
    rng = random.Random(5)
    pool = mapped_alphabet(code)
    msg = Message([pool[rng.randrange(len(pool))] for _ in range(26)], [3, 7])
    word = code.encode(msg)
    cases = 0
    for rec, _pos in single_error_cases(code, word):
        res = code.decode(rec)
        assert res.word == [tuple(v) for v in word]
        cases += 1
    assert cases > 200


def test_remainder_poly_class_map_variant():
    spec = LmpeCodeSpec(variant="remainder", k=12, l=1, t=1, q=27, r=2,
                        class_map="poly")
    code = build(spec)
    msg = Message([(3, 3, 3, 3)] * 26, [0, 0])
    word = code.encode(msg)
    rec = list(word)
    rec[0] = (4, 2, 3, 3)
    assert code.decode(rec).word == [tuple(v) for v in word]


def test_improved_hamming_codec():
    spec = LmpeCodeSpec(variant="improved_hamming", k=12, l=1, t=1, q=27, r=2)
    code = build(spec)
    assert (code.n, code.m) == (56, 54)
    msg = Message([(3, 3, 3, 3)] * 54, [0, 0])
    word = code.encode(msg)
    patterns = set(remainder_error_patterns(1))
    cases = 0
    for rec, _pos in single_error_cases(code, word):
        res = code.decode(rec)
        assert res.word == [tuple(v) for v in word]
        cases += 1
    assert cases > 500


def test_reduced_codec_exhaustive():
    spec = LmpeCodeSpec(variant="reduced", k=12, l=1, t=1, w=2, n=10)
    code = build(spec)
    assert (code.n, code.m) == (10, 6)
    msg = Message([(3, 3, 3, 3), (0, 3, 3, 6), (1, 2, 4, 5),
                   (2, 2, 2, 6), (0, 0, 6, 6), (4, 4, 4, 0)],
                  [0] * 4)
    word = code.encode(msg)
    cases = 0
    for rec, _pos in single_error_cases(code, word):
        res = code.decode(rec)
        assert res.word == [tuple(v) for v in word]
        cases += 1
    expect = sum(len(prob.symbol_error_ball(tuple(x), 1, 12)) - 1 for x in word)
    assert cases == expect


def test_erasure_path_q25():
    # q = 25 < 27 leaves two remainder classes unmapped; corrupting into an
    # unmapped class decodes through the erasure path (distance budget 1)
    spec = LmpeCodeSpec(variant="remainder", k=12, l=1, t=1, q=25, w=1, n=24)
    code = build(spec)
    assert (code.n, code.m) == (24, 22)
    rng = random.Random(11)
    pool = mapped_alphabet(code)
    msg = Message([pool[rng.randrange(len(pool))] for _ in range(22)], [0, 0])
    word = code.encode(msg)
    cases = erasure_cases = 0
    for rec, pos in single_error_cases(code, word):
        unmapped = class_index(split(rec[pos], 1).remainder, code.cmap) is None
        res = code.decode(rec)
        assert res.word == [tuple(v) for v in word]
        cases += 1
        if unmapped:
            assert pos in res.erasure_positions
            erasure_cases += 1
    assert cases > 150 and erasure_cases > 0


def test_systematic_codec_small():
    spec = LmpeCodeSpec(variant="systematic", k=12, l=1, t=1, q=27, w=2,
                        g=1, m=20, n=28)
    code = build(spec)
    assert code.r == 8
    assert code.rate == pytest.approx(20 / 28)
    rng = random.Random(0)
    pool = mapped_alphabet(code)
    for trial in range(200):
        info = [pool[rng.randrange(len(pool))] for _ in range(code.m)]
        word = code.encode(Message(info))
        # systematic property
        assert [tuple(v) for v in word[:code.m]] == info
        errs = prob.sample_lmpe(word, 1, 1, seed=trial)
        res = code.decode(prob.apply_word_error(word, errs))
        assert res.word == [tuple(v) for v in word]
        assert [tuple(v) for v in res.message.info_symbols] == info


def test_systematic_non_gray_image_corruption():
    spec = LmpeCodeSpec(variant="systematic", k=12, l=1, t=1, q=27, w=2,
                        g=1, m=20, n=28)
    code = build(spec)
    pool = mapped_alphabet(code)
    word = code.encode(Message([pool[i % len(pool)] for i in range(code.m)]))
    parity0 = tuple(word[code.m])
    target = next(c for c in prob.symbol_ball_vectors(parity0, 1, 12)
                  if c != parity0 and c not in code._gray_inv)
    rec = list(word)
    rec[code.m] = target
    assert code.decode(rec).word == [tuple(v) for v in word]


def test_decode_failure_on_garbage():
    code = build(EX1)
    msg = Message([(3, 3, 3, 3)] * 26, [0, 0])
    word = code.encode(msg)
    rec = [tuple(v) for v in word]
    # corrupt three symbols to far-away classes: beyond any t=1 guarantee
    for pos in (0, 5, 9):
        rec[pos] = (12, 0, 0, 0) if rec[pos] != (12, 0, 0, 0) else (0, 12, 0, 0)
    try:
        res = code.decode(rec)
        # a miscorrection may still return; it must not equal the original
        assert res.word != [tuple(v) for v in word]
    except DecodeFailure:
        pass


def test_spec_validation():
    with pytest.raises(ValueError):
        build(LmpeCodeSpec(variant="nonsense", k=12, l=1, t=1))
    with pytest.raises(ValueError):
        build(LmpeCodeSpec(variant="remainder", k=4, l=1, t=1, q=27, r=2))
    with pytest.raises(ValueError):
        build(LmpeCodeSpec(variant="reduced", k=44, l=5, t=1, w=1))


def test_message_dimension_checks():
    code = build(EX1)
    with pytest.raises(ValueError):
        code.encode(Message([(3, 3, 3, 3)] * 5, [0, 0]))
    with pytest.raises(ValueError):
        code.encode(Message([(3, 3, 3, 3)] * 26, [0]))
    with pytest.raises(ValueError):
        code.encode(Message([(3, 3, 3, 3)] * 26, [0, code.quotient_messages]))
