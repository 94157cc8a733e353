import pytest
from hypothesis import given
from hypothesis import strategies as st

from kazcalc.errors import CancellationMismatch, UsageError
from kazcalc.kazarian import (
    EINF,
    StratumSpec,
    apply_d1,
    build_e1,
    check_custom_degenerate,
    custom,
    e_infinity,
    kazarian_homology_series,
    make_family,
    morin,
    parity_blocks,
    prim,
    sigma1r,
    truncated_homology_series,
)
from kazcalc.rings import bo, bso, space_series
from kazcalc.series import GradedRingSpec, TruncatedSeries, geometric_factor, monomial, shift

N = 60


def test_e1_examples():
    assert build_e1(prim(3), N).column(2) == shift(geometric_factor(4, N), 8)
    assert build_e1(morin(3), N).column(1).is_zero()
    assert build_e1(morin(2), N).column(2) == shift(geometric_factor(4, N), 8)


def test_e1_columns_stop_at_truncation():
    page = build_e1(prim(3), 20)
    assert sorted(page.columns) == [0, 1, 2, 3, 4, 5]
    assert sorted(build_e1(sigma1r(3, 2), 60).columns) == [0, 1, 2]


def test_parity_block_examples():
    assert parity_blocks(morin(3), 40) == [[0, 2, 4, 6, 8, 10]]
    assert parity_blocks(prim(2), 12) == [[0], [1], [2], [3], [4]]
    even = custom(2, [StratumSpec(0, 0, GradedRingSpec.polynomial(4)), StratumSpec(1, 6, GradedRingSpec.polynomial(4))])
    assert parity_blocks(even) == [[0, 1]]


def test_d1_examples():
    g4 = geometric_factor(4, N)
    page = e_infinity(prim(2), N)
    assert page.column(0) == g4
    assert all(page.column(i).is_zero() for i in page.columns if i)
    assert e_infinity(morin(2), N).column(0) == g4
    s = e_infinity(sigma1r(2, 1), N)
    assert s.column(0) == g4 and s.column(1).is_zero()


def test_homology_examples():
    assert kazarian_homology_series(prim(1), N) == space_series(bso(2), N)
    assert kazarian_homology_series(morin(2), N) == space_series(bo(2), N)
    assert kazarian_homology_series(morin(3), N) == space_series(bo(4), N)


def test_truncated_examples():
    assert truncated_homology_series(sigma1r(1, 1), N) == TruncatedSeries.one(N)
    # the surviving column-2 generator sits in degree 8, next to p1^2 from column 0
    assert e_infinity(sigma1r(2, 2), N).column(2)[8] == 1
    assert truncated_homology_series(sigma1r(2, 2), N)[8] == 2
    g4 = geometric_factor(4, N)
    assert truncated_homology_series(sigma1r(3, 2), N) == g4 * (TruncatedSeries.one(N) + monomial(8, N))


def test_truncated_needs_sigma1r():
    with pytest.raises(UsageError):
        truncated_homology_series(morin(3), N)


@pytest.mark.parametrize("k", range(1, 10))
def test_prim_is_bso_next(k):
    assert kazarian_homology_series(prim(k), N) == space_series(bso(k + 1), N)


@pytest.mark.parametrize("k", range(1, 10))
def test_morin_is_bo(k):
    expect = bo(k) if k % 2 == 0 else bo(k + 1)
    assert kazarian_homology_series(morin(k), N) == space_series(expect, N)


def _all_families():
    fams = [prim(k) for k in range(1, 10)] + [morin(k) for k in range(1, 10)]
    fams += [sigma1r(k, r) for k in range(1, 10) for r in range(0, 11)]
    fams += [prim(k, r) for k in range(1, 7) for r in range(0, 6)]
    return fams


@pytest.mark.parametrize("fam", _all_families(), ids=lambda f: f.label)
def test_page_invariants(fam):
    e1, einf = build_e1(fam, N), e_infinity(fam, N)
    assert e1.parity_violations() == []
    assert einf.parity_violations() == []
    for i in e1.columns:
        assert einf.column(i).dominated_by(e1.column(i))
    if fam.codim % 2:
        assert einf.columns == e1.columns


@pytest.mark.parametrize("k", range(1, 10))
def test_morin_columns_below_prim(k):
    pm, pp = build_e1(morin(k), N), build_e1(prim(k), N)
    for i in pm.columns:
        assert pm.column(i).dominated_by(pp.column(i))


@pytest.mark.parametrize("k", [2, 4, 6, 8])
def test_even_cancellations_are_exact(k):
    page = e_infinity(prim(k), N)
    for step in page.steps:
        assert step.target == step.source + 1


def test_cancellation_mismatch_is_detected():
    page = build_e1(morin(2), 30)
    cols = dict(page.columns)
    cols[1] = cols[1] + monomial(13, 30)  # break the A-part of column 1
    broken = type(page)(page.page_number, 30, cols, page.codims)
    with pytest.raises(CancellationMismatch):
        apply_d1(broken, morin(2))


@given(st.integers(1, 9), st.integers(0, 10))
def test_truncation_is_monotone(k, r):
    # adding strata never lowers E1
    a, b = build_e1(sigma1r(k, r), 40), build_e1(sigma1r(k, r + 1), 40)
    assert a.total().dominated_by(b.total())


def test_custom_single_block_passes():
    fam = custom(2, [StratumSpec(0, 0, GradedRingSpec.polynomial(4, 2)), StratumSpec(1, 6, GradedRingSpec.polynomial(4), 2)])
    check_custom_degenerate(fam, N)
    assert e_infinity(fam, N).page_number == EINF
    assert e_infinity(fam, N).total() == build_e1(fam, N).total()


def test_custom_non_degenerate_is_rejected():
    # column 1 sits in odd degrees starting at 3; column 0 has degree 2, which can hit degree 3
    fam = custom(2, [StratumSpec(0, 0, GradedRingSpec.polynomial(2)), StratumSpec(1, 3, GradedRingSpec.polynomial(4))])
    with pytest.raises(UsageError, match="not block-degenerate"):
        check_custom_degenerate(fam, N)


def test_custom_two_blocks_without_collisions_pass():
    # column 0 only in degree 0, column 1 at degree 5 and up: nothing can hit
    fam = custom(3, [StratumSpec(0, 0), StratumSpec(1, 5, GradedRingSpec.polynomial(4))])
    assert len(parity_blocks(fam, N)) == 2
    check_custom_degenerate(fam, N)


def test_custom_odd_generator_rejected():
    fam = custom(2, [StratumSpec(0, 0, GradedRingSpec.polynomial(3))])
    with pytest.raises(UsageError):
        check_custom_degenerate(fam, N)


def test_empty_custom_family():
    fam = custom(2, [])
    assert build_e1(fam, N).columns == {}
    assert kazarian_homology_series(fam, N).is_zero()


def test_family_validation():
    with pytest.raises(UsageError):
        make_family("zigzag", 2)
    with pytest.raises(UsageError):
        make_family("sigma1r", 2)
    with pytest.raises(UsageError):
        morin(0)
    with pytest.raises(UsageError):
        custom(2, [StratumSpec(1, 3), StratumSpec(0, 0)])
