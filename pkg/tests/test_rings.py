import pytest
from hypothesis import given
from hypothesis import strategies as st

from kazcalc.errors import UsageError
from kazcalc.rings import (
    EulerVerdict,
    FormalBundle,
    bo,
    bso,
    bso_even_split_series,
    bso_stable,
    euler_class_nonzero,
    morin_base_ring,
    space_series,
)
from kazcalc.series import GradedRingSpec, geometric_factor

from .oracles import partitions_into, ring_coeffs


def test_bso_examples():
    assert list(space_series(bso(3), 8).coeffs) == [1, 0, 0, 0, 1, 0, 0, 0, 1]
    assert list(space_series(bso(2), 6).coeffs) == [1, 0, 1, 0, 1, 0, 1]
    assert space_series(bso_stable(), 8)[8] == 2


def test_bso_stable_counts_partitions():
    s = space_series(bso_stable(), 60)
    for n in range(61):
        expect = partitions_into(range(4, 61, 4), n) if n % 4 == 0 else 0
        assert s[n] == expect


@pytest.mark.parametrize("k", range(1, 12))
def test_bso_generators_by_hand(k):
    ell = k // 2
    if k % 2:
        degs = [4 * i for i in range(1, ell + 1)]
    else:
        degs = [4 * i for i in range(1, ell)] + [k]
    assert list(space_series(bso(k), 40).coeffs) == ring_coeffs(degs, 40)


def test_morin_base_ring_examples():
    assert morin_base_ring(2) == GradedRingSpec.polynomial(4)
    assert morin_base_ring(3) == GradedRingSpec.polynomial(4)
    assert morin_base_ring(1) == GradedRingSpec()


@pytest.mark.parametrize("fn", [bso, bo])
def test_k_zero_refused(fn):
    with pytest.raises(UsageError):
        fn(0)


@pytest.mark.parametrize("ell", range(1, 11))
def test_even_bso_presentations_agree(ell):
    k = 2 * ell
    assert space_series(bso(k), 60) == bso_even_split_series(k, 60)


@given(st.integers(1, 20))
def test_bo_is_odd_bso(k):
    assert space_series(bo(k), 40) == space_series(bso(2 * (k // 2) + 1), 40)


@given(st.integers(1, 20))
def test_bso_dominates_bo(k):
    assert space_series(bo(k), 40).dominated_by(space_series(bso(k), 40))


def test_bso2_is_geometric():
    assert space_series(bso(2), 30) == geometric_factor(2, 30)


def test_euler_examples():
    assert euler_class_nonzero(FormalBundle(0, (2,))) == EulerVerdict.YES
    assert euler_class_nonzero(FormalBundle(1, (5,))) == EulerVerdict.NO
    for r in range(1, 6):
        assert euler_class_nonzero(FormalBundle(r, (2,) * r)) == EulerVerdict.NO


def test_euler_odd_rank_and_nonorientable():
    assert euler_class_nonzero(FormalBundle(0, (3,))) == EulerVerdict.NO
    assert euler_class_nonzero(FormalBundle(0, (2,), ("g1xgk",))) == EulerVerdict.NOT_APPLICABLE
    assert euler_class_nonzero(FormalBundle()) == EulerVerdict.YES


@pytest.mark.parametrize("text", ["e1+so2+~g1xgk", "so4", "e3", "0", "so2+so2+~gk"])
def test_bundle_round_trip(text):
    assert str(FormalBundle.parse(text)) == text


def test_bundle_parse_rejects_garbage():
    with pytest.raises(UsageError):
        FormalBundle.parse("so2+banana")
