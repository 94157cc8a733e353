import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import isprime

from kazcalc.bordism import (
    alpha3,
    bordism_generating_function,
    bordism_rank,
    f_tau,
    fold_t,
    fold_torsion,
    framed_bordism_rank,
    oriented_bordism_rank,
    safe_prime_bound,
    sp_series,
    wedge,
)
from kazcalc.errors import UsageError
from kazcalc.kazarian import StratumSpec, custom, kazarian_homology_series, morin, prim, sigma1r
from kazcalc.rings import bso_stable, space_series
from kazcalc.series import TruncatedSeries, exterior_factor, geometric_factor

from .oracles import convolve, partitions_into

N = 40
POINT = {1: custom(1, [StratumSpec(0, 0)]), 2: custom(2, [StratumSpec(0, 0)])}


def test_sp_examples():
    assert sp_series({2: 1}, N) == geometric_factor(2, N)
    assert sp_series({3: 1}, N) == exterior_factor(3, N)
    assert sp_series({}, N) == TruncatedSeries.one(N)


def test_f_tau_examples():
    assert f_tau(POINT[1], N) == exterior_factor(1, N)
    assert f_tau(POINT[2], N) == geometric_factor(2, N)
    expect = TruncatedSeries.one(N)
    for d in range(1, N + 1, 2):
        expect = expect * exterior_factor(d, N)
    assert f_tau(prim(1), N) == expect


def test_bordism_examples():
    assert bordism_rank(POINT[1], 3) == 1
    for fam in (morin(2), prim(3), sigma1r(3, 2)):
        assert bordism_rank(fam, 0) == f_tau(fam, 10)[fam.codim]


def test_framed_examples():
    assert framed_bordism_rank(morin(2), 4) == 2
    assert framed_bordism_rank(prim(1), 2) == 1
    for fam in (morin(1), prim(4), sigma1r(5, 3)):
        assert framed_bordism_rank(fam, 0) == 1


def test_alpha3_examples():
    assert alpha3(0) == 0 and alpha3(9) == 1 and alpha3(17) == 5


def test_fold_examples():
    assert fold_t(1) == 1 and fold_t(8) == 2
    rep = fold_torsion(1)
    assert rep.t == 1 and rep.minimal()
    assert "t(m)=1" in rep.torsion_descriptor
    with pytest.raises(UsageError):
        fold_t(0)


def test_fold_rank_part():
    # rank of Omega_{4m-1} is always zero rationally
    assert all(fold_torsion(m).rank_part == 0 for m in range(1, 50))


def test_oriented_bordism_rank_is_partition_count():
    for d in range(0, 81):
        expect = partitions_into(range(4, 81, 4), d) if d % 4 == 0 else 0
        assert oriented_bordism_rank(d) == expect
        assert space_series(bso_stable(), 80)[d] == expect


def test_safe_prime_examples():
    assert safe_prime_bound(2) == 3
    assert safe_prime_bound(10) == 7
    assert safe_prime_bound(3) == 3
    with pytest.raises(UsageError):
        safe_prime_bound(1)


@given(st.integers(2, 500))
def test_safe_prime_is_least(n):
    p = safe_prime_bound(n)
    assert isprime(p) and p > n / 2 + 1
    assert not any(isprime(q) and q > n / 2 + 1 for q in range(2, p))


@given(st.integers(1, 10_000))
def test_fold_minimality(m):
    assert fold_torsion(m).minimal()


profiles = st.dictionaries(st.integers(1, 20), st.integers(0, 3), max_size=4)


@given(profiles, profiles)
def test_sp_multiplicative(a, b):
    assert sp_series(wedge(a, b), N) == sp_series(a, N) * sp_series(b, N)


def test_framed_against_double_loop():
    rng = random.Random(7)
    fams = [prim(k) for k in range(1, 7)] + [morin(k) for k in range(1, 7)]
    for _ in range(100):
        fam = rng.choice(fams)
        n = rng.randint(0, N)
        K = kazarian_homology_series(fam, N)
        B = [oriented_bordism_rank(d) for d in range(N + 1)]
        assert framed_bordism_rank(fam, n) == convolve(K, B, n)


@pytest.mark.parametrize("fam", [prim(1), prim(2), morin(3), morin(4), sigma1r(3, 2)], ids=lambda f: f.label)
def test_bordism_series_nonnegative(fam):
    assert bordism_generating_function(fam, N).is_nonnegative()
