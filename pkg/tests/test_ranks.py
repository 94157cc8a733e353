import pytest
from hypothesis import given
from hypothesis import strategies as st

from kazcalc.errors import UsageError
from kazcalc.kazarian import StratumSpec, build_e1, custom, morin, prim, sigma1r
from kazcalc.ranks import (
    Splitting,
    TargetProfile,
    closed_form_series,
    cob_rank,
    cob_rank_closed,
    cob_rank_over_target,
    decomposition_B_ranks,
    elimination_obstruction_rank,
    imm_rank,
    morin_splitting_identity_check,
    postnikov_tower,
    splitting_verdict,
    tower_e1_table,
)
from kazcalc.rings import EulerVerdict, FormalBundle, bso, space_series
from kazcalc.series import GradedRingSpec

E = TargetProfile.euclidean
S2, S4 = TargetProfile.sphere(2), TargetProfile.sphere(4)


def test_cob_rank_examples():
    assert cob_rank(morin(1), 4) == 1
    assert cob_rank(morin(2), 3) == 0
    assert cob_rank(prim(1), 2) == 1


def test_cob_rank_closed_examples():
    assert cob_rank_closed(morin(2), 8) == 1
    assert cob_rank_closed(sigma1r(3, 2), 8) == 2
    assert cob_rank_closed(sigma1r(2, 1), 4) == 1


def test_negative_dimension_is_zero():
    assert cob_rank(morin(3), -1) == 0


def _families():
    fams = [prim(k) for k in range(1, 10)] + [morin(k) for k in range(1, 10)]
    fams += [sigma1r(k, r) for k in range(1, 10) for r in range(0, 11)]
    fams += [prim(k, r) for k in range(1, 10) for r in range(0, 11)]
    return fams


@pytest.mark.parametrize("fam", _families(), ids=lambda f: f.label)
def test_engine_matches_closed_form(fam):
    from kazcalc.kazarian import kazarian_homology_series

    assert kazarian_homology_series(fam, 60) == closed_form_series(fam, 60)


def test_over_target_examples():
    assert cob_rank_over_target(morin(1), E(5)) == 1
    assert cob_rank_over_target(morin(1), TargetProfile.empty(5)) == 0


def test_closed_sphere_target():
    # H^4(S^4) pairs with H_3(K) = 0 and H^0 is below the degree-k cutoff
    assert cob_rank_over_target(morin(1), S4) == 0
    # S^5 with k=1: j=5 pairs with H_4(BO(2)) = 1
    assert cob_rank_over_target(morin(1), TargetProfile.sphere(5)) == 1


@given(st.integers(1, 9), st.integers(0, 40))
def test_euclidean_target_is_cob_rank(k, n):
    for fam in (prim(k), morin(k)):
        assert cob_rank_over_target(fam, E(n + k)) == cob_rank(fam, n)


def test_imm_rank_examples():
    assert imm_rank(morin(3).stratum(2), 3, E(11)) == 1
    for k in range(1, 6):
        for n in range(0, 20):
            assert imm_rank(morin(k).stratum(0), k, E(n + k)) == space_series(bso(k), 20)[n]
    assert imm_rank(morin(3).stratum(2), 3, TargetProfile.empty(11)) == 0


def test_obstruction_examples():
    assert elimination_obstruction_rank(sigma1r(3, 2), 2, E(11)) == 1
    with pytest.raises(UsageError):
        elimination_obstruction_rank(sigma1r(3, 2), 0, E(11))
    with pytest.raises(UsageError):
        elimination_obstruction_rank(sigma1r(3, 2), 1, E(11))


def test_obstruction_morin_even_parity():
    # stratum 1 of k=2 sits in total degrees 3 + 2 + 4j, so only n = 1 mod 4 can carry rank
    fam = sigma1r(2, 1)
    ranks = {n: elimination_obstruction_rank(fam, 1, E(n + 2)) for n in range(0, 30)}
    assert all(v == 0 for n, v in ranks.items() if n % 2 == 0)
    assert ranks[3] == 1 and ranks[7] == 1 and ranks[5] == 0


def test_decomposition_examples():
    assert decomposition_B_ranks(sigma1r(3, 2), 11) == 1
    assert decomposition_B_ranks(sigma1r(3, 2), 2) == 0
    assert all(decomposition_B_ranks(sigma1r(2, 1), m) == 0 for m in range(0, 64))


def test_decomposition_untruncated_needs_r():
    with pytest.raises(UsageError):
        decomposition_B_ranks(morin(3), 11)


@pytest.mark.parametrize("k", [2, 4, 6, 8])
def test_decomposition_even_morin_vanishes(k):
    for r in range(1, 8):
        assert all(decomposition_B_ranks(morin(k), m, r=r) == 0 for m in range(0, 64))


def test_splitting_examples():
    for r in range(1, 5):
        rep = splitting_verdict(prim(2), r)
        assert rep.verdict == Splitting.UNKNOWN
        assert rep.source_euler == EulerVerdict.NO
    so2 = custom(2, [StratumSpec(0, 0), StratumSpec(1, 4, source_bundle=FormalBundle(0, (2,)))])
    assert splitting_verdict(so2, 1).verdict == Splitting.SPLITS
    rep = splitting_verdict(morin(3), 2)
    assert rep.verdict == Splitting.UNKNOWN
    assert rep.source_euler == EulerVerdict.NOT_APPLICABLE


def test_splitting_reports_last_column():
    rep = splitting_verdict(morin(3), 2, 30)
    assert rep.last_column == build_e1(sigma1r(3, 2), 30).column(2)


def test_splitting_never_says_no():
    for k in range(1, 6):
        for r in range(1, 6):
            assert splitting_verdict(morin(k), r).verdict in (Splitting.SPLITS, Splitting.UNKNOWN)


def test_tower_examples():
    t = postnikov_tower(morin(3), 4)
    assert t.stages == ((0, 2, 4),)
    assert t.bottom_degrees == {0: 3, 2: 11, 4: 19}
    assert len(postnikov_tower(prim(2), 2)) == 3
    t0 = postnikov_tower(morin(5), 0)
    assert t0.stages == ((0,),) and t0.bottom_degrees == {0: 5}


def test_tower_table_row_zero_is_imm_rank():
    t = postnikov_tower(morin(3), 2)
    table = tower_e1_table(t, E(11), 3)
    assert table[(2, 0)] == imm_rank(morin(3).stratum(2), 3, E(11))
    assert table[(0, 0)] == space_series(bso(3), 8)[8]


def test_splitting_identity_examples():
    assert morin_splitting_identity_check(3, 2, 8)
    assert cob_rank_over_target(sigma1r(3, 2), E(11)) == 2
    assert all(morin_splitting_identity_check(1, 0, n) for n in range(30))
    assert morin_splitting_identity_check(5, 4, 20)


@given(st.sampled_from([1, 3, 5, 7]), st.integers(0, 8), st.integers(0, 40),
       st.sampled_from([None, S2, S4, S2.product(S2)]))
def test_splitting_identity_property(k, r, n, closed):
    target = None if closed is None or closed.dim > n + k else closed.times_euclidean(n + k - closed.dim)
    assert morin_splitting_identity_check(k, r, n, target)


def test_splitting_identity_rejects_even_k():
    with pytest.raises(UsageError):
        morin_splitting_identity_check(2, 1, 4)


def test_target_profile_basics():
    assert S2.product(S2).betti == (1, 0, 2, 0, 1)
    assert E(3).pairing_ranks() == (0, 0, 0, 1)
    assert S2.times_euclidean(2).pairing_ranks() == (0, 0, 1, 0, 1)
    with pytest.raises(UsageError):
        TargetProfile((1, -1))
