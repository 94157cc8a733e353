"""Cobordism ranks, target-manifold formulas, obstructions and tower data.

Targets are given by rational Betti numbers only.  For a target ``P`` the
computations pair against the reduced cohomology of its one-point
compactification: for a closed ``P`` (or a finite complex) that is
``H^*(P)`` itself; for an open oriented manifold it is compactly supported
cohomology, ``rank H^j_c(P) = b^{q-j}(P)`` by Poincare duality.  So the
Euclidean profile ``[1, 0, ..., 0]`` picks out the top degree and
``cob_rank_over_target`` reduces to ``cob_rank``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import UsageError
from .kazarian import (
    CUSTOM,
    MORIN,
    PRIM,
    SIGMA1R,
    SingularityFamily,
    StratumSpec,
    e_infinity,
    kazarian_homology_series,
    morin,
    parity_blocks,
    sigma1r,
)
from .rings import EulerVerdict, bo, bso, euler_class_nonzero, morin_base_ring, space_series
from .series import TruncatedSeries, finite_geometric, ring_series, shift


@dataclass(frozen=True)
class TargetProfile:
    """Betti numbers ``b^0..b^q`` of a target ``P^q``.

    ``compact=False`` marks an open oriented manifold (e.g. ``R^q`` or
    ``S^2 x R^m``).
    """

    betti: tuple
    compact: bool = True

    def __post_init__(self):
        betti = tuple(int(b) for b in self.betti)
        if not betti:
            raise UsageError("a target profile needs at least b^0")
        if any(b < 0 for b in betti):
            raise UsageError("Betti numbers must be non-negative")
        object.__setattr__(self, "betti", betti)

    @property
    def dim(self) -> int:
        return len(self.betti) - 1

    @classmethod
    def euclidean(cls, q: int) -> "TargetProfile":
        return cls((1,) + (0,) * q, compact=False)

    @classmethod
    def sphere(cls, d: int) -> "TargetProfile":
        if d < 1:
            raise UsageError("sphere dimension must be >= 1")
        return cls((1,) + (0,) * (d - 1) + (1,))

    @classmethod
    def empty(cls, q: int) -> "TargetProfile":
        return cls((0,) * (q + 1))

    def product(self, other: "TargetProfile") -> "TargetProfile":
        """Kunneth product of two profiles."""
        out = [0] * (self.dim + other.dim + 1)
        for i, a in enumerate(self.betti):
            for j, b in enumerate(other.betti):
                out[i + j] += a * b
        return TargetProfile(tuple(out), self.compact and other.compact)

    def times_euclidean(self, m: int) -> "TargetProfile":
        """``P x R^m``."""
        if m == 0:
            return self
        return self.product(TargetProfile.euclidean(m))

    def pairing_ranks(self) -> tuple:
        """Ranks of the reduced cohomology of the one-point compactification."""
        if self.compact:
            return self.betti
        return tuple(reversed(self.betti))


def _need(N, n):
    return max(N or 0, n, 0)


def cob_rank(family: SingularityFamily, n: int, N: int | None = None) -> int:
    """``rank Cob_tau(n, k) (x) Q``, from the spectral-sequence engine."""
    if n < 0:
        return 0
    return kazarian_homology_series(family, _need(N, n))[n]


def closed_form_series(family: SingularityFamily, N: int) -> TruncatedSeries:
    """``H_*(K_tau; Q)`` from the known answers, without running the sequence."""
    k = family.codim
    if family.kind == PRIM:
        if family.top is None:
            return space_series(bso(k + 1), N)
        if k % 2:
            return ring_series(morin_base_ring(k), N) * finite_geometric(k + 1, family.top + 1, N)
        # k even: only A survives in column 0, plus the chi-part of the top column
        A = ring_series(morin_base_ring(k), N)
        return A + shift(A, family.top * (k + 1) + k)
    if family.kind == MORIN:
        return space_series(bo(k if k % 2 == 0 else k + 1), N)
    if family.kind == SIGMA1R:
        r = family.top
        A = ring_series(morin_base_ring(k), N)
        if k % 2:
            return A * finite_geometric(2 * (k + 1), r // 2 + 1, N)
        if r % 2:
            return A
        return A + shift(A, r * (k + 1) + k)
    # custom families are degenerate by construction
    out = TruncatedSeries.zero(N)
    for st in family.strata:
        out = out + st.column_series(N)
    return out


def cob_rank_closed(family: SingularityFamily, n: int, N: int | None = None) -> int:
    if n < 0:
        return 0
    return closed_form_series(family, _need(N, n))[n]


def _pair(target: TargetProfile, s: TruncatedSeries, offset: int) -> int:
    # sum_j rank H~^j(P+) * coeff_{j - offset}(s), j >= offset
    ranks = target.pairing_ranks()
    return sum(b * s[j - offset] for j, b in enumerate(ranks) if j >= offset and b)


def cob_rank_over_target(family: SingularityFamily, target: TargetProfile) -> int:
    """``rank Cob_tau(P) (x) Q = sum_j rank H^j(P; H_{j-k}(K_tau))``."""
    k = family.codim
    q = target.dim
    if q < k:
        return 0
    K = kazarian_homology_series(family, q - k)
    return _pair(target, K, k)


def imm_rank(stratum: StratumSpec, k: int, target: TargetProfile) -> int:
    """Rank of ``Imm^{xi~}(P) (x) Q = Hom(H^*(T xi~), H^*(P))``.

    The Thom space of the target normal bundle has bottom degree c_i + k and
    the same base ring as the source column.
    """
    q = target.dim
    T = stratum.thom_target_series(k, q)
    return _pair(target, T, 0)


def elimination_obstruction_rank(
    family: SingularityFamily, r: int, target: TargetProfile
) -> int:
    """Rank of the group holding the complete obstruction to removing stratum r."""
    if r < 1:
        raise UsageError("r must be >= 1: there is nothing above the regular stratum to eliminate")
    if family.top is not None and r != family.top:
        raise UsageError(f"r={r} is not the top stratum of {family.label}")
    return imm_rank(family.stratum(r), family.codim, target)


def decomposition_B_ranks(
    family: SingularityFamily, m: int, r: int | None = None, N: int | None = None
) -> int:
    """``pi_m(B) (x) Q``: degree ``m - k`` of column r of E-infinity.

    ``r`` defaults to the top stratum of a truncated family.
    """
    k = family.codim
    if r is None:
        r = family.top
        if r is None:
            raise UsageError(f"{family.label} is untruncated; pass the column r")
    d = m - k
    if d < 0:
        return 0
    page = e_infinity(family, _need(N, d))
    return page.column(r)[d]


class Splitting(str, Enum):
    SPLITS = "splits"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SplittingReport:
    verdict: Splitting
    source_euler: EulerVerdict
    target_euler: EulerVerdict
    last_column: TruncatedSeries


def splitting_verdict(
    family: SingularityFamily, r: int, N: int = 60
) -> SplittingReport:
    """Rational splitting of the key fibration for the top stratum r.

    Only a sufficient criterion is available, so the verdict is ``splits``
    or ``unknown``; the E-infinity last column is reported with it.
    """
    if r < 1:
        raise UsageError("r must be >= 1 (the regular stratum has no key fibration)")
    fam = family.truncated(r)
    st = fam.stratum(r)
    if st.source_bundle is None and st.target_bundle is None:
        raise UsageError(f"stratum {r} of {family.label} carries no bundle descriptors")
    src = euler_class_nonzero(st.source_bundle) if st.source_bundle else EulerVerdict.NOT_APPLICABLE
    tgt = euler_class_nonzero(st.target_bundle) if st.target_bundle else EulerVerdict.NOT_APPLICABLE
    verdict = Splitting.SPLITS if EulerVerdict.YES in (src, tgt) else Splitting.UNKNOWN
    last = e_infinity(fam, N).column(r)
    return SplittingReport(verdict, src, tgt, last)


@dataclass(frozen=True)
class TowerDescription:
    """Stages of the simplified Postnikov-like tower.

    Each stage is a parity block of strata; ``bottom_degrees[i]`` is the
    bottom degree ``c_i + k`` of the Thom space of the target normal bundle.
    """

    family: SingularityFamily
    stages: tuple
    bottom_degrees: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.stages)


def postnikov_tower(family: SingularityFamily, r: int | None = None) -> TowerDescription:
    k = family.codim
    if r is None:
        r = family.top
        if r is None:
            raise UsageError(f"{family.label} is untruncated; pass r")
    fam = family.truncated(r)
    # columns with c_i > r(k+1) can't occur after truncation, so size N by the top
    N = max((fam.stratum(i).source_codim for i in _indices(fam)), default=0)
    blocks = parity_blocks(fam, N)
    bottoms = {i: fam.stratum(i).source_codim + k for b in blocks for i in b}
    return TowerDescription(fam, tuple(tuple(b) for b in blocks), bottoms)


def _indices(fam):
    if fam.kind == CUSTOM:
        return [s.index for s in fam.strata]
    return range(fam.top + 1)


def tower_e1_table(tower: TowerDescription, target: TargetProfile, j_max: int) -> dict:
    """``E1^{i,j} = rank Imm^{zeta_i}(P x R^j) (x) Q`` for the tower's strata."""
    fam = tower.family
    k = fam.codim
    out = {}
    for stage in tower.stages:
        for i in stage:
            st = fam.stratum(i)
            for j in range(j_max + 1):
                out[(i, j)] = imm_rank(st, k, target.times_euclidean(j))
    return out


def morin_splitting_identity_check(
    k: int, r: int, n: int, target: TargetProfile | None = None
) -> bool:
    """Odd codimension: ``Cob(P) (x) Q`` equals the sum of the even-strata immersion groups."""
    if k % 2 == 0:
        raise UsageError("the product decomposition holds for odd k only")
    if target is None:
        target = TargetProfile.euclidean(n + k)
    elif target.dim != n + k:
        raise UsageError(f"target has dimension {target.dim}, expected n+k={n + k}")
    lhs = cob_rank_over_target(sigma1r(k, r), target)
    fam = morin(k)
    rhs = sum(imm_rank(fam.stratum(i), k, target) for i in range(0, r + 1, 2))
    return lhs == rhs
