"""Left-right bordism series, framed bordism ranks and the torsion reporters."""
from __future__ import annotations

from dataclasses import dataclass

from sympy import nextprime
from sympy.functions.combinatorial.numbers import partition

from .errors import UsageError
from .kazarian import SingularityFamily, kazarian_homology_series
from .rings import bso_stable, space_series
from .series import TruncatedSeries, mul


def sp_series(profile: dict, N: int) -> TruncatedSeries:
    """Poincare series of the infinite symmetric product of a space.

    ``profile`` maps degree to rational Betti number.  Degree 0 is ignored
    (reduced convention); each class in even degree i contributes
    ``1/(1-t^i)``, each class in odd degree ``1+t^i``.
    """
    out = [0] * (N + 1)
    out[0] = 1
    for i, b in sorted(profile.items()):
        if b < 0:
            raise UsageError(f"negative Betti number at degree {i}")
        if i < 1 or i > N or not b:
            continue
        for _ in range(b):
            if i % 2 == 0:
                for n in range(i, N + 1):
                    out[n] += out[n - i]
            else:
                for n in range(N, i - 1, -1):
                    out[n] += out[n - i]
    return TruncatedSeries(tuple(out))


def wedge(a: dict, b: dict) -> dict:
    """Betti profile of a one-point union (reduced Betti numbers add)."""
    out = dict(a)
    for i, v in b.items():
        out[i] = out.get(i, 0) + v
    return out


def f_tau_profile(family: SingularityFamily, N: int) -> dict:
    """Betti numbers of ``S^k(K_tau^+)``: ``b_i = b_{i-k}(K_tau)`` for i >= k."""
    k = family.codim
    if N < k:
        return {}
    K = kazarian_homology_series(family, N - k)
    return {i + k: b for i, b in enumerate(K) if b}


def f_tau(family: SingularityFamily, N: int) -> TruncatedSeries:
    return sp_series(f_tau_profile(family, N), N)


def bordism_generating_function(family: SingularityFamily, N: int) -> TruncatedSeries:
    """``tau(t) = F_tau(t) * P_BSO(t)``; ``rank Bord_tau(n)`` sits at ``t^(n+k)``."""
    return mul(f_tau(family, N), space_series(bso_stable(), N))


def bordism_rank(family: SingularityFamily, n: int, N: int | None = None) -> int:
    d = n + family.codim
    return bordism_generating_function(family, max(N or 0, d))[d]


def framed_bordism_rank(family: SingularityFamily, n: int, N: int | None = None) -> int:
    """``rank Omega_n(K_tau) (x) Q``: ``H_*(K_tau)`` convolved with ``H_*(BSO)``."""
    if n < 0:
        return 0
    N = max(N or 0, n)
    return mul(kazarian_homology_series(family, N), space_series(bso_stable(), N))[n]


def alpha3(x: int) -> int:
    """Sum of the base-3 digits of x."""
    if x < 0:
        raise UsageError("alpha3 is defined on naturals")
    s = 0
    while x:
        x, d = divmod(x, 3)
        s += d
    return s


@dataclass(frozen=True)
class FoldTorsionReport:
    m: int
    t: int
    rank_part: int

    @property
    def torsion_descriptor(self) -> str:
        return f"3-primary cyclic of parameter t(m)={self.t}"

    def minimal(self) -> bool:
        """Both defining clauses of t(m), re-checked from scratch."""
        two_m = 2 * self.m
        return alpha3(two_m + self.t) <= 3 * self.t and all(
            alpha3(two_m + j) > 3 * j for j in range(self.t)
        )


def fold_t(m: int) -> int:
    """``t(m) = min { j : alpha3(2m + j) <= 3j }``."""
    if m < 1:
        raise UsageError(f"m must be >= 1, got {m}")
    j = 0
    while alpha3(2 * m + j) > 3 * j:
        j += 1
    return j


def fold_torsion(m: int) -> FoldTorsionReport:
    """Fold maps of ``(4m-1)``-manifolds in codimension ``2m-1``."""
    return FoldTorsionReport(m, fold_t(m), oriented_bordism_rank(4 * m - 1))


def oriented_bordism_rank(d: int) -> int:
    """``rank Omega_d (x) Q``: partitions of d/4 when 4 | d, else 0."""
    if d < 0:
        return 0
    return int(partition(d // 4)) if d % 4 == 0 else 0


def safe_prime_bound(n: int) -> int:
    """Smallest prime p with p > n/2 + 1.

    For this and every larger prime the p-components of ``Cob_tau(n, k)``
    and ``H_n(K_tau)`` agree.
    """
    if n < 2:
        raise UsageError(f"the safe-prime bound needs n >= 2, got {n}")
    # primes > n/2 + 1 are exactly the primes > floor(n/2 + 1) when n is odd
    return int(nextprime((n + 2) // 2))

