"""Rank-level Kazarian spectral sequence of a singularity family.

Column ``i`` of the E1 page is the rational cohomology of the Thom space of
the source normal bundle of the i-th stratum, graded by total degree.  For
codimension k odd everything sits in even degrees and the sequence
degenerates.  For k even the only differentials are d1, and they are
bookkept as exact series cancellations: the Euler-class part of column i
kills the A-part of column i+1, shifted up one degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache

from .errors import CancellationMismatch, UsageError
from .rings import FormalBundle, bso, morin_base_ring, ring_spec
from .series import GradedRingSpec, TruncatedSeries, ring_series, shift

PRIM = "prim"
MORIN = "morin"
SIGMA1R = "sigma1r"
CUSTOM = "custom"
FAMILY_KINDS = (PRIM, MORIN, SIGMA1R, CUSTOM)

E1 = 1
EINF = "inf"


@dataclass(frozen=True)
class StratumSpec:
    index: int
    source_codim: int
    column_base: GradedRingSpec = GradedRingSpec()
    extra_shift: int = 0
    zero_column: bool = False
    source_bundle: FormalBundle | None = None
    target_bundle: FormalBundle | None = None

    def __post_init__(self):
        if self.index < 0 or self.source_codim < 0 or self.extra_shift < 0:
            raise UsageError(f"stratum {self.index}: negative index/codim/shift")

    @property
    def bottom_degree(self) -> int:
        return self.source_codim + self.extra_shift

    def column_series(self, N: int) -> TruncatedSeries:
        if self.zero_column:
            return TruncatedSeries.zero(N)
        return shift(ring_series(self.column_base, N), self.bottom_degree)

    def thom_target_series(self, k: int, N: int) -> TruncatedSeries:
        """Cohomology ranks of the Thom space of the target normal bundle (rank c_i + k)."""
        if self.zero_column:
            return TruncatedSeries.zero(N)
        return shift(ring_series(self.column_base, N), self.bottom_degree + k)


@dataclass(frozen=True)
class SingularityFamily:
    kind: str
    codim: int
    top: int | None = None
    strata: tuple = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise UsageError(
                f"unknown family {self.kind!r}; expected one of {', '.join(FAMILY_KINDS)}"
            )
        if self.codim < 1:
            raise UsageError(f"codimension k must be >= 1, got {self.codim}")
        if self.top is not None and self.top < 0:
            raise UsageError(f"top stratum index must be >= 0, got {self.top}")
        if self.kind == SIGMA1R and self.top is None:
            raise UsageError("sigma1r needs the top index r")
        if self.kind == CUSTOM:
            idx = [s.index for s in self.strata]
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise UsageError("custom strata must be listed in increasing index order")
            object.__setattr__(self, "top", idx[-1] if idx else None)

    @property
    def k(self) -> int:
        return self.codim

    @property
    def label(self) -> str:
        if self.kind == SIGMA1R:
            return f"sigma1r(k={self.codim}, r={self.top})"
        if self.kind == CUSTOM:
            return f"custom(k={self.codim}, {len(self.strata)} strata)"
        return f"{self.kind}(k={self.codim})"

    def truncated(self, r: int) -> "SingularityFamily":
        """The same family restricted to strata 0..r."""
        if self.kind == CUSTOM:
            return replace(self, strata=tuple(s for s in self.strata if s.index <= r))
        if self.kind in (MORIN, SIGMA1R):
            return sigma1r(self.codim, r)
        return replace(self, top=r)

    def has_stratum(self, i: int) -> bool:
        if self.kind == CUSTOM:
            return any(s.index == i for s in self.strata)
        return i >= 0 and (self.top is None or i <= self.top)

    def stratum(self, i: int) -> StratumSpec:
        if not self.has_stratum(i):
            raise UsageError(f"{self.label} has no stratum {i}")
        if self.kind == CUSTOM:
            return next(s for s in self.strata if s.index == i)
        if self.kind == PRIM:
            return _prim_stratum(self.codim, i)
        return _morin_stratum(self.codim, i)

    def column_indices(self, N: int) -> list:
        """Strata whose source codimension is at most N, in hierarchy order."""
        if self.kind == CUSTOM:
            return [s.index for s in self.strata if s.source_codim <= N]
        last = N // (self.codim + 1)
        if self.top is not None:
            last = min(last, self.top)
        return list(range(last + 1))


def prim(k: int, top: int | None = None) -> SingularityFamily:
    return SingularityFamily(PRIM, k, top)


def morin(k: int) -> SingularityFamily:
    return SingularityFamily(MORIN, k)


def sigma1r(k: int, r: int) -> SingularityFamily:
    return SingularityFamily(SIGMA1R, k, r)


def custom(k: int, strata) -> SingularityFamily:
    return SingularityFamily(CUSTOM, k, strata=tuple(strata))


def make_family(kind: str, k: int, r: int | None = None) -> SingularityFamily:
    if kind == PRIM:
        return prim(k, r)
    if kind == MORIN:
        return morin(k) if r is None else sigma1r(k, r)
    if kind == SIGMA1R:
        if r is None:
            raise UsageError("family sigma1r needs r")
        return sigma1r(k, r)
    if kind == CUSTOM:
        raise UsageError("custom families are loaded from a strata file")
    raise UsageError(f"unknown family {kind!r}")


def _prim_stratum(k: int, r: int) -> StratumSpec:
    # normal bundle of the r-th prim stratum: r*(gamma_k + eps^1)
    return StratumSpec(
        index=r,
        source_codim=r * (k + 1),
        column_base=ring_spec(bso(k)),
        source_bundle=FormalBundle(r, (k,) * r),
        target_bundle=FormalBundle(r, (k,) * (r + 1)),
    )


def _morin_bundle(k: int, r: int) -> FormalBundle:
    # lambda = ceil((r-1)/2)*1 + floor((r+1)/2)*g1 + ceil(r/2)*(g1 x gk) + floor(r/2)*gk
    # over the oriented subgroup of O(1) x O(k); only the 1-summands are orientable
    return FormalBundle(
        trivial=-(-(r - 1) // 2),
        nonorientable=("g1",) * ((r + 1) // 2)
        + ("g1xgk",) * (-(-r // 2))
        + ("gk",) * (r // 2),
    )


def _morin_stratum(k: int, r: int) -> StratumSpec:
    c = r * (k + 1)
    if r == 0:
        return StratumSpec(
            0, 0, ring_spec(bso(k)),
            source_bundle=FormalBundle(), target_bundle=FormalBundle(0, (k,)),
        )
    src = _morin_bundle(k, r)
    tgt = src + FormalBundle(nonorientable=("gk",))
    A = morin_base_ring(k)
    if k % 2 == 0:
        extra = k if r % 2 == 0 else 0
        return StratumSpec(r, c, A, extra, source_bundle=src, target_bundle=tgt)
    return StratumSpec(r, c, A, 0, zero_column=bool(r % 2),
                       source_bundle=src, target_bundle=tgt)


@dataclass(frozen=True)
class CancellationStep:
    source: int
    target: int
    rank: int


@dataclass(frozen=True)
class Page:
    page_number: object
    truncation: int
    columns: dict
    codims: dict
    steps: tuple = field(default=())

    def column(self, i: int) -> TruncatedSeries:
        return self.columns.get(i, TruncatedSeries.zero(self.truncation))

    def total(self) -> TruncatedSeries:
        out = TruncatedSeries.zero(self.truncation)
        for s in self.columns.values():
            out = out + s
        return out

    def parity_violations(self) -> list:
        """(column, degree) pairs that are nonzero in the wrong parity."""
        bad = []
        for i, s in self.columns.items():
            c = self.codims[i]
            bad += [(i, n) for n in s.support() if (n - c) % 2]
        return bad


def build_e1(family: SingularityFamily, N: int) -> Page:
    cols, codims = {}, {}
    for i in family.column_indices(N):
        st = family.stratum(i)
        cols[i] = st.column_series(N)
        codims[i] = st.source_codim
    return Page(E1, N, cols, codims)


def parity_blocks(family: SingularityFamily, N: int = 60) -> list:
    """Maximal runs of nonzero columns whose source codimensions share a parity."""
    blocks = []
    last_parity = None
    for i in family.column_indices(N):
        st = family.stratum(i)
        if st.zero_column:
            continue
        p = st.source_codim % 2
        if blocks and p == last_parity:
            blocks[-1].append(i)
        else:
            blocks.append([i])
        last_parity = p
    return blocks


def check_custom_degenerate(family: SingularityFamily, N: int):
    """Reject custom families whose E1 page leaves room for a differential.

    Any differential raises total degree by one and moves to a later column,
    so the page is degenerate when no nonzero degree n in column i meets a
    nonzero degree n+1 in a later column j.  A single parity block always
    passes.  Odd generator or shift degrees are refused outright since they
    break parity vanishing.
    """
    for st in family.strata:
        if any(d % 2 for d in st.column_base.degrees) or st.extra_shift % 2:
            raise UsageError(
                f"custom stratum {st.index}: generator degrees and extra_shift must be even"
            )
    blocks = parity_blocks(family, N)
    if len(blocks) <= 1:
        return
    page = build_e1(family, N)
    idx = sorted(page.columns)
    for a, i in enumerate(idx):
        src = page.columns[i].support()
        for j in idx[a + 1:]:
            tgt = set(page.columns[j].support())
            hit = [n for n in src if n + 1 in tgt]
            if hit:
                raise UsageError(
                    f"custom family is not block-degenerate: column {i} degree {hit[0]} "
                    f"can hit column {j} degree {hit[0] + 1} (blocks {blocks})"
                )


def _even_parts(family: SingularityFamily, i: int, col: TruncatedSeries):
    """Split column i (k even) of a page into its A-part and its chi-part."""
    k = family.codim
    N = col.truncation
    st = family.stratum(i)
    A = ring_series(morin_base_ring(k), N)
    c = st.source_codim
    if family.kind == PRIM or i == 0:
        a_part, chi_part = shift(A, c), shift(A, c + k)
        if a_part + chi_part != col:
            raise CancellationMismatch(f"column {i}: BSO({k}) != A + chi*A")
    elif i % 2:
        a_part, chi_part = col, TruncatedSeries.zero(N)
    else:
        a_part, chi_part = TruncatedSeries.zero(N), col
        if col != shift(A, c + k):
            raise CancellationMismatch(f"column {i}: expected chi*A at degree {c + k}")
    return a_part, chi_part


def apply_d1(page: Page, family: SingularityFamily) -> Page:
    """Pass from E1 to E-infinity.

    For k odd and for custom families E1 is returned unchanged (custom
    families are checked for degeneracy first).  For k even every chi-part
    of column i must match the A-part of column i+1 shifted by one; a
    mismatch raises :class:`CancellationMismatch`.
    """
    N = page.truncation
    if family.kind == CUSTOM:
        check_custom_degenerate(family, N)
        return replace(page, page_number=EINF)
    if family.codim % 2:
        return replace(page, page_number=EINF)

    parts = {i: _even_parts(family, i, page.columns[i]) for i in page.columns}
    zero = TruncatedSeries.zero(N)
    cols, steps = {}, []
    for i in sorted(page.columns):
        a_part, chi_part = parts[i]
        survivor = zero
        if i == 0:
            survivor = a_part
        if family.has_stratum(i + 1):
            target = parts[i + 1][0] if i + 1 in parts else zero
            image = shift(chi_part, 1)
            if image != target:
                raise CancellationMismatch(
                    f"{family.label}: d1 from column {i} to {i + 1} does not match "
                    f"({image} vs {target})"
                )
            steps.append(CancellationStep(i, i + 1, sum(image.coeffs)))
        else:
            survivor = survivor + chi_part
        cols[i] = survivor
    return Page(EINF, N, cols, dict(page.codims), tuple(steps))


@lru_cache(maxsize=512)
def e_infinity(family: SingularityFamily, N: int) -> Page:
    return apply_d1(build_e1(family, N), family)


@lru_cache(maxsize=512)
def kazarian_homology_series(family: SingularityFamily, N: int) -> TruncatedSeries:
    """Ranks of ``H_*(K_tau; Q)``: the column sum of the E-infinity page."""
    return e_infinity(family, N).total()


def truncated_homology_series(family: SingularityFamily, N: int) -> TruncatedSeries:
    if family.kind != SIGMA1R:
        raise UsageError(f"expected a sigma1r family, got {family.label}")
    return kazarian_homology_series(family, N)
