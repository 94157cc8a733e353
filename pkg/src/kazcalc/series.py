"""Exact truncated power series with integer coefficients.

Every rank in the package is a :class:`TruncatedSeries`: coefficient ``i`` is
the rank of something in degree ``i``, for ``0 <= i <= N``.  Coefficients are
Python ints, so there is no overflow at any truncation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import TruncationMismatch, UsageError

DEFAULT_TRUNCATION = 60

POLY = "poly"
EXTERIOR = "ext"


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise UsageError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, N: int) -> "TruncatedSeries":
        return cls((0,) * (N + 1))

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return monomial(0, N)

    def __getitem__(self, i: int) -> int:
        # out-of-range degrees (negative or above N) read as 0
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        _check(self, other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, e: int):
        if e < 0:
            raise UsageError("negative powers are not supported")
        out = TruncatedSeries.one(self.truncation)
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def dominated_by(self, other) -> bool:
        """Coefficientwise ``self <= other``."""
        _check(self, other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def bottom_degree(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def support(self):
        return [i for i, c in enumerate(self.coeffs) if c]

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "t" if i == 1 else f"t^{i}"
                terms.append(mon if c == 1 else f"{c}*{mon}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.truncation + 1})"


def series(coeffs: Sequence[int], N: int | None = None) -> TruncatedSeries:
    """Build a series from a coefficient list, zero padded (or cut) to ``N``."""
    coeffs = list(coeffs)
    if N is None:
        N = len(coeffs) - 1
    coeffs = (coeffs + [0] * (N + 1))[: N + 1]
    return TruncatedSeries(tuple(coeffs))


def _check(a: TruncatedSeries, b: TruncatedSeries):
    if a.truncation != b.truncation:
        raise TruncationMismatch(
            f"truncation mismatch: N={a.truncation} vs N={b.truncation}"
        )


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check(a, b)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common ``N``."""
    _check(a, b)
    N = a.truncation
    out = [0] * (N + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(N + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def shift(a: TruncatedSeries, d: int) -> TruncatedSeries:
    """Multiply by ``t^d``; degrees pushed past ``N`` are dropped."""
    if d < 0:
        raise UsageError(f"shift degree must be >= 0, got {d}")
    N = a.truncation
    if d > N:
        return TruncatedSeries.zero(N)
    return TruncatedSeries((0,) * d + a.coeffs[: N + 1 - d])


def monomial(d: int, N: int) -> TruncatedSeries:
    out = [0] * (N + 1)
    if 0 <= d <= N:
        out[d] = 1
    return TruncatedSeries(tuple(out))


def _positive(name, d):
    if d < 1:
        raise UsageError(f"{name} must be a positive integer, got {d}")


def geometric_factor(d: int, N: int) -> TruncatedSeries:
    """``1/(1 - t^d)``, i.e. the series of a polynomial generator of degree d."""
    _positive("generator degree", d)
    return TruncatedSeries(tuple(1 if i % d == 0 else 0 for i in range(N + 1)))


def exterior_factor(d: int, N: int) -> TruncatedSeries:
    _positive("generator degree", d)
    out = [0] * (N + 1)
    out[0] = 1
    if d <= N:
        out[d] = 1
    return TruncatedSeries(tuple(out))


def finite_geometric(d: int, s: int, N: int) -> TruncatedSeries:
    """``1 + t^d + ... + t^(d(s-1))``: a generator of degree d with ``x^s = 0``."""
    _positive("generator degree", d)
    _positive("nilpotency order", s)
    return TruncatedSeries(
        tuple(1 if i % d == 0 and i // d < s else 0 for i in range(N + 1))
    )


@dataclass(frozen=True)
class GradedRingSpec:
    """Free graded-commutative ring on generators ``(degree, kind)``.

    ``kind`` is ``"poly"`` (unbounded powers) or ``"ext"`` (squares to zero).
    Generators are kept sorted so equal rings compare equal.
    """

    generators: tuple = ()

    def __post_init__(self):
        gens = []
        for deg, kind in self.generators:
            if kind not in (POLY, EXTERIOR):
                raise UsageError(f"unknown generator kind {kind!r}")
            if deg < 1:
                raise UsageError(f"generator degree must be positive, got {deg}")
            gens.append((int(deg), kind))
        object.__setattr__(self, "generators", tuple(sorted(gens)))

    @classmethod
    def polynomial(cls, *degrees: int) -> "GradedRingSpec":
        return cls(tuple((d, POLY) for d in degrees))

    def union(self, other: "GradedRingSpec") -> "GradedRingSpec":
        return GradedRingSpec(self.generators + other.generators)

    @property
    def degrees(self):
        return tuple(d for d, _ in self.generators)

    def __str__(self):
        if not self.generators:
            return "Q"
        parts = [f"x{d}" if k == POLY else f"e{d}" for d, k in self.generators]
        return "Q[" + ",".join(parts) + "]"


def ring_series(spec: GradedRingSpec, N: int) -> TruncatedSeries:
    """Poincare series of ``spec``: product of the per-generator factors."""
    out = [0] * (N + 1)
    out[0] = 1
    for d, kind in spec.generators:
        if d > N:
            continue
        if kind == POLY:
            # multiply by 1/(1-t^d) in place
            for i in range(d, N + 1):
                out[i] += out[i - d]
        else:
            for i in range(N, d - 1, -1):
                out[i] += out[i - d]
    return TruncatedSeries(tuple(out))
