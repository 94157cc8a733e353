"""Rational cohomology of the classifying spaces that show up as strata bases.

All rings here are polynomial on Pontrjagin classes ``p_i`` (degree 4i),
plus the Euler class ``chi`` (degree k) for ``BSO(k)`` with k even.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import UsageError
from .series import (
    GradedRingSpec,
    TruncatedSeries,
    exterior_factor,
    mul,
    ring_series,
)

BSO = "BSO"
BO = "BO"
BSO_STABLE = "BSO_stable"
POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class ClassifyingSpace:
    kind: str
    k: int | None = None
    spec: GradedRingSpec | None = None

    def __post_init__(self):
        if self.kind in (BSO, BO):
            if self.k is None or self.k < 1:
                raise UsageError(f"{self.kind}(k) needs k >= 1, got {self.k}")
        elif self.kind == POLYNOMIAL:
            if self.spec is None:
                raise UsageError("a polynomial-ring space needs a GradedRingSpec")
        elif self.kind != BSO_STABLE:
            raise UsageError(f"unknown classifying space {self.kind!r}")

    def __str__(self):
        if self.kind in (BSO, BO):
            return f"{self.kind}({self.k})"
        if self.kind == BSO_STABLE:
            return "BSO"
        return str(self.spec)


def bso(k: int) -> ClassifyingSpace:
    return ClassifyingSpace(BSO, k)


def bo(k: int) -> ClassifyingSpace:
    return ClassifyingSpace(BO, k)


def bso_stable() -> ClassifyingSpace:
    return ClassifyingSpace(BSO_STABLE)


def pontrjagin_ring(ell: int) -> GradedRingSpec:
    """``Q[p_1, ..., p_ell]``."""
    if ell < 0:
        raise UsageError(f"number of Pontrjagin classes must be >= 0, got {ell}")
    return GradedRingSpec.polynomial(*(4 * i for i in range(1, ell + 1)))


def ring_spec(space: ClassifyingSpace, N: int | None = None) -> GradedRingSpec:
    """Generator list of ``space``; the stable BSO ring is cut at degree N."""
    if space.kind == BSO:
        k = space.k
        if k % 2:
            return pontrjagin_ring(k // 2)
        # Q[p_1..p_{l-1}, chi] with deg chi = k
        ell = k // 2
        return pontrjagin_ring(ell - 1).union(GradedRingSpec.polynomial(k))
    if space.kind == BO:
        return pontrjagin_ring(space.k // 2)
    if space.kind == BSO_STABLE:
        if N is None:
            raise UsageError("the stable BSO ring needs a truncation degree")
        return pontrjagin_ring(N // 4)
    return space.spec


def space_series(space: ClassifyingSpace, N: int) -> TruncatedSeries:
    return ring_series(ring_spec(space, N), N)


def bso_even_split_series(k: int, N: int) -> TruncatedSeries:
    """Series of ``BSO(k)``, k even, read as ``A + chi*A`` with ``A = Q[p_1..p_l]``."""
    if k < 2 or k % 2:
        raise UsageError(f"the A + chi*A presentation needs even k >= 2, got {k}")
    return mul(exterior_factor(k, N), ring_series(pontrjagin_ring(k // 2), N))


def morin_base_ring(k: int) -> GradedRingSpec:
    """The ring ``A`` of the Morin strata in codimension k: ``Q[p_1..p_l]``, l = floor(k/2)."""
    if k < 1:
        raise UsageError(f"codimension must be >= 1, got {k}")
    return pontrjagin_ring(k // 2)


class EulerVerdict(str, Enum):
    YES = "yes"
    NO = "no"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class FormalBundle:
    """``trivial * eps  +  sum of gamma^SO_d  +  flagged non-orientable pieces``.

    ``oriented`` is the multiset of ranks d of the oriented universal summands;
    ``nonorientable`` holds labels such as ``"g1xgk"``.
    """

    trivial: int = 0
    oriented: tuple = ()
    nonorientable: tuple = field(default=())

    def __post_init__(self):
        if self.trivial < 0:
            raise UsageError("trivial rank must be >= 0")
        if any(d < 1 for d in self.oriented):
            raise UsageError("oriented summand ranks must be >= 1")
        object.__setattr__(self, "oriented", tuple(sorted(self.oriented)))
        object.__setattr__(self, "nonorientable", tuple(self.nonorientable))

    @property
    def rank_is_known(self):
        return not self.nonorientable

    def __add__(self, other: "FormalBundle") -> "FormalBundle":
        return FormalBundle(
            self.trivial + other.trivial,
            self.oriented + other.oriented,
            self.nonorientable + other.nonorientable,
        )

    def __str__(self):
        parts = []
        if self.trivial:
            parts.append(f"e{self.trivial}")
        parts += [f"so{d}" for d in self.oriented]
        parts += [f"~{label}" for label in self.nonorientable]
        return "+".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "FormalBundle":
        """Parse ``e1+so2+~g1xgk`` style descriptors."""
        trivial, oriented, non = 0, [], []
        text = text.strip()
        if text in ("", "0"):
            return cls()
        for term in text.split("+"):
            term = term.strip()
            if term.startswith("~"):
                non.append(term[1:])
            elif term.startswith("so") and term[2:].isdigit():
                oriented.append(int(term[2:]))
            elif term.startswith("e") and term[1:].isdigit():
                trivial += int(term[1:])
            else:
                raise UsageError(f"cannot parse bundle term {term!r}")
        return cls(trivial, tuple(oriented), tuple(non))


def euler_class_nonzero(bundle: FormalBundle) -> EulerVerdict:
    """Rational Euler class test for a formal bundle over the universal base.

    Non-orientable pieces make the question moot.  Otherwise the class is
    nonzero iff there is no trivial summand and every oriented summand has
    even rank; the empty bundle has Euler class 1.
    """
    if bundle.nonorientable:
        return EulerVerdict.NOT_APPLICABLE
    if bundle.trivial:
        return EulerVerdict.NO
    if any(d % 2 for d in bundle.oriented):
        return EulerVerdict.NO
    return EulerVerdict.YES
