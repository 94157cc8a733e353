"""Thom polynomials and higher Thom polynomials of prim and Morin strata.

Polynomials live in the Pontrjagin classes ``p_i`` (degree 4i) and Euler
classes ``chi_d`` (degree d).  Rationally the tables are exact; the integral
caveats are carried in :attr:`CharClassPoly.notes`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import UsageError
from .kazarian import MORIN, PRIM, SIGMA1R

_GEN = re.compile(r"^(p|chi)(\d+)$")

NOTE_TORSION = "integrally exact only modulo 2-primary torsion"
NOTE_NORMALIZED = "nonzero rational proportionality constant normalized to 1"
NOTE_NULL = "all singular strata are null-homologous in even codimension"


def generator_degree(name: str) -> int:
    m = _GEN.match(name)
    if not m:
        raise UsageError(f"unknown characteristic class {name!r}")
    kind, i = m.group(1), int(m.group(2))
    if i < 1:
        raise UsageError(f"bad class index in {name!r}")
    return 4 * i if kind == "p" else i


def _canon(monomial) -> tuple:
    exps = {}
    for name, e in monomial:
        generator_degree(name)
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in exps.items() if e))


@dataclass(frozen=True)
class CharClassPoly:
    """Integer combination of monomials in named characteristic classes.

    ``terms`` maps a monomial, a sorted tuple of ``(name, exponent)``, to its
    coefficient.  The zero polynomial has no terms.
    """

    terms: dict = field(default_factory=dict)
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        clean = {}
        for mon, c in self.terms.items():
            mon = _canon(mon)
            clean[mon] = clean.get(mon, 0) + int(c)
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    @classmethod
    def gen(cls, name: str, power: int = 1) -> "CharClassPoly":
        return cls({((name, power),): 1})

    @classmethod
    def one(cls) -> "CharClassPoly":
        return cls({(): 1})

    @classmethod
    def zero(cls, notes=()) -> "CharClassPoly":
        return cls({}, tuple(notes))

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: "CharClassPoly") -> "CharClassPoly":
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _canon(m1 + m2)
                out[m] = out.get(m, 0) + c1 * c2
        return CharClassPoly(out, self.notes + tuple(n for n in other.notes if n not in self.notes))

    def __pow__(self, e: int) -> "CharClassPoly":
        out = CharClassPoly.one()
        for _ in range(e):
            out = out * self
        return CharClassPoly(out.terms, self.notes)

    def with_notes(self, *notes) -> "CharClassPoly":
        return CharClassPoly(self.terms, self.notes + notes)

    @staticmethod
    def monomial_degree(mon) -> int:
        return sum(generator_degree(n) * e for n, e in mon)

    def degrees(self) -> set:
        return {self.monomial_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        degs = self.degrees()
        if len(degs) > 1:
            raise UsageError(f"{self} is not homogeneous")
        return degs.pop() if degs else None

    def generators(self) -> set:
        return {n for m in self.terms for n, _ in m}

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for mon, c in sorted(self.terms.items()):
            factors = [n if e == 1 else f"{n}^{e}" for n, e in mon]
            body = "*".join(factors) or "1"
            out.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(out)


def _kind(family: str) -> str:
    if family == SIGMA1R:
        return MORIN
    if family not in (PRIM, MORIN):
        raise UsageError(f"Thom polynomial tables exist for prim and morin only, not {family!r}")
    return family


def thom_polynomial(family: str, k: int, i: int) -> CharClassPoly:
    if i < 1:
        raise UsageError("the regular stratum (i = 0) has no Thom polynomial")
    if k < 1:
        raise UsageError(f"codimension must be >= 1, got {k}")
    family = _kind(family)
    if k % 2 == 0:
        return CharClassPoly.zero((NOTE_NULL,))
    ell = (k - 1) // 2
    if family == PRIM:
        return CharClassPoly.gen(f"chi{k + 1}", i).with_notes(NOTE_TORSION, NOTE_NORMALIZED)
    if i % 2:
        return CharClassPoly.zero()
    return CharClassPoly.gen(f"p{ell + 1}", i // 2)


def pontrjagin_monomial(I) -> CharClassPoly:
    out = CharClassPoly.one()
    for j in I:
        out = out * CharClassPoly.gen(f"p{j}")
    return out


def higher_thom_polynomial(family: str, k: int, i: int, I=()) -> CharClassPoly:
    """Push-forward of the normal class ``p_I`` of stratum i: ``Tp(i) * p_I``.

    Entries of ``I`` index Pontrjagin classes of ``BSO(k)`` and must lie in
    ``1..l`` for ``k = 2l + 1``.
    """
    tp = thom_polynomial(family, k, i)
    if k % 2 == 0:
        return tp
    ell = (k - 1) // 2
    bad = [j for j in I if not 1 <= j <= ell]
    if bad:
        raise UsageError(f"multi-index entries must lie in 1..{ell} for k={k}, got {tuple(I)}")
    return tp * pontrjagin_monomial(I)


def pontrjagin_vanishing_bound(k: int) -> int:
    """Largest index j with ``p_j(nu_f)`` possibly nonzero for a Morin map, k odd."""
    if k < 1 or k % 2 == 0:
        raise UsageError(f"the vanishing bound needs odd k, got {k}")
    return (k - 1) // 2 + 1
