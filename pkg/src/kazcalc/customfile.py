"""Plain-text custom singularity families.

One stratum per line, in hierarchy order::

    codim 2
    # index  source_codim  generators  extra_shift  zero  [source=..] [target=..]
    0        0             4           0            0     target=so2
    1        6             4,8         0            0

``generators`` is a comma list of polynomial generator degrees or ``-`` for
none.  The optional bundle fields use the ``e1+so2+~g1xgk`` syntax of
:meth:`kazcalc.rings.FormalBundle.parse`.  Blank lines and ``#`` comments
are ignored.
"""
from __future__ import annotations

from pathlib import Path

from .errors import UsageError
from .kazarian import SingularityFamily, StratumSpec, check_custom_degenerate, custom
from .rings import FormalBundle
from .series import GradedRingSpec


def _int(tok, what, lineno):
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"line {lineno}: {what} must be an integer, got {tok!r}") from None


def parse_custom_family(text: str) -> SingularityFamily:
    codim = None
    strata = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "codim":
            if len(toks) != 2:
                raise UsageError(f"line {lineno}: expected 'codim K'")
            codim = _int(toks[1], "codim", lineno)
            continue
        if len(toks) < 5:
            raise UsageError(
                f"line {lineno}: expected 'index source_codim generators extra_shift zero'"
            )
        index = _int(toks[0], "index", lineno)
        c = _int(toks[1], "source_codim", lineno)
        gens = () if toks[2] == "-" else tuple(
            _int(g, "generator degree", lineno) for g in toks[2].split(",") if g
        )
        extra = _int(toks[3], "extra_shift", lineno)
        if toks[4] not in ("0", "1"):
            raise UsageError(f"line {lineno}: zero flag must be 0 or 1")
        bundles = {"source": None, "target": None}
        for tok in toks[5:]:
            key, sep, val = tok.partition("=")
            if not sep or key not in bundles:
                raise UsageError(f"line {lineno}: unexpected field {tok!r}")
            bundles[key] = FormalBundle.parse(val)
        strata.append(
            StratumSpec(
                index, c, GradedRingSpec.polynomial(*gens), extra, toks[4] == "1",
                bundles["source"], bundles["target"],
            )
        )
    if codim is None:
        raise UsageError("custom family file has no 'codim K' line")
    return custom(codim, strata)


def load_custom_family(path, N: int) -> SingularityFamily:
    """Read a custom family and refuse it unless its spectral sequence degenerates."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read family file {path}: {exc.strerror}") from None
    family = parse_custom_family(text)
    check_custom_degenerate(family, N)
    return family


def format_custom_family(family: SingularityFamily) -> str:
    lines = [f"codim {family.codim}"]
    for st in family.strata:
        gens = ",".join(str(d) for d in st.column_base.degrees) or "-"
        row = f"{st.index} {st.source_codim} {gens} {st.extra_shift} {int(st.zero_column)}"
        if st.source_bundle is not None:
            row += f" source={st.source_bundle}"
        if st.target_bundle is not None:
            row += f" target={st.target_bundle}"
        lines.append(row)
    return "\n".join(lines) + "\n"
