"""``kazcalc``: batch command-line front end.

Every subcommand prints either an ASCII table or a JSON document carrying
``"schema": 1``.  Exit status is 0 on success, 2 on a usage error (one line
on stderr) and 1 when ``consistency`` finds a mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .bordism import (
    bordism_generating_function,
    bordism_rank,
    f_tau,
    fold_torsion,
    framed_bordism_rank,
    safe_prime_bound,
)
from .consistency import run_all
from .customfile import load_custom_family
from .errors import KazcalcError, TruncationTooSmall, UsageError
from .kazarian import (
    CUSTOM,
    MORIN,
    PRIM,
    SIGMA1R,
    Page,
    SingularityFamily,
    build_e1,
    e_infinity,
    kazarian_homology_series,
    make_family,
)
from .ranks import (
    TargetProfile,
    closed_form_series,
    cob_rank_over_target,
    elimination_obstruction_rank,
    postnikov_tower,
    splitting_verdict,
    tower_e1_table,
)
from .series import DEFAULT_TRUNCATION
from .thom import higher_thom_polynomial, pontrjagin_vanishing_bound, thom_polynomial

SCHEMA = 1
ENV_TRUNCATION = "KAZCALC_TRUNCATION"
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


# ---------------------------------------------------------------- rendering


def render_table(headers, rows) -> str:
    """Plain ASCII grid; integers right-aligned, everything else left-aligned."""
    rows = [list(r) for r in rows]
    cells = [[str(h) for h in headers]] + [[_cell(c) for c in r] for r in rows]
    right = [[False] * len(headers)] + [[isinstance(c, int) and not isinstance(c, bool) for c in r] for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(headers))]

    def fmt(r, ra):
        return "  ".join(
            c.rjust(w) if a else c.ljust(w) for c, a, w in zip(r, ra, widths)
        ).rstrip()

    out = [fmt(cells[0], right[0]), "  ".join("-" * w for w in widths)]
    out += [fmt(c, a) for c, a in zip(cells[1:], right[1:])]
    return "\n".join(out) + "\n"


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_kv(pairs) -> str:
    return render_table(["field", "value"], [(k, _scalar(v)) for k, v in pairs])


def _scalar(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v) if v else "-"
    if isinstance(v, dict):
        return " ".join(f"{a}={b}" for a, b in v.items()) or "-"
    if v is None:
        return "-"
    return v


def render_json(doc: dict) -> str:
    return json.dumps({"schema": SCHEMA, **doc}, sort_keys=True, indent=2) + "\n"


def column_annotation(family: SingularityFamily, i: int, page_number=1) -> str:
    """A-module label of column i in the rewritten-table convention."""
    k = family.codim
    if family.kind == CUSTOM:
        return ""
    if page_number != 1 and k % 2 == 0:
        # after d1 only A in column 0 and the chi-part of the top column survive
        top = family.top == i
        if i == 0:
            return "A + chi*A" if top else "A"
        if not top or (family.kind != PRIM and i % 2):
            return "0"
        return f"chi^{i + 1}*A"
    if family.kind == PRIM:
        chi = "chi" if i == 1 else f"chi^{i}"
        if k % 2:
            return "A" if i == 0 else f"{chi}*A"
        return "A + chi*A" if i == 0 else f"{chi}*A + chi^{i + 1}*A"
    if k % 2:
        if i == 0:
            return "A"
        return "0" if i % 2 else ("p*A" if i == 2 else f"p^{i // 2}*A")
    if i == 0:
        return "A + chi*A"
    power = i if i % 2 else i + 1
    return "chi*A" if power == 1 else f"chi^{power}*A"


def render_page(page: Page, fmt: str, inputs: dict | None = None,
                family: SingularityFamily | None = None, annotate: bool = False) -> str:
    """Columns x total-degree grid of ranks."""
    idx = sorted(page.columns)
    if fmt == "json":
        cols = []
        for i in idx:
            col = {"index": i, "codim": page.codims[i], "coeffs": list(page.columns[i].coeffs)}
            if annotate and family is not None:
                col["label"] = column_annotation(family, i, page.page_number)
            cols.append(col)
        return render_json({
            "command": "page",
            "inputs": inputs or {},
            "truncation": page.truncation,
            "page": str(page.page_number),
            "columns": cols,
        })
    headers = ["degree"] + [f"col{i}" for i in idx]
    rows = []
    if annotate and family is not None:
        rows.append(["label"] + [column_annotation(family, i, page.page_number) for i in idx])
    rows.append(["codim"] + [page.codims[i] for i in idx])
    rows += [[n] + [page.columns[i][n] for i in idx] for n in range(page.truncation + 1)]
    title = f"E{page.page_number} page, truncation N={page.truncation}\n"
    if not idx:
        return title + "(no columns)\n"
    return title + render_table(headers, rows)


def render_series_doc(command, inputs, N, named_series, fmt) -> str:
    if fmt == "json":
        return render_json({
            "command": command,
            "inputs": inputs,
            "truncation": N,
            "series": {name: list(s.coeffs) for name, s in named_series},
        })
    headers = ["degree"] + [name for name, _ in named_series]
    rows = [[n] + [s[n] for _, s in named_series] for n in range(N + 1)]
    return render_table(headers, rows)


def render_result(command, inputs, N, result: dict, fmt) -> str:
    if fmt == "json":
        return render_json({"command": command, "inputs": inputs, "truncation": N, "result": result})
    pairs = [("command", command)] + list(inputs.items()) + [("truncation", N)] + list(result.items())
    return render_kv(pairs)


# ---------------------------------------------------------------- argument handling


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_truncation() -> int:
    raw = os.environ.get(ENV_TRUNCATION)
    if raw is None or raw.strip() == "":
        return DEFAULT_TRUNCATION
    try:
        N = int(raw)
    except ValueError:
        raise UsageError(f"{ENV_TRUNCATION} must be an integer, got {raw!r}") from None
    if N < 0:
        raise UsageError(f"{ENV_TRUNCATION} must be >= 0")
    return N


def _nat(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {v}")
    return v


def parse_target(spec: str, open_manifold: bool = False) -> TargetProfile:
    """Betti profile from an inline list ``1,0,1`` or a file holding one.

    A leading token ``open`` (inline ``open:1,0,1``) marks an open manifold.
    """
    path = Path(spec)
    text = path.read_text() if path.is_file() else spec
    text = "\n".join(ln.split("#", 1)[0] for ln in text.splitlines())
    tokens = text.replace(":", " ").replace(",", " ").split()
    if tokens and tokens[0] in ("open", "closed"):
        open_manifold = open_manifold or tokens[0] == "open"
        tokens = tokens[1:]
    try:
        betti = tuple(int(t) for t in tokens)
    except ValueError:
        raise UsageError(f"target must be a list of Betti numbers, got {spec!r}") from None
    return TargetProfile(betti, compact=not open_manifold)


def _common(p, family=True, r=False):
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--truncation", "-N", type=_nat, default=None,
                   help=f"series truncation (default {DEFAULT_TRUNCATION}, env {ENV_TRUNCATION})")
    if family:
        p.add_argument("--family", choices=(PRIM, MORIN, SIGMA1R, CUSTOM), required=True)
        p.add_argument("--codim", "-k", type=_nat, default=None)
        p.add_argument("--family-file", default=None, help="strata file for --family custom")
    if r:
        p.add_argument("--r", type=_nat, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kazcalc", description="Rational cobordism of singular maps.")
    parser.add_argument("--version", action="version", version=f"kazcalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rank", help="rank of the cobordism group in dimension n")
    _common(p, r=True)
    p.add_argument("--dim", "-n", type=_nat, default=None)
    p.add_argument("--target", default=None, help="Betti profile of the target (inline or file)")
    p.add_argument("--open", action="store_true", help="the target is an open manifold")

    p = sub.add_parser("series", help="Poincare series of the classifying space")
    _common(p, r=True)
    p.add_argument("--closed-form", action="store_true", help="also print the closed-form series")

    p = sub.add_parser("page", help="E1 or E-infinity page as a degree table")
    _common(p, r=True)
    p.add_argument("--page", choices=("1", "inf"), default="1")
    p.add_argument("--annotate", action="store_true",
                   help="label columns as A-modules (rewritten-table convention)")

    p = sub.add_parser("thom", help="(higher) Thom polynomial of a stratum")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--family", choices=(PRIM, MORIN, SIGMA1R), required=True)
    p.add_argument("--codim", "-k", type=_nat, required=True)
    p.add_argument("--i", type=_nat, required=True, help="stratum index")
    p.add_argument("--multi-index", default="", help="Pontrjagin multi-index, e.g. 1,1")

    p = sub.add_parser("tower", help="stages of the Postnikov-like tower")
    _common(p, r=True)
    p.add_argument("--target", default=None)
    p.add_argument("--open", action="store_true")
    p.add_argument("--jmax", type=_nat, default=0)

    p = sub.add_parser("bordism", help="left-right bordism ranks")
    _common(p, r=True)
    p.add_argument("--dim", "-n", type=_nat, default=None)
    p.add_argument("--framed", action="store_true", help="rank of Omega_n(K) (x) Q instead")

    p = sub.add_parser("fold-torsion", help="3-primary torsion parameter t(m) of fold cobordisms")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("split-check", help="rational splitting of the key fibration")
    _common(p, r=True)

    p = sub.add_parser("obstruction", help="rank of the obstruction group for the top stratum")
    _common(p, r=True)
    p.add_argument("--dim", "-n", type=_nat, default=None)
    p.add_argument("--target", default=None)
    p.add_argument("--open", action="store_true")

    p = sub.add_parser("consistency", help="run every cross-oracle check")
    p.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def _truncation(args) -> int:
    N = getattr(args, "truncation", None)
    return default_truncation() if N is None else N


def _require(N, needed):
    if needed > N:
        raise TruncationTooSmall(N, needed)


def _family(args, N) -> SingularityFamily:
    if args.family == CUSTOM:
        if not args.family_file:
            raise UsageError("--family custom needs --family-file")
        fam = load_custom_family(args.family_file, N)
        if args.codim is not None and args.codim != fam.codim:
            raise UsageError(f"--codim {args.codim} disagrees with the file (codim {fam.codim})")
        if getattr(args, "r", None) is not None:
            fam = fam.truncated(args.r)
        return fam
    if args.codim is None:
        raise UsageError(f"--family {args.family} needs --codim")
    if args.family_file:
        raise UsageError("--family-file is only meaningful with --family custom")
    r = getattr(args, "r", None)
    if args.family == SIGMA1R:
        if r is None:
            raise UsageError("--family sigma1r needs --r")
        return make_family(SIGMA1R, args.codim, r)
    if r is not None:
        return make_family(args.family, args.codim).truncated(r)
    return make_family(args.family, args.codim)


def _inputs(args, fam=None, **extra) -> dict:
    out = {}
    if fam is not None:
        out["family"] = fam.kind
        out["codim"] = fam.codim
        if fam.top is not None:
            out["r"] = fam.top
    out.update({k: v for k, v in extra.items() if v is not None})
    return out


def _target(args):
    if args.target is None:
        return None
    return parse_target(args.target, args.open)


# ---------------------------------------------------------------- commands


def cmd_rank(args):
    N = _truncation(args)
    fam = _family(args, N)
    target = _target(args)
    k = fam.codim
    if target is not None:
        q = target.dim
        if args.dim is not None and args.dim + k != q:
            raise UsageError(f"--dim {args.dim} disagrees with the target dimension {q} (n = q - k)")
        n = q - k
        _require(N, max(n, 0))
        rank = cob_rank_over_target(fam, target)
        result = {"rank": rank}
        inputs = _inputs(args, fam, dim=n, target=list(target.betti), open=not target.compact)
    else:
        if args.dim is None:
            raise UsageError("rank needs --dim or --target")
        n = args.dim
        _require(N, n)
        rank = kazarian_homology_series(fam, N)[n]
        result = {"rank": rank}
        inputs = _inputs(args, fam, dim=n)
    if n >= 2:
        result["safe_prime"] = safe_prime_bound(n)
    return render_result("rank", inputs, N, result, args.format)


def cmd_series(args):
    N = _truncation(args)
    fam = _family(args, N)
    named = [("engine", kazarian_homology_series(fam, N))]
    if args.closed_form:
        named.append(("closed_form", closed_form_series(fam, N)))
    return render_series_doc("series", _inputs(args, fam), N, named, args.format)


def cmd_page(args):
    N = _truncation(args)
    fam = _family(args, N)
    page = build_e1(fam, N) if args.page == "1" else e_infinity(fam, N)
    inputs = _inputs(args, fam, page=args.page)
    return render_page(page, args.format, inputs, fam, args.annotate)


def cmd_thom(args):
    I = tuple(int(t) for t in args.multi_index.replace(",", " ").split()) if args.multi_index else ()
    poly = higher_thom_polynomial(args.family, args.codim, args.i, I) if I else thom_polynomial(
        args.family, args.codim, args.i
    )
    result = {
        "polynomial": str(poly),
        "degree": poly.degree,
        "notes": list(poly.notes),
    }
    if args.codim % 2:
        result["vanishing_bound"] = pontrjagin_vanishing_bound(args.codim)
    inputs = {"family": args.family, "codim": args.codim, "i": args.i}
    if I:
        inputs["multi_index"] = list(I)
    if args.format == "json":
        return render_json({"command": "thom", "inputs": inputs, "result": result})
    return render_kv([("command", "thom")] + list(inputs.items()) + list(result.items()))


def cmd_tower(args):
    N = _truncation(args)
    fam = _family(args, N)
    r = args.r if args.r is not None else fam.top
    if r is None:
        raise UsageError("tower needs --r for an untruncated family")
    tower = postnikov_tower(fam, r)
    stages = [list(s) for s in tower.stages]
    bottoms = {str(i): d for i, d in sorted(tower.bottom_degrees.items())}
    target = _target(args)
    table = None
    if target is not None:
        _require(N, target.dim + args.jmax)
        table = tower_e1_table(tower, target, args.jmax)
    inputs = _inputs(args, tower.family, jmax=args.jmax if target is not None else None,
                     target=list(target.betti) if target is not None else None)
    if args.format == "json":
        result = {"stages": stages, "bottom_degrees": bottoms}
        if table is not None:
            result["e1"] = [{"i": i, "j": j, "rank": v} for (i, j), v in sorted(table.items())]
        return render_json({"command": "tower", "inputs": inputs, "truncation": N, "result": result})
    text = render_table(
        ["stage", "strata", "bottom_degrees"],
        [(s, " ".join(map(str, st)), " ".join(str(tower.bottom_degrees[i]) for i in st))
         for s, st in enumerate(stages)],
    )
    if table is not None:
        idx = sorted({i for i, _ in table})
        text += "\n" + render_table(
            ["j"] + [f"i={i}" for i in idx],
            [[j] + [table[(i, j)] for i in idx] for j in range(args.jmax + 1)],
        )
    return text


def cmd_bordism(args):
    N = _truncation(args)
    fam = _family(args, N)
    if args.dim is not None:
        n = args.dim
        if args.framed:
            _require(N, n)
            result = {"framed_rank": framed_bordism_rank(fam, n, N)}
        else:
            _require(N, n + fam.codim)
            result = {"rank": bordism_rank(fam, n, N)}
        return render_result("bordism", _inputs(args, fam, dim=n, framed=args.framed), N,
                             result, args.format)
    named = [("F_tau", f_tau(fam, N)), ("tau", bordism_generating_function(fam, N))]
    return render_series_doc("bordism", _inputs(args, fam), N, named, args.format)


def cmd_fold_torsion(args):
    rep = fold_torsion(args.m)
    result = {
        "t": rep.t,
        "rank_part": rep.rank_part,
        "torsion": rep.torsion_descriptor,
        "source_dim": 4 * args.m - 1,
        "codim": 2 * args.m - 1,
    }
    if args.format == "json":
        return render_json({"command": "fold-torsion", "inputs": {"m": args.m}, "result": result})
    return render_kv([("command", "fold-torsion"), ("m", args.m)] + list(result.items()))


def cmd_split_check(args):
    N = _truncation(args)
    fam = _family(args, N)
    r = args.r if args.r is not None else fam.top
    if r is None:
        raise UsageError("split-check needs --r")
    rep = splitting_verdict(fam, r, N)
    result = {
        "verdict": rep.verdict.value,
        "source_euler": rep.source_euler.value,
        "target_euler": rep.target_euler.value,
        "last_column": list(rep.last_column.coeffs),
    }
    return render_result("split-check", _inputs(args, fam.truncated(r)), N, result, args.format)


def cmd_obstruction(args):
    N = _truncation(args)
    fam = _family(args, N)
    r = args.r if args.r is not None else fam.top
    if r is None:
        raise UsageError("obstruction needs --r")
    fam = fam.truncated(r)
    target = _target(args)
    if target is None:
        if args.dim is None:
            raise UsageError("obstruction needs --dim or --target")
        target = TargetProfile.euclidean(args.dim + fam.codim)
    elif args.dim is not None and args.dim + fam.codim != target.dim:
        raise UsageError(f"--dim {args.dim} disagrees with the target dimension {target.dim}")
    _require(N, target.dim)
    rank = elimination_obstruction_rank(fam, r, target)
    inputs = _inputs(args, fam, dim=target.dim - fam.codim, target=list(target.betti),
                     open=not target.compact)
    return render_result("obstruction", inputs, N, {"rank": rank}, args.format)


def cmd_consistency(args):
    results = run_all()
    ok = all(r.ok for r in results)
    if args.format == "json":
        text = render_json({
            "command": "consistency",
            "ok": ok,
            "checks": [{"number": r.number, "name": r.name, "ok": r.ok, "detail": r.detail}
                       for r in results],
        })
    else:
        text = "\n".join(r.line() for r in results) + "\n"
        text += f"{sum(r.ok for r in results)}/{len(results)} checks passed\n"
    return text, (EXIT_OK if ok else EXIT_MISMATCH)


COMMANDS = {
    "rank": cmd_rank,
    "series": cmd_series,
    "page": cmd_page,
    "thom": cmd_thom,
    "tower": cmd_tower,
    "bordism": cmd_bordism,
    "fold-torsion": cmd_fold_torsion,
    "split-check": cmd_split_check,
    "obstruction": cmd_obstruction,
    "consistency": cmd_consistency,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = COMMANDS[args.command](args)
    except KazcalcError as exc:
        msg = " ".join(str(exc).split())
        stderr.write(f"kazcalc: error: {msg}\n")
        return EXIT_USAGE
    code = EXIT_OK
    if isinstance(out, tuple):
        out, code = out
    stdout.write(out)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
