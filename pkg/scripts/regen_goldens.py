"""Rewrite tests/goldens/ from the current CLI.  Review the diff before committing."""
import io
import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from kazcalc.cli import run  # noqa: E402
from tests.golden_cases import CASES, GOLDEN_DIR, golden_path  # noqa: E402


def main():
    os.chdir(ROOT)
    os.environ.pop("KAZCALC_TRUNCATION", None)
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, argv in CASES:
        out = io.StringIO()
        code = run(argv, stdout=out, stderr=sys.stderr)
        if code:
            raise SystemExit(f"{name}: exit {code}")
        golden_path(name).write_text(out.getvalue())
        print(f"wrote {golden_path(name).relative_to(ROOT)}")


if __name__ == "__main__":
    main()
