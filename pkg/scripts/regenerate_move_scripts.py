#!/usr/bin/env python3
"""Regenerate the shipped mutation-move scripts from the generators.

The test suite pins the shipped files to the generator output; run this after
changing scriptgen and commit the diff.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from flipcheck.collections.scriptgen import GENERATORS  # noqa: E402

SCRIPT_ROOT = (
    pathlib.Path(__file__).resolve().parent.parent
    / "src"
    / "flipcheck"
    / "collections"
    / "scripts"
)

N_RANGE = range(2, 6)


def main() -> None:
    for (parity, step), gen in sorted(GENERATORS.items()):
        for n in N_RANGE:
            lines = gen(n)
            path = SCRIPT_ROOT / parity / f"n{n}" / f"{step}.moves"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("\n".join(lines) + "\n")
            print(f"wrote {path.relative_to(SCRIPT_ROOT.parent)} ({len(lines)} lines)")


if __name__ == "__main__":
    main()
