#!/usr/bin/env python3
"""Sweep the three-letter alternating word in rank 2 and watch the toric
route detach from the true width.

For type A2, word (1, 2, 1), m = (m1, m2, m3): the curve areas are
(m1+m2, m2+m3, m3), so the width is min(m1+m2, m3), while the line-area
formula always answers m3.  Condition (P) holds iff m1 >= m3; the gap
width < caseline opens exactly once m3 > m1 + m2.

Usage: python scripts/strictness_demo.py [--m1 N] [--m2 N] [--max-m3 N]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

try:
    import bswidth  # noqa: F401
except ImportError:  # fresh checkout without install
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bswidth.bott import caseline_width
from bswidth.bscurve import areas, bs_input, gromov_width
from bswidth.gkpoly import build_chain, check_condition_p
from bswidth.render import q_str
from bswidth.rootsys import build_root_system


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m1", type=int, default=2)
    ap.add_argument("--m2", type=int, default=1)
    ap.add_argument("--max-m3", type=int, default=8)
    args = ap.parse_args()

    rs = build_root_system("A2")
    print(f"{'m3':>3} {'areas':>14} {'width':>6} {'caseline':>9} {'(P)':>5} "
          f"{'witness':>16}")
    for m3 in range(1, args.max_m3 + 1):
        inp = bs_input(rs, (1, 2, 1), (args.m1, args.m2, m3))
        ell = ", ".join(q_str(x) for x in areas(inp))
        width = gromov_width(inp).width
        case = caseline_width(inp)
        rep = check_condition_p(build_chain(inp))
        wit = ("-" if rep.holds else
               f"A_{rep.witness.k}({', '.join(q_str(x) for x in rep.witness.point)})"
               f"={q_str(rep.witness.value)}")
        marker = "  <-- strict" if width < case else ""
        print(f"{m3:>3} {ell:>14} {q_str(width):>6} {q_str(case):>9} "
              f"{'yes' if rep.holds else 'no':>5} {wit:>16}{marker}")
    print("\nwidth = caseline holds whenever condition (P) does, but can "
          "survive its failure; the strict gap needs m3 > m1 + m2.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
