#!/usr/bin/env python3
"""Time the theorem suite over a corpus and print per-check rows.

Usage: python scripts/corpus_sweep.py [corpus ...]
  Default corpora: all:3, monotone:4, named:KUSHILEVITZ,MAJ:3,MAF:3.
  The exhaustive four-variable sweep (all:4) takes roughly two minutes.
"""

import sys
import time

from bfc.corpus import parse_corpus
from bfc.verify import run_theorem_suite, suite_failures


def main() -> int:
    specs = sys.argv[1:] or ["all:3", "monotone:4", "named:KUSHILEVITZ,MAJ:3,MAF:3"]
    worst = 0
    for spec in specs:
        corpus = parse_corpus(spec)
        t0 = time.time()
        checks = run_theorem_suite(corpus)
        dt = time.time() - t0
        bad = suite_failures(checks)
        worst = max(worst, bad)
        print(f"== {corpus.describe()}  ({len(corpus)} functions, {dt:.1f}s, "
              f"{bad} failing checks) ==")
        for c in checks:
            print("  " + c.row())
    return 1 if worst else 0


if __name__ == "__main__":
    sys.exit(main())
