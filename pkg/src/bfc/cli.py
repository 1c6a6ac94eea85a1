"""Command-line interface.

Subcommands: ``analyze`` (measures, coordinate measures, potentials of one
function), ``lp-caps`` (block-sensitivity caps per degree), ``table``
(bound tables), ``verify`` (corpus theorem suite; exit code 0 iff clean),
and ``family`` (write a named truth table).  Output is tab-separated and
byte-deterministic for fixed flags and seeds.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .bf import BooleanFunction, FAMILY_NAMES, family
from .bounds import (
    cap_profile,
    cs_harmonic_bound,
    cs_sens_bound,
    dp_degree,
    dp_mixed_ds,
    dp_monotone_degree,
    ds_influence_min,
    monotone_dt_table,
)
from .coordinate import (
    CERT_I,
    DEG_I,
    SENS_I,
    mix_cs,
    mix_ds,
    potential,
)
from .corpus import parse_corpus
from .lp import lp_bs_cap
from .measures import measure_report
from .verify import run_theorem_suite, suite_failures


def _load_function(args) -> BooleanFunction:
    if args.family:
        return family(args.family, args.k)
    with open(args.table, "r", encoding="ascii") as fh:
        return BooleanFunction.from_tt(fh.read())


def _cmd_analyze(args) -> int:
    f = _load_function(args)
    with_adeg = f.n <= 6
    report = measure_report(f, with_adeg=with_adeg, eps=Fraction(1, 3))
    print(f"n\t{f.n}")
    print(f"relevant\t{f.num_relevant()}")
    print(f"monotone\t{int(f.is_monotone())}")
    print(report.to_tsv())
    print("coordinate\tdeg_i\tsens_i\tcert_i")
    from .coordinate import _cert_i_all, _deg_i_all, _sens_i_all

    di = _deg_i_all(f.n, f.table)
    si = _sens_i_all(f.n, f.table)
    ci = _cert_i_all(f.n, f.table)
    for i in range(f.n):
        print(f"{i + 1}\t{di[i]}\t{si[i]}\t{ci[i]}")
    for kind in (DEG_I, SENS_I, CERT_I, mix_ds(Fraction(1, 2)), mix_cs(Fraction(1, 2))):
        print(f"potential\t{kind.label()}")
        for line in potential(f, kind).format_lines():
            print(line)
    return 0


def _cmd_lp_caps(args) -> int:
    caps = []
    for d in range(1, args.dmax + 1):
        scan = lp_bs_cap(d)
        caps.append(scan.cap)
        note = "" if scan.monotone else "\tnon-monotone-profile"
        print(f"{d}\t{scan.cap}{note}")
    print("row\t" + ",".join(str(c) for c in caps))
    return 0


def _cmd_table(args) -> int:
    if args.which == "degree":
        grid = dp_degree(args.dmax, cap_profile(args.caps))
        print(f"caps\t{args.caps}")
        print("sources\t" + ",".join(grid.cap_sources()))
        print(grid.to_text(b_step=args.bstep))
    elif args.which == "monotone-degree":
        print(dp_monotone_degree(args.dmax).to_text())
    elif args.which == "monotone-dt":
        print(monotone_dt_table(args.dmax).to_text())
    elif args.which == "ds":
        beta = Fraction(args.beta)
        grid = dp_mixed_ds(beta, args.dmax, cap_profile(args.caps), step=args.step)
        mn = ds_influence_min(beta)
        print(f"caps\t{args.caps}")
        print(f"step\t{args.step}")
        print(grid.to_text(b_step=args.bstep))
        print(f"influence_min_k\t{mn.k}")
        print(f"influence_min_value\t{mn.value:.9f}")
    else:  # cs
        for d in range(1, args.dmax + 1):
            h = cs_harmonic_bound(d)
            print(f"{d}\t{h.numerator}/{h.denominator}\t{float(h):.9f}")
        print(f"sens_form_at_4\t{cs_sens_bound(4):.9f}")
    return 0


def _cmd_verify(args) -> int:
    corpus = parse_corpus(args.corpus)
    checks = run_theorem_suite(corpus)
    print(f"corpus\t{corpus.describe()}\t{len(corpus)}")
    print("check\tstatus\tchecked\tskipped\tleft\tright\twitness")
    for c in checks:
        print(c.row())
    bad = suite_failures(checks)
    print(f"failures\t{bad}")
    return 0 if bad == 0 else 1


def _cmd_family(args) -> int:
    f = family(args.name, args.k)
    text = f.to_tt()
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bfc",
        description="Exact analysis and bound certification for Boolean functions",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="measures and potentials of one function")
    src = pa.add_mutually_exclusive_group(required=True)
    src.add_argument("table", nargs="?", help="path to a .tt truth-table file")
    src.add_argument("--family", choices=FAMILY_NAMES)
    pa.add_argument("--k", type=int, default=None, help="family size parameter")
    pa.set_defaults(fn=_cmd_analyze)

    pl = sub.add_parser("lp-caps", help="block-sensitivity caps per degree")
    pl.add_argument("--dmax", type=int, default=14)
    pl.set_defaults(fn=_cmd_lp_caps)

    pt = sub.add_parser("table", help="bound tables")
    pt.add_argument(
        "which",
        choices=("degree", "monotone-degree", "monotone-dt", "ds", "cs"),
    )
    pt.add_argument("--dmax", type=int, default=30)
    pt.add_argument("--caps", choices=("square", "lp", "markov"), default="lp")
    pt.add_argument("--beta", default="1/2", help="mixing weight as num/den")
    pt.add_argument("--step", choices=("profile", "uniform"), default="profile")
    pt.add_argument("--bstep", type=int, default=25, help="row stride in grid output")
    pt.set_defaults(fn=_cmd_table)

    pv = sub.add_parser("verify", help="run the theorem suite over a corpus")
    pv.add_argument(
        "--corpus",
        required=True,
        help="all:N | monotone:N | random:N:COUNT:SEED | named:LIST",
    )
    pv.set_defaults(fn=_cmd_verify)

    pf = sub.add_parser("family", help="write a named family truth table")
    pf.add_argument("name", choices=FAMILY_NAMES)
    pf.add_argument("--k", type=int, default=None)
    pf.add_argument("--out", default=None)
    pf.set_defaults(fn=_cmd_family)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
