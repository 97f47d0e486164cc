"""Command-line front end: classification queries, basis emission, and the
verification sweeps with machine-readable reports.

Exit codes: 0 all checks passed, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algebra import Field
from .classify import classification_record
from .exact import ExactMatrix
from .quotient import classify_quotient, transfer_conditions_complex, transfer_conditions_real
from .spinbasis import spinbasis
from .verify import SUITE_NAMES, run_suites

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _matrix_payload(mat: ExactMatrix):
    return {"side": mat.side, "entries": mat.entry_quads()}


def _emit(payload, as_json: bool, text_renderer):
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        text_renderer(payload)


def cmd_classify(args) -> int:
    p, q = args.p, args.q
    try:
        record = classification_record(p, q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    payload = record.to_dict()
    if (p + q) % 2 == 1:
        payload["quotient_complex"] = classify_quotient(p, q, Field.COMPLEX).to_dict()
        payload["transfer_complex"] = transfer_conditions_complex(p, q).to_dict()
    if (p - q) % 8 in (1, 5):
        payload["quotient_real"] = classify_quotient(p, q, Field.REAL).to_dict()
        payload["transfer_real"] = transfer_conditions_real(p, q).to_dict()

    def render(d):
        print(f"Cl({p},{q}): ring {d['ring']}, p-q mod 8 = {d['p_minus_q_mod8']}, "
              f"idempotent degree {d['idempotent_degree']}, "
              f"representation class {d['rep_class']}")
        for key in ("quotient_complex", "quotient_real"):
            if key in d:
                qd = d[key]
                print(f"  {key.replace('_', ' ')}: class {qd['class']} "
                      f"{{{', '.join(qd['symmetries'])}}}")

    _emit(payload, args.json, render)
    return 0


def cmd_spinbasis(args) -> int:
    n = args.n
    if n < 2:
        print("error: arity must be at least 2", file=sys.stderr)
        return USAGE_ERROR
    if n > args.max_n:
        print(f"error: arity {n} exceeds the cap; raise --max-n", file=sys.stderr)
        return USAGE_ERROR
    basis = spinbasis(n)
    payload = {
        "n": n,
        "side": basis.side,
        "matrices": [_matrix_payload(m) for m in basis.mats],
    }

    def render(d):
        print(f"canonical spin basis for {n} generators, side {d['side']}")
        for idx, m in enumerate(basis.mats, start=1):
            print(f"E{idx}:")
            for row in m.rows:
                print("   " + "  ".join(f"{v!r:>6}" for v in row))

    _emit(payload, args.json, render)
    return 0


def cmd_verify(args) -> int:
    names = args.suites or ["all"]
    try:
        report = run_suites(names, max_n=args.max_n, seed=args.seed,
                            parallel=args.parallel)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return USAGE_ERROR
    payload = report.to_dict()

    def render(d):
        for s in d["suites"]:
            cts = s["counts"]
            status = "ok" if s["ok"] else "FAILED"
            print(f"[{status}] {s['suite']}: {cts['passed']} passed, "
                  f"{cts['failed']} failed, "
                  f"{cts['expected_failures']} expected failures "
                  f"({s['seconds']}s)")
            for c in s["checks"]:
                if not c["passed"] and not c["expected_failure"]:
                    print(f"    FAIL {c['name']}  {c['detail']}")
                elif c["expected_failure"]:
                    mark = "XFAIL" if not c["passed"] else "XPASS!"
                    print(f"    {mark} {c['name']}")
        print(f"total: {d['totals']}  wall {d['seconds']}s")

    _emit(payload, args.json, render)
    return 0 if report.ok else CHECK_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a machine-readable JSON report")
    common.add_argument("--text", dest="json", action="store_false",
                        help="emit a human-readable report (default)")
    common.add_argument("--max-n", type=int,
                        default=int(os.environ.get("SPINSYM_MAX_N", "8")),
                        help="arity cap for sweeps and emission (default 8)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property sweeps")
    common.add_argument("--parallel", type=int,
                        default=int(os.environ.get("SPINSYM_PARALLEL", "1")),
                        help="number of worker processes for verify")

    parser = argparse.ArgumentParser(
        prog="spinsym",
        description="Exact Clifford-algebra engine: classification, spinor "
        "bases, discrete-symmetry operators and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common],
                       help="ring/periodicity/quotient classification")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("spinbasis", parents=[common],
                       help="emit the canonical generator matrices")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_spinbasis)

    v = sub.add_parser("verify", parents=[common],
                       help="run verification suites")
    v.add_argument("suites", nargs="*",
                   help=f"suites to run: {', '.join(SUITE_NAMES)} or all")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
