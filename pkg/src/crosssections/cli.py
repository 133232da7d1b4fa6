"""Command-line front end.

    python -m crosssections selfcheck
    python -m crosssections synth --config F --out G
    python -m crosssections audit --chain G [--trials N] [--seed S]
    python -m crosssections recognize --subspace F --context G
    python -m crosssections window --matrix F --r N

Reports go to stdout, diagnostics to stderr.  Exit status: 0 success,
1 at least one failed check, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import compressions, general, shift
from .chains import CheckRecord, audit, synth_general_chain, synth_shift_chain
from .matrices import Mat
from .scalar import Scalar, format_scalar
from .textio import (
    InputError,
    format_chain,
    format_matrix,
    parse_chain,
    parse_config,
    parse_context,
    parse_matrix,
    parse_subspace,
    read_text,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _emit(lines, out):
    for line in lines:
        print(line, file=out)


def _result(records, out):
    _emit((rec.line() for rec in records), out)
    clean = all(rec.passed for rec in records)
    print(f"RESULT\t{'clean' if clean else 'violation'}", file=out)
    return EXIT_OK if clean else EXIT_VIOLATION


# -- selfcheck --------------------------------------------------------------------

def _selfcheck_records(seed=0):
    rng = random.Random(seed)

    def rat():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))

    n = 12
    x = Mat([[Scalar(10 * i + j, rat()) for j in range(1, n + 1)] for i in range(1, n + 1)])
    recs = []
    ok = all(compressions.check_partial_identity(x, r) for r in range(1, n - 2))
    recs.append(CheckRecord("partial_identity", 0, ok, f"N={n} r=1..{n - 3}"))
    ok = (compressions.check_composition_identity(x, range(2, 8), (3, 4))
          and compressions.check_composition_identity(x, range(1, n + 1), (1, 5, 12)))
    recs.append(CheckRecord("composition_identity", 0, ok, "E={2..7},F={3,4}; E={1..12},F={1,5,12}"))

    seq = general.GeneralSequence(0, [-k for k in range(1, 9)], list(range(1, 9)))
    ok = all(general.rho_identities(seq, r) for r in range(1, seq.K - 2))
    recs.append(CheckRecord("rho_identities", 0, ok, f"c_hat=i+j r=1..{seq.K - 3}"))

    c = Mat([[2, 3, 5], [7, 11, 13], [17, 19, 23]])
    recs.append(CheckRecord("rho_multiplicative", 0, general.rho_multiplicative(c), "C=primes"))

    p = general.GeneralParams(2, 3, 5, 7)
    cert = general.schur_singular_identically(c, p, "printed")
    recs.append(CheckRecord("schur_singular_printed", 0, cert.holds, f"grid_points={cert.points}"))
    bad = general.schur_singular_identically(c, p, "elementary")
    coeff = general.schur_coefficient(c, p, (0, 2, 4), "elementary")
    expect = c[0, 0] * c[1, 1] * c[2, 2] * p.q2 * p.p2
    recs.append(CheckRecord(
        "schur_elementary_fails", 0, (not bad.holds) and coeff == expect,
        f"z1*w1*w3 coefficient={format_scalar(coeff)} expected={format_scalar(expect)}"))

    d = shift.Delta(1, Fraction(1, 2), Fraction(1, 3))
    good = shift.rank_rule_identically(d, shift.StrongParams(1, 1, -1))
    off = shift.rank_rule_identically(d, shift.StrongParams(1, 1, 1))
    recs.append(CheckRecord("rank_rule_strong", 0, good.holds and not off.holds,
                            "q=-x/b1 holds, q=1 fails"))

    gc = synth_general_chain(seq, 4, [1, 2, 3, 4], [5, 6, 7, 8], 1, 1)
    rep = audit(gc, trials=20, seed=seed)
    recs.append(CheckRecord("general_chain_audit", 0, rep.clean, f"R=4 status={rep.status}"))
    sseq = shift.ShiftSequence(0, [Fraction(1, k) for k in range(1, 9)])
    sc = synth_shift_chain(sseq, 5, 1, [3, 6, 2, 5, 7])
    rep = audit(sc, trials=20, seed=seed)
    recs.append(CheckRecord("shift_chain_audit", 0, rep.clean, f"R=5 status={rep.status}"))
    return recs


def cmd_selfcheck(args, out):
    return _result(_selfcheck_records(args.seed), out)


def cmd_synth(args, out):
    cfg = parse_config(read_text(args.config), args.config)
    chain = cfg.synthesize()
    text = format_chain(chain, cfg.trials, cfg.rng_seed)
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(args.out, 0, f"cannot write file ({exc.strerror})") from None
    print(f"SYNTH\tmode={cfg.mode}\tR={chain.R}\tout={args.out}", file=out)
    return EXIT_OK


def cmd_audit(args, out):
    chain, trials, seed = parse_chain(read_text(args.chain), args.chain)
    if args.trials is not None:
        trials = args.trials
    if args.seed is not None:
        seed = args.seed
    rep = audit(chain, trials=trials, seed=seed)
    out.write(rep.text())
    return EXIT_OK if rep.clean else EXIT_VIOLATION


def cmd_recognize(args, out):
    sub = parse_subspace(read_text(args.subspace), args.subspace)
    mode, ctx = parse_context(read_text(args.context), args.context)
    if sub.shape != (3, 3):
        raise InputError(args.subspace, 0, f"expected a subspace of 3x3 matrices, got {sub.shape}")
    if mode == "general":
        p = general.recognize_c_normal(sub, ctx)
        if p is None:
            print("RECOGNIZED\tnone", file=out)
        else:
            fields = " ".join(f"{n}={format_scalar(getattr(p, n))}" for n in ("p1", "p2", "q2", "q3"))
            print(f"RECOGNIZED\tC-normal\t{fields}", file=out)
    else:
        p = shift.recognize_shift(sub, ctx)
        if p is None:
            print("RECOGNIZED\tnone", file=out)
        else:
            names = [n for n in ("x", "y", "q", "qp") if hasattr(p, n)]
            fields = " ".join(f"{n}={format_scalar(getattr(p, n))}" for n in names)
            print(f"RECOGNIZED\t{shift.VARIANT_NAMES[type(p)]}\t{fields}", file=out)
    return EXIT_OK


def cmd_window(args, out):
    x = parse_matrix(read_text(args.matrix), args.matrix)
    if x.rows != x.cols:
        raise InputError(args.matrix, 0, "window needs a square matrix")
    try:
        w3 = compressions.window3(x, args.r)
        w2 = compressions.window2(x, args.r)
    except IndexError as exc:
        raise InputError(args.matrix, 0, str(exc)) from None
    print(f"WINDOW3\tr={args.r}", file=out)
    out.write(format_matrix(w3))
    print(f"WINDOW2\tr={args.r}", file=out)
    out.write(format_matrix(w2))
    if args.r + 3 <= x.rows:
        ok = compressions.check_partial_identity(x, args.r)
        return _result([CheckRecord("partial_identity", args.r, ok, f"N={x.rows}")], out)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="crosssections", description="Audit matrix cross-sections with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("selfcheck", help="run the built-in identity checks")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selfcheck)

    s = sub.add_parser("synth", help="synthesize a chain from a run config")
    s.add_argument("--config", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("audit", help="audit a chain file")
    s.add_argument("--chain", required=True)
    s.add_argument("--trials", type=int)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("recognize", help="recognize the normal form of a subspace")
    s.add_argument("--subspace", required=True)
    s.add_argument("--context", required=True)
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("window", help="print the 3- and 2-windows of a matrix at r")
    s.add_argument("--matrix", required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_window)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
