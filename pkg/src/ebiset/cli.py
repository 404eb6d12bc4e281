"""Command-line front end.

Exit status: 0 success or PASS, 1 verification FAIL or descent failure,
2 usage error, 3 exhaustive budget exceeded.
"""
from __future__ import annotations

import argparse
import sys

from .construct import construct_max
from .descent import descend_to, format_trace
from .errors import (AssertionBreach, BudgetExceeded, DescentStuck,
                     InvalidInstance, TargetUnreachable)
from .formula import compute_params, ebi_set
from .graph import Instance, counts, format_labeling
from .oracle import verify_instance

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ebiset",
        description="Edge-balanced index sets of K(m,n) for odd m >= n.")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_args(sp):
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)
        sp.add_argument("--format", choices=("text", "summary"), default="text")

    instance_args(sub.add_parser("params", help="print k, j and the maximum index"))
    sp = sub.add_parser("construct", help="write the maximum-index labeling")
    instance_args(sp)
    sp.add_argument("--out", help="file to write (default: stdout)")
    sp = sub.add_parser("descend", help="descend from the maximum labeling to --target")
    instance_args(sp)
    sp.add_argument("--target", type=int, default=0)
    sp.add_argument("--out", help="file for the trace (default: stdout)")
    sp = sub.add_parser("set", help="print the index set; --out writes one witness per value")
    instance_args(sp)
    sp.add_argument("--out", help="file for the witness trace")
    sp = sub.add_parser("verify", help="check the index set against the enumeration oracle")
    instance_args(sp)
    sp.add_argument("--budget", type=int, help="exhaustive labeling budget")
    sp.add_argument("--sample", type=int, help="draw this many random labelings instead")
    sp.add_argument("--seed", type=int, help="seed for --sample (required with it)")
    sp.add_argument("--workers", type=int, default=1, help="processes for the exhaustive run")
    return p


def _summary(inst, index) -> str:
    p = compute_params(inst)
    return f"m={inst.m} n={inst.n} k={p.k} j={p.j} max={p.max_index} index={index}"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _counts_line(lab) -> str:
    c = counts(lab)
    return f"e0={c.e0} e1={c.e1} v0={c.v0} v1={c.v1} index={c.index}"


def _params(inst, args):
    p = compute_params(inst)
    if args.format == "summary":
        print(_summary(inst, p.max_index))
    else:
        print(f"k={p.k} j={p.j} max={p.max_index}")
    return EXIT_OK


def _construct(inst, args):
    lab = construct_max(inst)
    if args.format == "summary":
        if args.out:
            _emit(format_labeling(lab), args.out)
        print(_summary(inst, counts(lab).index))
        return EXIT_OK
    _emit(format_labeling(lab), args.out)
    print(_counts_line(lab), file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def _descend(inst, args):
    if inst.n == 1:
        raise TargetUnreachable(f"EBI({inst}) = {{2}}; descent needs n >= 3")
    trace = descend_to(construct_max(inst), args.target)
    if args.format == "summary":
        if args.out:
            _emit(format_trace(trace), args.out)
        print(_summary(inst, counts(trace.final).index))
        return EXIT_OK
    _emit(format_trace(trace), args.out)
    keys = " ".join(str(t) for t in sorted(trace.checkpoints, reverse=True))
    print(f"checkpoints: {keys} swaps: {len(trace.steps)}",
          file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def _set(inst, args):
    values = ebi_set(inst).values
    if args.out:
        if inst.n == 1:
            _emit(format_labeling(construct_max(inst)), args.out)
        else:
            _emit(format_trace(descend_to(construct_max(inst), 0)), args.out)
    if args.format == "summary":
        print(_summary(inst, max(values)))
    else:
        print("{" + ", ".join(map(str, values)) + "}")
    return EXIT_OK


def _verify(inst, args):
    if args.sample is not None and args.seed is None:
        raise _Usage("--sample needs an explicit --seed")
    if args.seed is not None and args.sample is None:
        raise _Usage("--seed only applies with --sample")
    result = verify_instance(inst, budget=args.budget, sample=args.sample or 0,
                             seed=args.seed, workers=args.workers,
                             parts=max(args.workers, 1))
    sys.stdout.write(result.report.to_text())
    observed = "{" + ", ".join(map(str, sorted(result.report.observed))) + "}"
    verdict = "PASS" if result.ok else "FAIL"
    tag = "SAMPLED " if result.report.mode == "sampled" else ""
    print(f"{tag}{verdict} observed {observed} expected "
          "{" + ", ".join(map(str, result.expected)) + "}")
    if result.report.mode == "sampled":
        if result.missing:
            print(f"not seen in the sample: {list(result.missing)}")
        if result.extra:
            print(f"outside the closed form: {list(result.extra)}")
    elif result.missing or result.extra:
        print(f"missing {list(result.missing)} extra {list(result.extra)}")
        for t, w in result.witnesses.items():
            print(f"witness for index {t}:")
            sys.stdout.write(format_labeling(w))
    return EXIT_OK if result.ok else EXIT_FAIL


class _Usage(Exception):
    pass


_COMMANDS = {"params": _params, "construct": _construct, "descend": _descend,
             "set": _set, "verify": _verify}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        inst = Instance(args.m, args.n)
        if getattr(args, "target", None) is not None and args.target % 2:
            raise _Usage(f"--target must be even, got {args.target}")
        return _COMMANDS[args.command](inst, args)
    except (InvalidInstance, _Usage) as e:
        print(f"ebiset {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TargetUnreachable as e:
        print(f"ebiset {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"ebiset {args.command}: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (AssertionBreach, DescentStuck) as e:
        print(f"ebiset {args.command}: {e}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as e:
        print(f"ebiset {args.command}: {e}", file=sys.stderr)
        return EXIT_FAIL
