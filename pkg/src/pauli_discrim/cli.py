"""Command-line front end: ``pauli-discrim {discriminate,region,eb-check,verify}``.

Data goes to stdout in the requested format; diagnostics go to stderr.
Exit codes: 0 success, 1 "no" answer or failed verification, 2 bad input,
3 internal consistency failure.
"""

import argparse
import csv
import json
import logging
import os
import sys

from . import channels, discrimination, verify
from .errors import ConsistencyError, ValidationError

SCHEMA_VERSION = "1"
DEFAULT_SEED = 42
SEED_ENV = "PAULI_DISCRIM_SEED"

log = logging.getLogger("pauli_discrim")


class UsageError(Exception):
    pass


def parse_probs(text):
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse probabilities {text!r}") from None
    if len(values) != 4:
        raise UsageError(f"expected 4 comma-separated probabilities, got {text!r}")
    total = sum(values)
    if total != 1.0 and abs(total - 1.0) <= channels.SUM_TOL:
        log.warning("probabilities %s sum to %.17g; renormalizing", text, total)
    return values


def _emit(record, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump(record, out)
        out.write("\n")
        return
    for key, value in record["results"].items():
        if isinstance(value, float):
            value = f"{value:.15g}"
        elif isinstance(value, list):
            value = ", ".join(f"{v:.15g}" if isinstance(v, float) else str(v) for v in value)
        out.write(f"{key}: {value}\n")


def _channel_pair(args):
    if args.q1 is not None or args.q2 is not None:
        if args.q1 is None or args.q2 is None or args.probs1 or args.probs2:
            raise UsageError("use either --q1/--q2 or --probs1/--probs2")
        inputs = {"q1": args.q1, "q2": args.q2}
        return channels.depolarizing(args.q1), channels.depolarizing(args.q2), inputs
    if args.probs1 is None or args.probs2 is None:
        raise UsageError("need --q1 and --q2, or --probs1 and --probs2")
    p1, p2 = parse_probs(args.probs1), parse_probs(args.probs2)
    inputs = {"probs1": p1, "probs2": p2}
    return channels.PauliChannel(tuple(p1)), channels.PauliChannel(tuple(p2)), inputs


def cmd_discriminate(args):
    ch1, ch2, inputs = _channel_pair(args)
    inputs["p"] = args.p
    rep = discrimination.discriminate(discrimination.DiscriminationProblem(ch1, ch2, args.p))
    results = {
        "r": list(rep.r.r),
        "r_product": rep.r.product,
        "err_unentangled": rep.err_unentangled,
        "optimal_bloch_axis": list(rep.optimal_bloch_axis),
        "err_entangled": rep.err_entangled,
        "improvement": rep.improvement,
        "entanglement_helps": rep.entanglement_helps,
        "boundary": rep.boundary,
    }
    _emit({"schema_version": SCHEMA_VERSION, "command": "discriminate",
           "inputs": inputs, "results": results}, args.format)
    return 0


def cmd_region(args):
    for name in ("q2", "q1_min", "q1_max"):
        v = getattr(args, name)
        if not 0.0 <= v <= 1.0:
            raise UsageError(f"--{name.replace('_', '-')} must lie in [0, 1]")
    if args.q1_min > args.q1_max:
        raise UsageError("--q1-min exceeds --q1-max")
    if args.grid < 2:
        raise UsageError("--grid must be at least 2")
    rows = discrimination.region_sweep(args.q2, args.q1_min, args.q1_max, args.grid)
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["q1", "p_lower", "p_upper"])
        for row in rows:
            writer.writerow([f"{v:.15g}" for v in row])
    finally:
        if args.out:
            out.close()
    return 0


def cmd_eb_check(args):
    if (args.q is None) == (args.probs is None):
        raise UsageError("give exactly one of --q or --probs")
    if args.q is not None:
        ch, inputs = channels.depolarizing(args.q), {"q": args.q}
    else:
        probs = parse_probs(args.probs)
        ch, inputs = channels.PauliChannel(tuple(probs)), {"probs": probs}
    rep = channels.is_entanglement_breaking(ch)
    results = {"is_entanglement_breaking": rep.is_entanglement_breaking,
               "min_pt_eigenvalue": rep.min_pt_eigenvalue}
    _emit({"schema_version": SCHEMA_VERSION, "command": "eb-check",
           "inputs": inputs, "results": results}, args.format)
    return 0 if rep.is_entanglement_breaking else 1


def cmd_verify(args):
    if args.samples < 1 or args.grid < 6:
        raise UsageError("--samples must be >= 1 and --grid >= 6")
    print(f"seed: {args.seed}  samples: {args.samples}  grid: {args.grid}")
    results = verify.run_all(args.samples, args.seed, args.grid)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        note = f"  ({res.note})" if res.note else ""
        print(f"{status}  {res.name}  worst={res.worst:.3e}{note}")
        for example in res.counterexamples:
            print(f"      counterexample: {example}")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} properties passed")
    return 1 if failed else 0


def _default_seed():
    env = os.environ.get(SEED_ENV)
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pauli-discrim",
        description="Entanglement-assisted discrimination of qubit Pauli channels.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("discriminate", help="error probabilities for one problem")
    d.add_argument("--q1", type=float, help="depolarizing parameter of channel 1")
    d.add_argument("--q2", type=float, help="depolarizing parameter of channel 2")
    d.add_argument("--probs1", help="Pauli weights of channel 1, e.g. 1,0,0,0")
    d.add_argument("--probs2", help="Pauli weights of channel 2")
    d.add_argument("--p", type=float, default=0.5, help="prior of channel 1")
    d.add_argument("--format", choices=("json", "text"), default="json")
    d.set_defaults(func=cmd_discriminate)

    r = sub.add_parser("region", help="CSV of the prior interval where entanglement helps")
    r.add_argument("--q2", type=float, default=0.25)
    r.add_argument("--q1-min", type=float, default=0.0)
    r.add_argument("--q1-max", type=float, default=0.5)
    r.add_argument("--grid", type=int, default=200)
    r.add_argument("--out", help="output path (default stdout)")
    r.set_defaults(func=cmd_region)

    e = sub.add_parser("eb-check", help="PPT entanglement-breaking test")
    e.add_argument("--q", type=float, help="depolarizing parameter")
    e.add_argument("--probs", help="Pauli weights a,b,c,d")
    e.add_argument("--format", choices=("json", "text"), default="json")
    e.set_defaults(func=cmd_eb_check)

    v = sub.add_parser("verify", help="run the seeded property suite")
    v.add_argument("--samples", type=int, default=10000)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--grid", type=int, default=24)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        code = args.func(args)
        sys.stdout.flush()
        return code
    except (UsageError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # downstream closed the pipe early (e.g. `| head`)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
