"""Command-line interface: ``piclass freq|decide|verify|corpus``.

Exit codes: 0 success (or decision true), 1 decision false or a failed
verification, 2 usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from piclass.arith import PrimeSet
from piclass.errors import PiclassError
from piclass.group import DEFAULT_CAP, named_group
from piclass.pifreq import SCHEMA, FrequencyTable, decide_hypercentral_hall_pi, frequency_table, s_sigma
from piclass.verify import ALL_SUBSETS, default_corpus, parse_corpus, run_corpus, verify_group

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _prime_set(text: str) -> PrimeSet:
    try:
        return PrimeSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _derived(F: FrequencyTable, primes: list[int]) -> dict:
    per_q = {}
    for q in primes:
        s_q = s_sigma(F, PrimeSet.of(q))
        s_qp = s_sigma(F, PrimeSet.excluding(q))
        per_q[str(q)] = {
            "s_q_total": s_q.total,
            "s_q_q_part": s_q.q_part(q),
            "s_q_prime_total": s_qp.total,
            "s_q_prime_q_part": s_qp.q_part(q),
        }
    return {"N": F.N, "w1": F[1], "primes": per_q}


def _render_table(F: FrequencyTable, derived: dict) -> str:
    lines = [f"pi = {F.pi}", "size  classes"]
    lines += [f"{n:<5} {w}" for n, w in F.counts]
    lines.append(f"N = {derived['N']}")
    lines.append(f"w(1) = {derived['w1']}")
    for q, d in derived["primes"].items():
        lines.append(
            f"q={q}: S_q total {d['s_q_total']} (q-part {d['s_q_q_part']}); "
            f"S_q' total {d['s_q_prime_total']} (q-part {d['s_q_prime_q_part']})"
        )
    return "\n".join(lines)


def cmd_freq(args) -> int:
    G = named_group(args.group, cap=args.cap)
    F = frequency_table(G, args.pi)
    derived = _derived(F, args.pi.primes_dividing(G.order))
    if args.format == "json":
        print(json.dumps({**F.to_json_obj(), "derived": derived}))
    else:
        print(_render_table(F, derived))
    return EXIT_OK


def _load_table(source: str, pi: PrimeSet | None, cap: int) -> FrequencyTable:
    path = Path(source)
    if path.is_file():
        F = FrequencyTable.from_json(path.read_text())
        if pi is not None and pi != F.pi:
            raise UsageError(f"--pi {pi} disagrees with the table's pi {F.pi}")
        return F
    if pi is None:
        raise UsageError("--pi is required when deciding from a group expression")
    return frequency_table(named_group(source, cap=cap), pi)


def cmd_decide(args) -> int:
    F = _load_table(args.source, args.pi, args.cap)
    decision = decide_hypercentral_hall_pi(F)
    if args.format == "json":
        print(json.dumps({
            "schema": SCHEMA,
            "pi": str(F.pi),
            "N": F.N,
            "hypercentral_hall": decision,
        }))
    else:
        print("true" if decision else "false")
    return EXIT_OK if decision else EXIT_FALSE


def cmd_verify(args) -> int:
    G = named_group(args.group, cap=args.cap)
    verdicts = verify_group(G, args.pi or ALL_SUBSETS, args.frobenius_bound)
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "verdicts": [v.to_json_obj() for v in verdicts]}))
    else:
        for v in verdicts:
            pi = "-" if v.pi is None else str(v.pi)
            q = "-" if v.q is None else v.q
            details = " ".join(f"{k}={val}" for k, val in v.details.items())
            print(f"{v.check_name:<26} {pi:<8} {q!s:<3} {'pass' if v.passed else 'FAIL'}  {details}")
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FALSE


def cmd_corpus(args) -> int:
    if args.path is None or (args.path == "default.corpus" and not Path(args.path).exists()):
        text = default_corpus()
    else:
        try:
            text = Path(args.path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read corpus: {exc}") from None
    if args.pi_policy == "listed":
        if not args.pi:
            raise UsageError("--pi-policy listed needs at least one --pi")
        policy = args.pi
    else:
        policy = ALL_SUBSETS
    # an explicit --cap beats the corpus header
    report = run_corpus(parse_corpus(text), policy, cap=args.cap, frobenius_bound=args.frobenius_bound)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(json.dumps(report.to_json_obj(), indent=2) + "\n")
        (out / "report.txt").write_text(report.to_text())
        print(f"wrote {out / 'report.json'} and {out / 'report.txt'}")
        print("OK" if report.ok else "FAILED")
    elif args.format == "json":
        print(json.dumps(report.to_json_obj(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="piclass",
        description="Class-size frequency tables of pi-elements in permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap", type=_positive, default=None,
                       help=f"enumeration cap (default {DEFAULT_CAP}, env PICLASS_CAP)")
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("freq", help="print the frequency table of a group")
    p.add_argument("group", help="group expression, e.g. 'C(3)xD(10)'")
    p.add_argument("--pi", type=_prime_set, required=True, help="prime set: {2,3}, {2}', or *")
    common(p)
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("decide", help="decide hypercentral Hall pi-subgroup from the table")
    p.add_argument("source", help="group expression or frequency-table JSON file")
    p.add_argument("--pi", type=_prime_set, help="prime set (required for group expressions)")
    common(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="run every check on one group")
    p.add_argument("group")
    p.add_argument("--pi", type=_prime_set, action="append",
                   help="prime set to test (repeatable; default: all subsets of pi(G))")
    p.add_argument("--frobenius-bound", type=_positive, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="verify a corpus file (default: the bundled corpus)")
    p.add_argument("path", nargs="?", help="corpus file; omitted means the bundled corpus")
    p.add_argument("--pi-policy", choices=("all-subsets", "listed"), default="all-subsets")
    p.add_argument("--pi", type=_prime_set, action="append", help="prime set for --pi-policy listed")
    p.add_argument("--out", help="directory for report.json and report.txt")
    p.add_argument("--frobenius-bound", type=_positive, default=None)
    common(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, PiclassError, ValueError) as exc:
        print(f"piclass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
