"""Command line entry point.

Exit codes: 0 success, 1 a check or reproduction failed (or the solver ran
out of budget), 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import abelian, dedekind, diophantine, files, suite, witnesses
from .errors import ConfigError, NotRealizable, PreconditionError, ReproductionFailure, ResourceExceeded

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_analyze(args, out) -> int:
    config = files.load_config(args.config)
    report = dedekind.classify(config, budget=args.budget)
    print(report.summary(), file=out)
    print(files.REPORT_MARKER, file=out)
    print(_dump(report.to_dict()), file=out)
    return EXIT_OK if report.valid else EXIT_INPUT


def cmd_verify(args, out) -> int:
    config = files.load_config(args.config)
    data = files.load_report(args.report)
    fresh = dedekind.classify(config, budget=args.budget).to_dict()
    if data.get("valid") is False or not fresh["valid"]:
        ok = data.get("valid") == fresh["valid"]
        print(f"validity: {'agrees' if ok else 'DISAGREES'}", file=out)
        return EXIT_OK if ok else EXIT_FAIL
    ok = True
    for name in dedekind.PREDICATES:
        verdict = data.get(name)
        if not isinstance(verdict, dict):
            print(f"{name}: missing", file=out)
            ok = False
            continue
        replayed = dedekind.replay(config, name, verdict)
        agrees = verdict.get("verdict") == fresh[name]["verdict"]
        status = "replays" if replayed else "DOES NOT REPLAY"
        status += ", agrees" if agrees else ", DISAGREES with fresh analysis"
        print(f"{name}: {verdict.get('verdict')} {status}", file=out)
        ok = ok and replayed and agrees
    return EXIT_OK if ok else EXIT_FAIL


def cmd_suite(args, out) -> int:
    failed = False
    try:
        rows = suite.reproduce_paper_examples()
        print(f"reproduction: PASS ({', '.join(name for name, _ in rows)})", file=out)
    except ReproductionFailure as exc:
        print(f"reproduction: FAIL {exc}", file=out)
        failed = True

    results = [
        suite.check_nontor(args.samples, suite.torsion_sampler(args.seed)),
        suite.check_prufer_consistency(
            args.samples, suite.ConfigSampler(seed=args.seed, finitely_generated=True)
        ),
        suite.check_implication_chain(suite.ConfigSampler(seed=args.seed).configs(args.samples)),
    ]
    found = suite.find_non_localization_overring(
        abelian.make_group(1), suite.ConfigSampler(seed=args.seed)
    )
    for r in results:
        print(r.line(), file=out)
        for i, cfg in r.failures:
            print(f"  sample {i}: {files.config_to_json(cfg)}", file=out)
        failed = failed or not r.passed
    if found is None:
        print("converse (Z): FAIL no non-localization overring found", file=out)
        failed = True
    else:
        print(f"converse (Z): PASS {files.config_to_json(found)}", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_random(args, out) -> int:
    try:
        moduli = [int(d) for d in args.torsion.split(",") if d.strip()] if args.torsion else []
        G = abelian.make_group(args.rank, moduli)
    except ValueError as exc:
        raise ConfigError("--torsion", str(exc)) from None
    sampler = suite.ConfigSampler(seed=args.seed, group=G)
    for cfg in sampler.configs(args.count):
        report = dedekind.classify(cfg, budget=args.budget)
        verdicts = {name: v.holds for name, v in report.verdicts().items()}
        line = {"config": cfg.to_dict(), **verdicts, "is_pid": report.is_pid}
        print(json.dumps(line), file=out)
    return EXIT_OK


def cmd_hilbert(args, out) -> int:
    system = files.load_system(args.system)
    if system.is_homogeneous and all(d == diophantine.NONNEGATIVE for d in system.var_domains):
        hb = diophantine.hilbert_basis(system, budget=args.budget)
        print(_dump({"hilbert_basis": [list(g) for g in hb]}), file=out)
        return EXIT_OK
    v = diophantine.solve_nonneg(system, budget=args.budget)
    print(_dump({"feasible": v is not None, "witness": None if v is None else list(v)}), file=out)
    return EXIT_OK


def cmd_examples(args, out) -> int:
    table = witnesses.verification_table()
    for v in table:
        print(f"{v.name:<22} {'Verified' if v.verified else 'Failed':<9} {v.detail}", file=out)
    return EXIT_OK if all(v.verified for v in table) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overrings",
        description="Decide localization / well-centered / almost well-centered for overrings "
        "of a Dedekind domain given by class data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_budget(p):
        p.add_argument("--budget", type=int, default=diophantine.DEFAULT_BUDGET,
                       help="solver step budget (frontier expansions)")
        return p

    p = with_budget(sub.add_parser("analyze", help="classify the overring described by a config file"))
    p.add_argument("config")
    p.set_defaults(func=cmd_analyze)

    p = with_budget(sub.add_parser("verify", help="replay the certificates of an analyze report"))
    p.add_argument("config")
    p.add_argument("report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", help="run the seeded theorem checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_suite)

    p = with_budget(sub.add_parser("random", help="classify random realizable configs over one group"))
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--torsion", default="", help="comma-separated moduli, e.g. 2,4")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_random)

    p = with_budget(sub.add_parser("hilbert", help="Hilbert basis or feasibility of a system file"))
    p.add_argument("system")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("examples", help="verify the explicit ring examples")
    p.set_defaults(func=cmd_examples)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ConfigError, NotRealizable, PreconditionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
