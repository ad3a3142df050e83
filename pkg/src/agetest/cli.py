"""``agetest`` command line.

Exit status: 0 on success, 1 on usage or input errors, 2 when the variance
estimate of a tested sample is degenerate (zero).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import montecarlo as mc
from .generators import (
    LFR_CONSTANTS,
    RNG_ID,
    Family,
    SampleFormatError,
    SeedSpec,
    gen_sequence,
    make_spec,
    read_sample,
    scenario,
    write_sample,
)
from .kernels import KernelParams
from .kinds import TestKind
from .procedures import run_test
from .variance import BLOCK_RULES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEGENERATE = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    input: Path | None = None
    spec: object = None
    kind: TestKind | None = None
    params: KernelParams = KernelParams()
    alpha: float = 0.05
    n: int | None = None
    r: int = 10_000
    seed: int = 0
    threads: int | None = None
    fmt: str = "text"
    out: Path | None = None
    keep_draws: bool = False
    dual: bool = False
    table: str | None = None
    sigma_target: float | None = None
    block_rule: str = "cbrt"


def _add_spec_args(p):
    g = p.add_argument_group("sequence design")
    g.add_argument("--scenario", help="S1..S16")
    g.add_argument("--family", help="null-exp, makeham, lfr or weibull")
    g.add_argument("--m", type=int, help="window size (dependence order)")
    g.add_argument("--a", type=float, help="shape parameter of the alternative")


def _add_block_rule(p):
    p.add_argument("--block-rule", choices=sorted(BLOCK_RULES), default="cbrt",
                   help="block length floor(n^(1/3)) (cbrt, default) or floor(sqrt(n))")


def _add_common(p, *, test=True, mc_args=False, fmt=True):
    if test:
        p.add_argument("--test", required=True, help="deshpande, hp or ahmad")
    p.add_argument("--b", type=float, default=0.5, help="Deshpande scale fraction in (0, 1)")
    p.add_argument("--alpha", type=float, default=0.05)
    _add_block_rule(p)
    if mc_args:
        p.add_argument("--n", type=int, required=True, help="sample size")
        p.add_argument("--r", type=int, default=10_000, help="replications")
        p.add_argument("--seed", type=int, default=0, help="master seed")
        p.add_argument("--threads", type=int, help=f"worker threads (default ${mc.THREADS_ENV} or 1)")
        p.add_argument("--keep-draws", action="store_true", help="include per-replication values (json)")
    if fmt:
        p.add_argument("--format", dest="fmt", choices=("csv", "json", "text"), default="text")
        p.add_argument("--out", type=Path, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agetest", description="Exponentiality tests for associated lifetimes.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("test", help="run one test on a data file")
    p.add_argument("input", type=Path, help="one non-negative decimal per line; '#' lines ignored")
    _add_common(p)
    p.add_argument("--dual", action="store_true", help="test against DFRA / NWU / IMRL instead")

    p = sub.add_parser("generate", help="write a simulated sequence")
    _add_spec_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, required=True, help="sample file; provenance goes to <out>.json")

    for name, what in (("size", "simulated size under a null design"),
                       ("power", "simulated power under an alternative design"),
                       ("estimators", "quality of the long-run sigma estimate")):
        p = sub.add_parser(name, help=what)
        _add_spec_args(p)
        _add_common(p, mc_args=True)
        if name == "estimators":
            p.add_argument("--sigma-target", type=float, help="k*sigma to compare against (default: tabulated)")

    p = sub.add_parser("reproduce", help="rerun a whole simulation table as CSV")
    p.add_argument("table", help=", ".join(mc.TABLE_IDS))
    p.add_argument("--r", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int)
    p.add_argument("--b", type=float, default=0.5)
    p.add_argument("--alpha", type=float, default=0.05)
    _add_block_rule(p)
    p.add_argument("--out", type=Path)
    return parser


def _resolve_spec(args):
    if args.scenario:
        if args.family or args.m is not None:
            raise UsageError("give either --scenario or --family/--m, not both")
        return scenario(args.scenario, args.a)
    if not args.family:
        raise UsageError("a sequence design is required: --scenario or --family with --m")
    family = Family.parse(args.family)
    if args.m is None:
        raise UsageError("--family needs --m")
    try:
        return make_spec(family, args.m, args.a)
    except ValueError as exc:
        if family is Family.LINEAR_FAILURE_RATE:
            raise UsageError(f"{exc}; supported lfr combinations: m in (2, 3, 5, 10), "
                             f"a in {tuple(sorted(LFR_CONSTANTS))}") from None
        raise


def config_from_args(args) -> CliConfig:
    cmd = args.subcommand
    get = lambda name, default=None: getattr(args, name, default)
    kind = TestKind.parse(args.test) if get("test") else None
    params = KernelParams(get("b", 0.5))
    spec = _resolve_spec(args) if cmd in ("generate", "size", "power", "estimators") else None
    if get("n") is not None and args.n < 1:
        raise UsageError(f"--n must be positive, got {args.n}")
    table = get("table")
    if cmd == "reproduce" and table not in mc.TABLE_IDS:
        raise UsageError(f"unknown table {table!r}; choose from {', '.join(mc.TABLE_IDS)}")
    return CliConfig(
        subcommand=cmd, input=get("input"), spec=spec, kind=kind, params=params,
        alpha=get("alpha", 0.05), n=get("n"), r=get("r", 10_000), seed=get("seed", 0),
        threads=get("threads"), fmt=get("fmt", "csv" if cmd == "reproduce" else "text"),
        out=get("out"), keep_draws=get("keep_draws", False), dual=get("dual", False),
        table=table, sigma_target=get("sigma_target"), block_rule=get("block_rule", "cbrt"),
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def _text_block(d: dict) -> str:
    width = max(len(k) for k in d)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in d.items())


def cmd_test(config: CliConfig) -> int:
    try:
        x = read_sample(config.input)
    except OSError as exc:
        raise UsageError(f"cannot read {config.input}: {exc.strerror}") from None
    outcome = run_test(x, config.kind, config.params, config.alpha, config.dual, config.block_rule)
    d = outcome.to_dict()
    if config.fmt == "json":
        text = json.dumps(d, indent=2) + "\n"
    else:
        flat = {
            "test": d["kind"], "alternative": d["alternative"], "n": d["n"],
            "raw_statistic": d["raw_statistic"], "theta0": d["theta0"],
            "sigma_hat": d["sigma"]["sigma_hat"], "block_length": d["sigma"]["block_length"],
            "standardized": d["standardized"], "p_value": d["p_value"], "alpha": d["alpha"],
            "reject": d["reject"], "degenerate": d["degenerate"],
            "iid_standardized": d["iid_standardized"], "iid_p_value": d["iid_p_value"],
            "iid_reject": d["iid_reject"],
        }
        text = mc.rows_to_csv([flat], tuple(flat)) if config.fmt == "csv" else _text_block(flat)
    _emit(text, config.out)
    if outcome.degenerate:
        print("degenerate: the long-run sigma estimate is zero; no decision", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_generate(config: CliConfig) -> int:
    x = gen_sequence(config.spec, config.n, SeedSpec(config.seed))
    out = Path(config.out)
    try:
        write_sample(out, x)
        provenance = dict(config.spec.describe(), n=config.n, master_seed=config.seed, stream_id=0, rng=RNG_ID)
        Path(str(out) + ".json").write_text(json.dumps(provenance, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None
    return EXIT_OK


def _mc_config(config: CliConfig) -> mc.MonteCarloConfig:
    return mc.MonteCarloConfig(kind=config.kind, spec=config.spec, n=config.n, r=config.r,
                               alpha=config.alpha, master_seed=config.seed, params=config.params,
                               block_rule=config.block_rule)


def _emit_report(config: CliConfig, report, draws) -> None:
    d = report.to_dict()
    if config.fmt == "json":
        meta = {"subcommand": config.subcommand, "spec": config.spec.describe(), "b": config.params.b,
                "block_rule": config.block_rule}
        _emit(mc.report_json(report, meta, draws if config.keep_draws else None) + "\n", config.out)
    elif config.fmt == "csv":
        _emit(mc.rows_to_csv([d], tuple(d)), config.out)
    else:
        _emit(_text_block(d), config.out)


def cmd_size_power(config: CliConfig) -> int:
    run = mc.run_size_experiment if config.subcommand == "size" else mc.run_power_experiment
    report, draws = run(_mc_config(config), threads=config.threads, keep_draws=True)
    _emit_report(config, report, draws)
    return EXIT_OK


def cmd_estimators(config: CliConfig) -> int:
    report, draws = mc.run_estimator_experiment(_mc_config(config), config.sigma_target,
                                                threads=config.threads, keep_draws=True)
    _emit_report(config, report, draws)
    return EXIT_OK


def cmd_reproduce(config: CliConfig) -> int:
    def progress(row):
        print(f"{row['table']} {row['test']} {row['scenario']} a={row.get('a')} n={row['n']} done",
              file=sys.stderr)

    rows, columns = mc.reproduce_table(config.table, r=config.r, seed=config.seed, threads=config.threads,
                                       params=config.params, alpha=config.alpha,
                                       block_rule=config.block_rule, progress=progress)
    _emit(mc.rows_to_csv(rows, columns), config.out)
    return EXIT_OK


COMMANDS = {
    "test": cmd_test,
    "generate": cmd_generate,
    "size": cmd_size_power,
    "power": cmd_size_power,
    "estimators": cmd_estimators,
    "reproduce": cmd_reproduce,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; 2 is reserved for degenerate statistics here
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        config = config_from_args(args)
        return COMMANDS[config.subcommand](config)
    except (UsageError, SampleFormatError, ValueError) as exc:
        print(f"agetest: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
