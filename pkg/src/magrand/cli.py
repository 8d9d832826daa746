"""``magrand`` command line: gen, analyze, witness, batch.

Exit status: 0 success, 1 verdict failure under ``--expect-random`` (or no
witness found), 2 usage, input or format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .codec import deserialize, serialize
from .core import MagSignature
from .errors import MagError, NoWitnessError
from .genlab import KINDS, GeneratorSpec, generate
from .reporting import AnalysisConfig, analyze, batch_summary
from .temporal import NoncontiguityQuery, find_noncontiguous_witness


class UsageError(Exception):
    pass


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    return vals


def _time_aspect(text: str):
    if text in ("none", "auto"):
        return None if text == "none" else text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"time aspect must be an integer or 'none', got {text!r}") from None


def _add_generator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau", type=_csv_ints, required=True, help="aspect sizes, aspect 1 first")
    p.add_argument("--kind", choices=KINDS, default="uniform-half")
    p.add_argument("--window", type=int, default=1, help="band width for --kind banded")
    p.add_argument("--period", type=int, default=1, help="pattern length for --kind periodic")
    p.add_argument("--time-aspect", type=_time_aspect, default="auto", help="aspect position or 'none'")


def _add_analysis_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c-deficiency", type=float, default=3.0)
    p.add_argument("--c-degree", type=float, default=2.0)
    p.add_argument("--rigidity-budget", type=int, default=AnalysisConfig.rigidity_budget)
    p.add_argument("--sweep-seed", type=int, default=0)
    p.add_argument("--expect-random", action="store_true",
                   help="exit 1 if any corollary verdict does not pass")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magrand", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a MAG and write a .magc file")
    _add_generator_flags(gen)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--payload", choices=("bits", "edges"), default="bits")
    gen.add_argument("-o", "--output", required=True)

    ana = sub.add_parser("analyze", help="analyze a .magc file into a JSON report")
    ana.add_argument("path")
    _add_analysis_flags(ana)
    ana.add_argument("-o", "--output", help="report path (default: stdout)")

    wit = sub.add_parser("witness", help="find a transtemporal/crosslayer witness for one query")
    wit.add_argument("path")
    wit.add_argument("--u", type=_csv_ints, required=True)
    wit.add_argument("--v", type=_csv_ints, required=True)
    wit.add_argument("--aspect", type=int, default=None, help="aspect position (default: time aspect)")
    wit.add_argument("-o", "--output")

    bat = sub.add_parser("batch", help="generate and analyze seeds s..s+k-1")
    _add_generator_flags(bat)
    bat.add_argument("--seed", type=int, default=0, help="first seed")
    bat.add_argument("--seeds", type=int, default=30, help="number of seeds")
    _add_analysis_flags(bat)
    bat.add_argument("--jobs", type=int, default=1)
    bat.add_argument("-o", "--output", required=True, help="output directory")
    return parser


def _spec(args, seed: int) -> GeneratorSpec:
    sig = MagSignature(args.tau, time_aspect=args.time_aspect)
    return GeneratorSpec(sig, args.kind, seed, args.window, args.period)


def _config(args, generator: dict | None = None) -> AnalysisConfig:
    return AnalysisConfig(
        c_deficiency=args.c_deficiency,
        c_degree=args.c_degree,
        rigidity_budget=args.rigidity_budget,
        sweep_seed=args.sweep_seed,
        generator=generator,
    )


def _spec_echo(spec: GeneratorSpec) -> dict:
    return {"kind": spec.kind, "seed": spec.seed, "window": spec.window, "period": spec.period}


def _read(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return deserialize(data)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    g = generate(_spec(args, args.seed))
    Path(args.output).write_bytes(serialize(g, args.payload))
    return 0


def cmd_analyze(args) -> int:
    report = analyze(_read(args.path), _config(args))
    _emit(report.to_json(), args.output)
    if args.expect_random and not report.all_corollaries_hold:
        return 1
    return 0


def cmd_witness(args) -> int:
    g = _read(args.path)
    q = NoncontiguityQuery.make(args.u, args.v, g.signature, args.aspect)
    result = find_noncontiguous_witness(g, q)
    _emit(json.dumps(result.as_dict(), sort_keys=True) + "\n", args.output)
    return 0


def _batch_one(spec: GeneratorSpec, config: AnalysisConfig, outdir: Path):
    g = generate(spec)
    (outdir / f"seed-{spec.seed}.magc").write_bytes(serialize(g))
    report = analyze(g, config)
    (outdir / f"seed-{spec.seed}.json").write_text(report.to_json())
    return report


def cmd_batch(args) -> int:
    if args.seeds < 1:
        raise UsageError("--seeds must be at least 1")
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    specs = [_spec(args, s) for s in range(args.seed, args.seed + args.seeds)]
    configs = [_config(args, _spec_echo(s)) for s in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_batch_one, specs, configs, [outdir] * len(specs)))
    else:
        reports = [_batch_one(s, c, outdir) for s, c in zip(specs, configs)]
    summary = batch_summary(reports)
    (outdir / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    if args.expect_random and not all(r.all_corollaries_hold for r in reports):
        return 1
    return 0


COMMANDS = {"gen": cmd_gen, "analyze": cmd_analyze, "witness": cmd_witness, "batch": cmd_batch}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except NoWitnessError as exc:
        print(f"magrand: no witness: {exc}", file=sys.stderr)
        return 1
    except (MagError, UsageError) as exc:
        print(f"magrand: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"magrand: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
