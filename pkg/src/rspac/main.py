"""
rspac command line.

    rspac selftest
    rspac profile 128 64 --output pac_128_64.txt
    rspac biases --n 64 --k 32 --design-snr 5.0 --output biases.txt
    rspac simulate --config run.toml --snr 2.0 2.5 3.0 --output results.csv
    rspac encode --scheme rs-pac-il --input data.bin --output code.npy
    rspac decode --scheme rs-pac-il --input llrs.npy --output data.bin

Exit codes: 0 success, 1 configuration error, 2 self-test failure.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from rspac import __version__
from rspac.config import get_settings
from rspac.exceptions import ConfigError, RspacError
from rspac.infrastructure.file_impl import write_bias_file
from rspac.infrastructure.interfaces import BiasKey
from rspac.modules.pac import (
    PacCodecError,
    build_rm_profile,
    default_design_snr,
    default_profile,
    estimate_biases,
    format_profile,
    load_profile,
    save_profile,
)
from rspac.modules.sim import SchemeId, SimConfig, build_runner, emit_csv, run_sweep, write_csv
from rspac.selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_SELFTEST = 2

# LLR magnitude given to hard bits read by ``decode``
HARD_BIT_LLR = 40.0

_SCHEMES = [s.value for s in SchemeId]


def _configure_logging(level: Optional[str]) -> None:
    name = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest()
    for r in results:
        status = "ok" if r.passed else "FAIL"
        line = f"{status:4} {r.name:20} {r.seconds:7.2f}s"
        print(f"{line}  {r.detail}" if r.detail else line)
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.error(f"Self-test failed: {', '.join(failed)}")
        return EXIT_SELFTEST
    return EXIT_OK


def _cmd_profile(args: argparse.Namespace) -> int:
    try:
        profile = build_rm_profile(args.n, args.k, tie_break=args.tie_break)
    except PacCodecError as e:
        raise ConfigError(str(e)) from e
    if args.output:
        save_profile(profile, args.output)
        logger.info(f"Wrote PAC({args.n},{args.k}) profile to {args.output}")
    else:
        sys.stdout.write(format_profile(profile))
    return EXIT_OK


def _cmd_biases(args: argparse.Namespace) -> int:
    settings = get_settings()
    try:
        profile = load_profile(args.profile) if args.profile else default_profile(args.n, args.k)
        n, k = profile.n, profile.k
        snr = default_design_snr(n, k) if args.design_snr is None else args.design_snr
        samples = args.samples or settings.bias_samples
        seed = settings.bias_seed if args.seed is None else args.seed
        biases = estimate_biases(profile, snr, samples, seed)
    except PacCodecError as e:
        raise ConfigError(str(e)) from e
    key = BiasKey(n=n, k=k, design_snr_db=snr, samples=samples, seed=seed)
    if args.output:
        write_bias_file(args.output, key, biases)
        logger.info(f"Wrote {n} biases to {args.output}")
    else:
        print(key.header())
        for b in biases:
            print(repr(b))
    return EXIT_OK


def _sim_config(args: argparse.Namespace) -> SimConfig:
    return SimConfig.load(
        args.config,
        scheme=args.scheme,
        snr_db=args.snr,
        max_frames=getattr(args, "max_frames", None),
        target_bit_errors=getattr(args, "target_bit_errors", None),
        seed=getattr(args, "seed", None),
        workers=getattr(args, "workers", None),
        output=getattr(args, "csv", None),
    )


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _sim_config(args)
    if args.show_config:
        sys.stdout.write(cfg.to_toml())
        return EXIT_OK
    records = run_sweep(cfg)
    if cfg.output is not None:
        emit_csv(records, cfg.output)
        logger.info(f"Wrote {len(records)} records to {cfg.output}")
    else:
        write_csv(records, sys.stdout)
    return EXIT_OK


def _cmd_encode(args: argparse.Namespace) -> int:
    runner = build_runner(_sim_config(args))
    try:
        payload = Path(args.input).read_bytes()
    except OSError as e:
        raise ConfigError(f"cannot read {args.input}: {e}") from e
    code = runner.encode(runner.data_from_bytes(payload))
    np.save(args.output, code)
    logger.info(
        f"Encoded {len(payload)} bytes into {code.size} {runner.scheme.value} code bits",
        extra={"scheme": runner.scheme.value},
    )
    return EXIT_OK


def _cmd_decode(args: argparse.Namespace) -> int:
    runner = build_runner(_sim_config(args))
    try:
        received = np.load(args.input)
    except (OSError, ValueError) as e:
        raise ConfigError(f"cannot read {args.input}: {e}") from e
    if np.issubdtype(received.dtype, np.integer) or received.dtype == np.bool_:
        llrs = HARD_BIT_LLR * (1.0 - 2.0 * received.astype(np.float64))
    else:
        llrs = received.astype(np.float64)
    try:
        data, stats = runner.decode(llrs)
    except ValueError as e:
        raise ConfigError(f"input does not fit a {runner.scheme.value} frame: {e}") from e
    Path(args.output).write_bytes(runner.data_to_bytes(data))
    if stats.rs_failures:
        logger.warning(f"{stats.rs_failures} RS words could not be decoded")
    if stats.budget_exhausted:
        logger.warning(f"{stats.budget_exhausted} inner decodes ran out of visits")
    return EXIT_OK


def _add_scheme_options(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--config", type=Path, help="TOML simulation config")
    parser.add_argument("--scheme", choices=_SCHEMES, required=required, help="Coding scheme")
    parser.add_argument("--snr", type=float, nargs="+", help="Eb/N0 points in dB")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rspac",
        description="Concatenated RS-PAC codes and the RS-CC baseline",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default from RSPAC_LOG_LEVEL)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("selftest", help="Run the invariant checks")
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("profile", help="Generate an RM rate profile")
    p.add_argument("n", type=int, help="Code length N")
    p.add_argument("k", type=int, help="Data length K")
    p.add_argument("--tie-break", choices=["index", "reliability"], default="index")
    p.add_argument("--output", type=Path, help="Profile file (stdout if omitted)")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("biases", help="Estimate cutoff-rate biases")
    p.add_argument("--n", type=int, default=64, help="Code length N")
    p.add_argument("--k", type=int, default=32, help="Data length K")
    p.add_argument("--profile", type=Path, help="Profile file (overrides --n/--k)")
    p.add_argument("--design-snr", type=float, help="Design Eb/N0 in dB")
    p.add_argument("--samples", type=int, help="Monte-Carlo samples (>= 10000)")
    p.add_argument("--seed", type=int, help="Estimation seed")
    p.add_argument("--output", type=Path, help="Bias file (stdout if omitted)")
    p.set_defaults(func=_cmd_biases)

    p = sub.add_parser("simulate", help="Measure BER/FER/ANV over an SNR grid")
    _add_scheme_options(p, required=False)
    p.add_argument("--max-frames", type=int, help="Frame cap per SNR point")
    p.add_argument("--target-bit-errors", type=int, help="Bit errors per SNR point")
    p.add_argument("--seed", type=int, help="Root seed")
    p.add_argument("--workers", type=int, help="Worker processes")
    p.add_argument("--output", dest="csv", type=Path, help="CSV file (stdout if omitted)")
    p.add_argument(
        "--show-config", action="store_true", help="Print the effective configuration and exit"
    )
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("encode", help="Encode a data file into a code bit array")
    _add_scheme_options(p, required=True)
    p.add_argument("--input", type=Path, required=True, help="Data bytes")
    p.add_argument("--output", type=Path, required=True, help="Code bits (.npy)")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="Decode an LLR or bit array into a data file")
    _add_scheme_options(p, required=True)
    p.add_argument("--input", type=Path, required=True, help="LLRs (float) or bits (int), .npy")
    p.add_argument("--output", type=Path, required=True, help="Decoded data bytes")
    p.set_defaults(func=_cmd_decode)

    return parser


def cli(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    _configure_logging(args.log_level)
    try:
        return int(args.func(args))
    except ConfigError as e:
        print(f"rspac: configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except RspacError as e:
        print(f"rspac: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(cli())
