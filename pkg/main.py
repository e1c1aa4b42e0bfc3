#!/usr/bin/env python3
"""
rankforge - Rank-metric code laboratory

Gabidulin codes and circular-shift-based MRD codes over F_q: construction,
encoding, exhaustive MRD verification, code equivalence checks, XOR-count
benchmarks and reproduction of the worked examples.
"""

import argparse
import sys
import time
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from core.analysis import complexity_report
from core.circmrd import (
    CircCodeParams,
    PQChoice,
    Variant,
    apply_left,
    build_pq,
    code_set_equal,
    codebook,
    encode,
    gabidulin_coincidence,
    instance_from_text,
    instance_to_text,
    t_matrix,
    validate_pq,
    verify_mrd,
)
from core.config_manager import ConfigManager
from core.constants import (
    APP_DESCRIPTION,
    APP_NAME,
    APP_VERSION,
    BENCH_PRESETS,
    EXAMPLE_NAMES,
    EXIT_CAP_EXCEEDED,
    EXIT_INVALID_PARAMS,
    EXIT_IO_ERROR,
    EXIT_OK,
    EXIT_VALIDATION_FAILED,
    EXIT_VERDICT_FALSE,
    PATH_FAST,
    PATH_GENERIC,
    PQ_CHOICES,
    VARIANTS,
)
from core.diagnostics import SystemDiagnostics
from core.errors import EnumerationTooLarge, PreconditionViolated, RankForgeError
from core.finite_field import prime_field
from core.gabidulin import format_codebook
from core.generalized import generalized_gabidulin
from core.linalg import format_matrix, parse_matrix
from core.reproduction import run_example
from utils.config_validator import ConfigValidator
from utils.helpers import format_duration, parse_digit_string, parse_int_list, read_text, write_text
from utils.logger import setup_logger
from utils.validators import (
    validate_cap,
    validate_circulant_size,
    validate_dimensions,
    validate_exponents,
    validate_file_path,
    validate_message,
    validate_prime,
)


class ValidationFailed(RankForgeError):
    """A constructed instance failed its P/Q checks"""


def emit(text: str, output=None) -> None:
    """Write data to --output or stdout"""
    if output:
        write_text(output, text)
    else:
        sys.stdout.write(text)


def require(check) -> None:
    ok, message = check
    if not ok:
        raise PreconditionViolated(message)


def yes_no(flag) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def load_instance(path: str):
    ok, message = validate_file_path(path, must_exist=True)
    if not ok:
        raise FileNotFoundError(message)
    return instance_from_text(read_text(path))


# ----------------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------------

def cmd_construct(args, settings) -> int:
    require(validate_prime(args.q))
    require(validate_circulant_size(args.q, args.L))
    require(validate_dimensions(args.q, args.L, args.n, args.k))
    exponents = parse_int_list(args.exponents)
    require(validate_exponents(exponents, args.L, args.n))

    user_G = user_H = None
    if args.pq == PQChoice.USER.value:
        if not args.G:
            raise PreconditionViolated("--pq user needs --G FILE")
        user_G = parse_matrix(read_text(args.G))
        if args.H:
            user_H = parse_matrix(read_text(args.H))

    params = CircCodeParams(q=args.q, L=args.L, k=args.k, n=args.n, exponents=tuple(exponents),
                            variant=Variant(args.variant), pq_choice=PQChoice(args.pq),
                            user_G=user_G, user_H=user_H)
    instance = build_pq(params)
    report = validate_pq(instance)
    if not report.passed:
        for failure in report.failures:
            sys.stderr.write(f"validation: {failure}\n")
        raise ValidationFailed(f"instance failed {len(report.failures)} P/Q check(s)")
    emit(instance_to_text(instance), args.output)
    return EXIT_OK


def cmd_encode(args, settings) -> int:
    instance = load_instance(args.instance)
    if args.all:
        words = codebook(instance, settings["cap"], settings["chunk_size"])
        emit(format_codebook(words), args.output)
        return EXIT_OK
    if args.message is None:
        raise PreconditionViolated("give --message DIGITS or --all")
    require(validate_message(args.message, instance.q, instance.J * instance.params.k))
    m = prime_field(instance.q)(parse_digit_string(args.message))
    emit(format_matrix(encode(instance, m, args.path).matrix) + "\n", args.output)
    return EXIT_OK


def cmd_verify_mrd(args, settings) -> int:
    instance = load_instance(args.instance)
    report = verify_mrd(instance, settings["cap"], settings["chunk_size"])
    sys.stdout.write(f"min_rank={report.min_rank} MRD={yes_no(report.is_mrd)}\n")
    return EXIT_OK if report.is_mrd else EXIT_VERDICT_FALSE


def cmd_compare(args, settings) -> int:
    instance = load_instance(args.instance)
    cap = settings["cap"]
    verdicts = {}

    if instance.aux is not None:
        c1 = codebook(instance.with_variant(Variant.C1), cap, settings["chunk_size"])
        c2 = codebook(instance.with_variant(Variant.C2), cap, settings["chunk_size"])
        verdicts["C2 == T*C1"] = code_set_equal(c2, apply_left(t_matrix(instance), c1), cap)
    else:
        verdicts["C2 == T*C1"] = None

    try:
        generalized = generalized_gabidulin(instance)
    except PreconditionViolated as e:
        sys.stderr.write(f"generalized Gabidulin comparison skipped: {e}\n")
        verdicts[f"{instance.variant.value.upper()} == M~"] = None
    else:
        verdicts[f"{instance.variant.value.upper()} == M~"] = code_set_equal(
            codebook(instance, cap, settings["chunk_size"]), generalized.codebook(cap), cap)

    coincidence = gabidulin_coincidence(instance, cap)
    verdicts["Gabidulin coincidence"] = coincidence.coincides

    for label, value in verdicts.items():
        sys.stdout.write(f"{label}: {yes_no(value)}\n")
    sys.stdout.write(f"coincidence detail: {coincidence.status} ({coincidence.detail})\n")
    failed = any(value is False for label, value in verdicts.items() if label != "Gabidulin coincidence")
    return EXIT_VERDICT_FALSE if failed else EXIT_OK


def cmd_bench(args, settings) -> int:
    if args.preset:
        configs = BENCH_PRESETS[args.preset]
    elif None in (args.L, args.n, args.k):
        raise PreconditionViolated("give --preset or all of --L, --n, --k")
    else:
        configs = [(args.L, args.n, args.k)]

    begin = time.perf_counter()
    report = complexity_report(configs, timing=args.timing)
    settings["logger"].info(f"Benchmark of {len(report.rows)} rows took {format_duration(time.perf_counter() - begin)}")
    emit(report.to_csv() if args.csv else report.to_text(), args.output)
    return EXIT_OK if report.all_match else EXIT_VERDICT_FALSE


def cmd_examples(args, settings) -> int:
    names = EXAMPLE_NAMES if args.name == "all" else [args.name]
    status = EXIT_OK
    for name in names:
        result = run_example(name)
        sys.stdout.write(result.to_text())
        if not result.passed:
            first = next(label for label, ok in result.checks if not ok)
            sys.stderr.write(f"{name}: first mismatch at '{first}'\n")
            status = EXIT_VERDICT_FALSE
    return status


# ----------------------------------------------------------------------------
# Argument parsing
# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=APP_NAME, description=APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("--check", action="store_true", help="Run system diagnostics and exit")
    parser.add_argument("--verbose", action="store_true", help="Log progress (INFO) to stderr")
    parser.add_argument("--debug", action="store_true", help="Log everything (DEBUG) to stderr")
    parser.add_argument("--config", help="JSON configuration file (name under configs/ or a path)")
    parser.add_argument("--cap", type=int, help="Enumeration cap; overrides RANKFORGE_CAP and the config")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("construct", help="Build a circular-shift code instance")
    p.add_argument("--q", type=int, required=True, help="Prime field size")
    p.add_argument("--L", type=int, required=True, help="Circulant size, coprime to q")
    p.add_argument("--k", type=int, required=True, help="Code dimension")
    p.add_argument("--n", type=int, required=True, help="Number of columns, at most m_L")
    p.add_argument("--exponents", required=True, help="Comma-separated shift exponents l_0..l_{n-1}")
    p.add_argument("--variant", choices=VARIANTS, default=None, help="Code variant (default from config)")
    p.add_argument("--pq", choices=PQ_CHOICES, default=None, help="G_L/H_L choice (default from config)")
    p.add_argument("--G", help="Matrix file holding G_L (with --pq user)")
    p.add_argument("--H", help="Matrix file holding H_L (optional with --pq user)")
    p.add_argument("--output", help="Instance file to write (default stdout)")

    p = sub.add_parser("encode", help="Encode a message or dump the codebook")
    p.add_argument("--instance", required=True, help="Instance file")
    p.add_argument("--message", help="Digit string m_0 m_1 .. m_{k-1}, Jk digits")
    p.add_argument("--path", choices=[PATH_GENERIC, PATH_FAST], default=PATH_GENERIC,
                   help="Encoder path: generator matrix or index rotations")
    p.add_argument("--all", action="store_true", help="Encode every message in lexicographic order")
    p.add_argument("--output", help="Output file (default stdout)")

    p = sub.add_parser("verify-mrd", help="Enumerate the code and report its minimum rank")
    p.add_argument("--instance", required=True, help="Instance file")

    p = sub.add_parser("compare", help="Check C2 = T C1, the generalized Gabidulin form and Gabidulin coincidence")
    p.add_argument("--instance", required=True, help="Instance file")

    p = sub.add_parser("bench", help="Predicted vs measured XOR counts")
    p.add_argument("--preset", choices=sorted(BENCH_PRESETS), help="Named set of (L, n, k)")
    p.add_argument("--L", type=int, help="Odd prime circulant size")
    p.add_argument("--n", type=int, help="Number of columns")
    p.add_argument("--k", type=int, help="Code dimension")
    p.add_argument("--csv", action="store_true", help="CSV instead of the aligned table")
    p.add_argument("--timing", action="store_true", help="Add informational wall-times")
    p.add_argument("--output", help="Output file (default stdout)")

    p = sub.add_parser("examples", help="Reproduce the worked examples against embedded tables")
    p.add_argument("name", choices=EXAMPLE_NAMES + ["all"], help="Example to reproduce")

    return parser


COMMANDS = {
    "construct": cmd_construct,
    "encode": cmd_encode,
    "verify-mrd": cmd_verify_mrd,
    "compare": cmd_compare,
    "bench": cmd_bench,
    "examples": cmd_examples,
}


def load_settings(args, logger) -> dict:
    manager = ConfigManager()
    config = manager.load_config(args.config) if args.config else manager.get_default_config()
    is_valid, errors, _ = ConfigValidator().validate_full_config(config)
    if not is_valid:
        raise PreconditionViolated("invalid configuration: " + "; ".join(errors))
    # --verbose/--debug win over the configured console level
    level = "DEBUG" if args.debug else "INFO" if args.verbose else str(config["log_level"]).upper()
    logger = setup_logger(level=level, log_to_file=config.get("log_to_file") is True)
    cap = manager.get_enumeration_cap(args.cap)
    require(validate_cap(cap))
    return {"config": config, "cap": cap, "chunk_size": manager.get_chunk_size(), "logger": logger}


def main(argv=None) -> int:
    """Main application entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = "DEBUG" if args.debug else "INFO" if args.verbose else "WARNING"
    logger = setup_logger(level=level)

    if args.check:
        sys.stderr.write("Running System Diagnostics...\n")
        diag = SystemDiagnostics(include_examples=True)
        report, passed = diag.run_all()
        sys.stdout.write(report + "\n")
        return EXIT_OK if passed else EXIT_VERDICT_FALSE

    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INVALID_PARAMS

    try:
        settings = load_settings(args, logger)
        if args.command == "construct":
            args.variant = args.variant or settings["config"]["variant"]
            args.pq = args.pq or settings["config"]["pq_choice"]
        return COMMANDS[args.command](args, settings)
    except ValidationFailed as e:
        logger.error(str(e))
        return EXIT_VALIDATION_FAILED
    except EnumerationTooLarge as e:
        logger.error(str(e))
        return EXIT_CAP_EXCEEDED
    except (RankForgeError, ValueError) as e:
        logger.error(str(e))
        return EXIT_INVALID_PARAMS
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
