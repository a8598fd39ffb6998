"""
Command-line interface for the Torelli toolkit.

    python cli.py gamma --g 4 --b 6 "x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1"
    python cli.py suite --g 5 --b 3 --seed 1

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from config import CliConfig, configure_logging, settings
from errors import TorelliError
import operations
from suite import CHECKS, SuiteOptions, run_suite
from surface import SurfaceParams

logger = logging.getLogger("torelli-cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _global_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--g", type=int, default=None, help="genus (number of cross caps)")
    parent.add_argument("--b", type=int, default=1, help="number of boundary components")
    parent.add_argument("--output", choices=["text", "json"], default="json")
    parent.add_argument("--log-level", default=None, help="override TORELLI_LOG_LEVEL")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _global_options()
    parser = argparse.ArgumentParser(prog="torelli", description=f"{settings.PROJECT_NAME} {settings.PROJECT_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("gamma", "decide membership in Gamma and print the O/E profile"),
        ("nf", "normal form in the quotient pi_g^{b-1}"),
        ("act", "push-map action of a parity-subgroup word on H_1"),
        ("certify", "certificate writing a Gamma element as conjugated relators"),
    ):
        command = commands.add_parser(name, parents=[parent], help=help_text)
        command.add_argument("word")

    verify = commands.add_parser("verify-cert", parents=[parent], help="check a certificate file against a word")
    verify.add_argument("certificate", type=Path)
    verify.add_argument("word")

    rs = commands.add_parser("rs", parents=[parent], help="Reidemeister-Schreier presentation of the parity subgroup")
    rs.add_argument("--with-relators", action="store_true", help="start from the presentation of pi instead of the free group")

    commands.add_parser("catalog", parents=[parent], help="normal generators, lifts and product formulas")

    suite = commands.add_parser("suite", parents=[parent], help="run the verification suites")
    suite.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    suite.add_argument("--check", action="append", choices=sorted(CHECKS), help="run only these checks")
    suite.add_argument("--workers", type=int, default=None)

    convert = commands.add_parser("convert", parents=[parent], help="rewrite a relator in another relator family")
    convert.add_argument("family", choices=["TripleSquare", "PairCommutator"])
    convert.add_argument("indices", type=int, nargs="+")
    convert.add_argument("--target", choices=["TripleSquare", "PairCommutator"], required=True)

    correct = commands.add_parser("correct", parents=[parent], help="correction twists for c_i -> c_i + n_i d_b")
    correct.add_argument("n", type=int, nargs="+")

    commands.add_parser("identities", parents=[parent], help="check the mod-square identities between relator families")

    serve = commands.add_parser("serve", parents=[parent], help="serve the JSON API with uvicorn")
    serve.add_argument("--host", default=settings.API_HOST)
    serve.add_argument("--port", type=int, default=settings.API_PORT)
    return parser


def _config(args: argparse.Namespace, seed: Optional[int] = None) -> CliConfig:
    if args.g is None:
        raise TorelliError(f"{args.command} needs --g")
    return CliConfig(g=args.g, b=args.b, output=args.output, seed=seed if seed is not None else settings.DEFAULT_SEED)


def _params(args: argparse.Namespace) -> SurfaceParams:
    config = _config(args)
    return SurfaceParams(config.g, config.b)


def _read_certificate(path: Path) -> List[Dict[str, Any]]:
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise TorelliError(f"cannot read certificate {path}: {exc}") from exc
    if not isinstance(data, list):
        raise TorelliError(f"{path} does not hold a list of certificate entries")
    return data


def _render_text(data: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat(value)}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(_render_text(item, indent) if isinstance(item, dict) else f"{pad}{_flat(item)}"
                         for item in data)
    return f"{pad}{data}"


def _is_flat(value: Any) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(item, dict) for item in items)


def _flat(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_flat(item) for item in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_flat(v)}" for k, v in value.items()) + "}"
    return str(value)


def _emit(data: Any, output: str) -> None:
    if output == "json":
        print(json.dumps(data, indent=2))
    else:
        print(_render_text(data))


def cmd_gamma(args):
    _emit(operations.gamma_report(args.word, _params(args)), args.output)
    return EXIT_OK


def cmd_nf(args):
    _emit(operations.normal_form_report(args.word, _params(args)), args.output)
    return EXIT_OK


def cmd_act(args):
    _emit(operations.action_report(args.word, _params(args)), args.output)
    return EXIT_OK


def cmd_certify(args):
    _emit(operations.certify_report(args.word, _params(args)), args.output)
    return EXIT_OK


def cmd_verify_cert(args):
    params = _params(args)
    result = operations.verify_report(_read_certificate(args.certificate), args.word, params)
    _emit(result, args.output)
    return EXIT_OK if result["valid"] else EXIT_FAILED


def cmd_rs(args):
    _emit(operations.rs_report(_params(args), with_relators=args.with_relators), args.output)
    return EXIT_OK


def cmd_catalog(args):
    if args.g is None:
        raise TorelliError("catalog needs --g")
    _emit(operations.catalog_report(args.g, args.b), args.output)
    return EXIT_OK


def cmd_suite(args):
    config = _config(args, seed=args.seed)
    options = SuiteOptions(config.g, config.b, config.seed)
    report = run_suite(options, names=args.check, workers=args.workers)
    if args.output == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_convert(args):
    _emit(operations.convert_report(args.family, args.indices, args.target), args.output)
    return EXIT_OK


def cmd_correct(args):
    result = operations.correction_report(args.n, _params(args))
    _emit(result, args.output)
    return EXIT_OK if result["verified"] else EXIT_FAILED


def cmd_identities(args):
    if args.g is None:
        raise TorelliError("identities needs --g")
    result = operations.identities_report(args.g)
    _emit(result, args.output)
    return EXIT_OK if result["passed"] else EXIT_FAILED


def cmd_serve(args):
    import uvicorn

    logger.info(f"Starting {settings.PROJECT_NAME} API on {args.host}:{args.port}")
    uvicorn.run("main:app", host=args.host, port=args.port, reload=False)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "gamma": cmd_gamma,
    "nf": cmd_nf,
    "act": cmd_act,
    "certify": cmd_certify,
    "verify-cert": cmd_verify_cert,
    "rs": cmd_rs,
    "catalog": cmd_catalog,
    "suite": cmd_suite,
    "convert": cmd_convert,
    "correct": cmd_correct,
    "identities": cmd_identities,
    "serve": cmd_serve,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except (TorelliError, ValidationError) as exc:
        logger.error(f"{args.command} failed: {exc}", exc_info=settings.DEBUG)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
