"""
Command line of the quantum group toolkit.

    python app.py mul H "Xp" "Xm"
    python app.py decompose tensor 3irr 3irr --N 3
    python app.py check rmatrix --format text

Exit status: 0 on success, 1 when a check fails or a computation raises,
2 on usage and parse errors.
"""
import argparse
import json
import logging
import random
import sys
from typing import Any, Callable, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel

from algebra.errors import ExpressionError, InvalidRootError, QuantumGroupError
from algebra.expressions import ALIASES, algebra_for, parse_element
from algebra.hopf import check_hopf_axioms, check_stars, check_twisted_star
from algebra.reports import CheckReport, combine_reports
from algebra.samples import random_element
from calculus.diffops import check_diffops
from calculus.gauge import check_curvature_linearity, check_gauge_shift, curvature, decompose_connection_space, random_connection
from calculus.wz import check_form_action, check_wz, cohomology, random_form, wz_coaction_covariance
from config import Settings, load_settings
from representations.action import (
    check_coaction,
    check_inverse_mapping,
    check_module_algebra,
    check_right_action,
    check_star_covariance,
    decompose_M,
)
from representations.decomposition import check_tensor_table, decompose_tensor
from representations.invariant import check_invariant_form_on_M, invariant_form_on_M
from representations.repcat import get_module, qdim, simple_module
from representations.rmatrix import check_r_matrix
from representations.structure import check_block_dims, check_radical_ideal, radical

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class CommandResult(BaseModel):
    command: str
    parameters: Dict[str, Any]
    status: str
    payload: Dict[str, Any]

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for key in sorted(self.payload):
            value = self.payload[key]
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:\n{value}")
            else:
                lines.append(f"{key}: {json.dumps(value, ensure_ascii=False) if not isinstance(value, str) else value}")
        return "\n".join(lines)


class CommandFailed(Exception):
    """A command completed but its result is a failure (exit 1)."""

    def __init__(self, result: CommandResult):
        super().__init__(result.status)
        self.result = result


# ------------------------------------------------------------------- checks

def _rng(settings: Settings) -> random.Random:
    return random.Random(settings.seed)


def _check_hopf(settings: Settings) -> CheckReport:
    N = settings.N
    return combine_reports("hopf", N, [check_hopf_axioms("H", N), check_hopf_axioms("F", N)])


def _check_stars(settings: Settings) -> CheckReport:
    N = settings.N
    rng = _rng(settings)
    samples = []
    for name in ("H", "F"):
        A = algebra_for(name, N)
        samples.extend((random_element(A, rng), random_element(A, rng)) for _ in range(settings.samples))
    return combine_reports("stars", N, [check_stars(N, samples), check_twisted_star(N), check_star_covariance(N)])


def _check_module_algebra(settings: Settings) -> CheckReport:
    N = settings.N
    parts = [check_module_algebra(N), check_coaction(N), check_right_action(N), check_inverse_mapping(N, _rng(settings))]
    return combine_reports("module-algebra", N, parts)


def _check_wz(settings: Settings) -> CheckReport:
    N, convention = settings.N, settings.two_form
    parts = [
        check_wz(N, convention, _rng(settings), settings.samples),
        wz_coaction_covariance(N, convention),
        check_form_action(N, convention),
    ]
    return combine_reports("wz", N, parts)


def _check_rmatrix(settings: Settings) -> CheckReport:
    return check_r_matrix(settings.N, V=simple_module(settings.N, 2))


def _check_invariant(settings: Settings) -> CheckReport:
    return check_invariant_form_on_M(settings.N, _rng(settings))


def _check_structure(settings: Settings) -> CheckReport:
    N = settings.N
    return combine_reports("structure", N, [check_radical_ideal(N), check_block_dims(N, _rng(settings))])


def _check_tensor_table(settings: Settings) -> CheckReport:
    return check_tensor_table()


def _check_gauge(settings: Settings) -> CheckReport:
    rng = _rng(settings)
    N, convention = settings.N, settings.two_form
    connection = random_connection(N, rng, convention)
    f = random_form(N, rng, convention, degree=0)
    parts = [check_curvature_linearity(connection, rng=rng, samples=settings.samples), check_gauge_shift(connection, f)]
    return combine_reports("gauge", N, parts)


CHECKS: Dict[str, Callable[[Settings], CheckReport]] = {
    "hopf": _check_hopf,
    "module-algebra": _check_module_algebra,
    "stars": _check_stars,
    "wz": _check_wz,
    "diffops": lambda settings: check_diffops(settings.N),
    "rmatrix": _check_rmatrix,
    "invariant": _check_invariant,
    "structure": _check_structure,
    "tensor-table": _check_tensor_table,
    "gauge": _check_gauge,
}


# ----------------------------------------------------------------- commands

def _element_payload(element) -> Dict[str, Any]:
    return {"result": str(element), "terms": element.to_json()}


def cmd_mul(args, settings: Settings) -> Dict[str, Any]:
    left = parse_element(args.left, args.algebra, settings.N, settings.two_form)
    right = parse_element(args.right, args.algebra, settings.N, settings.two_form)
    return _element_payload(left * right)


def cmd_normalize(args, settings: Settings) -> Dict[str, Any]:
    return _element_payload(parse_element(args.expression, args.algebra, settings.N, settings.two_form))


def cmd_check(args, settings: Settings) -> Dict[str, Any]:
    names = list(CHECKS) if args.name == "all" else [args.name]
    if args.name == "all" and settings.N != 3:
        names.remove("tensor-table")
    reports = [CHECKS[name](settings) for name in names]
    report = reports[0] if len(reports) == 1 else combine_reports("all", settings.N, reports)
    payload = report.summary()
    if not report.passed and report.asserted:
        raise CommandFailed(CommandResult(command="check", parameters={}, status="failed", payload=payload))
    return payload


def _table(frame: pd.DataFrame, settings: Settings):
    return frame.to_string(index=False) if settings.output_format == "text" else frame.to_dict("records")


def cmd_decompose(args, settings: Settings) -> Dict[str, Any]:
    N = settings.N
    if args.target == "M":
        summands = decompose_M(N)
        records = [s.model_dump() | {"flags": ", ".join(s.flags)} for s in summands]
        table = pd.DataFrame(records).to_string(index=False) if settings.output_format == "text" else records
        return {"summands": [s.label or f"dim{s.dimension}" for s in summands], "table": table}
    if args.target == "omega1":
        report = decompose_connection_space(N, settings.two_form)
    else:
        if len(args.labels) != 2:
            raise ExpressionError("decompose tensor needs two module labels", None)
        report = decompose_tensor(args.labels[0], args.labels[1], N)
    payload = report.summary()
    payload["table"] = _table(report.table(), settings)
    if not report.verified:
        raise CommandFailed(CommandResult(command="decompose", parameters={}, status="failed", payload=payload))
    return payload


def cmd_radical(args, settings: Settings) -> Dict[str, Any]:
    return radical(settings.N).summary()


def cmd_qdim(args, settings: Settings) -> Dict[str, Any]:
    module = get_module(args.label, settings.N)
    return {"module": module.label, "dimension": module.dim, "qdim": str(qdim(module))}


def cmd_scalar_product(args, settings: Settings) -> Dict[str, Any]:
    form = invariant_form_on_M(settings.N)
    entries = form.nonzero_entries()
    return {
        "nonzero": {f"({left}, {right})": value for (left, right), value in sorted(entries.items())},
        "rank": form.rank(),
        "hermitian": form.is_hermitian(),
    }


def cmd_curvature(args, settings: Settings) -> Dict[str, Any]:
    phi = parse_element(args.expression, "wz", settings.N, settings.two_form)
    rho = curvature(phi)
    return {"connection": str(phi), "curvature": str(rho), "flat": rho.is_flat()}


def cmd_cohomology(args, settings: Settings) -> Dict[str, Any]:
    result = cohomology(settings.N, settings.two_form)
    return result.model_dump() | {"euler_characteristic": result.euler_characteristic, "nontrivial": result.nontrivial}


COMMANDS = {
    "mul": cmd_mul,
    "normalize": cmd_normalize,
    "check": cmd_check,
    "decompose": cmd_decompose,
    "radical": cmd_radical,
    "qdim": cmd_qdim,
    "scalar-product": cmd_scalar_product,
    "curvature": cmd_curvature,
    "cohomology": cmd_cohomology,
}


# ------------------------------------------------------------------- parser

def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--N", type=int, default=default, help="order of the root of unity (odd, >= 3)")
    parser.add_argument("--format", dest="output_format", choices=["json", "text"], default=default)
    parser.add_argument("--two-form", dest="two_form", choices=["wz", "manin"], default=default)
    parser.add_argument("--log-level", dest="log_level", default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgroup", description="Exact computations in the quantum groups H and F at an odd root of unity")
    _global_options(parser, suppress=False)
    commands = parser.add_subparsers(dest="command", required=True)
    algebras = sorted(ALIASES)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        _global_options(sub, suppress=True)
        return sub

    sub = add("mul", "multiply two elements")
    sub.add_argument("algebra", choices=algebras)
    sub.add_argument("left")
    sub.add_argument("right")

    sub = add("normalize", "bring an element to normal form")
    sub.add_argument("algebra", choices=algebras)
    sub.add_argument("expression")

    sub = add("check", "run an identity check")
    sub.add_argument("name", choices=sorted(CHECKS) + ["all"])

    sub = add("decompose", "decompose a module into indecomposables")
    sub.add_argument("target", choices=["M", "omega1", "tensor"])
    sub.add_argument("labels", nargs="*")

    add("radical", "Jacobson radical of H and the simple blocks")

    sub = add("qdim", "quantum dimension of a catalog module")
    sub.add_argument("label")

    add("scalar-product", "the invariant scalar product on the quantum plane")

    sub = add("curvature", "curvature of a connection one-form")
    sub.add_argument("expression")

    add("cohomology", "cohomology of the differential")
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr)


def _emit(result: CommandResult, settings: Optional[Settings], stream=None) -> None:
    stream = stream or sys.stdout
    text = result.to_text() if settings is not None and settings.output_format == "text" else result.to_json()
    print(text, file=stream)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse the command line, execute one command and print its result.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        The process exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_USAGE if exit_.code else EXIT_OK

    try:
        settings = load_settings(N=args.N, output_format=args.output_format, two_form=args.two_form, log_level=args.log_level)
    except (InvalidRootError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings.log_level)

    parameters = {key: value for key, value in vars(args).items() if key != "command" and value is not None}
    parameters.update(N=settings.N, two_form=settings.two_form)
    try:
        payload = COMMANDS[args.command](args, settings)
    except CommandFailed as failure:
        result = failure.result.model_copy(update={"command": args.command, "parameters": parameters})
        _emit(result, settings)
        print(f"error: {args.command} failed", file=sys.stderr)
        return EXIT_FAILED
    except ExpressionError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except QuantumGroupError as error:
        logger.debug("command %s raised", args.command, exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_FAILED

    _emit(CommandResult(command=args.command, parameters=parameters, status="ok", payload=payload), settings)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
