"""
MinRep Command Line

Every check and table of the toolbox as a subcommand that prints one
machine-readable report on stdout. Diagnostics go to stderr.

Exit codes: 0 success, 1 usage error, 2 verification failure.

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

try:
    from utils.minrep_config import get_minrep_config
except ImportError:
    from pathlib import Path
    sys.path.insert(0, str(Path(__file__).resolve().parent))
    from utils.minrep_config import get_minrep_config

from acceptance import run_all
from classify import (
    SU,
    RealFormSpec,
    classify,
    ktype_pencil,
    ktypes_slnR,
    ktypes_su,
    lattice_check,
    parse_real_form,
    slnR_ktype_weights,
    table1_expected,
)
from envelope import MIRABOLIC_1, MIRABOLIC_N1, ParabolicSpec, iota
from liealg import Weight, set_bracket_fault
from sl3kernel import (
    admissible_m,
    is_m_invariant,
    kernel_report,
    lambda2a_coefficients,
    x_congruence_residue,
    x_element,
)
from symdecomp import decompose_s2, fa_space
from utils.errors import MinRepError, ResourceLimitError, VerificationError
from utils.reporting import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION,
    STATUS_FAIL,
    STATUS_INFO,
    STATUS_PASS,
    Report,
    parse_rational,
)
from verma import (
    HWLabel,
    annihilates_hwv,
    casimir_scalar,
    expected_casimir,
    generalized_verma_report,
    is_finite_dimensional,
    lambda_ia,
    solve_annihilator_weights,
)

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("decompose-s2", "annihilator", "casimir", "gvm-check", "classify",
               "table1", "ktypes", "sl3-kernel", "lambda2a", "verify-all")


class UsageError(Exception):
    """Bad command line; maps to exit code 1."""


class MinRepArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of exiting with status 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _status(ok: bool) -> str:
    return STATUS_PASS if ok else STATUS_FAIL


def _require_range(name: str, value: int, low: int, high: int):
    if not low <= value <= high:
        raise UsageError(f"{name}={value} out of range {low}..{high}")


def parse_weight(text: str):
    try:
        return Weight(tuple(parse_rational(x) for x in text.split(",")))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


# -----------------------------------------------------------------------------
# Commands
# -----------------------------------------------------------------------------

def cmd_decompose_s2(n: int) -> Report:
    _require_range("n", n, 2, get_minrep_config().max_n_decompose)
    result = decompose_s2(n)
    return Report("decompose-s2", {"n": n}, _status(result.passed), result.to_json())


def cmd_annihilator(n: int, a: Fraction) -> Report:
    _require_range("n", n, 2, get_minrep_config().max_n_decompose)
    solution = solve_annihilator_weights(n, a)
    params = {"n": n, "a": a}
    if solution.all_weights:
        return Report("annihilator", params, STATUS_INFO, solution.to_json())
    space = fa_space(n, a)
    weights = []
    confirmed = True
    for lw in solution.labeled:
        annihilated = annihilates_hwv(space, lw.weight)
        confirmed = confirmed and annihilated
        weights.append({
            "weight": lw.weight,
            "labels": list(lw.labels),
            "annihilated": annihilated,
            "finite_dimensional": any(is_finite_dimensional(HWLabel(n, i, a)) for i in lw.labels),
        })
    payload = dict(solution.to_json(), weights=weights)
    return Report("annihilator", params, _status(confirmed), payload)


def cmd_casimir(n: int, a: Fraction) -> Report:
    _require_range("n", n, 2, get_minrep_config().max_n_decompose)
    expected = expected_casimir(n, a)
    values = [{"i": i, "weight": lambda_ia(n, i, a), "casimir": casimir_scalar(lambda_ia(n, i, a))}
              for i in range(1, n + 1)]
    ok = all(v["casimir"] == expected for v in values)
    return Report("casimir", {"n": n, "a": a}, _status(ok), {"expected": expected, "values": values})


def cmd_gvm_check(n: int, a: Fraction, parabolic: str = "both", weight=None) -> Report:
    _require_range("n", n, 3, get_minrep_config().max_n_decompose)
    kinds = (MIRABOLIC_1, MIRABOLIC_N1) if parabolic == "both" else (parabolic,)
    checks = [generalized_verma_report(n, a, ParabolicSpec(kind, n), weight) for kind in kinds]
    params = {"n": n, "a": a, "parabolic": parabolic, "weight": weight}
    return Report("gvm-check", params, _status(all(c.passed for c in checks)), {"checks": checks})


def cmd_classify(form, a: Fraction, nonreal: bool = False) -> Report:
    certs = classify(form, a, nonreal)
    params = {"form": form, "a": None if nonreal else a, "nonreal": nonreal}
    return Report("classify", params, STATUS_INFO, {"count": len(certs), "certificates": certs})


def cmd_table1(form, a: Fraction, nonreal: bool = False) -> Report:
    certs = classify(form, a, nonreal)
    expected = table1_expected(form, a, nonreal)
    params = {"form": form, "a": None if nonreal else a, "nonreal": nonreal}
    payload = {"count": len(certs), "expected": expected, "certificates": certs}
    return Report("table1", params, _status(len(certs) == expected), payload)


def cmd_ktypes(form, a: Fraction, count: int = 5, nonreal: bool = False) -> Report:
    if count < 1:
        raise UsageError("count must be at least 1")
    entries = []
    ok = True
    for cert in classify(form, a, nonreal):
        entry = {"family": cert.family, "labels": list(cert.labels)}
        if form.kind == SU:
            if cert.seed is None:
                entry["ktypes"] = None
            else:
                entry["ktypes"] = ktypes_su(cert, count)
                entry["pencil"] = ktype_pencil(cert, count)
        else:
            weights = slnR_ktype_weights(cert, count)
            on_lattice = all(lattice_check(form, mu) for mu in weights)
            ok = ok and on_lattice
            entry.update(degrees=ktypes_slnR(cert, count), ktypes=weights,
                         pencil=ktype_pencil(cert, count), on_lattice=on_lattice)
        entries.append(entry)
    params = {"form": form, "a": None if nonreal else a, "count": count, "nonreal": nonreal}
    return Report("ktypes", params, _status(ok), {"certificates": entries})


def cmd_sl3_kernel(a: Fraction, m_max: int) -> Report:
    _require_range("m_max", m_max, 1, get_minrep_config().max_m_max)
    report = kernel_report(a, m_max)
    ok = report.m_values == admissible_m(a, m_max) and all(is_m_invariant(e.pair) for e in report.entries)
    return Report("sl3-kernel", {"a": a, "m_max": m_max}, _status(ok), report.to_json())


def cmd_lambda2a(a: Fraction, weight=None) -> Report:
    solution = lambda_ia(3, 2, -a)
    weight = solution if weight is None else weight
    result = lambda2a_coefficients(a, weight)
    congruent = x_congruence_residue(a).is_zero()
    iota_ok = iota(x_element(a)) == x_element(-a)
    payload = {
        "result": result,
        "solution": solution,
        "x_element": x_element(a),
        "x_congruent": congruent,
        "iota_x_is_x_minus_a": iota_ok,
    }
    ok = result.holds == (weight == solution) and congruent and iota_ok
    return Report("lambda2a", {"a": a, "weight": weight}, _status(ok), payload)


def cmd_verify_all(max_n: int, inject_fault: bool = False, threads: Optional[int] = None,
                   progress: bool = False) -> Report:
    config = get_minrep_config()
    _require_range("max_n", max_n, 2, config.max_n_verify)
    threads = threads or config.threads
    if inject_fault:
        set_bracket_fault(True)
    try:
        results = run_all(max_n, threads=threads, progress=progress)
    finally:
        if inject_fault:
            set_bracket_fault(False)
    failed = [r.number for r in results if not r.passed]
    params = {"max_n": max_n, "inject_fault": inject_fault}
    return Report("verify-all", params, _status(not failed), {"criteria": results, "failed": failed})


# -----------------------------------------------------------------------------
# Argument parsing
# -----------------------------------------------------------------------------

def _add_form_arguments(parser):
    parser.add_argument("form", nargs="?", help='real form, "su(p,q)" or "sl(n,R)"')
    parser.add_argument("--p", type=int, help="p of su(p,q)")
    parser.add_argument("--q", type=int, help="q of su(p,q)")
    parser.add_argument("--n", type=int, help="n of sl(n,R)")
    parser.add_argument("--a", type=parse_rational, default=Fraction(0), help="parameter a (rational)")
    parser.add_argument("--nonreal", action="store_true", help="treat a as a non-real complex number")


def _resolve_form(args):
    if args.form:
        return parse_real_form(args.form)
    if args.p is not None and args.q is not None:
        return RealFormSpec.su(args.p, args.q)
    if args.n is not None:
        return RealFormSpec.sl(args.n)
    raise UsageError("give a real form, --p and --q, or --n")


def build_parser() -> argparse.ArgumentParser:
    parser = MinRepArgumentParser(
        prog="minrep",
        description="MinRep Toolbox - exact checks for a-minimal representations of sl(n)",
        epilog='''
Examples:
  %(prog)s decompose-s2 --n 4
  %(prog)s annihilator --n 3 --a 0
  %(prog)s table1 "su(2,2)" --a 0
  %(prog)s sl3-kernel --a 0 --m-max 13
  %(prog)s --text verify-all --max-n 4
Negative rationals need the "=" form: --a=-7/3
    ''',
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output", action="store_const", const="json", help="JSON report (default)")
    output.add_argument("--text", dest="output", action="store_const", const="text", help="human readable report")
    parser.add_argument("--debug", action="store_true", help="enable debug output")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("decompose-s2", help="decompose S^2(sl(n)) and compare with the Weyl dimensions")
    p.add_argument("--n", type=int, required=True)

    for name, text in (("annihilator", "solve for the highest weights annihilated by sym(F^a)"),
                       ("casimir", "Casimir scalar at every lambda(i,a), both ways")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=parse_rational, required=True)

    p = sub.add_parser("gvm-check", help="J_a on the mirabolic generalized Verma modules")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=parse_rational, required=True)
    p.add_argument("--parabolic", choices=["q(1,n-1)", "q(n-1,1)", "both"], default="both")
    p.add_argument("--weight", type=parse_weight, help="explicit weight, comma separated")

    for name, text in (("classify", "a-minimal modules of a real form"),
                       ("table1", "number of a-minimal modules against the table")):
        p = sub.add_parser(name, help=text)
        _add_form_arguments(p)

    p = sub.add_parser("ktypes", help="K-types of every a-minimal module")
    _add_form_arguments(p)
    p.add_argument("--count", type=int, default=5)

    p = sub.add_parser("sl3-kernel", help="M-invariant kernel of pi_m(4X) for odd m <= m_max")
    p.add_argument("--a", type=parse_rational, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, required=True)

    p = sub.add_parser("lambda2a", help="the reduction that forces lambda = lambda(2,-a)")
    p.add_argument("--a", type=parse_rational, required=True)
    p.add_argument("--weight", type=parse_weight, help="weight to test (default lambda(2,-a))")

    p = sub.add_parser("verify-all", help="run every acceptance criterion")
    p.add_argument("--max-n", dest="max_n", type=int, default=4)
    p.add_argument("--inject-fault", action="store_true", help="flip one bracket sign (mutation run)")
    p.add_argument("--threads", type=int, help="worker threads (default MINREP_THREADS or config)")
    return parser


def dispatch(args) -> Report:
    command = args.command
    if command == "decompose-s2":
        return cmd_decompose_s2(args.n)
    if command == "annihilator":
        return cmd_annihilator(args.n, args.a)
    if command == "casimir":
        return cmd_casimir(args.n, args.a)
    if command == "gvm-check":
        return cmd_gvm_check(args.n, args.a, args.parabolic, args.weight)
    if command == "classify":
        return cmd_classify(_resolve_form(args), args.a, args.nonreal)
    if command == "table1":
        return cmd_table1(_resolve_form(args), args.a, args.nonreal)
    if command == "ktypes":
        return cmd_ktypes(_resolve_form(args), args.a, args.count, args.nonreal)
    if command == "sl3-kernel":
        return cmd_sl3_kernel(args.a, args.m_max)
    if command == "lambda2a":
        return cmd_lambda2a(args.a, args.weight)
    if command == "verify-all":
        return cmd_verify_all(args.max_n, args.inject_fault, args.threads,
                              progress=sys.stderr.isatty() and not args.debug)
    raise UsageError(f"unknown command {command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, run one command, print its report; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    debug = "--debug" in argv
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format='%(asctime)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
    )
    try:
        args = build_parser().parse_args(argv)
        report = dispatch(args)
    except UsageError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        logger.debug("verification failure", exc_info=True)
        print(f"[ERROR] verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (MinRepError, ValueError) as e:
        # PreconditionError, DimensionError, NotARootError, ResourceLimitError
        logger.debug("rejected parameters", exc_info=True)
        kind = "resource limit" if isinstance(e, ResourceLimitError) else "invalid parameters"
        print(f"[ERROR] {kind}: {e}", file=sys.stderr)
        return EXIT_USAGE

    output = args.output or get_minrep_config().output
    print(report.dumps() if output == "json" else report.render_text())
    if report.exit_code != EXIT_OK:
        logger.warning("%s finished with status %s", report.command, report.status)
    return report.exit_code


def subcommand_names() -> List[str]:
    return list(SUBCOMMANDS)


if __name__ == "__main__":
    sys.exit(main())
