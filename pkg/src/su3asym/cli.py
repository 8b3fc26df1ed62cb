"""Command-line interface for the package.

Subcommands
-----------

``rn``
    Exact values of r(n) (the number of SU(3) representations of dimension n)
    for n = 0..N, as CSV or JSON, with an optional cross-check against the
    independent exact-rational reconstruction.

``omega``
    Evaluate omega(s) = sum_{j,k>=1} 1/(j^s k^s (j+k)^s) at a point (direct
    summation, contour-integral continuation, or automatic choice), or run
    the built-in checks (trivial zeros, even-argument zeta identity).

``constants``
    The expansion constants X, Y, A1..A5 and the correction coefficients
    C_0..C_L, as JSON or CSV.

``compare``
    Exact counts vs the truncated asymptotic expansion at chosen n, as CSV,
    including the scaled residuals R_L and their fitted decay exponents.

``residual``
    Log G(e^(-z)) computed directly from the dimension spectrum vs the
    truncated asymptotic form, and the scaled difference |residual|/|z|^eta.

All numerical output is produced at the current working precision (default
60 significant digits; override with the RN_PREC environment variable or the
per-command ``--prec`` flag).
"""

from __future__ import annotations

import argparse
import json
import sys

from mpmath import mp, mpc, mpf

from .exact_counting import EXACT_LIMIT, r_exact, r_exact_via_exp
from .harness import compare_table, expansion_residual, log_G_direct, asymptotic_log_G
from .precision import MIN_DIGITS, set_working_digits, working_digits
from .saddle_expansion import MAX_C_ORDER, c_constants, constants
from .witten_zeta import (
    ContinuationCollisionError,
    OmegaEvalConfig,
    WittenZetaPoleError,
    omega_result,
    trivial_zeros,
    verify_zeta_identity,
)

__all__ = ["main"]

#: Cap on the prefix length re-checked by ``rn --oracle-check``: the
#: exact-rational reconstruction costs O(N^2) big-rational operations, so the
#: cross-check is run on min(N, _ORACLE_CHECK_CAP) terms.
_ORACLE_CHECK_CAP = 400


def _nstr(x, digits=None):
    """Render an mpmath number as a plain decimal string."""
    if digits is None:
        digits = working_digits()
    return mp.nstr(x, digits)


def _parse_real(text: str) -> mpf:
    try:
        return mpf(text)
    except Exception as exc:  # mpmath raises bare ValueError on bad input
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from exc


def _parse_point(text: str):
    """Parse 'RE' or 'RE,IM' into an mpf/mpc at the current precision."""
    parts = text.split(",")
    if len(parts) == 1:
        return _parse_real(parts[0])
    if len(parts) == 2:
        re, im = _parse_real(parts[0]), _parse_real(parts[1])
        if im == 0:
            return re
        return mpc(re, im)
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def _parse_int_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty integer list")
    return values


def _complex_pair(z) -> list[str]:
    """JSON-friendly [re, im] pair of decimal strings."""
    zc = mpc(z)
    return [_nstr(zc.real), _nstr(zc.imag)]


# -- subcommand implementations ------------------------------------------------------


def _cmd_rn(args) -> int:
    n_max = args.max
    if n_max < 0:
        print("error: --max must be >= 0", file=sys.stderr)
        return 2
    if n_max > EXACT_LIMIT:
        print(f"error: --max exceeds the exact-counting cap {EXACT_LIMIT}", file=sys.stderr)
        return 2
    values = r_exact(n_max)
    if args.oracle_check:
        k = min(n_max, _ORACLE_CHECK_CAP)
        oracle = r_exact_via_exp(k)
        if oracle != values[: k + 1]:
            bad = next(i for i in range(k + 1) if oracle[i] != values[i])
            print(
                f"oracle-check: MISMATCH at n={bad}: dp={values[bad]} exp={oracle[bad]}",
                file=sys.stderr,
            )
            return 1
        print(f"oracle-check: OK for n <= {k}", file=sys.stderr)
    if args.format == "json":
        json.dump({"max": n_max, "values": values}, sys.stdout)
        sys.stdout.write("\n")
    else:
        out = sys.stdout
        out.write("n,r_n\n")
        for n, v in enumerate(values):
            out.write(f"{n},{v}\n")
    return 0


def _cmd_omega(args) -> int:
    cfg = OmegaEvalConfig(M=args.M) if args.M is not None else None
    if args.verify_zeros is not None:
        k = args.verify_zeros
        if k < 1:
            print("error: --verify-zeros expects a positive count", file=sys.stderr)
            return 2
        zeros = trivial_zeros(k, cfg)
        worst = mpf(0)
        for n, val in enumerate(zeros, start=1):
            mag = abs(val)
            worst = max(worst, mag)
            print(f"omega(-{n}) = {_nstr(val, 8)}  |.| = {_nstr(mag, 6)}")
        print(f"max |omega(-n)| over n=1..{k}: {_nstr(worst, 6)}")
        return 0
    if args.verify_identity is not None:
        n = args.verify_identity
        if n < 1:
            print("error: --verify-identity expects a positive integer", file=sys.stderr)
            return 2
        residual = verify_zeta_identity(n)
        print(f"even-argument identity at n={n}: relative residual = {_nstr(residual, 6)}")
        return 0
    if args.re is None:
        print("error: provide --re (with optional --im), or a --verify-* flag", file=sys.stderr)
        return 2
    s = mpc(args.re, args.im) if args.im != 0 else args.re
    try:
        res = omega_result(s, cfg, method=args.method)
    except (WittenZetaPoleError, ContinuationCollisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "s": _complex_pair(res.s),
        "s_evaluated": _complex_pair(res.s_evaluated),
        "value": _complex_pair(res.value),
        "method": res.method,
        "est_error": _nstr(res.est_error, 6),
    }
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_constants(args) -> int:
    order = args.order
    if order < 0 or order > MAX_C_ORDER:
        print(f"error: --order must be in 0..{MAX_C_ORDER}", file=sys.stderr)
        return 2
    cst = constants()
    cs = c_constants(order)
    named = [
        ("X", cst.X),
        ("Y", cst.Y),
        ("A1", cst.A1),
        ("A2", cst.A2),
        ("A3", cst.A3),
        ("A4", cst.A4),
        ("A5", cst.A5),
    ]
    named.extend((f"C{j}", cs[j]) for j in range(order + 1))
    if args.format == "csv":
        sys.stdout.write("name,value\n")
        for name, value in named:
            sys.stdout.write(f"{name},{_nstr(value)}\n")
    else:
        json.dump({name: _nstr(value) for name, value in named}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def _cmd_compare(args) -> int:
    n_list = args.n
    if any(n < 1 for n in n_list):
        print("error: all n must be positive", file=sys.stderr)
        return 2
    if args.terms < 0:
        print("error: --terms must be >= 0", file=sys.stderr)
        return 2
    try:
        table = compare_table(n_list, args.terms, approx_beyond_exact=args.approx_beyond_exact)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = sys.stdout
    out.write("n,L,log_r_exact,log_r_asym,ratio,residual_scaled,fitted_exponent\n")
    for row in table.rows:
        fit = table.fitted_exponent.get(row.L)
        fit_str = "" if fit is None else f"{fit!r}"
        out.write(
            f"{row.n},{row.L},{_nstr(row.log_r_exact)},{_nstr(row.log_r_asym)},"
            f"{_nstr(row.ratio)},{_nstr(row.residual_scaled)},{fit_str}\n"
        )
    return 0


def _cmd_residual(args) -> int:
    z = args.z
    eta = args.eta
    try:
        direct = log_G_direct(z)
        asym = asymptotic_log_G(z, eta)
        res = expansion_residual(z, eta)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "z": _complex_pair(z),
        "eta": _nstr(eta),
        "log_g_direct": _complex_pair(direct),
        "log_g_asymptotic": _complex_pair(asym),
        "residual": _nstr(res, 12),
        "residual_over_abs_z_eta": _nstr(res / abs(mpc(z)) ** eta, 12),
    }
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


# -- parser ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su3asym",
        description="Exact SU(3) representation counting and its asymptotic expansion.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--prec",
        type=int,
        default=None,
        metavar="DIGITS",
        help=f"working precision in decimal digits (>= {MIN_DIGITS}; default from RN_PREC or 60)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rn = sub.add_parser("rn", parents=[common], help="exact r(n) for n = 0..N")
    p_rn.add_argument("--max", type=int, required=True, metavar="N", help="largest n to count")
    p_rn.add_argument("--format", choices=("csv", "json"), default="csv")
    p_rn.add_argument(
        "--oracle-check",
        action="store_true",
        help=f"re-derive the first min(N, {_ORACLE_CHECK_CAP}) values with exact rational "
        "arithmetic through the exp of the logarithmic generating series and compare",
    )
    p_rn.set_defaults(func=_cmd_rn)

    p_om = sub.add_parser("omega", parents=[common], help="evaluate omega(s) or run its checks")
    p_om.add_argument("--re", type=_parse_real, default=None, help="Re(s)")
    p_om.add_argument("--im", type=_parse_real, default=mpf(0), help="Im(s) (default 0)")
    p_om.add_argument(
        "--method",
        choices=("auto", "direct", "mb"),
        default="auto",
        help="direct double summation, contour-integral continuation (mb), or auto",
    )
    p_om.add_argument(
        "--M",
        type=int,
        default=None,
        help="number of explicit terms in the continuation's finite sum (default: chosen from Re s)",
    )
    p_om.add_argument(
        "--verify-zeros",
        type=int,
        default=None,
        metavar="K",
        help="print omega(-1)..omega(-K), which must all vanish",
    )
    p_om.add_argument(
        "--verify-identity",
        type=int,
        default=None,
        metavar="N",
        help="relative residual of the even-argument zeta identity at n=N",
    )
    p_om.set_defaults(func=_cmd_omega)

    p_cs = sub.add_parser("constants", parents=[common], help="expansion constants X, Y, A*, C_j")
    p_cs.add_argument("--order", type=int, default=0, metavar="L", help="emit C_0..C_L (default 0)")
    p_cs.add_argument("--format", choices=("json", "csv"), default="json")
    p_cs.set_defaults(func=_cmd_constants)

    p_cp = sub.add_parser("compare", parents=[common], help="exact counts vs truncated expansion")
    p_cp.add_argument(
        "--n", type=_parse_int_list, required=True, help="comma-separated list of n values"
    )
    p_cp.add_argument("--terms", type=int, default=2, metavar="L", help="largest C_j order (default 2)")
    p_cp.add_argument(
        "--approx-beyond-exact",
        action="store_true",
        help=f"allow n beyond the exact cap {EXACT_LIMIT} via the float64 log-domain counter",
    )
    p_cp.set_defaults(func=_cmd_compare)

    p_rs = sub.add_parser(
        "residual", parents=[common], help="direct vs asymptotic Log G(e^(-z)) at one z"
    )
    p_rs.add_argument(
        "--z", type=_parse_point, required=True, help="evaluation point, RE or RE,IM (Re z > 0)"
    )
    p_rs.add_argument("--eta", type=_parse_real, required=True, help="scaling exponent eta")
    p_rs.set_defaults(func=_cmd_residual)

    return parser


def _apply_prec_early(argv) -> int | None:
    """Apply --prec before argparse runs its type converters.

    Numbers on the command line are parsed straight into mpf/mpc, so the
    working precision must already be raised when argparse converts them.
    Returns an exit code on error, else None.
    """
    raw = None
    for i, tok in enumerate(argv):
        if tok == "--prec" and i + 1 < len(argv):
            raw = argv[i + 1]
        elif tok.startswith("--prec="):
            raw = tok.split("=", 1)[1]
    if raw is None:
        return None
    try:
        set_working_digits(int(raw))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return None


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    early = _apply_prec_early(argv)
    if early is not None:
        return early
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "prec", None) is not None:
        try:
            set_working_digits(args.prec)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
