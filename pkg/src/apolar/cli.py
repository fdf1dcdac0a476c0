"""Command-line front end.

Usage::

    apolar character --coeffs 1,1,2,3 --degree 7
    apolar hilbert   --mu 2,1,1 --degree 7 [--format json]
    apolar hilbert   --poly "x1^2 + x2^2" [--nvars 2]
    apolar kostka    2,1 1,1,1
    apolar rmu-char  --mu 2,1,1
    apolar waring    --mu 2,1,1 --degree 7
    apolar verify    --coeffs 1,2,3 --degree 6
    apolar verify    --mu 2,1 --degree 6 --seed 7

Exit status: 0 on success, 1 when ``verify`` finds a disagreement, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Sequence

from .apolarity import CoeffTuple, hilbert_function_bruteforce
from .charengine import MAX_ORACLE_N, character_report, verify, waring_certificate
from .errors import ApolarError, LimitExceeded, ParseError
from .partitions import Partition, format_partition, mu_of, parse as parse_partition
from .poly import parse_poly
from .snrep import GradedCharacter, format_component
from .tableaux import kostka_foulkes, r_mu_character

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


def parse_rational(text: str) -> Fraction:
    """Exact rational from ``"3"``, ``"-3/2"`` or a decimal literal like ``"0.25"``."""
    s = text.strip()
    try:
        if "/" in s:
            return Fraction(s)
        dec = Decimal(s)
        if not dec.is_finite():
            raise InvalidOperation
        return Fraction(dec)
    except (ValueError, ZeroDivisionError, InvalidOperation):
        raise ParseError(
            f"coefficient {text!r} is not an exact rational; only integers, p/q "
            "fractions and finite decimals are accepted so that every rank and "
            "trace is computed exactly"
        ) from None


def parse_coeffs(text: str) -> tuple[Fraction, ...]:
    if not text.strip():
        raise ParseError("empty coefficient list")
    return tuple(parse_rational(x) for x in text.split(","))


def _arg(fn):
    """Adapt a parser so argparse reports our message next to the flag name."""
    def wrapped(text: str):
        try:
            return fn(text)
        except ApolarError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    wrapped.__name__ = fn.__name__
    return wrapped


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="apolar", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, degree: bool, source: bool = True):
        if source:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--coeffs", type=_arg(parse_coeffs),
                           help="coefficients of L, e.g. 1,1,2,3 (use --coeffs=-1,2 for a leading minus)")
            g.add_argument("--mu", type=_arg(parse_partition), help="partition, e.g. 2,1,1")
        if degree:
            p.add_argument("--degree", "-d", type=int, required=True, help="socle degree d")
        p.add_argument("--format", choices=("plain", "json"), default="plain")

    common(sub.add_parser("character", help="graded character of R/I_F"), degree=True)

    h = sub.add_parser("hilbert", help="Hilbert function of R/I_F")
    g = h.add_mutually_exclusive_group(required=True)
    g.add_argument("--coeffs", type=_arg(parse_coeffs))
    g.add_argument("--mu", type=_arg(parse_partition))
    g.add_argument("--poly", help='arbitrary form for the brute-force path, e.g. "x1^2*x2 + 1/2*x3^3"')
    h.add_argument("--nvars", type=int, help="number of variables for --poly")
    h.add_argument("--degree", "-d", type=int)
    h.add_argument("--format", choices=("plain", "json"), default="plain")

    k = sub.add_parser("kostka", help="Kostka-Foulkes polynomial K_{lambda,mu}(t)")
    k.add_argument("lam", metavar="lambda", type=_arg(parse_partition))
    k.add_argument("mu", type=_arg(parse_partition))
    k.add_argument("--format", choices=("plain", "json"), default="plain")

    common(sub.add_parser("rmu-char", help="graded character of R_mu"), degree=False)
    common(sub.add_parser("waring", help="certified Waring rank of F"), degree=True)

    v = sub.add_parser("verify", help="compare the formula with the brute-force oracle")
    common(v, degree=True)
    v.add_argument("--seed", type=int, default=0,
                   help="seed for the random tuple drawn when --mu is given")
    return parser


def _shape(args, nonzero_sum: bool = True) -> Partition:
    if args.coeffs is not None:
        if nonzero_sum:
            CoeffTuple(args.coeffs).require_nonzero_sum()
        return mu_of(args.coeffs)
    return args.mu


def random_tuple(mu: Partition, seed: int) -> tuple[Fraction, ...]:
    """A rational tuple of shape ``mu`` with nonzero coordinate sum."""
    rng = random.Random(seed)
    while True:
        values: list[Fraction] = []
        while len(values) < len(mu):
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            if x not in values:
                values.append(x)
        a = [v for v, m in zip(values, mu) for _ in range(m)]
        rng.shuffle(a)
        if sum(a) != 0:
            return tuple(a)


def _render_character(char: GradedCharacter, top: int) -> str:
    return "\n".join(f"{k}: {format_component(char.component(k))}" for k in range(top + 1))


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _cmd_character(args) -> int:
    report = character_report(_shape(args), args.degree)
    if args.format == "json":
        _emit(report.dumps())
    else:
        _emit(_render_character(report.character, args.degree))
    return EXIT_OK


def _cmd_hilbert(args) -> int:
    if args.poly is not None:
        F = parse_poly(args.poly, args.nvars)
        if F.n > MAX_ORACLE_N:
            raise LimitExceeded(f"n = {F.n} exceeds the oracle-path limit {MAX_ORACLE_N}")
        hs = hilbert_function_bruteforce(F)
        top = F.homogeneous_degree()
        payload = {"poly": args.poly, "d": top}
    else:
        if args.degree is None:
            raise ParseError("--degree is required with --coeffs or --mu")
        mu = _shape(args)
        report = character_report(mu, args.degree)
        hs, top = report.hilbert, args.degree
        payload = {"mu": format_partition(mu), "d": top}
    values = [hs.coeff(k) for k in range(top + 1)]
    if args.format == "json":
        payload["hilbert"] = values
        _emit(json.dumps(payload))
    else:
        _emit(" ".join(str(v) for v in values))
    return EXIT_OK


def _cmd_kostka(args) -> int:
    k = kostka_foulkes(args.lam, args.mu)
    _emit(json.dumps(list(k.coeffs)) if args.format == "json" else str(k))
    return EXIT_OK


def _cmd_rmu(args) -> int:
    mu = _shape(args, nonzero_sum=False)
    char = r_mu_character(mu)
    if args.format == "json":
        _emit(json.dumps({"mu": format_partition(mu), "character": char.to_json()}))
    else:
        _emit(_render_character(char, char.top_degree))
    return EXIT_OK


def _cmd_waring(args) -> int:
    mu = _shape(args)
    w = waring_certificate(mu, args.degree)
    if args.format == "json":
        _emit(json.dumps({"mu": format_partition(mu), "d": args.degree, "waring_rank": w}))
    else:
        _emit("unknown" if w is None else str(w))
    return EXIT_OK


def _cmd_verify(args) -> int:
    a = args.coeffs if args.coeffs is not None else random_tuple(args.mu, args.seed)
    report = verify(a, args.degree)
    if args.format == "json":
        _emit(json.dumps(report.to_json()))
    else:
        lines = [f"coeffs {','.join(str(x) for x in report.a)}  mu {format_partition(report.mu)}  d {report.d}"]
        for c in report.per_degree:
            status = "AGREE" if c.agree else "DISAGREE"
            line = f"{c.k}: hilbert {c.hilbert_formula} vs {c.hilbert_oracle}  {status}"
            for diff in c.char_diffs:
                line += f"  X[{format_partition(diff.lam)}] {diff.formula} vs {diff.oracle}"
            lines.append(line)
        lines.append("AGREE" if report.agree else "DISAGREE")
        _emit("\n".join(lines))
    return EXIT_OK if report.agree else EXIT_DISAGREE


COMMANDS = {
    "character": _cmd_character,
    "hilbert": _cmd_hilbert,
    "kostka": _cmd_kostka,
    "rmu-char": _cmd_rmu,
    "waring": _cmd_waring,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except ApolarError as exc:
        print(f"apolar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
