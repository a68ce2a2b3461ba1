"""Command-line surface: compute, verify, table and bench subcommands.

Coefficients always serialize as decimal strings (they outgrow 64-bit
integers almost immediately); text output renders polynomials in the
descending-degree style of the reference tables.  JSON goes to stdout,
diagnostics to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import coeff_theory, modular, painleve, schur_det
from .errors import YvlabError
from .yv_engine import YvPolynomial, YvSequenceCache, stride_offset, triangular, yv_compute

DEFAULT_RECURSION_CAP = 200
DEFAULT_DETERMINANT_CAP = 25
DEFAULT_PRIME_CAP = 100
NMAX_ENV_VAR = "YVLAB_NMAX_CAP"


def _lift_str_digit_guard() -> None:
    # CPython's int->str guard trips around n = 90; the coefficients are
    # exact and must print in full
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


# ---------------------------------------------------------------------------
# Rendering and JSON interchange
# ---------------------------------------------------------------------------

def format_terms(pairs, var: str = "x") -> str:
    """Render (exponent, coefficient) pairs, descending, in table style."""
    parts: list[str] = []
    for e, c in pairs:
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if isinstance(mag, Fraction) and mag.denominator == 1:
            mag = mag.numerator
        if e == 0:
            body = str(mag)
        else:
            xs = var if e == 1 else f"{var}^{e}"
            if mag == 1:
                body = xs
            elif isinstance(mag, Fraction):
                body = f"({mag.numerator}/{mag.denominator}){xs}"
            else:
                body = f"{mag}{xs}"
        if parts:
            parts.append((" - " if neg else " + ") + body)
        else:
            parts.append(("-" if neg else "") + body)
    return "".join(parts) or "0"


def yv_text(p: YvPolynomial) -> str:
    pairs = [(3 * j + p.delta, c) for j, c in reversed(list(enumerate(p.coeffs)))]
    return format_terms(pairs)


def ratio_poly_text(poly) -> str:
    pairs = [(e, c) for e, c in reversed(list(enumerate(poly.coeffs)))]
    return format_terms(pairs, var="m")


def poly_to_json(p: YvPolynomial) -> dict:
    return {"n": p.n, "a": p.a, "delta": p.delta, "degree": p.degree,
            "coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(doc: dict) -> YvPolynomial:
    """Parse the PolyJson schema back into an exact YvPolynomial."""
    n, a, delta = doc["n"], doc["a"], doc["delta"]
    coeffs = tuple(int(c) for c in doc["coeffs"])
    if delta != stride_offset(n):
        raise ValueError(f"delta {delta} inconsistent with index {n}")
    if doc["coeffs"][-1] != "1":
        raise ValueError("serialized polynomial is not monic")
    if doc["degree"] != triangular(n) or 3 * (len(coeffs) - 1) + delta != doc["degree"]:
        raise ValueError("degree field inconsistent with coefficient count")
    return YvPolynomial(n, a, delta, coeffs)


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    def record(self, label: str, ok: bool) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "cases": self.cases,
                "failures": list(self.failures),
                "wall_time_s": round(self.wall_time, 3)}

    def render(self) -> str:
        lines = [f"{self.suite}: {self.cases} cases, {len(self.failures)} failures"
                 f" ({self.wall_time:.2f}s)"]
        lines.extend(f"  FAIL {f}" for f in self.failures)
        return "\n".join(lines)


def _suite_theorem1(nmax: int, cache: YvSequenceCache) -> VerifyReport:
    rep = VerifyReport("theorem1")
    for n in range(1, nmax + 1):
        ok = coeff_theory.t0_formula(n, 1) == cache.get(n).lowest
        rep.record(f"t0({n}) closed form vs recursion", ok)
    return rep


def _suite_theorem2(nmax: int, cache: YvSequenceCache) -> VerifyReport:
    rep = VerifyReport("theorem2")
    table = coeff_theory.ratio_table(7)
    bad = {(mm.n, mm.j) for mm in coeff_theory.ratio_consistency(nmax, 7, cache, table)}
    for n in range(nmax + 1):
        for j in range(8):
            rep.record(f"ratio({n},{j})", (n, j) not in bad)
    rep.record("symmetry j<=7", coeff_theory.symmetry_check(7, table))
    rep.record("successive divisibility pattern",
               coeff_theory.divisibility_observations(table).as_expected)
    return rep


def _suite_theorem3(primes: list[int], nmax: int, cache: YvSequenceCache) -> VerifyReport:
    rep = VerifyReport("theorem3")
    reach = max(nmax, 2 * max(primes) + 2)
    for p in primes:
        for m in range(1, 4):
            for n in range(p):
                if m * p + n <= reach:
                    r = modular.check_shift_congruence(p, m, n, cache)
                    rep.record(r.label, bool(r.verdict))
        r = modular.check_prime_collapse(p, cache)
        rep.record(r.label, bool(r.verdict))
        for r in modular.check_monomial_neighbors(p, cache):
            rep.record(r.label, bool(r.verdict))
        for i in range(p):
            r = modular.check_mirror_congruence(p, i, cache)
            rep.record(r.label, bool(r.verdict))
        rep.record(f"p-adic valuation of mu_{p}", modular.mu_valuation_check(p))
    return rep


def _suite_lemma1(nmax: int) -> VerifyReport:
    rep = VerifyReport("lemma1")
    for n in range(1, min(nmax, 12) + 1):
        ok = schur_det.factorial_det_check(n) * schur_det.mu(n) == 1
        rep.record(f"factorial staircase determinant n={n}", ok)
    return rep


def _suite_lemma2(nmax: int, cache: YvSequenceCache) -> VerifyReport:
    rep = VerifyReport("lemma2")
    for n in range(1, min(nmax, 40) + 1):
        rep.record(f"wronskian identity n={n}", coeff_theory.wronskian_check(n, cache))
    for m in range(1, min(nmax, 30) // 3 + 1):
        rep.record(f"lowest-term identities m={m}", coeff_theory.key_identity_check(m, cache))
    return rep


def _suite_pii(nmax: int, cache: YvSequenceCache) -> VerifyReport:
    rep = VerifyReport("pii")
    for n in range(1, min(nmax, 12) + 1):
        cert = painleve.pii_residual(n, 1, cache)
        rep.record(f"Painleve II residual n={n}", cert.verdict is True)
    return rep


def _suite_smallprimes(nmax: int) -> VerifyReport:
    rep = VerifyReport("smallprimes")
    bound = min(nmax, 30)
    for a in (1, -4, 2):
        cache = YvSequenceCache(a)
        for n in range(bound + 1):
            r3, r2 = modular.check_small_primes(a, n, cache)
            rep.record(r3.label, bool(r3.verdict))
            if a % 2 == 0:
                rep.record(r2.label, bool(r2.verdict))
    return rep


SUITES = ("theorem1", "theorem2", "theorem3", "lemma1", "lemma2", "pii", "smallprimes")


def run_suite(name: str, nmax: int, primes: list[int],
              cache: YvSequenceCache | None = None) -> VerifyReport:
    cache = cache or YvSequenceCache(1)
    start = time.perf_counter()
    if name == "theorem1":
        rep = _suite_theorem1(nmax, cache)
    elif name == "theorem2":
        rep = _suite_theorem2(nmax, cache)
    elif name == "theorem3":
        rep = _suite_theorem3(primes, nmax, cache)
    elif name == "lemma1":
        rep = _suite_lemma1(nmax)
    elif name == "lemma2":
        rep = _suite_lemma2(nmax, cache)
    elif name == "pii":
        rep = _suite_pii(nmax, cache)
    elif name == "smallprimes":
        rep = _suite_smallprimes(nmax)
    else:
        raise ValueError(f"unknown suite {name}")
    rep.wall_time = time.perf_counter() - start
    return rep


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_compute(args, parser) -> int:
    if args.method == "determinant":
        cap = args.cap if args.cap is not None else DEFAULT_DETERMINANT_CAP
        if args.a != 1:
            parser.error("the determinant route is defined for a = 1 only")
    else:
        cap = args.cap if args.cap is not None else int(
            os.environ.get(NMAX_ENV_VAR, DEFAULT_RECURSION_CAP))
    if args.n < 0:
        parser.error("n must be >= 0")
    if args.n > cap:
        parser.error(f"n = {args.n} exceeds the cap {cap} (--cap raises it)")
    try:
        if args.method == "determinant":
            poly = schur_det.yv_via_determinant(args.n)
        else:
            poly = yv_compute(args.n, args.a)
    except YvlabError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(poly_to_json(poly)))
    else:
        print(yv_text(poly))
    return 0


def _cmd_verify(args, parser) -> int:
    primes = []
    for tok in args.primes.split(","):
        p = int(tok)
        if not modular.is_prime(p):
            parser.error(f"{p} is not prime")
        if p >= args.prime_cap:
            parser.error(f"prime {p} exceeds the cap {args.prime_cap}")
        primes.append(p)
    names = SUITES if args.suite == "all" else (args.suite,)
    cache = YvSequenceCache(1)
    reports = [run_suite(name, args.nmax, primes, cache) for name in names]
    if args.format == "json":
        print(json.dumps({"suites": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            print(r.render())
    return 1 if any(r.failures for r in reports) else 0


def _cmd_table(args, parser) -> int:
    if args.what == "ratio":
        table = coeff_theory.ratio_table(args.jmax)
        if args.format == "json":
            doc = {"jmax": args.jmax,
                   "families": {name: [[str(Fraction(c)) for c in poly.coeffs]
                                       for poly in table.family(name)]
                                for name in ("a", "b", "c")}}
            print(json.dumps(doc))
        else:
            for name in ("a", "b", "c"):
                for j, poly in enumerate(table.family(name)):
                    print(f"{name}~_{j}(m) = {ratio_poly_text(poly)}")
        return 0
    rows = [(n, coeff_theory.t0_formula(n, args.a)) for n in range(1, args.nmax + 1)]
    if args.format == "json":
        print(json.dumps({"a": args.a, "rows": [{"n": n, "t0": str(v)} for n, v in rows]}))
    else:
        for n, v in rows:
            print(f"t0({n}) = {v}")
    return 0


def _cmd_bench(args, parser) -> int:
    if args.method == "determinant" and args.nmax > DEFAULT_DETERMINANT_CAP:
        parser.error(f"determinant bench capped at {DEFAULT_DETERMINANT_CAP}")
    rows = []
    for n in range(1, args.nmax + 1):
        start = time.perf_counter()
        if args.method == "determinant":
            schur_det.yv_via_determinant(n)
        else:
            yv_compute(n, 1)
        rows.append((n, time.perf_counter() - start))
    if args.format == "json":
        print(json.dumps({"method": args.method,
                          "rows": [{"n": n, "seconds": round(s, 6)} for n, s in rows]}))
    else:
        for n, s in rows:
            print(f"n={n} {args.method} {s:.6f}s")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yvlab",
        description="Exact Yablonskii-Vorob'ev polynomials: compute and verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one polynomial")
    p_compute.add_argument("n", type=int)
    p_compute.add_argument("--a", type=int, default=1,
                           help="recursion parameter (default 1; -4 is classical)")
    p_compute.add_argument("--method", choices=("recursion", "determinant"),
                           default="recursion")
    p_compute.add_argument("--format", choices=("text", "json"), default="text")
    p_compute.add_argument("--cap", type=int, default=None,
                           help=f"index cap (defaults: {DEFAULT_RECURSION_CAP} recursion / "
                                f"{DEFAULT_DETERMINANT_CAP} determinant; env {NMAX_ENV_VAR})")
    p_compute.set_defaults(func=_cmd_compute)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p_verify.add_argument("--nmax", type=int, default=24)
    p_verify.add_argument("--primes", default="5,7,11,13")
    p_verify.add_argument("--prime-cap", type=int, default=DEFAULT_PRIME_CAP)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="print coefficient tables")
    p_table.add_argument("--what", choices=("ratio", "t0"), required=True)
    p_table.add_argument("--jmax", type=int, default=7)
    p_table.add_argument("--nmax", type=int, default=10)
    p_table.add_argument("--a", type=int, default=1)
    p_table.add_argument("--format", choices=("text", "json"), default="text")
    p_table.set_defaults(func=_cmd_table)

    p_bench = sub.add_parser("bench", help="time the two computation routes")
    p_bench.add_argument("--nmax", type=int, default=10)
    p_bench.add_argument("--method", choices=("recursion", "determinant"),
                         default="recursion")
    p_bench.add_argument("--format", choices=("text", "json"), default="text")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    _lift_str_digit_guard()
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
