"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 numeric-precision failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .braids import comb, comb_json, parse_braid
from .mzv import (
    ASSOCIATOR_DEGREE_CAP,
    PrecisionError,
    associator,
    chi_on_associator,
    conjecture_rhs,
)
from .polynomials import EvenPoly
from .symbol import chi_braid
from .twobridge import closure_stages, conway_of_fraction
from .verify import definitional_identity_report, identity_suite, run_equivalence


@dataclass
class Config:
    degree: int = 8
    samples: int = 100
    seed: int = 0
    eps: float = 1e-8
    json: bool = False


def _fraction_str(fr: Fraction | None) -> str | None:
    return None if fr is None else f"{fr.numerator}/{fr.denominator}"


def _parse_fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text), 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad fraction {text!r}") from exc


def _emit(data: dict, human: str, cfg: Config) -> None:
    print(json.dumps(data) if cfg.json else human)


def cmd_comb(args, cfg: Config) -> int:
    cf = comb(parse_braid(args.word))
    _emit(comb_json(cf), str(cf), cfg)
    return 0


def cmd_chi(args, cfg: Config) -> int:
    poly = chi_braid(parse_braid(args.word), cfg.degree)
    data = poly.to_json()
    data["truncation"] = cfg.degree
    _emit(data, str(poly), cfg)
    return 0


def cmd_conway(args, cfg: Config) -> int:
    if args.fraction is not None:
        fr = _parse_fraction(args.fraction)
        poly = conway_of_fraction(fr)
        _emit(
            {"fraction": _fraction_str(fr), "conway": poly.to_json()},
            str(poly),
            cfg,
        )
        return 0
    stages = closure_stages(parse_braid(args.word))
    data = {
        "blocks": list(stages["blocks"]),
        "cf": list(stages["cf"]),
        "fraction": _fraction_str(stages["fraction"]),
        "conway": stages["conway"].to_json(),
    }
    human = str(stages["conway"])
    if args.stages:
        fraction = _fraction_str(stages["fraction"]) or "unknot"
        human = (
            f"blocks: {list(stages['blocks'])}\ncf: {list(stages['cf'])}\n"
            f"fraction: {fraction}\nconway: {human}"
        )
    _emit(data, human, cfg)
    return 0


def _stage_cmd(field: str, fmt):
    def run(args, cfg: Config) -> int:
        stages = closure_stages(parse_braid(args.word))
        value = fmt(stages[field])
        _emit({field: value}, "unknot" if value is None else str(value), cfg)
        return 0

    return run


cmd_closure = _stage_cmd("blocks", list)
cmd_cf = _stage_cmd("cf", list)
cmd_fraction = _stage_cmd("fraction", _fraction_str)


def cmd_verify(args, cfg: Config) -> int:
    chi_fn = chi_braid
    if args.corrupt_chi:
        # negative control: a deliberately broken symbol must be caught
        def chi_fn(w, n):
            return chi_braid(w, n).add(EvenPoly.t_power(1))

    report = run_equivalence(
        max_len=args.max_len,
        samples=cfg.samples,
        seed=cfg.seed,
        sample_len=args.sample_len,
        max_exp=args.max_exp,
        depth_cap=args.depth_cap,
        chi_fn=chi_fn,
    )
    identities = identity_suite()
    definitional_bad = definitional_identity_report(args.bc_len)
    ok = report.ok and all(flag for _, flag in identities) and not definitional_bad
    data = {
        "checked": report.checked,
        "full_depth": report.full,
        "mismatches": report.mismatches,
        "identities": {name: flag for name, flag in identities},
        "definitional_failures": definitional_bad,
        "ok": ok,
    }
    lines = [
        f"oracle equivalence: {report.checked} words checked "
        f"({report.full} at full depth), {len(report.mismatches)} mismatches"
    ]
    lines += [f"  MISMATCH {m}" for m in report.mismatches[:20]]
    lines += [f"identity [{name}]: {'ok' if flag else 'FAIL'}" for name, flag in identities]
    lines.append(
        "subword-sum identity (positive {B,C} words, len <= %d): %s"
        % (args.bc_len, "ok" if not definitional_bad else f"FAIL {definitional_bad[:5]}")
    )
    lines.append("all checks passed" if ok else "VERIFICATION FAILED")
    _emit(data, "\n".join(lines), cfg)
    return 0 if ok else 1


def cmd_associator(args, cfg: Config) -> int:
    phi = associator(cfg.degree if args.degree is None else args.degree, cfg.eps)
    terms = []
    for word in sorted(phi.exact, key=lambda w: (len(w), w)):
        zetas = [
            {"composition": list(comp), "coeff": str(c)}
            for comp, c in phi.exact[word]
        ]
        terms.append({"word": word, "coeff": phi.coeff(word), "zeta": zetas})
    if cfg.json:
        print(json.dumps({"degree": phi.degree, "terms": terms}))
    else:
        for t in terms:
            combo = " + ".join(
                "{}*zeta({})".format(z["coeff"], ",".join(map(str, z["composition"])))
                if z["composition"]
                else z["coeff"]
                for z in t["zeta"]
            )
            print(f"{t['word'] or '1':<{phi.degree}}  {t['coeff']:+.10f}   {combo}")
    return 0


def cmd_conjecture(args, cfg: Config) -> int:
    rows = []
    for n in range(1, args.n + 1):
        rhs = conjecture_rhs(n, cfg.eps)
        lhs = None
        if 2 * n <= ASSOCIATOR_DEGREE_CAP:
            lhs = chi_on_associator(2 * n, cfg.eps)[n - 1]
        rows.append(
            {
                "n": n,
                "lhs": lhs,
                "rhs": rhs,
                "diff": None if lhs is None else lhs - rhs,
            }
        )
    if cfg.json:
        print(json.dumps({"rows": rows}))
    else:
        print(f"{'n':>3} {'T^2n':>5} {'lhs (symbol on associator)':>28} {'rhs (zeta sums)':>18} {'diff':>10}")
        for r in rows:
            lhs = "" if r["lhs"] is None else f"{r['lhs']:+.9f}"
            diff = "" if r["diff"] is None else f"{r['diff']:.1e}"
            print(f"{r['n']:>3} {2 * r['n']:>5} {lhs:>28} {r['rhs']:+.9f} {diff:>10}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="braidconway",
        description="Conway polynomial of pure 3-braid closures, two ways, "
        "plus multiple-zeta/associator numerics.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit JSON instead of text")
    shared.add_argument("--eps", type=float, default=1e-8, help="target zeta accuracy")
    shared.add_argument("--seed", type=int, default=0, help="random seed for sampling")
    shared.add_argument("--samples", type=int, default=100, help="random sample count")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_, parents=[shared])
        p.set_defaults(fn=fn)
        return p

    p = add("comb", cmd_comb, "combed normal form of a braid word")
    p.add_argument("word")

    p = add("chi", cmd_chi, "Conway polynomial via the symbol of the Magnus expansion")
    p.add_argument("word")
    p.add_argument("-N", "--degree", type=int, default=8, dest="degree",
                   help="truncation degree (coefficients reported up to t^degree)")

    p = add("conway", cmd_conway, "Conway polynomial via the two-bridge closure oracle")
    p.add_argument("word", nargs="?", default="")
    p.add_argument("--fraction", help="evaluate a two-bridge fraction p/q directly")
    p.add_argument("--stages", action="store_true", help="show closure stages")

    for name, fn, help_ in (
        ("closure", cmd_closure, "alternating twist blocks of the closure"),
        ("cf", cmd_cf, "continued-fraction denominators of the closure"),
        ("fraction", cmd_fraction, "two-bridge fraction of the closure"),
    ):
        p = add(name, fn, help_)
        p.add_argument("word")

    p = add("verify", cmd_verify, "run the oracle-equivalence and identity suites")
    p.add_argument("--max-len", type=int, default=4, help="exhaustive word length")
    p.add_argument("--sample-len", type=int, default=10, help="random word length")
    p.add_argument("--max-exp", type=int, default=3, help="random exponent bound")
    p.add_argument("--depth-cap", type=int, default=10,
                   help="compare coefficients up to t^(2*cap) on heavy words")
    p.add_argument("--bc-len", type=int, default=8,
                   help="length bound for the positive-word subword-sum identity")
    p.add_argument("--corrupt-chi", action="store_true",
                   help="negative control: corrupt the symbol and expect failure")

    p = add("associator", cmd_associator, "dump associator coefficients")
    p.add_argument("--degree", type=int, default=None)

    p = add("conjecture", cmd_conjecture, "zeta generating-function table")
    p.add_argument("--n", type=int, default=5)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    degree = getattr(args, "degree", None)
    cfg = Config(
        degree=8 if degree is None else degree,
        samples=args.samples,
        seed=args.seed,
        eps=args.eps,
        json=args.json,
    )
    try:
        return args.fn(args, cfg)
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
