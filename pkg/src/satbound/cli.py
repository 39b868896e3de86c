"""Command-line interface: ideal files in, Betti tables, regularity and reports out.

Exit codes: 0 success (including not-applicable checks), 1 a theorem check
failed, 2 input error, 3 computation budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import groebner
from .corpus import FAMILIES, ExampleSpec, UnknownExample, build_example
from .field import Field, field_from_spec
from .groebner import BudgetExceeded
from .ideal import Ideal
from .ideal_ops import SmoothnessRequired, ideal_power, is_smooth, sat_degree, saturate, symbolic_power
from .poly import ParseError, Ring
from .resolution import BettiTable, DegenerateRegularity, arith_reg, geom_reg, minimal_betti
from .schur import (
    DegreeSequence,
    GradedMultiset,
    be_complex,
    complex_json,
    complex_table,
    ext_power,
    hook_graded,
    sym_power,
    thm_bound,
)
from .verify import ERROR, FAIL, Case, NotACurve, run_case, run_suite, summary_table

MAX_VARS = 8
EXIT_OK, EXIT_THEOREM, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    """Bad user input; reported with exit code 2."""


class IdealFileError(InputError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


# -- ideal files ------------------------------------------------------------------------------


def parse_ideal_file(text: str, field_override: Field | None = None) -> Ideal:
    """Parse ``ring <char> <v1,v2,...>`` / ``gens:`` / one generator per line; ``#`` starts a comment."""
    ring = None
    in_gens = False
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        if ring is None:
            parts = stripped.split()
            if parts[0] != "ring":
                raise IdealFileError("expected 'ring <char> <vars>' header", lineno, col0)
            if len(parts) != 3:
                raise IdealFileError("header needs a characteristic and a comma-separated variable list", lineno, col0)
            try:
                char = int(parts[1])
            except ValueError:
                raise IdealFileError(f"bad characteristic {parts[1]!r}", lineno, line.index(parts[1]) + 1) from None
            names = [v.strip() for v in parts[2].split(",")]
            if not names or any(not v.isidentifier() for v in names):
                raise IdealFileError("bad variable list", lineno, line.index(parts[2]) + 1)
            if len(set(names)) != len(names):
                raise IdealFileError("repeated variable name", lineno, line.index(parts[2]) + 1)
            if len(names) > MAX_VARS:
                raise IdealFileError(f"at most {MAX_VARS} variables are supported", lineno, line.index(parts[2]) + 1)
            try:
                fld = field_override or Field(char)
            except ValueError as exc:
                raise IdealFileError(str(exc), lineno, line.index(parts[1]) + 1) from None
            ring = Ring(names, fld)
            continue
        if not in_gens:
            if stripped != "gens:":
                raise IdealFileError("expected 'gens:' marker", lineno, col0)
            in_gens = True
            continue
        try:
            f = ring.parse(line)
        except ParseError as exc:
            raise IdealFileError(exc.msg, lineno, exc.col) from None
        ok, _ = f.is_homogeneous()
        if not ok:
            raise IdealFileError("generator is not homogeneous", lineno, col0)
        if f.terms:
            gens.append(f)
    if ring is None:
        raise IdealFileError("missing ring header", 1, 1)
    if not in_gens:
        raise IdealFileError("missing 'gens:' marker", len(text.splitlines()) or 1, 1)
    return Ideal(gens, ring)


def serialize_ideal(I: Ideal) -> str:
    ring = I.ring
    lines = [f"ring {ring.field.p} {','.join(ring.names)}", "gens:"]
    lines.extend(str(g) for g in I.gens)
    return "\n".join(lines) + "\n"


# -- shared argument handling --------------------------------------------------------------------


def _default_field_spec():
    return os.environ.get("SATBOUND_FIELD") or "prime"


def _field(args) -> Field:
    try:
        return field_from_spec(args.field if args.field is not None else _default_field_spec())
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _example_spec(args) -> ExampleSpec:
    if args.example not in FAMILIES:
        raise UnknownExample(f"unknown example {args.example!r}; known: {', '.join(FAMILIES)}")
    params = {"r": args.r, "d": args.d, "seed": args.seed}
    if args.degrees:
        params["degrees"] = _int_list(args.degrees)
    if getattr(args, "generic", False):
        params["generic"] = True
    return ExampleSpec.make(args.example, **params)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected a comma-separated integer list, got {text!r}") from None


def _load_ideal(args) -> Ideal:
    fld = _field(args) if args.field is not None else None
    if getattr(args, "file", None):
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
        return parse_ideal_file(text, fld)
    if getattr(args, "example", None):
        return build_example(_example_spec(args), fld or _field(args)).ideal
    raise InputError("give an ideal file or --example")


def _add_common(p: argparse.ArgumentParser, ideal: bool = True):
    if ideal:
        p.add_argument("file", nargs="?", help="ideal file")
        p.add_argument("--example", help=f"corpus family ({', '.join(FAMILIES)})")
    p.add_argument("--r", type=int, help="ambient dimension r of P^r")
    p.add_argument("--d", type=int, help="degree parameter")
    p.add_argument("--degrees", help="comma-separated degree list")
    p.add_argument("--seed", type=int, default=None, help="seed for random families (default 0)")
    p.add_argument("--generic", action="store_true", help="generic complete intersection")
    p.add_argument("--field", default=None, help="prime | rat | explicit prime (default: $SATBOUND_FIELD or prime)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--budget", type=int, default=None, help="cap on reduction steps per computation")


def _emit(args, payload: dict, text: str):
    print(json.dumps(payload, sort_keys=True) if args.json else text)


# -- subcommands ----------------------------------------------------------------------------------


def cmd_satdeg(args) -> int:
    I = _load_ideal(args)
    J = ideal_power(I, args.power)
    res = sat_degree(J, method=args.method)
    d = res.to_dict()
    d["power"] = args.power
    lines = [str(res.sat_degree)]
    if res.gap_dims:
        lines.append("gaps: " + ", ".join(f"t={t}: {g}" for t, g in sorted(res.gap_dims.items())))
    _emit(args, d, "\n".join(lines))
    return EXIT_OK


def cmd_betti(args) -> int:
    I = ideal_power(_load_ideal(args), args.power)
    B = minimal_betti(I)
    if args.quotient:
        entries = B.quotient_entries()
        payload = [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(entries.items())]
        text = BettiTable(entries).staircase()
    else:
        payload = B.to_json()
        text = B.staircase()
    _emit(args, {"betti": payload, "module": "S/I" if args.quotient else "I"}, text)
    return EXIT_OK


def cmd_reg(args) -> int:
    I = ideal_power(_load_ideal(args), args.power)
    out = {"arith_reg": arith_reg(I)}
    try:
        out["geom_reg"] = geom_reg(I)
    except DegenerateRegularity:
        out["geom_reg"] = None
        out["note"] = "sat(I) is the unit ideal (empty scheme)"
    text = f"arith_reg {out['arith_reg']}\ngeom_reg {out['geom_reg'] if out['geom_reg'] is not None else '-'}"
    _emit(args, out, text)
    return EXIT_OK


def cmd_sympow(args) -> int:
    I = _load_ideal(args)
    S = saturate(I)
    if S.is_unit():
        raise InputError("V(I) is empty")
    cert = is_smooth(S)
    try:
        P = symbolic_power(S, args.a, smooth_checked=bool(cert), override=args.override)
    except SmoothnessRequired as exc:
        _emit(args, {"status": "not-applicable", "note": str(exc), "smoothness": cert.to_dict()}, f"not-applicable: {exc}")
        return EXIT_OK
    Ia = ideal_power(S, args.a)
    dims = [
        {"t": t, "ordinary": Ia.graded_dim(t), "symbolic": P.graded_dim(t)}
        for t in range(args.tmax + 1)
    ]
    payload = {
        "status": "ok",
        "a": args.a,
        "generators": [str(g) for g in P.gens],
        "graded_dims": dims,
        "smoothness": cert.to_dict(),
    }
    lines = [f"symbolic power a={args.a}: {len(P.gens)} generators"]
    lines += [f"  {g}" for g in P.gens]
    lines.append("   t  ordinary  symbolic")
    lines += [f"{row['t']:>4}  {row['ordinary']:>8}  {row['symbolic']:>8}" for row in dims]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _parse_hook(text: str) -> tuple[int, int]:
    vals = {}
    for part in text.split(","):
        if "=" not in part:
            raise InputError(f"expected a=<int>,k=<int>, got {text!r}")
        k, v = part.split("=", 1)
        try:
            vals[k.strip()] = int(v)
        except ValueError:
            raise InputError(f"bad integer in {text!r}") from None
    if set(vals) != {"a", "k"}:
        raise InputError(f"expected a=<int>,k=<int>, got {text!r}")
    return vals["a"], vals["k"]


def cmd_schur(args) -> int:
    if not args.degs:
        raise InputError("--degs is required")
    degs = _int_list(args.degs)
    V = GradedMultiset(degs)
    if args.hook:
        a, k = _parse_hook(args.hook)
        if a < 1 or k < 1:
            raise InputError("hook shape needs a >= 1 and k >= 1")
        H = hook_graded(a, k, V)
        payload = {"a": a, "k": k, "rank": H.rank, "degrees": H.degrees, "max_degree": H.max_degree()}
        text = f"S^({a},1^{k - 1}) rank {H.rank}, max degree {H.max_degree()}\n" + complex_table([H], "H")
        _emit(args, payload, text)
        return EXIT_OK
    if args.sym is not None or args.ext is not None:
        T = sym_power(V, args.sym) if args.sym is not None else ext_power(V, args.ext)
        _emit(args, T.to_json(), complex_table([T], "S" if args.sym is not None else "L"))
        return EXIT_OK
    if args.be is not None:
        r = args.r if args.r is not None else len(degs) - 1
        D = DegreeSequence(degs, r)
        terms = be_complex(args.be, D)
        payload = {"a": args.be, "r": r, "terms": json.loads(complex_json(terms)), "bound": thm_bound("thmA", args.be, D)}
        _emit(args, payload, complex_table(terms))
        return EXIT_OK
    raise InputError("give one of --hook, --sym, --ext, --be")


def _exit_for_reports(reports) -> int:
    if any(r.status == FAIL for r in reports):
        return EXIT_THEOREM
    errors = [r for r in reports if r.status == ERROR]
    if errors:
        if any(r.witness.get("error") == "BudgetExceeded" for r in errors):
            return EXIT_BUDGET
        return EXIT_THEOREM
    return EXIT_OK


def cmd_verify(args) -> int:
    fld = _field(args)
    if args.check == "suite":
        names = [n.strip() for n in args.names.split(",")] if args.names else None
        if names:
            bad = [n for n in names if n not in FAMILIES]
            if bad:
                raise UnknownExample(f"unknown example {bad[0]!r}")
        reports = run_suite(names, a_max=args.a_max, field_spec=fld.p, jobs=args.jobs)
    else:
        if args.check == "macaulay":
            degrees = tuple(_int_list(args.degrees)) if args.degrees else (2, 2, 2)
            case = Case("macaulay", None, args.a, degrees=degrees, seed=args.seed or 0)
        else:
            if not args.example:
                raise InputError(f"verify {args.check} needs --example")
            case = Case(args.check, _example_spec(args), args.a)
            # surface input errors directly instead of folding them into the report
            build_example(case.spec, fld)
        report = run_case(case, fld)
        if report.status == ERROR and report.witness.get("error") in ("NotACurve", "ValueError"):
            raise InputError(report.note)
        reports = [report]
    if args.json:
        for r in reports:
            print(r.to_json())
    else:
        print(summary_table(reports))
    return _exit_for_reports(reports)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="satbound", description="Saturation degrees, Betti tables and bound checks.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("satdeg", help="saturation degree of I^a")
    _add_common(p)
    p.add_argument("--power", "--a", dest="power", type=int, default=1)
    p.add_argument("--method", choices=("hilbert", "scan"), default="hilbert")
    p.set_defaults(func=cmd_satdeg)

    p = sub.add_parser("betti", help="minimal Betti table of I^a")
    _add_common(p)
    p.add_argument("--power", "--a", dest="power", type=int, default=1)
    p.add_argument("--quotient", action="store_true", help="report Betti numbers of S/I")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("reg", help="arithmetic and geometric regularity of I^a")
    _add_common(p)
    p.add_argument("--power", "--a", dest="power", type=int, default=1)
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("sympow", help="symbolic power of a smooth scheme via saturation")
    _add_common(p)
    p.add_argument("--a", "--power", dest="a", type=int, default=2)
    p.add_argument("--tmax", type=int, default=8)
    p.add_argument("--override", action="store_true", help="skip the smoothness requirement")
    p.set_defaults(func=cmd_sympow)

    p = sub.add_parser("schur", help="graded characters of Schur powers and complexes")
    _add_common(p, ideal=False)
    p.add_argument("--degs", help="generator degrees of V, comma-separated")
    p.add_argument("--hook", help="hook shape as a=<int>,k=<int>")
    p.add_argument("--sym", type=int, help="symmetric power")
    p.add_argument("--ext", type=int, help="exterior power")
    p.add_argument("--be", type=int, help="terms of the symmetric-power Koszul complex for power a")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("verify", help="check saturation and regularity bounds")
    p.add_argument("check", choices=("suite", "thmA", "thmB", "macaulay", "corollaryC", "zariski", "surface"))
    _add_common(p, ideal=False)
    p.add_argument("--example", help=f"corpus family ({', '.join(FAMILIES)})")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--a-max", dest="a_max", type=int, default=3)
    p.add_argument("--names", help="suite: comma-separated families to include")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--tmax", type=int, default=None, help="unused by verify; accepted for uniformity")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    saved = groebner.DEFAULT_BUDGET
    if getattr(args, "budget", None) is not None:
        groebner.DEFAULT_BUDGET = args.budget
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, UnknownExample, NotACurve) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        groebner.DEFAULT_BUDGET = saved


if __name__ == "__main__":
    sys.exit(main())
