"""Command-line interface: enumerate, expand, sweep, verify, fit, plot.

Exit codes: 0 success, 2 bad arguments, 3 overflow (unreachable with
arbitrary-precision integers, reserved), 4 step limit exceeded,
5 counterexample found, 6 i/o failure.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
from contextlib import ExitStack
from typing import Iterable, Sequence

from .cfrac import (
    Branch,
    QuadForm,
    StepLimitExceeded,
    check_divisibility,
    expand_qform,
    expand_surd,
    qform_root,
    _is_square,
)
from .cycles import (
    canonical_rotation,
    is_cyclic_palindrome,
    is_cyclic_reverse,
    verify_fixed_point,
)
from .lattice import classify, enumerate_ball, eigen_slope
from .stats import fit_log, read_csv, sweep, write_csv
from .surd import Surd, SurdError, conjugate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_STEP_LIMIT = 4
EXIT_COUNTEREXAMPLE = 5
EXIT_IO = 6


class CounterexampleFound(Exception):
    pass


def _ints(text: str, count: int) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ValueError(f"expected {count} comma-separated integers, got {text!r}")
    return [int(p) for p in parts]


def _open_out(path, stack: ExitStack):
    if path in (None, "-"):
        return sys.stdout
    return stack.enter_context(open(path, "w", encoding="utf-8"))


def _cmd_enumerate(args) -> int:
    with ExitStack() as stack:
        out = _open_out(args.output, stack)
        if args.format == "csv":
            out.write("k,l,m,n,norm_sq,class\n")
            for mat in enumerate_ball(args.radius):
                out.write(
                    f"{mat.k},{mat.l},{mat.m},{mat.n},"
                    f"{mat.norm_sq},{classify(mat).value}\n"
                )
        else:
            for mat in enumerate_ball(args.radius):
                out.write(json.dumps({
                    "k": mat.k, "l": mat.l, "m": mat.m, "n": mat.n,
                    "norm_sq": mat.norm_sq, "class": classify(mat).value,
                }) + "\n")
    return EXIT_OK


def _surd_to_form(s: Surd) -> QuadForm:
    """Primitive quadratic with the given surd as its selected root."""
    s = s.normalize()
    a, b, c = s.z * s.z, -2 * s.u * s.z, s.u * s.u - s.v * s.v * s.w
    g = math.gcd(math.gcd(a, abs(b)), abs(c))
    branch = Branch.PLUS if s.v > 0 else Branch.MINUS
    return QuadForm(a // g, b // g, c // g, branch)


def _cmd_expand(args) -> int:
    if args.surd:
        u, v, w, z = _ints(args.surd, 4)
        x = Surd(u, v, w, z).normalize()
    elif args.qform:
        a, b, c = _ints(args.qform, 3)
        branch = Branch.PLUS if args.branch == "plus" else Branch.MINUS
        x = qform_root(QuadForm(a, b, c, branch))
    else:
        p, q = _ints(args.monic, 2)
        d = p * p - 4 * q
        if d < 0:
            raise ValueError("complex roots: discriminant < 0")
        branch = Branch.PLUS if args.branch == "plus" else Branch.MINUS
        x = Surd(-p, 1 if branch is Branch.PLUS else -1, d, 2).normalize()
    exp = expand_surd(x, args.max_steps)
    if exp.cycle:
        form = _surd_to_form(x)
        other = expand_qform(form, args.max_steps)
        agree = exp.head == other.head and canonical_rotation(
            exp.cycle) == canonical_rotation(other.cycle)
        palin = is_cyclic_palindrome(exp.cycle)
    else:
        agree = True
        palin = True  # empty cycle is vacuously symmetric
    print(f"head: {list(exp.head)}")
    print(f"cycle: {list(exp.cycle)}")
    print(f"preperiod_len: {exp.preperiod_len}")
    print(f"palindrome: {str(palin).lower()}")
    print(f"algorithms_agree: {str(agree).lower()}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    rows = sweep(args.max_radius, include_parabolic=not args.hyperbolic_only,
                 max_steps=args.max_steps)
    with ExitStack() as stack:
        out = _open_out(args.output, stack)
        write_csv(rows, out)
    last = rows[-1]
    print(
        f"r={last.r} weight_total={last.weight_total} "
        f"avg_len={float(last.avg_len):.6f} max_len={last.max_len} "
        f"avg_sum={float(last.avg_sum):.6f} max_sum={last.max_elems} "
        f"avg_ratio={float(last.avg_ratio):.6f}",
        file=sys.stderr,
    )
    return EXIT_OK


def _monic_grid(pmax: int, qmax: int) -> Iterable[tuple[int, int]]:
    for p in range(-pmax, pmax + 1):
        for q in range(-qmax, qmax + 1):
            d = p * p - 4 * q
            if d > 0 and not _is_square(d):
                yield p, q


def _random_forms(count: int, seed: int, coeff_max: int = 50) -> list[QuadForm]:
    rng = random.Random(seed)
    forms: list[QuadForm] = []
    while len(forms) < count:
        a = rng.randint(-coeff_max, coeff_max)
        b = rng.randint(-coeff_max, coeff_max)
        c = rng.randint(-coeff_max, coeff_max)
        if a == 0:
            continue
        d = b * b - 4 * a * c
        if d <= 0 or _is_square(d):
            continue
        forms.append(QuadForm(a, b, c))
    return forms


def _verify_counterexamples(args) -> Iterable[dict]:
    kind = args.kind
    steps = args.max_steps
    if kind == "palindrome":
        for p, q in _monic_grid(args.pmax, args.qmax):
            for branch in (Branch.PLUS, Branch.MINUS):
                exp = expand_qform(QuadForm(1, p, q, branch), steps)
                if not is_cyclic_palindrome(exp.cycle):
                    yield {"kind": kind, "input": {"p": p, "q": q, "branch": branch.value},
                           "expected": "cyclic palindrome", "got": list(exp.cycle)}
    elif kind == "reversal":
        for mat in enumerate_ball(args.radius):
            if classify(mat).value != "hyperbolic":
                continue
            y1 = eigen_slope(mat)
            c1 = expand_surd(y1, steps).cycle
            c2 = expand_surd(conjugate(y1), steps).cycle
            if not is_cyclic_reverse(c1, c2):
                yield {"kind": kind, "input": {"k": mat.k, "l": mat.l, "m": mat.m, "n": mat.n},
                       "expected": "cyclic reverses", "got": [list(c1), list(c2)]}
        for f in _random_forms(args.forms, args.seed):
            c1 = expand_qform(QuadForm(f.a, f.b, f.c, Branch.PLUS), steps).cycle
            c2 = expand_qform(QuadForm(f.a, f.b, f.c, Branch.MINUS), steps).cycle
            if not is_cyclic_reverse(c1, c2):
                yield {"kind": kind, "input": {"A": f.a, "B": f.b, "C": f.c},
                       "expected": "cyclic reverses", "got": [list(c1), list(c2)]}
    elif kind == "equivalence":
        def pairs():
            for mat in enumerate_ball(args.radius):
                if classify(mat).value == "hyperbolic":
                    yield QuadForm(mat.l, mat.k - mat.n, -mat.m), {"matrix": [mat.k, mat.l, mat.m, mat.n]}
            for f in _random_forms(args.forms, args.seed):
                yield f, {"form": [f.a, f.b, f.c]}
        for f, label in pairs():
            e1 = expand_surd(qform_root(f), steps)
            e2 = expand_qform(f, steps)
            ok = e1.head == e2.head and canonical_rotation(
                e1.cycle) == canonical_rotation(e2.cycle)
            if not ok:
                yield {"kind": kind, "input": label,
                       "expected": [list(e1.head), list(e1.cycle)],
                       "got": [list(e2.head), list(e2.cycle)]}
    elif kind == "conjecture":
        for p, q in _monic_grid(args.pmax, args.qmax):
            if not check_divisibility(p, q, steps):
                yield {"kind": kind, "input": {"p": p, "q": q},
                       "expected": "v_i | u_i and v_i | z_i", "got": "divisibility failed"}
    elif kind == "fixedpoint":
        seen: set[tuple[int, ...]] = set()
        for mat in enumerate_ball(args.radius):
            if classify(mat).value != "hyperbolic":
                continue
            cyc = expand_surd(eigen_slope(mat), steps).cycle
            if cyc in seen:
                continue
            seen.add(cyc)
            if not verify_fixed_point(cyc):
                yield {"kind": kind, "input": list(cyc),
                       "expected": "fixed point reconstruction", "got": "mismatch"}
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown verify kind {kind!r}")


def _cmd_verify(args) -> int:
    found = False
    with ExitStack() as stack:
        out = _open_out(args.output, stack)
        for cex in _verify_counterexamples(args):
            found = True
            out.write(json.dumps(cex) + "\n")
    return EXIT_COUNTEREXAMPLE if found else EXIT_OK


def _cmd_fit(args) -> int:
    with open(args.input, encoding="utf-8") as inp:
        records = read_csv(inp)
    points = [(rec["r"], rec[args.column]) for rec in records if rec["r"] >= args.min_radius]
    res = fit_log(points, args.base)
    print(f"column: {args.column}")
    print(f"alpha: {res.alpha:.6f}")
    print(f"beta: {res.beta:.6f}")
    print(f"base: {res.base}")
    print(f"r_squared: {res.r_squared:.6f}")
    return EXIT_OK


def _cmd_plot(args) -> int:
    with open(args.input, encoding="utf-8") as inp:
        records = read_csv(inp)
    points = [(rec["r"], rec[args.column]) for rec in records if rec["r"] >= args.min_radius]
    res = fit_log(points, args.base)
    log_expr = {"2": "(log(x)/log(2))", "10": "log10(x)", "e": "log(x)"}[args.base]
    with ExitStack() as stack:
        out = _open_out(args.output, stack)
        out.write(f"# gnuplot script: {args.column} vs radius with log fit\n")
        out.write(f"set xlabel 'r'\nset ylabel '{args.column}'\n")
        out.write(f"f(x) = {res.alpha:.6f} + {res.beta:.6f} * {log_expr}\n")
        out.write(f"plot '-' with points title '{args.column}', f(x) title 'fit'\n")
        for r, y in points:
            out.write(f"{r:g} {y:.6f}\n")
        out.write("e\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigencf",
        description="Continued-fraction periods of SL(2,Z) eigenvector slopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="stream matrices in a norm ball")
    p_enum.add_argument("--radius", type=int, required=True)
    p_enum.add_argument("--format", choices=["csv", "json"], default="csv")
    p_enum.add_argument("--output", default=None)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_exp = sub.add_parser("expand", help="expand one quadratic irrational")
    src = p_exp.add_mutually_exclusive_group(required=True)
    src.add_argument("--surd", metavar="U,V,W,Z")
    src.add_argument("--qform", metavar="A,B,C")
    src.add_argument("--monic", metavar="P,Q")
    p_exp.add_argument("--branch", choices=["plus", "minus"], default="plus")
    p_exp.add_argument("--max-steps", type=int, default=10_000)
    p_exp.set_defaults(func=_cmd_expand)

    p_sweep = sub.add_parser("sweep", help="aggregate statistics per radius")
    p_sweep.add_argument("--max-radius", type=int, required=True)
    p_sweep.add_argument("--output", default=None)
    p_sweep.add_argument("--hyperbolic-only", action="store_true",
                         help="exclude rational (parabolic) slopes from counts")
    p_sweep.add_argument("--max-steps", type=int, default=10_000)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_ver = sub.add_parser("verify", help="machine-check a property on a grid")
    p_ver.add_argument("kind", choices=[
        "palindrome", "reversal", "equivalence", "conjecture", "fixedpoint"])
    p_ver.add_argument("--pmax", type=int, default=100)
    p_ver.add_argument("--qmax", type=int, default=100)
    p_ver.add_argument("--radius", type=int, default=30)
    p_ver.add_argument("--forms", type=int, default=1000)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--max-steps", type=int, default=10_000)
    p_ver.add_argument("--output", default=None)
    p_ver.set_defaults(func=_cmd_verify)

    p_fit = sub.add_parser("fit", help="least-squares log fit of a sweep column")
    p_fit.add_argument("--input", required=True)
    p_fit.add_argument("--column", default="avg_len")
    p_fit.add_argument("--base", choices=["2", "10", "e"], default="2")
    p_fit.add_argument("--min-radius", type=int, default=2)
    p_fit.set_defaults(func=_cmd_fit)

    p_plot = sub.add_parser("plot", help="emit a plot script for a sweep column")
    p_plot.add_argument("--input", required=True)
    p_plot.add_argument("--column", default="avg_len")
    p_plot.add_argument("--base", choices=["2", "10", "e"], default="2")
    p_plot.add_argument("--min-radius", type=int, default=2)
    p_plot.add_argument("--output", default=None)
    p_plot.set_defaults(func=_cmd_plot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StepLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STEP_LIMIT
    except (SurdError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
