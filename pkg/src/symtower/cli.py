"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a verification fails, 2 for
usage errors (bad expression, insufficient ``--max-dim``).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __doc__ as _pkg_doc
from .chainsym import contrast_report, example_complex, format_cohomology, sym_naive
from .corpus import adjunction_corpus, random_inclusions
from .cubes import (
    CertificateError,
    additivity_probe,
    box,
    kunneth_quotient_certificate,
    recheck_certificate,
    sym_kunneth_certificate,
    symmetrizable_check,
    tilde_box,
    tower,
)
from .expr import ExprError, evaluate, geometric_dim, is_inclusion, load_bounds, parse, unparse
from .groups import adjunction_check, perm_to_oneline
from .homology import euler, euler_from_homology, format_homology, homology, homology_table, reduced_homology
from .sset import TruncationError
from .symseq import FreeSpectrumSpec, SliceCertificateError, free_spectrum, slice_check, sym_slice_check
from .zeta import macdonald_check, multiplicativity_check, suspension_inverse_check, zeta

SCHEMA = "symtower.report/1"

COMMANDS = {
    # name: (argument kind, bound rule)
    "homology": ("space", "dim"),
    "euler": ("space", "dim"),
    "zeta": ("space", "order"),
    "tower": ("inclusion", "n"),
    "verify-kunneth": ("inclusion", "n"),
    "verify-symmetrizable": ("inclusion?", "n"),
    "verify-macdonald": ("space", "order"),
    "verify-mult": ("inclusion", "order"),
    "verify-susp-inv": ("space", "order+1"),
    "verify-slices": ("none", None),
    "verify-adjunction": ("none", None),
    "chain-counterexample": ("none", None),
    "additivity-probe": ("inclusion", "n"),
}


class UsageError(Exception):
    pass


def required_bound(rule, d, n, order):
    """Smallest ``dim_bound`` that makes the requested analysis exact."""
    if rule == "dim":
        need = d + 1
    elif rule == "order":
        need = max(order, 1) * d + 1
    elif rule == "order+1":
        need = max(order, 1) * (d + 1) + 1
    else:
        need = max(n, 1) * d + 1
    return max(need, 1)


def _build_parser():
    p = argparse.ArgumentParser(
        prog="symtower",
        description=(_pkg_doc or "").strip(),
        epilog="exit status: 0 pass, 1 verification failure, 2 usage error",
    )
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("expr", nargs="*", help="space or inclusion expression(s)")
    p.add_argument("--max-dim", type=int, default=None, help="dim_bound for every constructor")
    p.add_argument("--order", type=int, default=None, help="zeta truncation order (default 3); max slice degree (default 5)")
    p.add_argument("--n", type=int, default=None, help="power / tower height / free degree")
    p.add_argument("--p", type=int, default=2, help="symmetric power for verify-slices")
    p.add_argument("--random", type=int, default=0, help="number of random inclusions (verify-symmetrizable)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized inputs")
    p.add_argument("--json", action="store_true", help="print a JSON report instead of text")
    return p


def _prepare(args, text, kind, rule):
    try:
        node = parse(text)
    except ExprError as exc:
        raise UsageError(str(exc)) from None
    want_incl = kind.startswith("inclusion")
    if is_inclusion(node) != want_incl:
        raise UsageError(f"{args.command} expects {'an inclusion' if want_incl else 'a space'}: {text}")
    try:
        d = geometric_dim(node)
        loaded = load_bounds(node)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load: {exc}") from None
    n = args.n if args.n is not None else _default_n(args.command)
    need = required_bound(rule, d, n, args.order)
    bound = need if args.max_dim is None else args.max_dim
    if bound < need:
        raise UsageError(f"insufficient --max-dim {bound}: need at least {need} for {text}")
    if loaded is not None and loaded < bound:
        raise UsageError(f"loaded file stores levels up to {loaded}; need at least {bound}")
    try:
        return node, evaluate(node, bound), bound
    except TruncationError as exc:
        raise UsageError(str(exc)) from None


def _default_n(command):
    return {"tower": 3, "verify-kunneth": 2, "verify-symmetrizable": 3, "additivity-probe": 3}.get(command, 2)


# ----------------------------------------------------------------------------
# commands; each returns (passed, text lines, json payload)


def _cmd_homology(args, obj):
    H = reduced_homology(obj)
    return True, format_homology(H), {"homology": homology_table(H)}


def _cmd_euler(args, obj):
    a, b = euler(obj), euler_from_homology(obj)
    return a == b, [f"chi~ = {a} (simplex count), {b} (homology)"], {"euler_count": a, "euler_homology": b}


def _cmd_zeta(args, obj):
    z = zeta(obj, args.order)
    return z.consistent, [f"zeta = {z.series}", f"coefficients = {list(z.series.coeffs)}"], z.to_dict()


def _series_lines(r):
    status = "PASS" if r.passed else "FAIL"
    lines = [f"{status} {r.name}: lhs {list(r.lhs.coeffs)}, rhs {list(r.rhs.coeffs)}"]
    if r.first_divergence is not None:
        lines.append(f"first divergence at t^{r.first_divergence}")
    return lines


def _cmd_macdonald(args, obj):
    r = macdonald_check(obj, args.order)
    lines = _series_lines(r)
    lines.append(f"series ({','.join(map(str, r.lhs.coeffs))})")
    return r.passed, lines, r.to_dict()


def _cmd_mult(args, obj):
    r = multiplicativity_check(obj, args.order)
    return r.passed, _series_lines(r), r.to_dict()


def _cmd_susp(args, obj):
    r = suspension_inverse_check(obj, args.order)
    return r.passed, _series_lines(r), r.to_dict()


def _cmd_tower(args, obj):
    reports = tower(obj, args.n or _default_n("tower"))
    lines = []
    for t in reports:
        lines.append(
            f"n={t.n}: plain chi~ {t.plain_euler}, symmetrized chi~ {t.sym_euler}, "
            f"{'PASS' if t.passed else 'FAIL'}"
        )
    return all(t.passed for t in reports), lines, {"towers": [t.to_dict() for t in reports]}


def _cmd_kunneth(args, obj):
    nmax = args.n or _default_n("verify-kunneth")
    lines, payload, ok = [], [], True
    for n in range(1, nmax + 1):
        stages = [box(obj, n, i) for i in range(n + 1)]
        plain0 = [s.space.reduced(0) for s in stages]
        sym0 = [tilde_box(obj, n, i, s)[0].reduced(0) for i, s in enumerate(stages)]
        lines.append(f"n={n}: level-0 stage sizes {plain0} plain, {sym0} symmetrized")
        for i in range(1, n + 1):
            for fn in (kunneth_quotient_certificate, sym_kunneth_certificate):
                try:
                    c = fn(obj, n, i, stages, raise_on_failure=False)
                except CertificateError as exc:
                    ok = False
                    lines.append(f"FAIL {fn.__name__} n={n} i={i}: {exc}")
                    continue
                c.passed = c.passed and recheck_certificate(c)
                ok &= c.passed
                lines.append(
                    f"{'PASS' if c.passed else 'FAIL'} {c.kind} n={n} i={i}: level sizes {c.level_sizes}"
                    + (f" ({c.failure})" if c.failure else "")
                )
                payload.append(c.to_dict() | {"stage_sizes_level0": {"plain": plain0, "sym": sym0}})
    return ok, lines, {"certificates": payload}


def _cmd_symmetrizable(args, obj):
    n = args.n or _default_n("verify-symmetrizable")
    lines, payload, ok = [], [], True
    for k in range(1, n + 1):
        r = symmetrizable_check(obj, k)
        ok &= r.injective
        lines.append(f"{'PASS' if r.injective else 'FAIL'} n={k}: per level (tilde, image, Sym^n Y) {r.per_level}")
        payload.append(r.to_dict())
    return ok, lines, {"reports": payload}


def _cmd_additivity(args, obj):
    r = additivity_probe(obj, args.n or _default_n("additivity-probe"))
    flags = lambda d: "".join("1" if d[k] else "0" for k in sorted(d))
    lines = [
        f"acyclic Sym^k for k=1..{r.nmax}: X {flags(r.acyclic_x)}, Z {flags(r.acyclic_z)}, Y {flags(r.acyclic_y)}",
        f"thresholds a={r.a} b={r.b}; implied acyclic Sym^N Y for N in {r.implied}",
        f"{'PASS' if r.consistent else 'FAIL'} additivity",
    ]
    return r.consistent, lines, r.to_dict()


def _cmd_chain(args):
    n = args.n or 2
    X = example_complex()
    if n == 2:
        r = contrast_report(X)
        lines = ["input: Z --id--> Z in degrees -1, 0"]
        lines += ["input " + s for s in format_cohomology(r.input_homology)]
        lines.append("naive Sym^2:")
        lines += format_cohomology(r.sym2_homology)
        lines.append(f"swap signs on diagonal tensors: {r.swap_signs}")
        lines.append(f"{'PASS' if r.passed else 'FAIL'} acyclic input, non-acyclic naive Sym^2")
        return r.passed, lines, r.to_dict()
    H = homology(sym_naive(n, X))
    payload = {"n": n, "homology": {str(k): str(g) for k, g in sorted(H.items())}}
    return True, [f"Sym^{n} " + s for s in format_cohomology(H)], payload


def _cmd_slices(args):
    mmax = 5 if args.order is None else args.order
    ns = [args.n] if args.n is not None else [0, 1, 2]
    lines, payload, ok = [], [], True
    for n in ns:
        for a in (1, 2):
            for t in (1, 2):
                spec = FreeSpectrumSpec.of_sizes(n, a, t)
                F = free_spectrum(spec, max(mmax, n))
                for m in range(mmax + 1):
                    try:
                        c = slice_check(spec, m, raise_on_failure=False, F=F)
                    except SliceCertificateError as exc:
                        ok = False
                        lines.append(f"FAIL slice {exc}")
                        continue
                    ok &= c.passed
                    payload.append({k: v for k, v in c.to_dict().items() if k != "table"})
        lines.append(f"slice formula n={n}, m<={mmax}, |A|,|T|<=2: {'PASS' if ok else 'FAIL'}")
    p = args.p
    sym_ok = True
    for a in (1, 2):
        for t in (1, 2):
            spec = FreeSpectrumSpec.of_sizes(1, a, t)
            for m in range(p, min(mmax, 4) + 1):
                c = sym_slice_check(p, spec, m, raise_on_failure=False)
                sym_ok &= c.passed
                payload.append({k: v for k, v in c.to_dict().items() if k != "table"})
    ok &= sym_ok
    lines.append(f"Sym^{p} slice formula and orbit fibers, n=1, m<={min(mmax, 4)}: {'PASS' if sym_ok else 'FAIL'}")
    return ok, lines, {"certificates": payload}


def _cmd_adjunction(args):
    corpus = adjunction_corpus()
    ok, rows = True, []
    for G, H, X, Y in corpus:
        r = adjunction_check(G, H, X, Y)
        ok &= r.passed
        rows.append(
            {
                "G": G.degree,
                "H": [perm_to_oneline(h) for h in H.elements],
                "X": X.reduced_size,
                "Y": Y.reduced_size,
                "left": r.left_count,
                "right": r.right_count,
                "passed": r.passed,
            }
        )
    failed = sum(not r["passed"] for r in rows)
    lines = [f"{'PASS' if ok else 'FAIL'} adjunction on {len(rows)} cases ({failed} failures)"]
    return ok, lines, {"cases": rows}


HANDLERS = {
    "homology": _cmd_homology,
    "euler": _cmd_euler,
    "zeta": _cmd_zeta,
    "tower": _cmd_tower,
    "verify-kunneth": _cmd_kunneth,
    "verify-symmetrizable": _cmd_symmetrizable,
    "verify-macdonald": _cmd_macdonald,
    "verify-mult": _cmd_mult,
    "verify-susp-inv": _cmd_susp,
    "additivity-probe": _cmd_additivity,
}

GLOBAL_HANDLERS = {
    "verify-slices": _cmd_slices,
    "verify-adjunction": _cmd_adjunction,
    "chain-counterexample": _cmd_chain,
}


def run(argv=None, out=None):
    """Run one invocation; returns the exit code."""
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command != "verify-slices" and args.order is None:
        args.order = 3
    kind, rule = COMMANDS[args.command]
    report = {"schema": SCHEMA, "command": args.command, "results": []}
    lines_all, passed = [], True
    try:
        if kind == "none":
            if args.expr:
                raise UsageError(f"{args.command} takes no expression")
            ok, lines, payload = GLOBAL_HANDLERS[args.command](args)
            passed &= ok
            lines_all += lines
            report["results"].append({"passed": ok, **payload})
        else:
            items = [(text, None) for text in args.expr]
            if args.command == "verify-symmetrizable" and args.random:
                n = args.n or _default_n("verify-symmetrizable")
                for k, f in enumerate(random_inclusions(args.random, seed=args.seed, n=n)):
                    items.append((f"random[{args.seed}:{k}]", f))
            if not items:
                raise UsageError(f"{args.command} needs an expression")
            for text, prebuilt in items:
                if prebuilt is None:
                    node, obj, bound = _prepare(args, text, kind, rule)
                    label = unparse(node)
                else:
                    obj, bound, label = prebuilt, prebuilt.target.dim_bound, text
                ok, lines, payload = HANDLERS[args.command](args, obj)
                passed &= ok
                if len(items) > 1:
                    lines_all.append(f"{label}:")
                    lines_all += ["  " + s for s in lines]
                else:
                    lines_all += lines
                report["results"].append({"expr": label, "max_dim": bound, "passed": ok, **payload})
    except UsageError as exc:
        print(f"symtower: error: {exc}", file=sys.stderr)
        return 2
    report["passed"] = passed
    if args.json:
        out.write(json.dumps(_jsonable(report), indent=2) + "\n")
    else:
        for line in lines_all:
            out.write(line + "\n")
    return 0 if passed else 1


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):
        return x.item()
    return x


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
