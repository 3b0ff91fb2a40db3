"""``barytop`` command line interface.

Exit status: 0 on success, 1 when a check or a model comparison fails,
2 on usage or parse errors, 3 when a construction exceeds the cell budget.
"""
from __future__ import annotations

import argparse
import json
import sys

from ..homology import betti_mod_p, integral_homology
from ..homology.profile import euler_from_census
from ..sset.core import CellBudgetExceeded
from ..symbolic import (
    admissible_sequences,
    barycenter_s2_series_modp,
    barycenter_sphere_large_p,
    barycenter_sphere_series_mod2,
    euler_barycenter,
    euler_rsp,
    euler_sp,
)
from ..verify import SUITES, run_suite
from .build import RunConfig, bary_models, build
from .parser import ParseError, parse

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class CommandError(Exception):
    pass


def emit(doc: dict, text: str, cfg_json: bool):
    if cfg_json:
        print(json.dumps({"schema": SCHEMA, **doc}, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------


def cmd_homology(expr: str, cfg: RunConfig) -> int:
    e = parse(expr)
    results = []
    if e.op == "bary":
        for m in bary_models(e, cfg):
            if cfg.p is None:
                results.append((m.kind, m.homology(cfg.max_degree)))
            else:
                results.append((m.kind, m.betti(cfg.p, cfg.max_degree)))
    else:
        X = build(e, cfg)
        if cfg.p is None:
            results.append(("simplicial", integral_homology(X, cfg.max_degree)))
        else:
            results.append(("simplicial", betti_mod_p(X, cfg.p, cfg.max_degree)))

    agree = True
    if len(results) == 2:
        a, b = results[0][1], results[1][1]
        if cfg.p is None:
            agree = a.same_as(b)
        else:
            top = max(a.dmax, b.dmax)
            agree = a.truncate(top).coeffs == b.truncate(top).coeffs
    coeff = "integral" if cfg.p is None else f"mod {cfg.p}"
    doc = {"command": "homology", "expr": str(e), "coefficients": coeff,
           "models": [{"model": k, "result": r.to_json()} for k, r in results],
           "agree": agree}
    lines = [f"{e}  [{coeff}]"]
    for kind, r in results:
        if cfg.p is None:
            body = ", ".join(f"H{d}={g}" for d, g in r.nonzero().items()) or "0"
            if r.truncated:
                body += "  (range truncated at model dimension)"
        else:
            body = ", ".join(f"b{d}={c}" for d, c in r.nonzero().items()) or "0"
        lines.append(f"  {kind}: {body}")
    if not agree:
        lines.append("  MODELS DISAGREE")
    emit(doc, "\n".join(lines), cfg.fmt == "json")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_euler(expr: str, cfg: RunConfig) -> int:
    e = parse(expr)
    X = build(e, cfg)
    chi = euler_from_census(X)
    formula = None
    if e.op in ("bary", "symjoin2", "sp", "rsp"):
        inner = e.args[-1]
        chi_x = euler_from_census(build(inner, cfg))
        n = 2 if e.op == "symjoin2" else e.args[0]
        formula = {"bary": euler_barycenter, "symjoin2": euler_barycenter,
                   "sp": euler_sp, "rsp": euler_rsp}[e.op](n, chi_x)
    ok = formula is None or formula == chi
    doc = {"command": "euler", "expr": str(e), "census": chi, "formula": formula, "agree": ok}
    text = f"chi({e}) = {chi}"
    if formula is not None:
        text += f"  (closed form {formula}{'' if ok else ', MISMATCH'})"
    emit(doc, text, cfg.fmt == "json")
    return EXIT_OK if ok else EXIT_FAIL


def symbolic_bary_series(n: int, k: int, p: int, dmax: int):
    if p == 2:
        return barycenter_sphere_series_mod2(n, k, dmax)
    if k == 2:
        return barycenter_s2_series_modp(n, p, dmax)
    if p > n > 1:
        return barycenter_sphere_large_p(n, k, p, dmax)
    raise CommandError(f"no closed form for B_{n}(S^{k}) mod {p}")


def cmd_poincare(n: int, k: int, p: int, dmax: int, source: str, cfg: RunConfig) -> int:
    from ..constructions import barycenter_suspension_model
    from ..sset import minimal_sphere

    out = {}
    if source in ("symbolic", "both"):
        out["symbolic"] = symbolic_bary_series(n, k, p, dmax)
    if source in ("brute", "both"):
        out["brute"] = barycenter_suspension_model(n, minimal_sphere(k), cfg.budget, dmax).betti(p, dmax)
    agree = len({s.coeffs for s in out.values()}) == 1
    doc = {"command": "poincare", "n": n, "k": k, "p": p, "dmax": dmax,
           "series": {name: s.to_json() for name, s in out.items()}, "agree": agree}
    lines = [f"B_{n}(S^{k}) mod {p}, degrees 0..{dmax}"]
    for name, s in out.items():
        lines.append(f"  {name}: " + " ".join(str(c) for c in s.coeffs))
    if not agree:
        lines.append("  SOURCES DISAGREE")
    emit(doc, "\n".join(lines), cfg.fmt == "json")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_admissible(n: int, dmax: int, cfg: RunConfig) -> int:
    words = admissible_sequences(n, dmax)
    doc = {"command": "admissible", "base": n, "dmax": dmax,
           "words": [{"indices": list(w.indices), "degree": w.degree,
                      "filtration": w.filtration, "excess": w.excess} for w in words]}
    text = "\n".join(f"{str(w.indices):<16} degree {w.degree:<4} filtration {w.filtration}"
                     for w in words)
    emit(doc, text, cfg.fmt == "json")
    return EXIT_OK


def cmd_verify(suite: str, cfg: RunConfig) -> int:
    checks = run_suite(suite, cfg.budget)
    failed = [c for c in checks if not c.passed]
    skipped = [c for c in checks if c.skipped]
    doc = {"command": "verify", "suite": suite, "passed": not failed,
           "checks": [c.to_json() for c in checks]}
    lines = []
    for c in checks:
        status = "SKIP" if c.skipped else ("PASS" if c.passed else "FAIL")
        lines.append(f"{status}  {c.suite}: {c.name}")
        if not c.passed:
            lines.append(f"      expected {c.expected}\n      computed {c.computed}")
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} passed"
                 + (f", {len(skipped)} skipped over budget" if skipped else ""))
    emit(doc, "\n".join(lines), cfg.fmt == "json")
    return EXIT_OK if not failed else EXIT_FAIL


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="barytop", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--budget", type=int, default=None,
                       help="cell budget (default: BARYTOP_CELL_BUDGET or 5000000)")

    h = sub.add_parser("homology", help="homology of a space expression")
    h.add_argument("expr")
    h.add_argument("--mod", type=int, default=None, metavar="P")
    h.add_argument("--max-dim", type=int, default=None, metavar="D")
    h.add_argument("--model", choices=["suspension", "direct", "both"], default="suspension")
    common(h)

    e = sub.add_parser("euler", help="Euler characteristic (census and closed form)")
    e.add_argument("expr")
    common(e)

    p = sub.add_parser("poincare", help="mod-p Poincare series of B_n(S^k)")
    p.add_argument("--bary", type=int, required=True, metavar="N")
    p.add_argument("--sphere", type=int, required=True, metavar="K")
    p.add_argument("--mod", type=int, default=2, metavar="P")
    p.add_argument("--dmax", type=int, required=True, metavar="D")
    p.add_argument("--source", choices=["symbolic", "brute", "both"], default="symbolic")
    common(p)

    a = sub.add_parser("admissible", help="admissible Steenrod words")
    a.add_argument("--base", type=int, required=True, metavar="N")
    a.add_argument("--dmax", type=int, required=True, metavar="D")
    common(a)

    v = sub.add_parser("verify", help="run cross-validation suites")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    common(v)
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    fmt = "json" if args.json else "text"
    try:
        if args.command == "homology":
            cfg = RunConfig(args.max_dim, args.mod, args.model, args.budget, fmt)
            return cmd_homology(args.expr, cfg)
        if args.command == "euler":
            return cmd_euler(args.expr, RunConfig(budget=args.budget, fmt=fmt))
        if args.command == "poincare":
            cfg = RunConfig(p=args.mod, budget=args.budget, fmt=fmt)
            if args.bary < 1 or args.sphere < 1 or args.dmax < 0:
                raise CommandError("need --bary >= 1, --sphere >= 1, --dmax >= 0")
            return cmd_poincare(args.bary, args.sphere, args.mod, args.dmax, args.source, cfg)
        if args.command == "admissible":
            return cmd_admissible(args.base, args.dmax, RunConfig(budget=args.budget, fmt=fmt))
        if args.command == "verify":
            return cmd_verify(args.suite, RunConfig(budget=args.budget, fmt=fmt))
    except ParseError as exc:
        print(f"barytop: parse error {exc.code} at byte {exc.offset}: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except CellBudgetExceeded as exc:
        print(f"barytop: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CommandError, ValueError) as exc:
        print(f"barytop: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
