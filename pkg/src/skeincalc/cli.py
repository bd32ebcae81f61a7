"""Command-line front end: ``skeincalc <subcommand> ...``.

Exit status is 0 when every requested check passes, 1 on a failed check or
a parse/validation/evaluation error, and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import basis, kauffman, moves, spider
from .diagram import ValidationError
from .ring import LaurentPoly, parse_poly
from .statevector import StateVector
from .textformat import TangleSyntaxError, parse_tangle, serialize

SCHEMA_VERSION = 1


class CliError(Exception):
    def __init__(self, module: str, error: Exception):
        super().__init__(f"{module}: {type(error).__name__}: {error}")
        self.module = module
        self.error = error


def _load(path: str):
    try:
        return parse_tangle(Path(path).read_text())
    except (TangleSyntaxError, ValidationError) as exc:
        raise CliError("diagram", exc) from exc
    except OSError as exc:
        raise CliError("cli", exc) from exc


def _seed(args) -> int:
    env = os.environ.get("SKEIN_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _rules(args) -> spider.RuleSet:
    a = parse_poly(args.a) if args.a is not None else LaurentPoly.const(1)
    y = parse_poly(args.y) if args.y is not None else LaurentPoly.var("y")
    return spider.su3_params(a, y)


def _evaluate(d, args) -> StateVector:
    if args.theory == "kauffman":
        if getattr(args, "engine", "rewrite") == "oracle":
            return kauffman.bracket_oracle(d)
        return kauffman.bracket_rewrite(d)
    norm = getattr(args, "normalization", "standard")
    if norm == "standard":
        return spider.su3_rewrite(d, _rules(args))
    return spider.normalized_invariant(d, norm)


# subcommands -----------------------------------------------------------------

def cmd_eval(args):
    results = []
    for path in args.files:
        v = _evaluate(_load(path), args)
        results.append({"file": path, **v.to_json()})
    text = []
    for r in results:
        text.append(f"{r['file']}:")
        for term in r["basis"]:
            text.append(f"  {term['coeff']}  [{term['key']}]")
    return (results[0] if len(results) == 1 else results), text, True


def cmd_basis(args):
    if args.mode == "kauffman":
        if args.points is None:
            raise CliError("cli", ValueError("--points is required in kauffman mode"))
        elems = basis.enumerate_matchings(args.points)
    else:
        if args.signature is None:
            raise CliError("cli", ValueError("--signature is required in su3 mode"))
        elems = basis.enumerate_webs(args.signature, args.max_vertices)
    result = [{"key": e.canonical_key, "diagram": serialize(e.diagram)} for e in elems]
    text = [f"{len(elems)} basis elements"]
    for e in elems:
        text.append(e.canonical_key + "\t" + serialize(e.diagram).strip().replace("\n", " ; "))
    return result, text, True


def cmd_check(args):
    seed = _seed(args)
    params = _rules(args) if args.theory == "su3" and (args.a or args.y) else None
    rows, ok = [], True
    for path in args.files:
        d = _load(path)
        rep = moves.invariance_report(d, args.theory, params, kinds=args.moves,
                                      max_sites=args.max_sites, seed=seed)
        ok &= rep.ok
        for (kind, direction), (passed, total) in sorted(rep.counts().items()):
            rows.append({"file": path, "move": kind, "direction": direction, "passed": passed, "total": total})
    text = [f"{'file':<24} {'move':<18} {'dir':<7} pass/total"]
    for r in rows:
        text.append(f"{r['file'][-24:]:<24} {r['move']:<18} {r['direction']:<7} {r['passed']}/{r['total']}")
    text.append("PASS" if ok else "FAIL")
    return rows, text, ok


def cmd_identities(args):
    if args.theory == "kauffman":
        res = kauffman.kauffman_uniqueness_residuals()
        std = kauffman.substitute_params(res, B="A^-1", d="-A^2 + -A^-2")
        named = [("AB-1", std[0]), ("A^2+B^2+ABd", std[1])]
    else:
        named = spider.su3_identity_suite()
    result = [{"name": n, "residual": str(r), "status": "PASS" if r == 0 else "FAIL"} for n, r in named]
    text = [f"{r['name']:<24} {r['status']}  ({r['residual']})" for r in result]
    return result, text, all(r["status"] == "PASS" for r in result)


def cmd_oracle_compare(args):
    diagrams = [(p, _load(p)) for p in args.files]
    seed = _seed(args)
    for i in range(args.random):
        spec = moves.TangleSpec(strands=2 * (i % 3), rows=12, seed=seed + i, max_crossings=8,
                                closed=(i % 3 == 0))
        diagrams.append((f"random[{seed + i}]", moves.random_tangle(spec)))
    result, text, ok = [], [], True
    for name, d in diagrams:
        same = kauffman.bracket_rewrite(d) == kauffman.bracket_oracle(d)
        ok &= same
        result.append({"input": name, "crossings": len(d.crossings()), "agree": same})
        text.append(f"{name:<28} {len(d.crossings()):>3} crossings  {'agree' if same else 'DIFFER'}")
    return result, text, ok


def cmd_normal_form(args):
    d = _load(args.file)
    v = _evaluate(d, args)
    result = [{"coeff": str(c), "key": k, "diagram": serialize(v.reps[k])} for k, c in v.items()]
    text = []
    for r in result:
        text.append(f"# coefficient {r['coeff']}")
        text.append(r["diagram"].rstrip())
    return result, text, True


# parser ----------------------------------------------------------------------------

def _theory_flags(p, su3_default=False):
    p.add_argument("--theory", choices=("kauffman", "su3"), default="su3" if su3_default else "kauffman")
    p.add_argument("--a", help="SU(3) parameter a (canonical polynomial text)")
    p.add_argument("--y", help="SU(3) parameter y (canonical polynomial text)")


def _output_flags(p, default):
    p.add_argument("--format", choices=("json", "text"), default=default)
    p.add_argument("--json", dest="format", action="store_const", const="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skeincalc", description="Kauffman bracket and SU(3) skein calculus")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate diagrams to normal form")
    _theory_flags(p)
    p.add_argument("--normalization", choices=spider.NORMALIZATIONS, default="standard")
    p.add_argument("--engine", choices=("rewrite", "oracle"), default="rewrite")
    p.add_argument("files", nargs="+")
    _output_flags(p, "json")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("basis", help="enumerate a state-space basis")
    p.add_argument("--mode", choices=("kauffman", "su3"), default="kauffman")
    p.add_argument("--points", type=int)
    p.add_argument("--signature")
    p.add_argument("--max-vertices", type=int, default=12)
    _output_flags(p, "text")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("check", help="Reidemeister invariance report")
    _theory_flags(p)
    p.add_argument("--moves", default="all", choices=("all", "RI", "RII", "RIII", "R41"))
    p.add_argument("--max-sites", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("files", nargs="+")
    _output_flags(p, "text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("identities", help="named coefficient identities")
    p.add_argument("--theory", choices=("kauffman", "su3"), default="su3")
    _output_flags(p, "text")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("oracle-compare", help="rewrite engine against the state-sum oracle")
    p.add_argument("files", nargs="*")
    p.add_argument("--random", type=int, default=0, help="also test this many seeded random tangles")
    p.add_argument("--seed", type=int, default=0)
    _output_flags(p, "text")
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("normal-form", help="print the normal form as diagrams")
    _theory_flags(p)
    p.add_argument("--normalization", choices=spider.NORMALIZATIONS, default="standard")
    p.add_argument("file")
    _output_flags(p, "text")
    p.set_defaults(func=cmd_normal_form)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    diagnostics = []
    try:
        result, text, ok = args.func(args)
    except CliError as exc:
        result, text, ok = None, [], False
        diagnostics.append({"module": exc.module, "error": type(exc.error).__name__, "message": str(exc.error)})
    except (ValueError, KeyError, ArithmeticError) as exc:
        result, text, ok = None, [], False
        module = type(exc).__module__.rsplit(".", 1)[-1]
        diagnostics.append({"module": module, "error": type(exc).__name__, "message": str(exc)})
    if args.format == "json":
        json.dump({"version": SCHEMA_VERSION, "result": result, "diagnostics": diagnostics}, out, indent=2)
        out.write("\n")
    else:
        for line in text:
            out.write(line + "\n")
        for diag in diagnostics:
            out.write(f"error [{diag['module']}] {diag['error']}: {diag['message']}\n")
    return 0 if ok and not diagnostics else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
