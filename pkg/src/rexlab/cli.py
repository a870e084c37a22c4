"""rexlab command line: construct, count, brute, verify, cache.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 construction infeasible (Infeasible, SearchExhausted, DichotomyViolated).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .canon import canonical_form
from .constructions import ConstructionRecipe, Family, build, manifest
from .errors import (
    BadParams,
    DichotomyViolated,
    Infeasible,
    RexlabError,
    SearchExhausted,
)
from .graph import Graph
from .graph6 import graph6_encode, read_graph
from .oracle.cache import RexCache, record_line
from .oracle.rex import rex_brute
from .patterns import count_copies, parse_pattern
from .suites import SUITES, SuiteContext

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


def _graph_arg(token: str) -> Graph:
    """Pattern shorthand, or a graph6 / edge-list file."""
    path = Path(token)
    if path.is_file():
        return read_graph(path)
    try:
        return parse_pattern(token)
    except BadParams:
        raise BadParams(f"{token!r} is neither a pattern shorthand nor a readable file") from None


def _param_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


# ------------------------------------------------------------------ construct

_FLAG_PARAMS = ("n", "k", "r", "g")


def _recipe_from_args(args) -> ConstructionRecipe:
    if args.recipe:
        src = Path(args.recipe)
        text = src.read_text() if src.is_file() else args.recipe
        recipe = ConstructionRecipe.loads(text)
        if args.seed is not None:
            recipe = ConstructionRecipe(recipe.family, recipe.params, args.seed)
        return recipe
    if not args.family:
        raise BadParams("construct needs a FAMILY or --recipe")
    params = {}
    for name in _FLAG_PARAMS:
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    for item in args.param or []:
        if "=" not in item:
            raise BadParams(f"-p expects key=value, got {item!r}")
        key, val = item.split("=", 1)
        params[key] = _param_value(val)
    return ConstructionRecipe(args.family.upper(), params, args.seed)


def cmd_construct(args) -> int:
    recipe = _recipe_from_args(args)
    graphs = build(recipe)
    manifests = [manifest(recipe, g) for g in graphs]
    lines = "".join(graph6_encode(g).decode("ascii") + "\n" for g in graphs)
    if args.out:
        out = Path(args.out)
        out.write_text(lines)
        Path(str(out) + ".json").write_text(json.dumps(manifests, indent=2, sort_keys=True) + "\n")
        print(f"wrote {len(graphs)} graph(s) to {out} and manifest to {out}.json")
    elif args.json:
        print(json.dumps(manifests, indent=2, sort_keys=True))
    else:
        sys.stdout.write(lines)
    return EXIT_OK


# ---------------------------------------------------------------------- count

def cmd_count(args) -> int:
    pattern = _graph_arg(args.pattern_pos or args.pattern or "")
    host = _graph_arg(args.host)
    report = count_copies(pattern, host)
    print(json.dumps(report.to_json(), sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------- brute

def cmd_brute(args) -> int:
    if args.n is None or not args.pattern or not args.forbid:
        raise BadParams("brute needs --n, --pattern and --forbid")
    if args.budget is not None and args.budget <= 0:
        raise BadParams("--budget must be positive")
    if args.jobs < 1:
        raise BadParams("--jobs must be at least 1")
    h, f = _graph_arg(args.pattern), _graph_arg(args.forbid)
    cache = RexCache()
    key = (args.n, canonical_form(h).key(), canonical_form(f).key(), args.r)
    stored = cache.lookup(key)
    if stored is not None and not args.no_cache:
        print(record_line(stored))
        return EXIT_OK
    rec = rex_brute(args.n, h, f, args.r, budget=args.budget, jobs=args.jobs)
    print(record_line(rec))
    if stored is not None:
        if record_line(stored) != record_line(rec):
            print("cache mismatch: stored row differs from recomputation", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK
    if rec.exhaustive:
        cache.store(rec)
    else:
        print("budget exhausted: record is not exhaustive (INCONCLUSIVE)", file=sys.stderr)
    return EXIT_OK


# --------------------------------------------------------------------- verify

# CLI flag -> suite keyword, per suite
_SUITE_FLAGS = {
    "paths": {"k": "k", "n_max": "n_max", "n_min": "n_min"},
    "families": {"k_max": "k_max"},
    "dichotomy-blowup": {"max_order": "max_order"},
    "turan-regular": {"n": "n"},
}


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise BadParams(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    ctx = SuiteContext(budget=args.budget, jobs=args.jobs, seed=args.seed or 0,
                       cache=None if args.no_cache else RexCache())
    kwargs = {}
    for flag, kw in _SUITE_FLAGS.get(args.suite, {}).items():
        val = getattr(args, flag, None)
        if val is not None:
            kwargs[kw] = val
    report = SUITES[args.suite](ctx, **kwargs)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------- cache

def cmd_cache(args) -> int:
    cache = RexCache()
    if args.action == "path":
        print(cache.path)
    elif args.action == "clear":
        cache.clear()
        print(f"cleared {cache.path}")
    else:
        for row in cache.rows():
            print(json.dumps(row, sort_keys=True))
    return EXIT_OK


# --------------------------------------------------------------------- parser

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--seed", type=int, default=None, help="randomness seed (default 0)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rexlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a construction, write graph6 + manifest")
    p.add_argument("family", nargs="?", type=str.upper,
                   help="one of " + ", ".join(f.value for f in Family))
    p.add_argument("--recipe", help="recipe JSON, inline or a file path")
    p.add_argument("-p", "--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--pattern")
    p.add_argument("--forbid")
    _common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="count copies of a pattern in a host graph")
    p.add_argument("pattern_pos", nargs="?", metavar="PATTERN")
    p.add_argument("host", metavar="HOST", help="graph6/edge-list file or shorthand")
    p.add_argument("--pattern")
    p.add_argument("--forbid")
    _common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("brute", help="exhaustive rex(n, pattern, forbidden)")
    p.add_argument("--pattern")
    p.add_argument("--forbid")
    _common(p)
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help="one of " + ", ".join(SUITES))
    p.add_argument("--n-max", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--max-order", type=int)
    p.add_argument("--pattern")
    p.add_argument("--forbid")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", help="inspect or clear the oracle cache")
    p.add_argument("action", choices=["show", "path", "clear"], nargs="?", default="show")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Infeasible, SearchExhausted, DichotomyViolated) as exc:
        print(f"rexlab: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (RexlabError, OSError) as exc:
        print(f"rexlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
