"""Command-line front end: group-spec files in, versioned reports out.

Subcommands: cone-report, cosine, stringc, psl-search, wreath,
paper-suite.  All outputs carry "schema": "polyreal/1" and identical
invocations produce byte-identical bytes (keys sorted, no timestamps).
Exit codes: 0 success, 2 bad input, 3 a size cap was exceeded, 4 an
internal exact identity failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chartable import character_table
from .errors import (CapExceeded, ClosureOverflow, CrossCheckFailed,
                     DegreeMismatch, DimensionMismatch, InvalidParams,
                     MultiplicityMismatch, NoMatch, NonIntegralMultiplicity,
                     NotPrime, NotPSD, OrderCapExceeded, PolyrealError,
                     PrimeSearchFailed, PrimeTooLarge, ProfileMismatch,
                     RankTooLarge, StringCFailed)
from .groups import (DEFAULT_CAP, Group, Permutation, enumerate_group,
                     subgroup_generated)
from .gsets import coset_action
from .realization import analyze_gset, cone_report, cosine_vector_pure

SCHEMA = "polyreal/1"

PARSE_ERRORS = (InvalidParams, NotPrime, PrimeTooLarge, RankTooLarge,
                DegreeMismatch, DimensionMismatch,
                json.JSONDecodeError, KeyError, ValueError, OSError)
CAP_ERRORS = (CapExceeded, ClosureOverflow, OrderCapExceeded)
IDENTITY_ERRORS = (CrossCheckFailed, NoMatch, MultiplicityMismatch,
                   ProfileMismatch, StringCFailed, NonIntegralMultiplicity,
                   NotPSD, PrimeSearchFailed)


class BuiltGroup:
    """A parsed group spec: the group plus its named generators."""

    def __init__(self, kind: str, group: Group, named: dict[str, int]):
        self.kind = kind
        self.group = group
        self.named = named


def parse_group_spec(spec: dict, cap: int = DEFAULT_CAP,
                     cache_dir=None) -> BuiltGroup:
    kind = spec["kind"]
    if kind == "permutation":
        degree = int(spec["degree"])
        perms = [Permutation.from_cycles(degree, cycles)
                 for cycles in spec["generators"]]
        G = enumerate_group(perms, cap=cap)
        named = {f"s{i}": G.index_of(p) for i, p in enumerate(perms)}
        return BuiltGroup(kind, G, named)
    if kind == "psl2":
        from .psl2 import PSLParams, find_ab, lemma_generators, psl_group
        p = int(spec["p"])
        G = psl_group(p)
        if "y" in spec:
            a, b = spec.get("a"), spec.get("b")
            if a is None or b is None:
                a, b = find_ab(p)
            lg = lemma_generators(PSLParams(p, int(spec["y"]), int(a), int(b)))
            named = {f"s{i}": G.index_of(s)
                     for i, s in enumerate((lg.s0, lg.s1, lg.s2))}
        else:
            named = {f"s{i}": g for i, g in enumerate(G.generator_indices)}
        return BuiltGroup(kind, G, named)
    if kind == "wreath_c2":
        from .wreath import _quotient_by_center, wreath_c2
        base = parse_group_spec(spec["base"], cap=cap, cache_dir=cache_dir)
        wg = wreath_c2(base.group, cap=cap)
        if spec.get("quotient"):
            _, Gq, _ = _quotient_by_center(wg)
            named = {f"s{i}": g for i, g in enumerate(Gq.generator_indices)}
            return BuiltGroup(kind, Gq, named)
        named = {f"s{i}": g for i, g in enumerate(wg.group.generator_indices)}
        return BuiltGroup(kind, wg.group, named)
    if kind == "h4":
        from .h4 import h4_group
        h4 = h4_group(cache_dir=cache_dir)
        named = {f"s{i + 1}": g for i, g in enumerate(h4.generator_indices)}
        return BuiltGroup(kind, h4.group, named)
    raise InvalidParams(f"unknown group kind {kind!r}")


def _load_spec(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _word_to_index(bg: BuiltGroup, word: str) -> int:
    acc = None
    for name in word.strip().split("*"):
        name = name.strip()
        if name not in bg.named:
            raise InvalidParams(f"unknown generator {name!r} in stabilizer word")
        g = bg.named[name]
        acc = g if acc is None else bg.group.mul_index(acc, g)
    if acc is None:
        raise InvalidParams("empty stabilizer word")
    return acc


def _stabilizer(bg: BuiltGroup, words: str | None):
    if not words:
        return subgroup_generated(bg.group, [])
    idx = [_word_to_index(bg, w) for w in words.split(",") if w.strip()]
    return subgroup_generated(bg.group, idx)


def _emit(payload: dict, fmt: str, csv_rows=None, table_lines=None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        for row in csv_rows or []:
            sys.stdout.write(",".join(str(c) for c in row) + "\n")
    else:
        for line in table_lines or []:
            sys.stdout.write(line + "\n")


def _f(x: complex) -> str:
    return format(x.real, ".12g")


def cmd_cone_report(args) -> int:
    bg = parse_group_spec(_load_spec(args.group), cap=args.max_order,
                          cache_dir=args.cache)
    H = _stabilizer(bg, args.stabilizer)
    gs = coset_action(bg.group, H)
    table = character_table(bg.group, cache_dir=args.cache)
    rep = cone_report(gs, table, cache_dir=args.cache)
    payload = rep.to_json()
    csv_rows = [("section", "degree", "type", "multiplicity", "subcone_dim", "cone")]
    for s in payload["sigma"]:
        csv_rows.append(("sigma", s["degree"], s["type"], s["multiplicity"],
                         s["subcone_dim"], s["cone"]))
    for l in payload["layers"]:
        csv_rows.append(("layer", l["rep"], "", l["size"], "", ""))
    lines = [f"points {payload['points']}  layers {len(payload['layers'])}  "
             f"gelfand {payload['gelfand']}"]
    for s in payload["sigma"]:
        lines.append(f"  sigma deg {s['degree']:>4} type {s['type']} "
                     f"m {s['multiplicity']} -> {s['cone']}")
    _emit(payload, args.format, csv_rows, lines)
    return 0


def cmd_cosine(args) -> int:
    bg = parse_group_spec(_load_spec(args.group), cap=args.max_order,
                          cache_dir=args.cache)
    H = _stabilizer(bg, args.stabilizer)
    gs = coset_action(bg.group, H)
    table = character_table(bg.group, cache_dir=args.cache)
    analysis = analyze_gset(gs, table)
    ld = gs.layers()
    rows = []
    for c in analysis.constituents:
        if c.mult != 1:
            continue
        vec = cosine_vector_pure(gs, c, ld)
        rows.append({
            "degree": c.sigma.degree,
            "type": c.sigma.typ,
            "entries": [{"exact": str(v), "float": float(_f(v.to_float()))}
                        for v in vec],
        })
    payload = {
        "schema": SCHEMA,
        "points": gs.n_points,
        "layers": [{"rep": int(r), "size": int(s)}
                   for r, s in zip(ld.layer_reps, ld.layer_sizes)],
        "cosines": rows,
    }
    csv_rows = [("degree", *[f"layer{r}" for r in ld.layer_reps])]
    for r in rows:
        csv_rows.append((r["degree"], *[e["exact"] for e in r["entries"]]))
    lines = [f"{r['degree']:>5}: " + "  ".join(e["exact"] for e in r["entries"])
             for r in rows]
    _emit(payload, args.format, csv_rows, lines)
    return 0


def cmd_stringc(args) -> int:
    from .stringc import verify_string_cgroup
    bg = parse_group_spec(_load_spec(args.group), cap=args.max_order,
                          cache_dir=args.cache)
    names = sorted(bg.named, key=lambda s: int(s[1:]))
    rep = verify_string_cgroup(bg.group, [bg.named[n] for n in names])
    payload = {"schema": SCHEMA, "group_order": bg.group.order,
               "generators": names, **rep.to_dict()}
    csv_rows = [("key", "value")] + sorted(
        (k, v) for k, v in payload.items() if k != "schema")
    lines = [f"{k} = {v}" for k, v in sorted(payload.items())]
    _emit(payload, args.format, csv_rows, lines)
    return 0 if rep.passed else 4


def cmd_psl_search(args) -> int:
    from .psl2 import psl_search
    rows = psl_search(max_p=args.max_p, cache_dir=args.cache)
    payload = {"schema": SCHEMA, "max_p": args.max_p, "rows": rows}
    csv_rows = [("p", "order3_y", "order_s1s2", "generates")]
    for r in rows:
        csv_rows.append((r["p"], r.get("order3_y"), r.get("order_s1s2", ""),
                         r.get("generates", "")))
    lines = [str(r) for r in rows]
    _emit(payload, args.format, csv_rows, lines)
    return 0


def cmd_wreath(args) -> int:
    from .wreath import wreath_c2, wreath_irreducibles, wreath_vertex_constituents
    spec = _load_spec(args.group)
    base_spec = spec["base"] if spec.get("kind") == "wreath_c2" else spec
    base = parse_group_spec(base_spec, cap=args.max_order, cache_dir=args.cache)
    wg = wreath_c2(base.group, cap=args.max_order)
    U_table = character_table(base.group, cache_dir=args.cache)
    table = wreath_irreducibles(wg, U_table)
    cons = wreath_vertex_constituents(wg, U_table, table=table)
    matches = None
    if wg.group.order <= 2400:
        dixon = character_table(wg.group, cache_dir=args.cache)
        matches = dixon.degrees == table.degrees and dixon.values == table.values
        if not matches:
            raise CrossCheckFailed("wreath table differs from the Dixon table")
    payload = {
        "schema": SCHEMA,
        "base_order": base.group.order,
        "wreath_order": wg.group.order,
        "center_order": wg.center.order,
        "irreducibles": table.k,
        "degrees": list(table.degrees),
        "constituents": [{"kind": c.kind, "degree": c.degree,
                          "sign": c.sign} for c in cons],
        "matches_dixon": matches,
    }
    csv_rows = [("kind", "degree", "sign")] + [
        (c.kind, c.degree, c.sign) for c in cons]
    lines = [f"wreath order {wg.group.order}, {table.k} irreducibles, "
             f"{len(cons)} vertex constituents"]
    _emit(payload, args.format, csv_rows, lines)
    return 0


def _suite_checks(cache_dir):
    """The anchored claims, as (name, callable) pairs; callables raise
    on failure."""
    from . import h4 as h4mod
    from . import psl2, wreath
    from .groups import (alternating_group, quaternion_group, sl2_group,
                         symmetric_group)

    def tables():
        expected = {
            "S3": (1, 1, 2), "S4": (1, 1, 2, 3, 3), "A5": (1, 3, 3, 4, 5),
            "Q8": (1, 1, 1, 1, 2), "SL25": (1, 2, 2, 3, 3, 4, 4, 5, 6),
        }
        built = {
            "S3": symmetric_group(3), "S4": symmetric_group(4),
            "A5": alternating_group(5), "Q8": quaternion_group(),
            "SL25": sl2_group(5),
        }
        for name, G in built.items():
            t = character_table(G, cache_dir=cache_dir)
            if t.degrees != expected[name]:
                raise CrossCheckFailed(f"{name} degrees {t.degrees}")

    def psl_example():
        r = psl2.counterexample_pipeline(19, 2, stabilizer="s1,s2", a=8, b=7,
                                         cache_dir=cache_dir)
        if (r["schlafli"] != [9, 3] or r["stabilizer_order"] != 6
                or r["weil"] != {"degree": 9, "multiplicity": 2}):
            raise CrossCheckFailed(f"pipeline report {r}")

    def weil_primes():
        for p in (7, 11, 19, 23):
            w = psl2.weil_constituent_check(p, cache_dir=cache_dir)
            if w.degree != (p - 1) // 2:
                raise CrossCheckFailed(f"weil degree {w.degree} at p={p}")

    def p43():
        r = psl2.counterexample_pipeline(43, 4, cache_dir=cache_dir)
        m = r["weil"]["multiplicity"]
        if Fraction(m) < Fraction(4, 7) or m < 1:
            raise CrossCheckFailed(f"multiplicity {m} below the bound")

    def cell600():
        wreath.sixhundred_cell_report(cache_dir=cache_dir)

    def cell120():
        h4mod.validate_120cell(cache_dir=cache_dir)

    def cross600():
        h4mod.cross_check_600cell(cache_dir=cache_dir)

    return [
        ("character-table-oracles", tables),
        ("psl-2-19-example", psl_example),
        ("weil-constituents", weil_primes),
        ("psl-2-43-bound", p43),
        ("600-cell", cell600),
        ("120-cell", cell120),
        ("600-cell-two-models", cross600),
    ]


def cmd_paper_suite(args) -> int:
    failures = 0
    lines = []
    for name, fn in _suite_checks(args.cache):
        try:
            fn()
            lines.append(f"PASS  {name}")
        except PolyrealError as exc:
            failures += 1
            lines.append(f"FAIL  {name}: {exc}")
    for line in lines:
        sys.stdout.write(line + "\n")
    sys.stdout.write(f"{len(lines) - failures}/{len(lines)} checks passed\n")
    return 0 if failures == 0 else 4


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polyreal",
        description="Exact realization-cone reports for finite group actions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_group=True):
        if needs_group:
            p.add_argument("--group", required=True,
                           help="path to a JSON group spec")
            p.add_argument("--stabilizer", default=None,
                           help="comma-separated generator words, e.g. 's0*s1,s2'")
        p.add_argument("--format", choices=("json", "csv", "table"),
                       default="json")
        p.add_argument("--cache", default=None,
                       help="character table cache dir (overrides POLYREAL_CACHE)")
        p.add_argument("--max-order", type=int, default=DEFAULT_CAP,
                       help="cap on enumerated group order")
        p.add_argument("--threads", type=int, default=1,
                       help="reserved; computations run serially")

    p = sub.add_parser("cone-report", help="decompose a coset action")
    common(p)
    p.set_defaults(fn=cmd_cone_report)

    p = sub.add_parser("cosine", help="exact cosine vectors of the pure realizations")
    common(p)
    p.set_defaults(fn=cmd_cosine)

    p = sub.add_parser("stringc", help="string C-group checks on the declared generators")
    common(p)
    p.set_defaults(fn=cmd_stringc)

    p = sub.add_parser("psl-search", help="scan small PSL(2,p) for order-3 first entries")
    common(p, needs_group=False)
    p.add_argument("--max-p", type=int, default=23)
    p.set_defaults(fn=cmd_psl_search)

    p = sub.add_parser("wreath", help="wreath-square table and vertex constituents")
    common(p)
    p.set_defaults(fn=cmd_wreath)

    p = sub.add_parser("paper-suite", help="run every anchored check")
    common(p, needs_group=False)
    p.set_defaults(fn=cmd_paper_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1:
        ap.error("--threads must be at least 1")
    try:
        return args.fn(args)
    except CAP_ERRORS as exc:
        sys.stderr.write(f"cap exceeded: {exc}\n")
        return 3
    except IDENTITY_ERRORS as exc:
        sys.stderr.write(f"identity check failed: {exc}\n")
        return 4
    except PARSE_ERRORS as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
