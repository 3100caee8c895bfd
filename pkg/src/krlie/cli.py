"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 unparseable or
invalid input, 3 unsupported group, 4 a representation whose type under a
twisted involution is not tabulated.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .charalg import classify_type, conj_hw, irrep_character, irrep_poly
from .coeff import degree_rank, type_counts
from .errors import (InvalidGroup, KRError, MalformedTable, UnclassifiableTwisted,
                     UnsupportedFamily, UnsupportedGroup)
from .expr import parse_element
from .finoracle import builtin, fs_indicator, parse_table, real_quat_tables
from .krgring import degree_label, present_ring
from .rootdata import parse_group
from .verify import random_checks, sample_weights, verify_suite

EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_UNCLASSIFIABLE = 1, 2, 3, 4


def _emit(args, data, text_lines):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(text_lines))


def _spec(args):
    return parse_group(args.group, args.involution)


def _weights(spec, level):
    if spec.is_torus:
        box = range(-level, level + 1)
        return sorted(w for w in itertools.product(box, repeat=spec.rank)
                      if sum(abs(x) for x in w) <= level)
    return sample_weights(spec, level)


def _degrees(x):
    return sorted((degree_label(d) for d in x.degrees()), reverse=True)


# ---------------------------------------------------------------- commands

def cmd_present(args):
    pres = present_ring(_spec(args))
    lines = [f"group: {pres['group']}", f"involution: {pres['involution']}", "generators:"]
    lines += [f"  {g['name']}  degree {g['degree']}" for g in pres["generators"]]
    lines.append("relations:")
    lines += [f"  {r}" for r in pres["relations"]]
    ring = pres["coefficient_ring"]
    lines.append("coefficient ring:")
    lines.append(f"  {ring['base']}")
    for key in ("real_type_fundamentals", "quaternionic_type_fundamentals"):
        if ring[key]:
            lines.append(f"  {key.replace('_', ' ')}: {', '.join(ring[key])}")
    for a, b in ring["complex_pairs"]:
        lines.append(f"  conjugate pair: {a} <-> {b}")
    lines += [f"  {r}" for r in ring["r_relations"]] if ring["complex_pairs"] else []
    _emit(args, pres, lines)
    return 0


def cmd_mul(args):
    spec = _spec(args)
    a = parse_element(spec, args.a)
    b = parse_element(spec, args.b)
    prod = a * b
    degs = _degrees(prod)
    data = {"group": args.group, "involution": args.involution, "product": prod.render(), "degrees": degs}
    label = ", ".join(str(d) for d in degs) if degs else "none (zero)"
    _emit(args, data, [prod.render(), f"degree: {label}"])
    return 0


def cmd_table(args):
    spec = _spec(args)
    hws = _weights(spec, args.level)
    counts = type_counts(spec, hws)
    rows = [degree_rank(counts, q) for q in range(8)]
    data = {"group": args.group, "involution": args.involution, "level": args.level,
            "irreducibles": len(hws), "types": dict(zip("RCH", counts)), "degrees": rows}
    lines = [f"{len(hws)} irreducibles up to level {args.level}: "
             f"R={counts[0]} C={counts[1]} H={counts[2]}",
             f"{'q':>2}  {'KR^-q_G(pt)':<16} {'free':>5} {'Z/2':>5}"]
    for r in rows:
        lines.append(f"{r['q']:>2}  {r['group']:<16} {r['free_rank']:>5} {r['z2_rank']:>5}")
    _emit(args, data, lines)
    return 0


def cmd_reptypes(args):
    spec = _spec(args)
    rows = []
    for hw in _weights(spec, args.level):
        t = classify_type(spec, hw)
        row = {"highest_weight": list(hw), "dim": irrep_character(spec, hw).dim, "type": t.value,
               "conjugate": list(conj_hw(spec, hw))}
        if not spec.is_torus:
            row["class"] = irrep_poly(spec, hw).render()
        rows.append(row)
    lines = []
    for r in rows:
        name = r.get("class", str(tuple(r["highest_weight"])))
        extra = f"  conjugate {tuple(r['conjugate'])}" if r["type"] == "C" else ""
        lines.append(f"{tuple(r['highest_weight'])}  {name}  dim {r['dim']}  type {r['type']}{extra}")
    _emit(args, {"group": args.group, "involution": args.involution, "irreducibles": rows}, lines)
    return 0


def cmd_verify(args):
    spec = _spec(args)
    checks = verify_suite(spec)
    if args.samples and not spec.is_torus:
        checks = checks + random_checks(spec, args.seed, args.samples)
    lines = []
    for c in checks:
        lines.append(f"{'PASS' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if not c.ok else ""))
    ok = all(c.ok for c in checks)
    lines.append(f"{sum(c.ok for c in checks)}/{len(checks)} checks passed")
    data = {"group": args.group, "involution": args.involution, "ok": ok,
            "checks": [c._asdict() for c in checks]}
    _emit(args, data, lines)
    return 0 if ok else EXIT_FAIL


def cmd_finite(args):
    if os.path.exists(args.table):
        with open(args.table) as fh:
            table = parse_table(fh.read(), os.path.basename(args.table))
    else:
        table = builtin(args.table)
    ranks = real_quat_tables(table)
    inds = [fs_indicator(table, i) for i in range(table.nclasses)]
    data = {"group": table.name, "order": table.order, "indicators": inds,
            "ranks": {k: dict(zip("RCH", v)) for k, v in ranks.items()}}
    lines = [f"group {table.name}, order {table.order}, {table.nclasses} irreducibles",
             f"{'':<3} {'R':>3} {'C':>3} {'H':>3}"]
    for k in ("R", "RR", "RH"):
        lines.append(f"{k:<3} " + " ".join(f"{x:>3}" for x in ranks[k]))
    _emit(args, data, lines)
    return 0


# ---------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="krlie", description="Equivariant KR-theory of compact Lie groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def group_cmd(name, func, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("group", help="U3, SU3, C2 (= Sp4), Sp4, G2, T2, ...")
        sp.add_argument("--involution", choices=["trivial", "conj", "symp"], default="trivial")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.set_defaults(func=func)
        return sp

    group_cmd("present", cmd_present, "generators and relations of KR*_G(G)")
    sp = group_cmd("mul", cmd_mul, "normal form of a product")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = group_cmd("table", cmd_table, "ranks of KR^-q_G(pt) over a sample of irreducibles")
    sp.add_argument("--level", type=int, default=2, help="sum of at most this many fundamentals")
    sp = group_cmd("reptypes", cmd_reptypes, "real/complex/quaternionic type of irreducibles")
    sp.add_argument("--level", type=int, default=1)
    sp = group_cmd("verify", cmd_verify, "run the consistency checks")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=25, help="random triples (0 to skip)")

    sp = sub.add_parser("finite", help="ranks of R, RR and RH for a finite group")
    sp.add_argument("table", help="built-in name (Q8xC3, C3, V4, trivial) or a table file")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_finite)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnclassifiableTwisted as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNCLASSIFIABLE
    except (InvalidGroup, UnsupportedFamily, UnsupportedGroup) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (KRError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
