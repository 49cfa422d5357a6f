"""Command line front end.

Subcommands expose each pipeline stage (group-info, burnside, biset,
units) with a single canonical JSON document per invocation, or a plain
text rendering with --format text.  Exit code 0 means every requested
verification passed; 1 means a verification failed; 2 means the input
could not be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bisets import (
    biset_basis,
    biset_marks,
    class_table,
    tensor,
    tensor_mark,
)
from .burnside import marks, table_of_marks, unit_group
from .groups import (
    DEFAULT_ORDER_CAP,
    GroupOrderError,
    SpecParseError,
    build_group,
    is_cyclic,
    is_nilpotent,
    outer_automorphism_group,
    subgroup_lattice,
)
from .units import search_orthogonal, theorem_report


def _emit(doc: dict, fmt: str, renderer) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2))
        sys.stdout.write("\n")
    else:
        renderer(doc)


def _group_doc(G) -> dict:
    return {
        "name": G.name,
        "order": G.order,
        "abelian": G.is_abelian(),
        "cyclic": is_cyclic(G),
        "nilpotent": is_nilpotent(G),
    }


def cmd_group_info(args) -> int:
    G = build_group(args.group, cap=args.cap)
    lat = subgroup_lattice(G)
    tom = table_of_marks(G)
    out = outer_automorphism_group(G)
    doc = {
        "group": _group_doc(G),
        "subgroup_classes": [
            {
                "label": tom.label(i),
                "order": cls.order,
                "class_size": len(cls.members),
                "normalizer_order": cls.normalizer.order,
                "centralizer_order": cls.centralizer.order,
            }
            for i, cls in enumerate(lat.classes)
        ],
        "out_order": out.order,
        "ok": True,
    }

    def render(d):
        g = d["group"]
        print(f"{g['name']}: order {g['order']}, "
              f"{len(d['subgroup_classes'])} subgroup classes, "
              f"|Out| = {d['out_order']}")
        for c in d["subgroup_classes"]:
            print(f"  {c['label']}: class size {c['class_size']}, "
                  f"|N| = {c['normalizer_order']}, |C| = {c['centralizer_order']}")

    _emit(doc, args.format, render)
    return 0


def cmd_burnside(args) -> int:
    G = build_group(args.group, cap=args.cap)
    tom = table_of_marks(G)
    doc = {
        "group": _group_doc(G),
        "labels": [tom.label(i) for i in range(tom.size)],
        "table_of_marks": [list(row) for row in tom.matrix],
        "ok": True,
    }
    verified = True
    if args.units:
        units = unit_group(tom)
        for u in units:
            if any(m not in (1, -1) for m in marks(u)):
                verified = False
        doc["units"] = [list(u.coeffs) for u in units]
        doc["unit_count"] = len(units)
        doc["ok"] = verified

    def render(d):
        print(f"Table of marks for {d['group']['name']}:")
        for label, row in zip(d["labels"], d["table_of_marks"]):
            print(f"  {label:>18} {row}")
        if "units" in d:
            print(f"unit group: {d['unit_count']} elements")
            for c in d["units"]:
                print(f"  {c}")

    _emit(doc, args.format, render)
    return 0 if doc["ok"] else 1


def cmd_biset(args) -> int:
    G = build_group(args.group, cap=args.cap)
    H = build_group(args.other, cap=args.cap)
    t = class_table(G, H)
    doc = {
        "groups": [_group_doc(G), _group_doc(H)],
        "class_count": len(t),
        "ok": True,
    }
    if args.classes or not args.tensor:
        doc["classes"] = [
            {
                "label": t.label(k),
                "order": t.reps[k].order,
                "normalizer_order": t.n_order[k],
                "cG": t.cG[k],
                "cH": t.cH[k],
            }
            for k in range(len(t))
        ]
    if args.tensor:
        i, j = args.tensor
        tHG = class_table(H, G)
        if not (0 <= i < len(t) and 0 <= j < len(tHG)):
            raise SpecParseError(
                f"tensor indices out of range: {i} of {len(t)}, {j} of {len(tHG)}"
            )
        a = biset_basis(t, i)
        b = biset_basis(tHG, j)
        prod = tensor(a, b)
        tGG = prod.table
        consistent = biset_marks(prod) == tuple(
            tensor_mark(a, b, k) for k in range(len(tGG))
        )
        doc["tensor"] = {
            "left": t.label(i),
            "right": tHG.label(j),
            "product": {
                tGG.label(k): prod.coeffs[k]
                for k in range(len(tGG))
                if prod.coeffs[k]
            },
            "mark_consistent": consistent,
        }
        doc["ok"] = consistent

    def render(d):
        print(f"B({d['groups'][0]['name']}, {d['groups'][1]['name']}): "
              f"{d['class_count']} twisted classes")
        for c in d.get("classes", []):
            print(f"  {c['label']}: order {c['order']}, |N| = {c['normalizer_order']}")
        if "tensor" in d:
            tn = d["tensor"]
            print(f"{tn['left']} . {tn['right']} = {tn['product']}")
            print(f"mark consistency: {tn['mark_consistent']}")

    _emit(doc, args.format, render)
    return 0 if doc["ok"] else 1


def cmd_units(args) -> int:
    G = build_group(args.group, cap=args.cap)
    H = build_group(args.other, cap=args.cap) if args.other else G
    if args.report:
        if args.other and args.other != args.group:
            raise SpecParseError("--report requires a single group")
        report = theorem_report(G)

        def render_report(d):
            print(f"theorem report for {d['group']['name']}: "
                  f"{'PASS' if d['ok'] else 'FAIL'}")
            for key, val in sorted(d["checks"].items()):
                flag = val["ok"] if isinstance(val, dict) else bool(val)
                print(f"  {key}: {'pass' if flag else 'FAIL'}")
            print(f"  orthogonal units: {d['orthogonal_unit_count']}, "
                  f"kernel of pi: {d['lambda_order']}")

        _emit(report, args.format, render_report)
        return 0 if report["ok"] else 1
    units = search_orthogonal(G, H)
    t = class_table(G, H)
    doc = {
        "groups": [_group_doc(G), _group_doc(H)],
        "unit_count": len(units),
        "units": [
            {
                "coefficients": list(u.element.coeffs),
                "certificate": [[k, s] for k, s in u.certificate],
                "uniform": u.uniform is not None,
                "principal": list(u.principal) if u.principal else None,
            }
            for u in units
        ],
        "labels": [t.label(k) for k in range(len(t))],
        "ok": True,
    }

    def render(d):
        print(f"orthogonal units of B({d['groups'][0]['name']}, "
              f"{d['groups'][1]['name']}): {d['unit_count']}")
        for u in d["units"]:
            tag = "uniform" if u["uniform"] else "non-uniform"
            print(f"  {u['coefficients']} ({tag})")

    _emit(doc, args.format, render)
    return 0


def _add_common_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # The flags are accepted both before and after the subcommand.  The
    # subcommand copies suppress their defaults so they never overwrite a
    # value already parsed by the top-level parser.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--cap", type=int, default=default(DEFAULT_ORDER_CAP),
                        help="maximum group order")
    parser.add_argument("--workers", type=int, default=default(1),
                        help="worker count (searches currently run sequentially)")
    parser.add_argument("--format", choices=("json", "text"),
                        default=default("json"))
    parser.add_argument("--seed", type=int, default=default(None),
                        help="randomization seed; all math output is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleburnside",
        description="Burnside rings, twisted diagonal class tables, and "
        "orthogonal unit groups of bifree double Burnside groups.",
    )
    _add_common_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-info", help="subgroup lattice and Out(G)")
    p.add_argument("group")
    p.set_defaults(func=cmd_group_info)

    q = sub.add_parser("burnside", help="table of marks and unit group")
    q.add_argument("group")
    q.add_argument("--units", action="store_true")
    q.set_defaults(func=cmd_burnside)

    r = sub.add_parser("biset", help="twisted class table and tensor products")
    r.add_argument("group")
    r.add_argument("other")
    r.add_argument("--classes", action="store_true")
    r.add_argument("--tensor", nargs=2, type=int, metavar=("I", "J"),
                   help="basis product: class I of B(G,H) times class J of B(H,G)")
    r.set_defaults(func=cmd_biset)

    s = sub.add_parser("units", help="orthogonal unit search and theorem report")
    s.add_argument("group")
    s.add_argument("other", nargs="?")
    s.add_argument("--report", action="store_true")
    s.set_defaults(func=cmd_units)

    for subparser in (p, q, r, s):
        _add_common_flags(subparser, suppress=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap < 1:
        parser.error("--cap must be at least 1")
    try:
        return args.func(args)
    except (SpecParseError, GroupOrderError) as exc:
        print(json.dumps({"error": str(exc), "ok": False}, sort_keys=True),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
