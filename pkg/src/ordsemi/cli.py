"""Command-line interface.

Subcommands: ``enumerate`` (ascending products), ``fiber`` (representatives
of a target), ``classes`` (Archimedean class-comparison matrix as CSV),
``series`` (generalized power series arithmetic), and ``verify`` (the lemma
verification suite).  Delimited output goes to stdout; ``--figures DIR``
additionally renders matplotlib figures next to it.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from ordsemi.archimedean import class_cmp
from ordsemi.products import (
    Budget,
    fiber,
    k_largest_sums,
    k_smallest_products,
    products_up_to,
)
from ordsemi.semigroups import InstanceError, RationalsGroup, instance_from_descriptor
from ordsemi.series import SeriesError, format_series, geometric_inverse, parse_series
from ordsemi.verify import verify_lemma_suite
from ordsemi.wosets import FiniteSorted, woset_from_descriptor

REL = {-1: "LT", 0: "EQ", 1: "GT"}


def _load_gens_descriptor(path: str) -> dict:
    return json.loads(Path(path).read_text())


def _budget(args) -> Budget:
    if args.budget is not None:
        return Budget(max_pulls=args.budget, max_expansions=args.budget)
    return Budget()


def _figures_dir(args):
    if not args.figures:
        return None
    out = Path(args.figures)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _emit_rows(rows: list[dict], fmt: str) -> None:
    if fmt == "jsonl":
        for row in rows:
            print(json.dumps(row))
    else:
        writer = csv.writer(sys.stdout)
        if rows:
            header = list(rows[0])
            writer.writerow(header)
            for row in rows:
                writer.writerow([
                    " ".join(v) if isinstance(v, list) else v for v in row.values()
                ])


def cmd_enumerate(args) -> int:
    instance = instance_from_descriptor(args.instance)
    descriptor = _load_gens_descriptor(args.gens)
    budget = _budget(args)

    if args.descending:
        group = instance.group_extension()
        if group is None:
            raise InstanceError(f"{instance.name} has no group extension; cannot descend")
        if descriptor.get("kind") != "finite":
            raise ValueError("descending enumeration needs a finite generator set")
        elements = [group.parse(text) for text in descriptor["elements"]]
        result = k_largest_sums(group, elements, args.k, budget)
        out_instance, A = group, None
    else:
        A = woset_from_descriptor(instance, descriptor)
        if args.up_to is not None:
            result = products_up_to(A, instance.parse(args.up_to), budget)
            result = type(result)(result.pairs[: args.k], result.truncated)
        else:
            result = k_smallest_products(A, args.k, budget)
        out_instance = instance

    rows = []
    sizes = []
    for value, witness in result.pairs:
        row = {
            "value": out_instance.format(value),
            "witness": [out_instance.format(x) for x in witness],
        }
        if args.fiber_sizes:
            if not isinstance(A, FiniteSorted):
                raise ValueError("--fiber-sizes needs a finite generator set")
            size = fiber(A, value).size
            sizes.append(size)
            row["fiber_size"] = size
        rows.append(row)
    _emit_rows(rows, args.format)
    print(f"{len(rows)} values, truncated={result.truncated}", file=sys.stderr)

    figures = _figures_dir(args)
    if figures is not None:
        from ordsemi import plots

        plots.save_enumeration_figure(
            out_instance, result.pairs, figures / "enumeration.png", result.truncated
        )
        if sizes:
            plots.save_fiber_sizes_figure(
                out_instance, result.values, sizes, figures / "fiber_sizes.png"
            )
    return 0


def cmd_fiber(args) -> int:
    instance = instance_from_descriptor(args.instance)
    A = woset_from_descriptor(instance, _load_gens_descriptor(args.gens))
    target = instance.parse(args.target)
    got = fiber(A, target, length_cap=args.length_cap)

    rows = [
        {"witness": [instance.format(x) for x in w], "length": len(w)}
        for w in got.witnesses
    ]
    _emit_rows(rows, args.format)
    summary = f"fiber of {instance.format(target)}: {got.size} representatives"
    if args.multiset:
        if not instance.is_commutative:
            raise ValueError("--multiset only makes sense for commutative instances")
        collapsed = {tuple(sorted(w, key=instance.sort_key)) for w in got.witnesses}
        summary += f", {len(collapsed)} up to reordering"
    print(summary, file=sys.stderr)
    return 0


def cmd_classes(args) -> int:
    instance = instance_from_descriptor(args.instance)
    if args.elements:
        # ";" separated so that vector literals like (0,1) survive
        elements = [instance.parse(text) for text in args.elements.split(";")]
    elif args.gens:
        descriptor = _load_gens_descriptor(args.gens)
        if descriptor.get("kind") != "finite":
            raise ValueError("the class matrix needs a finite element list")
        elements = [instance.parse(text) for text in descriptor["elements"]]
    else:
        raise ValueError("pass --elements or --gens")

    labels = [instance.format(a) for a in elements]
    writer = csv.writer(sys.stdout)
    writer.writerow([""] + labels)
    for a, label in zip(elements, labels):
        writer.writerow([label] + [REL[class_cmp(instance, a, b)] for b in elements])
    return 0


def cmd_series(args) -> int:
    group = RationalsGroup()
    bound = group.parse(args.bound) if args.bound is not None else None
    operands = [parse_series(text, group) for text in args.operands]

    if args.op == "mul":
        if len(operands) != 2:
            raise ValueError("series mul takes exactly two operands")
        result = operands[0].mul(operands[1], bound=bound)
    elif args.op == "add":
        if len(operands) != 2:
            raise ValueError("series add takes exactly two operands")
        result = operands[0].add(operands[1])
        if bound is not None:
            result = result.truncate(bound)
    else:  # inv
        if len(operands) != 1:
            raise ValueError("series inv takes exactly one operand")
        if bound is None:
            raise ValueError("series inv needs --bound")
        result = geometric_inverse(operands[0], bound)

    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["exponent", "coefficient"])
        for e, c in result.terms:
            writer.writerow([group.format(e), str(c)])
    else:
        print(format_series(result))
    if result.truncation is not None:
        print(f"truncated above {group.format(result.truncation)}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    instance = instance_from_descriptor(args.instance)
    descriptor = _load_gens_descriptor(args.gens)
    gens = woset_from_descriptor(instance, descriptor)
    report = verify_lemma_suite(
        instance,
        gens,
        k=args.k,
        max_len=args.max_len,
        trials=args.trials,
        seed=args.seed,
        generators_label=json.dumps(descriptor, sort_keys=True),
    )
    print(report.to_json() if args.format == "json" else report.to_text())

    figures = _figures_dir(args)
    if figures is not None:
        from ordsemi import plots

        plots.save_report_figure(report, figures / "checks.png")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordsemi",
        description="exact product enumeration in totally ordered semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="ascending products over a generator set")
    enum.add_argument("--instance", required=True, help="instance name or JSON descriptor")
    enum.add_argument("--gens", required=True, help="generator-set JSON file")
    enum.add_argument("--k", type=int, required=True, help="number of values to report")
    enum.add_argument("--up-to", help="enumerate only values <= this element")
    enum.add_argument("--budget", type=int, help="cap on pulls and frontier expansions")
    enum.add_argument("--fiber-sizes", action="store_true", help="report each value's fiber size")
    enum.add_argument("--descending", action="store_true", help="largest sums first (group instances)")
    enum.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    enum.add_argument("--figures", help="directory for rendered figures")
    enum.set_defaults(func=cmd_enumerate)

    fib = sub.add_parser("fiber", help="all string representatives of a target")
    fib.add_argument("--instance", required=True)
    fib.add_argument("--gens", required=True)
    fib.add_argument("--target", required=True)
    fib.add_argument("--length-cap", type=int, help="string length cap when no bound exists")
    fib.add_argument("--multiset", action="store_true", help="also count witnesses up to reordering")
    fib.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    fib.set_defaults(func=cmd_fiber)

    cls = sub.add_parser("classes", help="Archimedean class-comparison matrix (CSV)")
    cls.add_argument("--instance", required=True)
    cls.add_argument("--elements", help="semicolon-separated element list")
    cls.add_argument("--gens", help="finite generator-set JSON file")
    cls.set_defaults(func=cmd_classes)

    ser = sub.add_parser("series", help="generalized power series arithmetic")
    ser.add_argument("op", choices=["mul", "inv", "add"])
    ser.add_argument("operands", nargs="+", help="series literals like '1 + 2*x^(1/2)'")
    ser.add_argument("--bound", help="truncation bound (exponent)")
    ser.add_argument("--format", choices=["literal", "csv"], default="literal")
    ser.set_defaults(func=cmd_series)

    ver = sub.add_parser("verify", help="run the lemma verification suite")
    ver.add_argument("--instance", required=True)
    ver.add_argument("--gens", required=True)
    ver.add_argument("--k", type=int, default=25)
    ver.add_argument("--max-len", type=int, default=5)
    ver.add_argument("--trials", type=int, default=2000)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--format", choices=["json", "text"], default="text")
    ver.add_argument("--figures", help="directory for rendered figures")
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, SeriesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
