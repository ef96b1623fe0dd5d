"""Command-line surface: enumeration, classification, verdicts, reports.

All output is recomputed on every run and byte-identical across runs for
identical inputs.  Exit codes: 0 on success, 1 when the golden-table
crosscheck fails beyond its documented difference, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .signature import (PRESERVING, REVERSING, enumerate_quotient_signatures,
                        format_signature, orbifold_euler_characteristic)
from .classify import (classify, classify_all, class_record, max_order,
                       verify_class)
from .extend import bracket_text, decide_all
from .catalog import crosscheck


def _characters(args):
    if getattr(args, "preserving", False):
        return (PRESERVING,)
    if getattr(args, "reversing", False):
        return (REVERSING,)
    return (PRESERVING, REVERSING)


def _orders(args, genus):
    text = getattr(args, "order", None)
    if text is None:
        return list(range(2, 4 * genus + 4 + 1))
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _check_explicit_reversing(args, orders):
    # a single explicitly requested odd order deserves the explanation
    if getattr(args, "reversing", False) and len(orders) == 1 and orders[0] % 2:
        raise ValueError("orientation-reversing periodic maps have even order; "
                         "n=%d is odd" % orders[0])


def _emit(args, text):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_table(headers, rows):
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(str(cell)))
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(c).ljust(w)
                               for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(headers, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _render(args, headers, rows, records):
    fmt = getattr(args, "format", "table")
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(headers, rows)
    return _render_table(headers, rows)


def cmd_enumerate(args):
    rows, records = [], []
    orders = _orders(args, args.genus)
    _check_explicit_reversing(args, orders)
    for n in orders:
        for character in _characters(args):
            if character == REVERSING and n % 2 != 0:
                continue
            for sig in enumerate_quotient_signatures(args.genus, n, character):
                chi = orbifold_euler_characteristic(sig)
                rows.append([args.genus, n, character, format_signature(sig),
                             str(chi)])
                records.append({"genus": args.genus, "order": n,
                                "character": character,
                                "signature": format_signature(sig),
                                "orbifold_euler": str(chi)})
    _emit(args, _render(args, ["genus", "order", "character", "signature",
                               "chi_orb"], rows, records))
    return 0


def _collect_classes(args):
    if getattr(args, "order", None) is None and args.genus == 2:
        classes = classify_all(args.genus, args.mode)
        return [c for c in classes if c.character in _characters(args)]
    out = []
    orders = _orders(args, args.genus)
    _check_explicit_reversing(args, orders)
    for n in orders:
        for character in _characters(args):
            if character == REVERSING and n % 2 != 0:
                continue
            out.extend(classify(args.genus, n, character, args.mode))
    if args.genus == 2:
        from .catalog import attach_catalog_names
        out = attach_catalog_names(out)
    return out


def cmd_classify(args):
    classes = _collect_classes(args)
    rows = [[c.name or "-", c.order, c.character, format_signature(c.signature),
             str(c.epi), c.mode_provenance] for c in classes]
    records = [class_record(c) for c in classes]
    _emit(args, _render(args, ["name", "order", "character", "signature",
                               "epimorphism", "provenance"], rows, records))
    return 0


def cmd_extend(args):
    classes = classify_all(2, args.mode)
    if args.class_name:
        selected = [c for c in classes if c.name == args.class_name]
        if not selected:
            sys.stderr.write("unknown class %r\n" % args.class_name)
            return 2
    else:
        selected = classes
    verdicts = decide_all(classes, rules_only=args.rules_only)
    rows, records = [], []
    for c in selected:
        v = verdicts[id(c)]
        rows.append([c.name or "-", c.order, c.character,
                     bracket_text(v.summary),
                     "; ".join(v.evidence) or "-"])
        rec = {"name": c.name, **v.to_record()}
        records.append(rec)
    _emit(args, _render(args, ["name", "order", "character", "bracket",
                               "evidence"], rows, records))
    return 0


def cmd_max_order(args):
    results = []
    selector = None
    if args.preserving:
        selector = PRESERVING
    elif args.reversing:
        selector = REVERSING
    n, witnesses = max_order(args.genus, selector, args.mode)
    for w in witnesses:
        results.append(w)
    if args.genus == 2:
        from .catalog import attach_catalog_names
        results = attach_catalog_names(results)
    rows = [[args.genus, n, w.name or "-", format_signature(w.signature),
             w.character] for w in results]
    records = [{"genus": args.genus, "max_order": n,
                "witness": class_record(w)} for w in results]
    _emit(args, _render(args, ["genus", "max_order", "witness", "signature",
                               "character"], rows, records))
    return 0


def cmd_oracle(args):
    if args.class_name:
        classes = [c for c in classify_all(2, args.mode)
                   if c.name == args.class_name]
        if not classes:
            sys.stderr.write("unknown class %r\n" % args.class_name)
            return 2
    else:
        classes = _collect_classes(args)
    rows, records = [], []
    for c in classes:
        report = verify_class(c)
        fixed = ",".join("%d:%d" % (d, k)
                         for d, k in sorted(report["fixed_counts"].items()))
        rows.append([c.name or "-", c.order, format_signature(c.signature),
                     report["chi"], report["orientable"], report["connected"],
                     fixed or "-", ";".join(report["mismatches"]) or "-"])
        records.append({
            "name": c.name, "order": c.order,
            "signature": format_signature(c.signature),
            "chi": report["chi"], "orientable": report["orientable"],
            "connected": report["connected"],
            "fixed_counts": {str(d): k
                             for d, k in sorted(report["fixed_counts"].items())},
            "mismatches": report["mismatches"],
        })
    _emit(args, _render(args, ["name", "order", "signature", "chi",
                               "orientable", "connected", "fixed_counts",
                               "mismatches"], rows, records))
    return 0


def cmd_verify(args):
    classes = classify_all(2, args.mode)
    verdicts = decide_all(classes)
    report = crosscheck(classes, verdicts, mode=args.mode)
    record = report.to_record()
    _emit(args, json.dumps(record, indent=2) + "\n")
    return report.exit_code()


def cmd_reproduce(args):
    classes = classify_all(2, args.mode)
    verdicts = decide_all(classes)
    report = crosscheck(classes, verdicts, mode=args.mode)
    rows, records = [], []
    for c in classes:
        v = verdicts[id(c)]
        rows.append([c.name or "-", c.order,
                     "+" if c.character == PRESERVING else "-",
                     format_signature(c.signature), bracket_text(v.summary)])
        records.append({"name": c.name, "order": c.order,
                        "character": c.character,
                        "signature": format_signature(c.signature),
                        "bracket": bracket_text(v.summary)})
    summary = {
        "mode": args.mode,
        "classes": len(classes),
        "crosscheck": report.to_record(),
    }
    text = _render(args, ["name", "order", "character", "signature",
                          "bracket"], rows, records)
    if args.format == "json":
        text = json.dumps({"table": records, "summary": summary}, indent=2) + "\n"
    elif args.format == "table":
        lines = ["%d conjugacy classes of cyclic actions at genus 2 (%s mode)"
                 % (len(classes), args.mode), ""]
        text = "\n".join(lines) + text
        text += "\ncrosscheck: %d matched, %d missing in enumeration, " \
                "%d missing in catalog, %d verdict mismatches\n" % (
                    len(report.matched), len(report.missing_in_enumeration),
                    len(report.missing_in_catalog),
                    len(report.verdict_mismatches))
        for name, note in sorted(report.adjudications.items()):
            text += "  %s: %s\n" % (name, note)
    _emit(args, text)
    if args.figures_dir:
        from .figures import render_report_figures
        paths = render_report_figures(classes, verdicts, args.figures_dir)
        sys.stderr.write("".join("wrote %s\n" % p for p in paths))
    return report.exit_code()


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cycsurf",
        description="Exact classification of cyclic symmetries of closed "
                    "orientable surfaces and their extensions over the 3-sphere.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, genus_required=True, with_mode=True, with_order=True):
        if genus_required:
            p.add_argument("--genus", type=int, required=True)
        else:
            p.add_argument("--genus", type=int, default=2)
        if with_order:
            p.add_argument("--order", help="single order N or range A..B")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--preserving", action="store_true")
        group.add_argument("--reversing", action="store_true")
        group.add_argument("--both", action="store_true")
        if with_mode:
            p.add_argument("--mode", choices=("strict", "paper"),
                           default="strict")
        p.add_argument("--format", choices=("table", "json", "csv"),
                       default="table")
        p.add_argument("--out", help="write output to FILE instead of stdout")

    p = sub.add_parser("enumerate", help="admissible quotient signatures")
    common(p, with_mode=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="conjugacy classes of cyclic actions")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("extend", help="extension verdicts over the 3-sphere")
    p.add_argument("--class", dest="class_name", metavar="NAME")
    p.add_argument("--rules-only", action="store_true")
    p.add_argument("--mode", choices=("strict", "paper"), default="paper")
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("max-order", help="largest order with a nonempty table")
    common(p, with_order=False)
    p.set_defaults(func=cmd_max_order)

    p = sub.add_parser("oracle", help="explicit-cover verification reports")
    common(p, genus_required=False)
    p.add_argument("--class", dest="class_name", metavar="NAME")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="golden-table crosscheck (exit code contract)")
    p.add_argument("--mode", choices=("strict", "paper"), default="paper")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce-theorem-1.1",
                       help="full genus-2 pipeline: classes, brackets, crosscheck")
    p.add_argument("--mode", choices=("strict", "paper"), default="paper")
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.add_argument("--out")
    p.add_argument("--figures-dir", help="also render report figures to DIR")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
