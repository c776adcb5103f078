"""Command-line front end: exact SL2(q) tables in four output formats.

Subcommands: classes, char-table, real-table, fs, fixed-points, verify.
Formats: text (symbolic cells plus an advisory decimal legend), json
(exact coefficient vectors, round-trippable), csv (long form, quoted),
latex (tabular in the classical layout).

Text and csv modes render cells in a small stable grammar:

    rational      "3", "-1/2"
    nu terms      "nu(r,s)"  = zeta_r^s + zeta_r^-s, with coefficient
                  as in "2*nu(14,3)", "-nu(6,1)"
    square roots  "(1+sqrt(5))/2", "-1+sqrt(-7)"  where the radicand
                  is eps*q = (-1)^((q-1)/2) * q

Exit codes: 0 success (verify: all checks passed), 1 usage error,
2 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .chars import complex_table, sym_latex, sym_str
from .fixdim import full_report
from .grp import DEFAULT_MAX_ENUM, representatives
from .realrep import fs_indicator_closed, fs_indicator_raw, real_table
from .verify import verify_all

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; reserve 2 for
    # verification failures and report usage problems as 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="sl2q",
        description="Exact conjugacy classes, character tables, "
                    "Frobenius-Schur indicators and fixed-point dimensions "
                    "for SL2(q), q an odd prime.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    specs = [
        ("classes", "conjugacy classes: label, representative, order, size"),
        ("char-table", "complex irreducible character table"),
        ("real-table", "real irreducible character table"),
        ("fs", "Frobenius-Schur indicators"),
        ("fixed-points", "fixed-point dimensions for cyclic subgroups"),
        ("verify", "run the brute-force verification suite"),
    ]
    for name, help_text in specs:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("q", type=int, help="an odd prime")
        p.add_argument("--format", dest="fmt", default="text",
                       choices=["text", "json", "csv", "latex"],
                       help="output format (default: text)")
        p.add_argument("--max-enum", dest="max_enum", type=int,
                       default=DEFAULT_MAX_ENUM,
                       help="largest q for which the group is enumerated "
                            f"(default: {DEFAULT_MAX_ENUM})")
    return parser


# ---------------------------------------------------------------------------
# shared renderers

_ADVISORY = "# decimal approximations are advisory; exact values live in json mode"


def _text_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(row) for row in rows)
    return "\n".join(lines)


def _csv_table(headers: list[str], rows: list[list], comment: str | None = None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(comment + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _latex_table(headers: list[str], rows: list[list[str]],
                 colspec: str | None = None) -> str:
    if colspec is None:
        colspec = "l" + "r" * (len(headers) - 1)
    lines = [f"\\begin{{tabular}}{{{colspec}}}", "\\hline"]
    lines.append(" & ".join(headers) + " \\\\")
    lines.append("\\hline")
    for row in rows:
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def _fmt_complex(z: complex) -> str:
    if abs(z.imag) < 1e-9:
        return f"{z.real:.6f}"
    return f"{z.real:.6f}{z.imag:+.6f}i"


def _class_latex(s: str) -> str:
    if "^" in s:
        base, _, exp = s.partition("^")
        return f"${base}^{{{exp}}}$"
    if s == "1":
        return "$1$"
    return f"${s}$"


def _char_latex(s: str) -> str:
    greek = {"psi": "\\psi", "chi": "\\chi", "theta": "\\theta",
             "xi": "\\xi", "eta": "\\eta"}
    if s == "1":
        return "$\\mathbf{1}$"
    for plain, tex in greek.items():
        if s == plain:
            return f"${tex}$"
        if s.startswith(plain + "_"):
            return f"${tex}_{{{s[len(plain) + 1:]}}}$"
        if s.startswith("2" + plain + "_"):
            return f"$2{tex}_{{{s[len(plain) + 2:]}}}$"
        if s.startswith("2Re(" + plain):
            inner = s[4:-1]
            return f"$2\\mathrm{{Re}}\\,{greek[plain]}_{{{inner.partition('_')[2]}}}$"
    return f"${s}$"


def _matrix_str(g) -> str:
    a, b, c, d = g.to_tuple()
    return f"[[{a},{b}],[{c},{d}]]"


def _matrix_latex(g) -> str:
    a, b, c, d = g.to_tuple()
    return (f"$\\left(\\begin{{smallmatrix}}{a}&{b}\\\\{c}&{d}"
            f"\\end{{smallmatrix}}\\right)$")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_classes(args) -> int:
    reps = representatives(args.q)
    if args.fmt == "json":
        print(json.dumps({
            "q": args.q,
            "classes": [{"label": str(c.label),
                         "representative": list(c.representative.to_tuple()),
                         "order": c.element_order,
                         "size": c.size} for c in reps],
        }, indent=2))
        return 0
    headers = ["label", "representative", "order", "size"]
    rows = [[str(c.label), _matrix_str(c.representative),
             str(c.element_order), str(c.size)] for c in reps]
    if args.fmt == "csv":
        print(_csv_table(headers, rows))
    elif args.fmt == "latex":
        tex_rows = [[_class_latex(str(c.label)), _matrix_latex(c.representative),
                     str(c.element_order), str(c.size)] for c in reps]
        print(_latex_table(headers, tex_rows))
    else:
        print(_text_table(headers, rows))
    return 0


def _render_char_grid(table, chars, fmt: str, char_tex) -> int:
    """Shared text/csv/latex rendering for both character tables."""
    labels = table.class_order
    if fmt == "csv":
        rows = []
        for ch in chars:
            for lab in labels:
                v = table.value(ch, lab).approx()
                rows.append([str(ch), str(lab),
                             sym_str(table.symbolic[(ch, lab)]),
                             f"{v.real:.9g}", f"{v.imag:.9g}"])
        print(_csv_table(["char", "class", "value", "approx_re", "approx_im"],
                         rows, comment=_ADVISORY))
        return 0
    if fmt == "latex":
        headers = [""] + [_class_latex(str(lab)) for lab in labels]
        rows = [[char_tex(str(ch))]
                + [f"${sym_latex(table.symbolic[(ch, lab)])}$" for lab in labels]
                for ch in chars]
        print(_latex_table(headers, rows))
        return 0
    headers = ["char"] + [str(lab) for lab in labels]
    rows = []
    legend = {}
    for ch in chars:
        cells = [str(ch)]
        for lab in labels:
            s = sym_str(table.symbolic[(ch, lab)])
            cells.append(s)
            if table.symbolic[(ch, lab)][0] != "rat" and s not in legend:
                legend[s] = table.value(ch, lab).approx()
        rows.append(cells)
    print(_text_table(headers, rows))
    if legend:
        print()
        print("decimal approximations (advisory):")
        for s, z in legend.items():
            print(f"  {s} = {_fmt_complex(z)}")
    return 0


def _cmd_char_table(args) -> int:
    ct = complex_table(args.q)
    if args.fmt == "json":
        print(json.dumps(ct.to_json(), indent=2))
        return 0
    return _render_char_grid(ct, ct.chars, args.fmt, _char_latex)


def _cmd_real_table(args) -> int:
    rt = real_table(args.q)
    if args.fmt == "json":
        print(json.dumps(rt.to_json(), indent=2))
        return 0
    return _render_char_grid(rt, rt.labels, args.fmt, _char_latex)


def _cmd_fs(args) -> int:
    ct = complex_table(args.q)
    within = args.q <= args.max_enum
    rows = []
    for ch in ct.chars:
        closed = fs_indicator_closed(ct, ch)
        brute = fs_indicator_raw(ct, ch, args.max_enum) if within else None
        rows.append((str(ch), closed, brute,
                     None if brute is None else closed == brute))
    if args.fmt == "json":
        print(json.dumps({
            "q": args.q,
            "indicators": [{"char": c, "closed": cl, "brute": br, "match": m}
                           for c, cl, br, m in rows],
        }, indent=2))
        return 0
    headers = ["char", "closed", "brute", "match"]
    disp = [[c, str(cl), "-" if br is None else str(br),
             "-" if m is None else str(m).lower()] for c, cl, br, m in rows]
    if args.fmt == "csv":
        print(_csv_table(headers, disp))
    elif args.fmt == "latex":
        tex = [[_char_latex(r[0])] + r[1:] for r in disp]
        print(_latex_table(headers, tex))
    else:
        print(_text_table(headers, disp))
        if not within:
            print(f"\n(q={args.q} exceeds the enumeration bound "
                  f"{args.max_enum}; brute column skipped, raise --max-enum "
                  f"to fill it)")
    return 0


def _cmd_fixed_points(args) -> int:
    report = full_report(args.q, args.max_enum)
    if args.fmt == "json":
        print(json.dumps(report.to_json(), indent=2))
        return 0
    headers = ["char"] + [str(k) for k in report.keys]
    rows = []
    mismatched = []
    for ch in report.chars:
        cells = [str(ch)]
        for k in report.keys:
            e = report.entry(ch, k)
            if e.match is False:
                cells.append(f"{e.closed}!={e.oracle}")
                mismatched.append((ch, k))
            else:
                cells.append(str(e.closed))
        rows.append(cells)
    if args.fmt == "csv":
        long_rows = [[str(ch), str(k), report.entry(ch, k).closed,
                      report.entry(ch, k).oracle, report.entry(ch, k).match]
                     for ch in report.chars for k in report.keys]
        print(_csv_table(["char", "subgroup", "closed", "oracle", "match"],
                         long_rows))
    elif args.fmt == "latex":
        tex_rows = [[_char_latex(r[0])] + r[1:] for r in rows]
        print(_latex_table(headers, tex_rows))
    else:
        print(_text_table(headers, rows))
        extras = []
        if args.q > args.max_enum:
            extras.append(f"oracle skipped: q={args.q} exceeds the "
                          f"enumeration bound {args.max_enum} "
                          f"(raise --max-enum to verify)")
        elif not mismatched:
            extras.append("every entry confirmed by character averaging")
        extras.extend(report.notes)
        if extras:
            print()
            for line in extras:
                print(f"note: {line}")
    return 0 if report.all_match else 2


def _cmd_verify(args) -> int:
    if args.q > args.max_enum:
        print(f"sl2q: error: q={args.q} exceeds the enumeration bound "
              f"{args.max_enum}; verification enumerates the whole group. "
              f"Raise it with --max-enum if you mean it "
              f"({args.q ** 3 - args.q} elements).", file=sys.stderr)
        return 1
    report = verify_all(args.q, args.max_enum)
    if args.fmt == "json":
        print(json.dumps(report.to_json(), indent=2))
    elif args.fmt == "csv":
        rows = [[c.name, str(c.passed).lower(), c.details]
                for c in report.checks]
        print(_csv_table(["check", "pass", "details"], rows))
    elif args.fmt == "latex":
        rows = [[c.name.replace("_", "\\_"),
                 "PASS" if c.passed else "FAIL"] for c in report.checks]
        print(_latex_table(["check", "status"], rows))
    else:
        print(report.to_text())
    return 0 if report.overall else 2


_DISPATCH = {
    "classes": _cmd_classes,
    "char-table": _cmd_char_table,
    "real-table": _cmd_real_table,
    "fs": _cmd_fs,
    "fixed-points": _cmd_fixed_points,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"sl2q: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
