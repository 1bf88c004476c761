"""Command-line entry point: ``findex <subcommand> ...``.

Exit codes: 0 success (or every verdict holds), 1 a claim fails,
2 usage error (unknown subcommand, family or claim), 3 malformed input
(graph6, catalog files), 4 parameter or range violation.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Iterable, Optional

from findex import catalog, families, transforms, verify
from findex.graph import GraphError
from findex.graph6 import Graph6Error, decode_graph6, encode_graph6
from findex.indices import f_index, first_zagreb

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_PARAM = 0, 1, 2, 3, 4

log = logging.getLogger("findex")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` or a single integer, inclusive."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise CliError(f"bad range {text!r}; expected a..b or a single integer", EXIT_USAGE)
    if a > b:
        raise CliError(f"empty range {text!r}", EXIT_PARAM)
    return a, b


def _read_graphs(args) -> list[str]:
    if args.graph:
        lines = list(args.graph)
    elif args.file:
        try:
            lines = Path(args.file).read_text().splitlines()
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc.strerror}", EXIT_INPUT)
    else:
        lines = sys.stdin.read().splitlines()
    return [ln.strip() for ln in lines if ln.strip() and ln.strip() != ">>graph6<<"]


def _decode(text: str):
    try:
        return decode_graph6(text)
    except Graph6Error as exc:
        raise CliError(f"malformed graph6 {text!r}: {exc}", EXIT_INPUT)


def _catalog(args, n: int):
    return catalog.get_catalog(n, Path(args.cache_dir) if args.cache_dir else None)


# ---------------------------------------------------------------- subcommands

def cmd_construct(args, out) -> int:
    s = families.parse_spec(args.family)
    g = families.build(s)
    out.write(encode_graph6(g) + "\n")
    d = families.discrepancy(s)
    if d is not None:
        log.warning("%s: closed form %s = %d, printed %s = %d",
                    s, d.derived_text, d.derived, d.printed_text, d.printed)
    return EXIT_OK


def cmd_index(args, out) -> int:
    graphs = [(text, _decode(text)) for text in _read_graphs(args)]
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["graph6", "n", "f_index", "m1"])
    for text, g in graphs:
        w.writerow([text, g.n, f_index(g), first_zagreb(g)])
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    c = _catalog(args, args.n)
    if args.girth is not None:
        members = catalog.members_with_girth(c, args.girth)
        c = catalog._make_catalog(args.n, [encode_graph6(g) for g in members])
    if args.out:
        catalog.save_catalog(c, Path(args.out))
    if args.print:
        for m in c.members:
            out.write(m.graph6 + "\n")
    girth = "all" if args.girth is None else args.girth
    out.write(f"n={args.n} girth={girth} count={len(c)}\n")
    return EXIT_OK


def cmd_rank(args, out) -> int:
    if args.top is not None and args.top < 1:
        raise CliError("--top must be positive", EXIT_PARAM)
    report = verify.rank_by_f(args.n, cat=_catalog(args, args.n))
    out.write(report.to_json(args.top) if args.format == "json" else report.to_csv(args.top))
    return EXIT_OK


def cmd_transform(args, out) -> int:
    g = _decode(args.graph)
    kind = transforms.parse_kind(args.kind)
    if args.site is None:
        for site in transforms.applicable_sites(g, kind):
            out.write(str(site) + "\n")
        return EXIT_OK
    o = transforms.apply(g, transforms.parse_site(args.site, kind))
    out.write(encode_graph6(o.result) + "\n")
    out.write(f"f_before={o.f_before} f_after={o.f_after} "
              f"predicted_delta={o.predicted_delta} measured_delta={o.measured_delta}\n")
    return EXIT_OK


def _write_reports(reports: list, target: Optional[str], single: bool) -> None:
    if not target:
        return
    path = Path(target)
    if single and path.suffix == ".json":
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(reports[0].to_json())
        return
    path.mkdir(parents=True, exist_ok=True)
    for r in reports:
        (path / f"{r.claim}.json").write_text(r.to_json())
    summary = {"claims": [{"claim": r.claim, "verdict": r.verdict.value,
                           "range": list(r.n_range), "counterexamples": len(r.counterexamples)}
                          for r in reports],
               "fails": [r.claim for r in reports if r.verdict is verify.Verdict.FAILS],
               "holds_with_noted_ties": [r.claim for r in reports
                                         if r.verdict is verify.Verdict.TIES]}
    (path / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")


def cmd_verify(args, out) -> int:
    ids = list(verify.CLAIMS) if args.claim == "all" else [args.claim]
    if args.claim != "all" and args.claim not in verify.CLAIMS:
        raise CliError(f"unknown claim {args.claim!r}; known: all, {', '.join(verify.CLAIMS)}",
                       EXIT_USAGE)
    rng = parse_range(args.n) if args.n else None
    reports = []
    for cid in ids:
        r = rng
        if r is not None and args.claim == "all":
            c = verify.CLAIMS[cid]
            r = (max(r[0], 3), min(r[1], c.n_max))
            if r[0] > r[1]:
                continue
        rep = verify.verify_claim(cid, r)
        reports.append(rep)
        lo, hi = rep.n_range
        out.write(f"{rep.claim:6s} n={lo}..{hi} {rep.verdict.value} checked={rep.checked} "
                  f"counterexamples={len(rep.counterexamples)}\n")
        for ce in rep.counterexamples[:3]:
            out.write(f"  counterexample: {ce.reason} {json.dumps(ce.params)}\n")
        for note in rep.notes:
            if note.kind not in ("tie", "next-classes"):
                out.write(f"  {note.kind}: {note.text}\n")
    _write_reports(reports, args.report, args.claim != "all")
    fails = [r.claim for r in reports if r.verdict is verify.Verdict.FAILS]
    ties = [r.claim for r in reports if r.verdict is verify.Verdict.TIES]
    out.write(f"summary: {len(reports)} claims, {len(fails)} fail"
              f"{' (' + ', '.join(fails) + ')' if fails else ''}, "
              f"{len(ties)} hold with noted ties{' (' + ', '.join(ties) + ')' if ties else ''}\n")
    return EXIT_FAIL if fails else EXIT_OK


def _pattern_members(tag: str, fixed: dict, n: int) -> Iterable[families.FamilySpec]:
    if tag in ("Path", "Star"):
        pool = [families.spec(tag, n)]
    else:
        pool = [s for s in families.candidates(n) if s.tag == tag]
    names = families.PARAMS[tag]
    for s in pool:
        if all(s.args[names.index(k)] == v for k, v in fixed.items() if k != "n"):
            yield s


def cmd_formulas(args, out) -> int:
    tag, fixed = families.parse_spec(args.family, partial=True)
    lo, hi = parse_range(args.n)
    if lo < 1 or hi > families.MAX_VERTICES:
        raise CliError(f"n range {lo}..{hi} outside 1..{families.MAX_VERTICES}", EXIT_PARAM)
    if "n" in fixed:
        lo, hi = max(lo, fixed["n"]), min(hi, fixed["n"])
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["family", "n", "graph6", "constructed_f", "closed_form_f", "printed_f", "flag"])
    for n in range(lo, hi + 1):
        for s in _pattern_members(tag, fixed, n):
            g = families.build(s)
            got, cf, printed = f_index(g), families.closed_form_f(s), families.printed_f(s)
            if got != cf:
                flag = "construction-mismatch"
            elif printed is not None and printed != cf:
                flag = "constant-discrepancy"
            else:
                flag = "ok"
            w.writerow([str(s), n, encode_graph6(g), got, cf,
                        "" if printed is None else printed, flag])
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="findex",
                                description="F-index workbench for unicyclic graphs.")
    p.add_argument("--cache-dir", help="persist catalogs as graph6 + CSV under this directory")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("construct", help="build a family member, print graph6")
    s.add_argument("--family", required=True, help=families.GRAMMAR)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("index", help="F and M1 for graph6 input")
    src = s.add_mutually_exclusive_group()
    src.add_argument("--graph", action="append", help="graph6 string (repeatable)")
    src.add_argument("--file", help="file of graph6 lines (default: stdin)")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("enumerate", help="all unicyclic graphs on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--girth", type=int)
    s.add_argument("--out", help="write graph6 file (plus .csv sidecar)")
    s.add_argument("--print", action="store_true", help="also print graph6 lines")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("rank", help="catalog ordered by F with tie classes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--top", type=int)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("transform", help="list sites or apply a transformation")
    s.add_argument("--kind", required=True, help="A..F or slide")
    s.add_argument("--graph", required=True, help="graph6 input")
    s.add_argument("--site", help="e.g. A:v=4,u=0 (kind prefix optional)")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("verify", help="check a lemma/theorem over a range of n")
    s.add_argument("--claim", required=True, help="claim id or 'all'")
    s.add_argument("--n", help="range a..b (default per claim)")
    s.add_argument("--report", help="JSON file (single claim) or directory")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("formulas", help="closed form vs constructed F")
    s.add_argument("--family", required=True, help="tag with optional fixed parameters")
    s.add_argument("--n", required=True, help="range a..b")
    s.set_defaults(func=cmd_formulas)
    return p


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out)
    except CliError as exc:
        code, msg = exc.code, str(exc)
    except families.UnknownFamilyError as exc:
        code, msg = EXIT_USAGE, str(exc)
    except families.FamilySyntaxError as exc:
        code, msg = EXIT_USAGE, str(exc)
    except Graph6Error as exc:
        code, msg = EXIT_INPUT, str(exc)
    except (families.FamilyError, transforms.TransformError, verify.VerifyError,
            catalog.CatalogError, GraphError) as exc:
        code, msg = EXIT_PARAM, str(exc)
    print(f"findex: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
