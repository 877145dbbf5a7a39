"""Command-line front end: ``skewpat count|enumerate|map|verify|render``.

Exit status is 0 on success, 1 on a domain error (bad shape, containment,
failed check) and 2 on a usage error.  Machine-readable output goes to
stdout, messages to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import bijections as bij
from . import counting as cnt
from . import enumeration as en
from . import rsk as rk
from . import verify
from .core import (
    ClassSpec,
    Partition,
    SkewpatError,
    SkewShape,
    SkewTableau,
    class_shape,
    contains_pattern,
    format_permutation,
    increasing,
    is_involution,
    normalize_shape,
    parse_partition,
    parse_permutation,
)

METHODS = ("auto", "oracle", "formula", "bijection", "all")


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


# -- count ----------------------------------------------------------------


def _subject(args) -> tuple[str, SkewShape, ClassSpec | None]:
    if args.shape:
        shape = SkewShape.parse(args.shape)
        return str(shape), shape, None
    c = ClassSpec.parse(args.cls)
    return f"class {c}", class_shape(c), c


def _formula(shape: SkewShape, c: ClassSpec | None, p) -> int | None:
    try:
        if c is not None:
            return cnt.class_formula(c, p)
        return cnt.shape_formula(shape, p)
    except SkewpatError:
        return None


def _bijection_count(shape: SkewShape, c: ClassSpec | None, p, limit: int) -> int | None:
    """Count by pushing every object of the target set through an inverse bijection."""
    p = tuple(p)
    if c is not None and p == increasing(c.k + 1):
        target = SkewShape(Partition([c.k] * c.n + [c.r]))
        return len({bij.rect_bijection_inverse(t, c) for t in en.all_syt(target, limit)})
    if c is not None and p == increasing(c.k + 2):
        target = Partition([c.k + 1] * (c.n - 1) + [c.k, c.r]) if c.r else Partition([c.k + 1] * c.n)
        return len({bij.k2_bijection_inverse(t, c) for t in en.all_syt(SkewShape(target), limit)})
    if p in bij.PATTERN_MAPS:
        basic = normalize_shape(shape) if not shape.is_basic() else shape
        if p in ((3, 1, 2), (2, 3, 1)) and basic.has_square():
            return 0
        inner = cnt.complement_inner(basic) if p in ((1, 3, 2), (2, 3, 1)) else basic.inner
        build = bij.PATTERN_MAPS[p][1]
        return len({build(basic, tau) for tau in en.subpartitions(inner)})
    return None


def cmd_count(args) -> int:
    subject, shape, c = _subject(args)
    p = parse_permutation(args.pattern)
    if not p:
        raise SkewpatError("pattern must be nonempty")
    limit = args.max_boxes
    wanted = ("formula", "oracle", "bijection") if args.method == "all" else (args.method,)
    if args.method == "auto":
        wanted = ("formula",) if _formula(shape, c, p) is not None else ("oracle",)
    if args.check and "oracle" not in wanted:
        wanted = wanted + ("oracle",)
    reports = []
    for method in wanted:
        notes = ()
        if method == "oracle":
            value = en.count_avoiders(shape, p, limit)
        elif method == "formula":
            value = _formula(shape, c, p)
            if len(p) == 3 and tuple(p) in cnt.EXPERIMENTAL and c is None:
                notes = ("experimental: certified against the oracle only",)
        else:
            value = _bijection_count(shape, c, p, en.max_boxes() if limit is None else limit)
        if value is None:
            if args.method == "all":
                continue
            raise SkewpatError(f"no {method} count available for pattern {format_permutation(p)} on {subject}")
        reports.append(en.CountReport(subject, p, value, method, notes))
    _emit_reports(reports, args.format)
    if args.check:
        values = {r.count for r in reports}
        if len(values) > 1:
            print(f"mismatch: {', '.join(f'{r.method}={r.count}' for r in reports)}", file=sys.stderr)
            return 1
    return 0


def _emit_reports(reports, fmt: str) -> None:
    if fmt == "json":
        data = [r.to_json() for r in reports]
        print(_dump(data[0] if len(data) == 1 else data))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["input", "pattern", "method", "count"])
        for r in reports:
            writer.writerow([r.subject, format_permutation(r.pattern), r.method, r.count])
        sys.stdout.write(buf.getvalue())
    else:
        rows = [("input", "pattern", "method", "count")]
        rows += [(r.subject, format_permutation(r.pattern), r.method, str(r.count)) for r in reports]
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for row in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


# -- enumerate ------------------------------------------------------------


def cmd_enumerate(args) -> int:
    _, shape, c = _subject(args)
    p = parse_permutation(args.avoid) if args.avoid else None
    items = []
    for t in en.all_syt(shape, args.max_boxes):
        w = t.reading_word()
        if p and len(w) >= len(p) and contains_pattern(w, p):
            continue
        if args.involutions and not is_involution(w):
            continue
        items.append(t)
    if args.format == "json":
        if args.tableaux:
            print(_dump([t.to_json() for t in items]))
        else:
            print(_dump([format_permutation(t.reading_word()) for t in items]))
    elif args.format == "csv":
        print("word")
        for t in items:
            print(format_permutation(t.reading_word()))
    else:
        for t in items:
            print(render_tableau(t) + "\n" if args.tableaux else format_permutation(t.reading_word()))
    return 0


# -- map ------------------------------------------------------------------


def _load_json(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SkewpatError(f"input is not valid JSON: {exc}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) in (None, "")]
    if missing:
        what = " ".join(filter(None, (args.command, getattr(args, "name", None))))
        raise UsageError(f"{what} needs " + ", ".join("--" + {"cls": "class"}.get(m, m) for m in missing))


class UsageError(Exception):
    pass


def _tableau_arg(args) -> SkewTableau:
    """A tableau from ``--input`` JSON, or from ``--shape`` plus its reading ``--word``."""
    if args.input:
        return SkewTableau.from_json(_load_json(args.input))
    if not args.shape and getattr(args, "cls", None):
        shape = class_shape(ClassSpec.parse(args.cls))
    else:
        _need(args, "shape")
        shape = SkewShape.parse(args.shape)
    _need(args, "word")
    return en.tableau_from_word(shape, parse_permutation(args.word))


def _word(args):
    _need(args, "word")
    return parse_permutation(args.word)


def _cls(args) -> ClassSpec:
    _need(args, "cls")
    return ClassSpec.parse(args.cls)


def _map_rsk(args, trace):
    if args.inverse:
        _need(args, "input")
        data = _load_json(args.input)
        w = rk.rsk_inverse(SkewTableau.from_json(data["P"]), SkewTableau.from_json(data["Q"]))
        return format_permutation(w)
    w = _word(args)
    p, q, paths = rk.insert_word(w)
    if trace is not None:
        for t, path in enumerate(paths, 1):
            trace.append({"step": t, "value": w[t - 1], "path": [list(b) for b in path]})
    return {"P": SkewTableau.straight(p).to_json(), "Q": SkewTableau.straight(q).to_json()}


def _map_mrsk(args, trace):
    c = _cls(args)
    if args.inverse:
        _need(args, "input")
        pair = rk.TableauPair.from_json(_load_json(args.input), c.k)
        return format_permutation(rk.modified_rsk_inverse(pair, c))
    return rk.modified_rsk(_word(args), c, trace).to_json()


def _map_doubly(args, trace):
    c = _cls(args)
    if args.inverse:
        return format_permutation(rk.doubly_map_inverse(_word(args), c))
    return format_permutation(rk.doubly_map(_word(args), c))


def _map_rect(args, trace):
    c = _cls(args)
    if args.inverse:
        return format_permutation(bij.rect_bijection_inverse(_tableau_arg(args), c))
    return bij.rect_bijection(_word(args), c).to_json()


def _map_good(args, trace):
    return bij.good_of_perm(_word(args), _cls(args)).to_json()


def _map_good_inv(args, trace):
    _need(args, "input")
    return format_permutation(bij.perm_of_good(bij.GoodTableau.from_json(_load_json(args.input))))


def _map_syt2good(args, trace):
    t = _tableau_arg(args)
    if args.cls:
        c = ClassSpec.parse(args.cls)
        return bij.syt_to_good(t, c.k, c.r).to_json()
    return bij.syt_to_good(t).to_json()


def _map_good2syt(args, trace):
    _need(args, "input")
    return bij.good_to_syt(bij.GoodTableau.from_json(_load_json(args.input))).to_json()


def _map_k2(args, trace):
    c = _cls(args)
    if args.inverse:
        return format_permutation(bij.k2_bijection_inverse(_tableau_arg(args), c))
    return bij.k2_bijection(_word(args), c).to_json()


def _pattern_map(pattern):
    fwd, back = bij.PATTERN_MAPS[pattern]

    def run(args, trace):
        if args.inverse:
            _need(args, "shape", "tau")
            shape = SkewShape.parse(args.shape)
            tau = parse_partition(args.tau)
            if pattern == (2, 1, 3):
                return back(shape, tau, trace).to_json()
            return back(shape, tau).to_json()
        t = _tableau_arg(args)
        if pattern == (2, 1, 3):
            return list(fwd(t, trace))
        return list(fwd(t))

    return run


def _map_p213_inv(args, trace):
    args.inverse = True
    return _pattern_map((2, 1, 3))(args, trace)


def _map_slide(args, trace):
    _need(args, "row")
    step = -1 if args.back else 1
    if args.input or args.word:
        t = _tableau_arg(args)
        return bij.transport(t, args.row, not args.above, step).to_json()
    _need(args, "shape")
    return bij.slide_move(SkewShape.parse(args.shape), args.row, not args.above, step).to_json()


MAPS = {
    "rsk": _map_rsk,
    "mrsk": _map_mrsk,
    "mrsk-odd": _map_mrsk,
    "doubly": _map_doubly,
    "rect": _map_rect,
    "good": _map_good,
    "good-inv": _map_good_inv,
    "syt2good": _map_syt2good,
    "good2syt": _map_good2syt,
    "k2": _map_k2,
    "p213": _pattern_map((2, 1, 3)),
    "p213-inv": _map_p213_inv,
    "p132": _pattern_map((1, 3, 2)),
    "p312": _pattern_map((3, 1, 2)),
    "p231": _pattern_map((2, 3, 1)),
    "slide": _map_slide,
}


def cmd_map(args) -> int:
    if args.name == "mrsk-odd" and args.cls and ClassSpec.parse(args.cls).r == 0:
        raise SkewpatError("mrsk-odd needs a class with r > 0")
    trace = [] if args.trace else None
    result = MAPS[args.name](args, trace)
    if trace is not None:
        for step in trace:
            print(_dump({"trace": step}))
        print(_dump({"result": result}))
    else:
        print(_dump(result))
    return 0


# -- verify ---------------------------------------------------------------


def _suite_job(job):
    name, max_boxes = job
    return name, [c.to_json() for c in verify.run_suite(name, max_boxes)]


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    max_boxes = args.max_boxes if args.max_boxes is not None else min(en.max_boxes(), 8)
    jobs = [(n, max_boxes) for n in names]
    workers = args.workers or os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            results = dict(pool.map(_suite_job, jobs))
    else:
        results = dict(map(_suite_job, jobs))
    checks = [c for n in names for c in results[n]]
    failed = [c for c in checks if c["failures"]]
    if args.format == "json":
        print(_dump({"max_boxes": max_boxes, "checks": checks, "ok": not failed}))
    else:
        for c in checks:
            status = "PASS" if not c["failures"] else "FAIL"
            extra = f"  first failure: {c['first_failure']}" if c.get("first_failure") else ""
            print(f"{status}  {c['name']:<28} {c['cases']:>8} cases  {c['seconds']:>7.2f}s{extra}")
    return 1 if failed else 0


# -- render ---------------------------------------------------------------


def render_tableau(t: SkewTableau) -> str:
    """English notation: first row on top, inner boxes shown as dots."""
    width = max((len(str(x)) for _, x in t.items()), default=1)
    lines = []
    for i in range(1, t.shape.num_rows + 1):
        cells = ["." * width] * t.shape.inner.part(i)
        cells += [str(x).rjust(width) for x in t.rows[i - 1]]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def render_shape(shape: SkewShape) -> str:
    lines = []
    for i in range(1, shape.num_rows + 1):
        lines.append(" ".join(["."] * shape.inner.part(i) + ["#"] * (shape.outer.part(i) - shape.inner.part(i))))
    return "\n".join(lines)


def cmd_render(args) -> int:
    if args.input or args.word:
        print(render_tableau(_tableau_arg(args)))
    elif args.shape:
        print(render_shape(SkewShape.parse(args.shape)))
    elif args.cls:
        print(render_shape(class_shape(ClassSpec.parse(args.cls))))
    else:
        raise UsageError("render needs --input, --shape or --class (each with optional --word)")
    return 0


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewpat",
        description="Pattern avoidance in reading words of skew tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def subject(p, required=True):
        group = p.add_mutually_exclusive_group(required=required)
        group.add_argument("--shape", help='skew shape, e.g. "3,2/2"')
        group.add_argument("--class", dest="cls", help='class, e.g. "n=2,k=2,r=0"')

    def bound(p):
        p.add_argument("--max-boxes", type=int, default=None,
                       help=f"enumeration bound (default ${en.ENV_MAX_BOXES} or {en.DEFAULT_MAX_BOXES})")

    p = sub.add_parser("count", help="count tableaux or class members avoiding a pattern")
    subject(p)
    p.add_argument("--pattern", required=True, help='e.g. "213" or "1,2,3,4"')
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--check", action="store_true", help="also run the oracle; exit 1 on disagreement")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    bound(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list reading words (or tableaux) of a shape or class")
    subject(p)
    p.add_argument("--avoid", help="keep only words avoiding this pattern")
    p.add_argument("--involutions", action="store_true")
    p.add_argument("--tableaux", action="store_true", help="emit tableaux instead of words")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    bound(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply one of the bijections")
    p.add_argument("name", choices=sorted(MAPS))
    p.add_argument("--word", help="permutation (one-line notation)")
    p.add_argument("--class", dest="cls")
    p.add_argument("--shape")
    p.add_argument("--tau", help="partition for the inverse pattern maps")
    p.add_argument("--input", help="JSON document, @file, or - for stdin")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--row", type=int, help="row for slide")
    p.add_argument("--above", action="store_true", help="slide only the rows above --row")
    p.add_argument("--back", action="store_true", help="slide left instead of right")
    p.add_argument("--trace", action="store_true", help="emit intermediate steps as JSON lines")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run the exhaustive invariant suites")
    p.add_argument("suite", nargs="?", default="all", help="all, " + ", ".join(verify.SUITES))
    p.add_argument("--workers", type=int, default=None, help="processes (default: CPU count)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    bound(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a tableau or shape in English notation")
    p.add_argument("--input")
    p.add_argument("--shape")
    p.add_argument("--word")
    p.add_argument("--class", dest="cls")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"skewpat: error: {exc}", file=sys.stderr)
        return 2
    except (SkewpatError, KeyError, TypeError, OSError) as exc:
        print(f"skewpat: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
