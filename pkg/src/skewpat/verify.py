"""Exhaustive invariant suites, one per module, run by ``skewpat verify``.

Each suite returns a list of :class:`Check` results and never raises for a
failed property; exceptions inside a check are recorded as failures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import bijections as bij
from . import counting as cnt
from . import enumeration as en
from . import rsk as rk
from .core import (
    ClassSpec,
    Partition,
    SkewpatError,
    SkewShape,
    class_shape,
    contains_pattern,
    increasing,
    inverse,
    is_involution,
    is_member,
    lis_length,
    normalize_shape,
    reverse,
    reverse_complement,
)


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def fail(self, detail: str) -> None:
        self.failures += 1
        if not self.first_failure:
            self.first_failure = detail

    def to_json(self) -> dict:
        out = {"name": self.name, "cases": self.cases, "failures": self.failures,
               "seconds": round(self.seconds, 3)}
        if self.first_failure:
            out["first_failure"] = self.first_failure
        return out


def _run(name: str, body: Callable[[Check], None]) -> Check:
    check = Check(name)
    start = time.perf_counter()
    try:
        body(check)
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        check.fail(f"{type(exc).__name__}: {exc}")
    check.seconds = time.perf_counter() - start
    return check


def classes_up_to(size: int, r_positive: bool = True):
    for k in range(1, size + 1):
        for n in range(1, size // k + 1):
            for r in range(0, k if r_positive else 1):
                if n * k + r <= size:
                    yield ClassSpec(n, k, r)


# -- core -----------------------------------------------------------------


def suite_core(max_boxes: int) -> list[Check]:
    small = min(max_boxes, 6)

    def membership(check):
        for c in classes_up_to(min(max_boxes, 7)):
            check.cases += 1
            if set(en.filter_class(c)) != set(en.all_class(c)):
                check.fail(f"class {c}: membership filter differs from the reading words of {class_shape(c)}")

    def normalizing(check):
        for size in range(small + 1):
            for shape in en.skew_shapes(size, 4, 4):
                check.cases += 1
                norm = normalize_shape(shape)
                if not norm.is_basic() or set(en.reading_words(norm)) != set(en.reading_words(shape)):
                    check.fail(f"{shape} -> {norm}")

    def symmetries(check):
        for size in range(small + 1):
            for shape in en.basic_shapes(size):
                for t in en.all_syt(shape):
                    check.cases += 1
                    w = t.reading_word()
                    if t.rotate_complement().reading_word() != reverse_complement(w):
                        check.fail(f"rotate_complement on {t.rows}")
                    if t.rotate_complement().rotate_complement() != t:
                        check.fail(f"rotate_complement not an involution on {t.rows}")
                    if not shape.has_square() and t.conjugate().reading_word() != reverse(w):
                        check.fail(f"conjugate on ribbon {t.rows}")

    return [_run("core.membership", membership), _run("core.normalize", normalizing),
            _run("core.symmetries", symmetries)]


# -- enumeration ----------------------------------------------------------


def suite_enumeration(max_boxes: int) -> list[Check]:
    def syt_counts(check):
        for size in range(max_boxes + 1):
            for shape in en.basic_shapes(size):
                check.cases += 1
                if en.count_syt(shape, max_boxes) != cnt.skew_count(shape):
                    check.fail(str(shape))

    def distinct(check):
        for size in range(min(max_boxes, 6) + 1):
            for shape in en.basic_shapes(size):
                check.cases += 1
                words = list(en.reading_words(shape))
                if len(set(words)) != len(words) or len(words) != cnt.skew_count(shape):
                    check.fail(str(shape))

    return [_run("enumeration.syt_counts", syt_counts), _run("enumeration.distinct", distinct)]


# -- counting -------------------------------------------------------------


def suite_counting(max_boxes: int) -> list[Check]:
    def alternating(check):
        for n in range(1, max_boxes // 2 + 1):
            check.cases += 1
            c = ClassSpec(n, 2, 0)
            values = {cnt.count_A2n_1234(n), cnt.hook_count([3] * n), en.count_class_avoiders(c, (1, 2, 3, 4), max_boxes)}
            if len(values) != 1:
                check.fail(f"even n={n}: {values}")
            if c.length <= 10 and en.count_class_avoiders(c, (1, 2, 3), max_boxes) != cnt.catalan(n):
                check.fail(f"123 n={n}")
        for n in range(1, (max_boxes - 1) // 2 + 1):
            check.cases += 1
            c = ClassSpec(n, 2, 1)
            if cnt.count_A2n1_1234(n) != en.count_class_avoiders(c, (1, 2, 3, 4), max_boxes):
                check.fail(f"odd n={n}")

    def monotone(check):
        for c in classes_up_to(max_boxes):
            for m in (c.k + 1, c.k + 2):
                check.cases += 1
                if cnt.count_class_monotone(c, m) != en.count_class_avoiders(c, increasing(m), max_boxes):
                    check.fail(f"{c} avoiding 1..{m}")

    def shape_formulas(check):
        pats = list(cnt.SHAPE_FORMULAS)
        for size in range(max_boxes + 1):
            for shape in en.basic_shapes(size):
                check.cases += 1
                _, oracle = en.count_avoiders_many(shape, pats, max_boxes)
                for p, o in zip(pats, oracle):
                    if cnt.SHAPE_FORMULAS[p](shape) != o:
                        check.fail(f"{shape} pattern {p}: oracle {o}")

    def slides(check):
        for size in range(max_boxes + 1):
            for shape in en.basic_shapes(size):
                lengths = shape.row_lengths()
                if any(x > 2 for x in lengths):
                    continue
                base = en.count_avoiders(shape, (1, 2, 3), max_boxes)
                for i in range(1, shape.num_rows + 1):
                    if lengths[i - 1] != 2:
                        continue
                    for through in (True, False):
                        check.cases += 1
                        moved = bij.slide_move(shape, i, through)
                        if en.count_avoiders(moved, (1, 2, 3), max_boxes) != base:
                            check.fail(f"{shape} row {i} through={through}")

    return [_run("counting.alternating", alternating), _run("counting.monotone", monotone),
            _run("counting.shape_formulas", shape_formulas), _run("counting.slides", slides)]


# -- rsk ------------------------------------------------------------------


def suite_rsk(max_boxes: int) -> list[Check]:
    def lis(check):
        for n in range(min(max_boxes, 7) + 1):
            for w in permutations(range(1, n + 1)):
                check.cases += 1
                p, q = rk.rsk(w)
                if p.shape.outer.part(1) != lis_length(w):
                    check.fail(f"{w}")

    def symmetry(check):
        for n in range(min(max_boxes, 6) + 1):
            for w in permutations(range(1, n + 1)):
                check.cases += 1
                p, q = rk.rsk(w)
                if rk.rsk(inverse(w)) != (q, p) or rk.rsk_inverse(p, q) != w:
                    check.fail(f"{w}")

    def bumping(check):
        for n in range(min(max_boxes, 6) + 1):
            for w in permutations(range(1, n + 1)):
                _, _, paths = rk.insert_word(w)
                for t in range(n - 1):
                    if w[t] < w[t + 1]:
                        check.cases += 1
                        if not rk.paths_dominate(paths[t], paths[t + 1]):
                            check.fail(f"{w} at {t + 1}")

    def modified(check):
        for c in classes_up_to(max_boxes):
            target = cnt.count_class_monotone(c, c.k + 2)
            images = set()
            for w in en.all_class(c, max_boxes):
                if contains_pattern(w, increasing(c.k + 2)):
                    continue
                check.cases += 1
                pair = rk.modified_rsk(w, c)
                images.add((pair.P, pair.R))
                if rk.modified_rsk_inverse(pair, c) != w:
                    check.fail(f"{c} {w}")
            if len(images) != target:
                check.fail(f"{c}: {len(images)} images, expected {target}")

    def doubly(check):
        for c in classes_up_to(max_boxes, r_positive=False):
            k, n = c.k, c.n
            pattern = increasing(k + 2)
            images, inv_images, inv_count = set(), set(), 0
            for w in en.all_class(c, max_boxes):
                if contains_pattern(w, pattern) or not is_member(inverse(w), c):
                    continue
                check.cases += 1
                v = rk.doubly_map(w, c)
                images.add(v)
                if rk.doubly_map_inverse(v, c) != w:
                    check.fail(f"{c} {w}")
                if is_involution(w):
                    inv_count += 1
                    inv_images.add(v)
                    if not is_involution(v):
                        check.fail(f"{c} involution {w} -> {v}")
            avoiders = [v for v in permutations(range(1, n + 1)) if not contains_pattern(v, pattern)]
            if len(images) != len(avoiders):
                check.fail(f"{c}: {len(images)} vs {len(avoiders)}")
            if inv_count != sum(1 for v in avoiders if is_involution(v)) or len(inv_images) != inv_count:
                check.fail(f"{c}: involution counts differ")

    return [_run("rsk.lis", lis), _run("rsk.inverse_symmetry", symmetry), _run("rsk.bumping", bumping),
            _run("rsk.modified", modified), _run("rsk.doubly", doubly)]


# -- bijections -----------------------------------------------------------


def suite_bijections(max_boxes: int) -> list[Check]:
    def rect(check):
        for c in classes_up_to(max_boxes):
            shape = SkewShape(Partition([c.k] * c.n + [c.r]))
            for t in en.all_syt(shape, max_boxes):
                check.cases += 1
                w = bij.rect_bijection_inverse(t, c)
                if not is_member(w, c) or bij.rect_bijection(w, c) != t:
                    check.fail(f"{c} {t.rows}")

    def good(check):
        for c in classes_up_to(max_boxes):
            images = set()
            for w in en.all_class(c, max_boxes):
                if contains_pattern(w, increasing(c.k + 2)):
                    continue
                check.cases += 1
                g = bij.good_of_perm(w, c)
                if g.violations() or bij.perm_of_good(g) != w:
                    check.fail(f"{c} {w}")
                t = bij.good_to_syt(g)
                images.add(t)
                if bij.syt_to_good(t, c.k, c.r) != g or bij.k2_bijection_inverse(t, c) != w:
                    check.fail(f"{c} {w} via {t.rows}")
            if len(images) != cnt.count_class_monotone(c, c.k + 2):
                check.fail(f"{c}: image count {len(images)}")

    def family(check):
        for size in range(max_boxes + 1):
            for shape in en.basic_shapes(size):
                ribbon = not shape.has_square()
                _, oracle = en.count_avoiders_many(shape, list(bij.PATTERN_MAPS), max_boxes)
                for (p, (fwd, back)), o in zip(bij.PATTERN_MAPS.items(), oracle):
                    if p in ((3, 1, 2), (2, 3, 1)) and not ribbon:
                        continue
                    inner = cnt.complement_inner(shape) if p in ((1, 3, 2), (2, 3, 1)) else shape.inner
                    built = set()
                    for tau in en.subpartitions(inner):
                        check.cases += 1
                        t = back(shape, tau)
                        built.add(t)
                        if fwd(t) != tau:
                            check.fail(f"{p} {shape} {tau}")
                    if len(built) != o:
                        check.fail(f"{p} {shape}: built {len(built)} tableaux, oracle {o}")

    return [_run("bijections.rect", rect), _run("bijections.good", good),
            _run("bijections.pattern_maps", family)]


SUITES = {
    "core": suite_core,
    "enumeration": suite_enumeration,
    "counting": suite_counting,
    "rsk": suite_rsk,
    "bijections": suite_bijections,
}


def run_suite(name: str, max_boxes: int) -> list[Check]:
    if name not in SUITES:
        raise SkewpatError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name](max_boxes)
