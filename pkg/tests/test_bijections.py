import pytest
from hypothesis import given, settings, strategies as st

from skewpat import bijections as bij
from skewpat import counting as cnt
from skewpat import enumeration as en
from skewpat.core import (
    ClassSpec,
    ContainmentError,
    Partition,
    SkewpatError,
    SkewShape,
    SkewTableau,
    contains_pattern,
    increasing,
)

S = SkewShape.parse
WORD = (4, 8, 3, 5, 1, 7, 2, 6)


class TestRectangle:
    @pytest.mark.parametrize("word, c, rows", [
        ((4, 8, 9, 2, 6, 7, 1, 3, 5), ClassSpec(3, 3, 0), [[1, 3, 5], [2, 6, 7], [4, 8, 9]]),
        ((6, 8, 4, 7, 2, 5, 1, 3), ClassSpec(4, 2, 0), [[1, 3], [2, 5], [4, 7], [6, 8]]),
    ])
    def test_examples(self, word, c, rows):
        t = bij.rect_bijection(word, c)
        assert t == SkewTableau.straight(rows)
        assert bij.rect_bijection_inverse(t, c) == word

    def test_rejects_increasing_run(self):
        with pytest.raises(ContainmentError):
            bij.rect_bijection(WORD, ClassSpec(4, 2, 0))

    def test_catalan_image(self):
        # the alternating case lands on two-row rectangles, counted by Catalan numbers
        c = ClassSpec(4, 2, 0)
        images = {bij.rect_bijection(w, c) for w in en.all_class(c) if not contains_pattern(w, (1, 2, 3))}
        assert len(images) == cnt.catalan(4)


class TestGood:
    def test_example(self):
        c = ClassSpec(4, 2, 0)
        g = bij.good_of_perm(WORD, c)
        assert g.rows == ((1, 2, 6), (1, 4, 5), (1, 3, 5), (1, 2, 3))
        assert g.violations() == []
        assert bij.perm_of_good(g) == WORD
        assert bij.GoodTableau.from_json(g.to_json()) == g

    def test_syt_conversion(self):
        g = bij.good_of_perm(WORD, ClassSpec(4, 2, 0))
        t = bij.good_to_syt(g)
        assert t.rows == ((1, 2, 6), (3, 7, 8), (4, 9, 11), (5, 10, 12))
        assert bij.syt_to_good(t) == g
        assert bij.k2_bijection(WORD, ClassSpec(4, 2, 0)) == t
        assert bij.k2_bijection_inverse(t, ClassSpec(4, 2, 0)) == WORD

    def test_violations_are_reported(self):
        bad = bij.GoodTableau(((1, 2, 9), (1, 4, 5), (1, 3, 5), (1, 2, 3)), 2, 0)
        assert bad.violations()
        with pytest.raises(SkewpatError):
            bad.check()

    @pytest.mark.parametrize("n, k, r", [(3, 2, 0), (2, 3, 0), (2, 2, 1), (3, 2, 1), (2, 4, 1), (2, 3, 2)])
    def test_exhaustive_round_trip(self, n, k, r):
        c = ClassSpec(n, k, r)
        images = set()
        for w in en.all_class(c, 9):
            if contains_pattern(w, increasing(k + 2)):
                continue
            g = bij.good_of_perm(w, c)
            assert not g.violations()
            assert bij.perm_of_good(g) == w
            t = bij.good_to_syt(g)
            assert bij.syt_to_good(t, k, r) == g
            images.add(t)
        assert len(images) == cnt.count_class_monotone(c, k + 2)


class TestPatternMaps:
    def test_213_family_on_small_shape(self):
        shape = S("3,2/2")
        words = {tuple(tau): bij.build_213(shape, Partition(tau)).reading_word() for tau in [(), (1,), (2,)]}
        assert words == {(): (2, 3, 1), (1,): (1, 3, 2), (2,): (1, 2, 3)}
        t = bij.build_213(shape, Partition([1]))
        assert t.rows == ((2,), (1, 3))
        assert bij.map_213(t) == (1,)

    def test_derived_maps(self):
        shape = S("3,2/2")
        assert bij.build_132(shape, Partition()).rows == ((1,), (2, 3))
        assert bij.build_312(shape, Partition([1])).rows == ((2,), (1, 3))
        assert bij.build_231(shape, Partition()).rows == ((3,), (1, 2))

    def test_map_rejects_containing_tableau(self):
        t = en.tableau_from_word(S("2,1"), (2, 1, 3))
        with pytest.raises(ContainmentError):
            bij.map_213(t)

    def test_ribbon_only_maps(self):
        with pytest.raises(SkewpatError):
            bij.build_312(S("2,2"), Partition())

    def test_trace(self):
        trace = []
        bij.build_213(S("4,3,2/2,1"), Partition([1, 1]), trace=trace)
        assert trace and all(isinstance(step, dict) for step in trace)

    @pytest.mark.parametrize("pattern", list(bij.PATTERN_MAPS))
    def test_round_trips_up_to_six(self, pattern):
        forward, back = bij.PATTERN_MAPS[pattern]
        for size in range(7):
            for shape in en.basic_shapes(size):
                if pattern in ((3, 1, 2), (2, 3, 1)) and shape.has_square():
                    continue
                inner = cnt.complement_inner(shape) if pattern in ((1, 3, 2), (2, 3, 1)) else shape.inner
                built = set()
                for tau in en.subpartitions(inner):
                    t = back(shape, tau)
                    assert not contains_pattern(t.reading_word(), pattern)
                    assert forward(t) == tau
                    built.add(t)
                assert len(built) == en.count_avoiders(shape, pattern)


class TestSlides:
    def test_transport_keeps_rows(self):
        t = en.tableau_from_word(S("2,2,1"), (5, 3, 4, 1, 2))
        moved = bij.transport(t, 2)
        assert str(moved.shape) == "3,3,1/1,1"
        assert moved.rows == t.rows
        assert str(bij.slide_move(S("2,2,1"), 2, True)) == "3,3,1/1,1"

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 6), st.data())
    def test_slides_preserve_123_avoiders(self, size, data):
        shapes = [s for s in en.basic_shapes(size) if max(s.row_lengths(), default=0) <= 2 and 2 in s.row_lengths()]
        if not shapes:
            return
        shape = data.draw(st.sampled_from(shapes))
        rows = [i for i, x in enumerate(shape.row_lengths(), 1) if x == 2]
        i = data.draw(st.sampled_from(rows))
        through = data.draw(st.booleans())
        moved = bij.slide_move(shape, i, through)
        before = {t.rows for t in en.all_syt(shape) if not contains_pattern(t.reading_word(), (1, 2, 3))}
        after = {t.rows for t in en.all_syt(moved) if not contains_pattern(t.reading_word(), (1, 2, 3))}
        assert before == after
