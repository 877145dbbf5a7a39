from itertools import permutations

import pytest

from skewpat import enumeration as en
from skewpat.core import ClassSpec, SkewShape, class_shape, contains_pattern, inverse, is_involution, is_member
from skewpat.counting import skew_count


def test_reading_words_of_small_shape():
    assert list(en.reading_words(SkewShape.parse("2,1"))) == [(2, 1, 3), (3, 1, 2)]


def test_all_syt_is_deterministic():
    shape = SkewShape.parse("3,2/1")
    first = [t.rows for t in en.all_syt(shape)]
    assert first == [t.rows for t in en.all_syt(shape)]
    assert len(first) == len(set(first)) == 5


def test_alternating_class_sizes():
    # up-down permutations of length 2, 4, 6 and the odd length 3, 5
    assert [sum(1 for _ in en.all_class(ClassSpec(n, 2, 0))) for n in (1, 2, 3)] == [1, 5, 61]
    assert [sum(1 for _ in en.all_class(ClassSpec(n, 2, 1))) for n in (1, 2)] == [2, 16]


@pytest.mark.parametrize("c", [ClassSpec(3, 2, 0), ClassSpec(2, 3, 1), ClassSpec(1, 3, 2)])
def test_filter_matches_shape_words(c):
    assert set(en.filter_class(c)) == set(en.all_class(c))


def test_limit_is_enforced():
    with pytest.raises(en.EnumerationLimitError):
        list(en.all_syt(SkewShape.parse("5,4"), limit=8))


def test_env_var_sets_limit(monkeypatch):
    monkeypatch.setenv("SKEWPAT_MAX_BOXES", "3")
    assert en.max_boxes() == 3
    with pytest.raises(en.EnumerationLimitError):
        en.count_syt(SkewShape.parse("2,2"))
    monkeypatch.setenv("SKEWPAT_MAX_BOXES", "many")
    with pytest.raises(en.SkewpatError):
        en.max_boxes()


def test_counts_against_hook_recursion():
    for size in range(7):
        for shape in en.basic_shapes(size):
            assert en.count_syt(shape) == skew_count(shape)


def test_avoider_counts():
    shape = SkewShape.parse("3,3,2")
    assert en.count_avoiders_many(shape, [(1, 2, 3), (3, 2, 1), (2, 1, 3)], 8) == (42, [0, 0, 1])
    assert en.count_avoiders(SkewShape.parse("3,2/2"), (2, 1, 3)) == 3
    assert en.count_class_avoiders(ClassSpec(3, 2, 0), (1, 2, 3, 4)) == 42


def test_avoiders_agree_with_direct_filter():
    shape = SkewShape.parse("3,3,1/1")
    words = list(en.reading_words(shape))
    for p in permutations(range(1, 4)):
        assert en.count_avoiders(shape, p) == sum(not contains_pattern(w, p) for w in words)


def test_subpartitions_and_partitions():
    assert list(en.subpartitions([2, 1])) == [(), (1,), (1, 1), (2,), (2, 1)]
    assert list(en.partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_involutions():
    assert list(en.involutions_in(en.all_permutations(3))) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    assert all(is_involution(w) for w in en.involutions_in(en.all_permutations(5)))


def test_class_words_are_members():
    c = ClassSpec(2, 2, 1)
    assert all(is_member(w, c) for w in en.reading_words(class_shape(c)))


def test_count_report_json():
    report = en.CountReport("3,2/1", (1, 2, 3), 2, "oracle")
    assert report.to_json() == {"input": "3,2/1", "pattern": "123", "method": "oracle", "count": 2}


def test_all_syt_order_is_by_box_of_each_value():
    # value 1 in the earliest possible box, then value 2, and so on
    for size in range(7):
        for shape in en.basic_shapes(size):
            keys = [inverse(t.reading_word()) for t in en.all_syt(shape)]
            assert keys == sorted(keys)
