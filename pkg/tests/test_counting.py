import pytest
from hypothesis import given, settings, strategies as st

from skewpat import counting as cnt
from skewpat import enumeration as en
from skewpat.core import ClassSpec, NotBasicError, SkewpatError, SkewShape, increasing

S = SkewShape.parse


def test_hook_and_rectangle():
    assert cnt.hook_count([3, 3]) == 5
    assert cnt.hook_count([4, 2, 1]) == 35
    assert [cnt.rectangle_count(n, k) for n, k in [(2, 2), (3, 3), (2, 4), (4, 2)]] == [2, 42, 14, 14]


@given(st.integers(1, 5), st.integers(1, 5))
def test_rectangle_matches_hooks(n, k):
    assert cnt.rectangle_count(n, k) == cnt.hook_count([k] * n)


def test_skew_count():
    assert cnt.skew_count(S("3,3,2")) == 42
    assert cnt.skew_count(S("4,3,2/2,1")) == 61
    assert cnt.skew_count(S("3/3")) == 1


def test_catalan_and_alternating():
    assert [cnt.catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert [cnt.count_A2n_1234(n) for n in range(5)] == [1, 1, 5, 42, 462]
    assert [cnt.count_A2n1_1234(n) for n in (1, 2, 3)] == [2, 16, 168]
    with pytest.raises(SkewpatError):
        cnt.count_A2n1_1234(0)


def test_subpartitions():
    assert cnt.count_subpartitions([]) == 1
    assert cnt.count_subpartitions([2, 1]) == 5
    # partitions inside the staircase are counted by Catalan numbers
    assert cnt.count_subpartitions([3, 2, 1]) == 14
    assert cnt.count_subpartitions([4, 3, 2, 1]) == 42


@given(st.lists(st.integers(0, 4), max_size=4).map(lambda xs: sorted(xs, reverse=True)))
def test_subpartitions_match_generator(mu):
    assert cnt.count_subpartitions(mu) == sum(1 for _ in en.subpartitions(mu))


def test_complement_inner():
    assert cnt.complement_inner(S("4,2,1")) == (3, 2)
    assert cnt.complement_inner(S("3,3/1")) == ()


# frozen: formula and oracle agree, values in the order 213, 132, 312, 231, 123, 321
@pytest.mark.parametrize("text, counts", [
    ("3,2/2", [3, 2, 3, 2, 2, 3]),
    ("4,3,2/2,1", [5, 5, 5, 5, 5, 14]),
    ("3,3/1", [2, 1, 0, 0, 0, 5]),
    ("2,2,1/1", [2, 2, 2, 2, 5, 2]),
    ("3,2,1/1", [2, 5, 2, 5, 5, 5]),
    ("4,4,2/2,1", [5, 3, 0, 0, 0, 14]),
])
def test_shape_formulas(text, counts):
    shape = S(text)
    assert [f(shape) for f in cnt.SHAPE_FORMULAS.values()] == counts
    assert en.count_avoiders_many(shape, list(cnt.SHAPE_FORMULAS), 8)[1] == counts


def test_formulas_need_basic_shapes():
    with pytest.raises(NotBasicError):
        cnt.count_213(S("4,1/2"))
    assert cnt.shape_formula(S("4,1/2"), (2, 1, 3)) == 2


def test_shape_formulas_against_oracle_up_to_six():
    pats = list(cnt.SHAPE_FORMULAS)
    for size in range(7):
        for shape in en.basic_shapes(size):
            expected = en.count_avoiders_many(shape, pats, 8)[1]
            assert [cnt.SHAPE_FORMULAS[p](shape) for p in pats] == expected, shape


def test_ribbon_signature():
    assert cnt.ribbon_signature(S("3,2/1")) == "<><"
    assert cnt.ribbon_signature(S("4,2/1")) == "<><<"
    assert cnt.ribbon_signature(S("3,1/1")) == "*<"
    with pytest.raises(SkewpatError):
        cnt.ribbon_signature(S("2,2"))


@pytest.mark.parametrize("sig, count", [("", 1), ("***", 14), ("*****", 132), ("><>", 5), ("<><*>*<", 28)])
def test_signature_counts(sig, count):
    assert cnt.count_signature_avoiders(sig) == count


def test_slides():
    assert str(cnt.row_slide(S("2,2,1"), 2)) == "3,3,1/1,1"
    assert str(cnt.row_slide(S("2,2,1"), 2, through=False)) == "3,2,1/1"
    assert str(cnt.column_slide(S("2,2"), 1)) == "2,2,1/1"
    assert cnt.row_slide(cnt.row_slide(S("2,2,1"), 2), 2, step=-1) == S("2,2,1")
    with pytest.raises(SkewpatError):
        cnt.row_slide(S("3,1"), 1)
    with pytest.raises(SkewpatError):
        cnt.row_slide(S("2,1"), 2)


def test_reduce_for_123_removes_squares():
    assert str(cnt.reduce_for_123(S("2,2"))) == "3,2/1"
    for size in range(7):
        for shape in en.basic_shapes(size):
            if max(shape.row_lengths(), default=0) <= 2:
                assert not cnt.reduce_for_123(shape).has_square()


def test_class_formulas():
    assert str(cnt.monotone_shape(ClassSpec(3, 2, 1), 4)) == "3,3,2,1"
    assert cnt.class_formula(ClassSpec(2, 2, 0), (1, 2, 3, 4)) == 5
    assert cnt.class_formula(ClassSpec(3, 2, 0), (1, 2, 3)) == 5
    assert cnt.class_formula(ClassSpec(3, 3, 0), (1, 2)) == 0
    with pytest.raises(SkewpatError):
        cnt.count_class_monotone(ClassSpec(2, 2, 0), 6)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_monotone_counts_match_oracle(n, k, data):
    r = data.draw(st.integers(0, k - 1))
    c = ClassSpec(n, k, r)
    if c.length > 9:
        return
    for m in (k + 1, k + 2):
        assert cnt.count_class_monotone(c, m) == en.count_class_avoiders(c, increasing(m), 9)
