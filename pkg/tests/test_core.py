from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from skewpat import enumeration as en
from skewpat.core import (
    ClassSpec,
    LengthMismatchError,
    Partition,
    SkewpatError,
    SkewShape,
    SkewTableau,
    class_shape,
    contains_pattern,
    descent_set,
    inverse,
    is_involution,
    is_member,
    lis_length,
    normalize_shape,
    parse_permutation,
    reverse_complement,
    standardize,
)

perms = st.integers(0, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def brute_lis(w):
    best = 0
    for mask in range(1 << len(w)):
        sub = [w[i] for i in range(len(w)) if mask >> i & 1]
        if all(a < b for a, b in zip(sub, sub[1:])):
            best = max(best, len(sub))
    return best


class TestPermutations:
    def test_parse(self):
        assert parse_permutation("2413") == (2, 4, 1, 3)
        assert parse_permutation("10,1,2,3,4,5,6,7,8,9")[0] == 10
        with pytest.raises(SkewpatError):
            parse_permutation("1224")

    def test_small_values(self):
        w = (4, 8, 3, 5, 1, 7, 2, 6)
        assert lis_length(w) == 3
        assert descent_set(w) == {2, 4, 6}
        assert inverse((2, 3, 1)) == (3, 1, 2)
        assert reverse_complement((1, 3, 2, 4)) == (1, 3, 2, 4)
        assert standardize((10, 3, 7)) == (3, 1, 2)

    def test_containment(self):
        assert contains_pattern((2, 4, 1, 3), (2, 1))
        assert not contains_pattern((1, 2, 3, 4), (2, 1))
        assert contains_pattern((3, 1, 4, 2), (3, 1, 2))
        assert not contains_pattern((2, 4, 1, 3), (1, 2, 3))
        assert contains_pattern((5, 1, 2, 3, 4), (1, 2, 3, 4))

    @given(perms)
    def test_lis_matches_brute_force(self, w):
        assert lis_length(w) == brute_lis(w)

    @given(perms)
    def test_inverse_is_involutive(self, w):
        assert inverse(inverse(w)) == w
        assert is_involution(w) == (inverse(w) == w)


class TestShapes:
    def test_partition(self):
        assert Partition([3, 1]).conjugate() == (2, 1, 1)
        with pytest.raises(SkewpatError):
            Partition([1, 2])

    def test_basic_queries(self):
        s = SkewShape.parse("3,2/2")
        assert s.size == 3
        assert s.row_lengths() == [1, 2]
        assert s.boxes() == [(1, 3), (2, 1), (2, 2)]
        assert s.reading_order() == [(2, 1), (2, 2), (1, 3)]
        assert str(s.conjugate()) == "2,2,1/1,1"
        assert str(s.rotate()) == "3,1/1"
        assert s.is_basic() and not s.has_square()

    def test_inner_must_fit(self):
        with pytest.raises(SkewpatError):
            SkewShape.parse("2,1/3")

    @pytest.mark.parametrize("text, expected", [
        ("4,1/2", "3,1/1"),
        ("2,2/1,1", "1,1"),
        ("3,3/3", "3"),
        ("3,3/1", "3,3/1"),
        ("5,2,2/1,1", "5,2,2/1,1"),
    ])
    def test_normalize(self, text, expected):
        assert str(normalize_shape(SkewShape.parse(text))) == expected

    def test_basic_shape_counts(self):
        assert [sum(1 for _ in en.basic_shapes(n)) for n in range(9)] == [1, 1, 3, 9, 28, 87, 272, 850, 2659]

    def test_json_round_trip(self):
        s = SkewShape.parse("5,4,3/2,1")
        assert SkewShape.from_json(s.to_json()) == s


class TestTableaux:
    def test_reading_word_and_symmetries(self):
        t = SkewTableau.straight([[1, 2, 6], [3, 5, 7], [4, 8]])
        assert t.reading_word() == (4, 8, 3, 5, 7, 1, 2, 6)
        assert t.conjugate().rows == ((1, 3, 4), (2, 5, 8), (6, 7))
        rc = t.rotate_complement()
        assert rc.rows == ((1, 5), (2, 4, 6), (3, 7, 8))
        assert str(rc.shape) == "3,3,3/1"
        assert rc.rotate_complement() == t

    def test_rejects_bad_fillings(self):
        shape = SkewShape.parse("2,2")
        with pytest.raises(SkewpatError):
            SkewTableau(shape, ((1, 2), (4, 3)))
        with pytest.raises(SkewpatError):
            SkewTableau(shape, ((1, 3), (2, 2)))
        with pytest.raises(SkewpatError):
            SkewTableau(shape, ((1, 2), (3,)))

    def test_json_round_trip(self):
        t = SkewTableau.straight([[1, 3], [2]])
        assert SkewTableau.from_json(t.to_json()) == t


class TestClasses:
    def test_class_shapes(self):
        assert str(class_shape(ClassSpec(2, 2, 0))) == "3,2/1"
        assert str(class_shape(ClassSpec(2, 2, 1))) == "3,2,1/1"
        assert str(class_shape(ClassSpec(3, 3, 2))) == "5,4,3,2/2,1"

    def test_parse(self):
        assert ClassSpec.parse("n=2,k=3,r=1") == ClassSpec(2, 3, 1)
        with pytest.raises(SkewpatError):
            ClassSpec(2, 2, 2)

    def test_alternating_membership(self):
        c = ClassSpec(2, 2, 0)
        assert is_member((2, 3, 1, 4), c)
        assert is_member((1, 3, 2, 4), c)
        assert not is_member((2, 1, 3, 4), c)
        with pytest.raises(LengthMismatchError):
            is_member((1, 2, 3), c)

    @pytest.mark.parametrize("n, k, r", [(2, 2, 0), (2, 2, 1), (3, 2, 0), (2, 3, 1), (1, 4, 2), (3, 2, 1)])
    def test_membership_equals_reading_words(self, n, k, r):
        c = ClassSpec(n, k, r)
        members = {w for w in permutations(range(1, c.length + 1)) if is_member(w, c)}
        assert members == set(en.reading_words(class_shape(c)))
