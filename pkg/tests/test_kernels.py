"""The compiled kernels and the pure-Python fallback must agree exactly."""

import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from skewpat import _pykernels as py
from skewpat import kernels
from skewpat.enumeration import basic_shapes, order_masks

compiled = pytest.importorskip("skewpat._kernels")

words = st.integers(0, 10).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)
patterns = st.integers(1, 4).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_backend_names():
    assert compiled.NAME != py.NAME
    assert kernels.BACKEND in (compiled.NAME, py.NAME)


@given(words)
def test_lis_and_lds(w):
    assert compiled.lis_length(w) == py.lis_length(w)
    assert compiled.lds_length(w) == py.lds_length(w)


@given(words, patterns)
def test_contains(w, p):
    assert compiled.contains_pattern(w, p) == py.contains_pattern(w, p)


def test_contains_exhaustive_small():
    for n in range(7):
        for w in permutations(range(1, n + 1)):
            for p in [(1, 2, 3), (2, 1, 3), (1, 3, 2), (2, 4, 1, 3)]:
                assert compiled.contains_pattern(w, p) == py.contains_pattern(w, p)


def test_count_extensions():
    pats = [(1, 2, 3), (3, 2, 1), (2, 1, 3), (1, 3, 2), (3, 1, 2), (2, 3, 1)]
    for size in range(7):
        for shape in basic_shapes(size):
            need = order_masks(shape)
            assert compiled.count_extensions(need, pats) == py.count_extensions(need, pats)


@pytest.mark.parametrize("sig, count", [("", 1), ("***", 14), ("*****", 132), ("><>", 5), ("<><*>*<", 28)])
def test_signature_counts(sig, count):
    assert compiled.count_signature_123(sig) == count
    assert py.count_signature_123(sig) == count


def test_signature_random():
    rng = random.Random(7)
    for _ in range(60):
        sig = "".join(rng.choice("<>*") for _ in range(rng.randint(0, 9)))
        assert compiled.count_signature_123(sig) == py.count_signature_123(sig)


def test_pure_fallback_is_selectable():
    import os
    import subprocess
    import sys

    code = ("import skewpat; from skewpat.core import SkewShape; "
            "print(skewpat.BACKEND, skewpat.count_123(SkewShape.parse('2,2,2/1')))")
    env = dict(os.environ, SKEWPAT_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.split() == [py.NAME, "5"]
