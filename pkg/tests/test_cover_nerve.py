from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kodaira_kit.cover_nerve import Cover, Simplex, face, nerve
from kodaira_kit.errors import IndexOutOfRange


def idx(simplices):
    return [s.indices for s in simplices]


def test_nerve_examples():
    assert idx(nerve(Cover(2), 1)) == [(0, 1)]
    assert idx(nerve(Cover(3), 1)) == [(0, 1), (0, 2), (1, 2)]
    assert idx(nerve(Cover(3), 2)) == [(0, 1, 2)]
    assert nerve(Cover(3), 3) == []


def test_face_examples():
    assert face(Simplex((0, 1, 2)), 1) == Simplex((0, 2))
    assert face(Simplex((0, 1)), 0) == Simplex((1,))
    assert face(Simplex((0, 2, 3)), 2) == Simplex((0, 2))


def test_face_errors():
    with pytest.raises(IndexOutOfRange):
        face(Simplex((0, 1)), 2)
    with pytest.raises(IndexOutOfRange):
        face(Simplex((4,)), 0)


def test_invalid_objects():
    with pytest.raises(ValueError):
        Simplex((1, 1))
    with pytest.raises(ValueError):
        Simplex((2, 1))
    with pytest.raises(ValueError):
        Cover(0)
    assert Cover.projective_standard(2).size == 3


@given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=7))
def test_nerve_size(size, p):
    out = nerve(Cover(size), p)
    assert len(out) == comb(size, p + 1)
    assert idx(out) == sorted(idx(out))


@given(st.data())
def test_simplicial_identity(data):
    size = data.draw(st.integers(min_value=3, max_value=7))
    p = data.draw(st.integers(min_value=2, max_value=size - 1))
    s = data.draw(st.sampled_from(nerve(Cover(size), p)))
    k = data.draw(st.integers(min_value=0, max_value=p - 1))
    j = data.draw(st.integers(min_value=0, max_value=k))
    assert face(face(s, j), k) == face(face(s, k + 1), j)
