import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverideals import kernels
from coverideals.kernels import compiled_backend, python_backend

from oracles import antichain

needs_compiled = pytest.mark.skipif(compiled_backend is None, reason="extension not built")


@st.composite
def row_sets(draw, n=None, min_size=0, max_size=12):
    n = draw(st.integers(1, 5)) if n is None else n
    rows = draw(st.lists(st.tuples(*[st.integers(0, 3)] * n), min_size=min_size, max_size=max_size))
    return n, rows


def test_backend_name():
    assert kernels.BACKEND == ("cython" if compiled_backend is not None else "python")


def test_python_minimalize_oracle():
    rows = [(1, 1), (1, 0), (0, 2), (1, 0), (2, 2)]
    assert python_backend.minimalize(rows) == antichain(rows)


@given(row_sets())
def test_python_minimalize(data):
    _, rows = data
    assert python_backend.minimalize(rows) == antichain(rows)


@needs_compiled
@given(row_sets())
def test_minimalize_agrees(data):
    _, rows = data
    assert list(compiled_backend.minimalize(rows)) == list(python_backend.minimalize(rows))


@needs_compiled
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(row_sets(n, 1, 6), row_sets(n, 1, 6))))
def test_binary_ops_agree(pair):
    (_, a), (_, b) = pair
    a, b = python_backend.minimalize(a), python_backend.minimalize(b)
    for op in ("multiply", "intersect"):
        assert list(getattr(compiled_backend, op)(a, b)) == list(getattr(python_backend, op)(a, b))


@needs_compiled
@given(row_sets(min_size=1), st.data())
def test_monomial_ops_agree(data, draw):
    n, rows = data
    rows = python_backend.minimalize(rows)
    m = draw.draw(st.tuples(*[st.integers(0, 4)] * n))
    assert compiled_backend.contains(rows, m) == python_backend.contains(rows, m)
    assert list(compiled_backend.colon(rows, m)) == list(python_backend.colon(rows, m))


@needs_compiled
@given(row_sets(min_size=1), st.data())
def test_intersect_irreducible_agrees(data, draw):
    n, rows = data
    rows = python_backend.minimalize(rows)
    b = draw.draw(st.tuples(*[st.integers(0, 3)] * n).filter(any))
    got = list(compiled_backend.intersect_irreducible(rows, b))
    assert got == list(python_backend.intersect_irreducible(rows, b))
    gens = [tuple(e if j == i else 0 for j in range(n)) for i, e in enumerate(b) if e]
    assert got == list(python_backend.intersect(rows, python_backend.minimalize(gens)))
