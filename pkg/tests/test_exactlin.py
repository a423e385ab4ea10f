from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfsmash.exactlin import (
    DimensionMismatch,
    Tensor3,
    TensorElem,
    basis_vec,
    contract,
    identity_mat,
    kernel_basis,
    mat,
    mat_inverse,
    mat_mul,
    mat_vec,
    rank,
    rat,
    rat_str,
    solve,
    span_basis,
    spans_equal,
    tensor_product,
    vec,
    zero_mat,
)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def test_rat_string_roundtrip():
    assert rat("3/2") == F(3, 2)
    assert rat("-7") == F(-7)
    assert rat_str(F(3, 2)) == "3/2"
    assert rat_str(F(5)) == "5"
    with pytest.raises(TypeError):
        rat(1.5)


def test_kernel_examples():
    assert kernel_basis(identity_mat(2)) == []
    k = kernel_basis(mat([[1, 1], [1, 1]]))
    assert len(k) == 1 and k[0][0] == -k[0][1] != 0
    assert len(kernel_basis(zero_mat(3, 3))) == 3


def test_solve_examples():
    assert solve(mat([[2]]), vec([3])) == (F(3, 2),)
    b = vec([4, -1, 7])
    assert solve(identity_mat(3), b) == b
    assert solve(mat([[1], [1]]), vec([1, 2])) is None
    with pytest.raises(DimensionMismatch):
        solve(mat([[1, 2]]), vec([1, 2]))


def test_contract_identity_on_vector():
    ident = TensorElem.from_matrix(identity_mat(3))
    v = TensorElem.from_vector(vec([2, -1, 5]))
    out = contract(ident, v, [(1, 0)])
    assert out == v


def test_contract_trivial_r_product():
    # R = Rbar = 1 (x) 1 in kZ2-like coordinates; componentwise products
    # against the multiplication tensor recover 1 (x) 1
    one = TensorElem.from_entries((2, 2), [((0, 0), 1)])
    mult = TensorElem.from_entries((2, 2, 2),
                                   [((0, 0, 0), 1), ((0, 1, 1), 1),
                                    ((1, 0, 1), 1), ((1, 1, 0), 1)])
    t1 = contract(one, mult, [(0, 0)])          # legs: R^2, j, k
    t2 = contract(t1, one, [(1, 0)])            # legs: R^2, k, Rbar^2
    out = contract(t2, mult, [(0, 0), (2, 1)])  # legs: k, m
    assert out == TensorElem.from_entries((2, 2), [((0, 0), 1)])


def test_contract_full_contraction_k3():
    # m(x) for x = sum e_i (x) e_i over pointwise k^3 is the unit (1, 1, 1),
    # frozen from the direct expansion sum_i e_i e_i = sum_i e_i
    x = TensorElem.from_entries((3, 3), [((i, i), 1) for i in range(3)])
    mult = TensorElem.from_entries((3, 3, 3), [((i, i, i), 1) for i in range(3)])
    out = contract(x, mult, [(0, 0), (1, 1)])
    assert out == TensorElem.from_vector(vec([1, 1, 1]))


def test_contract_shape_errors():
    a = TensorElem.from_vector(vec([1, 2]))
    b = TensorElem.from_vector(vec([1, 2, 3]))
    with pytest.raises(DimensionMismatch):
        contract(a, b, [(0, 0)])


def test_tensor3_round_trip():
    t = Tensor3.from_dense([[[1, 0], [0, 2]], [[0, 0], [F(1, 3), 0]]])
    assert t.entry(1, 1, 0) == F(1, 3)
    assert t.entry(0, 0, 1) == 0
    assert Tensor3.from_dense(t.dense()) == t


def test_swap_legs():
    t = TensorElem.from_entries((2, 3), [((1, 2), 5)])
    s = t.swap_legs((1, 0))
    assert s.dims == (3, 2)
    assert s.entry(2, 1) == 5


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.data())
def test_solve_recovers_vector_when_injective(n, data):
    rows = data.draw(st.lists(st.lists(rationals, min_size=n, max_size=n),
                              min_size=n, max_size=n + 2))
    m = mat(rows)
    if rank(m) < n:
        return
    x = vec(data.draw(st.lists(rationals, min_size=n, max_size=n)))
    assert solve(m, mat_vec(m, x)) == x


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_kernel_vectors_are_exact(r, c, data):
    rows = data.draw(st.lists(st.lists(rationals, min_size=c, max_size=c),
                              min_size=r, max_size=r))
    m = mat(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == c
    for v in ker:
        assert all(x == 0 for x in mat_vec(m, v))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_contract_is_bilinear(data):
    dims = (2, 2)
    def draw_elem():
        co = data.draw(st.lists(rationals, min_size=4, max_size=4))
        return TensorElem(dims, co)
    a, a2, b = draw_elem(), draw_elem(), draw_elem()
    pairs = [(0, 1)]
    left = contract(a.add(a2), b, pairs)
    right = contract(a, b, pairs).add(contract(a2, b, pairs))
    assert left == right
    c = data.draw(rationals)
    assert contract(a.scale(c), b, pairs) == contract(a, b, pairs).scale(c)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_inverse_round_trip(n, m, data):
    rows = data.draw(st.lists(st.lists(rationals, min_size=n, max_size=n),
                              min_size=n, max_size=n))
    a = mat(rows)
    inv = mat_inverse(a)
    if inv is not None:
        assert mat_mul(a, inv) == identity_mat(n)
        assert mat_mul(inv, a) == identity_mat(n)
    else:
        assert rank(a) < n


def test_span_utilities():
    b = span_basis([vec([1, 1, 0]), vec([2, 2, 0]), vec([0, 0, 1])], 3)
    assert len(b) == 2
    assert spans_equal([vec([1, 1, 0]), vec([0, 0, 2])],
                       [vec([3, 3, 0]), vec([1, 1, 5])], 3)
    assert not spans_equal([vec([1, 0, 0])], [vec([0, 1, 0])], 3)


def test_tensor_product_legs():
    a = TensorElem.from_vector(vec([1, 2]))
    b = TensorElem.from_vector(vec([3, 0, 1]))
    t = tensor_product(a, b)
    assert t.dims == (2, 3)
    assert t.entry(1, 2) == 2
