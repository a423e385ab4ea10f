import itertools
from fractions import Fraction as F

import pytest

from hopfsmash.exactlin import (
    Tensor3,
    basis_vec,
    identity_mat,
    mat,
    mat_eq,
    transpose,
    vec,
)
from hopfsmash.hopfcore import (
    GroupTable,
    HopfData,
    LinearMap,
    NotSemisimple,
    StructureAlgebra,
    StructureCoalgebra,
    check_map,
    drinfeld_double,
    dual_hopf,
    group_algebra,
    harpoon_left,
    heisenberg_double,
    integrals,
    opposites,
    verify_algebra,
    verify_hopf,
)
from hopfsmash.modalg import pointwise_algebra


def test_group_table_validation():
    with pytest.raises(ValueError):
        GroupTable.from_lists(["e", "a"], [[0, 1], [1, 1]]).validate()
    with pytest.raises(ValueError):
        GroupTable.from_lists(["a", "b"], [[1, 0], [1, 0]]).validate()


def test_trivial_group_algebra():
    h = group_algebra(GroupTable.from_lists(["e"], [[0]]))
    assert h.dim == 1
    assert h.mult.dense() == [[[F(1)]]]
    assert h.antipode == ((F(1),),)
    assert verify_hopf(h).ok


def test_kz2_hopf(kz2):
    assert kz2.dim == 2
    rep = verify_hopf(kz2)
    assert rep.ok
    # antipode of kZ2 is the identity: every element is self-inverse
    assert mat_eq(kz2.antipode, identity_mat(2))


def test_ks3_mult_matches_permutation_oracle(ks3, s3_table):
    # independent oracle: compose permutations directly
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            k = idx[tuple(p[q[t]] for t in range(3))]
            assert ks3.mult.row(i, j) == ((k, F(1)),)
            assert s3_table.table[i][j] == k
    rep = verify_hopf(ks3)
    assert rep.ok
    assert rep.find("antipode_involutive").passed


def test_corrupted_mult_fails_with_witness(ks3):
    dense = ks3.mult.dense()
    dense[1][2][0] += 1
    bad = StructureAlgebra(6, Tensor3.from_dense(dense), ks3.unit)
    rep = verify_algebra(bad)
    assert not rep.ok
    assert rep.find("associativity").witness is not None


def test_dual_kz2_isomorphic_to_kz2(kz2):
    d = dual_hopf(kz2)
    # frozen explicit iso: e -> d_e + d_g, g -> d_e - d_g
    f = LinearMap(2, 2, mat([[1, 1], [1, -1]]))
    rep = check_map(f, kz2, d, ("algebra", "coalgebra", "antipode", "injective"))
    assert rep.ok


def test_double_dual_is_identity(ks3):
    dd = dual_hopf(dual_hopf(ks3))
    assert dd.mult == ks3.mult
    assert dd.comult == ks3.comult
    assert dd.antipode == ks3.antipode
    ident = LinearMap(6, 6, identity_mat(6))
    assert check_map(ident, ks3, dd, ("algebra", "coalgebra", "antipode", "injective")).ok


def test_dual_ks3_commutative_noncocommutative(ks3):
    d = dual_hopf(ks3)
    assert d.algebra.is_commutative()
    cocomm = all(d.coalgebra.comul_row(i) ==
                 tuple(sorted((k, j, c) for j, k, c in d.coalgebra.comul_row(i)))
                 for i in range(6))
    # S3 is noncommutative, so its dual is non-cocommutative
    flipped_equal = True
    for i in range(6):
        lhs = {(j, k): c for j, k, c in d.coalgebra.comul_row(i)}
        rhs = {(k, j): c for j, k, c in d.coalgebra.comul_row(i)}
        if lhs != rhs:
            flipped_equal = False
    assert not flipped_equal


def test_opposites(kz2, ks3):
    assert opposites(kz2, "op").mult == kz2.mult          # commutative
    assert opposites(ks3, "cop").comult == ks3.comult     # group-likes
    assert opposites(opposites(ks3, "op"), "op").mult == ks3.mult
    assert opposites(ks3, "opcop").antipode == ks3.antipode
    with pytest.raises(ValueError):
        opposites(ks3, "flip")


def test_integrals_kz2(kz2):
    ip = integrals(kz2)
    # frozen: Lambda = e + g (normalized so <lambda, Lambda> = 1), lambda = d_e
    assert ip.Lambda == vec([1, 1])
    assert ip.lam == vec([1, 0])


def test_integrals_ks3(ks3):
    ip = integrals(ks3)
    assert ip.Lambda == vec([1] * 6)
    assert ip.lam == vec([1, 0, 0, 0, 0, 0])
    # Lambda -> lambda = eps
    assert harpoon_left(ks3.algebra, ip.Lambda, ip.lam) == ks3.counit


def test_integrals_trivial():
    h = group_algebra(GroupTable.from_lists(["e"], [[0]]))
    ip = integrals(h)
    assert ip.Lambda == vec([1]) and ip.lam == vec([1])


def sweedler_h4():
    """Sweedler's 4-dimensional Hopf algebra on basis (1, g, x, gx):
    g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x."""
    mult = Tensor3.from_entries((4, 4, 4), [
        (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1),
        (1, 0, 1, 1), (2, 0, 2, 1), (3, 0, 3, 1),
        (1, 1, 0, 1), (1, 2, 3, 1), (1, 3, 2, 1),
        (2, 1, 3, -1), (3, 1, 2, -1),
    ])
    comult = Tensor3.from_entries((4, 4, 4), [
        (0, 0, 0, 1), (1, 1, 1, 1),
        (2, 2, 0, 1), (2, 1, 2, 1),
        (3, 3, 1, 1), (3, 0, 3, 1),
    ])
    anti = mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    return HopfData(StructureAlgebra(4, mult, vec([1, 0, 0, 0])),
                    StructureCoalgebra(4, comult, vec([1, 1, 0, 0])),
                    anti)


def test_integrals_refuse_nonsemisimple():
    h = sweedler_h4()
    assert verify_hopf(h).ok
    # H_4 has no nonzero two-sided integral, which integrals() must detect
    with pytest.raises(NotSemisimple):
        integrals(h)


def test_check_map_examples(kz2, ks3):
    ident = LinearMap(2, 2, identity_mat(2))
    assert check_map(ident, kz2, kz2, ("algebra", "coalgebra", "antipode", "injective")).ok
    # eps: kS3 -> k as an algebra map
    triv = group_algebra(GroupTable.from_lists(["e"], [[0]]))
    eps = LinearMap(6, 1, (ks3.counit,))
    assert check_map(eps, ks3.algebra, triv.algebra, ("algebra",)).ok
    # the flip map on pointwise k^3 is an algebra map (commutativity)
    k3 = pointwise_algebra(3)
    flip = LinearMap(3, 3, mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    assert check_map(flip, k3, k3, ("algebra", "injective")).ok


def test_drinfeld_double_kz2(kz2, double_z2):
    dd, q = double_z2
    assert dd.dim == 4
    assert dd.algebra.is_commutative()
    from hopfsmash.qtriang import verify_qt
    assert verify_qt(q).ok


def test_drinfeld_double_trivial_group():
    h = group_algebra(GroupTable.from_lists(["e"], [[0]]))
    dd, q = drinfeld_double(h)
    assert dd.dim == 1
    assert q.R.entry(0, 0) == 1


def test_drinfeld_double_ks3(double_s3):
    dd, q = double_s3
    assert dd.dim == 36
    from hopfsmash.qtriang import verify_qt
    assert verify_qt(q).ok


def test_double_makes_host_module_algebra(kz2, double_z2):
    # the validating check for the double's product convention: the canonical
    # action formulas must make H a quantum commutative module algebra
    from hopfsmash.smashcons import double_module_algebra
    m, q = double_module_algebra(kz2, double_z2)
    from hopfsmash.modalg import is_quantum_commutative, verify_module_algebra
    assert verify_module_algebra(m).ok
    assert is_quantum_commutative(q, m) == (True, None)


def test_heisenberg_kz2_is_m2(kz2):
    hz = heisenberg_double(kz2)
    assert hz.dim == 4
    # enumeration oracle: exact center has dimension 1 and the only multiset
    # with one block and sum of squares 4 is {2}
    assert len(hz.center_basis()) == 1
    from hopfsmash.repdim import wedderburn_blocks
    assert wedderburn_blocks(hz).blocks == (2,)


def test_heisenberg_trivial():
    h = group_algebra(GroupTable.from_lists(["e"], [[0]]))
    hz = heisenberg_double(h)
    assert hz.dim == 1 and hz.unit == vec([1])


def test_heisenberg_ks3_simple(ks3):
    hz = heisenberg_double(ks3)
    assert hz.dim == 36
    assert len(hz.center_basis()) == 1
    from hopfsmash.repdim import wedderburn_blocks
    # one block, sum of squares 36 -> simple of dimension 6
    assert wedderburn_blocks(hz).blocks == (6,)


from hypothesis import given, settings
from hypothesis import strategies as st


@settings(max_examples=12, deadline=None)
@given(st.integers(1, 6))
def test_cyclic_group_algebras(n):
    from hopfsmash import demos as dm
    h = group_algebra(dm.cyclic_table(n))
    assert h.dim == n
    assert verify_hopf(h).ok
    ip = integrals(h)
    # Lambda = sum of all group elements, lambda = delta_e, for every kZ_n
    assert ip.Lambda == tuple(F(1) for _ in range(n))
    assert ip.lam == basis_vec(n, 0)


@settings(max_examples=8, deadline=None)
@given(st.integers(2, 5))
def test_cyclic_double_is_qt(n):
    from hopfsmash import demos as dm
    from hopfsmash.qtriang import verify_qt
    dd, q = drinfeld_double(group_algebra(dm.cyclic_table(n)))
    assert dd.dim == n * n
    assert verify_qt(q).ok
