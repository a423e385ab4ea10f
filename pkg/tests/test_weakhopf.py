from fractions import Fraction as F

import pytest

from hopfsmash import demos as dm
from hopfsmash.exactlin import Tensor3, basis_vec, mat_eq, vec
from hopfsmash.hopfcore import LinearMap, dual_hopf, verify_hopf
from hopfsmash.qtriang import verify_qt
from hopfsmash.weakhopf import (
    GroupoidData,
    WeakHopfData,
    WeakQTStructure,
    almost_triangular_wha_report,
    check_wha_morphism,
    counital_data,
    groupoid_wha,
    one_object_groupoid,
    pair_groupoid,
    transformation_groupoid,
    verify_weak_bialgebra,
    verify_weak_hopf,
    verify_weak_qt,
)


def test_hopf_inputs_pass_weak_verifiers(kz2, ks3):
    for h in (kz2, ks3, dual_hopf(ks3)):
        w = WeakHopfData.from_hopf(h)
        assert verify_weak_bialgebra(w).ok
        assert verify_weak_hopf(w).ok


def test_weak_verifier_agrees_with_hopf_verifier_on_faults(ks3):
    # differential test: flip one comult entry; both verifiers must fail
    dense = ks3.comult.dense()
    dense[2][2][2] = F(0)
    dense[2][3][3] = F(1)
    from hopfsmash.hopfcore import HopfData, StructureCoalgebra
    bad = HopfData(ks3.algebra, StructureCoalgebra(6, Tensor3.from_dense(dense), ks3.counit),
                   ks3.antipode)
    assert not verify_hopf(bad).ok
    rep = verify_weak_bialgebra(WeakHopfData.from_hopf(bad))
    assert not rep.ok
    assert any(c.witness is not None for c in rep.failures())


def test_hopf_counital_maps_collapse(kz2):
    w = WeakHopfData.from_hopf(kz2)
    cd = counital_data(w)
    assert cd.report.ok
    # eps_s = eps_t = unit . counit for an ordinary Hopf algebra
    expected = tuple(tuple(kz2.unit[r] * kz2.counit[c] for c in range(2)) for r in range(2))
    assert mat_eq(cd.eps_s, expected) and mat_eq(cd.eps_t, expected)
    assert cd.source_basis == (vec([1, 0]),)


def test_pair_groupoid_is_matrix_algebra():
    w = groupoid_wha(pair_groupoid(3))
    assert w.dim == 9
    assert verify_weak_hopf(w).ok
    cd = counital_data(w)
    assert cd.report.ok
    # source = target = diagonal matrix units E_00, E_11, E_22
    diag = [basis_vec(9, 0), basis_vec(9, 4), basis_vec(9, 8)]
    assert list(cd.source_basis) == diag
    assert list(cd.target_basis) == diag
    # antipode is transposition of matrix units
    e01 = 0 * 3 + 1
    e10 = 1 * 3 + 0
    assert w.s_vec(basis_vec(9, e01)) == basis_vec(9, e10)


def test_one_object_groupoid_is_group_algebra(s3_table, ks3):
    w = groupoid_wha(one_object_groupoid(s3_table))
    assert w.mult == ks3.mult
    assert w.comult == ks3.comult
    assert w.antipode == ks3.antipode


def test_transformation_groupoid_s3(s3_table):
    g = transformation_groupoid(s3_table, dm.natural_point_action(3))
    w = groupoid_wha(g)
    assert w.dim == 18
    assert verify_weak_hopf(w).ok


def test_transformation_groupoid_matches_smash(s3_table, smash18):
    # the groupoid algebra of G x X is A # kG via e_x # g |-> (g, g^{-1}.x)
    g = transformation_groupoid(s3_table, dm.natural_point_action(3))
    w = groupoid_wha(g)
    act = dm.natural_point_action(3)
    morphs = [(gg, x) for gg in range(6) for x in range(3)]
    midx = {m: i for i, m in enumerate(morphs)}
    cols = []
    for flat in range(18):
        a, hh = smash18.unflat(flat)
        src = act[s3_table.inv(hh)][a]
        cols.append(basis_vec(18, midx[(hh, src)]))
    from hopfsmash.exactlin import transpose
    f = LinearMap(18, 18, transpose(tuple(cols)))
    from hopfsmash.hopfcore import check_map
    assert check_map(f, smash18.carrier, w.algebra, ("algebra", "injective")).ok


def test_groupoid_validation_rejects_broken_composition():
    g = pair_groupoid(2)
    bad = GroupoidData(g.n_objects, g.sources, g.targets,
                       tuple(tuple(None for _ in row) for row in g.compose),
                       g.identities, g.inverses)
    with pytest.raises(ValueError):
        bad.validate()


def test_fault_injected_groupoid_comult_fails():
    w = groupoid_wha(pair_groupoid(2))
    dense = w.comult.dense()
    dense[1][1][1] = F(0)
    dense[1][2][1] = F(1)
    from hopfsmash.hopfcore import StructureCoalgebra
    bad = WeakHopfData(w.algebra, StructureCoalgebra(4, Tensor3.from_dense(dense), w.counit),
                       w.antipode)
    rep = verify_weak_bialgebra(bad)
    assert not rep.ok


def test_weak_qt_reduces_to_qt_for_hopf(double_z2):
    dd, q = double_z2
    w = WeakHopfData.from_hopf(dd)
    wq = WeakQTStructure(w, q.R, q.Rinv)
    rep = verify_weak_qt(wq)
    assert rep.ok
    assert verify_qt(q).ok


def test_check_wha_morphism_identity_and_failure(kz2):
    w = WeakHopfData.from_hopf(kz2)
    from hopfsmash.exactlin import identity_mat
    ident = LinearMap(2, 2, identity_mat(2))
    assert check_wha_morphism(ident, w, w).ok
    # unit-scaled counit into M_3(k): not a coalgebra map since Delta(1) != 1 (x) 1
    m3k = groupoid_wha(pair_groupoid(3))
    cols = []
    for i in range(2):
        cols.append(tuple(kz2.counit[i] * c for c in m3k.unit))
    from hopfsmash.exactlin import transpose
    f = LinearMap(2, 9, transpose(tuple(cols)))
    rep = check_wha_morphism(f, w, m3k)
    assert rep.find("algebra_map").passed
    assert not rep.find("coalgebra_map").passed


def test_almost_triangular_report_on_hopf_double(double_z2):
    dd, q = double_z2
    w = WeakHopfData.from_hopf(dd)
    wq = WeakQTStructure(w, q.R, q.Rinv)
    rep = almost_triangular_wha_report(wq)
    assert rep.ok
    # commutative host: all conditions hold
    assert rep.find("almost_triangular").passed


def test_almost_triangular_report_on_triangular_smash(sws18):
    from hopfsmash.smashcons import smash_qt
    wq, _ = smash_qt(sws18)
    rep = almost_triangular_wha_report(wq)
    assert rep.ok
    assert rep.find("almost_triangular").passed


def test_counital_consequences_on_smash(sws18):
    cd = counital_data(sws18.wha)
    assert cd.report.ok
    assert len(cd.source_basis) == 3
    assert len(cd.target_basis) == 3
