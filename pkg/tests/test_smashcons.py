from fractions import Fraction as F

import pytest

from hopfsmash import demos as dm
from hopfsmash.exactlin import basis_vec, vec
from hopfsmash.hopfcore import (
    GroupTable,
    group_algebra,
    heisenberg_double,
    sp,
    sparse_outer,
)
from hopfsmash.modalg import (
    adjoint_module_algebra,
    pointwise_algebra,
    separability,
    trivial_module_algebra,
)
from hopfsmash.report import HypothesisFailure
from hopfsmash.smashcons import (
    build_B,
    double_module_algebra,
    double_module_spot_check,
    double_smash_decomposition,
    groupoid_case_study,
    phi_embed,
    rb_in_image_iff_muger,
    smash_algebra,
    smash_qt,
    smash_weak_structure,
    theta_embed,
)


def test_smash_dimensions(smash18):
    assert smash18.carrier.dim == 18
    assert smash18.na == 3 and smash18.nh == 6


def test_smash_with_trivial_coefficients_is_h(ks3):
    m = trivial_module_algebra(ks3, pointwise_algebra(1))
    s = smash_algebra(m)
    assert s.carrier.dim == 6
    # 1 # h |-> h identifies the carrier with H on the nose
    assert s.carrier.mult == ks3.mult
    assert s.carrier.unit == ks3.unit


def test_smash_adjoint_kz2_commutative(kz2):
    m = adjoint_module_algebra(kz2)
    s = smash_algebra(m)
    assert s.carrier.dim == 4
    assert s.carrier.is_commutative()


def test_smash_weak_structure_centerpiece(sws18):
    rep = sws18.report
    assert rep.ok
    for name in ("wha.antipode_source", "wha.antipode_target", "wha.antipode_triple",
                 "eps_s_closed_form", "eps_t_closed_form",
                 "helper_eq1_1", "helper_eq1_2", "helper_eq1_3", "helper_eq1_4",
                 "delta_one_idempotent", "target_is_A_smash_1", "source_is_Rtwisted_A"):
        assert rep.find(name).passed, name


def test_smash_counit_value(sws18, smash18):
    # eps(e_1 # g) = <alpha, e_1> eps(g) = 1 for every group element g
    for hh in range(6):
        assert sws18.wha.counit[smash18.flat(0, hh)] == 1


def test_smash_guard_quantum_commutativity(ks3, q_s3):
    adj = adjoint_module_algebra(ks3)
    s = smash_algebra(adj)
    sep = separability(adj)
    with pytest.raises(HypothesisFailure) as ei:
        smash_weak_structure(s, q_s3, sep)
    assert "quantum-commutativity" in str(ei.value)


def test_smash_guard_u_triviality(kz2):
    qm = dm.minus_r_z2(kz2)
    swap = dm.k2_module_algebra_over_z2(kz2)
    s = smash_algebra(swap)
    sep = separability(swap)
    with pytest.raises(HypothesisFailure) as ei:
        smash_weak_structure(s, qm, sep)
    assert "drinfeld-element-acts-trivially" in str(ei.value)


def test_smash_qt_trivial_r_is_delta_one(sws18):
    wq, rep = smash_qt(sws18)
    assert rep.ok
    assert wq.r_sparse() == sws18.wha.delta_one
    assert rep.find("triangular_propagates").passed


def test_smash_qt_degenerate_coefficients(double_z2, kz2):
    # A = k: the smash degenerates to H and the weak R-matrix is R itself
    dd, q = double_z2
    m = trivial_module_algebra(dd, pointwise_algebra(1))
    s = smash_algebra(m)
    sws = smash_weak_structure(s, q, separability(m))
    wq, rep = smash_qt(sws)
    assert rep.ok
    assert wq.r_sparse() == {idx: c for idx, c in q.R.items()}


def test_smash_qt_muger_guard(kz2, double_mod_z2):
    m, q = double_mod_z2
    s = smash_algebra(m)
    sws = smash_weak_structure(s, q, separability(m))
    assert sws.report.ok  # the weak Hopf structure itself exists (dim 8)
    with pytest.raises(HypothesisFailure) as ei:
        smash_qt(sws)
    assert "muger-center-membership" in str(ei.value)


def test_theta_embed_trivial_coefficients(ks3):
    m = trivial_module_algebra(ks3, pointwise_algebra(1))
    s = smash_algebra(m)
    f, target, rep = theta_embed(s)
    assert rep.ok
    assert target.dim == 6
    # theta(1 # h) = 1 (x) h: permutation-like columns
    for hh in range(6):
        assert f.apply(basis_vec(6, hh)) == basis_vec(6, hh)


def test_theta_embed_k3_ks3(smash18):
    f, target, rep = theta_embed(smash18)
    assert rep.ok
    assert target.dim == 54
    assert f.rank() == 18


def test_theta_fault_injection(smash18):
    f, target, rep = theta_embed(smash18)
    # flip one matrix entry: the algebra-map check must fail
    rows = [list(r) for r in f.matrix]
    nz = next((i, j) for i, row in enumerate(rows) for j, c in enumerate(row) if c != 0)
    rows[nz[0]][nz[1]] = -rows[nz[0]][nz[1]]
    from hopfsmash.hopfcore import LinearMap, check_map
    bad = LinearMap(f.source_dim, f.target_dim, tuple(tuple(r) for r in rows))
    rep2 = check_map(bad, smash18.carrier, target, ("algebra",))
    assert not rep2.ok
    assert rep2.find("algebra_map").witness is not None


def test_build_b_dimensions_and_checks(b54):
    assert b54.wha.dim == 54
    assert b54.report.ok
    for name in ("target_matches_closed_form", "source_matches_closed_form",
                 "target_iso_is_algebra_map", "source_iso_is_antialgebra_map"):
        assert b54.report.find(name).passed, name


def test_build_b_trivial_coefficients(double_z2):
    # A = k: B ~ H as a weak Hopf algebra, in particular Delta_B(1) = 1 (x) 1
    dd, q = double_z2
    m = trivial_module_algebra(dd, pointwise_algebra(1))
    b = build_B(m, q, separability(m))
    assert b.wha.dim == 4
    one = b.wha.algebra.unit_sparse
    assert b.wha.delta_one == sparse_outer(one, one)


def test_build_b_guard(ks3, q_s3):
    adj = adjoint_module_algebra(ks3)
    with pytest.raises(HypothesisFailure):
        build_B(adj, q_s3, separability(adj))


def test_phi_embed(sws18, b54):
    f, image, rep = phi_embed(sws18, b54)
    assert rep.ok
    assert f.rank() == 18
    assert len(image) == 18
    assert rep.find("image_equals_equalizer").passed


def test_phi_trivial_coefficients_is_iso(double_z2):
    dd, q = double_z2
    m = trivial_module_algebra(dd, pointwise_algebra(1))
    sep = separability(m)
    sws = smash_weak_structure(smash_algebra(m), q, sep)
    b = build_B(m, q, sep)
    f, image, rep = phi_embed(sws, b)
    assert rep.ok
    assert f.rank() == 4 == b.wha.dim


def test_rb_in_image_iff_muger_positive(b54, sws18, q_s3, m3):
    _, image, _ = phi_embed(sws18, b54)
    assert rb_in_image_iff_muger(b54, image, q_s3, m3) == (True, True)


def test_rb_in_image_iff_muger_negative(double_mod_z2):
    # kZ2 over D(kZ2): quantum commutative and u-trivial but NOT in the
    # Mueger center, so R_B must fall outside Im phi (x) Im phi
    m, q = double_mod_z2
    sep = separability(m)
    b = build_B(m, q, sep)
    assert b.wha.dim == 16
    sws = smash_weak_structure(smash_algebra(m), q, sep)
    _, image, _ = phi_embed(sws, b)
    assert rb_in_image_iff_muger(b, image, q, m) == (False, False)


def test_case_study_s3(s3_table):
    cs = groupoid_case_study(s3_table, dm.natural_point_action(3))
    assert cs.report.ok
    assert cs.t == 3
    assert len(cs.stabilizer) == 2


def test_case_study_z2_two_points(z2_table):
    cs = groupoid_case_study(z2_table, dm.z2_two_point_action())
    assert cs.report.ok
    assert cs.t == 2
    assert len(cs.stabilizer) == 1
    from hopfsmash.repdim import wedderburn_blocks
    assert wedderburn_blocks(cs.sws.smash.carrier).blocks == (2,)


def test_case_study_single_point(s3_table, ks3):
    cs = groupoid_case_study(s3_table, [[0] for _ in range(6)])
    assert cs.report.ok
    assert cs.t == 1
    assert cs.sws.smash.carrier.mult == ks3.mult


def test_case_study_refuses_intransitive(s3_table):
    # S3 on 3 + 1 points: one fixed point makes the action intransitive
    action = [row + [3] for row in dm.natural_point_action(3)]
    with pytest.raises(HypothesisFailure) as ei:
        groupoid_case_study(s3_table, action)
    assert "transitive-action" in str(ei.value)
    assert ei.value.witness is not None


def test_double_module_algebra_ks3(ks3, double_s3):
    from hopfsmash.modalg import is_quantum_commutative
    m, q = double_module_algebra(ks3, double_s3)
    assert is_quantum_commutative(q, m) == (True, None)


def test_double_module_algebra_trivial():
    h = group_algebra(GroupTable.from_lists(["e"], [[0]]))
    m, q = double_module_algebra(h)
    assert m.A.dim == 1


def test_double_smash_decomposition_kz2(kz2, double_z2):
    rep = double_smash_decomposition(kz2, double_z2)
    assert rep.ok
    assert rep.find("dimension_product").passed
    assert rep.find("C_equals_full_centralizer").passed


def test_double_module_spot_check_kz2(kz2, double_z2):
    assert double_module_spot_check(kz2, double_z2).ok


def test_smash_includes(smash18, m3, ks3):
    av = smash18.include_a({0: F(1)})
    hv = smash18.include_h({1: F(1)})
    prod = smash18.carrier.mul_sparse(av, hv)
    assert prod == {smash18.flat(0, 1): F(1)}
