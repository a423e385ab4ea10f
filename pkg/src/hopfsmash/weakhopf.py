"""Weak bialgebras and weak Hopf algebras: axiom verifiers, counital maps,
weak quasi-triangular structures, the almost-triangular equivalences, weak
Hopf morphism checks, and groupoid algebras.

The axiom set is the Boehm-Nill-Szlachanyi one, taken exactly in the form the
smash-product construction proves it: weak comultiplicativity of the unit,
both weak counit identities, and the three antipode axioms through the
counital maps eps_s(h) = 1_(1) eps(h 1_(2)), eps_t(h) = eps(1_(1) h) 1_(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactlin import (
    RAT_ONE,
    RAT_ZERO,
    Tensor3,
    TensorElem,
    basis_vec,
    mat,
    mat_eq,
    mat_mul,
    span_basis,
    in_span,
    vec_dot,
)
from .hopfcore import (
    HopfData,
    StructureAlgebra,
    StructureCoalgebra,
    check_map,
    sp,
    sp_add,
    sparse_outer,
    tensor_mul_sparse,
    verify_algebra,
    verify_coalgebra,
)
from .report import VerificationReport


class WeakHopfData(HopfData):
    """Same carrier as HopfData, held to the weak axioms instead."""

    @staticmethod
    def from_hopf(h: HopfData) -> "WeakHopfData":
        return WeakHopfData(h.algebra, h.coalgebra, h.antipode)

    @cached_property
    def delta_one(self) -> dict:
        return self.coalgebra.comul_sparse(self.algebra.unit_sparse)

    @cached_property
    def _eps_of_prod(self) -> tuple:
        n = self.dim
        eps = self.counit
        return tuple(
            tuple(sum((c * eps[k] for k, c in self.algebra.mul_row(i, j)), RAT_ZERO)
                  for j in range(n))
            for i in range(n))

    @cached_property
    def eps_s(self) -> tuple:
        """Matrix of eps_s(h) = 1_(1) eps(h 1_(2))."""
        n = self.dim
        t = self._eps_of_prod
        cols = []
        for i in range(n):
            v = [RAT_ZERO] * n
            for (a, b), c in self.delta_one.items():
                v[a] += c * t[i][b]
            cols.append(tuple(v))
        return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))

    @cached_property
    def eps_t(self) -> tuple:
        """Matrix of eps_t(h) = eps(1_(1) h) 1_(2)."""
        n = self.dim
        t = self._eps_of_prod
        cols = []
        for i in range(n):
            v = [RAT_ZERO] * n
            for (a, b), c in self.delta_one.items():
                v[b] += c * t[a][i]
            cols.append(tuple(v))
        return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))

    @cached_property
    def source_basis(self) -> tuple:
        from .exactlin import transpose
        return tuple(span_basis(list(transpose(self.eps_s)), self.dim))

    @cached_property
    def target_basis(self) -> tuple:
        from .exactlin import transpose
        return tuple(span_basis(list(transpose(self.eps_t)), self.dim))

    def eps_s_sparse(self, a: dict) -> dict:
        out: dict = {}
        for j, c in a.items():
            for r in range(self.dim):
                v = self.eps_s[r][j]
                if v != 0:
                    sp_add(out, r, c * v)
        return out

    def eps_t_sparse(self, a: dict) -> dict:
        out: dict = {}
        for j, c in a.items():
            for r in range(self.dim):
                v = self.eps_t[r][j]
                if v != 0:
                    sp_add(out, r, c * v)
        return out


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def _comult_multiplicative(alg: StructureAlgebra, coal: StructureCoalgebra):
    n = alg.dim
    for i in range(n):
        for j in range(n):
            lhs: dict = {}
            for m, c in alg.mul_row(i, j):
                for a, b, w in coal.comul_row(m):
                    sp_add(lhs, (a, b), c * w)
            rhs: dict = {}
            for a, b, w in coal.comul_row(i):
                for a2, b2, w2 in coal.comul_row(j):
                    c = w * w2
                    for p, cp in alg.mul_row(a, a2):
                        for q, cq in alg.mul_row(b, b2):
                            sp_add(rhs, (p, q), c * cp * cq)
            if lhs != rhs:
                return False, (i, j)
    return True, None


def verify_weak_bialgebra(w: WeakHopfData, subject: str = "weak_bialgebra") -> VerificationReport:
    """Delta multiplicative, weak unit comultiplicativity (both orders), and
    both weak counit identities on all basis triples."""
    rep = VerificationReport(subject)
    rep.merge(verify_algebra(w.algebra), "algebra.")
    rep.merge(verify_coalgebra(w.coalgebra), "coalgebra.")
    n = w.dim
    alg, coal = w.algebra, w.coalgebra

    ok, wit = _comult_multiplicative(alg, coal)
    rep.add("comult_multiplicative", ok, wit)

    d1 = w.delta_one
    lhs: dict = {}
    for (a, b), c in d1.items():
        for p, q, ww in coal.comul_row(a):
            sp_add(lhs, (p, q, b), c * ww)
    algs3 = (alg, alg, alg)
    one = alg.unit_sparse
    d1_l = {}
    d1_r = {}
    for (a, b), c in d1.items():
        for u, cu in one.items():
            sp_add(d1_l, (a, b, u), c * cu)
            sp_add(d1_r, (u, a, b), c * cu)
    rep.add("unit_weak_comult_order1", lhs == tensor_mul_sparse(algs3, d1_l, d1_r))
    rep.add("unit_weak_comult_order2", lhs == tensor_mul_sparse(algs3, d1_r, d1_l))

    t = w._eps_of_prod
    eps = w.counit
    ok1 = ok2 = True
    wit1 = wit2 = None
    for f in range(n):
        for g in range(n):
            rows_fg = alg.mul_row(f, g)
            for h in range(n):
                total = sum((c * t[m][h] for m, c in rows_fg), RAT_ZERO)
                s1 = RAT_ZERO
                s2 = RAT_ZERO
                for a, b, c in coal.comul_row(g):
                    s1 += c * t[f][a] * t[b][h]
                    s2 += c * t[f][b] * t[a][h]
                if ok1 and s1 != total:
                    ok1, wit1 = False, (f, g, h)
                if ok2 and s2 != total:
                    ok2, wit2 = False, (f, g, h)
            if not ok1 and not ok2:
                break
        if not ok1 and not ok2:
            break
    rep.add("weak_counit_identity_1", ok1, wit1)
    rep.add("weak_counit_identity_2", ok2, wit2)
    return rep


@dataclass(frozen=True)
class CounitalData:
    eps_s: tuple
    eps_t: tuple
    source_basis: tuple
    target_basis: tuple
    report: VerificationReport


def counital_data(w: WeakHopfData) -> CounitalData:
    """Counital maps with exact image bases; checks idempotency, unital
    subalgebra closure, and elementwise commutation of the two images."""
    rep = VerificationReport("counital")
    rep.add("eps_s_idempotent", mat_eq(mat_mul(w.eps_s, w.eps_s), w.eps_s))
    rep.add("eps_t_idempotent", mat_eq(mat_mul(w.eps_t, w.eps_t), w.eps_t))
    src, tgt = w.source_basis, w.target_basis
    rep.add("source_contains_unit", in_span(list(src), w.unit))
    rep.add("target_contains_unit", in_span(list(tgt), w.unit))
    ok, wit = True, None
    for i, u in enumerate(src):
        for j, v in enumerate(src):
            if not in_span(list(src), w.algebra.mul(u, v)):
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    rep.add("source_closed_under_product", ok, wit)
    ok, wit = True, None
    for i, u in enumerate(tgt):
        for j, v in enumerate(tgt):
            if not in_span(list(tgt), w.algebra.mul(u, v)):
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    rep.add("target_closed_under_product", ok, wit)
    ok, wit = True, None
    for i, u in enumerate(src):
        for j, v in enumerate(tgt):
            if w.algebra.mul(u, v) != w.algebra.mul(v, u):
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    rep.add("source_target_commute", ok, wit)
    # standard consequences, as exact matrix identities
    rep.add("eps_t_compose_S", mat_eq(mat_mul(w.eps_t, w.antipode), mat_mul(w.eps_t, w.eps_s)))
    rep.add("S_compose_eps_s", mat_eq(mat_mul(w.antipode, w.eps_s), mat_mul(w.eps_t, w.antipode)))
    return CounitalData(w.eps_s, w.eps_t, src, tgt, rep)


def verify_weak_hopf(w: WeakHopfData, subject: str = "weak_hopf") -> VerificationReport:
    """Weak bialgebra axioms plus the three antipode axioms; reports whether
    S is an anti-algebra / anti-coalgebra map."""
    rep = VerificationReport(subject)
    rep.merge(verify_weak_bialgebra(w), "wba.")
    n = w.dim
    alg, coal = w.algebra, w.coalgebra

    ok_s = ok_t = ok_3 = True
    wit_s = wit_t = wit_3 = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for j, k, c in coal.comul_row(i):
            sj = w.s_sparse({j: RAT_ONE})
            for m, cm in alg.mul_sparse(sj, {k: RAT_ONE}).items():
                sp_add(left, m, c * cm)
            sk = w.s_sparse({k: RAT_ONE})
            for m, cm in alg.mul_sparse({j: RAT_ONE}, sk).items():
                sp_add(right, m, c * cm)
        if ok_s and left != w.eps_s_sparse({i: RAT_ONE}):
            ok_s, wit_s = False, (i,)
        if ok_t and right != w.eps_t_sparse({i: RAT_ONE}):
            ok_t, wit_t = False, (i,)
        triple: dict = {}
        for a, b, k, c in coal.comul2_row(i):
            sa = w.s_sparse({a: RAT_ONE})
            sk = w.s_sparse({k: RAT_ONE})
            mid = alg.mul_sparse(sa, {b: RAT_ONE})
            for m, cm in alg.mul_sparse(mid, sk).items():
                sp_add(triple, m, c * cm)
        if ok_3 and triple != w.s_sparse({i: RAT_ONE}):
            ok_3, wit_3 = False, (i,)
    rep.add("antipode_source", ok_s, wit_s)
    rep.add("antipode_target", ok_t, wit_t)
    rep.add("antipode_triple", ok_3, wit_3)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            lhs = w.s_sparse(alg.mul_sparse({i: RAT_ONE}, {j: RAT_ONE}))
            rhs = alg.mul_sparse(w.s_sparse({j: RAT_ONE}), w.s_sparse({i: RAT_ONE}))
            if lhs != rhs:
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    rep.add("antipode_anti_algebra", ok and w.s_sparse(alg.unit_sparse) == alg.unit_sparse,
            wit, informational=True)
    ok, wit = True, None
    for i in range(n):
        lhs = coal.comul_sparse(w.s_sparse({i: RAT_ONE}))
        rhs: dict = {}
        for a, b, c in coal.comul_row(i):
            for key, cc in sparse_outer(w.s_sparse({b: RAT_ONE}),
                                        w.s_sparse({a: RAT_ONE})).items():
                sp_add(rhs, key, c * cc)
        if lhs != rhs:
            ok, wit = False, (i,)
            break
    eps_ok = all(vec_dot(w.counit, w.s_vec(basis_vec(n, i))) == w.counit[i] for i in range(n))
    rep.add("antipode_anti_coalgebra", ok and eps_ok, wit, informational=True)
    return rep


# ---------------------------------------------------------------------------
# weak quasi-triangular structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeakQTStructure:
    host: WeakHopfData
    Rw: TensorElem
    Rw_bar: TensorElem

    def r_sparse(self) -> dict:
        return {idx: c for idx, c in self.Rw.items()}

    def rbar_sparse(self) -> dict:
        return {idx: c for idx, c in self.Rw_bar.items()}

    def r21_sparse(self) -> dict:
        return {(b, a): c for (a, b), c in self.Rw.items()}


def verify_weak_qt(wq: WeakQTStructure, subject: str = "weak_qt") -> VerificationReport:
    rep = VerificationReport(subject)
    w = wq.host
    alg, coal = w.algebra, w.coalgebra
    algs2 = (alg, alg)
    r = wq.r_sparse()
    rbar = wq.rbar_sparse()
    d1 = w.delta_one
    d1cop = {(b, a): c for (a, b), c in d1.items()}
    rep.add("rbar_r_is_delta_one", tensor_mul_sparse(algs2, rbar, r) == d1)
    rep.add("r_rbar_is_delta_cop_one", tensor_mul_sparse(algs2, r, rbar) == d1cop)

    ok, wit = True, None
    for i in range(w.dim):
        dlt = {(a, b): c for a, b, c in coal.comul_row(i)}
        cop = {(b, a): c for a, b, c in coal.comul_row(i)}
        if tensor_mul_sparse(algs2, cop, r) != tensor_mul_sparse(algs2, r, dlt):
            ok, wit = False, (i,)
            break
    rep.add("intertwines_comult", ok, wit)

    algs3 = (alg, alg, alg)
    one = alg.unit_sparse
    r13: dict = {}
    r23: dict = {}
    r12: dict = {}
    for (a, b), c in r.items():
        for u, cu in one.items():
            sp_add(r13, (a, u, b), c * cu)
            sp_add(r23, (u, a, b), c * cu)
            sp_add(r12, (a, b, u), c * cu)
    lhs: dict = {}
    for (a, b), c in r.items():
        for j, k, ww in coal.comul_row(a):
            sp_add(lhs, (j, k, b), c * ww)
    rep.add("delta_tensor_id", lhs == tensor_mul_sparse(algs3, r13, r23))
    lhs = {}
    for (a, b), c in r.items():
        for j, k, ww in coal.comul_row(b):
            sp_add(lhs, (a, j, k), c * ww)
    rep.add("id_tensor_delta", lhs == tensor_mul_sparse(algs3, r13, r12))

    corner = tensor_mul_sparse(algs2, tensor_mul_sparse(algs2, d1cop, r), d1)
    rep.add("corner_support", corner == r, informational=True)
    return rep


def almost_triangular_wha_report(wq: WeakQTStructure) -> VerificationReport:
    """Conditions (2)-(6) of the almost-triangular equivalence, evaluated
    independently and checked for mutual consistency."""
    rep = VerificationReport("almost_triangular_wha")
    w = wq.host
    n = w.dim
    alg = w.algebra
    algs2 = (alg, alg)
    z = tensor_mul_sparse(algs2, wq.r21_sparse(), wq.r_sparse())

    hs = list(w.source_basis)
    ht = list(w.target_basis)
    c_hs = alg.centralizer_basis(hs)
    cc_hs = alg.centralizer_basis(c_hs)
    c_ht = alg.centralizer_basis(ht)
    cc_ht = alg.centralizer_basis(c_ht)

    zmat = [[RAT_ZERO] * n for _ in range(n)]
    for (a, b), c in z.items():
        zmat[a][b] = c
    cond2 = all(in_span(cc_hs, tuple(zmat[a][b] for a in range(n))) for b in range(n))
    cond3 = all(in_span(cc_ht, tuple(zmat[a][b] for b in range(n))) for a in range(n))
    cond4 = cond2 and cond3
    rep.add("cond2_z_in_ccHs_tensor_H", cond2, informational=True)
    rep.add("cond3_z_in_H_tensor_ccHt", cond3, informational=True)
    rep.add("cond4_both", cond4, informational=True)

    from .qtriang import adjoint_action_tensor
    ad = adjoint_action_tensor(w)
    r_items = list(wq.Rw.items())
    d1 = w.delta_one
    cond5, wit5 = True, None
    for bvec in c_hs:
        b_sp = sp(bvec)
        lhs: dict = {}
        for (a1, b1), c1 in r_items:
            for (a2, b2), c2 in r_items:
                hh = alg.mul_sparse({b2: RAT_ONE}, {a1: RAT_ONE})
                adb: dict = {}
                for m, cm in hh.items():
                    for t, ct in b_sp.items():
                        for k, ck in ad.row(m, t):
                            sp_add(adb, k, cm * ct * ck)
                hh2 = alg.mul_sparse({a2: RAT_ONE}, {b1: RAT_ONE})
                for key, c in sparse_outer(adb, hh2).items():
                    sp_add(lhs, key, c1 * c2 * c)
        rhs: dict = {}
        for (a, b), c in d1.items():
            adb = {}
            for t, ct in b_sp.items():
                for k, ck in ad.row(a, t):
                    sp_add(adb, k, ct * ck)
            for m, cm in adb.items():
                sp_add(rhs, (m, b), c * cm)
        if lhs != rhs:
            cond5, wit5 = False, None
            break
    rep.add("cond5_cHs_in_muger_center", cond5, wit5, informational=True)

    cond6, wit6 = True, None
    for i in range(n):
        for j in range(n):
            corner = tensor_mul_sparse(algs2, tensor_mul_sparse(algs2, d1, {(i, j): RAT_ONE}), d1)
            if tensor_mul_sparse(algs2, z, corner) != tensor_mul_sparse(algs2, corner, z):
                cond6, wit6 = False, (i, j)
                break
        if not cond6:
            break
    rep.add("cond6_z_central_in_corner", cond6, wit6, informational=True)

    agree = cond2 == cond3 == cond4 == cond5 == cond6
    rep.add("conditions_agree", agree,
            None if agree else (cond2, cond3, cond4, cond5, cond6))
    rep.add("almost_triangular", cond6, informational=True)
    return rep


def check_wha_morphism(f, src: WeakHopfData, dst: WeakHopfData) -> VerificationReport:
    """Algebra map + coalgebra map + antipode-commuting + injective."""
    return check_map(f, src, dst, ("algebra", "coalgebra", "antipode", "injective"))


# ---------------------------------------------------------------------------
# groupoids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupoidData:
    """Finite groupoid: morphisms with source/target, partial composition."""

    n_objects: int
    sources: tuple
    targets: tuple
    compose: tuple   # compose[i][j] = index of m_i after m_j, or None
    identities: tuple
    inverses: tuple

    @property
    def n_morphisms(self) -> int:
        return len(self.sources)

    def validate(self) -> None:
        n = self.n_morphisms
        for i in range(n):
            for j in range(n):
                defined = self.sources[i] == self.targets[j]
                if (self.compose[i][j] is not None) != defined:
                    raise ValueError(f"composability pattern broken at {(i, j)}")
                if defined:
                    k = self.compose[i][j]
                    if self.sources[k] != self.sources[j] or self.targets[k] != self.targets[i]:
                        raise ValueError(f"composite endpoints broken at {(i, j)}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    ij = self.compose[i][j]
                    jk = self.compose[j][k]
                    left = self.compose[ij][k] if ij is not None and jk is not None else None
                    right = self.compose[i][jk] if ij is not None and jk is not None else None
                    if (ij is None) != (jk is None):
                        continue
                    if ij is not None and left != right:
                        raise ValueError(f"groupoid not associative at {(i, j, k)}")
        if len(self.identities) != self.n_objects:
            raise ValueError("one identity per object required")
        for o, e in enumerate(self.identities):
            if self.sources[e] != o or self.targets[e] != o:
                raise ValueError(f"identity of object {o} has wrong endpoints")
        for i in range(n):
            inv = self.inverses[i]
            if self.compose[i][inv] != self.identities[self.targets[i]]:
                raise ValueError(f"inverse law broken at {i}")
            if self.compose[inv][i] != self.identities[self.sources[i]]:
                raise ValueError(f"inverse law broken at {i}")


def groupoid_wha(g: GroupoidData) -> WeakHopfData:
    """Groupoid algebra: product = composition or 0, Delta(m) = m (x) m,
    eps(m) = 1, S(m) = m^{-1}; verified as a weak Hopf algebra."""
    g.validate()
    n = g.n_morphisms
    entries = []
    for i in range(n):
        for j in range(n):
            k = g.compose[i][j]
            if k is not None:
                entries.append((i, j, k, RAT_ONE))
    mult = Tensor3.from_entries((n, n, n), entries)
    unit = [RAT_ZERO] * n
    for e in g.identities:
        unit[e] = RAT_ONE
    comult = Tensor3.from_entries((n, n, n), ((i, i, i, RAT_ONE) for i in range(n)))
    counit = tuple(RAT_ONE for _ in range(n))
    anti = [[RAT_ZERO] * n for _ in range(n)]
    for j in range(n):
        anti[g.inverses[j]][j] = RAT_ONE
    w = WeakHopfData(StructureAlgebra(n, mult, tuple(unit)),
                     StructureCoalgebra(n, comult, counit),
                     mat(anti))
    verify_weak_hopf(w, "groupoid_wha").require()
    return w


def pair_groupoid(t: int) -> GroupoidData:
    """Morphisms (i, j): j -> i; the groupoid algebra is M_t(k)."""
    morphs = [(i, j) for i in range(t) for j in range(t)]
    idx = {m: a for a, m in enumerate(morphs)}
    compose = tuple(
        tuple(idx[(i, l)] if j == k else None for (k, l) in morphs)
        for (i, j) in morphs)
    return GroupoidData(
        n_objects=t,
        sources=tuple(j for (_, j) in morphs),
        targets=tuple(i for (i, _) in morphs),
        compose=compose,
        identities=tuple(idx[(o, o)] for o in range(t)),
        inverses=tuple(idx[(j, i)] for (i, j) in morphs),
    )


def one_object_groupoid(table) -> GroupoidData:
    """A group, seen as a groupoid on one object."""
    n = table.order
    return GroupoidData(
        n_objects=1,
        sources=(0,) * n,
        targets=(0,) * n,
        compose=tuple(tuple(table.table[i][j] for j in range(n)) for i in range(n)),
        identities=(table.identity,),
        inverses=tuple(table.inv(i) for i in range(n)),
    )


def transformation_groupoid(table, point_action) -> GroupoidData:
    """G x X with (g, x): x -> g.x and (g, x) o (h, y) = (gh, y) when x = h.y."""
    npts = len(point_action[0])
    morphs = [(g, x) for g in range(table.order) for x in range(npts)]
    idx = {m: a for a, m in enumerate(morphs)}
    compose = []
    for (g, x) in morphs:
        row = []
        for (h, y) in morphs:
            if x == point_action[h][y]:
                row.append(idx[(table.table[g][h], y)])
            else:
                row.append(None)
        compose.append(tuple(row))
    return GroupoidData(
        n_objects=npts,
        sources=tuple(x for (_, x) in morphs),
        targets=tuple(point_action[g][x] for (g, x) in morphs),
        compose=tuple(compose),
        identities=tuple(idx[(table.identity, x)] for x in range(npts)),
        inverses=tuple(idx[(table.inv(g), point_action[g][x])] for (g, x) in morphs),
    )
