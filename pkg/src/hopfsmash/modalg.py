"""H-module algebras: action verification, quantum commutativity, the
regular-representation trace functional, the symmetric separability
idempotent, triviality of the Drinfeld-element action, and H-simplicity.

Strong separability is operationalized as invertibility of the trace form of
the left regular representation over the rationals; its Casimir element is
the canonical symmetric separability idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    RAT_ONE,
    RAT_ZERO,
    Tensor3,
    TensorElem,
    basis_vec,
    kernel_basis,
    mat_inverse,
    span_basis,
    transpose,
    vec_dot,
)
from .hopfcore import (
    HopfData,
    StructureAlgebra,
    sp,
    sp_add,
    sparse_outer,
    tensor_mul_sparse,
    unsp,
)
from .report import VerificationReport


@dataclass(frozen=True)
class ModuleAlgebraData:
    """An algebra A with a left H-action tensor action[h][a][b]
    (= coefficient of e_b in h . e_a)."""

    host: HopfData
    A: StructureAlgebra
    action: Tensor3

    def __post_init__(self):
        if self.action.dims != (self.host.dim, self.A.dim, self.A.dim):
            raise ValueError("action tensor shape must be (dim H, dim A, dim A)")
        if all(c == 0 for c in self.A.unit):
            raise ValueError("degenerate carrier: the unit of A is zero")

    def act_sparse(self, h_sp: dict, a_sp: dict) -> dict:
        out: dict = {}
        rows = self.action._rows
        for i, ci in h_sp.items():
            ri = rows[i]
            for j, cj in a_sp.items():
                c = ci * cj
                for k, w in ri[j]:
                    sp_add(out, k, c * w)
        return out

    def act(self, h_vec, a_vec) -> tuple:
        return unsp(self.act_sparse(sp(h_vec), sp(a_vec)), self.A.dim)

    def action_matrix(self, h_vec) -> tuple:
        cols = [self.act(h_vec, basis_vec(self.A.dim, j)) for j in range(self.A.dim)]
        return transpose(tuple(cols))


@dataclass(frozen=True)
class SeparabilityData:
    """Symmetric separability idempotent x and the trace functional alpha."""

    x: TensorElem
    alpha: tuple

    def x_sparse(self) -> dict:
        return {idx: c for idx, c in self.x.items()}


def verify_module_algebra(m: ModuleAlgebraData, subject: str = "module_algebra") -> VerificationReport:
    rep = VerificationReport(subject)
    h, A = m.host, m.A
    nh, na = h.dim, A.dim

    ok, wit = True, None
    for a in range(na):
        ea = {a: RAT_ONE}
        if m.act_sparse(h.algebra.unit_sparse, ea) != ea:
            ok, wit = False, (a,)
            break
    rep.add("action_unital", ok, wit)

    ok, wit = True, None
    for i in range(nh):
        for j in range(nh):
            prod = h.algebra.mul_sparse({i: RAT_ONE}, {j: RAT_ONE})
            for a in range(na):
                ea = {a: RAT_ONE}
                if m.act_sparse(prod, ea) != m.act_sparse({i: RAT_ONE}, m.act_sparse({j: RAT_ONE}, ea)):
                    ok, wit = False, (i, j, a)
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("action_module_law", ok, wit)

    ok, wit = True, None
    for i in range(nh):
        for a in range(na):
            for b in range(na):
                prod = A.mul_sparse({a: RAT_ONE}, {b: RAT_ONE})
                lhs = m.act_sparse({i: RAT_ONE}, prod)
                rhs: dict = {}
                for p, q, c in h.coalgebra.comul_row(i):
                    va = m.act_sparse({p: RAT_ONE}, {a: RAT_ONE})
                    vb = m.act_sparse({q: RAT_ONE}, {b: RAT_ONE})
                    for k, w in A.mul_sparse(va, vb).items():
                        sp_add(rhs, k, c * w)
                if lhs != rhs:
                    ok, wit = False, (i, a, b)
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("measuring", ok, wit)

    ok, wit = True, None
    one_a = A.unit_sparse
    eps = h.counit
    for i in range(nh):
        target = {k: eps[i] * v for k, v in one_a.items()} if eps[i] != 0 else {}
        if m.act_sparse({i: RAT_ONE}, one_a) != target:
            ok, wit = False, (i,)
            break
    rep.add("unit_absorbed", ok, wit)
    return rep


def is_quantum_commutative(q, m: ModuleAlgebraData) -> tuple:
    """a b = (R^2 . b)(R^1 . a) on all basis pairs; returns (bool, witness)."""
    A = m.A
    r_items = list(q.R.items())
    for a in range(A.dim):
        for b in range(A.dim):
            lhs = A.mul_sparse({a: RAT_ONE}, {b: RAT_ONE})
            rhs: dict = {}
            for (r1, r2), c in r_items:
                vb = m.act_sparse({r2: RAT_ONE}, {b: RAT_ONE})
                va = m.act_sparse({r1: RAT_ONE}, {a: RAT_ONE})
                for k, w in A.mul_sparse(vb, va).items():
                    sp_add(rhs, k, c * w)
            if lhs != rhs:
                return False, (a, b)
    return True, None


def u_acts_trivially(q, m: ModuleAlgebraData) -> tuple:
    """u . a = a for all basis a, u the Drinfeld element; (bool, witness)."""
    from .qtriang import drinfeld_element
    u_sp = sp(drinfeld_element(q).u)
    for a in range(m.A.dim):
        ea = {a: RAT_ONE}
        if m.act_sparse(u_sp, ea) != ea:
            return False, (a,)
    return True, None


# ---------------------------------------------------------------------------
# separability
# ---------------------------------------------------------------------------

def regular_trace(A: StructureAlgebra) -> tuple:
    """alpha in A*: the trace of the left regular representation."""
    out = []
    for i in range(A.dim):
        tr = RAT_ZERO
        for c in range(A.dim):
            tr += A.mult.entry(i, c, c)
        out.append(tr)
    return tuple(out)


def separability(m: ModuleAlgebraData) -> SeparabilityData:
    """Trace functional and trace-form Casimir; refuses singular trace forms.

    The returned data satisfies, exactly: x symmetric, a x = x a, m(x) = 1,
    <alpha, x^1> x^2 = 1, dual-basis identities, <alpha, h.a> = eps(h)<alpha, a>,
    and (when S^2 = id) h.x^1 (x) x^2 = x^1 (x) S(h).x^2.
    """
    A = m.A
    n = A.dim
    alpha = regular_trace(A)
    gram = tuple(tuple(vec_dot(alpha, A.mul(basis_vec(n, i), basis_vec(n, j)))
                       for j in range(n)) for i in range(n))
    ginv = mat_inverse(gram)
    if ginv is None:
        raise ValueError("trace form is singular: A is not strongly separable over Q")
    x = TensorElem.from_entries((n, n),
                                (((i, j), ginv[i][j]) for i in range(n) for j in range(n)))
    out = SeparabilityData(x, alpha)
    verify_separability(m, out).require()
    return out


def verify_separability(m: ModuleAlgebraData, s: SeparabilityData) -> VerificationReport:
    rep = VerificationReport("separability")
    A, h = m.A, m.host
    n = A.dim
    x_sp = s.x_sparse()
    alpha = s.alpha

    rep.add("x_symmetric", s.x.swap_legs((1, 0)) == s.x)

    ok, wit = True, None
    for a in range(n):
        lft = tensor_mul_sparse((A, A), sparse_outer({a: RAT_ONE}, A.unit_sparse), x_sp)
        rgt = tensor_mul_sparse((A, A), x_sp, sparse_outer(A.unit_sparse, {a: RAT_ONE}))
        if lft != rgt:
            ok, wit = False, (a,)
            break
    rep.add("casimir_centrality", ok, wit)

    m_x: dict = {}
    for (i, j), c in s.x.items():
        for k, w in A.mul_row(i, j):
            sp_add(m_x, k, c * w)
    rep.add("multiplies_to_unit", m_x == A.unit_sparse)

    # <alpha, x^1> x^2 = 1_A
    acc = [RAT_ZERO] * n
    for (i, j), c in s.x.items():
        acc[j] += c * alpha[i]
    rep.add("alpha_normalization", tuple(acc) == A.unit)

    # dual bases: x^1 <x^2 -> alpha, a> = a for all basis a
    ok, wit = True, None
    for a in range(n):
        acc = [RAT_ZERO] * n
        for (i, j), c in s.x.items():
            acc[i] += c * vec_dot(alpha, A.mul(basis_vec(n, a), basis_vec(n, j)))
        if tuple(acc) != basis_vec(n, a):
            ok, wit = False, (a,)
            break
    rep.add("dual_basis_identity", ok, wit)

    # alpha is H-invariant: <alpha, h . a> = eps(h) <alpha, a>
    ok, wit = True, None
    for i in range(h.dim):
        for a in range(n):
            va = m.act_sparse({i: RAT_ONE}, {a: RAT_ONE})
            val = sum((c * alpha[k] for k, c in va.items()), RAT_ZERO)
            if val != h.counit[i] * alpha[a]:
                ok, wit = False, (i, a)
                break
        if not ok:
            break
    rep.add("alpha_invariant", ok, wit)

    # h . x^1 (x) x^2 = x^1 (x) S(h) . x^2 in the involutory semisimple case
    from .exactlin import identity_mat, mat_eq, mat_mul
    if mat_eq(mat_mul(h.antipode, h.antipode), identity_mat(h.dim)):
        ok, wit = True, None
        for t in range(h.dim):
            lhs: dict = {}
            rhs: dict = {}
            for (i, j), c in s.x.items():
                for k, w in m.act_sparse({t: RAT_ONE}, {i: RAT_ONE}).items():
                    sp_add(lhs, (k, j), c * w)
            st = h.s_sparse({t: RAT_ONE})
            for (i, j), c in s.x.items():
                for k, w in m.act_sparse(st, {j: RAT_ONE}).items():
                    sp_add(rhs, (i, k), c * w)
            if lhs != rhs:
                ok, wit = False, (t,)
                break
        rep.add("antipode_flip_identity", ok, wit)
    return rep


# ---------------------------------------------------------------------------
# H-simplicity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HSimplicityResult:
    kind: str  # certified_simple | not_simple | inconclusive
    witness_ideal: tuple | None = None
    commutant_dim: int | None = None


def _stable_closure(m: ModuleAlgebraData, seed) -> list:
    """Smallest subspace containing seed, closed under both multiplications
    and the H-action."""
    A, h = m.A, m.host
    n = A.dim
    basis = span_basis([seed], n)
    changed = True
    while changed:
        changed = False
        new = list(basis)
        for v in basis:
            vs = sp(v)
            for i in range(n):
                for w in (A.mul_sparse({i: RAT_ONE}, vs), A.mul_sparse(vs, {i: RAT_ONE})):
                    new.append(unsp(w, n))
            for t in range(h.dim):
                new.append(unsp(m.act_sparse({t: RAT_ONE}, vs), n))
        improved = span_basis(new, n)
        if len(improved) > len(basis):
            basis = improved
            changed = True
    return basis


def is_H_simple(m: ModuleAlgebraData) -> HSimplicityResult:
    """Certified simplicity via a 1-dimensional commutant of A as an A#H-module;
    explicit H-stable ideals as not-simple witnesses; inconclusive otherwise."""
    A, h = m.A, m.host
    n = A.dim
    ops = [A.left_mult_matrix(basis_vec(n, i)) for i in range(n)]
    ops += [m.action_matrix(basis_vec(h.dim, t)) for t in range(h.dim)]
    rows = []
    for op in ops:
        # unknown M (n x n), constraint M op - op M = 0, rows indexed by (r, c)
        for r in range(n):
            for c in range(n):
                row = [RAT_ZERO] * (n * n)
                for k in range(n):
                    row[r * n + k] += op[k][c]
                    row[k * n + c] -= op[r][k]
                rows.append(tuple(row))
    commutant = kernel_basis(tuple(rows))
    if len(commutant) == 1:
        return HSimplicityResult("certified_simple", commutant_dim=1)
    for a in range(n):
        closure = _stable_closure(m, basis_vec(n, a))
        if 0 < len(closure) < n:
            return HSimplicityResult("not_simple", witness_ideal=tuple(closure),
                                     commutant_dim=len(commutant))
    return HSimplicityResult("inconclusive", commutant_dim=len(commutant))


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------

def pointwise_algebra(n: int) -> StructureAlgebra:
    """k^n with coordinatewise product."""
    mult = Tensor3.from_entries((n, n, n), ((i, i, i, RAT_ONE) for i in range(n)))
    return StructureAlgebra(n, mult, tuple(RAT_ONE for _ in range(n)))


def permutation_module_algebra(h: HopfData, table, point_action) -> ModuleAlgebraData:
    """k^X over kG: g . e_x = e_{g.x} for a G-action table point_action[g][x]."""
    npts = len(point_action[0])
    A = pointwise_algebra(npts)
    entries = []
    for g in range(table.order):
        for x in range(npts):
            entries.append((g, x, point_action[g][x], RAT_ONE))
    action = Tensor3.from_entries((h.dim, npts, npts), entries)
    m = ModuleAlgebraData(h, A, action)
    verify_module_algebra(m, "permutation_module_algebra").require()
    return m


def adjoint_module_algebra(h: HopfData) -> ModuleAlgebraData:
    """H acting on itself by h .ad x = h_(1) x S(h_(2))."""
    from .qtriang import adjoint_action_tensor
    m = ModuleAlgebraData(h, h.algebra, adjoint_action_tensor(h))
    verify_module_algebra(m, "adjoint_module_algebra").require()
    return m


def trivial_module_algebra(h: HopfData, A: StructureAlgebra) -> ModuleAlgebraData:
    """h . a = eps(h) a."""
    entries = []
    for t in range(h.dim):
        if h.counit[t] == 0:
            continue
        for a in range(A.dim):
            entries.append((t, a, a, h.counit[t]))
    m = ModuleAlgebraData(h, A, Tensor3.from_entries((h.dim, A.dim, A.dim), entries))
    verify_module_algebra(m, "trivial_module_algebra").require()
    return m
