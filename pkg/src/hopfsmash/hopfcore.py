"""Structure-constant algebras, coalgebras, bialgebras and Hopf algebras.

Everything is a finite-dimensional vector space over the exact rationals with
structure tensors in the exactlin conventions.  A matrix M encodes the linear
map e_c |-> sum_r M[r][c] e_r.  Elements travel either as dense tuples or as
sparse {index: Fraction} dicts; the sparse form is what the axiom loops use.

Pairing conventions (fixed once):
    <a -> f, b> = <f, b a>        left action of an algebra on its dual
    <f <- a, b> = <f, a b>        right action of an algebra on its dual
    f -> c = c_(1) <f, c_(2)>     left hit of the dual on a coalgebra
    c <- f = <f, c_(1)> c_(2)     right hit of the dual on a coalgebra
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exactlin import (
    RAT_ONE,
    RAT_ZERO,
    DimensionMismatch,
    Tensor3,
    TensorElem,
    basis_vec,
    identity_mat,
    kernel_basis,
    mat,
    mat_eq,
    mat_inverse,
    mat_mul,
    mat_shape,
    mat_vec,
    transpose,
    vec_dot,
)
from .report import VerificationReport


class NotSemisimple(ValueError):
    """Integral machinery detected a non-semisimple input."""


# ---------------------------------------------------------------------------
# sparse element helpers
# ---------------------------------------------------------------------------

def sp(v) -> dict:
    """Dense vector -> sparse {index: coeff}."""
    return {i: c for i, c in enumerate(v) if c != 0}


def unsp(d: dict, n: int) -> tuple:
    out = [RAT_ZERO] * n
    for i, c in d.items():
        out[i] = c
    return tuple(out)


def sp_add(acc: dict, key, c) -> None:
    w = acc.get(key, RAT_ZERO) + c
    if w == 0:
        acc.pop(key, None)
    else:
        acc[key] = w


def sp_scale(d: dict, c: Fraction) -> dict:
    if c == 0:
        return {}
    return {k: c * v for k, v in d.items()}


def sp_equal(a: dict, b: dict) -> bool:
    return a == b


# ---------------------------------------------------------------------------
# carriers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureAlgebra:
    """An algebra given by its multiplication tensor and unit vector."""

    dim: int
    mult: Tensor3
    unit: tuple

    def __post_init__(self):
        if self.mult.dims != (self.dim, self.dim, self.dim):
            raise DimensionMismatch("multiplication tensor has wrong shape")
        if len(self.unit) != self.dim:
            raise DimensionMismatch("unit vector has wrong length")

    def mul_row(self, i: int, j: int):
        return self.mult.row(i, j)

    def mul_sparse(self, a: dict, b: dict) -> dict:
        out: dict = {}
        rows = self.mult._rows
        for i, ca in a.items():
            ri = rows[i]
            for j, cb in b.items():
                c = ca * cb
                for k, w in ri[j]:
                    sp_add(out, k, c * w)
        return out

    def mul(self, u, v) -> tuple:
        return unsp(self.mul_sparse(sp(u), sp(v)), self.dim)

    @cached_property
    def unit_sparse(self) -> dict:
        return sp(self.unit)

    def left_mult_matrix(self, v) -> tuple:
        cols = [self.mul(v, basis_vec(self.dim, c)) for c in range(self.dim)]
        return transpose(tuple(cols))

    def right_mult_matrix(self, v) -> tuple:
        cols = [self.mul(basis_vec(self.dim, c), v) for c in range(self.dim)]
        return transpose(tuple(cols))

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mul_row(i, j) != self.mul_row(j, i):
                    return False
        return True

    def centralizer_basis(self, vectors) -> list:
        """Exact basis of {w : w v = v w for all given v}."""
        rows = []
        for v in vectors:
            diff = [
                tuple(x - y for x, y in zip(self.mul(basis_vec(self.dim, c), v),
                                            self.mul(v, basis_vec(self.dim, c))))
                for c in range(self.dim)
            ]
            rows.extend(transpose(tuple(diff)))
        if not rows:
            return [basis_vec(self.dim, i) for i in range(self.dim)]
        return kernel_basis(tuple(rows))

    def center_basis(self) -> list:
        return self.centralizer_basis([basis_vec(self.dim, i) for i in range(self.dim)])


@dataclass(frozen=True)
class StructureCoalgebra:
    """A coalgebra given by its comultiplication tensor and counit vector."""

    dim: int
    comult: Tensor3
    counit: tuple

    def __post_init__(self):
        if self.comult.dims != (self.dim, self.dim, self.dim):
            raise DimensionMismatch("comultiplication tensor has wrong shape")
        if len(self.counit) != self.dim:
            raise DimensionMismatch("counit vector has wrong length")

    @cached_property
    def _rows(self):
        """Per-basis Sweedler rows: comul_row(i) = ((j, k, c), ...)."""
        rows = []
        for i in range(self.dim):
            acc = []
            for j in range(self.dim):
                for k, c in self.comult.row(i, j):
                    acc.append((j, k, c))
            rows.append(tuple(acc))
        return tuple(rows)

    def comul_row(self, i: int):
        return self._rows[i]

    def comul_sparse(self, a: dict) -> dict:
        out: dict = {}
        for i, c in a.items():
            for j, k, w in self._rows[i]:
                sp_add(out, (j, k), c * w)
        return out

    def counit_of(self, v) -> Fraction:
        return vec_dot(self.counit, v)

    @cached_property
    def _rows2(self):
        """Two-fold Sweedler rows ((a, b, c, coeff), ...) via (Delta x id)Delta."""
        rows = []
        for i in range(self.dim):
            acc: dict = {}
            for j, k, c in self._rows[i]:
                for a, b, w in self._rows[j]:
                    sp_add(acc, (a, b, k), c * w)
            rows.append(tuple((a, b, k, c) for (a, b, k), c in acc.items()))
        return tuple(rows)

    def comul2_row(self, i: int):
        return self._rows2[i]


@dataclass(frozen=True)
class LinearMap:
    """A linear map between based spaces, as a target x source matrix."""

    source_dim: int
    target_dim: int
    matrix: tuple

    def __post_init__(self):
        if mat_shape(self.matrix) != (self.target_dim, self.source_dim):
            raise DimensionMismatch("matrix shape disagrees with declared dims")

    def apply(self, v) -> tuple:
        return mat_vec(self.matrix, v)

    def compose(self, other: "LinearMap") -> "LinearMap":
        if other.target_dim != self.source_dim:
            raise DimensionMismatch("maps do not compose")
        return LinearMap(other.source_dim, self.target_dim,
                         mat_mul(self.matrix, other.matrix))

    def is_identity(self) -> bool:
        return (self.source_dim == self.target_dim
                and mat_eq(self.matrix, identity_mat(self.source_dim)))

    def rank(self) -> int:
        from .exactlin import rank
        return rank(self.matrix)

    def image_basis(self) -> list:
        from .exactlin import span_basis
        cols = transpose(self.matrix)
        return span_basis(list(cols), self.target_dim)


@dataclass(frozen=True)
class HopfData:
    """Algebra + coalgebra on one carrier, with an antipode matrix."""

    algebra: StructureAlgebra
    coalgebra: StructureCoalgebra
    antipode: tuple

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatch("algebra and coalgebra dimensions differ")
        if mat_shape(self.antipode) != (self.dim, self.dim):
            raise DimensionMismatch("antipode matrix has wrong shape")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> Tensor3:
        return self.algebra.mult

    @property
    def unit(self) -> tuple:
        return self.algebra.unit

    @property
    def comult(self) -> Tensor3:
        return self.coalgebra.comult

    @property
    def counit(self) -> tuple:
        return self.coalgebra.counit

    @cached_property
    def antipode_cols(self) -> tuple:
        """S(e_j) as sparse columns."""
        n = self.dim
        return tuple(
            tuple((r, self.antipode[r][j]) for r in range(n) if self.antipode[r][j] != 0)
            for j in range(n))

    @cached_property
    def antipode_inv(self):
        return mat_inverse(self.antipode)

    def s_sparse(self, a: dict) -> dict:
        out: dict = {}
        for j, c in a.items():
            for r, w in self.antipode_cols[j]:
                sp_add(out, r, c * w)
        return out

    def s_vec(self, v) -> tuple:
        return mat_vec(self.antipode, v)


@dataclass(frozen=True)
class IntegralPair:
    """A two-sided integral in H and a normalized integral of the dual."""

    Lambda: tuple
    lam: tuple


# ---------------------------------------------------------------------------
# tensor-power products of sparse elements
# ---------------------------------------------------------------------------

def tensor_mul_sparse(algs, u: dict, v: dict) -> dict:
    """Product in A_1 (x) ... (x) A_m of sparse elements keyed by index tuples."""
    out: dict = {}
    for ka, ca in u.items():
        for kb, cb in v.items():
            terms = [((), ca * cb)]
            for alg, ia, ib in zip(algs, ka, kb):
                row = alg.mul_row(ia, ib)
                if not row:
                    terms = []
                    break
                terms = [(key + (k,), c * w) for key, c in terms for k, w in row]
            for key, c in terms:
                sp_add(out, key, c)
    return out


def tensor_unit_sparse(algs) -> dict:
    out: dict = {(): RAT_ONE}
    res: dict = out
    for alg in algs:
        nxt: dict = {}
        for key, c in res.items():
            for i, w in alg.unit_sparse.items():
                nxt[key + (i,)] = c * w
        res = nxt
    return res


def sparse_outer(a: dict, b: dict) -> dict:
    """Outer product of tuple-keyed (or int-keyed) sparse elements."""
    out: dict = {}
    for ka, ca in a.items():
        ta = ka if isinstance(ka, tuple) else (ka,)
        for kb, cb in b.items():
            tb = kb if isinstance(kb, tuple) else (kb,)
            sp_add(out, ta + tb, ca * cb)
    return out


# ---------------------------------------------------------------------------
# dual constructions and pairing actions
# ---------------------------------------------------------------------------

def convolution_algebra(coal: StructureCoalgebra) -> StructureAlgebra:
    """The dual algebra C* with <f * g, c> = <f, c_(1)><g, c_(2)>."""
    n = coal.dim
    entries = []
    for i in range(n):
        for j, k, c in coal.comul_row(i):
            entries.append((j, k, i, c))
    return StructureAlgebra(n, Tensor3.from_entries((n, n, n), entries), coal.counit)


def dual_coalgebra(alg: StructureAlgebra) -> StructureCoalgebra:
    """The dual coalgebra A* with <Delta f, a (x) b> = <f, a b>."""
    n = alg.dim
    entries = []
    for j in range(n):
        for k in range(n):
            for i, c in alg.mul_row(j, k):
                entries.append((i, j, k, c))
    return StructureCoalgebra(n, Tensor3.from_entries((n, n, n), entries), alg.unit)


def harpoon_left(alg: StructureAlgebra, a, f) -> tuple:
    """a -> f with <a -> f, b> = <f, b a>."""
    return tuple(vec_dot(f, alg.mul(basis_vec(alg.dim, b), a)) for b in range(alg.dim))


def harpoon_right(alg: StructureAlgebra, f, a) -> tuple:
    """f <- a with <f <- a, b> = <f, a b>."""
    return tuple(vec_dot(f, alg.mul(a, basis_vec(alg.dim, b))) for b in range(alg.dim))


def hit_left(coal: StructureCoalgebra, f, c) -> tuple:
    """f -> c = c_(1) <f, c_(2)>."""
    out = [RAT_ZERO] * coal.dim
    for i, ci in enumerate(c):
        if ci == 0:
            continue
        for j, k, w in coal.comul_row(i):
            out[j] += ci * w * f[k]
    return tuple(out)


def hit_right(coal: StructureCoalgebra, c, f) -> tuple:
    """c <- f = <f, c_(1)> c_(2)."""
    out = [RAT_ZERO] * coal.dim
    for i, ci in enumerate(c):
        if ci == 0:
            continue
        for j, k, w in coal.comul_row(i):
            out[k] += ci * w * f[j]
    return tuple(out)


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def verify_algebra(a: StructureAlgebra, subject: str = "algebra") -> VerificationReport:
    """Left/right unit laws and associativity on every basis triple."""
    rep = VerificationReport(subject)
    n = a.dim
    u = a.unit_sparse
    ok, wit = True, None
    for i in range(n):
        e = {i: RAT_ONE}
        if a.mul_sparse(u, e) != e or a.mul_sparse(e, u) != e:
            ok, wit = False, (i,)
            break
    rep.add("unit_law", ok, wit)
    ok, wit = True, None
    rows = a.mult._rows
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            rij = ri[j]
            rj = rows[j]
            for k in range(n):
                lhs: dict = {}
                for m, c in rij:
                    for t, w in rows[m][k]:
                        sp_add(lhs, t, c * w)
                rhs: dict = {}
                for m, c in rj[k]:
                    for t, w in ri[m]:
                        sp_add(rhs, t, c * w)
                if lhs != rhs:
                    ok, wit = False, (i, j, k)
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("associativity", ok, wit)
    return rep


def verify_coalgebra(c: StructureCoalgebra, subject: str = "coalgebra") -> VerificationReport:
    rep = VerificationReport(subject)
    n = c.dim
    eps = c.counit
    ok, wit = True, None
    for i in range(n):
        left = [RAT_ZERO] * n
        right = [RAT_ZERO] * n
        for j, k, w in c.comul_row(i):
            left[k] += w * eps[j]
            right[j] += w * eps[k]
        if tuple(left) != basis_vec(n, i) or tuple(right) != basis_vec(n, i):
            ok, wit = False, (i,)
            break
    rep.add("counit_law", ok, wit)
    ok, wit = True, None
    for i in range(n):
        lhs: dict = {}
        rhs: dict = {}
        for j, k, w in c.comul_row(i):
            for p, q, w2 in c.comul_row(j):
                sp_add(lhs, (p, q, k), w * w2)
            for p, q, w2 in c.comul_row(k):
                sp_add(rhs, (j, p, q), w * w2)
        if lhs != rhs:
            ok, wit = False, (i,)
            break
    rep.add("coassociativity", ok, wit)
    return rep


def _comul_of_product(h: HopfData, i: int, j: int) -> dict:
    out: dict = {}
    for m, c in h.algebra.mul_row(i, j):
        for a, b, w in h.coalgebra.comul_row(m):
            sp_add(out, (a, b), c * w)
    return out


def _comul_product(h: HopfData, i: int, j: int) -> dict:
    out: dict = {}
    alg = h.algebra
    for a, b, w in h.coalgebra.comul_row(i):
        for a2, b2, w2 in h.coalgebra.comul_row(j):
            c = w * w2
            for p, cp in alg.mul_row(a, a2):
                for q, cq in alg.mul_row(b, b2):
                    sp_add(out, (p, q), c * cp * cq)
    return out


def verify_hopf(h: HopfData, subject: str = "hopf") -> VerificationReport:
    """Bialgebra compatibilities and the antipode convolution identities."""
    rep = VerificationReport(subject)
    rep.merge(verify_algebra(h.algebra), "algebra.")
    rep.merge(verify_coalgebra(h.coalgebra), "coalgebra.")
    n = h.dim

    unit2 = sparse_outer(h.algebra.unit_sparse, h.algebra.unit_sparse)
    rep.add("comult_unital", h.coalgebra.comul_sparse(h.algebra.unit_sparse) == unit2)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            if _comul_of_product(h, i, j) != _comul_product(h, i, j):
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    rep.add("comult_multiplicative", ok, wit)

    eps = h.counit
    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            val = sum((c * eps[k] for k, c in h.algebra.mul_row(i, j)), RAT_ZERO)
            if val != eps[i] * eps[j]:
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    rep.add("counit_multiplicative", ok, wit)
    rep.add("counit_unital", h.coalgebra.counit_of(h.unit) == 1)

    u = h.algebra.unit_sparse
    ok_l = ok_r = True
    wit_l = wit_r = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for j, k, w in h.coalgebra.comul_row(i):
            for r, ws in h.antipode_cols[j]:
                for t, wm in h.algebra.mul_row(r, k):
                    sp_add(left, t, w * ws * wm)
            for r, ws in h.antipode_cols[k]:
                for t, wm in h.algebra.mul_row(j, r):
                    sp_add(right, t, w * ws * wm)
        target = sp_scale(u, eps[i])
        if ok_l and left != target:
            ok_l, wit_l = False, (i,)
        if ok_r and right != target:
            ok_r, wit_r = False, (i,)
    rep.add("antipode_left", ok_l, wit_l)
    rep.add("antipode_right", ok_r, wit_r)

    rep.add("antipode_involutive",
            mat_eq(mat_mul(h.antipode, h.antipode), identity_mat(n)),
            informational=True)
    return rep


def check_map(f: LinearMap, src, dst, kinds) -> VerificationReport:
    """Per-kind morphism checks; kinds within {algebra, coalgebra, antipode, injective}."""
    rep = VerificationReport("map")
    kinds = set(kinds)
    if "algebra" in kinds:
        sa = src.algebra if isinstance(src, HopfData) else src
        da = dst.algebra if isinstance(dst, HopfData) else dst
        ok, wit = True, None
        for i in range(sa.dim):
            fi = f.apply(basis_vec(sa.dim, i))
            for j in range(sa.dim):
                fj = f.apply(basis_vec(sa.dim, j))
                if f.apply(sa.mul(basis_vec(sa.dim, i), basis_vec(sa.dim, j))) != da.mul(fi, fj):
                    ok, wit = False, (i, j)
                    break
            if not ok:
                break
        rep.add("algebra_map", ok, wit)
        rep.add("unit_preserved", f.apply(sa.unit) == da.unit)
    if "coalgebra" in kinds:
        sc = src.coalgebra if isinstance(src, HopfData) else src
        dc = dst.coalgebra if isinstance(dst, HopfData) else dst
        ok, wit = True, None
        for i in range(sc.dim):
            lhs = dc.comul_sparse(sp(f.apply(basis_vec(sc.dim, i))))
            rhs: dict = {}
            for j, k, w in sc.comul_row(i):
                fj = f.apply(basis_vec(sc.dim, j))
                fk = f.apply(basis_vec(sc.dim, k))
                for a, ca in sp(fj).items():
                    for b, cb in sp(fk).items():
                        sp_add(rhs, (a, b), w * ca * cb)
            if lhs != rhs:
                ok, wit = False, (i,)
                break
        rep.add("coalgebra_map", ok, wit)
        ok, wit = True, None
        for i in range(sc.dim):
            if dc.counit_of(f.apply(basis_vec(sc.dim, i))) != sc.counit[i]:
                ok, wit = False, (i,)
                break
        rep.add("counit_preserved", ok, wit)
    if "antipode" in kinds:
        ok = mat_eq(mat_mul(f.matrix, src.antipode), mat_mul(dst.antipode, f.matrix))
        rep.add("antipode_commuting", ok)
    if "injective" in kinds:
        rep.add("injective", not kernel_basis(f.matrix))
    return rep


# ---------------------------------------------------------------------------
# group algebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupTable:
    """A finite group as a multiplication table over element names."""

    elements: tuple
    table: tuple

    @staticmethod
    def from_lists(elements, table) -> "GroupTable":
        return GroupTable(tuple(elements), tuple(tuple(r) for r in table))

    @property
    def order(self) -> int:
        return len(self.elements)

    def validate(self) -> None:
        n = self.order
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("group table is not square")
        if any(x not in range(n) for r in self.table for x in r):
            raise ValueError("group table entries out of range")
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("group table has no identity")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise ValueError(f"group table not associative at {(i, j, k)}")
        for i in range(n):
            if not any(self.table[i][j] == ident for j in range(n)):
                raise ValueError(f"element {i} has no inverse")

    @cached_property
    def identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        raise ValueError("no identity")

    def inv(self, i: int) -> int:
        for j in range(self.order):
            if self.table[i][j] == self.identity:
                return j
        raise ValueError(f"element {i} has no inverse")

    def conjugacy_classes(self) -> list:
        n = self.order
        seen = [False] * n
        classes = []
        for i in range(n):
            if seen[i]:
                continue
            cls = set()
            for g in range(n):
                cls.add(self.table[self.table[g][i]][self.inv(g)])
            for x in cls:
                seen[x] = True
            classes.append(sorted(cls))
        return classes


def group_algebra(table: GroupTable) -> HopfData:
    """kG: basis = group elements, Delta(g) = g (x) g, S(g) = g^{-1}."""
    table.validate()
    n = table.order
    mult = Tensor3.from_entries((n, n, n),
                                ((i, j, table.table[i][j], RAT_ONE)
                                 for i in range(n) for j in range(n)))
    unit = basis_vec(n, table.identity)
    comult = Tensor3.from_entries((n, n, n), ((i, i, i, RAT_ONE) for i in range(n)))
    counit = tuple(RAT_ONE for _ in range(n))
    anti = [[RAT_ZERO] * n for _ in range(n)]
    for j in range(n):
        anti[table.inv(j)][j] = RAT_ONE
    h = HopfData(StructureAlgebra(n, mult, unit),
                 StructureCoalgebra(n, comult, counit),
                 mat(anti))
    verify_hopf(h, "group_algebra").require()
    return h


# ---------------------------------------------------------------------------
# duals and opposites
# ---------------------------------------------------------------------------

def dual_hopf(h: HopfData) -> HopfData:
    """H*: convolution algebra, dual coalgebra, transposed antipode."""
    out = HopfData(convolution_algebra(h.coalgebra),
                   dual_coalgebra(h.algebra),
                   transpose(h.antipode))
    verify_hopf(out, "dual_hopf").require()
    return out


def opposites(h: HopfData, which: str) -> HopfData:
    """H^op, H^cop or H^opcop, with the matching antipode."""
    if which not in ("op", "cop", "opcop"):
        raise ValueError("which must be 'op', 'cop' or 'opcop'")
    n = h.dim
    alg, coal, anti = h.algebra, h.coalgebra, h.antipode
    if which in ("op", "opcop"):
        entries = [(j, i, k, c) for i in range(n) for j in range(n)
                   for k, c in h.algebra.mul_row(i, j)]
        alg = StructureAlgebra(n, Tensor3.from_entries((n, n, n), entries), h.unit)
    if which in ("cop", "opcop"):
        entries = [(i, k, j, c) for i in range(n) for j, k, c in h.coalgebra.comul_row(i)]
        coal = StructureCoalgebra(n, Tensor3.from_entries((n, n, n), entries), h.counit)
    if which in ("op", "cop"):
        anti = h.antipode_inv
        if anti is None:
            raise ValueError("antipode is not invertible; H^op/H^cop need S^{-1}")
    out = HopfData(alg, coal, anti)
    verify_hopf(out, f"opposites_{which}").require()
    return out


# ---------------------------------------------------------------------------
# integrals
# ---------------------------------------------------------------------------

def integrals(h: HopfData) -> IntegralPair:
    """Two-sided integral Lambda and dual integral lambda with <lambda, 1> = 1,
    <lambda, Lambda> = 1 (hence Lambda -> lambda = epsilon)."""
    n = h.dim
    eps = h.counit
    rows = []
    for i in range(n):
        e = basis_vec(n, i)
        lm = h.algebra.left_mult_matrix(e)
        rm = h.algebra.right_mult_matrix(e)
        for r in range(n):
            rows.append(tuple(lm[r][c] - (eps[i] if r == c else RAT_ZERO) for c in range(n)))
            rows.append(tuple(rm[r][c] - (eps[i] if r == c else RAT_ZERO) for c in range(n)))
    ker = kernel_basis(tuple(rows))
    if len(ker) != 1:
        raise NotSemisimple(f"integral space of H has dimension {len(ker)}, expected 1")
    Lam = ker[0]

    dual = convolution_algebra(h.coalgebra)
    one_coords = h.unit
    rows = []
    for i in range(n):
        e = basis_vec(n, i)
        lm = dual.left_mult_matrix(e)
        rm = dual.right_mult_matrix(e)
        for r in range(n):
            rows.append(tuple(lm[r][c] - (one_coords[i] if r == c else RAT_ZERO)
                              for c in range(n)))
            rows.append(tuple(rm[r][c] - (one_coords[i] if r == c else RAT_ZERO)
                              for c in range(n)))
    ker = kernel_basis(tuple(rows))
    if len(ker) != 1:
        raise NotSemisimple(f"integral space of H* has dimension {len(ker)}, expected 1")
    lam = ker[0]

    pairing_one = vec_dot(lam, h.unit)
    if pairing_one == 0:
        raise NotSemisimple("cannot normalize <lambda, 1> = 1 (not cosemisimple)")
    lam = tuple(x / pairing_one for x in lam)
    pairing = vec_dot(lam, Lam)
    if pairing == 0:
        raise NotSemisimple("cannot normalize <lambda, Lambda> = 1 (not semisimple)")
    Lam = tuple(x / pairing for x in Lam)

    for i in range(n):
        e = basis_vec(n, i)
        if h.algebra.mul(e, Lam) != tuple(eps[i] * x for x in Lam):
            raise NotSemisimple(f"Lambda is not a left integral at basis {i}")
        if h.algebra.mul(Lam, e) != tuple(eps[i] * x for x in Lam):
            raise NotSemisimple(f"Lambda is not a right integral at basis {i}")
    if harpoon_left(h.algebra, Lam, lam) != eps:
        raise NotSemisimple("Lambda -> lambda != epsilon after normalization")
    return IntegralPair(Lam, lam)


# ---------------------------------------------------------------------------
# Drinfeld double
# ---------------------------------------------------------------------------

def _double_codec(n: int):
    def flat(a: int, b: int) -> int:
        return a * n + b
    return flat


def drinfeld_double(h: HopfData):
    """D(H) on H* (x) H with R = sum_i (eps >< x_i) (x) (p_i >< 1).

    Multiplication convention: (f >< a)(g >< b) =
    f * (a_(1) -> g <- S^{-1}(a_(3))) >< a_(2) b, the unique standard choice
    under which the module-algebra formulas on H hold (checked downstream).
    """
    n = h.dim
    if h.antipode_inv is None:
        raise ValueError("drinfeld_double needs an invertible antipode")
    nn = n * n
    flat = _double_codec(n)
    sinv = h.antipode_inv
    alg = h.algebra
    dualalg = convolution_algebra(h.coalgebra)

    # q(c; t1, t3) = t1 -> p_c <- S^{-1}(e_t3), precomputed columns as needed
    def dragged(c: int, t1: int, t3: int) -> dict:
        out: dict = {}
        for y in range(n):
            for m1, w1 in alg.mul_row(y, t1):
                acc = RAT_ZERO
                for r in range(n):
                    ws = sinv[r][t3]
                    if ws == 0:
                        continue
                    for m2, w2 in alg.mul_row(r, m1):
                        if m2 == c:
                            acc += ws * w2
                if acc != 0:
                    sp_add(out, y, acc * w1)
        return out

    rowdicts: dict = {}
    comul2 = h.coalgebra.comul2_row
    for a in range(n):
        pa = {a: RAT_ONE}
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    cell: dict = {}
                    for t1, t2, t3, w in comul2(b):
                        q = dragged(c, t1, t3)
                        if not q:
                            continue
                        fq = dualalg.mul_sparse(pa, q)
                        for m, wm in alg.mul_row(t2, d):
                            for y, cy in fq.items():
                                sp_add(cell, flat(y, m), w * wm * cy)
                    if cell:
                        rowdicts[(flat(a, b), flat(c, d))] = cell
    mult = Tensor3.from_row_dicts((nn, nn, nn), rowdicts)
    unit = unsp({flat(a, b): ca * cb
                 for a, ca in sp(h.counit).items()
                 for b, cb in sp(h.unit).items()}, nn)

    rev_mult: list = [[] for _ in range(n)]
    for a1 in range(n):
        for a2 in range(n):
            for a, c in alg.mul_row(a1, a2):
                rev_mult[a].append((a1, a2, c))
    centries = []
    for a in range(n):
        for b in range(n):
            for a1, a2, c1 in rev_mult[a]:
                for b1, b2, c2 in h.coalgebra.comul_row(b):
                    centries.append((flat(a, b), flat(a2, b1), flat(a1, b2), c1 * c2))
    comult = Tensor3.from_entries((nn, nn, nn), centries)
    counit = unsp({flat(a, b): h.unit[a] * h.counit[b]
                   for a in range(n) for b in range(n) if h.unit[a] * h.counit[b] != 0}, nn)

    dalg = StructureAlgebra(nn, mult, unit)
    dcoal = StructureCoalgebra(nn, comult, counit)

    # S_D(p_a >< x_b) = (eps >< S(x_b)) (S*^{-1}(p_a) >< 1)
    anti = [[RAT_ZERO] * nn for _ in range(nn)]
    eps_sp = sp(h.counit)
    unit_sp = sp(h.unit)
    for a in range(n):
        for b in range(n):
            left: dict = {}
            for y, cy in eps_sp.items():
                for r, ws in h.antipode_cols[b]:
                    sp_add(left, flat(y, r), cy * ws)
            right: dict = {}
            for y in range(n):
                w = sinv[a][y]
                if w == 0:
                    continue
                for t, ct in unit_sp.items():
                    sp_add(right, flat(y, t), w * ct)
            col = dalg.mul_sparse(left, right)
            for r, c in col.items():
                anti[r][flat(a, b)] = c
    dh = HopfData(dalg, dcoal, mat(anti))
    verify_hopf(dh, "drinfeld_double").require()

    r_entries: dict = {}
    for i in range(n):
        for y, cy in eps_sp.items():
            for t, ct in unit_sp.items():
                sp_add(r_entries, (flat(y, i), flat(i, t)), cy * ct)
    R = TensorElem.from_entries((nn, nn), list(r_entries.items()))

    from .qtriang import qt_structure
    q = qt_structure(dh, R)
    return dh, q


# ---------------------------------------------------------------------------
# Heisenberg double
# ---------------------------------------------------------------------------

def heisenberg_double(h: HopfData) -> StructureAlgebra:
    """H # H* with H* acting by the left hit p . l = l_(1) <p, l_(2)>."""
    n = h.dim
    nn = n * n
    flat = _double_codec(n)
    alg = h.algebra

    rev_mult: list = [[] for _ in range(n)]
    for a1 in range(n):
        for a2 in range(n):
            for a, c in alg.mul_row(a1, a2):
                rev_mult[a].append((a1, a2, c))
    rev_comul: dict = {}
    for i in range(n):
        for j, k, c in h.coalgebra.comul_row(i):
            rev_comul.setdefault((j, k), []).append((i, c))

    rowdicts: dict = {}
    for i in range(n):
        for a in range(n):
            for j in range(n):
                for b in range(n):
                    cell: dict = {}
                    # Delta_{H*}(p_a) = sum p_{a1} (x) p_{a2} over mult[a1][a2][a]
                    for a1, a2, c1 in rev_mult[a]:
                        # p_{a1} . l_j = sum_{(j1, j2)} [a1 == j2] l_j1
                        hit: dict = {}
                        for j1, j2, c2 in h.coalgebra.comul_row(j):
                            if j2 == a1:
                                sp_add(hit, j1, c2)
                        if not hit:
                            continue
                        conv = rev_comul.get((a2, b), ())
                        if not conv:
                            continue
                        for j1, c2 in hit.items():
                            for m, c3 in alg.mul_row(i, j1):
                                for k, c4 in conv:
                                    sp_add(cell, flat(m, k), c1 * c2 * c3 * c4)
                    if cell:
                        rowdicts[(flat(i, a), flat(j, b))] = cell
    mult = Tensor3.from_row_dicts((nn, nn, nn), rowdicts)
    unit = unsp({flat(i, a): ci * ca
                 for i, ci in sp(h.unit).items()
                 for a, ca in sp(h.counit).items()}, nn)
    out = StructureAlgebra(nn, mult, unit)
    verify_algebra(out, "heisenberg_double").require()
    return out
