"""Command-line front door.

    hopfsmash demo <name> [--seed N] [--tol T] [--json PATH]
    hopfsmash verify <workspace.json> <target> <suite> [--json PATH]
    hopfsmash construct <workspace.json> <recipe> <out.json>

Workspace files are single JSON documents {"objects": {name: object}} with
rationals serialized as "p/q" strings. Recipes take their arguments inline,
e.g. `construct ws.json double:kz2 out.json`. Exit code 0 iff every check in
the run passed; reports embed the tool version and the input content hash.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .exactlin import Tensor3, TensorElem, mat, rat, rat_str, vec
from .hopfcore import (
    GroupTable,
    HopfData,
    StructureAlgebra,
    StructureCoalgebra,
    dual_hopf,
    drinfeld_double,
    group_algebra,
    heisenberg_double,
    integrals,
    verify_algebra,
    verify_hopf,
)
from .modalg import ModuleAlgebraData, separability, verify_module_algebra
from .qtriang import (
    QTStructure,
    almost_triangular_equivalences,
    hr_dual_separability,
    qt_structure,
    transmute,
    trivial_qt,
    verify_qt,
)
from .report import HypothesisFailure, VerificationReport
from .weakhopf import (
    WeakHopfData,
    WeakQTStructure,
    almost_triangular_wha_report,
    verify_weak_hopf,
    verify_weak_qt,
)
from . import demos as dm


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _ser_vec(v):
    return [rat_str(c) for c in v]


def _ser_mat(m):
    return [[rat_str(c) for c in row] for row in m]


def _ser_t3(t: Tensor3):
    return [[[rat_str(c) for c in row] for row in plane] for plane in t.dense()]


def _de_vec(data):
    return vec(data)


def _de_mat(data):
    return mat(data)


def _de_t3(data) -> Tensor3:
    return Tensor3.from_dense([[[rat(c) for c in row] for row in plane] for plane in data])


def ser_hopf(h: HopfData, kind: str = "hopf") -> dict:
    return {"type": kind, "dim": h.dim,
            "mult": _ser_t3(h.mult), "unit": _ser_vec(h.unit),
            "comult": _ser_t3(h.comult), "counit": _ser_vec(h.counit),
            "antipode": _ser_mat(h.antipode)}


def de_hopf(obj: dict, cls=HopfData):
    return cls(StructureAlgebra(obj["dim"], _de_t3(obj["mult"]), _de_vec(obj["unit"])),
               StructureCoalgebra(obj["dim"], _de_t3(obj["comult"]), _de_vec(obj["counit"])),
               _de_mat(obj["antipode"]))


def ser_algebra(a: StructureAlgebra) -> dict:
    return {"type": "algebra", "dim": a.dim,
            "mult": _ser_t3(a.mult), "unit": _ser_vec(a.unit)}


def groupoid_wha_from_json(obj: dict) -> WeakHopfData:
    """{"objects": [...] or count, "morphisms": [{"src": i, "dst": j,
    "name": ...?}], "compose": table, "identities": [...], "inverses": [...]}
    -> its groupoid algebra."""
    from .weakhopf import GroupoidData, groupoid_wha
    morphs = obj["morphisms"]
    objects = obj["objects"]
    n_objects = len(objects) if isinstance(objects, list) else int(objects)
    g = GroupoidData(
        n_objects=n_objects,
        sources=tuple(m["src"] for m in morphs),
        targets=tuple(m["dst"] for m in morphs),
        compose=tuple(tuple(row) for row in obj["compose"]),
        identities=tuple(obj["identities"]),
        inverses=tuple(obj["inverses"]),
    )
    return groupoid_wha(g)


class Workspace:
    """Named objects loaded from a single JSON document; references resolve
    lazily and every name must be unique."""

    def __init__(self, objects: dict, raw: bytes = b""):
        self.objects = objects
        self.raw = raw

    @staticmethod
    def load(path: str) -> "Workspace":
        with open(path, "rb") as fh:
            raw = fh.read()
        doc = json.loads(raw.decode("utf-8"))
        objects = doc.get("objects", {})
        if not isinstance(objects, dict):
            raise ValueError("workspace 'objects' must be a mapping")
        for name, obj in objects.items():
            for field in ("host", "qt", "group"):
                ref = obj.get(field) if isinstance(obj, dict) else None
                if ref is not None and ref not in objects:
                    raise ValueError(
                        f"object {name!r} references missing object {ref!r}")
        return Workspace(objects, raw)

    def content_hash(self) -> str:
        return hashlib.sha256(self.raw).hexdigest()

    def get(self, name: str) -> dict:
        if name not in self.objects:
            raise KeyError(f"workspace has no object named {name!r}")
        return self.objects[name]

    def resolve_hopf(self, name: str) -> HopfData:
        obj = self.get(name)
        t = obj.get("type")
        if t == "group":
            return group_algebra(GroupTable.from_lists(obj["elements"], obj["table"]))
        if t in ("hopf", "weak-hopf"):
            return de_hopf(obj)
        raise ValueError(f"object {name!r} of type {t!r} is not a Hopf algebra")

    def resolve_weak_hopf(self, name: str) -> WeakHopfData:
        obj = self.get(name)
        t = obj.get("type")
        if t == "group":
            return WeakHopfData.from_hopf(self.resolve_hopf(name))
        if t in ("hopf", "weak-hopf"):
            return de_hopf(obj, WeakHopfData)
        if t == "groupoid":
            return groupoid_wha_from_json(obj)
        raise ValueError(f"object {name!r} of type {t!r} is not a weak Hopf algebra")

    def resolve_qt(self, name: str) -> QTStructure:
        obj = self.get(name)
        if obj.get("type") != "qt":
            raise ValueError(f"object {name!r} is not a qt structure")
        host = self.resolve_hopf(obj["host"])
        rmat = [[rat(c) for c in row] for row in obj["R"]]
        R = TensorElem.from_entries(
            (host.dim, host.dim),
            (((i, j), c) for i, row in enumerate(rmat) for j, c in enumerate(row)))
        return qt_structure(host, R)

    def resolve_weak_qt(self, name: str) -> WeakQTStructure:
        obj = self.get(name)
        if obj.get("type") != "weak-qt":
            raise ValueError(f"object {name!r} is not a weak-qt structure")
        host = self.resolve_weak_hopf(obj["host"])
        def tens(rows):
            return TensorElem.from_entries(
                (host.dim, host.dim),
                (((i, j), rat(c)) for i, row in enumerate(rows)
                 for j, c in enumerate(row)))
        return WeakQTStructure(host, tens(obj["R"]), tens(obj["Rbar"]))

    def resolve_module_algebra(self, name: str) -> ModuleAlgebraData:
        obj = self.get(name)
        if obj.get("type") != "module-algebra":
            raise ValueError(f"object {name!r} is not a module algebra")
        host = self.resolve_hopf(obj["host"])
        alg = StructureAlgebra(obj["algebra"]["dim"], _de_t3(obj["algebra"]["mult"]),
                               _de_vec(obj["algebra"]["unit"]))
        return ModuleAlgebraData(host, alg, _de_t3(obj["action"]))


# ---------------------------------------------------------------------------
# demos
# ---------------------------------------------------------------------------

def _demo_s3_groupoid(seed: int, tol: float):
    from .smashcons import groupoid_case_study, smash_qt
    from .repdim import fpdim_report
    cs = groupoid_case_study(dm.s3_table(), dm.natural_point_action(3))
    out = VerificationReport("demo:s3-groupoid")
    out.merge(cs.report, "case_study.")
    wq, qrep = smash_qt(cs.sws)
    out.merge(qrep, "qt.")
    fp = fpdim_report(cs.sws.wha, cs.sws.smash.A_mod, tol, seed)
    out.merge(fp.report, "fpdim.")
    out.add("blocks_are_3_3", fp.blocks == (3, 3), fp.blocks)
    out.add("fpdims_are_1_1", fp.fpdims == (1, 1), fp.fpdims)
    return out, {"blocks": list(fp.blocks), "fpdims": list(fp.fpdims),
                 "case_study": cs.to_dict()}


def _demo_double(table: GroupTable):
    from .smashcons import double_smash_decomposition
    h = group_algebra(table)
    rep = double_smash_decomposition(h)
    out = VerificationReport(f"demo:double-{table.order}")
    out.merge(rep, "decomposition.")
    return out, {"dim": h.dim ** 3}


def _demo_hr_s3(seed: int, tol: float):
    from .adjstable import decompose_hr
    from .repdim import class_idempotents
    h = dm.k_s3()
    q = trivial_qt(h)
    bg = transmute(q)
    ip = integrals(h)
    out = VerificationReport("demo:hr-s3")
    dec = decompose_hr(bg)
    out.merge(dec.report, "decompose.")
    dims = sorted(len(b) for b in dec.blocks)
    out.add("block_dims_1_2_3", dims == [1, 2, 3], tuple(dims))
    ci = class_idempotents(h, q, ip, bg)
    out.merge(ci.report, "idempotents.")
    x, xrep = hr_dual_separability(q, ip, bg)
    out.merge(xrep, "x.")
    out.merge(almost_triangular_equivalences(q, bg), "equivalences.")
    return out, {"block_dims": dims}


def _demo_nd_transpositions(seed: int, tol: float):
    from .adjstable import decompose_hr, nd_transport_report, psi_phi
    h = dm.k_s3()
    q = trivial_qt(h)
    bg = transmute(q)
    ip = integrals(h)
    dec = decompose_hr(bg)
    d = [b for b in dec.blocks if len(b) == 3][0]
    out = VerificationReport("demo:nd-transpositions")
    pp = psi_phi(d, q, bg)
    out.merge(pp.report, "psi_phi.")
    out.add("nd_dim_18", pp.nd.carrier.dim == 18, (pp.nd.carrier.dim,))
    out.merge(nd_transport_report(d, q, ip, bg, dec), "transport.")
    return out, {"nd_dim": pp.nd.carrier.dim}


def _demo_heisenberg_z2(seed: int, tol: float):
    from .repdim import wedderburn_blocks
    h = dm.k_z2()
    hz = heisenberg_double(h)
    out = VerificationReport("demo:heisenberg-z2")
    br = wedderburn_blocks(hz, tol, seed)
    out.add("single_block_of_2", br.blocks == (2,), br.blocks)
    out.add("residual_below_tolerance", br.residual < tol, (br.residual,))
    return out, {"block_report": br.to_dict()}


DEMOS = {
    "s3-groupoid": lambda seed, tol: _demo_s3_groupoid(seed, tol),
    "double-z2": lambda seed, tol: _demo_double(dm.z2_table()),
    "double-s3": lambda seed, tol: _demo_double(dm.s3_table()),
    "hr-s3": _demo_hr_s3,
    "nd-transpositions": _demo_nd_transpositions,
    "heisenberg-z2": _demo_heisenberg_z2,
}


def cmd_demo(name: str, seed: int, tol: float, json_path: str | None) -> int:
    if name not in DEMOS:
        print(f"error: unknown demo {name!r}; choose from {sorted(DEMOS)}", file=sys.stderr)
        return 2
    rep, extra = DEMOS[name](seed, tol)
    print(rep.summary())
    payload = {"tool_version": __version__,
               "input_hash": hashlib.sha256(name.encode()).hexdigest(),
               "command": ["demo", name], "seed": seed, "tolerance": tol,
               "ok": rep.ok, "extra": extra, "report": rep.to_dict()}
    path = json_path or f"{name}-report.json"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
    print(f"report written to {path}")
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _suite_smash_pipeline(ws: Workspace, target: str, seed: int, tol: float):
    from .smashcons import smash_algebra, smash_weak_structure, smash_qt
    m = ws.resolve_module_algebra(target)
    obj = ws.get(target)
    if "qt" in obj:
        q = ws.resolve_qt(obj["qt"])
    else:
        q = trivial_qt(m.host)
    rep = VerificationReport(f"smash-pipeline:{target}")
    rep.merge(verify_module_algebra(m), "module.")
    sep = separability(m)
    s = smash_algebra(m)
    sws = smash_weak_structure(s, q, sep)
    rep.merge(sws.report, "wha.")
    wq, qrep = smash_qt(sws)
    rep.merge(qrep, "qt.")
    # decode flat witnesses into (a, h) smash coordinates for readability
    for c in rep.failures():
        if isinstance(c.witness, tuple):
            decoded = tuple(s.unflat(w) if isinstance(w, int) and w < s.carrier.dim
                            else w for w in c.witness)
            c.witness = (c.witness, decoded)
    rep.add("codec", True, ("flat = a_index * dim_H + h_index",), informational=True)
    return rep


def _suite_adjoint_stable(ws: Workspace, target: str, seed: int, tol: float):
    from .adjstable import psi_phi
    obj = ws.get(target)
    if obj.get("type") != "subcoalgebra":
        raise ValueError(f"object {target!r} is not a subcoalgebra")
    q = ws.resolve_qt(obj["qt"])
    basis = [_de_vec(v) for v in obj["basis"]]
    pp = psi_phi(basis, q)
    rep = VerificationReport(f"adjoint-stable:{target}")
    rep.merge(pp.report, "psi_phi.")
    m = len(basis)
    rep.add("structure_dimension_identity",
            pp.nd.carrier.dim * m == q.host.dim * m * m,
            (pp.nd.carrier.dim, m, q.host.dim))
    return rep


SUITES = {
    "hopf": lambda ws, t, s, tol: verify_hopf(ws.resolve_hopf(t), f"hopf:{t}"),
    "qt": lambda ws, t, s, tol: verify_qt(ws.resolve_qt(t), f"qt:{t}"),
    "module-algebra": lambda ws, t, s, tol: verify_module_algebra(
        ws.resolve_module_algebra(t), f"module-algebra:{t}"),
    "weak-hopf": lambda ws, t, s, tol: verify_weak_hopf(
        ws.resolve_weak_hopf(t), f"weak-hopf:{t}"),
    "weak-qt": lambda ws, t, s, tol: verify_weak_qt(ws.resolve_weak_qt(t), f"weak-qt:{t}"),
    "almost-triangular": lambda ws, t, s, tol: almost_triangular_wha_report(
        ws.resolve_weak_qt(t)),
    "smash-pipeline": _suite_smash_pipeline,
    "adjoint-stable": _suite_adjoint_stable,
}


def cmd_verify(path: str, target: str, suite: str, seed: int, tol: float,
               json_path: str | None) -> int:
    if suite not in SUITES:
        print(f"error: unknown suite {suite!r}; choose from {sorted(SUITES)}",
              file=sys.stderr)
        return 2
    try:
        ws = Workspace.load(path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: cannot load workspace {path!r}: {exc}", file=sys.stderr)
        return 2
    try:
        rep = SUITES[suite](ws, target, seed, tol)
    except HypothesisFailure as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(rep.summary())
    if json_path:
        payload = {"tool_version": __version__, "input_hash": ws.content_hash(),
                   "command": ["verify", path, target, suite],
                   "ok": rep.ok, "report": rep.to_dict()}
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _construct(ws: Workspace, recipe: str, seed: int, tol: float):
    if ":" not in recipe:
        raise ValueError("recipe must look like 'op:target[,target2]'")
    op, _, argstr = recipe.partition(":")
    args = [a for a in argstr.split(",") if a]
    if op == "group-algebra":
        obj = ws.get(args[0])
        h = group_algebra(GroupTable.from_lists(obj["elements"], obj["table"]))
        return {"constructed": ser_hopf(h)}, verify_hopf(h)
    if op == "dual":
        h = dual_hopf(ws.resolve_hopf(args[0]))
        return {"constructed": ser_hopf(h)}, verify_hopf(h)
    if op == "double":
        dd, q = drinfeld_double(ws.resolve_hopf(args[0]))
        from .qtriang import verify_qt
        rep = verify_hopf(dd)
        rep.merge(verify_qt(q), "qt.")
        rmat = [[rat_str(q.R.entry(i, j)) for j in range(dd.dim)] for i in range(dd.dim)]
        return {"constructed": ser_hopf(dd), "R": rmat}, rep
    if op == "heisenberg":
        a = heisenberg_double(ws.resolve_hopf(args[0]))
        return {"constructed": ser_algebra(a)}, verify_algebra(a)
    if op == "smash":
        from .smashcons import smash_algebra
        s = smash_algebra(ws.resolve_module_algebra(args[0]))
        return {"constructed": ser_algebra(s.carrier),
                "codec": "flat = a_index * dim_H + h_index"}, verify_algebra(s.carrier)
    if op == "smash-wha":
        from .smashcons import smash_algebra, smash_weak_structure
        m = ws.resolve_module_algebra(args[0])
        q = ws.resolve_qt(args[1]) if len(args) > 1 else trivial_qt(m.host)
        sws = smash_weak_structure(smash_algebra(m), q, separability(m))
        return {"constructed": ser_hopf(sws.wha, "weak-hopf"),
                "codec": "flat = a_index * dim_H + h_index"}, sws.report
    if op == "build-B":
        from .smashcons import build_B
        m = ws.resolve_module_algebra(args[0])
        q = ws.resolve_qt(args[1]) if len(args) > 1 else trivial_qt(m.host)
        b = build_B(m, q, separability(m))
        n = b.wha.dim
        return {"constructed": ser_hopf(b.wha, "weak-hopf"),
                "R": [[rat_str(b.rqt.Rw.entry(i, j)) for j in range(n)] for i in range(n)],
                "Rbar": [[rat_str(b.rqt.Rw_bar.entry(i, j)) for j in range(n)]
                         for i in range(n)],
                "codec": "flat = (a_index * dim_H + h_index) * dim_A + dual_index"}, b.report
    if op == "transmute":
        q = ws.resolve_qt(args[0])
        bg = transmute(q)
        from .qtriang import verify_braided_group
        return {"constructed": {
            "type": "braided-group",
            "dim": q.host.dim,
            "adjoint_action": _ser_t3(bg.adjoint_action),
            "comult_R": _ser_t3(bg.comult_R),
            "antipode_R": _ser_mat(bg.antipode_R),
        }}, verify_braided_group(bg)
    if op == "nd":
        from .adjstable import psi_phi
        obj = ws.get(args[0])
        q = ws.resolve_qt(obj["qt"])
        basis = [_de_vec(v) for v in obj["basis"]]
        pp = psi_phi(basis, q)
        return {"constructed": ser_algebra(pp.nd.carrier),
                "psi": _ser_mat(pp.psi.matrix),
                "phi": _ser_mat(pp.phi.matrix)}, pp.report
    if op == "decompose-hr":
        from .adjstable import decompose_hr
        q = ws.resolve_qt(args[0])
        dec = decompose_hr(transmute(q))
        return {"constructed": {
            "type": "decomposition",
            "blocks": [[_ser_vec(v) for v in blk] for blk in dec.blocks],
            "fully_split": dec.fully_split,
        }}, dec.report
    raise ValueError(f"unknown recipe {op!r}")


def cmd_construct(path: str, recipe: str, out: str, seed: int, tol: float) -> int:
    try:
        ws = Workspace.load(path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: cannot load workspace {path!r}: {exc}", file=sys.stderr)
        return 2
    try:
        payload, rep = _construct(ws, recipe, seed, tol)
    except HypothesisFailure as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    name = recipe.replace(":", "_").replace(",", "_")
    doc = {"tool_version": __version__, "input_hash": ws.content_hash(),
           "command": ["construct", path, recipe, out],
           "objects": {name: payload.pop("constructed")},
           "report": rep.to_dict()}
    doc.update(payload)
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
    print(rep.summary())
    print(f"object written to {out}")
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="hopfsmash", description=__doc__)
    ap.add_argument("--seed", type=int, default=0, help="seed for the block oracle")
    ap.add_argument("--tol", type=float, default=1e-8, help="float tolerance for repdim")
    ap.add_argument("--json", default=None, help="write the JSON report here")
    sub = ap.add_subparsers(dest="cmd", required=True)
    d = sub.add_parser("demo", help="run a named end-to-end pipeline")
    d.add_argument("name")
    v = sub.add_parser("verify", help="run a check suite against a workspace object")
    v.add_argument("workspace")
    v.add_argument("target")
    v.add_argument("suite")
    c = sub.add_parser("construct", help="build an object and write it out")
    c.add_argument("workspace")
    c.add_argument("recipe")
    c.add_argument("out")
    ns = ap.parse_args(argv)
    if ns.cmd == "demo":
        return cmd_demo(ns.name, ns.seed, ns.tol, ns.json)
    if ns.cmd == "verify":
        return cmd_verify(ns.workspace, ns.target, ns.suite, ns.seed, ns.tol, ns.json)
    if ns.cmd == "construct":
        return cmd_construct(ns.workspace, ns.recipe, ns.out, ns.seed, ns.tol)
    return 2


if __name__ == "__main__":
    sys.exit(main())
