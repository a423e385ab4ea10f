#!/usr/bin/env python3
"""Time the big H # D(H) decomposition (dimension |G|^3) for the built-in
groups; the S3 case is the one with the 10-minute budget."""

import time

from hopfsmash import demos as dm
from hopfsmash.hopfcore import drinfeld_double, group_algebra
from hopfsmash.smashcons import double_smash_decomposition


def run(name, table):
    h = group_algebra(table)
    t0 = time.time()
    double = drinfeld_double(h)
    t1 = time.time()
    rep = double_smash_decomposition(h, double)
    t2 = time.time()
    status = "ok" if rep.ok else "FAILED"
    print(f"{name}: dim {h.dim ** 3:4d}  double {t1 - t0:6.2f}s  "
          f"decomposition {t2 - t1:6.2f}s  {status}")
    return rep.ok


if __name__ == "__main__":
    ok = run("kZ2", dm.z2_table())
    ok &= run("kZ3", dm.cyclic_table(3))
    ok &= run("kS3", dm.s3_table())
    raise SystemExit(0 if ok else 1)
