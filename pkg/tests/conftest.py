"""Shared worlds, session-scoped: the expensive constructions (doubles, the
54-dimensional enveloping algebra, the smash weak structure) are built once."""

import pytest

from hopfsmash import demos as dm
from hopfsmash.hopfcore import drinfeld_double, integrals
from hopfsmash.modalg import separability
from hopfsmash.qtriang import transmute, trivial_qt


@pytest.fixture(scope="session")
def z2_table():
    return dm.z2_table()


@pytest.fixture(scope="session")
def s3_table():
    return dm.s3_table()


@pytest.fixture(scope="session")
def kz2():
    return dm.k_z2()


@pytest.fixture(scope="session")
def ks3():
    return dm.k_s3()


@pytest.fixture(scope="session")
def q_s3(ks3):
    return trivial_qt(ks3)


@pytest.fixture(scope="session")
def q_z2(kz2):
    return trivial_qt(kz2)


@pytest.fixture(scope="session")
def bg_s3(q_s3):
    return transmute(q_s3)


@pytest.fixture(scope="session")
def ip_s3(ks3):
    return integrals(ks3)


@pytest.fixture(scope="session")
def ip_z2(kz2):
    return integrals(kz2)


@pytest.fixture(scope="session")
def m3(ks3):
    return dm.k3_module_algebra(ks3)


@pytest.fixture(scope="session")
def sep3(m3):
    return separability(m3)


@pytest.fixture(scope="session")
def double_z2(kz2):
    return drinfeld_double(kz2)


@pytest.fixture(scope="session")
def double_s3(ks3):
    return drinfeld_double(ks3)


@pytest.fixture(scope="session")
def smash18(m3):
    from hopfsmash.smashcons import smash_algebra
    return smash_algebra(m3)


@pytest.fixture(scope="session")
def sws18(smash18, q_s3, sep3):
    from hopfsmash.smashcons import smash_weak_structure
    return smash_weak_structure(smash18, q_s3, sep3)


@pytest.fixture(scope="session")
def b54(m3, q_s3, sep3):
    from hopfsmash.smashcons import build_B
    return build_B(m3, q_s3, sep3)


@pytest.fixture(scope="session")
def hr_decomposition(bg_s3):
    from hopfsmash.adjstable import decompose_hr
    return decompose_hr(bg_s3)


@pytest.fixture(scope="session")
def transposition_block(hr_decomposition):
    return [b for b in hr_decomposition.blocks if len(b) == 3][0]


@pytest.fixture(scope="session")
def double_mod_z2(kz2, double_z2):
    from hopfsmash.smashcons import double_module_algebra
    return double_module_algebra(kz2, double_z2)
