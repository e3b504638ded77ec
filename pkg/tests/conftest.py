import pytest

from isingdos import LatticeSpec, build_tables, full_dos

# Hand-derived complete DoS of the 2x2 periodic lattice (16 states, B = 8):
# both aligned states at E = -8, the four single-flip states per sign at
# E = 0, four adjacent-pair states at E = 0, two diagonal-pair states at +8.
DOS_2X2_CELLS = [
    (1, 4, -8),
    (4, 2, 0),
    (4, 0, 0),
    (2, 0, 8),
    (4, -2, 0),
    (1, -4, -8),
]


@pytest.fixture(scope="session")
def spec4x4():
    return LatticeSpec(4, 4)


@pytest.fixture(scope="session")
def tables4():
    return build_tables(4)


@pytest.fixture(scope="session")
def dos4x4(spec4x4):
    return full_dos(spec4x4, workers=1)


@pytest.fixture(scope="session")
def dos2x2():
    return full_dos(LatticeSpec(2, 2), workers=1)
