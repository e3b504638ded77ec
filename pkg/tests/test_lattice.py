import random

import numpy as np
import pytest

from isingdos import (
    LatticeSpec,
    aligned_column_bonds,
    aligned_row_bonds,
    build_tables,
    decode_config,
    encode_words,
    popcount,
    spin_excess,
    total_energy,
)
from isingdos.lattice import circular_shift


def all_up(spec):
    return decode_config(spec, spec.num_configs - 1)


def checkerboard(spec):
    words = []
    for layer in range(spec.depth):
        for c in range(spec.cols):
            word = sum(1 << r for r in range(spec.rows) if (r + c + layer) % 2 == 0)
            words.append(word)
    return decode_config(spec, encode_words(spec, words))


# -- LatticeSpec --------------------------------------------------------------

def test_spec_derived_quantities():
    spec = LatticeSpec(4, 4)
    assert (spec.num_spins, spec.num_bonds, spec.num_words) == (16, 32, 4)
    spec3d = LatticeSpec(2, 3, 2)
    assert (spec3d.num_spins, spec3d.num_bonds, spec3d.num_words) == (12, 36, 6)


@pytest.mark.parametrize("dims", [(1, 5, 1), (5, 1, 1), (0, 2, 1), (2, 2, 0)])
def test_spec_rejects_degenerate_axes(dims):
    with pytest.raises(ValueError):
        LatticeSpec(*dims)


def test_spec_rejects_over_caps():
    with pytest.raises(ValueError, match="40"):
        LatticeSpec(5, 9)  # 45 spins
    with pytest.raises(ValueError, match="cap"):
        LatticeSpec(31, 2)


def test_spec_rejects_zero_coupling():
    with pytest.raises(ValueError, match="coupling"):
        LatticeSpec(2, 2, coupling=0)


def test_spec_accepts_3d_and_boundary_sizes():
    LatticeSpec(2, 2, 2)
    LatticeSpec(4, 5, 2)  # exactly 40 spins
    LatticeSpec(20, 2)  # tall columns past the table cap


# -- kernel tables ------------------------------------------------------------

def test_build_tables_examples():
    t = build_tables(4)
    assert t.mask == 15
    assert t.popcount_table[0b0101] == 2
    assert t.shift_table[0b1000] == 0b0001
    assert t.shift_table[0b0011] == 0b0110


@pytest.mark.parametrize("rows", [2, 3, 4, 5, 8])
def test_table_invariants(rows):
    t = build_tables(rows)
    size = 1 << rows
    assert t.popcount_table[0] == 0
    assert t.popcount_table[t.mask] == rows
    # complement identity
    j = np.arange(size)
    assert np.array_equal(t.popcount_table[j] + t.popcount_table[j ^ t.mask],
                          np.full(size, rows))
    # shift is a popcount-preserving permutation with period rows
    assert sorted(t.shift_table.tolist()) == list(range(size))
    assert np.array_equal(t.popcount_table[t.shift_table], t.popcount_table)
    walked = j.copy()
    for _ in range(rows):
        walked = t.shift_table[walked]
    assert np.array_equal(walked, j)


@pytest.mark.parametrize("rows", [0, 1, 17, 32])
def test_build_tables_rejects_out_of_range(rows):
    with pytest.raises(ValueError, match="16"):
        build_tables(rows)


def test_popcount_examples():
    assert popcount(0) == 0
    assert popcount(0b11111111) == 8
    assert popcount(0b1011) == 3
    assert popcount((1 << 40) - 1) == 40


def test_popcount_matches_table():
    t = build_tables(8)
    for word in range(256):
        assert popcount(word) == t.popcount_table[word]


# -- encode / decode ----------------------------------------------------------

@pytest.mark.parametrize("dims", [(2, 2, 1), (2, 3, 1), (3, 3, 1), (2, 2, 2), (4, 4, 1)])
def test_decode_encode_round_trip_exhaustive(dims):
    spec = LatticeSpec(*dims)
    mask = spec.word_mask
    for index in range(spec.num_configs):
        cfg = decode_config(spec, index)
        assert len(cfg.words) == spec.num_words
        assert all(w <= mask for w in cfg.words)
        assert encode_words(spec, cfg.words) == index


def test_decode_rejects_out_of_range():
    spec = LatticeSpec(2, 2)
    with pytest.raises(ValueError):
        decode_config(spec, 16)
    with pytest.raises(ValueError):
        decode_config(spec, -1)


def test_encode_rejects_stray_bits():
    spec = LatticeSpec(2, 2)
    with pytest.raises(ValueError, match="stray"):
        encode_words(spec, (0b100, 0))


# -- spin excess ---------------------------------------------------------------

def test_spin_excess_examples(spec4x4):
    assert spin_excess(all_up(spec4x4), spec4x4) == 16
    assert spin_excess(decode_config(spec4x4, 0), spec4x4) == -16
    assert spin_excess(decode_config(spec4x4, 1 << 7), spec4x4) == -14


def test_spin_excess_parity_and_bounds(spec4x4):
    rng = random.Random(7)
    for _ in range(200):
        cfg = decode_config(spec4x4, rng.randrange(spec4x4.num_configs))
        m = spin_excess(cfg, spec4x4)
        assert abs(m) <= 16 and (m + 16) % 2 == 0


# -- bond kernels ---------------------------------------------------------------

def test_aligned_row_bonds_examples(tables4):
    assert aligned_row_bonds(0b1111, 0b1111, tables4) == 4
    assert aligned_row_bonds(0b1010, 0b0101, tables4) == 0
    assert aligned_row_bonds(0b1100, 0b1010, tables4) == 2


def test_aligned_column_bonds_examples(tables4):
    assert aligned_column_bonds(0b1111, tables4) == 4
    assert aligned_column_bonds(0b1010, tables4) == 0
    assert aligned_column_bonds(0b0011, tables4) == 2


def test_column_bonds_length_two_ring():
    # rows = 2: the periodic ring of two carries a double bond.
    t = build_tables(2)
    assert aligned_column_bonds(0b11, t) == 2
    assert aligned_column_bonds(0b01, t) == 0


# -- total energy ----------------------------------------------------------------

def test_total_energy_reference_anchors(spec4x4, tables4):
    assert total_energy(all_up(spec4x4), spec4x4, tables4) == -32
    for bit in range(16):
        flipped = decode_config(spec4x4, (spec4x4.num_configs - 1) ^ (1 << bit))
        assert total_energy(flipped, spec4x4, tables4) == -24
    assert total_energy(checkerboard(spec4x4), spec4x4, tables4) == 32


@pytest.mark.parametrize("dims", [(2, 2, 1), (3, 4, 1), (2, 2, 3)])
def test_ground_state_energy_is_minus_bonds(dims):
    spec = LatticeSpec(*dims)
    tables = build_tables(spec.rows)
    assert total_energy(all_up(spec), spec, tables) == -spec.num_bonds
    assert total_energy(decode_config(spec, 0), spec, tables) == -spec.num_bonds


def test_antiferromagnetic_coupling_flips_sign(spec4x4, tables4):
    anti = LatticeSpec(4, 4, coupling=-1)
    cfg = checkerboard(anti)
    assert total_energy(cfg, anti, tables4) == -32
    assert total_energy(all_up(anti), anti, tables4) == 32


def test_global_flip_symmetry(spec4x4, tables4):
    rng = random.Random(11)
    mask = spec4x4.word_mask
    for _ in range(200):
        cfg = decode_config(spec4x4, rng.randrange(spec4x4.num_configs))
        flipped = decode_config(
            spec4x4, encode_words(spec4x4, [w ^ mask for w in cfg.words]))
        assert spin_excess(flipped, spec4x4) == -spin_excess(cfg, spec4x4)
        assert (total_energy(flipped, spec4x4, tables4)
                == total_energy(cfg, spec4x4, tables4))


@pytest.mark.parametrize("dims", [(3, 4, 1), (2, 3, 2)])
def test_periodic_shift_invariance(dims):
    spec = LatticeSpec(*dims)
    tables = build_tables(spec.rows)
    rng = random.Random(13)
    for _ in range(100):
        cfg = decode_config(spec, rng.randrange(spec.num_configs))
        m, e = spin_excess(cfg, spec), total_energy(cfg, spec, tables)

        # roll every column word by one row
        rolled = [circular_shift(w, spec.rows) for w in cfg.words]
        cfg_r = decode_config(spec, encode_words(spec, rolled))
        assert (spin_excess(cfg_r, spec), total_energy(cfg_r, spec, tables)) == (m, e)

        # rotate the columns within each layer
        rotated = []
        for layer in range(spec.depth):
            row = list(cfg.words[layer * spec.cols:(layer + 1) * spec.cols])
            rotated.extend(row[1:] + row[:1])
        cfg_c = decode_config(spec, encode_words(spec, rotated))
        assert (spin_excess(cfg_c, spec), total_energy(cfg_c, spec, tables)) == (m, e)


def test_energy_parity_and_bounds(spec4x4, tables4):
    rng = random.Random(17)
    for _ in range(300):
        cfg = decode_config(spec4x4, rng.randrange(spec4x4.num_configs))
        e = total_energy(cfg, spec4x4, tables4)
        assert e % 2 == 0 and -32 <= e <= 32


def test_total_energy_direct_fallback_matches_tables():
    spec = LatticeSpec(3, 4)
    tables = build_tables(3)
    for index in range(spec.num_configs):
        cfg = decode_config(spec, index)
        assert total_energy(cfg, spec, None) == total_energy(cfg, spec, tables)
