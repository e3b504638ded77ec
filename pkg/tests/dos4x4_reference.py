"""Reference density of states for the periodic 4x4 lattice at J = 1.

80 nonzero (count, M, E) cells totalling 65536, sorted by M descending
then E ascending.  This tabulation is frozen as ground truth; the naive
oracle engine re-derives every cell independently.
"""

REFERENCE_4X4_CELLS = [
    (1, 16, -32), (16, 14, -24), (32, 12, -20), (88, 12, -16),
    (96, 10, -16), (256, 10, -12), (208, 10, -8), (24, 8, -16),
    (256, 8, -12), (736, 8, -8), (576, 8, -4), (228, 8, 0),
    (192, 6, -12), (688, 6, -8), (1664, 6, -4), (1248, 6, 0),
    (448, 6, 4), (128, 6, 8), (96, 4, -12), (704, 4, -8),
    (1824, 4, -4), (2928, 4, 0), (1568, 4, 4), (768, 4, 8),
    (64, 4, 12), (56, 4, 16), (64, 2, -12), (624, 2, -8),
    (1920, 2, -4), (3680, 2, 0), (3136, 2, 4), (1392, 2, 8),
    (512, 2, 12), (96, 2, 16), (16, 2, 24), (8, 0, -16),
    (768, 0, -8), (1600, 0, -4), (4356, 0, 0), (3264, 0, 4),
    (2112, 0, 8), (576, 0, 12), (120, 0, 16), (64, 0, 20),
    (2, 0, 32), (64, -2, -12), (624, -2, -8), (1920, -2, -4),
    (3680, -2, 0), (3136, -2, 4), (1392, -2, 8), (512, -2, 12),
    (96, -2, 16), (16, -2, 24), (96, -4, -12), (704, -4, -8),
    (1824, -4, -4), (2928, -4, 0), (1568, -4, 4), (768, -4, 8),
    (64, -4, 12), (56, -4, 16), (192, -6, -12), (688, -6, -8),
    (1664, -6, -4), (1248, -6, 0), (448, -6, 4), (128, -6, 8),
    (24, -8, -16), (256, -8, -12), (736, -8, -8), (576, -8, -4),
    (228, -8, 0), (96, -10, -16), (256, -10, -12), (208, -10, -8),
    (32, -12, -20), (88, -12, -16), (16, -14, -24), (1, -16, -32),
]
