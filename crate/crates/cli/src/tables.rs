//! Published pinch sequences for the first members of each family, written
//! out literally as `(p, q)` pairs in (even, odd) order.

/// `(n, chain)` for `K_n = T(4n, (2n+1)²)`, n = 1..=5.
pub const K_ROWS: &[(u64, &[(i128, i128)])] = &[
    (1, &[(4, 9), (2, 5), (0, 1)]),
    (2, &[(8, 25), (6, 19), (4, 13), (2, 7), (0, 1)]),
    (
        3,
        &[
            (12, 49),
            (10, 41),
            (8, 33),
            (6, 25),
            (4, 17),
            (2, 9),
            (0, 1),
        ],
    ),
    (
        4,
        &[
            (16, 81),
            (14, 71),
            (12, 61),
            (10, 51),
            (8, 41),
            (6, 31),
            (4, 21),
            (2, 11),
            (0, 1),
        ],
    ),
    (
        5,
        &[
            (20, 121),
            (18, 109),
            (16, 97),
            (14, 85),
            (12, 73),
            (10, 61),
            (8, 49),
            (6, 37),
            (4, 25),
            (2, 13),
            (0, 1),
        ],
    ),
];

/// `(n, chain)` for `J_n = T(4n, (2n-1)²)`, n = 2..=5.
pub const J_ROWS: &[(u64, &[(i128, i128)])] = &[
    (2, &[(8, 9), (6, 7), (4, 5), (2, 3), (0, 1)]),
    (
        3,
        &[(12, 25), (10, 21), (8, 17), (6, 13), (4, 9), (2, 5), (0, 1)],
    ),
    (
        4,
        &[
            (16, 49),
            (14, 43),
            (12, 37),
            (10, 31),
            (8, 25),
            (6, 19),
            (4, 13),
            (2, 7),
            (0, 1),
        ],
    ),
    (
        5,
        &[
            (20, 81),
            (18, 73),
            (16, 65),
            (14, 57),
            (12, 49),
            (10, 41),
            (8, 33),
            (6, 25),
            (4, 17),
            (2, 9),
            (0, 1),
        ],
    ),
];
