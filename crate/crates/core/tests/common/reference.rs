//! Reference tables for n = 3 and n = 4.
//! Numeric encoding: (j, L) = 2j - 1, (j, R) = 2j.

pub const LP3: [[u8; 6]; 60] = [
    [1, 2, 3, 4, 5, 6],
    [1, 2, 3, 4, 6, 5],
    [1, 2, 3, 5, 4, 6],
    [1, 2, 3, 5, 6, 4],
    [1, 2, 3, 6, 4, 5],
    [1, 2, 3, 6, 5, 4],
    [1, 2, 4, 3, 5, 6],
    [1, 2, 4, 3, 6, 5],
    [1, 2, 4, 6, 3, 5],
    [1, 2, 6, 3, 4, 5],
    [1, 2, 6, 3, 5, 4],
    [1, 2, 6, 4, 3, 5],
    [1, 3, 2, 4, 5, 6],
    [1, 3, 2, 4, 6, 5],
    [1, 3, 2, 5, 4, 6],
    [1, 3, 2, 5, 6, 4],
    [1, 3, 2, 6, 4, 5],
    [1, 3, 2, 6, 5, 4],
    [1, 3, 4, 2, 5, 6],
    [1, 3, 4, 2, 6, 5],
    [1, 3, 4, 5, 2, 6],
    [1, 3, 4, 5, 6, 2],
    [1, 3, 4, 6, 2, 5],
    [1, 3, 4, 6, 5, 2],
    [1, 3, 5, 2, 4, 6],
    [1, 3, 5, 2, 6, 4],
    [1, 3, 5, 4, 2, 6],
    [1, 3, 5, 4, 6, 2],
    [1, 3, 5, 6, 2, 4],
    [1, 3, 5, 6, 4, 2],
    [1, 3, 6, 2, 4, 5],
    [1, 3, 6, 2, 5, 4],
    [1, 3, 6, 4, 2, 5],
    [1, 3, 6, 4, 5, 2],
    [1, 3, 6, 5, 2, 4],
    [1, 3, 6, 5, 4, 2],
    [1, 4, 2, 3, 5, 6],
    [1, 4, 2, 3, 6, 5],
    [1, 4, 2, 6, 3, 5],
    [1, 4, 3, 2, 5, 6],
    [1, 4, 3, 2, 6, 5],
    [1, 4, 3, 5, 2, 6],
    [1, 4, 3, 5, 6, 2],
    [1, 4, 3, 6, 2, 5],
    [1, 4, 3, 6, 5, 2],
    [1, 4, 6, 2, 3, 5],
    [1, 4, 6, 3, 2, 5],
    [1, 4, 6, 3, 5, 2],
    [1, 6, 2, 3, 4, 5],
    [1, 6, 2, 3, 5, 4],
    [1, 6, 2, 4, 3, 5],
    [1, 6, 3, 2, 4, 5],
    [1, 6, 3, 2, 5, 4],
    [1, 6, 3, 4, 2, 5],
    [1, 6, 3, 4, 5, 2],
    [1, 6, 3, 5, 2, 4],
    [1, 6, 3, 5, 4, 2],
    [1, 6, 4, 2, 3, 5],
    [1, 6, 4, 3, 2, 5],
    [1, 6, 4, 3, 5, 2],
];

pub const A2_3: [((u8, u8), (u8, u8)); 18] = [
    ((1, 4), (2, 3)),
    ((1, 4), (3, 2)),
    ((1, 6), (2, 5)),
    ((1, 6), (5, 2)),
    ((2, 3), (4, 1)),
    ((2, 5), (6, 1)),
    ((3, 2), (1, 4)),
    ((3, 2), (4, 1)),
    ((3, 6), (4, 5)),
    ((3, 6), (5, 4)),
    ((4, 1), (2, 3)),
    ((4, 5), (6, 3)),
    ((5, 2), (1, 6)),
    ((5, 2), (6, 1)),
    ((5, 4), (3, 6)),
    ((5, 4), (6, 3)),
    ((6, 1), (2, 5)),
    ((6, 3), (4, 5)),
];

pub const A2_4: [((u8, u8), (u8, u8)); 36] = [
    ((1, 4), (2, 3)),
    ((1, 4), (3, 2)),
    ((1, 6), (2, 5)),
    ((1, 6), (5, 2)),
    ((1, 8), (2, 7)),
    ((1, 8), (7, 2)),
    ((2, 3), (4, 1)),
    ((2, 5), (6, 1)),
    ((2, 7), (8, 1)),
    ((3, 2), (1, 4)),
    ((3, 2), (4, 1)),
    ((3, 6), (4, 5)),
    ((3, 6), (5, 4)),
    ((3, 8), (4, 7)),
    ((3, 8), (7, 4)),
    ((4, 1), (2, 3)),
    ((4, 5), (6, 3)),
    ((4, 7), (8, 3)),
    ((5, 2), (1, 6)),
    ((5, 2), (6, 1)),
    ((5, 4), (3, 6)),
    ((5, 4), (6, 3)),
    ((5, 8), (6, 7)),
    ((5, 8), (7, 6)),
    ((6, 1), (2, 5)),
    ((6, 3), (4, 5)),
    ((6, 7), (8, 5)),
    ((7, 2), (1, 8)),
    ((7, 2), (8, 1)),
    ((7, 4), (3, 8)),
    ((7, 4), (8, 3)),
    ((7, 6), (5, 8)),
    ((7, 6), (8, 5)),
    ((8, 1), (2, 7)),
    ((8, 3), (4, 7)),
    ((8, 5), (6, 7)),
];

pub const A1_3: [(u8, u8); 6] = [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5)];

pub const A1_4: [(u8, u8); 8] = [
    (1, 2),
    (2, 1),
    (3, 4),
    (4, 3),
    (5, 6),
    (6, 5),
    (7, 8),
    (8, 7),
];

pub const MIN3: [[u8; 6]; 6] = [
    [1, 3, 2, 6, 4, 5],
    [1, 3, 5, 2, 6, 4],
    [1, 3, 5, 4, 2, 6],
    [1, 3, 6, 4, 2, 5],
    [1, 4, 2, 6, 3, 5],
    [1, 6, 4, 2, 3, 5],
];

pub const LP4_HEAD: [[u8; 8]; 12] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [1, 2, 3, 4, 5, 6, 8, 7],
    [1, 2, 3, 4, 5, 7, 6, 8],
    [1, 2, 3, 4, 5, 7, 8, 6],
    [1, 2, 3, 4, 5, 8, 6, 7],
    [1, 2, 3, 4, 5, 8, 7, 6],
    [1, 2, 3, 4, 6, 5, 7, 8],
    [1, 2, 3, 4, 6, 5, 8, 7],
    [1, 2, 3, 4, 6, 8, 5, 7],
    [1, 2, 3, 4, 8, 5, 6, 7],
    [1, 2, 3, 4, 8, 5, 7, 6],
    [1, 2, 3, 4, 8, 6, 5, 7],
];

pub const LP4_TAIL: [[u8; 8]; 12] = [
    [1, 8, 6, 3, 4, 5, 2, 7],
    [1, 8, 6, 3, 4, 5, 7, 2],
    [1, 8, 6, 3, 5, 2, 4, 7],
    [1, 8, 6, 3, 5, 2, 7, 4],
    [1, 8, 6, 3, 5, 4, 2, 7],
    [1, 8, 6, 3, 5, 4, 7, 2],
    [1, 8, 6, 3, 5, 7, 2, 4],
    [1, 8, 6, 3, 5, 7, 4, 2],
    [1, 8, 6, 4, 2, 3, 5, 7],
    [1, 8, 6, 4, 3, 2, 5, 7],
    [1, 8, 6, 4, 3, 5, 2, 7],
    [1, 8, 6, 4, 3, 5, 7, 2],
];

pub const MIN4_HEAD: [[u8; 8]; 12] = [
    [1, 3, 2, 4, 5, 7, 6, 8],
    [1, 3, 2, 4, 6, 8, 5, 7],
    [1, 3, 2, 5, 4, 7, 6, 8],
    [1, 3, 2, 5, 4, 8, 6, 7],
    [1, 3, 2, 5, 7, 4, 6, 8],
    [1, 3, 2, 5, 7, 6, 4, 8],
    [1, 3, 2, 5, 8, 6, 4, 7],
    [1, 3, 2, 6, 4, 8, 5, 7],
    [1, 3, 2, 6, 8, 4, 5, 7],
    [1, 3, 2, 6, 8, 5, 4, 7],
    [1, 3, 2, 8, 4, 5, 7, 6],
    [1, 3, 2, 8, 5, 7, 4, 6],
];

pub const MIN4_TAIL: [[u8; 8]; 12] = [
    [1, 8, 3, 2, 6, 4, 5, 7],
    [1, 8, 3, 5, 2, 4, 6, 7],
    [1, 8, 3, 5, 4, 2, 6, 7],
    [1, 8, 3, 5, 7, 6, 2, 4],
    [1, 8, 3, 6, 4, 2, 5, 7],
    [1, 8, 4, 2, 3, 5, 7, 6],
    [1, 8, 4, 2, 6, 3, 5, 7],
    [1, 8, 4, 6, 2, 3, 5, 7],
    [1, 8, 4, 6, 3, 2, 5, 7],
    [1, 8, 6, 2, 3, 5, 4, 7],
    [1, 8, 6, 3, 5, 2, 4, 7],
    [1, 8, 6, 4, 2, 3, 5, 7],
];

/// (name, members as listed; the first member is the canonical one)
pub const ORIENTED4: [(&str, [[u8; 8]; 4]); 32] = [
    (
        "d4.1+",
        [
            [1, 3, 2, 4, 5, 7, 6, 8],
            [1, 3, 2, 4, 5, 7, 6, 8],
            [1, 8, 2, 3, 5, 4, 6, 7],
            [1, 8, 2, 3, 5, 4, 6, 7],
        ],
    ),
    (
        "d4.2+",
        [
            [1, 3, 2, 4, 6, 8, 5, 7],
            [1, 3, 5, 4, 6, 8, 2, 7],
            [1, 3, 5, 7, 6, 8, 2, 4],
            [1, 8, 2, 4, 6, 3, 5, 7],
        ],
    ),
    (
        "d4.3+",
        [
            [1, 3, 2, 5, 4, 7, 6, 8],
            [1, 8, 2, 3, 5, 4, 7, 6],
            [1, 8, 3, 2, 4, 5, 7, 6],
            [1, 8, 3, 2, 5, 4, 6, 7],
        ],
    ),
    (
        "d4.4+",
        [
            [1, 3, 2, 5, 4, 8, 6, 7],
            [1, 3, 5, 4, 7, 6, 2, 8],
            [1, 8, 3, 2, 6, 4, 5, 7],
            [1, 8, 4, 2, 3, 5, 7, 6],
        ],
    ),
    (
        "d4.5+",
        [
            [1, 3, 2, 5, 7, 4, 6, 8],
            [1, 3, 8, 2, 4, 5, 7, 6],
            [1, 6, 8, 2, 3, 5, 4, 7],
            [1, 8, 3, 5, 2, 4, 6, 7],
        ],
    ),
    (
        "d4.6+",
        [
            [1, 3, 2, 5, 7, 6, 4, 8],
            [1, 3, 2, 8, 4, 5, 7, 6],
            [1, 8, 3, 5, 4, 2, 6, 7],
            [1, 8, 6, 2, 3, 5, 4, 7],
        ],
    ),
    (
        "d4.7+",
        [
            [1, 3, 2, 5, 8, 6, 4, 7],
            [1, 3, 5, 4, 7, 2, 8, 6],
            [1, 4, 2, 8, 3, 5, 7, 6],
            [1, 8, 3, 6, 4, 2, 5, 7],
        ],
    ),
    (
        "d4.8+",
        [
            [1, 3, 2, 6, 4, 8, 5, 7],
            [1, 3, 5, 4, 8, 6, 2, 7],
            [1, 3, 5, 7, 6, 2, 8, 4],
            [1, 8, 4, 2, 6, 3, 5, 7],
        ],
    ),
    (
        "d4.9+",
        [
            [1, 3, 2, 6, 8, 4, 5, 7],
            [1, 3, 5, 4, 8, 2, 6, 7],
            [1, 3, 5, 7, 6, 2, 4, 8],
            [1, 8, 4, 6, 2, 3, 5, 7],
        ],
    ),
    (
        "d4.10+",
        [
            [1, 3, 2, 6, 8, 5, 4, 7],
            [1, 3, 5, 4, 8, 2, 7, 6],
            [1, 8, 3, 5, 7, 6, 2, 4],
            [1, 8, 4, 6, 3, 2, 5, 7],
        ],
    ),
    (
        "d4.11+",
        [
            [1, 3, 2, 8, 5, 7, 4, 6],
            [1, 3, 8, 2, 5, 7, 6, 4],
            [1, 6, 8, 3, 5, 4, 2, 7],
            [1, 8, 6, 3, 5, 2, 4, 7],
        ],
    ),
    (
        "d4.12+",
        [
            [1, 3, 2, 8, 6, 4, 5, 7],
            [1, 3, 5, 4, 2, 8, 6, 7],
            [1, 3, 5, 7, 6, 4, 2, 8],
            [1, 8, 6, 4, 2, 3, 5, 7],
        ],
    ),
    (
        "d4.13+",
        [
            [1, 3, 5, 2, 4, 7, 6, 8],
            [1, 3, 8, 2, 5, 4, 6, 7],
            [1, 6, 8, 3, 2, 4, 5, 7],
            [1, 8, 2, 3, 5, 7, 4, 6],
        ],
    ),
    (
        "d4.14+",
        [
            [1, 3, 5, 2, 4, 8, 6, 7],
            [1, 3, 5, 7, 4, 6, 2, 8],
            [1, 3, 8, 2, 6, 4, 5, 7],
            [1, 6, 8, 4, 2, 3, 5, 7],
        ],
    ),
    (
        "d4.15+",
        [
            [1, 3, 5, 2, 6, 7, 4, 8],
            [1, 3, 8, 4, 5, 2, 6, 7],
            [1, 6, 2, 3, 5, 7, 4, 8],
            [1, 6, 2, 3, 8, 4, 5, 7],
        ],
    ),
    (
        "d4.16+",
        [
            [1, 3, 5, 2, 6, 8, 4, 7],
            [1, 3, 5, 7, 4, 8, 2, 6],
            [1, 3, 8, 4, 6, 2, 5, 7],
            [1, 6, 2, 4, 8, 3, 5, 7],
        ],
    ),
    (
        "d4.10-",
        [
            [1, 3, 5, 2, 7, 6, 8, 4],
            [1, 3, 8, 5, 4, 6, 2, 7],
            [1, 6, 3, 2, 4, 8, 5, 7],
            [1, 8, 2, 6, 3, 5, 7, 4],
        ],
    ),
    (
        "d4.17+",
        [
            [1, 3, 5, 2, 8, 4, 6, 7],
            [1, 3, 5, 7, 4, 2, 6, 8],
            [1, 3, 8, 6, 2, 4, 5, 7],
            [1, 6, 4, 8, 2, 3, 5, 7],
        ],
    ),
    (
        "d4.18+",
        [
            [1, 3, 5, 2, 8, 6, 4, 7],
            [1, 3, 5, 7, 4, 2, 8, 6],
            [1, 3, 8, 6, 4, 2, 5, 7],
            [1, 6, 4, 2, 8, 3, 5, 7],
        ],
    ),
    (
        "d4.7-",
        [
            [1, 3, 5, 2, 8, 6, 7, 4],
            [1, 3, 8, 6, 4, 5, 2, 7],
            [1, 6, 3, 5, 7, 4, 2, 8],
            [1, 6, 4, 2, 3, 8, 5, 7],
        ],
    ),
    (
        "d4.17-",
        [
            [1, 3, 5, 7, 2, 4, 8, 6],
            [1, 3, 5, 8, 2, 6, 4, 7],
            [1, 3, 6, 8, 4, 2, 5, 7],
            [1, 4, 6, 2, 8, 3, 5, 7],
        ],
    ),
    (
        "d4.9-",
        [
            [1, 3, 5, 7, 2, 6, 8, 4],
            [1, 3, 5, 8, 4, 6, 2, 7],
            [1, 3, 6, 2, 4, 8, 5, 7],
            [1, 4, 8, 2, 6, 3, 5, 7],
        ],
    ),
    (
        "d4.14-",
        [
            [1, 3, 5, 7, 2, 8, 4, 6],
            [1, 3, 5, 8, 6, 2, 4, 7],
            [1, 3, 6, 4, 8, 2, 5, 7],
            [1, 4, 2, 6, 8, 3, 5, 7],
        ],
    ),
    (
        "d4.12-",
        [
            [1, 3, 5, 7, 2, 8, 6, 4],
            [1, 3, 5, 8, 6, 4, 2, 7],
            [1, 3, 6, 4, 2, 8, 5, 7],
            [1, 4, 2, 8, 6, 3, 5, 7],
        ],
    ),
    (
        "d4.13-",
        [
            [1, 3, 5, 8, 2, 7, 4, 6],
            [1, 3, 6, 8, 5, 2, 4, 7],
            [1, 4, 6, 3, 8, 2, 5, 7],
            [1, 6, 8, 3, 5, 7, 2, 4],
        ],
    ),
    (
        "d4.15-",
        [
            [1, 3, 5, 8, 4, 7, 2, 6],
            [1, 3, 6, 2, 5, 8, 4, 7],
            [1, 4, 8, 3, 5, 7, 2, 6],
            [1, 4, 8, 3, 6, 2, 5, 7],
        ],
    ),
    (
        "d4.4-",
        [
            [1, 3, 5, 8, 6, 2, 7, 4],
            [1, 3, 6, 4, 8, 5, 2, 7],
            [1, 4, 2, 6, 3, 8, 5, 7],
            [1, 6, 3, 5, 7, 2, 8, 4],
        ],
    ),
    (
        "d4.19+",
        [
            [1, 3, 6, 2, 5, 7, 4, 8],
            [1, 3, 8, 4, 5, 7, 2, 6],
            [1, 4, 8, 3, 5, 2, 6, 7],
            [1, 6, 2, 3, 5, 8, 4, 7],
        ],
    ),
    (
        "d4.6-",
        [
            [1, 3, 6, 2, 8, 5, 7, 4],
            [1, 3, 8, 5, 7, 2, 6, 4],
            [1, 4, 8, 6, 3, 5, 2, 7],
            [1, 6, 3, 5, 8, 4, 2, 7],
        ],
    ),
    (
        "d4.5-",
        [
            [1, 3, 6, 8, 2, 5, 7, 4],
            [1, 3, 8, 5, 7, 2, 4, 6],
            [1, 4, 6, 8, 3, 5, 2, 7],
            [1, 6, 3, 5, 8, 2, 4, 7],
        ],
    ),
    (
        "d4.3-",
        [
            [1, 3, 6, 8, 5, 2, 7, 4],
            [1, 4, 6, 3, 8, 5, 2, 7],
            [1, 6, 3, 5, 8, 2, 7, 4],
            [1, 6, 3, 8, 5, 7, 2, 4],
        ],
    ),
    (
        "d4.1-",
        [
            [1, 3, 6, 8, 5, 7, 2, 4],
            [1, 3, 6, 8, 5, 7, 2, 4],
            [1, 4, 6, 3, 5, 8, 2, 7],
            [1, 4, 6, 3, 5, 8, 2, 7],
        ],
    ),
];

/// (name, canonical, oriented canonicals making up the class)
pub type UnorientedRow = (&'static str, [u8; 8], &'static [[u8; 8]]);

pub const UNORIENTED4: [UnorientedRow; 19] = [
    (
        "d4.1",
        [1, 3, 2, 4, 5, 7, 6, 8],
        &[[1, 3, 2, 4, 5, 7, 6, 8], [1, 3, 6, 8, 5, 7, 2, 4]],
    ),
    (
        "d4.2",
        [1, 3, 2, 4, 6, 8, 5, 7],
        &[[1, 3, 2, 4, 6, 8, 5, 7]],
    ),
    (
        "d4.3",
        [1, 3, 2, 5, 4, 7, 6, 8],
        &[[1, 3, 2, 5, 4, 7, 6, 8], [1, 3, 6, 8, 5, 2, 7, 4]],
    ),
    (
        "d4.4",
        [1, 3, 2, 5, 4, 8, 6, 7],
        &[[1, 3, 2, 5, 4, 8, 6, 7], [1, 3, 5, 8, 6, 2, 7, 4]],
    ),
    (
        "d4.5",
        [1, 3, 2, 5, 7, 4, 6, 8],
        &[[1, 3, 2, 5, 7, 4, 6, 8], [1, 3, 6, 8, 2, 5, 7, 4]],
    ),
    (
        "d4.6",
        [1, 3, 2, 5, 7, 6, 4, 8],
        &[[1, 3, 2, 5, 7, 6, 4, 8], [1, 3, 6, 2, 8, 5, 7, 4]],
    ),
    (
        "d4.7",
        [1, 3, 2, 5, 8, 6, 4, 7],
        &[[1, 3, 2, 5, 8, 6, 4, 7], [1, 3, 5, 2, 8, 6, 7, 4]],
    ),
    (
        "d4.8",
        [1, 3, 2, 6, 4, 8, 5, 7],
        &[[1, 3, 2, 6, 4, 8, 5, 7]],
    ),
    (
        "d4.9",
        [1, 3, 2, 6, 8, 4, 5, 7],
        &[[1, 3, 2, 6, 8, 4, 5, 7], [1, 3, 5, 7, 2, 6, 8, 4]],
    ),
    (
        "d4.10",
        [1, 3, 2, 6, 8, 5, 4, 7],
        &[[1, 3, 2, 6, 8, 5, 4, 7], [1, 3, 5, 2, 7, 6, 8, 4]],
    ),
    (
        "d4.11",
        [1, 3, 2, 8, 5, 7, 4, 6],
        &[[1, 3, 2, 8, 5, 7, 4, 6]],
    ),
    (
        "d4.12",
        [1, 3, 2, 8, 6, 4, 5, 7],
        &[[1, 3, 2, 8, 6, 4, 5, 7], [1, 3, 5, 7, 2, 8, 6, 4]],
    ),
    (
        "d4.13",
        [1, 3, 5, 2, 4, 7, 6, 8],
        &[[1, 3, 5, 2, 4, 7, 6, 8], [1, 3, 5, 8, 2, 7, 4, 6]],
    ),
    (
        "d4.14",
        [1, 3, 5, 2, 4, 8, 6, 7],
        &[[1, 3, 5, 2, 4, 8, 6, 7], [1, 3, 5, 7, 2, 8, 4, 6]],
    ),
    (
        "d4.15",
        [1, 3, 5, 2, 6, 7, 4, 8],
        &[[1, 3, 5, 2, 6, 7, 4, 8], [1, 3, 5, 8, 4, 7, 2, 6]],
    ),
    (
        "d4.16",
        [1, 3, 5, 2, 6, 8, 4, 7],
        &[[1, 3, 5, 2, 6, 8, 4, 7]],
    ),
    (
        "d4.17",
        [1, 3, 5, 2, 8, 4, 6, 7],
        &[[1, 3, 5, 2, 8, 4, 6, 7], [1, 3, 5, 7, 2, 4, 8, 6]],
    ),
    (
        "d4.18",
        [1, 3, 5, 2, 8, 6, 4, 7],
        &[[1, 3, 5, 2, 8, 6, 4, 7]],
    ),
    (
        "d4.19",
        [1, 3, 6, 2, 5, 7, 4, 8],
        &[[1, 3, 6, 2, 5, 7, 4, 8]],
    ),
];
