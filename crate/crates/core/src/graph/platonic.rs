//! Vertex-indexed adjacency data for the five platonic solids, with a pair of
//! permutations generating each solid's rotation group.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub const ALL: [PlatonicSolid; 5] = [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Dodecahedron,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            PlatonicSolid::Tetrahedron => 4,
            PlatonicSolid::Cube => 8,
            PlatonicSolid::Octahedron => 6,
            PlatonicSolid::Dodecahedron => 20,
            PlatonicSolid::Icosahedron => 12,
        }
    }

    pub(crate) fn edges(self) -> &'static [(usize, usize)] {
        match self {
            PlatonicSolid::Tetrahedron => TETRAHEDRON_EDGES,
            PlatonicSolid::Cube => CUBE_EDGES,
            PlatonicSolid::Octahedron => OCTAHEDRON_EDGES,
            PlatonicSolid::Dodecahedron => DODECAHEDRON_EDGES,
            PlatonicSolid::Icosahedron => ICOSAHEDRON_EDGES,
        }
    }

    /// Two rotations generating the full rotation group (orders 12, 24, 24,
    /// 60, 60).
    pub(crate) fn rotation_generators(self) -> [&'static [usize]; 2] {
        match self {
            PlatonicSolid::Tetrahedron => [&[0, 3, 1, 2], &[1, 0, 3, 2]],
            PlatonicSolid::Cube => [&[0, 3, 1, 2, 5, 6, 4, 7], &[1, 0, 5, 4, 3, 2, 7, 6]],
            PlatonicSolid::Octahedron => [&[0, 4, 3, 1, 2, 5], &[1, 0, 5, 4, 3, 2]],
            PlatonicSolid::Dodecahedron => [
                &[
                    0, 3, 1, 2, 8, 9, 4, 5, 6, 7, 14, 15, 10, 11, 12, 13, 17, 18, 16, 19,
                ],
                &[
                    1, 0, 5, 4, 3, 2, 11, 8, 7, 10, 9, 6, 17, 14, 13, 16, 15, 12, 19, 18,
                ],
            ],
            PlatonicSolid::Icosahedron => [
                &[0, 5, 1, 4, 2, 3, 10, 6, 7, 8, 9, 11],
                &[1, 0, 5, 7, 6, 2, 4, 3, 10, 11, 8, 9],
            ],
        }
    }
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PlatonicSolid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" => Ok(PlatonicSolid::Tetrahedron),
            "cube" | "hexahedron" => Ok(PlatonicSolid::Cube),
            "octahedron" => Ok(PlatonicSolid::Octahedron),
            "dodecahedron" => Ok(PlatonicSolid::Dodecahedron),
            "icosahedron" => Ok(PlatonicSolid::Icosahedron),
            other => Err(format!(
                "unknown platonic solid `{other}` (expected tetrahedron, cube, octahedron, dodecahedron or icosahedron)"
            )),
        }
    }
}

#[rustfmt::skip]
const TETRAHEDRON_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
];

#[rustfmt::skip]
const CUBE_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4),
    (2, 6), (3, 5), (3, 6), (4, 7), (5, 7), (6, 7),
];

#[rustfmt::skip]
const OCTAHEDRON_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4),
    (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5),
];

#[rustfmt::skip]
const DODECAHEDRON_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6),
    (2, 7), (3, 8), (3, 9), (4, 7), (4, 10), (5, 8),
    (5, 11), (6, 9), (6, 12), (7, 13), (8, 14), (9, 15),
    (10, 11), (10, 16), (11, 17), (12, 13), (12, 18), (13, 16),
    (14, 15), (14, 17), (15, 18), (16, 19), (17, 19), (18, 19),
];

#[rustfmt::skip]
const ICOSAHEDRON_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2),
    (1, 5), (1, 6), (1, 7), (2, 4), (2, 7), (2, 8),
    (3, 4), (3, 5), (3, 9), (3, 10), (4, 8), (4, 9),
    (5, 6), (5, 10), (6, 7), (6, 10), (6, 11), (7, 8),
    (7, 11), (8, 9), (8, 11), (9, 10), (9, 11), (10, 11),
];
