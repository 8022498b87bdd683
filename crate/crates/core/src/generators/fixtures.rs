use std::fmt;
use std::str::FromStr;

use super::GeneratorError;
use crate::graph::{Girth, Graph};

/// Named witness graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    Dodecahedron,
    Petersen,
    Heawood,
    McGee,
    TutteCoxeter,
    K4,
    K5,
}

/// Declared parameters every fixture is checked against when it is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureInfo {
    pub order: usize,
    pub size: usize,
    pub degree: usize,
    pub girth: usize,
}

// Hamiltonian cubic graphs in LCF notation: (jumps, repetitions).
const DODECAHEDRON_LCF: (&[i32], usize) = (&[10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2);
const HEAWOOD_LCF: (&[i32], usize) = (&[5, -5], 7);
const MCGEE_LCF: (&[i32], usize) = (&[12, 7, -7], 8);
const TUTTE_COXETER_LCF: (&[i32], usize) = (&[-13, -9, 7, -7, 9, 13], 5);

// The Petersen graph is not Hamiltonian: outer 5-cycle, spokes, inner pentagram.
const PETERSEN_EDGES: [(usize, usize); 15] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
];

impl Fixture {
    pub const ALL: [Fixture; 7] = [
        Fixture::Dodecahedron,
        Fixture::Petersen,
        Fixture::Heawood,
        Fixture::McGee,
        Fixture::TutteCoxeter,
        Fixture::K4,
        Fixture::K5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Dodecahedron => "dodecahedron",
            Fixture::Petersen => "petersen",
            Fixture::Heawood => "heawood",
            Fixture::McGee => "mcgee",
            Fixture::TutteCoxeter => "tutte-coxeter",
            Fixture::K4 => "k4",
            Fixture::K5 => "k5",
        }
    }

    pub fn info(self) -> FixtureInfo {
        let (order, size, degree, girth) = match self {
            Fixture::Dodecahedron => (20, 30, 3, 5),
            Fixture::Petersen => (10, 15, 3, 5),
            Fixture::Heawood => (14, 21, 3, 6),
            Fixture::McGee => (24, 36, 3, 7),
            Fixture::TutteCoxeter => (30, 45, 3, 8),
            Fixture::K4 => (4, 6, 3, 3),
            Fixture::K5 => (5, 10, 4, 3),
        };
        FixtureInfo { order, size, degree, girth }
    }

    /// Builds the fixture and checks it against [`Fixture::info`].
    pub fn graph(self) -> Graph {
        let g = match self {
            Fixture::Dodecahedron => lcf(DODECAHEDRON_LCF),
            Fixture::Petersen => Graph::new(10, &PETERSEN_EDGES).expect("valid fixture"),
            Fixture::Heawood => lcf(HEAWOOD_LCF),
            Fixture::McGee => lcf(MCGEE_LCF),
            Fixture::TutteCoxeter => lcf(TUTTE_COXETER_LCF),
            Fixture::K4 => super::complete(4).unwrap(),
            Fixture::K5 => super::complete(5).unwrap(),
        };
        let info = self.info();
        assert_eq!(g.order(), info.order, "{} order", self.name());
        assert_eq!(g.size(), info.size, "{} size", self.name());
        assert!(
            (0..g.order()).all(|v| g.degree(v) == info.degree),
            "{} is not {}-regular",
            self.name(),
            info.degree
        );
        assert_eq!(g.girth(), Girth::Finite(info.girth), "{} girth", self.name());
        g
    }
}

fn lcf((jumps, reps): (&[i32], usize)) -> Graph {
    let n = jumps.len() * reps;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as i64 + jumps[i % jumps.len()] as i64).rem_euclid(n as i64) as usize;
        edges.push((i, j));
    }
    Graph::new(n, &edges).expect("valid LCF data")
}

impl FromStr for Fixture {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .or(match key.as_str() {
                "dodecahedral" => Some(Fixture::Dodecahedron),
                "tutte-8-cage" | "tuttecoxeter" => Some(Fixture::TutteCoxeter),
                _ => None,
            })
            .ok_or_else(|| GeneratorError::UnknownFixture(s.to_string()))
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
