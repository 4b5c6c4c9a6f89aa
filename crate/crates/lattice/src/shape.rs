use crate::LatticeError;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E6,
    E7,
    G2,
}

impl Series {
    pub fn letter(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E6 | Series::E7 => "E",
            Series::G2 => "G",
        }
    }
}

/// A simple Lie algebra, identified by Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub series: Series,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(series: Series, rank: usize) -> Result<Self, LatticeError> {
        let bad = |reason| {
            Err(LatticeError::InvalidFactor {
                series: series.letter().to_string(),
                rank,
                reason,
            })
        };
        match series {
            Series::A | Series::C if rank == 0 => bad("rank must be positive"),
            Series::B if rank < 2 => bad("B needs rank >= 2 (write A1 for so(3))"),
            Series::D if rank < 3 => bad("D needs rank >= 3 (so(4) is sl(2)*sl(2))"),
            Series::E6 if rank != 6 => bad("E6 has rank 6"),
            Series::E7 if rank != 7 => bad("E7 has rank 7"),
            Series::G2 if rank != 2 => bad("G2 has rank 2"),
            _ => Ok(SimpleFactor { series, rank }),
        }
    }

    /// Parse a series letter and rank, e.g. `("E", 6)`.
    pub fn from_letter(letter: &str, rank: usize) -> Result<Self, LatticeError> {
        let series = match (letter, rank) {
            ("A", _) => Series::A,
            ("B", _) => Series::B,
            ("C", _) => Series::C,
            ("D", _) => Series::D,
            ("E", 6) => Series::E6,
            ("E", 7) => Series::E7,
            ("G", 2) => Series::G2,
            _ => {
                return Err(LatticeError::InvalidFactor {
                    series: letter.to_string(),
                    rank,
                    reason: "unsupported series",
                })
            }
        };
        Self::new(series, rank)
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Series::A, rank).unwrap()
    }

    pub fn is_a1(&self) -> bool {
        self.series == Series::A && self.rank == 1
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E6 => 72,
            Series::E7 => 126,
            Series::G2 => 12,
        }
    }

    pub fn dim(&self) -> usize {
        self.root_count() + self.rank
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// A reductive Lie algebra: simple factors plus a torus of dimension `torus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AlgebraShape {
    pub factors: Vec<SimpleFactor>,
    pub torus: usize,
}

impl AlgebraShape {
    pub fn new(factors: Vec<SimpleFactor>, torus: usize) -> Self {
        AlgebraShape { factors, torus }
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn total_rank(&self) -> usize {
        self.semisimple_rank() + self.torus
    }

    /// Starting coordinate of each factor block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut at = 0;
        for f in &self.factors {
            out.push(at);
            at += f.rank;
        }
        out
    }

    pub fn offset(&self, factor: usize) -> usize {
        self.factors[..factor].iter().map(|f| f.rank).sum()
    }

    pub fn torus_offset(&self) -> usize {
        self.semisimple_rank()
    }

    pub fn root_count(&self) -> usize {
        self.factors.iter().map(|f| f.root_count()).sum()
    }

    pub fn dim(&self) -> usize {
        self.root_count() + self.total_rank()
    }
}

impl fmt::Display for AlgebraShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        if self.torus > 0 {
            parts.push(format!("t{}", self.torus));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}
