use mfsr_lattice::{dominant_conjugate, factor_data, AlgebraShape, LatticeError, Weight};
use serde::{Deserialize, Serialize};
use std::fmt;

/// How a factor's highest weight was written down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Origin {
    Defining,
    Spin(Option<char>),
    Ext(u32),
    Ext0(u32),
    Sym(u32),
    Hw,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Defining => write!(f, "defining"),
            Origin::Spin(None) => write!(f, "spin"),
            Origin::Spin(Some(s)) => write!(f, "spin{s}"),
            Origin::Ext(k) => write!(f, "ext({k})"),
            Origin::Ext0(k) => write!(f, "ext0({k})"),
            Origin::Sym(k) => write!(f, "sym({k})"),
            Origin::Hw => write!(f, "hw"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DualityClass {
    Symplectic,
    Orthogonal,
    NotSelfDual,
}

impl fmt::Display for DualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityClass::Symplectic => "symplectic",
            DualityClass::Orthogonal => "orthogonal",
            DualityClass::NotSelfDual => "notSelfDual",
        })
    }
}

/// An irreducible module of the whole algebra: one highest weight per
/// factor and a torus character, packed into a single full-length weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrreducibleSummand {
    pub highest: Weight,
    /// (factor index, origin) for every factor acting nontrivially
    pub origins: Vec<(usize, Origin)>,
}

impl IrreducibleSummand {
    pub fn new(highest: Weight) -> Self {
        IrreducibleSummand {
            highest,
            origins: Vec::new(),
        }
    }

    pub fn block<'a>(&'a self, shape: &AlgebraShape, f: usize) -> &'a [i64] {
        let off = shape.offset(f);
        &self.highest.0[off..off + shape.factors[f].rank]
    }

    pub fn torus<'a>(&'a self, shape: &AlgebraShape) -> &'a [i64] {
        &self.highest.0[shape.torus_offset()..]
    }

    pub fn acts_on(&self, shape: &AlgebraShape, f: usize) -> bool {
        self.block(shape, f).iter().any(|&c| c != 0)
    }

    /// The highest weight with the torus character dropped.
    pub fn semisimple(&self, shape: &AlgebraShape) -> Weight {
        Weight(self.highest.0[..shape.torus_offset()].to_vec())
    }

    pub fn dim(&self, shape: &AlgebraShape) -> Result<u64, LatticeError> {
        mfsr_lattice::weyl_dimension(shape, &self.highest)
    }

    pub fn describe(&self, shape: &AlgebraShape) -> String {
        let mut parts = Vec::new();
        for (i, f) in shape.factors.iter().enumerate() {
            let b = self.block(shape, i);
            if b.iter().any(|&c| c != 0) {
                let c: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                parts.push(format!("{f}#{i}[{}]", c.join(",")));
            }
        }
        let t = self.torus(shape);
        if t.iter().any(|&c| c != 0) {
            let c: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            parts.push(format!("t[{}]", c.join(",")));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("⊗")
        }
    }
}

/// Highest weight of the dual module: per factor the dominant conjugate of
/// −λ, with the torus character negated.
pub fn dual_highest(shape: &AlgebraShape, w: &Weight) -> Result<Weight, LatticeError> {
    let mut out = w.neg();
    for (i, f) in shape.factors.iter().enumerate() {
        let off = shape.offset(i);
        let block = &out.0[off..off + f.rank];
        if block.iter().all(|&c| c == 0) {
            continue;
        }
        let data = factor_data(*f)?;
        let (d, _) = dominant_conjugate(&data, block);
        out.0[off..off + f.rank].copy_from_slice(&d);
    }
    Ok(out)
}

pub fn dual_summand(shape: &AlgebraShape, s: &IrreducibleSummand) -> Result<IrreducibleSummand, LatticeError> {
    Ok(IrreducibleSummand {
        highest: dual_highest(shape, &s.highest)?,
        origins: s.origins.clone(),
    })
}

/// Symplectic, orthogonal, or not self-dual. A nonzero torus character makes
/// any module non-self-dual.
pub fn duality_class(shape: &AlgebraShape, s: &IrreducibleSummand) -> Result<DualityClass, LatticeError> {
    if s.torus(shape).iter().any(|&c| c != 0) {
        return Ok(DualityClass::NotSelfDual);
    }
    if dual_highest(shape, &s.highest)? != s.highest {
        return Ok(DualityClass::NotSelfDual);
    }
    // <λ, 2ρ∨> = Σ_{α>0} <λ, α∨>
    let mut parity = 0i64;
    for (i, f) in shape.factors.iter().enumerate() {
        let b = s.block(shape, i);
        if b.iter().all(|&c| c == 0) {
            continue;
        }
        let data = factor_data(*f)?;
        for r in data.positive_roots() {
            parity += r.coroot.iter().zip(b).map(|(n, l)| n * l).sum::<i64>();
        }
    }
    Ok(if parity % 2 != 0 {
        DualityClass::Symplectic
    } else {
        DualityClass::Orthogonal
    })
}
