use crate::cartan::{factor_data, FactorData};
use crate::shape::AlgebraShape;
use crate::weight::Weight;
use crate::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub factor: usize,
    /// first coordinate of the factor block
    pub offset: usize,
    /// full-length coordinates (zero outside the block)
    pub weight: Weight,
    pub simple: Vec<i64>,
    pub coroot: Vec<i64>,
    pub norm: i64,
}

impl Root {
    /// <χ | α∨>
    pub fn pair(&self, chi: &[i64]) -> i64 {
        self.coroot
            .iter()
            .enumerate()
            .map(|(k, &n)| n * chi[self.offset + k])
            .sum()
    }

    pub fn is_positive(&self) -> bool {
        self.simple.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub shape: AlgebraShape,
    pub factors: Vec<std::sync::Arc<FactorData>>,
    pub roots: Vec<Root>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.roots.iter().position(|r| &r.weight == w)
    }

    /// The simple root α_i of factor `f`, as a full-length weight.
    pub fn simple_root(&self, f: usize, i: usize) -> Weight {
        let off = self.shape.offset(f);
        let mut w = vec![0; self.shape.total_rank()];
        for (j, &c) in self.factors[f].cartan[i].iter().enumerate() {
            w[off + j] = c;
        }
        Weight(w)
    }
}

pub fn build_root_system(shape: &AlgebraShape) -> Result<RootSystem, LatticeError> {
    let n = shape.total_rank();
    let mut factors = Vec::new();
    let mut roots = Vec::new();
    for (fi, f) in shape.factors.iter().enumerate() {
        let data = factor_data(*f)?;
        let f = data.factor;
        let off = shape.offset(fi);
        for r in &data.roots {
            let mut w = vec![0; n];
            w[off..off + f.rank].copy_from_slice(&r.fund);
            roots.push(Root {
                factor: fi,
                offset: off,
                weight: Weight(w),
                simple: r.simple.clone(),
                coroot: r.coroot.clone(),
                norm: r.norm,
            });
        }
        factors.push(data);
    }
    Ok(RootSystem {
        shape: shape.clone(),
        factors,
        roots,
    })
}

pub fn coroot_pairing(chi: &Weight, alpha: &Root, sys: &RootSystem) -> Result<i64, LatticeError> {
    let n = sys.shape.total_rank();
    if chi.len() != n {
        return Err(LatticeError::DimensionMismatch {
            expected: n,
            got: chi.len(),
        });
    }
    Ok(alpha.pair(&chi.0))
}
