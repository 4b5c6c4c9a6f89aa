//! Cartan data for a single simple factor (Bourbaki numbering).

use crate::linalg;
use crate::shape::{Series, SimpleFactor};
use crate::Rational;
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeSet, VecDeque};

/// A root of one simple factor, described three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorRoot {
    /// coefficients in the simple roots
    pub simple: Vec<i64>,
    /// coordinates in the fundamental weights
    pub fund: Vec<i64>,
    /// coefficients of the coroot in the simple coroots
    pub coroot: Vec<i64>,
    /// (α, α) in the units of `FactorData::gram`
    pub norm: i64,
}

impl FactorRoot {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.simple.iter().all(|&c| c >= 0)
    }
}

#[derive(Debug, Clone)]
pub struct FactorData {
    pub factor: SimpleFactor,
    /// symmetric Gram matrix (α_i, α_j)
    pub gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = <α_i, α_j∨>`; row i is α_i in fundamental coordinates
    pub cartan: Vec<Vec<i64>>,
    /// (ω_i, ω_j)
    pub weight_gram: Vec<Vec<Rational>>,
    /// positive roots first (by height, then coefficients), then their negatives
    pub roots: Vec<FactorRoot>,
}

fn chain(n: usize, edges: &[(usize, usize)], diag: &[i64]) -> Vec<Vec<i64>> {
    let mut s = vec![vec![0i64; n]; n];
    for i in 0..n {
        s[i][i] = diag[i];
    }
    for &(a, b) in edges {
        s[a][b] = -1;
        s[b][a] = -1;
    }
    s
}

fn path(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub fn gram_matrix(f: SimpleFactor) -> Vec<Vec<i64>> {
    let n = f.rank;
    match f.series {
        Series::A | Series::D | Series::E6 | Series::E7 => {
            let edges: Vec<(usize, usize)> = match f.series {
                Series::A => path(n),
                Series::D => {
                    let mut e = path(n - 1);
                    e.push((n - 3, n - 1));
                    e
                }
                // Bourbaki: 1-3-4-5-6(-7), 2 attached to 4
                _ => {
                    let mut e = vec![(0, 2), (1, 3)];
                    e.extend((3..n).map(|i| (i - 1, i)));
                    e
                }
            };
            chain(n, &edges, &vec![2; n])
        }
        Series::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            chain(n, &path(n), &d)
        }
        Series::C => {
            let mut d = vec![2; n];
            d[n - 1] = 4;
            let mut s = chain(n, &path(n), &d);
            if n >= 2 {
                s[n - 2][n - 1] = -2;
                s[n - 1][n - 2] = -2;
            }
            s
        }
        Series::G2 => vec![vec![2, -3], vec![-3, 6]],
    }
}

impl FactorData {
    pub fn new(factor: SimpleFactor) -> Self {
        let n = factor.rank;
        let gram = gram_matrix(factor);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let inv = linalg::inverse(&linalg::lift::<Rational>(&cartan)).expect("Cartan matrix is invertible");
        let weight_gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| &inv[k][i] * Rational::from_integer(gram[i][i].into()) / Rational::from_integer(2.into()))
                    .collect()
            })
            .collect();
        let mut data = FactorData {
            factor,
            gram,
            cartan,
            weight_gram,
            roots: Vec::new(),
        };
        data.roots = data.generate_roots();
        data
    }

    pub fn rank(&self) -> usize {
        self.factor.rank
    }

    /// <β, α_i∨> for β given by simple-root coefficients.
    fn pair_simple(&self, m: &[i64], i: usize) -> i64 {
        m.iter().enumerate().map(|(k, &c)| c * self.cartan[k][i]).sum()
    }

    fn generate_roots(&self) -> Vec<FactorRoot> {
        let n = self.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let c = self.pair_simple(&b, i);
                if c == 0 {
                    continue;
                }
                let mut r = b.clone();
                r[i] -= c;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|m| m.iter().all(|&c| c >= 0)).collect();
        pos.sort_by_key(|m| (m.iter().sum::<i64>(), m.clone()));
        let neg: Vec<Vec<i64>> = pos.iter().map(|m| m.iter().map(|c| -c).collect()).collect();
        pos.into_iter().chain(neg).map(|m| self.describe(m)).collect()
    }

    fn describe(&self, simple: Vec<i64>) -> FactorRoot {
        let n = self.rank();
        let mut norm = 0;
        for i in 0..n {
            for j in 0..n {
                norm += simple[i] * simple[j] * self.gram[i][j];
            }
        }
        let fund = (0..n).map(|j| self.pair_simple(&simple, j)).collect();
        let coroot = (0..n)
            .map(|k| {
                let v = simple[k] * self.gram[k][k];
                debug_assert_eq!(v % norm, 0);
                v / norm
            })
            .collect();
        FactorRoot {
            simple,
            fund,
            coroot,
            norm,
        }
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &FactorRoot> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    /// (λ, μ) for weights in fundamental coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for i in 0..a.len() {
            if a[i] == 0 {
                continue;
            }
            for k in 0..b.len() {
                if b[k] != 0 {
                    s += &self.weight_gram[i][k] * Rational::from_integer((a[i] * b[k]).into());
                }
            }
        }
        s
    }

    /// The weight Gram matrix as (numerator, common denominator).
    pub fn weight_gram_scaled(&self) -> (Vec<Vec<i64>>, i64) {
        let mut den = num_bigint::BigInt::from(1);
        for row in &self.weight_gram {
            for x in row {
                den = num_integer::Integer::lcm(&den, x.denom());
            }
        }
        let d = Rational::from_integer(den.clone());
        let m = self
            .weight_gram
            .iter()
            .map(|row| row.iter().map(|x| (x * &d).to_integer().to_i64().unwrap()).collect())
            .collect();
        (m, den.to_i64().unwrap())
    }

    /// Simple reflection s_i on a weight in fundamental coordinates.
    pub fn reflect(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c != 0 {
            for j in 0..w.len() {
                w[j] -= c * self.cartan[i][j];
            }
        }
    }
}

/// Shared, memoized Cartan data. The cache only avoids recomputation; the
/// data for a given factor never changes.
pub fn factor_data(f: SimpleFactor) -> Result<std::sync::Arc<FactorData>, crate::LatticeError> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<SimpleFactor, Arc<FactorData>>>> = OnceLock::new();
    let f = SimpleFactor::new(f.series, f.rank)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().unwrap().get(&f) {
        return Ok(d.clone());
    }
    let d = Arc::new(FactorData::new(f));
    cache.lock().unwrap().insert(f, d.clone());
    Ok(d)
}
