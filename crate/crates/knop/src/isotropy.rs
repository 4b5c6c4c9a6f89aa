use crate::reduce::ReductionResult;
use crate::KnopError;
use mfsr_lattice::linalg::rank_i64;
use mfsr_lattice::{Rational, Root, RootSystem, Series, SimpleFactor, Weight};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// simple parts ⊕ t^torusDim ⊕ sp_{2k−1} for each k in oddSymplecticParts
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IsotropyDescription {
    pub simple_parts: Vec<SimpleFactor>,
    pub torus_dim: usize,
    pub odd_symplectic_parts: Vec<u32>,
}

impl IsotropyDescription {
    /// Sorts parts and rewrites low-rank coincidences (B2 = C2, D3 = A3,
    /// B1 = C1 = A1).
    pub fn normalized(mut self) -> Self {
        for f in self.simple_parts.iter_mut() {
            *f = normalize_factor(*f);
        }
        self.simple_parts.sort();
        self.odd_symplectic_parts.retain(|&k| k > 0);
        self.odd_symplectic_parts.sort();
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.simple_parts.is_empty() && self.torus_dim == 0 && self.odd_symplectic_parts.is_empty()
    }

    pub fn dim(&self) -> usize {
        let s: usize = self.simple_parts.iter().map(|f| f.dim()).sum();
        // sp_{2k-1}: stabilizer of a vector in C^{2k}
        let o: usize = self
            .odd_symplectic_parts
            .iter()
            .map(|&k| {
                let k = k as usize;
                k * (2 * k + 1) - 2 * k
            })
            .sum();
        s + o + self.torus_dim
    }
}

pub fn normalize_factor(f: SimpleFactor) -> SimpleFactor {
    match (f.series, f.rank) {
        (Series::B | Series::C, 1) => SimpleFactor::a(1),
        (Series::B, 2) => SimpleFactor { series: Series::C, rank: 2 },
        (Series::D, 3) => SimpleFactor::a(3),
        _ => f,
    }
}

impl fmt::Display for IsotropyDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple_parts.iter().map(|s| s.to_string()).collect();
        parts.extend(self.odd_symplectic_parts.iter().map(|k| format!("sp({})", 2 * k - 1)));
        if self.torus_dim > 0 {
            parts.push(format!("t{}", self.torus_dim));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Type of an irreducible root system given by its roots.
pub fn classify_subsystem(roots: &[&Root]) -> Result<SimpleFactor, KnopError> {
    let n = rank_i64::<Rational>(&roots.iter().map(|r| r.weight.0.clone()).collect::<Vec<_>>());
    let count = roots.len();
    let max = roots.iter().map(|r| r.norm).max().unwrap_or(0);
    let long = roots.iter().filter(|r| r.norm == max).count();
    let uniform = long == count;
    let f = |series, rank| SimpleFactor { series, rank };
    let found = if uniform {
        if count == n * (n + 1) {
            Some(f(Series::A, n))
        } else if n >= 4 && count == 2 * n * (n - 1) {
            Some(f(Series::D, n))
        } else if n == 6 && count == 72 {
            Some(f(Series::E6, 6))
        } else if n == 7 && count == 126 {
            Some(f(Series::E7, 7))
        } else {
            None
        }
    } else if n == 2 && count == 12 {
        Some(f(Series::G2, 2))
    } else if n >= 2 && count == 2 * n * n {
        if long == 2 * n {
            Some(f(Series::C, n))
        } else if long == 2 * n * (n - 1) {
            Some(f(Series::B, n))
        } else {
            None
        }
    } else {
        None
    };
    found
        .map(normalize_factor)
        .ok_or_else(|| KnopError::InternalConsistency(format!("unrecognized root subsystem: rank {n}, {count} roots")))
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let nxt = p[y];
        p[y] = r;
        y = nxt;
    }
    r
}

/// Irreducible components of Δ₀, as lists of root indices.
fn components(sys: &RootSystem, delta0: &[usize]) -> Vec<Vec<usize>> {
    let k = delta0.len();
    let mut p: Vec<usize> = (0..k).collect();
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (&sys.roots[delta0[i]], &sys.roots[delta0[j]]);
            if a.factor == b.factor && a.pair(&b.weight.0) != 0 {
                let (x, y) = (find(&mut p, i), find(&mut p, j));
                p[x] = y;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..k {
        let r = find(&mut p, i);
        groups.entry(r).or_default().push(delta0[i]);
    }
    groups.into_values().collect()
}

/// The generic isotropy algebra read off the output of the reduction.
pub fn generic_isotropy(result: &ReductionResult, sys: &RootSystem) -> Result<IsotropyDescription, KnopError> {
    let comps = components(sys, &result.delta0_index);
    let comp_of: HashMap<usize, usize> = comps
        .iter()
        .enumerate()
        .flat_map(|(c, rs)| rs.iter().map(move |&r| (r, c)))
        .collect();
    let root_weights: std::collections::HashSet<&Weight> =
        result.delta0_index.iter().map(|&r| &sys.roots[r].weight).collect();

    // singular classes: χ₁ ~ χ₂ when χ₁ − χ₂ ∈ Δ₀
    let sing: Vec<Weight> = result.phi0_singular.iter().map(|(w, _)| w.clone()).collect();
    let mut p: Vec<usize> = (0..sing.len()).collect();
    for i in 0..sing.len() {
        for j in i + 1..sing.len() {
            if root_weights.contains(&sing[i].sub(&sing[j])) {
                let (x, y) = (find(&mut p, i), find(&mut p, j));
                p[x] = y;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..sing.len() {
        let r = find(&mut p, i);
        classes.entry(r).or_default().push(i);
    }

    let mut consumed = vec![false; comps.len()];
    let mut odd = Vec::new();
    for members in classes.values() {
        let size = members.len();
        if size % 2 != 0 {
            return Err(KnopError::InternalConsistency(format!("singular class of odd size {size}")));
        }
        let m = size / 2;
        let double = sing[members[0]].scale(2);
        let r = result
            .delta0_index
            .iter()
            .copied()
            .find(|&r| sys.roots[r].weight == double)
            .ok_or_else(|| KnopError::InternalConsistency("2χ of a singular weight is not in Δ₀".into()))?;
        let c = comp_of[&r];
        let roots: Vec<&Root> = comps[c].iter().map(|&r| &sys.roots[r]).collect();
        let ty = classify_subsystem(&roots)?;
        let fits = ty.rank == m && ((ty.series == Series::C) || (m == 1 && ty.is_a1()));
        if !fits || consumed[c] {
            return Err(KnopError::InternalConsistency(format!(
                "singular class of size {size} does not match the subsystem {ty}"
            )));
        }
        consumed[c] = true;
        odd.push(m as u32);
    }

    let mut simple = Vec::new();
    for (c, rs) in comps.iter().enumerate() {
        if !consumed[c] {
            let roots: Vec<&Root> = rs.iter().map(|&r| &sys.roots[r]).collect();
            simple.push(classify_subsystem(&roots)?);
        }
    }

    let mut span: Vec<Vec<i64>> = result.delta0.iter().map(|w| w.0.clone()).collect();
    span.extend(result.phi0_toroidal.iter().map(|(w, _)| w.0.clone()));
    let spanned = if span.is_empty() { 0 } else { rank_i64::<Rational>(&span) };
    let total = sys.shape.total_rank();
    let torus_dim = total
        .checked_sub(spanned)
        .ok_or_else(|| KnopError::InternalConsistency("span exceeds the rank".into()))?;
    Ok(IsotropyDescription {
        simple_parts: simple,
        torus_dim,
        odd_symplectic_parts: odd,
    }
    .normalized())
}
