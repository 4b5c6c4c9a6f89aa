//! Weight multiplicities by Freudenthal's recursion, and the Weyl dimension
//! formula as an independent check.

use crate::cartan::{factor_data, FactorData};
use crate::shape::AlgebraShape;
use crate::weight::{Weight, WeightMultiset};
use crate::{LatticeError, Rational, Scalar};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Reflect into the dominant chamber. Returns the dominant weight and the
/// simple-root coefficients `d` with `dominant = w + Σ d_i α_i`.
pub fn dominant_conjugate(data: &FactorData, w: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut w = w.to_vec();
    let mut d = vec![0; w.len()];
    while let Some(i) = w.iter().position(|&c| c < 0) {
        d[i] -= w[i];
        data.reflect(&mut w, i);
    }
    (w, d)
}

fn check_dominant(data: &FactorData, lambda: &[i64]) -> Result<(), LatticeError> {
    if lambda.len() != data.rank() {
        return Err(LatticeError::DimensionMismatch {
            expected: data.rank(),
            got: lambda.len(),
        });
    }
    if lambda.iter().any(|&c| c < 0) {
        return Err(LatticeError::NotDominant(lambda.to_vec()));
    }
    Ok(())
}

/// All dominant weights of V(λ), each with its depth λ − μ in simple roots.
fn dominant_weights(data: &FactorData, lambda: &[i64]) -> BTreeMap<Vec<i64>, Vec<i64>> {
    let mut depth: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    depth.insert(lambda.to_vec(), vec![0; lambda.len()]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        let c = depth[&mu].clone();
        for r in &data.roots {
            let nu: Vec<i64> = mu.iter().zip(&r.fund).map(|(a, b)| a - b).collect();
            let (dom, d) = dominant_conjugate(data, &nu);
            if depth.contains_key(&dom) {
                continue;
            }
            let cd: Vec<i64> = (0..c.len()).map(|i| c[i] + r.simple[i] - d[i]).collect();
            if cd.iter().all(|&x| x >= 0) {
                depth.insert(dom.clone(), cd);
                queue.push_back(dom);
            }
        }
    }
    depth
}

/// Multiplicities of the dominant weights of V(λ) for one simple factor.
pub fn dominant_multiplicities_in<F: Scalar>(
    data: &FactorData,
    lambda: &[i64],
) -> Result<BTreeMap<Vec<i64>, u64>, LatticeError> {
    check_dominant(data, lambda)?;
    let n = data.rank();
    let (g, den) = data.weight_gram_scaled();
    let den = F::of(den);
    let gram: Vec<Vec<F>> = g.iter().map(|r| r.iter().map(|&x| F::of(x) / den.clone()).collect()).collect();
    let inner = |a: &[i64], b: &[i64]| -> F {
        let mut s = F::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for k in 0..n {
                if b[k] != 0 {
                    s = s + gram[i][k].clone() * F::of(a[i] * b[k]);
                }
            }
        }
        s
    };
    let plus_rho = |w: &[i64]| -> Vec<i64> { w.iter().map(|x| x + 1).collect() };

    let depth = dominant_weights(data, lambda);
    let mut order: Vec<&Vec<i64>> = depth.keys().collect();
    order.sort_by_key(|w| (depth[*w].iter().sum::<i64>(), (*w).clone()));

    let lr = plus_rho(lambda);
    let top = inner(&lr, &lr);
    let positive: Vec<_> = data.positive_roots().collect();
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for mu in order {
        if mu.as_slice() == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut sum = F::zero();
        for a in &positive {
            let mut k = 1;
            loop {
                let v: Vec<i64> = mu.iter().zip(&a.fund).map(|(x, y)| x + k * y).collect();
                let (dom, _) = dominant_conjugate(data, &v);
                let Some(&m) = mult.get(&dom) else { break };
                sum = sum + F::of(m as i64) * inner(&v, &a.fund);
                k += 1;
            }
        }
        let mr = plus_rho(mu);
        let denom = top.clone() - inner(&mr, &mr);
        let value = (F::of(2) * sum) / denom;
        let m = value
            .as_integer()
            .filter(|&m| m >= 0)
            .ok_or(LatticeError::NonIntegral("Freudenthal multiplicity"))?;
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }
    Ok(mult)
}

/// The W-orbit of a weight, by closure under simple reflections.
pub fn orbit(data: &FactorData, w: &[i64]) -> Vec<Vec<i64>> {
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            let mut y = x.clone();
            data.reflect(&mut y, i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// All weights of V(λ) for one simple factor.
pub fn factor_weights_in<F: Scalar>(
    data: &FactorData,
    lambda: &[i64],
) -> Result<BTreeMap<Vec<i64>, u64>, LatticeError> {
    let mut out = BTreeMap::new();
    for (mu, m) in dominant_multiplicities_in::<F>(data, lambda)? {
        for w in orbit(data, &mu) {
            out.insert(w, m);
        }
    }
    Ok(out)
}

/// Weights of the irreducible module with highest weight `lambda` over the
/// whole shape; torus coordinates pass through unchanged.
pub fn irreducible_weights_in<F: Scalar>(
    shape: &AlgebraShape,
    lambda: &Weight,
) -> Result<WeightMultiset, LatticeError> {
    let n = shape.total_rank();
    if lambda.len() != n {
        return Err(LatticeError::DimensionMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let mut cur: Vec<(Vec<i64>, u64)> = vec![(lambda.0.clone(), 1)];
    for (fi, f) in shape.factors.iter().enumerate() {
        let off = shape.offset(fi);
        let block = &lambda.0[off..off + f.rank];
        if block.iter().any(|&c| c < 0) {
            return Err(LatticeError::NotDominant(block.to_vec()));
        }
        if block.iter().all(|&c| c == 0) {
            continue;
        }
        let data = factor_data(*f)?;
        let ws = factor_weights_in::<F>(&data, block)?;
        let mut next = Vec::with_capacity(cur.len() * ws.len());
        for (w, m) in &cur {
            for (b, k) in &ws {
                let mut x = w.clone();
                x[off..off + f.rank].copy_from_slice(b);
                next.push((x, m * k));
            }
        }
        cur = next;
    }
    Ok(cur.into_iter().map(|(w, m)| (Weight(w), m)).collect())
}

pub fn irreducible_weights(shape: &AlgebraShape, lambda: &Weight) -> Result<WeightMultiset, LatticeError> {
    irreducible_weights_in::<Rational>(shape, lambda)
}

/// Weyl's dimension formula: Π_{α>0} <λ+ρ, α∨> / <ρ, α∨>.
pub fn weyl_dimension_in<F: Scalar>(shape: &AlgebraShape, lambda: &Weight) -> Result<u64, LatticeError> {
    let n = shape.total_rank();
    if lambda.len() != n {
        return Err(LatticeError::DimensionMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let mut dim = F::one();
    for (fi, f) in shape.factors.iter().enumerate() {
        let off = shape.offset(fi);
        let block = &lambda.0[off..off + f.rank];
        if block.iter().any(|&c| c < 0) {
            return Err(LatticeError::NotDominant(block.to_vec()));
        }
        let data = factor_data(*f)?;
        for a in data.positive_roots() {
            let num: i64 = a.coroot.iter().zip(block).map(|(c, l)| c * (l + 1)).sum();
            let den: i64 = a.coroot.iter().sum();
            dim = dim * F::of(num) / F::of(den);
        }
    }
    dim.as_integer()
        .map(|d| d as u64)
        .ok_or(LatticeError::NonIntegral("Weyl dimension"))
}

pub fn weyl_dimension(shape: &AlgebraShape, lambda: &Weight) -> Result<u64, LatticeError> {
    weyl_dimension_in::<Rational>(shape, lambda)
}
