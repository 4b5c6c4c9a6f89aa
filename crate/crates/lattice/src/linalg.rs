//! Gauss-Jordan elimination over an exact field.

use crate::{Rational, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix<F> = Vec<Vec<F>>;

/// Convert an integer matrix into field entries.
pub fn lift<F: Scalar>(rows: &[Vec<i64>]) -> Matrix<F> {
    rows.iter()
        .map(|r| r.iter().map(|&x| F::of(x)).collect())
        .collect()
}

/// Reduce `m` in place to reduced row echelon form; returns the pivot columns.
pub fn rref<F: Scalar>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Scalar>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_i64<F: Scalar>(rows: &[Vec<i64>]) -> usize {
    let mut m = lift::<F>(rows);
    rref(&mut m).len()
}

pub fn inverse<F: Scalar>(a: &[Vec<F>]) -> Option<Matrix<F>> {
    let n = a.len();
    let mut m: Matrix<F> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut m);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A nontrivial vector `c` with `sum_i c_i * vectors[i] = 0`, if the vectors
/// are linearly dependent.
pub fn dependency<F: Scalar>(vectors: &[Vec<F>]) -> Option<Vec<F>> {
    let count = vectors.len();
    if count == 0 {
        return None;
    }
    let dim = vectors[0].len();
    let mut m: Matrix<F> = (0..dim)
        .map(|j| (0..count).map(|i| vectors[i][j].clone()).collect())
        .collect();
    let piv = rref(&mut m);
    let free = (0..count).find(|c| !piv.contains(c))?;
    let mut c = vec![F::zero(); count];
    c[free] = F::one();
    for (r, &p) in piv.iter().enumerate() {
        c[p] = -m[r][free].clone();
    }
    Some(c)
}

/// Scale a rational vector to a primitive integer vector whose first nonzero
/// entry is positive.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints
}
