use crate::LatticeError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Integer coordinates: fundamental-weight blocks, then torus characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| k * a).collect())
    }

    /// True when the first nonzero coordinate is positive.
    pub fn is_canonical_sign(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

/// Weights counted with multiplicity, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    /// Remove `mult` copies; returns false (and changes nothing) if fewer are present.
    pub fn remove(&mut self, w: &Weight, mult: u64) -> bool {
        match self.entries.get_mut(w) {
            Some(m) if *m >= mult => {
                *m -= mult;
                if *m == 0 {
                    self.entries.remove(w);
                }
                true
            }
            _ => mult == 0,
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.entries.contains_key(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinate length, if nonempty.
    pub fn width(&self) -> Option<usize> {
        self.entries.keys().next().map(|w| w.len())
    }

    pub fn union(&self, o: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (w, m) in o.iter() {
            out.insert(w.clone(), m);
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Weight) -> Weight) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in self.iter() {
            out.insert(f(w), m);
        }
        out
    }

    /// One entry per copy, in order.
    pub fn slots(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        for (w, m) in self.iter() {
            for _ in 0..m {
                out.push(w.clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(w, m)| self.mult(&w.neg()) == m)
    }
}

impl FromIterator<(Weight, u64)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(it: I) -> Self {
        let mut out = WeightMultiset::new();
        for (w, m) in it {
            out.insert(w, m);
        }
        out
    }
}

fn same_width(a: &WeightMultiset, b: &WeightMultiset) -> Result<(), LatticeError> {
    match (a.width(), b.width()) {
        (Some(x), Some(y)) if x != y => Err(LatticeError::ShapeMismatch),
        _ => Ok(()),
    }
}

/// Minkowski sum: the weights of a tensor product.
pub fn tensor_weights(a: &WeightMultiset, b: &WeightMultiset) -> Result<WeightMultiset, LatticeError> {
    same_width(a, b)?;
    let mut out = WeightMultiset::new();
    for (x, m) in a.iter() {
        for (y, n) in b.iter() {
            out.insert(x.add(y), m * n);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerKind {
    Exterior,
    Symmetric,
}

/// Weights of the k-th exterior or symmetric power.
pub fn power_weights(a: &WeightMultiset, kind: PowerKind, k: usize) -> Result<WeightMultiset, LatticeError> {
    let slots = a.slots();
    if k == 0 || (kind == PowerKind::Exterior && k > slots.len()) {
        return Err(LatticeError::KOutOfRange { k, dim: a.total() });
    }
    let width = a.width().unwrap_or(0);
    let mut out = WeightMultiset::new();
    let mut acc = vec![0i64; width];
    fn go(
        slots: &[Weight],
        start: usize,
        left: usize,
        repeat: bool,
        acc: &mut Vec<i64>,
        out: &mut WeightMultiset,
    ) {
        if left == 0 {
            out.insert(Weight(acc.clone()), 1);
            return;
        }
        for i in start..slots.len() {
            for (x, y) in acc.iter_mut().zip(&slots[i].0) {
                *x += y;
            }
            go(slots, if repeat { i } else { i + 1 }, left - 1, repeat, acc, out);
            for (x, y) in acc.iter_mut().zip(&slots[i].0) {
                *x -= y;
            }
        }
    }
    go(&slots, 0, k, kind == PowerKind::Symmetric, &mut acc, &mut out);
    Ok(out)
}

pub fn dual_weights(a: &WeightMultiset) -> WeightMultiset {
    a.map(|w| w.neg())
}
