use crate::policy::{Candidate, DefaultPolicy, SelectionPolicy};
use crate::KnopError;
use mfsr_lattice::{RootSystem, Weight, WeightMultiset};
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StepRecord {
    pub chosen: Weight,
    /// multiplicity of χ when it was selected
    pub chosen_multiplicity: u64,
    #[serde(rename = "P")]
    pub p: Vec<Weight>,
    #[serde(rename = "Q")]
    pub q: Vec<Weight>,
    pub remaining_root_count: usize,
    pub remaining_weight_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionResult {
    pub delta0: Vec<Weight>,
    #[serde(skip)]
    pub delta0_index: Vec<usize>,
    pub phi0_toroidal: WeightMultiset,
    pub phi0_singular: WeightMultiset,
    pub phi_plus: Vec<Weight>,
    pub trace: Vec<StepRecord>,
}

/// Precomputed tables for repeated runs over one (Δ, Φ).
pub struct Reducer<'a> {
    sys: &'a RootSystem,
    weights: Vec<Weight>,
    mult0: Vec<u64>,
    neg: Vec<usize>,
    neg_root: Vec<usize>,
    pair: Vec<Vec<i64>>,
    plus: Vec<Vec<Option<usize>>>,
    minus: Vec<Vec<Option<usize>>>,
    double: Vec<Option<usize>>,
    height: Vec<i64>,
}

impl<'a> Reducer<'a> {
    pub fn new(sys: &'a RootSystem, phi: &WeightMultiset) -> Result<Self, KnopError> {
        if !phi.is_symmetric() {
            return Err(KnopError::Precondition("Φ ≠ −Φ, the module is not symplectic".into()));
        }
        let weights: Vec<Weight> = phi.iter().map(|(w, _)| w.clone()).collect();
        let mult0: Vec<u64> = phi.iter().map(|(_, m)| m).collect();
        let index: HashMap<&Weight, usize> = weights.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let root_index: HashMap<&Weight, usize> = sys.roots.iter().enumerate().map(|(i, r)| (&r.weight, i)).collect();
        let neg = weights.iter().map(|w| index[&w.neg()]).collect();
        let neg_root = sys.roots.iter().map(|r| root_index[&r.weight.neg()]).collect();
        let mut pair = Vec::with_capacity(weights.len());
        let mut plus = Vec::with_capacity(weights.len());
        let mut minus = Vec::with_capacity(weights.len());
        let mut double = Vec::with_capacity(weights.len());
        let mut height = Vec::with_capacity(weights.len());
        for w in &weights {
            let pr: Vec<i64> = sys.roots.iter().map(|r| r.pair(&w.0)).collect();
            height.push(sys.roots.iter().zip(&pr).filter(|(r, _)| r.is_positive()).map(|(_, p)| p).sum());
            plus.push(sys.roots.iter().map(|r| index.get(&w.add(&r.weight)).copied()).collect());
            minus.push(sys.roots.iter().map(|r| index.get(&w.sub(&r.weight)).copied()).collect());
            double.push(root_index.get(&w.scale(2)).copied());
            pair.push(pr);
        }
        Ok(Reducer {
            sys,
            weights,
            mult0,
            neg,
            neg_root,
            pair,
            plus,
            minus,
            double,
            height,
        })
    }

    fn extremal(&self, w: usize, alive: &[usize], mult: &[u64]) -> bool {
        alive
            .iter()
            .all(|&r| self.pair[w][r] <= 0 || self.plus[w][r].map_or(true, |t| mult[t] == 0))
    }

    /// χ+α ∉ Φ also for the roots orthogonal to χ
    fn highest(&self, w: usize, alive: &[usize], mult: &[u64]) -> bool {
        alive
            .iter()
            .all(|&r| self.pair[w][r] != 0 || self.plus[w][r].map_or(true, |t| mult[t] == 0))
    }

    fn toroidal(&self, w: usize, alive: &[usize]) -> bool {
        alive.iter().all(|&r| self.pair[w][r] == 0)
    }

    fn singular(&self, w: usize, alive_mask: &[bool], mult: &[u64]) -> bool {
        mult[w] == 1 && self.double[w].map_or(false, |r| alive_mask[r])
    }

    pub fn run(&self, policy: &mut dyn SelectionPolicy) -> Result<ReductionResult, KnopError> {
        let nr = self.sys.roots.len();
        let mut mult = self.mult0.clone();
        let mut alive_mask = vec![true; nr];
        let mut alive: Vec<usize> = (0..nr).collect();
        let cap = mult.iter().sum::<u64>();
        let mut trace = Vec::new();
        loop {
            let mut cands: Vec<usize> = (0..self.weights.len())
                .filter(|&w| {
                    mult[w] > 0
                        && !self.toroidal(w, &alive)
                        && self.extremal(w, &alive, &mult)
                        && !self.singular(w, &alive_mask, &mult)
                        && self.highest(w, &alive, &mult)
                })
                .collect();
            if cands.is_empty() {
                break;
            }
            if trace.len() as u64 >= cap.max(1) {
                return Err(KnopError::InternalConsistency("iteration cap exceeded".into()));
            }
            cands.sort_by(|&a, &b| (self.height[b], &self.weights[b]).cmp(&(self.height[a], &self.weights[a])));
            let offered: Vec<Candidate> = cands
                .iter()
                .map(|&w| Candidate {
                    weight: self.weights[w].clone(),
                    height: self.height[w],
                    multiplicity: mult[w],
                })
                .collect();
            let pick = policy.select(&offered)?;
            let chi = *cands
                .get(pick)
                .ok_or_else(|| KnopError::InternalConsistency("policy returned an index out of range".into()))?;
            let chosen_multiplicity = mult[chi];
            let p: Vec<usize> = alive.iter().copied().filter(|&r| self.pair[chi][r] > 0).collect();
            let mut q = Vec::with_capacity(p.len());
            for &r in &p {
                let Some(t) = self.minus[chi][r] else {
                    return Err(KnopError::InternalConsistency(format!(
                        "{} − α is not a weight",
                        self.weights[chi]
                    )));
                };
                q.push(t);
            }
            for &t in &q {
                for u in [t, self.neg[t]] {
                    if mult[u] == 0 {
                        return Err(KnopError::InternalConsistency(format!(
                            "{} missing while removing Q ∪ −Q",
                            self.weights[u]
                        )));
                    }
                    mult[u] -= 1;
                }
            }
            for &r in &p {
                alive_mask[r] = false;
                alive_mask[self.neg_root[r]] = false;
            }
            alive.retain(|&r| alive_mask[r]);
            let mut pw: Vec<Weight> = p.iter().map(|&r| self.sys.roots[r].weight.clone()).collect();
            pw.sort();
            let mut qw: Vec<Weight> = q.iter().map(|&t| self.weights[t].clone()).collect();
            qw.sort();
            trace.push(StepRecord {
                chosen: self.weights[chi].clone(),
                chosen_multiplicity,
                p: pw,
                q: qw,
                remaining_root_count: alive.len(),
                remaining_weight_count: mult.iter().sum(),
            });
        }

        let mut tor = WeightMultiset::new();
        let mut sing = WeightMultiset::new();
        for w in 0..self.weights.len() {
            if mult[w] == 0 {
                continue;
            }
            if self.toroidal(w, &alive) {
                tor.insert(self.weights[w].clone(), mult[w]);
            } else if self.singular(w, &alive_mask, &mult) && self.extremal(w, &alive, &mult) {
                sing.insert(self.weights[w].clone(), mult[w]);
            } else {
                return Err(KnopError::InternalConsistency(format!(
                    "weight {} is neither toroidal nor singular at termination",
                    self.weights[w]
                )));
            }
        }
        let phi_plus = positive_half(&tor)?;
        Ok(ReductionResult {
            delta0: alive.iter().map(|&r| self.sys.roots[r].weight.clone()).collect(),
            delta0_index: alive,
            phi0_toroidal: tor,
            phi0_singular: sing,
            phi_plus,
            trace,
        })
    }
}

/// Weights with first nonzero coordinate positive, with multiplicity; the
/// zero weight contributes half its multiplicity.
fn positive_half(tor: &WeightMultiset) -> Result<Vec<Weight>, KnopError> {
    let mut out = Vec::new();
    for (w, m) in tor.iter() {
        if w.is_zero() {
            if m % 2 != 0 {
                return Err(KnopError::InternalConsistency("zero weight with odd multiplicity".into()));
            }
            out.extend(std::iter::repeat(w.clone()).take((m / 2) as usize));
        } else if w.is_canonical_sign() {
            if tor.mult(&w.neg()) != m {
                return Err(KnopError::InternalConsistency(format!("toroidal weights not symmetric at {w}")));
            }
            out.extend(std::iter::repeat(w.clone()).take(m as usize));
        }
    }
    Ok(out)
}

/// Reduction with the default selection order.
pub fn run_reduction(sys: &RootSystem, phi: &WeightMultiset) -> Result<ReductionResult, KnopError> {
    Reducer::new(sys, phi)?.run(&mut DefaultPolicy)
}
