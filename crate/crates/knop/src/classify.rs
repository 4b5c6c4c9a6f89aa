//! Direct transcriptions of the weight classes and the replacement step,
//! working on explicit root lists and multisets. The reducer in `reduce`
//! computes the same things from precomputed tables.

use crate::reduce::StepRecord;
use crate::KnopError;
use mfsr_lattice::{Root, Weight, WeightMultiset};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum WeightClass {
    Toroidal,
    Singular,
    Extremal,
    Ordinary,
}

/// Toroidal takes priority over singular, singular over extremal.
pub fn classify_weight(chi: &Weight, mult: u64, delta: &[Root], phi: &WeightMultiset) -> Result<WeightClass, KnopError> {
    if !phi.contains(chi) {
        return Err(KnopError::Precondition(format!("{chi} is not a weight of the module")));
    }
    if delta.iter().all(|a| a.pair(&chi.0) == 0) {
        return Ok(WeightClass::Toroidal);
    }
    let extremal = delta
        .iter()
        .filter(|a| a.pair(&chi.0) > 0)
        .all(|a| !phi.contains(&chi.add(&a.weight)));
    if !extremal {
        return Ok(WeightClass::Ordinary);
    }
    let double = chi.scale(2);
    if mult == 1 && delta.iter().any(|a| a.weight == double) {
        return Ok(WeightClass::Singular);
    }
    Ok(WeightClass::Extremal)
}

/// A weight the replacement step may consume: extremal, neither toroidal
/// nor singular, and also χ+α ∉ Φ for every α with ⟨χ|α∨⟩ = 0. The last
/// condition makes the weight vector of χ a highest weight vector for the
/// Levi that remains, without which the next Φ need not be the weight
/// multiset of a representation.
pub fn is_admissible(chi: &Weight, delta: &[Root], phi: &WeightMultiset) -> Result<bool, KnopError> {
    if classify_weight(chi, phi.mult(chi), delta, phi)? != WeightClass::Extremal {
        return Ok(false);
    }
    Ok(delta
        .iter()
        .filter(|a| a.pair(&chi.0) == 0)
        .all(|a| !phi.contains(&chi.add(&a.weight))))
}

/// One replacement Δ ← Δ∖(P∪−P), Φ ← Φ∖(Q∪−Q) with Q = χ−P.
pub fn reduction_step(
    delta: &[Root],
    phi: &WeightMultiset,
    chi: &Weight,
) -> Result<(Vec<Root>, WeightMultiset, StepRecord), KnopError> {
    let mult = phi.mult(chi);
    let class = classify_weight(chi, mult, delta, phi)?;
    if class != WeightClass::Extremal {
        return Err(KnopError::Precondition(format!(
            "{chi} is {class:?}, only extremal weights that are neither toroidal nor singular can be used"
        )));
    }
    if !is_admissible(chi, delta, phi)? {
        return Err(KnopError::Precondition(format!(
            "{chi} is extremal but χ+α ∈ Φ for a root α orthogonal to it"
        )));
    }
    let p: Vec<&Root> = delta.iter().filter(|a| a.pair(&chi.0) > 0).collect();
    let removed: Vec<Weight> = p.iter().flat_map(|a| [a.weight.clone(), a.weight.neg()]).collect();
    let delta2: Vec<Root> = delta.iter().filter(|a| !removed.contains(&a.weight)).cloned().collect();
    let q: Vec<Weight> = p.iter().map(|a| chi.sub(&a.weight)).collect();
    let mut phi2 = phi.clone();
    for w in q.iter().flat_map(|w| [w.clone(), w.neg()]) {
        if !phi2.remove(&w, 1) {
            return Err(KnopError::InternalConsistency(format!("{w} missing while removing Q ∪ −Q")));
        }
    }
    let mut pw: Vec<Weight> = p.iter().map(|a| a.weight.clone()).collect();
    pw.sort();
    let mut qs = q;
    qs.sort();
    let rec = StepRecord {
        chosen: chi.clone(),
        chosen_multiplicity: mult,
        p: pw,
        q: qs,
        remaining_root_count: delta2.len(),
        remaining_weight_count: phi2.total(),
    };
    Ok((delta2, phi2, rec))
}
