use crate::isotropy::{generic_isotropy, IsotropyDescription};
use crate::policy::{DefaultPolicy, SelectionPolicy};
use crate::reduce::{Reducer, ReductionResult};
use crate::KnopError;
use mfsr_lattice::linalg::{dependency, lift, primitive_integer};
use mfsr_lattice::{Rational, RootSystem};
use mfsr_repspec::{dim, realize, SymplecticRep};
use num_traits::ToPrimitive;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum WitnessKind {
    ZeroWeight,
    RepeatedWeight,
    Kernel,
}

/// Integer coefficients c with Σ cᵢ·Φ₊ᵗ[i] = 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub coefficients: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub multiplicity_free: bool,
    pub rank: Option<usize>,
    pub phi_plus: Vec<mfsr_lattice::Weight>,
    pub isotropy: Option<IsotropyDescription>,
    pub dependency_witness: Option<Witness>,
    #[serde(skip)]
    pub result: ReductionResult,
}

fn witness(result: &ReductionResult) -> Result<Option<Witness>, KnopError> {
    let phi = &result.phi_plus;
    let n = phi.len();
    if let Some(i) = phi.iter().position(|w| w.is_zero()) {
        let mut c = vec![0; n];
        c[i] = 1;
        return Ok(Some(Witness {
            kind: WitnessKind::ZeroWeight,
            coefficients: c,
        }));
    }
    // phi_plus is sorted, so repeats are adjacent
    if let Some(i) = (1..n).find(|&i| phi[i] == phi[i - 1]) {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        c[i] = -1;
        return Ok(Some(Witness {
            kind: WitnessKind::RepeatedWeight,
            coefficients: c,
        }));
    }
    let rows: Vec<Vec<i64>> = phi.iter().map(|w| w.0.clone()).collect();
    let Some(k) = dependency::<Rational>(&lift(&rows)) else {
        return Ok(None);
    };
    let coefficients = primitive_integer(&k)
        .iter()
        .map(|x| x.to_i64())
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| KnopError::InternalConsistency("witness coefficient overflows i64".into()))?;
    Ok(Some(Witness {
        kind: WitnessKind::Kernel,
        coefficients,
    }))
}

/// Verdict from a finished reduction.
pub fn verdict_from(sys: &RootSystem, result: ReductionResult) -> Result<Verdict, KnopError> {
    let w = witness(&result)?;
    let mf = w.is_none();
    let isotropy = if mf { Some(generic_isotropy(&result, sys)?) } else { None };
    Ok(Verdict {
        multiplicity_free: mf,
        rank: mf.then_some(result.phi_plus.len()),
        phi_plus: result.phi_plus.clone(),
        isotropy,
        dependency_witness: w,
        result,
    })
}

pub fn is_multiplicity_free_with(rep: &SymplecticRep, policy: &mut dyn SelectionPolicy) -> Result<Verdict, KnopError> {
    let (sys, phi) = realize(rep)?;
    let result = Reducer::new(&sys, &phi)?.run(policy)?;
    verdict_from(&sys, result)
}

pub fn is_multiplicity_free(rep: &SymplecticRep) -> Result<Verdict, KnopError> {
    is_multiplicity_free_with(rep, &mut DefaultPolicy)
}

/// dim V ≤ dim g + rk g, a necessary condition.
pub fn criterion_a(rep: &SymplecticRep) -> Result<bool, KnopError> {
    let rep = rep.glued()?;
    let g = rep.shape.dim() + rep.shape.total_rank();
    Ok(dim(&rep)? <= g as u64)
}
