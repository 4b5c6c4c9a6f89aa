use crate::KnopError;
use mfsr_lattice::Weight;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// An admissible weight offered to a policy.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub weight: Weight,
    /// ⟨χ, 2ρ∨⟩ for the initial positive system
    pub height: i64,
    pub multiplicity: u64,
}

/// Chooses the next χ. Candidates arrive sorted by decreasing
/// (height, weight); return an index into the slice.
pub trait SelectionPolicy {
    fn select(&mut self, candidates: &[Candidate]) -> Result<usize, KnopError>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultPolicy;

impl SelectionPolicy for DefaultPolicy {
    fn select(&mut self, _: &[Candidate]) -> Result<usize, KnopError> {
        Ok(0)
    }
}

#[derive(Debug, Clone)]
pub struct RandomPolicy {
    rng: StdRng,
}

impl RandomPolicy {
    pub fn new(seed: u64) -> Self {
        RandomPolicy {
            rng: StdRng::seed_from_u64(seed),
        }
    }
}

impl SelectionPolicy for RandomPolicy {
    fn select(&mut self, c: &[Candidate]) -> Result<usize, KnopError> {
        Ok(self.rng.gen_range(0..c.len()))
    }
}

/// Follows a fixed list of weights, then falls back to the default order.
#[derive(Debug, Clone)]
pub struct ScriptedPolicy {
    script: Vec<Weight>,
    next: usize,
}

impl ScriptedPolicy {
    pub fn new(script: Vec<Weight>) -> Self {
        ScriptedPolicy { script, next: 0 }
    }
}

impl SelectionPolicy for ScriptedPolicy {
    fn select(&mut self, c: &[Candidate]) -> Result<usize, KnopError> {
        let Some(w) = self.script.get(self.next) else {
            return Ok(0);
        };
        self.next += 1;
        c.iter()
            .position(|x| &x.weight == w)
            .ok_or_else(|| KnopError::Script(format!("step {}: {w} is not admissible", self.next)))
    }
}
