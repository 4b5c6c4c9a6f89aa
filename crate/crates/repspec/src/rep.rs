use crate::summand::{duality_class, DualityClass, IrreducibleSummand};
use crate::RepError;
use mfsr_lattice::{build_root_system, irreducible_weights, AlgebraShape, RootSystem, Weight, WeightMultiset};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    /// an irreducible symplectic module
    Type1(IrreducibleSummand),
    /// U ⊕ U*; `torus` names the coordinate scaling U by +1 and U* by −1
    Type2 { u: IrreducibleSummand, torus: Option<usize> },
}

impl Component {
    pub fn summand(&self) -> &IrreducibleSummand {
        match self {
            Component::Type1(s) => s,
            Component::Type2 { u, .. } => u,
        }
    }

    pub fn summand_mut(&mut self) -> &mut IrreducibleSummand {
        match self {
            Component::Type1(s) => s,
            Component::Type2 { u, .. } => u,
        }
    }

    pub fn is_type1(&self) -> bool {
        matches!(self, Component::Type1(_))
    }

    pub fn acts_on(&self, shape: &AlgebraShape, f: usize) -> bool {
        self.summand().acts_on(shape, f)
    }

    pub fn dim(&self, shape: &AlgebraShape) -> Result<u64, RepError> {
        let d = self.summand().dim(shape)?;
        Ok(if self.is_type1() { d } else { 2 * d })
    }

    pub fn weights(&self, shape: &AlgebraShape) -> Result<WeightMultiset, RepError> {
        let w = irreducible_weights(shape, &self.summand().highest)?;
        Ok(match self {
            Component::Type1(_) => w,
            Component::Type2 { .. } => w.union(&mfsr_lattice::dual_weights(&w)),
        })
    }

    pub fn describe(&self, shape: &AlgebraShape) -> String {
        match self {
            Component::Type1(s) => s.describe(shape),
            Component::Type2 { u, .. } => format!("T({})", u.describe(shape)),
        }
    }
}

/// A symplectic representation of a reductive algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticRep {
    pub shape: AlgebraShape,
    pub components: Vec<Component>,
    /// pending diagonal identifications of A1 factors
    pub links: Vec<(usize, usize)>,
}

impl SymplecticRep {
    pub fn new(shape: AlgebraShape, components: Vec<Component>) -> Self {
        SymplecticRep {
            shape,
            components,
            links: Vec::new(),
        }
    }

    pub fn empty(shape: AlgebraShape) -> Self {
        Self::new(shape, Vec::new())
    }

    /// The representation with its links applied.
    pub fn glued(&self) -> Result<SymplecticRep, RepError> {
        if self.links.is_empty() {
            return Ok(self.clone());
        }
        let mut base = self.clone();
        base.links.clear();
        crate::glue::glue_links(&base, &self.links)
    }

    /// Structural checks: coordinate lengths, valid factors, Type1 payloads
    /// symplectic.
    pub fn validate(&self) -> Result<(), RepError> {
        let n = self.shape.total_rank();
        for f in &self.shape.factors {
            mfsr_lattice::SimpleFactor::new(f.series, f.rank)?;
        }
        for (i, c) in self.components.iter().enumerate() {
            let s = c.summand();
            if s.highest.len() != n {
                return Err(RepError::Malformed(format!(
                    "component {i} has {} coordinates, shape needs {n}",
                    s.highest.len()
                )));
            }
            for (fi, f) in self.shape.factors.iter().enumerate() {
                if s.block(&self.shape, fi).iter().any(|&c| c < 0) {
                    return Err(RepError::Malformed(format!(
                        "component {i}: highest weight not dominant on factor {fi} ({f})"
                    )));
                }
            }
            match c {
                Component::Type1(s) => {
                    if duality_class(&self.shape, s)? != DualityClass::Symplectic {
                        return Err(RepError::NotSymplectic(format!(
                            "component {i} ({}) carries no invariant symplectic form; write it as T(...)",
                            s.describe(&self.shape)
                        )));
                    }
                }
                Component::Type2 { torus: Some(t), .. } if *t >= self.shape.torus => {
                    return Err(RepError::Malformed(format!("component {i}: torus index {t} out of range")));
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Semisimple factors acting trivially on every component.
    pub fn trivial_factors(&self) -> Vec<usize> {
        (0..self.shape.factors.len())
            .filter(|&f| !self.components.iter().any(|c| c.acts_on(&self.shape, f)))
            .collect()
    }

    /// Components on which factor `f` acts.
    pub fn support(&self, f: usize) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| self.components[i].acts_on(&self.shape, f))
            .collect()
    }

    pub fn describe(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.describe(&self.shape)).collect();
        parts.join(" ⊕ ")
    }
}

/// Δ of the (glued) shape and Φ as the multiset union over components.
pub fn realize(rep: &SymplecticRep) -> Result<(RootSystem, WeightMultiset), RepError> {
    let rep = rep.glued()?;
    rep.validate()?;
    let sys = build_root_system(&rep.shape)?;
    let mut phi = WeightMultiset::new();
    for c in &rep.components {
        phi = phi.union(&c.weights(&rep.shape)?);
    }
    Ok((sys, phi))
}

pub fn dim(rep: &SymplecticRep) -> Result<u64, RepError> {
    rep.components.iter().map(|c| c.dim(&rep.shape)).sum()
}

fn embed(w: &Weight, a: &AlgebraShape, b: &AlgebraShape, first: bool) -> Weight {
    let (sa, sb) = (a.semisimple_rank(), b.semisimple_rank());
    let mut out = vec![0; a.total_rank() + b.total_rank()];
    let (ss, tor) = w.0.split_at(if first { sa } else { sb });
    let ss_at = if first { 0 } else { sa };
    let t_at = sa + sb + if first { 0 } else { a.torus };
    out[ss_at..ss_at + ss.len()].copy_from_slice(ss);
    out[t_at..t_at + tor.len()].copy_from_slice(tor);
    Weight(out)
}

/// The product: the direct sum of algebras acting on the direct sum.
pub fn product(a: &SymplecticRep, b: &SymplecticRep) -> SymplecticRep {
    let mut factors = a.shape.factors.clone();
    factors.extend(b.shape.factors.iter().copied());
    let shape = AlgebraShape::new(factors, a.shape.torus + b.shape.torus);
    let mut components = Vec::new();
    for (rep, first) in [(a, true), (b, false)] {
        let fshift = if first { 0 } else { a.shape.factors.len() };
        for c in &rep.components {
            let mut c = c.clone();
            let s = c.summand_mut();
            s.highest = embed(&s.highest, &a.shape, &b.shape, first);
            for (f, _) in s.origins.iter_mut() {
                *f += fshift;
            }
            if let Component::Type2 { torus: Some(t), .. } = &mut c {
                if !first {
                    *t += a.shape.torus;
                }
            }
            components.push(c);
        }
    }
    let shift = a.shape.factors.len();
    let mut links = a.links.clone();
    links.extend(b.links.iter().map(|&(x, y)| (x + shift, y + shift)));
    SymplecticRep {
        shape,
        components,
        links,
    }
}
