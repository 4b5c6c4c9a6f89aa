use crate::rep::{Component, SymplecticRep};
use crate::summand::{dual_highest, dual_summand, duality_class, DualityClass, IrreducibleSummand};
use crate::RepError;
use mfsr_lattice::{AlgebraShape, Weight};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub saturated: bool,
    pub violations: Vec<String>,
}

/// The combinatorial saturation test. Links are applied first.
pub fn check_saturated(rep: &SymplecticRep) -> Result<SaturationReport, RepError> {
    let rep = rep.glued()?;
    let shape = &rep.shape;
    let mut v = Vec::new();

    let type1: Vec<&IrreducibleSummand> = rep
        .components
        .iter()
        .filter_map(|c| match c {
            Component::Type1(s) => Some(s),
            _ => None,
        })
        .collect();
    for i in 0..type1.len() {
        for j in i + 1..type1.len() {
            if type1[i].highest == type1[j].highest {
                v.push(format!(
                    "type 1 component {} occurs more than once (multiplicity one violated)",
                    type1[i].describe(shape)
                ));
            }
        }
    }

    let type2: Vec<(&IrreducibleSummand, Option<usize>)> = rep
        .components
        .iter()
        .filter_map(|c| match c {
            Component::Type2 { u, torus } => Some((u, *torus)),
            _ => None,
        })
        .collect();
    let duals: Vec<Weight> = type2
        .iter()
        .map(|(u, _)| dual_highest(shape, &u.highest))
        .collect::<Result<_, _>>()?;
    for i in 0..type2.len() {
        let u = type2[i].0;
        if duals[i] == u.highest {
            let class = duality_class(shape, u)?;
            v.push(match class {
                DualityClass::Symplectic => format!(
                    "T({}) with U symplectic is a repeated type 1 component",
                    u.describe(shape)
                ),
                _ => format!("T({}) with U self-dual (case 2b)", u.describe(shape)),
            });
        }
        for j in i + 1..type2.len() {
            let w = &type2[j].0.highest;
            if *w == u.highest || *w == duals[i] {
                v.push(format!(
                    "type 2 component T({}) occurs more than once",
                    u.describe(shape)
                ));
            }
        }
    }

    if shape.torus != type2.len() {
        v.push(format!(
            "torus dimension {} differs from the number of type 2 components {}",
            shape.torus,
            type2.len()
        ));
    }
    for t in 0..shape.torus {
        let owners: Vec<usize> = type2
            .iter()
            .enumerate()
            .filter(|(_, (_, d))| *d == Some(t))
            .map(|(i, _)| i)
            .collect();
        let charged: Vec<usize> = rep
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.summand().torus(shape)[t] != 0)
            .map(|(i, _)| i)
            .collect();
        let scaled_ok = owners.len() == 1 && {
            let u = type2[owners[0]].0;
            u.torus(shape)[t].abs() == 1
        };
        if !scaled_ok || charged.len() != 1 {
            v.push(format!("torus coordinate {t} is not the scaling character of exactly one type 2 component"));
        }
    }
    for (i, (_, d)) in type2.iter().enumerate() {
        if d.is_none() {
            v.push(format!("type 2 component {i} has no dedicated torus coordinate"));
        }
    }
    Ok(SaturationReport {
        saturated: v.is_empty(),
        violations: v,
    })
}

/// The underlying module of the semisimple part, one entry per irreducible
/// summand. Type 2 components contribute U and U*.
pub fn extract_module(rep: &SymplecticRep) -> Result<(AlgebraShape, Vec<IrreducibleSummand>), RepError> {
    let rep = rep.glued()?;
    let ss = AlgebraShape::new(rep.shape.factors.clone(), 0);
    let mut out = Vec::new();
    for c in &rep.components {
        let s = c.summand();
        let base = IrreducibleSummand {
            highest: s.semisimple(&rep.shape),
            origins: s.origins.clone(),
        };
        if !c.is_type1() {
            out.push(dual_summand(&ss, &base)?);
        }
        out.push(base);
    }
    Ok((ss, out))
}

/// The unique saturated representation with the given semisimple module.
pub fn assemble_saturated(shape: &AlgebraShape, summands: &[IrreducibleSummand]) -> Result<SymplecticRep, RepError> {
    if shape.torus != 0 {
        return Err(RepError::Malformed("assemble_saturated expects a semisimple shape".into()));
    }
    let mut count: BTreeMap<Weight, (u64, IrreducibleSummand)> = BTreeMap::new();
    for s in summands {
        if s.highest.len() != shape.total_rank() {
            return Err(RepError::Malformed("summand length does not match shape".into()));
        }
        count.entry(s.highest.clone()).or_insert((0, s.clone())).0 += 1;
    }
    let mut type1 = Vec::new();
    let mut type2 = Vec::new();
    for (w, (c, s)) in &count {
        match duality_class(shape, s)? {
            DualityClass::Symplectic => {
                if c % 2 == 1 {
                    type1.push(s.clone());
                }
                type2.extend(std::iter::repeat(s.clone()).take((c / 2) as usize));
            }
            DualityClass::Orthogonal => {
                if c % 2 == 1 {
                    return Err(RepError::NotRealizable(format!(
                        "orthogonal summand {} has odd multiplicity {c}",
                        s.describe(shape)
                    )));
                }
                type2.extend(std::iter::repeat(s.clone()).take((c / 2) as usize));
            }
            DualityClass::NotSelfDual => {
                let d = dual_highest(shape, w)?;
                let cd = count.get(&d).map_or(0, |x| x.0);
                if cd != *c {
                    return Err(RepError::NotRealizable(format!(
                        "{} occurs {c} times but its dual occurs {cd} times",
                        s.describe(shape)
                    )));
                }
                if *w < d {
                    type2.extend(std::iter::repeat(s.clone()).take(*c as usize));
                }
            }
        }
    }
    let t = type2.len();
    let out_shape = AlgebraShape::new(shape.factors.clone(), t);
    let widen = |s: &IrreducibleSummand, tor: Option<usize>| {
        let mut h = s.highest.0.clone();
        h.extend(std::iter::repeat(0).take(t));
        if let Some(i) = tor {
            h[shape.total_rank() + i] = 1;
        }
        IrreducibleSummand {
            highest: Weight(h),
            origins: s.origins.clone(),
        }
    };
    let mut components: Vec<Component> = type1.iter().map(|s| Component::Type1(widen(s, None))).collect();
    for (i, s) in type2.iter().enumerate() {
        components.push(Component::Type2 {
            u: widen(s, Some(i)),
            torus: Some(i),
        });
    }
    Ok(SymplecticRep::new(out_shape, components))
}

/// Canonical component list: T(U*) is rewritten as T(U) when U has the
/// lexicographically smaller semisimple highest weight, then components are
/// sorted (type 1 first).
pub fn decompose_components(rep: &SymplecticRep) -> Result<Vec<Component>, RepError> {
    let shape = &rep.shape;
    let mut out = Vec::new();
    for c in &rep.components {
        out.push(match c {
            Component::Type1(s) => Component::Type1(s.clone()),
            Component::Type2 { u, torus } => {
                let d = dual_summand(shape, u)?;
                let u = if d.semisimple(shape) < u.semisimple(shape) { d } else { u.clone() };
                Component::Type2 { u, torus: *torus }
            }
        });
    }
    out.sort_by(|a, b| {
        (!a.is_type1(), &a.summand().highest, a.summand().torus(shape).to_vec())
            .cmp(&(!b.is_type1(), &b.summand().highest, b.summand().torus(shape).to_vec()))
    });
    Ok(out)
}

/// A description that forgets torus coordinate labels: the factors, and the
/// sorted list of (is type 1, semisimple highest weight) per component.
pub fn torus_free_key(rep: &SymplecticRep) -> Result<(Vec<mfsr_lattice::SimpleFactor>, Vec<(bool, Weight)>), RepError> {
    let rep = rep.glued()?;
    let mut key: Vec<(bool, Weight)> = decompose_components(&rep)?
        .iter()
        .map(|c| (c.is_type1(), c.summand().semisimple(&rep.shape)))
        .collect();
    key.sort();
    Ok((rep.shape.factors.clone(), key))
}
