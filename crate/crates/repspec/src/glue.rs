use crate::rep::{Component, SymplecticRep};
use crate::RepError;
use mfsr_lattice::{AlgebraShape, Weight};
use std::collections::BTreeMap;

/// Identify pairs of A1 factors diagonally. Each pair must act on disjoint
/// sets of components; the higher-indexed factor is folded into the lower.
pub fn glue_links(rep: &SymplecticRep, pairs: &[(usize, usize)]) -> Result<SymplecticRep, RepError> {
    if !rep.links.is_empty() {
        return Err(RepError::InvalidLink("input already carries pending links".into()));
    }
    let nf = rep.shape.factors.len();
    let mut used = BTreeMap::new();
    let mut fold: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in pairs {
        if a >= nf || b >= nf {
            return Err(RepError::InvalidLink(format!("factor index out of range in pair ({a}, {b})")));
        }
        if a == b {
            return Err(RepError::InvalidLink(format!("factor {a} paired with itself")));
        }
        for x in [a, b] {
            if !rep.shape.factors[x].is_a1() {
                return Err(RepError::InvalidLink(format!(
                    "factor {x} is {}, only sl(2) factors can be linked",
                    rep.shape.factors[x]
                )));
            }
            if used.insert(x, ()).is_some() {
                return Err(RepError::InvalidLink(format!("factor {x} occurs in two link pairs")));
            }
        }
        let (sa, sb) = (rep.support(a), rep.support(b));
        if sa.is_empty() || sb.is_empty() {
            return Err(RepError::InvalidLink(format!("linked factor acts trivially in pair ({a}, {b})")));
        }
        if let Some(c) = sa.iter().find(|c| sb.contains(c)) {
            return Err(RepError::InvalidLink(format!(
                "factors {a} and {b} both act on component {c}; an sl(2) cannot be identified with another sl(2) on the same component"
            )));
        }
        fold.insert(a.max(b), a.min(b));
    }
    let old = &rep.shape;
    let keep: Vec<usize> = (0..nf).filter(|f| !fold.contains_key(f)).collect();
    let new_index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let shape = AlgebraShape::new(keep.iter().map(|&f| old.factors[f]).collect(), old.torus);
    let target = |f: usize| new_index[fold.get(&f).unwrap_or(&f)];

    let remap = |w: &Weight| -> Weight {
        let mut out = vec![0; shape.total_rank()];
        for f in 0..nf {
            let (from, to) = (old.offset(f), shape.offset(target(f)));
            for k in 0..old.factors[f].rank {
                out[to + k] += w.0[from + k];
            }
        }
        let (ft, tt) = (old.torus_offset(), shape.torus_offset());
        out[tt..].copy_from_slice(&w.0[ft..]);
        Weight(out)
    };

    let components = rep
        .components
        .iter()
        .map(|c| {
            let mut c: Component = c.clone();
            let s = c.summand_mut();
            s.highest = remap(&s.highest);
            for (f, _) in s.origins.iter_mut() {
                *f = target(*f);
            }
            c
        })
        .collect();
    Ok(SymplecticRep::new(shape, components))
}
