use crate::CatalogError;
use mfsr_knop::{is_multiplicity_free, Verdict};
use mfsr_lattice::linalg::rank_i64;
use mfsr_lattice::{AlgebraShape, Rational};
use mfsr_repspec::SymplecticRep;
use serde::Serialize;

/// The simple root of an sl(2) factor as a full-length weight.
pub fn simple_root(shape: &AlgebraShape, f: usize) -> Result<Vec<i64>, CatalogError> {
    if f >= shape.factors.len() || !shape.factors[f].is_a1() {
        return Err(CatalogError::Params(format!("factor {f} is not an sl(2) factor")));
    }
    let mut v = vec![0; shape.total_rank()];
    v[shape.offset(f)] = 2;
    Ok(v)
}

fn independent(rows: &[Vec<i64>]) -> bool {
    rank_i64::<Rational>(rows) == rows.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableSCheck {
    /// Φ₊ᵗ together with the underlined simple roots is independent
    pub independent: bool,
    /// adding any further sl(2) acting on V destroys independence; reported
    /// only (so(4)⊗sl(2) in S.3 is S.1 at m = 1 with one underline dropped)
    pub maximal: bool,
}

/// The defining property of a Table S row.
pub fn table_s_check(rep: &SymplecticRep, verdict: &Verdict, underlined: &[usize]) -> Result<TableSCheck, CatalogError> {
    let rep = rep.glued()?;
    let shape = &rep.shape;
    let mut rows: Vec<Vec<i64>> = verdict.phi_plus.iter().map(|w| w.0.clone()).collect();
    for &f in underlined {
        rows.push(simple_root(shape, f)?);
    }
    let ind = independent(&rows);
    let mut maximal = true;
    for f in 0..shape.factors.len() {
        if underlined.contains(&f) || !shape.factors[f].is_a1() || rep.support(f).is_empty() {
            continue;
        }
        let mut more = rows.clone();
        more.push(simple_root(shape, f)?);
        if independent(&more) {
            maximal = false;
        }
    }
    Ok(TableSCheck {
        independent: ind,
        maximal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LinkCheck {
    pub unglued_multiplicity_free: bool,
    pub unglued_rank: Option<usize>,
    /// Φ̄₊ᵗ of the unglued rep plus both simple roots of every pair
    pub roots_independent: bool,
    pub predicted_multiplicity_free: bool,
    /// predicted rank of the glued rep: one more weight per pair
    pub predicted_rank: Option<usize>,
}

/// Multiplicity-freeness of the glued rep predicted from the unglued one:
/// the unglued rep is MF and its Φ₊ᵗ stays independent after adding the
/// simple roots of all identified sl(2)'s.
pub fn link_criterion(unglued: &SymplecticRep, pairs: &[(usize, usize)]) -> Result<LinkCheck, CatalogError> {
    if !unglued.links.is_empty() {
        return Err(CatalogError::Params("link_criterion expects a rep without pending links".into()));
    }
    let v = is_multiplicity_free(unglued)?;
    let mut rows: Vec<Vec<i64>> = v.phi_plus.iter().map(|w| w.0.clone()).collect();
    for &(a, b) in pairs {
        rows.push(simple_root(&unglued.shape, a)?);
        rows.push(simple_root(&unglued.shape, b)?);
    }
    let ind = independent(&rows);
    let predicted = v.multiplicity_free && ind;
    Ok(LinkCheck {
        unglued_multiplicity_free: v.multiplicity_free,
        unglued_rank: v.rank,
        roots_independent: ind,
        predicted_multiplicity_free: predicted,
        predicted_rank: if predicted { v.rank.map(|r| r + pairs.len()) } else { None },
    })
}
