use crate::ast::{Ctor, Expr, Span};
use crate::DslError;
use mfsr_lattice::{AlgebraShape, Series, SimpleFactor, Weight};
use mfsr_repspec::{duality_class, Component, DualityClass, IrreducibleSummand, Origin, SymplecticRep};
use std::collections::BTreeMap;

/// One simple factor with the highest weight a constructor puts on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoweredFactor {
    pub factor: SimpleFactor,
    pub highest: Vec<i64>,
    pub origin: Origin,
}

fn unit(rank: usize, k: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[k - 1] = scale;
    v
}

fn single(series: Series, rank: usize, highest: Vec<i64>, origin: Origin) -> Result<Vec<LoweredFactor>, String> {
    let factor = SimpleFactor::new(series, rank).map_err(|e| e.to_string())?;
    Ok(vec![LoweredFactor { factor, highest, origin }])
}

/// The defining module of sl(n) or sp(2n): (series, rank).
fn defining(c: &Ctor) -> Option<(Series, usize)> {
    match c {
        Ctor::Sl(n) if *n >= 2 => Some((Series::A, *n as usize - 1)),
        Ctor::Sp(2) => Some((Series::A, 1)),
        Ctor::Sp(n) if *n >= 4 && n % 2 == 0 => Some((Series::C, *n as usize / 2)),
        _ => None,
    }
}

/// Simple factors and highest weights for a constructor.
pub fn lower_ctor(c: &Ctor) -> Result<Vec<LoweredFactor>, String> {
    use Series::*;
    match c {
        Ctor::Sl(n) => {
            let n = *n as usize;
            if n < 2 {
                return Err(format!("sl({n}) is not a simple algebra; use sl(n) with n ≥ 2"));
            }
            single(A, n - 1, unit(n - 1, 1, 1), Origin::Defining)
        }
        Ctor::Sp(n) => {
            let n = *n as usize;
            if n < 2 || n % 2 != 0 {
                return Err(format!("sp({n}): the argument must be even and at least 2"));
            }
            if n == 2 {
                single(A, 1, vec![1], Origin::Defining)
            } else {
                single(C, n / 2, unit(n / 2, 1, 1), Origin::Defining)
            }
        }
        Ctor::So(n) => {
            let n = *n as usize;
            match n {
                0..=2 => Err(format!("so({n}) is not semisimple")),
                3 => single(A, 1, vec![2], Origin::Defining),
                4 => Ok(vec![
                    LoweredFactor { factor: SimpleFactor::a(1), highest: vec![1], origin: Origin::Defining },
                    LoweredFactor { factor: SimpleFactor::a(1), highest: vec![1], origin: Origin::Defining },
                ]),
                5 => single(C, 2, vec![0, 1], Origin::Defining),
                6 => single(A, 3, vec![0, 1, 0], Origin::Defining),
                _ if n % 2 == 1 => single(B, n / 2, unit(n / 2, 1, 1), Origin::Defining),
                _ => single(D, n / 2, unit(n / 2, 1, 1), Origin::Defining),
            }
        }
        Ctor::Spin(n, sign) => {
            let n = *n as usize;
            let o = Origin::Spin(*sign);
            match (n, sign) {
                (3, None) => single(A, 1, vec![1], o),
                (5, None) => single(C, 2, vec![1, 0], o),
                (6, None | Some('+')) => single(A, 3, vec![1, 0, 0], o),
                (6, Some(_)) => single(A, 3, vec![0, 0, 1], o),
                (4, _) => Err("spin(4) is reducible; write sl(2)*sl(2) or a single sl(2)".into()),
                (_, None) if n >= 7 && n % 2 == 1 => single(B, n / 2, unit(n / 2, n / 2, 1), o),
                (_, Some(_)) if n % 2 == 1 => Err(format!("spin({n}) is irreducible, drop the sign")),
                // unsigned even spin means the + half-spin module
                (_, s) if n >= 8 => {
                    let r = n / 2;
                    single(D, r, unit(r, if *s == Some('-') { r - 1 } else { r }, 1), o)
                }
                _ => Err(format!("spin({n}) is not defined; use n ≥ 3")),
            }
        }
        Ctor::Ext(k, inner) => {
            let k = *k as usize;
            match defining(inner) {
                Some((A, r)) if k >= 1 && k <= r => single(A, r, unit(r, k, 1), Origin::Ext(k as u32)),
                Some((A, r)) => Err(format!("ext({k}, {inner}): k must satisfy 1 ≤ k ≤ {r}")),
                _ => Err(format!(
                    "ext is only defined on sl(n) here ({inner} has reducible exterior powers); use ext0 for sp(2n) or hw(...)"
                )),
            }
        }
        Ctor::Ext0(k, inner) => {
            let k = *k as usize;
            match (defining(inner), inner.as_ref()) {
                (Some((C, r)), _) if k >= 1 && k <= r => single(C, r, unit(r, k, 1), Origin::Ext0(k as u32)),
                (Some((A, 1)), Ctor::Sp(_)) if k == 1 => single(A, 1, vec![1], Origin::Ext0(1)),
                (Some(_), Ctor::Sp(n)) => Err(format!("ext0({k}, sp({n})): k must satisfy 1 ≤ k ≤ {}", n / 2)),
                _ => Err(format!("ext0 (the primitive exterior power) is defined on sp(2n) only, not on {inner}")),
            }
        }
        Ctor::Sym(k, inner) => {
            let k = *k as i64;
            if k < 1 {
                return Err("sym(0, ·) is trivial".into());
            }
            match defining(inner) {
                Some((s, r)) => single(s, r, unit(r, 1, k), Origin::Sym(k as u32)),
                None => Err(format!("sym is only defined on sl(n) and sp(2n), not {inner}; use hw(...)")),
            }
        }
        Ctor::G2 => single(G2, 2, vec![1, 0], Origin::Defining),
        Ctor::E6 => single(E6, 6, unit(6, 1, 1), Origin::Defining),
        Ctor::E7 => single(E7, 7, unit(7, 7, 1), Origin::Defining),
        Ctor::Hw { series, rank, coords } => {
            let f = SimpleFactor::from_letter(&series.to_string(), *rank as usize).map_err(|e| e.to_string())?;
            if coords.len() != f.rank {
                return Err(format!("hw({series}({rank});…) needs {} coordinates, got {}", f.rank, coords.len()));
            }
            Ok(vec![LoweredFactor { factor: f, highest: coords.clone(), origin: Origin::Hw }])
        }
    }
}

/// Build the representation. Labels become pending links.
pub fn lower(expr: &Expr) -> Result<SymplecticRep, DslError> {
    let mut factors: Vec<SimpleFactor> = Vec::new();
    // per component: (factor index, block, origin)
    let mut comps: Vec<Vec<(usize, Vec<i64>, Origin)>> = Vec::new();
    let mut labels: BTreeMap<String, Vec<(usize, usize, Span)>> = BTreeMap::new();
    let mut last: Option<usize> = None;

    for (ci, c) in expr.components.iter().enumerate() {
        let mut entries = Vec::new();
        let n = c.factors.len();
        let mut next_last = None;
        for (fi, fe) in c.factors.iter().enumerate() {
            let lowered = lower_ctor(&fe.ctor).map_err(|m| DslError::semantic(m, fe.span))?;
            if fe.label.is_some() && !(lowered.len() == 1 && lowered[0].factor.is_a1()) {
                return Err(DslError::semantic(
                    format!("only sl(2) factors can carry a link label; {} is not sl(2)", fe.ctor),
                    fe.span,
                ));
            }
            let mut idx = Vec::new();
            for lf in &lowered {
                let shared = fi == 0 && lowered.len() == 1 && fe.label.is_none() && !lf.factor.is_a1();
                let reuse = match last {
                    Some(p) if shared && factors[p] == lf.factor => Some(p),
                    _ => None,
                };
                let i = reuse.unwrap_or_else(|| {
                    factors.push(lf.factor);
                    factors.len() - 1
                });
                if entries.iter().any(|(j, _, _): &(usize, Vec<i64>, Origin)| *j == i) {
                    return Err(DslError::semantic("a factor occurs twice in one tensor product", fe.span));
                }
                entries.push((i, lf.highest.clone(), lf.origin.clone()));
                idx.push(i);
            }
            if let Some(l) = &fe.label {
                labels.entry(l.clone()).or_default().push((ci, idx[0], fe.span));
            }
            if fi + 1 == n && lowered.len() == 1 && fe.label.is_none() && !lowered[0].factor.is_a1() {
                next_last = Some(idx[0]);
            }
        }
        last = next_last;
        comps.push(entries);
    }

    let mut links = Vec::new();
    for (l, uses) in &labels {
        if uses.len() != 2 {
            return Err(DslError::semantic(
                format!("label #{l} is used {} time(s); a link identifies exactly two sl(2) factors", uses.len()),
                uses.last().unwrap().2,
            ));
        }
        if uses[0].0 == uses[1].0 {
            return Err(DslError::semantic(
                format!("label #{l} links two sl(2) factors of the same component; links must join different components"),
                uses[1].2,
            ));
        }
        links.push((uses[0].1, uses[1].1));
    }

    let torus = expr.components.iter().filter(|c| c.wrapped).count();
    let shape = AlgebraShape::new(factors, torus);
    let ss = AlgebraShape::new(shape.factors.clone(), 0);
    let mut components = Vec::new();
    let mut t = 0;
    for (c, entries) in expr.components.iter().zip(&comps) {
        let mut h = vec![0; shape.total_rank()];
        let mut origins = Vec::new();
        for (i, block, o) in entries {
            let off = shape.offset(*i);
            h[off..off + block.len()].copy_from_slice(block);
            origins.push((*i, o.clone()));
        }
        origins.sort();
        if c.wrapped {
            h[shape.torus_offset() + t] = 1;
            components.push(Component::Type2 {
                u: IrreducibleSummand { highest: Weight(h), origins },
                torus: Some(t),
            });
            t += 1;
        } else {
            let s = IrreducibleSummand { highest: Weight(h[..ss.total_rank()].to_vec()), origins: origins.clone() };
            let class = duality_class(&ss, &s).map_err(|e| DslError::semantic(e.to_string(), c.span))?;
            if class != DualityClass::Symplectic {
                return Err(DslError::semantic(
                    format!("{c} is {class}, so it carries no invariant symplectic form; wrap it in T(...)"),
                    c.span,
                ));
            }
            components.push(Component::Type1(IrreducibleSummand { highest: Weight(h), origins }));
        }
    }
    let mut rep = SymplecticRep::new(shape, components);
    rep.links = links;
    rep.validate().map_err(|e| DslError::semantic(e.to_string(), expr.span))?;
    if let Err(e) = rep.glued() {
        return Err(DslError::semantic(e.to_string(), expr.span));
    }
    Ok(rep)
}
