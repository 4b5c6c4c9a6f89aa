#![allow(dead_code)]
use mfsr_lattice::{AlgebraShape, Series, SimpleFactor, Weight};
use mfsr_repspec::{duality_class, Component, DualityClass, IrreducibleSummand, SymplecticRep};
use proptest::prelude::*;

pub fn f(s: Series, r: usize) -> SimpleFactor {
    SimpleFactor::new(s, r).unwrap()
}

pub fn sum(w: &[i64]) -> IrreducibleSummand {
    IrreducibleSummand::new(Weight(w.to_vec()))
}

/// ε-coordinates of A_n (n+1 entries) to fundamental coordinates.
pub fn eps_a(c: &[i64]) -> Vec<i64> {
    (0..c.len() - 1).map(|k| c[k] - c[k + 1]).collect()
}

/// ε-coordinates of C_m to fundamental coordinates.
pub fn eps_c(c: &[i64]) -> Vec<i64> {
    let m = c.len();
    (0..m).map(|k| if k + 1 < m { c[k] - c[k + 1] } else { c[k] }).collect()
}

fn small_factor() -> impl Strategy<Value = SimpleFactor> {
    prop_oneof![
        3 => Just(f(Series::A, 1)),
        2 => Just(f(Series::A, 2)),
        2 => Just(f(Series::C, 2)),
        1 => Just(f(Series::G2, 2)),
        1 => Just(f(Series::B, 3)),
        1 => Just(f(Series::A, 3)),
    ]
}

/// Wrap each summand that is not symplectic into T(·) with its own torus
/// coordinate.
pub fn build(factors: Vec<SimpleFactor>, comps: Vec<Vec<i64>>) -> SymplecticRep {
    let ss = AlgebraShape::new(factors.clone(), 0);
    let n = ss.total_rank();
    let (mut t1, mut t2) = (Vec::new(), Vec::new());
    for w in comps {
        let s = sum(&w);
        if duality_class(&ss, &s).unwrap() == DualityClass::Symplectic {
            t1.push(s)
        } else {
            t2.push(s)
        }
    }
    let t = t2.len();
    let pad = |s: &IrreducibleSummand, j: Option<usize>| {
        let mut h = s.highest.0.clone();
        h.extend(std::iter::repeat(0).take(t));
        if let Some(j) = j {
            h[n + j] = 1;
        }
        sum(&h)
    };
    let mut components: Vec<Component> = t1.iter().map(|s| Component::Type1(pad(s, None))).collect();
    for (j, s) in t2.iter().enumerate() {
        components.push(Component::Type2 { u: pad(s, Some(j)), torus: Some(j) });
    }
    SymplecticRep::new(AlgebraShape::new(factors, t), components)
}

/// Random symplectic reps of modest size, mostly with small coordinates.
pub fn small_rep() -> impl Strategy<Value = SymplecticRep> {
    (
        prop::collection::vec(small_factor(), 1..=3),
        prop::collection::vec((prop::collection::vec(0i64..=1, 12), prop::bool::weighted(0.2)), 1..=3),
    )
        .prop_map(|(factors, raw)| {
            let n: usize = factors.iter().map(|f| f.rank).sum();
            let comps = raw
                .into_iter()
                .map(|(r, bump)| {
                    let mut w = r[..n].to_vec();
                    if w.iter().all(|&c| c == 0) {
                        w[0] = 1;
                    }
                    // keep dimensions small: at most two nonzero coordinates
                    let mut seen = 0;
                    for c in w.iter_mut() {
                        if *c != 0 {
                            seen += 1;
                            if seen > 2 {
                                *c = 0;
                            }
                        }
                    }
                    if bump {
                        if let Some(c) = w.iter_mut().find(|c| **c != 0) {
                            *c += 1;
                        }
                    }
                    w
                })
                .collect();
            build(factors, comps)
        })
}
