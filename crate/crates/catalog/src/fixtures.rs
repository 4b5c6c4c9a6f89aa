use crate::CatalogError;
use mfsr_knop::Verdict;
use mfsr_lattice::{AlgebraShape, SimpleFactor, Weight};
use mfsr_repspec::{Component, IrreducibleSummand, Origin, SymplecticRep};

/// A representation the classification excludes: the algorithm must find a
/// dependency among Φ₊ᵗ.
#[derive(Debug, Clone)]
pub struct NegativeFixture {
    pub id: String,
    /// DSL text, when the rep can be written in the DSL
    pub source: Option<String>,
    pub provenance: String,
    pub rep: SymplecticRep,
}

impl NegativeFixture {
    pub fn describe(&self) -> String {
        self.source.clone().unwrap_or_else(|| self.rep.describe())
    }
}

const DSL: &[(&str, &str, &str)] = &[
    ("N.1", "sl(2)*g2 ++ g2*sl(2)", "two sl2⊗G2 sharing G2"),
    ("N.2", "sl(2)*g2 ++ T(g2)", "sl2⊗G2 sharing G2 with T(G2)"),
    ("N.3", "sp(4)*so(7) ++ so(7)*sl(2)", "sp2m⊗so_n & so_n⊗sp2p at (m,p) = (2,1)"),
    ("N.4", "sp(2)*so(7) ++ T(so(7))", "sp2m⊗so_n & T(so_n), m = 1"),
    ("N.5", "sp(2)*so(13) ++ spin(13)", "sp2m⊗so13 & spin13, m = 1"),
    ("N.6", "sp(4)*so(13) ++ spin(13)", "sp2m⊗so13 & spin13, m = 2"),
    ("N.7", "T(so(13)) ++ spin(13)", "T(so13) & spin13"),
    ("N.8", "sp(6)*so(12) ++ spin(12,+)", "sp2m⊗so12 & spin12, m = 3"),
    ("N.9", "sp(4)*so(11) ++ spin(11)", "sp2m⊗so11 & spin11, m = 2"),
    ("N.10", "T(so(11)) ++ spin(11)", "T(so11) & spin11"),
    ("N.11", "sp(4)*so(10) ++ T(spin(10,+))", "sp2m⊗so10 & T(spin10), m = 2"),
    ("N.12", "sp(2)*so(9) ++ spin(9)*sl(2)", "sp2m⊗so9 & spin9⊗sl2, m = 1"),
    ("N.13", "sp(2)*so(9) ++ T(spin(9))", "sp2m⊗so9 & T(spin9), m = 1"),
    ("N.14", "sl(2)*spin(9) ++ spin(9)*sl(2)", "two sl2⊗spin9 sharing so9"),
    ("N.15", "sl(2)*spin(9) ++ T(spin(9))", "sl2⊗spin9 & T(spin9)"),
    ("N.16", "sl(2)*spin(9) ++ T(so(9))", "sl2⊗spin9 & T(so9)"),
    ("N.17", "sp(4)*so(8) ++ spin(8,+)*sp(4)", "sp2m⊗so8 & spin8⊗sp2p at (m,p) = (2,2)"),
    ("N.18", "sp(6)*so(8) ++ spin(8,+)*sl(2)", "sp2m⊗so8 & spin8⊗sp2p at (m,p) = (3,1)"),
    ("N.19", "sp(4)*so(8) ++ T(spin(8,+))", "sp2m⊗so8 & T(spin8), m = 2"),
    ("N.20", "sp(4)*so(7) ++ spin(7)*sl(2)", "sp2m⊗so7 & spin7⊗sp2p at (m,p) = (2,1)"),
    ("N.21", "sp(4)*spin(7) ++ spin(7)*sl(2)", "sp2m⊗spin7 & spin7⊗sp2p at (m,p) = (2,1)"),
    ("N.22", "sp(4)*so(7) ++ T(spin(7))", "sp2m⊗so7 & T(spin7), m = 2"),
    ("N.23", "sp(2)*spin(7) ++ T(spin(7))", "sp2m⊗spin7 & T(spin7), m = 1"),
    ("N.24", "ext(3,sl(6)) ++ T(sl(6)) ++ T(sl(6))", "Λ³sl6 with two T(sl6), all sharing sl6"),
    ("N.25", "ext(3,sl(6)) ++ T(sl(6)*sl(3))", "Λ³sl6 & T(sl6⊗sl_m), m = 3"),
    ("N.26", "ext(3,sl(6)) ++ T(ext(2,sl(6)))", "Λ³sl6 & T(Λ²sl6)"),
    ("N.27", "so(3)*sp(4) ++ T(sp(4))", "so_m⊗sp2n & T(sp2n), m = 3"),
    ("N.28", "so(3)*sp(4) ++ sp(4)*so(3)", "so_m⊗sp2n & sp2n⊗so_p at m = p = 3"),
    ("N.29", "sp(4) ++ T(sp(4)) ++ T(sp(4))", "sp2n with two T(sp2n), all sharing sp2n"),
    ("N.30", "sp(4) ++ T(sp(4)*sl(2))", "sp2n & T(sp2n⊗sl2)"),
    ("N.31", "ext0(3,sp(6)) ++ T(sp(6)) ++ T(sp(6))", "Λ³₀sp6 with two T(sp6)"),
    ("N.32", "sp(2)*so(5) ++ T(so(5))", "sp2m⊗so5 & T(so5), m = 1"),
    ("N.33", "sp(4)*so(5) ++ T(sp(4))", "sp2m⊗so5 & T(sp4), m = 2"),
    ("N.34", "sp(2)*so(6) ++ T(so(6))", "sp2m⊗so6 & T(so6), m = 1"),
];

fn unit(r: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[k - 1] = 1;
    v
}

/// Components sharing the simple factor `g`: component i carries block
/// `rho_i` on `g`, tensored with a private sl(2) when the flag is set.
fn shared(g: SimpleFactor, parts: Vec<(Vec<i64>, Origin, bool)>) -> SymplecticRep {
    let n = parts.iter().filter(|p| p.2).count();
    let mut factors = vec![g];
    factors.extend(std::iter::repeat(SimpleFactor::a(1)).take(n));
    let mut next = 0;
    let components = parts
        .into_iter()
        .map(|(b, o, with_sl2)| {
            let mut h = b;
            let mut sl2 = vec![0; n];
            let mut origins = vec![(0, o)];
            if with_sl2 {
                sl2[next] = 1;
                next += 1;
                origins.push((next, Origin::Defining));
            }
            h.extend(sl2);
            Component::Type1(IrreducibleSummand {
                highest: Weight(h),
                origins,
            })
        })
        .collect();
    SymplecticRep::new(AlgebraShape::new(factors, 0), components)
}

fn built() -> Vec<NegativeFixture> {
    use mfsr_lattice::Series::{B, D};
    let b3 = SimpleFactor::new(B, 3).unwrap();
    let d4 = SimpleFactor::new(D, 4).unwrap();
    let d6 = SimpleFactor::new(D, 6).unwrap();
    let def = |r, k, l| (unit(r, k), Origin::Defining, l);
    let spin = |r, k, s, l| (unit(r, k), Origin::Spin(s), l);
    let fx = |id: &str, prov: &str, rep| NegativeFixture {
        id: id.into(),
        source: None,
        provenance: prov.into(),
        rep,
    };
    vec![
        fx(
            "N.35",
            "triple link: three so7⊗sl2 sharing so7",
            shared(b3, vec![def(3, 1, true), def(3, 1, true), def(3, 1, true)]),
        ),
        fx(
            "N.36",
            "triple link: spin7⊗sl2 with two so7⊗sl2 sharing so7",
            shared(b3, vec![spin(3, 3, None, true), def(3, 1, true), def(3, 1, true)]),
        ),
        fx(
            "N.37",
            "triple link: the three 8-dimensional so8 modules, each ⊗ sl2",
            shared(d4, vec![def(4, 1, true), spin(4, 3, Some('-'), true), spin(4, 4, Some('+'), true)]),
        ),
        fx(
            "N.38",
            "triple link: spin12 with two so12⊗sl2 sharing so12",
            shared(d6, vec![spin(6, 6, Some('+'), false), def(6, 1, true), def(6, 1, true)]),
        ),
    ]
}

/// The negative corpus, in id order.
pub fn negative_fixtures() -> Result<Vec<NegativeFixture>, CatalogError> {
    let mut out = Vec::new();
    for (id, src, prov) in DSL {
        let rep = mfsr_dsl::compile(src).map_err(|err| CatalogError::Dsl {
            src: src.to_string(),
            err,
        })?;
        out.push(NegativeFixture {
            id: id.to_string(),
            source: Some(src.to_string()),
            provenance: prov.to_string(),
            rep,
        });
    }
    out.extend(built());
    Ok(out)
}

/// Checks Σ cᵢ·Φ₊ᵗ[i] = 0 with c ≠ 0 by direct integer arithmetic.
pub fn witness_holds(v: &Verdict) -> bool {
    let Some(w) = &v.dependency_witness else {
        return false;
    };
    if w.coefficients.len() != v.phi_plus.len() || w.coefficients.iter().all(|&c| c == 0) {
        return false;
    }
    let width = v.phi_plus.first().map_or(0, |x| x.len());
    (0..width).all(|k| {
        v.phi_plus
            .iter()
            .zip(&w.coefficients)
            .map(|(x, &c)| c as i128 * x.0[k] as i128)
            .sum::<i128>()
            == 0
    })
}
