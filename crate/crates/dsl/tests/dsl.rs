use mfsr_dsl::*;
use mfsr_lattice::{Series, SimpleFactor, Weight};
use mfsr_repspec::{check_saturated, dim, Component};
use proptest::prelude::*;

fn f(s: Series, r: usize) -> SimpleFactor {
    SimpleFactor::new(s, r).unwrap()
}

#[test]
fn table11_example() {
    let rep = compile("sp(4)*so(12) ++ spin(12,+)").unwrap();
    assert_eq!(rep.shape.factors, vec![f(Series::C, 2), f(Series::D, 6)]);
    assert_eq!(rep.shape.torus, 0);
    assert_eq!(dim(&rep).unwrap(), 80);
    assert!(rep.components.iter().all(|c| c.is_type1()));
    assert!(check_saturated(&rep).unwrap().saturated);
}

#[test]
fn lambda3_sl6_module() {
    let rep = compile("ext(3, sl(6)) ++ T(sl(6)) ++ T(sl(6))").unwrap();
    assert_eq!(rep.shape.factors, vec![f(Series::A, 5)]);
    assert_eq!(rep.shape.torus, 2);
    assert_eq!(dim(&rep).unwrap(), 20 + 12 + 12);
    assert_eq!(
        rep.components[2],
        Component::Type2 {
            u: mfsr_repspec::IrreducibleSummand {
                highest: Weight(vec![1, 0, 0, 0, 0, 0, 1]),
                origins: vec![(0, mfsr_repspec::Origin::Defining)]
            },
            torus: Some(1)
        }
    );
    assert!(check_saturated(&rep).unwrap().saturated);
}

#[test]
fn glued_example() {
    // parses, but C^4 ⊗ C^2 is orthogonal and cannot be a type 1 component
    let src = "sp(4)*sl(2)#a ++ sl(2)#a*sp(6)";
    let e = parse(src).unwrap();
    assert_eq!(e.components[1].factors[0].label.as_deref(), Some("a"));
    assert!(compile(src).unwrap_err().message.contains("T(...)"));

    let rep = compile("sp(4)*sym(2,sl(2))#a ++ sym(2,sl(2))#a*sp(6)").unwrap();
    assert_eq!(rep.links, vec![(1, 2)]);
    let g = rep.glued().unwrap();
    assert_eq!(g.shape.factors, vec![f(Series::C, 2), f(Series::A, 1), f(Series::C, 3)]);
    assert_eq!(dim(&g).unwrap(), 12 + 18);
    assert!(check_saturated(&rep).unwrap().saturated);

    let rep = compile("T(so(8)) ++ spin(8,+)*sl(2)#a ++ sl(2)#a*spin(7) ++ so(7)*sl(2)").unwrap();
    let g = rep.glued().unwrap();
    assert_eq!(g.shape.to_string(), "D4+A1+B3+A1+t1");
    assert_eq!(dim(&g).unwrap(), 16 + 16 + 16 + 14);
    assert!(check_saturated(&rep).unwrap().saturated);

    // both sl(2) factors of one component
    let e = compile("sl(2)#a*sp(4)*sl(2)#a").unwrap_err();
    assert!(e.message.contains("same component"));
    // (S.9)+(S.9) glues to a repeated type 1 component
    let rep = compile("sl(2)#a ++ sl(2)#a").unwrap();
    assert!(!check_saturated(&rep).unwrap().saturated);
}

#[test]
fn lowering_table() {
    let cases: &[(&str, &str, u64)] = &[
        ("T(so(3))", "A1+t1", 6),
        ("sl(2)*so(4)", "A1+A1+A1", 8),
        ("sp(4)*so(5)", "C2+C2", 20),
        ("sp(2)*so(6)", "A1+A3", 12),
        ("sp(2)*so(7)", "A1+B3", 14),
        ("sp(2)*so(8)", "A1+D4", 16),
        ("spin(3)", "A1", 2),
        ("spin(5)", "C2", 4),
        ("T(spin(6,+))", "A3+t1", 8),
        ("sl(2)*spin(7)", "A1+B3", 16),
        ("T(spin(10,-))", "D5+t1", 32),
        ("spin(11)", "B5", 32),
        ("spin(12,-)", "D6", 32),
        ("sp(6)", "C3", 6),
        ("sp(2)*g2", "A1+G2", 14),
        ("T(e6)", "E6+t1", 54),
        ("e7", "E7", 56),
        ("ext(3,sl(6))", "A5", 20),
        ("ext0(3,sp(6))", "C3", 14),
        ("sp(2)*ext0(2,sp(4))", "A1+C2", 10),
        ("sym(3,sl(2))", "A1", 4),
        ("T(sym(2,sl(3)))", "A2+t1", 12),
        ("sp(2)*sym(2,sp(4))", "A1+C2", 20),
        ("sl(2)*hw(B(3);0,0,1)", "A1+B3", 16),
        ("T(hw(E(6);1,0,0,0,0,0))", "E6+t1", 54),
        ("T(hw(G(2);0,1))", "G2+t1", 28),
    ];
    for (src, shape, d) in cases {
        let rep = compile(src).unwrap_or_else(|e| panic!("{src}: {e}"));
        assert_eq!(rep.shape.to_string(), *shape, "{src}");
        assert_eq!(dim(&rep).unwrap(), *d, "{src}");
    }
}

#[test]
fn unsigned_even_spin_is_plus() {
    let key = |src: &str| mfsr_repspec::torus_free_key(&compile(src).unwrap()).unwrap();
    assert_eq!(key("sp(4)*so(12) ++ spin(12)"), key("sp(4)*so(12) ++ spin(12,+)"));
    assert_ne!(key("spin(12)"), key("spin(12,-)"));
    assert_eq!(key("T(spin(6))"), key("T(sl(4))"));
}

#[test]
fn semantic_errors() {
    let bad = [
        "so(7)",
        "sl(3)",
        "ext0(2, sl(4))",
        "ext(2, sp(4))",
        "sp(4)#a ++ sp(4)#a",
        "sl(2)#a ++ sl(2)",
        "sl(2)#a ++ sl(2)#a ++ sl(2)#a",
        "sl(2)#a*sp(4)*sl(2)#a",
        "spin(8)",
        "spin(4)",
        "spin(7,+)",
        "sp(5)",
        "sl(1)",
        "so(2)",
        "hw(A(2);1)",
        "hw(F(4);1,0,0,0)",
        "ext(6, sl(6))",
        "sym(2, so(5))",
    ];
    for src in bad {
        match compile(src) {
            Err(e) => {
                assert!(matches!(e.kind, DslErrorKind::Semantic | DslErrorKind::Syntax), "{src}");
                assert!(e.span.end <= src.len());
            }
            Ok(_) => panic!("{src} should be rejected"),
        }
    }
    let e = compile("T(sl(3)) ++ so(7)").unwrap_err();
    assert_eq!(e.kind, DslErrorKind::Semantic);
    assert!(e.message.contains("T(...)"));
    assert_eq!(e.span, Span::new(12, 17));
    let e = compile("sp(4)#a ++ sp(4)#a").unwrap_err();
    assert!(e.message.contains("sl(2)"));
}

#[test]
fn syntax_errors() {
    let cases: &[(&str, usize)] = &[
        ("", 0),
        ("sl(3", 4),
        ("sl(3) +", 6),
        ("foo(3)", 0),
        ("T(sl(3)", 7),
        ("sl(3) ++", 8),
        ("spin(8,x)", 7),
        ("sl(3)*", 6),
        ("hw(Q(2);1,0)", 3),
        ("sl(2)#", 6),
    ];
    for (src, at) in cases {
        let e = parse(src).unwrap_err();
        assert_eq!(e.kind, DslErrorKind::Syntax, "{src}");
        assert_eq!(e.span.start, *at, "{src}: {e}");
    }
    let r = parse("sl(3) +").unwrap_err().render("sl(3) +");
    assert!(r.ends_with("      ^"));
}

#[test]
fn whitespace_and_printing() {
    let e = parse("  T( sl( 3 ) * sp(4) ) ++ spin(8, +)#x ").unwrap();
    assert_eq!(e.to_string(), "T(sl(3)*sp(4)) ++ spin(8,+)#x");
}

fn ctor() -> impl Strategy<Value = Ctor> {
    let leaf = prop_oneof![
        (1u32..10).prop_map(Ctor::Sl),
        (1u32..14).prop_map(Ctor::So),
        (1u32..12).prop_map(Ctor::Sp),
        (3u32..14, prop_oneof![Just(None), Just(Some('+')), Just(Some('-'))]).prop_map(|(n, s)| Ctor::Spin(n, s)),
        Just(Ctor::G2),
        Just(Ctor::E6),
        Just(Ctor::E7),
        (
            prop_oneof![Just('A'), Just('B'), Just('C'), Just('D'), Just('E'), Just('G')],
            1u32..8,
            prop::collection::vec(0i64..4, 1..8)
        )
            .prop_map(|(series, rank, coords)| Ctor::Hw { series, rank, coords }),
    ];
    leaf.prop_recursive(2, 8, 1, |inner| {
        prop_oneof![
            (1u32..6, inner.clone()).prop_map(|(k, c)| Ctor::Ext(k, Box::new(c))),
            (1u32..6, inner.clone()).prop_map(|(k, c)| Ctor::Ext0(k, Box::new(c))),
            (1u32..6, inner).prop_map(|(k, c)| Ctor::Sym(k, Box::new(c))),
        ]
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let factor = (ctor(), prop::option::weighted(0.2, "[a-z][a-z0-9_]{0,3}")).prop_map(|(ctor, label)| FactorExpr {
        ctor,
        label,
        span: Span::default(),
    });
    let comp = (any::<bool>(), prop::collection::vec(factor, 1..4)).prop_map(|(wrapped, factors)| ComponentExpr {
        wrapped,
        factors,
        span: Span::default(),
    });
    prop::collection::vec(comp, 1..4).prop_map(|components| Expr { components, span: Span::default() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_round_trip(e in expr()) {
        let printed = e.to_string();
        let back = parse(&printed).unwrap();
        prop_assert_eq!(back.without_spans(), e.clone());
        prop_assert_eq!(&back.to_string(), &printed);
        // spans point at the printed text
        for (c, orig) in back.components.iter().zip(&e.components) {
            prop_assert_eq!(&printed[c.span.start..c.span.end], orig.to_string());
        }
    }
}
