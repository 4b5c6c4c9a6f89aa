use serde::Serialize;
use std::fmt;

/// Byte offsets into the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ctor {
    Sl(u32),
    So(u32),
    Sp(u32),
    Spin(u32, Option<char>),
    Ext(u32, Box<Ctor>),
    Ext0(u32, Box<Ctor>),
    Sym(u32, Box<Ctor>),
    G2,
    E6,
    E7,
    Hw { series: char, rank: u32, coords: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorExpr {
    pub ctor: Ctor,
    pub label: Option<String>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentExpr {
    /// written as T(...)
    pub wrapped: bool,
    pub factors: Vec<FactorExpr>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub components: Vec<ComponentExpr>,
    pub span: Span,
}

impl Expr {
    /// The same tree with all spans zeroed, for structural comparison.
    pub fn without_spans(&self) -> Expr {
        Expr {
            span: Span::default(),
            components: self
                .components
                .iter()
                .map(|c| ComponentExpr {
                    wrapped: c.wrapped,
                    span: Span::default(),
                    factors: c
                        .factors
                        .iter()
                        .map(|f| FactorExpr {
                            span: Span::default(),
                            ..f.clone()
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for Ctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ctor::Sl(n) => write!(f, "sl({n})"),
            Ctor::So(n) => write!(f, "so({n})"),
            Ctor::Sp(n) => write!(f, "sp({n})"),
            Ctor::Spin(n, None) => write!(f, "spin({n})"),
            Ctor::Spin(n, Some(s)) => write!(f, "spin({n},{s})"),
            Ctor::Ext(k, c) => write!(f, "ext({k},{c})"),
            Ctor::Ext0(k, c) => write!(f, "ext0({k},{c})"),
            Ctor::Sym(k, c) => write!(f, "sym({k},{c})"),
            Ctor::G2 => f.write_str("g2"),
            Ctor::E6 => f.write_str("e6"),
            Ctor::E7 => f.write_str("e7"),
            Ctor::Hw { series, rank, coords } => {
                let c: Vec<String> = coords.iter().map(|x| x.to_string()).collect();
                write!(f, "hw({series}({rank});{})", c.join(","))
            }
        }
    }
}

impl fmt::Display for FactorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ctor)?;
        if let Some(l) = &self.label {
            write!(f, "#{l}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ComponentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        if self.wrapped {
            write!(f, "T({})", parts.join("*"))
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" ++ "))
    }
}
