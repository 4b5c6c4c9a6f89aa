//! A small ASCII language for symplectic representations.
//!
//! ```text
//! rep       := component { "++" component }
//! component := "T(" tensor ")" | tensor
//! tensor    := factorrep { "*" factorrep }
//! factorrep := ctor [ "#" label ]
//! ctor      := sl(n) | so(n) | sp(2n) | spin(n[,+|,-]) | ext(k,ctor) | ext0(k,ctor)
//!            | sym(k,ctor) | g2 | e6 | e7 | hw(X(r);c1,...,cr)
//! ```
//!
//! Adjacent components share a factor when the last factor of one and the
//! first of the next are the same simple algebra (other than sl(2)). Copies
//! of sl(2) are identified through labels: `sl(2)#a` in two components.

mod ast;
mod lower;
mod parse;

pub use ast::{ComponentExpr, Ctor, Expr, FactorExpr, Span};
pub use lower::{lower, lower_ctor, LoweredFactor};
pub use parse::parse;

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum DslErrorKind {
    Syntax,
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize)]
pub struct DslError {
    pub kind: DslErrorKind,
    pub message: String,
    pub span: Span,
}

impl DslError {
    pub fn syntax(message: impl Into<String>, span: Span) -> Self {
        DslError {
            kind: DslErrorKind::Syntax,
            message: message.into(),
            span,
        }
    }

    pub fn semantic(message: impl Into<String>, span: Span) -> Self {
        DslError {
            kind: DslErrorKind::Semantic,
            message: message.into(),
            span,
        }
    }

    /// The message followed by the source line with a caret marker.
    pub fn render(&self, src: &str) -> String {
        let start = self.span.start.min(src.len());
        let width = self.span.end.saturating_sub(self.span.start).max(1);
        format!("{self}\n  {src}\n  {}{}", " ".repeat(src[..start].chars().count()), "^".repeat(width))
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            DslErrorKind::Syntax => "syntax error",
            DslErrorKind::Semantic => "error",
        };
        write!(f, "{k} at {}..{}: {}", self.span.start, self.span.end, self.message)
    }
}

/// Parse and lower in one go.
pub fn compile(src: &str) -> Result<mfsr_repspec::SymplecticRep, DslError> {
    lower(&parse(src)?)
}
