use crate::ast::{ComponentExpr, Ctor, Expr, FactorExpr, Span};
use crate::DslError;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type Res<T> = Result<T, DslError>;

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn here(&self) -> Span {
        let len = self.rest().chars().next().map_or(0, |c| c.len_utf8());
        Span::new(self.pos, self.pos + len)
    }

    fn expect(&mut self, tok: &str) -> Res<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(DslError::syntax(format!("expected '{tok}'{}", self.found()), self.here()))
        }
    }

    fn found(&mut self) -> String {
        match self.peek() {
            None => ", found end of input".into(),
            Some(c) => format!(", found '{c}'"),
        }
    }

    fn word(&mut self) -> Option<(&'a str, Span)> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        if !r.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
            return None;
        }
        let len = r.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(r.len());
        self.pos += len;
        Some((&self.src[start..start + len], Span::new(start, start + len)))
    }

    fn number(&mut self) -> Res<u32> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let len = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if len == 0 {
            return Err(DslError::syntax(format!("expected a number{}", self.found()), self.here()));
        }
        self.pos += len;
        self.src[start..start + len]
            .parse()
            .map_err(|_| DslError::syntax("number too large", Span::new(start, start + len)))
    }

    fn rep(&mut self) -> Res<Expr> {
        self.skip_ws();
        let start = self.pos;
        let mut components = vec![self.component()?];
        while self.eat("++") {
            components.push(self.component()?);
        }
        let end = components.last().map_or(start, |c| c.span.end);
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(DslError::syntax(
                format!("expected '++' or end of input{}", self.found()),
                self.here(),
            ));
        }
        Ok(Expr {
            components,
            span: Span::new(start, end),
        })
    }

    fn component(&mut self) -> Res<ComponentExpr> {
        self.skip_ws();
        let start = self.pos;
        if self.rest().starts_with("T(") {
            self.pos += 2;
            let factors = self.tensor()?;
            self.expect(")")?;
            return Ok(ComponentExpr {
                wrapped: true,
                factors,
                span: Span::new(start, self.pos),
            });
        }
        let factors = self.tensor()?;
        let end = factors.last().map_or(start, |f| f.span.end);
        Ok(ComponentExpr {
            wrapped: false,
            factors,
            span: Span::new(start, end),
        })
    }

    fn tensor(&mut self) -> Res<Vec<FactorExpr>> {
        let mut out = vec![self.factor()?];
        while self.eat("*") {
            out.push(self.factor()?);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Res<FactorExpr> {
        self.skip_ws();
        let start = self.pos;
        let ctor = self.ctor()?;
        let mut label = None;
        let mut end = self.pos;
        if self.eat("#") {
            let r = self.rest();
            let len = r.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(r.len());
            if len == 0 {
                return Err(DslError::syntax(format!("expected a label after '#'{}", self.found()), self.here()));
            }
            label = Some(r[..len].to_string());
            self.pos += len;
            end = self.pos;
        }
        Ok(FactorExpr {
            ctor,
            label,
            span: Span::new(start, end),
        })
    }

    fn ctor(&mut self) -> Res<Ctor> {
        let Some((w, span)) = self.word() else {
            return Err(DslError::syntax(format!("expected a representation{}", self.found()), self.here()));
        };
        let one = |p: &mut Self| -> Res<u32> {
            p.expect("(")?;
            let n = p.number()?;
            p.expect(")")?;
            Ok(n)
        };
        let inner = |p: &mut Self| -> Res<(u32, Box<Ctor>)> {
            p.expect("(")?;
            let k = p.number()?;
            p.expect(",")?;
            let c = p.ctor()?;
            p.expect(")")?;
            Ok((k, Box::new(c)))
        };
        Ok(match w {
            "sl" => Ctor::Sl(one(self)?),
            "so" => Ctor::So(one(self)?),
            "sp" => Ctor::Sp(one(self)?),
            "spin" => {
                self.expect("(")?;
                let n = self.number()?;
                let sign = if self.eat(",") {
                    if self.eat("+") {
                        Some('+')
                    } else if self.eat("-") {
                        Some('-')
                    } else {
                        return Err(DslError::syntax(format!("expected '+' or '-'{}", self.found()), self.here()));
                    }
                } else {
                    None
                };
                self.expect(")")?;
                Ctor::Spin(n, sign)
            }
            "ext" => {
                let (k, c) = inner(self)?;
                Ctor::Ext(k, c)
            }
            "ext0" => {
                let (k, c) = inner(self)?;
                Ctor::Ext0(k, c)
            }
            "sym" => {
                let (k, c) = inner(self)?;
                Ctor::Sym(k, c)
            }
            "g2" => Ctor::G2,
            "e6" => Ctor::E6,
            "e7" => Ctor::E7,
            "hw" => {
                self.expect("(")?;
                self.skip_ws();
                let s = self.rest().chars().next();
                let series = match s {
                    Some(c @ ('A' | 'B' | 'C' | 'D' | 'E' | 'G')) => c,
                    _ => {
                        return Err(DslError::syntax(
                            format!("expected a series letter A, B, C, D, E or G{}", self.found()),
                            self.here(),
                        ))
                    }
                };
                self.pos += 1;
                self.expect("(")?;
                let rank = self.number()?;
                self.expect(")")?;
                self.expect(";")?;
                let mut coords = vec![self.number()? as i64];
                while self.eat(",") {
                    coords.push(self.number()? as i64);
                }
                self.expect(")")?;
                Ctor::Hw { series, rank, coords }
            }
            other => {
                return Err(DslError::syntax(
                    format!("unknown constructor '{other}' (expected sl, so, sp, spin, ext, ext0, sym, g2, e6, e7, hw or T)"),
                    span,
                ))
            }
        })
    }
}

/// Parse an expression.
pub fn parse(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser { src, pos: 0 };
    p.rep()
}
