use crate::entry::TableEntry;
use crate::CatalogError;
use evalexpr::{ContextWithMutableVariables, HashMapContext, Value};
use mfsr_repspec::SymplecticRep;
use std::collections::BTreeMap;

pub type Params = BTreeMap<String, i64>;

fn context(params: &Params) -> HashMapContext {
    let mut ctx = HashMapContext::new();
    for (k, v) in params {
        ctx.set_value(k.clone(), Value::Int(*v)).expect("fresh integer variable");
    }
    ctx
}

fn eval(expr: &str, params: &Params) -> Result<Value, CatalogError> {
    evalexpr::eval_with_context(expr, &context(params)).map_err(|e| CatalogError::Expr {
        expr: expr.to_string(),
        message: e.to_string(),
    })
}

pub(crate) fn eval_int(expr: &str, params: &Params) -> Result<i64, CatalogError> {
    match eval(expr, params)? {
        Value::Int(i) => Ok(i),
        v => Err(CatalogError::Expr {
            expr: expr.into(),
            message: format!("expected an integer, got {v}"),
        }),
    }
}

fn eval_bool(expr: &str, params: &Params) -> Result<bool, CatalogError> {
    match eval(expr, params)? {
        Value::Boolean(b) => Ok(b),
        v => Err(CatalogError::Expr {
            expr: expr.into(),
            message: format!("expected a boolean, got {v}"),
        }),
    }
}

/// Replace every `{expr}` by its value (integers in decimal, strings verbatim).
pub fn render_template(template: &str, params: &Params) -> Result<String, CatalogError> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(start) = rest.find('{') {
        out.push_str(&rest[..start]);
        let end = rest[start..].find('}').ok_or_else(|| CatalogError::Expr {
            expr: template.into(),
            message: "unclosed `{`".into(),
        })? + start;
        let expr = &rest[start + 1..end];
        match eval(expr, params)? {
            Value::Int(i) => out.push_str(&i.to_string()),
            Value::String(s) => out.push_str(&s),
            v => {
                return Err(CatalogError::Expr {
                    expr: expr.into(),
                    message: format!("cannot substitute {v}"),
                })
            }
        }
        rest = &rest[end + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

fn check_params(entry: &TableEntry, params: &Params) -> Result<(), CatalogError> {
    let want: Vec<&String> = entry.params.iter().collect();
    let got: Vec<&String> = params.keys().collect();
    let mut w = want.clone();
    w.sort();
    if w != got {
        return Err(CatalogError::Params(format!(
            "for {}: expected {:?}, got {:?}",
            entry.id, entry.params, got
        )));
    }
    for c in &entry.constraints {
        if !eval_bool(c, params)? {
            return Err(CatalogError::Constraint(c.clone()));
        }
    }
    Ok(())
}

/// The concrete representation of a row at the given parameters.
pub fn instantiate(entry: &TableEntry, params: &Params) -> Result<SymplecticRep, CatalogError> {
    check_params(entry, params)?;
    let src = render_template(&entry.template, params)?;
    mfsr_dsl::compile(&src).map_err(|err| CatalogError::Dsl { src, err })
}

/// All parameter tuples with every parameter in 0..=cap satisfying the
/// constraints, in lexicographic order.
pub fn parameter_tuples(entry: &TableEntry, cap: i64) -> Result<Vec<Params>, CatalogError> {
    let mut names = entry.params.clone();
    names.sort();
    names.dedup();
    let mut out = Vec::new();
    let mut cur = vec![0i64; names.len()];
    loop {
        let p: Params = names.iter().cloned().zip(cur.iter().copied()).collect();
        let mut ok = true;
        for c in &entry.constraints {
            if !eval_bool(c, &p)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(p);
        }
        // odometer
        let mut k = names.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < cap {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Factor indices of the underlined sl(2)'s.
pub fn underlined_factors(entry: &TableEntry, params: &Params) -> Result<Vec<usize>, CatalogError> {
    entry
        .underlined
        .iter()
        .map(|e| {
            let i = eval_int(e, params)?;
            usize::try_from(i).map_err(|_| CatalogError::Expr {
                expr: e.clone(),
                message: "negative factor index".into(),
            })
        })
        .collect()
}

pub(crate) fn describe_params(p: &Params) -> String {
    let v: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    v.join(",")
}
