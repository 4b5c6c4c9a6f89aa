use crate::{EXIT_INTERNAL, EXIT_USAGE};
use mfsr_catalog::{link_criterion, Catalog, CatalogError, Summary};
use mfsr_knop::{is_multiplicity_free_with, DefaultPolicy, KnopError, RandomPolicy, SelectionPolicy, Verdict};
use mfsr_lattice::{AlgebraShape, WeightMultiset};
use mfsr_repspec::{
    assemble_saturated, check_saturated, decompose_components, dim, duality_class, extract_module, glue_links, product,
    torus_free_key, Component, IrreducibleSummand, RepError, SymplecticRep,
};
use serde_json::{json, Map, Value};
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<KnopError> for Failure {
    fn from(e: KnopError) -> Self {
        match e {
            KnopError::InternalConsistency(_) => Failure::internal(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Knop(k) => k.into(),
            e => Failure::usage(e.to_string()),
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value, Failure> {
    serde_json::to_value(x).map_err(|e| Failure::internal(format!("serializing report: {e}")))
}

/// Recursively sorts object keys, so the output does not depend on how
/// serde_json stores maps.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut pairs: Vec<(String, Value)> = m.into_iter().collect();
            pairs.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in pairs {
                out.insert(k, canonical(v));
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(canonical).collect()),
        v => v,
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_json(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Array(a) if a.iter().all(is_scalar) => {
            let items: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_json(x, indent + 2, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(x, indent + 2, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        x => out.push_str(&x.to_string()),
    }
}

/// Indented JSON with sorted keys, arrays of scalars on one line, and a
/// trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = String::new();
    write_json(&canonical(v.clone()), 0, &mut s);
    s.push('\n');
    s
}

fn multiset(m: &WeightMultiset) -> Value {
    Value::Array(
        m.iter()
            .map(|(w, k)| json!({ "weight": w, "multiplicity": k }))
            .collect(),
    )
}

fn semisimple_class(shape: &AlgebraShape, s: &IrreducibleSummand) -> Result<String, Failure> {
    let ss = AlgebraShape::new(shape.factors.clone(), 0);
    let u = IrreducibleSummand::new(s.semisimple(shape));
    Ok(duality_class(&ss, &u).map_err(RepError::from)?.to_string())
}

fn components(rep: &SymplecticRep) -> Result<Value, Failure> {
    let mut out = Vec::new();
    for c in decompose_components(rep)? {
        let s = c.summand();
        let torus = match &c {
            Component::Type2 { torus, .. } => json!(torus),
            Component::Type1(_) => Value::Null,
        };
        out.push(json!({
            "type": if c.is_type1() { 1 } else { 2 },
            "highest": s.highest,
            "module": c.describe(&rep.shape),
            "dimension": c.dim(&rep.shape)?,
            "dualityClass": semisimple_class(&rep.shape, s)?,
            "torus": torus,
        }));
    }
    Ok(Value::Array(out))
}

/// Fields shared by every report about one representation: the glued rep's
/// algebra, module, dimension, saturation and warnings.
fn describe(command: &str, input: &str, rep: &SymplecticRep) -> Result<(SymplecticRep, Map<String, Value>), Failure> {
    let g = rep.glued()?;
    g.validate()?;
    let sat = check_saturated(&g)?;
    let mut warnings: Vec<String> = sat.violations.iter().map(|v| format!("not saturated: {v}")).collect();
    for f in g.trivial_factors() {
        warnings.push(format!("factor {f} ({}) acts trivially", g.shape.factors[f]));
    }
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("input".into(), json!(input));
    m.insert("algebra".into(), json!(g.shape.to_string()));
    m.insert("module".into(), json!(g.describe()));
    m.insert("dimension".into(), json!(dim(&g)?));
    m.insert("saturation".into(), to_value(&sat)?);
    m.insert("warnings".into(), json!(warnings));
    Ok((g, m))
}

fn verdict_value(v: &Verdict) -> Value {
    json!({
        "multiplicityFree": v.multiplicity_free,
        "rank": v.rank,
        "isotropy": v.isotropy.as_ref().map(|i| i.clone().normalized().to_string()),
        "phiPlus": v.phi_plus,
        "witness": v.dependency_witness,
    })
}

#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub trace: bool,
    pub seed: Option<u64>,
    pub timing: bool,
}

/// The report of `check` (and of `trace` when `opts.trace` is set).
pub fn check_report(input: &str, rep: &SymplecticRep, opts: &CheckOptions) -> Result<Value, Failure> {
    let command = if opts.trace { "trace" } else { "check" };
    let (g, mut m) = describe(command, input, rep)?;
    let start = Instant::now();
    let mut policy: Box<dyn SelectionPolicy> = match opts.seed {
        Some(s) => Box::new(RandomPolicy::new(s)),
        None => Box::new(DefaultPolicy),
    };
    let v = is_multiplicity_free_with(&g, policy.as_mut())?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    m.insert("verdict".into(), verdict_value(&v));
    if let Some(s) = opts.seed {
        m.insert("seed".into(), json!(s));
    }
    if opts.trace {
        let r = &v.result;
        m.insert(
            "trace".into(),
            json!({
                "steps": to_value(&r.trace)?,
                "delta0": r.delta0,
                "toroidal": multiset(&r.phi0_toroidal),
                "singular": multiset(&r.phi0_singular),
            }),
        );
    }
    if opts.timing {
        m.insert("elapsedMs".into(), json!(elapsed));
    }
    Ok(Value::Object(m))
}

pub fn decompose_report(input: &str, rep: &SymplecticRep) -> Result<Value, Failure> {
    let (g, mut m) = describe("decompose", input, rep)?;
    m.insert("components".into(), components(&g)?);
    Ok(Value::Object(m))
}

pub fn saturate_report(input: &str, rep: &SymplecticRep) -> Result<Value, Failure> {
    let (g, mut m) = describe("saturate", input, rep)?;
    let (ss, summands) = extract_module(&g)?;
    let s = assemble_saturated(&ss, &summands)
        .map_err(|e| Failure::internal(format!("the module of a symplectic input must be realizable: {e}")))?;
    let unchanged = g.shape.torus == s.shape.torus && torus_free_key(&g)? == torus_free_key(&s)?;
    m.insert(
        "result".into(),
        json!({
            "algebra": s.shape.to_string(),
            "module": s.describe(),
            "dimension": dim(&s)?,
            "components": components(&s)?,
            "unchanged": unchanged,
        }),
    );
    Ok(Value::Object(m))
}

pub fn glue_report(
    left_src: &str,
    left: &SymplecticRep,
    right_src: &str,
    right: &SymplecticRep,
    pairs: &[(usize, usize)],
) -> Result<Value, Failure> {
    let (l, r) = (left.glued()?, right.glued()?);
    let shift = l.shape.factors.len();
    let joined: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a, b + shift)).collect();
    let p = product(&l, &r);
    let g = glue_links(&p, &joined)?;
    let input = format!("{left_src} | {right_src}");
    let (_, mut m) = describe("glue", &input, &g)?;
    let v = is_multiplicity_free_with(&g, &mut DefaultPolicy)?;
    let link = link_criterion(&p, &joined).map_err(Failure::from)?;
    let agree = link.predicted_multiplicity_free == v.multiplicity_free && link.predicted_rank == v.rank;
    if !agree {
        m["warnings"]
            .as_array_mut()
            .expect("warnings is an array")
            .push(json!("the link criterion disagrees with the direct verdict"));
    }
    m.insert("pairs".into(), json!(pairs));
    m.insert("verdict".into(), verdict_value(&v));
    m.insert("linkCriterion".into(), to_value(&link)?);
    m.insert("routesAgree".into(), json!(agree));
    Ok(Value::Object(m))
}

pub fn verify_report(summary: &Summary, table: Option<&str>) -> Result<Value, Failure> {
    let mut v = to_value(summary)?;
    v["command"] = json!("tables verify");
    v["table"] = json!(table);
    Ok(v)
}

pub fn list_report(catalog: &Catalog, table: Option<&str>) -> Result<Value, Failure> {
    let entries: Vec<_> = catalog
        .entries
        .iter()
        .filter(|e| table.map_or(true, |t| e.table == t))
        .collect();
    Ok(json!({
        "command": "tables list",
        "version": catalog.version,
        "table": table,
        "entries": to_value(&entries)?,
    }))
}
