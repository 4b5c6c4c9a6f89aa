use crate::entry::{Catalog, TableEntry, TABLES};
use crate::isotropy::parse_isotropy;
use crate::links::{table_s_check, TableSCheck};
use crate::template::{describe_params, eval_int, instantiate, parameter_tuples, render_template, underlined_factors, Params};
use crate::CatalogError;
use mfsr_knop::is_multiplicity_free;
use mfsr_repspec::check_saturated;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseReport {
    pub params: Params,
    pub rep: String,
    pub saturated: Option<bool>,
    pub multiplicity_free: Option<bool>,
    pub rank: Option<usize>,
    pub expected_rank: Option<i64>,
    pub isotropy: Option<String>,
    pub expected_isotropy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_s: Option<TableSCheck>,
    pub passed: bool,
    pub mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EntryReport {
    pub id: String,
    pub table: String,
    pub passed: bool,
    pub cases: Vec<CaseReport>,
    /// problems not tied to one parameter tuple
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableSummary {
    pub table: String,
    pub entries: usize,
    pub cases: usize,
    pub passed: usize,
    pub failed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub cap: i64,
    pub passed: bool,
    pub tables: Vec<TableSummary>,
    pub entries: Vec<EntryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub cap: i64,
    pub table: Option<String>,
    pub jobs: Option<usize>,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cap: 8,
            table: None,
            jobs: None,
            timing: false,
        }
    }
}

fn run_case(entry: &TableEntry, params: &Params, mm: &mut Vec<String>, r: &mut CaseReport) -> Result<(), CatalogError> {
    let expected_rank = eval_int(&entry.rank, params)?;
    r.expected_rank = Some(expected_rank);
    let iso_src = render_template(&entry.isotropy, params)?;
    let expected_iso = parse_isotropy(&iso_src)?;
    r.expected_isotropy = Some(expected_iso.to_string());
    r.rep = render_template(&entry.template, params)?;

    let rep = instantiate(entry, params)?;
    let sat = check_saturated(&rep)?;
    r.saturated = Some(sat.saturated);
    if !sat.saturated {
        mm.push(format!("not saturated: {}", sat.violations.join("; ")));
    }
    let v = is_multiplicity_free(&rep)?;
    r.multiplicity_free = Some(v.multiplicity_free);
    r.rank = v.rank;
    if !v.multiplicity_free {
        mm.push(format!("not multiplicity free ({} weights in Φ₊ᵗ)", v.phi_plus.len()));
    }
    if v.rank.map(|k| k as i64) != Some(expected_rank) {
        mm.push(format!("rank {:?}, table says {expected_rank}", v.rank));
    }
    if let Some(iso) = &v.isotropy {
        let iso = iso.clone().normalized();
        r.isotropy = Some(iso.to_string());
        if iso != expected_iso {
            mm.push(format!("isotropy {iso}, table says {expected_iso} (from `{iso_src}`)"));
        }
    }
    if entry.table == "S" {
        let u = underlined_factors(entry, params)?;
        let s = table_s_check(&rep, &v, &u)?;
        if !s.independent {
            mm.push("Φ₊ᵗ plus the underlined simple roots is dependent".into());
        }
        r.table_s = Some(s);
    }
    Ok(())
}

fn verify_case(entry: &TableEntry, params: &Params, timing: bool) -> CaseReport {
    let start = Instant::now();
    let mut r = CaseReport {
        params: params.clone(),
        rep: String::new(),
        saturated: None,
        multiplicity_free: None,
        rank: None,
        expected_rank: None,
        isotropy: None,
        expected_isotropy: None,
        table_s: None,
        passed: false,
        mismatches: Vec::new(),
        elapsed_ms: None,
    };
    let mut mm = Vec::new();
    if let Err(e) = run_case(entry, params, &mut mm, &mut r) {
        mm.push(format!("error: {e}"));
    }
    r.passed = mm.is_empty();
    r.mismatches = mm;
    if timing {
        r.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    r
}

fn assemble(entry: &TableEntry, tuples: Result<Vec<Params>, CatalogError>, cases: Vec<CaseReport>, cap: i64) -> EntryReport {
    let mut mismatches = Vec::new();
    match tuples {
        Err(e) => mismatches.push(format!("error: {e}")),
        Ok(t) if t.is_empty() => mismatches.push(format!("no parameter tuple with all parameters at most {cap}")),
        Ok(_) => {}
    }
    EntryReport {
        id: entry.id.clone(),
        table: entry.table.clone(),
        passed: mismatches.is_empty() && cases.iter().all(|c| c.passed),
        cases,
        mismatches,
    }
}

/// Replay one row for every admissible parameter tuple up to `cap`.
pub fn verify_entry(entry: &TableEntry, cap: i64) -> EntryReport {
    let tuples = parameter_tuples(entry, cap);
    let cases = match &tuples {
        Ok(t) => t.iter().map(|p| verify_case(entry, p, false)).collect(),
        Err(_) => Vec::new(),
    };
    assemble(entry, tuples, cases, cap)
}

/// Replay the catalog (or one table) in parallel; the result does not
/// depend on the number of workers.
pub fn verify_all(catalog: &Catalog, opts: &VerifyOptions) -> Result<Summary, CatalogError> {
    let start = Instant::now();
    let entries: Vec<&TableEntry> = catalog
        .entries
        .iter()
        .filter(|e| opts.table.as_ref().map_or(true, |t| &e.table == t))
        .collect();
    if let Some(t) = &opts.table {
        if entries.is_empty() {
            return Err(CatalogError::Params(format!("no table `{t}` (known: {})", TABLES.join(", "))));
        }
    }
    let tuples: Vec<Result<Vec<Params>, CatalogError>> = entries.iter().map(|e| parameter_tuples(e, opts.cap)).collect();
    let jobs: Vec<(usize, &Params)> = tuples
        .iter()
        .enumerate()
        .flat_map(|(i, t)| t.as_ref().map(|v| v.iter().map(move |p| (i, p)).collect::<Vec<_>>()).unwrap_or_default())
        .collect();
    let work = || -> Vec<(usize, CaseReport)> {
        jobs.par_iter()
            .map(|&(i, p)| (i, verify_case(entries[i], p, opts.timing)))
            .collect()
    };
    let results = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CatalogError::Params(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    let mut per: Vec<Vec<CaseReport>> = vec![Vec::new(); entries.len()];
    for (i, c) in results {
        per[i].push(c);
    }
    let reports: Vec<EntryReport> = entries
        .iter()
        .zip(tuples)
        .zip(per)
        .map(|((e, t), cases)| assemble(e, t, cases, opts.cap))
        .collect();

    let tables = TABLES
        .iter()
        .filter(|t| reports.iter().any(|r| &r.table == *t))
        .map(|t| {
            let rs: Vec<&EntryReport> = reports.iter().filter(|r| &r.table == t).collect();
            TableSummary {
                table: t.to_string(),
                entries: rs.len(),
                cases: rs.iter().map(|r| r.cases.len()).sum(),
                passed: rs.iter().filter(|r| r.passed).count(),
                failed: rs.iter().filter(|r| !r.passed).map(|r| r.id.clone()).collect(),
            }
        })
        .collect();
    Ok(Summary {
        cap: opts.cap,
        passed: reports.iter().all(|r| r.passed),
        tables,
        entries: reports,
        elapsed_ms: opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

impl CaseReport {
    pub fn label(&self, id: &str) -> String {
        if self.params.is_empty() {
            id.to_string()
        } else {
            format!("{id}[{}]", describe_params(&self.params))
        }
    }
}
