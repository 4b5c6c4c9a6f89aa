//! Human-readable rendering of the JSON reports.

use serde_json::Value;
use std::fmt::Write;

fn weight(v: &Value) -> String {
    let c: Vec<String> = v.as_array().into_iter().flatten().map(|x| x.to_string()).collect();
    format!("({})", c.join(","))
}

fn s(v: &Value) -> &str {
    v.as_str().unwrap_or("")
}

fn yes(v: &Value) -> &'static str {
    if v.as_bool() == Some(true) {
        "yes"
    } else {
        "no"
    }
}

fn line(out: &mut String, key: &str, val: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<20}{val}");
}

fn header(out: &mut String, r: &Value) {
    line(out, "input", s(&r["input"]));
    line(out, "algebra", s(&r["algebra"]));
    line(out, "module", s(&r["module"]));
    line(out, "dimension", &r["dimension"]);
    line(out, "saturated", yes(&r["saturation"]["saturated"]));
}

fn verdict(out: &mut String, v: &Value) {
    line(out, "multiplicity free", yes(&v["multiplicityFree"]));
    if v["multiplicityFree"].as_bool() == Some(true) {
        line(out, "rank", &v["rank"]);
        line(out, "generic isotropy", s(&v["isotropy"]));
    }
    let phi = v["phiPlus"].as_array().cloned().unwrap_or_default();
    let _ = writeln!(out, "Φ₊ᵗ ({})", phi.len());
    for w in &phi {
        let _ = writeln!(out, "  {}", weight(w));
    }
    if let Some(w) = v["witness"].as_object() {
        line(out, "dependency", format!("{} {}", s(&w["kind"]), weight(&w["coefficients"])));
    }
}

fn components(out: &mut String, cs: &Value) {
    for c in cs.as_array().into_iter().flatten() {
        let torus = match c["torus"].as_u64() {
            Some(t) => format!(", torus {t}"),
            None => String::new(),
        };
        let _ = writeln!(
            out,
            "  type {}  {}  dim {}  {}{torus}",
            c["type"],
            s(&c["module"]),
            c["dimension"],
            s(&c["dualityClass"])
        );
    }
}

fn trace(out: &mut String, t: &Value) {
    for (i, st) in t["steps"].as_array().into_iter().flatten().enumerate() {
        let _ = writeln!(
            out,
            "step {:<3} χ = {} ×{}  |P| = {}  |Q| = {}  roots left {}  weights left {}",
            i + 1,
            weight(&st["chosen"]),
            st["chosenMultiplicity"],
            st["P"].as_array().map_or(0, |a| a.len()),
            st["Q"].as_array().map_or(0, |a| a.len()),
            st["remainingRootCount"],
            st["remainingWeightCount"]
        );
    }
    let d = t["delta0"].as_array().cloned().unwrap_or_default();
    let _ = writeln!(out, "Δ₀ ({})", d.len());
    for w in &d {
        let _ = writeln!(out, "  {}", weight(w));
    }
    for (key, name) in [("toroidal", "toroidal"), ("singular", "singular")] {
        let xs = t[key].as_array().cloned().unwrap_or_default();
        let _ = writeln!(out, "{name} ({})", xs.len());
        for x in &xs {
            let _ = writeln!(out, "  {} ×{}", weight(&x["weight"]), x["multiplicity"]);
        }
    }
}

fn verify(out: &mut String, r: &Value) {
    for t in r["tables"].as_array().into_iter().flatten() {
        let failed: Vec<&str> = t["failed"].as_array().into_iter().flatten().map(s).collect();
        let _ = writeln!(
            out,
            "table {:<3} {} rows, {} cases, {} rows pass{}",
            s(&t["table"]),
            t["entries"],
            t["cases"],
            t["passed"],
            if failed.is_empty() { String::new() } else { format!(", failing: {}", failed.join(" ")) }
        );
    }
    for e in r["entries"].as_array().into_iter().flatten() {
        for m in e["mismatches"].as_array().into_iter().flatten() {
            let _ = writeln!(out, "  {}: {}", s(&e["id"]), s(m));
        }
        for c in e["cases"].as_array().into_iter().flatten() {
            for m in c["mismatches"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "  {} {}: {}", s(&e["id"]), c["params"], s(m));
            }
        }
    }
    if let Some(ms) = r["elapsedMs"].as_f64() {
        let _ = writeln!(out, "elapsed {ms:.0} ms");
    }
    let _ = writeln!(out, "{}", if r["passed"].as_bool() == Some(true) { "all rows pass" } else { "FAILED" });
}

fn list(out: &mut String, r: &Value) {
    for e in r["entries"].as_array().into_iter().flatten() {
        let params: Vec<&str> = e["params"].as_array().into_iter().flatten().map(s).collect();
        let _ = writeln!(out, "{:<7} {}", s(&e["id"]), s(&e["template"]));
        let _ = writeln!(
            out,
            "        params [{}]  rank {}  isotropy {}",
            params.join(","),
            s(&e["rank"]),
            s(&e["isotropy"])
        );
        if !s(&e["wv"]).is_empty() || !s(&e["i"]).is_empty() {
            let _ = writeln!(out, "        W_V {}  i {}", s(&e["wv"]), s(&e["i"]));
        }
    }
}

pub fn render(r: &Value) -> String {
    let mut out = String::new();
    match s(&r["command"]) {
        "check" | "trace" => {
            header(&mut out, r);
            verdict(&mut out, &r["verdict"]);
            if r["trace"].is_object() {
                trace(&mut out, &r["trace"]);
            }
        }
        "decompose" => {
            header(&mut out, r);
            let _ = writeln!(out, "components");
            components(&mut out, &r["components"]);
        }
        "saturate" => {
            header(&mut out, r);
            let x = &r["result"];
            line(&mut out, "saturation", s(&x["algebra"]));
            line(&mut out, "  module", s(&x["module"]));
            line(&mut out, "  dimension", &x["dimension"]);
            line(&mut out, "  unchanged", yes(&x["unchanged"]));
            components(&mut out, &x["components"]);
        }
        "glue" => {
            header(&mut out, r);
            verdict(&mut out, &r["verdict"]);
            let l = &r["linkCriterion"];
            line(&mut out, "unglued", format!("mf {} rank {}", yes(&l["ungluedMultiplicityFree"]), l["ungluedRank"]));
            line(&mut out, "roots independent", yes(&l["rootsIndependent"]));
            line(&mut out, "predicted", format!("mf {} rank {}", yes(&l["predictedMultiplicityFree"]), l["predictedRank"]));
            line(&mut out, "routes agree", yes(&r["routesAgree"]));
        }
        "tables verify" => verify(&mut out, r),
        "tables list" => list(&mut out, r),
        _ => out.push_str(&crate::render_json(r)),
    }
    if let Some(ms) = r["elapsedMs"].as_f64().filter(|_| s(&r["command"]) != "tables verify") {
        line(&mut out, "elapsed", format!("{ms:.3} ms"));
    }
    out
}
