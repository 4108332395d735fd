//! Renderers for the three output formats.
//!
//! JSON values serialize compactly with insertion-order keys, so emitted
//! documents re-serialize to the same bytes after a parse. Big integers stay
//! decimal strings throughout. Tables carry the same numbers as the JSON.

use plethystab::sweep::PropertyResult;
use plethystab::{Partition, SchurExpansion, StabilityReport, Tableau, TermStats, WeightMatrix};
use serde_json::{json, Value};

/// One compact JSON document with a trailing newline.
pub fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn join_numbers<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// A tableau on one line: entries space-separated, rows joined by " / ".
fn tableau_line(t: &Tableau) -> String {
    if t.rows().is_empty() {
        return "()".to_string();
    }
    t.rows()
        .iter()
        .map(|row| join_numbers(row.iter().copied(), " "))
        .collect::<Vec<_>>()
        .join(" / ")
}

/// The tableau list, then optionally a blank line and the weight matrix.
pub fn tableaux_table(list: &[Tableau], matrix: Option<&WeightMatrix>) -> String {
    let mut out = String::new();
    for t in list {
        out.push_str(&tableau_line(t));
        out.push('\n');
    }
    if let Some(wm) = matrix {
        out.push('\n');
        out.push_str("weights:\n");
        for row in wm.rows() {
            out.push_str(&join_numbers(row.entries().iter().copied(), " "));
            out.push('\n');
        }
    }
    out
}

/// Keys: shape, alphabet, tableaux, and matrix when requested.
pub fn tableaux_json(
    shape: &Partition,
    alphabet: usize,
    list: &[Tableau],
    matrix: Option<&WeightMatrix>,
) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("shape".into(), json!(shape.parts()));
    map.insert("alphabet".into(), json!(alphabet));
    map.insert(
        "tableaux".into(),
        Value::Array(list.iter().map(|t| t.to_json()).collect()),
    );
    if let Some(wm) = matrix {
        map.insert("matrix".into(), wm.to_json());
    }
    Value::Object(map)
}

/// Keys: lambda, mu, nu, N, count.
pub fn b_json(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize, count: &str) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("lambda".into(), json!(lambda.parts()));
    map.insert("mu".into(), json!(mu.parts()));
    map.insert("nu".into(), json!(nu.parts()));
    map.insert("N".into(), json!(n));
    map.insert("count".into(), Value::String(count.to_string()));
    Value::Object(map)
}

/// Keys: lambda, mu, nu, a, terms_evaluated, terms_pruned.
pub fn a_json(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &str,
    stats: TermStats,
) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("lambda".into(), json!(lambda.parts()));
    map.insert("mu".into(), json!(mu.parts()));
    map.insert("nu".into(), json!(nu.parts()));
    map.insert("a".into(), Value::String(a.to_string()));
    map.insert("terms_evaluated".into(), json!(stats.evaluated));
    map.insert("terms_pruned".into(), json!(stats.pruned));
    Value::Object(map)
}

/// The value on its own line, then the term statistics.
pub fn a_table(a: &str, stats: TermStats) -> String {
    format!(
        "{a}\nterms evaluated: {}\nterms pruned: {}\n",
        stats.evaluated, stats.pruned
    )
}

/// One `(nu) coefficient` line per term, largest shape first.
pub fn expand_table(expansion: &SchurExpansion) -> String {
    let mut out = String::new();
    for (nu, c) in expansion.iter() {
        out.push_str(&format!("{} {c}\n", nu.bracketed()));
    }
    out
}

/// Header `nu,coefficient`, then one row per term.
pub fn expand_csv(expansion: &SchurExpansion) -> String {
    let mut out = String::from("nu,coefficient\n");
    for (nu, c) in expansion.iter() {
        out.push_str(&format!("\"{}\",{c}\n", nu.bracketed()));
    }
    out
}

/// Field-per-line summary followed by the window values.
pub fn stability_table(report: &StabilityReport) -> String {
    let spec = &report.spec;
    let pi = match spec.pi() {
        Some(p) => p.bracketed(),
        None => "()".to_string(),
    };
    let n_max = report.values.len().saturating_sub(1);
    let values = join_numbers(report.values.iter(), " ");
    let empirical = match report.empirical_index {
        Some(k) => k.to_string(),
        None => "not stabilized in window".to_string(),
    };
    let literature = match &report.literature_bound {
        Some(r) => r.to_string(),
        None => "n/a".to_string(),
    };
    let limit = match &report.limit {
        Some(v) => v.to_string(),
        None => "none".to_string(),
    };
    format!(
        "family: {}\nlambda: {}\nmu: {}\nnu: {}\npi: {pi}\nwhich: {}\n\
         values (n = 0..={n_max}): {values}\nempirical index: {empirical}\n\
         our bound: {}\nliterature bound: {literature}\nlimit: {limit}\n",
        spec.family(),
        spec.lambda().bracketed(),
        spec.mu().bracketed(),
        spec.nu().bracketed(),
        report.which,
        report.our_bound,
    )
}

/// Header `n,value`, then one row per window index.
pub fn stability_csv(report: &StabilityReport) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in report.values.iter().enumerate() {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

/// One pass/fail line per property.
pub fn sweep_table(results: &[PropertyResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&r.line());
        out.push('\n');
    }
    out
}

/// Array of objects with keys: name, passed, instances, failures.
pub fn sweep_json(results: &[PropertyResult]) -> Value {
    Value::Array(
        results
            .iter()
            .map(|r| {
                let mut map = serde_json::Map::new();
                map.insert("name".into(), Value::String(r.name.clone()));
                map.insert("passed".into(), Value::Bool(r.passed()));
                map.insert("instances".into(), json!(r.instances));
                map.insert(
                    "failures".into(),
                    Value::Array(
                        r.failures
                            .iter()
                            .map(|f| Value::String(f.clone()))
                            .collect(),
                    ),
                );
                Value::Object(map)
            })
            .collect(),
    )
}
