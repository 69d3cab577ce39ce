//! Output records and deterministic formatting.

use std::collections::BTreeMap;
use std::fmt::Write as _;

/// One computed value, tagged with the producing method and the state.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub method: String,
    /// Exponent, or the string "log".
    pub lambda: String,
    pub n: u32,
    pub ell: u32,
    pub value: f64,
    /// Auxiliary quantities (rho0, r0, convergence); BTreeMap keeps the
    /// serialization order stable.
    pub aux: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Jsonl,
}

/// `digits` significant digits, fixed notation where reasonable,
/// scientific otherwise; the mapping is deterministic so identical flags
/// give byte-identical output.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if exp >= -4 && exp < digits as i32 {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{:.*e}", digits - 1, x)
    }
}

pub fn render_records(records: &[OutputRecord], format: OutputFormat, digits: usize) -> String {
    match format {
        OutputFormat::Text => render_text(records, digits),
        OutputFormat::Csv => render_csv(records, digits),
        OutputFormat::Jsonl => render_jsonl(records),
    }
}

fn aux_keys(records: &[OutputRecord]) -> Vec<String> {
    let mut keys: Vec<String> = records.iter().flat_map(|r| r.aux.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    keys
}

fn render_text(records: &[OutputRecord], digits: usize) -> String {
    let keys = aux_keys(records);
    let mut rows = vec![{
        let mut header = vec![
            "method".to_string(),
            "lambda".to_string(),
            "n".to_string(),
            "l".to_string(),
            "value".to_string(),
        ];
        header.extend(keys.iter().cloned());
        header
    }];
    for r in records {
        let mut row = vec![
            r.method.clone(),
            r.lambda.clone(),
            r.n.to_string(),
            r.ell.to_string(),
            fmt_sig(r.value, digits),
        ];
        for k in &keys {
            row.push(r.aux.get(k).map_or(String::new(), |v| fmt_sig(*v, digits)));
        }
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(line, "{cell:<w$}  ");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(records: &[OutputRecord], digits: usize) -> String {
    let keys = aux_keys(records);
    let mut out = String::from("method,lambda,n,l,value");
    for k in &keys {
        let _ = write!(out, ",{k}");
    }
    out.push('\n');
    for r in records {
        let _ = write!(
            out,
            "{},{},{},{},{}",
            r.method,
            r.lambda,
            r.n,
            r.ell,
            fmt_sig(r.value, digits)
        );
        for k in &keys {
            out.push(',');
            if let Some(v) = r.aux.get(k) {
                out.push_str(&fmt_sig(*v, digits));
            }
        }
        out.push('\n');
    }
    out
}

fn render_jsonl(records: &[OutputRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let mut obj = serde_json::Map::new();
        obj.insert("method".into(), r.method.clone().into());
        let lambda_value: serde_json::Value = match r.lambda.parse::<f64>() {
            Ok(x) => serde_json::json!(x),
            Err(_) => r.lambda.clone().into(),
        };
        obj.insert("lambda".into(), lambda_value);
        obj.insert("n".into(), r.n.into());
        obj.insert("l".into(), r.ell.into());
        obj.insert("value".into(), serde_json::json!(r.value));
        for (k, v) in &r.aux {
            obj.insert(k.clone(), serde_json::json!(v));
        }
        out.push_str(&serde_json::Value::Object(obj).to_string());
        out.push('\n');
    }
    out
}
