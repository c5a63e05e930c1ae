//! Row types and their JSON/CSV encodings.

use std::io::Write;

use indexmap::IndexMap;
use quenta_core::oracle::{CheckRow, Summary, VerificationReport};
use quenta_core::quenta::{self, Classification, DistanceKind, Family, InputValue, QuentaParams};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Oracle outcome attached to a constructed row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub pass: bool,
    pub rows: Vec<CheckRow>,
}

/// One emitted code. Field order is the JSON key order and the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRow {
    pub family: Family,
    pub case: String,
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub d_kind: DistanceKind,
    pub c: u64,
    pub maximal_entanglement: bool,
    pub singleton_bound: u64,
    pub defect: i64,
    pub classification: Classification,
    pub inputs: IndexMap<String, InputValue>,
    pub warnings: Vec<String>,
    pub verification: Option<Verification>,
}

pub const CSV_HEADER: [&str; 15] = [
    "family",
    "case",
    "q",
    "n",
    "k",
    "d",
    "d_kind",
    "c",
    "maximal_entanglement",
    "singleton_bound",
    "defect",
    "classification",
    "inputs",
    "warnings",
    "verification",
];

impl OutputRow {
    pub fn from_params(p: &QuentaParams) -> Result<Self, CliError> {
        let s = quenta::singleton(p).map_err(|e| CliError::Precondition(e.to_string()))?;
        Ok(OutputRow {
            family: p.family,
            case: p.case.clone(),
            q: p.q,
            n: p.n,
            k: p.k,
            d: p.d.value,
            d_kind: p.d.kind,
            c: p.c,
            maximal_entanglement: p.maximal_entanglement(),
            singleton_bound: s.bound,
            defect: s.defect,
            classification: s.classification,
            inputs: p.inputs.clone(),
            warnings: p.warnings.clone(),
            verification: None,
        })
    }

    pub fn with_report(mut self, r: &VerificationReport) -> Self {
        self.verification = Some(Verification { pass: r.pass, rows: r.rows.clone() });
        self
    }

    fn csv_record(&self) -> Vec<String> {
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={}", input_text(v))).collect();
        let verification = match &self.verification {
            None => "",
            Some(v) if v.pass => "pass",
            Some(_) => "fail",
        };
        vec![
            self.family.to_string(),
            self.case.clone(),
            self.q.to_string(),
            self.n.to_string(),
            self.k.to_string(),
            self.d.to_string(),
            self.d_kind.as_str().to_string(),
            self.c.to_string(),
            self.maximal_entanglement.to_string(),
            self.singleton_bound.to_string(),
            self.defect.to_string(),
            self.classification.as_str().to_string(),
            inputs.join(" "),
            self.warnings.join(";"),
            verification.to_string(),
        ]
    }
}

fn join_set(z: &[usize]) -> String {
    z.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";")
}

fn input_text(v: &InputValue) -> String {
    match v {
        InputValue::Int(i) => i.to_string(),
        InputValue::Set(z) => join_set(z),
        InputValue::Text(t) => t.clone(),
    }
}

fn json_line<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// One compact JSON object per line.
pub fn write_rows_json(out: &mut dyn Write, rows: &[OutputRow]) -> Result<(), CliError> {
    for r in rows {
        serde_json::to_writer(&mut *out, r).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(out)?;
    }
    Ok(())
}

/// Reads back what [`write_rows_json`] wrote.
pub fn read_rows_json(text: &str) -> Result<Vec<OutputRow>, serde_json::Error> {
    text.lines().filter(|l| !l.trim().is_empty()).map(serde_json::from_str).collect()
}

pub fn write_rows_csv(out: &mut dyn Write, rows: &[OutputRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record(r.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_cosets_text(out: &mut dyn Write, cosets: &[Vec<usize>]) -> Result<(), CliError> {
    for c in cosets {
        let parts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
        writeln!(out, "{{{}}}", parts.join(","))?;
    }
    Ok(())
}

pub fn write_cosets_json(out: &mut dyn Write, cosets: &[Vec<usize>]) -> Result<(), CliError> {
    json_line(out, cosets)
}

pub fn write_cosets_csv(out: &mut dyn Write, cosets: &[Vec<usize>]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["representative", "size", "elements"])?;
    for c in cosets {
        w.write_record([c[0].to_string(), c.len().to_string(), join_set(c)])?;
    }
    w.flush()?;
    Ok(())
}

/// One verified sweep: what was asked for and what came back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub family: Family,
    pub range: String,
    pub summary: Summary,
    pub reports: Vec<VerificationReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub sweeps: Vec<SweepOutput>,
    pub total: Summary,
}

fn check_text(r: &CheckRow) -> String {
    let opt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
    match r.kind {
        quenta_core::oracle::CheckKind::SkippedCap => format!("{}=skipped", r.name),
        quenta_core::oracle::CheckKind::LowerBoundOk => {
            format!("{}={}>={}", r.name, opt(r.measured), opt(r.predicted))
        }
        quenta_core::oracle::CheckKind::Exact if r.pass => format!("{}={}", r.name, opt(r.measured)),
        quenta_core::oracle::CheckKind::Exact => {
            format!("{}={}!={}", r.name, opt(r.measured), opt(r.predicted))
        }
    }
}

pub fn write_verify_text(out: &mut dyn Write, v: &VerifyOutput) -> Result<(), CliError> {
    for s in &v.sweeps {
        for r in &s.reports {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let params = r.params.as_deref().unwrap_or("-");
            let checks: Vec<String> = r.rows.iter().map(check_text).collect();
            writeln!(out, "{status} {} {} {params} {}", r.family, r.instance, checks.join(" "))?;
            for row in r.rows.iter().filter(|row| !row.pass) {
                writeln!(out, "  {}: {}", row.name, row.note.as_deref().unwrap_or("mismatch"))?;
            }
        }
        writeln!(out, "{} {}: {}", s.family, s.range, s.summary)?;
    }
    if v.sweeps.len() > 1 {
        writeln!(out, "total: {}", v.total)?;
    }
    Ok(())
}

pub fn write_verify_json(out: &mut dyn Write, v: &VerifyOutput) -> Result<(), CliError> {
    json_line(out, v)
}

pub fn write_verify_csv(out: &mut dyn Write, v: &VerifyOutput) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "instance", "params", "check", "kind", "predicted", "measured", "pass", "note"])?;
    let opt = |v: Option<i64>| v.map_or(String::new(), |v| v.to_string());
    for s in &v.sweeps {
        for r in &s.reports {
            for row in &r.rows {
                w.write_record([
                    r.family.to_string(),
                    r.instance.clone(),
                    r.params.clone().unwrap_or_default(),
                    row.name.clone(),
                    row.kind.as_str().to_string(),
                    opt(row.predicted),
                    opt(row.measured),
                    row.pass.to_string(),
                    row.note.clone().unwrap_or_default(),
                ])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
