use std::fs;
use std::io::{ErrorKind, Write};
use std::path::Path;

use super::config::Format;
use super::search::SearchOutput;
use crate::error::Result;

pub const CSV_HEADER: [&str; 10] = [
    "degree",
    "seed",
    "root_re",
    "root_im",
    "nearest_critical_distance",
    "r",
    "p0_abs",
    "A_n",
    "applies",
    "verdict",
];

pub fn to_json(out: &SearchOutput) -> Result<String> {
    let mut s = serde_json::to_string_pretty(out)?;
    s.push('\n');
    Ok(s)
}

/// One row per `(polynomial, root)`.
pub fn to_csv(out: &SearchOutput) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for rec in &out.records {
        for ((z, d), v) in rec.roots.iter().zip(&rec.distances).zip(&rec.verdicts) {
            w.write_record([
                rec.degree.to_string(),
                rec.seed.to_string(),
                z.re.to_string(),
                z.im.to_string(),
                d.to_string(),
                rec.r.to_string(),
                rec.p0_abs.to_string(),
                rec.threshold_a.to_string(),
                rec.theorem_applies.to_string(),
                v.as_str().to_string(),
            ])?;
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| crate::Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render(out: &SearchOutput, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(out),
        Format::Csv => to_csv(out),
    }
}

/// Writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(out: &SearchOutput, format: Format, path: Option<&Path>) -> Result<()> {
    let text = render(out, format)?;
    match path {
        Some(p) => fs::write(p, text)?,
        None => write_stdout(text.as_bytes())?,
    }
    Ok(())
}

/// Writes to stdout; a reader that has gone away (`| head`) is not an error.
pub fn write_stdout(bytes: &[u8]) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(bytes).and_then(|()| out.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}
