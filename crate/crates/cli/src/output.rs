//! CSV emission and reading.

use std::io::{Read, Write};

use crate::sweep::SweepResult;

/// Column names, in order.
pub const CSV_HEADER: [&str; 9] =
    ["variable", "value", "architecture", "method", "secrecy_bps_hz", "ergodic_L", "ergodic_E", "std_error", "status"];

/// Shortest round-trip text for `v`; exponent form outside `[1e-5, 1e16)`.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Writes the rows with a header line.
pub fn write_csv<W: Write>(result: &SweepResult, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in &result.rows {
        let (s, l, e, se) = match &row.outcome {
            Ok(r) => (r.secrecy.bits_per_sec_hz, r.legit.bits_per_sec_hz, r.eve.bits_per_sec_hz, r.secrecy.std_error),
            Err(_) => (f64::NAN, f64::NAN, f64::NAN, f64::NAN),
        };
        w.write_record([
            row.variable.name().to_string(),
            format_float(row.value),
            row.architecture.label().to_string(),
            row.method.label().to_string(),
            format_float(s),
            format_float(l),
            format_float(e),
            format_float(se),
            row.status().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the rows to a file.
pub fn write_csv_file(result: &SweepResult, path: &std::path::Path) -> std::io::Result<()> {
    let file = std::fs::File::create(path)?;
    write_csv(result, std::io::BufWriter::new(file)).map_err(std::io::Error::other)
}

/// One parsed CSV line.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRecord {
    /// Swept quantity.
    pub variable: String,
    /// Grid value.
    pub value: f64,
    /// Architecture label.
    pub architecture: String,
    /// Method label.
    pub method: String,
    /// Secrecy capacity.
    pub secrecy_bps_hz: f64,
    /// Legitimate ergodic capacity.
    pub ergodic_l: f64,
    /// Eavesdropper ergodic capacity.
    pub ergodic_e: f64,
    /// Secrecy standard error.
    pub std_error: f64,
    /// `ok` or a failure message.
    pub status: String,
}

/// Reads a file written by [`write_csv`].
pub fn read_csv<R: Read>(input: R) -> Result<Vec<CsvRecord>, String> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(|e| e.to_string())?;
    if header.iter().ne(CSV_HEADER) {
        return Err(format!("unexpected header {header:?}"));
    }
    let num = |s: &str| s.parse::<f64>().map_err(|e| format!("bad number `{s}`: {e}"));
    r.records()
        .map(|rec| {
            let rec = rec.map_err(|e| e.to_string())?;
            Ok(CsvRecord {
                variable: rec[0].to_string(),
                value: num(&rec[1])?,
                architecture: rec[2].to_string(),
                method: rec[3].to_string(),
                secrecy_bps_hz: num(&rec[4])?,
                ergodic_l: num(&rec[5])?,
                ergodic_e: num(&rec[6])?,
                std_error: num(&rec[7])?,
                status: rec[8].to_string(),
            })
        })
        .collect()
}
