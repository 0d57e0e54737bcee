//! Serialized forms of a [`Spectrum`]: JSON, CSV and a plain-text table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::closed_form::{Spectrum, SpectrumSource};
use crate::error::{Error, Result};
use crate::multiplicity::pair_multiplicities;

/// Significant digits kept in machine-readable output.
pub const MACHINE_SIG_DIGITS: usize = 12;
/// Decimals shown in table output.
pub const TABLE_DECIMALS: usize = 6;

/// Rounds to `digits` significant decimal digits. Idempotent.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x).parse().expect("formatted float parses")
}

#[derive(Debug, Serialize, Deserialize)]
struct SpectrumDoc {
    k: Option<usize>,
    n: usize,
    source: SpectrumSource,
    values: Vec<f64>,
    pairs: Vec<[usize; 2]>,
}

pub fn to_json(spectrum: &Spectrum) -> Result<String> {
    let doc = SpectrumDoc {
        k: spectrum.k,
        n: spectrum.n,
        source: spectrum.source,
        values: spectrum.values.iter().map(|&x| round_sig(x, MACHINE_SIG_DIGITS)).collect(),
        pairs: spectrum.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc)?;
    out.push('\n');
    Ok(out)
}

pub fn from_json(text: &str) -> Result<Spectrum> {
    let doc: SpectrumDoc = serde_json::from_str(text)?;
    if doc.values.len() != doc.n {
        return Err(Error::LengthMismatch { left: doc.values.len(), right: doc.n });
    }
    Ok(Spectrum { k: doc.k, n: doc.n, values: doc.values, source: doc.source })
}

/// `l,value,class_id`, one row per index.
pub fn to_csv(spectrum: &Spectrum) -> String {
    let ids = pair_multiplicities(spectrum).class_ids();
    let mut out = String::from("l,value,class_id\n");
    for (l, &x) in spectrum.values.iter().enumerate() {
        writeln!(out, "{l},{},{}", round_sig(x, MACHINE_SIG_DIGITS), ids[l]).unwrap();
    }
    out
}

/// Columns `l`, `x_l`, paired index `n - l`, class id.
pub fn to_table(spectrum: &Spectrum) -> String {
    let ids = pair_multiplicities(spectrum).class_ids();
    let n = spectrum.n;
    let mut out = format!("{:>6} {:>14} {:>6} {:>6}\n", "l", "x_l", "n-l", "class");
    for (l, &x) in spectrum.values.iter().enumerate() {
        writeln!(out, "{l:>6} {x:>14.prec$} {:>6} {:>6}", (n - l) % n, ids[l], prec = TABLE_DECIMALS).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::spectrum_closed_form;

    #[test]
    fn json_schema_fields() {
        let json = to_json(&spectrum_closed_form(3).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["k"], 3);
        assert_eq!(v["n"], 8);
        assert_eq!(v["source"], "closed-form");
        assert_eq!(v["values"].as_array().unwrap().len(), 8);
        assert_eq!(v["values"][1].as_f64().unwrap(), 0.414213562373);
        assert_eq!(v["pairs"], serde_json::json!([[1, 7], [2, 6], [3, 5]]));
    }

    #[test]
    fn json_reserialization_is_byte_identical() {
        for k in [2, 3, 4, 5, 17, 64] {
            let first = to_json(&spectrum_closed_form(k).unwrap()).unwrap();
            let second = to_json(&from_json(&first).unwrap()).unwrap();
            assert_eq!(first, second);
        }
    }

    #[test]
    fn from_json_rejects_wrong_length() {
        let bad = r#"{"k":null,"n":3,"source":"oracle","values":[1.0],"pairs":[]}"#;
        assert!(matches!(from_json(bad), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn csv_rows() {
        let csv = to_csv(&spectrum_closed_form(3).unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "l,value,class_id");
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[1], "0,3,0");
        assert_eq!(lines[5], "4,-1,4");
    }

    #[test]
    fn table_rows() {
        let table = to_table(&spectrum_closed_form(5).unwrap());
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 15);
        let row0: Vec<&str> = lines[1].split_whitespace().collect();
        assert_eq!(row0, vec!["0", "5.000000", "0", "0"]);
        let row5: Vec<&str> = lines[6].split_whitespace().collect();
        assert_eq!(row5, vec!["5", "-4.048917", "9", "5"]);
    }

    #[test]
    fn rounding_is_idempotent() {
        for x in [std::f64::consts::PI, -1e-17, 123456.7890123456, 0.0, -0.0] {
            let once = round_sig(x, 12);
            assert_eq!(once.to_bits(), round_sig(once, 12).to_bits());
        }
    }
}
