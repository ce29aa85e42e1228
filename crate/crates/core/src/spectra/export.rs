//! CSV and JSON output of spectra.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::{measure_estimate, Params, SpectralData};

/// `index,eigenvalue` rows, 1-based, ascending. Values use the shortest
/// representation that parses back to the same `f64`.
pub fn spectrum_csv(sd: &SpectralData) -> String {
    let mut out = String::from("index,eigenvalue\n");
    for (i, x) in sd.eigenvalues.iter().enumerate() {
        writeln!(out, "{},{:?}", i + 1, x).unwrap();
    }
    out
}

pub fn parse_spectrum_csv(text: &str) -> Result<Vec<f64>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "index,eigenvalue")) => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                msg: "expected header `index,eigenvalue`".into(),
            })
        }
    }
    let mut values = Vec::new();
    for (no, line) in lines {
        let err = |msg: &str| Error::Parse {
            line: no + 1,
            msg: msg.into(),
        };
        let (idx, val) = line.split_once(',').ok_or_else(|| err("missing comma"))?;
        let idx: usize = idx.parse().map_err(|_| err("bad index"))?;
        if idx != values.len() + 1 {
            return Err(err("indices must run 1, 2, 3, ..."));
        }
        values.push(val.parse().map_err(|_| err("bad eigenvalue"))?);
    }
    Ok(values)
}

/// One experiment run, as written by `--format json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub params: Params,
    pub level: Option<u32>,
    pub size: usize,
    pub min: f64,
    pub max: f64,
    pub gap_count: usize,
    pub cover_length: f64,
    pub epsilon: f64,
    pub ids_sup_diff: Option<f64>,
}

impl ExperimentSummary {
    pub fn new(
        sd: &SpectralData,
        params: Params,
        level: Option<u32>,
        epsilon: f64,
    ) -> Result<Self> {
        let m = measure_estimate(sd, epsilon)?;
        Ok(ExperimentSummary {
            params,
            level,
            size: sd.size(),
            min: sd.min(),
            max: sd.max(),
            gap_count: m.gap_count(),
            cover_length: m.cover_length,
            epsilon,
            ids_sup_diff: None,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::schreier_spectrum;

    const ONES: Params = Params::new(1.0, 1.0, 1.0, 1.0);

    #[test]
    fn csv_level_one() {
        let sd = schreier_spectrum(1, &ONES, 1e-14).unwrap();
        let csv = spectrum_csv(&sd);
        let rows = parse_spectrum_csv(&csv).unwrap();
        assert_eq!(rows, sd.eigenvalues);
        assert!(csv.starts_with("index,eigenvalue\n1,"));
        assert!((rows[0] - 2.0).abs() < 1e-12 && (rows[1] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(parse_spectrum_csv("").is_err());
        assert!(parse_spectrum_csv("index,eigenvalue\n2,1.0\n").is_err());
        assert!(parse_spectrum_csv("index,eigenvalue\n1;1.0\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = Params::new(0.3, 1.0 / 3.0, 2.0, -0.1);
        let sd = schreier_spectrum(5, &p, 1e-13).unwrap();
        let mut s = ExperimentSummary::new(&sd, p, Some(5), 1.0 / 32.0).unwrap();
        s.ids_sup_diff = Some(0.1);
        let text = s.to_json();
        let back = ExperimentSummary::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), text);
    }
}
