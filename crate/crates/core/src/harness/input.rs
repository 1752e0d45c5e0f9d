//! Polynomial input files.
//!
//! Either `{"roots": [[re, im], ...]}` or
//! `{"coeffs": [[re, im], ...], "monic": true}` with ascending coefficients.

use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::poly::{CoeffForm, RootForm};

#[derive(Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum InputFile {
    Roots {
        roots: Vec<[f64; 2]>,
    },
    Coeffs {
        coeffs: Vec<[f64; 2]>,
        #[serde(default)]
        monic: bool,
    },
}

fn to_complex(pairs: Vec<[f64; 2]>) -> Vec<Complex64> {
    pairs
        .into_iter()
        .map(|[re, im]| Complex64::new(re, im))
        .collect()
}

pub fn parse_polynomial(text: &str) -> Result<RootForm> {
    let parsed: InputFile = serde_json::from_str(text).map_err(|e| {
        Error::InvalidInput(format!(
            "expected {{\"roots\": ...}} or {{\"coeffs\": ...}}: {e}"
        ))
    })?;
    match parsed {
        InputFile::Roots { roots } => RootForm::new(to_complex(roots)),
        InputFile::Coeffs { coeffs, monic } => {
            let coeffs = to_complex(coeffs);
            let form = if monic {
                CoeffForm::new(coeffs)?
            } else {
                CoeffForm::normalized(coeffs)?
            };
            if form.degree() == 0 {
                return Err(Error::ConstantPolynomial);
            }
            RootForm::new(form.find_roots()?)
        }
    }
}

pub fn read_polynomial(path: &Path) -> Result<RootForm> {
    let text = std::fs::read_to_string(path)?;
    parse_polynomial(&text)
}
