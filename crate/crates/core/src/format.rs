//! Matrix text format: a JSON document `{"dim": n, "re": [[..]], "im": [[..]]}`.
//!
//! Floats are written in shortest round-trip form, so an emitted matrix
//! parses back to the same bits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default)]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixDoc {
    pub fn from_matrix(h: &HermitianMatrix) -> Self {
        let (re, im) = h.to_parts();
        Self {
            dim: h.dim(),
            re,
            im: Some(im),
        }
    }

    pub fn to_matrix(&self) -> Result<HermitianMatrix> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Format("field `dim` must be positive".into()));
        }
        check_rows("re", &self.re, n)?;
        let im = match &self.im {
            Some(im) => {
                check_rows("im", im, n)?;
                im.clone()
            }
            None => vec![vec![0.0; n]; n],
        };
        HermitianMatrix::from_parts(&self.re, &im)
    }
}

fn check_rows(field: &str, rows: &[Vec<f64>], n: usize) -> Result<()> {
    if rows.len() != n {
        return Err(Error::Format(format!(
            "field `{field}` has {} rows, expected {n}",
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Format(format!(
                "field `{field}` row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
    }
    Ok(())
}

fn json_error(e: serde_json::Error) -> Error {
    let text = e.to_string();
    let message = match text.rfind(" at line ") {
        Some(k) => &text[..k],
        None => &text,
    };
    Error::Format(format!("line {}, column {}: {message}", e.line(), e.column()))
}

/// Parses one matrix document.
impl From<HermitianMatrix> for MatrixDoc {
    fn from(h: HermitianMatrix) -> Self {
        Self::from_matrix(&h)
    }
}

impl TryFrom<MatrixDoc> for HermitianMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self> {
        doc.to_matrix()
    }
}

pub fn parse_matrix(text: &str) -> Result<HermitianMatrix> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(json_error)?;
    doc.to_matrix()
}

/// Parses either a single matrix document or a JSON array of them.
pub fn parse_matrices(text: &str) -> Result<Vec<HermitianMatrix>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    let docs: Vec<MatrixDoc> = if value.is_array() {
        serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))?
    } else {
        vec![serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))?]
    };
    docs.iter().map(MatrixDoc::to_matrix).collect()
}

pub fn to_json(h: &HermitianMatrix) -> String {
    serde_json::to_string(&MatrixDoc::from_matrix(h)).expect("finite floats serialize")
}

pub fn to_json_pretty(h: &HermitianMatrix) -> String {
    serde_json::to_string_pretty(&MatrixDoc::from_matrix(h)).expect("finite floats serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{random_hermitian, rng_from_seed};

    #[test]
    fn round_trip_is_bit_exact() {
        let mut rng = rng_from_seed(3);
        for n in 1..6 {
            let h = random_hermitian(&mut rng, n).scale(1.0 / 3.0);
            let text = to_json(&h);
            let back = parse_matrix(&text).unwrap();
            assert_eq!(back, h);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn missing_imaginary_part_means_real() {
        let h = parse_matrix(r#"{"dim": 2, "re": [[1, 2], [2, -1]]}"#).unwrap();
        assert_eq!(
            h,
            HermitianMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, -1.0]]).unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_matrix("{\n  \"dim\": 2,\n  \"re\": [[1, 0], [0, 1]\n}").unwrap_err();
        assert!(err.to_string().contains("line 4"), "{err}");
    }

    #[test]
    fn shape_and_symmetry_are_checked() {
        assert!(matches!(
            parse_matrix(r#"{"dim": 2, "re": [[1, 0]]}"#),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_matrix(r#"{"dim": 2, "re": [[1, 1], [0, 1]]}"#),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            parse_matrix(r#"{"dim": 1, "re": [[1]], "extra": 3}"#),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn arrays_of_documents() {
        let text = format!(
            "[{}, {}]",
            to_json(&HermitianMatrix::identity(2)),
            to_json(&HermitianMatrix::zeros(2))
        );
        let ms = parse_matrices(&text).unwrap();
        assert_eq!(ms, vec![HermitianMatrix::identity(2), HermitianMatrix::zeros(2)]);
    }
}
