//! Dataset CSV formats and JSON model persistence.
//!
//! Complex regression CSV: header `re_0,im_0,…,re_{ν-1},im_{ν-1},d_re,d_im`;
//! labeled CSV replaces the two target columns with a `label` column holding
//! one of `++`, `+-`, `-+`, `--`. Lines starting with `#` are comments.
//! Floats are written with 17 significant digits, which round-trips every
//! f64 exactly; model JSON goes through serde_json, which is also exact.

use crate::csvm::{CsvmModel, QuaternaryLabel};
use crate::csvr::{ComplexRegressionSample, CsvrModel, DrcModel};
use crate::error::{Error, Result};
use crate::kernels::ComplexVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// 17-significant-digit decimal form; `parse::<f64>()` recovers the exact
/// value.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_field(tok: &str, line: usize, col: usize) -> Result<f64> {
    tok.trim().parse::<f64>().map_err(|_| Error::Csv {
        line,
        col,
        msg: format!("expected a float, got {tok:?}"),
    })
}

fn split_rows(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, line)| {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                None
            } else {
                Some((idx + 1, trimmed.split(',').collect()))
            }
        })
        .collect()
}

fn regression_header(dim: usize) -> String {
    let mut cols = Vec::with_capacity(2 * dim + 2);
    for k in 0..dim {
        cols.push(format!("re_{k}"));
        cols.push(format!("im_{k}"));
    }
    cols.push("d_re".into());
    cols.push("d_im".into());
    cols.join(",")
}

fn input_cells(z: &ComplexVector) -> String {
    z.components()
        .iter()
        .flat_map(|c| [format_f64(c.re), format_f64(c.im)])
        .collect::<Vec<_>>()
        .join(",")
}

/// Render a complex regression dataset; `comments` go first as `#` lines.
pub fn regression_csv_string(samples: &[ComplexRegressionSample], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    if samples.is_empty() {
        return out;
    }
    out.push_str(&regression_header(samples[0].input.dim()));
    out.push('\n');
    for s in samples {
        out.push_str(&input_cells(&s.input));
        out.push(',');
        out.push_str(&format_f64(s.target.re));
        out.push(',');
        out.push_str(&format_f64(s.target.im));
        out.push('\n');
    }
    out
}

pub fn parse_regression_csv(text: &str) -> Result<Vec<ComplexRegressionSample>> {
    let rows = split_rows(text);
    let Some(((header_line, header), data)) = rows.split_first() else {
        return Err(Error::Csv {
            line: 0,
            col: 0,
            msg: "missing header row".into(),
        });
    };
    let ncols = header.len();
    if ncols < 4 || ncols % 2 != 0 || header[ncols - 2].trim() != "d_re" {
        return Err(Error::Csv {
            line: *header_line,
            col: ncols,
            msg: "expected header re_0,im_0,...,d_re,d_im".into(),
        });
    }
    let dim = (ncols - 2) / 2;
    let mut samples = Vec::with_capacity(data.len());
    for (line, cells) in data {
        if cells.len() != ncols {
            return Err(Error::Csv {
                line: *line,
                col: cells.len(),
                msg: format!("expected {ncols} columns, got {}", cells.len()),
            });
        }
        let mut z = Vec::with_capacity(dim);
        for k in 0..dim {
            let re = parse_field(cells[2 * k], *line, 2 * k + 1)?;
            let im = parse_field(cells[2 * k + 1], *line, 2 * k + 2)?;
            z.push(Complex64::new(re, im));
        }
        let d_re = parse_field(cells[ncols - 2], *line, ncols - 1)?;
        let d_im = parse_field(cells[ncols - 1], *line, ncols)?;
        samples.push(ComplexRegressionSample::new(
            ComplexVector::new(z).map_err(|e| Error::Csv {
                line: *line,
                col: 1,
                msg: e.to_string(),
            })?,
            Complex64::new(d_re, d_im),
        ));
    }
    Ok(samples)
}

/// Render a labeled quaternary dataset.
pub fn labeled_csv_string(data: &[(ComplexVector, QuaternaryLabel)], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    if data.is_empty() {
        return out;
    }
    let dim = data[0].0.dim();
    for k in 0..dim {
        out.push_str(&format!("re_{k},im_{k},"));
    }
    out.push_str("label\n");
    for (z, l) in data {
        out.push_str(&input_cells(z));
        out.push(',');
        out.push_str(l.as_str());
        out.push('\n');
    }
    out
}

pub fn parse_labeled_csv(text: &str) -> Result<Vec<(ComplexVector, QuaternaryLabel)>> {
    let rows = split_rows(text);
    let Some(((header_line, header), data)) = rows.split_first() else {
        return Err(Error::Csv {
            line: 0,
            col: 0,
            msg: "missing header row".into(),
        });
    };
    let ncols = header.len();
    if ncols < 3 || ncols % 2 != 1 || header[ncols - 1].trim() != "label" {
        return Err(Error::Csv {
            line: *header_line,
            col: ncols,
            msg: "expected header re_0,im_0,...,label".into(),
        });
    }
    let dim = (ncols - 1) / 2;
    let mut out = Vec::with_capacity(data.len());
    for (line, cells) in data {
        if cells.len() != ncols {
            return Err(Error::Csv {
                line: *line,
                col: cells.len(),
                msg: format!("expected {ncols} columns, got {}", cells.len()),
            });
        }
        let mut z = Vec::with_capacity(dim);
        for k in 0..dim {
            let re = parse_field(cells[2 * k], *line, 2 * k + 1)?;
            let im = parse_field(cells[2 * k + 1], *line, 2 * k + 2)?;
            z.push(Complex64::new(re, im));
        }
        let tok = cells[ncols - 1].trim();
        let label = QuaternaryLabel::parse(tok).ok_or_else(|| Error::Csv {
            line: *line,
            col: ncols,
            msg: format!("unknown label {tok:?} (expected ++, +-, -+ or --)"),
        })?;
        out.push((
            ComplexVector::new(z).map_err(|e| Error::Csv {
                line: *line,
                col: 1,
                msg: e.to_string(),
            })?,
            label,
        ));
    }
    Ok(out)
}

pub fn write_regression_csv(
    path: &Path,
    samples: &[ComplexRegressionSample],
    comments: &[String],
) -> Result<()> {
    std::fs::write(path, regression_csv_string(samples, comments))?;
    Ok(())
}

pub fn read_regression_csv(path: &Path) -> Result<Vec<ComplexRegressionSample>> {
    parse_regression_csv(&std::fs::read_to_string(path)?)
}

pub fn write_labeled_csv(
    path: &Path,
    data: &[(ComplexVector, QuaternaryLabel)],
    comments: &[String],
) -> Result<()> {
    std::fs::write(path, labeled_csv_string(data, comments))?;
    Ok(())
}

pub fn read_labeled_csv(path: &Path) -> Result<Vec<(ComplexVector, QuaternaryLabel)>> {
    parse_labeled_csv(&std::fs::read_to_string(path)?)
}

pub const MODEL_SCHEMA: u32 = 1;

/// Any persistable fitted model. The complexified variant shares the DRC
/// shape (its factor 2 lives in the stored kernel spec).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelFile {
    Csvr(CsvrModel),
    Drc(DrcModel),
    Csvm(CsvmModel),
}

#[derive(Serialize, Deserialize)]
struct ModelEnvelope {
    schema: u32,
    #[serde(flatten)]
    model: ModelFile,
}

pub fn model_json_string(model: &ModelFile) -> Result<String> {
    Ok(serde_json::to_string_pretty(&ModelEnvelope {
        schema: MODEL_SCHEMA,
        model: model.clone(),
    })?)
}

pub fn parse_model_json(text: &str) -> Result<ModelFile> {
    let envelope: ModelEnvelope = serde_json::from_str(text)?;
    if envelope.schema != MODEL_SCHEMA {
        return Err(Error::ModelMismatch {
            details: format!(
                "unsupported model schema {} (expected {MODEL_SCHEMA})",
                envelope.schema
            ),
        });
    }
    let kernel = match &envelope.model {
        ModelFile::Csvr(m) => &m.kernel,
        ModelFile::Drc(m) => &m.kernel,
        ModelFile::Csvm(m) => &m.kernel,
    };
    kernel.validate()?;
    Ok(envelope.model)
}

pub fn save_model(path: &Path, model: &ModelFile) -> Result<()> {
    std::fs::write(path, model_json_string(model)?)?;
    Ok(())
}

pub fn load_model(path: &Path) -> Result<ModelFile> {
    parse_model_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::KernelSpec;
    use crate::qp::SvrParams;
    use crate::rng::SplitRng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn awkward_floats() -> Vec<f64> {
        vec![
            0.1,
            -0.0,
            1.0 / 3.0,
            f64::MIN_POSITIVE,
            1.797_693_134_862_315_7e308,
            -2.225_073_858_507_201_4e-308,
            9_007_199_254_740_993.0,
        ]
    }

    #[test]
    fn float_format_round_trips_exactly() {
        for x in awkward_floats() {
            let s = format_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{x} -> {s}");
        }
    }

    #[test]
    fn regression_csv_round_trip() {
        let samples = vec![
            ComplexRegressionSample::new(
                ComplexVector::new(vec![c(0.1, -0.2), c(1.0 / 3.0, 4.5)]).unwrap(),
                c(-1.25, 1e-17),
            ),
            ComplexRegressionSample::new(
                ComplexVector::new(vec![c(2.0, 0.0), c(0.0, -3.5)]).unwrap(),
                c(0.0, 0.0),
            ),
        ];
        let text = regression_csv_string(&samples, &["cfg=deadbeef".into()]);
        assert!(text.starts_with("# cfg=deadbeef\nre_0,im_0,re_1,im_1,d_re,d_im\n"));
        let back = parse_regression_csv(&text).unwrap();
        assert_eq!(back, samples);
    }

    #[test]
    fn labeled_csv_round_trip() {
        let data = vec![
            (ComplexVector::scalar(c(2.0, 2.1)).unwrap(), QuaternaryLabel::PP),
            (ComplexVector::scalar(c(-2.0, 1.9)).unwrap(), QuaternaryLabel::MP),
        ];
        let text = labeled_csv_string(&data, &[]);
        assert!(text.starts_with("re_0,im_0,label\n"));
        let back = parse_labeled_csv(&text).unwrap();
        assert_eq!(back, data);
    }

    #[test]
    fn csv_errors_carry_position() {
        let bad = "re_0,im_0,d_re,d_im\n1.0,2.0,oops,4.0\n";
        match parse_regression_csv(bad) {
            Err(Error::Csv { line, col, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected csv error, got {other:?}"),
        }
        let short = "re_0,im_0,d_re,d_im\n1.0,2.0,3.0\n";
        assert!(matches!(parse_regression_csv(short), Err(Error::Csv { line: 2, .. })));
        let bad_label = "re_0,im_0,label\n1.0,2.0,startled\n";
        assert!(matches!(parse_labeled_csv(bad_label), Err(Error::Csv { line: 2, col: 3, .. })));
    }

    #[test]
    fn model_json_round_trips_bitwise() {
        let mut rng = SplitRng::for_role(3, "io-model");
        let data: Vec<ComplexRegressionSample> = (0..6)
            .map(|_| {
                let z = c(rng.gaussian(), rng.gaussian());
                ComplexRegressionSample::new(
                    ComplexVector::scalar(z).unwrap(),
                    z * c(0.4, -0.7),
                )
            })
            .collect();
        let model = crate::csvr::fit_csvr(
            &data,
            &KernelSpec::complex_gaussian(0.7).unwrap(),
            &SvrParams::new(5.0, 0.05),
        )
        .unwrap();
        let file = ModelFile::Csvr(model.clone());
        let json = model_json_string(&file).unwrap();
        assert!(json.contains("\"kind\": \"csvr\""));
        let back = parse_model_json(&json).unwrap();
        assert_eq!(back, file);
        match back {
            ModelFile::Csvr(m) => {
                let z = ComplexVector::scalar(c(0.3, -0.9)).unwrap();
                assert_eq!(
                    m.predict(&z).unwrap(),
                    model.predict(&z).unwrap(),
                    "reloaded model must predict bitwise identically"
                );
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn model_schema_is_checked() {
        let json = r#"{"schema": 9, "kind": "csvr"}"#;
        assert!(parse_model_json(json).is_err());
    }
}
