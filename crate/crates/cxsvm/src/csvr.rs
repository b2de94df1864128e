//! Pure complex support vector regression and the dual-real-channel baseline.
//!
//! The widely linear CSVR dual splits into two real ε-SVR tasks over the
//! effective kernel `2κ^r_ℂ` — one trained on the real parts of the targets,
//! one on the imaginary parts — and the fitted function is
//!
//! `g(z) = 2 Σ β^r_n κ^r_ℂ(z_n, z) + c^r + i (2 Σ β^i_n κ^r_ℂ(z_n, z) + c^i)`.
//!
//! The DRC baseline instead runs two independent real SVRs with an ordinary
//! real kernel over `(x, y) ∈ ℝ^{2ν}` (no factor 2); the complexification
//! variant is DRC with the kernel pre-scaled by 2, which makes the
//! complexified-dual equivalence executable.

use crate::error::{Error, Result};
use crate::kernels::{build_gram, eval_kernel_real, ComplexVector, Gram, KernelSpec, Pattern};
use crate::qp::{solve_svr_dual, SvrModel, SvrParams};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One training pair `(z_n, d_n)` with `z_n ∈ ℂ^ν`, `d_n ∈ ℂ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexRegressionSample {
    pub input: ComplexVector,
    pub target: Complex64,
}

impl ComplexRegressionSample {
    pub fn new(input: ComplexVector, target: Complex64) -> Self {
        ComplexRegressionSample { input, target }
    }
}

fn validate_samples(data: &[ComplexRegressionSample]) -> Result<usize> {
    if data.is_empty() {
        return Err(Error::EmptyInput {
            context: "training data",
        });
    }
    let dim = data[0].input.dim();
    for s in data {
        if s.input.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: s.input.dim(),
            });
        }
        if !s.target.re.is_finite() || !s.target.im.is_finite() {
            return Err(Error::NonFinite { context: "targets" });
        }
    }
    Ok(dim)
}

fn real_gram(spec: &KernelSpec, points: &[Pattern]) -> Result<crate::kernels::RealGram> {
    match build_gram(spec, points)? {
        Gram::Real(g) => Ok(g),
        Gram::Complex(_) => Err(Error::DomainMismatch {
            details: "expected a real-valued effective kernel".into(),
        }),
    }
}

fn predict_two_channel(
    effective: &KernelSpec,
    train_inputs: &[ComplexVector],
    real_task: &SvrModel,
    imag_task: &SvrModel,
    z: &ComplexVector,
) -> Result<Complex64> {
    let dim = train_inputs[0].dim();
    if z.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: z.dim(),
        });
    }
    let q = Pattern::Complex(z.clone());
    let column: Vec<f64> = train_inputs
        .iter()
        .map(|zn| eval_kernel_real(effective, &Pattern::Complex(zn.clone()), &q))
        .collect::<Result<_>>()?;
    Ok(Complex64::new(
        real_task.predict_from_column(&column),
        imag_task.predict_from_column(&column),
    ))
}

/// Complex SVR model: two real dual solutions over the induced kernel plus
/// the complex kernel they came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CsvrModel {
    pub kernel: KernelSpec,
    pub real_task: SvrModel,
    pub imag_task: SvrModel,
    pub train_inputs: Vec<ComplexVector>,
}

impl CsvrModel {
    /// The dual/prediction kernel `2 κ^r_ℂ`.
    pub fn effective_kernel(&self) -> Result<KernelSpec> {
        KernelSpec::scaled(2.0, KernelSpec::induced_real(self.kernel.clone())?)
    }

    pub fn predict(&self, z: &ComplexVector) -> Result<Complex64> {
        predict_two_channel(
            &self.effective_kernel()?,
            &self.train_inputs,
            &self.real_task,
            &self.imag_task,
            z,
        )
    }

    pub fn converged(&self) -> bool {
        self.real_task.converged && self.imag_task.converged
    }
}

/// Fit the pure complex SVR: one shared induced Gram `2 G^r`, one real SVR
/// per target channel. A non-converged channel is reported through its
/// model's flag rather than failing the fit.
pub fn fit_csvr(
    data: &[ComplexRegressionSample],
    complex_kernel: &KernelSpec,
    params: &SvrParams,
) -> Result<CsvrModel> {
    complex_kernel.validate()?;
    if !complex_kernel.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "fit_csvr requires a complex kernel".into(),
        });
    }
    validate_samples(data)?;
    let effective = KernelSpec::scaled(2.0, KernelSpec::induced_real(complex_kernel.clone())?)?;
    let points: Vec<Pattern> = data.iter().map(|s| Pattern::Complex(s.input.clone())).collect();
    let gram = real_gram(&effective, &points)?;

    let d_re: Vec<f64> = data.iter().map(|s| s.target.re).collect();
    let d_im: Vec<f64> = data.iter().map(|s| s.target.im).collect();
    let real_task = solve_svr_dual(&gram, &d_re, params)?;
    let imag_task = solve_svr_dual(&gram, &d_im, params)?;
    Ok(CsvrModel {
        kernel: complex_kernel.clone(),
        real_task,
        imag_task,
        train_inputs: data.iter().map(|s| s.input.clone()).collect(),
    })
}

/// Free-function form of [`CsvrModel::predict`].
pub fn predict_csvr(model: &CsvrModel, z: &ComplexVector) -> Result<Complex64> {
    model.predict(z)
}

/// Dual-real-channel model: two real SVRs over `ℝ^{2ν}` with the stored
/// (already effective) real kernel.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrcModel {
    pub kernel: KernelSpec,
    pub real_task: SvrModel,
    pub imag_task: SvrModel,
    pub train_inputs: Vec<ComplexVector>,
}

impl DrcModel {
    pub fn predict(&self, z: &ComplexVector) -> Result<Complex64> {
        predict_two_channel(
            &self.kernel,
            &self.train_inputs,
            &self.real_task,
            &self.imag_task,
            z,
        )
    }

    pub fn converged(&self) -> bool {
        self.real_task.converged && self.imag_task.converged
    }
}

fn fit_two_real_channels(
    data: &[ComplexRegressionSample],
    effective: KernelSpec,
    params: &SvrParams,
) -> Result<DrcModel> {
    validate_samples(data)?;
    let points: Vec<Pattern> = data.iter().map(|s| Pattern::Complex(s.input.clone())).collect();
    let gram = real_gram(&effective, &points)?;
    let d_re: Vec<f64> = data.iter().map(|s| s.target.re).collect();
    let d_im: Vec<f64> = data.iter().map(|s| s.target.im).collect();
    let real_task = solve_svr_dual(&gram, &d_re, params)?;
    let imag_task = solve_svr_dual(&gram, &d_im, params)?;
    Ok(DrcModel {
        kernel: effective,
        real_task,
        imag_task,
        train_inputs: data.iter().map(|s| s.input.clone()).collect(),
    })
}

/// DRC baseline: two independent real SVRs with `real_kernel` over the
/// `(x, y)` embedding; targets `d^r` and `d^i`.
pub fn fit_drc_svr(
    data: &[ComplexRegressionSample],
    real_kernel: &KernelSpec,
    params: &SvrParams,
) -> Result<DrcModel> {
    real_kernel.validate()?;
    if real_kernel.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "fit_drc_svr requires a real kernel".into(),
        });
    }
    fit_two_real_channels(data, real_kernel.clone(), params)
}

/// Complexification variant: identical to DRC except the dual kernel is
/// `2 κ_ℝ`, the form the complexified dual takes.
pub fn fit_complexified_svr(
    data: &[ComplexRegressionSample],
    real_kernel: &KernelSpec,
    params: &SvrParams,
) -> Result<DrcModel> {
    real_kernel.validate()?;
    if real_kernel.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "fit_complexified_svr requires a real kernel".into(),
        });
    }
    fit_two_real_channels(data, KernelSpec::scaled(2.0, real_kernel.clone())?, params)
}

/// Mean square error in dB: `10 log10(mean |pred - truth|²)`, floored at
/// 1e-300 so an exact match reports -3000 dB instead of -∞.
pub fn mse_db(predictions: &[Complex64], truth: &[Complex64]) -> Result<f64> {
    if predictions.is_empty() {
        return Err(Error::EmptyInput {
            context: "mse_db inputs",
        });
    }
    if predictions.len() != truth.len() {
        return Err(Error::DimensionMismatch {
            expected: truth.len(),
            got: predictions.len(),
        });
    }
    let mean: f64 = predictions
        .iter()
        .zip(truth)
        .map(|(p, t)| (p - t).norm_sqr())
        .sum::<f64>()
        / predictions.len() as f64;
    Ok(10.0 * mean.max(1e-300).log10())
}
