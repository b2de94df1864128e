//! # cxsvm
//!
//! Kernel machines for complex-valued data: support vector regression and
//! quaternary classification built on pure complex kernels and widely linear
//! estimation.
//!
//! A complex kernel `κ_ℂ` is Hermitian, so its imaginary part annihilates every
//! real quadratic form and its real part `κ^r = Re(κ_ℂ)` is itself a positive
//! definite kernel on `ℝ^{2ν}` (the *induced real kernel*). Training a widely
//! linear SVR or SVM in the complex RKHS therefore splits into two ordinary
//! real dual problems over the kernel `2κ^r`: one for the real channel of the
//! targets and one for the imaginary channel. This crate provides
//!
//! - [`kernels`]: real/complex Gaussian kernels, the induced real kernel,
//!   Gram construction, and numerical checks of the kernel lemmas;
//! - [`qp`]: SMO solvers for the C-SVM and ε-SVR duals with the `C/N` box
//!   bound, plus an exhaustive small-instance oracle for verification;
//! - [`csvr`]: pure complex SVR, the dual-real-channel (DRC) baseline, and the
//!   complexification variant;
//! - [`csvm`]: quaternary classification via complex couples of hyperplanes
//!   and the componentwise `sign_i` labeling rule;
//! - [`datasets`]: deterministic generators for the sinc-grid regression and
//!   nonlinear channel identification/equalization benchmarks;
//! - [`io`]: CSV dataset formats and JSON model persistence.
//!
//! ## Example
//!
//! ```
//! use cxsvm::kernels::KernelSpec;
//! use cxsvm::csvr::{fit_csvr, ComplexRegressionSample};
//! use cxsvm::kernels::ComplexVector;
//! use cxsvm::qp::SvrParams;
//! use num_complex::Complex64;
//!
//! let data: Vec<ComplexRegressionSample> = (0..8)
//!     .map(|k| {
//!         let z = Complex64::new(k as f64 * 0.3, (k % 3) as f64 * 0.2);
//!         ComplexRegressionSample::new(
//!             ComplexVector::new(vec![z]).unwrap(),
//!             z * z - Complex64::new(0.0, 0.5),
//!         )
//!     })
//!     .collect();
//! let model = fit_csvr(&data, &KernelSpec::complex_gaussian(0.5).unwrap(),
//!                      &SvrParams::new(10.0, 0.05)).unwrap();
//! let g = model.predict(&data[3].input).unwrap();
//! assert!((g - data[3].target).norm() < 0.2);
//! ```

pub mod csvm;
pub mod csvr;
pub mod datasets;
pub mod error;
pub mod io;
pub mod kernels;
pub mod qp;
pub mod rng;

pub use error::{Error, Result};
pub use num_complex::Complex64;
