//! Quaternary classification via complex couples of hyperplanes.
//!
//! A widely linear complex decision function `f` produces two zero-level sets
//! `{Re(f) = 0}` and `{Im(f) = 0}` that divide the space into four regions.
//! The complex SVM trains two real C-SVM duals over the effective kernel
//! `2κ^r_ℂ` — one on labels `d^r = Re(d)`, one on `d^i = Im(d)` — and labels a
//! point by `sign_i(f(z)) = sign(Re f) + i·sign(Im f)`. Four classes cost two
//! dual solves rather than the four a one-versus-all scheme needs.

use crate::error::{Error, Result};
use crate::kernels::{build_gram, eval_kernel_real, ComplexVector, Gram, KernelSpec, Pattern};
use crate::qp::{solve_svc_dual, SvcModel, SvcParams};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One of the four quaternary classes `±1 ± i`, stored as the two component
/// signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuaternaryLabel {
    re_sign: i8,
    im_sign: i8,
}

impl QuaternaryLabel {
    pub const PP: QuaternaryLabel = QuaternaryLabel { re_sign: 1, im_sign: 1 };
    pub const PM: QuaternaryLabel = QuaternaryLabel { re_sign: 1, im_sign: -1 };
    pub const MP: QuaternaryLabel = QuaternaryLabel { re_sign: -1, im_sign: 1 };
    pub const MM: QuaternaryLabel = QuaternaryLabel { re_sign: -1, im_sign: -1 };

    pub const ALL: [QuaternaryLabel; 4] = [Self::PP, Self::PM, Self::MP, Self::MM];

    pub fn new(re_sign: i8, im_sign: i8) -> Result<Self> {
        if (re_sign != 1 && re_sign != -1) || (im_sign != 1 && im_sign != -1) {
            return Err(Error::InvalidLabel { index: 0 });
        }
        Ok(QuaternaryLabel { re_sign, im_sign })
    }

    pub fn re_sign(&self) -> f64 {
        f64::from(self.re_sign)
    }

    pub fn im_sign(&self) -> f64 {
        f64::from(self.im_sign)
    }

    /// The label as the complex number `±1 ± i`.
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re_sign(), self.im_sign())
    }

    pub fn as_str(&self) -> &'static str {
        match (self.re_sign, self.im_sign) {
            (1, 1) => "++",
            (1, -1) => "+-",
            (-1, 1) => "-+",
            _ => "--",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "++" => Some(Self::PP),
            "+-" => Some(Self::PM),
            "-+" => Some(Self::MP),
            "--" => Some(Self::MM),
            _ => None,
        }
    }
}

impl std::fmt::Display for QuaternaryLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for QuaternaryLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for QuaternaryLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        QuaternaryLabel::parse(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown quaternary label {s:?}")))
    }
}

/// Componentwise sign with the `sign(0) := +1` convention, so predictions are
/// total and deterministic even on a hyperplane.
pub fn sign_i(v: Complex64) -> QuaternaryLabel {
    QuaternaryLabel {
        re_sign: if v.re >= 0.0 { 1 } else { -1 },
        im_sign: if v.im >= 0.0 { 1 } else { -1 },
    }
}

/// Quaternary complex SVM: two real C-SVM duals over the induced kernel.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CsvmModel {
    pub kernel: KernelSpec,
    pub real_task: SvcModel,
    pub imag_task: SvcModel,
    pub train_inputs: Vec<ComplexVector>,
}

impl CsvmModel {
    pub fn effective_kernel(&self) -> Result<KernelSpec> {
        KernelSpec::scaled(2.0, KernelSpec::induced_real(self.kernel.clone())?)
    }

    pub fn decision_function(&self, z: &ComplexVector) -> Result<Complex64> {
        decision_function(self, z)
    }

    pub fn predict(&self, z: &ComplexVector) -> Result<QuaternaryLabel> {
        Ok(sign_i(self.decision_function(z)?))
    }

    pub fn converged(&self) -> bool {
        self.real_task.converged && self.imag_task.converged
    }
}

/// Fit the quaternary complex SVM. Each channel must see both signs of its
/// labels; a degenerate channel is rejected by name.
pub fn fit_csvm(
    data: &[(ComplexVector, QuaternaryLabel)],
    complex_kernel: &KernelSpec,
    params: &SvcParams,
) -> Result<CsvmModel> {
    complex_kernel.validate()?;
    if !complex_kernel.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "fit_csvm requires a complex kernel".into(),
        });
    }
    if data.is_empty() {
        return Err(Error::EmptyInput {
            context: "training data",
        });
    }
    let dim = data[0].0.dim();
    for (z, _) in data {
        if z.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: z.dim(),
            });
        }
    }
    let d_re: Vec<f64> = data.iter().map(|(_, l)| l.re_sign()).collect();
    let d_im: Vec<f64> = data.iter().map(|(_, l)| l.im_sign()).collect();
    if d_re.iter().all(|&d| d == d_re[0]) {
        return Err(Error::SingleClass { channel: "real" });
    }
    if d_im.iter().all(|&d| d == d_im[0]) {
        return Err(Error::SingleClass { channel: "imaginary" });
    }

    let effective = KernelSpec::scaled(2.0, KernelSpec::induced_real(complex_kernel.clone())?)?;
    let points: Vec<Pattern> = data.iter().map(|(z, _)| Pattern::Complex(z.clone())).collect();
    let gram = match build_gram(&effective, &points)? {
        Gram::Real(g) => g,
        Gram::Complex(_) => unreachable!("induced kernel is real-valued"),
    };
    let real_task = solve_svc_dual(&gram, &d_re, params)?;
    let imag_task = solve_svc_dual(&gram, &d_im, params)?;
    Ok(CsvmModel {
        kernel: complex_kernel.clone(),
        real_task,
        imag_task,
        train_inputs: data.iter().map(|(z, _)| z.clone()).collect(),
    })
}

/// The complex decision value
/// `2 Σ (a_n d^r_n + i b_n d^i_n) κ^r_ℂ(z_n, z) + c^r + i c^i`:
/// real part is the real-channel margin, imaginary part the imaginary-channel
/// margin.
pub fn decision_function(model: &CsvmModel, z: &ComplexVector) -> Result<Complex64> {
    let dim = model.train_inputs[0].dim();
    if z.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: z.dim(),
        });
    }
    let effective = model.effective_kernel()?;
    let q = Pattern::Complex(z.clone());
    let column: Vec<f64> = model
        .train_inputs
        .iter()
        .map(|zn| eval_kernel_real(&effective, &Pattern::Complex(zn.clone()), &q))
        .collect::<Result<_>>()?;
    Ok(Complex64::new(
        model.real_task.margin_from_column(&column),
        model.imag_task.margin_from_column(&column),
    ))
}

/// `sign_i(decision_function(model, z))`.
pub fn predict_csvm(model: &CsvmModel, z: &ComplexVector) -> Result<QuaternaryLabel> {
    model.predict(z)
}

/// Binary classification of complex inputs through the complexified kernel
/// `2κ_ℝ` on `(x, y) ∈ ℝ^{2ν}` — the complexified SVM with one active
/// channel. Labels are ±1.
pub fn classify_binary_complexified(
    data: &[(ComplexVector, f64)],
    real_kernel: &KernelSpec,
    params: &SvcParams,
) -> Result<SvcModel> {
    real_kernel.validate()?;
    if real_kernel.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "classify_binary_complexified requires a real kernel".into(),
        });
    }
    if data.is_empty() {
        return Err(Error::EmptyInput {
            context: "training data",
        });
    }
    let effective = KernelSpec::scaled(2.0, real_kernel.clone())?;
    let points: Vec<Pattern> = data.iter().map(|(z, _)| Pattern::Complex(z.clone())).collect();
    let gram = match build_gram(&effective, &points)? {
        Gram::Real(g) => g,
        Gram::Complex(_) => unreachable!("real kernel produced a complex gram"),
    };
    let labels: Vec<f64> = data.iter().map(|(_, d)| *d).collect();
    solve_svc_dual(&gram, &labels, params)
}

/// Margin of a [`classify_binary_complexified`] model at `z`; `real_kernel`
/// and `train_inputs` must be those used at fit time.
pub fn complexified_margin(
    model: &SvcModel,
    real_kernel: &KernelSpec,
    train_inputs: &[ComplexVector],
    z: &ComplexVector,
) -> Result<f64> {
    let effective = KernelSpec::scaled(2.0, real_kernel.clone())?;
    let q = Pattern::Complex(z.clone());
    let column: Vec<f64> = train_inputs
        .iter()
        .map(|zn| eval_kernel_real(&effective, &Pattern::Complex(zn.clone()), &q))
        .collect::<Result<_>>()?;
    Ok(model.margin_from_column(&column))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::RealGram;
    use crate::qp::solve_svc_bruteforce;
    use crate::rng::SplitRng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn zv(z: Complex64) -> ComplexVector {
        ComplexVector::scalar(z).unwrap()
    }

    /// Four circular-Gaussian blobs, one per class, centered at ±2 ± 2i.
    fn blobs(n_per_class: usize, spread: f64, seed: u64) -> Vec<(ComplexVector, QuaternaryLabel)> {
        let mut rng = SplitRng::for_role(seed, "csvm-blobs");
        let mut out = Vec::new();
        for label in QuaternaryLabel::ALL {
            let center = 2.0 * label.value();
            for _ in 0..n_per_class {
                let noise = rng.complex_circular(spread * spread);
                out.push((zv(center + noise), label));
            }
        }
        out
    }

    #[test]
    fn sign_i_conventions() {
        assert_eq!(sign_i(c(3.0, -0.5)), QuaternaryLabel::PM);
        assert_eq!(sign_i(c(-2.0, 2.0)), QuaternaryLabel::MP);
        assert_eq!(sign_i(c(0.0, 0.0)), QuaternaryLabel::PP);
        assert_eq!(sign_i(c(-0.0, 1.0)), QuaternaryLabel::PP, "-0 counts as +");
    }

    #[test]
    fn separable_blobs_train_perfectly() {
        let data = blobs(40, 0.3, 1);
        let model = fit_csvm(
            &data,
            &KernelSpec::complex_gaussian(0.5).unwrap(),
            &SvcParams::new(100.0),
        )
        .unwrap();
        let correct = data
            .iter()
            .filter(|(z, l)| model.predict(z).unwrap() == *l)
            .count();
        assert_eq!(correct, 160, "training accuracy on separable blobs");
    }

    #[test]
    fn degenerate_channel_is_rejected_by_name() {
        let data = vec![
            (zv(c(1.0, 1.0)), QuaternaryLabel::PP),
            (zv(c(-1.0, 1.0)), QuaternaryLabel::MP),
        ];
        let err = fit_csvm(
            &data,
            &KernelSpec::complex_gaussian(1.0).unwrap(),
            &SvcParams::new(1.0),
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::SingleClass { channel: "imaginary" }),
            "{err}"
        );
    }

    #[test]
    fn four_point_duals_match_oracle_and_margins_reach_one() {
        let data: Vec<_> = QuaternaryLabel::ALL
            .iter()
            .map(|l| (zv(l.value()), *l))
            .collect();
        let params = SvcParams::new(1000.0).with_kkt_tol(1e-6);
        let kernel = KernelSpec::complex_gaussian(1.0).unwrap();
        let model = fit_csvm(&data, &kernel, &params).unwrap();

        let effective = model.effective_kernel().unwrap();
        let points: Vec<Pattern> = data.iter().map(|(z, _)| Pattern::Complex(z.clone())).collect();
        let gram = match build_gram(&effective, &points).unwrap() {
            Gram::Real(g) => g,
            _ => unreachable!(),
        };
        let d_re: Vec<f64> = data.iter().map(|(_, l)| l.re_sign()).collect();
        let d_im: Vec<f64> = data.iter().map(|(_, l)| l.im_sign()).collect();
        let oracle_re = solve_svc_bruteforce(&gram, &d_re, &params, 401).unwrap();
        let oracle_im = solve_svc_bruteforce(&gram, &d_im, &params, 401).unwrap();
        assert!(
            (model.real_task.objective - oracle_re.model.objective).abs()
                < 1e-3_f64.max(oracle_re.gap_bound),
            "re: smo {} oracle {} bound {}",
            model.real_task.objective,
            oracle_re.model.objective,
            oracle_re.gap_bound
        );
        assert!(
            (model.imag_task.objective - oracle_im.model.objective).abs()
                < 1e-3_f64.max(oracle_im.gap_bound),
            "im: smo {} oracle {}",
            model.imag_task.objective,
            oracle_im.model.objective
        );

        // Margin constraints of the primal at the support vectors.
        for (z, l) in &data {
            let f = model.decision_function(z).unwrap();
            assert!(l.re_sign() * f.re >= 1.0 - 1e-3, "{l}: {f}");
            assert!(l.im_sign() * f.im >= 1.0 - 1e-3, "{l}: {f}");
            assert_eq!(model.predict(z).unwrap(), *l);
        }
    }

    #[test]
    fn constant_bias_model_predicts_bias_sign_everywhere() {
        let mk_task = |bias: f64| SvcModel {
            alpha: vec![0.0, 0.0],
            labels: vec![1.0, -1.0],
            bias,
            sv_indices: vec![],
            objective: 0.0,
            converged: true,
            params: SvcParams::new(1.0),
        };
        let model = CsvmModel {
            kernel: KernelSpec::complex_gaussian(1.0).unwrap(),
            real_task: mk_task(0.5),
            imag_task: mk_task(-0.25),
            train_inputs: vec![zv(c(0.0, 0.0)), zv(c(1.0, 1.0))],
        };
        for z in [c(0.0, 0.0), c(3.0, -2.0), c(-1.0, 0.5)] {
            let f = model.decision_function(&zv(z)).unwrap();
            assert_eq!(f, c(0.5, -0.25));
            assert_eq!(model.predict(&zv(z)).unwrap(), QuaternaryLabel::PM);
        }
    }

    #[test]
    fn centroid_of_symmetric_blobs_sits_near_both_hyperplanes() {
        let data = blobs(15, 0.3, 3);
        let model = fit_csvm(
            &data,
            &KernelSpec::complex_gaussian(0.5).unwrap(),
            &SvcParams::new(100.0),
        )
        .unwrap();
        let f = model.decision_function(&zv(c(0.0, 0.0))).unwrap();
        assert!(f.re.abs() <= 0.5, "{f}");
        assert!(f.im.abs() <= 0.5, "{f}");
    }

    #[test]
    fn channels_are_decoupled_bitwise() {
        let data = blobs(10, 0.5, 5);
        let kernel = KernelSpec::complex_gaussian(0.5).unwrap();
        let params = SvcParams::new(50.0);
        let base = fit_csvm(&data, &kernel, &params).unwrap();

        // Flip every imaginary label; the real channel must not move a bit.
        let flipped: Vec<_> = data
            .iter()
            .map(|(z, l)| {
                let nl = QuaternaryLabel::new(l.re_sign as i8, -l.im_sign).unwrap();
                (z.clone(), nl)
            })
            .collect();
        let other = fit_csvm(&flipped, &kernel, &params).unwrap();
        assert_eq!(base.real_task, other.real_task);
    }

    #[test]
    fn negating_real_labels_flips_real_margin_exactly() {
        let data = blobs(8, 0.6, 7);
        let kernel = KernelSpec::complex_gaussian(0.5).unwrap();
        let params = SvcParams::new(25.0);
        let base = fit_csvm(&data, &kernel, &params).unwrap();
        let negated: Vec<_> = data
            .iter()
            .map(|(z, l)| (z.clone(), QuaternaryLabel::new(-l.re_sign, l.im_sign).unwrap()))
            .collect();
        let other = fit_csvm(&negated, &kernel, &params).unwrap();
        assert_eq!(base.real_task.alpha, other.real_task.alpha);
        assert_eq!(base.real_task.bias, -other.real_task.bias);
        for (z, _) in data.iter().take(5) {
            let f0 = base.decision_function(z).unwrap();
            let f1 = other.decision_function(z).unwrap();
            assert_eq!(f0.re, -f1.re, "real margin must negate exactly");
            assert_eq!(f0.im, f1.im);
        }
    }

    #[test]
    fn margin_complementarity_at_free_support_vectors() {
        let data = blobs(12, 0.5, 9);
        let params = SvcParams::new(20.0).with_kkt_tol(1e-4);
        let model = fit_csvm(&data, &KernelSpec::complex_gaussian(0.5).unwrap(), &params).unwrap();
        let n = data.len() as f64;
        let u = params.c / n;
        let mut checked = 0;
        for (k, (z, l)) in data.iter().enumerate() {
            let f = model.decision_function(z).unwrap();
            let a = model.real_task.alpha[k];
            if a > 0.0 && a < u {
                assert!(
                    (l.re_sign() * f.re - 1.0).abs() <= 20.0 * params.kkt_tol,
                    "free sv {k}: margin {}",
                    l.re_sign() * f.re
                );
                checked += 1;
            }
            let b = model.imag_task.alpha[k];
            if b > 0.0 && b < u {
                assert!(
                    (l.im_sign() * f.im - 1.0).abs() <= 20.0 * params.kkt_tol,
                    "free sv {k} (imag): margin {}",
                    l.im_sign() * f.im
                );
                checked += 1;
            }
        }
        assert!(checked > 0, "test needs at least one free support vector");
    }

    #[test]
    fn quaternary_fit_equals_binary_complexified_on_duplicated_channels() {
        // d^i ≡ d^r: both channels of fit_csvm solve the same dual, and
        // classify_binary_complexified over the induced kernel solves it too.
        let mut rng = SplitRng::for_role(21, "dup-channel");
        let data: Vec<(ComplexVector, QuaternaryLabel)> = (0..12)
            .map(|k| {
                let re: f64 = if k % 2 == 0 { 1.5 } else { -1.5 };
                let z = c(re + 0.3 * rng.gaussian(), 0.3 * rng.gaussian());
                let l = if re > 0.0 {
                    QuaternaryLabel::PP
                } else {
                    QuaternaryLabel::MM
                };
                (zv(z), l)
            })
            .collect();
        let kernel = KernelSpec::complex_gaussian(0.5).unwrap();
        let params = SvcParams::new(50.0);
        let quaternary = fit_csvm(&data, &kernel, &params).unwrap();
        assert_eq!(quaternary.real_task.alpha, quaternary.imag_task.alpha);

        let binary: Vec<(ComplexVector, f64)> = data
            .iter()
            .map(|(z, l)| (z.clone(), l.re_sign()))
            .collect();
        let induced = KernelSpec::induced_real(kernel).unwrap();
        let bmodel = classify_binary_complexified(&binary, &induced, &params).unwrap();
        assert_eq!(bmodel.alpha, quaternary.real_task.alpha);
        assert_eq!(bmodel.bias, quaternary.real_task.bias);
        for (z, l) in data.iter().take(4) {
            let m = complexified_margin(&bmodel, &induced, &quaternary.train_inputs, z).unwrap();
            assert_eq!(m > 0.0, l.re_sign() > 0.0);
        }
    }

    #[test]
    fn binary_complexified_separates_complex_blobs() {
        let mut rng = SplitRng::for_role(31, "binary-blobs");
        let data: Vec<(ComplexVector, f64)> = (0..40)
            .map(|k| {
                let d = if k % 2 == 0 { 1.0 } else { -1.0 };
                let center = c(1.5 * d, -1.5 * d);
                (zv(center + rng.complex_circular(0.09)), d)
            })
            .collect();
        let rg = KernelSpec::real_gaussian(1.0).unwrap();
        let params = SvcParams::new(100.0);
        let model = classify_binary_complexified(&data, &rg, &params).unwrap();
        let inputs: Vec<ComplexVector> = data.iter().map(|(z, _)| z.clone()).collect();
        for (z, d) in &data {
            let m = complexified_margin(&model, &rg, &inputs, z).unwrap();
            assert!(m * d > 0.0);
        }
        let single: Vec<(ComplexVector, f64)> =
            data.iter().map(|(z, _)| (z.clone(), 1.0)).collect();
        assert!(classify_binary_complexified(&single, &rg, &params).is_err());
    }

    #[test]
    fn linear_kernel_desk_case_partitions_plane_consistently() {
        // Complex-linear kernel κ(z, w) = z·w̄ over ℂ¹: the induced kernel is
        // the ℝ² dot product, so the dual expansion has explicit hyperplane
        // normals and the decision signs must agree with the affine geometry.
        let train: Vec<(Complex64, QuaternaryLabel)> = vec![
            (c(1.0, 1.0), QuaternaryLabel::PP),
            (c(1.4, 0.8), QuaternaryLabel::PP),
            (c(1.0, -1.0), QuaternaryLabel::PM),
            (c(0.8, -1.3), QuaternaryLabel::PM),
            (c(-1.0, 1.0), QuaternaryLabel::MP),
            (c(-1.2, 1.2), QuaternaryLabel::MP),
            (c(-1.0, -1.0), QuaternaryLabel::MM),
            (c(-0.7, -1.1), QuaternaryLabel::MM),
        ];
        let n = train.len();
        let params = SvcParams::new(10.0).with_kkt_tol(1e-6);
        // Effective dual kernel 2κ^r(z, w) = 2(x_z x_w + y_z y_w).
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (zi, zj) = (train[i].0, train[j].0);
                rows[i][j] = 2.0 * (zj.re * zi.re + zj.im * zi.im);
            }
        }
        let gram = RealGram::from_rows(&rows).unwrap();
        let d_re: Vec<f64> = train.iter().map(|(_, l)| l.re_sign()).collect();
        let d_im: Vec<f64> = train.iter().map(|(_, l)| l.im_sign()).collect();
        let real_task = solve_svc_dual(&gram, &d_re, &params).unwrap();
        let imag_task = solve_svc_dual(&gram, &d_im, &params).unwrap();

        // Explicit normals from the linear expansion w = 2 Σ α d ψ(z_n).
        let normal = |task: &SvcModel, d: &[f64]| -> (f64, f64) {
            let mut w = (0.0, 0.0);
            for k in 0..n {
                let scale = 2.0 * task.alpha[k] * d[k];
                w.0 += scale * train[k].0.re;
                w.1 += scale * train[k].0.im;
            }
            w
        };
        let w_r = normal(&real_task, &d_re);
        let w_i = normal(&imag_task, &d_im);

        let mut rng = SplitRng::for_role(33, "desk-samples");
        for _ in 0..200 {
            let z = c(3.0 * (rng.uniform() - 0.5), 3.0 * (rng.uniform() - 0.5));
            let affine_re = w_r.0 * z.re + w_r.1 * z.im + real_task.bias;
            let affine_im = w_i.0 * z.re + w_i.1 * z.im + imag_task.bias;
            let column: Vec<f64> = (0..n)
                .map(|k| 2.0 * (train[k].0.re * z.re + train[k].0.im * z.im))
                .collect();
            let margin_re = real_task.margin_from_column(&column);
            let margin_im = imag_task.margin_from_column(&column);
            assert!((affine_re - margin_re).abs() < 1e-9);
            assert!((affine_im - margin_im).abs() < 1e-9);
            // Region from geometry == region from decision signs.
            assert_eq!(
                sign_i(c(affine_re, affine_im)),
                sign_i(c(margin_re, margin_im))
            );
        }
        // Training points land in their own regions of the partition.
        for (z, l) in &train {
            let column: Vec<f64> = (0..n)
                .map(|k| 2.0 * (train[k].0.re * z.re + train[k].0.im * z.im))
                .collect();
            let f = c(
                real_task.margin_from_column(&column),
                imag_task.margin_from_column(&column),
            );
            assert_eq!(sign_i(f), *l);
        }
    }

    #[test]
    fn label_round_trip() {
        for l in QuaternaryLabel::ALL {
            assert_eq!(QuaternaryLabel::parse(l.as_str()), Some(l));
            let json = serde_json::to_string(&l).unwrap();
            let back: QuaternaryLabel = serde_json::from_str(&json).unwrap();
            assert_eq!(back, l);
        }
        assert_eq!(QuaternaryLabel::parse("+?"), None);
    }
}
