//! Real and complex kernels, the induced real kernel, and Gram matrices.
//!
//! The complex Gaussian kernel is `κ_ℂ(z, w) = exp(-t Σ_k (z_k - w_k*)²)`,
//! evaluated with the complex exponential; it is Hermitian but, unlike the
//! real RBF, unbounded in magnitude. Its real part, viewed over `ℝ^{2ν}`, is
//! the *induced real kernel* `κ^r_ℂ` — a positive definite kernel that is not
//! the real Gaussian RBF. Both kernel lemmas (imaginary-part annihilation and
//! positive definiteness of the induced kernel) are exposed here as numerical
//! checks so they can be exercised on concrete point sets.

use crate::error::{Error, Result};
use crate::rng::SplitRng;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::borrow::Cow;

/// Largest |real part| of the complex Gaussian exponent we evaluate; beyond
/// this `exp` would overflow/underflow, and policy is to fail loudly.
pub const EXPONENT_LIMIT: f64 = 700.0;

fn require_finite(xs: &[f64], context: &'static str) -> Result<()> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite { context })
    }
}

/// A fixed-length pattern `z ∈ ℂ^ν`. Entries are finite and the dimension is
/// immutable after construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexVector(Vec<Complex64>);

impl ComplexVector {
    pub fn new(elems: Vec<Complex64>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::EmptyInput {
                context: "complex vector",
            });
        }
        if !elems.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite {
                context: "complex vector",
            });
        }
        Ok(ComplexVector(elems))
    }

    /// Single-component vector.
    pub fn scalar(z: Complex64) -> Result<Self> {
        Self::new(vec![z])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Complex64] {
        &self.0
    }

    /// Embedding into `ℝ^{2ν}` as `(x_1.. x_ν, y_1.. y_ν)`.
    pub fn to_real_embedding(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * self.0.len());
        out.extend(self.0.iter().map(|z| z.re));
        out.extend(self.0.iter().map(|z| z.im));
        out
    }

    /// Inverse of [`to_real_embedding`](Self::to_real_embedding); requires an
    /// even dimension.
    pub fn from_real_embedding(p: &[f64]) -> Result<Self> {
        if p.len() % 2 != 0 || p.is_empty() {
            return Err(Error::DomainMismatch {
                details: format!("real embedding must have even positive length, got {}", p.len()),
            });
        }
        let half = p.len() / 2;
        Self::new(
            (0..half)
                .map(|k| Complex64::new(p[k], p[half + k]))
                .collect(),
        )
    }
}

/// A point a kernel can be evaluated at: a real vector, a complex vector, or
/// an index into a precomputed Gram.
#[derive(Clone, Debug, PartialEq)]
pub enum Pattern {
    Real(Vec<f64>),
    Complex(ComplexVector),
    Index(usize),
}

impl Pattern {
    pub fn real(xs: Vec<f64>) -> Result<Self> {
        require_finite(&xs, "real pattern")?;
        if xs.is_empty() {
            return Err(Error::EmptyInput {
                context: "real pattern",
            });
        }
        Ok(Pattern::Real(xs))
    }

    fn as_real(&self) -> Result<Cow<'_, [f64]>> {
        match self {
            Pattern::Real(xs) => Ok(Cow::Borrowed(xs)),
            Pattern::Complex(z) => Ok(Cow::Owned(z.to_real_embedding())),
            Pattern::Index(_) => Err(Error::DomainMismatch {
                details: "index pattern passed to a vector kernel".into(),
            }),
        }
    }

    fn as_complex(&self) -> Result<Cow<'_, [Complex64]>> {
        match self {
            Pattern::Complex(z) => Ok(Cow::Borrowed(z.components())),
            Pattern::Real(xs) => {
                let z = ComplexVector::from_real_embedding(xs)?;
                Ok(Cow::Owned(z.components().to_vec()))
            }
            Pattern::Index(_) => Err(Error::DomainMismatch {
                details: "index pattern passed to a vector kernel".into(),
            }),
        }
    }

    fn as_index(&self) -> Result<usize> {
        match self {
            Pattern::Index(i) => Ok(*i),
            _ => Err(Error::DomainMismatch {
                details: "vector pattern passed to a precomputed kernel".into(),
            }),
        }
    }
}

impl From<ComplexVector> for Pattern {
    fn from(z: ComplexVector) -> Self {
        Pattern::Complex(z)
    }
}

/// Gram matrix of kernel evaluations; real kernels yield a symmetric real
/// matrix, complex kernels a Hermitian complex one. Entry `(i, j)` is
/// `κ(points[j], points[i])`, following the reproducing-property order
/// `⟨Φ(z_i), Φ(z_j)⟩ = κ(z_j, z_i)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Gram {
    Real(RealGram),
    Complex(ComplexGram),
}

impl Gram {
    pub fn n(&self) -> usize {
        match self {
            Gram::Real(g) => g.n,
            Gram::Complex(g) => g.n,
        }
    }

    pub fn as_real(&self) -> Result<&RealGram> {
        match self {
            Gram::Real(g) => Ok(g),
            Gram::Complex(_) => Err(Error::DomainMismatch {
                details: "expected a real gram, got a complex one".into(),
            }),
        }
    }

    pub fn as_complex(&self) -> Result<&ComplexGram> {
        match self {
            Gram::Complex(g) => Ok(g),
            Gram::Real(_) => Err(Error::DomainMismatch {
                details: "expected a complex gram, got a real one".into(),
            }),
        }
    }
}

/// Dense row-major n×n real matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealGram {
    n: usize,
    data: Vec<f64>,
}

impl RealGram {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyInput { context: "gram" });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            require_finite(row, "gram entries")?;
            data.extend_from_slice(row);
        }
        Ok(RealGram { n, data })
    }

    pub fn zeros(n: usize) -> Self {
        RealGram {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Entry-wise scaling; `scale(2.0)` is exact in IEEE arithmetic.
    pub fn scaled(&self, factor: f64) -> RealGram {
        RealGram {
            n: self.n,
            data: self.data.iter().map(|v| factor * v).collect(),
        }
    }

    /// Largest relative asymmetry, for the solver's symmetry precondition.
    pub fn symmetry_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let (a, b) = (self.get(i, j), self.get(j, i));
                let d = (a - b).abs() / 1.0f64.max(a.abs()).max(b.abs());
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Dense row-major n×n complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexGram {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexGram {
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyInput { context: "gram" });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(ComplexGram { n, data })
    }

    pub fn zeros(n: usize) -> Self {
        ComplexGram {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    /// The induced real matrix `Re(G)`.
    pub fn real_part(&self) -> RealGram {
        RealGram {
            n: self.n,
            data: self.data.iter().map(|z| z.re).collect(),
        }
    }
}

/// Declarative kernel description.
///
/// Serialized as `{"kind": "...", ...}` with kinds `real_gaussian`,
/// `complex_gaussian`, `induced_real`, `scaled`, `precomputed`; unknown kinds
/// are rejected. `induced_real` wraps a complex-valued kernel only; `scaled`
/// carries the factor 2 that the split duals and the prediction rule place in
/// front of `κ^r_ℂ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum KernelSpec {
    RealGaussian { t: f64 },
    ComplexGaussian { t: f64 },
    InducedReal { inner: Box<KernelSpec> },
    Scaled { factor: f64, inner: Box<KernelSpec> },
    Precomputed { gram: PrecomputedGram },
}

/// Serializable precomputed Gram payload, keyed by point index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrecomputedGram {
    pub n: usize,
    /// Row-major real parts.
    pub entries: Vec<f64>,
    /// Row-major imaginary parts; absent for a real Gram.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries_im: Option<Vec<f64>>,
}

impl PrecomputedGram {
    pub fn from_gram(g: &Gram) -> Self {
        match g {
            Gram::Real(r) => PrecomputedGram {
                n: r.n,
                entries: r.data.clone(),
                entries_im: None,
            },
            Gram::Complex(c) => PrecomputedGram {
                n: c.n,
                entries: c.data.iter().map(|z| z.re).collect(),
                entries_im: Some(c.data.iter().map(|z| z.im).collect()),
            },
        }
    }

    pub fn to_gram(&self) -> Result<Gram> {
        if self.entries.len() != self.n * self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n * self.n,
                got: self.entries.len(),
            });
        }
        match &self.entries_im {
            None => Ok(Gram::Real(RealGram {
                n: self.n,
                data: self.entries.clone(),
            })),
            Some(im) => {
                if im.len() != self.entries.len() {
                    return Err(Error::DimensionMismatch {
                        expected: self.entries.len(),
                        got: im.len(),
                    });
                }
                Ok(Gram::Complex(ComplexGram {
                    n: self.n,
                    data: self
                        .entries
                        .iter()
                        .zip(im)
                        .map(|(&re, &im)| Complex64::new(re, im))
                        .collect(),
                }))
            }
        }
    }

    fn is_complex(&self) -> bool {
        self.entries_im.is_some()
    }
}

impl KernelSpec {
    pub fn real_gaussian(t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::InvalidParameter { name: "t", value: t });
        }
        Ok(KernelSpec::RealGaussian { t })
    }

    pub fn complex_gaussian(t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::InvalidParameter { name: "t", value: t });
        }
        Ok(KernelSpec::ComplexGaussian { t })
    }

    pub fn induced_real(inner: KernelSpec) -> Result<Self> {
        if !inner.is_complex_valued() {
            return Err(Error::DomainMismatch {
                details: "induced_real wraps a complex-valued kernel only".into(),
            });
        }
        Ok(KernelSpec::InducedReal {
            inner: Box::new(inner),
        })
    }

    pub fn scaled(factor: f64, inner: KernelSpec) -> Result<Self> {
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(Error::InvalidParameter {
                name: "factor",
                value: factor,
            });
        }
        Ok(KernelSpec::Scaled {
            factor,
            inner: Box::new(inner),
        })
    }

    pub fn precomputed(gram: Gram) -> Self {
        KernelSpec::Precomputed {
            gram: PrecomputedGram::from_gram(&gram),
        }
    }

    /// True when evaluations are complex numbers (complex Gaussian, complex
    /// precomputed Gram, or a scaled version of either).
    pub fn is_complex_valued(&self) -> bool {
        match self {
            KernelSpec::RealGaussian { .. } | KernelSpec::InducedReal { .. } => false,
            KernelSpec::ComplexGaussian { .. } => true,
            KernelSpec::Scaled { inner, .. } => inner.is_complex_valued(),
            KernelSpec::Precomputed { gram } => gram.is_complex(),
        }
    }

    /// Structural validation mirroring the constructors; deserialized specs
    /// go through this before use.
    pub fn validate(&self) -> Result<()> {
        match self {
            KernelSpec::RealGaussian { t } | KernelSpec::ComplexGaussian { t } => {
                if !(*t > 0.0) || !t.is_finite() {
                    return Err(Error::InvalidParameter { name: "t", value: *t });
                }
            }
            KernelSpec::InducedReal { inner } => {
                inner.validate()?;
                if !inner.is_complex_valued() {
                    return Err(Error::DomainMismatch {
                        details: "induced_real wraps a complex-valued kernel only".into(),
                    });
                }
            }
            KernelSpec::Scaled { factor, inner } => {
                if !(*factor > 0.0) || !factor.is_finite() {
                    return Err(Error::InvalidParameter {
                        name: "factor",
                        value: *factor,
                    });
                }
                inner.validate()?;
            }
            KernelSpec::Precomputed { gram } => {
                gram.to_gram()?;
            }
        }
        Ok(())
    }
}

/// A kernel evaluation: real-valued kernels return `Real`, complex-valued
/// ones `Complex`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum KernelValue {
    Real(f64),
    Complex(Complex64),
}

impl KernelValue {
    pub fn expect_real(self) -> Result<f64> {
        match self {
            KernelValue::Real(v) => Ok(v),
            KernelValue::Complex(_) => Err(Error::DomainMismatch {
                details: "expected a real kernel value".into(),
            }),
        }
    }

    pub fn expect_complex(self) -> Result<Complex64> {
        match self {
            KernelValue::Complex(v) => Ok(v),
            KernelValue::Real(_) => Err(Error::DomainMismatch {
                details: "expected a complex kernel value".into(),
            }),
        }
    }
}

/// Real Gaussian RBF `exp(-t Σ_k (x_k - y_k)²)`; result in (0, 1].
pub fn eval_real_gaussian(x: &[f64], y: &[f64], t: f64) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidParameter { name: "t", value: t });
    }
    require_finite(x, "kernel input")?;
    require_finite(y, "kernel input")?;
    let mut sq = 0.0;
    for k in 0..x.len() {
        let d = x[k] - y[k];
        sq += d * d;
    }
    Ok((-t * sq).exp())
}

/// Complex Gaussian kernel `exp(-t Σ_k (z_k - w_k*)²)` via the complex
/// exponential `exp(a + bi) = exp(a)(cos b + i sin b)`.
///
/// Unlike the real RBF this kernel is unbounded; when the exponent's real
/// part leaves ±[`EXPONENT_LIMIT`] the evaluation fails with
/// [`Error::ExponentRange`] instead of silently overflowing.
pub fn eval_complex_gaussian(z: &[Complex64], w: &[Complex64], t: f64) -> Result<Complex64> {
    if z.len() != w.len() {
        return Err(Error::DimensionMismatch {
            expected: z.len(),
            got: w.len(),
        });
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidParameter { name: "t", value: t });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..z.len() {
        let d = z[k] - w[k].conj();
        sum += d * d;
    }
    let e = -t * sum;
    if !e.re.is_finite() || !e.im.is_finite() {
        return Err(Error::NonFinite {
            context: "complex gaussian exponent",
        });
    }
    if e.re.abs() > EXPONENT_LIMIT {
        return Err(Error::ExponentRange { exponent: e.re });
    }
    let m = e.re.exp();
    Ok(Complex64::new(m * e.im.cos(), m * e.im.sin()))
}

/// Evaluate `κ(a, b)` for any [`KernelSpec`], dispatching on the variant.
///
/// Real patterns of even dimension are accepted by complex kernels (split
/// into halves), and complex patterns by real kernels (embedded into
/// `ℝ^{2ν}`), matching the two readings of the induced kernel.
pub fn eval_kernel(spec: &KernelSpec, a: &Pattern, b: &Pattern) -> Result<KernelValue> {
    match spec {
        KernelSpec::RealGaussian { t } => {
            let (x, y) = (a.as_real()?, b.as_real()?);
            Ok(KernelValue::Real(eval_real_gaussian(&x, &y, *t)?))
        }
        KernelSpec::ComplexGaussian { t } => {
            let (z, w) = (a.as_complex()?, b.as_complex()?);
            Ok(KernelValue::Complex(eval_complex_gaussian(&z, &w, *t)?))
        }
        KernelSpec::InducedReal { inner } => {
            let v = eval_kernel(inner, a, b)?.expect_complex()?;
            Ok(KernelValue::Real(v.re))
        }
        KernelSpec::Scaled { factor, inner } => match eval_kernel(inner, a, b)? {
            KernelValue::Real(v) => Ok(KernelValue::Real(factor * v)),
            KernelValue::Complex(v) => Ok(KernelValue::Complex(factor * v)),
        },
        KernelSpec::Precomputed { gram } => {
            let (i, j) = (a.as_index()?, b.as_index()?);
            let n = gram.n;
            if i >= n {
                return Err(Error::GramIndex { index: i, n });
            }
            if j >= n {
                return Err(Error::GramIndex { index: j, n });
            }
            // Entry (row, col) of the stored gram is κ(points[col], points[row]),
            // so κ(a=points[i], b=points[j]) lives at (j, i).
            let re = gram.entries[j * n + i];
            match &gram.entries_im {
                None => Ok(KernelValue::Real(re)),
                Some(im) => Ok(KernelValue::Complex(Complex64::new(re, im[j * n + i]))),
            }
        }
    }
}

/// `eval_kernel` restricted to real-valued kernels.
pub fn eval_kernel_real(spec: &KernelSpec, a: &Pattern, b: &Pattern) -> Result<f64> {
    eval_kernel(spec, a, b)?.expect_real()
}

/// Build the Gram matrix over `points`, entry `(i, j) = κ(points[j], points[i])`.
///
/// Every entry is computed independently (no mirroring or accumulation), so
/// the result is identical no matter in which order entries are evaluated.
pub fn build_gram(spec: &KernelSpec, points: &[Pattern]) -> Result<Gram> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput {
            context: "gram points",
        });
    }
    let wrap = |row: usize, col: usize, e: Error| Error::GramEntry {
        row,
        col,
        source: Box::new(e),
    };
    if spec.is_complex_valued() {
        let mut g = ComplexGram::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = eval_kernel(spec, &points[j], &points[i])
                    .and_then(KernelValue::expect_complex)
                    .map_err(|e| wrap(i, j, e))?;
                g.set(i, j, v);
            }
        }
        Ok(Gram::Complex(g))
    } else {
        let mut g = RealGram::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = eval_kernel(spec, &points[j], &points[i])
                    .and_then(KernelValue::expect_real)
                    .map_err(|e| wrap(i, j, e))?;
                g.set(i, j, v);
            }
        }
        Ok(Gram::Real(g))
    }
}

/// Brute-force check of the imaginary-part annihilation lemma: returns
/// `|Σ_{n,m} c_n c_m κ^i(z_n, z_m)|`, which vanishes (to rounding) for every
/// Hermitian kernel because `κ^i` is antisymmetric.
pub fn check_imaginary_annihilation(
    spec: &KernelSpec,
    points: &[Pattern],
    coeffs: &[f64],
) -> Result<f64> {
    if !spec.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "annihilation check requires a complex-valued kernel".into(),
        });
    }
    if coeffs.len() != points.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            got: coeffs.len(),
        });
    }
    let mut sum = 0.0;
    for (n, cn) in coeffs.iter().enumerate() {
        for (m, cm) in coeffs.iter().enumerate() {
            let v = eval_kernel(spec, &points[n], &points[m])?.expect_complex()?;
            sum += cn * cm * v.im;
        }
    }
    Ok(sum.abs())
}

/// Randomized positive-definiteness probe: the minimum over `trials` random
/// directions α of the normalized quadratic form `αᵀGα / αᵀα` on the kernel's
/// Gram over `points`. For a positive definite kernel this stays above
/// `-1e-8`; an indefinite Gram is exposed by a clearly negative value.
pub fn check_positive_definite(
    spec: &KernelSpec,
    points: &[Pattern],
    trials: usize,
    seed: u64,
) -> Result<f64> {
    if spec.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "positive-definiteness check applies to real-valued kernels".into(),
        });
    }
    let gram = match build_gram(spec, points)? {
        Gram::Real(g) => g,
        Gram::Complex(_) => unreachable!("real-valued spec produced a complex gram"),
    };
    let n = gram.n();
    let mut rng = SplitRng::for_role(seed, "psd-check");
    let mut min_form = f64::INFINITY;
    for _ in 0..trials {
        let alpha: Vec<f64> = (0..n).map(|_| rng.gaussian()).collect();
        let norm_sq: f64 = alpha.iter().map(|a| a * a).sum();
        if norm_sq < 1e-300 {
            continue;
        }
        let mut form = 0.0;
        for i in 0..n {
            let row = gram.row(i);
            let mut acc = 0.0;
            for j in 0..n {
                acc += row[j] * alpha[j];
            }
            form += alpha[i] * acc;
        }
        min_form = min_form.min(form / norm_sq);
    }
    Ok(min_form)
}

/// Inner product in the complexified RKHS: `⟨Φ̄_ℂ(z), Φ̄_ℂ(z')⟩ = 2 κ_ℝ(q, p)`
/// for `p, q` the `ℝ^{2ν}` images of `z, z'`. Used by the complexification
/// equivalence test.
pub fn complexified_inner(kappa_r: &KernelSpec, p: &[f64], q: &[f64]) -> Result<f64> {
    if kappa_r.is_complex_valued() {
        return Err(Error::DomainMismatch {
            details: "complexified inner product requires a real kernel".into(),
        });
    }
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            got: q.len(),
        });
    }
    if p.len() % 2 != 0 {
        return Err(Error::DomainMismatch {
            details: format!("expected an even dimension, got {}", p.len()),
        });
    }
    let (pp, qq) = (Pattern::real(p.to_vec())?, Pattern::real(q.to_vec())?);
    Ok(2.0 * eval_kernel_real(kappa_r, &qq, &pp)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zv(parts: &[(f64, f64)]) -> ComplexVector {
        ComplexVector::new(parts.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
            .unwrap()
    }

    #[test]
    fn real_gaussian_identical_inputs() {
        assert_eq!(eval_real_gaussian(&[0.0, 0.0], &[0.0, 0.0], 1.0).unwrap(), 1.0);
        assert_eq!(eval_real_gaussian(&[1.0, 2.0], &[1.0, 2.0], 7.3).unwrap(), 1.0);
    }

    #[test]
    fn real_gaussian_unit_distance() {
        let v = eval_real_gaussian(&[0.0], &[1.0], 1.0).unwrap();
        assert!((v - 0.367_879_441_171_442_33).abs() < 1e-15, "{v}");
    }

    #[test]
    fn real_gaussian_rejects_bad_inputs() {
        assert!(matches!(
            eval_real_gaussian(&[0.0], &[1.0, 2.0], 1.0),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            eval_real_gaussian(&[0.0], &[1.0], 0.0),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            eval_real_gaussian(&[0.0], &[1.0], -2.0),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn complex_gaussian_zero_exponent() {
        let z = zv(&[(0.0, 0.0)]);
        let v = eval_complex_gaussian(z.components(), z.components(), 1.0).unwrap();
        assert_eq!(v, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn complex_gaussian_grows_at_conjugate_pair() {
        // (i - (-i))² = -4, so the value is exp(4).
        let z = zv(&[(0.0, 1.0)]);
        let v = eval_complex_gaussian(z.components(), z.components(), 1.0).unwrap();
        assert!((v.re - 54.598_150_033_144_24).abs() < 1e-11, "{v}");
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn complex_gaussian_oscillates() {
        // (1 - conj(i))² = (1+i)² = 2i, so the value is exp(-2i).
        let z = zv(&[(1.0, 0.0)]);
        let w = zv(&[(0.0, 1.0)]);
        let v = eval_complex_gaussian(z.components(), w.components(), 1.0).unwrap();
        assert!((v.re - -0.416_146_836_547_142_4).abs() < 1e-15, "{v}");
        assert!((v.im - -0.909_297_426_825_681_7).abs() < 1e-15, "{v}");
    }

    #[test]
    fn complex_gaussian_signals_range_error() {
        // Large imaginary parts push the exponent real part past +700.
        let z = zv(&[(0.0, 30.0)]);
        let err = eval_complex_gaussian(z.components(), z.components(), 1.0).unwrap_err();
        assert!(matches!(err, Error::ExponentRange { .. }), "{err}");
    }

    #[test]
    fn restriction_to_real_inputs_is_exact() {
        // With y = 0 the exponent is real, so complex and real Gaussians agree
        // bitwise.
        for (a, b, t) in [(0.3, -1.2, 0.7), (2.0, 2.5, 4.0), (-0.1, 0.9, 0.25)] {
            let zc = zv(&[(a, 0.0)]);
            let wc = zv(&[(b, 0.0)]);
            let cg = eval_complex_gaussian(zc.components(), wc.components(), t).unwrap();
            let rg = eval_real_gaussian(&[a], &[b], t).unwrap();
            assert_eq!(cg.re, rg);
            assert_eq!(cg.im, 0.0);
        }
    }

    #[test]
    fn induced_kernel_differs_from_real_rbf() {
        // Witness from the kernel-comparison argument: z = 1, z' = i, t = 1.
        let spec = KernelSpec::induced_real(KernelSpec::complex_gaussian(1.0).unwrap()).unwrap();
        let z = Pattern::from(zv(&[(1.0, 0.0)]));
        let w = Pattern::from(zv(&[(0.0, 1.0)]));
        let induced = eval_kernel_real(&spec, &z, &w).unwrap();
        let rbf = eval_real_gaussian(&[1.0, 0.0], &[0.0, 1.0], 1.0).unwrap();
        assert!((induced - -0.416_146_836_547_142_4).abs() < 1e-15);
        assert!((rbf - 0.135_335_283_236_612_7).abs() < 1e-15);
        assert!((induced - rbf).abs() > 0.1);
    }

    #[test]
    fn eval_kernel_dispatch() {
        let z = Pattern::from(zv(&[(1.0, 0.0)]));
        let w = Pattern::from(zv(&[(0.0, 1.0)]));
        let induced =
            KernelSpec::induced_real(KernelSpec::complex_gaussian(1.0).unwrap()).unwrap();
        assert!(
            (eval_kernel_real(&induced, &z, &w).unwrap() - -0.416_146_836_547_142_4).abs()
                < 1e-15
        );

        let scaled = KernelSpec::scaled(2.0, induced).unwrap();
        let zero = Pattern::from(zv(&[(0.0, 0.0)]));
        assert_eq!(eval_kernel_real(&scaled, &zero, &zero).unwrap(), 2.0);

        let rg = KernelSpec::real_gaussian(1.0).unwrap();
        let x = Pattern::real(vec![0.0]).unwrap();
        let y = Pattern::real(vec![1.0]).unwrap();
        assert!(
            (eval_kernel_real(&rg, &x, &y).unwrap() - 0.367_879_441_171_442_33).abs() < 1e-15
        );
    }

    #[test]
    fn real_kernel_accepts_complex_pattern_via_embedding() {
        let rg = KernelSpec::real_gaussian(0.5).unwrap();
        let z = Pattern::from(zv(&[(1.0, -2.0)]));
        let x = Pattern::real(vec![1.0, -2.0]).unwrap();
        assert_eq!(
            eval_kernel_real(&rg, &z, &x).unwrap(),
            eval_kernel_real(&rg, &x, &x).unwrap()
        );
    }

    #[test]
    fn complex_kernel_rejects_odd_real_pattern() {
        let cg = KernelSpec::complex_gaussian(1.0).unwrap();
        let x = Pattern::real(vec![1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(
            eval_kernel(&cg, &x, &x),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn gram_duplicated_point_is_all_ones() {
        let spec = KernelSpec::real_gaussian(1.0).unwrap();
        let pts = vec![
            Pattern::real(vec![0.0]).unwrap(),
            Pattern::real(vec![0.0]).unwrap(),
        ];
        let g = build_gram(&spec, &pts).unwrap();
        let g = g.as_real().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(g.get(i, j), 1.0);
            }
        }
    }

    #[test]
    fn complex_gram_is_hermitian_and_induced_matches() {
        let spec = KernelSpec::complex_gaussian(1.0).unwrap();
        let pts = vec![
            Pattern::from(zv(&[(1.0, 0.0)])),
            Pattern::from(zv(&[(0.0, 1.0)])),
        ];
        let g = build_gram(&spec, &pts).unwrap();
        let g = g.as_complex().unwrap();
        let off = g.get(0, 1);
        assert!((off.re - -0.416_146_836_547_142_4).abs() < 1e-15);
        assert_eq!(g.get(1, 0), off.conj());

        let ind = KernelSpec::induced_real(spec).unwrap();
        let gi = build_gram(&ind, &pts).unwrap();
        let gi = gi.as_real().unwrap();
        assert_eq!(gi.get(0, 1), off.re);
        assert_eq!(gi.get(0, 1), gi.get(1, 0));
    }

    #[test]
    fn gram_error_carries_offending_entry() {
        let spec = KernelSpec::complex_gaussian(1.0).unwrap();
        let pts = vec![
            Pattern::from(zv(&[(0.0, 0.0)])),
            Pattern::from(zv(&[(0.0, 30.0)])),
        ];
        match build_gram(&spec, &pts) {
            Err(Error::GramEntry { row, col, source }) => {
                assert!(row == 1 || col == 1, "({row},{col})");
                assert!(matches!(*source, Error::ExponentRange { .. }));
            }
            other => panic!("expected GramEntry error, got {other:?}"),
        }
    }

    #[test]
    fn annihilation_single_point_is_zero() {
        let spec = KernelSpec::complex_gaussian(1.0).unwrap();
        let pts = vec![Pattern::from(zv(&[(0.0, 0.0)]))];
        assert_eq!(check_imaginary_annihilation(&spec, &pts, &[1.0]).unwrap(), 0.0);
    }

    #[test]
    fn annihilation_two_points() {
        let spec = KernelSpec::complex_gaussian(1.0).unwrap();
        let pts = vec![
            Pattern::from(zv(&[(1.0, 0.0)])),
            Pattern::from(zv(&[(0.0, 1.0)])),
        ];
        let v = check_imaginary_annihilation(&spec, &pts, &[1.0, 1.0]).unwrap();
        assert!(v < 1e-12, "{v}");
    }

    #[test]
    fn annihilation_random_points() {
        let spec = KernelSpec::complex_gaussian(0.5).unwrap();
        let mut rng = SplitRng::for_role(7, "annihilation");
        let pts: Vec<Pattern> = (0..20)
            .map(|_| Pattern::from(zv(&[(rng.gaussian(), rng.gaussian())])))
            .collect();
        let coeffs: Vec<f64> = (0..20).map(|_| rng.gaussian()).collect();
        let v = check_imaginary_annihilation(&spec, &pts, &coeffs).unwrap();
        assert!(v < 1e-10, "{v}");
    }

    #[test]
    fn psd_check_on_gaussian_and_induced() {
        let rbf = KernelSpec::real_gaussian(1.0).unwrap();
        let pts = vec![
            Pattern::real(vec![0.0]).unwrap(),
            Pattern::real(vec![1.0]).unwrap(),
        ];
        assert!(check_positive_definite(&rbf, &pts, 100, 1).unwrap() >= 0.0);

        let ind = KernelSpec::induced_real(KernelSpec::complex_gaussian(1.0).unwrap()).unwrap();
        let mut rng = SplitRng::for_role(11, "psd-points");
        let zpts: Vec<Pattern> = (0..30)
            .map(|_| Pattern::from(zv(&[(rng.gaussian(), rng.gaussian())])))
            .collect();
        let v = check_positive_definite(&ind, &zpts, 500, 11).unwrap();
        assert!(v >= -1e-8, "{v}");
    }

    #[test]
    fn psd_check_detects_indefinite_gram() {
        // Eigenvalues {3, -1}; the probe must go clearly negative.
        let gram = Gram::Real(RealGram::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap());
        let spec = KernelSpec::precomputed(gram);
        let pts = vec![Pattern::Index(0), Pattern::Index(1)];
        let v = check_positive_definite(&spec, &pts, 100, 5).unwrap();
        assert!(v < -0.9, "{v}");
    }

    #[test]
    fn precomputed_index_out_of_range() {
        let gram = Gram::Real(RealGram::from_rows(&[vec![1.0]]).unwrap());
        let spec = KernelSpec::precomputed(gram);
        assert!(matches!(
            eval_kernel(&spec, &Pattern::Index(0), &Pattern::Index(3)),
            Err(Error::GramIndex { index: 3, n: 1 })
        ));
    }

    #[test]
    fn complexified_inner_values() {
        let rg = KernelSpec::real_gaussian(1.0).unwrap();
        let p = [0.25, -0.5];
        assert_eq!(complexified_inner(&rg, &p, &p).unwrap(), 2.0);
        let v = complexified_inner(&rg, &[0.0, 0.0], &[1.0, 0.0]).unwrap();
        assert!((v - 0.735_758_882_342_884_6).abs() < 1e-15, "{v}");
        let rg2 = KernelSpec::real_gaussian(2.0).unwrap();
        let v = complexified_inner(&rg2, &[0.0, 0.0], &[0.0, 1.0]).unwrap();
        assert!((v - 0.270_670_566_473_225_4).abs() < 1e-15, "{v}");
    }

    #[test]
    fn kernel_spec_json_round_trip_and_unknown_kind() {
        let spec = KernelSpec::scaled(
            2.0,
            KernelSpec::induced_real(KernelSpec::complex_gaussian(0.25).unwrap()).unwrap(),
        )
        .unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"kind\":\"scaled\""));
        let back: KernelSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);

        let bad = r#"{"kind":"sigmoid","t":1.0}"#;
        assert!(serde_json::from_str::<KernelSpec>(bad).is_err());
    }

    #[test]
    fn finite_invariants_enforced() {
        assert!(ComplexVector::new(vec![Complex64::new(f64::NAN, 0.0)]).is_err());
        assert!(Pattern::real(vec![f64::INFINITY]).is_err());
        assert!(KernelSpec::real_gaussian(f64::NAN).is_err());
        assert!(KernelSpec::scaled(0.0, KernelSpec::real_gaussian(1.0).unwrap()).is_err());
        assert!(
            KernelSpec::induced_real(KernelSpec::real_gaussian(1.0).unwrap()).is_err(),
            "induced_real must reject real-valued inner kernels"
        );
    }
}
