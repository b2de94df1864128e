//! Deterministic generators for the experiment benchmarks.
//!
//! All generators are pure functions of their config (including the seed);
//! independent roles draw from independent streams, so e.g. turning impulses
//! off does not shift the Gaussian noise draws. The nonlinear channel is the
//! usual 5-tap FIR followed by a memoryless quadratic term, observed in white
//! circular Gaussian noise:
//!
//! `t(n) = Σ_{k=1..5} h(k) s(n-k+1)`, `x(n) = t(n) + q·t²(n)`, `y(n) = x(n) + w(n)`.
//!
//! "Noise level" is interpreted as an SNR in dB: the complex noise power is
//! `mean|x|² / 10^(snr/10)`, split evenly between components.

use crate::csvm::QuaternaryLabel;
use crate::csvr::ComplexRegressionSample;
use crate::error::{Error, Result};
use crate::kernels::ComplexVector;
use crate::rng::SplitRng;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Serialize an SNR field where `+∞` (noiseless) maps to JSON `null`.
mod snr_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_some(v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

/// Unnormalized complex sinc `sin(z)/z`, with the removable singularity
/// patched to 1 for `|z| < 1e-8`.
pub fn complex_sinc(z: Complex64) -> Result<Complex64> {
    if z.im.abs() > 700.0 {
        return Err(Error::ExponentRange { exponent: z.im });
    }
    if z.norm() < 1e-8 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok(z.sin() / z)
}

/// Grid regression benchmark: sinc samples on a rows×cols grid corrupted by
/// Gaussian noise plus sparse impulses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SincGridConfig {
    pub rows: usize,
    pub cols: usize,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    /// SNR of the Gaussian component in dB; `+∞` (JSON `null`) disables noise.
    #[serde(with = "snr_serde")]
    pub noise_snr_db: f64,
    /// Per-point impulse probability.
    pub impulse_prob: f64,
    /// Impulse magnitude as a multiple of the clean-signal RMS.
    pub impulse_scale: f64,
    pub seed: u64,
}

impl SincGridConfig {
    /// The 33×9 grid over [-4, 4] × [-1, 1] at 15 dB with 5% impulses of
    /// 5× signal RMS.
    pub fn paper_default(seed: u64) -> Self {
        SincGridConfig {
            rows: 9,
            cols: 33,
            x_range: (-4.0, 4.0),
            y_range: (-1.0, 1.0),
            noise_snr_db: 15.0,
            impulse_prob: 0.05,
            impulse_scale: 5.0,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows * self.cols == 0 {
            return Err(Error::EmptyInput { context: "grid" });
        }
        if !(self.x_range.0 < self.x_range.1) || !(self.y_range.0 < self.y_range.1) {
            return Err(Error::InvalidParameter {
                name: "range",
                value: self.x_range.1 - self.x_range.0,
            });
        }
        if !(0.0..=1.0).contains(&self.impulse_prob) {
            return Err(Error::InvalidParameter {
                name: "impulse_prob",
                value: self.impulse_prob,
            });
        }
        if !(self.impulse_scale > 0.0) {
            return Err(Error::InvalidParameter {
                name: "impulse_scale",
                value: self.impulse_scale,
            });
        }
        Ok(())
    }
}

fn lerp(lo: f64, hi: f64, k: usize, count: usize) -> f64 {
    if count <= 1 {
        return 0.5 * (lo + hi);
    }
    lo + (hi - lo) * k as f64 / (count - 1) as f64
}

/// Generate `(train, clean)` sinc grids: identical inputs, with the train
/// targets carrying noise and impulses. Deterministic in the seed.
pub fn gen_sinc_grid(
    cfg: &SincGridConfig,
) -> Result<(Vec<ComplexRegressionSample>, Vec<ComplexRegressionSample>)> {
    cfg.validate()?;
    let mut clean = Vec::with_capacity(cfg.rows * cfg.cols);
    for j in 0..cfg.rows {
        let y = lerp(cfg.y_range.0, cfg.y_range.1, j, cfg.rows);
        for k in 0..cfg.cols {
            let x = lerp(cfg.x_range.0, cfg.x_range.1, k, cfg.cols);
            let z = Complex64::new(x, y);
            clean.push(ComplexRegressionSample::new(
                ComplexVector::scalar(z)?,
                complex_sinc(z)?,
            ));
        }
    }
    let signal_power = clean.iter().map(|s| s.target.norm_sqr()).sum::<f64>() / clean.len() as f64;
    let rms = signal_power.sqrt();

    let mut train = clean.clone();
    if cfg.noise_snr_db.is_finite() {
        let var = signal_power / 10f64.powf(cfg.noise_snr_db / 10.0);
        let mut noise = SplitRng::for_role(cfg.seed, "sinc-noise");
        for s in &mut train {
            s.target += noise.complex_circular(var);
        }
    }
    if cfg.impulse_prob > 0.0 {
        let mut imp = SplitRng::for_role(cfg.seed, "sinc-impulse");
        for s in &mut train {
            if imp.uniform() < cfg.impulse_prob {
                let phase = imp.uniform_in(0.0, std::f64::consts::TAU);
                s.target += Complex64::from_polar(cfg.impulse_scale * rms, phase);
            }
        }
    }
    Ok((train, clean))
}

/// The paper's 5-tap channel
/// `h(k) = 0.432 (1 + cos(2π(k-3)/5) - (1 + cos(2π(k-3)/10)) i)`, k = 1..5.
pub fn default_taps() -> [Complex64; 5] {
    std::array::from_fn(|idx| {
        let k = (idx + 1) as f64;
        let re = 0.432 * (1.0 + (std::f64::consts::TAU * (k - 3.0) / 5.0).cos());
        let im = -0.432 * (1.0 + (std::f64::consts::TAU * (k - 3.0) / 10.0).cos());
        Complex64::new(re, im)
    })
}

/// Source `s(n) = scale·(√(1-ρ²) X(n) + iρ Y(n))` with X, Y i.i.d. standard
/// Gaussian; circular at ρ = √2/2, highly non-circular near ρ ∈ {0, 1}.
pub fn gen_source(n: usize, rho: f64, scale: f64, seed: u64) -> Result<Vec<Complex64>> {
    let mut rng = SplitRng::for_role(seed, "source");
    gen_source_with(&mut rng, n, rho, scale)
}

pub fn gen_source_with(
    rng: &mut SplitRng,
    n: usize,
    rho: f64,
    scale: f64,
) -> Result<Vec<Complex64>> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::InvalidParameter {
            name: "rho",
            value: rho,
        });
    }
    let re_gain = scale * (1.0 - rho * rho).sqrt();
    let im_gain = scale * rho;
    Ok((0..n)
        .map(|_| {
            let x = rng.gaussian();
            let y = rng.gaussian();
            Complex64::new(re_gain * x, im_gain * y)
        })
        .collect())
}

/// `|E[s²]| / E[|s|²]`: ≈ 0 for a circular source, → 1 as ρ → {0, 1}.
pub fn circularity_ratio(xs: &[Complex64]) -> f64 {
    let pseudo: Complex64 = xs.iter().map(|s| s * s).sum();
    let power: f64 = xs.iter().map(|s| s.norm_sqr()).sum();
    pseudo.norm() / power
}

/// Empirical SNR of `noisy` against `clean` in dB.
pub fn measure_snr_db(clean: &[Complex64], noisy: &[Complex64]) -> f64 {
    let signal: f64 = clean.iter().map(|s| s.norm_sqr()).sum();
    let noise: f64 = clean
        .iter()
        .zip(noisy)
        .map(|(c, n)| (n - c).norm_sqr())
        .sum();
    10.0 * (signal / noise.max(1e-300)).log10()
}

/// All intermediate signals of one channel run.
pub struct ChannelSignals {
    pub source: Vec<Complex64>,
    /// FIR output t(n).
    pub linear: Vec<Complex64>,
    /// Nonlinear channel output x(n) before noise.
    pub clean: Vec<Complex64>,
    /// Observed y(n) = x(n) + noise.
    pub observed: Vec<Complex64>,
}

/// Run the FIR + quadratic channel over `source` and corrupt the output at
/// `snr_db` (`+∞` leaves it untouched). The source is zero-padded on the left.
pub fn run_channel(
    source: &[Complex64],
    taps: &[Complex64; 5],
    q: Complex64,
    snr_db: f64,
    noise_rng: &mut SplitRng,
) -> ChannelSignals {
    let n = source.len();
    let mut linear = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, h) in taps.iter().enumerate() {
            // h(k+1)·s(n-k), writing s(n-k+1) with k = 1..5 as s(n-(k-1)).
            if i >= k {
                acc += h * source[i - k];
            }
        }
        linear.push(acc);
    }
    let clean: Vec<Complex64> = linear.iter().map(|t| t + q * t * t).collect();
    let observed = if snr_db.is_finite() {
        let power = clean.iter().map(|x| x.norm_sqr()).sum::<f64>() / n as f64;
        let var = power / 10f64.powf(snr_db / 10.0);
        clean
            .iter()
            .map(|x| x + noise_rng.complex_circular(var))
            .collect()
    } else {
        clean.clone()
    };
    ChannelSignals {
        source: source.to_vec(),
        linear,
        clean,
        observed,
    }
}

/// Channel benchmark configuration. `delay` only matters for equalization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelConfig {
    pub taps: [(f64, f64); 5],
    /// Quadratic nonlinearity coefficient.
    pub nonlin_q: (f64, f64),
    /// Circularity dial ρ ∈ [0, 1]; √2/2 is circular.
    pub rho: f64,
    #[serde(with = "snr_serde")]
    pub snr_db: f64,
    pub filter_len: usize,
    pub delay: usize,
    pub n_train: usize,
    pub n_test: usize,
    pub seed: u64,
}

impl ChannelConfig {
    /// §VI-B protocol: q = 0.15 - 0.1i, circular source, 15 dB, L = 5,
    /// 150 train / 600 test.
    pub fn identification_default(seed: u64) -> Self {
        ChannelConfig {
            taps: default_taps().map(|h| (h.re, h.im)),
            nonlin_q: (0.15, -0.1),
            rho: std::f64::consts::FRAC_1_SQRT_2,
            snr_db: 15.0,
            filter_len: 5,
            delay: 0,
            n_train: 150,
            n_test: 600,
            seed,
        }
    }

    /// §VI-C protocol: q = 0.1 - 0.15i, source scale 0.30, L = 5, D = 2.
    pub fn equalization_default(seed: u64) -> Self {
        ChannelConfig {
            nonlin_q: (0.1, -0.15),
            delay: 2,
            ..Self::identification_default(seed)
        }
    }

    pub fn taps_complex(&self) -> [Complex64; 5] {
        self.taps.map(|(re, im)| Complex64::new(re, im))
    }

    pub fn q_complex(&self) -> Complex64 {
        Complex64::new(self.nonlin_q.0, self.nonlin_q.1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.filter_len == 0 {
            return Err(Error::InvalidParameter {
                name: "filter_len",
                value: 0.0,
            });
        }
        if !(0.0..=1.0).contains(&self.rho) {
            return Err(Error::InvalidParameter {
                name: "rho",
                value: self.rho,
            });
        }
        if self.n_train == 0 || self.n_test == 0 {
            return Err(Error::EmptyInput {
                context: "channel sample counts",
            });
        }
        Ok(())
    }

    /// Transient samples discarded before windowing.
    fn warmup(&self) -> usize {
        self.filter_len.max(5) + self.delay
    }
}

/// Windowed channel dataset. Train targets are the noisy observations; test
/// targets are the clean references the experiments measure MSE against
/// (channel output x(n) for identification, source s(n) for equalization).
pub struct ChannelData {
    pub train: Vec<ComplexRegressionSample>,
    pub test: Vec<ComplexRegressionSample>,
    /// Noisy observations at the test indices, for diagnostics.
    pub test_observed: Vec<Complex64>,
}

fn window_ascending(signal: &[Complex64], end: usize, len: usize) -> Result<ComplexVector> {
    ComplexVector::new(signal[end + 1 - len..=end].to_vec())
}

fn window_descending(signal: &[Complex64], start: usize, len: usize) -> Result<ComplexVector> {
    ComplexVector::new((0..len).map(|k| signal[start - k]).collect())
}

/// Identification pairs `((s(n-L+1), ..., s(n)), y(n))` for `n_train` train
/// and `n_test` test indices after warm-up; test targets are the clean x(n).
pub fn channel_identification_data(cfg: &ChannelConfig) -> Result<ChannelData> {
    cfg.validate()?;
    let warmup = cfg.warmup();
    let total = warmup + cfg.n_train + cfg.n_test;
    let mut source_rng = SplitRng::for_role(cfg.seed, "chan-source");
    let source = gen_source_with(&mut source_rng, total, cfg.rho, 1.0)?;
    let mut noise_rng = SplitRng::for_role(cfg.seed, "chan-noise");
    let sig = run_channel(
        &source,
        &cfg.taps_complex(),
        cfg.q_complex(),
        cfg.snr_db,
        &mut noise_rng,
    );

    let mut train = Vec::with_capacity(cfg.n_train);
    let mut test = Vec::with_capacity(cfg.n_test);
    let mut test_observed = Vec::with_capacity(cfg.n_test);
    for i in 0..cfg.n_train + cfg.n_test {
        let n = warmup + i;
        let input = window_ascending(&sig.source, n, cfg.filter_len)?;
        if i < cfg.n_train {
            train.push(ComplexRegressionSample::new(input, sig.observed[n]));
        } else {
            test.push(ComplexRegressionSample::new(input, sig.clean[n]));
            test_observed.push(sig.observed[n]);
        }
    }
    Ok(ChannelData {
        train,
        test,
        test_observed,
    })
}

/// Equalization pairs `((y(n+D), y(n+D-1), ..., y(n+D-L+1)), s(n))` with
/// source scale 0.30; targets are the clean source for both splits.
pub fn channel_equalization_data(cfg: &ChannelConfig) -> Result<ChannelData> {
    cfg.validate()?;
    let warmup = cfg.warmup();
    let total = warmup + cfg.n_train + cfg.n_test + cfg.delay;
    let mut source_rng = SplitRng::for_role(cfg.seed, "chan-source");
    let source = gen_source_with(&mut source_rng, total, cfg.rho, 0.30)?;
    let mut noise_rng = SplitRng::for_role(cfg.seed, "chan-noise");
    let sig = run_channel(
        &source,
        &cfg.taps_complex(),
        cfg.q_complex(),
        cfg.snr_db,
        &mut noise_rng,
    );

    let mut train = Vec::with_capacity(cfg.n_train);
    let mut test = Vec::with_capacity(cfg.n_test);
    let mut test_observed = Vec::with_capacity(cfg.n_test);
    for i in 0..cfg.n_train + cfg.n_test {
        let n = warmup + i;
        let input = window_descending(&sig.observed, n + cfg.delay, cfg.filter_len)?;
        let pair = ComplexRegressionSample::new(input, sig.source[n]);
        if i < cfg.n_train {
            train.push(pair);
        } else {
            test_observed.push(sig.observed[n]);
            test.push(pair);
        }
    }
    Ok(ChannelData {
        train,
        test,
        test_observed,
    })
}

/// Synthetic quaternary benchmark: one circular Gaussian blob per class.
/// `spread` is the RMS modulus of the perturbation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlobConfig {
    /// Class centers in [++, +-, -+, --] order.
    pub centers: [(f64, f64); 4],
    pub spread: f64,
    pub n_per_class: usize,
    pub seed: u64,
}

impl BlobConfig {
    /// Blobs at ±2 ± 2i.
    pub fn default_centers(spread: f64, n_per_class: usize, seed: u64) -> Self {
        BlobConfig {
            centers: [(2.0, 2.0), (2.0, -2.0), (-2.0, 2.0), (-2.0, -2.0)],
            spread,
            n_per_class,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.centers[i] == self.centers[j] {
                    return Err(Error::InvalidParameter {
                        name: "centers",
                        value: i as f64,
                    });
                }
            }
        }
        if self.spread < 0.0 {
            return Err(Error::InvalidParameter {
                name: "spread",
                value: self.spread,
            });
        }
        if self.n_per_class == 0 {
            return Err(Error::EmptyInput {
                context: "n_per_class",
            });
        }
        Ok(())
    }
}

pub fn gen_quaternary_blobs(cfg: &BlobConfig) -> Result<Vec<(ComplexVector, QuaternaryLabel)>> {
    cfg.validate()?;
    let mut rng = SplitRng::for_role(cfg.seed, "blobs");
    let mut out = Vec::with_capacity(4 * cfg.n_per_class);
    for (idx, label) in QuaternaryLabel::ALL.into_iter().enumerate() {
        let center = Complex64::new(cfg.centers[idx].0, cfg.centers[idx].1);
        for _ in 0..cfg.n_per_class {
            let noise = if cfg.spread > 0.0 {
                rng.complex_circular(cfg.spread * cfg.spread)
            } else {
                Complex64::new(0.0, 0.0)
            };
            out.push((ComplexVector::scalar(center + noise)?, label));
        }
    }
    Ok(out)
}
