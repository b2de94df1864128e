//! Real-valued dual solvers: C-SVM classification and ε-SVR regression.
//!
//! Both duals carry the box bound `C/N` (not `C`, as several libraries use)
//! and a single equality constraint, and both are solved by sequential
//! minimal optimization with first-order working-pair selection: the maximal
//! KKT violator on the "up" side is paired with the extreme point on the
//! "down" side (the pair of maximal error gap). Scans alternate between the
//! non-bound set and the full set as in classic SMO; convergence is declared
//! only on a clean full scan.
//!
//! The ε-SVR dual is solved over the 2N variables `(â, a)`; the identity
//! `a_n·â_n = 0` is maintained by construction (a post-update reduction
//! subtracts `min(a_n, â_n)` from both, which leaves the gradient and the
//! equality constraint untouched and never worsens the objective).
//!
//! [`solve_svr_bruteforce`] / [`solve_svc_bruteforce`] provide an exhaustive
//! grid oracle over the dual feasible box for instances with `n ≤ 6`,
//! independent of the SMO path, for verification.

use crate::error::{Error, Result};
use crate::kernels::RealGram;
use serde::{Deserialize, Serialize};
use std::cell::Cell;

thread_local! {
    static DUAL_SOLVES: Cell<u64> = const { Cell::new(0) };
}

/// Number of dual solves (SVR or SVC) performed on the current thread.
/// Used by the experiment harness to count solver invocations.
pub fn dual_solves_on_thread() -> u64 {
    DUAL_SOLVES.with(|c| c.get())
}

fn bump_dual_solves() {
    DUAL_SOLVES.with(|c| c.set(c.get() + 1));
}

/// ε-SVR solver parameters. `max_passes = 0` means auto (10·N sweeps, one
/// sweep being up to `n_vars` pair updates); a stalled solver terminates
/// early as non-converged.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SvrParams {
    pub c: f64,
    pub epsilon: f64,
    pub kkt_tol: f64,
    pub max_passes: usize,
}

impl SvrParams {
    pub fn new(c: f64, epsilon: f64) -> Self {
        SvrParams {
            c,
            epsilon,
            kkt_tol: 1e-3,
            max_passes: 0,
        }
    }

    pub fn with_kkt_tol(mut self, kkt_tol: f64) -> Self {
        self.kkt_tol = kkt_tol;
        self
    }

    pub fn with_max_passes(mut self, max_passes: usize) -> Self {
        self.max_passes = max_passes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0) || !self.c.is_finite() {
            return Err(Error::InvalidParameter {
                name: "C",
                value: self.c,
            });
        }
        if !(self.epsilon >= 0.0) || !self.epsilon.is_finite() {
            return Err(Error::InvalidParameter {
                name: "epsilon",
                value: self.epsilon,
            });
        }
        if !(self.kkt_tol > 0.0) || !self.kkt_tol.is_finite() {
            return Err(Error::InvalidParameter {
                name: "kkt_tol",
                value: self.kkt_tol,
            });
        }
        Ok(())
    }
}

/// C-SVM solver parameters; see [`SvrParams`] for the `max_passes` convention.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SvcParams {
    pub c: f64,
    pub kkt_tol: f64,
    pub max_passes: usize,
}

impl SvcParams {
    pub fn new(c: f64) -> Self {
        SvcParams {
            c,
            kkt_tol: 1e-3,
            max_passes: 0,
        }
    }

    pub fn with_kkt_tol(mut self, kkt_tol: f64) -> Self {
        self.kkt_tol = kkt_tol;
        self
    }

    pub fn with_max_passes(mut self, max_passes: usize) -> Self {
        self.max_passes = max_passes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0) || !self.c.is_finite() {
            return Err(Error::InvalidParameter {
                name: "C",
                value: self.c,
            });
        }
        if !(self.kkt_tol > 0.0) || !self.kkt_tol.is_finite() {
            return Err(Error::InvalidParameter {
                name: "kkt_tol",
                value: self.kkt_tol,
            });
        }
        Ok(())
    }
}

/// Fitted ε-SVR dual solution. `beta[n] = â_n - a_n`; the slack variables and
/// their multipliers are eliminated by the solver and never materialized.
///
/// Invariants at return: `|Σ β_n| ≤ kkt_tol·N` and `|β_n| ≤ C/N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SvrModel {
    pub beta: Vec<f64>,
    pub bias: f64,
    pub sv_indices: Vec<usize>,
    pub objective: f64,
    pub converged: bool,
    pub params: SvrParams,
}

impl SvrModel {
    /// `f(x) = Σ β_n K(x_n, x) + c` given the column `(K(x_n, x))_n`.
    pub fn predict_from_column(&self, column: &[f64]) -> f64 {
        let mut acc = self.bias;
        for &n in &self.sv_indices {
            acc += self.beta[n] * column[n];
        }
        acc
    }

    /// `(|Σ β_n|, max(0, max_n |β_n| - C/N))`.
    pub fn feasibility_violation(&self) -> (f64, f64) {
        let u = self.params.c / self.beta.len() as f64;
        let eq: f64 = self.beta.iter().sum();
        let box_excess = self
            .beta
            .iter()
            .map(|b| (b.abs() - u).max(0.0))
            .fold(0.0, f64::max);
        (eq.abs(), box_excess)
    }
}

/// Fitted C-SVM dual solution with labels in {±1}.
///
/// Invariants at return: `0 ≤ α_n ≤ C/N` and `|Σ α_n d_n| ≤ kkt_tol·N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SvcModel {
    pub alpha: Vec<f64>,
    pub labels: Vec<f64>,
    pub bias: f64,
    pub sv_indices: Vec<usize>,
    pub objective: f64,
    pub converged: bool,
    pub params: SvcParams,
}

impl SvcModel {
    /// Decision value `Σ α_n d_n K(x_n, x) + c` given the kernel column.
    pub fn margin_from_column(&self, column: &[f64]) -> f64 {
        let mut acc = self.bias;
        for &n in &self.sv_indices {
            acc += self.alpha[n] * self.labels[n] * column[n];
        }
        acc
    }

    /// `(|Σ α_n d_n|, max(0, max_n excess over [0, C/N]))`.
    pub fn feasibility_violation(&self) -> (f64, f64) {
        let u = self.params.c / self.alpha.len() as f64;
        let eq: f64 = self.alpha.iter().zip(&self.labels).map(|(a, d)| a * d).sum();
        let box_excess = self
            .alpha
            .iter()
            .map(|a| (-a).max(a - u).max(0.0))
            .fold(0.0, f64::max);
        (eq.abs(), box_excess)
    }
}

fn check_symmetric(gram: &RealGram) -> Result<()> {
    let n = gram.n();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (gram.get(i, j), gram.get(j, i));
            if (a - b).abs() > 1e-12 * 1.0f64.max(a.abs()).max(b.abs()) {
                return Err(Error::NonSymmetricGram { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Shared SMO state for the minimization form
/// `min ½ αᵀQα + pᵀα  s.t.  yᵀα = 0, 0 ≤ α ≤ U`,
/// with `Q(t,u) = y_t y_u K(φ(t), φ(u))`. φ is the identity for C-SVM and the
/// fold `t mod N` for ε-SVR's 2N variables.
struct Smo<'a> {
    gram: &'a RealGram,
    y: Vec<f64>,
    upper: f64,
    kkt_tol: f64,
    mirrored: bool,
    n_samples: usize,
    alpha: Vec<f64>,
    grad: Vec<f64>,
}

impl<'a> Smo<'a> {
    #[inline]
    fn phi(&self, t: usize) -> usize {
        if self.mirrored && t >= self.n_samples {
            t - self.n_samples
        } else {
            t
        }
    }

    /// Maximal-violating-pair selection over the full set or the free set.
    ///
    /// Exact value ties are broken by sample index: an analytic step
    /// equalizes its pair's violation values exactly, and for ε-SVR a scan-
    /// order tie-break would not be invariant under target negation (the two
    /// variable blocks swap roles), breaking the conjugation symmetry.
    fn select(&self, scan_all: bool) -> Option<(usize, usize, f64)> {
        let n_vars = self.y.len();
        let mut up: Option<(usize, f64)> = None;
        let mut low: Option<(usize, f64)> = None;
        for t in 0..n_vars {
            let a = self.alpha[t];
            if !scan_all && !(a > 0.0 && a < self.upper) {
                continue;
            }
            let yt = self.y[t];
            let v = -yt * self.grad[t];
            let in_up = (yt > 0.0 && a < self.upper) || (yt < 0.0 && a > 0.0);
            let in_low = (yt > 0.0 && a > 0.0) || (yt < 0.0 && a < self.upper);
            if in_up
                && up.map_or(true, |(bt, bv)| v > bv || (v == bv && self.phi(t) < self.phi(bt)))
            {
                up = Some((t, v));
            }
            if in_low
                && low.map_or(true, |(bt, bv)| v < bv || (v == bv && self.phi(t) < self.phi(bt)))
            {
                low = Some((t, v));
            }
        }
        match (up, low) {
            (Some((i, vi)), Some((j, vj))) => Some((i, j, vi - vj)),
            _ => None,
        }
    }

    /// Analytic two-variable step along `(y_i e_i - y_j e_j)`. Returns true
    /// if the iterate moved.
    fn update(&mut self, i: usize, j: usize, gap: f64) -> bool {
        let (pi, pj) = (self.phi(i), self.phi(j));
        let kii = self.gram.get(pi, pi);
        let kjj = self.gram.get(pj, pj);
        let kij = self.gram.get(pi, pj);
        let quad_true = kii + kjj - 2.0 * kij;
        let quad = if quad_true > 1e-12 { quad_true } else { 1e-12 };

        let (yi, yj) = (self.y[i], self.y[j]);
        let head_i = if yi > 0.0 {
            self.upper - self.alpha[i]
        } else {
            self.alpha[i]
        };
        let head_j = if yj > 0.0 {
            self.alpha[j]
        } else {
            self.upper - self.alpha[j]
        };
        let head = head_i.min(head_j);
        let mut s = gap / quad;
        let clipped = s >= head;
        if clipped {
            s = head;
        }
        if s <= 0.0 {
            return false;
        }

        // Dual objective is non-decreasing: the minimization objective moves
        // by -s·gap + ½ s² quad_true ≤ 0 on a PSD gram.
        debug_assert!(
            -s * gap + 0.5 * s * s * quad_true <= 1e-9 * (1.0 + gap.abs()),
            "dual objective decreased: step {s}, gap {gap}, quad {quad_true}"
        );

        if clipped && head == head_i {
            self.alpha[i] = if yi > 0.0 { self.upper } else { 0.0 };
        } else {
            self.alpha[i] = (self.alpha[i] + yi * s).clamp(0.0, self.upper);
        }
        if clipped && head == head_j {
            self.alpha[j] = if yj > 0.0 { 0.0 } else { self.upper };
        } else {
            self.alpha[j] = (self.alpha[j] - yj * s).clamp(0.0, self.upper);
        }

        let row_i = self.gram.row(pi);
        let row_j = self.gram.row(pj);
        let n = self.n_samples;
        for t in 0..n {
            self.grad[t] += s * self.y[t] * (row_i[t] - row_j[t]);
        }
        if self.mirrored {
            for t in n..2 * n {
                self.grad[t] += s * self.y[t] * (row_i[t - n] - row_j[t - n]);
            }
            self.reduce(pi);
            self.reduce(pj);
        }
        true
    }

    /// Restore `â_k · a_k = 0`. Subtracting the common mass from both
    /// variables leaves the gradient and the equality constraint unchanged
    /// (the Q columns of the pair cancel) and lowers ε Σ(â + a).
    fn reduce(&mut self, k: usize) {
        let ahat = self.alpha[k];
        let a = self.alpha[self.n_samples + k];
        if ahat > 0.0 && a > 0.0 {
            if ahat <= a {
                self.alpha[k] = 0.0;
                self.alpha[self.n_samples + k] = a - ahat;
            } else {
                self.alpha[k] = ahat - a;
                self.alpha[self.n_samples + k] = 0.0;
            }
        }
    }

    fn run(&mut self, max_sweeps: usize) -> bool {
        let n_vars = self.y.len();
        let budget = max_sweeps.saturating_mul(n_vars).max(256);
        let mut steps = 0usize;
        let mut scan_all = true;
        loop {
            match self.select(scan_all) {
                Some((i, j, gap)) if gap > self.kkt_tol => {
                    if self.update(i, j, gap) {
                        steps += 1;
                        if steps >= budget {
                            return false;
                        }
                        scan_all = false;
                    } else if scan_all {
                        // Deterministic selection would re-pick the same stuck
                        // pair forever; report the best iterate instead.
                        return false;
                    } else {
                        scan_all = true;
                    }
                }
                _ => {
                    if scan_all {
                        return true;
                    }
                    scan_all = true;
                }
            }
        }
    }

    /// Dual (maximization) objective value at the current iterate.
    fn objective(&self, p: &[f64]) -> f64 {
        let nz: Vec<usize> = (0..self.y.len()).filter(|&t| self.alpha[t] != 0.0).collect();
        let mut quad = 0.0;
        for &t in &nz {
            let row = self.gram.row(self.phi(t));
            let at = self.alpha[t] * self.y[t];
            for &u in &nz {
                quad += at * self.alpha[u] * self.y[u] * row[self.phi(u)];
            }
        }
        let lin: f64 = nz.iter().map(|&t| p[t] * self.alpha[t]).sum();
        -(0.5 * quad + lin)
    }
}

fn resolve_sweeps(max_passes: usize, n: usize) -> usize {
    if max_passes == 0 {
        10 * n.max(1)
    } else {
        max_passes
    }
}

/// Solve the ε-SVR dual over `gram` (already the effective kernel matrix).
///
/// Returns the best iterate with `converged = false` when the KKT tolerance
/// was not reached within the sweep budget.
pub fn solve_svr_dual(gram: &RealGram, targets: &[f64], params: &SvrParams) -> Result<SvrModel> {
    params.validate()?;
    let n = gram.n();
    if targets.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: targets.len(),
        });
    }
    if !targets.iter().all(|d| d.is_finite()) {
        return Err(Error::NonFinite { context: "targets" });
    }
    check_symmetric(gram)?;

    let upper = params.c / n as f64;
    let mut y = vec![1.0; 2 * n];
    let mut p = vec![0.0; 2 * n];
    for k in 0..n {
        y[n + k] = -1.0;
        p[k] = params.epsilon - targets[k];
        p[n + k] = params.epsilon + targets[k];
    }
    let mut smo = Smo {
        gram,
        y,
        upper,
        kkt_tol: params.kkt_tol,
        mirrored: true,
        n_samples: n,
        alpha: vec![0.0; 2 * n],
        grad: p.clone(),
    };
    let converged = smo.run(resolve_sweeps(params.max_passes, n));
    let objective = smo.objective(&p);
    let beta: Vec<f64> = (0..n).map(|k| smo.alpha[k] - smo.alpha[n + k]).collect();
    let bias = svr_bias(gram, targets, &beta, params, BiasPolicy::Strict)?;
    let sv_indices: Vec<usize> = (0..n).filter(|&k| beta[k] != 0.0).collect();
    let model = SvrModel {
        beta,
        bias,
        sv_indices,
        objective,
        converged,
        params: *params,
    };
    let (eq, box_excess) = model.feasibility_violation();
    debug_assert!(eq <= params.kkt_tol * n as f64, "equality violation {eq}");
    debug_assert!(box_excess == 0.0, "box violation {box_excess}");
    bump_dual_solves();
    Ok(model)
}

/// Solve the C-SVM dual over `gram` with labels in {±1}.
pub fn solve_svc_dual(gram: &RealGram, labels: &[f64], params: &SvcParams) -> Result<SvcModel> {
    params.validate()?;
    let n = gram.n();
    if labels.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: labels.len(),
        });
    }
    for (k, d) in labels.iter().enumerate() {
        if *d != 1.0 && *d != -1.0 {
            return Err(Error::InvalidLabel { index: k });
        }
    }
    if !labels.contains(&1.0) || !labels.contains(&-1.0) {
        return Err(Error::SingleClass { channel: "labels" });
    }
    check_symmetric(gram)?;

    let upper = params.c / n as f64;
    let p = vec![-1.0; n];
    let mut smo = Smo {
        gram,
        y: labels.to_vec(),
        upper,
        kkt_tol: params.kkt_tol,
        mirrored: false,
        n_samples: n,
        alpha: vec![0.0; n],
        grad: p.clone(),
    };
    let converged = smo.run(resolve_sweeps(params.max_passes, n));
    let objective = smo.objective(&p);
    let alpha = smo.alpha;
    let bias = svc_bias(gram, labels, &alpha, upper, BiasPolicy::Strict)?;
    let sv_indices: Vec<usize> = (0..n).filter(|&k| alpha[k] != 0.0).collect();
    let model = SvcModel {
        alpha,
        labels: labels.to_vec(),
        bias,
        sv_indices,
        objective,
        converged,
        params: *params,
    };
    let (eq, box_excess) = model.feasibility_violation();
    debug_assert!(eq <= params.kkt_tol * n as f64, "equality violation {eq}");
    debug_assert!(box_excess == 0.0, "box violation {box_excess}");
    bump_dual_solves();
    Ok(model)
}

#[derive(Clone, Copy)]
enum BiasPolicy {
    /// Error on a clearly crossed bias interval.
    Strict,
    /// Grid solutions: classify bounds with `margin` slack and accept crossed
    /// intervals (midpoint).
    Lenient { margin: f64 },
}

/// KKT bias for ε-SVR: the average of `d_m - Σ β_n K(x_n, x_m) - ε·sign(β_m)`
/// over unbounded support vectors; when none exist, the midpoint of the bias
/// interval implied by the remaining KKT inequalities. A clearly empty
/// interval reports inconsistent coefficients.
pub fn compute_bias_svr(
    gram: &RealGram,
    targets: &[f64],
    beta: &[f64],
    params: &SvrParams,
) -> Result<f64> {
    params.validate()?;
    if targets.len() != gram.n() || beta.len() != gram.n() {
        return Err(Error::DimensionMismatch {
            expected: gram.n(),
            got: targets.len().max(beta.len()),
        });
    }
    svr_bias(gram, targets, beta, params, BiasPolicy::Strict)
}

fn svr_bias(
    gram: &RealGram,
    targets: &[f64],
    beta: &[f64],
    params: &SvrParams,
    policy: BiasPolicy,
) -> Result<f64> {
    let n = gram.n();
    let u = params.c / n as f64;
    let eps = params.epsilon;
    let margin = match policy {
        BiasPolicy::Strict => 0.0,
        BiasPolicy::Lenient { margin } => margin,
    };
    // f̃(x_m) = Σ_n β_n K(x_n, x_m): entry (m, n) holds κ(x_n, x_m).
    let f_wo_bias = |m: usize| -> f64 {
        let row = gram.row(m);
        beta.iter().zip(row).map(|(b, k)| b * k).sum()
    };

    let mut free_sum = 0.0;
    let mut free_count = 0usize;
    for m in 0..n {
        let b = beta[m].abs();
        if b > margin && b < u - margin {
            free_sum += targets[m] - f_wo_bias(m) - eps * beta[m].signum();
            free_count += 1;
        }
    }
    if free_count > 0 {
        return Ok(free_sum / free_count as f64);
    }

    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for m in 0..n {
        let r = targets[m] - f_wo_bias(m);
        if beta[m] >= u - margin {
            hi = hi.min(r - eps);
        } else if beta[m] <= -(u - margin) {
            lo = lo.max(r + eps);
        } else {
            lo = lo.max(r - eps);
            hi = hi.min(r + eps);
        }
    }
    finish_interval(lo, hi, targets, params.kkt_tol, policy)
}

fn svc_bias(
    gram: &RealGram,
    labels: &[f64],
    alpha: &[f64],
    u: f64,
    policy: BiasPolicy,
) -> Result<f64> {
    let n = gram.n();
    let margin = match policy {
        BiasPolicy::Strict => 0.0,
        BiasPolicy::Lenient { margin } => margin,
    };
    let f_wo_bias = |m: usize| -> f64 {
        let row = gram.row(m);
        (0..n).map(|k| alpha[k] * labels[k] * row[k]).sum()
    };

    let mut free_sum = 0.0;
    let mut free_count = 0usize;
    for m in 0..n {
        if alpha[m] > margin && alpha[m] < u - margin {
            free_sum += labels[m] - f_wo_bias(m);
            free_count += 1;
        }
    }
    if free_count > 0 {
        return Ok(free_sum / free_count as f64);
    }

    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for m in 0..n {
        let f = f_wo_bias(m);
        let at_upper = alpha[m] >= u - margin;
        if labels[m] > 0.0 {
            // d = +1: α = 0 needs f + c ≥ 1; α = U needs f + c ≤ 1.
            if at_upper {
                hi = hi.min(1.0 - f);
            } else {
                lo = lo.max(1.0 - f);
            }
        } else if at_upper {
            lo = lo.max(-1.0 - f);
        } else {
            hi = hi.min(-1.0 - f);
        }
    }
    finish_interval(lo, hi, labels, 1e-3, policy)
}

fn finish_interval(
    lo: f64,
    hi: f64,
    targets: &[f64],
    kkt_tol: f64,
    policy: BiasPolicy,
) -> Result<f64> {
    let scale = 1.0 + targets.iter().fold(0.0f64, |m, d| m.max(d.abs()));
    if let BiasPolicy::Strict = policy {
        if lo > hi + 10.0 * kkt_tol * scale {
            return Err(Error::InconsistentDual { lo, hi });
        }
    }
    if lo.is_finite() && hi.is_finite() {
        Ok(0.5 * (lo + hi))
    } else if lo.is_finite() {
        Ok(lo)
    } else if hi.is_finite() {
        Ok(hi)
    } else {
        Ok(0.0)
    }
}

/// An exhaustive-oracle solution together with its grid-resolution bound on
/// the objective gap (`optimum - oracle ≤ gap_bound`).
#[derive(Clone, Debug)]
pub struct Bruteforce<M> {
    pub model: M,
    pub gap_bound: f64,
}

const BRUTEFORCE_MAX_N: usize = 6;
const BRUTEFORCE_MIN_RES: usize = 50;

fn bruteforce_guards(n: usize, grid_resolution: usize) -> Result<()> {
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::BruteforceTooLarge {
            n,
            max: BRUTEFORCE_MAX_N,
        });
    }
    if grid_resolution < BRUTEFORCE_MIN_RES {
        return Err(Error::GridResolution {
            got: grid_resolution,
            min: BRUTEFORCE_MIN_RES,
        });
    }
    Ok(())
}

/// Axis values `lo..hi` with exact endpoints and values snapped to exact zero
/// where rounding leaves sub-ulp residue.
fn grid_axis(lo: f64, hi: f64, res: usize) -> (Vec<f64>, f64) {
    let h = (hi - lo) / (res - 1) as f64;
    let snap = 1e-12 * hi.abs().max(lo.abs());
    let mut vals: Vec<f64> = (0..res)
        .map(|i| {
            let v = lo + i as f64 * h;
            if v.abs() < snap {
                0.0
            } else {
                v
            }
        })
        .collect();
    vals[0] = lo;
    vals[res - 1] = hi;
    (vals, h)
}

/// Visit every grid point over `n_axes` axes, calling `visit` with the index
/// vector. Lexicographic order, so "first best kept" is deterministic.
fn odometer(n_axes: usize, res: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; n_axes];
    if n_axes == 0 {
        visit(&idx);
        return;
    }
    loop {
        visit(&idx);
        let mut k = n_axes;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < res {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Exhaustive grid search of the ε-SVR dual in the `β` parametrization
/// (`β ∈ [-C/N, C/N]^N`, `Σβ = 0` eliminated through the last variable).
/// Guaranteed within `gap_bound` of the true optimum; entirely independent
/// of the SMO path.
pub fn solve_svr_bruteforce(
    gram: &RealGram,
    targets: &[f64],
    params: &SvrParams,
    grid_resolution: usize,
) -> Result<Bruteforce<SvrModel>> {
    params.validate()?;
    let n = gram.n();
    bruteforce_guards(n, grid_resolution)?;
    if targets.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: targets.len(),
        });
    }
    check_symmetric(gram)?;
    let u = params.c / n as f64;
    let (vals, h) = grid_axis(-u, u, grid_resolution);
    let eps = params.epsilon;

    let objective = |beta: &[f64]| -> f64 {
        let mut lin = 0.0;
        let mut quad = 0.0;
        for i in 0..n {
            lin += targets[i] * beta[i] - eps * beta[i].abs();
            let row = gram.row(i);
            let mut acc = 0.0;
            for j in 0..n {
                acc += row[j] * beta[j];
            }
            quad += beta[i] * acc;
        }
        lin - 0.5 * quad
    };

    let mut beta = vec![0.0; n];
    let mut best_obj = f64::NEG_INFINITY;
    let mut best = vec![0.0; n];
    odometer(n - 1, grid_resolution, |idx| {
        let mut sum = 0.0;
        for k in 0..n - 1 {
            beta[k] = vals[idx[k]];
            sum += beta[k];
        }
        let last = -sum;
        if last.abs() <= u * (1.0 + 1e-12) {
            beta[n - 1] = if last.abs() < 1e-12 * u {
                0.0
            } else {
                last.clamp(-u, u)
            };
            let obj = objective(&beta);
            if obj > best_obj {
                best_obj = obj;
                best.copy_from_slice(&beta);
            }
        }
    });

    let mut grad_bound = 0.0f64;
    for k in 0..n {
        let row_abs: f64 = gram.row(k).iter().map(|v| v.abs()).sum();
        grad_bound = grad_bound.max(targets[k].abs() + eps + u * row_abs);
    }
    let gap_bound = (n.max(2) - 1) as f64 * h * grad_bound;

    let bias = svr_bias(gram, targets, &best, params, BiasPolicy::Lenient { margin: h })?;
    let sv_indices: Vec<usize> = (0..n).filter(|&k| best[k] != 0.0).collect();
    Ok(Bruteforce {
        model: SvrModel {
            beta: best,
            bias,
            sv_indices,
            objective: best_obj,
            converged: true,
            params: *params,
        },
        gap_bound,
    })
}

/// Exhaustive grid search of the C-SVM dual (`α ∈ [0, C/N]^N`, `Σ α d = 0`
/// eliminated through the last variable).
pub fn solve_svc_bruteforce(
    gram: &RealGram,
    labels: &[f64],
    params: &SvcParams,
    grid_resolution: usize,
) -> Result<Bruteforce<SvcModel>> {
    params.validate()?;
    let n = gram.n();
    bruteforce_guards(n, grid_resolution)?;
    if labels.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: labels.len(),
        });
    }
    for (k, d) in labels.iter().enumerate() {
        if *d != 1.0 && *d != -1.0 {
            return Err(Error::InvalidLabel { index: k });
        }
    }
    if !labels.contains(&1.0) || !labels.contains(&-1.0) {
        return Err(Error::SingleClass { channel: "labels" });
    }
    check_symmetric(gram)?;
    let u = params.c / n as f64;
    let (vals, h) = grid_axis(0.0, u, grid_resolution);

    let objective = |alpha: &[f64]| -> f64 {
        let mut lin = 0.0;
        let mut quad = 0.0;
        for i in 0..n {
            lin += alpha[i];
            let row = gram.row(i);
            let mut acc = 0.0;
            for j in 0..n {
                acc += row[j] * alpha[j] * labels[j];
            }
            quad += alpha[i] * labels[i] * acc;
        }
        lin - 0.5 * quad
    };

    let mut alpha = vec![0.0; n];
    let mut best_obj = f64::NEG_INFINITY;
    let mut best = vec![0.0; n];
    odometer(n - 1, grid_resolution, |idx| {
        let mut sum = 0.0;
        for k in 0..n - 1 {
            alpha[k] = vals[idx[k]];
            sum += alpha[k] * labels[k];
        }
        let last = -labels[n - 1] * sum;
        if (-u * 1e-12..=u * (1.0 + 1e-12)).contains(&last) {
            alpha[n - 1] = last.clamp(0.0, u);
            let obj = objective(&alpha);
            if obj > best_obj {
                best_obj = obj;
                best.copy_from_slice(&alpha);
            }
        }
    });

    let mut grad_bound = 0.0f64;
    for k in 0..n {
        let row_abs: f64 = gram.row(k).iter().map(|v| v.abs()).sum();
        grad_bound = grad_bound.max(1.0 + u * row_abs);
    }
    let gap_bound = (n.max(2) - 1) as f64 * h * grad_bound;

    let bias = svc_bias(gram, labels, &best, u, BiasPolicy::Lenient { margin: h })?;
    let sv_indices: Vec<usize> = (0..n).filter(|&k| best[k] != 0.0).collect();
    Ok(Bruteforce {
        model: SvcModel {
            alpha: best,
            labels: labels.to_vec(),
            bias,
            sv_indices,
            objective: best_obj,
            converged: true,
            params: *params,
        },
        gap_bound,
    })
}
