//! Truncated infinite products over real sequences.
//!
//! For `A = (a_n)` with `1 + 1/a_n > 0` and `Σ 1/a_n² < ∞` this module
//! evaluates
//!
//! ```text
//! Γ_A(s) = ∏ (1 + 1/a_n)^s / (1 + s/a_n)
//! γ_A    = Σ 1/a_n − ln(1 + 1/a_n)
//! μ_A    = ∏ (1 − 1/a_n²)
//! Ψ_A(s) = −γ_A + Σ s / (a_n (a_n + s))
//! ```
//!
//! Every product is summed in log space. Once `|a_n| ≥ 2(1+|s|)` each
//! log-term `t_n = s ln(1+1/a_n) − ln(1+s/a_n)` satisfies
//! `|t_n| ≤ (|s|+|s|²)/a_n²`, so the tail after `N` terms is bounded by
//! `(|s|+|s|²) · tail_sum_bound(N)` with the sequence's own bound on
//! `Σ 1/a_n²`. The term count is the least `N` closing that bound.
//!
//! Far in the tail, where `|a_n| ≥ 64(1+|s|)`, blocks of 64 terms are
//! folded into power sums `P_k = Σ 1/a_n^k` and the logarithms are taken
//! as series in `1/a_n`, truncated at an order chosen per block; the
//! series remainder is bounded explicitly. All pieces are accumulated with
//! compensated summation, and the rounding allowance reported in
//! [`EvalResult::abs_error_bound`] is sized from the magnitudes summed.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::argamma::ArithParams;
use crate::classical::{digamma_real, gamma_fn, pow_real_base};
use crate::summation::ComplexNeumaierSum;
use crate::{GammaError, Result, POLE_THRESHOLD};

/// Default cap on explicitly evaluated terms.
pub const DEFAULT_MAX_TERMS: u64 = 10_000_000;

/// Per-magnitude rounding weight, `2^-50`.
pub const ROUNDING_UNIT: f64 = 8.881_784_197_001_252e-16;

// A lane accumulates 16 terms of up to tenth powers: a few tens of ulps
// per summed magnitude at worst.
const MAGNITUDE_WEIGHT: f64 = 16.0;

const BLOCK: usize = 64;
const LANES: usize = 4;
const KMAX: usize = 10;

const BLOCK_OFFSETS: [f64; BLOCK] = {
    let mut t = [0.0; BLOCK];
    let mut i = 0;
    while i < BLOCK {
        t[i] = i as f64;
        i += 1;
    }
    t
};

/// A real sequence `a_0, a_1, …` with a computable bound on the tail of
/// `Σ 1/a_n²`.
///
/// Implementations must keep `|a_n|` non-decreasing and of constant sign
/// past the first few terms; the truncation rule relies on it.
pub trait Sequence: Send + Sync {
    fn term(&self, n: u64) -> f64;

    /// Upper bound on `Σ_{m>n} 1/a_m²`.
    fn tail_sum_bound(&self, n: u64) -> f64;

    /// Writes `a_start, a_start+1, …` into `out`.
    fn fill(&self, start: u64, out: &mut [f64]) {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.term(start + i as u64);
        }
    }
}

struct Arithmetic {
    a: f64,
    r: f64,
}

impl Sequence for Arithmetic {
    fn term(&self, n: u64) -> f64 {
        self.a + n as f64 * self.r
    }

    // Σ_{m>n} (a+mr)^{-2} ≤ ∫_n^∞ (a+xr)^{-2} dx whenever |a+xr| grows on [n, ∞).
    fn tail_sum_bound(&self, n: u64) -> f64 {
        let an = self.term(n);
        if an == 0.0 || an.signum() != self.r.signum() {
            return f64::INFINITY;
        }
        1.0 / (self.r.abs() * an.abs())
    }

    fn fill(&self, start: u64, out: &mut [f64]) {
        for (chunk_start, chunk) in (start..).step_by(BLOCK).zip(out.chunks_mut(BLOCK)) {
            let base = self.a + chunk_start as f64 * self.r;
            for (slot, &i) in chunk.iter_mut().zip(BLOCK_OFFSETS.iter()) {
                *slot = base + i * self.r;
            }
        }
    }
}

struct FnSequence<F, T> {
    term: F,
    tail: T,
}

impl<F, T> Sequence for FnSequence<F, T>
where
    F: Fn(u64) -> f64 + Send + Sync,
    T: Fn(u64) -> f64 + Send + Sync,
{
    fn term(&self, n: u64) -> f64 {
        (self.term)(n)
    }

    fn tail_sum_bound(&self, n: u64) -> f64 {
        (self.tail)(n)
    }
}

struct Scaled {
    inner: Arc<dyn Sequence>,
    alpha: f64,
}

impl Sequence for Scaled {
    fn term(&self, n: u64) -> f64 {
        self.inner.term(n) / self.alpha
    }

    fn tail_sum_bound(&self, n: u64) -> f64 {
        self.alpha * self.alpha * self.inner.tail_sum_bound(n)
    }

    fn fill(&self, start: u64, out: &mut [f64]) {
        self.inner.fill(start, out);
        for v in out.iter_mut() {
            *v /= self.alpha;
        }
    }
}

struct Negated {
    inner: Arc<dyn Sequence>,
}

impl Sequence for Negated {
    fn term(&self, n: u64) -> f64 {
        -self.inner.term(n)
    }

    fn tail_sum_bound(&self, n: u64) -> f64 {
        self.inner.tail_sum_bound(n)
    }

    fn fill(&self, start: u64, out: &mut [f64]) {
        self.inner.fill(start, out);
        for v in out.iter_mut() {
            *v = -*v;
        }
    }
}

struct Squared {
    inner: Arc<dyn Sequence>,
}

impl Sequence for Squared {
    fn term(&self, n: u64) -> f64 {
        let a = self.inner.term(n);
        a * a
    }

    // Σ x_m² ≤ (Σ x_m)² for x_m ≥ 0
    fn tail_sum_bound(&self, n: u64) -> f64 {
        let t = self.inner.tail_sum_bound(n);
        t * t
    }

    fn fill(&self, start: u64, out: &mut [f64]) {
        self.inner.fill(start, out);
        for v in out.iter_mut() {
            *v *= *v;
        }
    }
}

/// An immutable, shareable sequence description.
#[derive(Clone)]
pub struct SequenceSpec {
    seq: Arc<dyn Sequence>,
    label: Option<String>,
}

impl fmt::Debug for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceSpec")
            .field("label", &self.label)
            .field("a_0", &self.seq.term(0))
            .field("a_1", &self.seq.term(1))
            .finish()
    }
}

impl SequenceSpec {
    /// `a_n = a + n·r`.
    pub fn arithmetic(a: f64, r: f64) -> Self {
        Self {
            seq: Arc::new(Arithmetic { a, r }),
            label: Some(format!("{a}+{r}n")),
        }
    }

    /// `ℕ* = {1, 2, 3, …}`.
    pub fn positive_integers() -> Self {
        Self::arithmetic(1.0, 1.0).with_label("N*")
    }

    pub fn from_fn<F, T>(term: F, tail_sum_bound: T) -> Self
    where
        F: Fn(u64) -> f64 + Send + Sync + 'static,
        T: Fn(u64) -> f64 + Send + Sync + 'static,
    {
        Self {
            seq: Arc::new(FnSequence {
                term,
                tail: tail_sum_bound,
            }),
            label: None,
        }
    }

    pub fn from_sequence(seq: Arc<dyn Sequence>) -> Self {
        Self { seq, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `A/α = (a_n/α)`.
    pub fn scaled(&self, alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha != 0.0) {
            return Err(GammaError::Domain(format!(
                "scale factor must be finite and non-zero, got {alpha}"
            )));
        }
        Ok(Self {
            seq: Arc::new(Scaled {
                inner: Arc::clone(&self.seq),
                alpha,
            }),
            label: self.label.as_ref().map(|l| format!("({l})/{alpha}")),
        })
    }

    /// `−A = (−a_n)`.
    pub fn negated(&self) -> Self {
        Self {
            seq: Arc::new(Negated {
                inner: Arc::clone(&self.seq),
            }),
            label: self.label.as_ref().map(|l| format!("-({l})")),
        }
    }

    /// `A² = (a_n²)`.
    pub fn squared(&self) -> Self {
        Self {
            seq: Arc::new(Squared {
                inner: Arc::clone(&self.seq),
            }),
            label: self.label.as_ref().map(|l| format!("({l})^2")),
        }
    }

    pub fn term(&self, n: u64) -> f64 {
        self.seq.term(n)
    }

    pub fn tail_sum_bound(&self, n: u64) -> f64 {
        self.seq.tail_sum_bound(n)
    }

    /// Checks the sequence invariants on the first `samples` indices:
    /// `1 + 1/a_n > 0`, `|a_n|` non-decreasing, the tail bound
    /// non-increasing and dominating the sampled partial tails.
    pub fn validate(&self, samples: u64) -> Result<()> {
        let samples = samples.max(2);
        let mut prev_abs = 0.0f64;
        for n in 0..samples {
            let a = self.term(n);
            if !a.is_finite() || a == 0.0 || 1.0 + 1.0 / a <= 0.0 {
                return Err(GammaError::Domain(format!(
                    "term a_{n} = {a} violates 1 + 1/a_n > 0"
                )));
            }
            if n > 0 && a.abs() < prev_abs {
                return Err(GammaError::Domain(format!("|a_n| decreases at n = {n}")));
            }
            prev_abs = a.abs();
        }
        let mut checkpoints = vec![0, 1, 10, 100, samples / 2, samples];
        checkpoints.sort_unstable();
        checkpoints.dedup();
        let mut prev_bound = f64::INFINITY;
        for &n in &checkpoints {
            let bound = self.tail_sum_bound(n);
            if bound > prev_bound {
                return Err(GammaError::Domain(format!(
                    "tail bound increases at N = {n}"
                )));
            }
            prev_bound = bound;
            let partial: f64 = (n + 1..=n + 1000).map(|m| self.term(m).powi(-2)).sum();
            if partial > bound * (1.0 + 1e-12) {
                return Err(GammaError::Domain(format!(
                    "tail bound {bound} at N = {n} is below the partial tail {partial}"
                )));
            }
        }
        Ok(())
    }
}

/// How far a product is carried out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Target absolute error on the logarithm of the product (on the value
    /// itself for sums such as `γ_A`, relative for `μ_A`).
    pub tol: f64,
    pub max_terms: u64,
    pub pole_threshold: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_terms: DEFAULT_MAX_TERMS,
            pole_threshold: POLE_THRESHOLD,
        }
    }
}

impl TruncationPolicy {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    pub fn max_terms(mut self, max_terms: u64) -> Self {
        self.max_terms = max_terms;
        self
    }

    /// Rejects non-positive tolerances, a zero term cap and bad thresholds.
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || self.max_terms < 1 || !(self.pole_threshold >= 0.0) {
            return Err(GammaError::Domain(format!(
                "invalid truncation policy {self:?}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalStatus {
    Ok,
    /// `max_terms` was reached before the tail bound met the tolerance;
    /// the error bound is still rigorous for the terms used.
    TruncatedAtCap,
}

impl fmt::Display for EvalStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalStatus::Ok => "ok",
            EvalStatus::TruncatedAtCap => "truncated_at_cap",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    pub abs_error_bound: f64,
    pub terms_used: u64,
    pub status: EvalStatus,
}

impl<T> EvalResult<T> {
    /// Turns a capped evaluation into [`GammaError::TruncatedAtCap`].
    pub fn checked(self) -> Result<Self> {
        match self.status {
            EvalStatus::Ok => Ok(self),
            EvalStatus::TruncatedAtCap => Err(GammaError::TruncatedAtCap(self.terms_used)),
        }
    }
}

/// Least `n` in `1..=max` with `ok(n)`, for a predicate that stays true
/// once true.
fn least_index(max: u64, ok: impl Fn(u64) -> bool) -> Option<u64> {
    if !ok(max) {
        return None;
    }
    let (mut lo, mut hi) = (1u64, max);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Some(lo)
}

/// Term count for a tail that is bounded by `factor(a_N) · tail(N−1)` once
/// `|a_N| ≥ floor`. Returns `(N, tail error bound, capped)`.
fn choose_terms(
    spec: &SequenceSpec,
    policy: &TruncationPolicy,
    floor: f64,
    target: f64,
    factor: impl Fn(f64) -> f64,
) -> (u64, f64, bool) {
    let bound_at = |n: u64| {
        let a = spec.term(n);
        if a.abs() >= floor {
            factor(a) * spec.tail_sum_bound(n - 1)
        } else {
            f64::INFINITY
        }
    };
    match least_index(policy.max_terms, |n| bound_at(n) <= target) {
        Some(n) => (n, bound_at(n), false),
        None => (policy.max_terms, bound_at(policy.max_terms), true),
    }
}

fn status_for(capped: bool) -> EvalStatus {
    if capped {
        EvalStatus::TruncatedAtCap
    } else {
        EvalStatus::Ok
    }
}

/// `ln(1 + w)` without forming `1 + w` for small `w`.
fn ln_1p_complex(w: Complex64) -> Complex64 {
    let m = 2.0 * w.re + w.re * w.re + w.im * w.im;
    Complex64::new(0.5 * m.ln_1p(), w.im.atan2(1.0 + w.re))
}

#[inline(always)]
fn power_sums_k<const K: usize>(terms: &[f64; BLOCK], squared: bool) -> [f64; KMAX] {
    let mut acc = [[0.0f64; LANES]; K];
    for chunk in terms.chunks_exact(LANES) {
        for l in 0..LANES {
            let inv = 1.0 / chunk[l];
            let x = if squared { inv * inv } else { inv };
            let mut p = x;
            acc[0][l] += p;
            for row in acc.iter_mut().skip(1) {
                p *= x;
                row[l] += p;
            }
        }
    }
    let mut out = [0.0; KMAX];
    for (o, row) in out.iter_mut().zip(acc.iter()) {
        *o = row.iter().sum();
    }
    out
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "avx2")]
unsafe fn power_sums_avx2<const K: usize>(terms: &[f64; BLOCK], squared: bool) -> [f64; KMAX] {
    power_sums_k::<K>(terms, squared)
}

fn power_sums_dispatch<const K: usize>(terms: &[f64; BLOCK], squared: bool) -> [f64; KMAX] {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("avx2") {
            // SAFETY: AVX2 support was just checked.
            return unsafe { power_sums_avx2::<K>(terms, squared) };
        }
    }
    power_sums_k::<K>(terms, squared)
}

/// `[P_1, …, P_k]` with `P_j = Σ x^j` over the block, `x = 1/a_n` or
/// `1/a_n²`; entries past `k` are zero.
fn power_sums(terms: &[f64; BLOCK], k: usize, squared: bool) -> [f64; KMAX] {
    match k {
        0..=2 => power_sums_dispatch::<2>(terms, squared),
        3 => power_sums_dispatch::<3>(terms, squared),
        4 => power_sums_dispatch::<4>(terms, squared),
        5 => power_sums_dispatch::<5>(terms, squared),
        6 => power_sums_dispatch::<6>(terms, squared),
        7 => power_sums_dispatch::<7>(terms, squared),
        8 => power_sums_dispatch::<8>(terms, squared),
        9 => power_sums_dispatch::<9>(terms, squared),
        _ => power_sums_dispatch::<KMAX>(terms, squared),
    }
}

/// Smallest series order `K ≥ 2` with `ρ^{K−1} ≤ 2^-54`, capped at `KMAX`.
fn series_order(rho: f64) -> usize {
    let k = 1.0 + (54.0 * std::f64::consts::LN_2 / -rho.ln()).ceil();
    if k.is_finite() {
        (k as usize).clamp(2, KMAX)
    } else {
        KMAX
    }
}

/// Log-space accumulator: compensated sums for the per-term part and the
/// block part, the magnitudes behind the rounding allowance, and the
/// truncation bound of the block series.
struct LogAccumulator {
    sum: ComplexNeumaierSum,
    magnitude: f64,
    series_err: f64,
}

impl LogAccumulator {
    fn new() -> Self {
        Self {
            sum: ComplexNeumaierSum::new(),
            magnitude: 0.0,
            series_err: 0.0,
        }
    }

    fn add(&mut self, v: Complex64, magnitude: f64) {
        self.sum += v;
        self.magnitude += magnitude;
    }

    fn value(&self) -> Complex64 {
        self.sum.value()
    }

    /// Error from rounding (weighted magnitudes) and from truncated block series.
    fn error(&self, value_abs: f64) -> f64 {
        ROUNDING_UNIT * (1.0 + value_abs + MAGNITUDE_WEIGHT * self.magnitude) + self.series_err
    }
}

enum Chunk<'a> {
    Term(f64),
    Block(&'a [f64; BLOCK]),
}

/// Walks the first `n_terms` terms, handing full blocks whose smallest
/// `|a_n|` reaches `block_floor` over as one chunk and every other term
/// on its own.
fn walk_terms(
    spec: &SequenceSpec,
    n_terms: u64,
    block_floor: f64,
    mut visit: impl FnMut(Chunk<'_>) -> Result<()>,
) -> Result<()> {
    let mut buf = [0.0f64; BLOCK];
    let mut start = 0u64;
    while start < n_terms {
        let len = (n_terms - start).min(BLOCK as u64) as usize;
        spec.seq.fill(start, &mut buf[..len]);
        // |a_n| is non-decreasing, so the first term is the smallest
        if len == BLOCK && buf[0].abs() >= block_floor {
            visit(Chunk::Block(&buf))?;
        } else {
            for &a in &buf[..len] {
                visit(Chunk::Term(a))?;
            }
        }
        start += len as u64;
    }
    Ok(())
}

fn check_argument(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(GammaError::Domain(format!("non-finite argument {s}")))
    }
}

/// `Γ_A(s)` by truncated product.
///
/// Far-tail blocks use `s ln(1+x) − ln(1+sx) = Σ_{k≥2} (−1)^{k+1} (s − s^k) x^k / k`
/// with `x = 1/a_n`, summed through power sums of `x`.
pub fn gamma_seq(
    spec: &SequenceSpec,
    s: Complex64,
    policy: &TruncationPolicy,
) -> Result<EvalResult<Complex64>> {
    policy.validate()?;
    check_argument(s)?;
    if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
        return Ok(EvalResult {
            value: Complex64::new(1.0, 0.0),
            abs_error_bound: 0.0,
            terms_used: 0,
            status: EvalStatus::Ok,
        });
    }
    let s_abs = s.norm();
    let c2 = s_abs + s_abs * s_abs;
    let (n_terms, tail_err, capped) =
        choose_terms(spec, policy, 2.0 * (1.0 + s_abs), policy.tol, |_| c2);

    let mut acc = LogAccumulator::new();
    let thr = policy.pole_threshold;
    walk_terms(spec, n_terms, 64.0 * (1.0 + s_abs), |chunk| {
        match chunk {
            Chunk::Term(a) => {
                if (a + s).norm() <= thr {
                    return Err(GammaError::PoleProximity(s));
                }
                let l1 = (1.0 / a).ln_1p();
                let l2 = ln_1p_complex(s / a);
                acc.add(s * l1 - l2, s_abs * l1.abs() + l2.norm());
            }
            Chunk::Block(terms) => {
                let x = 1.0 / terms[0].abs();
                let k = series_order(s_abs.max(1.0) * x);
                let p = power_sums(terms, k, false);
                let mut block = Complex64::new(0.0, 0.0);
                let mut magnitude = 0.0;
                let mut s_pow = s;
                for j in 2..=k {
                    s_pow *= s;
                    let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
                    let term = (s - s_pow) * (sign * p[j - 1] / j as f64);
                    magnitude += term.l1_norm();
                    block += term;
                }
                acc.add(block, magnitude);
                let m = (k + 1) as i32;
                let sx = s_abs * x;
                acc.series_err += BLOCK as f64 / f64::from(m)
                    * (s_abs * x.powi(m) / (1.0 - x) + sx.powi(m) / (1.0 - sx));
            }
        }
        Ok(())
    })?;

    let log_value = acc.value();
    let value = log_value.exp();
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(GammaError::Overflow);
    }
    Ok(EvalResult {
        value,
        abs_error_bound: value.norm() * (tail_err + acc.error(log_value.norm())).exp_m1(),
        terms_used: n_terms,
        status: status_for(capped),
    })
}

// positive u: u − ln(1+u) ≤ u²/2; any |u| ≤ 1/2: |u − ln(1+u)| ≤ u²
fn euler_tail_factor(a: f64) -> f64 {
    if a > 0.0 {
        0.5
    } else {
        1.0
    }
}

/// Adds `Σ 1/a_n − ln(1 + 1/a_n)` over a block: `Σ_{k≥2} (−1)^k P_k / k`.
fn add_euler_block(acc: &mut LogAccumulator, terms: &[f64; BLOCK]) {
    let x = 1.0 / terms[0].abs();
    let k = series_order(x);
    let p = power_sums(terms, k, false);
    let mut block = 0.0;
    let mut magnitude = 0.0;
    for j in 2..=k {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * p[j - 1] / j as f64;
        magnitude += term.abs();
        block += term;
    }
    acc.add(Complex64::new(block, 0.0), magnitude);
    let m = (k + 1) as i32;
    acc.series_err += BLOCK as f64 / f64::from(m) * x.powi(m) / (1.0 - x);
}

/// Generalized Euler constant `γ_A`, with `e^{−γ_A} = ∏ (1 + 1/a_n) e^{−1/a_n}`.
pub fn euler_constant_seq(
    spec: &SequenceSpec,
    policy: &TruncationPolicy,
) -> Result<EvalResult<f64>> {
    policy.validate()?;
    let (n_terms, tail_err, capped) =
        choose_terms(spec, policy, 2.0, policy.tol, euler_tail_factor);
    let mut acc = LogAccumulator::new();
    walk_terms(spec, n_terms, 64.0, |chunk| {
        match chunk {
            Chunk::Term(a) => {
                let inv = 1.0 / a;
                let l = inv.ln_1p();
                acc.add(Complex64::new(inv - l, 0.0), inv.abs() + l.abs());
            }
            Chunk::Block(terms) => add_euler_block(&mut acc, terms),
        }
        Ok(())
    })?;
    let gamma = acc.value().re;
    Ok(EvalResult {
        value: gamma,
        abs_error_bound: tail_err + acc.error(gamma.abs()),
        terms_used: n_terms,
        status: status_for(capped),
    })
}

/// `μ_A = ∏ (1 − 1/a_n²)`; requires `|a_n| > 1`. `tol` is relative.
pub fn mu_seq(spec: &SequenceSpec, policy: &TruncationPolicy) -> Result<EvalResult<f64>> {
    policy.validate()?;
    // |ln(1 − x)| ≤ x/(1 − x) ≤ (4/3)x for x ≤ 1/4
    let target = policy.tol.ln_1p();
    let (n_terms, tail_err, capped) = choose_terms(spec, policy, 2.0, target, |_| 4.0 / 3.0);
    let mut acc = LogAccumulator::new();
    walk_terms(spec, n_terms, 8.0, |chunk| {
        match chunk {
            Chunk::Term(a) => {
                if !(a.abs() > 1.0) {
                    return Err(GammaError::Domain(format!(
                        "mu requires |a_n| > 1, found a_n = {a}"
                    )));
                }
                let l = (-1.0 / (a * a)).ln_1p();
                acc.add(Complex64::new(l, 0.0), l.abs());
            }
            Chunk::Block(terms) => {
                // ln(1 − y) = −Σ_j y^j / j with y = 1/a²
                let y = 1.0 / (terms[0] * terms[0]);
                let k = series_order(y);
                let q = power_sums(terms, k, true);
                let mut block = 0.0;
                let mut magnitude = 0.0;
                for j in 1..=k {
                    let term = q[j - 1] / j as f64;
                    magnitude += term;
                    block -= term;
                }
                acc.add(Complex64::new(block, 0.0), magnitude);
                let m = (k + 1) as i32;
                acc.series_err += BLOCK as f64 / f64::from(m) * y.powi(m) / (1.0 - y);
            }
        }
        Ok(())
    })?;
    let log_mu = acc.value().re;
    let value = log_mu.exp();
    Ok(EvalResult {
        value,
        abs_error_bound: value * (tail_err + acc.error(log_mu.abs())).exp_m1(),
        terms_used: n_terms,
        status: status_for(capped),
    })
}

/// Log-derivative `Ψ_A(s) = Γ_A'(s)/Γ_A(s)`, summed in one pass as
/// `Σ ln(1 + 1/a_n) − 1/a_n + s/(a_n(a_n + s))`.
pub fn psi_seq(
    spec: &SequenceSpec,
    s: Complex64,
    policy: &TruncationPolicy,
) -> Result<EvalResult<Complex64>> {
    policy.validate()?;
    check_argument(s)?;
    let s_abs = s.norm();
    // |s/(a(a+s))| ≤ 2|s|/a² once |a| ≥ 2|s|
    let (n_terms, tail_err, capped) =
        choose_terms(spec, policy, 2.0 * (1.0 + s_abs), policy.tol, |a| {
            euler_tail_factor(a) + 2.0 * s_abs
        });
    let thr = policy.pole_threshold;
    let mut acc = LogAccumulator::new();
    walk_terms(spec, n_terms, 64.0 * (1.0 + s_abs), |chunk| {
        match chunk {
            Chunk::Term(a) => {
                let shifted = a + s;
                if shifted.norm() <= thr {
                    return Err(GammaError::PoleProximity(s));
                }
                let inv = 1.0 / a;
                let l = inv.ln_1p();
                let q = s / (a * shifted);
                acc.add(q + (l - inv), q.norm() + inv.abs() + l.abs());
            }
            Chunk::Block(terms) => {
                // Σ_{k≥2} (−1)^k P_k (s^{k−1} − 1/k)
                let x = 1.0 / terms[0].abs();
                let k = series_order(s_abs.max(1.0) * x);
                let p = power_sums(terms, k, false);
                let mut block = Complex64::new(0.0, 0.0);
                let mut magnitude = 0.0;
                let mut s_pow = Complex64::new(1.0, 0.0);
                for j in 2..=k {
                    s_pow *= s;
                    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                    let term = (s_pow - 1.0 / j as f64) * (sign * p[j - 1]);
                    magnitude += term.l1_norm();
                    block += term;
                }
                acc.add(block, magnitude);
                let m = (k + 1) as i32;
                let sx = s_abs * x;
                acc.series_err += BLOCK as f64
                    * x.powi(m)
                    * (s_abs.powi(m - 1) / (1.0 - sx) + 1.0 / (f64::from(m) * (1.0 - x)));
            }
        }
        Ok(())
    })?;
    let value = acc.value();
    Ok(EvalResult {
        value,
        abs_error_bound: tail_err + acc.error(value.norm()),
        terms_used: n_terms,
        status: status_for(capped),
    })
}

/// Closed form of `∏_{n≥0} (1 + w/(a+nr)) e^{−w/(a+nr)}`:
/// `Γ(a/r) / Γ(a/r + w/r) · e^{(w/r) Ψ(a/r)}`.
pub fn weierstrass_product(a: f64, r: f64, w: Complex64) -> Result<Complex64> {
    let p = ArithParams::new(a, r)?;
    let x0 = p.x0();
    let g0 = gamma_fn(Complex64::new(x0, 0.0))?;
    let g = gamma_fn(x0 + w / r)?;
    let e = pow_real_base(std::f64::consts::E, w / r * digamma_real(x0)?)?;
    Ok(g0 / g * e)
}
