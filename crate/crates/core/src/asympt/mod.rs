//! High-precision evaluation of the limit statements at large finite
//! parameters: the normal CDF, log-binomials, central-binomial ratios, and
//! the ratio sequences of the shade conjectures.
//!
//! Ratios are exact rationals up to a crossover parameter and log-gamma
//! evaluations beyond it; both routes coexist so they can be checked against
//! each other on the overlap.

mod normal;

pub use normal::{erf, erfc, ln_gamma, std_normal_cdf};

use crate::error::{invalid, Result};
use crate::families::{frankl_card, g_card, FranklIndex, GenIndex};
use crate::setkit::binomial;
use normal::phi;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;

/// Largest m evaluated with exact rationals by default.
pub const DEFAULT_EXACT_CROSSOVER: u64 = 200;

const LN_4: f64 = 1.386_294_361_119_890_6; // 2 ln 2

/// Which arithmetic produced a ratio value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactRational,
    LogGamma,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactRational => "EXACT_RATIONAL",
            Method::LogGamma => "LOG_GAMMA",
        }
    }
}

/// One row of a probe table.
#[derive(Debug, Clone)]
pub struct RatioPoint {
    pub m: u64,
    pub k: u64,
    pub t: u64,
    /// Argmax index i.
    pub i_star: u64,
    /// Argmax index j, for the cross probes.
    pub j_star: Option<u64>,
    pub value: f64,
    pub method: Method,
}

/// ln C(n, k). Exact big-integer logarithm below 1000, log-gamma difference
/// above; the exponentiated value carries relative error well under 1e-9
/// through n = 1e9.
pub fn log_binomial(n: u64, k: u64) -> Result<f64> {
    if k > n {
        return Err(invalid(format!("log_binomial needs 0 <= k <= n, got k={k} n={n}")));
    }
    if n <= 1000 {
        // C(1000, 500) ~ 2.7e299 still fits f64, so the exact value converts
        // with sub-ulp error.
        let exact = binomial(n, k as i64);
        return Ok(exact.to_f64().expect("within f64 range").ln());
    }
    Ok(ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0))
}

/// C(2n, n+j) / 4^n evaluated in log space. Symmetric in j by construction
/// (the coefficient equals C(2n, n-j)).
pub fn dml_ratio(n: u64, j: i64) -> Result<f64> {
    if j.unsigned_abs() > n {
        return Err(invalid(format!("need |j| <= n, got j={j} n={n}")));
    }
    Ok((log_binomial(2 * n, n + j.unsigned_abs())? - n as f64 * LN_4).exp())
}

/// The Gaussian local approximation exp(-(j / sqrt(n/2))^2 / 2) / sqrt(pi n).
pub fn dml_gaussian(n: u64, j: i64) -> f64 {
    let z = j as f64 / (n as f64 / 2.0).sqrt();
    (-z * z / 2.0).exp() / (std::f64::consts::PI * n as f64).sqrt()
}

/// C(2n, n+j) / 4^n as an exact rational.
pub fn dml_ratio_rational(n: u64, j: i64) -> Result<Ratio<BigInt>> {
    if j.unsigned_abs() > n {
        return Err(invalid(format!("need |j| <= n, got j={j} n={n}")));
    }
    let num = BigInt::from(binomial(2 * n, n as i64 + j));
    let den = BigInt::from(2u32).pow(2 * n as u32);
    Ok(Ratio::new(num, den))
}

/// Partial central sum: sum of C(2n, n+j)/4^n for
/// j in [-floor(a sqrt(n/2)), floor(b sqrt(n/2))].
pub fn dml_partial_sum(n: u64, a: f64, b: f64) -> Result<f64> {
    if a < 0.0 || b < 0.0 || a.is_nan() || b.is_nan() {
        return Err(invalid("need a, b >= 0"));
    }
    let half = (n as f64 / 2.0).sqrt();
    let lo = (-(a * half).floor() as i64).max(-(n as i64));
    let hi = ((b * half).floor() as i64).min(n as i64);
    let mut acc = 0.0;
    for j in lo..=hi {
        acc += dml_ratio(n, j)?;
    }
    Ok(acc)
}

/// The convolution ratio
/// sum_{j in [-floor(a sqrt(k/2)), floor(b sqrt(k/2))]}
///   C(2k, k+j) C(2(n-k), (n-k)-j) / C(2n, n),
/// whose limit is Phi(b) - Phi(-a).
pub fn lemma3_ratio(n: u64, k: u64, a: f64, b: f64) -> Result<f64> {
    if k == 0 || k > n {
        return Err(invalid(format!("need 1 <= k <= n, got k={k} n={n}")));
    }
    if a < 0.0 || b < 0.0 || a.is_nan() || b.is_nan() {
        return Err(invalid("need a, b >= 0"));
    }
    let half = (k as f64 / 2.0).sqrt();
    let r = n - k;
    let lo = (-(a * half).floor() as i64).max(-(k as i64)).max(-(r as i64));
    let hi = ((b * half).floor() as i64).min(k as i64).min(r as i64);
    let ln_total = log_binomial(2 * n, n)?;
    let mut acc = 0.0;
    for j in lo..=hi {
        let ln_term = log_binomial(2 * k, (k as i64 + j) as u64)?
            + log_binomial(2 * r, (r as i64 - j) as u64)?;
        acc += (ln_term - ln_total).exp();
    }
    Ok(acc.clamp(0.0, 1.0))
}

/// ln of the window term C(w, r) C(2m - w, m - r), the summand of every
/// family-cardinality ratio here.
fn ln_window_term(m: u64, w: u64, r: u64) -> f64 {
    debug_assert!(r <= w && m >= r && 2 * m - w >= m - r);
    log_binomial(w, r).expect("r <= w")
        + log_binomial(2 * m - w, m - r).expect("m - r <= 2m - w")
}

/// Sums exp(ln_window_term - ln_total) for r in [lo, hi], walking out from
/// the mode of the (log-concave) term sequence and stopping once terms stop
/// contributing.
fn window_ratio_sum(m: u64, w: u64, lo: u64, hi: u64, ln_total: f64) -> f64 {
    if lo > hi {
        return 0.0;
    }
    // Hypergeometric mode for a window of size w out of 2m with m draws.
    let mode = ((w + 1) * (m + 1)) / (2 * m + 2);
    let start = mode.clamp(lo, hi);
    let mut acc = 0.0;
    let mut r = start;
    loop {
        let term = (ln_window_term(m, w, r) - ln_total).exp();
        acc += term;
        if term < acc * 1e-18 || r == hi {
            break;
        }
        r += 1;
    }
    if start > lo {
        let mut r = start - 1;
        loop {
            let term = (ln_window_term(m, w, r) - ln_total).exp();
            acc += term;
            if term < acc * 1e-18 || r == lo {
                break;
            }
            r -= 1;
        }
    }
    acc
}

/// |F_i(2m, m, t)| / C(2m, m) with an explicit method choice.
pub fn f_shade_ratio_method(m: u64, t: u64, i: u64, method: Method) -> Result<f64> {
    let idx = central_index(m, t, i)?;
    match method {
        Method::ExactRational => {
            let num = BigInt::from(frankl_card(idx));
            let den = BigInt::from(binomial(2 * m, m as i64));
            let ratio = Ratio::new(num, den);
            ratio
                .numer()
                .to_f64()
                .zip(ratio.denom().to_f64())
                .map(|(p, q)| p / q)
                .ok_or_else(|| invalid(format!("m={m} too large for exact-rational conversion")))
        }
        Method::LogGamma => {
            if t % 2 == 0 {
                band_ratio_loggamma(m, t, i)
            } else {
                tail_ratio_loggamma(m, t, i)
            }
        }
    }
}

/// Even-t route, the central complement identity: half of one minus the
/// middle band r in [i+1, 2s+i-1] of the window distribution.
fn band_ratio_loggamma(m: u64, t: u64, i: u64) -> Result<f64> {
    debug_assert!(t % 2 == 0);
    let ln_total = log_binomial(2 * m, m)?;
    let s = t / 2;
    let w = 2 * (s + i);
    let lo = (i + 1).max(w.saturating_sub(m));
    let hi = (2 * s + i - 1).min(m);
    let band = window_ratio_sum(m, w, lo, hi, ln_total);
    Ok((0.5 * (1.0 - band)).clamp(0.0, 1.0))
}

/// General route for either parity: the direct tail sum over intersection
/// sizes with the window.
fn tail_ratio_loggamma(m: u64, t: u64, i: u64) -> Result<f64> {
    let ln_total = log_binomial(2 * m, m)?;
    let w = t + 2 * i;
    let lo = (t + i).max(w.saturating_sub(m));
    let hi = w.min(m);
    Ok(window_ratio_sum(m, w, lo, hi, ln_total).clamp(0.0, 1.0))
}

fn central_index(m: u64, t: u64, i: u64) -> Result<FranklIndex> {
    let to32 = |v: u64, name: &str| -> Result<u32> {
        u32::try_from(v).map_err(|_| invalid(format!("{name}={v} out of range")))
    };
    if m > u32::MAX as u64 / 2 {
        return Err(invalid(format!("m={m} out of range")));
    }
    FranklIndex::new(to32(2 * m, "2m")?, to32(m, "m")?, to32(t, "t")?, to32(i, "i")?)
}

/// |F_i(2m, m, t)| / C(2m, m), exact rationals up to the crossover and
/// log-gamma beyond.
pub fn f_shade_ratio(m: u64, t: u64, i: u64) -> Result<f64> {
    f_shade_ratio_with_crossover(m, t, i, DEFAULT_EXACT_CROSSOVER)
}

pub fn f_shade_ratio_with_crossover(m: u64, t: u64, i: u64, crossover: u64) -> Result<f64> {
    let method = if m <= crossover.min(400) {
        Method::ExactRational
    } else {
        Method::LogGamma
    };
    f_shade_ratio_method(m, t, i, method)
}

/// |F_i(2m, m, t)| / C(2m, m) as an exact rational (small m only).
pub fn f_shade_ratio_rational(m: u64, t: u64, i: u64) -> Result<Ratio<BigInt>> {
    let idx = central_index(m, t, i)?;
    let num = BigInt::from(frankl_card(idx));
    let den = BigInt::from(binomial(2 * m, m as i64));
    Ok(Ratio::new(num, den))
}

/// |G_ij(2m, m, t)| / C(2m, m) in log-gamma mode.
fn g_shade_ratio_loggamma(m: u64, t: u64, i: u64, j: u64) -> Result<f64> {
    if t + i + j > 2 * m || t > m {
        return Err(invalid(format!(
            "invalid central G index m={m} t={t} i={i} j={j}"
        )));
    }
    let ln_total = log_binomial(2 * m, m)?;
    let w = t + i + j;
    let lo = (t + i).max(w.saturating_sub(m));
    let hi = w.min(m);
    Ok(window_ratio_sum(m, w, lo, hi, ln_total).clamp(0.0, 1.0))
}

fn g_shade_ratio_exact(m: u64, t: u64, i: u64, j: u64) -> Result<f64> {
    let to32 = |v: u64| u32::try_from(v).map_err(|_| invalid(format!("{v} out of range")));
    let idx = GenIndex::new(to32(2 * m)?, to32(m)?, to32(t)?, to32(i)?, to32(j)?)?;
    let num = BigInt::from(g_card(idx));
    let den = BigInt::from(binomial(2 * m, m as i64));
    let ratio = Ratio::new(num, den);
    ratio
        .numer()
        .to_f64()
        .zip(ratio.denom().to_f64())
        .map(|(p, q)| p / q)
        .ok_or_else(|| invalid(format!("m={m} too large for exact-rational conversion")))
}

/// Witness parameters of the square-root-threshold construction: the family
/// index k'' = max(0, k - c sqrt(k)) together with the integerized threshold
/// choices and the m-shade ratio of the constructed family.
#[derive(Debug, Clone)]
pub struct ShadeConstruction {
    pub m: u64,
    pub k: u64,
    pub c: f64,
    /// Family index k'' = max(0, floor(k - c sqrt(k))).
    pub k_dd: u64,
    /// Integerized intersection threshold, ceil(c sqrt(k)); the conservative
    /// direction for the intersecting constraint.
    pub t_ceil: u64,
    /// Integerized half-threshold, max(1, floor(c sqrt(k) / 2)).
    pub s_floor: u64,
    /// k'' = 0: the construction degenerates and no ratio is evaluated.
    pub degenerate: bool,
    /// m-shade ratio of the constructed family, when nondegenerate.
    pub ratio: Option<f64>,
    /// The limiting value 1 - Phi(c / sqrt(2)).
    pub limit: f64,
}

pub fn l9_construction(m: u64, k: u64, c: f64) -> Result<ShadeConstruction> {
    if !(c > 0.0) || c.is_nan() {
        return Err(invalid("need c > 0"));
    }
    if k == 0 || k > m {
        return Err(invalid(format!("need 1 <= k <= m, got k={k} m={m}")));
    }
    let root = c * (k as f64).sqrt();
    let k_dd = if root >= k as f64 {
        0
    } else {
        (k as f64 - root).floor() as u64
    };
    let t_ceil = root.ceil() as u64;
    let s_floor = ((root / 2.0).floor() as u64).max(1);
    let limit = 1.0 - phi(c * normal::FRAC_1_SQRT_2);
    let degenerate = k_dd == 0;
    let ratio = if degenerate {
        None
    } else {
        Some(f_shade_ratio(m, t_ceil, k_dd)?)
    };
    Ok(ShadeConstruction {
        m,
        k,
        c,
        k_dd,
        t_ceil,
        s_floor,
        degenerate,
        ratio,
        limit,
    })
}

/// A finite evaluation schedule: explicit m values with k and t given as
/// functions of m.
#[derive(Debug, Clone)]
pub struct Schedule {
    pub name: String,
    kind: ScheduleKind,
    pub m_values: Vec<u64>,
}

#[derive(Debug, Clone, Copy)]
enum ScheduleKind {
    /// k = floor(m^k_exp), t = max(1, floor(k^t_exp)).
    Power { k_exp: f64, t_exp: f64 },
    /// k = floor(m^k_exp), constant t.
    FixedT { k_exp: f64, t: u64 },
    /// k = floor(m^k_exp), t = max(1, floor(c sqrt(k))).
    SqrtMultiple { k_exp: f64, c: f64 },
}

impl Schedule {
    pub fn power(name: &str, k_exp: f64, t_exp: f64, m_values: Vec<u64>) -> Result<Self> {
        Self::build(name, ScheduleKind::Power { k_exp, t_exp }, m_values)
    }

    pub fn fixed_t(name: &str, k_exp: f64, t: u64, m_values: Vec<u64>) -> Result<Self> {
        Self::build(name, ScheduleKind::FixedT { k_exp, t }, m_values)
    }

    pub fn sqrt_multiple(name: &str, k_exp: f64, c: f64, m_values: Vec<u64>) -> Result<Self> {
        Self::build(name, ScheduleKind::SqrtMultiple { k_exp, c }, m_values)
    }

    fn build(name: &str, kind: ScheduleKind, m_values: Vec<u64>) -> Result<Self> {
        if m_values.is_empty() {
            return Err(invalid("schedule needs at least one m"));
        }
        if m_values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("schedule m values must be strictly increasing"));
        }
        let s = Self {
            name: name.to_string(),
            kind,
            m_values,
        };
        for &m in &s.m_values {
            let k = s.k_of(m);
            let t = s.t_of(m);
            if !(1 <= t && t <= k && k <= m) {
                return Err(invalid(format!(
                    "schedule violates 1 <= t <= k <= m at m={m} (k={k}, t={t})"
                )));
            }
        }
        Ok(s)
    }

    pub fn k_of(&self, m: u64) -> u64 {
        let k_exp = match self.kind {
            ScheduleKind::Power { k_exp, .. } => k_exp,
            ScheduleKind::FixedT { k_exp, .. } => k_exp,
            ScheduleKind::SqrtMultiple { k_exp, .. } => k_exp,
        };
        (m as f64).powf(k_exp).floor() as u64
    }

    pub fn t_of(&self, m: u64) -> u64 {
        let k = self.k_of(m);
        match self.kind {
            ScheduleKind::Power { t_exp, .. } => ((k as f64).powf(t_exp).floor() as u64).max(1),
            ScheduleKind::FixedT { t, .. } => t,
            ScheduleKind::SqrtMultiple { c, .. } => {
                ((c * (k as f64).sqrt()).floor() as u64).max(1)
            }
        }
    }

    /// Log-spaced default m list, 1e3 through 1e7.
    pub fn default_m_values() -> Vec<u64> {
        vec![
            1_000, 3_162, 10_000, 31_623, 100_000, 316_228, 1_000_000, 3_162_278, 10_000_000,
        ]
    }
}

/// Per-m maxima of |F_i(2m, m, t(m))| / C(2m, m) over 0 <= i <= k(m) - t(m).
pub fn probe_conjecture_j2(schedule: &Schedule) -> Result<Vec<RatioPoint>> {
    let mut out = Vec::with_capacity(schedule.m_values.len());
    for &m in &schedule.m_values {
        let k = schedule.k_of(m);
        let t = schedule.t_of(m);
        let method = if m <= DEFAULT_EXACT_CROSSOVER {
            Method::ExactRational
        } else {
            Method::LogGamma
        };
        let mut best = f64::NEG_INFINITY;
        let mut i_star = 0;
        for i in 0..=(k - t) {
            let v = f_shade_ratio_method(m, t, i, method)?;
            if v > best {
                best = v;
                i_star = i;
            }
        }
        out.push(RatioPoint {
            m,
            k,
            t,
            i_star,
            j_star: None,
            value: best,
            method,
        });
    }
    Ok(out)
}

/// Per-m maxima of sqrt(|G_ij| |G_ji|) / C(2m, m) over the admissible index
/// pairs at the central level, the conjectured cross-pair analogue.
pub fn probe_conjecture_co1(schedule: &Schedule) -> Result<Vec<RatioPoint>> {
    let mut out = Vec::with_capacity(schedule.m_values.len());
    for &m in &schedule.m_values {
        let k = schedule.k_of(m);
        let t = schedule.t_of(m);
        let method = if m <= DEFAULT_EXACT_CROSSOVER {
            Method::ExactRational
        } else {
            Method::LogGamma
        };
        let mut best = f64::NEG_INFINITY;
        let mut arg = (0u64, 0u64);
        // The objective is symmetric in (i, j).
        for i in 0..=(k - t) {
            for j in i..=(k - t) {
                if t + i + j > 2 * m {
                    continue;
                }
                let (gij, gji) = match method {
                    Method::ExactRational => (
                        g_shade_ratio_exact(m, t, i, j)?,
                        g_shade_ratio_exact(m, t, j, i)?,
                    ),
                    Method::LogGamma => (
                        g_shade_ratio_loggamma(m, t, i, j)?,
                        g_shade_ratio_loggamma(m, t, j, i)?,
                    ),
                };
                let v = (gij * gji).sqrt();
                if v > best {
                    best = v;
                    arg = (i, j);
                }
            }
        }
        out.push(RatioPoint {
            m,
            k,
            t,
            i_star: arg.0,
            j_star: Some(arg.1),
            value: best,
            method,
        });
    }
    Ok(out)
}

/// Least-squares slope of ln(value) against ln(m), the reported decay rate of
/// a probe table. Rows with nonpositive values are skipped.
pub fn fitted_decay_slope(points: &[RatioPoint]) -> Option<f64> {
    let pairs: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.value > 0.0)
        .map(|p| ((p.m as f64).ln(), p.value.ln()))
        .collect();
    if pairs.len() < 2 {
        return None;
    }
    let n = pairs.len() as f64;
    let sx: f64 = pairs.iter().map(|p| p.0).sum();
    let sy: f64 = pairs.iter().map(|p| p.1).sum();
    let sxx: f64 = pairs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pairs.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return None;
    }
    Some((n * sxy - sx * sy) / denom)
}

#[cfg(test)]
mod tests;
