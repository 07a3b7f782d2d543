use super::*;
use num_traits::{One, ToPrimitive, Zero};

/// Independent quadrature oracle for Phi: adaptive Simpson on the density,
/// anchored at Phi(0) = 1/2.
pub(crate) fn phi_quadrature(t: f64) -> f64 {
    fn density(x: f64) -> f64 {
        (-x * x / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt()
    }
    fn simpson(a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (density(a) + 4.0 * density(0.5 * (a + b)) + density(b))
    }
    fn adapt(a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let mid = 0.5 * (a + b);
        let left = simpson(a, mid);
        let right = simpson(mid, b);
        if depth == 0 || (left + right - whole).abs() < 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            adapt(a, mid, left, tol / 2.0, depth - 1) + adapt(mid, b, right, tol / 2.0, depth - 1)
        }
    }
    let (a, b) = if t >= 0.0 { (0.0, t) } else { (t, 0.0) };
    let integral = if a == b {
        0.0
    } else {
        adapt(a, b, simpson(a, b), 1e-14, 40)
    };
    if t >= 0.0 {
        0.5 + integral
    } else {
        0.5 - integral
    }
}

#[test]
fn cdf_matches_quadrature_oracle() {
    for i in 0..=100 {
        let t = -8.0 + 16.0 * i as f64 / 100.0;
        let got = std_normal_cdf(t).unwrap();
        let want = phi_quadrature(t);
        assert!((got - want).abs() < 1e-10, "t={t} got={got} want={want}");
    }
}

#[test]
fn log_binomial_small_and_exact() {
    assert!((log_binomial(4, 2).unwrap() - 6.0f64.ln()).abs() < 1e-15);
    assert!(log_binomial(3, 4).is_err());
    // Exact big-integer oracle through n = 300.
    for n in 0..=300u64 {
        for k in (0..=n).step_by(7) {
            let exact = binomial(n, k as i64).to_f64().unwrap().ln();
            let got = log_binomial(n, k).unwrap();
            assert!((got - exact).abs() < 1e-12, "C({n},{k})");
        }
    }
}

#[test]
fn log_binomial_central_asymptotics() {
    // ln C(2n, n) - n ln 4 = -ln(pi n)/2 + O(1/n) at n = 1e6.
    let n = 1_000_000u64;
    let lhs = log_binomial(2 * n, n).unwrap() - n as f64 * LN_4;
    let rhs = -0.5 * (std::f64::consts::PI * n as f64).ln();
    assert!((lhs - rhs).abs() < 1e-6, "lhs={lhs} rhs={rhs}");
}

#[test]
fn dml_ratio_behaviour() {
    let n = 10_000u64;
    let centre = dml_ratio(n, 0).unwrap();
    let gauss = dml_gaussian(n, 0);
    assert!((centre / gauss - 1.0).abs() < 1e-4);
    for j in [1i64, 17, 200] {
        assert_eq!(dml_ratio(n, j).unwrap(), dml_ratio(n, -j).unwrap());
    }
    assert!(dml_ratio(10, 11).is_err());
}

#[test]
fn dml_rational_sums_to_one() {
    for n in [1u64, 7, 40, 100] {
        let mut acc: Ratio<BigInt> = Ratio::zero();
        for j in -(n as i64)..=(n as i64) {
            acc += dml_ratio_rational(n, j).unwrap();
        }
        assert!(acc.is_one(), "n={n}");
    }
}

#[test]
fn dml_partial_sum_examples() {
    let n = 10_000u64;
    let sum = dml_partial_sum(n, 1.0, 1.0).unwrap();
    let limit = 2.0 * std_normal_cdf(1.0).unwrap() - 1.0;
    assert!((sum - limit).abs() < 0.01, "sum={sum} limit={limit}");

    let central = dml_partial_sum(n, 0.0, 0.0).unwrap();
    assert!(central <= 0.006);

    let wider = dml_partial_sum(n, 1.0, 2.0).unwrap();
    assert!(wider >= sum);
    assert!(dml_partial_sum(n, -1.0, 0.0).is_err());
}

#[test]
fn lemma3_ratio_examples() {
    let v = lemma3_ratio(1_000_000, 1_000, 1.0, 1.0).unwrap();
    assert!((v - 0.68269).abs() < 0.02, "v={v}");

    let central = lemma3_ratio(1_000_000, 1_000, 0.0, 0.0).unwrap();
    assert!(central < 0.03);

    // The asymmetric case matches Phi(b) - Phi(-a), not Phi(b) - Phi(a).
    let v = lemma3_ratio(1_000_000, 1_000, 0.5, 2.0).unwrap();
    let corrected = std_normal_cdf(2.0).unwrap() - std_normal_cdf(-0.5).unwrap();
    let misprint = std_normal_cdf(2.0).unwrap() - std_normal_cdf(0.5).unwrap();
    assert!((v - corrected).abs() < 0.05, "v={v} corrected={corrected}");
    assert!((v - misprint).abs() > 0.3, "v={v} misprint={misprint}");

    assert!(lemma3_ratio(10, 0, 1.0, 1.0).is_err());
}

#[test]
fn f_shade_ratio_star_is_exactly_half() {
    for m in 1..=100u64 {
        let r = f_shade_ratio_rational(m, 1, 0).unwrap();
        assert_eq!(r, Ratio::new(BigInt::from(1), BigInt::from(2)), "m={m}");
        assert_eq!(f_shade_ratio(m, 1, 0).unwrap(), 0.5, "m={m}");
    }
}

#[test]
fn f_shade_ratio_t2_limit() {
    let v = f_shade_ratio(5_000, 2, 0).unwrap();
    assert!((v - 0.25).abs() < 1e-3, "v={v}");
}

#[test]
fn f_shade_ratio_sqrt_threshold_regime() {
    // c = 2, k = 400: t = 40, i = 400 at m = 1e6 sits near 1 - Phi(sqrt 2).
    let v = f_shade_ratio(1_000_000, 40, 400).unwrap();
    let limit = 1.0 - std_normal_cdf(std::f64::consts::SQRT_2).unwrap();
    assert!((v - limit).abs() < 0.02, "v={v} limit={limit}");
}

#[test]
fn f_shade_ratio_fast_growing_t_vanishes() {
    // t = floor(k^0.75), i = k at k = 1e4, m = 1e8.
    let v = f_shade_ratio(100_000_000, 1_000, 10_000).unwrap();
    assert!(v <= 0.01, "v={v}");
}

#[test]
fn f_shade_routes_agree() {
    // Band route vs general tail route for even t, exact mode.
    for m in [6u64, 10, 25, 60, 100] {
        for t in [2u64, 4] {
            for i in [0u64, 1, 3] {
                if t + 2 * i > 2 * m || 2 * (t / 2 + i) > 2 * m - t {
                    continue;
                }
                let exact = f_shade_ratio_method(m, t, i, Method::ExactRational).unwrap();
                let band = band_ratio_loggamma(m, t, i).unwrap();
                let tail = tail_ratio_loggamma(m, t, i).unwrap();
                assert!((band - tail).abs() <= 1e-12 * band.max(1e-300), "band/tail m={m} t={t} i={i}");
                assert!((band - exact).abs() <= 1e-9 * exact.max(1e-300), "band/exact m={m} t={t} i={i}");
            }
        }
    }
    // Spot check in pure log-gamma territory. The two routes run through
    // independent lgamma evaluations whose f64 quantization alone costs
    // ~1e-8 relative at these magnitudes.
    let band = band_ratio_loggamma(100_000, 40, 400).unwrap();
    let tail = tail_ratio_loggamma(100_000, 40, 400).unwrap();
    assert!(
        (band - tail).abs() <= 1e-7 * band,
        "band={band:.17e} tail={tail:.17e}"
    );
}

#[test]
fn exact_and_loggamma_agree_on_overlap() {
    for m in [100u64, 128, 150, 177, 200] {
        for (t, i) in [(1u64, 0u64), (2, 3), (3, 5), (5, 2), (8, 11)] {
            if t + 2 * i > 2 * m {
                continue;
            }
            let exact = f_shade_ratio_method(m, t, i, Method::ExactRational).unwrap();
            let lg = f_shade_ratio_method(m, t, i, Method::LogGamma).unwrap();
            assert!(
                (exact - lg).abs() <= 1e-9 * exact.max(1e-300),
                "m={m} t={t} i={i} exact={exact} lg={lg}"
            );
        }
    }
}

#[test]
fn l9_construction_examples() {
    let c = l9_construction(100_000, 400, 2.0).unwrap();
    assert_eq!(c.k_dd, 360);
    assert_eq!(c.t_ceil, 40);
    assert_eq!(c.s_floor, 20);
    assert!(!c.degenerate);
    let ratio = c.ratio.unwrap();
    assert!((ratio - c.limit).abs() < 0.02, "ratio={ratio} limit={}", c.limit);

    // c sqrt(k) >= k collapses the index to zero.
    let d = l9_construction(100, 4, 2.0).unwrap();
    assert!(d.degenerate);
    assert!(d.ratio.is_none());

    // Ratio decreases as c grows.
    let lo = l9_construction(100_000, 400, 1.5).unwrap().ratio.unwrap();
    let mid = l9_construction(100_000, 400, 2.0).unwrap().ratio.unwrap();
    let hi = l9_construction(100_000, 400, 2.5).unwrap().ratio.unwrap();
    assert!(lo > mid && mid > hi);

    assert!(l9_construction(100, 0, 2.0).is_err());
    assert!(l9_construction(10, 20, 2.0).is_err());
}

#[test]
fn schedule_validation() {
    assert!(Schedule::power("p", 0.5, 0.75, vec![1_000, 10_000]).is_ok());
    // t exceeding k is rejected.
    assert!(Schedule::fixed_t("bad", 0.5, 100, vec![100]).is_err());
    assert!(Schedule::power("empty", 0.5, 0.75, vec![]).is_err());
    assert!(Schedule::power("unsorted", 0.5, 0.75, vec![100, 100]).is_err());

    let s = Schedule::power("p", 0.5, 0.75, vec![10_000]).unwrap();
    assert_eq!(s.k_of(10_000), 100);
    assert_eq!(s.t_of(10_000), 31); // floor(100^0.75)
}

#[test]
fn j2_probe_three_regimes() {
    let ms = vec![1_000u64, 10_000, 100_000];

    // Fast-growing t: values decrease toward zero.
    let s = Schedule::power("shrinking", 0.5, 0.75, ms.clone()).unwrap();
    let pts = probe_conjecture_j2(&s).unwrap();
    assert!(pts.windows(2).all(|w| w[1].value < w[0].value));
    assert!(pts.last().unwrap().value < 0.05);

    // Bounded t: values stay above 1/2^t (the star lower bound).
    let s = Schedule::fixed_t("bounded", 0.5, 2, ms.clone()).unwrap();
    let pts = probe_conjecture_j2(&s).unwrap();
    for p in &pts {
        assert!(p.value >= 0.25 - 0.01, "m={} value={}", p.m, p.value);
    }

    // t ~ 2 sqrt(k): values bounded away from zero.
    let s = Schedule::sqrt_multiple("threshold", 0.5, 2.0, ms).unwrap();
    let pts = probe_conjecture_j2(&s).unwrap();
    for p in &pts {
        assert!(p.value > 0.02, "m={} value={}", p.m, p.value);
    }
}

#[test]
fn co1_probe_dominates_j2() {
    let ms = vec![1_000u64, 10_000];
    let s = Schedule::power("shrinking", 0.5, 0.75, ms).unwrap();
    let j2 = probe_conjecture_j2(&s).unwrap();
    let co1 = probe_conjecture_co1(&s).unwrap();
    assert_eq!(j2.len(), co1.len());
    for (a, b) in j2.iter().zip(&co1) {
        assert!(
            b.value >= a.value - 1e-12,
            "m={} j2={} co1={}",
            a.m,
            a.value,
            b.value
        );
        assert!(b.j_star.is_some());
    }
}

#[test]
fn decay_slope_recovers_power_law() {
    let pts: Vec<RatioPoint> = [(100u64, 1e-2), (1_000, 1e-3), (10_000, 1e-4)]
        .iter()
        .map(|&(m, value)| RatioPoint {
            m,
            k: 0,
            t: 0,
            i_star: 0,
            j_star: None,
            value,
            method: Method::LogGamma,
        })
        .collect();
    let slope = fitted_decay_slope(&pts).unwrap();
    assert!((slope - (-1.0)).abs() < 1e-9);
    assert!(fitted_decay_slope(&pts[..1]).is_none());
}
