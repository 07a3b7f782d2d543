//! Desk-scale claim verification: each claim expands to a list of parameter
//! tuples, and each tuple is checked independently so callers may fan tuples
//! across workers. Verdicts for open conjectures are range-scoped evidence,
//! never proofs.

use crate::error::{invalid, Error, Result};
use crate::extremal::{
    conjecture_j1_value, conjecture_j4_value, conjecture_j5_value, max_cross_product,
    max_cross_shade_product, max_m_shade, max_t_intersecting, sperner_max_shade, ak_value,
    SearchBudget, Witness, SPERNER_CAP,
};
use crate::families::{
    check_frankl_shade_identity, check_g_shade_identity, g_family, is_cross_t_intersecting,
    GenIndex,
};
use crate::report::VerificationReport;
use crate::setkit::{
    binomial, covered_colourings_count, enumerate_k_subsets, is_homogeneous, masks_of_weight,
    write_family, Colouring, Count, KSubset, SetFamily,
};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A verifiable claim identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// Homogeneity vs shade-membership equivalence, exhaustive per (n, m).
    Eq49,
    /// Covered-colourings bound: exhaustive at m = 2, seeded random above.
    Lemma12,
    /// F_i shade identities per (n, k, t, m).
    Lemma22,
    /// G_ij shade identities per (n, k, t, m).
    Lemma36,
    /// Brute-force M equals the Frankl/AK maximum per (n, k, t).
    AkEq63,
    /// Brute-force M_0 equals the conjectured formula per (n, m, k, t).
    ConjJ1,
    /// Brute-force N equals the conjectured G-pair maximum per (n, k, l, t).
    ConjJ4,
    /// Brute-force N_0 equals the conjectured maximum per (n, mk, ml, k, l, t).
    ConjJ5,
    /// Every (G_ij, G_ji) pair is cross-t-intersecting, per (n, k, l, t).
    PropP5,
    /// N(n, k, l, 1) equals the star product when 2k, 2l <= n.
    MtTheorem,
    /// Sperner shade bound 0.724 * 2^n per n.
    Kostochka,
}

impl Claim {
    pub fn id(&self) -> &'static str {
        match self {
            Claim::Eq49 => "eq-49",
            Claim::Lemma12 => "lemma-1.2",
            Claim::Lemma22 => "lemma-2.2",
            Claim::Lemma36 => "lemma-3.6",
            Claim::AkEq63 => "ak-eq63",
            Claim::ConjJ1 => "conj-j1",
            Claim::ConjJ4 => "conj-j4",
            Claim::ConjJ5 => "conj-j5",
            Claim::PropP5 => "prop-p5",
            Claim::MtTheorem => "mt-theorem",
            Claim::Kostochka => "kostochka",
        }
    }

    pub fn parse(s: &str) -> Option<Claim> {
        Claim::all().iter().copied().find(|c| c.id() == s)
    }

    pub fn all() -> &'static [Claim] {
        &[
            Claim::Eq49,
            Claim::Lemma12,
            Claim::Lemma22,
            Claim::Lemma36,
            Claim::AkEq63,
            Claim::ConjJ1,
            Claim::ConjJ4,
            Claim::ConjJ5,
            Claim::PropP5,
            Claim::MtTheorem,
            Claim::Kostochka,
        ]
    }

    /// Default desk-scale range; chosen so the whole suite stays in the
    /// minutes on one core.
    fn default_n_max(&self) -> u32 {
        match self {
            Claim::Eq49 => 10,
            Claim::Lemma12 => 5, // interpreted as the largest m
            Claim::Lemma22 | Claim::Lemma36 => 10,
            Claim::AkEq63 | Claim::ConjJ1 => 7,
            Claim::ConjJ4 | Claim::ConjJ5 | Claim::MtTheorem => 5,
            Claim::PropP5 => 9,
            Claim::Kostochka => SPERNER_CAP,
        }
    }
}

/// Ranges, sampling, and budget for a verification run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Upper bound on the ground-set size (or on m for the colouring claim);
    /// claim-specific defaults apply when unset.
    pub n_max: Option<u32>,
    /// Upper bound on member cardinality for the shade-identity claims.
    pub k_max: Option<u32>,
    /// Random families per tuple for the covered-colourings claim.
    pub samples: u64,
    pub seed: u64,
    pub budget: SearchBudget,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            n_max: None,
            k_max: None,
            samples: 1000,
            seed: 0,
            budget: SearchBudget::default(),
        }
    }
}

/// The parameter tuples a claim expands to under the given options, in
/// sorted order.
pub fn tuples(claim: Claim, opts: &VerifyOptions) -> Vec<Vec<i64>> {
    let n_max = opts.n_max.unwrap_or_else(|| claim.default_n_max());
    let k_cap = |n: u32| opts.k_max.unwrap_or(u32::MAX).min(n);
    let mut out = Vec::new();
    match claim {
        Claim::Eq49 => {
            for n in 1..=n_max {
                for m in 0..=n {
                    out.push(vec![n as i64, m as i64]);
                }
            }
        }
        Claim::Lemma12 => {
            for m in 2..=n_max.max(2) {
                out.push(vec![m as i64]);
            }
        }
        Claim::Lemma22 | Claim::Lemma36 => {
            for n in 1..=n_max {
                for t in 1..=k_cap(n) {
                    for k in t..=k_cap(n) {
                        for m in k..=n {
                            out.push(vec![n as i64, k as i64, t as i64, m as i64]);
                        }
                    }
                }
            }
        }
        Claim::AkEq63 => {
            for n in 1..=n_max {
                for t in 1..=n {
                    for k in t..=n {
                        out.push(vec![n as i64, k as i64, t as i64]);
                    }
                }
            }
        }
        Claim::ConjJ1 => {
            for n in 1..=n_max {
                for t in 1..=n {
                    for k in t..=n {
                        for m in k..=n {
                            out.push(vec![n as i64, m as i64, k as i64, t as i64]);
                        }
                    }
                }
            }
        }
        Claim::ConjJ4 | Claim::PropP5 => {
            for n in 1..=n_max {
                for t in 1..=n {
                    for k in t..=n {
                        for l in k..=n {
                            out.push(vec![n as i64, k as i64, l as i64, t as i64]);
                        }
                    }
                }
            }
        }
        Claim::ConjJ5 => {
            for n in 1..=n_max {
                for t in 1..=n {
                    for k in t..=n {
                        for mk in k..=n {
                            for l in k..=n {
                                for ml in l..=n {
                                    if (k, mk) <= (l, ml) {
                                        out.push(vec![
                                            n as i64, mk as i64, ml as i64, k as i64, l as i64,
                                            t as i64,
                                        ]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Claim::MtTheorem => {
            for n in 1..=n_max {
                for k in 1..=(n / 2) {
                    for l in k..=(n / 2) {
                        out.push(vec![n as i64, k as i64, l as i64]);
                    }
                }
            }
        }
        Claim::Kostochka => {
            for n in 1..=n_max.min(SPERNER_CAP) {
                out.push(vec![n as i64]);
            }
        }
    }
    out.sort();
    out
}

/// Checks one tuple of one claim. Tuples must come from [`tuples`]; budget
/// exhaustion is reported as a verdict, not an error.
pub fn check(claim: Claim, tuple: &[i64], opts: &VerifyOptions) -> Result<VerificationReport> {
    let p = |i: usize| -> u32 { tuple[i] as u32 };
    match claim {
        Claim::Eq49 => check_eq49(p(0), p(1)),
        Claim::Lemma12 => check_lemma12(p(0), opts),
        Claim::Lemma22 => check_frankl_shade_identity(p(0), p(1), p(2), p(3)),
        Claim::Lemma36 => check_g_shade_identity(p(0), p(1), p(2), p(3)),
        Claim::AkEq63 => check_ak(p(0), p(1), p(2), opts),
        Claim::ConjJ1 => check_j1(p(0), p(1), p(2), p(3), opts),
        Claim::ConjJ4 => check_j4(p(0), p(1), p(2), p(3), opts),
        Claim::ConjJ5 => check_j5(p(0), p(1), p(2), p(3), p(4), p(5), opts),
        Claim::PropP5 => check_p5(p(0), p(1), p(2), p(3)),
        Claim::MtTheorem => check_mt(p(0), p(1), p(2), opts),
        Claim::Kostochka => check_kostochka(p(0), opts),
    }
}

/// Runs a whole claim sequentially, reports in tuple order.
pub fn run_claim(claim: Claim, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    tuples(claim, opts)
        .iter()
        .map(|t| check(claim, t, opts))
        .collect()
}

fn check_eq49(n: u32, m: u32) -> Result<VerificationReport> {
    let claim = Claim::Eq49.id();
    let params = vec![n as i64, m as i64];
    for mask in 0..(1u64 << n) {
        let x = KSubset::new(mask, n)?;
        let card = x.card();
        let shade_m = (card <= m).then(|| x.m_shade(m)).transpose()?;
        let shade_c = (card <= n - m).then(|| x.m_shade(n - m)).transpose()?;
        for zero_mask in masks_of_weight(n, m) {
            let zero = KSubset::new(zero_mask, n)?;
            let colouring = Colouring::new(zero);
            let one = colouring.one_set();
            let lhs = is_homogeneous(&x, &colouring)?;
            let rhs = shade_m.as_ref().is_some_and(|f| f.contains_mask(zero.mask()))
                || shade_c.as_ref().is_some_and(|f| f.contains_mask(one.mask()));
            if lhs != rhs {
                let mut bad = params.clone();
                bad.push(mask as i64);
                bad.push(zero_mask as i64);
                return Ok(VerificationReport::refuted(
                    claim,
                    bad,
                    format!("x mask {mask:#x}, zero-set mask {zero_mask:#x}"),
                ));
            }
        }
    }
    Ok(VerificationReport::confirmed(claim, params))
}

fn check_lemma12(m: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let claim = Claim::Lemma12.id();
    let n = 2 * m;
    if m == 2 {
        // Exhaustive: every family of 2-subsets of [4].
        let all = enumerate_k_subsets(4, 2)?;
        for bits in 0u32..(1 << all.len()) {
            let members: Vec<u64> = all
                .members()
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &m)| m)
                .collect();
            let fam = SetFamily::new(4, 2, members)?;
            if let Some(report) = lemma12_violation(&fam, m)? {
                return Ok(report);
            }
        }
        return Ok(VerificationReport::confirmed(claim, vec![m as i64]));
    }
    // Seeded sampling; the seed is mixed with m so tuples stay independent
    // of scheduling.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(m as u64));
    for _ in 0..opts.samples {
        let k = rng.gen_range(1..=m);
        let level = enumerate_k_subsets(n, k)?;
        let members: Vec<u64> = level
            .members()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let fam = SetFamily::new(n, k, members)?;
        if let Some(report) = lemma12_violation(&fam, m)? {
            return Ok(report);
        }
    }
    Ok(VerificationReport::confirmed(claim, vec![m as i64]))
}

fn lemma12_violation(fam: &SetFamily, m: u32) -> Result<Option<VerificationReport>> {
    let covered = covered_colourings_count(fam)?;
    let shade = fam.m_shade(m)?;
    let bound = Count::from(2 * shade.len() as u64);
    if covered > bound {
        return Ok(Some(VerificationReport::refuted(
            Claim::Lemma12.id(),
            vec![m as i64, fam.k() as i64],
            write_family(fam),
        )));
    }
    Ok(None)
}

fn budget_or<T>(
    claim: Claim,
    params: &[i64],
    r: Result<T>,
) -> Result<std::result::Result<T, VerificationReport>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::BudgetExhausted { .. }) => Ok(Err(VerificationReport::budget_exceeded(
            claim.id(),
            params.to_vec(),
        ))),
        Err(e) => Err(e),
    }
}

fn witness_text(a: &Witness, b: Option<&Witness>) -> String {
    let mut s = a.to_text();
    if let Some(b) = b {
        s.push_str(&b.to_text());
    }
    s
}

fn check_ak(n: u32, k: u32, t: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let claim = Claim::AkEq63;
    let params = vec![n as i64, k as i64, t as i64];
    let brute = match budget_or(claim, &params, max_t_intersecting(n, k, t, &opts.budget))? {
        Ok(v) => v,
        Err(report) => return Ok(report),
    };
    let formula = ak_value(n, k, t)?;
    if brute.value == formula {
        Ok(VerificationReport::confirmed(claim.id(), params))
    } else {
        Ok(VerificationReport::refuted(
            claim.id(),
            params,
            witness_text(&brute.witness_a, None),
        ))
    }
}

fn check_j1(n: u32, m: u32, k: u32, t: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let claim = Claim::ConjJ1;
    let params = vec![n as i64, m as i64, k as i64, t as i64];
    let brute = match budget_or(claim, &params, max_m_shade(n, m, k, t, &opts.budget))? {
        Ok(v) => v,
        Err(report) => return Ok(report),
    };
    let formula = conjecture_j1_value(n, m, k, t)?;
    if brute.value == formula {
        Ok(VerificationReport::confirmed(claim.id(), params))
    } else {
        Ok(VerificationReport::refuted(
            claim.id(),
            params,
            witness_text(&brute.witness_a, None),
        ))
    }
}

fn check_j4(n: u32, k: u32, l: u32, t: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let claim = Claim::ConjJ4;
    let params = vec![n as i64, k as i64, l as i64, t as i64];
    let brute = match budget_or(claim, &params, max_cross_product(n, k, l, t, &opts.budget))? {
        Ok(v) => v,
        Err(report) => return Ok(report),
    };
    let formula = conjecture_j4_value(n, k, l, t)?;
    if brute.value == formula {
        Ok(VerificationReport::confirmed(claim.id(), params))
    } else {
        Ok(VerificationReport::refuted(
            claim.id(),
            params,
            witness_text(&brute.witness_a, brute.witness_b.as_ref()),
        ))
    }
}

fn check_j5(
    n: u32,
    mk: u32,
    ml: u32,
    k: u32,
    l: u32,
    t: u32,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let claim = Claim::ConjJ5;
    let params = vec![n as i64, mk as i64, ml as i64, k as i64, l as i64, t as i64];
    let brute = match budget_or(
        claim,
        &params,
        max_cross_shade_product(n, mk, ml, k, l, t, &opts.budget),
    )? {
        Ok(v) => v,
        Err(report) => return Ok(report),
    };
    let formula = conjecture_j5_value(n, mk, ml, k, l, t)?;
    if brute.value == formula {
        Ok(VerificationReport::confirmed(claim.id(), params))
    } else {
        Ok(VerificationReport::refuted(
            claim.id(),
            params,
            witness_text(&brute.witness_a, brute.witness_b.as_ref()),
        ))
    }
}

fn check_p5(n: u32, k: u32, l: u32, t: u32) -> Result<VerificationReport> {
    let claim = Claim::PropP5.id();
    let params = vec![n as i64, k as i64, l as i64, t as i64];
    for i in 0..=(n - t) {
        for j in 0..=(n - t - i) {
            let a = g_family(GenIndex::new(n, k, t, i, j)?)?;
            let b = g_family(GenIndex::new(n, l, t, j, i)?)?;
            if !is_cross_t_intersecting(&a, &b, t)? {
                let mut bad = params.clone();
                bad.push(i as i64);
                bad.push(j as i64);
                let witness = format!("{}{}", write_family(&a), write_family(&b));
                return Ok(VerificationReport::refuted(claim, bad, witness));
            }
        }
    }
    Ok(VerificationReport::confirmed(claim, params))
}

fn check_mt(n: u32, k: u32, l: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let claim = Claim::MtTheorem;
    let params = vec![n as i64, k as i64, l as i64];
    let brute = match budget_or(claim, &params, max_cross_product(n, k, l, 1, &opts.budget))? {
        Ok(v) => v,
        Err(report) => return Ok(report),
    };
    let formula =
        binomial((n - 1) as u64, (k - 1) as i64) * binomial((n - 1) as u64, (l - 1) as i64);
    if brute.value == formula {
        Ok(VerificationReport::confirmed(claim.id(), params))
    } else {
        Ok(VerificationReport::refuted(
            claim.id(),
            params,
            witness_text(&brute.witness_a, brute.witness_b.as_ref()),
        ))
    }
}

fn check_kostochka(n: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    let claim = Claim::Kostochka;
    let params = vec![n as i64];
    let brute = match budget_or(claim, &params, sperner_max_shade(n, &opts.budget))? {
        Ok(v) => v,
        Err(report) => return Ok(report),
    };
    let bound = 0.724 * (1u64 << n) as f64;
    let value = brute
        .value
        .to_f64()
        .ok_or_else(|| invalid("shade size out of f64 range"))?;
    if value <= bound {
        Ok(VerificationReport::confirmed(claim.id(), params))
    } else {
        Ok(VerificationReport::refuted(
            claim.id(),
            params,
            brute.witness_a.to_text(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn opts() -> VerifyOptions {
        VerifyOptions {
            samples: 50,
            ..VerifyOptions::default()
        }
    }

    fn assert_all_confirmed(claim: Claim, o: &VerifyOptions) {
        for r in run_claim(claim, o).unwrap() {
            assert_eq!(
                r.verdict,
                Verdict::Confirmed,
                "{} at {:?}",
                r.claim,
                r.params
            );
        }
    }

    #[test]
    fn small_identity_claims_confirm() {
        let o = VerifyOptions {
            n_max: Some(6),
            k_max: Some(3),
            ..opts()
        };
        assert_all_confirmed(Claim::Eq49, &o);
        assert_all_confirmed(Claim::Lemma22, &o);
        assert_all_confirmed(Claim::Lemma36, &o);
        assert_all_confirmed(Claim::PropP5, &o);
    }

    #[test]
    fn lemma12_confirms_with_sampling() {
        let o = VerifyOptions {
            n_max: Some(4),
            ..opts()
        };
        assert_all_confirmed(Claim::Lemma12, &o);
    }

    #[test]
    fn search_backed_claims_small() {
        let o = VerifyOptions {
            n_max: Some(5),
            ..opts()
        };
        assert_all_confirmed(Claim::AkEq63, &o);
        assert_all_confirmed(Claim::ConjJ1, &o);
        assert_all_confirmed(Claim::MtTheorem, &o);
        assert_all_confirmed(Claim::Kostochka, &o);
    }

    #[test]
    fn conj_j4_refutes_at_the_known_tuple() {
        let o = VerifyOptions {
            n_max: Some(5),
            ..opts()
        };
        let reports = run_claim(Claim::ConjJ4, &o).unwrap();
        let refuted: Vec<&VerificationReport> = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Refuted)
            .collect();
        assert_eq!(refuted.len(), 1);
        assert_eq!(refuted[0].params, vec![5, 2, 3, 1]);
        assert!(refuted[0].witness.is_some());
    }

    #[test]
    fn budget_exhaustion_becomes_verdict() {
        let o = VerifyOptions {
            n_max: Some(6),
            budget: SearchBudget {
                max_nodes: 1,
                max_seconds: None,
                allow_partial: false,
            },
            ..opts()
        };
        let reports = run_claim(Claim::AkEq63, &o).unwrap();
        assert!(reports
            .iter()
            .any(|r| r.verdict == Verdict::BudgetExceeded));
    }

    #[test]
    fn claim_parsing_round_trips() {
        for c in Claim::all() {
            assert_eq!(Claim::parse(c.id()), Some(*c));
        }
        assert_eq!(Claim::parse("nope"), None);
    }
}
