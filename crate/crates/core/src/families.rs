//! The candidate-optimal families `F_i(n, k, t)` and `G_ij(n, k, t)`, their
//! exact cardinalities, and the intersecting predicates and shade identities
//! they satisfy.
//!
//! `F_i(n, k, t)` collects the k-subsets of `[n]` meeting `[t + 2i]` in at
//! least `t + i` elements; `G_ij` replaces the window by `[t + i + j]` with
//! the same threshold, so `F_i = G_ii`.

use crate::error::{invalid, Result};
use crate::report::{Verdict, VerificationReport};
use crate::setkit::{binomial, low_bits, masks_of_weight, write_family, Count, SetFamily};
use num_traits::Zero;

/// Index of a family `F_i(n, k, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FranklIndex {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub i: u32,
}

impl FranklIndex {
    pub fn new(n: u32, k: u32, t: u32, i: u32) -> Result<Self> {
        if !(1 <= t && t <= k && k <= n) {
            return Err(invalid(format!("need 1 <= t <= k <= n, got t={t} k={k} n={n}")));
        }
        if 2 * i > n - t {
            return Err(invalid(format!("need 2i <= n - t, got i={i} n-t={}", n - t)));
        }
        Ok(Self { n, k, t, i })
    }

    /// Window size `t + 2i`.
    fn window(&self) -> u32 {
        self.t + 2 * self.i
    }

    /// Intersection threshold `t + i`.
    fn threshold(&self) -> u32 {
        self.t + self.i
    }
}

/// Index of a family `G_ij(n, k, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenIndex {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub i: u32,
    pub j: u32,
}

impl GenIndex {
    pub fn new(n: u32, k: u32, t: u32, i: u32, j: u32) -> Result<Self> {
        if !(1 <= t && t <= k && k <= n) {
            return Err(invalid(format!("need 1 <= t <= k <= n, got t={t} k={k} n={n}")));
        }
        if i + j > n - t {
            return Err(invalid(format!(
                "need i + j <= n - t, got i+j={} n-t={}",
                i + j,
                n - t
            )));
        }
        Ok(Self { n, k, t, i, j })
    }

    fn window(&self) -> u32 {
        self.t + self.i + self.j
    }

    fn threshold(&self) -> u32 {
        self.t + self.i
    }
}

fn window_family(n: u32, k: u32, window: u32, threshold: u32) -> Result<SetFamily> {
    let wmask = low_bits(window);
    let members = masks_of_weight(n, k)
        .filter(|&m| (m & wmask).count_ones() >= threshold)
        .collect();
    SetFamily::new(n, k, members)
}

fn window_card(n: u32, k: u32, window: u32, threshold: u32) -> Count {
    // Split each member by its intersection size r with the window.
    let mut total = Count::zero();
    for r in threshold..=window.min(k) {
        total += binomial(window as u64, r as i64)
            * binomial((n - window) as u64, (k - r) as i64);
    }
    total
}

/// Materializes `F_i(n, k, t)`. Empty (not an error) when `i > k - t`.
pub fn frankl_family(idx: FranklIndex) -> Result<SetFamily> {
    window_family(idx.n, idx.k, idx.window(), idx.threshold())
}

/// Materializes `G_ij(n, k, t)`.
pub fn g_family(idx: GenIndex) -> Result<SetFamily> {
    window_family(idx.n, idx.k, idx.window(), idx.threshold())
}

/// `|F_i(n, k, t)|` without materializing the family, via the hypergeometric
/// sum over intersection sizes with the window.
pub fn frankl_card(idx: FranklIndex) -> Count {
    window_card(idx.n, idx.k, idx.window(), idx.threshold())
}

/// `|G_ij(n, k, t)|` without materializing the family.
pub fn g_card(idx: GenIndex) -> Count {
    window_card(idx.n, idx.k, idx.window(), idx.threshold())
}

/// `|F_i(2m, m, 2s)|` by the central complement identity:
/// half of `C(2m, m)` minus the middle band of the window distribution.
///
/// Only the `n = 2k`, even-`t` case admits this route; other parameters are
/// rejected.
pub fn frankl_card_center(m: u32, s: u32, i: u32) -> Result<Count> {
    if s == 0 {
        return Err(invalid("need s >= 1"));
    }
    if s + i > m {
        return Err(invalid(format!("need s + i <= m, got s+i={} m={m}", s + i)));
    }
    if 2 * s > m {
        return Err(invalid(format!("need t = 2s <= k = m, got 2s={} m={m}", 2 * s)));
    }
    let w = 2 * (s + i);
    let mut band = Count::zero();
    for j in -(s as i64 - 1)..=(s as i64 - 1) {
        band += binomial(w as u64, (s + i) as i64 + j)
            * binomial((2 * m - w) as u64, m as i64 - ((s + i) as i64 + j));
    }
    let total = binomial(2 * m as u64, m as i64);
    debug_assert!(band <= total);
    let diff = total - band;
    // The members not in the middle band pair off with their complements,
    // exactly one of each pair lying in F_i, so the difference is even.
    debug_assert!((&diff % 2u32).is_zero());
    Ok(diff / 2u32)
}

/// Is every pair of members (including a member with itself) `t`-intersecting?
pub fn is_t_intersecting(a: &SetFamily, t: u32) -> bool {
    let members = a.members();
    for (pos, &e) in members.iter().enumerate() {
        if e.count_ones() < t {
            return false;
        }
        for &f in &members[pos + 1..] {
            if (e & f).count_ones() < t {
                return false;
            }
        }
    }
    true
}

/// Do all pairs `E in A, F in B` share at least `t` elements?
pub fn is_cross_t_intersecting(a: &SetFamily, b: &SetFamily, t: u32) -> Result<bool> {
    if a.n() != b.n() {
        return Err(invalid("families live on different ground sets"));
    }
    for &e in a.members() {
        for &f in b.members() {
            if (e & f).count_ones() < t {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_tuple_bounds(n: u32, k: u32, t: u32, m: u32) -> Result<()> {
    if !(1 <= t && t <= k && k <= m && m <= n) {
        return Err(invalid(format!(
            "need 1 <= t <= k <= m <= n, got t={t} k={k} m={m} n={n}"
        )));
    }
    Ok(())
}

/// Checks the `F_i` shade identities at one `(n, k, t, m)` tuple:
/// `F_i(n,k,t)` is empty for `i > k - t`, and the m-shade of `F_i(n,k,t)`
/// equals `F_i(n,m,t)` for `i <= k - t`.
pub fn check_frankl_shade_identity(n: u32, k: u32, t: u32, m: u32) -> Result<VerificationReport> {
    check_tuple_bounds(n, k, t, m)?;
    let params = vec![n as i64, k as i64, t as i64, m as i64];
    let claim = "lemma-2.2";

    for i in 0..=(n - t) / 2 {
        let fk = frankl_family(FranklIndex::new(n, k, t, i)?)?;
        if i > k - t {
            if !fk.is_empty() {
                return Ok(witness_report(claim, params, &fk, i as i64, None));
            }
            continue;
        }
        let shaded = fk.m_shade(m)?;
        let fm = frankl_family(FranklIndex::new(n, m, t, i)?)?;
        if shaded != fm {
            return Ok(witness_report(claim, params, &shaded, i as i64, None));
        }
    }
    Ok(VerificationReport::confirmed(claim, params))
}

/// Checks the `G_ij` shade identities at one `(n, k, t, m)` tuple, mirroring
/// [`check_frankl_shade_identity`].
pub fn check_g_shade_identity(n: u32, k: u32, t: u32, m: u32) -> Result<VerificationReport> {
    check_tuple_bounds(n, k, t, m)?;
    let params = vec![n as i64, k as i64, t as i64, m as i64];
    let claim = "lemma-3.6";

    for i in 0..=(n - t) {
        for j in 0..=(n - t - i) {
            let gk = g_family(GenIndex::new(n, k, t, i, j)?)?;
            if i > k - t {
                if !gk.is_empty() {
                    return Ok(witness_report(claim, params, &gk, i as i64, Some(j as i64)));
                }
                continue;
            }
            let shaded = gk.m_shade(m)?;
            let gm = g_family(GenIndex::new(n, m, t, i, j)?)?;
            if shaded != gm {
                return Ok(witness_report(claim, params, &shaded, i as i64, Some(j as i64)));
            }
        }
    }
    Ok(VerificationReport::confirmed(claim, params))
}

/// Runs both shade-identity checks at one tuple; the first failure wins.
pub fn check_shade_identities(n: u32, k: u32, t: u32, m: u32) -> Result<VerificationReport> {
    let f = check_frankl_shade_identity(n, k, t, m)?;
    if f.verdict != Verdict::Confirmed {
        return Ok(f);
    }
    check_g_shade_identity(n, k, t, m)
}

fn witness_report(
    claim: &str,
    mut params: Vec<i64>,
    family: &SetFamily,
    i: i64,
    j: Option<i64>,
) -> VerificationReport {
    params.push(i);
    if let Some(j) = j {
        params.push(j);
    }
    VerificationReport::refuted(claim, params, write_family(family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setkit::enumerate_k_subsets;

    fn fidx(n: u32, k: u32, t: u32, i: u32) -> FranklIndex {
        FranklIndex::new(n, k, t, i).unwrap()
    }

    fn gidx(n: u32, k: u32, t: u32, i: u32, j: u32) -> GenIndex {
        GenIndex::new(n, k, t, i, j).unwrap()
    }

    #[test]
    fn frankl_family_examples() {
        let f = frankl_family(fidx(4, 2, 2, 0)).unwrap();
        assert_eq!(f.members(), &[0b0011]);

        let f = frankl_family(fidx(4, 2, 1, 0)).unwrap();
        assert_eq!(f.members(), &[0b0011, 0b0101, 0b1001]);

        // F_1(6, 3, 2) is exactly the 3-subsets of [4], of size 4.
        let f = frankl_family(fidx(6, 3, 2, 1)).unwrap();
        let expected: Vec<u64> = enumerate_k_subsets(4, 3).unwrap().members().to_vec();
        assert_eq!(f, SetFamily::new(6, 3, expected).unwrap());
    }

    #[test]
    fn g_family_examples() {
        // i = j collapses to the Frankl family.
        for n in 2..=7u32 {
            for t in 1..=n {
                for k in t..=n {
                    for i in 0..=((n - t) / 2) {
                        let f = frankl_family(fidx(n, k, t, i)).unwrap();
                        let g = g_family(gidx(n, k, t, i, i)).unwrap();
                        assert_eq!(f, g);
                    }
                }
            }
        }

        let g = g_family(gidx(4, 2, 1, 0, 1)).unwrap();
        assert_eq!(g.len(), 5);
        assert!(!g.contains_mask(0b1100));

        let g = g_family(gidx(4, 2, 1, 1, 0)).unwrap();
        assert_eq!(g.members(), &[0b0011]);
    }

    #[test]
    fn cards_match_enumeration() {
        // Oracle equivalence: the closed-form sums against materialized sizes.
        for n in 1..=9u32 {
            for t in 1..=n {
                for k in t..=n {
                    for i in 0..=((n - t) / 2) {
                        let idx = fidx(n, k, t, i);
                        assert_eq!(
                            frankl_card(idx),
                            Count::from(frankl_family(idx).unwrap().len()),
                            "F {n} {k} {t} {i}"
                        );
                    }
                    for i in 0..=(n - t) {
                        for j in 0..=(n - t - i) {
                            let idx = gidx(n, k, t, i, j);
                            assert_eq!(
                                g_card(idx),
                                Count::from(g_family(idx).unwrap().len()),
                                "G {n} {k} {t} {i} {j}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn card_known_values() {
        assert_eq!(frankl_card(fidx(4, 2, 2, 0)), Count::from(1u32));
        assert_eq!(frankl_card(fidx(8, 4, 2, 0)), binomial(6, 2));
        assert_eq!(frankl_card(fidx(6, 3, 2, 1)), Count::from(4u32));
        // Central star count |F_0(2m, m, t)| = C(2m - t, m - t).
        for m in 1..=8u64 {
            for t in 1..=m {
                assert_eq!(
                    frankl_card(fidx(2 * m as u32, m as u32, t as u32, 0)),
                    binomial(2 * m - t, (m - t) as i64)
                );
            }
        }
        assert_eq!(g_card(gidx(4, 2, 1, 0, 1)), Count::from(5u32));
        assert_eq!(g_card(gidx(4, 2, 1, 1, 0)), Count::from(1u32));
    }

    #[test]
    fn center_formula_matches_general_sum() {
        assert_eq!(frankl_card_center(2, 1, 0).unwrap(), Count::from(1u32));
        assert_eq!(frankl_card_center(3, 1, 1).unwrap(), Count::from(4u32));
        for m in 1..=8u32 {
            for s in 1..=(m / 2) {
                for i in 0..=(m - s) {
                    let center = frankl_card_center(m, s, i).unwrap();
                    let general = frankl_card(fidx(2 * m, m, 2 * s, i));
                    assert_eq!(center, general, "m={m} s={s} i={i}");
                }
            }
        }
        // Exact integer equality of the two counting routes persists at
        // every m up to 100 (sampled indices).
        for m in [20u32, 50, 100] {
            for s in [1u32, 2, 5] {
                for i in [0u32, 1, m / 3, m - s] {
                    if s + i > m || 2 * s > m {
                        continue;
                    }
                    let center = frankl_card_center(m, s, i).unwrap();
                    let general = frankl_card(fidx(2 * m, m, 2 * s, i));
                    assert_eq!(center, general, "m={m} s={s} i={i}");
                }
            }
        }
    }

    #[test]
    fn center_formula_reproduces_fourm_value() {
        // 1/2 (C(4m, 2m) - C(2m, m)^2) = |F_{m-1}(4m, 2m, 2)| for small m.
        for m in 1..=4u32 {
            let rhs = (binomial(4 * m as u64, 2 * m as i64)
                - binomial(2 * m as u64, m as i64) * binomial(2 * m as u64, m as i64))
                / 2u32;
            assert_eq!(frankl_card_center(2 * m, 1, m - 1).unwrap(), rhs);
        }
    }

    #[test]
    fn center_formula_rejects_bad_params() {
        assert!(frankl_card_center(4, 0, 1).is_err());
        assert!(frankl_card_center(4, 1, 4).is_err());
        assert!(frankl_card_center(3, 2, 0).is_err());
    }

    #[test]
    fn intersecting_predicates() {
        assert!(is_t_intersecting(&SetFamily::empty(4, 2).unwrap(), 1));
        let disjoint = SetFamily::new(4, 2, vec![0b0011, 0b1100]).unwrap();
        assert!(!is_t_intersecting(&disjoint, 1));

        for n in 2..=8u32 {
            for t in 1..=n {
                for k in t..=n {
                    for i in 0..=((n - t) / 2) {
                        let f = frankl_family(fidx(n, k, t, i)).unwrap();
                        assert!(is_t_intersecting(&f, t), "F_{i}({n},{k},{t})");
                    }
                }
            }
        }
    }

    #[test]
    fn cross_intersecting_examples() {
        let a = SetFamily::new(4, 2, vec![0b0011]).unwrap();
        let b = SetFamily::new(4, 2, vec![0b1100]).unwrap();
        assert!(!is_cross_t_intersecting(&a, &b, 1).unwrap());
        assert!(is_cross_t_intersecting(&SetFamily::empty(4, 2).unwrap(), &b, 1).unwrap());
        let c = SetFamily::new(5, 2, vec![0b00011]).unwrap();
        assert!(is_cross_t_intersecting(&a, &c, 1).is_err());
    }

    #[test]
    fn g_pairs_are_cross_intersecting() {
        for n in 2..=7u32 {
            for t in 1..=n {
                for k in t..=n {
                    for l in t..=n {
                        for i in 0..=(n - t) {
                            for j in 0..=(n - t - i) {
                                let a = g_family(gidx(n, k, t, i, j)).unwrap();
                                let b = g_family(gidx(n, l, t, j, i)).unwrap();
                                assert!(
                                    is_cross_t_intersecting(&a, &b, t).unwrap(),
                                    "G pair n={n} k={k} l={l} t={t} i={i} j={j}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shade_identities_confirm() {
        let r = check_shade_identities(6, 3, 2, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);

        // k = t: only i = 0 is nonempty, the t-star shades to the m-star.
        let r = check_shade_identities(6, 2, 2, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);

        // Exercises the forced-empty branch (i = 3 > k - t = 2 at n = 5).
        let r = check_shade_identities(5, 3, 1, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
    }
}
