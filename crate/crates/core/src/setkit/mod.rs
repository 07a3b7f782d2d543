//! Ground-set subsets, exact binomials, shade operators, and two-colouring
//! homogeneity.
//!
//! Elements are 1-based: element `p` of the ground set `[n]` lives in bit
//! `p - 1` of the mask. The ground set is capped at `n <= 63` so that one
//! subset always fits a machine word; cardinalities themselves are exact
//! [`Count`]s and may exceed word range.

mod io;

pub use io::{parse_family, parse_subsets, write_family, write_subsets};

use crate::error::{invalid, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact nonnegative integer used for all cardinalities and products.
pub type Count = BigUint;

/// Largest supported ground-set size.
pub const MAX_GROUND: u32 = 63;

/// One subset of `[n]`, encoded as a bitmask (bit `p-1` set iff `p` is a member).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSubset {
    mask: u64,
    n: u32,
}

impl KSubset {
    /// Builds a subset from a raw mask, checking that every set bit lies in `[1, n]`.
    pub fn new(mask: u64, n: u32) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(invalid(format!("ground-set size {n} outside 1..={MAX_GROUND}")));
        }
        if mask & !low_bits(n) != 0 {
            return Err(invalid(format!("mask {mask:#x} has bits outside [1, {n}]")));
        }
        Ok(Self { mask, n })
    }

    /// The empty subset of `[n]`.
    pub fn empty(n: u32) -> Result<Self> {
        Self::new(0, n)
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements(elements: &[u32], n: u32) -> Result<Self> {
        let mut mask = 0u64;
        for &p in elements {
            if p == 0 || p > n {
                return Err(invalid(format!("element {p} outside [1, {n}]")));
            }
            mask |= 1 << (p - 1);
        }
        Self::new(mask, n)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Ground-set size `n`.
    pub fn ground(&self) -> u32 {
        self.n
    }

    /// Subset cardinality.
    pub fn card(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn contains(&self, p: u32) -> bool {
        p >= 1 && p <= self.n && self.mask >> (p - 1) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &KSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn intersection_size(&self, other: &KSubset) -> u32 {
        (self.mask & other.mask).count_ones()
    }

    /// Complement within `[n]`.
    pub fn complement(&self) -> KSubset {
        KSubset {
            mask: !self.mask & low_bits(self.n),
            n: self.n,
        }
    }

    /// 1-based elements in increasing order.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.card() as usize);
        let mut m = self.mask;
        while m != 0 {
            out.push(m.trailing_zeros() + 1);
            m &= m - 1;
        }
        out
    }

    /// The shade: all supersets with exactly one more element.
    ///
    /// Rejects full subsets (there is no room above).
    pub fn shade(&self) -> Result<SetFamily> {
        if self.card() == self.n {
            return Err(invalid("shade of a full subset is undefined"));
        }
        let free = !self.mask & low_bits(self.n);
        let mut members = Vec::with_capacity((self.n - self.card()) as usize);
        let mut m = free;
        while m != 0 {
            let bit = m & m.wrapping_neg();
            members.push(self.mask | bit);
            m ^= bit;
        }
        SetFamily::new(self.n, self.card() + 1, members)
    }

    /// The m-shade: all supersets of cardinality exactly `m`.
    pub fn m_shade(&self, m: u32) -> Result<SetFamily> {
        let k = self.card();
        if m < k || m > self.n {
            return Err(invalid(format!(
                "m-shade level {m} outside [{k}, {}]",
                self.n
            )));
        }
        let free: Vec<u64> = {
            let mut bits = Vec::new();
            let mut f = !self.mask & low_bits(self.n);
            while f != 0 {
                let bit = f & f.wrapping_neg();
                bits.push(bit);
                f ^= bit;
            }
            bits
        };
        let mut members = Vec::new();
        for extra in masks_of_weight(free.len() as u32, m - k) {
            let mut add = 0u64;
            let mut e = extra;
            while e != 0 {
                let i = e.trailing_zeros();
                add |= free[i as usize];
                e &= e - 1;
            }
            members.push(self.mask | add);
        }
        SetFamily::new(self.n, m, members)
    }
}

/// A canonical family of same-size subsets: members strictly ascending as
/// integers (colexicographic order), no duplicates. Two families are equal
/// iff they are field-wise equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: u32,
    k: u32,
    members: Vec<u64>,
}

impl SetFamily {
    /// Builds a family from raw masks; sorts, dedupes, and validates.
    pub fn new(n: u32, k: u32, mut members: Vec<u64>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(invalid(format!("ground-set size {n} outside 1..={MAX_GROUND}")));
        }
        if k > n {
            return Err(invalid(format!("member cardinality {k} exceeds n={n}")));
        }
        for &m in &members {
            if m & !low_bits(n) != 0 {
                return Err(invalid(format!("member {m:#x} has bits outside [1, {n}]")));
            }
            if m.count_ones() != k {
                return Err(invalid(format!(
                    "member {m:#x} has cardinality {} != k={k}",
                    m.count_ones()
                )));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { n, k, members })
    }

    pub fn empty(n: u32, k: u32) -> Result<Self> {
        Self::new(n, k, Vec::new())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = KSubset> + '_ {
        let n = self.n;
        self.members.iter().map(move |&mask| KSubset { mask, n })
    }

    /// The shade of the whole family: deduplicated union of member shades.
    pub fn shade(&self) -> Result<SetFamily> {
        if self.k == self.n && !self.is_empty() {
            return Err(invalid("shade of a family of full subsets is undefined"));
        }
        let mut out = Vec::new();
        for x in self.iter() {
            out.extend_from_slice(x.shade()?.members());
        }
        SetFamily::new(self.n, self.k + 1, out)
    }

    /// The m-shade of the whole family: deduplicated union of member m-shades.
    pub fn m_shade(&self, m: u32) -> Result<SetFamily> {
        if m < self.k || m > self.n {
            return Err(invalid(format!(
                "m-shade level {m} outside [{}, {}]",
                self.k, self.n
            )));
        }
        if m == self.k {
            return Ok(self.clone());
        }
        let mut out = Vec::new();
        for x in self.iter() {
            out.extend_from_slice(x.m_shade(m)?.members());
        }
        SetFamily::new(self.n, m, out)
    }
}

/// A two-colouring of `[n]`, recorded by its colour-0 class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Colouring {
    zero_set: KSubset,
}

impl Colouring {
    pub fn new(zero_set: KSubset) -> Self {
        Self { zero_set }
    }

    pub fn n(&self) -> u32 {
        self.zero_set.ground()
    }

    /// The colour-0 class `c^{-1}(0)`.
    pub fn zero_set(&self) -> KSubset {
        self.zero_set
    }

    /// The colour-1 class `c^{-1}(1)`, the complement of the zero class.
    pub fn one_set(&self) -> KSubset {
        self.zero_set.complement()
    }
}

/// Exact binomial coefficient C(n, k). Returns 0 for `k < 0` or `k > n`.
/// (Negative upper arguments are unrepresentable by construction.)
pub fn binomial(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return Count::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Count::one();
    for i in 0..k {
        acc = acc * Count::from(n - i) / Count::from(i + 1);
    }
    acc
}

/// All k-subsets of `[n]` in canonical order (ascending mask value, which is
/// colexicographic order on the subsets).
pub fn enumerate_k_subsets(n: u32, k: u32) -> Result<SetFamily> {
    if n == 0 || n > MAX_GROUND {
        return Err(invalid(format!("ground-set size {n} outside 1..={MAX_GROUND}")));
    }
    if k > n {
        return Err(invalid(format!("subset size {k} exceeds n={n}")));
    }
    let members: Vec<u64> = masks_of_weight(n, k).collect();
    SetFamily::new(n, k, members)
}

/// The shade of an arbitrary collection of subsets (mixed cardinalities
/// permitted), as a deduplicated, mask-sorted list. Every member must share
/// the same ground set and have cardinality below `n`.
pub fn shade_family(members: &[KSubset]) -> Result<Vec<KSubset>> {
    let mut out: Vec<KSubset> = Vec::new();
    let mut ground: Option<u32> = None;
    for x in members {
        match ground {
            None => ground = Some(x.ground()),
            Some(n) if n != x.ground() => {
                return Err(invalid("mixed ground-set sizes in shade input"))
            }
            _ => {}
        }
        if x.card() == x.ground() {
            return Err(invalid("shade of a full subset is undefined"));
        }
        out.extend(x.shade()?.iter());
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Is `x` homogeneous for `c`, i.e. contained in one of the two colour classes?
pub fn is_homogeneous(x: &KSubset, c: &Colouring) -> Result<bool> {
    if x.ground() != c.n() {
        return Err(invalid("subset and colouring have different ground sets"));
    }
    Ok(x.is_subset_of(&c.zero_set()) || x.is_subset_of(&c.one_set()))
}

/// Counts the balanced colourings of `[2m]` for which some member of `X` is
/// homogeneous, by exhaustive scan over all C(2m, m) colourings.
pub fn covered_colourings_count(x: &SetFamily) -> Result<Count> {
    let n = x.n();
    if n % 2 != 0 {
        return Err(invalid(format!("ground-set size {n} is odd")));
    }
    let m = n / 2;
    if x.k() > m {
        return Err(invalid(format!("member cardinality {} exceeds m={m}", x.k())));
    }
    let mut covered = 0u64;
    for zero in masks_of_weight(n, m) {
        let one = !zero & low_bits(n);
        if x
            .members()
            .iter()
            .any(|&xm| xm & !zero == 0 || xm & !one == 0)
        {
            covered += 1;
        }
    }
    Ok(Count::from(covered))
}

/// Iterates over all masks of `weight` set bits inside `width` positions, in
/// ascending numeric order (Gosper's hack).
pub(crate) fn masks_of_weight(width: u32, weight: u32) -> impl Iterator<Item = u64> {
    debug_assert!(width <= 63 && weight <= width);
    let limit = 1u64 << width;
    let mut cur = if weight == 0 { 0 } else { (1u64 << weight) - 1 };
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(cur);
        }
        if cur == 0 {
            return None; // weight 0: single empty mask
        }
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        if r >= limit {
            return None;
        }
        cur = (((r ^ cur) >> 2) / c) | r;
        Some(cur)
    })
}

pub(crate) fn low_bits(n: u32) -> u64 {
    debug_assert!(n <= 63);
    (1u64 << n) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(elems: &[u32], n: u32) -> KSubset {
        KSubset::from_elements(elems, n).unwrap()
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), Count::from(6u32));
        assert_eq!(binomial(7, 0), Count::from(1u32));
        assert_eq!(binomial(5, -1), Count::zero());
        assert_eq!(binomial(5, 6), Count::zero());
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        // Independent oracle: Pascal's triangle, built additively.
        let mut row: Vec<Count> = vec![Count::one()];
        for n in 0..=64u64 {
            for (k, c) in row.iter().enumerate() {
                assert_eq!(binomial(n, k as i64), *c, "C({n},{k})");
            }
            let mut next = vec![Count::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(Count::one());
            row = next;
        }
        // Frozen spot value computed with the oracle above.
        assert_eq!(binomial(52, 5), Count::from(2_598_960u64));
    }

    #[test]
    fn enumerate_small_families() {
        let f = enumerate_k_subsets(3, 2).unwrap();
        assert_eq!(f.members(), &[0b011, 0b101, 0b110]);

        let f = enumerate_k_subsets(4, 0).unwrap();
        assert_eq!(f.members(), &[0]);

        let f = enumerate_k_subsets(5, 3).unwrap();
        assert_eq!(Count::from(f.len()), binomial(5, 3));
    }

    #[test]
    fn enumerate_rejects_oversized_k() {
        assert!(enumerate_k_subsets(3, 4).is_err());
        assert!(enumerate_k_subsets(64, 1).is_err());
    }

    #[test]
    fn shade_examples() {
        let x = sub(&[1], 3);
        let s = x.shade().unwrap();
        assert_eq!(s, SetFamily::new(3, 2, vec![0b011, 0b101]).unwrap());

        let e = KSubset::empty(2).unwrap();
        assert_eq!(e.shade().unwrap().members(), &[0b01, 0b10]);

        assert!(sub(&[1, 2, 3], 3).shade().is_err());
    }

    #[test]
    fn shade_size_law() {
        for n in 1..=10u32 {
            for mask in 0..(1u64 << n) {
                let x = KSubset::new(mask, n).unwrap();
                if x.card() < n {
                    assert_eq!(x.shade().unwrap().len() as u32, n - x.card());
                }
            }
        }
    }

    #[test]
    fn shade_family_mixed_sizes() {
        let xs = [sub(&[1], 3), sub(&[2], 3)];
        let out = shade_family(&xs).unwrap();
        let masks: Vec<u64> = out.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0b011, 0b101, 0b110]);

        let out = shade_family(&[KSubset::empty(4).unwrap()]).unwrap();
        assert_eq!(out.len(), 4);

        assert!(shade_family(&[]).unwrap().is_empty());
        assert!(shade_family(&[sub(&[1, 2], 2)]).is_err());
    }

    #[test]
    fn m_shade_examples() {
        let x = sub(&[1, 2], 4);
        assert_eq!(x.m_shade(2).unwrap().members(), &[0b0011]);

        let x = sub(&[1], 3);
        assert_eq!(x.m_shade(2).unwrap(), x.shade().unwrap());

        assert!(sub(&[1, 2], 4).m_shade(1).is_err());
        assert!(sub(&[1, 2], 4).m_shade(5).is_err());
    }

    #[test]
    fn m_shade_size_law_exhaustive() {
        // |m_shade(x, m)| = C(n - |x|, m - |x|), checked against the
        // enumeration itself for every x, m with n <= 9.
        for n in 1..=9u32 {
            for mask in 0..(1u64 << n) {
                let x = KSubset::new(mask, n).unwrap();
                for m in x.card()..=n {
                    let got = x.m_shade(m).unwrap().len();
                    let want = binomial((n - x.card()) as u64, (m - x.card()) as i64);
                    assert_eq!(Count::from(got), want);
                }
            }
        }
    }

    #[test]
    fn family_m_shade_identity_and_monotone() {
        let f = SetFamily::new(4, 2, vec![0b0011]).unwrap();
        assert_eq!(f.m_shade(2).unwrap(), f);
        assert_eq!(f.m_shade(3).unwrap().members(), &[0b0111, 0b1011]);

        let g = SetFamily::new(4, 2, vec![0b0011, 0b0101]).unwrap();
        let fs = f.m_shade(4).unwrap();
        let gs = g.m_shade(4).unwrap();
        assert!(fs.members().iter().all(|m| gs.contains_mask(*m)));
    }

    #[test]
    fn homogeneity_examples() {
        let c = Colouring::new(sub(&[1, 2], 4));
        assert!(is_homogeneous(&sub(&[1, 2], 4), &c).unwrap());
        assert!(!is_homogeneous(&sub(&[1, 3], 4), &c).unwrap());
        assert!(is_homogeneous(&sub(&[3, 4], 4), &c).unwrap());
        assert!(is_homogeneous(&KSubset::empty(4).unwrap(), &c).unwrap());
        assert!(is_homogeneous(&sub(&[1], 2), &Colouring::new(sub(&[1, 2], 4))).is_err());
    }

    #[test]
    fn covered_colourings_examples() {
        let x = SetFamily::new(2, 1, vec![0b01]).unwrap();
        assert_eq!(covered_colourings_count(&x).unwrap(), Count::from(2u32));

        let x = SetFamily::new(4, 2, vec![0b0011]).unwrap();
        assert_eq!(covered_colourings_count(&x).unwrap(), Count::from(2u32));

        let x = SetFamily::empty(4, 2).unwrap();
        assert_eq!(covered_colourings_count(&x).unwrap(), Count::zero());

        let odd = SetFamily::new(3, 1, vec![0b001]).unwrap();
        assert!(covered_colourings_count(&odd).is_err());
    }

    #[test]
    fn canonical_form_idempotent() {
        let a = SetFamily::new(4, 2, vec![0b1010, 0b0011, 0b0101]).unwrap();
        let b = SetFamily::new(4, 2, vec![0b0011, 0b0101, 0b1010, 0b0011]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn masks_of_weight_counts() {
        for n in 0..=12u32 {
            for k in 0..=n {
                let cnt = masks_of_weight(n, k).count();
                assert_eq!(Count::from(cnt), binomial(n as u64, k as i64));
            }
        }
    }
}
