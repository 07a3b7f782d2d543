//! Brute-force oracles for the extremal quantities, with witnesses, plus the
//! conjectured closed-form values they are compared against.
//!
//! The searches are exact under sufficient budget:
//! * maximum family size via branch-and-bound maximum clique on the
//!   intersection graph (vertices are k-subsets, edges are t-intersecting
//!   pairs);
//! * maximum shade size via maximal-clique enumeration (the shade objective
//!   is monotone, so optima occur at maximal families);
//! * cross products via lectic enumeration of Galois-closed families
//!   (optimal pairs satisfy `A = cl(cl(A))`, `B = cl(A)`).

mod antichain;
mod bitset;
mod clique;
mod closure;

use crate::error::{invalid, Error, Result};
use crate::families::{frankl_card, g_card, FranklIndex, GenIndex};
use crate::setkit::{
    binomial, enumerate_k_subsets, masks_of_weight, write_family, write_subsets, Count, KSubset,
    SetFamily,
};
use bitset::BlockSet;
use num_traits::Zero;
use std::time::Instant;

/// Hard cap on the ground-set size for the exhaustive searches. The CLI
/// applies a lower default; this bound protects against runaway memory.
pub const HARD_SEARCH_CAP: u32 = 14;

/// Caps on an exhaustive search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum number of search-tree nodes (branch expansions or closure
    /// computations) before giving up.
    pub max_nodes: u64,
    /// Optional wall-clock cutoff. Time-based cutoffs make outcomes depend on
    /// the machine; leave unset for reproducible runs.
    pub max_seconds: Option<f64>,
    /// On exhaustion, return the best bound found so far instead of failing.
    pub allow_partial: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 100_000_000,
            max_seconds: None,
            allow_partial: false,
        }
    }
}

/// Whether a search proved optimality or only produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Optimal,
    LowerBound,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::Optimal => "OPTIMAL",
            SearchStatus::LowerBound => "LOWER_BOUND",
        }
    }
}

/// A witness family: uniform for the intersecting-family searches, mixed for
/// the Sperner antichain search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Uniform(SetFamily),
    Mixed { n: u32, members: Vec<KSubset> },
}

impl Witness {
    /// Serializes in the family line format.
    pub fn to_text(&self) -> String {
        match self {
            Witness::Uniform(f) => write_family(f),
            Witness::Mixed { n, members } => write_subsets(*n, members),
        }
    }
}

/// Value, witnesses, and optimality status of one extremal search.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub value: Count,
    pub witness_a: Witness,
    /// Second family of a cross pair.
    pub witness_b: Option<Witness>,
    pub status: SearchStatus,
    /// Search-tree nodes expanded.
    pub nodes: u64,
    /// Wall-clock seconds. Informational only; not part of any deterministic
    /// output surface.
    pub seconds: f64,
}

/// Signal that the node or time budget ran out mid-search.
#[derive(Debug)]
pub(crate) struct Stop;

pub(crate) struct Ticker {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<(Instant, f64)>,
}

impl Ticker {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.max_seconds.map(|s| (Instant::now(), s)),
        }
    }

    pub fn tick(&mut self) -> std::result::Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Stop);
        }
        if let Some((start, secs)) = self.deadline {
            if self.nodes % 1024 == 0 && start.elapsed().as_secs_f64() > secs {
                return Err(Stop);
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}

fn check_search_n(n: u32) -> Result<()> {
    if n > HARD_SEARCH_CAP {
        return Err(invalid(format!(
            "ground-set size {n} exceeds the search cap {HARD_SEARCH_CAP}"
        )));
    }
    Ok(())
}

/// Exact size of the m-shade of the family given by `members` (k-subsets of
/// `[n]`), picking the cheaper of generating supersets or scanning level m.
pub(crate) fn m_shade_size(n: u32, k: u32, m: u32, members: &[u64]) -> u64 {
    debug_assert!(k <= m && m <= n);
    if members.is_empty() {
        return 0;
    }
    if m == k {
        return members.len() as u64;
    }
    let per_member = binomial((n - k) as u64, (m - k) as i64);
    let level = binomial(n as u64, m as i64);
    // Route (a) generates |A| * C(n-k, m-k) supersets and dedupes; route (b)
    // scans all C(n, m) masks testing membership. Both costs fit u64 at the
    // search cap.
    let cost_a = per_member
        .clone()
        .try_into()
        .map(|p: u64| p.saturating_mul(members.len() as u64))
        .unwrap_or(u64::MAX);
    let cost_b = level
        .clone()
        .try_into()
        .map(|l: u64| l.saturating_mul(members.len() as u64 / 2 + 1))
        .unwrap_or(u64::MAX);
    if cost_a <= cost_b {
        let mut shade: Vec<u64> = Vec::with_capacity(cost_a as usize);
        for &x in members {
            let sub = KSubset::new(x, n).expect("member validated upstream");
            shade.extend_from_slice(sub.m_shade(m).expect("k <= m <= n").members());
        }
        shade.sort_unstable();
        shade.dedup();
        shade.len() as u64
    } else {
        let mut count = 0u64;
        for y in masks_of_weight(n, m) {
            if members.iter().any(|&x| x & !y == 0) {
                count += 1;
            }
        }
        count
    }
}

fn intersection_graph(family: &SetFamily, t: u32) -> Vec<BlockSet> {
    let masks = family.members();
    let mut adj = vec![BlockSet::empty(masks.len()); masks.len()];
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i + 1) {
            if (a & b).count_ones() >= t {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

fn family_from_indices(vertices: &SetFamily, idx: &[usize]) -> SetFamily {
    let masks: Vec<u64> = idx.iter().map(|&i| vertices.members()[i]).collect();
    SetFamily::new(vertices.n(), vertices.k(), masks).expect("members come from a valid family")
}

/// M(n, k, t): the maximum size of a t-intersecting family of k-subsets of
/// `[n]`, with a lexicographically least witness among the optima.
pub fn max_t_intersecting(n: u32, k: u32, t: u32, budget: &SearchBudget) -> Result<ExtremalResult> {
    if !(1 <= t && t <= k && k <= n) {
        return Err(invalid(format!("need 1 <= t <= k <= n, got t={t} k={k} n={n}")));
    }
    check_search_n(n)?;
    let started = Instant::now();
    let vertices = enumerate_k_subsets(n, k)?;
    let adj = intersection_graph(&vertices, t);
    let mut ticker = Ticker::new(budget);

    match clique::max_clique_lex_least(&adj, &mut ticker) {
        Ok(best) => Ok(ExtremalResult {
            value: Count::from(best.len()),
            witness_a: Witness::Uniform(family_from_indices(&vertices, &best)),
            witness_b: None,
            status: SearchStatus::Optimal,
            nodes: ticker.nodes(),
            seconds: started.elapsed().as_secs_f64(),
        }),
        Err(clique::Partial(best)) => {
            if !budget.allow_partial {
                return Err(Error::BudgetExhausted {
                    nodes: ticker.nodes(),
                });
            }
            Ok(ExtremalResult {
                value: Count::from(best.len()),
                witness_a: Witness::Uniform(family_from_indices(&vertices, &best)),
                witness_b: None,
                status: SearchStatus::LowerBound,
                nodes: ticker.nodes(),
                seconds: started.elapsed().as_secs_f64(),
            })
        }
    }
}

/// The Frankl/Ahlswede-Khachatrian value: max over i of |F_i(n, k, t)|.
pub fn ak_value(n: u32, k: u32, t: u32) -> Result<Count> {
    if !(1 <= t && t <= k && k <= n) {
        return Err(invalid(format!("need 1 <= t <= k <= n, got t={t} k={k} n={n}")));
    }
    let mut best = Count::zero();
    for i in 0..=((n - t) / 2) {
        let v = frankl_card(FranklIndex::new(n, k, t, i)?);
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

/// M_0(n, m, k, t): the maximum m-shade size over t-intersecting families of
/// k-subsets of `[n]`. Optima occur at maximal families (the shade objective
/// is monotone), so maximal cliques are enumerated and evaluated.
pub fn max_m_shade(n: u32, m: u32, k: u32, t: u32, budget: &SearchBudget) -> Result<ExtremalResult> {
    if !(1 <= t && t <= k && k <= m && m <= n) {
        return Err(invalid(format!(
            "need 1 <= t <= k <= m <= n, got t={t} k={k} m={m} n={n}"
        )));
    }
    check_search_n(n)?;
    let started = Instant::now();
    let vertices = enumerate_k_subsets(n, k)?;
    let adj = intersection_graph(&vertices, t);
    let mut ticker = Ticker::new(budget);

    let mut best_val = 0u64;
    let mut best_family: Option<Vec<usize>> = None;
    let masks = vertices.members();
    let outcome = clique::for_each_maximal_clique(&adj, &mut ticker, |clique_idx| {
        let member_masks: Vec<u64> = clique_idx.iter().map(|&i| masks[i]).collect();
        let val = m_shade_size(n, k, m, &member_masks);
        if val > best_val
            || (val == best_val
                && best_family
                    .as_ref()
                    .is_some_and(|b| clique_idx < b.as_slice()))
        {
            best_val = val;
            best_family = Some(clique_idx.to_vec());
        }
    });

    let status = match outcome {
        Ok(()) => SearchStatus::Optimal,
        Err(Stop) => {
            if !budget.allow_partial {
                return Err(Error::BudgetExhausted {
                    nodes: ticker.nodes(),
                });
            }
            SearchStatus::LowerBound
        }
    };
    let witness = best_family.ok_or_else(|| Error::BudgetExhausted {
        nodes: ticker.nodes(),
    })?;
    Ok(ExtremalResult {
        value: Count::from(best_val),
        witness_a: Witness::Uniform(family_from_indices(&vertices, &witness)),
        witness_b: None,
        status,
        nodes: ticker.nodes(),
        seconds: started.elapsed().as_secs_f64(),
    })
}

/// The conjectured value of M_0: max over admissible i of |F_i(n, m, t)|.
pub fn conjecture_j1_value(n: u32, m: u32, k: u32, t: u32) -> Result<Count> {
    if !(1 <= t && t <= k && k <= m && m <= n) {
        return Err(invalid(format!(
            "need 1 <= t <= k <= m <= n, got t={t} k={k} m={m} n={n}"
        )));
    }
    let mut best = Count::zero();
    for i in 0..=(k - t).min((n - t) / 2) {
        let v = frankl_card(FranklIndex::new(n, m, t, i)?);
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

/// N(n, k, l, t): the maximum of |A| * |B| over cross-t-intersecting pairs,
/// by enumerating Galois-closed families of k-subsets in lectic order.
pub fn max_cross_product(
    n: u32,
    k: u32,
    l: u32,
    t: u32,
    budget: &SearchBudget,
) -> Result<ExtremalResult> {
    if !(1 <= t && t <= k.min(l) && k <= n && l <= n) {
        return Err(invalid(format!(
            "need 1 <= t <= min(k, l) <= max(k, l) <= n, got k={k} l={l} t={t} n={n}"
        )));
    }
    check_search_n(n)?;
    cross_search(n, k, l, t, budget, |a_masks, b_masks| {
        (a_masks.len() as u64) * (b_masks.len() as u64)
    })
}

/// The conjectured value of N: max over (i, j) of |G_ij(n,k,t)| * |G_ji(n,l,t)|.
pub fn conjecture_j4_value(n: u32, k: u32, l: u32, t: u32) -> Result<Count> {
    if !(1 <= t && t <= k.min(l) && k <= n && l <= n) {
        return Err(invalid(format!(
            "need 1 <= t <= min(k, l) <= max(k, l) <= n, got k={k} l={l} t={t} n={n}"
        )));
    }
    let mut best = Count::zero();
    for i in 0..=(n - t) {
        for j in 0..=(n - t - i) {
            let v = g_card(GenIndex::new(n, k, t, i, j)?) * g_card(GenIndex::new(n, l, t, j, i)?);
            if v > best {
                best = v;
            }
        }
    }
    Ok(best)
}

/// N_0(n, m_k, m_l, k, l, t): the maximum of |shade_{m_k}(A)| * |shade_{m_l}(B)|
/// over cross-t-intersecting pairs.
pub fn max_cross_shade_product(
    n: u32,
    mk: u32,
    ml: u32,
    k: u32,
    l: u32,
    t: u32,
    budget: &SearchBudget,
) -> Result<ExtremalResult> {
    if !(1 <= t && t <= k && k <= mk && mk <= n && t <= l && l <= ml && ml <= n) {
        return Err(invalid(format!(
            "need t <= k <= m_k <= n and t <= l <= m_l <= n, got n={n} mk={mk} ml={ml} k={k} l={l} t={t}"
        )));
    }
    check_search_n(n)?;
    cross_search(n, k, l, t, budget, move |a_masks, b_masks| {
        m_shade_size(n, k, mk, a_masks) * m_shade_size(n, l, ml, b_masks)
    })
}

/// N_1(n, m, k, t) = N_0(n, m, m, k, k, t), the equal-level diagonal.
pub fn max_cross_shade_diagonal(
    n: u32,
    m: u32,
    k: u32,
    t: u32,
    budget: &SearchBudget,
) -> Result<ExtremalResult> {
    max_cross_shade_product(n, m, m, k, k, t, budget)
}

/// The conjectured value of N_0: max over admissible (i, j) of
/// |G_ij(n, m_k, t)| * |G_ji(n, m_l, t)|.
pub fn conjecture_j5_value(n: u32, mk: u32, ml: u32, k: u32, l: u32, t: u32) -> Result<Count> {
    if !(1 <= t && t <= k && k <= mk && mk <= n && t <= l && l <= ml && ml <= n) {
        return Err(invalid(format!(
            "need t <= k <= m_k <= n and t <= l <= m_l <= n, got n={n} mk={mk} ml={ml} k={k} l={l} t={t}"
        )));
    }
    let mut best = Count::zero();
    for i in 0..=(k - t) {
        for j in 0..=(l - t) {
            if i + j > n - t {
                continue;
            }
            let v =
                g_card(GenIndex::new(n, mk, t, i, j)?) * g_card(GenIndex::new(n, ml, t, j, i)?);
            if v > best {
                best = v;
            }
        }
    }
    Ok(best)
}

fn cross_search(
    n: u32,
    k: u32,
    l: u32,
    t: u32,
    budget: &SearchBudget,
    objective: impl Fn(&[u64], &[u64]) -> u64,
) -> Result<ExtremalResult> {
    let started = Instant::now();
    let space = closure::CrossSpace::new(n, k, l, t)?;
    let mut ticker = Ticker::new(budget);

    let mut best_val = 0u64;
    let mut best_pair: Option<(Vec<u64>, Vec<u64>)> = None;
    let outcome = space.for_each_closed_pair(&mut ticker, |a_masks, b_masks| {
        let val = objective(a_masks, b_masks);
        let better = match &best_pair {
            None => true,
            Some((ba, bb)) => {
                val > best_val
                    || (val == best_val
                        && (a_masks, b_masks) < (ba.as_slice(), bb.as_slice()))
            }
        };
        if better {
            best_val = val;
            best_pair = Some((a_masks.to_vec(), b_masks.to_vec()));
        }
    });

    let status = match outcome {
        Ok(()) => SearchStatus::Optimal,
        Err(Stop) => {
            if !budget.allow_partial {
                return Err(Error::BudgetExhausted {
                    nodes: ticker.nodes(),
                });
            }
            SearchStatus::LowerBound
        }
    };
    let (a_masks, b_masks) = best_pair.ok_or_else(|| Error::BudgetExhausted {
        nodes: ticker.nodes(),
    })?;
    Ok(ExtremalResult {
        value: Count::from(best_val),
        witness_a: Witness::Uniform(SetFamily::new(n, k, a_masks)?),
        witness_b: Some(Witness::Uniform(SetFamily::new(n, l, b_masks)?)),
        status,
        nodes: ticker.nodes(),
        seconds: started.elapsed().as_secs_f64(),
    })
}

/// Cap on the Sperner search; the count of antichains grows as the Dedekind
/// numbers, so exhaustive enumeration stops being a desk computation above 5.
pub const SPERNER_CAP: u32 = 5;

/// The maximum shade size over all antichains of the power set of `[n]`.
pub fn sperner_max_shade(n: u32, budget: &SearchBudget) -> Result<ExtremalResult> {
    if n == 0 || n > SPERNER_CAP {
        return Err(invalid(format!("need 1 <= n <= {SPERNER_CAP}, got {n}")));
    }
    let started = Instant::now();
    let mut ticker = Ticker::new(budget);
    let mut value = 0u64;
    let mut members: Vec<u64> = Vec::new();
    let status = match antichain::max_antichain_shade(n, &mut ticker, &mut value, &mut members) {
        Ok(()) => SearchStatus::Optimal,
        Err(Stop) => {
            if !budget.allow_partial {
                return Err(Error::BudgetExhausted {
                    nodes: ticker.nodes(),
                });
            }
            SearchStatus::LowerBound
        }
    };
    Ok(ExtremalResult {
        value: Count::from(value),
        witness_a: Witness::Mixed {
            n,
            members: members
                .into_iter()
                .map(|m| KSubset::new(m, n).expect("mask enumerated within [n]"))
                .collect(),
        },
        witness_b: None,
        status,
        nodes: ticker.nodes(),
        seconds: started.elapsed().as_secs_f64(),
    })
}
