//! Exhaustive antichain enumeration over the power set of `[n]`.
//!
//! Antichains are built with members in ascending mask order; every prefix of
//! an antichain is one, so the search tree has exactly one node per antichain
//! (the Dedekind number of n). The shade of the current antichain is kept
//! incrementally as a refcount map; members of full cardinality contribute
//! nothing (there is no room above them).

use super::{Stop, Ticker};
use std::collections::HashMap;

/// Maximizes the shade size over all antichains of `2^[n]`. The best value
/// and its witness (lexicographically least among optima) accumulate in the
/// out-parameters so partial results survive a budget stop.
pub(crate) fn max_antichain_shade(
    n: u32,
    ticker: &mut Ticker,
    best_val: &mut u64,
    best_witness: &mut Vec<u64>,
) -> std::result::Result<(), Stop> {
    let mut chosen: Vec<u64> = Vec::new();
    let mut shade_counts: HashMap<u64, u32> = HashMap::new();
    *best_val = 0;
    best_witness.clear();
    dfs(
        n,
        0,
        &mut chosen,
        &mut shade_counts,
        best_val,
        best_witness,
        ticker,
    )
}

fn dfs(
    n: u32,
    start: u64,
    chosen: &mut Vec<u64>,
    shade_counts: &mut HashMap<u64, u32>,
    best_val: &mut u64,
    best_witness: &mut Vec<u64>,
    ticker: &mut Ticker,
) -> std::result::Result<(), Stop> {
    ticker.tick()?;
    let val = shade_counts.len() as u64;
    // DFS visits antichains in lex order on sorted member lists, so a strict
    // improvement rule keeps the lex-least witness among optima. The initial
    // best (0, []) is the empty antichain itself.
    if val > *best_val {
        *best_val = val;
        *best_witness = chosen.clone();
    }
    let full = (1u64 << n) - 1;
    for cand in start..=full {
        if chosen
            .iter()
            .any(|&c| c & !cand == 0 || cand & !c == 0)
        {
            continue; // comparable to a chosen member
        }
        add_shade(n, cand, shade_counts, 1);
        chosen.push(cand);
        dfs(n, cand + 1, chosen, shade_counts, best_val, best_witness, ticker)?;
        chosen.pop();
        add_shade(n, cand, shade_counts, -1);
    }
    Ok(())
}

fn add_shade(n: u32, member: u64, shade_counts: &mut HashMap<u64, u32>, delta: i32) {
    let full = (1u64 << n) - 1;
    let mut free = !member & full;
    while free != 0 {
        let bit = free & free.wrapping_neg();
        free ^= bit;
        let y = member | bit;
        if delta > 0 {
            *shade_counts.entry(y).or_insert(0) += 1;
        } else {
            let c = shade_counts.get_mut(&y).expect("removing an added shade member");
            *c -= 1;
            if *c == 0 {
                shade_counts.remove(&y);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::SearchBudget;

    fn run(n: u32) -> (u64, Vec<u64>, u64) {
        let mut ticker = Ticker::new(&SearchBudget::default());
        let mut val = 0;
        let mut wit = Vec::new();
        max_antichain_shade(n, &mut ticker, &mut val, &mut wit).unwrap();
        (val, wit, ticker.nodes())
    }

    #[test]
    fn tiny_ground_sets() {
        // n = 1: only A = {emptyset} has a nonempty shade.
        let (val, wit, nodes) = run(1);
        assert_eq!(val, 1);
        assert_eq!(wit, vec![0]);
        assert_eq!(nodes, 3); // Dedekind number M(1)

        let (val, wit, nodes) = run(2);
        assert_eq!(val, 2);
        assert_eq!(wit, vec![0]);
        assert_eq!(nodes, 6); // M(2)
    }

    #[test]
    fn node_counts_are_dedekind_numbers() {
        assert_eq!(run(3).2, 20);
        assert_eq!(run(4).2, 168);
        assert_eq!(run(5).2, 7581);
    }

    #[test]
    fn known_maxima() {
        // Values fixed by the exhaustive Python-independent enumeration.
        assert_eq!(run(3).0, 3);
        assert_eq!(run(4).0, 7);
        assert_eq!(run(5).0, 14);
    }

    #[test]
    fn witness_is_an_antichain_achieving_value() {
        let (val, wit, _) = run(4);
        for (i, &a) in wit.iter().enumerate() {
            for &b in &wit[i + 1..] {
                assert!(a & !b != 0 && b & !a != 0, "witness not an antichain");
            }
        }
        let mut shade = std::collections::HashSet::new();
        for &x in &wit {
            let mut free = !x & 0b1111;
            while free != 0 {
                let bit = free & free.wrapping_neg();
                free ^= bit;
                shade.insert(x | bit);
            }
        }
        assert_eq!(shade.len() as u64, val);
    }
}
