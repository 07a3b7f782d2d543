//! Maximum-clique search (branch and bound with greedy colouring bounds) and
//! maximal-clique enumeration (Bron-Kerbosch with pivoting) over bitset
//! adjacency rows.

use super::bitset::BlockSet;
use super::{Stop, Ticker};

/// Best clique found before the budget ran out.
#[derive(Debug)]
pub(crate) struct Partial(pub Vec<usize>);

/// Finds a maximum clique and returns the lexicographically least one among
/// all maximum cliques (members ascending, compared as sorted index lists).
pub(crate) fn max_clique_lex_least(
    adj: &[BlockSet],
    ticker: &mut Ticker,
) -> std::result::Result<Vec<usize>, Partial> {
    let n = adj.len();
    let mut best: Vec<usize> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    if search_max(adj, &BlockSet::full(n), &mut cur, &mut best, ticker).is_err() {
        return Err(Partial(best));
    }
    let omega = best.len();

    // Rebuild the lex-least witness: position by position, commit the
    // smallest vertex that still extends to a clique of the proven size.
    let mut chosen: Vec<usize> = Vec::new();
    let mut cand = BlockSet::full(n);
    while chosen.len() < omega {
        let need = omega - chosen.len();
        let mut advanced = false;
        for v in cand.iter().collect::<Vec<_>>() {
            let mut next = cand.and(&adj[v]);
            next.keep_above(v);
            match find_clique(adj, &next, need - 1, ticker) {
                Ok(true) => {
                    chosen.push(v);
                    cand = next;
                    advanced = true;
                    break;
                }
                Ok(false) => {}
                Err(Stop) => return Err(Partial(best)),
            }
        }
        assert!(advanced, "a maximum clique of the proven size must exist");
    }
    Ok(chosen)
}

/// Exhaustive max-clique search; `best` holds the largest clique seen.
fn search_max(
    adj: &[BlockSet],
    p: &BlockSet,
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
    ticker: &mut Ticker,
) -> std::result::Result<(), Stop> {
    ticker.tick()?;
    if p.is_empty() {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return Ok(());
    }
    let order = color_order(adj, p);
    let mut p = p.clone();
    for &(v, bound) in order.iter().rev() {
        if cur.len() + bound <= best.len() {
            return Ok(()); // colours ascend along `order`; the rest is smaller
        }
        let next = p.and(&adj[v]);
        cur.push(v);
        search_max(adj, &next, cur, best, ticker)?;
        cur.pop();
        p.remove(v);
    }
    Ok(())
}

/// Decision variant: does `p` contain a clique of `need` vertices?
fn find_clique(
    adj: &[BlockSet],
    p: &BlockSet,
    need: usize,
    ticker: &mut Ticker,
) -> std::result::Result<bool, Stop> {
    if need == 0 {
        return Ok(true);
    }
    ticker.tick()?;
    if p.len() < need {
        return Ok(false);
    }
    let order = color_order(adj, p);
    let mut p = p.clone();
    for &(v, bound) in order.iter().rev() {
        if bound < need {
            return Ok(false); // remaining candidates have even smaller bounds
        }
        let next = p.and(&adj[v]);
        if find_clique(adj, &next, need - 1, ticker)? {
            return Ok(true);
        }
        p.remove(v);
    }
    Ok(false)
}

/// Greedy sequential colouring of the candidate set. Returns `(vertex, c)`
/// pairs where `c` is the vertex's colour class (1-based), in nondecreasing
/// colour order; `c` bounds the clique number of the prefix ending at that
/// vertex.
fn color_order(adj: &[BlockSet], p: &BlockSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut uncolored = p.clone();
    let mut colour = 0usize;
    while !uncolored.is_empty() {
        colour += 1;
        let mut class_cand = uncolored.clone();
        while let Some(v) = class_cand.first() {
            out.push((v, colour));
            uncolored.remove(v);
            class_cand.remove(v);
            class_cand.and_not_with(&adj[v]);
        }
    }
    out
}

/// Enumerates every maximal clique, invoking `f` with its sorted vertex list.
pub(crate) fn for_each_maximal_clique(
    adj: &[BlockSet],
    ticker: &mut Ticker,
    mut f: impl FnMut(&[usize]),
) -> std::result::Result<(), Stop> {
    let n = adj.len();
    let mut r: Vec<usize> = Vec::new();
    bron_kerbosch(
        adj,
        &mut r,
        BlockSet::full(n),
        BlockSet::empty(n),
        ticker,
        &mut f,
    )
}

fn bron_kerbosch(
    adj: &[BlockSet],
    r: &mut Vec<usize>,
    mut p: BlockSet,
    mut x: BlockSet,
    ticker: &mut Ticker,
    f: &mut impl FnMut(&[usize]),
) -> std::result::Result<(), Stop> {
    ticker.tick()?;
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        f(&clique);
        return Ok(());
    }
    // Pivot on the vertex of P union X covering most of P; first maximum for
    // determinism.
    let mut pivot = usize::MAX;
    let mut cover = usize::MAX;
    for u in p.iter().chain(x.iter()) {
        let c = p.intersection_len(&adj[u]);
        if pivot == usize::MAX || c > cover {
            pivot = u;
            cover = c;
        }
    }
    let ext: Vec<usize> = p.iter().filter(|&v| !adj[pivot].contains(v)).collect();
    for v in ext {
        let np = p.and(&adj[v]);
        let nx = x.and(&adj[v]);
        r.push(v);
        bron_kerbosch(adj, r, np, nx, ticker, f)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}
