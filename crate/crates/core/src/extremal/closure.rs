//! Galois-closed family enumeration for the cross-intersecting searches.
//!
//! For `A` a family of k-subsets, `cl(A)` is the family of all l-subsets
//! t-intersecting every member of `A`, and vice versa. The two maps form a
//! Galois connection, so `A -> cl_k(cl_l(A))` is a closure operator and
//! every coordinatewise-maximal cross-t-intersecting pair has the form
//! `(A, cl_l(A))` with `A` closed. Closed families are enumerated in lectic
//! order (NextClosure), which visits each exactly once without materializing
//! the full subset lattice.

use super::bitset::BlockSet;
use super::{Stop, Ticker};
use crate::error::Result;
use crate::setkit::enumerate_k_subsets;

pub(crate) struct CrossSpace {
    vk: Vec<u64>,
    vl: Vec<u64>,
    /// Row per k-subset: the l-subsets t-intersecting it.
    rows_k_to_l: Vec<BlockSet>,
    /// Row per l-subset: the k-subsets t-intersecting it.
    rows_l_to_k: Vec<BlockSet>,
}

impl CrossSpace {
    pub fn new(n: u32, k: u32, l: u32, t: u32) -> Result<Self> {
        let vk = enumerate_k_subsets(n, k)?.members().to_vec();
        let vl = enumerate_k_subsets(n, l)?.members().to_vec();
        let mut rows_k_to_l = vec![BlockSet::empty(vl.len()); vk.len()];
        let mut rows_l_to_k = vec![BlockSet::empty(vk.len()); vl.len()];
        for (i, &e) in vk.iter().enumerate() {
            for (j, &f) in vl.iter().enumerate() {
                if (e & f).count_ones() >= t {
                    rows_k_to_l[i].insert(j);
                    rows_l_to_k[j].insert(i);
                }
            }
        }
        Ok(Self {
            vk,
            vl,
            rows_k_to_l,
            rows_l_to_k,
        })
    }

    fn cl_l(&self, a: &BlockSet) -> BlockSet {
        let mut b = BlockSet::full(self.vl.len());
        for i in a.iter() {
            b.and_with(&self.rows_k_to_l[i]);
        }
        b
    }

    fn cl_k(&self, b: &BlockSet) -> BlockSet {
        let mut a = BlockSet::full(self.vk.len());
        for j in b.iter() {
            a.and_with(&self.rows_l_to_k[j]);
        }
        a
    }

    /// Returns `(cl_k(cl_l(a)), cl_l(a))`; the second component is also the
    /// partner family of the closed first component.
    fn close(&self, a: &BlockSet) -> (BlockSet, BlockSet) {
        let b = self.cl_l(a);
        (self.cl_k(&b), b)
    }

    /// Visits every closed family `A` (with partner `B = cl_l(A)`) in lectic
    /// order, passing the member masks of both.
    pub fn for_each_closed_pair(
        &self,
        ticker: &mut Ticker,
        mut f: impl FnMut(&[u64], &[u64]),
    ) -> std::result::Result<(), Stop> {
        let m = self.vk.len();
        ticker.tick()?;
        let (mut a, mut b) = self.close(&BlockSet::empty(m));
        loop {
            f(&self.masks_of(&a, true), &self.masks_of(&b, false));
            let mut advanced = false;
            for i in (0..m).rev() {
                if a.contains(i) {
                    continue;
                }
                let mut seed = a.clone();
                seed.keep_below(i);
                seed.insert(i);
                ticker.tick()?;
                let (na, nb) = self.close(&seed);
                if na.equals_below(&a, i) {
                    a = na;
                    b = nb;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return Ok(());
            }
        }
    }

    fn masks_of(&self, s: &BlockSet, left: bool) -> Vec<u64> {
        let table = if left { &self.vk } else { &self.vl };
        s.iter().map(|i| table[i]).collect()
    }
}
