//! Fixed-universe bitset over vertex indices, backed by a small block vector.

/// Set of vertex indices in a universe of known size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BlockSet {
    blocks: Vec<u64>,
    universe: usize,
}

impl BlockSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            blocks: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Intersects in place.
    pub fn and_with(&mut self, other: &BlockSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn and(&self, other: &BlockSet) -> BlockSet {
        let mut out = self.clone();
        out.and_with(other);
        out
    }

    pub fn intersection_len(&self, other: &BlockSet) -> usize {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (w, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(w * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(w, &b)| {
            let mut rest = b;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + i)
            })
        })
    }

    /// Drops every member at or above `limit`.
    pub fn keep_below(&mut self, limit: usize) {
        let word = limit / 64;
        let bit = limit % 64;
        for w in 0..self.blocks.len() {
            if w > word {
                self.blocks[w] = 0;
            } else if w == word {
                self.blocks[w] &= if bit == 0 { 0 } else { (1u64 << bit) - 1 };
            }
        }
    }

    /// Drops every member at or below `v`.
    pub fn keep_above(&mut self, v: usize) {
        let word = v / 64;
        let bit = v % 64;
        for w in 0..=word.min(self.blocks.len().saturating_sub(1)) {
            if w == word {
                self.blocks[w] &= if bit == 63 { 0 } else { !((1u64 << (bit + 1)) - 1) };
            } else {
                self.blocks[w] = 0;
            }
        }
    }

    /// Removes every member of `other` from `self`.
    pub fn and_not_with(&mut self, other: &BlockSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    /// Do the two sets agree on all indices strictly below `limit`?
    pub fn equals_below(&self, other: &BlockSet, limit: usize) -> bool {
        let word = limit / 64;
        let bit = limit % 64;
        for w in 0..=word.min(self.blocks.len().saturating_sub(1)) {
            let mask = if w < word {
                u64::MAX
            } else if bit == 0 {
                0
            } else {
                (1u64 << bit) - 1
            };
            if (self.blocks[w] ^ other.blocks[w]) & mask != 0 {
                return false;
            }
        }
        true
    }
}
