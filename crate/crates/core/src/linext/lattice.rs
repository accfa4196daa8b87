//! The lattice of downsets of a poset with at most 64 elements, stored as
//! bit masks. Paths from the empty downset to the full set are exactly the
//! linear extensions, which turns "best partner of a fixed extension" into a
//! longest-path problem.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::Poset;
use crate::weight::Weight;

#[derive(Debug, Clone)]
pub struct DownsetLattice {
    n: usize,
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
    /// `succ[d]` lists `(x, e)` with `masks[e] = masks[d] | 1 << x`.
    succ: Vec<Vec<(usize, usize)>>,
    below: Vec<u64>,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn poset_masks(p: &Poset) -> (Vec<u64>, Vec<u64>) {
    let n = p.len();
    let below = (0..n).map(|x| p.downset(x).ones().fold(0u64, |m, y| m | 1 << y)).collect();
    let above = (0..n).map(|x| p.upset(x).ones().fold(0u64, |m, y| m | 1 << y)).collect();
    (below, above)
}

impl DownsetLattice {
    /// Builds the lattice; fails if `p` has more than 64 elements or more
    /// than `cap` downsets.
    pub fn new(p: &Poset, cap: u64) -> Result<Self> {
        let n = p.len();
        if n > 64 {
            return Err(Error::SizeExceeded { size: n, max: 64 });
        }
        let (below, _) = poset_masks(p);
        // Layer by layer, so masks end up sorted by size.
        let mut masks = vec![0u64];
        let mut index = HashMap::from([(0u64, 0usize)]);
        let mut succ: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut start = 0;
        while start < masks.len() {
            let end = masks.len();
            for d in start..end {
                let m = masks[d];
                let mut out = Vec::new();
                for (x, &bx) in below.iter().enumerate() {
                    if m >> x & 1 == 0 && bx & !m == 0 {
                        let next = m | 1 << x;
                        let e = match index.get(&next) {
                            Some(&e) => e,
                            None => {
                                if masks.len() as u64 >= cap {
                                    return Err(Error::CapExceeded(cap));
                                }
                                masks.push(next);
                                index.insert(next, masks.len() - 1);
                                masks.len() - 1
                            }
                        };
                        out.push((x, e));
                    }
                }
                succ.push(out);
            }
            start = end;
        }
        Ok(DownsetLattice {
            n,
            masks,
            index,
            succ,
            below,
        })
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn element_count(&self) -> usize {
        self.n
    }

    /// Downset masks, ascending by size.
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn successors(&self, d: usize) -> &[(usize, usize)] {
        &self.succ[d]
    }

    pub(crate) fn below_masks(&self) -> &[u64] {
        &self.below
    }

    /// Longest path from downset `start` to the full set, where adding `x` to
    /// a downset `t` earns `gain(x, t)`. Returns the value and, if requested,
    /// the elements in the order they are added.
    pub fn longest_path<W: Weight>(
        &self,
        start: u64,
        mut gain: impl FnMut(usize, u64) -> W,
        want_path: bool,
    ) -> Option<(W, Vec<usize>)> {
        let s = self.index_of(start)?;
        let len = self.masks.len();
        let mut val: Vec<Option<W>> = vec![None; len];
        let mut from: Vec<(usize, usize)> = if want_path { vec![(0, 0); len] } else { Vec::new() };
        val[s] = Some(W::zero());
        for d in s..len {
            let Some(v) = val[d] else { continue };
            let m = self.masks[d];
            for &(x, e) in &self.succ[d] {
                let cand = v + gain(x, m);
                if val[e].is_none_or(|cur| cand > cur) {
                    val[e] = Some(cand);
                    if want_path {
                        from[e] = (d, x);
                    }
                }
            }
        }
        let top = len - 1;
        let best = val[top]?;
        let mut path = Vec::new();
        if want_path {
            let mut d = top;
            while d != s {
                let (prev, x) = from[d];
                path.push(x);
                d = prev;
            }
            path.reverse();
        }
        Some((best, path))
    }

    /// Maximum weighted distance from the extension with positions `pos` to
    /// any extension, with one maximizing partner.
    pub fn eccentricity<W: Weight>(&self, weights: &[W], pos: &[usize]) -> (W, Vec<usize>) {
        let after = after_masks(pos);
        let (v, path) = self
            .longest_path(0, |x, t| weights[x] * mask_weight(weights, t & after[x]), true)
            .expect("empty downset is always present");
        (v, path)
    }

    pub fn count_paths(&self) -> u128 {
        let mut count = vec![0u128; self.masks.len()];
        count[0] = 1;
        for d in 0..self.masks.len() {
            let c = count[d];
            for &(_, e) in &self.succ[d] {
                count[e] += c;
            }
        }
        count[self.masks.len() - 1]
    }
}

/// `after[x]` = elements placed after `x` by the extension with positions `pos`.
pub(crate) fn after_masks(pos: &[usize]) -> Vec<u64> {
    let n = pos.len();
    (0..n)
        .map(|x| (0..n).filter(|&y| pos[y] > pos[x]).fold(0u64, |m, y| m | 1 << y))
        .collect()
}

#[inline]
pub(crate) fn mask_weight<W: Weight>(weights: &[W], mut m: u64) -> W {
    let mut total = W::zero();
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        total = total + weights[b];
        m &= m - 1;
    }
    total
}

/// Number of linear extensions, by path counting in the downset lattice.
pub fn count_linear_extensions(p: &Poset, downset_cap: u64) -> Result<u128> {
    Ok(DownsetLattice::new(p, downset_cap)?.count_paths())
}
