//! Exact weighted diameter by branch and bound over the first extension.
//!
//! `L1` is grown from the bottom. For a prefix `S` of the remaining upset
//! `R`, the relative order in `L1` is already fixed for every pair with at
//! least one element in `S`. The best `L2` against those pairs alone is a
//! longest path in the downset lattice; it is both an achievable value and,
//! plus the diameter of the subposet on `R - S`, an upper bound for every
//! completion. Diameters of upsets are memoized and computed by the same
//! search.

use std::collections::HashMap;

use super::lattice::{full_mask, mask_weight, DownsetLattice};
use super::LinearExtension;
use crate::error::{Error, Result};
use crate::order::WeightedPoset;
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactLed<W> {
    pub value: W,
    pub witness: (LinearExtension, LinearExtension),
    /// Search nodes expanded, over all memoized subproblems.
    pub nodes: u64,
}

struct Solver<'a, W: Weight> {
    n: usize,
    weights: &'a [W],
    below: Vec<u64>,
    lat: DownsetLattice,
    memo: HashMap<u64, W>,
    nodes: u64,
    budget: u64,
}

struct Frame<W> {
    best: W,
    best_prefix: Vec<usize>,
}

impl<W: Weight> Solver<'_, W> {
    /// Best `L2` value counting only pairs whose `L1` order is fixed by the
    /// prefix `order` of `r`.
    fn known(&self, r: u64, order: &[usize]) -> W {
        let s = order.iter().fold(0u64, |m, &x| m | 1 << x);
        let rest = r & !s;
        let mut after = vec![0u64; self.n];
        let mut later = rest;
        for &x in order.iter().rev() {
            after[x] = later;
            later |= 1 << x;
        }
        let w = self.weights;
        self.lat
            .longest_path(full_mask(self.n) & !r, |x, t| w[x] * mask_weight(w, t & after[x]), false)
            .expect("complement of an upset is a downset")
            .0
    }

    fn has_incomparable(&self, r: u64) -> bool {
        // A set is a chain iff its elements have distinct numbers of
        // predecessors inside it.
        let mut seen = 0u64;
        let mut m = r;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            let k = (self.below[x] & r).count_ones();
            if seen >> k & 1 == 1 {
                return true;
            }
            seen |= 1 << k;
            m &= m - 1;
        }
        false
    }

    fn led_of(&mut self, r: u64) -> Result<W> {
        if let Some(&v) = self.memo.get(&r) {
            return Ok(v);
        }
        let v = if self.has_incomparable(r) {
            let mut frame = Frame {
                best: W::zero(),
                best_prefix: Vec::new(),
            };
            let mut prefix = Vec::new();
            self.search(r, &mut prefix, &mut frame)?;
            frame.best
        } else {
            W::zero()
        };
        self.memo.insert(r, v);
        Ok(v)
    }

    fn search(&mut self, r: u64, prefix: &mut Vec<usize>, frame: &mut Frame<W>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::CapExceeded(self.budget));
        }
        let s = prefix.iter().fold(0u64, |m, &x| m | 1 << x);
        let rest = r & !s;
        let mut children = Vec::new();
        let mut m = rest;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.below[x] & rest != 0 {
                continue;
            }
            prefix.push(x);
            let lb = self.known(r, prefix);
            prefix.pop();
            let ub = lb + self.led_of(rest & !(1 << x))?;
            if lb > frame.best {
                frame.best = lb;
                frame.best_prefix = prefix.clone();
                frame.best_prefix.push(x);
            }
            children.push((ub, x));
        }
        children.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (ub, x) in children {
            if ub <= frame.best {
                break;
            }
            prefix.push(x);
            let r2 = self.search(r, prefix, frame);
            prefix.pop();
            r2?;
        }
        Ok(())
    }

    /// Completes `prefix` to a linear extension of the subposet on `r`.
    fn complete(&self, r: u64, prefix: &[usize]) -> Vec<usize> {
        let mut order = prefix.to_vec();
        let mut placed = prefix.iter().fold(0u64, |m, &x| m | 1 << x) | (full_mask(self.n) & !r);
        while placed != full_mask(self.n) {
            let x = (0..self.n)
                .find(|&x| placed >> x & 1 == 0 && self.below[x] & !placed == 0)
                .expect("acyclic order always has an available element");
            order.push(x);
            placed |= 1 << x;
        }
        order
    }
}

/// Exact weighted diameter of a poset with at most 64 elements. Fails with
/// `CapExceeded(node_budget)` if the search expands more nodes than allowed.
pub fn exact_weighted_led<W: Weight>(wp: &WeightedPoset<W>, node_budget: u64) -> Result<ExactLed<W>> {
    let p = wp.poset();
    let n = p.len();
    let lat = DownsetLattice::new(p, 1 << 22)?;
    let below = lat.below_masks().to_vec();
    let mut solver = Solver {
        n,
        weights: wp.weights(),
        below,
        lat,
        memo: HashMap::new(),
        nodes: 0,
        budget: node_budget,
    };
    let all = full_mask(n);
    let mut frame = Frame {
        best: W::zero(),
        best_prefix: Vec::new(),
    };
    if solver.has_incomparable(all) {
        solver.search(all, &mut Vec::new(), &mut frame)?;
    }
    let l1 = solver.complete(all, &frame.best_prefix);
    let mut pos = vec![0; n];
    for (i, &x) in l1.iter().enumerate() {
        pos[x] = i;
    }
    let (value, l2) = solver.lat.eccentricity(wp.weights(), &pos);
    debug_assert_eq!(value, frame.best);
    Ok(ExactLed {
        value,
        witness: (LinearExtension::new_unchecked(l1), LinearExtension::new_unchecked(l2)),
        nodes: solver.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linext::{brute_force_led, weighted_distance, DEFAULT_CAP};
    use crate::order::Poset;

    #[test]
    fn agrees_with_brute_force() {
        let cases: Vec<(usize, Vec<(usize, usize)>, Vec<u64>)> = vec![
            (4, vec![(0, 2), (1, 2), (1, 3)], vec![1, 1, 1, 1]),
            (5, vec![], vec![1, 2, 3, 4, 5]),
            (6, vec![(0, 3), (1, 3), (1, 4), (2, 5)], vec![3, 1, 2, 1, 5, 1]),
            (3, vec![(0, 1), (1, 2)], vec![2, 2, 2]),
        ];
        for (n, covers, w) in cases {
            let p = Poset::from_cover_relations(n, &covers).unwrap();
            let wp = WeightedPoset::new(p, w).unwrap();
            let exact = exact_weighted_led(&wp, u64::MAX).unwrap();
            assert_eq!(exact.value, brute_force_led(&wp, DEFAULT_CAP).unwrap().value);
            let (a, b) = &exact.witness;
            assert_eq!(weighted_distance(&wp, a, b).unwrap(), exact.value);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p = Poset::from_cover_relations(6, &[]).unwrap();
        let wp = WeightedPoset::<u64>::unit(p);
        assert_eq!(exact_weighted_led(&wp, 3).unwrap_err(), Error::CapExceeded(3));
    }
}
