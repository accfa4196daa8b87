//! Poset representation and structural predicates.
//!
//! A [`Poset`] stores the full transitively closed strict order as two bit
//! matrices: `below[x]` is the downset of `x` (elements strictly smaller) and
//! `above[x]` its upset. Elements are dense indices `0..n`; labels are only
//! used for display and file formats.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::matching::maximum_matching;
use crate::weight::Weight;

/// A finite poset with a strict, transitively closed order relation.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    labels: Vec<String>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("n", &self.len())
            .field("covers", &covers)
            .finish()
    }
}

/// An ordered critical pair `(u, v)`: `u` and `v` are incomparable, every
/// element below `u` is below `v`, and every element above `v` is above `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CriticalPair {
    pub u: usize,
    pub v: usize,
}

/// A partition of the ground set into chains, each listed top element first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Checks that the chains partition `0..n` and are chains of `p`, listed
    /// top first.
    pub fn is_valid_for(&self, p: &Poset) -> bool {
        let mut seen = vec![false; p.len()];
        for chain in &self.chains {
            for w in chain.windows(2) {
                if !p.lt(w[1], w[0]) {
                    return false;
                }
            }
            for &x in chain {
                if x >= p.len() || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Result of replacing elements by chains.
#[derive(Debug, Clone)]
pub struct Substitution {
    pub poset: Poset,
    /// For every new element: (original element, rank within its chain,
    /// counted from 1 at the bottom).
    pub provenance: Vec<(usize, usize)>,
    /// Index of the bottom element `x_1` of the chain replacing `x`.
    pub bottom: Vec<usize>,
    /// Index of the top element `x_{k(x)}` of the chain replacing `x`.
    pub top: Vec<usize>,
}

fn bitset_with(n: usize, items: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for x in items {
        s.insert(x);
    }
    s
}

impl Poset {
    /// Builds a poset from an arbitrary relation, returning its transitive
    /// closure.
    pub fn from_cover_relations(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        for &(a, b) in covers {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &(a, b) in covers {
            if a == b {
                return Err(Error::CycleDetected(a));
            }
            above[a].insert(b);
        }
        Self::close(above)
    }

    /// Builds a poset from a relation predicate; the predicate need not be
    /// transitively closed.
    pub fn from_fn(n: usize, mut lt: impl FnMut(usize, usize) -> bool) -> Result<Poset> {
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in above.iter_mut().enumerate() {
            for y in 0..n {
                if x != y && lt(x, y) {
                    row.insert(y);
                }
            }
        }
        Self::close(above)
    }

    fn close(mut above: Vec<FixedBitSet>) -> Result<Poset> {
        let n = above.len();
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = above[k].clone();
            for row in above.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| above[x].contains(x)) {
            return Err(Error::CycleDetected(x));
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in above.iter().enumerate() {
            for y in row.ones() {
                below[y].insert(x);
            }
        }
        Ok(Poset {
            below,
            above,
            labels: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    /// Replaces the display labels. Labels must be unique, non-empty and free
    /// of whitespace.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Poset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.len(),
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidParameter(format!("invalid label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidParameter(format!("duplicate label {l:?}")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `x < y` in the order.
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y) || self.lt(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    /// Elements strictly below `x`.
    pub fn downset(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    /// Elements strictly above `x`.
    pub fn upset(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// The cover relation (Hasse diagram), sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.above[x].ones() {
                if self.above[x].is_disjoint(&self.below[y]) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.below[x].count_ones(..) == 0).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.above[x].count_ones(..) == 0).collect()
    }

    /// Number of incomparable (unordered) pairs.
    pub fn inc_count(&self) -> usize {
        let n = self.len();
        (0..n)
            .map(|x| n - 1 - self.below[x].count_ones(..) - self.above[x].count_ones(..))
            .sum::<usize>()
            / 2
    }

    pub fn is_chain(&self) -> bool {
        self.inc_count() == 0
    }

    pub fn is_antichain(&self) -> bool {
        self.below.iter().all(|b| b.count_ones(..) == 0)
    }

    /// Elements sorted so that every element appears after its predecessors.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.below[x].count_ones(..), x));
        order
    }

    /// The subposet induced by `elements`, re-indexed in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let m = elements.len();
        let mut above = vec![FixedBitSet::with_capacity(m); m];
        let mut below = vec![FixedBitSet::with_capacity(m); m];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                if self.lt(x, y) {
                    above[i].insert(j);
                    below[j].insert(i);
                }
            }
        }
        Poset {
            below,
            above,
            labels: elements.iter().map(|&x| self.labels[x].clone()).collect(),
        }
    }

    /// The poset with the additional relations `pairs` (each `(a, b)` meaning
    /// `a < b`), transitively closed.
    pub fn with_relations(&self, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut above = self.above.clone();
        for &(a, b) in pairs {
            let n = self.len();
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(Error::CycleDetected(a));
            }
            above[a].insert(b);
        }
        let mut closed = Self::close(above)?;
        closed.labels = self.labels.clone();
        Ok(closed)
    }

    /// The order with every relation reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            below: self.above.clone(),
            above: self.below.clone(),
            labels: self.labels.clone(),
        }
    }

    /// All critical pairs, sorted lexicographically by `(u, v)`.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if self.incomparable(u, v)
                    && self.below[u].is_subset(&self.below[v])
                    && self.above[v].is_subset(&self.above[u])
                {
                    out.push(CriticalPair { u, v });
                }
            }
        }
        out
    }

    /// Whether `m` is a module: every outside element is above all of `m`,
    /// below all of `m`, or incomparable to all of `m`.
    pub fn is_module(&self, m: &[usize]) -> bool {
        let set = bitset_with(self.len(), m.iter().copied());
        (0..self.len()).filter(|x| !set.contains(*x)).all(|x| {
            let above_all = m.iter().all(|&y| self.lt(y, x));
            let below_all = m.iter().all(|&y| self.lt(x, y));
            let inc_all = m.iter().all(|&y| self.incomparable(x, y));
            above_all || below_all || inc_all
        })
    }

    /// Pairs `{x, y}` (with `x < y` as indices) sharing downset and upset.
    pub fn find_twins(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if self.below[x] == self.below[y] && self.above[x] == self.above[y] {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Replaces every element `x` by a chain `x_1 < ... < x_{k(x)}` that is a
    /// module of the result. New elements are laid out block by block in the
    /// order of the original elements, bottom of each chain first.
    pub fn substitute_chains(&self, k: &[usize]) -> Result<Substitution> {
        let n = self.len();
        if k.len() != n {
            return Err(Error::InvalidParameter(format!(
                "expected {n} chain lengths, got {}",
                k.len()
            )));
        }
        if let Some(x) = k.iter().position(|&len| len == 0) {
            return Err(Error::InvalidParameter(format!("chain length of element {x} is zero")));
        }
        let mut provenance = Vec::new();
        let mut bottom = Vec::with_capacity(n);
        let mut top = Vec::with_capacity(n);
        for (x, &len) in k.iter().enumerate() {
            bottom.push(provenance.len());
            for rank in 1..=len {
                provenance.push((x, rank));
            }
            top.push(provenance.len() - 1);
        }
        let m = provenance.len();
        let mut above = vec![FixedBitSet::with_capacity(m); m];
        let mut below = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            let (x, ri) = provenance[i];
            for j in 0..m {
                let (y, rj) = provenance[j];
                if (x == y && ri < rj) || self.lt(x, y) {
                    above[i].insert(j);
                    below[j].insert(i);
                }
            }
        }
        let labels = provenance
            .iter()
            .map(|&(x, r)| {
                if k[x] == 1 {
                    self.labels[x].clone()
                } else {
                    format!("{}_{}", self.labels[x], r)
                }
            })
            .collect();
        Ok(Substitution {
            poset: Poset { below, above, labels },
            provenance,
            bottom,
            top,
        })
    }

    /// A minimum chain partition, via maximum matching on the comparability
    /// relation. The number of chains equals the width.
    pub fn decompose(&self) -> ChainDecomposition {
        let n = self.len();
        let adj: Vec<Vec<usize>> = (0..n).map(|x| self.above[x].ones().collect()).collect();
        let matching = maximum_matching(&adj, n);
        let mut chains = Vec::new();
        // Chain starts are the elements nobody is matched into.
        for start in 0..n {
            if matching.right_to_left[start].is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = matching.left_to_right[cur] {
                chain.push(next);
                cur = next;
            }
            chain.reverse();
            chains.push(chain);
        }
        ChainDecomposition { chains }
    }

    pub fn width(&self) -> usize {
        self.decompose().len()
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        self.chain_lengths().map_or(0, |(_, longest)| longest)
    }

    /// Shortest and longest maximal chain sizes, or `None` when empty.
    fn chain_lengths(&self) -> Option<(usize, usize)> {
        if self.is_empty() {
            return None;
        }
        let covers = self.covers();
        let mut lower_covers = vec![Vec::new(); self.len()];
        for &(a, b) in &covers {
            lower_covers[b].push(a);
        }
        let mut shortest = vec![0usize; self.len()];
        let mut longest = vec![0usize; self.len()];
        for x in self.topological_order() {
            if lower_covers[x].is_empty() {
                shortest[x] = 1;
                longest[x] = 1;
            } else {
                shortest[x] = 1 + lower_covers[x].iter().map(|&y| shortest[y]).min().unwrap();
                longest[x] = 1 + lower_covers[x].iter().map(|&y| longest[y]).max().unwrap();
            }
        }
        let maxima = self.maximal_elements();
        let lo = maxima.iter().map(|&x| shortest[x]).min().unwrap();
        let hi = maxima.iter().map(|&x| longest[x]).max().unwrap();
        Some((lo, hi))
    }

    /// Every maximal chain has the same number of elements.
    pub fn is_graded(&self) -> bool {
        self.chain_lengths().is_none_or(|(lo, hi)| lo == hi)
    }

    /// Graded of height three with every minimal element below every maximal
    /// element.
    pub fn is_3layer(&self) -> bool {
        if !self.is_graded() || self.height() != 3 {
            return false;
        }
        let maxima = self.maximal_elements();
        self.minimal_elements()
            .into_iter()
            .all(|a| maxima.iter().all(|&c| self.lt(a, c)))
    }
}

/// A poset whose elements carry positive integer weights. A weighted element
/// stands for a chain module of that many elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPoset<W: Weight> {
    poset: Poset,
    weights: Vec<W>,
}

impl<W: Weight> WeightedPoset<W> {
    pub fn new(poset: Poset, weights: Vec<W>) -> Result<Self> {
        if weights.len() != poset.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} weights, got {}",
                poset.len(),
                weights.len()
            )));
        }
        if let Some(x) = weights.iter().position(|w| *w < W::one()) {
            return Err(Error::InvalidParameter(format!("weight of element {x} is below 1")));
        }
        Ok(WeightedPoset { poset, weights })
    }

    /// All weights equal to one.
    pub fn unit(poset: Poset) -> Self {
        let weights = vec![W::one(); poset.len()];
        WeightedPoset { poset, weights }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    pub fn weight(&self, x: usize) -> W {
        self.weights[x]
    }

    pub fn is_unit(&self) -> bool {
        self.weights.iter().all(|w| w.is_unit())
    }

    /// Expands every weighted element into a chain module of its weight.
    pub fn expand(&self) -> Result<Substitution> {
        let k: Vec<usize> = self
            .weights
            .iter()
            .map(|w| w.to_usize().ok_or_else(|| Error::InvalidParameter("weight too large to expand".into())))
            .collect::<Result<_>>()?;
        self.poset.substitute_chains(&k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_cover_relations(n, &covers).unwrap()
    }

    fn antichain(n: usize) -> Poset {
        Poset::from_cover_relations(n, &[]).unwrap()
    }

    #[test]
    fn cover_relations_close_transitively() {
        let p = Poset::from_cover_relations(2, &[(0, 1)]).unwrap();
        assert!(p.lt(0, 1) && !p.lt(1, 0));
        let p = Poset::from_cover_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(matches!(
            Poset::from_cover_relations(2, &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected(_))
        ));
        assert!(matches!(Poset::from_cover_relations(1, &[(0, 0)]), Err(Error::CycleDetected(0))));
        assert!(matches!(
            Poset::from_cover_relations(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        ));
    }

    #[test]
    fn chains_have_no_critical_pairs() {
        assert!(chain(5).critical_pairs().is_empty());
    }

    #[test]
    fn module_examples() {
        let p = chain(3);
        assert!(p.is_module(&[1]));
        assert!(!p.is_module(&[0, 2]));
        assert!(antichain(4).is_module(&[0, 2, 3]));
    }

    #[test]
    fn twins() {
        assert_eq!(antichain(3).find_twins(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(chain(3).find_twins().is_empty());
        // K_{2,2}: bottoms 0,1 below tops 2,3.
        let k22 = Poset::from_cover_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(k22.find_twins(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn identity_substitution() {
        let p = Poset::from_cover_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let s = p.substitute_chains(&[1, 1, 1, 1]).unwrap();
        assert_eq!(s.poset.below, p.below);
        assert_eq!(s.poset.above, p.above);
    }

    #[test]
    fn substitution_makes_modules() {
        let p = Poset::from_cover_relations(3, &[(0, 2)]).unwrap();
        let s = p.substitute_chains(&[2, 3, 1]).unwrap();
        assert_eq!(s.poset.len(), 6);
        let block: Vec<usize> = (0..6).filter(|&i| s.provenance[i].0 == 1).collect();
        assert_eq!(block.len(), 3);
        assert!(s.poset.is_module(&block));
        assert!(s.poset.lt(block[0], block[2]));
        assert!(matches!(p.substitute_chains(&[1, 0, 1]), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn decompose_examples() {
        let d = chain(6).decompose();
        assert_eq!(d.chains, vec![vec![5, 4, 3, 2, 1, 0]]);
        assert_eq!(antichain(4).decompose().len(), 4);
        let n_poset = Poset::from_cover_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let d = n_poset.decompose();
        assert_eq!(d.len(), 2);
        assert!(d.is_valid_for(&n_poset));
    }

    #[test]
    fn measures_on_chain() {
        let p = chain(4);
        assert_eq!(p.width(), 1);
        assert_eq!(p.height(), 4);
        assert!(p.is_graded());
        assert!(!p.is_3layer());
    }

    #[test]
    fn gradedness() {
        // 0 < 1 < 2 and 3 < 2: maximal chains of sizes 3 and 2.
        let p = Poset::from_cover_relations(4, &[(0, 1), (1, 2), (3, 2)]).unwrap();
        assert!(!p.is_graded());
        assert_eq!(p.height(), 3);
        let empty = antichain(0);
        assert!(empty.is_graded());
        assert_eq!(empty.height(), 0);
        assert_eq!(empty.width(), 0);
    }

    #[test]
    fn complete_three_layer() {
        // A = {0,1}, B = {2,3}, C = {4}; complete between consecutive layers.
        let p = Poset::from_cover_relations(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert!(p.is_3layer());
    }

    #[test]
    fn labels_validated() {
        assert!(chain(2).with_labels(["a", "a"]).is_err());
        assert!(chain(2).with_labels(["a b", "c"]).is_err());
        let p = chain(2).with_labels(["lo", "hi"]).unwrap();
        assert_eq!(p.index_of("hi"), Some(1));
    }

    #[test]
    fn weights_must_be_positive() {
        assert!(WeightedPoset::<u64>::new(chain(2), vec![1, 0]).is_err());
        let w = WeightedPoset::<u64>::new(chain(2), vec![2, 1]).unwrap();
        assert_eq!(w.expand().unwrap().poset.len(), 3);
    }
}
