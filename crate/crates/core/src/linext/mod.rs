//! Linear extensions, reversal distances and everything built on top of them.
//!
//! Linear extensions are stored bottom to top: position 0 holds a minimal
//! element. Distances count incomparable pairs that two extensions order
//! differently; the weighted variant multiplies the weights of the two
//! elements of each reversed pair.

mod constrained;
mod diameter;
mod exact;
mod graph;
mod lattice;

pub use constrained::{max_reversals_between, max_reversals_constrained};
pub use diameter::{
    brute_force_led, conjecture1, conjecture1_holds, diametral_les, diametral_pairs, diametral_reversal_report,
    eccentricities, is_diametrally_reversing, is_reversing, Conjecture1Report, Diameter, DiametralReport,
};
pub use exact::{exact_weighted_led, ExactLed};
pub use graph::{le_graph, LeEdge, LeGraph};
pub use lattice::{count_linear_extensions, DownsetLattice};

use std::fmt;

use crate::error::{Error, Result};
use crate::order::{Poset, WeightedPoset};
use crate::weight::Weight;

/// Default bound on the number of linear extensions any exhaustive operation
/// will materialize.
pub const DEFAULT_CAP: u64 = 5_000_000;

/// A linear extension, bottom element first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    order: Vec<usize>,
}

impl LinearExtension {
    /// Validates `order` against `p`.
    pub fn new(p: &Poset, order: Vec<usize>) -> Result<Self> {
        let le = LinearExtension { order };
        le.validate(p)?;
        Ok(le)
    }

    pub(crate) fn new_unchecked(order: Vec<usize>) -> Self {
        LinearExtension { order }
    }

    /// Parses a word of labels. Whitespace or commas separate labels when
    /// present; otherwise every character is one label.
    pub fn parse(p: &Poset, word: &str) -> Result<Self> {
        let tokens: Vec<String> = if word.contains(|c: char| c.is_whitespace() || c == ',') {
            word.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect()
        } else {
            word.chars().map(String::from).collect()
        };
        let order = tokens
            .iter()
            .map(|t| {
                p.index_of(t)
                    .ok_or_else(|| Error::NotALinearExtension(format!("unknown label {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, order)
    }

    pub fn validate(&self, p: &Poset) -> Result<()> {
        let n = p.len();
        if self.order.len() != n {
            return Err(Error::NotALinearExtension(format!(
                "length {} but the poset has {n} elements",
                self.order.len()
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in self.order.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return Err(Error::NotALinearExtension(format!("not a permutation at position {i}")));
            }
            pos[x] = i;
        }
        for x in 0..n {
            for y in p.upset(x).ones() {
                if pos[x] > pos[y] {
                    return Err(Error::NotALinearExtension(format!(
                        "{} must precede {}",
                        p.label(x),
                        p.label(y)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `positions()[x]` is the position of `x`, counted from the bottom.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &x) in self.order.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    /// Labels joined bottom to top; separated by spaces unless every label is
    /// a single character.
    pub fn word(&self, p: &Poset) -> String {
        let single = self.order.iter().all(|&x| p.label(x).chars().count() == 1);
        let parts: Vec<&str> = self.order.iter().map(|&x| p.label(x)).collect();
        if single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Canonical numbering of the incomparable pairs `{x, y}`, `x < y` by index.
#[derive(Debug, Clone)]
pub struct IncPairIndex {
    pairs: Vec<(usize, usize)>,
    table: Vec<u32>,
    n: usize,
}

impl IncPairIndex {
    pub fn new(p: &Poset) -> Self {
        let n = p.len();
        let mut pairs = Vec::new();
        let mut table = vec![u32::MAX; n * n];
        for x in 0..n {
            for y in x + 1..n {
                if p.incomparable(x, y) {
                    let b = pairs.len() as u32;
                    table[x * n + y] = b;
                    table[y * n + x] = b;
                    pairs.push((x, y));
                }
            }
        }
        IncPairIndex { pairs, table, n }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Bit index of the pair `{x, y}`, if incomparable.
    pub fn bit(&self, x: usize, y: usize) -> Option<usize> {
        let b = self.table[x * self.n + y];
        (b != u32::MAX).then_some(b as usize)
    }

    pub fn orientation(&self, le: &LinearExtension) -> OrientationVector {
        let pos = le.positions();
        let mut v = OrientationVector::zeros(self.len());
        for (b, &(x, y)) in self.pairs.iter().enumerate() {
            if pos[x] < pos[y] {
                v.set(b);
            }
        }
        v
    }

    /// Per-pair products of element weights.
    pub fn pair_weights<W: Weight>(&self, weights: &[W]) -> Vec<W> {
        self.pairs.iter().map(|&(x, y)| weights[x] * weights[y]).collect()
    }
}

/// One bit per incomparable pair: set iff the lower-indexed element of the
/// pair lies below the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientationVector {
    words: Vec<u64>,
    len: usize,
}

impl OrientationVector {
    pub fn zeros(len: usize) -> Self {
        OrientationVector {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, b: usize) -> bool {
        self.words[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn set(&mut self, b: usize) {
        self.words[b / 64] |= 1 << (b % 64);
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn hamming(&self, other: &Self) -> u64 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum()
    }

    pub fn weighted_hamming<W: Weight>(&self, other: &Self, pair_weights: &[W]) -> W {
        xor_weight(&self.words, &other.words, pair_weights)
    }
}

#[inline]
pub(crate) fn xor_weight<W: Weight>(a: &[u64], b: &[u64], pair_weights: &[W]) -> W {
    let mut total = W::zero();
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        let mut diff = x ^ y;
        while diff != 0 {
            let bit = diff.trailing_zeros() as usize;
            total = total + pair_weights[k * 64 + bit];
            diff &= diff - 1;
        }
    }
    total
}

/// All linear extensions in lexicographic-by-choice order: at every step the
/// smallest-index available minimal element is tried first.
pub fn enumerate(p: &Poset, cap: u64) -> Result<Vec<LinearExtension>> {
    let n = p.len();
    let mut pending: Vec<usize> = (0..n).map(|x| p.downset(x).count_ones(..)).collect();
    let mut placed = vec![false; n];
    let mut current = Vec::with_capacity(n);
    let mut out = Vec::new();
    let ups: Vec<Vec<usize>> = (0..n).map(|x| p.upset(x).ones().collect()).collect();
    extend(&ups, &mut pending, &mut placed, &mut current, &mut out, cap)?;
    Ok(out)
}

fn extend(
    ups: &[Vec<usize>],
    pending: &mut [usize],
    placed: &mut [bool],
    current: &mut Vec<usize>,
    out: &mut Vec<LinearExtension>,
    cap: u64,
) -> Result<()> {
    let n = ups.len();
    if current.len() == n {
        if out.len() as u64 >= cap {
            return Err(Error::CapExceeded(cap));
        }
        out.push(LinearExtension::new_unchecked(current.clone()));
        return Ok(());
    }
    for x in 0..n {
        if placed[x] || pending[x] != 0 {
            continue;
        }
        placed[x] = true;
        current.push(x);
        for &y in &ups[x] {
            pending[y] -= 1;
        }
        let r = extend(ups, pending, placed, current, out, cap);
        for &y in &ups[x] {
            pending[y] += 1;
        }
        current.pop();
        placed[x] = false;
        r?;
    }
    Ok(())
}

/// Number of incomparable pairs ordered differently by `l1` and `l2`.
pub fn distance(p: &Poset, l1: &LinearExtension, l2: &LinearExtension) -> Result<u64> {
    l1.validate(p)?;
    l2.validate(p)?;
    Ok(raw_weighted_distance(p, &vec![1u64; p.len()], l1, l2))
}

/// Sum of `w(x) * w(y)` over incomparable pairs `{x, y}` ordered differently.
pub fn weighted_distance<W: Weight>(wp: &WeightedPoset<W>, l1: &LinearExtension, l2: &LinearExtension) -> Result<W> {
    l1.validate(wp.poset())?;
    l2.validate(wp.poset())?;
    Ok(raw_weighted_distance(wp.poset(), wp.weights(), l1, l2))
}

pub(crate) fn raw_weighted_distance<W: Weight>(
    p: &Poset,
    weights: &[W],
    l1: &LinearExtension,
    l2: &LinearExtension,
) -> W {
    let (p1, p2) = (l1.positions(), l2.positions());
    let n = p.len();
    let mut total = W::zero();
    for x in 0..n {
        for y in x + 1..n {
            if (p1[x] < p1[y]) != (p2[x] < p2[y]) && p.incomparable(x, y) {
                total = total + weights[x] * weights[y];
            }
        }
    }
    total
}
