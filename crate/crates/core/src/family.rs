//! Generators for the named posets and poset classes, and interval-order
//! recognition via maximal antichains.

use num_traits::Num;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::order::{Poset, Substitution, WeightedPoset};

pub fn chain(n: usize) -> Poset {
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_cover_relations(n, &covers).expect("a path is acyclic")
}

pub fn antichain(n: usize) -> Poset {
    Poset::from_cover_relations(n, &[]).expect("no relations")
}

/// The N: `1 < 3`, `2 < 3`, `2 < 4`.
pub fn n_poset() -> Poset {
    Poset::from_cover_relations(4, &[(0, 2), (1, 2), (1, 3)])
        .and_then(|p| p.with_labels(["1", "2", "3", "4"]))
        .expect("fixed poset")
}

/// The M: minima `1, 2, 3`, maxima `x, y`, with `1, 2 < x` and `2, 3 < y`.
pub fn m_poset() -> Poset {
    Poset::from_cover_relations(5, &[(0, 3), (1, 3), (1, 4), (2, 4)])
        .and_then(|p| p.with_labels(["1", "2", "3", "x", "y"]))
        .expect("fixed poset")
}

/// Label of a subset of `[n]` given as a bit mask (bit `i` is element `i+1`).
pub fn subset_label(mask: u32) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect()
}

/// Parses a subset label such as `"134"` back into a mask.
pub fn subset_mask(label: &str) -> Option<u32> {
    if label == "∅" {
        return Some(0);
    }
    label.chars().try_fold(0u32, |m, c| {
        let d = c.to_digit(10)?;
        (d >= 1).then_some(m | 1 << (d - 1))
    })
}

/// Subsets of `[n]` ordered by inclusion, in the order given.
pub fn boolean_subposet(n: usize, family: &[u32]) -> Result<Poset> {
    if n > 8 {
        return Err(Error::SizeExceeded { size: n, max: 8 });
    }
    let limit = 1u32 << n;
    if let Some(&m) = family.iter().find(|&&m| m >= limit) {
        return Err(Error::InvalidParameter(format!("subset {m:#b} is not inside [{n}]")));
    }
    let p = Poset::from_fn(family.len(), |i, j| {
        let (a, b) = (family[i], family[j]);
        a != b && a & b == a
    })?;
    p.with_labels(family.iter().map(|&m| subset_label(m)))
}

/// All subsets of `[n]`, by cardinality and then by mask.
pub fn boolean_lattice(n: usize) -> Result<Poset> {
    if n > 8 {
        return Err(Error::SizeExceeded { size: n, max: 8 });
    }
    boolean_subposet(n, &subsets_by_size(n, |_| true))
}

fn subsets_by_size(n: usize, keep: impl Fn(u32) -> bool) -> Vec<u32> {
    let mut all: Vec<u32> = (0..1u32 << n).filter(|&m| keep(m)).collect();
    all.sort_by_key(|&m| (m.count_ones(), m));
    all
}

fn masks(labels: &[&str]) -> Vec<u32> {
    labels.iter().map(|l| subset_mask(l).expect("valid subset label")).collect()
}

/// The three doubles of the six-dimensional skeleton.
pub const SKELETON_DOUBLES: [&str; 3] = ["12", "34", "56"];

/// The six quadruples of the six-dimensional skeleton.
pub const SKELETON_QUADRUPLES: [&str; 6] = ["1235", "1246", "1345", "2346", "1356", "2456"];

/// The 21-element subposet of `B_6`: atoms, the three doubles, the six
/// quadruples and the coatoms.
pub fn skeleton() -> Poset {
    let mut family: Vec<u32> = (0..6).map(|i| 1 << i).collect();
    family.extend(masks(&SKELETON_DOUBLES));
    family.extend(masks(&SKELETON_QUADRUPLES));
    family.extend((0..6).map(|i| 0b11_1111 & !(1 << i)));
    boolean_subposet(6, &family).expect("fits in B_6")
}

/// The subposet on the doubles and quadruples of the skeleton.
pub fn red_core() -> Poset {
    let mut family = masks(&SKELETON_DOUBLES);
    family.extend(masks(&SKELETON_QUADRUPLES));
    boolean_subposet(6, &family).expect("fits in B_6")
}

fn chain_lengths(p: &Poset, w: usize, replaced: impl Fn(u32) -> bool) -> Vec<usize> {
    p.labels()
        .iter()
        .map(|l| if replaced(subset_mask(l).expect("subset label")) { w } else { 1 })
        .collect()
}

fn check_w(w: usize) -> Result<()> {
    if w == 0 {
        return Err(Error::InvalidParameter("chain length w must be at least 1".into()));
    }
    Ok(())
}

/// `B_4` with every double replaced by a chain of `w` elements.
pub fn b4_star_substitution(w: usize) -> Result<Substitution> {
    check_w(w)?;
    let b4 = boolean_lattice(4)?;
    let k = chain_lengths(&b4, w, |m| m.count_ones() == 2);
    b4.substitute_chains(&k)
}

pub fn b4_star(w: usize) -> Result<Poset> {
    Ok(b4_star_substitution(w)?.poset)
}

/// `B_4` with weight `w` on the doubles.
pub fn b4_star_weighted(w: u64) -> Result<WeightedPoset<u64>> {
    check_w(w as usize)?;
    let b4 = boolean_lattice(4)?;
    let weights = chain_lengths(&b4, w as usize, |m| m.count_ones() == 2)
        .into_iter()
        .map(|x| x as u64)
        .collect();
    WeightedPoset::new(b4, weights)
}

fn is_red(m: u32) -> bool {
    matches!(m.count_ones(), 2 | 4)
}

/// The skeleton with every double and quadruple replaced by a chain of `w`
/// elements.
pub fn p_star_substitution(w: usize) -> Result<Substitution> {
    check_w(w)?;
    let s = skeleton();
    let k = chain_lengths(&s, w, is_red);
    s.substitute_chains(&k)
}

pub fn p_star(w: usize) -> Result<Poset> {
    Ok(p_star_substitution(w)?.poset)
}

pub fn p_star_weighted(w: u64) -> Result<WeightedPoset<u64>> {
    check_w(w as usize)?;
    let s = skeleton();
    let weights = chain_lengths(&s, w as usize, is_red).into_iter().map(|x| x as u64).collect();
    WeightedPoset::new(s, weights)
}

/// `x < y` iff `x` precedes `y` in both permutations.
pub fn from_two_permutations(pi1: &[usize], pi2: &[usize]) -> Result<Poset> {
    let n = pi1.len();
    let pos = |pi: &[usize]| -> Result<Vec<usize>> {
        let mut pos = vec![usize::MAX; n];
        if pi.len() != n {
            return Err(Error::InvalidParameter("permutations differ in length".into()));
        }
        for (i, &x) in pi.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            pos[x] = i;
        }
        Ok(pos)
    };
    let (p1, p2) = (pos(pi1)?, pos(pi2)?);
    Poset::from_fn(n, |x, y| p1[x] < p1[y] && p2[x] < p2[y])
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two-dimensional poset from two random permutations of `0..n`.
pub fn random_two_dimensional(n: usize, seed: u64) -> Poset {
    let mut r = rng(seed);
    let mut pi1: Vec<usize> = (0..n).collect();
    let mut pi2 = pi1.clone();
    pi1.shuffle(&mut r);
    pi2.shuffle(&mut r);
    from_two_permutations(&pi1, &pi2).expect("valid permutations")
}

/// Random poset: a hidden random linear order, each forward pair related
/// with probability `prob`, then closed transitively.
pub fn random_poset(n: usize, prob: f64, seed: u64) -> Poset {
    let mut r = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let mut rel = vec![false; n * n];
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(prob) {
                rel[perm[i] * n + perm[j]] = true;
            }
        }
    }
    Poset::from_fn(n, |x, y| rel[x * n + y]).expect("forward relations are acyclic")
}

/// Random poset covered by at most `k` chains: elements are dealt to `k`
/// chains along a hidden linear order, and forward pairs across chains are
/// related with probability `prob`.
pub fn random_chain_cover(n: usize, k: usize, prob: f64, seed: u64) -> Result<Poset> {
    if k == 0 && n > 0 {
        return Err(Error::InvalidParameter("need at least one chain".into()));
    }
    let mut r = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let chain_of: Vec<usize> = (0..n).map(|_| r.gen_range(0..k.max(1))).collect();
    let mut rel = vec![false; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (perm[i], perm[j]);
            if chain_of[x] == chain_of[y] || r.gen_bool(prob) {
                rel[x * n + y] = true;
            }
        }
    }
    let p = Poset::from_fn(n, |x, y| rel[x * n + y])?;
    debug_assert!(p.width() <= k.max(1) || n == 0);
    Ok(p)
}

/// Random poset of height at most two: each element is a minimum or a
/// maximum with equal probability, and each minimum/maximum pair is related
/// with probability `edge_prob`.
pub fn random_height2(n: usize, edge_prob: f64, seed: u64) -> Poset {
    let mut r = rng(seed);
    let top: Vec<bool> = (0..n).map(|_| r.gen_bool(0.5)).collect();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            if !top[x] && top[y] && r.gen_bool(edge_prob) {
                rel[x * n + y] = true;
            }
        }
    }
    let p = Poset::from_fn(n, |x, y| rel[x * n + y]).expect("bipartite relation");
    debug_assert!(p.height() <= 2);
    p
}

/// Random 3-layer poset with layers of the given sizes. Bipartite relations
/// between consecutive layers are sampled with the given probabilities, all
/// bottom/top relations are added, and samples that are not graded are
/// rejected.
pub fn random_3layer(sizes: [usize; 3], edge_probs: (f64, f64), seed: u64) -> Result<Poset> {
    if sizes.contains(&0) {
        return Err(Error::ClassViolation("every layer of a 3-layer poset is nonempty".into()));
    }
    let [a, b, c] = sizes;
    let n = a + b + c;
    let mut r = rng(seed);
    for _ in 0..10_000 {
        let mut rel = vec![false; n * n];
        for x in 0..a {
            for y in a..a + b {
                rel[x * n + y] = r.gen_bool(edge_probs.0);
            }
            for y in a + b..n {
                rel[x * n + y] = true;
            }
        }
        for x in a..a + b {
            for y in a + b..n {
                rel[x * n + y] = r.gen_bool(edge_probs.1);
            }
        }
        let p = Poset::from_fn(n, |x, y| rel[x * n + y])?;
        if p.is_3layer() {
            return Ok(p);
        }
    }
    Err(Error::ClassViolation("no graded sample found; raise the edge probabilities".into()))
}

/// Interval order of open intervals: `u < v` iff `u` ends no later than `v`
/// starts.
pub fn interval_order<T: PartialOrd + Copy>(intervals: &[(T, T)]) -> Result<Poset> {
    if let Some(i) = intervals.iter().position(|(l, r)| l.partial_cmp(r) != Some(std::cmp::Ordering::Less)) {
        return Err(Error::ClassViolation(format!("interval {i} is empty")));
    }
    let n = intervals.len();
    Poset::from_fn(n, |u, v| intervals[u].1 <= intervals[v].0)
}

/// Unit interval order from left endpoints.
pub fn unit_interval_order<T: Num + PartialOrd + Copy>(lefts: &[T]) -> Result<Poset> {
    let intervals: Vec<(T, T)> = lefts.iter().map(|&l| (l, l + T::one())).collect();
    interval_order(&intervals)
}

/// Random interval order with integer endpoints in `0..=2n`.
pub fn random_interval_order(n: usize, seed: u64) -> Poset {
    let mut r = rng(seed);
    let span = 2 * n.max(1) as i64;
    let intervals: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let a = r.gen_range(0..span);
            let b = r.gen_range(a + 1..=span);
            (a, b)
        })
        .collect();
    interval_order(&intervals).expect("nonempty intervals")
}

/// Random unit interval order; left endpoints are multiples of a quarter in
/// `[0, n/2)`, so ties and overlaps both occur.
pub fn random_unit_interval_order(n: usize, seed: u64) -> Poset {
    let mut r = rng(seed);
    let lefts: Vec<f64> = (0..n).map(|_| r.gen_range(0..2 * n.max(1)) as f64 / 4.0).collect();
    unit_interval_order(&lefts).expect("unit intervals are nonempty")
}

/// A copy of `p` with one extra element having the same downset and upset as
/// `x`. The new element is last.
pub fn add_twin(p: &Poset, x: usize) -> Result<Poset> {
    let n = p.len();
    if x >= n {
        return Err(Error::IndexOutOfRange { index: x, n });
    }
    let orig = |i: usize| if i == n { x } else { i };
    Poset::from_fn(n + 1, |u, v| {
        let (a, b) = (orig(u), orig(v));
        a != b && p.lt(a, b)
    })
}

/// Replaces element `x` of `outer` by the poset `inner`, which becomes a
/// module. Returns the composed poset and the indices of the module.
pub fn substitute_module(outer: &Poset, x: usize, inner: &Poset) -> Result<(Poset, Vec<usize>)> {
    let n = outer.len();
    if x >= n {
        return Err(Error::IndexOutOfRange { index: x, n });
    }
    if inner.is_empty() {
        return Err(Error::InvalidParameter("module must be nonempty".into()));
    }
    // Outer elements keep their index except x, which is dropped; inner
    // elements follow.
    let outer_ids: Vec<usize> = (0..n).filter(|&y| y != x).collect();
    let m = inner.len();
    let total = outer_ids.len() + m;
    let source = |i: usize| -> (bool, usize) {
        if i < outer_ids.len() {
            (false, outer_ids[i])
        } else {
            (true, i - outer_ids.len())
        }
    };
    let p = Poset::from_fn(total, |u, v| match (source(u), source(v)) {
        ((true, a), (true, b)) => inner.lt(a, b),
        ((true, _), (false, b)) => outer.lt(x, b),
        ((false, a), (true, _)) => outer.lt(a, x),
        ((false, a), (false, b)) => outer.lt(a, b),
    })?;
    Ok((p, (outer_ids.len()..total).collect()))
}

/// Open intervals with integer endpoints; `intervals[v] = (l(v), r(v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRepresentation {
    pub intervals: Vec<(usize, usize)>,
}

impl IntervalRepresentation {
    /// Number of grid cells, i.e. of maximal antichains.
    pub fn span(&self) -> usize {
        self.intervals.iter().map(|&(_, r)| r).max().unwrap_or(0)
    }

    /// Every interior grid line has an interval starting and one ending there.
    pub fn is_canonical(&self) -> bool {
        let span = self.span();
        (1..span).all(|g| {
            self.intervals.iter().any(|&(l, _)| l == g) && self.intervals.iter().any(|&(_, r)| r == g)
        })
    }

    pub fn to_poset(&self) -> Poset {
        interval_order(&self.intervals).expect("canonical intervals are nonempty")
    }
}

/// Maximal antichains as bit masks, by Bron–Kerbosch on the incomparability
/// graph.
pub fn maximal_antichains(p: &Poset) -> Result<Vec<u128>> {
    let n = p.len();
    if n > 128 {
        return Err(Error::SizeExceeded { size: n, max: 128 });
    }
    let nbr: Vec<u128> = (0..n)
        .map(|x| (0..n).filter(|&y| p.incomparable(x, y) && x != y).fold(0u128, |m, y| m | 1 << y))
        .collect();
    let mut out = Vec::new();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    if n > 0 {
        bron_kerbosch(&nbr, 0, all, 0, &mut out);
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(nbr: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot_src = p | x;
    let pivot = pivot_src.trailing_zeros() as usize;
    let mut cand = p & !nbr[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(nbr, r | 1 << v, p & nbr[v], x & nbr[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Orders the maximal antichains by the size of the set of elements below
/// them and reads off `l(v)` (first antichain containing `v`) and `r(v)`
/// (one past the last). Fails unless every element occupies a consecutive
/// run and the intervals reproduce the order.
pub fn canonical_interval_representation(p: &Poset) -> Result<IntervalRepresentation> {
    let n = p.len();
    let mut antichains = maximal_antichains(p)?;
    let below_count = |a: u128| -> usize {
        (0..n)
            .filter(|&y| (0..n).any(|x| a >> x & 1 == 1 && p.lt(y, x)))
            .count()
    };
    antichains.sort_by_key(|&a| (below_count(a), a));
    let mut intervals = Vec::with_capacity(n);
    for v in 0..n {
        let hits: Vec<usize> = (0..antichains.len()).filter(|&i| antichains[i] >> v & 1 == 1).collect();
        let (first, last) = (hits[0], *hits.last().expect("every element is in a maximal antichain"));
        if last - first + 1 != hits.len() {
            return Err(Error::NotIntervalOrder);
        }
        intervals.push((first, last + 1));
    }
    let rep = IntervalRepresentation { intervals };
    let q = rep.to_poset();
    if (0..n).any(|u| (0..n).any(|v| p.lt(u, v) != q.lt(u, v))) {
        return Err(Error::NotIntervalOrder);
    }
    Ok(rep)
}

/// Whether `p` has an induced `2+2`: `a < b`, `c < d`, and no other
/// relation among the four.
pub fn contains_two_plus_two(p: &Poset) -> bool {
    let n = p.len();
    let rel: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| p.lt(a, b)).map(move |b| (a, b)))
        .collect();
    rel.iter().any(|&(a, b)| {
        rel.iter().any(|&(c, d)| {
            p.incomparable(a, c) && p.incomparable(a, d) && p.incomparable(b, c) && p.incomparable(b, d)
        })
    })
}

/// Whether `p` has an induced `3+1`: a three-element chain and an element
/// incomparable to all three.
pub fn contains_three_plus_one(p: &Poset) -> bool {
    let n = p.len();
    (0..n).any(|b| {
        (0..n).any(|a| {
            p.lt(a, b)
                && (0..n).any(|c| {
                    p.lt(b, c) && (0..n).any(|x| p.incomparable(x, a) && p.incomparable(x, b) && p.incomparable(x, c))
                })
        })
    })
}
