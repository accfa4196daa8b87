//! Exhaustive diameter computations and the reversal predicates on diametral
//! linear extensions.

use rayon::prelude::*;

use super::lattice::DownsetLattice;
use super::{enumerate, xor_weight, IncPairIndex, LinearExtension};
use crate::error::Result;
use crate::order::{CriticalPair, Poset, WeightedPoset};
use crate::weight::Weight;

/// The diameter value and the lexicographically first pair attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diameter<W> {
    pub value: W,
    pub witness: (LinearExtension, LinearExtension),
}

/// Packed orientation vectors of a list of extensions, one row per extension.
struct OrientationTable<W> {
    words: usize,
    data: Vec<u64>,
    pair_weights: Vec<W>,
    unit: bool,
}

impl<W: Weight> OrientationTable<W> {
    fn new(p: &Poset, weights: &[W], les: &[LinearExtension]) -> Self {
        let idx = IncPairIndex::new(p);
        let words = idx.len().div_ceil(64);
        let mut data = Vec::with_capacity(words * les.len());
        for le in les {
            data.extend_from_slice(idx.orientation(le).words());
        }
        OrientationTable {
            words,
            data,
            pair_weights: idx.pair_weights(weights),
            unit: weights.iter().all(|w| w.is_unit()),
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    fn dist(&self, i: usize, j: usize) -> W {
        let (a, b) = (self.row(i), self.row(j));
        if self.unit {
            let c: u32 = a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones()).sum();
            W::from_count(c as usize)
        } else {
            xor_weight(a, b, &self.pair_weights)
        }
    }
}

/// Maximum weighted distance over all pairs of linear extensions, computed
/// pairwise over packed orientation vectors.
pub fn brute_force_led<W: Weight>(wp: &WeightedPoset<W>, cap: u64) -> Result<Diameter<W>> {
    let p = wp.poset();
    let les = enumerate(p, cap)?;
    let table = OrientationTable::new(p, wp.weights(), &les);
    let m = les.len();
    let (value, i, j) = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut best = (W::zero(), i, i);
            for j in i + 1..m {
                let d = table.dist(i, j);
                if d > best.0 {
                    best = (d, i, j);
                }
            }
            best
        })
        .reduce(|| (W::zero(), usize::MAX, usize::MAX), pick_first_max);
    Ok(Diameter {
        value,
        witness: (les[i].clone(), les[j].clone()),
    })
}

fn pick_first_max<W: Weight>(a: (W, usize, usize), b: (W, usize, usize)) -> (W, usize, usize) {
    if a.0 > b.0 || (a.0 == b.0 && (a.1, a.2) <= (b.1, b.2)) {
        a
    } else {
        b
    }
}

/// Eccentricity of every extension in `les`: its largest distance to any
/// extension of the poset. Uses the downset lattice when it fits, otherwise
/// pairwise distances.
pub fn eccentricities<W: Weight>(wp: &WeightedPoset<W>, les: &[LinearExtension]) -> Vec<W> {
    let p = wp.poset();
    let w = wp.weights();
    if let Ok(lat) = DownsetLattice::new(p, 1 << 22) {
        return les.par_iter().map(|le| lat.eccentricity(w, &le.positions()).0).collect();
    }
    let table = OrientationTable::new(p, w, les);
    (0..les.len())
        .into_par_iter()
        .map(|i| (0..les.len()).map(|j| table.dist(i, j)).max().unwrap_or_else(W::zero))
        .collect()
}

fn unit_diametral(p: &Poset, cap: u64) -> Result<(u64, Vec<LinearExtension>, Vec<u64>)> {
    let les = enumerate(p, cap)?;
    let ecc = eccentricities(&WeightedPoset::<u64>::unit(p.clone()), &les);
    let led = ecc.iter().copied().max().unwrap_or(0);
    Ok((led, les, ecc))
}

/// Every extension belonging to some diametral pair, in enumeration order.
pub fn diametral_les(p: &Poset, cap: u64) -> Result<Vec<LinearExtension>> {
    let (led, les, ecc) = unit_diametral(p, cap)?;
    Ok(les.into_iter().zip(ecc).filter(|(_, e)| *e == led).map(|(l, _)| l).collect())
}

/// All diametral pairs `(L1, L2)` with `L1` before `L2` in enumeration order.
/// A poset with a single extension yields that extension paired with itself.
pub fn diametral_pairs(p: &Poset, cap: u64) -> Result<Vec<(LinearExtension, LinearExtension)>> {
    let (led, les, ecc) = unit_diametral(p, cap)?;
    if les.len() == 1 {
        return Ok(vec![(les[0].clone(), les[0].clone())]);
    }
    let diam: Vec<usize> = (0..les.len()).filter(|&i| ecc[i] == led).collect();
    let unit = vec![1u64; p.len()];
    let table = OrientationTable::new(p, &unit, &les);
    let mut out = Vec::new();
    for (a, &i) in diam.iter().enumerate() {
        for &j in &diam[a + 1..] {
            if table.dist(i, j) == led {
                out.push((les[i].clone(), les[j].clone()));
            }
        }
    }
    Ok(out)
}

fn reverses_some(crits: &[CriticalPair], pos: &[usize]) -> bool {
    crits.iter().any(|c| pos[c.v] < pos[c.u])
}

/// Whether `l` places `v` below `u` for some critical pair `(u, v)`.
pub fn is_reversing(p: &Poset, l: &LinearExtension) -> Result<bool> {
    l.validate(p)?;
    Ok(reverses_some(&p.critical_pairs(), &l.positions()))
}

/// Summary of the reversal behaviour of the diametral extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiametralReport {
    pub led: u64,
    pub extension_count: usize,
    pub diametral_count: usize,
    /// A diametral extension reversing no critical pair, if one exists.
    pub non_reversing: Option<LinearExtension>,
}

impl DiametralReport {
    pub fn is_diametrally_reversing(&self) -> bool {
        self.non_reversing.is_none()
    }
}

pub fn diametral_reversal_report(p: &Poset, cap: u64) -> Result<DiametralReport> {
    let (led, les, ecc) = unit_diametral(p, cap)?;
    let crits = p.critical_pairs();
    let diametral: Vec<&LinearExtension> = les.iter().zip(&ecc).filter(|(_, e)| **e == led).map(|(l, _)| l).collect();
    let non_reversing = diametral
        .iter()
        .find(|l| !reverses_some(&crits, &l.positions()))
        .map(|l| (*l).clone());
    Ok(DiametralReport {
        led,
        extension_count: les.len(),
        diametral_count: diametral.len(),
        non_reversing,
    })
}

/// Every diametral extension is reversing.
pub fn is_diametrally_reversing(p: &Poset, cap: u64) -> Result<bool> {
    Ok(diametral_reversal_report(p, cap)?.is_diametrally_reversing())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjecture1Report {
    /// Every diametral pair contains a reversing extension.
    pub holds: bool,
    /// The poset is a chain, which the conjecture excludes.
    pub is_chain: bool,
    /// A diametral pair with neither member reversing.
    pub counterexample: Option<(LinearExtension, LinearExtension)>,
}

pub fn conjecture1(p: &Poset, cap: u64) -> Result<Conjecture1Report> {
    let (led, les, ecc) = unit_diametral(p, cap)?;
    let crits = p.critical_pairs();
    let is_chain = les.len() == 1;
    if is_chain {
        return Ok(Conjecture1Report {
            holds: false,
            is_chain,
            counterexample: Some((les[0].clone(), les[0].clone())),
        });
    }
    let plain: Vec<usize> = (0..les.len())
        .filter(|&i| ecc[i] == led && !reverses_some(&crits, &les[i].positions()))
        .collect();
    let unit = vec![1u64; p.len()];
    let table = OrientationTable::new(p, &unit, &les);
    let mut counterexample = None;
    'outer: for (a, &i) in plain.iter().enumerate() {
        for &j in &plain[a + 1..] {
            if table.dist(i, j) == led {
                counterexample = Some((les[i].clone(), les[j].clone()));
                break 'outer;
            }
        }
    }
    Ok(Conjecture1Report {
        holds: counterexample.is_none(),
        is_chain,
        counterexample,
    })
}

pub fn conjecture1_holds(p: &Poset, cap: u64) -> Result<bool> {
    Ok(conjecture1(p, cap)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linext::DEFAULT_CAP;

    fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_cover_relations(n, &covers).unwrap()
    }

    fn n_poset() -> Poset {
        Poset::from_cover_relations(4, &[(0, 2), (1, 2), (1, 3)])
            .unwrap()
            .with_labels(["1", "2", "3", "4"])
            .unwrap()
    }

    #[test]
    fn antichain_values() {
        for n in 1..=5 {
            let p = Poset::from_cover_relations(n, &[]).unwrap();
            let d = brute_force_led(&WeightedPoset::<u64>::unit(p), DEFAULT_CAP).unwrap();
            assert_eq!(d.value, (n * (n - 1) / 2) as u64);
        }
    }

    #[test]
    fn chain_has_diameter_zero() {
        let p = chain(4);
        let d = brute_force_led(&WeightedPoset::<u64>::unit(p.clone()), DEFAULT_CAP).unwrap();
        assert_eq!(d.value, 0);
        assert_eq!(d.witness.0, d.witness.1);
        let pairs = diametral_pairs(&p, DEFAULT_CAP).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(!is_diametrally_reversing(&p, DEFAULT_CAP).unwrap());
        let c = conjecture1(&p, DEFAULT_CAP).unwrap();
        assert!(!c.holds && c.is_chain);
    }

    #[test]
    fn n_poset_witness() {
        let p = n_poset();
        let d = brute_force_led(&WeightedPoset::<u64>::unit(p.clone()), DEFAULT_CAP).unwrap();
        assert_eq!(d.value, 3);
        assert_eq!((d.witness.0.word(&p), d.witness.1.word(&p)), ("1234".into(), "2413".into()));
        let pairs = diametral_pairs(&p, DEFAULT_CAP).unwrap();
        assert!(pairs.iter().any(|(a, b)| a.word(&p) == "1234" && b.word(&p) == "2413"));
    }

    #[test]
    fn antichain_all_diametral() {
        let p = Poset::from_cover_relations(3, &[]).unwrap();
        assert_eq!(diametral_les(&p, DEFAULT_CAP).unwrap().len(), 6);
        assert_eq!(diametral_pairs(&p, DEFAULT_CAP).unwrap().len(), 3);
        assert!(is_diametrally_reversing(&p, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn reversing_in_chain_is_false() {
        let p = chain(3);
        let l = LinearExtension::new(&p, vec![0, 1, 2]).unwrap();
        assert!(!is_reversing(&p, &l).unwrap());
    }

    #[test]
    fn weighted_pairwise_matches_lattice_route() {
        let p = Poset::from_cover_relations(5, &[(0, 3), (1, 3), (2, 4)]).unwrap();
        let wp = WeightedPoset::<u64>::new(p.clone(), vec![2, 1, 3, 1, 2]).unwrap();
        let d = brute_force_led(&wp, DEFAULT_CAP).unwrap();
        let les = enumerate(&p, DEFAULT_CAP).unwrap();
        assert_eq!(eccentricities(&wp, &les).into_iter().max().unwrap(), d.value);
    }
}
