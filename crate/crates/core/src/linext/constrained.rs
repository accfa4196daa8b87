//! Largest distances between extensions that must respect extra relations.

use rayon::prelude::*;

use super::lattice::DownsetLattice;
use super::{enumerate, LinearExtension};
use crate::error::{Error, Result};
use crate::order::Poset;

fn impose(p: &Poset, forced: &[(usize, usize)]) -> Result<Poset> {
    p.with_relations(forced).map_err(|e| match e {
        Error::CycleDetected(_) => Error::InconsistentConstraints,
        other => other,
    })
}

/// Largest distance between `L1` and `L2`, where `L1` is a linear extension
/// of `p` that also satisfies every `(a, b)` in `forced` (`a` below `b`), and
/// `L2` is any linear extension of `p`.
pub fn max_reversals_constrained(p: &Poset, forced: &[(usize, usize)], cap: u64) -> Result<u64> {
    max_reversals_between(p, forced, &[], cap)
}

/// Largest distance between `L1` respecting `forced1` and `L2` respecting
/// `forced2`, both linear extensions of `p`.
pub fn max_reversals_between(
    p: &Poset,
    forced1: &[(usize, usize)],
    forced2: &[(usize, usize)],
    cap: u64,
) -> Result<u64> {
    let p1 = impose(p, forced1)?;
    let p2 = impose(p, forced2)?;
    let firsts = enumerate(&p1, cap)?;
    let unit = vec![1u64; p.len()];
    match DownsetLattice::new(&p2, cap) {
        Ok(lat) => Ok(firsts
            .par_iter()
            .map(|l| lat.eccentricity(&unit, &l.positions()).0)
            .max()
            .unwrap_or(0)),
        Err(Error::SizeExceeded { .. }) => {
            let seconds = enumerate(&p2, cap)?;
            Ok(firsts
                .par_iter()
                .map(|a| seconds.iter().map(|b| reversed(a, b)).max().unwrap_or(0))
                .max()
                .unwrap_or(0))
        }
        Err(e) => Err(e),
    }
}

fn reversed(a: &LinearExtension, b: &LinearExtension) -> u64 {
    let (pa, pb) = (a.positions(), b.positions());
    let n = pa.len();
    let mut count = 0;
    for x in 0..n {
        for y in x + 1..n {
            if (pa[x] < pa[y]) != (pb[x] < pb[y]) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linext::DEFAULT_CAP;

    #[test]
    fn no_constraints_gives_the_diameter() {
        let p = Poset::from_cover_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        assert_eq!(max_reversals_constrained(&p, &[], DEFAULT_CAP).unwrap(), 3);
    }

    #[test]
    fn forcing_costs_reversals() {
        let p = Poset::from_cover_relations(3, &[]).unwrap();
        assert_eq!(max_reversals_between(&p, &[(0, 1)], &[(0, 1)], DEFAULT_CAP).unwrap(), 2);
    }

    #[test]
    fn inconsistent_constraints() {
        let p = Poset::from_cover_relations(2, &[(0, 1)]).unwrap();
        assert_eq!(
            max_reversals_constrained(&p, &[(1, 0)], DEFAULT_CAP),
            Err(Error::InconsistentConstraints)
        );
    }
}
