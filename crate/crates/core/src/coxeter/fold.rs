//! Quasisplit folding: the fixed points of a diagram automorphism.

use std::sync::Arc;

use super::{CoxeterMatrix, CoxeterSystem, Element, EngineHint, Gen};
use crate::error::{Error, Result};

/// A folded system together with its embedding into the split group.
pub struct Folding {
    pub folded: Arc<CoxeterSystem>,
    pub big: Arc<CoxeterSystem>,
    /// Orbits of the automorphism, ordered by their least generator.
    pub orbits: Vec<Vec<Gen>>,
    /// `w₀` of each orbit's parabolic subgroup, the image of the folded generator.
    pub taus: Vec<Element>,
}

impl Folding {
    /// Image of a folded element in the big group.
    pub fn embed(&self, x: &Element) -> Element {
        x.word().iter().fold(Element::identity(), |acc, &s| self.big.mul(&acc, &self.taus[s as usize]))
    }
}

/// Folds `big` by the generator permutation `u` (`u[i]` is the image of generator `i`).
pub fn fold(big: Arc<CoxeterSystem>, u: &[Gen]) -> Result<Folding> {
    let n = big.rank();
    if u.len() != n || (0..n).any(|i| !u.contains(&(i as Gen))) {
        return Err(Error::InvalidMatrix(format!("{u:?} is not a permutation of {n} generators")));
    }
    for i in 0..n {
        for j in 0..n {
            if big.matrix().get(i, j) != big.matrix().get(u[i] as usize, u[j] as usize) {
                return Err(Error::InvalidMatrix(format!("{u:?} does not preserve the Coxeter matrix")));
            }
        }
    }
    let mut orbits: Vec<Vec<Gen>> = Vec::new();
    let mut seen = vec![false; n];
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut orb = vec![i as Gen];
        seen[i] = true;
        let mut j = u[i] as usize;
        while j != i {
            seen[j] = true;
            orb.push(j as Gen);
            j = u[j] as usize;
        }
        orb.sort();
        orbits.push(orb);
    }
    let mut taus = Vec::new();
    for o in &orbits {
        taus.push(big.longest_element(o).map_err(|_| Error::OrbitNotFinite(o.iter().map(|&g| g as usize + 1).collect()))?);
    }
    let k = orbits.len();
    let mut entries = vec![Some(1); k * k];
    for a in 0..k {
        for b in a + 1..k {
            let union: Vec<Gen> = orbits[a].iter().chain(&orbits[b]).copied().collect();
            let m = if big.parabolic_is_finite(&union) {
                let prod = big.mul(&taus[a], &taus[b]);
                // a finite parabolic bounds the order by its size
                let bound = big.parabolic_elements(&union, usize::MAX).len();
                Some(big.order(&prod, bound).expect("finite group element of unbounded order") as u32)
            } else {
                None
            };
            entries[a * k + b] = m;
            entries[b * k + a] = m;
        }
    }
    let weights = taus.iter().map(|t| big.weight(t)).collect();
    let folded = CoxeterSystem::new(CoxeterMatrix::new(k, entries)?, weights, EngineHint::Auto)?.with_name(format!("{} folded", big.name()));
    Ok(Folding { folded: Arc::new(folded), big, orbits, taus })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_folds_to_b2() {
        let a3 = Arc::new(CoxeterSystem::preset("a3").unwrap());
        let f = fold(a3, &[2, 1, 0]).unwrap();
        assert_eq!(f.folded.matrix().get(0, 1), Some(4));
        assert_eq!(f.folded.weights(), &[2, 1]);
        let w0 = f.folded.longest_element(&[0, 1]).unwrap();
        assert_eq!(f.embed(&w0).length(), 6);
    }

    #[test]
    fn trivial_fold_is_identity() {
        let a3 = Arc::new(CoxeterSystem::preset("a3").unwrap());
        let f = fold(a3.clone(), &[0, 1, 2]).unwrap();
        assert_eq!(f.folded.matrix(), a3.matrix());
        assert_eq!(f.folded.weights(), &[1, 1, 1]);
    }
}
