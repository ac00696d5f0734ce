use std::collections::BTreeMap;

use super::class::{enumerate_classes, CharClass};
use super::vector::{ResidueVector, WeightVector};
use crate::error::{Error, Result};

/// A permutation of `0..n`, given by its images: position `i` moves to `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Swaps positions `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::NotAPermutation(images));
        }
        images.swap(a, b);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    fn permute_slice(&self, values: &[u32]) -> Vec<u32> {
        let mut out = vec![0; values.len()];
        for (i, &v) in values.iter().enumerate() {
            out[self.images[i]] = v;
        }
        out
    }
}

/// Moves entry `i` of `v` to position `sigma(i)`.
pub fn apply_permutation(v: &ResidueVector, sigma: &Permutation) -> Result<ResidueVector> {
    if sigma.len() != v.len() {
        return Err(Error::PermutationSize { expected: v.len(), found: sigma.len() });
    }
    Ok(ResidueVector::from_raw(v.modulus(), sigma.permute_slice(v.entries())))
}

pub fn apply_unit_scaling(v: &ResidueVector, c: u32) -> Result<ResidueVector> {
    v.scale(c)
}

impl CharClass {
    /// Permutes the class. Only permutations that fix `W` entrywise act on
    /// classes.
    pub fn permuted(&self, sigma: &Permutation) -> Result<CharClass> {
        let w = self.weight();
        if sigma.len() != w.entries().len() {
            return Err(Error::PermutationSize { expected: w.entries().len(), found: sigma.len() });
        }
        if sigma.permute_slice(w.entries()) != w.entries() {
            return Err(Error::PermutationMovesWeight);
        }
        CharClass::new(w, &apply_permutation(self.representative(), sigma)?)
    }
}

/// Normal form of a class under `S_N` together with the coset action, for
/// the classical weight.
///
/// Picks the coset elements with the most zeros, sorts each ascending and
/// returns the smallest.
pub fn orbit_normal_form(c: &CharClass) -> Result<ResidueVector> {
    if !c.weight().is_classical() {
        return Err(Error::NonClassicalWeight);
    }
    let elements = c.coset_elements();
    let best = elements.iter().map(ResidueVector::zero_count).max().unwrap_or(0);
    Ok(elements.iter().filter(|u| u.zero_count() == best).map(ResidueVector::sorted).min().expect("coset is non-empty"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub normal_form: ResidueVector,
    pub classes: Vec<CharClass>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.classes.len()
    }
}

/// Partition of the classes for the classical weight into `S_N` orbits,
/// ordered by normal form.
pub fn sn_orbits(n: u32) -> Result<Vec<Orbit>> {
    let weight = WeightVector::classical(n)?;
    let mut groups: BTreeMap<ResidueVector, Vec<CharClass>> = BTreeMap::new();
    for c in enumerate_classes(&weight) {
        groups.entry(orbit_normal_form(&c)?).or_default().push(c);
    }
    Ok(groups.into_iter().map(|(normal_form, classes)| Orbit { normal_form, classes }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(e: &[u32]) -> ResidueVector {
        ResidueVector::new(e.len() as u32, e.to_vec()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let v = rv(&[0, 1, 2, 3, 4]);
        let t = Permutation::transposition(5, 0, 1).unwrap();
        assert_eq!(apply_permutation(&v, &t).unwrap(), rv(&[1, 0, 2, 3, 4]));
        assert_eq!(apply_permutation(&v, &Permutation::identity(5)).unwrap(), v);
        assert!(matches!(
            apply_permutation(&v, &Permutation::identity(4)),
            Err(Error::PermutationSize { expected: 5, found: 4 })
        ));
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn weight_must_be_fixed() {
        let w = WeightVector::new(vec![3, 3, 0, 0, 0, 0]).unwrap();
        let c = CharClass::new(&w, &rv(&[1, 0, 0, 0, 0, 5])).unwrap();
        assert!(c.permuted(&Permutation::transposition(6, 0, 1).unwrap()).is_ok());
        assert!(c.permuted(&Permutation::transposition(6, 3, 5).unwrap()).is_ok());
        assert_eq!(c.permuted(&Permutation::transposition(6, 1, 2).unwrap()), Err(Error::PermutationMovesWeight));
    }

    #[test]
    fn normal_forms() {
        let nf = |e: &[u32]| orbit_normal_form(&CharClass::classical(e).unwrap()).unwrap();
        assert_eq!(nf(&[1, 1, 2, 2, 4]), rv(&[0, 0, 1, 1, 3]));
        assert_eq!(nf(&[0, 0, 0, 0, 0]), rv(&[0, 0, 0, 0, 0]));
        assert_eq!(nf(&[4, 3, 2, 1, 0]), rv(&[0, 1, 2, 3, 4]));
        let w = WeightVector::new(vec![2, 1, 1, 1, 0]).unwrap();
        let c = CharClass::new(&w, &rv(&[0; 5])).unwrap();
        assert_eq!(orbit_normal_form(&c), Err(Error::NonClassicalWeight));
    }

    #[test]
    fn three_orbits_for_n3() {
        let orbits = sn_orbits(3).unwrap();
        let forms: Vec<_> = orbits.iter().map(|o| o.normal_form.clone()).collect();
        assert_eq!(forms, vec![rv(&[0, 0, 0]), rv(&[0, 1, 2])]);
        assert_eq!(orbits.iter().map(Orbit::size).sum::<usize>(), 3);
    }
}
